// brauer-coend: dimensions, comparison maps, multiplicity tables and checks.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bcoend/characters.hpp"
#include "bcoend/coend.hpp"
#include "bcoend/graphs.hpp"
#include "bcoend/kan.hpp"
#include "bcoend/presentation.hpp"
#include "bcoend/selftest.hpp"

using namespace bcoend;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kRefused = 3 };

struct Config {
    std::string format = "json";
    std::string out;
    bool force = false;
    int n = -1;
    std::string n_range;
    int degree = -1;
    int p = -1, q = -1;
    bool strict = false;
    bool with_y = false;
    std::string convention = "mu-dual";
    std::string functor;
    std::string level = "quick";
    int n_max = 6;
    std::string graph;
};

std::vector<int> n_values(const Config& c) {
    if (!c.n_range.empty()) {
        auto colon = c.n_range.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("--n-range expects a:b");
        int a = std::stoi(c.n_range.substr(0, colon)), b = std::stoi(c.n_range.substr(colon + 1));
        if (a > b) throw std::invalid_argument("--n-range is empty");
        std::vector<int> v;
        for (int n = a; n <= b; ++n) v.push_back(n);
        return v;
    }
    if (c.n < 0) throw std::invalid_argument("--n or --n-range is required");
    return {c.n};
}

void need_pq(const Config& c) {
    if (c.p < 0 || c.q < 0) throw std::invalid_argument("p and q are required and must be non-negative");
}

std::string pretty(const std::string& raw) { return json::parse(raw).dump(2); }

std::string csv_bool(bool b) { return b ? "true" : "false"; }

struct Output {
    std::string text;
    int code = kOk;
};

Output cmd_dims(const Config& c) {
    need_pq(c);
    auto S = FiniteSetPair::standard(c.p, c.q);
    std::string f = c.functor;
    std::size_t d;
    if (f == "P" || f == "P'") {
        bool strict = f == "P'" || c.strict;
        mpz_class count = count_labeled_partitions(c.p, c.q, strict);
        check_size(count.fits_ulong_p() ? count.get_ui() : ~0ul, kPartitionLimit, c.force, "labeled partitions");
        d = enumerate_labeled_partitions(S, strict).size();
    } else if (f == "graphs")
        d = graph_space_dim(S, c.force);
    else
        throw std::invalid_argument("functor must be P, P' or graphs");
    if (c.format == "text") return {std::to_string(d) + "\n"};
    if (c.format == "csv") return {"functor,p,q,dim\n" + f + "," + std::to_string(c.p) + "," + std::to_string(c.q) + "," + std::to_string(d) + "\n"};
    return {json{{"functor", f}, {"p", c.p}, {"q", c.q}, {"dim", d}}.dump(2) + "\n"};
}

Output cmd_compare(const Config& c) {
    if (c.degree < 0) throw std::invalid_argument("--degree is required");
    Output o;
    json arr = json::array();
    std::ostringstream csv, text;
    csv << "n,degree,dim_pres,dim_R,rank,surjective,injective,relations_sound,stable\n";
    for (int n : n_values(c)) {
        if (n < 2) throw std::invalid_argument("n must be at least 2");
        auto r = comparison_map(n, c.degree, c.force);
        if (!r.surjective || !r.relations_sound) o.code = kCheckFailed;
        arr.push_back(json::parse(r.to_json()));
        csv << n << "," << c.degree << "," << r.dim_pres << "," << r.dim_R << "," << r.rank << "," << csv_bool(r.surjective)
            << "," << csv_bool(r.injective) << "," << csv_bool(r.relations_sound) << "," << csv_bool(r.stable) << "\n";
        text << "n=" << n << " degree=" << c.degree << ": dim R_pres=" << r.dim_pres << " dim R=" << r.dim_R
             << (r.injective ? " bijective" : r.surjective ? " surjective" : " NOT surjective") << "\n";
    }
    o.text = c.format == "csv" ? csv.str() : c.format == "text" ? text.str() : arr.dump(2) + "\n";
    return o;
}

Output cmd_decompose(const Config& c) {
    if (c.degree < 0) throw std::invalid_argument("--degree is required");
    auto tables = stable_table(c.degree, c.with_y, parse_convention(c.convention), c.force);
    json arr = json::array();
    std::ostringstream csv, text;
    csv << "y,lambda,mu,multiplicity\n";
    for (auto& t : tables) {
        arr.push_back(json::parse(t.to_json()));
        for (auto& [b, m] : t.entries) {
            csv << t.y_monomial << ",\"" << partition_to_string(b.lambda) << "\",\"" << partition_to_string(b.mu) << "\"," << m << "\n";
            text << t.y_monomial << " · V" << b.to_string() << " : " << m << "\n";
        }
    }
    return {c.format == "csv" ? csv.str() : c.format == "text" ? text.str() : arr.dump(2) + "\n"};
}

Output cmd_selftest(const Config& c) {
    std::vector<SuiteLine> lines;
    LineSink sink;
    if (c.format == "text" && c.out.empty()) sink = [](const SuiteLine& l) { std::cout << suite_line_text(l) << std::endl; };
    if (c.level == "quick")
        lines = quick_checks(sink);
    else if (c.level == "full") {
        lines = quick_checks(sink);
        auto more = acceptance_suite(c.n_max, sink);
        lines.insert(lines.end(), more.begin(), more.end());
    } else {
        throw std::invalid_argument("level must be quick or full");
    }
    Output o;
    o.code = all_pass(lines) ? kOk : kCheckFailed;
    if (c.format == "json") {
        o.text = pretty(suite_json(lines)) + "\n";
    } else if (c.format == "csv") {
        std::ostringstream os;
        os << "id,ok,informational,name\n";
        for (auto& l : lines) os << l.id << "," << csv_bool(l.ok) << "," << csv_bool(l.informational) << ",\"" << l.name << "\"\n";
        o.text = os.str();
    } else {
        std::ostringstream os;
        if (!sink)
            for (auto& l : lines) os << suite_line_text(l) << "\n";
        os << (o.code == kOk ? "all checks pass" : "some checks FAIL") << "\n";
        o.text = os.str();
    }
    return o;
}

Output cmd_coend(const Config& c) {
    if (c.degree < 0) throw std::invalid_argument("--degree is required");
    json arr = json::array();
    std::ostringstream csv, text;
    csv << "n,degree,ambient_dim,relation_rank,dim\n";
    for (int n : n_values(c)) {
        auto R = compute_R(n, c.degree, c.force);
        arr.push_back(json::parse(R.to_json()));
        csv << n << "," << c.degree << "," << R.ambient.size() << "," << R.relation_rank << "," << R.dim << "\n";
        text << "n=" << n << " degree=" << c.degree << ": dim R=" << R.dim << "\n";
    }
    return {c.format == "csv" ? csv.str() : c.format == "text" ? text.str() : arr.dump(2) + "\n"};
}

Output cmd_albanese(const Config& c) {
    if (c.degree < 1) throw std::invalid_argument("--degree must be at least 1");
    json arr = json::array();
    std::ostringstream csv, text;
    csv << "i,n,dim,content_dim\n";
    for (int n : n_values(c)) {
        auto W = compute_W(c.degree, n, c.force);
        arr.push_back(json::parse(W.to_json()));
        csv << c.degree << "," << n << "," << W.dim << "," << W.content_dim << "\n";
        text << "W_" << c.degree << "(" << n << ") = " << W.dim << "\n";
    }
    return {c.format == "csv" ? csv.str() : c.format == "text" ? text.str() : arr.dump(2) + "\n"};
}

Output cmd_kan(const Config& c) {
    need_pq(c);
    auto S = FiniteSetPair::standard(c.p, c.q);
    Output o;
    if (c.functor == "P'") {
        StrictPartitionFunctor P;
        auto K = kan_extend(P, S);
        std::size_t dp = enumerate_labeled_partitions(S, false).size();
        if (K.dim() != dp) o.code = kCheckFailed;
        json j = json::parse(K.to_json());
        j["dim_P"] = dp;
        o.text = c.format == "text" ? "dim " + std::to_string(K.dim()) + ", dim P " + std::to_string(dp) + "\n" : j.dump(2) + "\n";
    } else if (c.functor == "K") {
        json arr = json::array();
        std::ostringstream text;
        for (int n : n_values(c)) {
            auto r = psi_report(S, n, c.force);
            if (!r.surjective() || (n >= int(S.size()) && !r.injective())) o.code = kCheckFailed;
            arr.push_back(json::parse(r.to_json()));
            text << "n=" << n << ": source " << r.source << ", K " << r.target << ", rank " << r.rank << "\n";
        }
        o.text = c.format == "text" ? text.str() : arr.dump(2) + "\n";
    } else {
        throw std::invalid_argument("functor must be P' or K");
    }
    return o;
}

Output cmd_normalize(const Config& c) {
    need_pq(c);
    auto S = FiniteSetPair::standard(c.p, c.q);
    Graph21 g = Graph21::parse(S, c.graph);
    NormalForm nf = ih_rewrite(g);
    auto [part, det] = graph_to_partition(nf);
    if (c.format == "text") return {std::to_string(nf.sign) + " · " + nf.graph.to_string() + "  ↦  " + part.to_string() + " " + det.to_string() + "\n"};
    json j = json::parse(nf.to_json());
    j["partition"] = part.to_string();
    j["det"] = det.to_string();
    return {j.dump(2) + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with walled Brauer diagrams, labeled partitions and coends"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        s->add_option("--out", c.out, "write the report to this file");
        s->add_flag("--force-size", c.force, "ignore size guardrails");
    };
    auto nflags = [&](CLI::App* s) {
        s->add_option("--n", c.n, "rank n");
        s->add_option("--n-range", c.n_range, "a:b, inclusive");
    };

    auto* dims = app.add_subcommand("dims", "dimension of P, P' or the graph space over ([p],[q])");
    dims->add_option("functor", c.functor, "P, P' or graphs")->required();
    dims->add_option("p,--p", c.p);
    dims->add_option("q,--q", c.q);
    dims->add_flag("--strict", c.strict, "count strict partitions only");
    common(dims);

    auto* compare = app.add_subcommand("compare", "the map R_pres -> R in one degree");
    nflags(compare);
    compare->add_option("--degree", c.degree);
    common(compare);

    auto* decompose = app.add_subcommand("decompose", "irreducible multiplicities in one degree");
    decompose->add_option("--degree", c.degree);
    decompose->add_flag("--with-y", c.with_y, "include the y-classes");
    decompose->add_option("--convention", c.convention, "mu-dual or lambda-dual")
        ->check(CLI::IsMember({"mu-dual", "lambda-dual"}));
    common(decompose);

    auto* selftest = app.add_subcommand("selftest", "run the built-in checks");
    selftest->add_option("level", c.level, "quick or full");
    selftest->add_option("--n-max", c.n_max, "largest rank used by the full checks");
    common(selftest);

    auto* coend = app.add_subcommand("coend", "the coend ring R in one degree");
    nflags(coend);
    coend->add_option("--degree", c.degree);
    common(coend);

    auto* albanese = app.add_subcommand("albanese", "W_i(n), with i given by --degree");
    nflags(albanese);
    albanese->add_option("--degree", c.degree);
    common(albanese);

    auto* kan = app.add_subcommand("kan", "Kan extension of P' or K° over ([p],[q])");
    kan->add_option("functor", c.functor, "P' or K")->required();
    kan->add_option("p,--p", c.p);
    kan->add_option("q,--q", c.q);
    nflags(kan);
    common(kan);

    auto* normalize = app.add_subcommand("normalize", "normal form of a (2,1)-graph over ([p],[q])");
    normalize->add_option("graph", c.graph, "V=..; out=[..]; legs=[..]")->required();
    normalize->add_option("--p", c.p)->required();
    normalize->add_option("--q", c.q)->required();
    common(normalize);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : kBadInput;
    }

    Output o;
    try {
        if (*dims) o = cmd_dims(c);
        else if (*compare) o = cmd_compare(c);
        else if (*decompose) o = cmd_decompose(c);
        else if (*selftest) o = cmd_selftest(c);
        else if (*coend) o = cmd_coend(c);
        else if (*albanese) o = cmd_albanese(c);
        else if (*kan) o = cmd_kan(c);
        else if (*normalize) o = cmd_normalize(c);
    } catch (const GuardrailError& e) {
        std::cerr << "refusing to compute: " << e.what() << "\n";
        return kRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    if (c.out.empty()) {
        std::cout << o.text;
    } else {
        std::ofstream f(c.out);
        if (!f) {
            std::cerr << "error: cannot write " << c.out << "\n";
            return kBadInput;
        }
        f << o.text;
    }
    return o.code;
}
