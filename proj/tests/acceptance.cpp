// One line per acceptance criterion; exit status 0 only when every
// non-informational line passes.
#include <cstdlib>
#include <iostream>

#include "bcoend/selftest.hpp"

int main(int argc, char** argv) {
    int n_max = argc > 1 ? std::atoi(argv[1]) : 6;
    auto lines = bcoend::acceptance_suite(n_max, [](const bcoend::SuiteLine& l) {
        std::cout << bcoend::suite_line_text(l) << "  [" << l.seconds << " s]" << std::endl;
    });
    std::size_t failed = 0;
    for (auto& l : lines)
        if (!l.ok && !l.informational) ++failed;
    std::cout << (failed ? std::to_string(failed) + " criteria FAIL" : "all criteria PASS") << std::endl;
    return failed ? 1 : 0;
}
