#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bcoend/partitions.hpp"

namespace bcoend {

struct SuiteLine {
    std::string id;         // "1".."10"; informational lines carry a suffix
    std::string name;
    bool ok = false;
    bool informational = false;  // printed, never counted
    std::string detail;
    double seconds = 0;
};

using LineSink = std::function<void(const SuiteLine&)>;

// Small exact checks on each module.
std::vector<SuiteLine> quick_checks(const LineSink& sink = {});
// The acceptance criteria; n windows are clipped at n_max.
std::vector<SuiteLine> acceptance_suite(int n_max = 6, const LineSink& sink = {});

bool all_pass(const std::vector<SuiteLine>& lines);
std::string suite_json(const std::vector<SuiteLine>& lines);
std::string suite_line_text(const SuiteLine& l);

}  // namespace bcoend
