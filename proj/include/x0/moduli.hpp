#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x0/types.hpp"

namespace x0 {

struct JMap {
    int N = 1;
    std::vector<Int> num, den;  // constant term first
};

// Path of the shipped data file; X0_JMAPS overrides it.
std::string default_jmap_path();
std::map<int, JMap> load_jmaps(const std::string& path);
JMap jmap_for(int N, const std::string& path = default_jmap_path());

struct FiberReport {
    std::string target;           // "0", "1728" or "inf"
    std::vector<int> partition;   // descending, includes the point t = infinity
};

struct JMapValidation {
    bool ok = false;
    int degree = 0;
    std::vector<FiberReport> fibers;    // targets 0, 1728, inf
    std::vector<std::string> failures;  // each names the failing check
};

JMapValidation validate_jmap(const JMap& J);

// J(p/q) with gcd(p, q) = 1; t = infinity is (1, 0). nullopt at cusps.
std::optional<Rat> evaluate_fiber(const JMap& J, const Int& p, const Int& q);

Rat j_invariant(const Rat& A, const Rat& B);
std::pair<Rat, Rat> base_curve_from_j(const Rat& j);

}  // namespace x0
