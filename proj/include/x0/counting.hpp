#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x0/moduli.hpp"

namespace x0 {

using u64 = std::uint64_t;

// Largest supported height bound.
inline constexpr u64 kMaxBound = 1000000000000000000ULL;

// #{(e, f) minimal, 4e^3 + 27f^2 != 0, max(|e|^3, f^2) <= B}; with
// exclude_special the pairs with e = 0 or f = 0 are dropped.
u64 count_level_one(u64 B, bool exclude_special, int threads = 1);

struct CountQuery {
    int N = 2;
    u64 B = 1;
    bool exclude_special = true;
    std::optional<long long> t_cap;  // auto when empty
    int threads = 1;
};

struct CountResult {
    u64 count = 0;
    long long t_cap = 0;        // Hauptmodul height actually enumerated
    bool stabilized = false;    // the shell (t_cap, 2 t_cap] adds nothing
    long long max_t_height = 0; // largest t-height that contributed
};

// Twist family over one non-special, non-cuspidal t = p/q.
struct FamilyPoint {
    long long p = 0, q = 1;
    u64 H0 = 0;  // height of the twist-minimal member
};

// Precomputed factor structure of J_N used by the enumeration.
class FamilyEngine {
public:
    explicit FamilyEngine(const JMap& J);
    int level() const { return N_; }
    const std::vector<Int>& bad_primes() const { return bad_; }

    // Twist-minimal height at t = p/q (gcd = 1, q >= 0); nullopt at cusps and
    // over j in {0, 1728}.
    std::optional<Int> base_height(const Int& p, const Int& q) const;

    // All t with t-height in (t_lo, t_hi] and base height <= B, sorted.
    std::vector<FamilyPoint> enumerate(u64 B, long long t_lo, long long t_hi, int threads) const;

    struct Impl;

private:
    int N_;
    std::vector<Int> bad_;
    std::shared_ptr<const Impl> impl_;
};

// Number of squarefree d with 1 <= d <= x.
u64 squarefree_count(u64 x);
// Largest k >= 0 with k^6 * H0 <= B.
u64 twist_bound(u64 B, u64 H0);
u64 count_from_family(const std::vector<FamilyPoint>& pts, u64 B);

long long auto_t_cap(u64 B);
CountResult count_level(const CountQuery& q, const JMap& J);
CountResult count_level(const CountQuery& q);

// Enumerated families at bound Bmax with auto stabilisation; counts for every
// B <= Bmax follow from count_from_family.
struct FamilyRun {
    std::vector<FamilyPoint> points;
    long long t_cap = 0;
    bool stabilized = false;
};
FamilyRun family_run(const JMap& J, u64 Bmax, int threads, std::optional<long long> t_cap = {});

// Sorted heights H0 d^6 (one entry per signed squarefree d) up to Bmax.
std::vector<u64> family_heights(const FamilyRun& run, u64 Bmax);

struct CountReport {
    int N = 1;
    std::vector<std::pair<u64, u64>> counts;  // (B, count)
    std::vector<double> ratios;               // count / B^a
    Rat a;
    int b = 1;
    double exponent = 0;      // plain slope
    double exponent_log = 0;  // slope after dividing by log(B)^(b-1)
    bool stabilized = true;
    long long t_cap = 0;
};
CountReport count_grid(int N, const std::vector<u64>& Bs, bool exclude_special, int threads,
                       const std::string& jmap_path = default_jmap_path());

// Least-squares slope of log(count / log(B)^(b-1)) against log B; b = 1 is the
// plain log-log slope.
double fit_exponent(const std::vector<std::pair<u64, u64>>& counts, int b = 1);

enum class LogTrend { Nondecreasing, Flat, Neither };
std::string to_string(LogTrend t);
// Flat: the normalised ratio stays within flat_tol (relative) of its mean.
// Nondecreasing: no step drops by more than step_tol and the ratio grows.
LogTrend log_factor_diagnostic(const std::vector<std::pair<u64, u64>>& counts, const Rat& a,
                               double flat_tol = 0.05, double step_tol = 0.01);

}  // namespace x0
