#pragma once

#include <utility>
#include <vector>

#include "x0/types.hpp"

namespace x0 {

// Prime factorisation of |n| (n != 0), primes ascending.
std::vector<std::pair<Int, int>> factorize(const Int& n);

struct MinimalPair {
    Int e, f;
    bool operator==(const MinimalPair& o) const { return e == o.e && f == o.f; }
};

// Unique minimal integral representative of (x1, x2) in P(4,6)(Q).
MinimalPair reduce_minimal(const Rat& x1, const Rat& x2);
Int naive_height(const MinimalPair& p);
Int naive_height(const Rat& x1, const Rat& x2);
// Height of y^2 = x^3 + A x + B; throws DomainError when singular.
Int curve_height(const Rat& A, const Rat& B);

}  // namespace x0
