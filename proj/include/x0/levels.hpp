#pragma once

#include <string>
#include <utility>
#include <vector>

#include "x0/types.hpp"

namespace x0 {

// The fifteen levels for which X0(N) has genus zero.
const std::vector<int>& supported_levels();
bool is_supported(int N);
// Throws DomainError("unsupported-level ...") for N outside the list.
void require_supported(int N);

std::vector<std::pair<int, int>> factor_small(long long n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, long long p);

long long kappa(int N);
int epsilon2(int N);
int epsilon3(int N);
Rat deg_canonical(int N);

struct StructureDescriptor {
    int N;
    std::string rigidification;
    bool gerbe_trivial;
    bool mu3_stacky;  // cube roots along E0 / K6
    bool mu2_stacky;  // square roots along E1728 / K4
};

StructureDescriptor structure_descriptor(int N);

}  // namespace x0
