#include "x0/levels.hpp"

#include <algorithm>
#include <array>

namespace x0 {

const std::vector<int>& supported_levels() {
    static const std::vector<int> levels{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
    return levels;
}

bool is_supported(int N) {
    const auto& L = supported_levels();
    return std::find(L.begin(), L.end(), N) != L.end();
}

void require_supported(int N) {
    if (!is_supported(N)) throw DomainError("unsupported-level: " + std::to_string(N));
}

std::vector<std::pair<int, int>> factor_small(long long n) {
    if (n < 1) throw std::invalid_argument("factor_small: n must be positive");
    std::vector<std::pair<int, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(static_cast<int>(p), e);
    }
    if (n > 1) out.emplace_back(static_cast<int>(n), 1);
    return out;
}

namespace {

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int legendre(const Int& a, long long p) {
    if (p <= 2 || !is_prime_ll(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Jacobi-style reduction with quadratic reciprocity.
    long long x = r.convert_to<long long>(), n = p;
    int s = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            long long m8 = n % 8;
            if (m8 == 3 || m8 == 5) s = -s;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) s = -s;
        x %= n;
    }
    return n == 1 ? s : 0;
}

long long kappa(int N) {
    if (N < 1) throw std::invalid_argument("kappa: N must be positive");
    long long k = N;
    for (auto [p, e] : factor_small(N)) k = k / p * (p + 1);
    return k;
}

namespace {

// 1 + (D/p) with the Kronecker convention at p = 2, for D in {-1, -3}.
int local_factor(int D, int p) {
    if (p == 2) {
        if (D == -1) return 1;       // (-1/2) = 0
        return 0;                    // (-3/2) = -1
    }
    return 1 + legendre(Int(D), p);
}

int epsilon(int N, int D, int square) {
    if (N < 1) throw std::invalid_argument("epsilon: N must be positive");
    if (N % square == 0) return 0;
    int prod = 1;
    for (auto [p, e] : factor_small(N)) prod *= local_factor(D, p);
    return prod;
}

}  // namespace

int epsilon2(int N) { return epsilon(N, -1, 4); }
int epsilon3(int N) { return epsilon(N, -3, 9); }

Rat deg_canonical(int N) {
    return Rat(-1) + Rat(epsilon3(N), 3) + Rat(epsilon2(N), 4);
}

StructureDescriptor structure_descriptor(int N) {
    require_supported(N);
    struct Row {
        int N;
        const char* rig;
        bool trivial;
    };
    static const std::array<Row, 15> rows{{
        {1, "root[3,2](E0,E1728)", false},
        {2, "root[2](E1728)", false},
        {3, "root[3](E0)", true},
        {4, "P1", false},
        {5, "root[2](K4)", false},
        {6, "P1", true},
        {7, "root[3](K6)", true},
        {8, "P1", true},
        {9, "P1", true},
        {10, "root[2](K4)", false},
        {12, "P1", true},
        {13, "root[3,2](K6,K4)", false},
        {16, "P1", true},
        {18, "P1", true},
        {25, "root[2](K4)", false},
    }};
    for (const auto& r : rows) {
        if (r.N != N) continue;
        std::string rig = r.rig;
        bool mu3 = rig.find("E0") != std::string::npos || rig.find("K6") != std::string::npos;
        bool mu2 = rig.find("E1728") != std::string::npos || rig.find("K4") != std::string::npos;
        return {N, rig, r.trivial, mu3, mu2};
    }
    throw DomainError("unsupported-level: " + std::to_string(N));
}

}  // namespace x0
