#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "x0/levels.hpp"

using namespace x0;

namespace {

long long powmod(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e) {
        if (e & 1) r = static_cast<long long>((__int128)r * b % m);
        b = static_cast<long long>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("supported levels") {
    std::vector<int> want{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
    CHECK(supported_levels() == want);
    CHECK_FALSE(is_supported(11));
    CHECK_THROWS_AS(require_supported(11), DomainError);
    try {
        require_supported(11);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("unsupported-level") != std::string::npos);
    }
}

TEST_CASE("legendre symbol agrees with Euler's criterion") {
    for (long long p = 3; p < 400; p += 2) {
        if (!is_prime(p)) continue;
        for (long long a = -60; a <= 60; ++a) {
            long long e = powmod(a, (p - 1) / 2, p);
            int want = e == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(legendre(Int(a), p) == want);
        }
    }
    CHECK(legendre(Int("123456789123456789123456789"), 101) ==
          (powmod(static_cast<long long>(Int("123456789123456789123456789") % 101), 50, 101) == 1 ? 1 : -1));
    CHECK_THROWS(legendre(Int(3), 9));
    CHECK_THROWS(legendre(Int(3), 2));
}

TEST_CASE("legendre is multiplicative in the top argument") {
    for (long long p : {5, 7, 11, 13, 101, 997})
        for (long long a = 1; a < 40; ++a)
            for (long long b = 1; b < 40; ++b)
                CHECK(legendre(Int(a * b), p) == legendre(Int(a), p) * legendre(Int(b), p));
}

TEST_CASE("index and elliptic point counts against brute force") {
    for (int N : supported_levels()) {
        // kappa = N prod (1 + 1/p)
        long long k = N, n = N;
        for (long long p = 2; p <= n; ++p) {
            if (n % p) continue;
            k = k / p * (p + 1);
            while (n % p == 0) n /= p;
        }
        CHECK(kappa(N) == k);
        // elliptic points: roots of x^2 + 1 and x^2 + x + 1 modulo N
        int e2 = 0, e3 = 0;
        for (int x = 0; x < N; ++x) {
            if ((x * x + 1) % N == 0) ++e2;
            if ((x * x + x + 1) % N == 0) ++e3;
        }
        CHECK(epsilon2(N) == e2);
        CHECK(epsilon3(N) == e3);
        CHECK(deg_canonical(N) == Rat(-1) + Rat(epsilon3(N), 3) + Rat(epsilon2(N), 4));
    }
}

TEST_CASE("arithmetic table as printed") {
    // N: kappa, eps2, eps3
    std::map<int, std::array<int, 3>> table{
        {1, {1, 1, 1}},   {2, {3, 1, 0}},   {3, {4, 0, 1}},   {4, {6, 0, 0}},   {5, {6, 2, 0}},
        {6, {12, 0, 0}},  {7, {8, 0, 2}},   {8, {12, 0, 0}},  {9, {12, 0, 0}},  {10, {18, 2, 0}},
        {12, {24, 0, 0}}, {13, {14, 2, 2}}, {16, {24, 0, 0}}, {18, {36, 0, 0}}, {25, {30, 2, 0}},
    };
    for (auto& [N, row] : table) {
        CHECK(kappa(N) == row[0]);
        CHECK(epsilon2(N) == row[1]);
        CHECK(epsilon3(N) == row[2]);
    }
    CHECK(deg_canonical(7) == Rat(-1, 3));
    CHECK(deg_canonical(13) == Rat(1, 6));
}

TEST_CASE("structure descriptors") {
    std::map<int, bool> trivial{{1, false}, {2, false}, {3, true},  {4, false},  {5, false},
                                {6, true},  {7, true},  {8, true},  {9, true},   {10, false},
                                {12, true}, {13, false}, {16, true}, {18, true}, {25, false}};
    for (auto& [N, t] : trivial) CHECK(structure_descriptor(N).gerbe_trivial == t);
    CHECK(structure_descriptor(13).mu3_stacky);
    CHECK(structure_descriptor(13).mu2_stacky);
    CHECK_FALSE(structure_descriptor(12).mu2_stacky);
    CHECK(structure_descriptor(12).rigidification == "P1");
    CHECK_THROWS_AS(structure_descriptor(11), DomainError);
}
