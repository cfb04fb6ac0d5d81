#include "x0/heights.hpp"

#include <limits>

#include <algorithm>
#include <map>

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

namespace x0 {

namespace {

constexpr unsigned kTrialBound = 10000;

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool probably_prime(const Int& n) {
    static thread_local boost::random::mt19937 gen(12345);
    return boost::multiprecision::miller_rabin_test(n, 30, gen);
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Int rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        long long r = 1, m = 128;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        do {
            x = y;
            for (long long i = 0; i < r; ++i) y = f(y);
            long long k = 0;
            do {
                ys = y;
                for (long long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Int diff = x > y ? Int(x - y) : Int(y - x);
                    q = (q * diff) % n;
                }
                g = gcd_int(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Int diff = x > ys ? Int(x - ys) : Int(ys - x);
                g = gcd_int(diff, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = rho(n);
    split(d, out);
    split(n / d, out);
}

int valuation(Int n, const Int& p) {
    if (n == 0) return std::numeric_limits<int>::max();
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// ceil(a / b) for b > 0
int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n_in) {
    if (n_in == 0) throw std::invalid_argument("factorize: zero");
    Int n = n_in < 0 ? Int(-n_in) : n_in;
    std::map<Int, int> out;
    for (unsigned p = 2; p < kTrialBound && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    if (n > 1) {
        if (n < Int(kTrialBound) * kTrialBound)
            out[n] += 1;
        else
            split(n, out);
    }
    return {out.begin(), out.end()};
}

MinimalPair reduce_minimal(const Rat& x1, const Rat& x2) {
    if (x1 == 0 && x2 == 0) throw DomainError("reduce_minimal: zero point");
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    std::map<Int, bool> primes;
    for (const Rat* x : {&x1, &x2}) {
        if (*x == 0) continue;
        for (const Int& part : {Int(numerator(*x)), Int(denominator(*x))})
            if (part != 1 && part != -1)
                for (auto& [p, e] : factorize(part)) primes[p] = true;
    }
    Rat lam4 = 1, lam6 = 1;
    for (const auto& [p, unused] : primes) {
        const int inf = std::numeric_limits<int>::max();
        int v1 = x1 == 0 ? inf : valuation(numerator(x1), p) - valuation(denominator(x1), p);
        int v2 = x2 == 0 ? inf : valuation(numerator(x2), p) - valuation(denominator(x2), p);
        // lambda = p^r with r = max(ceil(-v1/4), ceil(-v2/6)) over the finite valuations
        int r = std::numeric_limits<int>::min();
        if (v1 != inf) r = std::max(r, ceil_div(-v1, 4));
        if (v2 != inf) r = std::max(r, ceil_div(-v2, 6));
        Int pr = boost::multiprecision::pow(p, static_cast<unsigned>(std::abs(r)));
        Int pr2 = pr * pr;
        Rat s4 = Rat(pr2 * pr2), s6 = Rat(pr2 * pr2 * pr2);
        if (r > 0) {
            lam4 *= s4;
            lam6 *= s6;
        } else if (r < 0) {
            lam4 /= s4;
            lam6 /= s6;
        }
    }
    Rat e = x1 * lam4, f = x2 * lam6;
    if (denominator(e) != 1 || denominator(f) != 1) throw std::logic_error("reduce_minimal: non-integral result");
    return {numerator(e), numerator(f)};
}

Int naive_height(const MinimalPair& p) {
    Int a = boost::multiprecision::abs(p.e);
    Int c = a * a * a, s = p.f * p.f;
    return std::max(c, s);
}

Int naive_height(const Rat& x1, const Rat& x2) { return naive_height(reduce_minimal(x1, x2)); }

Int curve_height(const Rat& A, const Rat& B) {
    if (4 * A * A * A + 27 * B * B == 0) throw DomainError("singular curve");
    return naive_height(A, B);
}

}  // namespace x0
