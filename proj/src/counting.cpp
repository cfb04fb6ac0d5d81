#include "x0/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "x0/cone.hpp"
#include "x0/heights.hpp"
#include "x0/levels.hpp"
#include "x0/poly.hpp"

namespace x0 {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u64 isqrt_u64(u64 x) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
    while (static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

u64 icbrt_u64(u64 x) {
    u64 r = static_cast<u64>(std::cbrt(static_cast<long double>(x)));
    while (r > 0 && static_cast<u128>(r) * r * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) * (r + 1) <= x) ++r;
    return r;
}

const std::vector<long long>& small_primes() {
    static const std::vector<long long> primes = [] {
        const int lim = 100000;
        std::vector<char> comp(lim + 1, 0);
        std::vector<long long> ps;
        for (int i = 2; i <= lim; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (long long j = 1LL * i * i; j <= lim; j += i) comp[j] = 1;
        }
        return ps;
    }();
    return primes;
}

std::vector<int> mobius_table(u64 n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<char> comp(n + 1, 0);
    mu[0] = 0;
    for (u64 i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        for (u64 j = i; j <= n; j += i) {
            if (j > i) comp[j] = 1;
            mu[j] = -mu[j];
        }
        for (u64 j = i * i; j <= n; j += i * i) mu[j] = 0;
    }
    return mu;
}

}  // namespace

// ---------------------------------------------------------------- level one

u64 squarefree_count(u64 x) {
    u64 r = isqrt_u64(x);
    auto mu = mobius_table(r);
    long long s = 0;
    for (u64 d = 1; d <= r; ++d)
        if (mu[d]) s += mu[d] * static_cast<long long>(x / (d * d));
    return static_cast<u64>(s);
}

namespace {

// #{1 <= f <= F : no p^6 | f}
u64 sixth_power_free(u64 F) {
    u64 r = 1;
    while (true) {
        u128 n = r + 1;
        if (n * n * n * n * n * n > F) break;
        ++r;
    }
    auto mu = mobius_table(r);
    long long s = 0;
    for (u64 d = 1; d <= r; ++d) {
        if (!mu[d]) continue;
        u128 d6 = static_cast<u128>(d) * d * d * d * d * d;
        s += mu[d] * static_cast<long long>(F / d6);
    }
    return static_cast<u64>(s);
}

bool minimal_pair(long long e, long long f, const std::vector<long long>& P) {
    for (long long p : P) {
        u128 p6 = static_cast<u128>(p) * p * p * p * p * p;
        if (static_cast<u128>(f < 0 ? -f : f) % p6 == 0) return false;
    }
    (void)e;
    return true;
}

u64 count_row(long long e, u64 F, bool exclude_special) {
    if (e == 0) return exclude_special ? 0 : 2 * sixth_power_free(F);
    // primes with p^4 | e
    std::vector<long long> P;
    long long r = e < 0 ? -e : e;
    for (long long p = 2; p * p * p * p <= r; ++p) {
        if (r % p) continue;
        int v = 0;
        while (r % p == 0) {
            r /= p;
            ++v;
        }
        if (v >= 4) P.push_back(p);
    }
    long long total = 0;
    size_t k = P.size();
    for (u64 mask = 0; mask < (1ULL << k); ++mask) {
        u128 m = 1;
        int bits = 0;
        bool big = false;
        for (size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            ++bits;
            u128 p = P[i];
            m *= p * p * p * p * p * p;
            if (m > F) big = true;
        }
        long long c = big ? 1 : static_cast<long long>(2 * (F / static_cast<u64>(m)) + 1);
        total += (bits % 2 ? -c : c);
    }
    // singular pairs e = -3u^2, f = +-2u^3
    if (e < 0 && (-e) % 3 == 0) {
        long long u2 = -e / 3;
        long long u = static_cast<long long>(isqrt_u64(static_cast<u64>(u2)));
        if (u * u == u2) {
            u128 f = static_cast<u128>(2) * u * u * u;
            if (f <= F && minimal_pair(e, static_cast<long long>(f), P)) total -= 2;
        }
    }
    if (exclude_special && P.empty()) total -= 1;  // f = 0
    return static_cast<u64>(total);
}

template <class Fn>
void parallel_chunks(size_t nchunks, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < nchunks;) fn(i);
    };
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

u64 count_level_one(u64 B, bool exclude_special, int threads) {
    if (B == 0) return 0;
    if (B > kMaxBound) throw DomainError("bound too large");
    long long E = static_cast<long long>(icbrt_u64(B));
    u64 F = isqrt_u64(B);
    const long long chunk = 1024;
    size_t nchunks = static_cast<size_t>((2 * E + 1 + chunk - 1) / chunk);
    std::vector<u64> part(nchunks, 0);
    parallel_chunks(nchunks, threads, [&](size_t c) {
        long long lo = -E + static_cast<long long>(c) * chunk;
        long long hi = std::min(E, lo + chunk - 1);
        u64 s = 0;
        for (long long e = lo; e <= hi; ++e) s += count_row(e, F, exclude_special);
        part[c] = s;
    });
    return std::accumulate(part.begin(), part.end(), u64{0});
}

// ---------------------------------------------------------------- families

namespace {

// Binary form: coefficient i multiplies p^i q^(d-i), d = size - 1.
using Form = std::vector<Int>;

Form form_mul(const Form& a, const Form& b) {
    Form r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Group the factors of a degree-d form (given by its polynomial in t) by multiplicity.
std::map<int, Form> form_groups(const QPoly& poly, int d) {
    std::map<int, Form> g;
    for (const auto& [f, k] : squarefree_decomposition(poly)) {
        Form pf = primitive_part(f);
        auto it = g.find(k);
        g[k] = it == g.end() ? pf : form_mul(it->second, pf);
    }
    int drop = d - degree(poly);
    if (drop > 0) {
        Form qf{Int(1), Int(0)};  // the linear form q
        auto it = g.find(drop);
        g[drop] = it == g.end() ? qf : form_mul(it->second, qf);
    }
    return g;
}

Rat leading_in_t(const QPoly& p) { return p[degree(p)]; }

Rat poly_lead(const Form& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return Rat(f[i]);
    return Rat(0);
}

int vp(Int n, long long p) {
    if (n == 0) return 1 << 20;
    int v = 0;
    if (n < 0) n = -n;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline double to_double(i128 x) { return static_cast<double>(x); }
inline double to_double(const Int& x) { return x.convert_to<double>(); }
inline i128 abs_num(i128 x) { return x < 0 ? -x : x; }
inline Int abs_num(const Int& x) { return boost::multiprecision::abs(x); }
inline Int to_int(i128 x) {
    bool neg = x < 0;
    u128 u = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    Int r = static_cast<unsigned long long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long long>(u & 0xFFFFFFFFFFFFFFFFULL);
    return neg ? Int(-r) : r;
}
inline Int to_int(const Int& x) { return x; }

i128 isqrt_num(i128 x) {
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}
Int isqrt_num(const Int& x) { return boost::multiprecision::sqrt(x); }

template <class Num>
Num from_int(const Int& x);
template <>
i128 from_int<i128>(const Int& x) {
    Int a = abs_num(x);
    u128 u = static_cast<u128>(static_cast<unsigned long long>(a >> 64)) << 64;
    u |= static_cast<unsigned long long>(a & Int("18446744073709551615"));
    i128 r = static_cast<i128>(u);
    return x < 0 ? -r : r;
}
template <>
Int from_int<Int>(const Int& x) {
    return x;
}

// Split |x| = c * r with c the product of p^floor(v/k); returns c, leaves x = |x|.
// After trial division the cofactor has no prime below its cube root, so a
// remaining square part can only be a perfect square.
template <class Num>
Num power_part(Num& x, int k) {
    Num c = 1;
    Num rem = x;
    const auto& ps = small_primes();
    size_t i = 0;
    for (; i < ps.size(); ++i) {
        Num p = ps[i];
        if (p * p * p > rem) break;
        if (rem % p != 0) continue;
        int v = 0;
        while (rem % p == 0) {
            rem /= p;
            ++v;
        }
        for (int j = 0; j < v / k; ++j) c *= p;
    }
    if (i == ps.size()) {
        // cofactor too large for the table: factor it outright
        for (auto& [p, v] : factorize(to_int(rem))) {
            Num pn = from_int<Num>(p);
            for (int j = 0; j < v / k; ++j) c *= pn;
        }
        return c;
    }
    if (k == 2 && rem > 1) {
        Num s = isqrt_num(rem);
        if (s * s == rem) c *= s;
    }
    return c;
}

}  // namespace

struct FamilyEngine::Impl {
    Form F, G, S, K, cusp;
    Int cn, cc;
    std::vector<long long> bad;
    std::vector<int> va0, vb0;
    std::vector<std::vector<i128>> c128;  // F, G, S, K, cusp
    std::vector<double> coef_abs;
    std::vector<int> deg;
    bool fits128 = true;

    const Form& form(int i) const {
        switch (i) {
            case 0: return F;
            case 1: return G;
            case 2: return S;
            case 3: return K;
            default: return cusp;
        }
    }

    template <class Num>
    static Num eval(const std::vector<Num>& c, const Num& p, const Num& q) {
        int d = static_cast<int>(c.size()) - 1;
        Num acc = c[d];
        Num qk = 1;
        for (int i = d - 1; i >= 0; --i) {
            qk *= q;
            acc = acc * p + c[i] * qk;
        }
        return acc;
    }

    // Twist-minimal height; nullopt at cusps/special fibers or when it
    // certainly exceeds log_bound.
    template <class Num>
    std::optional<Int> height(const std::vector<std::vector<Num>>& coeffs, const Num& p, const Num& q,
                              double log_bound) const {
        if (eval(coeffs[4], p, q) == 0) return std::nullopt;
        Num v[4];
        for (int i = 0; i < 4; ++i) {
            v[i] = abs_num(eval(coeffs[i], p, q));
            if (v[i] == 0) return std::nullopt;
        }
        // bad primes: exact valuations of a = 3 n c and b = 2 n c^2
        double la = 0, lb = 0;
        std::vector<int> ea(bad.size()), eb(bad.size());
        for (size_t b = 0; b < bad.size(); ++b) {
            Num l = bad[b];
            int w[4] = {0, 0, 0, 0};
            for (int i = 0; i < 4; ++i)
                while (v[i] % l == 0) {
                    v[i] /= l;
                    ++w[i];
                }
            int va = va0[b] + 3 * w[0] + w[1] + 2 * w[2] + w[3];
            int vb = vb0[b] + 3 * w[0] + w[1] + 4 * w[2] + 2 * w[3];
            int k = std::min(va / 2, vb / 3);
            ea[b] = va - 2 * k;
            eb[b] = vb - 3 * k;
            double ll = std::log(static_cast<double>(bad[b]));
            la += ea[b] * ll;
            lb += eb[b] * ll;
        }
        // good primes: F and S are absorbed, G keeps its cube part, K its square part
        Num g3 = power_part(v[1], 3);
        Num k2 = power_part(v[3], 2);
        Num Ga = v[1] / (g3 * g3), Gb = Ga / g3;
        Num Ka = v[3] / (k2 * k2), Kb = v[3] / k2;
        la += std::log(to_double(v[0])) + std::log(to_double(Ga)) + std::log(to_double(Ka));
        lb += std::log(to_double(Gb)) + std::log(to_double(v[2])) + std::log(to_double(Ka)) +
              std::log(to_double(Kb));
        if (std::max(3 * la, 2 * lb) > log_bound + 1e-6) return std::nullopt;
        Int A = to_int(v[0]) * to_int(Ga) * to_int(Ka);
        Int Bv = to_int(Gb) * to_int(v[2]) * to_int(Ka) * to_int(Kb);
        for (size_t b = 0; b < bad.size(); ++b) {
            A *= boost::multiprecision::pow(Int(bad[b]), static_cast<unsigned>(ea[b]));
            Bv *= boost::multiprecision::pow(Int(bad[b]), static_cast<unsigned>(eb[b]));
        }
        return std::max(Int(A * A * A), Int(Bv * Bv));
    }

    std::vector<std::vector<Int>> coeff_int() const {
        std::vector<std::vector<Int>> c;
        for (int i = 0; i < 5; ++i) c.push_back(form(i));
        return c;
    }

    bool int128_ok(long long T) const {
        for (size_t i = 0; i < 5; ++i)
            if (std::log(coef_abs[i]) + deg[i] * std::log(static_cast<double>(std::max(T, 1LL))) > 86.0)
                return false;  // 2^124
        return fits128;
    }
};

FamilyEngine::FamilyEngine(const JMap& J) : N_(J.N) {
    require_supported(J.N);
    auto val = validate_jmap(J);
    if (!val.ok) throw DomainError("j-map for level " + std::to_string(J.N) + " fails validation: " + val.failures.front());
    int d = val.degree;
    QPoly num = from_ints(J.num), den = from_ints(J.den);
    QPoly cpoly = Rat(1728) * den - num;
    auto gn = form_groups(num, d), gc = form_groups(cpoly, d);
    auto impl = std::make_shared<Impl>();
    auto pick = [](std::map<int, Form>& g, int k) {
        auto it = g.find(k);
        Form f = it == g.end() ? Form{Int(1)} : it->second;
        if (it != g.end()) g.erase(it);
        return f;
    };
    impl->F = pick(gn, 3);
    impl->G = pick(gn, 1);
    impl->S = pick(gc, 2);
    impl->K = pick(gc, 1);
    if (!gn.empty() || !gc.empty()) throw DomainError("unexpected ramification in j-map");
    // cusp kernel: product of all squarefree factors of the denominator
    Form cusp{Int(1)};
    for (auto& [k, f] : form_groups(den, d)) cusp = form_mul(cusp, f);
    impl->cusp = cusp;
    // constants n = cn F^3 G and c = cc S^2 K
    auto lead = [](const Form& f) { return poly_lead(f); };
    Rat cn = leading_in_t(num) / (lead(impl->F) * lead(impl->F) * lead(impl->F) * lead(impl->G));
    Rat cc = leading_in_t(cpoly) / (lead(impl->S) * lead(impl->S) * lead(impl->K));
    // leading of a form with trailing q-factors is its highest nonzero coefficient,
    // which matches the leading coefficient of the polynomial in t
    if (boost::multiprecision::denominator(cn) != 1 || boost::multiprecision::denominator(cc) != 1)
        throw std::logic_error("non-integral content in j-map factorisation");
    impl->cn = boost::multiprecision::numerator(cn);
    impl->cc = boost::multiprecision::numerator(cc);
    // bad primes: 2, 3, the contents and all pairwise resultants
    std::map<Int, bool> bad{{Int(2), true}, {Int(3), true}};
    auto add = [&](const Int& x) {
        if (x == 0) throw std::logic_error("factors of the j-map are not coprime");
        if (abs_num(x) == 1) return;
        for (auto& [p, e] : factorize(x)) bad[p] = true;
    };
    add(impl->cn);
    add(impl->cc);
    const Form* fs[4] = {&impl->F, &impl->G, &impl->S, &impl->K};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (fs[i]->size() > 1 && fs[j]->size() > 1) add(form_resultant(*fs[i], *fs[j]));
    for (auto& [p, unused] : bad) {
        if (p > Int(std::numeric_limits<long long>::max() / 4)) throw std::logic_error("bad prime too large");
        impl->bad.push_back(p.convert_to<long long>());
        bad_.push_back(p);
    }
    for (long long l : impl->bad) {
        impl->va0.push_back(vp(3, l) + vp(impl->cn, l) + vp(impl->cc, l));
        impl->vb0.push_back(vp(2, l) + vp(impl->cn, l) + 2 * vp(impl->cc, l));
    }
    for (int i = 0; i < 5; ++i) {
        const Form& f = impl->form(i);
        double s = 0;
        std::vector<i128> c;
        for (const Int& x : f) {
            s += abs_num(x).convert_to<double>();
            if (abs_num(x) > Int("1000000000000000000000000000000")) impl->fits128 = false;
            else c.push_back(from_int<i128>(x));
        }
        impl->coef_abs.push_back(std::max(s, 1.0));
        impl->deg.push_back(static_cast<int>(f.size()) - 1);
        impl->c128.push_back(c);
    }
    impl_ = impl;
}

std::optional<Int> FamilyEngine::base_height(const Int& p, const Int& q) const {
    return impl_->height<Int>(impl_->coeff_int(), p, q, std::numeric_limits<double>::infinity());
}

std::vector<FamilyPoint> FamilyEngine::enumerate(u64 B, long long t_lo, long long t_hi, int threads) const {
    std::vector<FamilyPoint> out;
    if (t_hi <= t_lo || B == 0) return out;
    const Impl& im = *impl_;
    double logB = std::log(static_cast<double>(B));
    bool fast = im.int128_ok(t_hi);
    auto cint = im.coeff_int();
    const long long chunk = 64;
    long long span = 2 * t_hi + 1;
    size_t nchunks = static_cast<size_t>((span + chunk - 1) / chunk);
    std::vector<std::vector<FamilyPoint>> parts(nchunks);
    auto visit = [&](long long p, long long q, std::vector<FamilyPoint>& acc) {
        std::optional<Int> h;
        if (fast)
            h = im.height<i128>(im.c128, p, q, logB);
        else
            h = im.height<Int>(cint, Int(p), Int(q), logB);
        if (h && *h <= B) acc.push_back({p, q, h->convert_to<u64>()});
    };
    parallel_chunks(nchunks, threads, [&](size_t c) {
        auto& acc = parts[c];
        long long lo = -t_hi + static_cast<long long>(c) * chunk;
        long long hi = std::min(t_hi, lo + chunk - 1);
        for (long long p = lo; p <= hi; ++p) {
            long long ap = p < 0 ? -p : p;
            if (p == 1 && t_lo < 1) visit(1, 0, acc);  // t = infinity
            long long q0 = ap > t_lo ? 1 : t_lo + 1;
            for (long long q = q0; q <= t_hi; ++q)
                if (std::gcd(ap, q) == 1) visit(p, q, acc);
        }
    });
    for (auto& v : parts) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), [](const FamilyPoint& a, const FamilyPoint& b) {
        return std::tie(a.H0, a.p, a.q) < std::tie(b.H0, b.p, b.q);
    });
    return out;
}

u64 twist_bound(u64 B, u64 H0) {
    if (H0 == 0 || H0 > B) return 0;
    u64 k = static_cast<u64>(std::pow(static_cast<long double>(B) / H0, 1.0L / 6));
    auto ok = [&](u64 x) {
        u128 x6 = static_cast<u128>(x) * x * x * x * x * x;
        return x6 * H0 <= B;
    };
    while (k > 0 && !ok(k)) --k;
    while (ok(k + 1)) ++k;
    return k;
}

u64 count_from_family(const std::vector<FamilyPoint>& pts, u64 B) {
    static const std::vector<u64> table = [] {
        std::vector<u64> t(1002, 0);
        for (u64 x = 1; x < t.size(); ++x) {
            bool sf = true;
            for (u64 d = 2; d * d <= x; ++d)
                if (x % (d * d) == 0) sf = false;
            t[x] = t[x - 1] + (sf ? 1 : 0);
        }
        return t;
    }();
    u64 s = 0;
    for (const auto& fp : pts) {
        if (fp.H0 > B) continue;
        u64 k = twist_bound(B, fp.H0);
        s += 2 * (k < table.size() ? table[k] : squarefree_count(k));
    }
    return s;
}

long long auto_t_cap(u64 B) {
    double c = 4.0 * std::cbrt(static_cast<double>(std::max<u64>(B, 1)));
    return std::max(16LL, static_cast<long long>(std::ceil(c)));
}

namespace {
constexpr long long kMaxTCap = 1LL << 16;
}

FamilyRun family_run(const JMap& J, u64 Bmax, int threads, std::optional<long long> t_cap) {
    FamilyEngine eng(J);
    FamilyRun run;
    if (t_cap) {
        if (*t_cap < 1) throw DomainError("t_cap must be positive");
        run.t_cap = *t_cap;
        run.points = eng.enumerate(Bmax, 0, *t_cap, threads);
        run.stabilized = eng.enumerate(Bmax, *t_cap, 2 * *t_cap, threads).empty();
        return run;
    }
    long long T = auto_t_cap(Bmax);
    run.points = eng.enumerate(Bmax, 0, T, threads);
    while (true) {
        auto shell = eng.enumerate(Bmax, T, 2 * T, threads);
        if (shell.empty()) {
            run.stabilized = true;
            break;
        }
        run.points.insert(run.points.end(), shell.begin(), shell.end());
        T *= 2;
        if (T > kMaxTCap) break;
    }
    run.t_cap = T;
    std::sort(run.points.begin(), run.points.end(), [](const FamilyPoint& a, const FamilyPoint& b) {
        return std::tie(a.H0, a.p, a.q) < std::tie(b.H0, b.p, b.q);
    });
    return run;
}

std::vector<u64> family_heights(const FamilyRun& run, u64 Bmax) {
    std::vector<u64> hs;
    for (const auto& fp : run.points) {
        u64 k = twist_bound(Bmax, fp.H0);
        for (u64 d = 1; d <= k; ++d) {
            bool sf = true;
            for (u64 e = 2; e * e <= d; ++e)
                if (d % (e * e) == 0) sf = false;
            if (!sf) continue;
            u64 h = fp.H0 * d * d * d * d * d * d;
            hs.push_back(h);
            hs.push_back(h);
        }
    }
    std::sort(hs.begin(), hs.end());
    return hs;
}

CountResult count_level(const CountQuery& q, const JMap& J) {
    require_supported(q.N);
    if (q.B > kMaxBound) throw DomainError("bound too large");
    CountResult r;
    if (q.N == 1) {
        r.count = count_level_one(q.B, q.exclude_special, q.threads);
        r.stabilized = true;
        return r;
    }
    if (!q.exclude_special) throw DomainError("special fibers can only be included for N=1");
    if (J.N != q.N) throw DomainError("j-map level does not match query");
    if (q.B == 0) {
        r.stabilized = true;
        return r;
    }
    auto run = family_run(J, q.B, q.threads, q.t_cap);
    r.count = count_from_family(run.points, q.B);
    r.t_cap = run.t_cap;
    r.stabilized = run.stabilized;
    for (const auto& fp : run.points)
        r.max_t_height = std::max({r.max_t_height, std::abs(fp.p), fp.q});
    return r;
}

CountResult count_level(const CountQuery& q) {
    require_supported(q.N);
    if (q.N == 1) return count_level(q, JMap{});
    return count_level(q, jmap_for(q.N));
}

CountReport count_grid(int N, const std::vector<u64>& Bs, bool exclude_special, int threads,
                       const std::string& jmap_path) {
    require_supported(N);
    CountReport rep;
    rep.N = N;
    rep.a = a_invariant(N, FieldConfig{});
    rep.b = b_invariant(N, FieldConfig{});
    if (Bs.empty()) return rep;
    u64 Bmax = *std::max_element(Bs.begin(), Bs.end());
    if (Bmax > kMaxBound) throw DomainError("bound too large");
    if (N == 1) {
        for (u64 B : Bs) rep.counts.push_back({B, count_level_one(B, exclude_special, threads)});
    } else {
        if (!exclude_special) throw DomainError("special fibers can only be included for N=1");
        auto run = family_run(jmap_for(N, jmap_path), Bmax, threads);
        rep.stabilized = run.stabilized;
        rep.t_cap = run.t_cap;
        for (u64 B : Bs) rep.counts.push_back({B, count_from_family(run.points, B)});
    }
    double a = rep.a.convert_to<double>();
    for (auto& [B, c] : rep.counts) rep.ratios.push_back(static_cast<double>(c) / std::pow(static_cast<double>(B), a));
    try {
        rep.exponent = fit_exponent(rep.counts);
        rep.exponent_log = fit_exponent(rep.counts, rep.b);
    } catch (const DomainError&) {
        rep.exponent = rep.exponent_log = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

double fit_exponent(const std::vector<std::pair<u64, u64>>& counts, int b) {
    if (b < 1) throw DomainError("degenerate input: b must be positive");
    if (counts.size() < 4) throw DomainError("degenerate input: need at least 4 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [B, c] : counts) {
        if (c == 0 || B == 0) throw DomainError("degenerate input: zero count");
        if (b > 1 && B < 3) throw DomainError("degenerate input: log factor needs B >= 3");
        double x = std::log(static_cast<double>(B));
        double y = std::log(static_cast<double>(c)) - (b - 1) * std::log(x);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(counts.size());
    double den = n * sxx - sx * sx;
    if (den <= 0) throw DomainError("degenerate input: repeated bounds");
    return (n * sxy - sx * sy) / den;
}

std::string to_string(LogTrend t) {
    switch (t) {
        case LogTrend::Nondecreasing: return "nondecreasing";
        case LogTrend::Flat: return "flat";
        default: return "neither";
    }
}

LogTrend log_factor_diagnostic(const std::vector<std::pair<u64, u64>>& counts, const Rat& a, double flat_tol,
                               double step_tol) {
    if (counts.size() < 2) return LogTrend::Neither;
    double ad = a.convert_to<double>();
    std::vector<double> r;
    for (auto& [B, c] : counts) r.push_back(static_cast<double>(c) / std::pow(static_cast<double>(B), ad));
    double mean = std::accumulate(r.begin(), r.end(), 0.0) / r.size();
    bool flat = std::all_of(r.begin(), r.end(), [&](double x) { return std::abs(x / mean - 1) <= flat_tol; });
    if (flat) return LogTrend::Flat;
    bool mono = true;
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i] < r[i - 1] * (1 - step_tol)) mono = false;
    if (mono && r.back() > r.front()) return LogTrend::Nondecreasing;
    return LogTrend::Neither;
}

}  // namespace x0
