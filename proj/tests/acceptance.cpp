// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "x0/cone.hpp"
#include "x0/counting.hpp"
#include "x0/heights.hpp"
#include "x0/levels.hpp"
#include "x0/linalg.hpp"
#include "x0/moduli.hpp"
#include "x0/nsorb.hpp"
#include "x0/sectors.hpp"

using namespace x0;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << detail << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int prec = 4) {
    std::ostringstream s;
    s.precision(prec);
    s << std::fixed << x;
    return s.str();
}

OrbClass make(int N, const std::map<std::string, Rat>& c) {
    OrbClass O{SectorSpace(N, {})};
    for (auto& [k, v] : c) O[k] = v;
    return O;
}

bool matches(const OrbClass& x, const std::map<std::string, Rat>& d) {
    if (static_cast<size_t>(x.space.dim()) != d.size()) return false;
    for (auto& [k, v] : d)
        if (x[k] != v) return false;
    return true;
}

std::vector<u64> grid(double lo, double hi, int steps) {
    std::vector<u64> Bs;
    for (int i = 0; i <= steps; ++i) Bs.push_back(static_cast<u64>(std::llround(std::pow(10.0, lo + (hi - lo) * i / steps))));
    return Bs;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::map<int, std::pair<Rat, int>> table{
        {1, {Rat(5, 6), 1}},  {2, {Rat(1, 2), 1}},  {3, {Rat(1, 3), 2}},  {4, {Rat(1, 3), 1}},
        {5, {Rat(1, 6), 3}},  {6, {Rat(1, 6), 2}},  {7, {Rat(1, 6), 2}},  {8, {Rat(1, 6), 2}},
        {9, {Rat(1, 6), 2}},  {10, {Rat(1, 6), 1}}, {12, {Rat(1, 6), 1}}, {13, {Rat(1, 6), 1}},
        {16, {Rat(1, 6), 1}}, {18, {Rat(1, 6), 1}}, {25, {Rat(1, 6), 1}},
    };
    std::string bad;
    for (auto& [N, ab] : table) {
        auto r = general_ab(N, {});
        if (r.a != ab.first || r.b != ab.second)
            bad += " N=" + std::to_string(N) + "(" + to_string(r.a) + "," + std::to_string(r.b) + ")";
    }
    int b5 = b_invariant(5, {true, false});
    if (b5 != 4) bad += " N=5,i: b=" + std::to_string(b5);
    double s = seconds_since(t0);
    bool ok = bad.empty() && s < 5;
    report(1, "invariant table", ok,
           (bad.empty() ? std::string("15 levels exact, N=5 with i gives b=4") : "mismatch:" + bad) + ", " + fmt(s, 2) +
               " s");
}

void criterion2() {
    std::map<int, std::array<int, 3>> table{
        {1, {1, 1, 1}},   {2, {3, 1, 0}},   {3, {4, 0, 1}},   {4, {6, 0, 0}},   {5, {6, 2, 0}},
        {6, {12, 0, 0}},  {7, {8, 0, 2}},   {8, {12, 0, 0}},  {9, {12, 0, 0}},  {10, {18, 2, 0}},
        {12, {24, 0, 0}}, {13, {14, 2, 2}}, {16, {24, 0, 0}}, {18, {36, 0, 0}}, {25, {30, 2, 0}},
    };
    std::string bad;
    for (auto& [N, row] : table) {
        if (kappa(N) != row[0] || epsilon2(N) != row[1] || epsilon3(N) != row[2]) bad += " N=" + std::to_string(N);
        if (deg_canonical(N) != Rat(-1) + Rat(row[2], 3) + Rat(row[1], 4)) bad += " degK(" + std::to_string(N) + ")";
    }
    if (deg_canonical(7) != Rat(-1, 3)) bad += " degK(7)";
    report(2, "arithmetic tables", bad.empty(),
           bad.empty() ? "kappa, eps2, eps3, deg K match for 15 levels; deg K(7) = -1/3" : "mismatch:" + bad);
}

void criterion3() {
    std::string detail;
    bool ok = true;
    // N = 7
    auto O7 = make(7, {{"L", Rat(1, 3)},
                       {"K6:NonSplit:1/6", Rat(4, 3)},
                       {"K6:NonSplit:1/3", Rat(2, 3)},
                       {"K6:NonSplit:2/3", Rat(1, 3)},
                       {"K6:NonSplit:5/6", Rat(-1, 3)}});
    auto c7 = eff_membership(O7);
    DualVector dir(O7.space);
    dir.L() = 1;
    dir[std::string("K6:NonSplit:5/6")] = 1;
    RMat span(O7.space.dim(), static_cast<int>(c7.vanishing.size()) + 1);
    for (size_t j = 0; j < c7.vanishing.size(); ++j) span.col(static_cast<int>(j)) = c7.vanishing[j].v;
    span.col(static_cast<int>(c7.vanishing.size())) = dir.v;
    bool ok7 = O7 == general_ab(7, {}).O && c7.verdict == Verdict::Boundary && c7.vanishing_rank == 2 && rank(span) == 2;
    detail += "N=7 " + to_string(c7.verdict) + " span " + std::to_string(c7.vanishing_rank) +
              (rank(span) == 2 ? " contains L+x_5/6" : " misses L+x_5/6") + (ok7 ? " ok" : " BAD");
    ok = ok && ok7;
    // N = 13, required: Interior with packing value 1
    auto c13 = eff_membership(general_ab(13, {}).O);
    bool ok13 = c13.verdict == Verdict::Interior && c13.packing_value == 1;
    detail += "; N=13 " + to_string(c13.verdict) + " packing " + to_string(c13.packing_value) + " span " +
              std::to_string(c13.vanishing_rank) + (ok13 ? " ok" : " BAD (required Interior; x_Half vanishes at O, as for N=12)");
    ok = ok && ok13;
    // N = 12
    auto c12 = eff_membership(make(12, {{"L", Rat(1)}}));
    bool ok12 = c12.verdict == Verdict::Boundary && c12.vanishing_rank == 1;
    detail += "; N=12 " + to_string(c12.verdict) + " span " + std::to_string(c12.vanishing_rank) + (ok12 ? " ok" : " BAD");
    ok = ok && ok12;
    report(3, "cone certificates", ok, detail);
}

void criterion4() {
    int checked = 0;
    std::string bad;
    const FieldConfig cfgs[] = {{false, false}, {true, false}, {false, true}, {true, true}};
    std::set<int> levels;
    for (int N : supported_levels())
        for (auto cfg : cfgs) {
            if (!is_adequate(N, cfg)) continue;
            levels.insert(N);
            ++checked;
            auto r = general_ab(N, cfg);
            if (r.a != adequate_a(N) || r.b != adequate_b(N, cfg)) bad += " N=" + std::to_string(N);
        }
    bool ok = bad.empty() && levels.size() == 8;
    report(4, "branch agreement", ok,
           std::to_string(levels.size()) + " adequate levels, " + std::to_string(checked) + " (level, flags) pairs" +
               (bad.empty() ? ", cone = closed form" : ", mismatch:" + bad));
}

void criterion5() {
    std::string bad;
    for (int N : supported_levels()) {
        auto all = enumerate_sectors(N, {});
        int c4 = epsilon2(N) ? 1 : 0, c6 = epsilon3(N) ? 1 : 0;
        if (static_cast<int>(all.size()) != 2 + 2 * c4 + 4 * c6) bad += " count(" + std::to_string(N) + ")";
        for (const auto& s : all) {
            Rat want = s.label.kind == SectorKind::K4   ? frac(2 * s.label.zeta)
                       : s.label.kind == SectorKind::K6 ? frac(4 * s.label.zeta)
                                                        : Rat(0);
            if (s.age != want) bad += " age(" + std::to_string(N) + "," + s.label.key() + ")";
        }
    }
    using D = std::map<std::string, Rat>;
    auto r = [](long long p, long long q = 1) { return Rat(p, q); };
    D T7{{"L", r(4)}, {"Half", r(6)}, {"K6:NonSplit:1/6", r(10)}, {"K6:NonSplit:1/3", r(8)}, {"K6:NonSplit:2/3", r(4)},
         {"K6:NonSplit:5/6", r(2)}};
    D K7{{"L", r(-1, 3)},           {"Half", r(-1)},          {"K6:NonSplit:1/6", r(-1, 3)},
         {"K6:NonSplit:1/3", r(-2, 3)}, {"K6:NonSplit:2/3", r(-1, 3)}, {"K6:NonSplit:5/6", r(-2, 3)}};
    D T10{{"L", r(9)}, {"K4:NonSplit:1/4", r(9)}, {"Half", r(6)}, {"K4:NonSplit:3/4", r(3)}};
    D T25{{"L", r(15)}, {"K4:NonSplit:1/4", r(9)}, {"Half", r(6)}, {"K4:NonSplit:3/4", r(3)}};
    D K10{{"L", r(-1, 2)}, {"K4:NonSplit:1/4", r(-1, 2)}, {"Half", r(-1)}, {"K4:NonSplit:3/4", r(-1, 2)}};
    D T12{{"L", r(12)}, {"Half", r(6)}};
    D K12{{"L", r(-1)}, {"Half", r(-1)}};
    D T13{{"L", r(7)},           {"K4:NonSplit:1/4", r(9)}, {"K4:NonSplit:3/4", r(3)}, {"Half", r(6)},
          {"K6:NonSplit:1/6", r(10)}, {"K6:NonSplit:1/3", r(8)}, {"K6:NonSplit:2/3", r(4)}, {"K6:NonSplit:5/6", r(2)}};
    // canonical class for N = 13 as typeset (zeta = 1/6 and 1/3 entries as printed)
    D K13p{{"L", r(1, 6)},           {"K4:NonSplit:1/4", r(-1, 2)}, {"K4:NonSplit:3/4", r(-1, 2)},
           {"Half", r(-1)},           {"K6:NonSplit:1/6", r(-2, 3)}, {"K6:NonSplit:1/3", r(-1, 3)},
           {"K6:NonSplit:2/3", r(-2, 3)}, {"K6:NonSplit:5/6", r(-1, 3)}};
    // printed point O = T/6 + K for N = 13
    D O13{{"L", r(4, 3)},           {"K4:NonSplit:1/4", r(1)},     {"K4:NonSplit:3/4", r(0)},
          {"Half", r(0)},            {"K6:NonSplit:1/6", r(4, 3)},  {"K6:NonSplit:1/3", r(2, 3)},
          {"K6:NonSplit:2/3", r(1, 3)}, {"K6:NonSplit:5/6", r(-1, 3)}};
    struct Check {
        const char* what;
        bool ok;
    };
    std::vector<Check> checks{
        {"M7", matches(m_naive(7, {}), T7)},     {"K7", matches(k_orb(7, {}), K7)},
        {"M10", matches(m_naive(10, {}), T10)},  {"K10", matches(k_orb(10, {}), K10)},
        {"M12", matches(m_naive(12, {}), T12)},  {"K12", matches(k_orb(12, {}), K12)},
        {"M13", matches(m_naive(13, {}), T13)},  {"K13", matches(Rat(1, 6) * m_naive(13, {}) + k_orb(13, {}), O13)},
        {"M25", matches(m_naive(25, {}), T25)},  {"K25", matches(k_orb(25, {}), K10)},
    };
    std::string vec_bad;
    for (auto& c : checks)
        if (!c.ok) vec_bad += std::string(" ") + c.what;
    bool k13_typeset = matches(k_orb(13, {}), K13p);
    bool ok = bad.empty() && vec_bad.empty();
    std::string detail = bad.empty() ? "counts and ages for 15 levels ok" : "catalogue mismatch:" + bad;
    detail += vec_bad.empty() ? "; 10 displayed vectors match" : "; displayed vectors differing:" + vec_bad;
    if (!k13_typeset) detail += " (K13 judged through the printed O = T/6 + K; the typeset K13 swaps its zeta = 1/6, 1/3 entries)";
    report(5, "sector catalogue", ok, detail);
}

void criterion6() {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<long long> coord(-100000, 100000), lam(1, 60);
    int bad = 0, n = 0;
    while (n < 1000) {
        Rat x1(coord(rng), lam(rng)), x2(coord(rng), lam(rng));
        if (x1 == 0 && x2 == 0) continue;
        Rat l(lam(rng) * (rng() % 2 ? 1 : -1), lam(rng));
        Rat l2 = l * l, l4 = l2 * l2, l6 = l4 * l2;
        auto m = reduce_minimal(x1, x2);
        if (!(reduce_minimal(l4 * x1, l6 * x2) == m) || naive_height(l4 * x1, l6 * x2) != naive_height(m)) ++bad;
        if (!(reduce_minimal(Rat(m.e), Rat(m.f)) == m)) ++bad;
        ++n;
    }
    report(6, "height properties", bad == 0,
           std::to_string(n) + " scaled samples, " + std::to_string(bad) + " violations of invariance or fixed point");
}

void criterion7() {
    auto maps = load_jmaps(default_jmap_path());
    int pass = 0;
    std::string p0, p1728;
    for (int N : supported_levels()) {
        if (!maps.count(N)) continue;
        auto v = validate_jmap(maps[N]);
        if (v.ok) ++pass;
        if (N == 2)
            for (const auto& f : v.fibers) {
                std::string s;
                for (int k : f.partition) s += (s.empty() ? "" : ",") + std::to_string(k);
                if (f.target == "0") p0 = s;
                if (f.target == "1728") p1728 = s;
            }
    }
    bool ok = pass == 15 && p0 == "3" && p1728 == "2,1";
    report(7, "j-map gate", ok,
           std::to_string(pass) + "/15 pass; N=2 fibers j=0 {" + p0 + "}, j=1728 {" + p1728 + "}");
}

void criterion8() {
    using namespace oracle;
    auto r2 = family_run(jmap_for(2), 10000, 1);
    auto r3 = family_run(jmap_for(3), 10000, 1);
    bool ok2 = r2.stabilized && family_heights(r2, 10000) == oracle_heights(10000, two_torsion);
    bool ok3 = r3.stabilized && family_heights(r3, 10000) == oracle_heights(10000, three_division);
    std::vector<u64> hs;
    for (const auto& p : naive_pairs(100000, true)) hs.push_back(height(p));
    std::sort(hs.begin(), hs.end());
    bool ok1 = true;
    size_t idx = 0;
    for (u64 B = 1; B <= 100000 && ok1; ++B) {
        while (idx < hs.size() && hs[idx] <= B) ++idx;
        ok1 = count_level_one(B, true) == idx;
    }
    report(8, "counting oracles", ok1 && ok2 && ok3,
           std::string("N=2 ") + (ok2 ? "=" : "!=") + " 2-torsion oracle, N=3 " + (ok3 ? "=" : "!=") +
               " 3-division oracle for all B <= 1e4 (totals " + std::to_string(count_from_family(r2.points, 10000)) + ", " +
               std::to_string(count_from_family(r3.points, 10000)) + "); level 1 " + (ok1 ? "=" : "!=") +
               " naive loop for all B <= 1e5");
}

void criterion9() {
    struct Fit {
        int N;
        double lo, hi;
        int steps;
        double tol;
    };
    bool ok = true;
    std::string detail;
    for (auto f : {Fit{1, 5, 8, 6, 0.03}, Fit{2, 4, 7, 6, 0.05}, Fit{4, 5, 9, 8, 0.05}, Fit{3, 5, 8, 6, 0.05}}) {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = count_grid(f.N, grid(f.lo, f.hi, f.steps), true, 1);
        double a = rep.a.convert_to<double>();
        double est = rep.b > 1 ? rep.exponent_log : rep.exponent;
        bool good = std::abs(est - a) <= f.tol && rep.stabilized;
        std::string trend;
        if (f.N == 3) {
            auto t = log_factor_diagnostic(rep.counts, rep.a);
            trend = ", ratio " + to_string(t);
            good = good && t == LogTrend::Nondecreasing;
        }
        ok = ok && good;
        if (!detail.empty()) detail += "; ";
        detail += "N=" + std::to_string(f.N) + " B=1e" + fmt(f.lo, 0) + "..1e" + fmt(f.hi, 0) + " slope " + fmt(rep.exponent);
        if (rep.b > 1) detail += ", log-adjusted (b=" + std::to_string(rep.b) + ") " + fmt(rep.exponent_log);
        detail += " vs " + to_string(rep.a) + "+-" + fmt(f.tol, 2) + trend + (rep.stabilized ? "" : ", NOT stabilized") +
                  " [" + fmt(seconds_since(t0), 1) + " s]";
    }
    report(9, "asymptotic exponents", ok, detail);
}

void criterion10() {
    struct Case {
        int N;
        u64 B;
    };
    int n = 0;
    bool ok = true;
    for (auto c : {Case{1, 100000000}, Case{2, 1000000}, Case{3, 1000000}, Case{4, 1000000}, Case{7, 1000000},
                   Case{13, 1000000}}) {
        CountQuery q{c.N, c.B};
        q.threads = 1;
        auto base = count_level(q);
        for (int t : {2, 4, 8}) {
            q.threads = t;
            auto r = count_level(q);
            ok = ok && r.count == base.count && r.stabilized == base.stabilized && r.t_cap == base.t_cap;
            ++n;
        }
    }
    report(10, "determinism", ok, std::to_string(n) + " multi-threaded runs (2/4/8 threads) equal to single-threaded");
}

}  // namespace

int main() {
    std::vector<void (*)()> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                criterion6, criterion7, criterion8, criterion9, criterion10};
    for (size_t i = 0; i < all.size(); ++i) {
        try {
            all[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), "criterion", false, std::string("exception: ") + e.what());
        }
    }
    std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
