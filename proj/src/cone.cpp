#include "x0/cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "x0/levels.hpp"
#include "x0/linalg.hpp"

namespace x0 {

Rat RamClass::zeta() const {
    int e = g == 0 ? e_mod : e_mod + m / 2;
    return frac(Rat(e, m));
}

std::vector<RamClass> ram_classes(int m) {
    std::vector<RamClass> out;
    for (int g = 0; g <= 1; ++g)
        for (int e = 0; e < m; ++e) out.push_back({m, e, g});
    return out;
}

Component component_of_point(int N, FieldConfig cfg, int m, int i) {
    int eps = m == 4 ? epsilon2(N) : epsilon3(N);
    bool flag = m == 4 ? cfg.has_i : cfg.has_omega;
    if (i < 0 || i >= eps) throw DomainError("malformed profile: no special point " + std::to_string(i));
    auto comps = components_for(eps, flag);
    return comps.size() == 2 ? comps[i] : comps[0];
}

int class_index(const SectorSpace& sp, const RamClass& r, Component c) {
    Rat z = r.zeta();
    if (z == 0) return 0;
    if (z == Rat(1, 2)) return sp.half_index();
    SectorKind kind = r.m == 4 ? SectorKind::K4 : SectorKind::K6;
    return sp.index_of(SectorLabel{kind, c, z});
}

DualVector gamma_of_profile(int N, FieldConfig cfg, const RamProfile& P) {
    SectorSpace sp(N, cfg);
    if (P.d < 1) throw DomainError("malformed profile: degree must be positive");
    if (P.extra_half < 0) throw DomainError("malformed profile: negative extra_half");
    if (static_cast<int>(P.k4.size()) != epsilon2(N) || static_cast<int>(P.k6.size()) != epsilon3(N))
        throw DomainError("malformed profile: wrong number of special fibers");
    DualVector out(sp);
    out.L() = P.d;
    long long marks = P.extra_half;
    auto add_fibers = [&](const std::vector<Fiber>& fibers, int m) {
        for (size_t i = 0; i < fibers.size(); ++i) {
            Component c = component_of_point(N, cfg, m, static_cast<int>(i));
            long long total = 0;
            for (const auto& pt : fibers[i]) {
                const RamClass& r = pt.cls;
                if (r.m != m || r.e_mod < 0 || r.e_mod >= m || (r.g != 0 && r.g != 1))
                    throw DomainError("malformed profile: bad ramification class");
                if (pt.weight < 1 || pt.weight % m != r.e_mod)
                    throw DomainError("malformed profile: weight incompatible with class");
                total += pt.weight;
                marks += r.g;
                int idx = class_index(sp, r, c);
                if (idx) out.v(idx) += 1;
            }
            if (total != P.d) throw DomainError("malformed profile: fiber weights do not sum to d");
        }
    };
    add_fibers(P.k4, 4);
    add_fibers(P.k6, 6);
    out.v(sp.half_index()) += P.extra_half;
    if (marks % 2 != 0) throw DomainError("malformed profile: odd number of double-cover branch points");
    return out;
}

namespace {

struct Component_ {
    int m;
    Component label;
    int points;  // geometric special points on this component
};

std::vector<Component_> components(int N, FieldConfig cfg) {
    std::vector<Component_> out;
    for (int m : {4, 6}) {
        int eps = m == 4 ? epsilon2(N) : epsilon3(N);
        bool flag = m == 4 ? cfg.has_i : cfg.has_omega;
        auto comps = components_for(eps, flag);
        for (auto c : comps) out.push_back({m, c, comps.size() == 2 ? 1 : eps});
    }
    return out;
}

// A per-component candidate: the class used and the normalised contribution.
struct Local {
    RamClass cls;
    RVec u;
};

// Extreme points of conv(U) + cone(x_Half) for the classes of one component.
std::vector<Local> local_vertices(const SectorSpace& sp, const Component_& comp, long long D) {
    std::vector<Local> cand;
    for (const auto& r : ram_classes(comp.m)) {
        if (r.min_weight() > D) continue;
        RVec u = RVec::Zero(sp.dim());
        int idx = class_index(sp, r, comp.label);
        if (idx) u(idx) = Rat(1, r.min_weight());
        bool dup = false;
        for (const auto& c : cand) dup = dup || c.u == u;
        if (!dup) cand.push_back({r, u});
    }
    // A candidate is dropped when (1, u) lies in the cone of the other (1, u')
    // together with (0, x_Half).
    std::vector<bool> alive(cand.size(), true);
    for (size_t k = 0; k < cand.size(); ++k) {
        std::vector<RVec> others;
        for (size_t j = 0; j < cand.size(); ++j) {
            if (j == k || !alive[j]) continue;
            RVec h(sp.dim() + 1);
            h << Rat(1), cand[j].u;
            others.push_back(h);
        }
        RVec half = RVec::Zero(sp.dim() + 1);
        half(1 + sp.half_index()) = 1;
        others.push_back(half);
        RMat cols(sp.dim() + 1, static_cast<int>(others.size()));
        for (size_t j = 0; j < others.size(); ++j) cols.col(j) = others[j];
        RVec target(sp.dim() + 1);
        target << Rat(1), cand[k].u;
        if (cone_combination(cols, target)) alive[k] = false;
    }
    std::vector<Local> out;
    for (size_t k = 0; k < cand.size(); ++k)
        if (alive[k]) out.push_back(cand[k]);
    return out;
}

RamProfile realize(int N, FieldConfig cfg, const std::vector<Component_>& comps,
                   const std::vector<RamClass>& choice) {
    long long d = 1;
    for (const auto& r : choice) d = std::lcm(d, static_cast<long long>(r.min_weight()));
    auto marks = [&](long long deg) {
        long long s = 0;
        for (size_t c = 0; c < comps.size(); ++c) s += comps[c].points * choice[c].g * (deg / choice[c].min_weight());
        return s;
    };
    if (marks(d) % 2 != 0) d *= 2;
    RamProfile P;
    P.d = d;
    P.k4.resize(epsilon2(N));
    P.k6.resize(epsilon3(N));
    for (size_t c = 0; c < comps.size(); ++c) {
        auto& fibers = comps[c].m == 4 ? P.k4 : P.k6;
        int eps = static_cast<int>(fibers.size());
        for (int i = 0; i < eps; ++i) {
            if (component_of_point(N, cfg, comps[c].m, i) != comps[c].label) continue;
            const RamClass& r = choice[c];
            fibers[i].assign(d / r.min_weight(), FiberPoint{r.min_weight(), r});
        }
    }
    return P;
}

}  // namespace

std::vector<Generator> generator_basis(int N, FieldConfig cfg, long long D) {
    require_supported(N);
    if (D < 60) throw std::invalid_argument("generator_basis: degree cap must be at least lcm(1..6)");
    SectorSpace sp(N, cfg);
    auto comps = components(N, cfg);
    std::vector<std::vector<Local>> verts;
    for (const auto& c : comps) verts.push_back(local_vertices(sp, c, D));

    std::vector<Generator> out;
    DualVector xh(sp);
    xh.v(sp.half_index()) = 1;
    out.push_back({xh, std::nullopt});

    std::vector<size_t> pick(comps.size(), 0);
    for (;;) {
        std::vector<RamClass> choice;
        for (size_t c = 0; c < comps.size(); ++c) choice.push_back(verts[c][pick[c]].cls);
        RamProfile P = realize(N, cfg, comps, choice);
        if (P.d > D) throw std::logic_error("generator_basis: realising degree exceeds the cap");
        DualVector g = gamma_of_profile(N, cfg, P) * Rat(1, P.d);
        DualVector expect(sp);
        expect.L() = 1;
        for (size_t c = 0; c < comps.size(); ++c) expect.v += comps[c].points * verts[c][pick[c]].u;
        if (!(g == expect)) throw std::logic_error("generator_basis: realised direction mismatch");
        out.push_back({g, P});

        size_t c = 0;
        while (c < comps.size() && ++pick[c] == verts[c].size()) pick[c++] = 0;
        if (c == comps.size()) break;
    }
    return out;
}

bool same_directions(const std::vector<Generator>& a, const std::vector<Generator>& b) {
    auto keys = [](const std::vector<Generator>& gs) {
        std::set<std::string> s;
        for (const auto& g : gs) s.insert(describe(g.dir));
        return s;
    };
    return keys(a) == keys(b);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Interior: return "Interior";
        case Verdict::Boundary: return "Boundary";
        case Verdict::Outside: return "Outside";
    }
    return "?";
}

namespace {

struct Packing {
    Rat value;
    DualVector best;  // normalised generator attaining the minimum
};

Packing packing(const OrbClass& O) {
    const SectorSpace& sp = O.space;
    int N = sp.level();
    Packing p{O.L(), DualVector(sp)};
    p.best.L() = 1;
    for (int m : {4, 6}) {
        int eps = m == 4 ? epsilon2(N) : epsilon3(N);
        for (int i = 0; i < eps; ++i) {
            Component c = component_of_point(N, sp.config(), m, i);
            Rat best = 0;
            int best_idx = 0;
            Rat best_w = 1;
            for (const auto& r : ram_classes(m)) {
                int idx = class_index(sp, r, c);
                if (!idx) continue;
                Rat val = O.v(idx) / r.min_weight();
                if (val < best) {
                    best = val;
                    best_idx = idx;
                    best_w = r.min_weight();
                }
            }
            p.value += best;
            if (best_idx) p.best.v(best_idx) += 1 / best_w;
        }
    }
    return p;
}

}  // namespace

Rat packing_value(const OrbClass& O) { return packing(O).value; }

ConeCertificate eff_membership(const OrbClass& O) {
    const SectorSpace& sp = O.space;
    SectorSpace expected(sp.level(), sp.config());
    if (O.v.size() != expected.dim()) throw DomainError("coordinate/sector-set mismatch");
    ConeCertificate cert;
    Packing pk = packing(O);
    cert.packing_value = pk.value;
    const Rat& half = O.v(sp.half_index());

    if (O.L() < 0 || half < 0 || pk.value < 0) {
        cert.verdict = Verdict::Outside;
        DualVector w(sp);
        if (O.L() < 0) {
            w.L() = 1;
        } else if (half < 0) {
            w.v(sp.half_index()) = 1;
        } else {
            w = pk.best;
        }
        if (!(pairing(w, O) < 0)) throw std::logic_error("eff_membership: witness does not separate");
        cert.witness = w;
        return cert;
    }

    for (const auto& g : generator_basis(sp.level(), sp.config()))
        if (pairing(g.dir, O) == 0) cert.vanishing.push_back(g.dir);
    bool on_face = O.L() == 0 || half == 0 || pk.value == 0;
    if (on_face != !cert.vanishing.empty())
        throw std::logic_error("eff_membership: packing bound and generator list disagree");
    if (!cert.vanishing.empty()) {
        cert.verdict = Verdict::Boundary;
        RMat m(sp.dim(), static_cast<int>(cert.vanishing.size()));
        for (size_t j = 0; j < cert.vanishing.size(); ++j) m.col(j) = cert.vanishing[j].v;
        cert.vanishing_rank = rank(m);
    }
    return cert;
}

ABResult general_ab(int N, FieldConfig cfg) {
    OrbClass M = m_naive(N, cfg), K = k_orb(N, cfg);
    auto basis = generator_basis(N, cfg);
    std::optional<Rat> a;
    for (const auto& g : basis) {
        Rat gm = pairing(g.dir, M);
        if (gm <= 0) throw std::logic_error("general_ab: generator not positive on M_naive");
        Rat bound = -pairing(g.dir, K) / gm;
        if (!a || bound > *a) a = bound;
    }
    OrbClass O = M * *a + K;
    ConeCertificate cert = eff_membership(O);
    if (cert.verdict != Verdict::Boundary) throw std::logic_error("general_ab: a*M+K is not on the boundary");
    return {*a, cert.vanishing_rank, O};
}

Rat a_invariant(int N, FieldConfig cfg) { return general_ab(N, cfg).a; }
int b_invariant(int N, FieldConfig cfg) { return general_ab(N, cfg).b; }

}  // namespace x0
