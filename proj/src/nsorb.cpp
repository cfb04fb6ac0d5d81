#include "x0/nsorb.hpp"

#include "x0/levels.hpp"

namespace x0 {

SectorSpace::SectorSpace(int N, FieldConfig cfg) : N_(N), cfg_(cfg), twisted_(twisted_sectors(N, cfg)) {}

int SectorSpace::index_of(const SectorLabel& l) const {
    for (size_t i = 0; i < twisted_.size(); ++i)
        if (twisted_[i].label == l) return static_cast<int>(i) + 1;
    throw DomainError("sector-set mismatch: no sector " + l.key() + " at level " + std::to_string(N_));
}

int SectorSpace::index_of(const std::string& key) const {
    if (key == "L") return 0;
    for (size_t i = 0; i < twisted_.size(); ++i)
        if (twisted_[i].label.key() == key) return static_cast<int>(i) + 1;
    throw DomainError("sector-set mismatch: no sector " + key + " at level " + std::to_string(N_));
}

Rat pairing(const DualVector& g, const OrbClass& x) {
    if (!g.space.same_as(x.space)) throw DomainError("sector-set mismatch");
    Rat s = 0;
    for (int i = 0; i < g.v.size(); ++i) s += g.v(i) * x.v(i);
    return s;
}

OrbClass m_naive(int N, FieldConfig cfg) {
    SectorSpace sp(N, cfg);
    OrbClass m(sp);
    m.L() = Rat(kappa(N), 2);
    for (size_t i = 0; i < sp.twisted().size(); ++i) m.v(1 + i) = 12 - 12 * sp.twisted()[i].push;
    return m;
}

OrbClass k_orb(int N, FieldConfig cfg) {
    SectorSpace sp(N, cfg);
    OrbClass k(sp);
    k.L() = deg_canonical(N);
    for (size_t i = 0; i < sp.twisted().size(); ++i) k.v(1 + i) = sp.twisted()[i].age - 1;
    return k;
}

std::vector<Rat> raising_anticanonical(int N, FieldConfig cfg) {
    Rat scale = Rat(24) * (1 - Rat(epsilon3(N), 3) - Rat(epsilon2(N), 4)) / Rat(kappa(N));
    std::vector<Rat> out;
    for (const auto& s : twisted_sectors(N, cfg)) out.push_back(scale * (1 - s.push));
    return out;
}

bool is_adequate(int N, FieldConfig cfg) {
    auto tw = twisted_sectors(N, cfg);
    auto c = raising_anticanonical(N, cfg);
    for (size_t i = 0; i < tw.size(); ++i)
        if (tw[i].age + c[i] < 1) return false;
    return true;
}

Rat adequate_a(int N) {
    return (1 - Rat(epsilon3(N), 3) - Rat(epsilon2(N), 4)) / Rat(kappa(N), 2);
}

int adequate_b(int N, FieldConfig cfg) {
    auto tw = twisted_sectors(N, cfg);
    auto c = raising_anticanonical(N, cfg);
    int b = 1;
    for (size_t i = 0; i < tw.size(); ++i)
        if (tw[i].age + c[i] == 1) ++b;
    return b;
}

}  // namespace x0
