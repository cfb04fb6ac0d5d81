#pragma once

#include <string>
#include <vector>

#include "x0/sectors.hpp"
#include "x0/types.hpp"

namespace x0 {

// deg of the Hodge bundle on the coarse j-line.
inline const Rat kDegLambda{1, 24};

// Coordinates of NS_orb(X0(N)) for a field configuration: index 0 is the
// degree coordinate, index 1 + i is twisted_sectors(N, cfg)[i].
class SectorSpace {
public:
    SectorSpace(int N, FieldConfig cfg);

    int level() const { return N_; }
    FieldConfig config() const { return cfg_; }
    const std::vector<Sector>& twisted() const { return twisted_; }
    int dim() const { return 1 + static_cast<int>(twisted_.size()); }
    int index_of(const SectorLabel& l) const;
    int index_of(const std::string& key) const;
    int half_index() const { return 1; }
    bool same_as(const SectorSpace& o) const {
        return N_ == o.N_ && cfg_.has_i == o.cfg_.has_i && cfg_.has_omega == o.cfg_.has_omega;
    }

private:
    int N_;
    FieldConfig cfg_;
    std::vector<Sector> twisted_;
};

// An element of NS_orb(X0(N)) (OrbClass) or of its dual (DualVector).
template <class Tag>
struct OrbVector {
    SectorSpace space;
    RVec v;

    explicit OrbVector(SectorSpace s) : space(std::move(s)), v(RVec::Zero(space.dim())) {}
    OrbVector(SectorSpace s, RVec values) : space(std::move(s)), v(std::move(values)) {}

    Rat& L() { return v(0); }
    const Rat& L() const { return v(0); }
    Rat& operator[](const std::string& key) { return v(space.index_of(key)); }
    const Rat& operator[](const std::string& key) const { return v(space.index_of(key)); }

    OrbVector operator+(const OrbVector& o) const {
        check(o);
        return OrbVector(space, RVec(v + o.v));
    }
    OrbVector operator-(const OrbVector& o) const {
        check(o);
        return OrbVector(space, RVec(v - o.v));
    }
    OrbVector operator*(const Rat& s) const { return OrbVector(space, RVec(v * s)); }
    bool operator==(const OrbVector& o) const { return space.same_as(o.space) && v == o.v; }

    void check(const OrbVector& o) const {
        if (!space.same_as(o.space)) throw DomainError("sector-set mismatch");
    }
};

struct OrbTag {};
struct DualTag {};
using OrbClass = OrbVector<OrbTag>;
using DualVector = OrbVector<DualTag>;

template <class Tag>
OrbVector<Tag> operator*(const Rat& s, const OrbVector<Tag>& x) {
    return x * s;
}

Rat pairing(const DualVector& g, const OrbClass& x);

OrbClass m_naive(int N, FieldConfig cfg);
OrbClass k_orb(int N, FieldConfig cfg);
// c(s) for each twisted sector, aligned with SectorSpace::twisted().
std::vector<Rat> raising_anticanonical(int N, FieldConfig cfg);

bool is_adequate(int N, FieldConfig cfg);
Rat adequate_a(int N);
int adequate_b(int N, FieldConfig cfg);

// Short text form "(L; key:value, ...)" used in messages and the CLI.
template <class Tag>
std::string describe(const OrbVector<Tag>& x) {
    std::string s = "(" + to_string(x.L()) + ";";
    for (size_t i = 0; i < x.space.twisted().size(); ++i) {
        s += (i ? ", " : " ") + x.space.twisted()[i].label.key() + ":" + to_string(x.v(1 + i));
    }
    return s + ")";
}

}  // namespace x0
