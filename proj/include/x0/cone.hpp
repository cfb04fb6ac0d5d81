#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x0/nsorb.hpp"

namespace x0 {

struct RamClass {
    int m = 4;      // 4 or 6
    int e_mod = 0;  // ramification index mod m
    int g = 0;      // 1 if the double cover branches at the point

    Rat zeta() const;
    int min_weight() const { return e_mod == 0 ? m : e_mod; }
    bool operator==(const RamClass& o) const { return m == o.m && e_mod == o.e_mod && g == o.g; }
};

// All 2m classes for a given stabiliser order.
std::vector<RamClass> ram_classes(int m);

struct FiberPoint {
    long long weight = 1;
    RamClass cls;
};

using Fiber = std::vector<FiberPoint>;

struct RamProfile {
    long long d = 1;
    std::vector<Fiber> k4;  // one fiber per geometric point over j = 1728 with stabiliser mu4
    std::vector<Fiber> k6;  // one fiber per geometric point over j = 0 with stabiliser mu6
    long long extra_half = 0;
};

// Label of the component that the i-th geometric special point of order m lies on.
Component component_of_point(int N, FieldConfig cfg, int m, int i);
// Coordinate index hit by class r at a point of the given component; 0 for fillers.
int class_index(const SectorSpace& sp, const RamClass& r, Component c);

DualVector gamma_of_profile(int N, FieldConfig cfg, const RamProfile& P);

struct Generator {
    DualVector dir;
    std::optional<RamProfile> witness;  // absent for x_Half
};

std::vector<Generator> generator_basis(int N, FieldConfig cfg, long long D = 60);
bool same_directions(const std::vector<Generator>& a, const std::vector<Generator>& b);

enum class Verdict { Interior, Boundary, Outside };
std::string to_string(Verdict v);

struct ConeCertificate {
    Verdict verdict = Verdict::Interior;
    Rat packing_value;
    std::optional<DualVector> witness;   // Outside
    std::vector<DualVector> vanishing;   // Boundary: basis generators vanishing at O
    int vanishing_rank = 0;
};

Rat packing_value(const OrbClass& O);
ConeCertificate eff_membership(const OrbClass& O);

struct ABResult {
    Rat a;
    int b;
    OrbClass O;  // a * M_naive + K_orb
};

ABResult general_ab(int N, FieldConfig cfg);
Rat a_invariant(int N, FieldConfig cfg);
int b_invariant(int N, FieldConfig cfg);

}  // namespace x0
