#pragma once

#include <string>
#include <vector>

#include "x0/types.hpp"

namespace x0 {

struct FieldConfig {
    bool has_i = false;
    bool has_omega = false;
};

enum class SectorKind { Untwisted, Half, K4, K6 };
enum class Component { None, NonSplit, Plus, Minus };

std::string to_string(SectorKind k);
std::string to_string(Component c);

struct SectorLabel {
    SectorKind kind = SectorKind::Untwisted;
    Component component = Component::None;
    Rat zeta = 0;

    // Stable textual key, e.g. "Half", "K6:NonSplit:5/6", "K4:Plus:1/4".
    std::string key() const;
    bool operator==(const SectorLabel& o) const {
        return kind == o.kind && component == o.component && zeta == o.zeta;
    }
};

struct Sector {
    SectorLabel label;
    Rat age;
    Rat push;
};

// Number of closed components carrying K4 (m = 4) or K6 (m = 6) labels.
int component_count(int eps, bool flag);
std::vector<Component> components_for(int eps, bool flag);

// Canonical order: Untwisted, Half, K4 (component, zeta), K6 (component, zeta).
std::vector<Sector> enumerate_sectors(int N, FieldConfig cfg);
// Same list without the untwisted sector.
std::vector<Sector> twisted_sectors(int N, FieldConfig cfg);

Rat pushforward(const Sector& s);

}  // namespace x0
