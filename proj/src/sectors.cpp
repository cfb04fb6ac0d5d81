#include "x0/sectors.hpp"

#include "x0/levels.hpp"

namespace x0 {

std::string to_string(SectorKind k) {
    switch (k) {
        case SectorKind::Untwisted: return "Untwisted";
        case SectorKind::Half: return "Half";
        case SectorKind::K4: return "K4";
        case SectorKind::K6: return "K6";
    }
    return "?";
}

std::string to_string(Component c) {
    switch (c) {
        case Component::None: return "None";
        case Component::NonSplit: return "NonSplit";
        case Component::Plus: return "Plus";
        case Component::Minus: return "Minus";
    }
    return "?";
}

std::string SectorLabel::key() const {
    if (kind == SectorKind::Untwisted || kind == SectorKind::Half) return to_string(kind);
    return to_string(kind) + ":" + to_string(component) + ":" + to_string(zeta);
}

int component_count(int eps, bool flag) {
    if (eps == 0) return 0;
    if (eps == 2 && flag) return 2;
    return 1;
}

std::vector<Component> components_for(int eps, bool flag) {
    switch (component_count(eps, flag)) {
        case 0: return {};
        case 1: return {Component::NonSplit};
        default: return {Component::Plus, Component::Minus};
    }
}

std::vector<Sector> enumerate_sectors(int N, FieldConfig cfg) {
    require_supported(N);
    std::vector<Sector> out;
    out.push_back({{SectorKind::Untwisted, Component::None, 0}, 0, 0});
    out.push_back({{SectorKind::Half, Component::None, Rat(1, 2)}, 0, Rat(1, 2)});
    for (Component c : components_for(epsilon2(N), cfg.has_i)) {
        for (Rat z : {Rat(1, 4), Rat(3, 4)})
            out.push_back({{SectorKind::K4, c, z}, frac(2 * z), z});
    }
    for (Component c : components_for(epsilon3(N), cfg.has_omega)) {
        for (Rat z : {Rat(1, 6), Rat(1, 3), Rat(2, 3), Rat(5, 6)})
            out.push_back({{SectorKind::K6, c, z}, frac(4 * z), z});
    }
    return out;
}

std::vector<Sector> twisted_sectors(int N, FieldConfig cfg) {
    auto all = enumerate_sectors(N, cfg);
    all.erase(all.begin());
    return all;
}

Rat pushforward(const Sector& s) { return s.push; }

}  // namespace x0
