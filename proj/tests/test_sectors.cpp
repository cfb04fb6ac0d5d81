#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "x0/levels.hpp"
#include "x0/nsorb.hpp"
#include "x0/sectors.hpp"

using namespace x0;

namespace {

const FieldConfig kConfigs[] = {{false, false}, {true, false}, {false, true}, {true, true}};

int expected_count(int N, FieldConfig cfg) {
    // untwisted + Half + two classes per K4 component + four per K6 component
    int c4 = epsilon2(N) == 0 ? 0 : (epsilon2(N) == 2 && cfg.has_i ? 2 : 1);
    int c6 = epsilon3(N) == 0 ? 0 : (epsilon3(N) == 2 && cfg.has_omega ? 2 : 1);
    return 2 + 2 * c4 + 4 * c6;
}

}  // namespace

TEST_CASE("sector counts and ages") {
    for (int N : supported_levels())
        for (auto cfg : kConfigs) {
            auto all = enumerate_sectors(N, cfg);
            REQUIRE(static_cast<int>(all.size()) == expected_count(N, cfg));
            CHECK(all[0].label.kind == SectorKind::Untwisted);
            CHECK(all[0].age == 0);
            CHECK(all[1].label.kind == SectorKind::Half);
            CHECK(all[1].age == 0);
            CHECK(all[1].push == Rat(1, 2));
            std::set<std::string> keys;
            for (const auto& s : all) {
                keys.insert(s.label.key());
                if (s.label.kind == SectorKind::K4) CHECK(s.age == frac(2 * s.label.zeta));
                if (s.label.kind == SectorKind::K6) CHECK(s.age == frac(4 * s.label.zeta));
                CHECK(pushforward(s) == s.push);
            }
            CHECK(keys.size() == all.size());
            CHECK(twisted_sectors(N, cfg).size() + 1 == all.size());
        }
}

TEST_CASE("labels come in zeta <-> 1 - zeta pairs on each component") {
    for (int N : supported_levels())
        for (auto cfg : kConfigs) {
            auto all = enumerate_sectors(N, cfg);
            for (const auto& s : all) {
                if (s.label.kind != SectorKind::K4 && s.label.kind != SectorKind::K6) continue;
                SectorLabel mirror = s.label;
                mirror.zeta = 1 - s.label.zeta;
                bool found = false;
                for (const auto& t : all) found = found || t.label == mirror;
                CHECK(found);
            }
        }
}

TEST_CASE("N=7 catalogue") {
    auto all = enumerate_sectors(7, {});
    REQUIRE(all.size() == 6);
    std::vector<std::string> keys, ages;
    for (const auto& s : all) {
        keys.push_back(s.label.key());
        ages.push_back(to_string(s.age));
    }
    CHECK(keys == std::vector<std::string>{"Untwisted", "Half", "K6:NonSplit:1/6", "K6:NonSplit:1/3",
                                           "K6:NonSplit:2/3", "K6:NonSplit:5/6"});
    CHECK(ages == std::vector<std::string>{"0", "0", "2/3", "1/3", "2/3", "1/3"});
}

TEST_CASE("field flags split the two-point components") {
    auto q = enumerate_sectors(5, {});
    auto i = enumerate_sectors(5, {true, false});
    CHECK(q.size() == 4);
    CHECK(i.size() == 6);
    std::set<Component> comps;
    for (const auto& s : i)
        if (s.label.kind == SectorKind::K4) comps.insert(s.label.component);
    CHECK(comps == std::set<Component>{Component::Plus, Component::Minus});
    // a single special point never splits
    CHECK(enumerate_sectors(2, {true, false}).size() == enumerate_sectors(2, {}).size());
}
