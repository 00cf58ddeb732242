#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/weyl.hpp"

using namespace exalg;

TEST_CASE("orbit sizes of the minuscule weights") {
    CHECK(weight_orbit(RootSystemData::parse("E7"), 7).size() == 56);
    CHECK(weight_orbit(RootSystemData::parse("E6"), 1).size() == 27);
    CHECK(weight_orbit(RootSystemData::parse("D6"), 1).size() == 12);
    CHECK(weight_orbit(RootSystemData::parse("A2"), 1).size() == 3);
    for (int p : {2, 3, 5})
        CHECK(weight_orbit(RootSystemData::make(RootSystemType::A, p - 1), 1).size() ==
              static_cast<std::size_t>(p));
}

TEST_CASE("pair orbit counts") {
    auto e7 = parabolic_pair_orbit_count(RootSystemData::parse("E7"), 7);
    CHECK(e7.orbits == 4);
    auto e6 = parabolic_pair_orbit_count(RootSystemData::parse("E6"), 1);
    CHECK(e6.orbits == 3);
    auto d6 = parabolic_pair_orbit_count(RootSystemData::parse("D6"), 1);
    CHECK(d6.orbits == 3);
    for (int p : {2, 3, 5}) {
        auto a = parabolic_pair_orbit_count(RootSystemData::make(RootSystemType::A, p - 1), 1);
        CHECK(a.orbits == 2);
    }
}

TEST_CASE("partition sums equal orbit sizes") {
    struct Case {
        const char* name;
        int node;
        std::size_t total;
    };
    for (auto [name, node, total] :
         {Case{"E7", 7, 56}, Case{"E6", 1, 27}, Case{"D6", 1, 12}, Case{"A4", 1, 5}}) {
        auto sys = RootSystemData::parse(name);
        auto pr = parabolic_pair_orbit_count(sys, node);
        std::size_t sum = 0;
        for (auto s : pr.orbit_sizes) sum += s;
        CHECK(sum == total);
        CHECK(sum == weight_orbit(sys, node).size());
    }
    // E7/P7: diagonal + open + two intermediate classes
    auto e7 = parabolic_pair_orbit_count(RootSystemData::parse("E7"), 7);
    REQUIRE(e7.orbit_sizes.size() == 4);
    CHECK(e7.orbit_sizes[0] == 27);
    CHECK(e7.orbit_sizes[1] == 27);
    CHECK(e7.orbit_sizes[2] == 1);
    CHECK(e7.orbit_sizes[3] == 1);
}

TEST_CASE("braid relations hold on the orbit") {
    for (const char* name : {"E7", "E6", "D6", "A4"}) {
        auto sys = RootSystemData::parse(name);
        auto orbit = weight_orbit(sys, 1);
        CHECK(braid_relations_hold(sys, orbit));
    }
    auto e7 = RootSystemData::parse("E7");
    CHECK(braid_relations_hold(e7, weight_orbit(e7, 7)));
}

TEST_CASE("orbit counts respect diagram automorphisms") {
    // A_n flip maps node k to n+1-k
    for (int n : {3, 4}) {
        auto a = RootSystemData::make(RootSystemType::A, n);
        CHECK(parabolic_pair_orbit_count(a, 1).orbits ==
              parabolic_pair_orbit_count(a, n).orbits);
    }
    // D6 swap of the fork nodes fixes node 1
    auto d6 = RootSystemData::parse("D6");
    CHECK(parabolic_pair_orbit_count(d6, 5).orbits == parabolic_pair_orbit_count(d6, 6).orbits);
    // E6 flip maps node 1 to node 6
    auto e6 = RootSystemData::parse("E6");
    CHECK(parabolic_pair_orbit_count(e6, 1).orbits == parabolic_pair_orbit_count(e6, 6).orbits);
}

TEST_CASE("weyl json output") {
    auto j = weyl_pairs_json(RootSystemData::parse("E7"), 7);
    CHECK(j.find("\"orbit_size\":56") != std::string::npos);
    CHECK(j.find("\"double_cosets\":4") != std::string::npos);
    CHECK(j == weyl_pairs_json(RootSystemData::parse("E7"), 7));
}

TEST_CASE("bad inputs are rejected") {
    CHECK_THROWS(RootSystemData::parse("B3"));
    CHECK_THROWS(RootSystemData::parse("E8"));
    CHECK_THROWS(weight_orbit(RootSystemData::parse("A2"), 5));
}
