#include <catch2/catch_amalgamated.hpp>

#include "chevalley/minuscule.hpp"

using namespace chevalley;

TEST_CASE("orbit sizes match the classification table") {
    auto size = [](Family f, std::size_t n, std::size_t node) {
        const RootDatum rd = build_root_datum({f, n});
        return orbit(rd, node).size();
    };
    CHECK(size(Family::A, 3, 1) == 6);  // binom(4,2)
    CHECK(size(Family::A, 5, 2) == 20); // binom(6,3)
    CHECK(size(Family::B, 4, 0) == 16); // 2^4
    CHECK(size(Family::C, 4, 3) == 8);  // 2*4
    CHECK(size(Family::D, 5, 0) == 16); // 2^4
    CHECK(size(Family::D, 5, 4) == 10); // 2*5
    CHECK(size(Family::E, 6, 0) == 27);
    CHECK(size(Family::E, 6, 5) == 27);
    CHECK(size(Family::E, 7, 6) == 56);
}

TEST_CASE("non-minuscule nodes are rejected") {
    const RootDatum b3 = build_root_datum({Family::B, 3});
    CHECK_THROWS_AS(orbit(b3, 1), NotMinuscule);
    CHECK_THROWS_AS(orbit(b3, 2), NotMinuscule);
    const RootDatum e7 = build_root_datum({Family::E, 7});
    CHECK_THROWS_AS(orbit(e7, 0), NotMinuscule);
    CHECK_NOTHROW(orbit(e7, 6));
}

TEST_CASE("orbit weights pair to 0 or +-1 with every coroot") {
    const RootDatum rd = build_root_datum({Family::D, 4});
    for (std::size_t node : {std::size_t(0), std::size_t(1), std::size_t(3)})
        for (const Weight& w : orbit(rd, node))
            for (int c : w)
                CHECK((c == -1 || c == 0 || c == 1));
}

TEST_CASE("basis selection rules") {
    const RootDatum rd = build_root_datum({Family::D, 4});
    CHECK_THROWS_AS(build_basis(rd, {}), EmptySelection);
    CHECK_THROWS_AS(build_basis(rd, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_basis(rd, {2}), NotMinuscule);
    const WeightBasis both = build_basis(rd, {0, 1});
    CHECK(both.weights.size() == 16);
    CHECK(both.block_of.size() == 16);
    for (std::size_t k = 0; k < both.weights.size(); ++k)
        CHECK(both.index_of.at(both.weights[k]) == k);
}

TEST_CASE("basis rows sort by descending height then coordinates") {
    const RootDatum rd = build_root_datum({Family::A, 3});
    const WeightBasis basis = build_basis(rd, {1});
    for (std::size_t k = 1; k < basis.weights.size(); ++k) {
        const bool drop = basis.height[k - 1] > basis.height[k];
        const bool tie = basis.height[k - 1] == basis.height[k] &&
                         basis.weights[k - 1] < basis.weights[k];
        CHECK((drop || tie));
    }
    CHECK(basis.weights.front() == Weight{0, 1, 0});
}

TEST_CASE("block labels track the originating node") {
    const RootDatum rd = build_root_datum({Family::D, 5});
    const WeightBasis basis = build_basis(rd, {0, 1});
    std::size_t zero = 0, one = 0;
    for (std::size_t b : basis.block_of) {
        if (b == 0) ++zero;
        if (b == 1) ++one;
    }
    CHECK(zero == 16);
    CHECK(one == 16);
}

TEST_CASE("lattice reports") {
    SECTION("first node of A_n is simply connected") {
        const RootDatum rd = build_root_datum({Family::A, 4});
        const LatticeReport rep = lattice_report(rd, build_basis(rd, {0}));
        CHECK(rep.simply_connected);
        REQUIRE(rep.index_in_weight_lattice);
        CHECK(*rep.index_in_weight_lattice == 1);
        CHECK(rep.contains_all_roots);
    }
    SECTION("middle node of A3 has index two") {
        const RootDatum rd = build_root_datum({Family::A, 3});
        const LatticeReport rep = lattice_report(rd, build_basis(rd, {1}));
        CHECK_FALSE(rep.simply_connected);
        REQUIRE(rep.index_in_weight_lattice);
        CHECK(*rep.index_in_weight_lattice == 2);
    }
    SECTION("single spin orbit of D4 misses half the weight lattice") {
        const RootDatum rd = build_root_datum({Family::D, 4});
        const LatticeReport rep = lattice_report(rd, build_basis(rd, {0}));
        REQUIRE(rep.index_in_weight_lattice);
        CHECK(*rep.index_in_weight_lattice == 2);
    }
    SECTION("both spin orbits of D4 fill the weight lattice") {
        const RootDatum rd = build_root_datum({Family::D, 4});
        const LatticeReport rep = lattice_report(rd, build_basis(rd, {0, 1}));
        CHECK(rep.simply_connected);
    }
    SECTION("single spin orbit of D5 already fills the weight lattice") {
        const RootDatum rd = build_root_datum({Family::D, 5});
        const LatticeReport rep = lattice_report(rd, build_basis(rd, {0}));
        CHECK(rep.simply_connected);
    }
    SECTION("vector orbit of D5 has index two") {
        const RootDatum rd = build_root_datum({Family::D, 5});
        const LatticeReport rep = lattice_report(rd, build_basis(rd, {4}));
        REQUIRE(rep.index_in_weight_lattice);
        CHECK(*rep.index_in_weight_lattice == 2);
    }
}

TEST_CASE("orbits of the same node cannot be combined twice") {
    const RootDatum rd = build_root_datum({Family::E, 6});
    CHECK_THROWS_AS(build_basis(rd, {0, 0}), std::invalid_argument);
    CHECK_NOTHROW(build_basis(rd, {0, 5}));
}
