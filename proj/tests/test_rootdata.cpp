#include <catch2/catch_amalgamated.hpp>

#include "chevalley/rootdata.hpp"

using namespace chevalley;

TEST_CASE("cartan matrices match the diagram conventions") {
    SECTION("A2") {
        const CartanMatrix cm = cartan_matrix({Family::A, 2});
        CHECK(cm.a == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    }
    SECTION("B2 has the short first node") {
        const CartanMatrix cm = cartan_matrix({Family::B, 2});
        CHECK(cm.a[0][1] == -2);
        CHECK(cm.a[1][0] == -1);
    }
    SECTION("C2 is the transpose of B2") {
        const CartanMatrix b = cartan_matrix({Family::B, 2});
        const CartanMatrix c = cartan_matrix({Family::C, 2});
        CHECK(c.a[0][1] == b.a[1][0]);
        CHECK(c.a[1][0] == b.a[0][1]);
    }
    SECTION("D4 has a central node of degree three") {
        const CartanMatrix cm = cartan_matrix({Family::D, 4});
        int degree = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != 2 && cm.a[2][j] == -1) ++degree;
        CHECK(degree == 3);
        CHECK(cm.a[0][1] == 0);
    }
    SECTION("E6 bonds") {
        const CartanMatrix cm = cartan_matrix({Family::E, 6});
        auto bonded = [&](std::size_t i, std::size_t j) { return cm.a[i][j] == -1; };
        CHECK(bonded(0, 2));
        CHECK(bonded(2, 3));
        CHECK(bonded(3, 4));
        CHECK(bonded(4, 5));
        CHECK(bonded(1, 3));
        CHECK_FALSE(bonded(1, 2));
        CHECK_FALSE(bonded(0, 1));
    }
}

TEST_CASE("rank bounds are enforced") {
    CHECK_THROWS_AS(cartan_matrix({Family::B, 1}), RankOutOfRange);
    CHECK_THROWS_AS(cartan_matrix({Family::C, 1}), RankOutOfRange);
    CHECK_THROWS_AS(cartan_matrix({Family::D, 2}), RankOutOfRange);
    CHECK_THROWS_AS(cartan_matrix({Family::E, 5}), RankOutOfRange);
    CHECK_THROWS_AS(cartan_matrix({Family::E, 8}), RankOutOfRange);
    CHECK_THROWS_AS(cartan_matrix({Family::A, 0}), RankOutOfRange);
    CHECK_NOTHROW(cartan_matrix({Family::A, 1}));
    CHECK_NOTHROW(cartan_matrix({Family::E, 7}));
}

TEST_CASE("minuscule node lists") {
    CHECK(minuscule_nodes({Family::A, 4}) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(minuscule_nodes({Family::B, 3}) == std::vector<std::size_t>{0});
    CHECK(minuscule_nodes({Family::C, 3}) == std::vector<std::size_t>{2});
    CHECK(minuscule_nodes({Family::D, 5}) == std::vector<std::size_t>{0, 1, 4});
    CHECK(minuscule_nodes({Family::E, 6}) == std::vector<std::size_t>{0, 5});
    CHECK(minuscule_nodes({Family::E, 7}) == std::vector<std::size_t>{6});
}

TEST_CASE("simple reflections act on fundamental-weight coordinates") {
    const CartanMatrix cm = cartan_matrix({Family::A, 2});
    CHECK(simple_reflection(cm, 0, {1, 0}) == Weight{-1, 1});
    CHECK(simple_reflection(cm, 1, {-1, 1}) == Weight{0, -1});
    CHECK(simple_reflection(cm, 0, {0, 1}) == Weight{0, 1});
    const Weight w{2, -1};
    CHECK(simple_reflection(cm, 0, simple_reflection(cm, 0, w)) == w);
    CHECK_THROWS_AS(simple_reflection(cm, 2, {1, 0}), DimMismatch);
    CHECK_THROWS_AS(simple_reflection(cm, 0, {1, 0, 0}), DimMismatch);
}

TEST_CASE("positive root counts per family") {
    auto count = [](Family f, std::size_t n) {
        return build_root_datum({f, n}).positive_count;
    };
    CHECK(count(Family::A, 1) == 1);
    CHECK(count(Family::A, 4) == 10);
    CHECK(count(Family::B, 3) == 9);
    CHECK(count(Family::C, 4) == 16);
    CHECK(count(Family::D, 4) == 12);
    CHECK(count(Family::D, 5) == 20);
    CHECK(count(Family::E, 6) == 36);
    CHECK(count(Family::E, 7) == 63);
}

TEST_CASE("root storage pairs positives with negatives") {
    const RootDatum rd = build_root_datum({Family::B, 3});
    const std::size_t n = rd.positive_count;
    REQUIRE(rd.roots.size() == 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(rd.roots[k].positive);
        CHECK_FALSE(rd.roots[n + k].positive);
        Weight neg = rd.roots[k].weight;
        for (int& x : neg) x = -x;
        CHECK(rd.roots[n + k].weight == neg);
        CHECK(rd.roots[n + k].height == -rd.roots[k].height);
    }
    for (std::size_t k = 1; k < n; ++k) {
        const auto a = std::make_pair(rd.roots[k - 1].height, rd.roots[k - 1].weight);
        const auto b = std::make_pair(rd.roots[k].height, rd.roots[k].weight);
        CHECK(a < b);
    }
}

TEST_CASE("simple roots come first and carry empty words") {
    const RootDatum rd = build_root_datum({Family::A, 3});
    for (std::size_t j = 0; j < rd.cartan.rank; ++j) {
        bool found = false;
        for (const Root& r : rd.roots)
            if (r.positive && r.word.empty() && r.base == j) {
                found = true;
                CHECK(r.height == 1);
                std::vector<int> e(rd.cartan.rank, 0);
                e[j] = 1;
                CHECK(r.simple_expansion == e);
            }
        CHECK(found);
    }
}

TEST_CASE("pairings with coroots recover Cartan entries") {
    for (auto lt : {LieType{Family::A, 3}, LieType{Family::B, 3},
                    LieType{Family::C, 3}, LieType{Family::D, 4}}) {
        const RootDatum rd = build_root_datum(lt);
        const std::size_t n = rd.cartan.rank;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t idx = 0;
                for (std::size_t k = 0; k < rd.roots.size(); ++k) {
                    std::vector<int> e(n, 0);
                    e[j] = 1;
                    if (rd.roots[k].simple_expansion == e) idx = k;
                }
                CHECK(pairing_with_coroot(rd, rd.roots[idx], i) == rd.cartan.a[i][j]);
            }
    }
}

TEST_CASE("highest root of A2 pairs to one with both coroots") {
    const RootDatum rd = build_root_datum({Family::A, 2});
    const Root* high = nullptr;
    for (const Root& r : rd.roots)
        if (r.simple_expansion == std::vector<int>{1, 1}) high = &r;
    REQUIRE(high);
    CHECK(pairing_with_coroot(rd, *high, 0) == 1);
    CHECK(pairing_with_coroot(rd, *high, 1) == 1);
}

TEST_CASE("pairing matches the weight coordinate directly") {
    const RootDatum rd = build_root_datum({Family::D, 4});
    for (const Root& r : rd.roots)
        for (std::size_t i = 0; i < rd.cartan.rank; ++i)
            CHECK(pairing_with_coroot(rd, r, i) == r.weight[i]);
}

TEST_CASE("root sums follow the addition table") {
    const RootDatum rd = build_root_datum({Family::C, 3});
    for (const Root& p : rd.roots)
        for (const Root& q : rd.roots) {
            Weight s(p.weight.size());
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = p.weight[k] + q.weight[k];
            const auto found = root_sum(rd, p, q);
            const std::size_t idx = find_root_index(rd, s);
            if (found) {
                REQUIRE(idx != rd.roots.size());
                CHECK(found->weight == s);
            } else {
                CHECK(idx == rd.roots.size());
            }
        }
}

TEST_CASE("expansion coordinates invert the Cartan matrix") {
    const RootDatum rd = build_root_datum({Family::E, 6});
    for (const Root& r : rd.roots) {
        const auto coords = root_basis_expansion(rd, r.weight);
        for (std::size_t j = 0; j < coords.size(); ++j)
            CHECK(coords[j] == Rational(r.simple_expansion[j]));
        int h = 0;
        for (int c : r.simple_expansion) h += c;
        CHECK(r.height == h);
    }
}

TEST_CASE("words replay to the stored weight") {
    const RootDatum rd = build_root_datum({Family::B, 4});
    for (const Root& r : rd.roots) {
        std::vector<int> base(rd.cartan.rank, 0);
        base[r.base] = 1;
        std::vector<int> cur;
        for (int x : base) cur.push_back(r.positive ? x : -x);
        for (auto it = r.word.rbegin(); it != r.word.rend(); ++it)
            cur = simple_reflection(rd.cartan, *it, cur);
        CHECK(cur == r.weight);
    }
}
