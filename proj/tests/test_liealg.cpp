#include <catch2/catch_amalgamated.hpp>

#include "chevalley/liealg.hpp"

using namespace chevalley;

static LieGenSet gens_for(Family f, std::size_t n, std::vector<std::size_t> nodes) {
    static std::map<std::tuple<Family, std::size_t, std::vector<std::size_t>>,
                    std::pair<RootDatum, WeightBasis>>
        cache;
    auto key = std::make_tuple(f, n, nodes);
    auto it = cache.find(key);
    if (it == cache.end()) {
        RootDatum rd = build_root_datum({f, n});
        WeightBasis basis = build_basis(rd, nodes);
        it = cache.emplace(key, std::make_pair(std::move(rd), std::move(basis))).first;
    }
    return chevalley_generators(it->second.first, it->second.second);
}

TEST_CASE("generator matrices have the triangular shapes") {
    const LieGenSet g = gens_for(Family::B, 3, {0});
    for (std::size_t i = 0; i < g.rank(); ++i) {
        CHECK(g.e[i].is_strictly_upper());
        CHECK(g.f[i].is_strictly_lower());
        CHECK(g.h[i].is_diagonal());
        CHECK(g.f[i] == g.e[i].transpose());
    }
}

TEST_CASE("defining relations hold for small instances") {
    for (auto [f, n, node] :
         std::vector<std::tuple<Family, std::size_t, std::size_t>>{
             {Family::A, 2, 0}, {Family::B, 2, 0}, {Family::C, 2, 1},
             {Family::D, 4, 0}, {Family::E, 6, 0}}) {
        const LieGenSet g = gens_for(f, n, {node});
        const RelationReport rep = verify_serre(g);
        INFO(type_name({f, n}) << " node " << node + 1);
        CHECK(rep.all_passed());
    }
}

TEST_CASE("rank-one reflection matrix over the integers") {
    const LieGenSet g = gens_for(Family::A, 1, {0});
    const SparseMatrix n1 = n_matrix(g, 0);
    CHECK(n1.at(0, 1) == RingValue::from_int(n1.ring(), 1));
    CHECK(n1.at(1, 0) == RingValue::from_int(n1.ring(), -1));
    CHECK(n1.at(0, 0).is_zero());
    CHECK(n1.at(1, 1).is_zero());
    CHECK(n1.is_monomial());
}

TEST_CASE("reflection matrices invert and have order dividing four") {
    const LieGenSet g = gens_for(Family::C, 3, {2});
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const SparseMatrix n = n_matrix(g, i, 1);
        const SparseMatrix ninv = n_matrix(g, i, -1);
        CHECK((n * ninv).is_identity());
        const SparseMatrix n2 = n * n;
        CHECK(n2.is_diagonal());
        CHECK((n2 * n2).is_identity());
    }
    CHECK_THROWS_AS(n_matrix(g, 0, 2), std::invalid_argument);
}

TEST_CASE("braid orders come from the Cartan matrix") {
    const CartanMatrix a2 = cartan_matrix({Family::A, 2});
    CHECK(braid_order(a2, 0, 1) == 3);
    const CartanMatrix b2 = cartan_matrix({Family::B, 2});
    CHECK(braid_order(b2, 0, 1) == 4);
    const CartanMatrix a3 = cartan_matrix({Family::A, 3});
    CHECK(braid_order(a3, 0, 2) == 2);
}

TEST_CASE("braid relations hold") {
    for (auto [f, n, node] :
         std::vector<std::tuple<Family, std::size_t, std::size_t>>{
             {Family::A, 3, 0}, {Family::B, 3, 0}, {Family::C, 3, 2},
             {Family::D, 4, 0}}) {
        const LieGenSet g = gens_for(f, n, {node});
        for (std::size_t i = 0; i < g.rank(); ++i)
            for (std::size_t j = i + 1; j < g.rank(); ++j) {
                INFO(type_name({f, n}) << " pair " << i + 1 << "," << j + 1);
                CHECK(verify_braid(g, i, j));
            }
    }
}

TEST_CASE("root vectors restrict to the expected weight shift") {
    const LieGenSet g = gens_for(Family::B, 3, {0});
    const RootDatum& rd = *g.datum;
    const auto vecs = all_root_vectors(g);
    REQUIRE(vecs.size() == rd.roots.size());
    for (std::size_t k = 0; k < vecs.size(); ++k) {
        const Root& r = rd.roots[k];
        CHECK(vecs[k].root.weight == r.weight);
        for (const auto& e : vecs[k].matrix.entries()) {
            const Weight& target = g.basis.weights[e.row];
            const Weight& source = g.basis.weights[e.col];
            for (std::size_t c = 0; c < r.weight.size(); ++c)
                CHECK(target[c] - source[c] == r.weight[c]);
            CHECK((e.value.to_string() == "1" || e.value.to_string() == "-1"));
        }
        CHECK((r.positive ? vecs[k].matrix.is_strictly_upper()
                          : vecs[k].matrix.is_strictly_lower()));
    }
}

TEST_CASE("structure constants stay within the allowed ranges") {
    for (auto [f, n, node] :
         std::vector<std::tuple<Family, std::size_t, std::size_t>>{
             {Family::A, 3, 0}, {Family::B, 2, 0}, {Family::C, 3, 2}}) {
        const LieGenSet g = gens_for(f, n, {node});
        const RootDatum& rd = *g.datum;
        const StructureConstants sc = structure_constants(g);
        for (const auto& [key, c] : sc.c) {
            const Root& a = rd.roots[key.first];
            const Root& b = rd.roots[key.second];
            CHECK((c == 1 || c == -1 || c == 2 || c == -2));
            Weight diff(a.weight.size());
            for (std::size_t k = 0; k < diff.size(); ++k)
                diff[k] = a.weight[k] - b.weight[k];
            const bool diff_is_root = find_root_index(rd, diff) != rd.roots.size();
            INFO(type_name({f, n}) << " pair " << key.first << "," << key.second);
            CHECK((c == 2 || c == -2) == diff_is_root);
        }
        for (const auto& [key, c] : sc.c_prime) CHECK((c == 1 || c == -1));
        for (const auto& [key, c] : sc.c_dprime) CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("closure dimension equals roots plus rank") {
    auto dim = [](Family f, std::size_t n, std::size_t node) {
        RootDatum rd = build_root_datum({f, n});
        WeightBasis basis = build_basis(rd, {node});
        return lie_closure_dimension(chevalley_generators(rd, basis));
    };
    CHECK(dim(Family::A, 1, 0) == 3);
    CHECK(dim(Family::A, 2, 0) == 8);
    CHECK(dim(Family::B, 2, 0) == 10);
    CHECK(dim(Family::C, 3, 2) == 21);
    CHECK(dim(Family::D, 4, 0) == 28);
}

TEST_CASE("reflection conjugation shifts the torus generators") {
    for (auto [f, n, node] :
         std::vector<std::tuple<Family, std::size_t, std::size_t>>{
             {Family::A, 2, 0}, {Family::B, 2, 0}, {Family::D, 4, 1}}) {
        const LieGenSet g = gens_for(f, n, {node});
        for (std::size_t i = 0; i < g.rank(); ++i)
            for (std::size_t j = 0; j < g.rank(); ++j) {
                INFO(type_name({f, n}) << " i=" << i + 1 << " j=" << j + 1);
                CHECK(verify_cartan_conjugation(g, i, j));
            }
    }
}
