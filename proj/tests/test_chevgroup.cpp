#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chevalley/chevgroup.hpp"

using namespace chevalley;

namespace {

GroupContext context(Family f, std::size_t n, std::vector<std::size_t> nodes,
                     const RingHandle& ring) {
    static std::vector<std::unique_ptr<RootDatum>> keep;
    keep.push_back(std::make_unique<RootDatum>(build_root_datum({f, n})));
    return make_group_context(*keep.back(), nodes, ring);
}

RingValue rv(const RingHandle& r, long long v) { return RingValue::from_int(r, v); }

}  // namespace

TEST_CASE("one-parameter subgroup laws") {
    const GroupContext ctx = context(Family::A, 2, {0}, RingHandle::prime_field(7));
    const RingHandle& r = ctx.ring;
    for (std::size_t i = 0; i < ctx.rank(); ++i) {
        CHECK(gen_x(ctx, i, rv(r, 3)).matrix * gen_x(ctx, i, rv(r, 6)).matrix ==
              gen_x(ctx, i, rv(r, 2)).matrix);
        CHECK(gen_y(ctx, i, rv(r, 4)).matrix * gen_y(ctx, i, rv(r, 4)).matrix ==
              gen_y(ctx, i, rv(r, 1)).matrix);
        CHECK(gen_h(ctx, i, rv(r, 2)).matrix * gen_h(ctx, i, rv(r, 3)).matrix ==
              gen_h(ctx, i, rv(r, 6)).matrix);
        const GroupElement n = gen_n(ctx, i, rv(r, 2));
        CHECK(n.inverse == gen_n(ctx, i, rv(r, -2)).matrix);
        CHECK((n.matrix * n.inverse).is_identity());
    }
}

TEST_CASE("group elements carry verified inverses") {
    const GroupContext ctx = context(Family::B, 2, {0}, RingHandle::integers());
    const RingHandle& r = ctx.ring;
    GroupElement g = gen_x(ctx, 0, rv(r, 2)) * gen_y(ctx, 1, rv(r, -1)) *
                     gen_n(ctx, 0, rv(r, 1));
    CHECK((g.matrix * g.inverse).is_identity());
    CHECK((g.inverse * g.matrix).is_identity());
}

TEST_CASE("reflection lifts need unit parameters") {
    const GroupContext ctx = context(Family::A, 1, {0}, RingHandle::integers());
    CHECK_THROWS_AS(gen_n(ctx, 0, rv(ctx.ring, 2)), NonUnit);
    CHECK_THROWS_AS(gen_h(ctx, 0, rv(ctx.ring, 0)), NonUnit);
    CHECK_NOTHROW(gen_n(ctx, 0, rv(ctx.ring, -1)));
}

TEST_CASE("parameters must come from the context ring") {
    const GroupContext ctx = context(Family::A, 1, {0}, RingHandle::prime_field(5));
    CHECK_THROWS_AS(gen_x(ctx, 0, RingValue::from_int(RingHandle::integers(), 1)),
                    RingMismatch);
    CHECK_THROWS_AS(gen_x(ctx, 2, rv(ctx.ring, 1)), std::invalid_argument);
}

TEST_CASE("root subgroups by root index and by root") {
    const GroupContext ctx = context(Family::A, 2, {0}, RingHandle::integers());
    const RootDatum& rd = *ctx.datum;
    for (std::size_t k = 0; k < rd.roots.size(); ++k) {
        const GroupElement g = gen_x_root(ctx, k, rv(ctx.ring, 1));
        CHECK((rd.roots[k].positive ? g.matrix.is_upper_unitriangular()
                                    : g.matrix.is_lower_unitriangular()));
        CHECK(gen_x_root(ctx, rd.roots[k], rv(ctx.ring, 1)).matrix == g.matrix);
    }
}

TEST_CASE("commutator verification requires the polynomial ring") {
    const GroupContext ctx = context(Family::A, 2, {0}, RingHandle::prime_field(5));
    StructureConstants sc;
    CHECK_THROWS_AS(verify_commutator(ctx, sc, 0, 1), Unsupported);
}

TEST_CASE("commutator case census for small types") {
    struct Census {
        Family f;
        std::size_t n, node;
        std::size_t commuting, single, double_beta, double_alpha;
    };
    for (const Census c : {Census{Family::B, 2, 0, 8, 2, 1, 1},
                           Census{Family::C, 2, 1, 8, 2, 1, 1},
                           Census{Family::A, 3, 0, 22, 8, 0, 0},
                           Census{Family::C, 3, 2, 52, 14, 3, 3}}) {
        const GroupContext ctx =
            context(c.f, c.n, {c.node}, RingHandle::polynomial({"t", "u"}));
        const StructureConstants sc = structure_constants(ctx.gens);
        std::map<CommutatorCase, std::size_t> seen;
        for (std::size_t p = 0; p < ctx.datum->positive_count; ++p)
            for (std::size_t q = 0; q < ctx.datum->positive_count; ++q) {
                if (p == q) continue;
                const CommutatorReport rep = verify_commutator(ctx, sc, p, q);
                INFO(type_name({c.f, c.n}) << " roots " << p << "," << q);
                CHECK(rep.pass);
                ++seen[rep.kind];
            }
        CHECK(seen[CommutatorCase::Commuting] == c.commuting);
        CHECK(seen[CommutatorCase::Single] == c.single);
        CHECK(seen[CommutatorCase::DoubleBeta] == c.double_beta);
        CHECK(seen[CommutatorCase::DoubleAlpha] == c.double_alpha);
    }
}

TEST_CASE("torus conjugation scales root subgroups by a character") {
    const GroupContext ctx = context(Family::C, 2, {1}, RingHandle::prime_field(7));
    for (std::size_t i = 0; i < ctx.rank(); ++i)
        for (std::size_t k = 0; k < ctx.datum->roots.size(); ++k)
            CHECK(verify_torus_conjugation(ctx, i, k, rv(ctx.ring, 3), rv(ctx.ring, 5)));
}

TEST_CASE("reflection lifts renormalize the torus") {
    const GroupContext ctx = context(Family::B, 3, {0}, RingHandle::prime_field(5));
    for (std::size_t i = 0; i < ctx.rank(); ++i)
        for (std::size_t j = 0; j < ctx.rank(); ++j)
            CHECK(verify_n_h_normalization(ctx, i, j, rv(ctx.ring, 2)));
}

TEST_CASE("torus kernel criterion on the vector orbit of D4") {
    const GroupContext ctx = context(Family::D, 4, {3}, RingHandle::prime_field(5));
    const RingHandle& r = ctx.ring;
    // h_1(4) h_2(4) acts trivially on this orbit though the parameters are not 1
    CHECK(torus_kernel_test(ctx, {rv(r, 4), rv(r, 4), rv(r, 1), rv(r, 1)}));
    CHECK(torus_kernel_test(ctx, {rv(r, 1), rv(r, 1), rv(r, 1), rv(r, 1)}));
    CHECK_FALSE(torus_kernel_test(ctx, {rv(r, 2), rv(r, 1), rv(r, 1), rv(r, 1)}));
    CHECK_THROWS_AS(torus_kernel_test(ctx, {rv(r, 0), rv(r, 1), rv(r, 1), rv(r, 1)}),
                    NonUnit);
}

TEST_CASE("perfectness identity") {
    const GroupContext ctx = context(Family::A, 2, {0}, RingHandle::prime_field(5));
    const RingHandle& r = ctx.ring;
    CHECK(perfectness_identity(ctx, 0, rv(r, 2), rv(r, 1)));
    const GroupElement h = gen_h(ctx, 0, rv(r, 2));
    const GroupElement x = gen_x(ctx, 0, rv(r, 1));
    const SparseMatrix lhs = h.matrix * x.matrix * h.inverse * x.inverse;
    CHECK(lhs == gen_x(ctx, 0, rv(r, 3)).matrix);
}

TEST_CASE("centers over small prime fields") {
    SECTION("rank one over gfp:3") {
        const GroupContext ctx = context(Family::A, 1, {0}, RingHandle::prime_field(3));
        const CenterDescription cd = center(ctx);
        CHECK(cd.order == 2);
        CHECK(cd.invariant_factors == std::vector<Int>{2});
    }
    SECTION("rank one over gfp:2 is centerless") {
        const GroupContext ctx = context(Family::A, 1, {0}, RingHandle::prime_field(2));
        const CenterDescription cd = center(ctx);
        CHECK(cd.order == 1);
        CHECK(cd.invariant_factors.empty());
    }
    SECTION("full spin context of D4 over gfp:5") {
        const GroupContext ctx =
            context(Family::D, 4, {0, 1}, RingHandle::prime_field(5));
        const CenterDescription cd = center(ctx);
        CHECK(cd.order == 4);
        CHECK(cd.invariant_factors == std::vector<Int>{2, 2});
        for (const GroupElement& z : cd.elements) CHECK(z.matrix.is_diagonal());
    }
    SECTION("other rings are rejected") {
        const GroupContext ctx = context(Family::A, 1, {0}, RingHandle::integers());
        CHECK_THROWS_AS(center(ctx), Unsupported);
    }
}

TEST_CASE("unipotent factorization round-trips and rejects junk") {
    const GroupContext ctx = context(Family::A, 3, {0}, RingHandle::prime_field(7));
    const std::size_t n = ctx.datum->positive_count;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RingValue> coeffs;
        for (std::size_t k = 0; k < n; ++k)
            coeffs.push_back(rv(ctx.ring, static_cast<long long>(rng() % 7)));
        const GroupElement g = unipotent_product(ctx, coeffs);
        CHECK(unipotent_factorize(ctx, g.matrix) == coeffs);
    }
    CHECK_THROWS_AS(unipotent_factorize(ctx, gen_y(ctx, 0, rv(ctx.ring, 1)).matrix),
                    NotUnipotent);
    CHECK_THROWS_AS(unipotent_product(ctx, std::vector<RingValue>(n - 1,
                                                                  rv(ctx.ring, 1))),
                    DimMismatch);
}

TEST_CASE("factorization failure reports unreachable unipotents") {
    // On the vector orbit of D4 the root subgroups only reach a proper
    // subvariety of the full upper unitriangular group.
    const GroupContext ctx = context(Family::D, 4, {3}, RingHandle::prime_field(5));
    std::vector<SparseMatrix::Entry> es;
    for (std::uint32_t k = 0; k < ctx.dim(); ++k)
        es.push_back({k, k, RingValue::one(ctx.ring)});
    es.push_back({0, 1, RingValue::one(ctx.ring)});
    const SparseMatrix probe = SparseMatrix::from_triplets(ctx.dim(), ctx.ring, es);
    try {
        const auto coeffs = unipotent_factorize(ctx, probe);
        CHECK(unipotent_product(ctx, coeffs).matrix == probe);
    } catch (const FactorizationFailed&) {
        SUCCEED("probe lies outside the unipotent subgroup");
    }
}

TEST_CASE("weyl lift patterns are distinct") {
    const GroupContext a2 = context(Family::A, 2, {0}, RingHandle::integers());
    CHECK(weyl_lift_check(a2, 100000));
    const GroupContext d4 = context(Family::D, 4, {0}, RingHandle::integers());
    CHECK(weyl_lift_check(d4, 100000));
    CHECK_THROWS_AS(weyl_lift_check(d4, 10), CapExceeded);
    const GroupContext f5 = context(Family::A, 1, {0}, RingHandle::prime_field(5));
    CHECK_THROWS_AS(weyl_lift_check(f5, 100), Unsupported);
}

TEST_CASE("group enumeration agrees with the order formula") {
    auto order = [](Family f, std::size_t n, std::size_t node, long long p) {
        const GroupContext ctx = context(f, n, {node}, RingHandle::prime_field(p));
        const EnumerationResult res = enumerate_group(ctx, 200000);
        REQUIRE(res.completed);
        return res.order;
    };
    CHECK(order(Family::A, 1, 0, 2) == 6);
    CHECK(order(Family::A, 1, 0, 3) == 24);
    CHECK(order(Family::A, 2, 0, 2) == 168);
    CHECK(order(Family::C, 2, 1, 2) == 720);
    SECTION("cap stops the walk") {
        const GroupContext ctx = context(Family::A, 2, {0}, RingHandle::prime_field(3));
        const EnumerationResult res = enumerate_group(ctx, 100);
        CHECK_FALSE(res.completed);
        CHECK(res.order >= 100);
    }
    SECTION("infinite rings are rejected") {
        const GroupContext ctx = context(Family::A, 1, {0}, RingHandle::integers());
        CHECK_THROWS_AS(enumerate_group(ctx, 10), Unsupported);
    }
}
