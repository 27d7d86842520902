#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "minuscule.hpp"

namespace chevalley {

// Raising, lowering and diagonal operators on the weight basis, as exact
// integer matrices. The datum pointer refers to caller-owned storage and
// must outlive the set.
struct LieGenSet {
    const RootDatum* datum = nullptr;
    WeightBasis basis;
    std::vector<SparseMatrix> e, f, h;

    std::size_t rank() const { return datum->cartan.rank; }
    std::size_t dim() const { return basis.weights.size(); }
};

inline LieGenSet chevalley_generators(const RootDatum& rd, const WeightBasis& basis) {
    LieGenSet g;
    g.datum = &rd;
    g.basis = basis;
    const RingHandle Z = RingHandle::integers();
    const std::size_t n = rd.cartan.rank;
    const std::size_t d = basis.weights.size();
    const RingValue one = RingValue::one(Z);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<SparseMatrix::Entry> te, tf, th;
        for (std::size_t k = 0; k < d; ++k) {
            const Weight& mu = basis.weights[k];
            const int c = mu[i];  // (mu, alpha_i^v)
            if (c == 0) continue;
            Weight shifted = mu;
            for (std::size_t r = 0; r < n; ++r) shifted[r] -= c * rd.cartan.a[r][i];
            auto it = basis.index_of.find(shifted);
            if (it == basis.index_of.end())
                throw std::logic_error("weight string leaves the basis");
            const auto row = static_cast<std::uint32_t>(it->second);
            const auto col = static_cast<std::uint32_t>(k);
            if (c == -1) te.push_back({row, col, one});
            else if (c == 1) tf.push_back({row, col, one});
            else throw std::logic_error("non-minuscule pairing in basis");
            th.push_back({col, col, RingValue::from_int(Z, c)});
        }
        g.e.push_back(SparseMatrix::from_triplets(d, Z, std::move(te)));
        g.f.push_back(SparseMatrix::from_triplets(d, Z, std::move(tf)));
        g.h.push_back(SparseMatrix::from_triplets(d, Z, std::move(th)));
    }
    return g;
}

// Monomial lift of the simple reflection at node i, over the integers.
// Only t = +-1 is meaningful here; ring-level lifts with general unit t
// live in the group layer.
inline SparseMatrix n_matrix(const LieGenSet& g, std::size_t i, int t = 1) {
    if (t != 1 && t != -1)
        throw std::invalid_argument("integer reflection lift takes t = +1 or -1");
    const RingHandle Z = RingHandle::integers();
    const RingValue tv = RingValue::from_int(Z, t);
    // (id + t e_i)(id - t^{-1} f_i)(id + t e_i); t is its own inverse
    SparseMatrix a = identity_plus(tv, g.e[i]);
    SparseMatrix b = identity_plus(-tv, g.f[i]);
    return a * b * a;
}

struct RelationReport {
    std::vector<std::pair<std::string, bool>> rows;

    void add(std::string name, bool ok) { rows.emplace_back(std::move(name), ok); }
    bool all_passed() const {
        for (const auto& [name, ok] : rows)
            if (!ok) return false;
        return true;
    }
};

namespace detail {

inline std::string node_tag(std::size_t i) { return std::to_string(i + 1); }

}  // namespace detail

// Exact matrix check of the defining relations among e_i, f_i, h_i:
// commuting independent h's, the h-eigenvalue relations with Cartan
// coefficients, the e/f coupling, and the nilpotency of repeated brackets.
inline RelationReport verify_serre(const LieGenSet& g) {
    RelationReport rep;
    const auto& a = g.datum->cartan.a;
    const std::size_t n = g.rank();
    const RingHandle Z = RingHandle::integers();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            rep.add("[h" + detail::node_tag(i) + ",h" + detail::node_tag(j) + "]=0",
                    commutator(g.h[i], g.h[j]).is_zero());

    {
        IntMatrix stack(n, std::vector<Int>(g.dim(), 0));
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& en : g.h[i].entries())
                stack[i][en.col] = en.value.integer_value();
        rep.add("h1..h" + std::to_string(n) + " independent",
                smith_normal_form(stack).rank() == n);
    }

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const int w = a[j][i];
            rep.add("[h" + detail::node_tag(j) + ",e" + detail::node_tag(i) + "]=(" +
                        std::to_string(w) + ")*e" + detail::node_tag(i),
                    commutator(g.h[j], g.e[i]) ==
                        g.e[i].scalar_mul(RingValue::from_int(Z, w)));
            rep.add("[h" + detail::node_tag(j) + ",f" + detail::node_tag(i) + "]=(" +
                        std::to_string(-w) + ")*f" + detail::node_tag(i),
                    commutator(g.h[j], g.f[i]) ==
                        g.f[i].scalar_mul(RingValue::from_int(Z, -w)));
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                rep.add("[e" + detail::node_tag(i) + ",f" + detail::node_tag(i) + "]=h" +
                            detail::node_tag(i),
                        commutator(g.e[i], g.f[i]) == g.h[i]);
            } else {
                rep.add("[e" + detail::node_tag(i) + ",f" + detail::node_tag(j) + "]=0",
                        commutator(g.e[i], g.f[j]).is_zero());
            }
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const int m = 1 - a[i][j];
            SparseMatrix ce = g.e[j], cf = g.f[j];
            for (int k = 0; k < m; ++k) {
                ce = commutator(g.e[i], ce);
                cf = commutator(g.f[i], cf);
            }
            rep.add("ad(e" + detail::node_tag(i) + ")^" + std::to_string(m) + "(e" +
                        detail::node_tag(j) + ")=0",
                    ce.is_zero());
            rep.add("ad(f" + detail::node_tag(i) + ")^" + std::to_string(m) + "(f" +
                        detail::node_tag(j) + ")=0",
                    cf.is_zero());
        }
    return rep;
}

// Order of the product of the two reflections, read off the bond.
inline std::size_t braid_order(const CartanMatrix& cm, std::size_t i, std::size_t j) {
    const int p = cm.a[i][j] * cm.a[j][i];
    if (p == 0) return 2;
    if (p == 1) return 3;
    if (p == 2) return 4;
    throw Unsupported("bond multiplicity out of range between nodes " +
                      detail::node_tag(i) + " and " + detail::node_tag(j));
}

inline bool verify_braid(const LieGenSet& g, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("braid check needs two distinct nodes");
    const std::size_t m = braid_order(g.datum->cartan, i, j);
    const SparseMatrix ni = n_matrix(g, i), nj = n_matrix(g, j);
    SparseMatrix lhs = SparseMatrix::identity(g.dim(), RingHandle::integers());
    SparseMatrix rhs = lhs;
    for (std::size_t k = 0; k < m; ++k) {
        lhs = lhs * (k % 2 == 0 ? ni : nj);
        rhs = rhs * (k % 2 == 0 ? nj : ni);
    }
    return lhs == rhs;
}

struct RootVector {
    Root root;
    SparseMatrix matrix;
};

// Conjugate the base generator along the root's defining word. The word is
// fixed by the datum, so the resulting sign is deterministic.
inline SparseMatrix root_vector_matrix(const LieGenSet& g, const Root& alpha) {
    SparseMatrix cur = g.e[alpha.base];
    for (std::size_t k = alpha.word.size(); k-- > 0;) {
        const std::size_t j = alpha.word[k];
        cur = n_matrix(g, j, 1) * cur * n_matrix(g, j, -1);
    }
    return cur;
}

inline RootVector root_vector(const LieGenSet& g, const Root& alpha) {
    return RootVector{alpha, root_vector_matrix(g, alpha)};
}

// One matrix per entry of datum->roots, in the same order.
inline std::vector<SparseMatrix> all_root_vectors(const LieGenSet& g) {
    std::vector<SparseMatrix> v;
    v.reserve(g.datum->roots.size());
    for (const Root& r : g.datum->roots) v.push_back(root_vector_matrix(g, r));
    return v;
}

// Signed integers in the product formulas of root vector pairs, keyed by
// index pairs into datum->roots. Pairs with beta = +-alpha are excluded.
struct StructureConstants {
    std::map<std::pair<std::size_t, std::size_t>, int> c;         // [e_a,e_b] = c e_{a+b}
    std::map<std::pair<std::size_t, std::size_t>, int> c_prime;   // e_b e_a e_b = c' e_{a+2b}
    std::map<std::pair<std::size_t, std::size_t>, int> c_dprime;  // e_a e_b e_a = c'' e_{2a+b}
};

namespace detail {

// Solve M = scalar * T where T has entries +-1; T must be nonzero.
inline int match_scalar(const SparseMatrix& M, const SparseMatrix& T,
                        const std::string& what) {
    if (T.entries().empty()) throw InconsistentConstant(what + ": zero target");
    const auto& lead = T.entries().front();
    const Int s = lead.value.integer_value();  // +-1
    const Int raw = M.at(lead.row, lead.col).integer_value() * s;
    if (raw < -1000000 || raw > 1000000)
        throw InconsistentConstant(what + ": scalar out of range");
    const int cval = static_cast<int>(raw);
    if (M != T.scalar_mul(RingValue::from_int(T.ring(), cval)))
        throw InconsistentConstant(what + ": product is not a scalar multiple");
    return cval;
}

}  // namespace detail

inline StructureConstants structure_constants(const LieGenSet& g) {
    const RootDatum& rd = *g.datum;
    const auto vecs = all_root_vectors(g);
    StructureConstants sc;
    const std::size_t count = rd.roots.size();
    for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t q = 0; q < count; ++q) {
            if (p == q) continue;
            const Root& a = rd.roots[p];
            const Root& b = rd.roots[q];
            bool opposite = true;
            for (std::size_t k = 0; k < a.weight.size(); ++k)
                if (a.weight[k] + b.weight[k] != 0) { opposite = false; break; }
            if (opposite) continue;
            auto at_combo = [&](int ma, int mb) -> std::optional<std::size_t> {
                Weight w(a.weight.size());
                for (std::size_t k = 0; k < w.size(); ++k)
                    w[k] = ma * a.weight[k] + mb * b.weight[k];
                return find_root_index(rd, w);
            };
            const auto key = std::make_pair(p, q);
            if (auto sum = at_combo(1, 1)) {
                sc.c[key] = detail::match_scalar(commutator(vecs[p], vecs[q]), vecs[*sum],
                                                 "bracket of roots " + std::to_string(p) +
                                                     "," + std::to_string(q));
            }
            if (auto sum2 = at_combo(1, 2)) {
                sc.c_prime[key] = detail::match_scalar(
                    vecs[q] * vecs[p] * vecs[q], vecs[*sum2],
                    "triple product of roots " + std::to_string(q) + "," +
                        std::to_string(p) + "," + std::to_string(q));
            }
            if (auto sum3 = at_combo(2, 1)) {
                sc.c_dprime[key] = detail::match_scalar(
                    vecs[p] * vecs[q] * vecs[p], vecs[*sum3],
                    "triple product of roots " + std::to_string(p) + "," +
                        std::to_string(q) + "," + std::to_string(p));
            }
        }
    }
    return sc;
}

// Dimension over the rationals of the smallest bracket-closed subspace
// containing every e_i and f_i. Grown by iterated brackets with the
// generators, which suffices because nested generator brackets span the
// generated subalgebra.
inline std::size_t lie_closure_dimension(const LieGenSet& g) {
    const std::size_t d = g.dim();
    using SparseVec = std::map<std::size_t, Rational>;
    std::map<std::size_t, SparseVec> rows;  // pivot coordinate -> unit-pivot row

    auto flatten = [&](const SparseMatrix& m) {
        SparseVec v;
        for (const auto& en : m.entries())
            v[std::size_t(en.row) * d + en.col] = Rational(en.value.integer_value());
        return v;
    };
    auto reduce_insert = [&](SparseVec v) {
        while (!v.empty()) {
            const std::size_t pivot = v.begin()->first;
            auto it = rows.find(pivot);
            if (it == rows.end()) {
                const Rational lead = v.begin()->second;
                for (auto& [k, val] : v) val /= lead;
                rows.emplace(pivot, std::move(v));
                return true;
            }
            const Rational f = v.begin()->second;
            for (const auto& [k, val] : it->second) {
                Rational upd = v.count(k) ? v[k] : Rational(0);
                upd -= f * val;
                if (upd == Rational(0)) v.erase(k);
                else v[k] = upd;
            }
        }
        return false;
    };

    std::vector<const SparseMatrix*> gens;
    for (const auto& m : g.e) gens.push_back(&m);
    for (const auto& m : g.f) gens.push_back(&m);

    std::vector<SparseMatrix> work;
    for (const SparseMatrix* m : gens)
        if (reduce_insert(flatten(*m))) work.push_back(*m);
    for (std::size_t k = 0; k < work.size(); ++k) {
        const SparseMatrix cur = work[k];
        for (const SparseMatrix* m : gens) {
            SparseMatrix br = commutator(*m, cur);
            if (reduce_insert(flatten(br))) work.push_back(std::move(br));
        }
    }
    return rows.size();
}

// n_i^{-1} h_j n_i = h_j - a[j][i] h_i, the reflection action on the
// diagonal subalgebra.
inline bool verify_cartan_conjugation(const LieGenSet& g, std::size_t i, std::size_t j) {
    const SparseMatrix ni = n_matrix(g, i, 1);
    const SparseMatrix ninv = n_matrix(g, i, -1);
    const int w = g.datum->cartan.a[j][i];
    const SparseMatrix lhs = ninv * g.h[j] * ni;
    const SparseMatrix rhs =
        g.h[j] - g.h[i].scalar_mul(RingValue::from_int(RingHandle::integers(), w));
    return lhs == rhs;
}

} // namespace chevalley
