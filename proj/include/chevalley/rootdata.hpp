#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smith.hpp"

namespace chevalley {

enum class Family { A, B, C, D, E };

struct LieType {
    Family family = Family::A;
    std::size_t rank = 1;

    bool operator==(const LieType& o) const {
        return family == o.family && rank == o.rank;
    }
};

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
    }
    return '?';
}

inline std::string type_name(const LieType& t) {
    return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

// Generalized Cartan matrix with the convention a[i][j] = (alpha_j, alpha_i^v).
// Node numbering (0-based): the A/B/C chains run 0,1,...,rank-1 with the
// short/long special bond of B and C between nodes 0 and 1; D has the two
// fork tips 0 and 1 joined to node 2 and the chain 2,3,...,rank-1; E6/E7
// have the chain 0,2,3,4,5(,6) with the extra node 1 joined to node 3.
struct CartanMatrix {
    std::size_t rank = 0;
    std::vector<std::vector<int>> a;
};

inline CartanMatrix cartan_matrix(const LieType& lt) {
    const std::size_t n = lt.rank;
    bool ok = true;
    switch (lt.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n == 6 || n == 7; break;
    }
    if (!ok) throw RankOutOfRange("no diagram of type " + type_name(lt));
    CartanMatrix cm;
    cm.rank = n;
    cm.a.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) cm.a[i][i] = 2;
    auto bond = [&](std::size_t i, std::size_t j) { cm.a[i][j] = cm.a[j][i] = -1; };
    switch (lt.family) {
        case Family::A:
            for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            for (std::size_t i = 1; i + 1 < n; ++i) bond(i, i + 1);
            cm.a[0][1] = -2;
            cm.a[1][0] = -1;
            break;
        case Family::C:
            for (std::size_t i = 1; i + 1 < n; ++i) bond(i, i + 1);
            cm.a[0][1] = -1;
            cm.a[1][0] = -2;
            break;
        case Family::D:
            bond(0, 2);
            bond(1, 2);
            for (std::size_t i = 2; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::E:
            bond(0, 2);
            bond(2, 3);
            bond(3, 4);
            bond(4, 5);
            if (n == 7) bond(5, 6);
            bond(1, 3);
            break;
    }
    return cm;
}

// Nodes whose fundamental weight has a Weyl orbit of full minuscule shape.
inline std::vector<std::size_t> minuscule_nodes(const LieType& lt) {
    cartan_matrix(lt);  // validates the (family, rank) pair
    const std::size_t n = lt.rank;
    switch (lt.family) {
        case Family::A: {
            std::vector<std::size_t> all(n);
            for (std::size_t i = 0; i < n; ++i) all[i] = i;
            return all;
        }
        case Family::B: return {0};
        case Family::C: return {n - 1};
        case Family::D: return {0, 1, n - 1};
        case Family::E: return n == 6 ? std::vector<std::size_t>{0, 5}
                                      : std::vector<std::size_t>{6};
    }
    return {};
}

// Coordinates in the fundamental-weight basis; entry i is the pairing
// with the simple coroot alpha_i^v.
using Weight = std::vector<int>;

inline Weight simple_reflection(const CartanMatrix& cm, std::size_t j, const Weight& mu) {
    if (j >= cm.rank || mu.size() != cm.rank)
        throw DimMismatch("simple_reflection: bad node or weight length");
    Weight v = mu;
    const int c = mu[j];
    if (c != 0)
        for (std::size_t i = 0; i < cm.rank; ++i) v[i] -= c * cm.a[i][j];
    return v;
}

struct Root {
    Weight weight;                   // fundamental-weight coordinates
    std::size_t base = 0;            // simple index the word is applied to
    std::vector<std::size_t> word;   // reflections, applied left to right
    bool positive = true;
    std::vector<int> simple_expansion;
    int height = 0;                  // coefficient sum of simple_expansion
};

struct RootDatum {
    LieType lie_type;
    CartanMatrix cartan;
    // Positive roots first, sorted by ascending (height, weight); then the
    // negative roots in the mirrored order, so roots[positive_count + k] is
    // the negative of roots[k].
    std::vector<Root> roots;
    std::size_t positive_count = 0;
    std::map<Weight, std::size_t> addition_table;  // weight -> index in roots
    std::vector<std::vector<Rational>> inverse_cartan;
};

inline Weight simple_reflection(const RootDatum& rd, std::size_t j, const Weight& mu) {
    return simple_reflection(rd.cartan, j, mu);
}

namespace detail {

inline std::size_t weight_orbit_size(const CartanMatrix& cm, const Weight& start) {
    std::set<Weight> seen{start};
    std::vector<Weight> frontier{start};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier)
            for (std::size_t j = 0; j < cm.rank; ++j) {
                if (w[j] == 0) continue;
                Weight v = simple_reflection(cm, j, w);
                if (seen.insert(v).second) next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * Int(n - i) / Int(i + 1);
    return static_cast<std::size_t>(r);
}

// Closed-form orbit sizes of the minuscule fundamental weights. These pin
// down the orientation of the asymmetric B/C bond: with the two off-diagonal
// entries swapped, the sizes come out wrong and construction aborts.
inline std::size_t expected_orbit_size(const LieType& lt, std::size_t node) {
    const std::size_t n = lt.rank;
    switch (lt.family) {
        case Family::A: return binomial(n + 1, node + 1);
        case Family::B: return std::size_t(1) << n;
        case Family::C: return 2 * n;
        case Family::D:
            return node + 1 == n ? 2 * n : (std::size_t(1) << (n - 1));
        case Family::E: return n == 6 ? 27 : 56;
    }
    return 0;
}

inline std::size_t expected_positive_count(const LieType& lt) {
    const std::size_t n = lt.rank;
    switch (lt.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : 63;
    }
    return 0;
}

} // namespace detail

inline RootDatum build_root_datum(const LieType& lt) {
    RootDatum rd;
    rd.lie_type = lt;
    rd.cartan = cartan_matrix(lt);
    const std::size_t n = lt.rank;

    // Breadth-first closure of the simple roots under all simple
    // reflections. The level of first discovery is the minimal word length;
    // among the candidate words of that length the lexicographically least
    // is kept, which makes every downstream sign choice deterministic.
    struct Rec {
        std::vector<std::size_t> word;
        std::size_t base;
        std::vector<int> expansion;
    };
    std::map<Weight, Rec> seen;
    std::vector<Weight> level;
    for (std::size_t j = 0; j < n; ++j) {
        Weight w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = rd.cartan.a[i][j];
        std::vector<int> e(n, 0);
        e[j] = 1;
        seen.emplace(w, Rec{{}, j, std::move(e)});
        level.push_back(std::move(w));
    }
    while (!level.empty()) {
        std::map<Weight, Rec> next;
        for (const Weight& w : level) {
            const Rec& rec = seen.at(w);
            for (std::size_t j = 0; j < n; ++j) {
                if (w[j] == 0) continue;
                Weight v = simple_reflection(rd.cartan, j, w);
                if (seen.count(v)) continue;
                Rec cand;
                cand.word.reserve(rec.word.size() + 1);
                cand.word.push_back(j);
                cand.word.insert(cand.word.end(), rec.word.begin(), rec.word.end());
                cand.base = rec.base;
                cand.expansion = rec.expansion;
                cand.expansion[j] -= w[j];
                auto it = next.find(v);
                if (it == next.end())
                    next.emplace(std::move(v), std::move(cand));
                else if (cand.word < it->second.word)
                    it->second = std::move(cand);
            }
        }
        level.clear();
        for (auto& [w, rec] : next) {
            level.push_back(w);
            seen.emplace(w, std::move(rec));
        }
    }

    std::vector<Root> pos;
    for (const auto& [w, rec] : seen) {
        int height = 0;
        bool nonneg = true, nonpos = true;
        for (int c : rec.expansion) {
            height += c;
            nonneg = nonneg && c >= 0;
            nonpos = nonpos && c <= 0;
        }
        if (nonneg == nonpos)
            throw std::logic_error("root expansion with mixed signs");
        if (nonneg) pos.push_back(Root{w, rec.base, rec.word, true, rec.expansion, height});
    }
    std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.weight < b.weight;
    });
    if (pos.size() != detail::expected_positive_count(lt))
        throw std::logic_error("positive root count off for " + type_name(lt));
    if (seen.size() != 2 * pos.size())
        throw std::logic_error("roots do not split into opposite pairs");

    rd.positive_count = pos.size();
    rd.roots = pos;
    for (const Root& r : pos) {
        Weight m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = -r.weight[i];
        const Rec& rec = seen.at(m);
        int height = 0;
        for (int c : rec.expansion) height += c;
        rd.roots.push_back(Root{m, rec.base, rec.word, false, rec.expansion, height});
    }
    for (std::size_t k = 0; k < rd.roots.size(); ++k)
        rd.addition_table[rd.roots[k].weight] = k;

    {
        IntMatrix A(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A[i][j] = rd.cartan.a[i][j];
        rd.inverse_cartan = solve_rational(A, int_identity(n));
    }

    if (n <= 8) {
        for (std::size_t node : minuscule_nodes(lt)) {
            Weight w(n, 0);
            w[node] = 1;
            if (detail::weight_orbit_size(rd.cartan, w) !=
                detail::expected_orbit_size(lt, node))
                throw std::logic_error("diagram self-check failed: orbit size at node " +
                                       std::to_string(node + 1) + " of " + type_name(lt));
        }
    }
    return rd;
}

inline std::optional<std::size_t> find_root_index(const RootDatum& rd, const Weight& w) {
    auto it = rd.addition_table.find(w);
    if (it == rd.addition_table.end()) return std::nullopt;
    return it->second;
}

// (mu, alpha^v), computed by walking the defining word of alpha backwards
// across mu and reading off the base coordinate. Left-to-right application
// of the stored word implements the inverse, since each factor is an
// involution and the word lists the outermost reflection first.
inline int pairing_with_coroot(const RootDatum& rd, const Weight& mu, const Root& alpha) {
    Weight v = mu;
    for (std::size_t j : alpha.word) v = simple_reflection(rd.cartan, j, v);
    return v[alpha.base];
}

inline std::optional<Root> root_sum(const RootDatum& rd, const Root& a, const Root& b) {
    Weight s(a.weight.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.weight[i] + b.weight[i];
    auto idx = find_root_index(rd, s);
    if (!idx) return std::nullopt;
    return rd.roots[*idx];
}

// Coordinates of mu in the simple-root basis, exact rationals.
inline std::vector<Rational> root_basis_expansion(const RootDatum& rd, const Weight& mu) {
    const std::size_t n = rd.cartan.rank;
    if (mu.size() != n) throw DimMismatch("weight length differs from rank");
    std::vector<Rational> r(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            r[j] += rd.inverse_cartan[j][i] * Rational(mu[i]);
    return r;
}

inline Rational weight_height(const RootDatum& rd, const Weight& mu) {
    Rational h(0);
    for (const Rational& c : root_basis_expansion(rd, mu)) h += c;
    return h;
}

} // namespace chevalley
