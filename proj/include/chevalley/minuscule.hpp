#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rootdata.hpp"

namespace chevalley {

// Full Weyl orbit of the fundamental weight at the given node, as a
// canonically sorted list (BFS discovery order does not leak out).
inline std::vector<Weight> orbit(const RootDatum& rd, std::size_t node) {
    auto legal = minuscule_nodes(rd.lie_type);
    if (std::find(legal.begin(), legal.end(), node) == legal.end())
        throw NotMinuscule("node " + std::to_string(node + 1) + " of " +
                           type_name(rd.lie_type) + " has no minuscule weight");
    const std::size_t n = rd.cartan.rank;
    Weight start(n, 0);
    start[node] = 1;
    std::set<Weight> seen{start};
    std::vector<Weight> frontier{start};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier)
            for (std::size_t j = 0; j < n; ++j) {
                if (w[j] == 0) continue;
                Weight v = simple_reflection(rd.cartan, j, w);
                if (seen.insert(v).second) next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

// The ordered index set for all matrices built downstream. Weights are
// listed by strictly descending height with lexicographic tie-break, a
// linear extension of the dominance order, so raising operators are
// strictly upper triangular and lowering operators strictly lower.
struct WeightBasis {
    std::vector<Weight> weights;
    std::map<Weight, std::size_t> index_of;
    std::vector<std::size_t> block_of;  // generating node per weight
    std::vector<Rational> height;
};

inline WeightBasis build_basis(const RootDatum& rd, const std::vector<std::size_t>& nodes) {
    if (nodes.empty()) throw EmptySelection("no orbit nodes selected");
    for (std::size_t k = 0; k < nodes.size(); ++k)
        for (std::size_t l = k + 1; l < nodes.size(); ++l)
            if (nodes[k] == nodes[l])
                throw std::invalid_argument("node " + std::to_string(nodes[k] + 1) +
                                            " selected twice");
    struct Row {
        Weight w;
        std::size_t block;
        Rational height;
    };
    std::vector<Row> rows;
    for (std::size_t node : nodes)
        for (Weight& w : orbit(rd, node)) {
            Rational h = weight_height(rd, w);
            rows.push_back(Row{std::move(w), node, std::move(h)});
        }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.height != b.height) return a.height > b.height;
        return a.w < b.w;
    });
    WeightBasis basis;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (basis.index_of.count(rows[k].w))
            throw std::logic_error("orbits of the selected nodes overlap");
        basis.index_of[rows[k].w] = k;
        basis.weights.push_back(std::move(rows[k].w));
        basis.block_of.push_back(rows[k].block);
        basis.height.push_back(std::move(rows[k].height));
    }
    return basis;
}

struct LatticeReport {
    bool contains_all_roots = false;
    bool simply_connected = false;
    // [weight lattice : span of the basis weights], absent when the span
    // has lower rank (never the case for a union of minuscule orbits).
    std::optional<Int> index_in_weight_lattice;
};

inline LatticeReport lattice_report(const RootDatum& rd, const WeightBasis& basis) {
    const std::size_t n = rd.cartan.rank;
    IntMatrix W;
    W.reserve(basis.weights.size());
    for (const Weight& w : basis.weights) {
        std::vector<Int> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = w[i];
        W.push_back(std::move(row));
    }
    LatticeReport rep;
    rep.contains_all_roots = true;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> alpha(n);
        for (std::size_t i = 0; i < n; ++i) alpha[i] = rd.cartan.a[i][j];
        if (!in_row_lattice(W, alpha)) rep.contains_all_roots = false;
    }
    SmithForm S = smith_normal_form(W);
    auto inv = S.invariant_factors();
    if (inv.size() == n) {
        Int index = 1;
        for (const Int& d : inv) index *= d;
        rep.index_in_weight_lattice = index;
        rep.simply_connected = (index == 1);
    }
    return rep;
}

} // namespace chevalley
