#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "chevgroup.hpp"

namespace chevalley {

// Serializable form of one named matrix: entry triplets plus enough
// metadata to rebuild the context it belongs to. Rows and columns are
// 0-based; node numbers follow the 1-based diagram labels used on the
// command line. Round-trips losslessly.
struct MatrixDocument {
    std::size_t dim = 0;
    std::string ring_spec;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> entries;
    std::vector<Weight> basis;
    std::string type;  // family letter
    std::size_t rank = 0;
    std::vector<std::size_t> nodes;  // 1-based
    std::string name;
    std::string parameter;
};

inline MatrixDocument make_document(const GroupContext& ctx, const std::string& name,
                                    const std::string& parameter,
                                    const SparseMatrix& m) {
    MatrixDocument doc;
    doc.dim = m.dim();
    doc.ring_spec = m.ring().spec();
    for (const auto& e : m.entries())
        doc.entries.emplace_back(e.row, e.col, e.value.to_string());
    doc.basis = ctx.gens.basis.weights;
    doc.type = std::string(1, family_letter(ctx.datum->lie_type.family));
    doc.rank = ctx.datum->lie_type.rank;
    for (std::size_t n : ctx.nodes) doc.nodes.push_back(n + 1);
    doc.name = name;
    doc.parameter = parameter;
    return doc;
}

inline nlohmann::ordered_json document_to_json(const MatrixDocument& doc) {
    nlohmann::ordered_json j;
    j["name"] = doc.name;
    j["parameter"] = doc.parameter;
    j["type"] = doc.type;
    j["rank"] = doc.rank;
    j["nodes"] = doc.nodes;
    j["ring"] = doc.ring_spec;
    j["dim"] = doc.dim;
    j["basis"] = doc.basis;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [r, c, v] : doc.entries)
        entries.push_back(nlohmann::ordered_json::array({r, c, v}));
    j["entries"] = std::move(entries);
    return j;
}

inline MatrixDocument document_from_json(const nlohmann::json& j) {
    MatrixDocument doc;
    try {
        doc.name = j.at("name").get<std::string>();
        doc.parameter = j.at("parameter").get<std::string>();
        doc.type = j.at("type").get<std::string>();
        doc.rank = j.at("rank").get<std::size_t>();
        doc.nodes = j.at("nodes").get<std::vector<std::size_t>>();
        doc.ring_spec = j.at("ring").get<std::string>();
        doc.dim = j.at("dim").get<std::size_t>();
        doc.basis = j.at("basis").get<std::vector<Weight>>();
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3)
                throw std::invalid_argument("entry is not a [row, col, value] triple");
            doc.entries.emplace_back(e.at(0).get<std::size_t>(),
                                     e.at(1).get<std::size_t>(),
                                     e.at(2).get<std::string>());
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed matrix document: ") + ex.what());
    }
    return doc;
}

inline SparseMatrix document_matrix(const MatrixDocument& doc) {
    const RingHandle ring = RingHandle::parse(doc.ring_spec);
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(doc.entries.size());
    for (const auto& [r, c, v] : doc.entries)
        triplets.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                            RingValue::parse(ring, v)});
    return SparseMatrix::from_triplets(doc.dim, ring, std::move(triplets));
}

} // namespace chevalley
