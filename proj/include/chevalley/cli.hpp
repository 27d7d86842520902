#pragma once

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "document.hpp"

namespace chevalley {

// One parsed command-line job. Node numbers stay 1-based here; they are
// translated at the library boundary.
struct JobSpec {
    std::string command;
    std::string type;
    std::size_t rank = 0;
    std::size_t node = 0;
    std::vector<std::size_t> nodes;
    std::string ring_spec;
    std::string suite = "all";
    std::size_t cap = 100000;
    std::size_t draws = 100;
    unsigned seed = 8191;
    std::string in_path;
    std::string out_path;
    std::string format = "gap";
};

namespace cli_detail {

inline LieType resolve_type(const std::string& s, std::size_t rank) {
    if (s.empty()) throw std::invalid_argument("missing --type");
    Family fam;
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        case 'E': fam = Family::E; break;
        default: throw std::invalid_argument("unknown family '" + s + "'");
    }
    if (s.size() > 1) {
        for (std::size_t k = 1; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw std::invalid_argument("bad type '" + s + "'");
        const std::size_t embedded = std::stoul(s.substr(1));
        if (rank != 0 && rank != embedded)
            throw std::invalid_argument("--rank contradicts the rank in '" + s + "'");
        rank = embedded;
    }
    if (rank == 0) throw std::invalid_argument("missing --rank");
    return LieType{fam, rank};
}

inline std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& nodes) {
    std::vector<std::size_t> out;
    for (std::size_t n : nodes) {
        if (n == 0) throw std::invalid_argument("node numbers start at 1");
        out.push_back(n - 1);
    }
    return out;
}

// Sampling goes through rng() % k directly so that the byte stream of a
// run depends only on the seed, not on the standard library's
// distribution internals.
inline int small_int(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline RingValue random_value(const RingHandle& r, std::mt19937& rng) {
    switch (r.kind()) {
        case RingKind::Integers:
            return RingValue::from_int(r, small_int(rng, -9, 9));
        case RingKind::Rationals:
            return RingValue::rational(r, small_int(rng, -9, 9), small_int(rng, 1, 9));
        case RingKind::PrimeField:
        case RingKind::Modular: {
            unsigned long long m = r.modulus() > 1000000000
                                       ? 1000000000ull
                                       : r.modulus().convert_to<unsigned long long>();
            return RingValue::from_int(r, Int(rng() % m));
        }
        case RingKind::IntPolynomial: {
            RingValue v = RingValue::from_int(r, small_int(rng, -3, 3));
            for (std::size_t k = 0; k < 2 && k < r.vars().size(); ++k)
                v = v + RingValue::from_int(r, small_int(rng, -3, 3)) *
                            RingValue::variable(r, k);
            return v;
        }
    }
    return RingValue::zero(r);
}

inline RingValue random_unit(const RingHandle& r, std::mt19937& rng) {
    switch (r.kind()) {
        case RingKind::Integers:
        case RingKind::IntPolynomial:
            return RingValue::from_int(r, rng() % 2 ? 1 : -1);
        case RingKind::PrimeField: {
            unsigned long long m = (r.modulus() - 1).convert_to<unsigned long long>();
            return RingValue::from_int(r, Int(1 + rng() % m));
        }
        case RingKind::Rationals:
        case RingKind::Modular:
            for (int tries = 0; tries < 1000; ++tries) {
                RingValue v = random_value(r, rng);
                if (try_invert(v)) return v;
            }
            throw std::logic_error("failed to sample a unit");
    }
    return RingValue::one(r);
}

inline std::string root_label(const Root& root) {
    std::string s;
    for (std::size_t j = 0; j < root.simple_expansion.size(); ++j) {
        const int c = root.simple_expansion[j];
        if (c == 0) continue;
        if (!s.empty() && c > 0) s += "+";
        if (c == -1) s += "-";
        else if (c != 1) s += std::to_string(c) + "*";
        s += "a" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
}

using CheckRows = std::vector<std::pair<std::string, bool>>;

inline void print_table(std::ostream& out, const CheckRows& rows) {
    std::size_t width = 10;
    for (const auto& [name, ok] : rows) width = std::max(width, name.size());
    width = std::min<std::size_t>(width, 72);
    std::size_t failed = 0;
    for (const auto& [name, ok] : rows) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << name
            << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) ++failed;
    }
    if (failed == 0)
        out << "all " << rows.size() << " checks passed\n";
    else
        out << failed << " of " << rows.size() << " checks failed\n";
}

inline void suite_serre(CheckRows& rows, const LieGenSet& gens) {
    for (auto& row : verify_serre(gens).rows) rows.push_back(std::move(row));
}

inline void suite_braid(CheckRows& rows, const LieGenSet& gens) {
    const std::size_t n = gens.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t m = braid_order(gens.datum->cartan, i, j);
            rows.emplace_back("braid(n" + std::to_string(i + 1) + ",n" +
                                  std::to_string(j + 1) + ") length " + std::to_string(m),
                              verify_braid(gens, i, j));
        }
}

inline const char* case_word(CommutatorCase c) {
    switch (c) {
        case CommutatorCase::Commuting: return "commute";
        case CommutatorCase::Single: return "one factor";
        case CommutatorCase::DoubleBeta: return "two factors, u^2";
        case CommutatorCase::DoubleAlpha: return "two factors, t^2";
    }
    return "?";
}

inline void suite_commutator(CheckRows& rows, const RootDatum& rd,
                             const std::vector<std::size_t>& nodes0) {
    GroupContext pctx =
        make_group_context(rd, nodes0, RingHandle::polynomial({"t", "u"}));
    const StructureConstants sc = structure_constants(pctx.gens);
    for (std::size_t p = 0; p < rd.positive_count; ++p)
        for (std::size_t q = 0; q < rd.positive_count; ++q) {
            if (p == q) continue;
            const CommutatorReport rep = verify_commutator(pctx, sc, p, q);
            rows.emplace_back("conj x(" + root_label(rd.roots[p]) + ") by x(" +
                                  root_label(rd.roots[q]) + "): " + case_word(rep.kind),
                              rep.pass);
        }
}

inline void suite_torus(CheckRows& rows, const RootDatum& rd,
                        const std::vector<std::size_t>& nodes0, const RingHandle& ring,
                        unsigned seed, std::size_t draws) {
    GroupContext ctx = make_group_context(rd, nodes0, ring);
    std::mt19937 rng(seed);
    const std::size_t n = ctx.rank();
    const RingValue one = RingValue::one(ring);

    bool conj = true, norm = true, kernel = true, perfect = true;
    for (std::size_t d = 0; d < draws; ++d) {
        conj = conj && verify_torus_conjugation(ctx, rng() % n, rng() % rd.roots.size(),
                                                random_unit(ring, rng),
                                                random_value(ring, rng));
        norm = norm && verify_n_h_normalization(ctx, rng() % n, rng() % n,
                                                random_unit(ring, rng));
        std::vector<RingValue> ts;
        for (std::size_t i = 0; i < n; ++i) ts.push_back(random_unit(ring, rng));
        torus_kernel_test(ctx, ts);  // throws if the two criteria disagree
        perfect = perfect && perfectness_identity(ctx, rng() % n, random_unit(ring, rng),
                                                  random_value(ring, rng));
    }
    const std::string tag = " (" + std::to_string(draws) + " draws)";
    rows.emplace_back("torus conjugation of root subgroups" + tag, conj);
    rows.emplace_back("reflection lift renormalizes torus" + tag, norm);
    rows.emplace_back("torus kernel criteria agree" + tag, kernel);
    rows.emplace_back("torus commutator scaling" + tag, perfect);

    rows.emplace_back("h(1) is the identity", gen_h(ctx, 0, one).matrix.is_identity());
    rows.emplace_back("conjugation at t=1",
                      verify_torus_conjugation(ctx, 0, 0, one, random_value(ring, rng)));
    rows.emplace_back("kernel at all-ones parameters",
                      torus_kernel_test(ctx, std::vector<RingValue>(n, one)));
    rows.emplace_back("commutator scaling at t=1",
                      perfectness_identity(ctx, 0, one, random_value(ring, rng)));
    bool nsq = true;
    for (std::size_t i = 0; i < n; ++i) {
        const GroupElement nm = gen_n(ctx, i, one);
        nsq = nsq && nm.matrix * nm.matrix == gen_h(ctx, i, -one).matrix;
    }
    rows.emplace_back("square of the reflection lift is h(-1)", nsq);
}

inline void suite_weyl(CheckRows& rows, const RootDatum& rd,
                       const std::vector<std::size_t>& nodes0, std::size_t cap) {
    GroupContext ictx = make_group_context(rd, nodes0, RingHandle::integers());
    rows.emplace_back("reflection lifts have distinct entry patterns",
                      weyl_lift_check(ictx, cap));
}

struct NamedMatrix {
    std::string name;
    std::string parameter;
    SparseMatrix matrix;
};

inline std::vector<NamedMatrix> generator_set(const GroupContext& ctx,
                                              std::string& h_parameter) {
    const RingValue one = RingValue::one(ctx.ring);
    RingValue hval = -one;
    h_parameter = "-1";
    if (ctx.ring.kind() == RingKind::PrimeField) {
        const Int g = least_primitive_root(ctx.ring.modulus());
        hval = RingValue::from_int(ctx.ring, g);
        h_parameter = g.str();
    }
    std::vector<NamedMatrix> out;
    const std::size_t n = ctx.rank();
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({"x" + std::to_string(i + 1), "1", gen_x(ctx, i, one).matrix});
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({"y" + std::to_string(i + 1), "1", gen_y(ctx, i, one).matrix});
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({"n" + std::to_string(i + 1), "1", gen_n(ctx, i, one).matrix});
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({"h" + std::to_string(i + 1), h_parameter,
                       gen_h(ctx, i, hval).matrix});
    for (std::size_t k = 0; k < ctx.datum->positive_count; ++k)
        out.push_back({"xr" + std::to_string(k + 1), "1",
                       gen_x_root(ctx, k, one).matrix});
    return out;
}

inline nlohmann::ordered_json job_header(const LieType& lt,
                                         const std::vector<std::size_t>& nodes1) {
    nlohmann::ordered_json j;
    j["type"] = std::string(1, family_letter(lt.family));
    j["rank"] = lt.rank;
    j["nodes"] = nodes1;
    return j;
}

}  // namespace cli_detail

inline int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    (void)err;

    if (spec.command == "orbit") {
        const LieType lt = resolve_type(spec.type, spec.rank);
        const RootDatum rd = build_root_datum(lt);
        if (spec.node == 0) throw std::invalid_argument("node numbers start at 1");
        const WeightBasis basis = build_basis(rd, {spec.node - 1});
        nlohmann::ordered_json j;
        j["type"] = std::string(1, family_letter(lt.family));
        j["rank"] = lt.rank;
        j["node"] = spec.node;
        j["size"] = basis.weights.size();
        j["weights"] = basis.weights;
        out << j.dump(2) << "\n";
        return 0;
    }

    if (spec.command == "generators" || spec.command == "export") {
        const LieType lt = resolve_type(spec.type, spec.rank);
        const RootDatum rd = build_root_datum(lt);
        const auto nodes0 = to_zero_based(spec.nodes);
        const RingHandle ring = RingHandle::parse(spec.ring_spec);
        const GroupContext ctx = make_group_context(rd, nodes0, ring);
        std::string h_parameter;
        const auto mats = generator_set(ctx, h_parameter);

        if (spec.command == "generators") {
            nlohmann::ordered_json j = job_header(lt, spec.nodes);
            j["ring"] = ring.spec();
            j["dim"] = ctx.dim();
            j["h_parameter"] = h_parameter;
            nlohmann::ordered_json roots = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < rd.positive_count; ++k)
                roots.push_back(rd.roots[k].simple_expansion);
            j["positive_roots"] = std::move(roots);
            nlohmann::ordered_json docs = nlohmann::ordered_json::array();
            for (const auto& nm : mats)
                docs.push_back(
                    document_to_json(make_document(ctx, nm.name, nm.parameter, nm.matrix)));
            j["matrices"] = std::move(docs);
            out << j.dump(2) << "\n";
            return 0;
        }

        if (spec.format != "gap")
            throw std::invalid_argument("unknown export format '" + spec.format + "'");
        std::ofstream file;
        std::ostream* dst = &out;
        if (!spec.out_path.empty()) {
            file.open(spec.out_path);
            if (!file) throw std::invalid_argument("cannot write '" + spec.out_path + "'");
            dst = &file;
        }
        *dst << "# " << type_name(lt) << " nodes";
        for (std::size_t n : spec.nodes) *dst << " " << n;
        *dst << " ring " << ring.spec() << "\n";
        for (const auto& nm : mats) {
            *dst << nm.name << " := [";
            for (std::size_t r = 0; r < ctx.dim(); ++r) {
                *dst << (r ? "," : "") << "[";
                for (std::size_t c = 0; c < ctx.dim(); ++c)
                    *dst << (c ? "," : "") << nm.matrix.at(r, c).to_string();
                *dst << "]";
            }
            *dst << "];\n";
        }
        return 0;
    }

    if (spec.command == "verify") {
        const LieType lt = resolve_type(spec.type, spec.rank);
        const RootDatum rd = build_root_datum(lt);
        const auto nodes0 = to_zero_based(spec.nodes);
        const GroupContext ictx = make_group_context(rd, nodes0, RingHandle::integers());
        CheckRows rows;
        const bool all = spec.suite == "all";
        if (all || spec.suite == "serre") suite_serre(rows, ictx.gens);
        if (all || spec.suite == "braid") suite_braid(rows, ictx.gens);
        if (all || spec.suite == "commutator") suite_commutator(rows, rd, nodes0);
        if (all || spec.suite == "torus")
            suite_torus(rows, rd, nodes0, RingHandle::parse(spec.ring_spec), spec.seed,
                        spec.draws);
        if (all || spec.suite == "weyl") suite_weyl(rows, rd, nodes0, spec.cap);
        print_table(out, rows);
        for (const auto& [name, ok] : rows)
            if (!ok) return 1;
        return 0;
    }

    if (spec.command == "center") {
        const LieType lt = resolve_type(spec.type, spec.rank);
        const RootDatum rd = build_root_datum(lt);
        const auto nodes0 = to_zero_based(spec.nodes);
        const GroupContext ctx =
            make_group_context(rd, nodes0, RingHandle::parse(spec.ring_spec));
        const CenterDescription cd = center(ctx);
        nlohmann::ordered_json j = job_header(lt, spec.nodes);
        j["ring"] = ctx.ring.spec();
        j["order"] = cd.order.convert_to<unsigned long long>();
        nlohmann::ordered_json inv = nlohmann::ordered_json::array();
        for (const Int& d : cd.invariant_factors)
            inv.push_back(d.convert_to<unsigned long long>());
        j["invariant_factors"] = std::move(inv);
        j["unit_generator"] = cd.generator.str();
        nlohmann::ordered_json elems = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < cd.elements.size(); ++k) {
            nlohmann::ordered_json e;
            nlohmann::ordered_json par = nlohmann::ordered_json::array();
            for (const Int& x : cd.parameterizations[k])
                par.push_back(x.convert_to<unsigned long long>());
            e["parameterization"] = std::move(par);
            nlohmann::ordered_json diag = nlohmann::ordered_json::array();
            for (std::size_t r = 0; r < ctx.dim(); ++r)
                diag.push_back(cd.elements[k].matrix.at(r, r).to_string());
            e["diagonal"] = std::move(diag);
            elems.push_back(std::move(e));
        }
        j["elements"] = std::move(elems);
        out << j.dump(2) << "\n";
        return 0;
    }

    if (spec.command == "enumerate") {
        const LieType lt = resolve_type(spec.type, spec.rank);
        const RootDatum rd = build_root_datum(lt);
        const auto nodes0 = to_zero_based(spec.nodes);
        const GroupContext ctx =
            make_group_context(rd, nodes0, RingHandle::parse(spec.ring_spec));
        const EnumerationResult res = enumerate_group(ctx, spec.cap);
        nlohmann::ordered_json j = job_header(lt, spec.nodes);
        j["ring"] = ctx.ring.spec();
        j["cap"] = spec.cap;
        j["order"] = res.order;
        j["completed"] = res.completed;
        out << j.dump(2) << "\n";
        return res.completed ? 0 : 3;
    }

    if (spec.command == "factorize") {
        std::ifstream file(spec.in_path);
        if (!file) throw std::invalid_argument("cannot read '" + spec.in_path + "'");
        nlohmann::json parsed;
        try {
            file >> parsed;
        } catch (const nlohmann::json::exception& ex) {
            throw std::invalid_argument(std::string("bad document: ") + ex.what());
        }
        const MatrixDocument doc = document_from_json(parsed);
        const LieType lt = resolve_type(doc.type, doc.rank);
        const RootDatum rd = build_root_datum(lt);
        const auto nodes0 = to_zero_based(doc.nodes);
        const GroupContext ctx =
            make_group_context(rd, nodes0, RingHandle::parse(doc.ring_spec));
        const SparseMatrix m = document_matrix(doc);
        nlohmann::ordered_json j = job_header(lt, doc.nodes);
        j["ring"] = ctx.ring.spec();
        try {
            const auto coeffs = unipotent_factorize(ctx, m);
            j["factorized"] = true;
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                nlohmann::ordered_json c;
                c["root"] = rd.roots[k].simple_expansion;
                c["value"] = coeffs[k].to_string();
                list.push_back(std::move(c));
            }
            j["coefficients"] = std::move(list);
            out << j.dump(2) << "\n";
            return 0;
        } catch (const FactorizationFailed& ex) {
            j["factorized"] = false;
            j["error"] = ex.what();
            out << j.dump(2) << "\n";
            return 1;
        }
    }

    throw std::invalid_argument("unknown command '" + spec.command + "'");
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
    JobSpec spec;
    CLI::App app{"exact matrix groups on minuscule weight bases"};
    app.require_subcommand(1);

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", spec.type, "family letter, optionally with rank (A, E6)")
            ->required();
        cmd->add_option("--rank", spec.rank, "diagram rank");
    };
    auto add_nodes = [&](CLI::App* cmd) {
        cmd->add_option("--nodes", spec.nodes, "orbit nodes, 1-based")
            ->required()
            ->delimiter(',');
    };

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "list one weight orbit");
    add_type(orbit_cmd);
    orbit_cmd->add_option("--node", spec.node, "orbit node, 1-based")->required();

    CLI::App* gens_cmd =
        app.add_subcommand("generators", "emit the generator matrices as documents");
    add_type(gens_cmd);
    add_nodes(gens_cmd);
    gens_cmd->add_option("--ring", spec.ring_spec, "coefficient ring")
        ->default_val("int");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check defining relations, print a table");
    add_type(verify_cmd);
    add_nodes(verify_cmd);
    verify_cmd
        ->add_option("--suite", spec.suite, "serre, braid, commutator, torus, weyl or all")
        ->check(CLI::IsMember({"serre", "braid", "commutator", "torus", "weyl", "all"}))
        ->default_val("all");
    verify_cmd->add_option("--ring", spec.ring_spec, "ring for the torus draws")
        ->default_val("gfp:5");
    verify_cmd->add_option("--cap", spec.cap, "Weyl group size cap")
        ->default_val(100000);
    verify_cmd->add_option("--draws", spec.draws, "randomized draws per torus check")
        ->default_val(100);
    verify_cmd->add_option("--seed", spec.seed, "seed for the randomized draws")
        ->default_val(8191);

    CLI::App* center_cmd =
        app.add_subcommand("center", "diagonal elements commuting with the group");
    add_type(center_cmd);
    add_nodes(center_cmd);
    center_cmd->add_option("--ring", spec.ring_spec, "prime field, gfp:<p>")->required();

    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "count group elements by closure");
    add_type(enum_cmd);
    add_nodes(enum_cmd);
    enum_cmd->add_option("--ring", spec.ring_spec, "finite coefficient ring")->required();
    enum_cmd->add_option("--cap", spec.cap, "element cap")->default_val(100000);

    CLI::App* fact_cmd =
        app.add_subcommand("factorize", "peel an upper unitriangular matrix document");
    fact_cmd->add_option("--in", spec.in_path, "matrix document path")->required();

    CLI::App* export_cmd =
        app.add_subcommand("export", "write generator matrices as CAS assignments");
    add_type(export_cmd);
    add_nodes(export_cmd);
    export_cmd->add_option("--ring", spec.ring_spec, "coefficient ring")
        ->default_val("int");
    export_cmd->add_option("--format", spec.format, "output format (gap)")
        ->default_val("gap");
    export_cmd->add_option("--out", spec.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return 2;
    }
    spec.command = app.get_subcommands().front()->get_name();

    try {
        return run_job(spec, out, err);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace chevalley
