// braidword — command-line front end for the braidword library.
//
// Subcommands operate on .bmc diagram files ("-" reads standard input):
//   check       parse and type-check a diagram (oriented or unoriented)
//   invariants  report writhe, turning number, components, cap/cup cycle
//   render      draw a diagram as ASCII art
//   orient      orient an unoriented closed knot diagram
//   bridge      rewrite a closed diagram into bridge position
//   equiv       search for a rewrite path between two diagrams
//   reduce      emit a word-problem instance (lhs/rhs pair plus manifest)
//   braid equal decide equality of two braid words
//   oracle      evaluate the normalized bracket invariant
//
// Exit codes: 0 success (or "equal"), 1 usage/parse/type error,
// 3 inconclusive search, 4 definite braid inequality.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidword/bracket.hpp"
#include "braidword/braid.hpp"
#include "braidword/config.hpp"
#include "braidword/construct.hpp"
#include "braidword/core.hpp"
#include "braidword/invariants.hpp"
#include "braidword/parse.hpp"
#include "braidword/render.hpp"
#include "braidword/rewrite.hpp"
#include "braidword/strands.hpp"

namespace {

using nlohmann::json;

// Loads an oriented diagram; falls back to orienting an unoriented source
// when the file uses bare cap/cup tokens.
braidword::Diagram load_oriented_any(const std::string& path) {
    const std::string text = braidword::detail::read_source(path);
    try {
        return braidword::parse_diagram(text);
    } catch (const braidword::ParseError&) {
        try {
            return braidword::orient(braidword::parse_unoriented(text));
        } catch (const braidword::DiagramError&) {
            throw;  // report the unoriented-path failure; it is the closer diagnosis
        }
    }
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json cycle_json(const braidword::InvariantReport& r) {
    if (!r.is_knot) return nullptr;
    json arr = json::array();
    for (braidword::SliceKind k : r.cycle.turns()) arr.push_back(braidword::kind_name(k));
    return arr;
}

json invariant_terms_json(const braidword::LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [exp, coeff] : p.terms()) arr.push_back(json::array({exp, coeff}));
    return arr;
}

std::string invariant_terms_str(const braidword::LaurentPoly& p) {
    if (p.is_zero()) return "0:0";
    std::string out;
    for (const auto& [exp, coeff] : p.terms()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(exp) + ":" + std::to_string(coeff);
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw braidword::DiagramError("cannot write '" + path + "'");
    out << content;
    if (!out) throw braidword::DiagramError("write failed for '" + path + "'");
}

struct Options {
    braidword::Config cfg;
    bool json_out() const { return cfg.output == "json"; }
};

int run_check(const Options& opt, const std::string& path) {
    const std::string text = braidword::detail::read_source(path);
    std::string flavor;
    std::size_t slices = 0;
    bool closed = true;
    try {
        const braidword::Diagram d = braidword::parse_diagram(text);
        static_cast<void>(braidword::typecheck(d));
        flavor = "oriented";
        slices = d.slices.size();
        closed = braidword::is_closed(d);
    } catch (const braidword::ParseError&) {
        const braidword::UnorientedDiagram u = braidword::parse_unoriented(text);
        static_cast<void>(braidword::component_count(u));  // validates offsets and widths
        flavor = "unoriented";
        slices = u.slices.size();
    }
    if (opt.json_out()) {
        emit_json({{"ok", true}, {"format", flavor}, {"slices", slices}, {"closed", closed}});
    } else {
        std::cout << "ok: " << flavor << " diagram, " << slices << " slice"
                  << (slices == 1 ? "" : "s") << (closed ? ", closed" : ", open") << "\n";
    }
    return 0;
}

int run_invariants(const Options& opt, const std::string& path) {
    const braidword::Diagram d = load_oriented_any(path);
    const braidword::InvariantReport r = braidword::invariant_report(d);
    if (opt.json_out()) {
        emit_json({{"writhe", r.writhe},
                   {"turning", r.turning},
                   {"components", r.components},
                   {"cycle", cycle_json(r)},
                   {"bridge_number", r.bridge_number},
                   {"bridge_position", r.bridge_position}});
        return 0;
    }
    std::cout << "writhe: " << r.writhe << "\n"
              << "turning: " << r.turning << "\n"
              << "components: " << r.components << "\n";
    if (r.is_knot) std::cout << "cycle: " << r.cycle.str() << "\n";
    std::cout << "bridge number: " << r.bridge_number << "\n"
              << "bridge position: " << (r.bridge_position ? "yes" : "no") << "\n";
    return 0;
}

int run_render(const Options& opt, const std::string& path) {
    const braidword::Diagram d = load_oriented_any(path);
    const std::string art = braidword::render(d);
    if (opt.json_out())
        emit_json({{"art", art}});
    else
        std::cout << art;
    return 0;
}

int run_orient(const Options& opt, const std::string& path, bool reverse) {
    const braidword::UnorientedDiagram u = braidword::load_unoriented(path);
    const braidword::Diagram d = braidword::orient(u, reverse);
    const std::string bmc = braidword::to_bmc(d);
    if (opt.json_out())
        emit_json({{"bmc", bmc}});
    else
        std::cout << bmc;
    return 0;
}

int run_bridge(const Options& opt, const std::string& path) {
    const braidword::Diagram d = load_oriented_any(path);
    const auto [normalized, moves] = braidword::bridge_normalize(d);
    const int bridges = braidword::bridge_number(normalized);
    if (opt.json_out()) {
        emit_json({{"bridge_number", bridges},
                   {"moves", moves.size()},
                   {"bmc", braidword::to_bmc(normalized)}});
        return 0;
    }
    std::cout << braidword::to_bmc(normalized) << "# bridge number " << bridges << ", "
              << moves.size() << " move" << (moves.size() == 1 ? "" : "s") << "\n";
    return 0;
}

int run_equiv(const Options& opt, const std::string& lhs_path, const std::string& rhs_path) {
    const braidword::Diagram lhs = load_oriented_any(lhs_path);
    const braidword::Diagram rhs = load_oriented_any(rhs_path);
    const braidword::SearchLimits limits{opt.cfg.max_states, opt.cfg.max_slices};
    const braidword::SearchResult res = braidword::equiv_search(lhs, rhs, limits);
    const bool equal = res.verdict == braidword::Verdict::Equal;
    if (opt.json_out()) {
        json j{{"verdict", equal ? "equal" : "unknown"},
               {"states_visited", res.states_visited},
               {"max_frontier", res.max_frontier},
               {"wall_seconds", res.wall_seconds}};
        j["moves"] = equal ? json(res.path.size()) : json(nullptr);
        emit_json(j);
    } else if (equal) {
        std::cout << "equal: " << res.path.size() << " move"
                  << (res.path.size() == 1 ? "" : "s") << ", " << res.states_visited
                  << " states visited\n";
    } else if (res.states_visited == 0) {
        std::cout << "unknown: invariants differ, no rewrite path exists\n";
    } else {
        std::cout << "unknown: search budget exhausted after " << res.states_visited
                  << " states\n";
    }
    return equal ? 0 : 3;
}

int run_braid_equal(const Options& opt, int strands, const std::string& lhs_text,
                    const std::string& rhs_text) {
    const braidword::BraidWord u = braidword::parse_braid_word(strands, lhs_text);
    const braidword::BraidWord v = braidword::parse_braid_word(strands, rhs_text);
    const bool equal = braidword::braid_equal(u, v, opt.cfg.fuse);
    if (opt.json_out())
        emit_json({{"verdict", equal ? "equal" : "not-equal"}});
    else
        std::cout << (equal ? "equal" : "not equal") << "\n";
    return equal ? 0 : 4;
}

int run_oracle(const Options& opt, const std::string& path) {
    const braidword::Diagram d = load_oriented_any(path);
    const braidword::LaurentPoly p =
        braidword::normalized_invariant(d, opt.cfg.crossing_limit);
    const bool trivial = p.is_one();
    const char* verdict = trivial ? "consistent-with-unknot" : "knotted";
    if (opt.json_out()) {
        emit_json({{"invariant", invariant_terms_json(p)},
                   {"pretty", p.str()},
                   {"verdict", verdict}});
    } else {
        std::cout << "invariant: " << invariant_terms_str(p) << "\n"
                  << "pretty: " << p.str() << "\n"
                  << "verdict: " << verdict << "\n";
    }
    return 0;
}

int run_reduce(const Options& opt, const std::string& path, const std::string& out_prefix) {
    const braidword::Diagram d = load_oriented_any(path);
    const braidword::WordProblemInstance inst = braidword::build_instance(d);
    const braidword::InvariantReport r = braidword::invariant_report(inst.lhs);
    const json manifest{{"writhe", r.writhe},
                        {"turning", r.turning},
                        {"cycle", cycle_json(r)},
                        {"bridge_lhs", braidword::bridge_number(inst.lhs)},
                        {"bridge_rhs", braidword::bridge_number(inst.rhs)}};
    const std::string lhs_bmc = braidword::to_bmc(inst.lhs);
    const std::string rhs_bmc = braidword::to_bmc(inst.rhs);

    if (!out_prefix.empty()) {
        const std::string lhs_path = out_prefix + ".lhs.bmc";
        const std::string rhs_path = out_prefix + ".rhs.bmc";
        const std::string manifest_path = out_prefix + ".manifest.json";
        write_file(lhs_path, lhs_bmc);
        write_file(rhs_path, rhs_bmc);
        write_file(manifest_path, manifest.dump(2) + "\n");
        if (opt.json_out()) {
            emit_json({{"lhs", lhs_path},
                       {"rhs", rhs_path},
                       {"manifest", manifest_path}});
        } else {
            std::cout << "wrote " << lhs_path << "\n"
                      << "wrote " << rhs_path << "\n"
                      << "wrote " << manifest_path << "\n";
        }
        return 0;
    }

    if (opt.json_out()) {
        emit_json({{"manifest", manifest}, {"lhs_bmc", lhs_bmc}, {"rhs_bmc", rhs_bmc}});
        return 0;
    }
    std::cout << "# manifest\n"
              << manifest.dump(2) << "\n"
              << "# lhs\n"
              << lhs_bmc << "# rhs\n"
              << rhs_bmc;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    try {
        opt.cfg = braidword::load_config();
    } catch (const braidword::DiagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"braided-monoidal diagram toolkit"};
    app.require_subcommand(1);
    app.add_option("--output", opt.cfg.output, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    app.add_option("--max-states", opt.cfg.max_states, "equality search state budget")
        ->capture_default_str();
    app.add_option("--max-slices", opt.cfg.max_slices,
                   "slice cap during search (-1: input size + 8)")
        ->capture_default_str();
    app.add_option("--crossing-limit", opt.cfg.crossing_limit,
                   "largest crossing count the bracket evaluator accepts")
        ->capture_default_str();
    app.add_option("--fuse", opt.cfg.fuse, "braid handle-reduction step budget")
        ->capture_default_str();

    int rc = 0;
    std::string file;
    std::string file_rhs;
    std::string out_prefix;
    bool reverse = false;
    int strands = 2;
    std::string word_lhs;
    std::string word_rhs;

    CLI::App* check = app.add_subcommand("check", "parse and type-check a diagram");
    check->add_option("file", file, ".bmc file ('-' for stdin)")->required();
    check->callback([&] { rc = run_check(opt, file); });

    CLI::App* invariants = app.add_subcommand("invariants", "report diagram invariants");
    invariants->add_option("file", file, ".bmc file ('-' for stdin)")->required();
    invariants->callback([&] { rc = run_invariants(opt, file); });

    CLI::App* render = app.add_subcommand("render", "draw a diagram as ASCII art");
    render->add_option("file", file, ".bmc file ('-' for stdin)")->required();
    render->callback([&] { rc = run_render(opt, file); });

    CLI::App* orient = app.add_subcommand("orient", "orient an unoriented knot diagram");
    orient->add_option("file", file, "unoriented .bmc file ('-' for stdin)")->required();
    orient->add_flag("--reverse", reverse, "use the reversed orientation");
    orient->callback([&] { rc = run_orient(opt, file, reverse); });

    CLI::App* bridge = app.add_subcommand("bridge", "rewrite into bridge position");
    bridge->add_option("file", file, ".bmc file ('-' for stdin)")->required();
    bridge->callback([&] { rc = run_bridge(opt, file); });

    CLI::App* equiv =
        app.add_subcommand("equiv", "search for a rewrite path between two diagrams");
    equiv->add_option("lhs", file, "first .bmc file")->required();
    equiv->add_option("rhs", file_rhs, "second .bmc file")->required();
    equiv->callback([&] { rc = run_equiv(opt, file, file_rhs); });

    CLI::App* reduce =
        app.add_subcommand("reduce", "emit a word-problem instance for a knot diagram");
    reduce->add_option("file", file, ".bmc file ('-' for stdin)")->required();
    reduce->add_option("-o,--out", out_prefix,
                       "write PREFIX.lhs.bmc, PREFIX.rhs.bmc, PREFIX.manifest.json");
    reduce->callback([&] { rc = run_reduce(opt, file, out_prefix); });

    CLI::App* braid = app.add_subcommand("braid", "braid word operations");
    braid->require_subcommand(1);
    CLI::App* braid_eq = braid->add_subcommand("equal", "decide equality of two braid words");
    braid_eq->add_option("-n,--strands", strands, "strand count")->required();
    braid_eq->add_option("lhs", word_lhs, "braid word, e.g. 's1 s2 s1^-1'")->required();
    braid_eq->add_option("rhs", word_rhs, "braid word")->required();
    braid_eq->callback([&] { rc = run_braid_equal(opt, strands, word_lhs, word_rhs); });

    CLI::App* oracle =
        app.add_subcommand("oracle", "evaluate the normalized bracket invariant");
    oracle->add_option("file", file, ".bmc file ('-' for stdin)")->required();
    oracle->callback([&] { rc = run_oracle(opt, file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const braidword::DiagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
