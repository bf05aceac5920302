#pragma once

// Plain-text diagram format (.bmc).  One declaration or slice per line:
//
//   # comment                       (also trailing comments)
//   sig: m : A A -> A               (named generator; objects declared on use)
//   dom: ^ v                        (domain word; omit for a closed diagram)
//   capR @ 0    capL @ 2            (oriented caps)
//   cupR @ 0    cupL @ 1            (oriented cups)
//   sigma+ @ 0  sigma- @ 3          (braidings)
//   gen m @ 1                       (named generator slice)
//   cap @ 0     cup @ 0             (unoriented caps/cups; separate entry point)
//
// Object tokens "^", "v" and "I" (empty word) are reserved.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace braidword {

// Unoriented closed diagrams: caps/cups without orientation data, plus
// braidings.  Produced by parse_unoriented, consumed by orient().
enum class USliceKind : std::uint8_t { Cap, Cup, BraidPos, BraidNeg };

struct USlice {
    USliceKind kind{};
    int offset = 0;

    friend bool operator==(const USlice&, const USlice&) = default;
};

struct UnorientedDiagram {
    std::vector<USlice> slices;

    friend bool operator==(const UnorientedDiagram&, const UnorientedDiagram&) = default;
};

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

inline std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline int parse_offset(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) parse_fail(line_no, "bad offset '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(line_no, "bad offset '" + tok + "'");
    }
}

inline ObjectWord parse_word(const std::vector<std::string>& toks, std::size_t from,
                             std::size_t to, Signature& sig, std::size_t line_no) {
    ObjectWord w;
    for (std::size_t i = from; i < to; ++i) {
        const auto& t = toks[i];
        if (t == "I") {
            if (to - from != 1) parse_fail(line_no, "'I' must stand alone");
            return {};
        }
        if (t == "->" || t == ":") parse_fail(line_no, "unexpected '" + t + "'");
        w.push_back(sig.intern_object(t));
    }
    return w;
}

struct LineSet {
    std::vector<std::vector<std::string>> sig_lines;
    std::vector<std::string> dom_tokens;
    bool has_dom = false;
    std::vector<std::pair<std::vector<std::string>, std::size_t>> slice_lines;
};

inline LineSet split_lines(std::string_view text) {
    LineSet out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "sig:") {
            if (out.has_dom || !out.slice_lines.empty())
                parse_fail(line_no, "sig: must precede dom: and slices");
            toks.erase(toks.begin());
            out.sig_lines.emplace_back(std::move(toks));
        } else if (toks[0] == "dom:") {
            if (out.has_dom) parse_fail(line_no, "duplicate dom:");
            if (!out.slice_lines.empty()) parse_fail(line_no, "dom: must precede slices");
            out.has_dom = true;
            out.dom_tokens.assign(toks.begin() + 1, toks.end());
        } else {
            out.slice_lines.emplace_back(std::move(toks), line_no);
        }
    }
    return out;
}

}  // namespace detail

// Parses an oriented diagram.  Unoriented "cap"/"cup" tokens are rejected
// with a pointer at the orient command.
[[nodiscard]] inline Diagram parse_diagram(std::string_view text) {
    using detail::parse_fail;
    auto lines = detail::split_lines(text);

    auto sig = std::make_shared<Signature>();
    for (auto& toks : lines.sig_lines) {
        // NAME : IN... -> OUT...
        if (toks.size() < 3 || toks[1] != ":")
            throw ParseError("sig: expects 'sig: NAME : IN -> OUT'");
        GeneratorDecl decl;
        decl.name = toks[0];
        if (decl.name == "I" || decl.name == "^" || decl.name == "v")
            throw ParseError("sig: reserved generator name '" + decl.name + "'");
        std::size_t arrow = 0;
        for (std::size_t i = 2; i < toks.size(); ++i)
            if (toks[i] == "->") { arrow = i; break; }
        if (arrow == 0) throw ParseError("sig: missing '->'");
        decl.inputs = detail::parse_word(toks, 2, arrow, *sig, 0);
        decl.outputs = detail::parse_word(toks, arrow + 1, toks.size(), *sig, 0);
        if (sig->generator_id(decl.name) >= 0)
            throw ParseError("sig: duplicate generator '" + decl.name + "'");
        sig->generators.push_back(std::move(decl));
    }

    Diagram d;
    if (lines.has_dom)
        d.domain = detail::parse_word(lines.dom_tokens, 0, lines.dom_tokens.size(), *sig, 0);

    for (const auto& [toks, line_no] : lines.slice_lines) {
        const auto& head = toks[0];
        if (head == "cap" || head == "cup")
            parse_fail(line_no, "unoriented '" + head +
                                    "' in an oriented diagram; assign orientations "
                                    "with the orient command first");
        if (head == "gen") {
            if (toks.size() != 4 || toks[2] != "@")
                parse_fail(line_no, "expected 'gen NAME @ OFFSET'");
            const int id = sig->generator_id(toks[1]);
            if (id < 0) parse_fail(line_no, "undeclared generator '" + toks[1] + "'");
            d.slices.push_back(named_gen(id, detail::parse_offset(toks[3], line_no)));
            continue;
        }
        if (toks.size() != 3 || toks[1] != "@")
            parse_fail(line_no, "expected 'KIND @ OFFSET'");
        const int off = detail::parse_offset(toks[2], line_no);
        if (head == "capR") d.slices.push_back(cap_r(off));
        else if (head == "capL") d.slices.push_back(cap_l(off));
        else if (head == "cupR") d.slices.push_back(cup_r(off));
        else if (head == "cupL") d.slices.push_back(cup_l(off));
        else if (head == "sigma+") d.slices.push_back(braid_pos(off));
        else if (head == "sigma-") d.slices.push_back(braid_neg(off));
        else parse_fail(line_no, "unknown slice kind '" + head + "'");
    }

    d.signature = sig->objects.empty() && sig->generators.empty()
                      ? cc_signature()
                      : std::shared_ptr<const Signature>(std::move(sig));
    return d;
}

// Parses an unoriented closed cap/cup diagram: only cap, cup, sigma+, sigma-.
[[nodiscard]] inline UnorientedDiagram parse_unoriented(std::string_view text) {
    using detail::parse_fail;
    auto lines = detail::split_lines(text);
    if (!lines.sig_lines.empty())
        throw ParseError("unoriented diagrams take no sig: lines");
    if (lines.has_dom && !lines.dom_tokens.empty())
        throw ParseError("unoriented diagrams are closed; dom: must be empty");

    UnorientedDiagram d;
    for (const auto& [toks, line_no] : lines.slice_lines) {
        if (toks.size() != 3 || toks[1] != "@")
            parse_fail(line_no, "expected 'KIND @ OFFSET'");
        const int off = detail::parse_offset(toks[2], line_no);
        const auto& head = toks[0];
        if (head == "cap") d.slices.push_back({USliceKind::Cap, off});
        else if (head == "cup") d.slices.push_back({USliceKind::Cup, off});
        else if (head == "sigma+") d.slices.push_back({USliceKind::BraidPos, off});
        else if (head == "sigma-") d.slices.push_back({USliceKind::BraidNeg, off});
        else if (head == "capR" || head == "capL" || head == "cupR" || head == "cupL")
            parse_fail(line_no, "'" + head + "' is already oriented");
        else parse_fail(line_no, "unknown slice kind '" + head + "'");
    }
    return d;
}

[[nodiscard]] inline std::string to_bmc(const Diagram& d) {
    std::ostringstream out;
    const auto& sig = *d.signature;
    for (const auto& g : sig.generators) {
        out << "sig: " << g.name << " :";
        if (g.inputs.empty()) out << " I";
        else for (Label l : g.inputs) out << ' ' << sig.object_name(l);
        out << " ->";
        if (g.outputs.empty()) out << " I";
        else for (Label l : g.outputs) out << ' ' << sig.object_name(l);
        out << '\n';
    }
    if (!d.domain.empty()) {
        out << "dom:";
        for (Label l : d.domain) out << ' ' << sig.object_name(l);
        out << '\n';
    }
    for (const auto& s : d.slices) {
        if (s.kind == SliceKind::Named)
            out << "gen " << sig.generators[static_cast<std::size_t>(s.named_id)].name
                << " @ " << s.offset << '\n';
        else
            out << kind_name(s.kind) << " @ " << s.offset << '\n';
    }
    return out.str();
}

[[nodiscard]] inline std::string to_bmc(const UnorientedDiagram& d) {
    std::ostringstream out;
    for (const auto& s : d.slices) {
        switch (s.kind) {
        case USliceKind::Cap: out << "cap"; break;
        case USliceKind::Cup: out << "cup"; break;
        case USliceKind::BraidPos: out << "sigma+"; break;
        case USliceKind::BraidNeg: out << "sigma-"; break;
        }
        out << " @ " << s.offset << '\n';
    }
    return out.str();
}

namespace detail {

inline std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace detail

// File loaders; a path of "-" reads standard input.
[[nodiscard]] inline Diagram load_diagram(const std::string& path) {
    return parse_diagram(detail::read_source(path));
}

[[nodiscard]] inline UnorientedDiagram load_unoriented(const std::string& path) {
    return parse_unoriented(detail::read_source(path));
}

}  // namespace braidword
