#pragma once

// Core data model: diagrams over a braided monoidal signature, given as a
// vertical list of slices (caps, cups, braidings, named generators), each
// acting at a horizontal offset.  Composition reads top to bottom; the
// domain is the word of wire labels entering at the top.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidword {

// ---------------------------------------------------------------------------
// Errors

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define BRAIDWORD_DEFINE_ERROR(Name)                                           \
    class Name : public DiagramError {                                         \
    public:                                                                    \
        using DiagramError::DiagramError;                                      \
    }

BRAIDWORD_DEFINE_ERROR(TypeError);            // ill-typed composition
BRAIDWORD_DEFINE_ERROR(ParseError);           // malformed .bmc text or CLI input
BRAIDWORD_DEFINE_ERROR(NotAKnotError);        // closed single-component input required
BRAIDWORD_DEFINE_ERROR(NotPureBraidError);    // braid-only diagram required
BRAIDWORD_DEFINE_ERROR(StrandMismatchError);  // braid words on different strand counts
BRAIDWORD_DEFINE_ERROR(SignatureMismatchError); // diagrams not over a common boundary
BRAIDWORD_DEFINE_ERROR(TooManyCrossingsError);  // state-sum size limit exceeded
BRAIDWORD_DEFINE_ERROR(FuseExceededError);      // rewrite step budget exhausted
BRAIDWORD_DEFINE_ERROR(PrecondViolation);       // operation precondition not met
BRAIDWORD_DEFINE_ERROR(InvalidMoveError);       // rewrite move not applicable

#undef BRAIDWORD_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Objects and words

// A wire label.  The two built-in self-dual orientation objects are an
// upward strand and a downward strand; custom signatures may add named
// objects, numbered from first_named_label.
using Label = std::int32_t;

inline constexpr Label label_up = 0;    // rendered "^"
inline constexpr Label label_down = 1;  // rendered "v"
inline constexpr Label first_named_label = 2;

using ObjectWord = std::vector<Label>;

// Orientation sign used by the writhe: −1 for a downward strand, +1 for
// anything else (upward or named), making the sign a total function.
[[nodiscard]] constexpr int orientation_sign(Label l) noexcept {
    return l == label_down ? -1 : +1;
}

// ---------------------------------------------------------------------------
// Slices

enum class SliceKind : std::uint8_t {
    CapR,      // birth, no inputs, outputs (up, down)
    CapL,      // birth, no inputs, outputs (down, up)
    CupR,      // death, inputs (down, up), no outputs
    CupL,      // death, inputs (up, down), no outputs
    BraidPos,  // positive crossing, swaps two adjacent wires
    BraidNeg,  // negative crossing, swaps two adjacent wires
    Named,     // generator declared in the signature
};

[[nodiscard]] constexpr bool is_cap(SliceKind k) noexcept {
    return k == SliceKind::CapR || k == SliceKind::CapL;
}
[[nodiscard]] constexpr bool is_cup(SliceKind k) noexcept {
    return k == SliceKind::CupR || k == SliceKind::CupL;
}
[[nodiscard]] constexpr bool is_braid(SliceKind k) noexcept {
    return k == SliceKind::BraidPos || k == SliceKind::BraidNeg;
}
[[nodiscard]] constexpr bool is_turn(SliceKind k) noexcept {
    return is_cap(k) || is_cup(k);
}

// Crossing sign, +1 for BraidPos, −1 for BraidNeg.
[[nodiscard]] constexpr int crossing_sign(SliceKind k) noexcept {
    return k == SliceKind::BraidPos ? +1 : -1;
}

[[nodiscard]] constexpr const char* kind_name(SliceKind k) noexcept {
    switch (k) {
    case SliceKind::CapR: return "capR";
    case SliceKind::CapL: return "capL";
    case SliceKind::CupR: return "cupR";
    case SliceKind::CupL: return "cupL";
    case SliceKind::BraidPos: return "sigma+";
    case SliceKind::BraidNeg: return "sigma-";
    case SliceKind::Named: return "gen";
    }
    return "?";
}

struct Slice {
    SliceKind kind{};
    int offset = 0;
    int named_id = -1;  // index into Signature::generators when kind == Named

    friend bool operator==(const Slice&, const Slice&) = default;
};

[[nodiscard]] constexpr Slice cap_r(int off) { return {SliceKind::CapR, off, -1}; }
[[nodiscard]] constexpr Slice cap_l(int off) { return {SliceKind::CapL, off, -1}; }
[[nodiscard]] constexpr Slice cup_r(int off) { return {SliceKind::CupR, off, -1}; }
[[nodiscard]] constexpr Slice cup_l(int off) { return {SliceKind::CupL, off, -1}; }
[[nodiscard]] constexpr Slice braid_pos(int off) { return {SliceKind::BraidPos, off, -1}; }
[[nodiscard]] constexpr Slice braid_neg(int off) { return {SliceKind::BraidNeg, off, -1}; }
[[nodiscard]] constexpr Slice named_gen(int id, int off) { return {SliceKind::Named, off, id}; }

// ---------------------------------------------------------------------------
// Signatures

struct GeneratorDecl {
    std::string name;
    ObjectWord inputs;
    ObjectWord outputs;

    friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

// A signature lists the named objects and named generators available beyond
// the built-in orientation objects, caps, cups and braidings.
struct Signature {
    std::vector<std::string> objects;       // label = first_named_label + index
    std::vector<GeneratorDecl> generators;  // referenced by Slice::named_id

    [[nodiscard]] std::string object_name(Label l) const {
        if (l == label_up) return "^";
        if (l == label_down) return "v";
        const auto idx = static_cast<std::size_t>(l - first_named_label);
        if (idx >= objects.size()) throw DiagramError("unknown object label");
        return objects[idx];
    }

    // Returns the label for an object name, creating it if needed.
    [[nodiscard]] Label intern_object(const std::string& name) {
        if (name == "^") return label_up;
        if (name == "v") return label_down;
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == name) return first_named_label + static_cast<Label>(i);
        objects.push_back(name);
        return first_named_label + static_cast<Label>(objects.size() - 1);
    }

    [[nodiscard]] int generator_id(const std::string& name) const noexcept {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

// The plain cap/cup signature: no named objects or generators.
[[nodiscard]] inline std::shared_ptr<const Signature> cc_signature() {
    static const std::shared_ptr<const Signature> sig =
        std::make_shared<const Signature>();
    return sig;
}

// Input/output arity of a slice under a signature.
struct Arity {
    int inputs = 0;
    int outputs = 0;
};

[[nodiscard]] inline Arity slice_arity(const Slice& s, const Signature& sig) {
    switch (s.kind) {
    case SliceKind::CapR:
    case SliceKind::CapL: return {0, 2};
    case SliceKind::CupR:
    case SliceKind::CupL: return {2, 0};
    case SliceKind::BraidPos:
    case SliceKind::BraidNeg: return {2, 2};
    case SliceKind::Named: {
        if (s.named_id < 0 ||
            static_cast<std::size_t>(s.named_id) >= sig.generators.size())
            throw TypeError("slice refers to an undeclared generator");
        const auto& g = sig.generators[static_cast<std::size_t>(s.named_id)];
        return {static_cast<int>(g.inputs.size()), static_cast<int>(g.outputs.size())};
    }
    }
    throw TypeError("unknown slice kind");
}

// ---------------------------------------------------------------------------
// Diagrams

struct Diagram {
    std::shared_ptr<const Signature> signature = cc_signature();
    ObjectWord domain;
    std::vector<Slice> slices;

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return *a.signature == *b.signature && a.domain == b.domain &&
               a.slices == b.slices;
    }
};

namespace detail {

[[noreturn]] inline void type_fail(std::size_t slice_index, const std::string& what) {
    throw TypeError("slice " + std::to_string(slice_index) + ": " + what);
}

// Applies one slice to a level word in place; throws TypeError on mismatch.
inline void apply_slice(ObjectWord& w, const Slice& s, const Signature& sig,
                        std::size_t slice_index) {
    const int width = static_cast<int>(w.size());
    const auto [m, n] = slice_arity(s, sig);
    if (s.offset < 0 || s.offset + m > width)
        type_fail(slice_index, std::string(kind_name(s.kind)) + " offset " +
                                   std::to_string(s.offset) +
                                   " out of range for width " + std::to_string(width));
    const auto at = w.begin() + s.offset;
    switch (s.kind) {
    case SliceKind::CapR:
        w.insert(at, {label_up, label_down});
        break;
    case SliceKind::CapL:
        w.insert(at, {label_down, label_up});
        break;
    case SliceKind::CupR:
        if (at[0] != label_down || at[1] != label_up)
            type_fail(slice_index, "cupR needs (v ^) inputs");
        w.erase(at, at + 2);
        break;
    case SliceKind::CupL:
        if (at[0] != label_up || at[1] != label_down)
            type_fail(slice_index, "cupL needs (^ v) inputs");
        w.erase(at, at + 2);
        break;
    case SliceKind::BraidPos:
    case SliceKind::BraidNeg:
        std::swap(at[0], at[1]);
        break;
    case SliceKind::Named: {
        const auto& g = sig.generators[static_cast<std::size_t>(s.named_id)];
        for (int i = 0; i < m; ++i)
            if (at[i] != g.inputs[static_cast<std::size_t>(i)])
                type_fail(slice_index, "generator " + g.name + " input mismatch");
        ObjectWord tail(w.begin() + s.offset + m, w.end());
        w.resize(static_cast<std::size_t>(s.offset));
        w.insert(w.end(), g.outputs.begin(), g.outputs.end());
        w.insert(w.end(), tail.begin(), tail.end());
        break;
    }
    }
}

}  // namespace detail

// Runs the slice list against the domain and returns every level word,
// levels[0] == domain through levels[slices.size()] == codomain.
// Throws TypeError if any slice does not fit its level.
[[nodiscard]] inline std::vector<ObjectWord> typecheck(const Diagram& d) {
    std::vector<ObjectWord> levels;
    levels.reserve(d.slices.size() + 1);
    ObjectWord w = d.domain;
    levels.push_back(w);
    for (std::size_t i = 0; i < d.slices.size(); ++i) {
        detail::apply_slice(w, d.slices[i], *d.signature, i);
        levels.push_back(w);
    }
    return levels;
}

[[nodiscard]] inline ObjectWord codomain(const Diagram& d) {
    return typecheck(d).back();
}

[[nodiscard]] inline bool is_closed(const Diagram& d) {
    return d.domain.empty() && codomain(d).empty();
}

[[nodiscard]] inline bool has_named_slice(const Diagram& d) {
    for (const auto& s : d.slices)
        if (s.kind == SliceKind::Named) return true;
    return false;
}

[[nodiscard]] inline int crossing_count(const Diagram& d) {
    int c = 0;
    for (const auto& s : d.slices) c += is_braid(s.kind) ? 1 : 0;
    return c;
}

}  // namespace braidword
