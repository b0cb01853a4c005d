#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmzv {

// The q-MZV families. The tilde types are the regularized enlargements used
// throughout; I and IV are the sub-families reached by projection.
enum class TypeTag : uint8_t { I, tI, II, III, IV, tIV, G, O };

const char* type_name(TypeTag t);
TypeTag type_from_name(const std::string& name); // accepts i, i~, ii, iii, iv, iv~, g, o

struct word_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// CompositionPair: the exponent data (s_1..s_d ; t_1..t_d) of a value
// z_q^t[s].  Length-d vectors, entries >= 0.
// ---------------------------------------------------------------------------
struct CompositionPair {
    std::vector<int> t;
    std::vector<int> s;

    CompositionPair() = default;
    CompositionPair(std::vector<int> t_, std::vector<int> s_);

    int depth() const { return static_cast<int>(s.size()); }
    int weight() const;

    // 1 <= t_1 <= s_1 and 0 <= t_j <= s_j: the convergent general family.
    bool admissible_g() const;

    // graded order: (weight, depth), then lexicographic on (t_1,s_1,...).
    std::strong_ordering operator<=>(const CompositionPair& o) const;
    bool operator==(const CompositionPair& o) const = default;

    std::string str() const; // "z^(t...)[s...]"
};

// ---------------------------------------------------------------------------
// PYWord: word over the operator alphabet {rho, pi, y}, stored as a string of
// 'r', 'p', 'y'.  rho/pi weigh 1, y marks a nesting level.
// ---------------------------------------------------------------------------
struct PYWord {
    std::string letters;

    PYWord() = default;
    explicit PYWord(std::string l);

    int weight() const;           // #rho + #pi
    int depth() const;            // #y
    bool pure() const;            // no pi
    bool ends_with_y() const { return !letters.empty() && letters.back() == 'y'; }
    // ends with y and at least one rho before the first y
    bool admissible() const;

    auto operator<=>(const PYWord& o) const = default;
    const std::string& str() const { return letters; }
};

// One maximal {rho,pi} run, terminated by a y.
struct PYRun {
    int rho = 0;
    int pi = 0;
};

// Splits w = R_1 y R_2 y ... R_m y into runs; throws if w does not end in y.
std::vector<PYRun> py_runs(const PYWord& w);

// Blocks rho^{t_j} pi^{s_j-t_j} y -> (t, s); throws word_error if some run
// interleaves pi before rho (caller must P-R-normalize first).
CompositionPair composition_of(const PYWord& w);

// Inverse of composition_of: requires t_j <= s_j.
PYWord word_of(const CompositionPair& c);

// Reverse-swap duality on pure words: reverse and exchange rho <-> y.
// Requires a pure admissible word; throws word_error on pi.
PYWord dual(const PYWord& w);

// ---------------------------------------------------------------------------
// ZWord: a word over the stuffle alphabet of one family, stored canonically
// through its per-letter (t_j, s_j) realization exponents.  The encoding is
// injective per family once tail thetas of type ~IV are identified with z'_1
// (their realizations coincide).
// ---------------------------------------------------------------------------
enum class ZKind : uint8_t { Theta, Z, ZPrime, ZG, ZO };

struct ZLetter {
    ZKind kind;
    int t = 0; // only ZG carries both
    int s = 0;
};

struct ZWord {
    TypeTag type = TypeTag::II;
    CompositionPair ts;

    ZWord() = default;
    ZWord(TypeTag ty, CompositionPair c) : type(ty), ts(std::move(c)) {}

    int depth() const { return ts.depth(); }
    int weight() const { return ts.weight(); }
    ZLetter letter(int j) const;

    std::strong_ordering operator<=>(const ZWord& o) const;
    bool operator==(const ZWord& o) const = default;

    std::string str() const;
};

// Family admissibility on the (t,s) encoding.
bool zword_admissible(const ZWord& w);

// (t_j, s_j) of each letter per the family's realization map; throws
// word_error on inadmissible words.
CompositionPair zword_to_composition(const ZWord& w);

// The typical-form operator word of an admissible ZWord.
PYWord zword_to_py(const ZWord& w);

// Parses a typical-form PYWord of the given family back into a ZWord.
ZWord zword_from_composition(TypeTag type, const CompositionPair& c);

int weight_of(const CompositionPair& c);

} // namespace qmzv
