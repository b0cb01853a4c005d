#pragma once

#include "qmzv/lincomb.hpp"
#include "qmzv/words.hpp"

namespace qmzv {

struct shuffle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rota-Baxter shuffle product on {rho, pi, y} words:
//   y-rule, pi pi, rho rho and rho pi expansions; 1 is the unit.
// delta is out of scope and rejected.
LinComb<PYWord> shuffle(const PYWord& u, const PYWord& v);
LinComb<PYWord> shuffle(const LinComb<PYWord>& u, const LinComb<PYWord>& v);

// Eliminates every pi via pi = rho + 1 (binomial expansion); output words are
// pure.
LinComb<PYWord> pr_expand(const PYWord& w);
LinComb<PYWord> pr_expand(const LinComb<PYWord>& c);

// Rewrites a combination of shuffle-output words into the family's typical
// form (each word a concatenation of typical blocks).  Works run by run; the
// summation operators of one run commute, so runs are read as multisets.
LinComb<PYWord> normalize_typical(TypeTag type, const LinComb<PYWord>& c);

// normalize_typical followed by the typical-word -> ZWord parse.
LinComb<ZWord> shuffle_z(TypeTag type, const ZWord& u, const ZWord& v);

// Converts one typical-form word (or a combination) to ZWords.
LinComb<ZWord> typical_to_zwords(TypeTag type, const LinComb<PYWord>& c);

// The family's expansion of a pure admissible word: the combination of basis
// words realizing it (phi/gamma letters for ~I, binomials for III, ...).
LinComb<ZWord> pure_word_expand(TypeTag type, const PYWord& pure);

// One duality relation: expand(word) - expand(dual(word)), or std::nullopt
// when the pair degenerates (fixed point).
struct DualityRelation {
    PYWord word;
    PYWord dual_word;
    LinComb<ZWord> relation; // == 0 as a series identity
};

// All duality relations of the family whose words and expansions stay inside
// the (weight <= w, depth <= w) window, one per unordered pair.  For ~I only
// the nondegenerate instances (every rho-run and y-run >= 2) are emitted;
// relations whose expansion escapes the window are skipped.
std::vector<DualityRelation> duality_relations(TypeTag type, int w);

} // namespace qmzv
