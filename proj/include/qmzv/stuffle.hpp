#pragma once

#include "qmzv/lincomb.hpp"
#include "qmzv/words.hpp"

namespace qmzv {

struct stuffle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quasi-shuffle product of the family of u and v.  Both words must be
// admissible and of the same family; the head recursion follows the family's
// definition (shifting operators for III and ~IV), the unit is the empty
// word.  Families I and IV use their regularized enlargements.
LinComb<ZWord> stuffle(TypeTag type, const ZWord& u, const ZWord& v);

// Bilinear extension.
LinComb<ZWord> stuffle(TypeTag type, const LinComb<ZWord>& u, const LinComb<ZWord>& v);

// Okounkov stuffle on compositions with parts >= 2; bracket
// [r,s] = 2 z_{r+s} (+ 1/2 z_{r+s-2} when r and s are both odd).
using OWord = std::vector<int>;
LinComb<OWord> stuffle_o(const OWord& u, const OWord& v);
LinComb<OWord> stuffle_o(const LinComb<OWord>& u, const LinComb<OWord>& v);

} // namespace qmzv
