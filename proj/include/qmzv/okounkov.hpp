#pragma once

#include "qmzv/relations.hpp"

#include <optional>

namespace qmzv {

// The split n = n^- + n^+ with (n-1)/2 <= n^- <= n/2 <= n^+ <= (n+1)/2.
struct OSplit {
    int s;
    int minus;
    int plus;
};
OSplit osplit(int s);

// All compositions with parts >= 2 and total <= w, canonical order.
std::vector<OWord> enumerate_o(int w);
long long count_o(int w);

// Word expansion of z^O[s]: product over blocks of
// (rho^{s^-} pi^{s^+} + rho^{s^+} pi^{s^-}) y, equal factors collapsed.
LinComb<PYWord> oword_expand(const OWord& s);

// Direct evaluation of z^O[s] (numerators q^{k s^+} + q^{k s^-}).
TruncatedSeries eval_o(const OWord& s, int N);
TruncatedSeries eval_o(const LinComb<OWord>& c, int N);

// F^O_n(t) = (t^{n^+} + t^{n^-}) / (1-t)^n as a truncated series in t.
TruncatedSeries f_o(int n, int order);

struct OkounkovReport {
    int words = 0;
    int series_rank = 0;                    // dim lower bound at order N
    std::optional<int> certified_dim;       // exact upper bound via the II lattice
    int conjectured = 0;                    // coefficient of t^w in the conjecture
    // kernel relations of the series matrix, as combinations of O words
    std::vector<LinComb<OWord>> kernel;
    std::vector<bool> kernel_certified;
};

// Coefficients of 1/(1-t-t^2+t^6+t^8-t^13) - 1/(1-t) up to t^w.
std::vector<long long> okounkov_conjecture_dims(int w);

// series_rank always; certified_dim when a type II relation system covering
// weight w is supplied (kernel candidates are pushed through oword_expand,
// pr_expand and the II basis, then reduced against the system).  Aborts
// (throws) if series_rank > certified_dim: both bound the same dimension.
OkounkovReport verify_okounkov(int w, int N, const RelationSystem* ii_system = nullptr,
                               EvalCache* cache = nullptr);

// One relation of the bundled weight 6..9 list: sum coeff * z^O[s] == 0.
struct ORelation {
    std::string name;
    std::vector<std::pair<Rational, OWord>> terms;
};

// The twelve verified relations (transcription slips in the source list are
// corrected; every entry is series-zero).
const std::vector<ORelation>& o_relation_list();

// true iff every listed relation vanishes to order N
bool verify_o_relation_list(int N);

} // namespace qmzv
