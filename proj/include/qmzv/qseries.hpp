#pragma once

#include "qmzv/lincomb.hpp"
#include "qmzv/series.hpp"
#include "qmzv/words.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qmzv {

struct eval_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact coefficients of sum_{k_1>...>k_d>0} q^{sum t_j k_j} prod (1-q^{k_j})^{-s_j}
// modulo q^{N+1}.  Requires t_1 >= 1 (truncation of the outer index at N is
// then exact) and t_j, s_j >= 0; throws eval_error otherwise.
TruncatedSeries eval_value(const CompositionPair& c, int N);

// Shared concurrency-safe cache keyed by composition; series are stored at
// the largest order requested so far.
class EvalCache {
public:
    TruncatedSeries eval(const CompositionPair& c, int N);

private:
    std::mutex mu_;
    std::map<CompositionPair, TruncatedSeries> map_;
};

TruncatedSeries eval_lincomb(const LinComb<ZWord>& c, int N, EvalCache* cache = nullptr);
TruncatedSeries eval_lincomb(const LinComb<CompositionPair>& c, int N, EvalCache* cache = nullptr);
// PYWords are P-R-expanded to pure words first.
TruncatedSeries eval_lincomb(const LinComb<PYWord>& c, int N, EvalCache* cache = nullptr);

// Run-length data of a pure word rho^{a_1} y^{b_1} ... rho^{a_l} y^{b_l}.
struct BlockForm {
    std::vector<int> alpha; // rho-run lengths, all >= 1
    std::vector<int> beta;  // y-run lengths, all >= 1
};

BlockForm block_form(const PYWord& pure_word);

// Independent duality oracle: direct enumeration of the closed-form multi-sum
//   sum over j_r >= beta_r, k_r >= alpha_r of
//   prod binom(j_r-1, beta_r-1) binom(k_r-1, alpha_r-1) q^{k_r (j_r+...+j_l)}
// truncated at total exponent <= N.
TruncatedSeries eval_nested_sum(const BlockForm& blocks, int N);

} // namespace qmzv
