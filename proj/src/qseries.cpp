#include "qmzv/qseries.hpp"

#include "qmzv/shuffle.hpp"

namespace qmzv {

TruncatedSeries eval_value(const CompositionPair& c, int N) {
    if (N < 0) throw eval_error("negative truncation order");
    const int d = c.depth();
    if (d == 0) return TruncatedSeries::one(N);
    for (int j = 0; j < d; ++j) {
        if (c.s[j] < 0) throw eval_error("negative argument in " + c.str());
        if (c.t[j] < 0) throw eval_error("negative auxiliary variable in " + c.str());
    }
    if (c.t[0] < 1)
        throw eval_error("divergent: t_1 = 0 in " + c.str() +
                         " (outer index cannot be truncated)");

    // prefix-sum dynamic program over the nested indices, innermost first:
    //   G_j(k) = q^{t_j k} (1-q^k)^{-s_j} H_{j+1}(k),  H_j(k) = sum_{k'<k} G_j(k')
    // Every summand carries q^{t_1 k_1}, so k_1 <= N exhausts the truncation.
    std::vector<TruncatedSeries> H; // H_{j+1}(k) for k = 0..N+1 (index k)
    TruncatedSeries total(N);
    for (int j = d - 1; j >= 0; --j) {
        std::vector<TruncatedSeries> Hnext(N + 2, TruncatedSeries(N));
        TruncatedSeries acc(N);
        for (int k = 1; k <= N + 1; ++k) {
            Hnext[k] = acc;
            if (k > N) break;
            TruncatedSeries g = H.empty() ? TruncatedSeries::one(N) : H[k];
            if (!g.zero()) {
                if (static_cast<long long>(c.t[j]) * k > N) continue;
                for (int rep = 0; rep < c.s[j]; ++rep) g.geometric_divide(k);
                g.shift(c.t[j] * k);
                acc += g;
            }
        }
        total = acc;
        H = std::move(Hnext);
    }
    return total;
}

TruncatedSeries EvalCache::eval(const CompositionPair& c, int N) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(c);
        if (it != map_.end() && it->second.order() >= N)
            return it->second.order() == N ? it->second : it->second.truncated(N);
    }
    TruncatedSeries s = eval_value(c, N);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = map_.try_emplace(c, s);
    if (!fresh && it->second.order() < N) it->second = s;
    return s;
}

static TruncatedSeries eval_comp(const CompositionPair& c, int N, EvalCache* cache) {
    return cache ? cache->eval(c, N) : eval_value(c, N);
}

TruncatedSeries eval_lincomb(const LinComb<CompositionPair>& c, int N, EvalCache* cache) {
    TruncatedSeries out(N);
    for (const auto& [comp, coeff] : c) out.add_scaled(eval_comp(comp, N, cache), coeff);
    return out;
}

TruncatedSeries eval_lincomb(const LinComb<ZWord>& c, int N, EvalCache* cache) {
    TruncatedSeries out(N);
    for (const auto& [w, coeff] : c) out.add_scaled(eval_comp(zword_to_composition(w), N, cache), coeff);
    return out;
}

TruncatedSeries eval_lincomb(const LinComb<PYWord>& c, int N, EvalCache* cache) {
    TruncatedSeries out(N);
    for (const auto& [w, coeff] : c) {
        for (const auto& [pure, pc] : pr_expand(w))
            out.add_scaled(eval_comp(composition_of(pure), N, cache), Rational(coeff * pc));
    }
    return out;
}

BlockForm block_form(const PYWord& w) {
    if (!w.pure() || !w.admissible())
        throw eval_error("block_form wants a pure admissible word, got: " + w.letters);
    BlockForm b;
    int rho = 0, y = 0;
    bool in_y = false;
    for (char ch : w.letters) {
        if (ch == 'r') {
            if (in_y) {
                b.alpha.push_back(rho);
                b.beta.push_back(y);
                rho = y = 0;
                in_y = false;
            }
            ++rho;
        } else {
            in_y = true;
            ++y;
        }
    }
    b.alpha.push_back(rho);
    b.beta.push_back(y);
    return b;
}

namespace {

mpz_class binom_z(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// enumerate indices from the innermost block outwards, pruning on the total
// exponent sum_r k_r * (j_r + ... + j_l)
void nested_sum_rec(const BlockForm& b, int r, int jtail, const mpz_class& coeff, int expo,
                    int N, TruncatedSeries& out) {
    if (r < 0) {
        out[expo] += Rational(coeff);
        return;
    }
    const int alpha = b.alpha[r], beta = b.beta[r];
    for (int j = beta;; ++j) {
        const int J = j + jtail;
        if (expo + static_cast<long long>(alpha) * J > N) break; // k >= alpha makes this minimal
        const mpz_class cj = coeff * binom_z(j - 1, beta - 1);
        for (int k = alpha;; ++k) {
            const long long e = expo + static_cast<long long>(k) * J;
            if (e > N) break;
            nested_sum_rec(b, r - 1, J, mpz_class(cj * binom_z(k - 1, alpha - 1)),
                           static_cast<int>(e), N, out);
        }
    }
}

} // namespace

TruncatedSeries eval_nested_sum(const BlockForm& blocks, int N) {
    if (blocks.alpha.size() != blocks.beta.size())
        throw eval_error("block form: alpha/beta length mismatch");
    for (std::size_t i = 0; i < blocks.alpha.size(); ++i)
        if (blocks.alpha[i] < 1 || blocks.beta[i] < 1)
            throw eval_error("block form: runs must be >= 1");
    TruncatedSeries out(N);
    nested_sum_rec(blocks, static_cast<int>(blocks.alpha.size()) - 1, 0, mpz_class(1), 0, N, out);
    return out;
}

} // namespace qmzv
