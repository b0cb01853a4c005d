#include "qmzv/okounkov.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qmzv {

OSplit osplit(int s) {
    if (s < 1) throw relation_error("osplit: argument must be >= 1");
    return {s, s / 2, (s + 1) / 2};
}

std::vector<OWord> enumerate_o(int w) {
    std::vector<OWord> out;
    OWord cur;
    std::function<void(int)> rec = [&](int wt) {
        if (!cur.empty()) out.push_back(cur);
        for (int k = 2; k <= w - wt; ++k) {
            cur.push_back(k);
            rec(wt + k);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const OWord& a, const OWord& b) {
        const int wa = std::accumulate(a.begin(), a.end(), 0);
        const int wb = std::accumulate(b.begin(), b.end(), 0);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

long long count_o(int w) { return count_admissible(TypeTag::O, w); }

LinComb<PYWord> oword_expand(const OWord& s) {
    for (int x : s)
        if (x < 2) throw relation_error("oword_expand: arguments must be >= 2");
    LinComb<PYWord> out(PYWord(""));
    for (int x : s) {
        const OSplit sp = osplit(x);
        LinComb<PYWord> next;
        auto block = [&](int r, int p) {
            return std::string(r, 'r') + std::string(p, 'p') + "y";
        };
        for (const auto& [w, c] : out) {
            if (sp.minus == sp.plus) {
                next.add(PYWord(w.letters + block(sp.minus, sp.plus)), Rational(2 * c));
            } else {
                next.add(PYWord(w.letters + block(sp.minus, sp.plus)), c);
                next.add(PYWord(w.letters + block(sp.plus, sp.minus)), c);
            }
        }
        out = std::move(next);
    }
    return out;
}

TruncatedSeries eval_o(const OWord& s, int N) {
    const int d = static_cast<int>(s.size());
    if (d == 0) return TruncatedSeries::one(N);
    for (int x : s)
        if (x < 2) throw relation_error("eval_o: arguments must be >= 2");
    std::vector<TruncatedSeries> H;
    TruncatedSeries total(N);
    for (int j = d - 1; j >= 0; --j) {
        const OSplit sp = osplit(s[j]);
        std::vector<TruncatedSeries> Hnext(N + 2, TruncatedSeries(N));
        TruncatedSeries acc(N);
        for (int k = 1; k <= N + 1; ++k) {
            Hnext[k] = acc;
            if (k > N) break;
            TruncatedSeries g = H.empty() ? TruncatedSeries::one(N) : H[k];
            if (g.zero()) continue;
            if (static_cast<long long>(sp.minus) * k > N) continue;
            for (int rep = 0; rep < s[j]; ++rep) g.geometric_divide(k);
            TruncatedSeries plus = g;
            plus.shift(sp.plus * k);
            g.shift(sp.minus * k);
            g += plus;
            acc += g;
        }
        total = acc;
        H = std::move(Hnext);
    }
    return total;
}

TruncatedSeries eval_o(const LinComb<OWord>& c, int N) {
    TruncatedSeries out(N);
    for (const auto& [w, coeff] : c) out.add_scaled(eval_o(w, N), coeff);
    return out;
}

TruncatedSeries f_o(int n, int order) {
    const OSplit sp = osplit(n);
    TruncatedSeries out(order);
    if (sp.minus <= order) out[sp.minus] = 1;
    if (sp.plus <= order) out[sp.plus] += 1;
    for (int rep = 0; rep < n; ++rep) out.geometric_divide(1);
    return out;
}

std::vector<long long> okounkov_conjecture_dims(int w) {
    // 1/(1 - t - t^2 + t^6 + t^8 - t^13) - 1/(1-t)
    std::vector<long long> f(w + 1, 0);
    f[0] = 1;
    // recurrence from the denominator
    const std::vector<std::pair<int, long long>> den = {{1, -1}, {2, -1}, {6, 1}, {8, 1}, {13, -1}};
    for (int n = 1; n <= w; ++n) {
        long long v = 0;
        for (auto [d, c] : den)
            if (n - d >= 0) v -= c * f[n - d];
        f[n] = v;
    }
    for (int n = 0; n <= w; ++n) f[n] -= 1;
    return f;
}

OkounkovReport verify_okounkov(int w, int N, const RelationSystem* ii_system, EvalCache* cache) {
    if (w < 2) throw relation_error("verify_okounkov: weight must be >= 2");
    OkounkovReport rep;
    const auto words = enumerate_o(w);
    rep.words = static_cast<int>(words.size());
    rep.conjectured = static_cast<int>(okounkov_conjecture_dims(w).back());

    // echelon of the series rows while tracking the combination producing
    // each reduced row; zero rows yield kernel relations
    struct Tracked {
        SparseRow v;
        LinComb<OWord> combo;
    };
    std::vector<Tracked> pivots; // leading columns strictly increasing insert order
    std::map<int, int> pivot_at; // column -> index into pivots
    for (const auto& word : words) {
        const TruncatedSeries s = eval_o(word, N);
        SparseRow row;
        for (int i = 0; i <= N; ++i)
            if (s[i] != 0) row.emplace_back(i, s[i]);
        LinComb<OWord> combo(word);
        while (!row.empty()) {
            auto it = pivot_at.find(row.front().first);
            if (it == pivot_at.end()) break;
            const Tracked& p = pivots[it->second];
            const Rational f = row.front().second;
            SparseRow merged;
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < p.v.size()) {
                if (b == p.v.size() || (a < row.size() && row[a].first < p.v[b].first)) {
                    merged.push_back(row[a++]);
                } else if (a == row.size() || p.v[b].first < row[a].first) {
                    merged.emplace_back(p.v[b].first, Rational(-f * p.v[b].second));
                    ++b;
                } else {
                    Rational nv = row[a].second - f * p.v[b].second;
                    if (nv != 0) merged.emplace_back(row[a].first, std::move(nv));
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
            combo.add(p.combo, Rational(-f));
        }
        if (row.empty()) {
            rep.kernel.push_back(std::move(combo));
        } else {
            const Rational inv = 1 / row.front().second;
            for (auto& [c, v] : row) v *= inv;
            combo *= inv;
            pivot_at[row.front().first] = static_cast<int>(pivots.size());
            pivots.push_back({std::move(row), std::move(combo)});
        }
    }
    rep.series_rank = static_cast<int>(pivots.size());

    if (ii_system) {
        if (ii_system->type != TypeTag::II)
            throw relation_error("verify_okounkov: relation system must be type II");
        if (ii_system->weight < w)
            throw relation_error("verify_okounkov: type II system weight too small");
        Echelon e;
        for (const auto& r : ii_system->rows) e.add(r.v);
        int certified = 0;
        for (const auto& combo : rep.kernel) {
            // O relation -> pure words -> type II vector
            LinComb<ZWord> zvec;
            for (const auto& [oword, c] : combo) {
                const auto pure = pr_expand(oword_expand(oword));
                for (const auto& [pw, pc] : pure)
                    zvec.add(typical_to_zwords(TypeTag::II, LinComb<PYWord>(pw)), Rational(c * pc));
            }
            SparseRow row;
            bool inside = true;
            for (const auto& [zw, c] : zvec) {
                const int col = ii_system->column_of(zw);
                if (col < 0) { inside = false; break; }
                row.emplace_back(col, c);
            }
            bool ok = inside && e.in_span(std::move(row));
            rep.kernel_certified.push_back(ok);
            if (ok) ++certified;
        }
        rep.certified_dim = rep.words - certified;
        if (rep.series_rank > *rep.certified_dim)
            throw relation_error("okounkov: series rank exceeds certified dimension (unsound system)");
    }
    return rep;
}

namespace {

std::vector<ORelation> build_o_relations() {
    // sum coeff * z^O[s] == 0.  Where the printed source list carries a
    // transcription slip the verified form is used; every entry is checked
    // against the series oracle by the test suite.
    auto R = [](std::string name,
                std::vector<std::pair<Rational, OWord>> terms) {
        return ORelation{std::move(name), std::move(terms)};
    };
    const Rational half(1, 2);
    std::vector<ORelation> out;
    out.push_back(R("w6 #1", {{4, {6}}, {1, {2, 2}}, {-12, {3, 3}}, {6, {4, 2}}}));
    out.push_back(R("w7 #2", {{4, {7}}, {-1, {2, 3}}, {-1, {3, 2}}, {-8, {3, 4}}, {-6, {4, 3}}, {4, {5, 2}}}));
    out.push_back(R("w8 #3", {{1, {8}}, {-1, {2, 4}}, {1, {6}}, {-2, {3, 3}}, {-6, {4, 4}}}));
    out.push_back(R("w8 #4", {{9, {8}}, {-1, {6}}, {-half, {2, 2}}, {4, {3, 3}}, {-1, {4, 2}},
                              {-20, {3, 5}}, {-16, {5, 3}}, {10, {6, 2}}}));
    out.push_back(R("w8 #5", {{1, {8}}, {-2, {2, 6}}, {1, {6}}, {-2, {3, 3}}, {-4, {3, 5}}, {16, {5, 3}},
                              {6, {2, 3, 3}}, {-3, {2, 4, 2}}, {6, {3, 2, 3}}, {3, {4, 2, 2}}}));
    out.push_back(R("w9 #6", {{4, {3, 6}}, {-1, {2, 5}}, {-2, {5, 2}}, {1, {3, 4}}, {-6, {4, 5}},
                              {-8, {5, 4}}, {-2, {7, 2}}}));
    out.push_back(R("w9 #7", {{8, {9}}, {1, {3, 4}}, {-5, {2, 5}}, {-8, {5, 2}}, {-30, {4, 5}},
                              {-2, {4, 3}}, {-36, {5, 4}}, {-10, {6, 3}}}));
    out.push_back(R("w8 #8", {{6, {4, 2}}, {-10, {6}}, {-42, {8}}, {2, {2, 2}}, {60, {2, 6}}, {12, {3, 3}},
                              {120, {3, 5}}, {-312, {5, 3}}, {15, {2, 2, 2}}, {-180, {2, 3, 3}},
                              {90, {2, 4, 2}}, {-180, {3, 2, 3}}, {-60, {3, 3, 2}}}));
    out.push_back(R("w9 #9", {{72, {9}}, {-62, {5, 2}}, {-40, {2, 5}}, {4, {3, 4}}, {-40, {3, 6}},
                              {2, {4, 3}}, {-240, {4, 5}}, {-264, {5, 4}}, {5, {2, 2, 3}},
                              {60, {3, 3, 3}}, {30, {4, 2, 3}}}));
    out.push_back(R("w9 #10", {{-16, {9}}, {-2, {3, 4}}, {10, {2, 5}}, {12, {2, 7}}, {8, {5, 2}},
                               {60, {4, 5}}, {24, {5, 4}}, {-4, {2, 3, 2}}, {-4, {3, 2, 2}},
                               {-3, {2, 2, 3}}, {-24, {2, 3, 4}}, {-18, {2, 4, 3}}, {-12, {3, 3, 3}},
                               {12, {2, 5, 2}}, {-24, {3, 2, 4}}, {-6, {4, 3, 2}}}));
    out.push_back(R("w9 #11", {{64, {9}}, {-40, {2, 5}}, {-20, {2, 7}}, {8, {3, 4}}, {-44, {5, 2}},
                               {-20, {3, 6}}, {4, {4, 3}}, {-240, {4, 5}}, {-168, {5, 4}},
                               {5, {2, 3, 2}}, {5, {2, 2, 3}}, {40, {2, 3, 4}}, {30, {2, 4, 3}},
                               {-20, {2, 5, 2}}, {5, {3, 2, 2}}, {40, {3, 2, 4}}, {100, {3, 3, 3}},
                               {-10, {3, 4, 2}}}));
    out.push_back(R("w9 #12", {{56, {9}}, {-30, {2, 5}}, {-20, {2, 7}}, {-26, {5, 2}}, {2, {3, 4}},
                               {-40, {3, 6}}, {6, {4, 3}}, {-180, {4, 5}}, {-112, {5, 4}},
                               {5, {2, 2, 3}}, {5, {2, 3, 2}}, {5, {3, 2, 2}}, {40, {2, 3, 4}},
                               {-20, {5, 2, 2}}, {40, {3, 2, 4}}, {30, {2, 4, 3}}, {-20, {2, 5, 2}},
                               {140, {3, 3, 3}}}));
    return out;
}

} // namespace

const std::vector<ORelation>& o_relation_list() {
    static const std::vector<ORelation> list = build_o_relations();
    return list;
}

bool verify_o_relation_list(int N) {
    for (const auto& rel : o_relation_list()) {
        TruncatedSeries acc(N);
        for (const auto& [c, s] : rel.terms) acc.add_scaled(eval_o(s, N), c);
        if (!acc.zero()) return false;
    }
    return true;
}

} // namespace qmzv
