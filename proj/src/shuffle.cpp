#include "qmzv/shuffle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace qmzv {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<std::string, std::string>& p) const {
        std::hash<std::string> h;
        std::size_t a = h(p.first);
        return a ^ (h(p.second) + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    }
};

using Memo = std::unordered_map<std::pair<std::string, std::string>, LinComb<PYWord>, PairHash>;

LinComb<PYWord> prefixed(char head, const LinComb<PYWord>& c) {
    LinComb<PYWord> out;
    for (const auto& [w, coeff] : c) out.add(PYWord(head + w.letters), coeff);
    return out;
}

const LinComb<PYWord>& shuffle_rec(const std::string& u, const std::string& v, Memo& memo) {
    auto key = std::make_pair(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    LinComb<PYWord> out;
    if (u.empty()) out = LinComb<PYWord>(PYWord(v));
    else if (v.empty()) out = LinComb<PYWord>(PYWord(u));
    else if (u[0] == 'y') out = prefixed('y', shuffle_rec(u.substr(1), v, memo));
    else if (v[0] == 'y') out = prefixed('y', shuffle_rec(u, v.substr(1), memo));
    else if (u[0] == 'p' && v[0] == 'p') {
        out = prefixed('p', shuffle_rec(u.substr(1), v, memo));
        out += prefixed('p', shuffle_rec(u, v.substr(1), memo));
        out.add(prefixed('p', shuffle_rec(u.substr(1), v.substr(1), memo)), Rational(-1));
    } else if (u[0] == 'r' && v[0] == 'r') {
        out = prefixed('r', shuffle_rec(u.substr(1), v, memo));
        out += prefixed('r', shuffle_rec(u, v.substr(1), memo));
        out += prefixed('r', shuffle_rec(u.substr(1), v.substr(1), memo));
    } else {
        // rho u' sha pi v' (swap so u starts with rho)
        const std::string& a = (u[0] == 'r') ? u : v;
        const std::string& b = (u[0] == 'r') ? v : u;
        out = prefixed('r', shuffle_rec('r' + a.substr(1), b.substr(1), memo));
        out += prefixed('r', shuffle_rec(a.substr(1), 'r' + b.substr(1), memo));
        out += shuffle_rec(a, b.substr(1), memo);
        out += prefixed('r', shuffle_rec(a.substr(1), b.substr(1), memo));
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

Memo& thread_memo() {
    thread_local Memo memo;
    return memo;
}

mpz_class binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// phi_a = rho^a y written in the letters of ~I / ~IV heads:
// phi_1 = theta, phi_a = sum_{j=2..a} (-1)^{a+j} z_j + (-1)^{a+1} theta.
// Letters are (t,s) pairs: theta = (1,1), z_j = (j-1,j).
using LetterComb = std::vector<std::pair<std::pair<int, int>, Rational>>;

LetterComb phi_letters(int a) {
    if (a == 0) // gamma = z_1 - theta
        return {{{0, 1}, Rational(1)}, {{1, 1}, Rational(-1)}};
    LetterComb out;
    out.push_back({{1, 1}, Rational((a % 2 == 0) ? -1 : 1)});
    for (int j = 2; j <= a; ++j) out.push_back({{j - 1, j}, Rational(((a + j) % 2 == 0) ? 1 : -1)});
    return out;
}

// per-run typical-letter expansion; head runs and tail runs differ for III
// and ~IV.
LetterComb run_letters(TypeTag type, const PYRun& run, bool head) {
    const int a = run.rho, b = run.pi;
    LetterComb out;
    switch (type) {
        case TypeTag::II:
            if (b != 0) throw shuffle_error("type II normal form cannot contain pi");
            out.push_back({{a, a}, Rational(1)});
            return out;
        case TypeTag::G:
            out.push_back({{a, a + b}, Rational(1)});
            return out;
        case TypeTag::I:
        case TypeTag::tI:
            if (b >= 1) { // rho^a pi^{b-1} (pi y): expand the surplus pi's
                for (int j = 0; j <= b - 1; ++j)
                    out.push_back({{a + j, a + j + 1}, Rational(binom(b - 1, j))});
                return out;
            }
            return phi_letters(a);
        case TypeTag::IV:
        case TypeTag::tIV:
            if (head) {
                if (b >= 1) {
                    for (int j = 0; j <= b - 1; ++j)
                        out.push_back({{a + j, a + j + 1}, Rational(binom(b - 1, j))});
                    return out;
                }
                return phi_letters(a);
            }
            for (int j = 0; j <= b; ++j) // tails are rho-only: pi = rho + 1
                out.push_back({{a + j, a + j}, Rational(binom(b, j))});
            return out;
        case TypeTag::III:
            if (head) {
                if (a < 1) throw shuffle_error("type III head run without rho");
                // pi^b (pi-1)^{a-1} rho y
                for (int j = 0; j <= a - 1; ++j)
                    out.push_back({{1, b + j + 1},
                                   Rational(((a - 1 - j) % 2 == 0) ? binom(a - 1, j) : -binom(a - 1, j))});
                return out;
            }
            // (pi-1)^a pi^b y
            for (int j = 0; j <= a; ++j)
                out.push_back({{0, b + j}, Rational(((a - j) % 2 == 0) ? binom(a, j) : -binom(a, j))});
            return out;
        case TypeTag::O:
            break;
    }
    throw shuffle_error("no typical form for this family");
}

std::string letter_py(TypeTag type, std::pair<int, int> l, bool head) {
    const auto [t, s] = l;
    std::string out;
    switch (type) {
        case TypeTag::I:
        case TypeTag::tI:
        case TypeTag::IV:
        case TypeTag::tIV:
            if (head || type == TypeTag::I || type == TypeTag::tI) {
                if (t == 1 && s == 1) return "ry";
                out.append(s - 1, 'r');
                out += "py";
                return out;
            }
            out.append(s, 'r'); // ~IV tails z'_s
            out.push_back('y');
            return out;
        case TypeTag::II:
            out.append(s, 'r');
            out.push_back('y');
            return out;
        case TypeTag::III:
            if (head) {
                out.append(s - 1, 'p');
                out += "ry";
                return out;
            }
            out.append(s, 'p');
            out.push_back('y');
            return out;
        case TypeTag::G:
            out.append(t, 'r');
            out.append(s - t, 'p');
            out.push_back('y');
            return out;
        case TypeTag::O:
            break;
    }
    throw shuffle_error("no letter word for this family");
}

} // namespace

LinComb<PYWord> shuffle(const PYWord& u, const PYWord& v) {
    return shuffle_rec(u.letters, v.letters, thread_memo());
}

LinComb<PYWord> shuffle(const LinComb<PYWord>& u, const LinComb<PYWord>& v) {
    LinComb<PYWord> out;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) out.add(shuffle(wu, wv), Rational(cu * cv));
    return out;
}

LinComb<PYWord> pr_expand(const PYWord& w) {
    LinComb<PYWord> out(PYWord(""));
    for (char ch : w.letters) {
        LinComb<PYWord> next;
        for (const auto& [word, c] : out) {
            if (ch == 'p') {
                next.add(PYWord(word.letters + 'r'), c);
                next.add(word, c);
            } else {
                next.add(PYWord(word.letters + ch), c);
            }
        }
        out = std::move(next);
    }
    return out;
}

LinComb<PYWord> pr_expand(const LinComb<PYWord>& c) {
    LinComb<PYWord> out;
    for (const auto& [w, coeff] : c) out.add(pr_expand(w), coeff);
    return out;
}

namespace {

// expand one shuffle-output word into typical words of the family
LinComb<PYWord> normalize_word(TypeTag type, const PYWord& w) {
    const auto runs = py_runs(w);
    if (runs.empty()) return LinComb<PYWord>(w);
    LinComb<PYWord> out(PYWord(""));
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto piece = run_letters(type, runs[i], i == 0);
        LinComb<PYWord> next;
        for (const auto& [prefix, c] : out)
            for (const auto& [letter, lc] : piece)
                next.add(PYWord(prefix.letters + letter_py(type, letter, i == 0)), Rational(c * lc));
        out = std::move(next);
    }
    return out;
}

} // namespace

LinComb<PYWord> normalize_typical(TypeTag type, const LinComb<PYWord>& c) {
    LinComb<PYWord> out;
    for (const auto& [w, coeff] : c) out.add(normalize_word(type, w), coeff);
    return out;
}

LinComb<ZWord> typical_to_zwords(TypeTag type, const LinComb<PYWord>& c) {
    LinComb<ZWord> out;
    for (const auto& [w, coeff] : c) {
        const auto runs = py_runs(w);
        std::vector<int> t, s;
        t.reserve(runs.size());
        s.reserve(runs.size());
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto [rho, pi] = runs[i];
            switch (type) {
                case TypeTag::I:
                case TypeTag::tI:
                    if (rho == 1 && pi == 0) { t.push_back(1); s.push_back(1); } // theta
                    else { t.push_back(rho); s.push_back(rho + pi); }            // z_{rho+1}, pi==1
                    break;
                case TypeTag::IV:
                case TypeTag::tIV:
                    if (i == 0) {
                        if (rho == 1 && pi == 0) { t.push_back(1); s.push_back(1); }
                        else { t.push_back(rho); s.push_back(rho + pi); }
                    } else {
                        t.push_back(rho); s.push_back(rho);
                    }
                    break;
                case TypeTag::II:
                    t.push_back(rho); s.push_back(rho);
                    break;
                case TypeTag::III:
                    if (i == 0) { t.push_back(1); s.push_back(pi + rho); }
                    else { t.push_back(0); s.push_back(pi); }
                    break;
                case TypeTag::G:
                    t.push_back(rho); s.push_back(rho + pi);
                    break;
                case TypeTag::O:
                    throw shuffle_error("type O has no ZWord form");
            }
        }
        out.add(ZWord{type == TypeTag::I ? TypeTag::tI : (type == TypeTag::IV ? TypeTag::tIV : type),
                      CompositionPair(std::move(t), std::move(s))},
                coeff);
    }
    return out;
}

LinComb<ZWord> shuffle_z(TypeTag type, const ZWord& u, const ZWord& v) {
    const auto sh = shuffle(zword_to_py(u), zword_to_py(v));
    return typical_to_zwords(type, normalize_typical(type, sh));
}

LinComb<ZWord> pure_word_expand(TypeTag type, const PYWord& pure) {
    if (!pure.pure()) throw shuffle_error("pure_word_expand: word contains pi");
    if (!pure.admissible()) throw shuffle_error("pure_word_expand: inadmissible word");
    return typical_to_zwords(type, normalize_typical(type, LinComb<PYWord>(pure)));
}

namespace {

void pure_words_rec(int w, std::string& cur, int rho, int y, std::vector<PYWord>& out) {
    if (!cur.empty() && cur.back() == 'y') out.emplace_back(cur);
    if (rho < w && !cur.empty()) {
        cur.push_back('r');
        pure_words_rec(w, cur, rho + 1, y, out);
        cur.pop_back();
    }
    if (rho < w && cur.empty()) { // words start with rho
        cur.push_back('r');
        pure_words_rec(w, cur, rho + 1, y, out);
        cur.pop_back();
    }
    if (y < w && !cur.empty()) {
        cur.push_back('y');
        pure_words_rec(w, cur, rho, y + 1, out);
        cur.pop_back();
    }
}

bool nondegenerate_runs(const PYWord& w) {
    int run = 0;
    char prev = 0;
    for (char ch : w.letters) {
        if (ch == prev) { ++run; continue; }
        if (prev != 0 && run < 2) return false;
        prev = ch;
        run = 1;
    }
    return run >= 2;
}

} // namespace

std::vector<DualityRelation> duality_relations(TypeTag type, int w) {
    if (w < 1) throw shuffle_error("duality_relations: weight must be >= 1");
    std::vector<PYWord> words;
    std::string cur;
    pure_words_rec(w, cur, 0, 0, words);
    std::sort(words.begin(), words.end());

    std::vector<DualityRelation> out;
    std::set<std::pair<PYWord, PYWord>> seen;
    const bool ti_like = (type == TypeTag::I || type == TypeTag::tI);
    for (const auto& word : words) {
        if (ti_like && !nondegenerate_runs(word)) continue;
        const PYWord d = dual(word);
        if (d == word) continue;
        auto key = std::minmax(word, d);
        if (!seen.insert(key).second) continue;
        bool escaped = false;
        LinComb<ZWord> rel;
        for (const auto& side : {std::make_pair(word, Rational(1)), std::make_pair(d, Rational(-1))}) {
            for (const auto& [zw, c] : pure_word_expand(type, side.first)) {
                if (zw.weight() > w || zw.depth() > w) { escaped = true; break; }
                rel.add(zw, Rational(c * side.second));
            }
            if (escaped) break;
        }
        if (escaped || rel.zero()) continue;
        out.push_back({word, d, std::move(rel)});
    }
    return out;
}

} // namespace qmzv
