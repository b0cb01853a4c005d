#include "qmzv/stuffle.hpp"

#include <functional>
#include <map>

namespace qmzv {

namespace {

// Internal word form during the recursion: a sequence of (t,s) letters plus
// the family context giving them meaning.  The ~IV tail congruence theta ==
// z'_1 is built into the encoding.
using Letters = std::vector<std::pair<int, int>>;

Letters letters_of(const ZWord& w) {
    Letters out;
    out.reserve(w.ts.depth());
    for (int j = 0; j < w.ts.depth(); ++j) out.emplace_back(w.ts.t[j], w.ts.s[j]);
    return out;
}

ZWord word_from(TypeTag type, const Letters& ls) {
    std::vector<int> t, s;
    t.reserve(ls.size());
    s.reserve(ls.size());
    for (auto [a, b] : ls) {
        t.push_back(a);
        s.push_back(b);
    }
    return ZWord{type, CompositionPair(std::move(t), std::move(s))};
}

Letters cons(std::pair<int, int> head, const Letters& tail) {
    Letters out;
    out.reserve(tail.size() + 1);
    out.push_back(head);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

using LetterComb = std::vector<std::pair<std::pair<int, int>, Rational>>;

// the commutative bracket [a,b] of the family's letter product
LetterComb bracket(TypeTag type, std::pair<int, int> a, std::pair<int, int> b) {
    auto theta = [](std::pair<int, int> l) { return l.first == 1 && l.second == 1; };
    switch (type) {
        case TypeTag::I:
        case TypeTag::tI: {
            if (theta(a) && theta(b)) return {{{1, 2}, Rational(1)}, {{1, 1}, Rational(-1)}};
            if (theta(a) || theta(b)) { // [theta, z_k] = z_{k+1}
                int k = theta(a) ? b.second : a.second;
                return {{{k, k + 1}, Rational(1)}};
            }
            int k = a.second, l = b.second; // [z_k, z_l] = z_{k+l} + z_{k+l-1}
            return {{{k + l - 1, k + l}, Rational(1)}, {{k + l - 2, k + l - 1}, Rational(1)}};
        }
        case TypeTag::II: // [z'_k, z'_l] = z'_{k+l}
            return {{{a.second + b.second, a.second + b.second}, Rational(1)}};
        case TypeTag::G: // [z_{t,s}, z_{t',s'}] = z_{t+t', s+s'}
            return {{{a.first + b.first, a.second + b.second}, Rational(1)}};
        default:
            throw stuffle_error("no plain bracket for this family");
    }
}

// tail product alphabets of III (z_k = (0,k)) and ~IV (z'_k = (k,k)) are
// closed under an additive bracket
LetterComb tail_bracket(TypeTag type, std::pair<int, int> a, std::pair<int, int> b) {
    if (type == TypeTag::III) return {{{0, a.second + b.second}, Rational(1)}};
    return {{{a.second + b.second, a.second + b.second}, Rational(1)}};
}

class QuasiShuffle {
public:
    QuasiShuffle(TypeTag type, bool tail_mode) : type_(type), tail_(tail_mode) {}

    LinComb<ZWord> run(const Letters& u, const Letters& v) {
        auto key = std::make_pair(u, v);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LinComb<ZWord> out;
        if (u.empty()) out = LinComb<ZWord>(word_from(type_, v));
        else if (v.empty()) out = LinComb<ZWord>(word_from(type_, u));
        else {
            Letters uu(u.begin() + 1, u.end());
            Letters vv(v.begin() + 1, v.end());
            out = prepend(u[0], run(uu, v));
            out += prepend(v[0], run(u, vv));
            const auto br = tail_ ? tail_bracket(type_, u[0], v[0]) : bracket(type_, u[0], v[0]);
            LinComb<ZWord> rest = run(uu, vv);
            for (const auto& [letter, c] : br) {
                LinComb<ZWord> scaled = prepend(letter, rest);
                out.add(scaled, c);
            }
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    LinComb<ZWord> prepend(std::pair<int, int> head, const LinComb<ZWord>& c) {
        LinComb<ZWord> out;
        for (const auto& [w, coeff] : c) {
            out.add(word_from(type_, cons(head, letters_of(w))), coeff);
        }
        return out;
    }

    TypeTag type_;
    bool tail_;
    std::map<std::pair<Letters, Letters>, LinComb<ZWord>> memo_;
};

LinComb<ZWord> prepend_word(TypeTag type, std::pair<int, int> head, const LinComb<ZWord>& c) {
    LinComb<ZWord> out;
    for (const auto& [w, coeff] : c) out.add(word_from(type, cons(head, letters_of(w))), coeff);
    return out;
}

// sigma_-(z'_n w) = z_n w - z_{n-1} w   (type III head into tail position)
LinComb<ZWord> sigma_minus(std::pair<int, int> head, const Letters& tail) {
    const int n = head.second;
    LinComb<ZWord> out(word_from(TypeTag::III, cons({0, n}, tail)));
    out.add(word_from(TypeTag::III, cons({0, n - 1}, tail)), Rational(-1));
    return out;
}

// sigma_+(z_n w) = z_n w + z_{n-1} w    (type ~IV head into tail position,
// letters read in the t=s tail realization)
LinComb<ZWord> sigma_plus(std::pair<int, int> head, const Letters& tail) {
    const int n = head.second;
    LinComb<ZWord> out(word_from(TypeTag::tIV, cons({n, n}, tail)));
    out.add(word_from(TypeTag::tIV, cons({n - 1, n - 1}, tail)), Rational(1));
    return out;
}

LinComb<ZWord> stuffle_iii(const ZWord& u, const ZWord& v) {
    if (u.depth() == 0) return LinComb<ZWord>(v);
    if (v.depth() == 0) return LinComb<ZWord>(u);
    Letters lu = letters_of(u), lv = letters_of(v);
    const auto a = lu[0], b = lv[0];
    if (a.first != 1 || b.first != 1) throw stuffle_error("type III heads must be z'");
    Letters uu(lu.begin() + 1, lu.end());
    Letters vv(lv.begin() + 1, lv.end());
    QuasiShuffle tails(TypeTag::III, /*tail_mode=*/true);

    LinComb<ZWord> out;
    for (const auto& [w, c] : sigma_minus(b, vv)) {
        LinComb<ZWord> prod = tails.run(uu, letters_of(w));
        out.add(prepend_word(TypeTag::III, a, prod), c);
    }
    for (const auto& [w, c] : sigma_minus(a, uu)) {
        LinComb<ZWord> prod = tails.run(letters_of(w), vv);
        out.add(prepend_word(TypeTag::III, b, prod), c);
    }
    LinComb<ZWord> rest = tails.run(uu, vv);
    const int kl = a.second + b.second;
    out.add(prepend_word(TypeTag::III, {1, kl}, rest), Rational(1));
    out.add(prepend_word(TypeTag::III, {1, kl - 1}, rest), Rational(-1));
    return out;
}

LinComb<ZWord> stuffle_tiv(const ZWord& u, const ZWord& v) {
    if (u.depth() == 0) return LinComb<ZWord>(v);
    if (v.depth() == 0) return LinComb<ZWord>(u);
    Letters lu = letters_of(u), lv = letters_of(v);
    auto a = lu[0], b = lv[0];
    auto theta = [](std::pair<int, int> l) { return l.first == 1 && l.second == 1; };
    Letters uu(lu.begin() + 1, lu.end());
    Letters vv(lv.begin() + 1, lv.end());
    QuasiShuffle tails(TypeTag::tIV, /*tail_mode=*/true);
    LinComb<ZWord> out;

    if (!theta(a) && !theta(b)) {
        const int k = a.second, l = b.second;
        for (const auto& [w, c] : sigma_plus(b, vv))
            out.add(prepend_word(TypeTag::tIV, a, tails.run(uu, letters_of(w))), c);
        for (const auto& [w, c] : sigma_plus(a, uu))
            out.add(prepend_word(TypeTag::tIV, b, tails.run(letters_of(w), vv)), c);
        LinComb<ZWord> rest = tails.run(uu, vv);
        out.add(prepend_word(TypeTag::tIV, {k + l - 1, k + l}, rest), Rational(1));
        out.add(prepend_word(TypeTag::tIV, {k + l - 2, k + l - 1}, rest), Rational(1));
        return out;
    }
    if (theta(a) != theta(b)) {
        if (theta(a)) { std::swap(a, b); std::swap(uu, vv); }
        // a = z_k, b = theta
        const int k = a.second;
        out.add(prepend_word(TypeTag::tIV, a, tails.run(uu, cons({1, 1}, vv))), Rational(1));
        for (const auto& [w, c] : sigma_plus(a, uu))
            out.add(prepend_word(TypeTag::tIV, {1, 1}, tails.run(letters_of(w), vv)), c);
        out.add(prepend_word(TypeTag::tIV, {k, k + 1}, tails.run(uu, vv)), Rational(1));
        return out;
    }
    // both theta
    out.add(prepend_word(TypeTag::tIV, {1, 1}, tails.run(uu, cons({1, 1}, vv))), Rational(1));
    out.add(prepend_word(TypeTag::tIV, {1, 1}, tails.run(cons({1, 1}, uu), vv)), Rational(1));
    LinComb<ZWord> rest = tails.run(uu, vv);
    out.add(prepend_word(TypeTag::tIV, {1, 2}, rest), Rational(1));
    out.add(prepend_word(TypeTag::tIV, {1, 1}, rest), Rational(-1));
    return out;
}

} // namespace

LinComb<ZWord> stuffle(TypeTag type, const ZWord& u, const ZWord& v) {
    if (u.type != type || v.type != type) throw stuffle_error("stuffle: family mismatch");
    if (u.depth() > 0 && !zword_admissible(u))
        throw stuffle_error("stuffle: inadmissible left factor " + u.ts.str());
    if (v.depth() > 0 && !zword_admissible(v))
        throw stuffle_error("stuffle: inadmissible right factor " + v.ts.str());
    switch (type) {
        case TypeTag::I:
        case TypeTag::tI: {
            QuasiShuffle q(TypeTag::tI, false);
            ZWord uu{TypeTag::tI, u.ts}, vv{TypeTag::tI, v.ts};
            return q.run(letters_of(uu), letters_of(vv));
        }
        case TypeTag::II: {
            QuasiShuffle q(TypeTag::II, false);
            return q.run(letters_of(u), letters_of(v));
        }
        case TypeTag::G: {
            QuasiShuffle q(TypeTag::G, false);
            return q.run(letters_of(u), letters_of(v));
        }
        case TypeTag::III:
            return stuffle_iii(u, v);
        case TypeTag::IV:
        case TypeTag::tIV: {
            ZWord uu{TypeTag::tIV, u.ts}, vv{TypeTag::tIV, v.ts};
            return stuffle_tiv(uu, vv);
        }
        case TypeTag::O:
            throw stuffle_error("use stuffle_o for type O compositions");
    }
    throw stuffle_error("unreachable");
}

LinComb<ZWord> stuffle(TypeTag type, const LinComb<ZWord>& u, const LinComb<ZWord>& v) {
    LinComb<ZWord> out;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) out.add(stuffle(type, wu, wv), Rational(cu * cv));
    return out;
}

LinComb<OWord> stuffle_o(const OWord& u, const OWord& v) {
    for (int x : u)
        if (x < 2) throw stuffle_error("type O letters must be >= 2");
    for (int x : v)
        if (x < 2) throw stuffle_error("type O letters must be >= 2");
    std::function<LinComb<OWord>(const OWord&, const OWord&)> rec =
        [&](const OWord& a, const OWord& b) -> LinComb<OWord> {
        if (a.empty()) return LinComb<OWord>(b);
        if (b.empty()) return LinComb<OWord>(a);
        OWord aa(a.begin() + 1, a.end());
        OWord bb(b.begin() + 1, b.end());
        auto consw = [](int h, const OWord& w) {
            OWord out{h};
            out.insert(out.end(), w.begin(), w.end());
            return out;
        };
        LinComb<OWord> out;
        for (const auto& [w, c] : rec(aa, b)) out.add(consw(a[0], w), c);
        for (const auto& [w, c] : rec(a, bb)) out.add(consw(b[0], w), c);
        const int r = a[0], s = b[0];
        LinComb<OWord> rest = rec(aa, bb);
        for (const auto& [w, c] : rest) {
            out.add(consw(r + s, w), Rational(2 * c));
            if (r % 2 == 1 && s % 2 == 1) out.add(consw(r + s - 2, w), Rational(c / 2));
        }
        return out;
    };
    return rec(u, v);
}

LinComb<OWord> stuffle_o(const LinComb<OWord>& u, const LinComb<OWord>& v) {
    LinComb<OWord> out;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) out.add(stuffle_o(wu, wv), Rational(cu * cv));
    return out;
}

} // namespace qmzv
