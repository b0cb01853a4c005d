#pragma once

#include "qmzv/rational.hpp"

#include <map>
#include <utility>

namespace qmzv {

// Finitely supported map word -> Rational.  Zero coefficients are never
// stored; the map order doubles as the deterministic iteration order.
template <typename W>
class LinComb {
public:
    using map_type = std::map<W, Rational>;

    LinComb() = default;
    explicit LinComb(const W& w, Rational c = Rational(1)) { add(w, std::move(c)); }

    void add(const W& w, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Rational& scale = Rational(1)) {
        if (scale == 0) return;
        for (const auto& [w, c] : other.terms_) add(w, Rational(scale * c));
    }

    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Rational(-1)); return *this; }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const Rational& c, LinComb a) { a *= c; return a; }

    Rational coeff(const W& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

    // Applies f to every word, collecting f(w) scaled by the coefficient.
    template <typename F>
    auto map_words(F&& f) const {
        using R = decltype(f(std::declval<const W&>()));
        R out;
        for (const auto& [w, c] : terms_) out.add(f(w), c);
        return out;
    }

private:
    map_type terms_;
};

} // namespace qmzv
