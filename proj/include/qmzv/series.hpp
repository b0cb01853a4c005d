#pragma once

#include "qmzv/rational.hpp"

#include <string>
#include <vector>

namespace qmzv {

// Power series in q modulo q^{N+1} with exact rational coefficients.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : c_(order + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }

    Rational& operator[](int i) { return c_[i]; }
    const Rational& operator[](int i) const { return c_[i]; }

    bool zero() const;
    // index of the first nonzero coefficient, or -1 for the zero series
    int ord_q() const;

    TruncatedSeries truncated(int new_order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& r);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { a += b; return a; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { a -= b; return a; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    void add_scaled(const TruncatedSeries& o, const Rational& r);

    // in place: multiply by q^k (drop overflow)
    void shift(int k);
    // in place: multiply by (1 - q^k)^{-1}, the stride-k prefix sum
    void geometric_divide(int k);
    // in place: multiply by (1 - q^k)
    void geometric_multiply(int k);

    // "c0 + c1*q + c2*q^2 + ..." with rationals as "p/q"
    std::string str() const;
    std::vector<std::string> coeff_strings() const;

    static TruncatedSeries one(int order);

private:
    std::vector<Rational> c_; // coefficient of q^0 .. q^order
};

} // namespace qmzv
