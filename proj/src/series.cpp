#include "qmzv/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qmzv {

bool TruncatedSeries::zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

int TruncatedSeries::ord_q() const {
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        if (c_[i] != 0) return i;
    return -1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("truncated: order grows");
    TruncatedSeries out(new_order);
    for (int i = 0; i <= new_order; ++i) out.c_[i] = c_[i];
    return out;
}

static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_same_order(*this, o);
    for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_same_order(*this, o);
    for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

void TruncatedSeries::add_scaled(const TruncatedSeries& o, const Rational& r) {
    check_same_order(*this, o);
    if (r == 0) return;
    for (int i = 0; i <= order(); ++i)
        if (o.c_[i] != 0) c_[i] += r * o.c_[i];
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b);
    const int N = a.order();
    TruncatedSeries out(N);
    for (int i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

void TruncatedSeries::shift(int k) {
    if (k == 0) return;
    const int N = order();
    if (k > N) {
        for (auto& x : c_) x = 0;
        return;
    }
    for (int i = N; i >= k; --i) c_[i] = c_[i - k];
    for (int i = 0; i < k; ++i) c_[i] = 0;
}

void TruncatedSeries::geometric_divide(int k) {
    const int N = order();
    for (int i = k; i <= N; ++i) c_[i] += c_[i - k];
}

void TruncatedSeries::geometric_multiply(int k) {
    const int N = order();
    for (int i = N; i >= k; --i) c_[i] -= c_[i - k];
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) out << " + ";
        out << c_[i].get_str();
        if (i == 1) out << "*q";
        else if (i > 1) out << "*q^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::vector<std::string> TruncatedSeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.get_str());
    return out;
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s[0] = 1;
    return s;
}

} // namespace qmzv
