#pragma once

#include <vector>

#include "ncl/ringops.hpp"
#include "ncl/series.hpp"

namespace ncl {

/// Polynomial in a central variable t with coefficients in an arbitrary ring
/// R, ascending powers. Always holds at least one coefficient so that ring
/// context (a presentation, a truncation order) is never lost.
template <class R>
class TPoly {
public:
    explicit TPoly(const R& c0) : c_{c0} { trim(); }
    explicit TPoly(std::vector<R> c) : c_(std::move(c)) {
        if (c_.empty()) throw std::invalid_argument("TPoly: empty coefficient list");
        trim();
    }

    static TPoly zero(const R& like) { return TPoly(RingOps<R>::zero(like)); }
    static TPoly one(const R& like) { return TPoly(RingOps<R>::one(like)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    R coeff(int k) const {
        if (k < 0 || k > degree()) return RingOps<R>::zero(c_[0]);
        return c_[static_cast<size_t>(k)];
    }

    bool is_zero() const { return c_.size() == 1 && RingOps<R>::is_zero(c_[0]); }

    TPoly operator-() const {
        TPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), RingOps<R>::zero(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return TPoly(std::move(c));
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, RingOps<R>::zero(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (RingOps<R>::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return TPoly(std::move(c));
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    TruncSeries<R> as_series(int order) const {
        TruncSeries<R> s(order, c_[0]);
        for (int k = 0; k <= std::min(order, degree()); ++k) s.at(k) = c_[static_cast<size_t>(k)];
        return s;
    }

private:
    void trim() {
        while (c_.size() > 1 && RingOps<R>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
struct RingOps<TPoly<R>> {
    static TPoly<R> zero(const TPoly<R>& like) { return TPoly<R>::zero(like.coeff(0)); }
    static TPoly<R> one(const TPoly<R>& like) { return TPoly<R>::one(like.coeff(0)); }
    static bool is_zero(const TPoly<R>& x) { return x.is_zero(); }
    static TPoly<R> invert(const TPoly<R>&) {
        throw std::domain_error("TPoly: not invertible; truncate to a series first");
    }
    static TPoly<R> scale(const TPoly<R>& x, const Rational& c) {
        std::vector<R> v;
        for (int k = 0; k <= x.degree(); ++k) v.push_back(RingOps<R>::scale(x.coeff(k), c));
        return TPoly<R>(std::move(v));
    }
};

}  // namespace ncl
