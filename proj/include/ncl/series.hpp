#pragma once

#include <stdexcept>
#include <vector>

#include "ncl/ringops.hpp"

namespace ncl {

/// Truncated formal power series in a central parameter t over an arbitrary
/// coefficient ring R. All arithmetic is exact modulo t^(order+1); both
/// operands of a binary operation must carry the same order.
template <class R>
class TruncSeries {
public:
    TruncSeries(int order, const R& like)
        : order_(order), c_(static_cast<size_t>(order) + 1, RingOps<R>::zero(like)) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    }

    static TruncSeries constant(int order, const R& v) {
        TruncSeries s(order, v);
        s.c_[0] = v;
        return s;
    }
    static TruncSeries one(int order, const R& like) {
        return constant(order, RingOps<R>::one(like));
    }

    int order() const { return order_; }
    const R& at(int k) const { return c_.at(static_cast<size_t>(k)); }
    R& at(int k) { return c_.at(static_cast<size_t>(k)); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!RingOps<R>::is_zero(x)) return false;
        return true;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r = a;
        for (int k = 0; k <= a.order_; ++k) r.at(k) = a.at(k) + b.at(k);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.order_, a.c_[0]);
        for (int i = 0; i <= a.order_; ++i) {
            if (RingOps<R>::is_zero(a.at(i))) continue;
            for (int j = 0; i + j <= a.order_; ++j) r.at(i + j) = r.at(i + j) + a.at(i) * b.at(j);
        }
        return r;
    }

    TruncSeries scaled_left(const R& s) const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    /// Two-sided inverse modulo t^(order+1): r0 = c0^-1,
    /// r_k = -c0^-1 * sum_{j=1..k} c_j r_{k-j}. Requires invertible c0.
    TruncSeries inverse() const {
        R inv0 = RingOps<R>::invert(c_[0]);
        TruncSeries r(order_, c_[0]);
        r.at(0) = inv0;
        for (int k = 1; k <= order_; ++k) {
            R acc = RingOps<R>::zero(c_[0]);
            for (int j = 1; j <= k; ++j) acc = acc + at(j) * r.at(k - j);
            r.at(k) = -(inv0 * acc);
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        for (int k = 0; k <= a.order_; ++k)
            if (!RingOps<R>::is_zero(a.at(k) - b.at(k))) return false;
        return true;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (int k = 0; k <= order_; ++k) {
            if (RingOps<R>::is_zero(at(k))) continue;
            if (!s.empty()) s += " + ";
            s += "t^" + std::to_string(k) + "*(" + to_str(at(k)) + ")";
        }
        return s.empty() ? "0" : s;
    }

private:
    template <class T>
    static auto to_str(const T& x) -> decltype(x.str()) {
        return x.str();
    }
    void check(const TruncSeries& o) const {
        if (order_ != o.order_) throw std::invalid_argument("TruncSeries: order mismatch");
    }
    int order_;
    std::vector<R> c_;
};

template <class R>
struct RingOps<TruncSeries<R>> {
    static TruncSeries<R> zero(const TruncSeries<R>& like) {
        return TruncSeries<R>(like.order(), like.at(0));
    }
    static TruncSeries<R> one(const TruncSeries<R>& like) {
        return TruncSeries<R>::one(like.order(), like.at(0));
    }
    static bool is_zero(const TruncSeries<R>& x) { return x.is_zero(); }
    static TruncSeries<R> invert(const TruncSeries<R>& x) { return x.inverse(); }
    static TruncSeries<R> scale(const TruncSeries<R>& x, const Rational& c) {
        TruncSeries<R> r = x;
        for (int k = 0; k <= x.order(); ++k) r.at(k) = RingOps<R>::scale(x.at(k), c);
        return r;
    }
};

}  // namespace ncl
