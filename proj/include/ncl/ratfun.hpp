#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ncl/poly.hpp"

namespace ncl {

/// Evaluation hit a pole of a rational function.
struct PoleError : std::runtime_error {
    explicit PoleError(const Rational& u, const std::string& what = "")
        : std::runtime_error("pole at z = " + u.str() + (what.empty() ? "" : ": " + what)),
          point(u) {}
    Rational point;
};

/// Rational function of z in canonical form: denominator monic and nonzero,
/// gcd(num, den) = 1, zero is 0/1. Equal values have identical representation.
class RatFun {
public:
    RatFun() : den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun var() { return RatFun(Poly::var()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFun: not a constant");
        return num_.coeff(0);
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    RatFun inverse() const {
        if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }

    /// Exact quotient-rule derivative with respect to z.
    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// f(z) -> f(z + s).
    RatFun shifted(const Rational& s) const { return RatFun(num_.shifted(s), den_.shifted(s)); }

    bool has_pole_at(const Rational& u) const { return den_.eval(u).is_zero(); }

    Rational eval(const Rational& u) const {
        Rational d = den_.eval(u);
        if (d.is_zero()) throw PoleError(u, str());
        return num_.eval(u) / d;
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const {
        if (den_.is_one()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lc = den_.lc();
        if (!lc.is_one()) {
            num_ = num_.scaled(lc.inverse());
            den_ = den_.scaled(lc.inverse());
        }
    }

    Poly num_, den_;
};

/// 1/(z - a).
inline RatFun simple_pole(const Rational& a) {
    return RatFun(Poly(Rational(1)), Poly(std::vector<Rational>{-a, Rational(1)}));
}

}  // namespace ncl
