#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncl/rational.hpp"

namespace ncl {

/// Dense univariate polynomial over Rational, coefficients ascending.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static Poly var() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[k];
    }
    const Rational& lc() const { return c_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    Poly scaled(const Rational& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    /// Euclidean division; requires b nonzero. Returns (quotient, remainder).
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly q, r = a;
        std::vector<Rational> qc(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                                 Rational(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            Rational f = r.lc() / b.lc();
            qc[d] = f;
            std::vector<Rational> sub(d + b.c_.size(), Rational(0));
            for (size_t i = 0; i < b.c_.size(); ++i) sub[d + i] = b.c_[i] * f;
            r = r - Poly(std::move(sub));
        }
        return {Poly(std::move(qc)), r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lc().inverse());
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = (a % b).monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    static Poly lcm(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        return ((a * b) / gcd(a, b)).monic();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(c));
    }

    /// p(z) -> p(z + s), computed by Horner evaluation at (z + s).
    Poly shifted(const Rational& s) const {
        Poly zs(std::vector<Rational>{s, Rational(1)});
        Poly r;
        for (int k = degree(); k >= 0; --k) r = r * zs + Poly(c_[static_cast<size_t>(k)]);
        return r;
    }

    Rational eval(const Rational& u) const {
        Rational r(0);
        for (int k = degree(); k >= 0; --k) r = r * u + c_[static_cast<size_t>(k)];
        return r;
    }

    Poly pow(int e) const {
        Poly r(Rational(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            Rational a = c_[static_cast<size_t>(k)];
            if (a.is_zero()) continue;
            bool first = s.empty();
            if (!first) s += a.sign() < 0 ? " - " : " + ";
            if (!first && a.sign() < 0) a = -a;
            std::string mon;
            if (k == 0)
                mon = a.str();
            else {
                std::string pw = (k == 1) ? var : var + "^" + std::to_string(k);
                if (a.is_one())
                    mon = pw;
                else if (first && a == Rational(-1))
                    mon = "-" + pw;
                else
                    mon = a.str() + "*" + pw;
            }
            s += mon;
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace ncl
