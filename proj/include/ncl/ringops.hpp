#pragma once

#include "ncl/ratfun.hpp"

namespace ncl {

/// Ring interface used by the generic matrix/series algorithms. `like` passes
/// along whatever context a ring element carries (an algebra presentation, a
/// truncation order); plain scalar rings ignore it.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational invert(const Rational& x) { return x.inverse(); }
    static Rational scale(const Rational& x, const Rational& c) { return x * c; }
};

template <>
struct RingOps<RatFun> {
    static RatFun zero(const RatFun&) { return RatFun(); }
    static RatFun one(const RatFun&) { return RatFun(Rational(1)); }
    static bool is_zero(const RatFun& x) { return x.is_zero(); }
    static RatFun invert(const RatFun& x) { return x.inverse(); }
    static RatFun scale(const RatFun& x, const Rational& c) { return x * RatFun(c); }
};

}  // namespace ncl
