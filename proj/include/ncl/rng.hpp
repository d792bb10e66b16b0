#pragma once

#include <cstdint>

#include "ncl/ratfun.hpp"

namespace ncl {

/// splitmix64: tiny deterministic generator, identical streams on every
/// platform for a given seed.
struct Rng {
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rational(long max_abs_num = 5, long max_den = 3) {
        long d = range(1, max_den);
        return Rational(range(-max_abs_num, max_abs_num), d);
    }

    Rational nonzero_rational(long max_abs_num = 5, long max_den = 3) {
        for (;;) {
            Rational r = rational(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    Poly poly(int max_deg = 3, long max_abs = 4) {
        std::vector<Rational> c(static_cast<size_t>(range(0, max_deg)) + 1);
        for (auto& x : c) x = rational(max_abs, 2);
        return Poly(std::move(c));
    }

    Poly nonzero_poly(int max_deg = 3, long max_abs = 4) {
        for (;;) {
            Poly p = poly(max_deg, max_abs);
            if (!p.is_zero()) return p;
        }
    }

    RatFun ratfun(int max_deg = 2) {
        return RatFun(poly(max_deg), nonzero_poly(max_deg));
    }

    uint64_t state;
};

}  // namespace ncl
