#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncl/presentation.hpp"
#include "ncl/ratfun.hpp"
#include "ncl/ringops.hpp"

namespace ncl {

/// Normal-ordered monomial in the generators: factors strictly ascending in
/// the presentation's order, positive exponents. The empty word is 1.
struct Word {
    std::vector<std::pair<int, int>> f;  // (generator id, exponent)

    bool empty() const { return f.empty(); }
    int total_degree() const {
        int d = 0;
        for (auto& [g, e] : f) d += e;
        return d;
    }
    friend bool operator<(const Word& a, const Word& b) { return a.f < b.f; }
    friend bool operator==(const Word& a, const Word& b) { return a.f == b.f; }
};

enum class ZKind { None, Diff, Shift };

/// Linear combination of normal words with rational coefficients; the value
/// domain of the straightening (PBW rewriting) step.
using WordComb = std::map<Word, Rational>;

namespace detail {

inline void accumulate(WordComb& out, const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

inline void accumulate(WordComb& out, const WordComb& in, const Rational& c) {
    for (auto& [w, r] : in) accumulate(out, w, r * c);
}

struct WordGenKey {
    std::vector<int> data;  // flattened (gen, exp) pairs followed by the generator
    friend bool operator==(const WordGenKey& a, const WordGenKey& b) { return a.data == b.data; }
};

struct WordGenKeyHash {
    size_t operator()(const WordGenKey& k) const {
        size_t h = 0xcbf29ce484222325ULL;
        for (int v : k.data) h = (h ^ static_cast<size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};

using StraightenCache = std::unordered_map<WordGenKey, WordComb, WordGenKeyHash>;

/// Rewrite cache, one per presentation. Presentations are interned and
/// immortal, so keying on the pointer is stable. Single writer per process;
/// a concurrent build would give each worker its own cache.
inline StraightenCache& straighten_cache(const Presentation& p) {
    static std::unordered_map<const Presentation*, StraightenCache> caches;
    return caches[&p];
}

/// Multiply a normal word by a single generator on the right, straightening
/// with the presentation's table: x g -> g x + [x, g] for out-of-order pairs,
/// inverse pairs (E, Einv) cancel. Memoized per presentation.
inline const WordComb& word_mul_gen(const Presentation& P, const Word& w, int g) {
    StraightenCache& cache = straighten_cache(P);
    WordGenKey key;
    key.data.reserve(w.f.size() * 2 + 1);
    for (auto& [gg, ee] : w.f) {
        key.data.push_back(gg);
        key.data.push_back(ee);
    }
    key.data.push_back(g);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    WordComb out;
    if (w.empty()) {
        out.emplace(Word{{{g, 1}}}, Rational(1));
    } else {
        auto [x, e] = w.f.back();
        if (x == g) {
            Word r = w;
            r.f.back().second += 1;
            out.emplace(std::move(r), Rational(1));
        } else if (x < g) {
            Word r = w;
            if (P.inverse_partner(x) == g) {
                if (--r.f.back().second == 0) r.f.pop_back();
            } else {
                r.f.push_back({g, 1});
            }
            out.emplace(std::move(r), Rational(1));
        } else {
            // x > g: peel one x off, insert g, push x back through, add [x, g]
            Word w1 = w;
            if (--w1.f.back().second == 0) w1.f.pop_back();
            for (auto& [u, c] : word_mul_gen(P, w1, g)) accumulate(out, word_mul_gen(P, u, x), c);
            if (const CommRel* rel = P.commutator(x, g)) {
                if (!rel->scalar.is_zero()) accumulate(out, w1, rel->scalar);
                for (auto& [h, ch] : rel->linear) accumulate(out, word_mul_gen(P, w1, h), ch);
            }
        }
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

inline WordComb word_mul(const Presentation& P, const Word& a, const Word& b) {
    WordComb acc{{a, Rational(1)}};
    for (auto& [g, e] : b.f)
        for (int k = 0; k < e; ++k) {
            WordComb next;
            for (auto& [u, c] : acc) accumulate(next, word_mul_gen(P, u, g), c);
            acc = std::move(next);
        }
    return acc;
}

}  // namespace detail

/// Element of a presented algebra extended by the z-operators: a finite sum
/// of (rational function of z) * (normal word) * (dz-power | shift-power).
/// Canonical form keeps every z-operator to the right of all coefficients
/// and words; an element with no z-operator part has kind None.
class Element {
public:
    struct Key {
        Word w;
        long zexp = 0;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.w.f != b.w.f) return a.w < b.w;
            return a.zexp < b.zexp;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.w == b.w && a.zexp == b.zexp;
        }
    };

    explicit Element(PresPtr pres) : pres_(std::move(pres)) { require_pres(); }

    static Element zero(PresPtr pres) { return Element(std::move(pres)); }
    static Element one(PresPtr pres) { return with_coeff(std::move(pres), RatFun(Rational(1))); }
    static Element with_coeff(PresPtr pres, const RatFun& f) {
        Element e(std::move(pres));
        e.add_term(Word{}, 0, f);
        return e;
    }
    static Element scalar(PresPtr pres, const Rational& c) {
        return with_coeff(std::move(pres), RatFun(c));
    }
    static Element generator(PresPtr pres, int id) {
        Element e(std::move(pres));
        e.pres_->gen(id);  // bounds check
        e.add_term(Word{{{id, 1}}}, 0, RatFun(Rational(1)));
        return e;
    }
    static Element monomial(PresPtr pres, const Word& w, const RatFun& f, long zexp = 0,
                            ZKind kind = ZKind::None) {
        Element e(std::move(pres));
        e.kind_ = kind;
        e.add_term(w, zexp, f);
        e.normalize_kind();
        return e;
    }
    /// dz^k (k >= 0).
    static Element dz_power(PresPtr pres, long k) {
        if (k < 0) throw std::invalid_argument("dz_power: negative exponent");
        Element e(std::move(pres));
        e.kind_ = k ? ZKind::Diff : ZKind::None;
        e.add_term(Word{}, k, RatFun(Rational(1)));
        return e;
    }
    /// S^k = exp(k dz), any integer k.
    static Element shift_power(PresPtr pres, long k) {
        Element e(std::move(pres));
        e.kind_ = k ? ZKind::Shift : ZKind::None;
        e.add_term(Word{}, k, RatFun(Rational(1)));
        return e;
    }

    const PresPtr& pres() const { return pres_; }
    ZKind kind() const { return kind_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.w.empty() && t_.begin()->first.zexp == 0 &&
               t_.begin()->second.is_one();
    }
    const std::map<Key, RatFun>& terms() const { return t_; }
    size_t term_count() const { return t_.size(); }

    /// True when the element is a plain rational function (empty word, no
    /// z-operator) — the invertible case for series constant terms.
    std::optional<RatFun> as_coeff() const {
        if (t_.empty()) return RatFun();
        if (t_.size() == 1 && t_.begin()->first.w.empty() && t_.begin()->first.zexp == 0)
            return t_.begin()->second;
        return std::nullopt;
    }

    Element operator-() const {
        Element r = *this;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }

    friend Element operator+(const Element& a, const Element& b) {
        a.require_same_pres(b);
        Element r = a;
        r.kind_ = combine_kind(a.kind_, b.kind_);
        for (auto& [k, c] : b.t_) r.add_term(k.w, k.zexp, c);
        r.normalize_kind();
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }

    friend Element operator*(const Element& a, const Element& b) {
        a.require_same_pres(b);
        ZKind kind = combine_kind(a.kind_, b.kind_);
        Element r(a.pres_);
        r.kind_ = kind;
        const Presentation& P = *a.pres_;
        for (auto& [ka, fa] : a.t_) {
            for (auto& [kb, fb] : b.t_) {
                // move the left term's z-operator past the right coefficient
                std::vector<std::pair<RatFun, long>> moved;
                if (ka.zexp == 0) {
                    moved.emplace_back(fb, 0);
                } else if (kind == ZKind::Diff) {
                    RatFun d = fb;  // dz^a f = sum_j C(a,j) f^(j) dz^(a-j)
                    for (long j = 0; j <= ka.zexp; ++j) {
                        Rational c = binomial(static_cast<unsigned long>(ka.zexp),
                                              static_cast<unsigned long>(j));
                        moved.emplace_back(d * RatFun(c), ka.zexp - j);
                        if (j < ka.zexp) d = d.derivative();
                    }
                } else {  // Shift: S^a f(z) = f(z+a) S^a
                    moved.emplace_back(fb.shifted(Rational(ka.zexp)), ka.zexp);
                }
                WordComb words = detail::word_mul(P, ka.w, kb.w);
                for (auto& [g2, zrem] : moved) {
                    RatFun coeff = fa * g2;
                    if (coeff.is_zero()) continue;
                    for (auto& [w, c] : words) r.add_term(w, zrem + kb.zexp, coeff * RatFun(c));
                }
            }
        }
        r.normalize_kind();
        return r;
    }

    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    Element scaled(const RatFun& f) const {
        Element r(pres_);
        r.kind_ = kind_;
        if (!f.is_zero())
            for (auto& [k, c] : t_) r.add_term(k.w, k.zexp, c * f);
        r.normalize_kind();
        return r;
    }
    Element scaled(const Rational& c) const { return scaled(RatFun(c)); }

    friend Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.pres_ == b.pres_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Replace every coefficient by its exact value at z = u; requires a
    /// z-operator-free element and no pole at u.
    Element evaluate_z(const Rational& u) const {
        require_plain("evaluate_z");
        Element r(pres_);
        for (auto& [k, c] : t_) r.add_term(k.w, 0, RatFun(c.eval(u)));
        return r;
    }

    bool has_pole_at(const Rational& u) const {
        for (auto& [k, c] : t_)
            if (c.has_pole_at(u)) return true;
        return false;
    }

    /// f(z) -> f(z + s) on every coefficient (z-operator-free elements only).
    Element shifted_z(const Rational& s) const {
        require_plain("shifted_z");
        Element r(pres_);
        for (auto& [k, c] : t_) r.add_term(k.w, 0, c.shifted(s));
        return r;
    }

    /// d/dz of every coefficient (z-operator-free elements only).
    Element derived_z() const {
        require_plain("derived_z");
        Element r(pres_);
        for (auto& [k, c] : t_) r.add_term(k.w, 0, c.derivative());
        return r;
    }

    /// The z-operator-free element multiplying dz^k (resp. S^k).
    Element coeff_of_zexp(long k) const {
        Element r(pres_);
        for (auto& [key, c] : t_)
            if (key.zexp == k) r.add_term(key.w, 0, c);
        return r;
    }

    std::set<long> zexps() const {
        std::set<long> s;
        for (auto& [k, c] : t_) s.insert(k.zexp);
        return s;
    }

    /// Formal conjugation: f(z) w dz^i -> (-dz)^i f(z) w, and for shift
    /// operators f(z) w S^k -> S^(-k) f(z) w; coefficients and words are not
    /// otherwise touched.
    Element formal_conjugate() const {
        Element r(pres_);
        r.kind_ = kind_;
        for (auto& [k, c] : t_) {
            if (k.zexp == 0) {
                r.add_term(k.w, 0, c);
                continue;
            }
            if (kind_ == ZKind::Diff) {
                Element piece =
                    dz_power(pres_, k.zexp).scaled(Rational(k.zexp % 2 ? -1L : 1L)) *
                    monomial(pres_, k.w, c);
                for (auto& [kk, cc] : piece.t_) r.add_term(kk.w, kk.zexp, cc);
            } else {
                r.add_term(k.w, -k.zexp, c.shifted(Rational(-k.zexp)));
            }
        }
        r.normalize_kind();
        return r;
    }

    /// Commutative specialization: image in the mirror presentation with all
    /// commutators set to zero, dz -> lam, S -> lam (S^-1 -> laminv).
    Element abelianize() const {
        PresPtr m = pres_->mirror();
        Element r(m);
        for (auto& [k, c] : t_) {
            Word w = k.w;
            if (k.zexp > 0)
                w.f.push_back({m->lam(), static_cast<int>(k.zexp)});
            else if (k.zexp < 0)
                w.f.push_back({m->lam_inv(), static_cast<int>(-k.zexp)});
            r.add_term(w, 0, c);
        }
        return r;
    }

    /// Wick (normal-ordering) quantization of an element of a commutative
    /// mirror: f(z) q^c p^b lam^a -> f(z) qhat^c phat^b dz^a.
    Element wick() const {
        PresPtr target = pres_->wick_target();
        Element r(target);
        r.kind_ = ZKind::Diff;
        for (auto& [k, c] : t_) {
            if (k.zexp != 0) throw std::domain_error("wick: input carries z-operators");
            Word w;
            long a = 0;
            for (auto& [g, e] : k.w.f) {
                if (g == pres_->lam()) {
                    a = e;
                } else if (g == pres_->lam_inv()) {
                    throw std::domain_error("wick: negative lam power has no image");
                } else {
                    if (static_cast<size_t>(g) >= target->size())
                        throw std::domain_error("wick: generator not mirrored in target");
                    w.f.push_back({g, e});
                }
            }
            r.add_term(w, a, c);
        }
        r.normalize_kind();
        return r;
    }

    /// Degree in u of the coefficient family once brought over the common
    /// denominator; used to size evaluation grids.
    int numerator_degree_bound() const {
        Poly lcm(Rational(1));
        for (auto& [k, c] : t_) lcm = Poly::lcm(lcm, c.den());
        int b = 0;
        for (auto& [k, c] : t_)
            b = std::max(b, std::max(0, c.num().degree()) + lcm.degree() - c.den().degree());
        return b;
    }

    std::string str() const;  // in expr_text.hpp

private:
    static ZKind combine_kind(ZKind a, ZKind b) {
        if (a == ZKind::None) return b;
        if (b == ZKind::None || a == b) return a;
        throw std::invalid_argument("Element: mixing dz and shift operators");
    }

    void require_pres() const {
        if (!pres_) throw std::invalid_argument("Element: null presentation");
    }
    void require_same_pres(const Element& o) const {
        if (pres_ != o.pres_) throw std::invalid_argument("Element: mixed presentations");
    }
    void require_plain(const char* op) const {
        if (kind_ != ZKind::None)
            throw std::domain_error(std::string(op) + ": element carries z-operators");
    }

    void add_term(const Word& w, long zexp, const RatFun& c) {
        if (c.is_zero()) return;
        Key k{w, zexp};
        auto [it, fresh] = t_.emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    void normalize_kind() {
        for (auto& [k, c] : t_)
            if (k.zexp != 0) return;
        kind_ = ZKind::None;
    }

    PresPtr pres_;
    ZKind kind_ = ZKind::None;
    std::map<Key, RatFun> t_;
};

template <>
struct RingOps<Element> {
    static Element zero(const Element& like) { return Element::zero(like.pres()); }
    static Element one(const Element& like) { return Element::one(like.pres()); }
    static bool is_zero(const Element& x) { return x.is_zero(); }
    static Element invert(const Element& x) {
        auto f = x.as_coeff();
        if (!f || f->is_zero())
            throw std::domain_error("Element: only nonzero scalar coefficients are invertible");
        return Element::with_coeff(x.pres(), f->inverse());
    }
    static Element scale(const Element& x, const Rational& c) { return x.scaled(c); }
};

/// Normal form of a product of factors (the straightening entry point).
inline Element product(PresPtr pres, const std::vector<Element>& factors) {
    Element r = Element::one(std::move(pres));
    for (const Element& f : factors) r = r * f;
    return r;
}

}  // namespace ncl
