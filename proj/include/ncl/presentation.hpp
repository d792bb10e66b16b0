#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncl/rational.hpp"

namespace ncl {

enum class GenKind { HeisenbergQ, HeisenbergP, GlBasis, ExpPos, ExpNeg, Central };

enum class PresKind { Commutative, Weyl, GlSum, GlPoly, Toda };

struct Generator {
    GenKind kind;
    int row = 0;   // i index of q_{i,j}, p_{i,j}, e_{i,j}
    int col = 0;   // j index of e_{i,j}
    int site = 0;  // site for q/p/gl-sum generators, t-power for gl-poly
    std::string name;
};

/// [g_hi, g_lo] = scalar + sum of linear terms; only stored for pairs that do
/// not commute.
struct CommRel {
    Rational scalar;
    std::vector<std::pair<int, Rational>> linear;
};

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

/// A finitely presented algebra: an ordered generator list (the order fixes
/// the normal form) plus a scalar-plus-linear commutation table. Immutable
/// after construction; shared by every element built over it.
class Presentation : public std::enable_shared_from_this<Presentation> {
public:
    /// Heisenberg generators q_{i,j}, p_{i,j}, i = 1..rows, j = 1..sites,
    /// with [p_{ij}, q_{kl}] = delta_ik delta_jl. Normal order puts every q
    /// before every p (site-major within each block).
    ///
    /// Factories intern their results: the same parameters always return the
    /// same object, so elements built in different places compare freely.
    static PresPtr weyl(int rows, int sites) {
        return interned("weyl/" + std::to_string(rows) + "/" + std::to_string(sites), [&] {
            auto p = make(PresKind::Weyl, rows, sites, 0);
            p->add_heisenberg(rows, sites);
            p->attach_mirror();
            return p;
        });
    }

    /// Basis e^s_{ij} of gl_n + ... + gl_n (sites copies), ordered
    /// (site, row, column), with the gl_n bracket within each copy.
    static PresPtr gl_sum(int n, int sites) {
        return interned("glsum/" + std::to_string(n) + "/" + std::to_string(sites), [&] {
            auto p = make(PresKind::GlSum, n, sites, 0);
            for (int s = 1; s <= sites; ++s)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        p->gens_.push_back({GenKind::GlBasis, i, j, s,
                                            "e[" + std::to_string(i) + "," + std::to_string(j) +
                                                ";" + std::to_string(s) + "]"});
            p->fill_gl_table(/*poly_trunc=*/0);
            p->attach_mirror();
            return p;
        });
    }

    /// Basis e_{ij} t^a of gl_n[t]/t^trunc, a = 0..trunc-1, ordered
    /// (power, row, column); brackets with a+b >= trunc vanish.
    static PresPtr gl_poly(int n, int trunc) {
        return interned("glpoly/" + std::to_string(n) + "/" + std::to_string(trunc), [&] {
            auto p = make(PresKind::GlPoly, n, 1, trunc);
            for (int a = 0; a < trunc; ++a)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        p->gens_.push_back({GenKind::GlBasis, i, j, a,
                                            "e[" + std::to_string(i) + "," + std::to_string(j) +
                                                ";" + std::to_string(a) + "]"});
            p->fill_gl_table(trunc);
            p->attach_mirror();
            return p;
        });
    }

    /// Toda chain generators: per site i an invertible pair
    /// E[i] = exp(q_i), Einv[i] = exp(-q_i) with E[i]*Einv[i] = 1, plus p_i
    /// with [p_i, E[i]] = E[i] and [p_i, Einv[i]] = -Einv[i]; everything
    /// across sites commutes.
    static PresPtr toda(int sites) {
        return interned("toda/" + std::to_string(sites), [&] {
            auto p = make(PresKind::Toda, 1, sites, 0);
            for (int s = 1; s <= sites; ++s) {
                p->gens_.push_back({GenKind::ExpPos, 1, 0, s, "E[" + std::to_string(s) + "]"});
                p->gens_.push_back({GenKind::ExpNeg, 1, 0, s, "Einv[" + std::to_string(s) + "]"});
            }
            for (int s = 1; s <= sites; ++s)
                p->gens_.push_back(
                    {GenKind::HeisenbergP, 1, 0, s, "p[1," + std::to_string(s) + "]"});
            p->inverse_partner_.assign(p->gens_.size(), -1);
            for (int s = 1; s <= sites; ++s) {
                int ep = p->find(GenKind::ExpPos, 1, 0, s);
                int em = p->find(GenKind::ExpNeg, 1, 0, s);
                int pp = p->find(GenKind::HeisenbergP, 1, 0, s);
                p->inverse_partner_[static_cast<size_t>(ep)] = em;
                p->inverse_partner_[static_cast<size_t>(em)] = ep;
                p->table_[key(pp, ep)] = CommRel{Rational(0), {{ep, Rational(1)}}};
                p->table_[key(pp, em)] = CommRel{Rational(0), {{em, Rational(-1)}}};
            }
            p->attach_mirror();
            return p;
        });
    }

    /// Commutative presentation with the same generator layout as
    /// weyl(rows, sites): handy as a standalone commutative algebra.
    static PresPtr commutative(int rows, int sites) { return weyl(rows, sites)->mirror(); }

    PresKind kind() const { return kind_; }
    int n() const { return n_; }
    int sites() const { return sites_; }
    int trunc() const { return trunc_; }
    bool is_commutative() const { return kind_ == PresKind::Commutative; }

    size_t size() const { return gens_.size(); }
    const Generator& gen(int id) const { return gens_.at(static_cast<size_t>(id)); }

    int find(GenKind k, int row, int col, int site) const {
        for (size_t i = 0; i < gens_.size(); ++i) {
            const Generator& g = gens_[i];
            if (g.kind == k && g.row == row && g.col == col && g.site == site)
                return static_cast<int>(i);
        }
        return -1;
    }

    /// [g_hi, g_lo] for hi > lo in normal order; nullptr when they commute.
    const CommRel* commutator(int hi, int lo) const {
        auto it = table_.find(key(hi, lo));
        return it == table_.end() ? nullptr : &it->second;
    }

    int inverse_partner(int id) const { return inverse_partner_.at(static_cast<size_t>(id)); }

    /// Commutative mirror: identical generator list (same ids), empty table,
    /// plus central lam/laminv appended; target of abelianize.
    PresPtr mirror() const {
        if (kind_ == PresKind::Commutative) return shared_from_this();
        return mirror_;
    }

    /// For a mirror of a Weyl presentation: the Weyl algebra the Wick map
    /// lands in. Throws if this presentation has no quantum counterpart.
    PresPtr wick_target() const {
        PresPtr t = wick_target_.lock();
        if (!t) throw std::domain_error("presentation has no Wick target");
        return t;
    }
    bool has_wick_target() const { return !wick_target_.expired(); }

    int lam() const { return lam_; }
    int lam_inv() const { return lam_inv_; }

    /// Short spec string, parseable by presentation_from_spec.
    std::string spec_string() const {
        switch (kind_) {
            case PresKind::Weyl:
                return "weyl:n=" + std::to_string(n_) + ",k=" + std::to_string(sites_);
            case PresKind::GlSum:
                return "glsum:n=" + std::to_string(n_) + ",m=" + std::to_string(sites_);
            case PresKind::GlPoly:
                return "glpoly:n=" + std::to_string(n_) + ",N=" + std::to_string(trunc_);
            case PresKind::Toda:
                return "toda:n=" + std::to_string(sites_);
            case PresKind::Commutative:
                return "commutative:n=" + std::to_string(n_) + ",k=" + std::to_string(sites_);
        }
        return "";
    }

private:
    static uint64_t key(int hi, int lo) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(hi)) << 32) |
               static_cast<uint32_t>(lo);
    }

    template <class Build>
    static PresPtr interned(const std::string& tag, Build build) {
        static std::map<std::string, PresPtr> cache;
        auto it = cache.find(tag);
        if (it == cache.end()) it = cache.emplace(tag, build()).first;
        return it->second;
    }

    static std::shared_ptr<Presentation> make(PresKind k, int n, int sites, int trunc) {
        if (n < 1 || sites < 0 || trunc < 0)
            throw std::invalid_argument("Presentation: bad size parameters");
        auto p = std::shared_ptr<Presentation>(new Presentation());
        p->kind_ = k;
        p->n_ = n;
        p->sites_ = sites;
        p->trunc_ = trunc;
        return p;
    }

    void add_heisenberg(int rows, int sites) {
        for (int s = 1; s <= sites; ++s)
            for (int i = 1; i <= rows; ++i)
                gens_.push_back({GenKind::HeisenbergQ, i, 0, s,
                                 "q[" + std::to_string(i) + "," + std::to_string(s) + "]"});
        for (int s = 1; s <= sites; ++s)
            for (int i = 1; i <= rows; ++i)
                gens_.push_back({GenKind::HeisenbergP, i, 0, s,
                                 "p[" + std::to_string(i) + "," + std::to_string(s) + "]"});
        inverse_partner_.assign(gens_.size(), -1);
        for (int s = 1; s <= sites; ++s)
            for (int i = 1; i <= rows; ++i) {
                int q = find(GenKind::HeisenbergQ, i, 0, s);
                int p = find(GenKind::HeisenbergP, i, 0, s);
                table_[key(p, q)] = CommRel{Rational(1), {}};
            }
    }

    void fill_gl_table(int poly_trunc) {
        inverse_partner_.assign(gens_.size(), -1);
        int ng = static_cast<int>(gens_.size());
        for (int hi = 0; hi < ng; ++hi)
            for (int lo = 0; lo < hi; ++lo) {
                const Generator& A = gens_[static_cast<size_t>(hi)];
                const Generator& B = gens_[static_cast<size_t>(lo)];
                int power = poly_trunc ? A.site + B.site : A.site;
                if (!poly_trunc && A.site != B.site) continue;
                if (poly_trunc && power >= poly_trunc) continue;
                // [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb
                int a = A.row, b = A.col, c = B.row, d = B.col;
                CommRel rel;
                if (b == c) {
                    int t = poly_trunc ? find(GenKind::GlBasis, a, d, power)
                                       : find(GenKind::GlBasis, a, d, A.site);
                    rel.linear.emplace_back(t, Rational(1));
                }
                if (d == a) {
                    int t = poly_trunc ? find(GenKind::GlBasis, c, b, power)
                                       : find(GenKind::GlBasis, c, b, A.site);
                    bool merged = false;
                    for (auto& [id, co] : rel.linear)
                        if (id == t) {
                            co -= Rational(1);
                            merged = true;
                        }
                    if (!merged) rel.linear.emplace_back(t, Rational(-1));
                }
                std::erase_if(rel.linear, [](const auto& e) { return e.second.is_zero(); });
                if (!rel.linear.empty()) table_[key(hi, lo)] = rel;
            }
    }

    void attach_mirror() {
        auto m = std::shared_ptr<Presentation>(new Presentation());
        m->kind_ = PresKind::Commutative;
        m->n_ = n_;
        m->sites_ = sites_;
        m->trunc_ = trunc_;
        m->gens_ = gens_;
        m->inverse_partner_ = inverse_partner_;
        m->lam_ = static_cast<int>(m->gens_.size());
        m->gens_.push_back({GenKind::Central, 0, 0, 0, "lam"});
        m->lam_inv_ = static_cast<int>(m->gens_.size());
        m->gens_.push_back({GenKind::Central, 0, 0, 1, "laminv"});
        m->inverse_partner_.push_back(m->lam_inv_);
        m->inverse_partner_.push_back(m->lam_);
        if (kind_ == PresKind::Weyl) m->wick_target_ = weak_from_this();
        mirror_ = m;
    }

    PresKind kind_ = PresKind::Commutative;
    int n_ = 0, sites_ = 0, trunc_ = 0;
    std::vector<Generator> gens_;
    std::unordered_map<uint64_t, CommRel> table_;
    std::vector<int> inverse_partner_;
    PresPtr mirror_;
    std::weak_ptr<const Presentation> wick_target_;
    int lam_ = -1, lam_inv_ = -1;
};

/// Parse "weyl:n=2,k=1" / "glsum:n=2,m=2" / "glpoly:n=2,N=2" / "toda:n=3" /
/// "commutative:n=2,k=1".
inline PresPtr presentation_from_spec(const std::string& spec);

}  // namespace ncl
