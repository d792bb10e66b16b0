#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncl/lax.hpp"
#include "ncl/matrix.hpp"

namespace ncl {

/// Outcome of one verification suite: named, exact (all residuals must be
/// the canonical zero), with rendered witnesses on failure.
struct CheckReport {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& label) {
        ++checks;
        if (!ok) {
            pass = false;
            failures.push_back(label);
        }
    }
    void expect_zero(const Element& r, const std::string& label) {
        ++checks;
        if (!r.is_zero()) {
            pass = false;
            failures.push_back(label + ": residual " + r.str());
        }
    }
    template <class R>
    void expect_zero_ring(const R& r, const std::string& label) {
        ++checks;
        if (!RingOps<R>::is_zero(r)) {
            pass = false;
            failures.push_back(label + ": nonzero residual");
        }
    }
    void expect_zero_matrix(const Matrix<Element>& m, const std::string& label) {
        ++checks;
        if (!m.is_zero()) {
            pass = false;
            failures.push_back(label + ": nonzero residual matrix");
        }
    }
    void merge(const CheckReport& o) {
        checks += o.checks;
        if (!o.pass) pass = false;
        for (auto& f : o.failures) failures.push_back(o.name.empty() ? f : o.name + ": " + f);
    }
    std::string first_failure() const { return failures.empty() ? "" : failures.front(); }
};

// ---------------------------------------------------------------------------
// Evaluation points
// ---------------------------------------------------------------------------

/// Points usable for the whole family (no member has a pole there), drawn
/// from the preferred list first and then from small integers.
inline std::vector<Rational> usable_points(const std::vector<Element>& family,
                                           const std::vector<Rational>& preferred, size_t count) {
    std::vector<Rational> out;
    auto ok = [&](const Rational& u) {
        for (const auto& e : family)
            if (e.has_pole_at(u)) return false;
        for (const auto& v : out)
            if (v == u) return false;
        return true;
    };
    for (const auto& u : preferred) {
        if (out.size() == count) return out;
        if (ok(u)) out.push_back(u);
    }
    for (long c = 2; out.size() < count; ++c) {
        if (c > 10000) throw std::logic_error("usable_points: cannot find enough points");
        if (ok(Rational(c))) out.push_back(Rational(c));
    }
    return out;
}

/// A grid of point pairs large enough that a vanishing-on-grid residual is
/// identically zero: the cleared numerator of any pairwise commutator has
/// u- and v-degree bounded by the family's coefficient degree bound.
inline std::vector<std::pair<Rational, Rational>> sufficient_pairs(
    const std::vector<Element>& family, const std::vector<Rational>& preferred) {
    int bound = 0;
    for (const auto& e : family) bound = std::max(bound, e.numerator_degree_bound());
    std::vector<Rational> pts = usable_points(family, preferred, static_cast<size_t>(bound) + 1);
    std::vector<std::pair<Rational, Rational>> pairs;
    for (const auto& u : pts)
        for (const auto& v : pts) pairs.emplace_back(u, v);
    return pairs;
}

/// All pairwise commutators of the family vanish at every point pair.
inline CheckReport commutativity_suite(const std::string& name,
                                       const std::vector<Element>& family,
                                       const std::vector<std::pair<Rational, Rational>>& pairs) {
    CheckReport rep;
    rep.name = name;
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i; j < family.size(); ++j)
            for (const auto& [u, v] : pairs) {
                if (i == j && u == v) continue;
                Element r = commutator(family[i].evaluate_z(u), family[j].evaluate_z(v));
                rep.expect_zero(r, "[F" + std::to_string(i) + "(" + u.str() + "), F" +
                                       std::to_string(j) + "(" + v.str() + ")]");
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Quantum characteristic polynomials
// ---------------------------------------------------------------------------

/// Coefficients QH_0..QH_n of the quantum characteristic polynomial:
/// Gaudin: column_det(dz - L) = sum QH_i(z) dz^i;
/// Yangian: column_det(t - T e^{-dz}) = sum t^k QH_k(z) e^{(k-n) dz}.
struct QhFamily {
    bool yangian = false;
    int n = 0;
    Matrix<Element> op;        // dz - L, resp. T e^{-dz}
    std::vector<Element> qh;   // z-operator-free coefficients
};

inline QhFamily talalaev_qh_gaudin(const Matrix<Element>& L) {
    Matrix<Element> op = gaudin_operator(L);
    require_manin(op, "talalaev_qh_gaudin");
    Element d = column_det(op);
    int n = L.rows();
    QhFamily fam{false, n, op, {}};
    Element recon = Element::zero(d.pres());
    for (int i = 0; i <= n; ++i) {
        Element qi = d.coeff_of_zexp(i);
        recon += qi * Element::dz_power(d.pres(), i);
        fam.qh.push_back(std::move(qi));
    }
    if (recon != d) throw std::logic_error("talalaev_qh_gaudin: reconstruction failed");
    for (long k : d.zexps())
        if (k < 0 || k > n) throw std::logic_error("talalaev_qh_gaudin: stray dz power");
    return fam;
}

inline QhFamily talalaev_qh_yangian(const Matrix<Element>& T) {
    Matrix<Element> op = yangian_operator(T, YangForm::TSinv);
    require_manin(op, "talalaev_qh_yangian");
    int n = T.rows();
    PresPtr pres = T.sample().pres();
    TPoly<Element> h = char_poly_unchecked(op);  // column_det(t - T e^{-dz})
    QhFamily fam{true, n, op, {}};
    for (int k = 0; k <= n; ++k) {
        Element raw = h.coeff(k);
        Element qk = raw * Element::shift_power(pres, n - k);
        if (qk.kind() != ZKind::None)
            throw std::domain_error("talalaev_qh_yangian: residual shift operators in QH_" +
                                    std::to_string(k));
        if (raw != qk * Element::shift_power(pres, k - n))
            throw std::logic_error("talalaev_qh_yangian: reconstruction failed");
        fam.qh.push_back(std::move(qk));
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Cayley-Hamilton, Newton, MacMahon
// ---------------------------------------------------------------------------

/// sum_i h_i M^i = 0 with h_i from column_det(t - M), coefficients to the
/// left of the powers (right substitution).
inline CheckReport ch_check(const Matrix<Element>& m) {
    CheckReport rep;
    rep.name = "cayley-hamilton";
    TPoly<Element> h = char_poly(m);
    Matrix<Element> acc(m.rows(), m.cols(), RingOps<Element>::zero(m.sample()));
    Matrix<Element> pw = Matrix<Element>::identity(m.rows(), m.sample());
    for (int i = 0; i <= m.rows(); ++i) {
        acc = acc + pw.scaled_left(h.coeff(i));
        if (i < m.rows()) pw = pw * m;
    }
    rep.expect_zero_matrix(acc, "sum h_i M^i");
    return rep;
}

/// Left-substitution variant for matrices whose transpose is Manin:
/// sum_i M^i h_i = 0 with h_i from row_det(t - M).
inline CheckReport ch_check_row(const Matrix<Element>& m) {
    CheckReport rep;
    rep.name = "cayley-hamilton-row";
    require_manin(m.transpose(), "ch_check_row");
    TPoly<Element> h = char_poly_row(m);
    Matrix<Element> acc(m.rows(), m.cols(), RingOps<Element>::zero(m.sample()));
    Matrix<Element> pw = Matrix<Element>::identity(m.rows(), m.sample());
    for (int i = 0; i <= m.rows(); ++i) {
        acc = acc + pw.scaled_right(h.coeff(i));
        if (i < m.rows()) pw = pw * m;
    }
    rep.expect_zero_matrix(acc, "sum M^i h_i");
    return rep;
}

/// Residual of the right-substituted characteristic polynomial without the
/// Manin gate (negative controls).
inline Matrix<Element> ch_residual_unchecked(const Matrix<Element>& m) {
    TPoly<Element> h = char_poly_unchecked(m);
    Matrix<Element> acc(m.rows(), m.cols(), RingOps<Element>::zero(m.sample()));
    Matrix<Element> pw = Matrix<Element>::identity(m.rows(), m.sample());
    for (int i = 0; i <= m.rows(); ++i) {
        acc = acc + pw.scaled_left(h.coeff(i));
        if (i < m.rows()) pw = pw * m;
    }
    return acc;
}

/// k h_k = sum_{i=max(0,-k)}^{n-k} h_{k+i} Tr(M^i), h-coefficients to the
/// LEFT of the traces, for the window -k_neg <= k <= n (h_k = 0 for k < 0).
inline CheckReport newton_check(const Matrix<Element>& m, int k_neg = 2) {
    CheckReport rep;
    rep.name = "newton";
    const int n = m.rows();
    TPoly<Element> h = char_poly(m);
    std::vector<Element> tr;
    Matrix<Element> pw = Matrix<Element>::identity(n, m.sample());
    for (int i = 0; i <= n + k_neg; ++i) {
        tr.push_back(pw.trace());
        pw = pw * m;
    }
    auto hk = [&](int k) {
        return k < 0 ? RingOps<Element>::zero(m.sample()) : h.coeff(k);
    };
    for (int k = -k_neg; k <= n; ++k) {
        Element lhs = hk(k).scaled(Rational(static_cast<long>(k)));
        Element rhs = RingOps<Element>::zero(m.sample());
        for (int i = std::max(0, -k); i <= n - k; ++i)
            rhs += hk(k + i) * tr[static_cast<size_t>(i)];
        rep.expect_zero(lhs - rhs, "newton window k=" + std::to_string(k));
    }
    return rep;
}

/// Negative control: with traces moved to the LEFT of the h-coefficients the
/// identities must break somewhere on a genuinely noncommutative instance.
inline bool newton_swapped_breaks(const Matrix<Element>& m, int k_neg = 2) {
    const int n = m.rows();
    TPoly<Element> h = char_poly(m);
    std::vector<Element> tr;
    Matrix<Element> pw = Matrix<Element>::identity(n, m.sample());
    for (int i = 0; i <= n + k_neg; ++i) {
        tr.push_back(pw.trace());
        pw = pw * m;
    }
    auto hk = [&](int k) {
        return k < 0 ? RingOps<Element>::zero(m.sample()) : h.coeff(k);
    };
    for (int k = -k_neg; k <= n; ++k) {
        Element lhs = hk(k).scaled(Rational(static_cast<long>(k)));
        Element rhs = RingOps<Element>::zero(m.sample());
        for (int i = std::max(0, -k); i <= n - k; ++i)
            rhs += tr[static_cast<size_t>(i)] * hk(k + i);
        if (lhs - rhs != Element::zero(m.sample().pres())) return true;
    }
    return false;
}

/// series_inverse(column_det(1 - tM)) = sum_m t^m Tr S^m M mod t^(trunc+1).
inline CheckReport macmahon_check(const Matrix<Element>& m, int trunc) {
    CheckReport rep;
    rep.name = "macmahon";
    require_manin(m, "macmahon_check");
    const int n = m.rows();
    PresPtr pres = m.sample().pres();
    Matrix<TPoly<Element>> onetm(n, n, TPoly<Element>(Element::zero(pres)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Element> c{i == j ? Element::one(pres) : Element::zero(pres),
                                   -m.at(i, j)};
            onetm.at(i, j) = TPoly<Element>(std::move(c));
        }
    TruncSeries<Element> lhs = column_det(onetm).as_series(trunc).inverse();
    TruncSeries<Element> rhs(trunc, Element::zero(pres));
    for (int k = 0; k <= trunc; ++k) rhs.at(k) = sym_power_trace_unchecked(m, k);
    rep.expect_zero_ring(lhs - rhs, "series residual");
    return rep;
}

// ---------------------------------------------------------------------------
// Gaudin quantum powers and symmetric-power generators
// ---------------------------------------------------------------------------

/// L^[0] = Id, L^[i] = L^[i-1] L + (L^[i-1])'.
inline std::vector<Matrix<Element>> gaudin_quantum_powers(const Matrix<Element>& L, int k_max) {
    std::vector<Matrix<Element>> pw{Matrix<Element>::identity(L.rows(), L.sample())};
    for (int i = 1; i <= k_max; ++i) pw.push_back(pw.back() * L + derived_z(pw.back()));
    return pw;
}

/// (dz - L)^i = sum_p (-1)^p binom(i,p) dz^(i-p) L^[p].
inline CheckReport gaudin_binomial_identity(const Matrix<Element>& L, int k_max) {
    CheckReport rep;
    rep.name = "quantum-power binomial identity";
    PresPtr pres = L.sample().pres();
    auto powers = gaudin_quantum_powers(L, k_max);
    Matrix<Element> op = gaudin_operator(L);
    for (int i = 0; i <= k_max; ++i) {
        Matrix<Element> lhs = matrix_pow(op, i);
        Matrix<Element> rhs(L.rows(), L.cols(), Element::zero(pres));
        for (int p = 0; p <= i; ++p) {
            Rational c = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(p));
            if (p % 2) c = -c;
            rhs = rhs + powers[static_cast<size_t>(p)]
                            .scaled_left(Element::dz_power(pres, i - p))
                            .scaled_left(Element::scalar(pres, c));
        }
        rep.expect_zero_matrix(lhs - rhs, "power i=" + std::to_string(i));
    }
    return rep;
}

/// The z-operator-free parts S_k(z) = (-1)^k [dz^0] Tr S^k (dz - L), k >= 1.
inline std::vector<Element> nazarov_elements(const Matrix<Element>& L, int k_max) {
    Matrix<Element> op = gaudin_operator(L);
    require_manin(op, "nazarov_elements");
    std::vector<Element> out;
    for (int k = 1; k <= k_max; ++k) {
        Element full = sym_power_trace_unchecked(op, k);
        Element s = full.coeff_of_zexp(0);
        if (k % 2) s = -s;
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Yangian quantum powers, qdet, Cayley-Hamilton, Newton
// ---------------------------------------------------------------------------

/// T^[p](z) = T(z+p) T(z+p-1) ... T(z+1); T^[0] = Id.
inline std::vector<Matrix<Element>> yangian_quantum_powers(const Matrix<Element>& T, int p_max) {
    std::vector<Matrix<Element>> pw{Matrix<Element>::identity(T.rows(), T.sample())};
    for (int p = 1; p <= p_max; ++p) pw.push_back(shifted_z(T, Rational(static_cast<long>(p))) * pw.back());
    return pw;
}

/// Both defining forms agree: T^[p](z) = e^{p dz} (T(z) e^{-dz})^p.
inline CheckReport yangian_qpower_double_def(const Matrix<Element>& T, int p_max) {
    CheckReport rep;
    rep.name = "yangian quantum-power double definition";
    PresPtr pres = T.sample().pres();
    auto powers = yangian_quantum_powers(T, p_max);
    Matrix<Element> s = yangian_operator(T, YangForm::TSinv);
    for (int p = 0; p <= p_max; ++p) {
        Matrix<Element> rhs = matrix_pow(s, p).scaled_left(Element::shift_power(pres, p));
        rep.expect_zero_matrix(powers[static_cast<size_t>(p)] - rhs, "p=" + std::to_string(p));
    }
    return rep;
}

/// qdet(T) = sum_sigma sign(sigma) prod_k T_{sigma(k),k}(z + offset(k)),
/// factors by ascending column k; the standard convention is
/// offset(k) = -k + 1.
inline Element yangian_qdet(const Matrix<Element>& T, long column_offset_base = 1) {
    T.require_square("yangian_qdet");
    const int n = T.rows();
    PresPtr pres = T.sample().pres();
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    Element acc = Element::zero(pres);
    do {
        Element prod = Element::one(pres);
        for (int k = 0; k < n; ++k)
            prod *= T.at(sigma[static_cast<size_t>(k)], k)
                        .shifted_z(Rational(column_offset_base - 1 - k));
        acc += det_detail::parity(sigma) < 0 ? -prod : prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

/// column_det(T e^{-dz}) = qdet(T) e^{-n dz} and
/// row_det(e^{dz} T) = e^{n dz} qdet(T); the shifted-argument convention
/// z - k + 1 is pinned by a deliberate z - k - 1 mismatch.
inline CheckReport yangian_qdet_check(const Matrix<Element>& T) {
    CheckReport rep;
    rep.name = "yangian qdet shift lemma";
    const int n = T.rows();
    PresPtr pres = T.sample().pres();
    Element qd = yangian_qdet(T);
    Element lhs = column_det(yangian_operator(T, YangForm::TSinv));
    rep.expect_zero(lhs - qd * Element::shift_power(pres, -n), "column form");

    Matrix<Element> st(n, n, Element::zero(pres));
    Element sp = Element::shift_power(pres, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) st.at(i, j) = sp * T.at(i, j);
    Element rlhs = row_det(st);
    rep.expect_zero(rlhs - Element::shift_power(pres, n) * qd, "row form");

    // The z-k-1 convention differs from z-k+1 by an overall shift by -2, so
    // it can only be pinned on instances whose qdet actually depends on z.
    if (qd != qd.shifted_z(Rational(-2))) {
        Element wrong = yangian_qdet(T, -1);  // z - k - 1
        rep.expect(lhs != wrong * Element::shift_power(pres, -n),
                   "convention control: z-k-1 must not match");
    }
    return rep;
}

/// sum_k QH_k(z+n) T^[k](z) = 0 (Cayley-Hamilton for the Yangian).
inline CheckReport yangian_ch_check(const Matrix<Element>& T) {
    CheckReport rep;
    rep.name = "yangian cayley-hamilton";
    const int n = T.rows();
    QhFamily fam = talalaev_qh_yangian(T);
    auto powers = yangian_quantum_powers(T, n);
    Matrix<Element> acc(n, n, RingOps<Element>::zero(T.sample()));
    for (int k = 0; k <= n; ++k)
        acc = acc + powers[static_cast<size_t>(k)].scaled_left(
                        fam.qh[static_cast<size_t>(k)].shifted_z(Rational(static_cast<long>(n))));
    rep.expect_zero_matrix(acc, "sum QH_k(z+n) T^[k](z)");

    // negative control: dropping the z+n shift must break the identity
    Matrix<Element> wrong(n, n, RingOps<Element>::zero(T.sample()));
    for (int k = 0; k <= n; ++k)
        wrong = wrong + powers[static_cast<size_t>(k)].scaled_left(fam.qh[static_cast<size_t>(k)]);
    rep.expect(!wrong.is_zero(), "shift control: unshifted coefficients must not cancel");
    return rep;
}

/// k QH_k(z-k+n) = sum_{i=max(0,-k)}^{n-k} QH_{k+i}(z-k+n) Tr T^[i](z), and
/// the commutativity [QH_i(u), Tr T^[j](v)] = [Tr T^[k](u), Tr T^[j](v)] = 0.
inline CheckReport yangian_newton_check(const Matrix<Element>& T, int k_neg,
                                        const std::vector<Rational>& preferred_points) {
    CheckReport rep;
    rep.name = "yangian newton";
    const int n = T.rows();
    QhFamily fam = talalaev_qh_yangian(T);
    auto powers = yangian_quantum_powers(T, n + k_neg);
    std::vector<Element> traces;
    for (auto& p : powers) traces.push_back(p.trace());
    auto qh = [&](int k) -> Element {
        if (k < 0 || k > n) return RingOps<Element>::zero(T.sample());
        return fam.qh[static_cast<size_t>(k)];
    };
    for (int k = -k_neg; k <= n; ++k) {
        Rational shift(static_cast<long>(n - k));
        Element lhs = qh(k).shifted_z(shift).scaled(Rational(static_cast<long>(k)));
        Element rhs = RingOps<Element>::zero(T.sample());
        for (int i = std::max(0, -k); i <= n - k; ++i)
            rhs += qh(k + i).shifted_z(shift) * traces[static_cast<size_t>(i)];
        rep.expect_zero(lhs - rhs, "yangian newton window k=" + std::to_string(k));
    }
    std::vector<Element> family = fam.qh;
    for (int i = 1; i <= n; ++i) family.push_back(traces[static_cast<size_t>(i)]);
    rep.merge(commutativity_suite("yangian qh/trace commutativity", family,
                                  sufficient_pairs(family, preferred_points)));
    return rep;
}

// ---------------------------------------------------------------------------
// Capelli identity (Wick quantization)
// ---------------------------------------------------------------------------

/// Deliberately wrong ordering (p-hats left of q-hats): the negative control
/// for the Wick prescription.
inline Element anti_wick(const Element& cl) {
    PresPtr target = cl.pres()->wick_target();
    Element out = Element::zero(target);
    for (auto& [key, c] : cl.terms()) {
        Element term = Element::with_coeff(target, c);
        long a = 0;
        // normal order in the mirror lists q's, then p's, then lam; rebuild
        // with the p-block first
        for (auto& [g, e] : key.w.f)
            if (g == cl.pres()->lam()) a = e;
        for (auto& [g, e] : key.w.f)
            if (g != cl.pres()->lam() && cl.pres()->gen(g).kind == GenKind::HeisenbergP)
                for (int r = 0; r < e; ++r) term *= Element::generator(target, g);
        for (auto& [g, e] : key.w.f)
            if (g != cl.pres()->lam() && cl.pres()->gen(g).kind == GenKind::HeisenbergQ)
                for (int r = 0; r < e; ++r) term *= Element::generator(target, g);
        out += term * Element::dz_power(target, a);
    }
    return out;
}

/// Wick(det(lam - L_classical)) = column_det(dz - L_quantum) for the
/// rank-one family L = K1 + Q (z - K2)^{-1} P^t, plus the block-matrix route
/// det(MTV) = det(z - K2) * column_det(dz - L_quantum).
inline CheckReport capelli_check(int n, int k, const std::vector<Rational>& k1diag,
                                 const std::vector<Rational>& k2diag) {
    CheckReport rep;
    rep.name = "capelli";
    if (static_cast<int>(k1diag.size()) != n || static_cast<int>(k2diag.size()) != k)
        throw std::invalid_argument("capelli_check: diagonal size mismatch");
    for (size_t a = 0; a < k2diag.size(); ++a)
        for (size_t b = a + 1; b < k2diag.size(); ++b)
            if (k2diag[a] == k2diag[b])
                throw std::invalid_argument("capelli_check: K2 entries must be distinct");

    Matrix<Rational> K1(n, n, Rational(0));
    for (int i = 0; i < n; ++i) K1.at(i, i) = k1diag[static_cast<size_t>(i)];
    LaxModel qu = gaudin_simplest(n, k, K1, k2diag);
    PresPtr w = qu.pres;
    PresPtr cm = w->mirror();

    // classical twin over the commutative mirror
    Matrix<Element> lcl(n, n, Element::zero(cm));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Element entry = Element::scalar(cm, K1.at(a - 1, b - 1));
            for (int i = 1; i <= k; ++i)
                entry += (Element::generator(cm, cm->find(GenKind::HeisenbergQ, a, 0, i)) *
                          Element::generator(cm, cm->find(GenKind::HeisenbergP, b, 0, i)))
                             .scaled(simple_pole(k2diag[static_cast<size_t>(i - 1)]));
            lcl.at(a - 1, b - 1) = entry;
        }

    // det(lam - L_classical)
    Element lam = Element::generator(cm, cm->lam());
    Matrix<Element> lam_minus(n, n, Element::zero(cm));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lam_minus.at(i, j) = -lcl.at(i, j);
            if (i == j) lam_minus.at(i, j) += lam;
        }
    Element classical = column_det(lam_minus);

    Element quantum = column_det(gaudin_operator(qu.M));
    rep.expect_zero(classical.wick() - quantum, "Wick(det(lam - L)) = det(dz - L-hat)");
    rep.expect(anti_wick(classical) != quantum, "anti-Wick ordering control");

    // block route: MTV = [[z - K2, P^t], [Q, dz - K1]]
    Matrix<Element> mtv(k + n, k + n, Element::zero(w));
    for (int a = 0; a < k; ++a)
        mtv.at(a, a) = Element::with_coeff(
            w, RatFun(Poly(std::vector<Rational>{-k2diag[static_cast<size_t>(a)], Rational(1)})));
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= n; ++b)
            mtv.at(a - 1, k + b - 1) =
                Element::generator(w, w->find(GenKind::HeisenbergP, b, 0, a));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j)
            mtv.at(k + i - 1, j - 1) = Element::generator(w, w->find(GenKind::HeisenbergQ, i, 0, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element entry = Element::scalar(w, -K1.at(i, j));
            if (i == j) entry += Element::dz_power(w, 1);
            mtv.at(k + i, k + j) = entry;
        }
    rep.expect(is_manin(mtv).ok, "MTV block matrix is Manin");
    RatFun detz(Rational(1));
    for (int a = 0; a < k; ++a)
        detz = detz * RatFun(Poly(std::vector<Rational>{-k2diag[static_cast<size_t>(a)], Rational(1)}));
    rep.expect_zero(column_det(mtv) - quantum.scaled(detz),
                    "det(MTV) = det(z - K2) det(dz - L-hat)");
    return rep;
}

// ---------------------------------------------------------------------------
// Formal-conjugation identity (proved conjecture)
// ---------------------------------------------------------------------------

/// Gaudin: conj(column_det(dz - L)) = (-1)^n row_det(dz + L);
/// Yangian: conj(column_det(1 - T e^{-dz})) = row_det(1 - e^{dz} T).
inline CheckReport conjugation_check_gaudin(const Matrix<Element>& L) {
    CheckReport rep;
    rep.name = "formal conjugation (gaudin)";
    const int n = L.rows();
    Element lhs = column_det(gaudin_operator(L, -1, false)).formal_conjugate();
    Element rhs = row_det(gaudin_operator(L, +1, false));
    if (n % 2) rhs = -rhs;
    rep.expect_zero(lhs - rhs, "conj det(dz - L) = (-1)^n row_det(dz + L)");
    return rep;
}

inline CheckReport conjugation_check_yangian(const Matrix<Element>& T) {
    CheckReport rep;
    rep.name = "formal conjugation (yangian)";
    const int n = T.rows();
    PresPtr pres = T.sample().pres();
    Matrix<Element> a = Matrix<Element>::identity(n, Element::one(pres)) -
                        yangian_operator(T, YangForm::TSinv);
    Matrix<Element> b(n, n, Element::zero(pres));
    Element sp = Element::shift_power(pres, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b.at(i, j) = -(sp * T.at(i, j));
            if (i == j) b.at(i, j) += Element::one(pres);
        }
    Element lhs = column_det(a).formal_conjugate();
    Element rhs = row_det(b);
    rep.expect_zero(lhs - rhs, "conj det(1 - T e^{-dz}) = row_det(1 - e^{dz} T)");
    return rep;
}

// ---------------------------------------------------------------------------
// Explicit-formula conjecture (recorded, never asserted)
// ---------------------------------------------------------------------------

namespace subsets_detail {
inline void subsets_of_size(int n, int k, std::vector<int>& cur, int from,
                            const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int i = from; i < n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}
}  // namespace subsets_detail

/// column_det(dz - L) = sum_i (-1)^i [ sum over principal i x i submatrices
/// M of det^col(M + rho(z) diag(i-1,...,0)) ] dz^(n-i) with
/// rho(z) = sum_v 1/(z - z_v), for L with simple poles at the z_v.
inline CheckReport explicit_formula_check(const Matrix<Element>& L,
                                          const std::vector<Rational>& poles) {
    CheckReport rep;
    rep.name = "capelli-type explicit formula";
    const int n = L.rows();
    PresPtr pres = L.sample().pres();
    RatFun rho;
    for (const auto& z : poles) rho += simple_pole(z);
    Element lhs = column_det(gaudin_operator(L));
    Element rhs = Element::zero(pres);
    for (int i = 0; i <= n; ++i) {
        Element layer = Element::zero(pres);
        if (i == 0) {
            layer = Element::one(pres);
        } else {
            std::vector<int> cur;
            subsets_detail::subsets_of_size(n, i, cur, 0, [&](const std::vector<int>& s) {
                Matrix<Element> sub = L.select(s, s);
                for (int r = 0; r < i; ++r)
                    sub.at(r, r) += Element::with_coeff(
                        pres, rho * RatFun(Rational(static_cast<long>(i - 1 - r))));
                layer += column_det(sub);
            });
        }
        if (i % 2) layer = -layer;
        rhs += layer * Element::dz_power(pres, n - i);
    }
    rep.expect_zero(lhs - rhs, "explicit principal-minor expansion");
    return rep;
}

// ---------------------------------------------------------------------------
// Wick images of classical integrals (recorded, never asserted)
// ---------------------------------------------------------------------------

/// Coefficient of lam^a with the lam factor stripped.
inline Element lam_coeff(const Element& e, int a) {
    PresPtr pres = e.pres();
    Element out = Element::zero(pres);
    for (auto& [key, c] : e.terms()) {
        Word w;
        int got = 0;
        for (auto& [g, ex] : key.w.f) {
            if (g == pres->lam())
                got = ex;
            else
                w.f.push_back({g, ex});
        }
        if (got == a) out += Element::monomial(pres, w, c);
    }
    return out;
}

/// Desk-scale checks of the Wick-quantization conjecture for the rank-one
/// Gaudin family: commutators of Wick images of the classical spectral-curve
/// coefficients, and the trace identities
/// Wick(Tr (lam - L)^k) = Tr (dz - L-hat)^k,
/// Wick(Tr S^k (lam - L)) = Tr S^k (dz - L-hat), k <= k_pow.
inline CheckReport wick_integrals_check(int n, int k, int k_pow,
                                        const std::vector<Rational>& preferred_points) {
    CheckReport rep;
    rep.name = "wick images of classical integrals";
    LaxModel qu = gaudin_simplest(n, k);
    PresPtr w = qu.pres;
    PresPtr cm = w->mirror();

    Matrix<Element> lcl(n, n, Element::zero(cm));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Element entry = Element::scalar(cm, default_kmatrix(n).at(a - 1, b - 1));
            for (int i = 1; i <= k; ++i)
                entry += (Element::generator(cm, cm->find(GenKind::HeisenbergQ, a, 0, i)) *
                          Element::generator(cm, cm->find(GenKind::HeisenbergP, b, 0, i)))
                             .scaled(simple_pole(qu.marked_points[static_cast<size_t>(i - 1)]));
            lcl.at(a - 1, b - 1) = entry;
        }
    Element lam = Element::generator(cm, cm->lam());
    Matrix<Element> lam_minus(n, n, Element::zero(cm));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lam_minus.at(i, j) = -lcl.at(i, j);
            if (i == j) lam_minus.at(i, j) += lam;
        }

    // commutators of the Wick images of the lam-coefficients of the
    // classical determinant
    Element classical = column_det(lam_minus);
    std::vector<Element> images;
    for (int a = 0; a <= n; ++a) images.push_back(lam_coeff(classical, a).wick());
    rep.merge(commutativity_suite("wick-image commutativity", images,
                                  sufficient_pairs(images, preferred_points)));

    // trace identities
    Matrix<Element> op = gaudin_operator(qu.M);
    for (int p = 1; p <= k_pow; ++p) {
        Element lhs = matrix_pow(lam_minus, p).trace().wick();
        Element rhs = matrix_pow(op, p).trace();
        rep.expect_zero(lhs - rhs, "Wick(Tr (lam - L)^" + std::to_string(p) + ")");
    }
    for (int p = 1; p <= k_pow; ++p) {
        Element lhs = sym_power_trace_unchecked(lam_minus, p).wick();
        Element rhs = sym_power_trace_unchecked(op, p);
        rep.expect_zero(lhs - rhs, "Wick(Tr S^" + std::to_string(p) + " (lam - L))");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Separation-of-variables M-matrix (recorded for n = 3)
// ---------------------------------------------------------------------------

/// From the last column of adj(1 - e^{-dz} T(z)), expand each entry in LEFT
/// powers of e^{-dz} (entry = sum_k e^{-k dz} M_{i,k}(z)) and assemble the
/// transposed coefficient matrix.
inline std::pair<Matrix<Element>, CheckReport> sv_mmatrix(const Matrix<Element>& T) {
    CheckReport rep;
    rep.name = "sv m-matrix";
    const int n = T.rows();
    PresPtr pres = T.sample().pres();
    Element sm = Element::shift_power(pres, -1);
    Matrix<Element> b(n, n, Element::zero(pres));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b.at(i, j) = -(sm * T.at(i, j));
            if (i == j) b.at(i, j) += Element::one(pres);
        }
    Matrix<Element> adj = adjugate(b);
    Matrix<Element> mm(n, n, Element::zero(pres));
    for (int i = 0; i < n; ++i) {
        Element entry = adj.at(i, n - 1);
        Element recon = Element::zero(pres);
        for (long kk : entry.zexps())
            if (kk > 0 || kk < -(n - 1))
                throw std::domain_error("sv_mmatrix: extraction leaves mixed shift terms");
        for (int kk = 0; kk < n; ++kk) {
            Element mik = entry.coeff_of_zexp(-kk).shifted_z(Rational(static_cast<long>(kk)));
            recon += Element::shift_power(pres, -kk) * mik;
            mm.at(kk, i) = mik;  // transposed assembly
        }
        if (recon != entry) throw std::logic_error("sv_mmatrix: left-expansion failed");
    }
    auto m = is_manin(mm);
    rep.expect(m.ok, "M-matrix is Manin: " + m.what());
    return {mm, rep};
}

// ---------------------------------------------------------------------------
// Quantized separation relations (Cartier-Foata route)
// ---------------------------------------------------------------------------

/// Bordered matrix of separated-variable polynomials: row 0 is (1, 0,...,0),
/// row i is (B_0(a_i, b_i), B_1(a_i, b_i), ..., B_g(a_i, b_i)) where the
/// pairs (a_i, b_i) are independent Weyl pairs. Cartier-Foata by
/// construction unless rows are deliberately mixed.
inline Matrix<Element> erbt_bordered_matrix(int g, bool break_rows = false) {
    PresPtr w = Presentation::weyl(1, g);
    auto alpha = [&](int i) {
        return Element::generator(w, w->find(GenKind::HeisenbergP, 1, 0, i));
    };
    auto beta = [&](int i) {
        return Element::generator(w, w->find(GenKind::HeisenbergQ, 1, 0, i));
    };
    Matrix<Element> a(g + 1, g + 1, Element::zero(w));
    a.at(0, 0) = Element::one(w);
    for (int i = 1; i <= g; ++i) {
        Element ai = break_rows && i == 2 ? alpha(1) : alpha(i);
        Element bi = beta(i);
        a.at(i, 0) = ai.scaled(Rational(2)) - bi;  // B_0
        for (int j = 1; j <= g; ++j)
            a.at(i, j) = ai + bi.scaled(Rational(static_cast<long>(j))) + Element::one(w);  // B_j
    }
    return a;
}

/// First-column entries H_i = ((1 - t(1 - A))^{-1})_{i+1,1} of the inverted
/// bordered matrix; rejects non-Cartier-Foata input.
inline std::vector<TruncSeries<Element>> erbt_hamiltonians(const Matrix<Element>& a, int trunc) {
    auto cf = is_cartier_foata(a);
    if (!cf.ok)
        throw std::domain_error("erbt_hamiltonians: input is not Cartier-Foata, " + cf.what());
    Matrix<Element> n =
        Matrix<Element>::identity(a.rows(), Element::one(a.sample().pres())) - a;
    auto inv = series_inverse_one_minus_t(n, trunc);
    std::vector<TruncSeries<Element>> h;
    for (int i = 1; i < a.rows(); ++i) h.push_back(inv.at(i, 0));
    return h;
}

/// The quantized-separation demonstration: with A the bordered
/// Cartier-Foata matrix, the first-column entries H_i of (1 - t(1 - A))^{-1}
/// commute modulo t^(trunc+1). With deliberately mixed rows the matrix stops
/// being Cartier-Foata and the commutativity fails.
inline CheckReport erbt_check(int g, int trunc, bool break_rows = false) {
    CheckReport rep;
    rep.name = break_rows ? "quantized separation (broken rows)" : "quantized separation";
    Matrix<Element> a = erbt_bordered_matrix(g, break_rows);
    std::vector<TruncSeries<Element>> h;
    if (!break_rows) {
        h = erbt_hamiltonians(a, trunc);
    } else {
        rep.expect(!is_cartier_foata(a).ok, "mixed rows must break Cartier-Foata");
        Matrix<Element> n =
            Matrix<Element>::identity(g + 1, Element::one(a.sample().pres())) - a;
        auto inv = series_inverse_one_minus_t(n, trunc);
        for (int i = 1; i <= g; ++i) h.push_back(inv.at(i, 0));
    }
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i + 1; j < h.size(); ++j) {
            auto c = commutator(h[i], h[j]);
            rep.expect(RingOps<TruncSeries<Element>>::is_zero(c) == !break_rows,
                       std::string("[H_") + std::to_string(i + 1) + ", H_" +
                           std::to_string(j + 1) + "] " +
                           (break_rows ? "should not vanish" : "should vanish"));
        }
    return rep;
}

}  // namespace ncl
