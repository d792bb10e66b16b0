#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncl/expr_text.hpp"
#include "ncl/matrix.hpp"

namespace ncl {

/// A constructed Lax matrix together with the data needed to evaluate it:
/// the presentation, the marked points (pole candidates) and its relation
/// class.
struct LaxModel {
    std::string name;
    bool yangian = false;
    int n = 0;
    PresPtr pres;
    Matrix<Element> M;
    std::vector<Rational> marked_points;
};

inline std::vector<Rational> default_points(int m) {
    std::vector<Rational> p;
    for (int i = 0; i < m; ++i) p.emplace_back(static_cast<long>(i));
    return p;
}

/// Default constant matrix: diagonal with distinct small rationals.
inline Matrix<Rational> default_kmatrix(int n) {
    Matrix<Rational> k(n, n, Rational(0));
    for (int i = 0; i < n; ++i) k.at(i, i) = Rational(i, 2);
    return k;
}

namespace lax_detail {

inline void require_distinct(const std::vector<Rational>& pts) {
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
            if (pts[a] == pts[b])
                throw std::invalid_argument("lax model: marked points must be distinct");
}

inline Element qgen(const PresPtr& p, int i, int site) {
    return Element::generator(p, p->find(GenKind::HeisenbergQ, i, 0, site));
}
inline Element pgen(const PresPtr& p, int i, int site) {
    return Element::generator(p, p->find(GenKind::HeisenbergP, i, 0, site));
}
inline Element egen(const PresPtr& p, int i, int j, int site) {
    return Element::generator(p, p->find(GenKind::GlBasis, i, j, site));
}

}  // namespace lax_detail

/// L(z) = K + Q diag(1/(z - z_i)) P^t over the Weyl algebra:
/// L_ab = K_ab + sum_i q_{a,i} p_{b,i} / (z - z_i).
inline LaxModel gaudin_simplest(int n, int k, std::optional<Matrix<Rational>> K = {},
                                std::vector<Rational> points = {}) {
    using namespace lax_detail;
    if (points.empty()) points = default_points(k);
    require_distinct(points);
    Matrix<Rational> km = K ? *K : default_kmatrix(n);
    PresPtr pres = Presentation::weyl(n, k);
    Matrix<Element> L(n, n, Element::zero(pres));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Element entry = Element::scalar(pres, km.at(a - 1, b - 1));
            for (int i = 1; i <= k; ++i)
                entry += (qgen(pres, a, i) * pgen(pres, b, i))
                             .scaled(simple_pole(points[static_cast<size_t>(i - 1)]));
            L.at(a - 1, b - 1) = entry;
        }
    return {"gaudin.simplest:n=" + std::to_string(n) + ",k=" + std::to_string(k), false, n,
            pres, L, points};
}

/// L(z) = sum_i E^(i) / (z - z_i) over U(gl_n + ... + gl_n).
inline LaxModel gaudin_standard(int n, int m, std::vector<Rational> points = {}) {
    using namespace lax_detail;
    if (points.empty()) points = default_points(m);
    require_distinct(points);
    PresPtr pres = Presentation::gl_sum(n, m);
    Matrix<Element> L(n, n, Element::zero(pres));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Element entry = Element::zero(pres);
            for (int i = 1; i <= m; ++i)
                entry += egen(pres, a, b, i).scaled(simple_pole(points[static_cast<size_t>(i - 1)]));
            L.at(a - 1, b - 1) = entry;
        }
    return {"gaudin.standard:n=" + std::to_string(n) + ",sites=" + std::to_string(m), false, n,
            pres, L, points};
}

/// L(z) = (1/z) (e_ij) over U(gl_n).
inline LaxModel gaudin_gl_basic(int n) {
    LaxModel m = gaudin_standard(n, 1, {Rational(0)});
    m.name = "gaudin.gl:n=" + std::to_string(n);
    return m;
}

/// L(z) = sum_{i=1..N} (e_ij t^(i-1)) / z^i over U(gl_n[t]/t^N).
inline LaxModel gaudin_gl_poly(int n, int N) {
    using namespace lax_detail;
    PresPtr pres = Presentation::gl_poly(n, N);
    Matrix<Element> L(n, n, Element::zero(pres));
    RatFun invz(Poly(Rational(1)), Poly::var());
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Element entry = Element::zero(pres);
            RatFun w = invz;
            for (int i = 1; i <= N; ++i) {
                entry += egen(pres, a, b, i - 1).scaled(w);
                w = w * invz;
            }
            L.at(a - 1, b - 1) = entry;
        }
    return {"gaudin.glpoly:n=" + std::to_string(n) + ",N=" + std::to_string(N), false, n,
            pres, L, {Rational(0)}};
}

/// T(z) = prod_i [[z - p_i, Einv_i], [-E_i, 0]], site factors ascending left
/// to right.
inline LaxModel yangian_toda(int n) {
    PresPtr pres = Presentation::toda(n);
    Matrix<Element> T = Matrix<Element>::identity(2, Element::one(pres));
    for (int i = 1; i <= n; ++i) {
        Matrix<Element> site(2, 2, Element::zero(pres));
        site.at(0, 0) = Element::with_coeff(pres, RatFun::var()) -
                        Element::generator(pres, pres->find(GenKind::HeisenbergP, 1, 0, i));
        site.at(0, 1) = Element::generator(pres, pres->find(GenKind::ExpNeg, 1, 0, i));
        site.at(1, 0) = -Element::generator(pres, pres->find(GenKind::ExpPos, 1, 0, i));
        T = T * site;
    }
    return {"yangian.toda:n=" + std::to_string(n), true, 2, pres, T, {}};
}

/// T(z) = prod_i (1 + Q_i P_i^t / (z - z_i)) over the Weyl algebra.
inline LaxModel yangian_xxx_simplest(int n, int k, std::vector<Rational> points = {}) {
    using namespace lax_detail;
    if (points.empty()) points = default_points(k);
    require_distinct(points);
    PresPtr pres = Presentation::weyl(n, k);
    Matrix<Element> T = Matrix<Element>::identity(n, Element::one(pres));
    for (int i = 1; i <= k; ++i) {
        Matrix<Element> site = Matrix<Element>::identity(n, Element::one(pres));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                site.at(a - 1, b - 1) += (qgen(pres, a, i) * pgen(pres, b, i))
                                             .scaled(simple_pole(points[static_cast<size_t>(i - 1)]));
        T = T * site;
    }
    return {"yangian.simplest:n=" + std::to_string(n) + ",k=" + std::to_string(k), true, n,
            pres, T, points};
}

/// T(z) = prod_i (1 + E^(i) / (z - z_i)) over U(gl_n + ... + gl_n).
inline LaxModel yangian_xxx_standard(int n, int m, std::vector<Rational> points = {}) {
    using namespace lax_detail;
    if (points.empty()) points = default_points(m);
    require_distinct(points);
    PresPtr pres = Presentation::gl_sum(n, m);
    Matrix<Element> T = Matrix<Element>::identity(n, Element::one(pres));
    for (int i = 1; i <= m; ++i) {
        Matrix<Element> site = Matrix<Element>::identity(n, Element::one(pres));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                site.at(a - 1, b - 1) += egen(pres, a, b, i).scaled(simple_pole(points[static_cast<size_t>(i - 1)]));
        T = T * site;
    }
    return {"yangian.standard:n=" + std::to_string(n) + ",sites=" + std::to_string(m), true, n,
            pres, T, points};
}

// ---------------------------------------------------------------------------
// Operator forms
// ---------------------------------------------------------------------------

/// dz*Id - L (sign -1) or (dz*Id + L)^t (sign +1, transpose), entries in
/// canonical right-dz form.
inline Matrix<Element> gaudin_operator(const Matrix<Element>& L, int sign = -1,
                                       bool transpose = false) {
    PresPtr pres = L.sample().pres();
    Matrix<Element> op(L.rows(), L.cols(), Element::zero(pres));
    for (int i = 0; i < L.rows(); ++i)
        for (int j = 0; j < L.cols(); ++j) {
            Element entry = sign < 0 ? -L.at(i, j) : L.at(i, j);
            if (i == j) entry += Element::dz_power(pres, 1);
            op.at(i, j) = entry;
        }
    return transpose ? op.transpose() : op;
}

enum class YangForm { TSinv, StTranspose };

/// T(z) e^{-dz} (TSinv) or (e^{dz} T(z))^t (StTranspose).
inline Matrix<Element> yangian_operator(const Matrix<Element>& T, YangForm form) {
    PresPtr pres = T.sample().pres();
    Matrix<Element> op(T.rows(), T.cols(), Element::zero(pres));
    if (form == YangForm::TSinv) {
        Element sm = Element::shift_power(pres, -1);
        for (int i = 0; i < T.rows(); ++i)
            for (int j = 0; j < T.cols(); ++j) op.at(i, j) = T.at(i, j) * sm;
        return op;
    }
    Element sp = Element::shift_power(pres, 1);
    for (int i = 0; i < T.rows(); ++i)
        for (int j = 0; j < T.cols(); ++j) op.at(i, j) = sp * T.at(i, j);
    return op.transpose();
}

// ---------------------------------------------------------------------------
// Defining commutation relations, checked exactly at rational points
// ---------------------------------------------------------------------------

struct RelationReport {
    bool ok = true;
    long checks = 0;
    std::string witness;
};

/// [L_ij(u), L_kl(v)] = (L_il(v) - L_il(u)) d_jk/(u-v) - (L_kj(v) - L_kj(u)) d_li/(u-v)
/// for all n^4 index quadruples, plus the u = v limit
/// [L_ij(u), L_kl(u)] = -(L_il'(u) d_jk - L_kj'(u) d_li).
inline RelationReport check_gaudin_relations(const Matrix<Element>& L, const Rational& u,
                                             const Rational& v) {
    if (u == v) throw std::invalid_argument("check_gaudin_relations: u = v");
    RelationReport rep;
    const int n = L.rows();
    Rational inv_uv = (u - v).inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Element lhs = commutator(L.at(i, j).evaluate_z(u), L.at(k, l).evaluate_z(v));
                    Element rhs = Element::zero(L.sample().pres());
                    if (j == k)
                        rhs += (L.at(i, l).evaluate_z(v) - L.at(i, l).evaluate_z(u)).scaled(inv_uv);
                    if (l == i)
                        rhs -= (L.at(k, j).evaluate_z(v) - L.at(k, j).evaluate_z(u)).scaled(inv_uv);
                    ++rep.checks;
                    if (lhs != rhs) {
                        rep.ok = false;
                        rep.witness = "gaudin relation failed at (i,j,k,l)=(" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
                        return rep;
                    }
                    // diagonal limit at z = u
                    Element dlhs = commutator(L.at(i, j).evaluate_z(u), L.at(k, l).evaluate_z(u));
                    Element drhs = Element::zero(L.sample().pres());
                    if (j == k) drhs -= L.at(i, l).derived_z().evaluate_z(u);
                    if (l == i) drhs += L.at(k, j).derived_z().evaluate_z(u);
                    ++rep.checks;
                    if (dlhs != drhs) {
                        rep.ok = false;
                        rep.witness = "gaudin diagonal-limit relation failed at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
                        return rep;
                    }
                }
    return rep;
}

/// [T_ij(u), T_kl(v)] = (T_kj(u) T_il(v) - T_kj(v) T_il(u)) / (u - v).
inline RelationReport check_yangian_relations(const Matrix<Element>& T, const Rational& u,
                                              const Rational& v) {
    if (u == v) throw std::invalid_argument("check_yangian_relations: u = v");
    RelationReport rep;
    const int n = T.rows();
    Rational inv_uv = (u - v).inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Element lhs = commutator(T.at(i, j).evaluate_z(u), T.at(k, l).evaluate_z(v));
                    Element rhs = (T.at(k, j).evaluate_z(u) * T.at(i, l).evaluate_z(v) -
                                   T.at(k, j).evaluate_z(v) * T.at(i, l).evaluate_z(u))
                                      .scaled(inv_uv);
                    ++rep.checks;
                    if (lhs != rhs) {
                        rep.ok = false;
                        rep.witness = "yangian relation failed at (i,j,k,l)=(" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
                        return rep;
                    }
                }
    return rep;
}

/// Entry-wise f(z) -> f(z + s) on a z-operator-free matrix.
inline Matrix<Element> shifted_z(const Matrix<Element>& m, const Rational& s) {
    Matrix<Element> r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).shifted_z(s);
    return r;
}

inline Matrix<Element> derived_z(const Matrix<Element>& m) {
    Matrix<Element> r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).derived_z();
    return r;
}

inline Matrix<Element> evaluated_z(const Matrix<Element>& m, const Rational& u) {
    Matrix<Element> r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).evaluate_z(u);
    return r;
}

// ---------------------------------------------------------------------------
// Model spec strings and files
// ---------------------------------------------------------------------------

/// Inline model specs: "simplest:n=2,k=1", "standard:n=2,sites=2",
/// "gl_basic:n=2", "gl_poly:n=2,N=2", "toda:n=2", "xxx_simplest:n=2,k=1",
/// "xxx_standard:n=2,sites=1"; optional "points=0;1" and "K=0;1/2" (diagonal).
inline LaxModel model_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad model spec: " + spec);
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    auto geti = [&](const std::string& k, int dflt) {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : std::stoi(it->second);
    };
    auto get_rats = [&](const std::string& k) {
        std::vector<Rational> v;
        auto it = kv.find(k);
        if (it == kv.end()) return v;
        std::stringstream ss(it->second);
        std::string tok;
        while (std::getline(ss, tok, ';')) v.push_back(Rational(tok));
        return v;
    };
    int n = geti("n", 2);
    std::vector<Rational> pts = get_rats("points");
    std::vector<Rational> kd = get_rats("K");
    std::optional<Matrix<Rational>> K;
    if (!kd.empty()) {
        Matrix<Rational> km(n, n, Rational(0));
        for (int i = 0; i < n && i < static_cast<int>(kd.size()); ++i)
            km.at(i, i) = kd[static_cast<size_t>(i)];
        K = km;
    }
    if (head == "simplest") return gaudin_simplest(n, geti("k", 1), K, pts);
    if (head == "standard") return gaudin_standard(n, geti("sites", 1), pts);
    if (head == "gl_basic") return gaudin_gl_basic(n);
    if (head == "gl_poly") return gaudin_gl_poly(n, geti("N", 2));
    if (head == "toda") return yangian_toda(n);
    if (head == "xxx_simplest") return yangian_xxx_simplest(n, geti("k", 1), pts);
    if (head == "xxx_standard") return yangian_xxx_standard(n, geti("sites", 1), pts);
    throw std::invalid_argument("unknown model kind: " + head);
}

/// Structured-text model files: one "key = value" per line, keys kind, n,
/// k/sites/N, points, K; lists semicolon-separated. '#' starts a comment.
inline LaxModel model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file: " + path);
    std::string line, head, params;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto strip = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = strip(line.substr(0, eq)), val = strip(line.substr(eq + 1));
        if (key == "kind")
            head = val;
        else if (!key.empty())
            params += (params.empty() ? "" : ",") + key + "=" + val;
    }
    if (head.empty()) throw std::invalid_argument("model file missing 'kind': " + path);
    return model_from_spec(head + (params.empty() ? "" : ":" + params));
}

}  // namespace ncl
