#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ncl/ringops.hpp"
#include "ncl/series.hpp"
#include "ncl/tpoly.hpp"

namespace ncl {

struct NonManinError : std::domain_error {
    explicit NonManinError(const std::string& w, int i = 0, int j = 0, int k = 0, int l = 0,
                           std::string residual_text = "")
        : std::domain_error(w), i(i), j(j), k(k), l(l), residual(std::move(residual_text)) {}
    int i, j, k, l;  // 1-based witness indices
    std::string residual;
};

/// Rectangular matrix over an arbitrary ring R (entries carry their own
/// algebra context). Immutable value semantics; 0-based indexing internally,
/// 1-based in reports.
template <class R>
class Matrix {
public:
    Matrix(int rows, int cols, const R& fill)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: empty shape");
    }

    static Matrix identity(int n, const R& like) {
        Matrix m(n, n, RingOps<R>::zero(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = RingOps<R>::one(like);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    R& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const R& sample() const { return e_[0]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_, e_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    /// Submatrix keeping the given (0-based) rows and columns, in order.
    Matrix select(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Matrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()), e_[0]);
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = at(rs[i], cs[j]);
        return m;
    }

    Matrix drop(int row, int col) const {
        std::vector<int> rs, cs;
        for (int i = 0; i < rows_; ++i)
            if (i != row) rs.push_back(i);
        for (int j = 0; j < cols_; ++j)
            if (j != col) cs.push_back(j);
        return select(rs, cs);
    }

    Matrix permute_columns(const std::vector<int>& p) const {
        Matrix m = *this;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, p[static_cast<size_t>(j)]);
        return m;
    }

    Matrix block(int r0, int c0, int nrows, int ncols) const {
        std::vector<int> rs(static_cast<size_t>(nrows)), cs(static_cast<size_t>(ncols));
        std::iota(rs.begin(), rs.end(), r0);
        std::iota(cs.begin(), cs.end(), c0);
        return select(rs, cs);
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.e_) x = -x;
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix m = a;
        for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix m(a.rows_, b.cols_, RingOps<R>::zero(a.e_[0]));
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (RingOps<R>::is_zero(a.at(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return m;
    }

    /// Entry-wise left multiplication by a ring element.
    Matrix scaled_left(const R& s) const {
        Matrix m = *this;
        for (auto& x : m.e_) x = s * x;
        return m;
    }
    Matrix scaled_right(const R& s) const {
        Matrix m = *this;
        for (auto& x : m.e_) x = x * s;
        return m;
    }

    R trace() const {
        require_square("trace");
        R t = at(0, 0);
        for (int i = 1; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!RingOps<R>::is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a - b).is_zero();
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    void require_square(const char* op) const {
        if (!square()) throw std::invalid_argument(std::string(op) + ": matrix not square");
    }

private:
    void check_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
    int rows_, cols_;
    std::vector<R> e_;
};

template <class R>
Matrix<R> matrix_pow(const Matrix<R>& m, int k) {
    m.require_square("matrix_pow");
    Matrix<R> r = Matrix<R>::identity(m.rows(), m.sample());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

// ---------------------------------------------------------------------------
// Manin predicates
// ---------------------------------------------------------------------------

/// Generic commutator; rings with a bespoke overload (Element) win by being
/// non-template.
template <class R>
R commutator(const R& a, const R& b) {
    return a * b - b * a;
}

template <class R>
struct ManinReport {
    bool ok = true;
    int i = 0, j = 0, k = 0, l = 0;  // 1-based witness indices on failure
    std::optional<R> residual;
    std::string what() const {
        if (ok) return "manin";
        return "failed at (" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + "," + std::to_string(l) + ")";
    }
};

/// Unified Manin relation [M_pq, M_kl] = [M_kq, M_pl] for all quadruples with
/// p < k; q = l covers same-column commutativity. Rectangular matrices are
/// allowed.
template <class R>
ManinReport<R> is_manin(const Matrix<R>& m) {
    for (int p = 0; p < m.rows(); ++p)
        for (int k = p + 1; k < m.rows(); ++k)
            for (int q = 0; q < m.cols(); ++q)
                for (int l = 0; l < m.cols(); ++l) {
                    R r = commutator(m.at(p, q), m.at(k, l)) - commutator(m.at(k, q), m.at(p, l));
                    if (!RingOps<R>::is_zero(r))
                        return {false, p + 1, q + 1, k + 1, l + 1, std::move(r)};
                }
    return {};
}

/// Cartier-Foata: entries from different rows commute.
template <class R>
ManinReport<R> is_cartier_foata(const Matrix<R>& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.rows(); ++k) {
            if (i == k) continue;
            for (int j = 0; j < m.cols(); ++j)
                for (int l = 0; l < m.cols(); ++l) {
                    R r = commutator(m.at(i, j), m.at(k, l));
                    if (!RingOps<R>::is_zero(r))
                        return {false, i + 1, j + 1, k + 1, l + 1, std::move(r)};
                }
        }
    return {};
}

namespace manin_detail {
template <class R>
auto render(const R& x, int) -> decltype(x.str()) {
    return x.str();
}
template <class R>
std::string render(const R&, long) {
    return "";
}
}  // namespace manin_detail

template <class R>
void require_manin(const Matrix<R>& m, const char* op) {
    auto rep = is_manin(m);
    if (!rep.ok)
        throw NonManinError(std::string(op) + ": input is not a Manin matrix, " + rep.what(),
                            rep.i, rep.j, rep.k, rep.l,
                            rep.residual ? manin_detail::render(*rep.residual, 0) : "");
}

// ---------------------------------------------------------------------------
// Determinants and permanents (permutation expansion; desk-scale sizes)
// ---------------------------------------------------------------------------

namespace det_detail {

inline int parity(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

inline std::vector<int> natural(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace det_detail

/// Column determinant with an explicit column order: sum over permutations of
/// sign(s) * prod over positions i of M(s(order[i]), order[i]), factors taken
/// left to right.
template <class R>
R column_det_ordered(const Matrix<R>& m, const std::vector<int>& order) {
    m.require_square("column_det");
    const int n = m.rows();
    std::vector<int> sigma = det_detail::natural(n);
    R acc = RingOps<R>::zero(m.sample());
    do {
        R prod = RingOps<R>::one(m.sample());
        for (int idx = 0; idx < n; ++idx) {
            int col = order[static_cast<size_t>(idx)];
            prod = prod * m.at(sigma[static_cast<size_t>(col)], col);
        }
        if (det_detail::parity(sigma) < 0)
            acc = acc - prod;
        else
            acc = acc + prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

template <class R>
R column_det(const Matrix<R>& m) {
    return column_det_ordered(m, det_detail::natural(m.rows()));
}

/// Row determinant: factors ordered by ascending row index.
template <class R>
R row_det(const Matrix<R>& m) {
    m.require_square("row_det");
    const int n = m.rows();
    std::vector<int> sigma = det_detail::natural(n);
    R acc = RingOps<R>::zero(m.sample());
    do {
        R prod = RingOps<R>::one(m.sample());
        for (int i = 0; i < n; ++i) prod = prod * m.at(i, sigma[static_cast<size_t>(i)]);
        if (det_detail::parity(sigma) < 0)
            acc = acc - prod;
        else
            acc = acc + prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

/// Row permanent with an explicit row order.
template <class R>
R row_permanent_ordered(const Matrix<R>& m, const std::vector<int>& order) {
    m.require_square("row_permanent");
    const int n = m.rows();
    std::vector<int> sigma = det_detail::natural(n);
    R acc = RingOps<R>::zero(m.sample());
    do {
        R prod = RingOps<R>::one(m.sample());
        for (int idx = 0; idx < n; ++idx) {
            int row = order[static_cast<size_t>(idx)];
            prod = prod * m.at(row, sigma[static_cast<size_t>(row)]);
        }
        acc = acc + prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

template <class R>
R row_permanent(const Matrix<R>& m) {
    return row_permanent_ordered(m, det_detail::natural(m.rows()));
}

// ---------------------------------------------------------------------------
// Adjugate, characteristic polynomial, symmetric-power traces
// ---------------------------------------------------------------------------

/// adj(M)_{kl} = (-1)^(k+l) column_det of M with row l and column k removed;
/// satisfies adj(M) * M = column_det(M) * Id for Manin M.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
    m.require_square("adjugate");
    require_manin(m, "adjugate");
    const int n = m.rows();
    Matrix<R> adj(n, n, RingOps<R>::zero(m.sample()));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            R d = n == 1 ? RingOps<R>::one(m.sample()) : column_det(m.drop(l, k));
            adj.at(k, l) = ((k + l) % 2) ? -d : d;
        }
    return adj;
}

/// Coefficients h_0..h_n of column_det(t*Id - M), ascending in the central
/// variable t; h_n = 1.
template <class R>
TPoly<R> char_poly_unchecked(const Matrix<R>& m) {
    m.require_square("char_poly");
    const int n = m.rows();
    R zero = RingOps<R>::zero(m.sample()), one = RingOps<R>::one(m.sample());
    Matrix<TPoly<R>> tm(n, n, TPoly<R>(zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<R> c{-m.at(i, j)};
            if (i == j) c.push_back(one);
            tm.at(i, j) = TPoly<R>(std::move(c));
        }
    return column_det(tm);
}

template <class R>
TPoly<R> char_poly(const Matrix<R>& m) {
    require_manin(m, "char_poly");
    return char_poly_unchecked(m);
}

/// Row-determinant characteristic polynomial of t - M (for matrices whose
/// transpose is Manin).
template <class R>
TPoly<R> char_poly_row(const Matrix<R>& m) {
    m.require_square("char_poly_row");
    const int n = m.rows();
    R zero = RingOps<R>::zero(m.sample()), one = RingOps<R>::one(m.sample());
    Matrix<TPoly<R>> tm(n, n, TPoly<R>(zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<R> c{-m.at(i, j)};
            if (i == j) c.push_back(one);
            tm.at(i, j) = TPoly<R>(std::move(c));
        }
    return row_det(tm);
}

/// Tr S^p M = 1/p! sum over index tuples (l_1..l_p), repeats allowed, of the
/// row permanent of the p x p matrix (M_{l_a, l_b}). Requires Manin input:
/// row-order independence of the permanent lets the sum run over sorted
/// tuples weighted by their multiset multiplicity.
template <class R>
R sym_power_trace_unchecked(const Matrix<R>& m, int p) {
    m.require_square("sym_power_trace");
    if (p < 0) throw std::invalid_argument("sym_power_trace: negative power");
    if (p == 0) return RingOps<R>::one(m.sample());
    const int s = m.rows();
    std::vector<int> tuple(static_cast<size_t>(p), 0);  // non-decreasing
    R acc = RingOps<R>::zero(m.sample());
    Rational pfac = factorial(static_cast<unsigned long>(p));
    for (;;) {
        Matrix<R> sub(p, p, m.sample());
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                sub.at(a, b) = m.at(tuple[static_cast<size_t>(a)], tuple[static_cast<size_t>(b)]);
        // number of tuples with this multiset: p! / prod (multiplicities!)
        Rational weight = pfac;
        for (int v = 0; v < s; ++v) {
            unsigned long mult = 0;
            for (int a = 0; a < p; ++a)
                if (tuple[static_cast<size_t>(a)] == v) ++mult;
            if (mult > 1) weight = weight / factorial(mult);
        }
        acc = acc + RingOps<R>::scale(row_permanent(sub), weight);
        int pos = p - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == s - 1) --pos;
        if (pos < 0) break;
        int next = tuple[static_cast<size_t>(pos)] + 1;
        for (int a = pos; a < p; ++a) tuple[static_cast<size_t>(a)] = next;
    }
    return RingOps<R>::scale(acc, pfac.inverse());
}

template <class R>
R sym_power_trace(const Matrix<R>& m, int p) {
    require_manin(m, "sym_power_trace");
    return sym_power_trace_unchecked(m, p);
}

// ---------------------------------------------------------------------------
// Truncated-series device: inverses and Schur complements of 1 - tN
// ---------------------------------------------------------------------------

/// 1 - tM as a matrix over truncated series.
template <class R>
Matrix<TruncSeries<R>> one_minus_t(const Matrix<R>& m, int trunc) {
    TruncSeries<R> z(trunc, RingOps<R>::zero(m.sample()));
    Matrix<TruncSeries<R>> s(m.rows(), m.cols(), z);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j) s.at(i, j).at(0) = RingOps<R>::one(m.sample());
            s.at(i, j).at(1) = -m.at(i, j);
        }
    return s;
}

/// (1 - tN)^(-1) = sum_{k<=trunc} t^k N^k.
template <class R>
Matrix<TruncSeries<R>> series_inverse_one_minus_t(const Matrix<R>& n, int trunc) {
    n.require_square("series_inverse_one_minus_t");
    TruncSeries<R> z(trunc, RingOps<R>::zero(n.sample()));
    Matrix<TruncSeries<R>> inv(n.rows(), n.cols(), z);
    Matrix<R> pw = Matrix<R>::identity(n.rows(), n.sample());
    for (int k = 0; k <= trunc; ++k) {
        for (int i = 0; i < n.rows(); ++i)
            for (int j = 0; j < n.cols(); ++j) inv.at(i, j).at(k) = pw.at(i, j);
        if (k < trunc) pw = pw * n;
    }
    return inv;
}

enum class SchurSide { Lower, Upper };

/// Schur complement of the block split of M = 1 - tN with A the leading
/// k x k block: Lower gives D - C A^(-1) B, Upper gives A - B D^(-1) C,
/// both modulo t^(trunc+1).
template <class R>
Matrix<TruncSeries<R>> schur_complement(const Matrix<R>& n, int k, SchurSide side, int trunc) {
    n.require_square("schur_complement");
    if (k < 1 || k >= n.rows())
        throw std::invalid_argument("schur_complement: invalid block size");
    const int r = n.rows() - k;
    Matrix<R> naa = n.block(0, 0, k, k), nab = n.block(0, k, k, r);
    Matrix<R> nba = n.block(k, 0, r, k), nbb = n.block(k, k, r, r);
    auto lift = [&](const Matrix<R>& m, int tpow) {
        TruncSeries<R> z(trunc, RingOps<R>::zero(m.sample()));
        Matrix<TruncSeries<R>> s(m.rows(), m.cols(), z);
        if (tpow <= trunc)
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) s.at(i, j).at(tpow) = m.at(i, j);
        return s;
    };
    if (side == SchurSide::Lower) {
        Matrix<TruncSeries<R>> ainv = series_inverse_one_minus_t(naa, trunc);
        Matrix<TruncSeries<R>> b = lift(-nab, 1), c = lift(-nba, 1);
        Matrix<TruncSeries<R>> d = one_minus_t(nbb, trunc);
        return d - c * ainv * b;
    }
    Matrix<TruncSeries<R>> dinv = series_inverse_one_minus_t(nbb, trunc);
    Matrix<TruncSeries<R>> b = lift(-nab, 1), c = lift(-nba, 1);
    Matrix<TruncSeries<R>> a = one_minus_t(naa, trunc);
    return a - b * dinv * c;
}

}  // namespace ncl
