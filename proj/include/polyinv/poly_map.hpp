#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyinv/poly.hpp"

namespace polyinv {

/// Higher-order part H of a map F = X - H: n components in n variables, every
/// term of total degree >= 2. Components are 1-based, matching X1..Xn.
class HPart {
public:
    explicit HPart(std::vector<Poly> components) : comps_(std::move(components)) {
        n_ = comps_.size();
        for (const auto& p : comps_) {
            if (p.n() != n_) throw std::invalid_argument("HPart: component dimension mismatch");
            if (!p.is_zero() && p.terms().begin()->first.total() < 2)
                throw std::invalid_argument("HPart: component has a term of degree < 2");
        }
    }

    static HPart zero(std::size_t n) { return HPart(std::vector<Poly>(n, Poly::zero(n))); }

    std::size_t n() const { return n_; }
    const Poly& component(std::size_t i) const { check_comp(i); return comps_[i - 1]; }
    const std::vector<Poly>& components() const { return comps_; }

    bool is_zero() const {
        for (const auto& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    int degree() const {
        int d = 0;
        for (const auto& p : comps_) d = std::max(d, p.degree());
        return d;
    }

    /// Series coefficient H_{i,alpha} = alpha! * (coefficient of X^alpha in H_i).
    /// Defined only for |alpha| >= 2; anything lower is an error by the order
    /// constraint on H.
    Rat coefficient(std::size_t i, const MultiIndex& alpha) const {
        if (alpha.total() < 2)
            throw std::invalid_argument("HPart: coefficient requires |alpha| >= 2");
        return coefficient_or_zero(i, alpha);
    }

    /// Same normalization, but total degree < 2 silently yields 0. Useful in
    /// sums whose index range can fall below the order of H.
    Rat coefficient_or_zero(std::size_t i, const MultiIndex& alpha) const {
        check_comp(i);
        if (alpha.size() != n_) throw std::invalid_argument("HPart: alpha dimension mismatch");
        Rat plain = comps_[i - 1].coeff(alpha);
        if (plain.is_zero()) return plain;
        return Rat(alpha.factorial_product()) * plain;
    }

private:
    void check_comp(std::size_t i) const {
        if (i < 1 || i > n_) throw std::invalid_argument("HPart: component index out of range");
    }

    std::size_t n_;
    std::vector<Poly> comps_;
};

/// Polynomial map k^n -> k^n, stored componentwise.
class PolyMap {
public:
    explicit PolyMap(std::vector<Poly> components) : comps_(std::move(components)) {
        n_ = comps_.size();
        for (const auto& p : comps_)
            if (p.n() != n_) throw std::invalid_argument("PolyMap: component dimension mismatch");
    }

    static PolyMap identity(std::size_t n) {
        std::vector<Poly> c;
        c.reserve(n);
        for (std::size_t j = 1; j <= n; ++j) c.push_back(Poly::variable(n, j));
        return PolyMap(std::move(c));
    }

    /// F = X - H.
    static PolyMap x_minus(const HPart& h) {
        std::vector<Poly> c;
        for (std::size_t i = 1; i <= h.n(); ++i)
            c.push_back(Poly::variable(h.n(), i) - h.component(i));
        return PolyMap(std::move(c));
    }

    /// X + G, used for inverses.
    static PolyMap x_plus(const HPart& g) {
        std::vector<Poly> c;
        for (std::size_t i = 1; i <= g.n(); ++i)
            c.push_back(Poly::variable(g.n(), i) + g.component(i));
        return PolyMap(std::move(c));
    }

    std::size_t n() const { return n_; }
    const Poly& component(std::size_t i) const {
        if (i < 1 || i > n_) throw std::invalid_argument("PolyMap: component index out of range");
        return comps_[i - 1];
    }
    const std::vector<Poly>& components() const { return comps_; }

    int degree() const {
        int d = 0;
        for (const auto& p : comps_) d = std::max(d, p.degree());
        return d;
    }

    friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<Poly> comps_;
};

/// Componentwise substitution (F o G)(X) = F(G(X)), optionally truncated.
inline PolyMap map_compose(const PolyMap& f, const PolyMap& g,
                           std::optional<int> truncation = std::nullopt) {
    if (f.n() != g.n()) throw std::invalid_argument("map_compose: dimension mismatch");
    std::vector<Poly> c;
    c.reserve(f.n());
    for (const auto& p : f.components()) c.push_back(p.compose(g.components(), truncation));
    return PolyMap(std::move(c));
}

/// Square matrix with polynomial entries. The matrix size and the dimension of
/// the entry polynomials are independent: products of Jacobians evaluated at
/// separate variable blocks are n x n matrices over a larger variable set.
class PolyMatrix {
public:
    PolyMatrix(std::size_t size, std::size_t entry_dim)
        : size_(size), entry_dim_(entry_dim), grid_(size * size, Poly::zero(entry_dim)) {}

    static PolyMatrix identity(std::size_t size, std::size_t entry_dim) {
        PolyMatrix m(size, entry_dim);
        for (std::size_t i = 1; i <= size; ++i)
            m.entry(i, i) = Poly::constant(entry_dim, Rat(1));
        return m;
    }

    std::size_t size() const { return size_; }
    std::size_t entry_dim() const { return entry_dim_; }

    Poly& entry(std::size_t i, std::size_t j) { return grid_[index(i, j)]; }
    const Poly& entry(std::size_t i, std::size_t j) const { return grid_[index(i, j)]; }

    bool is_zero() const {
        for (const auto& p : grid_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Entries re-embedded into entry dimension new_dim with variables shifted
    /// by offset; used to move a Jacobian to its own variable block.
    PolyMatrix embedded(std::size_t new_dim, std::size_t offset) const {
        PolyMatrix m(size_, new_dim);
        for (std::size_t k = 0; k < grid_.size(); ++k) m.grid_[k] = grid_[k].embedded(new_dim, offset);
        return m;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.size_ != b.size_ || a.entry_dim_ != b.entry_dim_)
            throw std::invalid_argument("PolyMatrix: product shape mismatch");
        PolyMatrix r(a.size_, a.entry_dim_);
        for (std::size_t i = 1; i <= a.size_; ++i)
            for (std::size_t j = 1; j <= a.size_; ++j) {
                Poly s(a.entry_dim_);
                for (std::size_t k = 1; k <= a.size_; ++k) s += a.entry(i, k) * b.entry(k, j);
                r.entry(i, j) = std::move(s);
            }
        return r;
    }

    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.size_ != b.size_ || a.entry_dim_ != b.entry_dim_)
            throw std::invalid_argument("PolyMatrix: sum shape mismatch");
        PolyMatrix r(a.size_, a.entry_dim_);
        for (std::size_t k = 0; k < a.grid_.size(); ++k) r.grid_[k] = a.grid_[k] - b.grid_[k];
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.size_ == b.size_ && a.entry_dim_ == b.entry_dim_ && a.grid_ == b.grid_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > size_ || j < 1 || j > size_)
            throw std::invalid_argument("PolyMatrix: entry index out of range");
        return (i - 1) * size_ + (j - 1);
    }

    std::size_t size_, entry_dim_;
    std::vector<Poly> grid_;
};

/// Jacobian matrix JH with (i,j) entry dH_i/dXj.
inline PolyMatrix jacobian(const HPart& h) {
    PolyMatrix m(h.n(), h.n());
    for (std::size_t i = 1; i <= h.n(); ++i)
        for (std::size_t j = 1; j <= h.n(); ++j) m.entry(i, j) = h.component(i).partial(j);
    return m;
}

/// Exact determinant by Bareiss fraction-free elimination. Every interior
/// division is exact, so the entries stay polynomials throughout.
inline Poly determinant(PolyMatrix m) {
    std::size_t s = m.size();
    std::size_t d = m.entry_dim();
    if (s == 0) return Poly::constant(d, Rat(1));
    int sign = 1;
    Poly prev = Poly::constant(d, Rat(1));
    for (std::size_t k = 1; k + 1 <= s; ++k) {
        if (m.entry(k, k).is_zero()) {
            std::size_t pivot = 0;
            for (std::size_t r = k + 1; r <= s; ++r)
                if (!m.entry(r, k).is_zero()) { pivot = r; break; }
            if (pivot == 0) return Poly::zero(d);  // whole pivot column vanished
            for (std::size_t c = k; c <= s; ++c) std::swap(m.entry(k, c), m.entry(pivot, c));
            sign = -sign;
        }
        bool divide = !(prev.degree() == 0 && prev.coeff(MultiIndex(d)) == Rat(1));
        for (std::size_t i = k + 1; i <= s; ++i)
            for (std::size_t j = k + 1; j <= s; ++j) {
                Poly num = m.entry(k, k) * m.entry(i, j) - m.entry(i, k) * m.entry(k, j);
                m.entry(i, j) = divide ? divide_exact(num, prev) : std::move(num);
            }
        prev = m.entry(k, k);
        if (k + 1 == s) break;
    }
    Poly det = m.entry(s, s);
    return sign == 1 ? det : -det;
}

/// Keller condition for F = X - H: det(I - JH) == 1 identically.
inline bool keller_check(const HPart& h) {
    PolyMatrix a = PolyMatrix::identity(h.n(), h.n()) - jacobian(h);
    return determinant(std::move(a)) == Poly::constant(h.n(), Rat(1));
}

/// Dense rational matrix, used for linear coordinate changes.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[index(i, j)]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("RatMatrix: product shape mismatch");
        RatMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 1; i <= x.rows_; ++i)
            for (std::size_t j = 1; j <= y.cols_; ++j) {
                Rat s(0);
                for (std::size_t k = 1; k <= x.cols_; ++k) s += x.at(i, k) * y.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    /// Gauss-Jordan inverse; throws std::invalid_argument on a singular matrix.
    RatMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMatrix: inverse needs a square matrix");
        std::size_t n = rows_;
        RatMatrix a = *this;
        RatMatrix inv = identity(n);
        for (std::size_t col = 1; col <= n; ++col) {
            std::size_t pivot = 0;
            for (std::size_t r = col; r <= n; ++r)
                if (!a.at(r, col).is_zero()) { pivot = r; break; }
            if (pivot == 0) throw std::invalid_argument("RatMatrix: singular matrix");
            if (pivot != col)
                for (std::size_t c = 1; c <= n; ++c) {
                    std::swap(a.at(col, c), a.at(pivot, c));
                    std::swap(inv.at(col, c), inv.at(pivot, c));
                }
            Rat p = a.at(col, col);
            for (std::size_t c = 1; c <= n; ++c) {
                a.at(col, c) /= p;
                inv.at(col, c) /= p;
            }
            for (std::size_t r = 1; r <= n; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                Rat f = a.at(r, col);
                for (std::size_t c = 1; c <= n; ++c) {
                    a.at(r, c) -= f * a.at(col, c);
                    inv.at(r, c) -= f * inv.at(col, c);
                }
            }
        }
        return inv;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::invalid_argument("RatMatrix: index out of range");
        return (i - 1) * cols_ + (j - 1);
    }

    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Conjugate H by an invertible linear map T: the higher-order part of
/// T^{-1} o (X - H) o T, which is T^{-1} H(T X). Conjugation preserves degree
/// and both nilpotency indices.
inline HPart linear_conjugate(const HPart& h, const RatMatrix& t) {
    std::size_t n = h.n();
    if (t.rows() != n || t.cols() != n)
        throw std::invalid_argument("linear_conjugate: matrix shape mismatch");
    RatMatrix tinv = t.inverse();
    std::vector<Poly> tx;
    tx.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Poly row(n);
        for (std::size_t j = 1; j <= n; ++j)
            row += t.at(i, j) * Poly::variable(n, j);
        tx.push_back(std::move(row));
    }
    std::vector<Poly> h_of_tx;
    h_of_tx.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) h_of_tx.push_back(h.component(i).compose(tx));
    std::vector<Poly> result;
    result.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Poly acc(n);
        for (std::size_t j = 1; j <= n; ++j) acc += tinv.at(i, j) * h_of_tx[j - 1];
        result.push_back(std::move(acc));
    }
    return HPart(std::move(result));
}

}  // namespace polyinv
