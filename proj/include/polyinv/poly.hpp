#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyinv/multi_index.hpp"
#include "polyinv/rational.hpp"

namespace polyinv {

/// Sparse multivariate polynomial over Q in variables X1..Xn.
/// Terms are keyed by exponent vector in graded lexicographic order and
/// zero coefficients are never stored, so equal polynomials compare equal
/// structurally and iteration order is canonical.
class Poly {
public:
    using TermMap = std::map<MultiIndex, Rat, GrlexLess>;

    explicit Poly(std::size_t n) : n_(n) {}

    static Poly zero(std::size_t n) { return Poly(n); }

    static Poly constant(std::size_t n, const Rat& c) {
        Poly p(n);
        if (!c.is_zero()) p.terms_.emplace(MultiIndex(n), c);
        return p;
    }

    static Poly variable(std::size_t n, std::size_t j) {
        Poly p(n);
        p.terms_.emplace(MultiIndex::unit(n, j), Rat(1));
        return p;
    }

    static Poly monomial(const MultiIndex& alpha, const Rat& c) {
        Poly p(alpha.size());
        if (!c.is_zero()) p.terms_.emplace(alpha, c);
        return p;
    }

    std::size_t n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; degree(0) == 0 by convention.
    int degree() const {
        if (terms_.empty()) return 0;
        return terms_.rbegin()->first.total();
    }

    Rat coeff(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const MultiIndex& alpha, const Rat& c) {
        if (alpha.size() != n_) throw std::invalid_argument("Poly: term dimension mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_dim(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_dim(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(const Poly& a) {
        Poly r(a.n_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b, std::nullopt); }
    Poly& operator*=(const Poly& o) { *this = mul(*this, o, std::nullopt); return *this; }

    friend Poly operator*(const Rat& c, const Poly& a) {
        Poly r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    /// Product, discarding monomials of total degree > truncation when given.
    static Poly mul(const Poly& a, const Poly& b, std::optional<int> truncation) {
        a.check_dim(b);
        Poly r(a.n_);
        for (const auto& [ma, ca] : a.terms_) {
            int ta = ma.total();
            for (const auto& [mb, cb] : b.terms_) {
                if (truncation && ta + mb.total() > *truncation) continue;
                r.add_term(ma.plus(mb), ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative with respect to Xj (1-based).
    Poly partial(std::size_t j) const {
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            int e = m[j];
            if (e == 0) continue;
            r.add_term(m.minus(MultiIndex::unit(n_, j)), Rat(e) * c);
        }
        return r;
    }

    /// Substitute args[j-1] for Xj. All args share one dimension m; the result
    /// lives in dimension m. Monomials of total degree > truncation are
    /// discarded, both in intermediate products and in the result.
    Poly compose(const std::vector<Poly>& args, std::optional<int> truncation = std::nullopt) const {
        if (args.size() != n_) throw std::invalid_argument("Poly: compose needs one argument per variable");
        std::size_t m = n_ == 0 ? 0 : args[0].n();
        for (const auto& a : args)
            if (a.n() != m) throw std::invalid_argument("Poly: compose arguments disagree in dimension");
        // Cache powers of each argument as they are needed.
        std::vector<std::vector<Poly>> powers(n_);
        auto arg_power = [&](std::size_t j, int e) -> const Poly& {
            auto& cache = powers[j - 1];
            if (cache.empty()) cache.push_back(Poly::constant(m, Rat(1)));
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(mul(cache.back(), args[j - 1], truncation));
            return cache[e];
        };
        Poly r(m);
        for (const auto& [alpha, c] : terms_) {
            Poly t = Poly::constant(m, c);
            for (std::size_t j = 1; j <= n_; ++j) {
                int e = alpha[j];
                if (e > 0) t = mul(t, arg_power(j, e), truncation);
            }
            r += t;
        }
        return r;
    }

    /// Copy of the poly dropping all monomials of total degree > d.
    Poly truncated(int d) const {
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m.total() > d) break;  // grlex iteration is graded
            r.terms_.emplace(m, c);
        }
        return r;
    }

    /// Re-embed into dimension new_n, variable j becoming j + offset.
    Poly embedded(std::size_t new_n, std::size_t offset) const {
        Poly r(new_n);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.embedded(new_n, offset), c);
        return r;
    }

    /// Canonical text form: terms ascending graded-lex, every variable spelled
    /// with its exponent, coefficients as num/den. Zero renders as "0".
    std::string to_canonical_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.to_fraction_string();
            for (std::size_t j = 1; j <= n_; ++j) os << (j == 1 ? " * X" : "*X") << j << "^" << m[j];
        }
        return os.str();
    }

    /// Compact human form used in reports: exponent-1 powers unmarked, zero
    /// exponents omitted, integer coefficients without "/1".
    std::string to_pretty_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.to_string();
            for (std::size_t j = 1; j <= n_; ++j) {
                int e = m[j];
                if (e == 0) continue;
                os << "*X" << j;
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void check_dim(const Poly& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Poly: dimension mismatch");
    }

    std::size_t n_;
    TermMap terms_;
};

/// Exact polynomial quotient a / b; throws std::invalid_argument when b is zero
/// and std::logic_error when the division is not exact. Uses leading-term
/// elimination in graded lexicographic order, which terminates because the
/// leading monomial of the remainder strictly decreases.
inline Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (a.n() != b.n()) throw std::invalid_argument("divide_exact: dimension mismatch");
    Poly q(a.n());
    Poly r = a;
    const auto& lb = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& lr = *r.terms().rbegin();
        if (!lr.first.dominates(lb.first))
            throw std::logic_error("divide_exact: inexact division");
        Poly t = Poly::monomial(lr.first.minus(lb.first), lr.second / lb.second);
        q += t;
        r -= t * b;
    }
    return q;
}

}  // namespace polyinv
