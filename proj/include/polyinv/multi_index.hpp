#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyinv/rational.hpp"

namespace polyinv {

/// Exponent vector alpha = (a_1,...,a_n), all entries >= 0.
/// Variable indices in the public API are 1-based throughout the library.
class MultiIndex {
public:
    explicit MultiIndex(std::size_t n) : e_(n, 0) {}
    explicit MultiIndex(std::vector<int> exps) : e_(std::move(exps)) {
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    }

    static MultiIndex unit(std::size_t n, std::size_t j) {
        MultiIndex m(n);
        m.check_var(j);
        m.e_[j - 1] = 1;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t j) const { check_var(j); return e_[j - 1]; }

    int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_zero() const { return total() == 0; }

    /// alpha! = prod_j (a_j)!
    mpz_class factorial_product() const {
        mpz_class r = 1;
        for (int v : e_) r *= factorial(static_cast<unsigned long>(v));
        return r;
    }

    MultiIndex plus(const MultiIndex& o) const {
        check_dim(o);
        MultiIndex r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        return r;
    }
    MultiIndex plus_unit(std::size_t j) const {
        check_var(j);
        MultiIndex r = *this;
        ++r.e_[j - 1];
        return r;
    }
    /// Componentwise difference; requires *this >= o everywhere.
    MultiIndex minus(const MultiIndex& o) const {
        check_dim(o);
        MultiIndex r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) {
            r.e_[k] -= o.e_[k];
            if (r.e_[k] < 0) throw std::invalid_argument("MultiIndex: difference not defined");
        }
        return r;
    }
    bool dominates(const MultiIndex& o) const {
        check_dim(o);
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k] < o.e_[k]) return false;
        return true;
    }

    /// Re-embed into dimension new_n, shifting variable j to j + offset.
    MultiIndex embedded(std::size_t new_n, std::size_t offset) const {
        if (offset + e_.size() > new_n)
            throw std::invalid_argument("MultiIndex: embedding out of range");
        MultiIndex r(new_n);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[offset + k] = e_[k];
        return r;
    }

    const std::vector<int>& exponents() const { return e_; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(e_[k]);
        }
        return s + ")";
    }

private:
    void check_var(std::size_t j) const {
        if (j < 1 || j > e_.size()) throw std::invalid_argument("MultiIndex: variable index out of range");
    }
    void check_dim(const MultiIndex& o) const {
        if (o.e_.size() != e_.size()) throw std::invalid_argument("MultiIndex: dimension mismatch");
    }

    std::vector<int> e_;
};

/// Graded lexicographic order with X1 > X2 > ... : compare total degree first,
/// then lexicographically on the exponent vector.
inline bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t k = 0; k < ea.size(); ++k)
        if (ea[k] != eb[k]) return ea[k] < eb[k];
    return false;
}

struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(a, b); }
};

/// Visit every multi-index of dimension n with min_total <= |alpha| <= max_total,
/// in graded lexicographic order.
inline void for_each_multi_index(std::size_t n, int min_total, int max_total,
                                 const std::function<void(const MultiIndex&)>& fn) {
    std::vector<int> e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
        if (pos + 1 == n) {
            e[pos] = remaining;
            fn(MultiIndex(e));
            e[pos] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[pos] = v;
            rec(pos + 1, remaining - v);
        }
        e[pos] = 0;
    };
    for (int t = min_total; t <= max_total; ++t) {
        if (t < 0) continue;
        if (n == 0) { if (t == 0) fn(MultiIndex(std::size_t{0})); continue; }
        rec(0, t);
    }
}

}  // namespace polyinv
