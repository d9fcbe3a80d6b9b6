#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyinv/poly_map.hpp"

namespace polyinv {

/// A nonzero entry exhibited as evidence that a Jacobian product does not
/// vanish: its position, and the graded-lex-first monomial with coefficient.
/// For products over L variable blocks the monomial lives in L*n variables,
/// variable (l-1)*n + k meaning X_k evaluated at the l-th block.
struct ProductWitness {
    int length = 0;  // number of Jacobian factors
    std::size_t row = 0, col = 0;
    MultiIndex monomial{std::size_t{0}};
    Rat coefficient;
};

/// Render a witness monomial with block-aware variable names X3(2) = third
/// variable of the second block. blocks == 1 falls back to plain X3.
inline std::string render_block_monomial(const Rat& c, const MultiIndex& mono,
                                         std::size_t base_n, std::size_t blocks) {
    std::ostringstream os;
    os << c.to_string();
    for (std::size_t v = 1; v <= mono.size(); ++v) {
        int e = mono[v];
        if (e == 0) continue;
        std::size_t block = (v - 1) / base_n + 1;
        std::size_t k = (v - 1) % base_n + 1;
        os << "*X" << k;
        if (blocks > 1) os << "(" << block << ")";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

namespace detail {

inline ProductWitness first_nonzero_entry(const PolyMatrix& m, int length) {
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j) {
            const Poly& p = m.entry(i, j);
            if (p.is_zero()) continue;
            const auto& [mono, c] = *p.terms().begin();
            return ProductWitness{length, i, j, mono, c};
        }
    throw std::logic_error("first_nonzero_entry: matrix is zero");
}

/// JH evaluated at block l of an L-block variable set.
inline PolyMatrix jacobian_at_block(const PolyMatrix& jh, std::size_t base_n,
                                    std::size_t block, std::size_t total_blocks) {
    return jh.embedded(base_n * total_blocks, (block - 1) * base_n);
}

}  // namespace detail

/// Does JH(X^{(1)}) JH(X^{(2)}) ... JH(X^{(L)}) vanish identically, the l-th
/// factor taking its own block of n fresh variables? Returns the first
/// nonzero entry as a witness when it does not.
struct ProductCheck {
    bool vanishes = false;
    std::optional<ProductWitness> witness;
};

inline ProductCheck check_product_vanishes(const HPart& h, int length) {
    if (length < 1) throw std::invalid_argument("check_product_vanishes: length must be >= 1");
    std::size_t n = h.n();
    PolyMatrix jh = jacobian(h);
    PolyMatrix prod = detail::jacobian_at_block(jh, n, 1, length);
    for (int l = 2; l <= length; ++l)
        prod = prod * detail::jacobian_at_block(jh, n, l, length);
    if (prod.is_zero()) return {true, std::nullopt};
    return {false, detail::first_nonzero_entry(prod, length)};
}

/// Weak nilpotency: least e with JH(X)^e == 0, all factors in the same
/// variables. Search capped at n; nullopt past the cap.
inline std::optional<int> weak_index(const HPart& h) {
    std::size_t n = h.n();
    PolyMatrix jh = jacobian(h);
    PolyMatrix power = jh;
    for (int e = 1; e <= static_cast<int>(n); ++e) {
        if (power.is_zero()) return e;
        if (e < static_cast<int>(n)) power = power * jh;
    }
    return std::nullopt;
}

/// Strong nilpotency: least p with the p-fold block product vanishing.
/// The product grows one block at a time, re-embedding the running prefix, so
/// each length reuses the previous one. Search capped at n.
inline std::optional<int> strong_index(const HPart& h) {
    std::size_t n = h.n();
    PolyMatrix jh = jacobian(h);
    PolyMatrix prod = jh;  // one block: plain JH
    for (int p = 1; p <= static_cast<int>(n); ++p) {
        if (prod.is_zero()) return p;
        if (p < static_cast<int>(n)) {
            std::size_t total = n * static_cast<std::size_t>(p + 1);
            prod = prod.embedded(total, 0) * detail::jacobian_at_block(jh, n, p + 1, p + 1);
        }
    }
    return std::nullopt;
}

/// Merge an L-block polynomial back onto one block: every X_k^{(l)} becomes
/// X_k. Specializing all blocks to the same point turns the strong product
/// into the plain Jacobian power.
inline Poly fold_blocks(const Poly& p, std::size_t base_n) {
    if (base_n == 0 || p.n() % base_n != 0)
        throw std::invalid_argument("fold_blocks: dimension is not a multiple of the block size");
    Poly r(base_n);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> folded(base_n, 0);
        for (std::size_t v = 1; v <= m.size(); ++v) folded[(v - 1) % base_n] += m[v];
        r.add_term(MultiIndex(folded), c);
    }
    return r;
}

/// Full classification of one map, with non-vanishing witnesses for every
/// length below the index (or up to the cap n when the index is absent).
struct NilpotencyReport {
    std::size_t n = 0;
    std::optional<int> weak, strong;
    std::vector<ProductWitness> weak_witnesses;    // JH^L != 0 for these L
    std::vector<ProductWitness> strong_witnesses;  // block products != 0
};

inline NilpotencyReport nilpotency_report(const HPart& h) {
    NilpotencyReport rep;
    rep.n = h.n();
    std::size_t n = h.n();
    PolyMatrix jh = jacobian(h);

    PolyMatrix power = jh;
    for (int e = 1; e <= static_cast<int>(n); ++e) {
        if (power.is_zero()) { rep.weak = e; break; }
        rep.weak_witnesses.push_back(detail::first_nonzero_entry(power, e));
        if (e < static_cast<int>(n)) power = power * jh;
    }

    PolyMatrix prod = jh;
    for (int p = 1; p <= static_cast<int>(n); ++p) {
        if (prod.is_zero()) { rep.strong = p; break; }
        rep.strong_witnesses.push_back(detail::first_nonzero_entry(prod, p));
        if (p < static_cast<int>(n)) {
            std::size_t total = n * static_cast<std::size_t>(p + 1);
            prod = prod.embedded(total, 0) * detail::jacobian_at_block(jh, n, p + 1, p + 1);
        }
    }
    return rep;
}

inline std::string render_report(const NilpotencyReport& rep) {
    std::ostringstream os;
    os << "nilpotency report\n";
    os << "dimension: " << rep.n << "\n";
    os << "weak index: " << (rep.weak ? std::to_string(*rep.weak) : "absent (no vanishing power up to n)") << "\n";
    os << "strong index: " << (rep.strong ? std::to_string(*rep.strong) : "absent (no vanishing product up to n)") << "\n";
    const char* cls = rep.strong ? "strongly nilpotent"
                    : rep.weak  ? "weakly nilpotent only"
                                : "not nilpotent within the search cap";
    os << "classification: " << cls << "\n";
    if (!rep.weak_witnesses.empty()) {
        os << "nonzero Jacobian powers:\n";
        for (const auto& w : rep.weak_witnesses)
            os << "  JH^" << w.length << " entry (" << w.row << "," << w.col << "): "
               << render_block_monomial(w.coefficient, w.monomial, rep.n, 1) << "\n";
    }
    if (!rep.strong_witnesses.empty()) {
        os << "nonzero block products:\n";
        for (const auto& w : rep.strong_witnesses)
            os << "  length " << w.length << " entry (" << w.row << "," << w.col << "): "
               << render_block_monomial(w.coefficient, w.monomial, rep.n,
                                        static_cast<std::size_t>(w.length)) << "\n";
    }
    return os.str();
}

}  // namespace polyinv
