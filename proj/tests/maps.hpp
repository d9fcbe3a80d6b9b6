#pragma once

// Hand-built maps shared across the test suite.

#include "polyinv/poly_map.hpp"

namespace testmaps {

using polyinv::HPart;
using polyinv::Poly;
using polyinv::Rat;

inline Poly v(std::size_t n, std::size_t j) { return Poly::variable(n, j); }

/// H = (X2^2, 0) in dimension 2: the smallest nontrivial strongly nilpotent map.
inline HPart quad2() {
    std::size_t n = 2;
    return HPart({v(n, 2) * v(n, 2), Poly::zero(n)});
}

/// quad2 padded into dimension 3.
inline HPart quad3() {
    std::size_t n = 3;
    return HPart({v(n, 2) * v(n, 2), Poly::zero(n), Poly::zero(n)});
}

/// H = (X2^2 + X3^2, X3^2, 0): strong index 3, inverse degree 4 = 2^(3-1),
/// so the strong-index bound is sharp here.
inline HPart tri3() {
    std::size_t n = 3;
    return HPart({v(n, 2) * v(n, 2) + v(n, 3) * v(n, 3), v(n, 3) * v(n, 3), Poly::zero(n)});
}

/// H = (X2 X3 + X3^2, X3^2, 0): strong index 3 with inverse degree 3 < 4.
inline HPart mix3() {
    std::size_t n = 3;
    return HPart({v(n, 2) * v(n, 3) + v(n, 3) * v(n, 3), v(n, 3) * v(n, 3), Poly::zero(n)});
}

/// The degree-13 counterexample to the weak-index degree bound, components as
/// classically written for the orientation X + H:
/// (3 X2 X4^2 - 2 X3 X4 X5, X4^2 X5, X4^3, X5^3, 0).
inline std::vector<Poly> vde_components() {
    std::size_t n = 5;
    std::vector<Poly> c;
    c.push_back(Rat(3) * (v(n, 2) * v(n, 4) * v(n, 4)) -
                Rat(2) * (v(n, 3) * v(n, 4) * v(n, 5)));
    c.push_back(v(n, 4) * v(n, 4) * v(n, 5));
    c.push_back(v(n, 4) * v(n, 4) * v(n, 4));
    c.push_back(v(n, 5) * v(n, 5) * v(n, 5));
    c.push_back(Poly::zero(n));
    return c;
}

/// The same map under this library's convention F = X - H: H = -(components).
inline HPart vde() {
    auto c = vde_components();
    for (auto& p : c) p = -p;
    return HPart(std::move(c));
}

/// H part with a nonzero Jacobian diagonal: F = X - H is not a Keller map and
/// has no polynomial inverse.
inline HPart nonkeller2() {
    std::size_t n = 2;
    return HPart({v(n, 1) * v(n, 1), Poly::zero(n)});
}

}  // namespace testmaps
