#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyinv/nilpotency.hpp"
#include "polyinv/trees.hpp"

namespace polyinv {

/// Raised when a computed inverse fails its exact composition check, or a
/// claimed certificate cannot be established.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline mpz_class int_pow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// Truncation of the formal inverse of F = X - H: components X_i + tail with
/// every tail term of total degree in [2, truncation_degree].
struct InverseSeries {
    std::size_t n = 0;
    int truncation_degree = 0;
    std::vector<Poly> components;
};

inline int series_degree(const InverseSeries& s) {
    int d = 0;
    for (const auto& p : s.components) d = std::max(d, p.degree());
    return d;
}

/// The order >= 2 part G with F^{-1} = X + G; throws when a component fails
/// the shape X_i + higher order.
inline HPart series_tail(const InverseSeries& s) {
    std::vector<Poly> g;
    g.reserve(s.n);
    for (std::size_t i = 1; i <= s.n; ++i)
        g.push_back(s.components[i - 1] - Poly::variable(s.n, i));
    return HPart(std::move(g));
}

/// Normalized inverse coefficient G_{i,alpha}: the sum of tree energies over
/// every tree with root type i and leaf multi-index alpha. |alpha| >= 2.
inline Rat g_coefficient_full(const HPart& h, std::size_t i, const MultiIndex& alpha) {
    return sum_tree_energies(h, static_cast<int>(i), alpha);
}

/// Same sum restricted to trees of height <= p-1. For strongly nilpotent maps
/// of index p this equals the full coefficient.
inline Rat g_coefficient_truncated(const HPart& h, int p, std::size_t i, const MultiIndex& alpha) {
    if (p < 1) throw std::invalid_argument("g_coefficient_truncated: p must be >= 1");
    return sum_tree_energies(h, static_cast<int>(i), alpha, p - 1);
}

/// Iterate G <- H(X + G) with all products truncated at degree_cap. The
/// degree-(k+1) part stabilizes after k rounds, so the loop is bounded.
inline InverseSeries invert_fixed_point(const HPart& h, int degree_cap) {
    if (degree_cap < 1) throw std::invalid_argument("invert_fixed_point: degree cap must be >= 1");
    std::size_t n = h.n();
    std::vector<Poly> g(n, Poly::zero(n));
    for (int iter = 0; iter <= degree_cap + 1; ++iter) {
        std::vector<Poly> x_plus_g;
        x_plus_g.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) x_plus_g.push_back(Poly::variable(n, i) + g[i - 1]);
        std::vector<Poly> next;
        next.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) next.push_back(h.component(i).compose(x_plus_g, degree_cap));
        if (next == g) {
            InverseSeries s;
            s.n = n;
            s.truncation_degree = degree_cap;
            s.components = std::move(x_plus_g);
            return s;
        }
        g = std::move(next);
    }
    throw std::logic_error("invert_fixed_point: iteration failed to stabilize");
}

/// Assemble the inverse series coefficientwise from tree sums:
/// X_i + sum over alpha of G_{i,alpha} / alpha! * X^alpha. Exponential in the
/// cap; meant for small instances and as an independent cross-check of the
/// fixed-point route.
inline InverseSeries invert_via_trees(const HPart& h, int degree_cap) {
    if (degree_cap < 1) throw std::invalid_argument("invert_via_trees: degree cap must be >= 1");
    std::size_t n = h.n();
    InverseSeries s;
    s.n = n;
    s.truncation_degree = degree_cap;
    for (std::size_t i = 1; i <= n; ++i) {
        Poly comp = Poly::variable(n, i);
        for_each_multi_index(n, 2, degree_cap, [&](const MultiIndex& alpha) {
            Rat c = g_coefficient_full(h, i, alpha);
            if (!c.is_zero()) comp.add_term(alpha, c / Rat(alpha.factorial_product()));
        });
        s.components.push_back(std::move(comp));
    }
    return s;
}

/// Degree bounds for F = X - H and the exact composition checks backing them.
/// degree_f is max(1, deg H), the degree of F itself.
struct BoundCertificate {
    std::size_t n = 0;
    int degree_f = 1;
    std::optional<int> weak, strong;
    bool inverse_found = false;
    std::optional<int> inverse_degree;
    mpz_class bound_general;                         // degree_f^(n-1), proven
    std::optional<mpz_class> bound_weak;             // degree_f^(e-1), conjectural
    std::optional<mpz_class> bound_strong;           // degree_f^(p-1), proven
    std::optional<bool> holds_general, holds_weak, holds_strong;
    bool composition_forward = false;                // F o Finv == X
    bool composition_backward = false;               // Finv o F == X
};

struct CertifiedInverse {
    PolyMap inverse;
    BoundCertificate certificate;
};

namespace detail {

inline void fill_bounds(BoundCertificate& cert) {
    unsigned long d = static_cast<unsigned long>(cert.degree_f);
    cert.bound_general = int_pow(d, cert.n >= 1 ? cert.n - 1 : 0);
    if (cert.weak) cert.bound_weak = int_pow(d, static_cast<unsigned long>(*cert.weak - 1));
    if (cert.strong) cert.bound_strong = int_pow(d, static_cast<unsigned long>(*cert.strong - 1));
    if (cert.inverse_found && cert.inverse_degree) {
        mpz_class deg(*cert.inverse_degree);
        cert.holds_general = deg <= cert.bound_general;
        if (cert.bound_weak) cert.holds_weak = deg <= *cert.bound_weak;
        if (cert.bound_strong) cert.holds_strong = deg <= *cert.bound_strong;
    }
}

inline int cap_to_int(const mpz_class& cap, long limit = 1000000) {
    if (cap > limit)
        throw std::runtime_error("inversion: search cap " + cap.get_str() + " exceeds the practical limit");
    long v = cap.get_si();
    return static_cast<int>(v < 1 ? 1 : v);
}

}  // namespace detail

/// Invert a strongly nilpotent map exactly. The series is computed up to
/// degree_f^(p-1), which the truncation theorem makes a complete inverse, and
/// both compositions are then verified exactly and untruncated. Throws
/// std::invalid_argument when no strong index exists within the cap and
/// VerificationError when a composition check fails.
inline CertifiedInverse invert_strongly_nilpotent(const HPart& h) {
    BoundCertificate cert;
    cert.n = h.n();
    cert.degree_f = std::max(1, h.degree());
    cert.weak = weak_index(h);
    cert.strong = strong_index(h);
    if (!cert.strong)
        throw std::invalid_argument("invert_strongly_nilpotent: no strong index within the search cap");
    int cap = detail::cap_to_int(int_pow(static_cast<unsigned long>(cert.degree_f),
                                         static_cast<unsigned long>(*cert.strong - 1)));
    InverseSeries series = invert_fixed_point(h, cap);
    PolyMap f = PolyMap::x_minus(h);
    PolyMap finv(series.components);
    PolyMap id = PolyMap::identity(h.n());
    cert.composition_forward = map_compose(f, finv) == id;
    cert.composition_backward = map_compose(finv, f) == id;
    if (!cert.composition_forward || !cert.composition_backward)
        throw VerificationError("invert_strongly_nilpotent: composition check failed");
    cert.inverse_found = true;
    cert.inverse_degree = series_degree(series);
    detail::fill_bounds(cert);
    return CertifiedInverse{std::move(finv), std::move(cert)};
}

/// Inversion attempt plus bound bookkeeping for an arbitrary map F = X - H.
/// Strongly nilpotent maps go through the certified route; otherwise the
/// series is searched up to degree_f^(n-1) and accepted only if the exact
/// composition checks pass.
inline BoundCertificate degree_bound_report(const HPart& h) {
    BoundCertificate cert;
    cert.n = h.n();
    cert.degree_f = std::max(1, h.degree());
    cert.weak = weak_index(h);
    cert.strong = strong_index(h);
    unsigned long d = static_cast<unsigned long>(cert.degree_f);
    mpz_class cap_z = cert.strong ? int_pow(d, static_cast<unsigned long>(*cert.strong - 1))
                                  : int_pow(d, cert.n >= 1 ? cert.n - 1 : 0);
    int cap = detail::cap_to_int(cap_z);
    InverseSeries series = invert_fixed_point(h, cap);
    PolyMap f = PolyMap::x_minus(h);
    PolyMap finv(series.components);
    PolyMap id = PolyMap::identity(h.n());
    cert.composition_forward = map_compose(f, finv) == id;
    cert.composition_backward = map_compose(finv, f) == id;
    if (cert.composition_forward && cert.composition_backward) {
        cert.inverse_found = true;
        cert.inverse_degree = series_degree(series);
    }
    detail::fill_bounds(cert);
    return cert;
}

inline std::string render_certificate(const BoundCertificate& cert) {
    std::ostringstream os;
    auto opt_int = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("absent");
    };
    auto verdict = [](const std::optional<bool>& v) {
        return !v ? std::string("not applicable") : (*v ? std::string("holds") : std::string("VIOLATED"));
    };
    os << "degree bound certificate\n";
    os << "dimension: " << cert.n << "\n";
    os << "degree of F: " << cert.degree_f << "\n";
    os << "weak index: " << opt_int(cert.weak) << "\n";
    os << "strong index: " << opt_int(cert.strong) << "\n";
    os << "inverse found: " << (cert.inverse_found ? "yes" : "no") << "\n";
    if (cert.inverse_degree) os << "inverse degree: " << *cert.inverse_degree << "\n";
    os << "general bound d^(n-1) = " << cert.bound_general.get_str() << ": "
       << verdict(cert.holds_general) << "\n";
    if (cert.bound_strong)
        os << "strong bound d^(p-1) = " << cert.bound_strong->get_str() << ": "
           << verdict(cert.holds_strong) << "\n";
    if (cert.bound_weak)
        os << "conjectured weak-index bound d^(e-1) = " << cert.bound_weak->get_str() << ": "
           << verdict(cert.holds_weak) << "\n";
    os << "composition F o Finv == X: " << (cert.composition_forward ? "verified" : "FAILED") << "\n";
    os << "composition Finv o F == X: " << (cert.composition_backward ? "verified" : "FAILED") << "\n";
    return os.str();
}

}  // namespace polyinv
