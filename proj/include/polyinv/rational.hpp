#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace polyinv {

/// Exact rational number. Always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long value) : v_(value) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(mpz_class num, mpz_class den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }
    explicit Rat(mpz_class value) : v_(std::move(value)) {}

    static Rat from_strings(const std::string& num, const std::string& den) {
        mpz_class nz, dz;
        if (nz.set_str(num, 10) != 0) throw std::invalid_argument("Rat: bad integer string '" + num + "'");
        if (dz.set_str(den, 10) != 0) throw std::invalid_argument("Rat: bad integer string '" + den + "'");
        return Rat(nz, dz);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    /// "num/den", denominator always spelled out ("3/1", "-2/3").
    std::string to_fraction_string() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Human form: integers without the "/1".
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return to_fraction_string();
    }

private:
    mpq_class v_;
};

inline mpz_class factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

}  // namespace polyinv
