#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar backed by GMP.
 *
 * Every value is kept in canonical form: positive denominator and
 * gcd(|num|, den) = 1. Structural equality is therefore mathematical
 * equality, which the rest of the library relies on.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convpow {

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p/q", "p", with an optional leading sign on p.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    /// Checks the canonical-form invariant directly on the limbs.
    bool is_canonical() const {
        if (sgn(v_.get_den()) <= 0) return false;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return g == 1;
    }

    double to_double() const { return v_.get_d(); }

    /// "p/q", or "p" when q = 1; the sign is carried by the numerator.
    std::string to_string() const { return v_.get_str(); }

    /// Largest integer not exceeding the value.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return r;
    }

    Rational operator-() const { return Rational(mpq_class(-v_), Canonical{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct Canonical {};
    // gmpxx arithmetic already yields canonical results.
    Rational(mpq_class q, Canonical) : v_(std::move(q)) {}

    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer(text)) throw bad();
        return Rational(to_mpz(text), mpz_class(1));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') throw bad();
    mpz_class d = to_mpz(den);
    if (d == 0) throw bad();
    return Rational(to_mpz(num), d);
}

/// 1/k! exactly.
inline Rational inverse_factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(mpz_class(1), f);
}

inline mpz_class binomial(unsigned long m, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), m, k);
    return r;
}

}  // namespace convpow
