#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored low-to-high. The zero polynomial is the empty
 * coefficient vector; any other polynomial has a nonzero leading
 * coefficient. With a canonical scalar type this makes operator== a
 * mathematical equality test.
 */

#include "convpow/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace convpow {

template <class Field>
class Polynomial {
public:
    using value_type = Field;

    Polynomial() = default;
    Polynomial(std::initializer_list<Field> cs) : c_(cs) { trim(); }
    explicit Polynomial(std::vector<Field> cs) : c_(std::move(cs)) { trim(); }

    static Polynomial constant(const Field& v) { return Polynomial(std::vector<Field>{v}); }

    /// c * x^k
    static Polynomial monomial(const Field& c, std::size_t k) {
        std::vector<Field> cs(k + 1, Field{0});
        cs[k] = c;
        return Polynomial(std::move(cs));
    }

    bool is_zero() const { return c_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    std::size_t size() const { return c_.size(); }

    /// Coefficient of x^k, zero past the degree.
    Field operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Field{0}; }

    const std::vector<Field>& coefficients() const { return c_; }

    /// Horner evaluation.
    Field operator()(const Field& x) const {
        Field acc{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial operator-() const {
        std::vector<Field> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(-c);
        return Polynomial(std::move(r), Trimmed{});
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field{0});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field{0});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Field& s) {
        if (s == Field{0}) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Field& s, Polynomial p) { return p *= s; }
    friend Polynomial operator*(Polynomial p, const Field& s) { return p *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Field> r(a.c_.size() + b.c_.size() - 1, Field{0});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

private:
    struct Trimmed {};
    Polynomial(std::vector<Field> cs, Trimmed) : c_(std::move(cs)) {}

    void trim() {
        while (!c_.empty() && c_.back() == Field{0}) c_.pop_back();
    }

    std::vector<Field> c_;
};

using Poly = Polynomial<Rational>;

/// The normalized monomial x^k / k!.
inline Poly p_basis(unsigned long k) { return Poly::monomial(inverse_factorial(k), k); }

/// q(x) = p(x - a), by binomial expansion.
template <class Field>
Polynomial<Field> translate(const Polynomial<Field>& p, const Field& a) {
    if (p.is_zero() || a == Field{0}) return p;
    // Horner in the shifted variable: q = (...(c_d (x - a) + c_{d-1})(x - a) + ...).
    const auto& c = p.coefficients();
    std::vector<Field> acc(c.size(), Field{0});
    const Field neg_a = -a;
    std::size_t len = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        // acc <- acc * (x - a) + c_i
        for (std::size_t j = len; j > 0; --j) acc[j] = acc[j - 1] + acc[j] * neg_a;
        acc[0] = acc[0] * neg_a + *it;
        ++len;
    }
    return Polynomial<Field>(std::move(acc));
}

/// q(x) = p(-x)
template <class Field>
Polynomial<Field> reflect(const Polynomial<Field>& p) {
    std::vector<Field> cs = p.coefficients();
    for (std::size_t k = 1; k < cs.size(); k += 2) cs[k] = -cs[k];
    return Polynomial<Field>(std::move(cs));
}

/// q(x) = p(s x)
template <class Field>
Polynomial<Field> scale_variable(const Polynomial<Field>& p, const Field& s) {
    std::vector<Field> cs = p.coefficients();
    Field pw{1};
    for (auto& c : cs) {
        c *= pw;
        pw *= s;
    }
    return Polynomial<Field>(std::move(cs));
}

template <class Field>
Polynomial<Field> derivative(const Polynomial<Field>& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Field> r(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) r[k - 1] = c[k] * Field(static_cast<long>(k));
    return Polynomial<Field>(std::move(r));
}

/// Antiderivative with zero constant term.
template <class Field>
Polynomial<Field> antiderivative(const Polynomial<Field>& p) {
    const auto& c = p.coefficients();
    if (c.empty()) return {};
    std::vector<Field> r(c.size() + 1, Field{0});
    for (std::size_t k = 0; k < c.size(); ++k) r[k + 1] = c[k] / Field(static_cast<long>(k + 1));
    return Polynomial<Field>(std::move(r));
}

/// Monomial sum, lowest degree first: "1/2 - t + 1/2*t^2". Unit
/// coefficients on non-constant terms are omitted.
inline std::string to_string(const Poly& p, std::string_view var = "t") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational& c = p.coefficients()[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace convpow
