#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials in q over an exact integer ring.
 *
 * Polynomial<Scalar> stores coeffs[d] = coefficient of q^d and is always
 * normalized: either empty (the zero polynomial) or with a nonzero last
 * coefficient. All arithmetic is exposed as free functions and operators
 * returning fresh values, so every instance is immutable in practice and
 * safe to share across threads.
 *
 * QPolynomial (Scalar = BigInteger = mpz_class) is the value type used by
 * the rest of the library.
 */

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qeuler {

using BigInteger = mpz_class;

template <typename T>
concept IntegralRing = requires(T a, T b) {
    { T(0) } -> std::convertible_to<T>;
    { T(1) } -> std::convertible_to<T>;
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
};

namespace scalar {

inline bool is_zero(const BigInteger& a) { return sgn(a) == 0; }
template <std::integral T>
bool is_zero(T a) { return a == 0; }

// Exact quotient a / b when b divides a.
inline std::optional<BigInteger> try_divexact(const BigInteger& a, const BigInteger& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    BigInteger out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}
template <std::integral T>
std::optional<T> try_divexact(T a, T b) {
    if (a % b != 0) return std::nullopt;
    return a / b;
}

inline std::string to_string(const BigInteger& a) { return a.get_str(); }
template <std::integral T>
std::string to_string(T a) { return std::to_string(a); }

inline int sign(const BigInteger& a) { return sgn(a); }
template <std::integral T>
int sign(T a) { return (a > 0) - (a < 0); }

}  // namespace scalar

template <IntegralRing Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() = default;

    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return monomial(Scalar(1), 0); }

    /// c * q^d; c == 0 gives the zero polynomial.
    static Polynomial monomial(const Scalar& c, std::size_t d) {
        if (scalar::is_zero(c)) return Polynomial();
        std::vector<Scalar> v(d + 1, Scalar(0));
        v[d] = c;
        Polynomial p;
        p.coeffs_ = std::move(v);
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial. The zero polynomial has none.
    std::size_t degree() const {
        if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
        return coeffs_.size() - 1;
    }

    /// Smallest d with a nonzero coefficient of q^d.
    std::size_t low_degree() const {
        if (is_zero()) throw std::domain_error("low degree of the zero polynomial is undefined");
        std::size_t d = 0;
        while (scalar::is_zero(coeffs_[d])) ++d;
        return d;
    }

    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^d, zero beyond the stored range.
    Scalar coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Scalar(0); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize() {
        while (!coeffs_.empty() && scalar::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using QPolynomial = Polynomial<BigInteger>;

template <IntegralRing S>
Polynomial<S> add(const Polynomial<S>& a, const Polynomial<S>& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<S> r(std::max(x.size(), y.size()), S(0));
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    return Polynomial<S>(std::move(r));
}

template <IntegralRing S>
Polynomial<S> sub(const Polynomial<S>& a, const Polynomial<S>& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<S> r(std::max(x.size(), y.size()), S(0));
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    return Polynomial<S>(std::move(r));
}

/// Schoolbook convolution.
template <IntegralRing S>
Polynomial<S> mul(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<S>();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<S> r(x.size() + y.size() - 1, S(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (scalar::is_zero(x[i])) continue;
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    }
    return Polynomial<S>(std::move(r));
}

/// a * q^shift.
template <IntegralRing S>
Polynomial<S> shift(const Polynomial<S>& a, std::size_t shift) {
    if (a.is_zero()) return a;
    std::vector<S> r(shift, S(0));
    r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
    return Polynomial<S>(std::move(r));
}

template <IntegralRing S>
Polynomial<S> scale(const Polynomial<S>& a, const S& c) {
    std::vector<S> r(a.coeffs());
    for (auto& v : r) v *= c;
    return Polynomial<S>(std::move(r));
}

template <IntegralRing S>
Polynomial<S> pow(const Polynomial<S>& a, unsigned e) {
    Polynomial<S> result = Polynomial<S>::one();
    Polynomial<S> base = a;
    while (e) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e) base = mul(base, base);
    }
    return result;
}

template <IntegralRing S>
struct DivisionResult {
    Polynomial<S> quotient;
    Polynomial<S> remainder;
};

/**
 * Long division a = b * quotient + remainder with deg(remainder) < deg(b),
 * carried out over the integers. Returns nullopt if some step needs a
 * non-integral quotient coefficient (never the case when the leading
 * coefficient of b is a unit).
 */
template <IntegralRing S>
std::optional<DivisionResult<S>> divmod(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.is_zero()) return DivisionResult<S>{};
    const std::size_t db = b.degree();
    if (a.degree() < db) return DivisionResult<S>{Polynomial<S>(), a};

    std::vector<S> rem(a.coeffs());
    const auto& y = b.coeffs();
    const S& lead = y.back();
    std::vector<S> quot(rem.size() - db, S(0));
    for (std::size_t top = rem.size(); top-- > db;) {
        if (scalar::is_zero(rem[top])) continue;
        auto c = scalar::try_divexact(rem[top], lead);
        if (!c) return std::nullopt;
        const std::size_t off = top - db;
        quot[off] = *c;
        for (std::size_t j = 0; j <= db; ++j) rem[off + j] -= *c * y[j];
    }
    rem.resize(db);
    return DivisionResult<S>{Polynomial<S>(std::move(quot)), Polynomial<S>(std::move(rem))};
}

/// Quotient c with a == b * c exactly, or nullopt when b does not divide a over the integers.
template <IntegralRing S>
std::optional<Polynomial<S>> div_exact(const Polynomial<S>& a, const Polynomial<S>& b) {
    auto r = divmod(a, b);
    if (!r || !r->remainder.is_zero()) return std::nullopt;
    return std::move(r->quotient);
}

/// Horner evaluation at an integer point.
template <IntegralRing S>
S eval(const Polynomial<S>& a, const S& x) {
    S acc(0);
    const auto& c = a.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline BigInteger eval_int(const QPolynomial& a, const BigInteger& x) { return eval(a, x); }

template <IntegralRing S>
Polynomial<S> operator+(const Polynomial<S>& a, const Polynomial<S>& b) { return add(a, b); }
template <IntegralRing S>
Polynomial<S> operator-(const Polynomial<S>& a, const Polynomial<S>& b) { return sub(a, b); }
template <IntegralRing S>
Polynomial<S> operator*(const Polynomial<S>& a, const Polynomial<S>& b) { return mul(a, b); }

/// 1 + q^i + q^{2i} + ... + q^{(k-1)i}
template <IntegralRing S = BigInteger>
Polynomial<S> q_bracket(unsigned k, unsigned i) {
    if (k == 0 || i == 0) throw std::invalid_argument("q_bracket requires k >= 1 and i >= 1");
    std::vector<S> c(static_cast<std::size_t>(k - 1) * i + 1, S(0));
    for (std::size_t t = 0; t < k; ++t) c[t * i] = S(1);
    return Polynomial<S>(std::move(c));
}

/// q_bracket(k, 1) * q_bracket(k, 2) * ... * q_bracket(k, n); 1 for n == 0.
template <IntegralRing S = BigInteger>
Polynomial<S> bracket_product(unsigned k, unsigned n) {
    Polynomial<S> p = Polynomial<S>::one();
    for (unsigned j = 1; j <= n; ++j) p = mul(p, q_bracket<S>(k, j));
    return p;
}

/**
 * Canonical text form: ascending degree, zero terms omitted, unit
 * coefficients omitted except on the constant term, e.g.
 * `1 + 2*q^2 + q^5`. The zero polynomial renders as `0`.
 */
template <IntegralRing S>
std::string to_string(const Polynomial<S>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t d = 0; d < c.size(); ++d) {
        if (scalar::is_zero(c[d])) continue;
        const bool negative = scalar::sign(c[d]) < 0;
        S mag = c[d];
        if (negative) mag = S(0) - mag;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == S(1);
        if (d == 0) {
            out += scalar::to_string(mag);
            continue;
        }
        if (!unit) out += scalar::to_string(mag) + "*";
        out += "q";
        if (d > 1) out += "^" + std::to_string(d);
    }
    return out;
}

/// Coefficients as decimal strings joined by `sep` (empty for the zero polynomial).
template <IntegralRing S>
std::string join_coeffs(const Polynomial<S>& p, char sep = ';') {
    std::string out;
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        if (d) out += sep;
        out += scalar::to_string(p.coeffs()[d]);
    }
    return out;
}

template <IntegralRing S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& p) {
    return os << to_string(p);
}

}  // namespace qeuler
