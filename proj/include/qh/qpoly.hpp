#pragma once

#include "qh/common.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qh {

// Univariate polynomial in q with exact rational coefficients; index = degree, no trailing zeros.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);
    QPolynomial(long long c);  // NOLINT: constants convert implicitly
    static QPolynomial q_power(int k);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;

    Rational eval_at(const Rational& x) const;
    Rational constant_term() const { return coeff(0); }

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    QPolynomial operator-() const;
    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

    // Long division over Q; divisor must be nonzero.
    std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const;
    // Division that must be exact; throws InternalError otherwise.
    QPolynomial exact_div(const QPolynomial& d) const;

    std::string to_string() const;
    static QPolynomial parse(const std::string& text);

private:
    void trim();
    std::vector<Rational> c_;
};

QPolynomial qint(int n);
QPolynomial qfact(int n);
QPolynomial qbinom(int n, int r);
// Gaussian binomial that is zero outside 0 <= r <= n; used by counting formulas where an
// impossible choice contributes nothing.
QPolynomial qbinom_or_zero(int n, int r);

QPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// c when p(s) = c (mod s) for every sample s and c is the (integer) constant term.
std::optional<Rational> mod_q_constant(const QPolynomial& p, const std::vector<long long>& samples);

}  // namespace qh
