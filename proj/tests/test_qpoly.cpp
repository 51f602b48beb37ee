#include "doctest.h"
#include "qh/qpoly.hpp"

using namespace qh;

namespace {

// Oracle: number of r-subspaces of F_q^n via the orbit-stabiliser product formula over integers.
long long subspace_count(long long q, int n, int r) {
    long long num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        long long qn = 1, qr = 1;
        for (int k = 0; k < n - i; ++k) qn *= q;
        for (int k = 0; k < r - i; ++k) qr *= q;
        num *= qn - 1;
        den *= qr - 1;
    }
    return num / den;
}

}  // namespace

TEST_SUITE("qpolynomial") {

TEST_CASE("quantum numbers") {
    CHECK(qint(3).to_string() == "1 + q + q^2");
    CHECK(qint(0).is_zero());
    CHECK(qbinom(4, 2) == QPolynomial::parse("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(qfact(3) == qint(2) * qint(3));
    CHECK_THROWS_AS(qbinom(2, 3), DomainError);
    CHECK_THROWS_AS(qbinom(2, -1), DomainError);
    CHECK(qbinom_or_zero(2, 3).is_zero());
}

TEST_CASE("Pascal identity and specialisations") {
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= n; ++r) {
            QPolynomial rhs = qbinom(n - 1, r - 1) + QPolynomial::q_power(r) * qbinom_or_zero(n - 1, r);
            CHECK(qbinom(n, r) == rhs);
            CHECK(qbinom(n, r).constant_term() == 1);
            long long binom = 1;
            for (int k = 0; k < r; ++k) binom = binom * (n - k) / (k + 1);
            CHECK(qbinom(n, r).eval_at(1) == Rational(binom));
        }
    for (int q : {2, 3})
        for (int n = 0; n <= 5; ++n)
            for (int r = 0; r <= n; ++r) CHECK(qbinom(n, r).eval_at(q) == Rational(subspace_count(q, n, r)));
}

TEST_CASE("evaluation") {
    CHECK(qint(3).eval_at(2) == 7);
    CHECK(qbinom(5, 2).constant_term() == 1);
    CHECK(QPolynomial().eval_at(Rational(3, 7)) == 0);
}

TEST_CASE("arithmetic and division") {
    QPolynomial a = QPolynomial::parse("1 + q"), b = QPolynomial::parse("1 - q");
    CHECK((a * b).to_string() == "1 - q^2");
    CHECK((a * b).exact_div(a) == b);
    auto [quo, rem] = QPolynomial::parse("q^2 + 1").divmod(a);
    CHECK(quo == QPolynomial::parse("q - 1"));
    CHECK(rem == QPolynomial(2));
    CHECK_THROWS_AS(QPolynomial::parse("q^2 + 1").exact_div(a), InternalError);
}

TEST_CASE("rendering round trip") {
    for (const char* s : {"0", "1 + q + 2*q^2", "-3/4 + q^3", "-q - 5/2*q^2", "7"}) {
        QPolynomial p = QPolynomial::parse(s);
        CHECK(p.to_string() == s);
        CHECK(QPolynomial::parse(p.to_string()) == p);
    }
    CHECK(QPolynomial::parse("2q") == QPolynomial::parse("2*q"));
    CHECK_THROWS_AS(QPolynomial::parse("1 + x"), DomainError);
}

TEST_CASE("interpolation") {
    CHECK(interpolate({{2, 5}, {3, 7}, {5, 11}}).to_string() == "1 + 2*q");
    CHECK(interpolate({{2, 1}, {3, 1}, {5, 1}}) == QPolynomial(1));
    CHECK_THROWS_AS(interpolate({{2, 1}, {2, 3}}), DomainError);
    QPolynomial p = QPolynomial::parse("3 - 1/2*q + q^3");
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x : {2, 3, 5, 7, 11}) pts.emplace_back(x, p.eval_at(x));
    CHECK(interpolate(pts) == p);
}

TEST_CASE("mod-q constant") {
    CHECK(*mod_q_constant(QPolynomial::parse("1 + q"), {2, 3, 5}) == 1);
    CHECK(*mod_q_constant(qbinom(4, 2), {2, 3}) == 1);
    CHECK(*mod_q_constant(QPolynomial::parse("2*q"), {2, 3}) == 0);
    CHECK_FALSE(mod_q_constant(QPolynomial::parse("1/2*q + 1/2*q^2"), {2, 3}).has_value());
    CHECK_THROWS_AS(mod_q_constant(QPolynomial::parse("1/2*q"), {3}), DomainError);
}

}
