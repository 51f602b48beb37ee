#include "qh/qpoly.hpp"

#include <cctype>
#include <set>

namespace qh {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(long long c) {
    if (c != 0) c_.push_back(Rational(c));
}

QPolynomial QPolynomial::q_power(int k) {
    if (k < 0) throw DomainError("negative power of q");
    std::vector<Rational> c(static_cast<size_t>(k) + 1, 0);
    c.back() = 1;
    return QPolynomial(c);
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

Rational QPolynomial::eval_at(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPolynomial(r);
}

QPolynomial QPolynomial::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x = -x;
    return QPolynomial(r);
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPolynomial(r);
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& d) const {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> rem = c_;
    const int dd = d.degree();
    std::vector<Rational> quot(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0, 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        Rational f = rem[static_cast<size_t>(k)] / d.c_.back();
        quot[static_cast<size_t>(k - dd)] = f;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
    }
    return {QPolynomial(quot), QPolynomial(rem)};
}

QPolynomial QPolynomial::exact_div(const QPolynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw InternalError("polynomial division is not exact");
    return q;
}

std::string QPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
        if (mono.empty()) s += qh::to_string(a);
        else if (a == 1) s += mono;
        else s += qh::to_string(a) + "*" + mono;
    }
    return s;
}

namespace {

Rational parse_rational(const std::string& t) {
    auto slash = t.find('/');
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits(t)) throw DomainError("bad coefficient '" + t + "'");
        return Rational(BigInt(t));
    }
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    if (!digits(a) || !digits(b) || BigInt(b) == 0) throw DomainError("bad coefficient '" + t + "'");
    return Rational(BigInt(a), BigInt(b));
}

}  // namespace

QPolynomial QPolynomial::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty polynomial");
    QPolynomial result;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw DomainError("expected '+' or '-' in polynomial");
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw DomainError("empty term in polynomial");
        i = j;
        auto qpos = term.find('q');
        Rational coef = 1;
        int power = 0;
        if (qpos == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string head = term.substr(0, qpos), tail = term.substr(qpos + 1);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) coef = parse_rational(head);
            if (tail.empty()) power = 1;
            else if (tail[0] == '^') power = static_cast<int>(parse_rational(tail.substr(1)).convert_to<long long>());
            else throw DomainError("bad exponent in term '" + term + "'");
        }
        std::vector<Rational> c(static_cast<size_t>(power) + 1, 0);
        c.back() = sign * coef;
        result = result + QPolynomial(c);
    }
    return result;
}

QPolynomial qint(int n) {
    if (n < 0) throw DomainError("quantum integer of a negative number");
    std::vector<Rational> c(static_cast<size_t>(n), 1);
    return QPolynomial(c);
}

QPolynomial qfact(int n) {
    if (n < 0) throw DomainError("quantum factorial of a negative number");
    QPolynomial r(1);
    for (int k = 2; k <= n; ++k) r = r * qint(k);
    return r;
}

QPolynomial qbinom(int n, int r) {
    if (r < 0 || n < 0 || r > n) throw DomainError("qbinom needs 0 <= r <= n");
    return qfact(n).exact_div(qfact(r) * qfact(n - r));
}

QPolynomial qbinom_or_zero(int n, int r) {
    if (r < 0 || n < 0 || r > n) return {};
    return qbinom(n, r);
}

QPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    std::set<Rational> xs;
    for (const auto& [x, y] : points)
        if (!xs.insert(x).second) throw DomainError("duplicate interpolation node " + to_string(x));
    // Newton divided differences.
    const size_t n = points.size();
    std::vector<Rational> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
    QPolynomial result;
    QPolynomial basis(1);
    for (size_t k = 0; k < n; ++k) {
        result = result + QPolynomial(std::vector<Rational>{dd[k]}) * basis;
        basis = basis * QPolynomial(std::vector<Rational>{-points[k].first, 1});
    }
    return result;
}

std::optional<Rational> mod_q_constant(const QPolynomial& p, const std::vector<long long>& samples) {
    Rational c = p.constant_term();
    bool c_integer = denominator(c) == 1;
    std::optional<Rational> out = c;
    for (long long s : samples) {
        Rational v = p.eval_at(Rational(s));
        if (denominator(v) != 1) throw DomainError("polynomial is not integer-valued at " + std::to_string(s));
        if (!c_integer) {
            out.reset();
            continue;
        }
        BigInt diff = numerator(v) - numerator(c);
        if (diff % s != 0) out.reset();
    }
    return out;
}

}  // namespace qh
