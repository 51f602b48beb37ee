#include "qh/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace qh {

Quiver::Quiver(int vertex_count, std::vector<std::pair<int, int>> arrow_list)
    : n(vertex_count), arrows(std::move(arrow_list)) {
    if (n <= 0) throw DomainError("quiver needs at least one vertex");
    for (auto [s, t] : arrows)
        if (s < 0 || s >= n || t < 0 || t >= n) throw DomainError("arrow endpoint out of range");
}

bool Quiver::is_sink(int a) const {
    return std::none_of(arrows.begin(), arrows.end(), [a](auto st) { return st.first == a; });
}

bool Quiver::is_source(int a) const {
    return std::none_of(arrows.begin(), arrows.end(), [a](auto st) { return st.second == a; });
}

bool Quiver::has_loop(int a) const {
    return std::any_of(arrows.begin(), arrows.end(),
                       [a](auto st) { return st.first == a && st.second == a; });
}

bool Quiver::is_connected() const {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [s, t] : arrows) {
            int w = s == v ? t : (t == v ? s : -1);
            if (w >= 0 && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool Quiver::is_acyclic() const { return admissible_ordering(*this).has_value(); }

Quiver quiver_A(int n) {
    std::vector<std::pair<int, int>> arr;
    for (int i = 0; i + 1 < n; ++i) arr.emplace_back(i, i + 1);
    return Quiver(n, arr);
}

Quiver quiver_kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }
Quiver quiver_jordan() { return Quiver(1, {{0, 0}}); }

Quiver quiver_cyclic(int n) {
    std::vector<std::pair<int, int>> arr;
    for (int i = 0; i <= n; ++i) arr.emplace_back(i, (i + 1) % (n + 1));
    return Quiver(n + 1, arr);
}

Quiver quiver_A2_tilde() { return Quiver(3, {{0, 1}, {2, 1}, {0, 2}}); }
Quiver quiver_D4_tilde() { return Quiver(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}); }

Quiver opposite(const Quiver& q) {
    Quiver r = q;
    for (auto& [s, t] : r.arrows) std::swap(s, t);
    return r;
}

Quiver reflect_quiver(const Quiver& q, int a) {
    if (a < 0 || a >= q.n) throw DomainError("vertex out of range");
    Quiver r = q;
    for (auto& [s, t] : r.arrows)
        if (s == a || t == a) std::swap(s, t);
    return r;
}

static void check_size(const Quiver& q, const DimVector& d) {
    if (static_cast<int>(d.size()) != q.n)
        throw DimensionError("dimension vector has length " + std::to_string(d.size()) +
                             ", quiver has " + std::to_string(q.n) + " vertices");
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    check_size(q, d);
    check_size(q, e);
    int r = 0;
    for (int i = 0; i < q.n; ++i) r += d[static_cast<size_t>(i)] * e[static_cast<size_t>(i)];
    for (auto [s, t] : q.arrows) r -= d[static_cast<size_t>(s)] * e[static_cast<size_t>(t)];
    return r;
}

int sym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return euler_form(q, d, e) + euler_form(q, e, d);
}

DimVector reflect_dimvec(const Quiver& q, int a, const DimVector& d) {
    check_size(q, d);
    if (a < 0 || a >= q.n) throw DomainError("vertex out of range");
    if (q.has_loop(a)) throw UnsupportedError("reflection at a vertex with a loop");
    DimVector r = d;
    r[static_cast<size_t>(a)] -= sym_form(q, d, unit_vec(q.n, a));
    return r;
}

int rep_space_dim(const Quiver& q, const DimVector& d) {
    check_size(q, d);
    int r = 0;
    for (auto [s, t] : q.arrows) r += d[static_cast<size_t>(s)] * d[static_cast<size_t>(t)];
    return r;
}

std::optional<std::vector<int>> admissible_ordering(const Quiver& q) {
    Quiver cur = q;
    std::vector<bool> used(static_cast<size_t>(q.n), false);
    std::vector<int> order;
    for (int step = 0; step < q.n; ++step) {
        int pick = -1;
        for (int a = 0; a < q.n && pick < 0; ++a)
            if (!used[static_cast<size_t>(a)] && cur.is_sink(a)) pick = a;
        if (pick < 0) return std::nullopt;
        used[static_cast<size_t>(pick)] = true;
        order.push_back(pick);
        cur = reflect_quiver(cur, pick);
    }
    return order;
}

std::string to_string(QuiverKind k) {
    switch (k) {
        case QuiverKind::Dynkin: return "Dynkin";
        case QuiverKind::ExtendedDynkin: return "ExtendedDynkin";
        default: return "Other";
    }
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix gram(const Quiver& q) {
    RMatrix g(static_cast<size_t>(q.n), std::vector<Rational>(static_cast<size_t>(q.n)));
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                sym_form(q, unit_vec(q.n, i), unit_vec(q.n, j));
    return g;
}

// Positive definite iff every pivot of symmetric elimination without swaps is positive,
// which is the leading-principal-minor test.
bool positive_definite(RMatrix a) {
    const size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

std::vector<std::vector<Rational>> rational_kernel(RMatrix a) {
    const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<Rational> v(cols, 0);
        v[f] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

QuiverClass classify(const Quiver& q) {
    if (!q.is_connected()) throw PreconditionError("classify requires a connected quiver");
    RMatrix g = gram(q);
    if (positive_definite(g)) return {QuiverKind::Dynkin, std::nullopt};
    auto ker = rational_kernel(g);
    if (ker.size() != 1) return {QuiverKind::Other, std::nullopt};
    // Scale to a primitive integer vector.
    BigInt lcm_den = 1;
    for (const auto& x : ker[0]) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    std::vector<BigInt> iv;
    BigInt g_all = 0;
    for (const auto& x : ker[0]) {
        BigInt v = numerator(x) * (lcm_den / denominator(x));
        iv.push_back(v);
        g_all = boost::multiprecision::gcd(g_all, v);
    }
    bool all_pos = true, all_neg = true;
    for (auto& v : iv) {
        v /= g_all;
        all_pos = all_pos && v > 0;
        all_neg = all_neg && v < 0;
    }
    // A sincere one-signed radical vector on a connected graph forces semi-definiteness.
    if (!all_pos && !all_neg) return {QuiverKind::Other, std::nullopt};
    DimVector delta;
    for (const auto& v : iv) delta.push_back(static_cast<int>(abs(v)));
    return {QuiverKind::ExtendedDynkin, delta};
}

int defect(const Quiver& q, const DimVector& d) {
    auto cls = classify(q);
    if (cls.kind != QuiverKind::ExtendedDynkin) throw PreconditionError("defect needs an extended Dynkin quiver");
    if (!q.is_acyclic()) throw PreconditionError("defect needs an acyclic quiver");
    return euler_form(q, *cls.delta, d);
}

namespace {

bool support_connected(const Quiver& q, const DimVector& d) {
    std::vector<int> supp;
    for (int i = 0; i < q.n; ++i)
        if (d[static_cast<size_t>(i)] != 0) supp.push_back(i);
    if (supp.empty()) return false;
    std::set<int> seen{supp[0]};
    std::vector<int> stack{supp[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [s, t] : q.arrows) {
            int w = s == v ? t : (t == v ? s : -1);
            if (w >= 0 && d[static_cast<size_t>(w)] != 0 && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen.size() == supp.size();
}

// Closure under reflections that increase the vector, staying inside the box.
void increasing_closure(const Quiver& q, const DimVector& bound, std::set<DimVector>& out,
                        std::deque<DimVector> queue) {
    while (!queue.empty()) {
        DimVector b = queue.front();
        queue.pop_front();
        for (int j = 0; j < q.n; ++j) {
            if (q.has_loop(j)) continue;
            int c = sym_form(q, b, unit_vec(q.n, j));
            if (c >= 0) continue;
            DimVector g = b;
            g[static_cast<size_t>(j)] -= c;
            if (leq(g, bound) && out.insert(g).second) queue.push_back(g);
        }
    }
}

bool root_less(const Root& a, const Root& b) {
    int ta = total(a.d), tb = total(b.d);
    if (ta != tb) return ta < tb;
    return a.d < b.d;
}

}  // namespace

std::vector<Root> positive_roots(const Quiver& q, const DimVector& bound) {
    check_size(q, bound);
    if (!is_nonneg(bound)) throw DomainError("root bound must be nonnegative");
    std::set<DimVector> real, imag;
    std::deque<DimVector> queue;
    for (int i = 0; i < q.n; ++i) {
        if (q.has_loop(i) || bound[static_cast<size_t>(i)] < 1) continue;
        real.insert(unit_vec(q.n, i));
        queue.push_back(unit_vec(q.n, i));
    }
    increasing_closure(q, bound, real, queue);

    // Fundamental set: connected support and (d, eps_i) <= 0 everywhere.
    queue.clear();
    DimVector d = zero_vec(q.n);
    std::function<void(int)> box = [&](int i) {
        if (i == q.n) {
            if (!support_connected(q, d)) return;
            for (int j = 0; j < q.n; ++j)
                if (sym_form(q, d, unit_vec(q.n, j)) > 0) return;
            if (imag.insert(d).second) queue.push_back(d);
            return;
        }
        for (int v = 0; v <= bound[static_cast<size_t>(i)]; ++v) {
            d[static_cast<size_t>(i)] = v;
            box(i + 1);
        }
        d[static_cast<size_t>(i)] = 0;
    };
    box(0);
    increasing_closure(q, bound, imag, queue);

    std::vector<Root> out;
    for (const auto& r : real) out.push_back({r, RootKind::Real});
    for (const auto& r : imag) out.push_back({r, RootKind::Imaginary});
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

bool is_real_root(const Quiver& q, const DimVector& d) {
    if (!is_nonneg(d) || is_zero(d)) return false;
    for (const auto& r : positive_roots(q, d))
        if (r.d == d) return r.kind == RootKind::Real;
    return false;
}

RootClass root_class(const Quiver& q, const DimVector& d) {
    auto cls = classify(q);
    if (cls.kind == QuiverKind::Dynkin) return RootClass::Preprojective;
    if (cls.kind != QuiverKind::ExtendedDynkin) throw UnsupportedError("root classes need a Dynkin or extended Dynkin quiver");
    int df = euler_form(q, *cls.delta, d);
    if (df < 0) return RootClass::Preprojective;
    if (df > 0) return RootClass::Preinjective;
    return RootClass::Regular;
}

DimVector coxeter_dimvec(const Quiver& q, const DimVector& d) {
    auto ord = admissible_ordering(q);
    if (!ord) throw PreconditionError("Coxeter transformation needs an acyclic quiver");
    DimVector v = d;
    for (int a : *ord) v = reflect_dimvec(q, a, v);
    return v;
}

std::vector<std::vector<DimVector>> regular_simple_dims(const Quiver& q) {
    auto cls = classify(q);
    if (cls.kind != QuiverKind::ExtendedDynkin) throw PreconditionError("regular simples need an extended Dynkin quiver");
    if (!q.is_acyclic()) throw PreconditionError("regular simples need an acyclic quiver");
    const DimVector& delta = *cls.delta;
    std::set<std::vector<DimVector>> orbits;
    for (const auto& r : positive_roots(q, delta)) {
        if (r.kind != RootKind::Real || r.d == delta || euler_form(q, delta, r.d) != 0) continue;
        std::vector<DimVector> orb{r.d};
        bool ok = true;
        for (int step = 0; step <= q.n + 1; ++step) {
            DimVector nxt = coxeter_dimvec(q, orb.back());
            if (nxt == orb.front()) break;
            if (!is_nonneg(nxt) || step == q.n + 1) {
                ok = false;
                break;
            }
            orb.push_back(nxt);
        }
        if (!ok || orb.size() < 2) continue;
        DimVector sum = zero_vec(q.n);
        for (const auto& v : orb) sum = add(sum, v);
        if (sum != delta) continue;
        auto start = std::min_element(orb.begin(), orb.end());
        std::rotate(orb.begin(), start, orb.end());
        orbits.insert(orb);
    }
    return {orbits.begin(), orbits.end()};
}

std::vector<int> preprojective_path(const Quiver& q, const DimVector& d) {
    check_size(q, d);
    if (!is_nonneg(d) || is_zero(d)) throw DomainError("preprojective path needs a nonzero nonnegative vector");
    auto ord = admissible_ordering(q);
    if (!ord) throw PreconditionError("reflection path needs an acyclic quiver");
    const int rounds = total(d) + q.n + 2;
    std::vector<int> path;
    DimVector v = d;
    for (int r = 0; r < rounds; ++r) {
        for (int a : *ord) {
            path.push_back(a);
            if (v == unit_vec(q.n, a)) return path;
            v = reflect_dimvec(q, a, v);
            if (!is_nonneg(v)) throw DomainError(to_string(d) + " is not a preprojective root");
        }
    }
    throw DomainError(to_string(d) + " is not a preprojective root");
}

int sigma_counter(const Quiver& q, const DimVector& d) {
    return static_cast<int>(preprojective_path(q, d).size());
}

namespace {

struct OrderKey {
    int cls;   // 0 preprojective, 1 preinjective
    int sigma; // ascending for preprojectives, negated counter for preinjectives
    DimVector d;
    auto operator<=>(const OrderKey&) const = default;
};

OrderKey order_key(const Quiver& q, const DimVector& d) {
    RootClass c = root_class(q, d);
    if (c == RootClass::Regular) throw DomainError("regular root " + to_string(d) + " has no position in the total order");
    if (c == RootClass::Preprojective) return {0, sigma_counter(q, d), d};
    return {1, -sigma_counter(opposite(q), d), d};
}

}  // namespace

std::vector<DimVector> schur_total_order(const Quiver& q, std::vector<DimVector> roots) {
    std::vector<std::pair<OrderKey, DimVector>> keyed;
    for (auto& r : roots) keyed.emplace_back(order_key(q, r), r);
    std::sort(keyed.begin(), keyed.end());
    std::vector<DimVector> out;
    for (auto& [k, r] : keyed) out.push_back(r);
    return out;
}

bool schur_precedes(const Quiver& q, const DimVector& a, const DimVector& b) {
    return order_key(q, a) < order_key(q, b);
}

}  // namespace qh
