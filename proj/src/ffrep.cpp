#include "qh/ffrep.hpp"

#include <algorithm>
#include <numeric>

namespace qh {

FpMatrix FpMatrix::identity(int n) {
    FpMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

namespace fp {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int inv(int x, int p) {
    x %= p;
    if (x < 0) x += p;
    if (x == 0) throw DomainError("inverse of zero in F_p");
    int r = 1, b = x, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<int>(static_cast<long long>(r) * b % p);
        b = static_cast<int>(static_cast<long long>(b) * b % p);
        e >>= 1;
    }
    return r;
}

FpMatrix mul(const FpMatrix& a, const FpMatrix& b, int p) {
    if (a.cols != b.rows) throw DimensionError("matrix product shape mismatch");
    FpMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int x = a(i, k);
            if (!x) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) = (c(i, j) + x * b(k, j)) % p;
        }
    return c;
}

FpMatrix transpose(const FpMatrix& a) {
    FpMatrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

std::vector<int> rref(FpMatrix& a, int p) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int piv = r;
        while (piv < a.rows && a(piv, c) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(r, j));
        int iv = inv(a(r, c), p);
        for (int j = 0; j < a.cols; ++j) a(r, j) = a(r, j) * iv % p;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            int f = a(i, c);
            for (int j = 0; j < a.cols; ++j) a(i, j) = ((a(i, j) - f * a(r, j)) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(FpMatrix a, int p) { return static_cast<int>(rref(a, p).size()); }

FpMatrix nullspace(const FpMatrix& a, int p) {
    FpMatrix r = a;
    auto piv = rref(r, p);
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cols.push_back(c);
    FpMatrix k(a.cols, static_cast<int>(free_cols.size()));
    for (size_t t = 0; t < free_cols.size(); ++t) {
        int f = free_cols[t];
        k(f, static_cast<int>(t)) = 1;
        for (size_t row = 0; row < piv.size(); ++row)
            k(piv[row], static_cast<int>(t)) = (p - r(static_cast<int>(row), f)) % p;
    }
    return k;
}

FpMatrix from_rows(const std::vector<std::vector<int>>& rows, int cols, int p) {
    FpMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw DimensionError("ragged matrix rows");
        for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = ((rows[i][static_cast<size_t>(j)] % p) + p) % p;
    }
    return m;
}

}  // namespace fp

// ---------------------------------------------------------------- subspaces

Subspace Subspace::whole(int n) { return {n, FpMatrix::identity(n), [n] {
                                              std::vector<int> v(static_cast<size_t>(n));
                                              std::iota(v.begin(), v.end(), 0);
                                              return v;
                                          }()}; }

Subspace Subspace::zero(int n) { return {n, FpMatrix(0, n), {}}; }

Subspace Subspace::span(FpMatrix rows, int p) {
    auto piv = fp::rref(rows, p);
    FpMatrix b(static_cast<int>(piv.size()), rows.cols);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) b(i, j) = rows(i, j);
    return {rows.cols, b, piv};
}

std::vector<int> Subspace::coords(const std::vector<int>& v) const {
    std::vector<int> c(static_cast<size_t>(dim()));
    for (int r = 0; r < dim(); ++r) c[static_cast<size_t>(r)] = v[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
    return c;
}

bool Subspace::contains(const std::vector<int>& v, int p) const {
    std::vector<int> w = v;
    for (int r = 0; r < dim(); ++r) {
        int f = w[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
        if (!f) continue;
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = ((w[static_cast<size_t>(j)] - f * basis(r, j)) % p + p) % p;
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& o, int p) const {
    for (int r = 0; r < o.dim(); ++r) {
        std::vector<int> v(o.basis.a.begin() + static_cast<long>(r) * o.n, o.basis.a.begin() + static_cast<long>(r + 1) * o.n);
        if (!contains(v, p)) return false;
    }
    return true;
}

namespace {

std::vector<int> row_of(const FpMatrix& m, int r) {
    return {m.a.begin() + static_cast<long>(r) * m.cols, m.a.begin() + static_cast<long>(r + 1) * m.cols};
}

std::vector<int> apply(const FpMatrix& m, const std::vector<int>& v, int p) {
    std::vector<int> out(static_cast<size_t>(m.rows), 0);
    for (int i = 0; i < m.rows; ++i) {
        long long s = 0;
        for (int j = 0; j < m.cols; ++j) s += static_cast<long long>(m(i, j)) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = static_cast<int>(s % p);
    }
    return out;
}

// Rows spanning the annihilator: c with c.u = 0 for all u in U.
FpMatrix annihilator_rows(const Subspace& u, int p) { return fp::transpose(fp::nullspace(u.basis, p)); }

Subspace image(const FpMatrix& m, const Subspace& u, int p) {
    // rows of U * M^T are the images of the basis vectors
    return Subspace::span(fp::mul(u.basis, fp::transpose(m), p), p);
}

// Visits all RREF matrices of shape t x m over F_p.
void for_each_rref(int t, int m, int p, const std::function<bool(const FpMatrix&)>& visit) {
    if (t > m || t < 0) return;
    std::vector<int> piv(static_cast<size_t>(t));
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
        std::vector<std::pair<int, int>> free_pos;
        for (int s = 0; s < t; ++s)
            for (int j = piv[static_cast<size_t>(s)] + 1; j < m; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_pos.emplace_back(s, j);
        FpMatrix w(t, m);
        for (int s = 0; s < t; ++s) w(s, piv[static_cast<size_t>(s)]) = 1;
        std::vector<int> digits(free_pos.size(), 0);
        while (true) {
            for (size_t k = 0; k < free_pos.size(); ++k) w(free_pos[k].first, free_pos[k].second) = digits[k];
            if (!visit(w)) return;
            size_t k = 0;
            while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
            if (k == digits.size()) break;
        }
        // next pivot combination
        int s = t - 1;
        while (s >= 0 && piv[static_cast<size_t>(s)] == m - t + s) --s;
        if (s < 0) return;
        ++piv[static_cast<size_t>(s)];
        for (int k = s + 1; k < t; ++k) piv[static_cast<size_t>(k)] = piv[static_cast<size_t>(k - 1)] + 1;
    }
}

// Visits all subspaces V with L <= V <= P and dim V = k, each once, in canonical form.
bool for_each_between(const Subspace& l, const Subspace& pp, int k, int p,
                      const std::function<bool(const Subspace&)>& visit) {
    const int mp = pp.dim(), kl = l.dim();
    if (k < kl || k > mp) return true;
    FpMatrix lc(kl, mp);
    for (int r = 0; r < kl; ++r) {
        auto c = pp.coords(row_of(l.basis, r));
        for (int j = 0; j < mp; ++j) lc(r, j) = c[static_cast<size_t>(j)];
    }
    auto lpiv = fp::rref(lc, p);
    std::vector<int> comp;
    for (int j = 0; j < mp; ++j)
        if (std::find(lpiv.begin(), lpiv.end(), j) == lpiv.end()) comp.push_back(j);
    const int mc = static_cast<int>(comp.size());
    bool keep_going = true;
    for_each_rref(k - kl, mc, p, [&](const FpMatrix& w) {
        FpMatrix rows(k, pp.n);
        for (int r = 0; r < kl; ++r)
            for (int j = 0; j < pp.n; ++j) rows(r, j) = l.basis(r, j);
        for (int s = 0; s < w.rows; ++s)
            for (int t = 0; t < mc; ++t) {
                int f = w(s, t);
                if (!f) continue;
                int prow = comp[static_cast<size_t>(t)];
                for (int j = 0; j < pp.n; ++j) rows(kl + s, j) = (rows(kl + s, j) + f * pp.basis(prow, j)) % p;
            }
        keep_going = visit(Subspace::span(rows, p));
        return keep_going;
    });
    return keep_going;
}

std::vector<int> vertex_order(const Quiver& q) {
    // Sinks first, then grow along arrows so most vertices see a chosen neighbour.
    std::vector<int> order;
    std::vector<bool> used(static_cast<size_t>(q.n), false);
    while (static_cast<int>(order.size()) < q.n) {
        int pick = -1;
        for (int v : order) {
            for (auto [s, t] : q.arrows) {
                int w = t == v ? s : (s == v ? t : -1);
                if (w >= 0 && !used[static_cast<size_t>(w)]) {
                    pick = w;
                    break;
                }
            }
            if (pick >= 0) break;
        }
        for (int a = 0; a < q.n && pick < 0; ++a)
            if (!used[static_cast<size_t>(a)] && q.is_sink(a)) pick = a;
        for (int a = 0; a < q.n && pick < 0; ++a)
            if (!used[static_cast<size_t>(a)]) pick = a;
        used[static_cast<size_t>(pick)] = true;
        order.push_back(pick);
    }
    return order;
}

void check_compatible(const FpRep& m, const FpRep& n) {
    if (!(m.quiver == n.quiver)) throw DomainError("representations live on different quivers");
    if (m.p != n.p) throw DomainError("representations live over different fields");
}

// Appends equations X*A - B*Y = 0 where X (R x K1) and Y (K2 x C) are unknown blocks.
struct System {
    int unknowns = 0;
    std::vector<std::vector<int>> rows;

    int block(int r, int c) {
        int off = unknowns;
        unknowns += r * c;
        return off;
    }
    void add(int p, int offx, int r_rows, int xcols, const FpMatrix* a, int offy, int ycols, const FpMatrix* b,
             int c_cols) {
        for (int r = 0; r < r_rows; ++r)
            for (int c = 0; c < c_cols; ++c) {
                std::vector<std::pair<int, int>> terms;
                if (a)
                    for (int k = 0; k < xcols; ++k)
                        if ((*a)(k, c)) terms.emplace_back(offx + r * xcols + k, (*a)(k, c));
                if (b)
                    for (int k = 0; k < b->cols; ++k)
                        if ((*b)(r, k)) terms.emplace_back(offy + k * ycols + c, (p - (*b)(r, k)) % p);
                std::vector<int> row(static_cast<size_t>(unknowns), 0);
                for (auto [idx, v] : terms) row[static_cast<size_t>(idx)] = (row[static_cast<size_t>(idx)] + v) % p;
                rows.push_back(std::move(row));
            }
    }
    int solution_dim(int p) const {
        if (rows.empty()) return unknowns;
        FpMatrix m(static_cast<int>(rows.size()), unknowns);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < unknowns; ++j) m(static_cast<int>(i), j) = j < static_cast<int>(rows[i].size()) ? rows[i][static_cast<size_t>(j)] : 0;
        return unknowns - fp::rank(m, p);
    }
};

}  // namespace

// ---------------------------------------------------------------- representations

FpRep::FpRep(Quiver q, int prime, DimVector d, std::vector<FpMatrix> m)
    : quiver(std::move(q)), p(prime), dims(std::move(d)), mats(std::move(m)) {
    if (!fp::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (static_cast<int>(dims.size()) != quiver.n) throw DimensionError("dimension vector does not match the quiver");
    if (!is_nonneg(dims)) throw DomainError("representation dimensions must be nonnegative");
    if (mats.size() != quiver.arrows.size()) throw DimensionError("need one matrix per arrow");
    for (size_t k = 0; k < mats.size(); ++k) {
        auto [s, t] = quiver.arrows[k];
        if (mats[k].rows != dims[static_cast<size_t>(t)] || mats[k].cols != dims[static_cast<size_t>(s)])
            throw DimensionError("matrix of arrow " + std::to_string(k + 1) + " has the wrong shape");
        for (int& x : mats[k].a) x = ((x % p) + p) % p;
    }
}

FpRep zero_rep(const Quiver& q, int p) {
    std::vector<FpMatrix> m;
    for (size_t k = 0; k < q.arrows.size(); ++k) m.emplace_back(0, 0);
    return FpRep(q, p, zero_vec(q.n), m);
}

FpRep simple_rep(const Quiver& q, int p, int i) {
    DimVector d = unit_vec(q.n, i);
    std::vector<FpMatrix> m;
    for (auto [s, t] : q.arrows) m.emplace_back(d[static_cast<size_t>(t)], d[static_cast<size_t>(s)]);
    return FpRep(q, p, d, m);
}

FpRep direct_sum(const FpRep& a, const FpRep& b) {
    check_compatible(a, b);
    std::vector<FpMatrix> m;
    for (size_t k = 0; k < a.mats.size(); ++k) {
        const auto &x = a.mats[k], &y = b.mats[k];
        FpMatrix z(x.rows + y.rows, x.cols + y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
        for (int i = 0; i < y.rows; ++i)
            for (int j = 0; j < y.cols; ++j) z(x.rows + i, x.cols + j) = y(i, j);
        m.push_back(z);
    }
    return FpRep(a.quiver, a.p, add(a.dims, b.dims), m);
}

FpRep direct_power(const FpRep& a, int k) {
    FpRep r = zero_rep(a.quiver, a.p);
    for (int i = 0; i < k; ++i) r = direct_sum(r, a);
    return r;
}

FpRep rep_from_integers(const Quiver& q, int p, const DimVector& d,
                        const std::vector<std::vector<std::vector<long long>>>& mats) {
    if (mats.size() != q.arrows.size()) throw DimensionError("need one matrix per arrow");
    std::vector<FpMatrix> m;
    for (size_t k = 0; k < mats.size(); ++k) {
        auto [s, t] = q.arrows[k];
        const int rows = d.at(static_cast<size_t>(t)), cols = d.at(static_cast<size_t>(s));
        if (static_cast<int>(mats[k].size()) != rows) throw DimensionError("matrix of arrow " + std::to_string(k + 1) + " has the wrong row count");
        FpMatrix x(rows, cols);
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(mats[k][static_cast<size_t>(i)].size()) != cols)
                throw DimensionError("matrix of arrow " + std::to_string(k + 1) + " has the wrong column count");
            for (int j = 0; j < cols; ++j) x(i, j) = static_cast<int>(((mats[k][static_cast<size_t>(i)][static_cast<size_t>(j)] % p) + p) % p);
        }
        m.push_back(x);
    }
    return FpRep(q, p, d, m);
}

void for_each_rep(const Quiver& q, int p, const DimVector& d, const std::function<bool(const FpRep&)>& visit) {
    if (!fp::is_prime(p)) throw DomainError("field size must be prime");
    if (static_cast<int>(d.size()) != q.n || !is_nonneg(d)) throw DimensionError("bad dimension vector");
    std::vector<FpMatrix> mats;
    for (const auto& [s, t] : q.arrows) mats.emplace_back(d[static_cast<size_t>(t)], d[static_cast<size_t>(s)]);
    std::vector<int*> entries;
    for (auto& m : mats)
        for (auto& x : m.a) entries.push_back(&x);
    while (true) {
        if (!visit(FpRep(q, p, d, mats))) return;
        size_t k = 0;
        while (k < entries.size() && *entries[k] == p - 1) *entries[k++] = 0;
        if (k == entries.size()) return;
        ++*entries[k];
    }
}

int hom_dim(const FpRep& m, const FpRep& n) {
    check_compatible(m, n);
    const Quiver& q = m.quiver;
    System sys;
    std::vector<int> off(static_cast<size_t>(q.n));
    for (int i = 0; i < q.n; ++i) off[static_cast<size_t>(i)] = sys.block(n.dims[static_cast<size_t>(i)], m.dims[static_cast<size_t>(i)]);
    for (size_t k = 0; k < q.arrows.size(); ++k) {
        auto [s, t] = q.arrows[k];
        // f_t M_k - N_k f_s = 0, shape n_t x m_s
        sys.add(m.p, off[static_cast<size_t>(t)], n.dims[static_cast<size_t>(t)], m.dims[static_cast<size_t>(t)], &m.mats[k],
                off[static_cast<size_t>(s)], m.dims[static_cast<size_t>(s)], &n.mats[k], m.dims[static_cast<size_t>(s)]);
    }
    return sys.solution_dim(m.p);
}

int ext_dim(const FpRep& m, const FpRep& n) { return hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims); }

// ---------------------------------------------------------------- subrepresentations

void for_each_subrep(const FpRep& m, const DimVector& d, const SubrepWitness* within,
                     const std::function<bool(const SubrepWitness&)>& visit) {
    const Quiver& q = m.quiver;
    if (static_cast<int>(d.size()) != q.n) throw DimensionError("subrepresentation dimension vector has the wrong length");
    if (!is_nonneg(d) || !leq(d, m.dims)) throw DomainError("subrepresentation dimension " + to_string(d) + " out of range");
    const int p = m.p;
    auto order = vertex_order(q);
    SubrepWitness u(static_cast<size_t>(q.n));
    std::vector<bool> chosen(static_cast<size_t>(q.n), false);
    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (idx == order.size()) return visit(u);
        const int i = order[idx];
        const int di = m.dims[static_cast<size_t>(i)];
        std::vector<std::vector<int>> cons;
        auto push_rows = [&](const FpMatrix& r) {
            for (int k = 0; k < r.rows; ++k) cons.push_back(row_of(r, k));
        };
        if (within) push_rows(annihilator_rows((*within)[static_cast<size_t>(i)], p));
        Subspace lower = Subspace::zero(di);
        FpMatrix lower_rows(0, di);
        std::vector<size_t> loops;
        for (size_t k = 0; k < q.arrows.size(); ++k) {
            auto [s, t] = q.arrows[k];
            if (s == i && t == i) {
                loops.push_back(k);
            } else if (s == i && chosen[static_cast<size_t>(t)]) {
                push_rows(fp::mul(annihilator_rows(u[static_cast<size_t>(t)], p), m.mats[k], p));
            } else if (t == i && chosen[static_cast<size_t>(s)]) {
                FpMatrix img = fp::mul(u[static_cast<size_t>(s)].basis, fp::transpose(m.mats[k]), p);
                FpMatrix merged(lower_rows.rows + img.rows, di);
                std::copy(lower_rows.a.begin(), lower_rows.a.end(), merged.a.begin());
                std::copy(img.a.begin(), img.a.end(), merged.a.begin() + static_cast<long>(lower_rows.a.size()));
                lower_rows = merged;
            }
        }
        lower = Subspace::span(lower_rows, p);
        Subspace upper = Subspace::whole(di);
        if (!cons.empty()) upper = Subspace::span(fp::transpose(fp::nullspace(fp::from_rows(cons, di, p), p)), p);
        if (!upper.contains(lower, p)) return true;
        chosen[static_cast<size_t>(i)] = true;
        bool go = for_each_between(lower, upper, d[static_cast<size_t>(i)], p, [&](const Subspace& v) {
            for (size_t k : loops)
                if (!v.contains(image(m.mats[k], v, p), p)) return true;
            u[static_cast<size_t>(i)] = v;
            return rec(idx + 1);
        });
        chosen[static_cast<size_t>(i)] = false;
        return go;
    };
    rec(0);
}

std::vector<SubrepWitness> enumerate_subreps(const FpRep& m, const DimVector& d) {
    std::vector<SubrepWitness> out;
    for_each_subrep(m, d, nullptr, [&](const SubrepWitness& u) {
        out.push_back(u);
        return true;
    });
    return out;
}

std::uint64_t count_subreps(const FpRep& m, const DimVector& d) {
    std::uint64_t c = 0;
    for_each_subrep(m, d, nullptr, [&](const SubrepWitness&) {
        ++c;
        return true;
    });
    return c;
}

std::uint64_t enumerate_flags(const FpRep& m, const Filtration& f,
                              const std::function<void(const std::vector<SubrepWitness>&)>& visit) {
    if (!is_filtration_of(f, m.dims)) throw DomainError("not a filtration of " + to_string(m.dims) + ": " + to_string(f));
    const int nu = static_cast<int>(f.size()) - 1;
    std::vector<SubrepWitness> flag(static_cast<size_t>(nu) + 1);
    for (int i = 0; i < m.quiver.n; ++i) {
        flag[0].push_back(Subspace::zero(m.dims[static_cast<size_t>(i)]));
        flag[static_cast<size_t>(nu)].push_back(Subspace::whole(m.dims[static_cast<size_t>(i)]));
    }
    if (nu == 0) {
        if (visit) visit(flag);
        return 1;
    }
    std::uint64_t count = 0;
    std::function<void(int)> rec = [&](int k) {
        if (k == 0) {
            ++count;
            if (visit) visit(flag);
            return;
        }
        const SubrepWitness& parent = flag[static_cast<size_t>(k) + 1];
        for_each_subrep(m, f[static_cast<size_t>(k)], &parent, [&](const SubrepWitness& u) {
            flag[static_cast<size_t>(k)] = u;
            rec(k - 1);
            return true;
        });
    };
    rec(nu - 1);
    return count;
}

FpRep restrict_rep(const FpRep& m, const SubrepWitness& u) {
    const Quiver& q = m.quiver;
    DimVector d(static_cast<size_t>(q.n));
    for (int i = 0; i < q.n; ++i) d[static_cast<size_t>(i)] = u[static_cast<size_t>(i)].dim();
    std::vector<FpMatrix> mats;
    for (size_t k = 0; k < q.arrows.size(); ++k) {
        auto [s, t] = q.arrows[k];
        const Subspace &us = u[static_cast<size_t>(s)], &ut = u[static_cast<size_t>(t)];
        FpMatrix x(ut.dim(), us.dim());
        for (int c = 0; c < us.dim(); ++c) {
            auto img = apply(m.mats[k], row_of(us.basis, c), m.p);
            auto co = ut.coords(img);
            for (int r = 0; r < ut.dim(); ++r) x(r, c) = co[static_cast<size_t>(r)];
        }
        mats.push_back(x);
    }
    return FpRep(q, m.p, d, mats);
}

namespace {

std::vector<int> nonpivots(const Subspace& u) {
    std::vector<int> out;
    for (int j = 0; j < u.n; ++j)
        if (std::find(u.pivots.begin(), u.pivots.end(), j) == u.pivots.end()) out.push_back(j);
    return out;
}

// Coordinates of v + U in the quotient basis given by the non-pivot unit vectors.
std::vector<int> project(const Subspace& u, std::vector<int> v, int p) {
    for (int r = 0; r < u.dim(); ++r) {
        int f = v[static_cast<size_t>(u.pivots[static_cast<size_t>(r)])];
        if (!f) continue;
        for (int j = 0; j < u.n; ++j) v[static_cast<size_t>(j)] = ((v[static_cast<size_t>(j)] - f * u.basis(r, j)) % p + p) % p;
    }
    std::vector<int> out;
    for (int j : nonpivots(u)) out.push_back(v[static_cast<size_t>(j)]);
    return out;
}

std::vector<int> unit(int n, int j) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(j)] = 1;
    return v;
}

}  // namespace

FpRep quotient_rep(const FpRep& m, const SubrepWitness& u) {
    const Quiver& q = m.quiver;
    DimVector d(static_cast<size_t>(q.n));
    for (int i = 0; i < q.n; ++i) d[static_cast<size_t>(i)] = m.dims[static_cast<size_t>(i)] - u[static_cast<size_t>(i)].dim();
    std::vector<FpMatrix> mats;
    for (size_t k = 0; k < q.arrows.size(); ++k) {
        auto [s, t] = q.arrows[k];
        auto cols = nonpivots(u[static_cast<size_t>(s)]);
        FpMatrix x(d[static_cast<size_t>(t)], d[static_cast<size_t>(s)]);
        for (size_t c = 0; c < cols.size(); ++c) {
            auto img = apply(m.mats[k], unit(m.dims[static_cast<size_t>(s)], cols[c]), m.p);
            auto pr = project(u[static_cast<size_t>(t)], img, m.p);
            for (size_t r = 0; r < pr.size(); ++r) x(static_cast<int>(r), static_cast<int>(c)) = pr[r];
        }
        mats.push_back(x);
    }
    return FpRep(q, m.p, d, mats);
}

// ---------------------------------------------------------------- reflection functors

namespace {

FpMatrix sink_map(const FpRep& m, int a, std::vector<size_t>& incoming) {
    const Quiver& q = m.quiver;
    if (a < 0 || a >= q.n) throw DomainError("vertex out of range");
    if (!q.is_sink(a) || q.has_loop(a)) throw PreconditionError("vertex " + std::to_string(a + 1) + " is not a sink");
    int total_cols = 0;
    for (size_t k = 0; k < q.arrows.size(); ++k)
        if (q.arrows[k].second == a) {
            incoming.push_back(k);
            total_cols += m.dims[static_cast<size_t>(q.arrows[k].first)];
        }
    FpMatrix phi(m.dims[static_cast<size_t>(a)], total_cols);
    int off = 0;
    for (size_t k : incoming) {
        const FpMatrix& x = m.mats[k];
        for (int i = 0; i < x.rows; ++i)
            for (int j = 0; j < x.cols; ++j) phi(i, off + j) = x(i, j);
        off += x.cols;
    }
    return phi;
}

}  // namespace

int s_value(const FpRep& m, int a) {
    std::vector<size_t> incoming;
    FpMatrix phi = sink_map(m, a, incoming);
    return m.dims[static_cast<size_t>(a)] - fp::rank(phi, m.p);
}

FpRep reflect_rep(int a, const FpRep& m) {
    std::vector<size_t> incoming;
    FpMatrix phi = sink_map(m, a, incoming);
    FpMatrix ker = fp::nullspace(phi, m.p);  // (sum of source dims) x k
    Quiver rq = reflect_quiver(m.quiver, a);
    DimVector d = m.dims;
    d[static_cast<size_t>(a)] = ker.cols;
    std::vector<FpMatrix> mats = m.mats;
    int off = 0;
    for (size_t k : incoming) {
        const int ds = m.dims[static_cast<size_t>(m.quiver.arrows[k].first)];
        FpMatrix x(ds, ker.cols);
        for (int i = 0; i < ds; ++i)
            for (int j = 0; j < ker.cols; ++j) x(i, j) = ker(off + i, j);
        mats[k] = x;
        off += ds;
    }
    return FpRep(rq, m.p, d, mats);
}

FpRep dualize(const FpRep& m) {
    std::vector<FpMatrix> mats;
    for (const auto& x : m.mats) mats.push_back(fp::transpose(x));
    return FpRep(opposite(m.quiver), m.p, m.dims, mats);
}

FpRep reflect_rep_minus(int a, const FpRep& m) {
    if (!m.quiver.is_source(a) || m.quiver.has_loop(a)) throw PreconditionError("vertex " + std::to_string(a + 1) + " is not a source");
    return dualize(reflect_rep(a, dualize(m)));
}

FpRep coxeter_plus(const FpRep& m) {
    auto ord = admissible_ordering(m.quiver);
    if (!ord) throw PreconditionError("Coxeter functor needs an acyclic quiver");
    FpRep r = m;
    for (int a : *ord) r = reflect_rep(a, r);
    return r;
}

FpRep preprojective_rep(const Quiver& q, int p, const DimVector& root) {
    auto path = preprojective_path(q, root);
    std::vector<Quiver> stages{q};
    for (size_t k = 0; k + 1 < path.size(); ++k) stages.push_back(reflect_quiver(stages.back(), path[k]));
    FpRep r = simple_rep(stages.back(), p, path.back());
    for (size_t k = path.size() - 1; k-- > 0;) r = reflect_rep_minus(path[k], r);
    if (r.dims != root || !(r.quiver == q)) throw InternalError("preprojective construction produced the wrong module");
    return r;
}

FpRep preinjective_rep(const Quiver& q, int p, const DimVector& root) {
    return dualize(preprojective_rep(opposite(q), p, root));
}

FpRep kronecker_regular(int p, int x, int l) {
    FpMatrix a = FpMatrix::identity(l), b(l, l);
    for (int i = 0; i < l; ++i) {
        if (x >= 0) b(i, i) = x % p;
        if (i + 1 < l) b(i, i + 1) = 1;
    }
    if (x < 0) std::swap(a, b);
    return FpRep(quiver_kronecker(), p, {l, l}, {a, b});
}

std::vector<int> hom_fingerprint(const std::vector<FpRep>& tests, const FpRep& x) {
    std::vector<int> out;
    for (const auto& t : tests) out.push_back(hom_dim(t, x));
    return out;
}

// ---------------------------------------------------------------- chains

ChainRep flag_chain(const FpRep& m, const std::vector<SubrepWitness>& flag) {
    ChainRep c;
    for (const auto& u : flag) c.steps.push_back(restrict_rep(m, u));
    for (size_t k = 0; k + 1 < flag.size(); ++k) {
        std::vector<FpMatrix> maps;
        for (int i = 0; i < m.quiver.n; ++i) {
            const Subspace &lo = flag[k][static_cast<size_t>(i)], &hi = flag[k + 1][static_cast<size_t>(i)];
            FpMatrix x(hi.dim(), lo.dim());
            for (int col = 0; col < lo.dim(); ++col) {
                auto co = hi.coords(row_of(lo.basis, col));
                for (int r = 0; r < hi.dim(); ++r) x(r, col) = co[static_cast<size_t>(r)];
            }
            maps.push_back(x);
        }
        c.maps.push_back(maps);
    }
    return c;
}

ChainRep constant_chain(const FpRep& m, int length) {
    ChainRep c;
    for (int k = 0; k < length; ++k) c.steps.push_back(m);
    for (int k = 0; k + 1 < length; ++k) {
        std::vector<FpMatrix> maps;
        for (int i = 0; i < m.quiver.n; ++i) maps.push_back(FpMatrix::identity(m.dims[static_cast<size_t>(i)]));
        c.maps.push_back(maps);
    }
    return c;
}

ChainRep quotient_chain(const FpRep& m, const std::vector<SubrepWitness>& flag) {
    ChainRep c;
    for (const auto& u : flag) c.steps.push_back(quotient_rep(m, u));
    for (size_t k = 0; k + 1 < flag.size(); ++k) {
        std::vector<FpMatrix> maps;
        for (int i = 0; i < m.quiver.n; ++i) {
            const Subspace &lo = flag[k][static_cast<size_t>(i)], &hi = flag[k + 1][static_cast<size_t>(i)];
            auto cols = nonpivots(lo);
            FpMatrix x(hi.n - hi.dim(), static_cast<int>(cols.size()));
            for (size_t col = 0; col < cols.size(); ++col) {
                auto pr = project(hi, unit(lo.n, cols[col]), m.p);
                for (size_t r = 0; r < pr.size(); ++r) x(static_cast<int>(r), static_cast<int>(col)) = pr[r];
            }
            maps.push_back(x);
        }
        c.maps.push_back(maps);
    }
    return c;
}

int lambda_hom_dim(const ChainRep& u, const ChainRep& v) {
    if (u.steps.size() != v.steps.size()) throw DimensionError("chains of different length");
    if (u.steps.empty()) return 0;
    const Quiver& q = u.steps[0].quiver;
    const int p = u.steps[0].p;
    for (size_t k = 0; k < u.steps.size(); ++k) check_compatible(u.steps[k], v.steps[k]);
    System sys;
    std::vector<std::vector<int>> off(u.steps.size(), std::vector<int>(static_cast<size_t>(q.n)));
    for (size_t k = 0; k < u.steps.size(); ++k)
        for (int i = 0; i < q.n; ++i)
            off[k][static_cast<size_t>(i)] = sys.block(v.steps[k].dims[static_cast<size_t>(i)], u.steps[k].dims[static_cast<size_t>(i)]);
    for (size_t k = 0; k < u.steps.size(); ++k) {
        const FpRep &a = u.steps[k], &b = v.steps[k];
        for (size_t e = 0; e < q.arrows.size(); ++e) {
            auto [s, t] = q.arrows[e];
            sys.add(p, off[k][static_cast<size_t>(t)], b.dims[static_cast<size_t>(t)], a.dims[static_cast<size_t>(t)], &a.mats[e],
                    off[k][static_cast<size_t>(s)], a.dims[static_cast<size_t>(s)], &b.mats[e], a.dims[static_cast<size_t>(s)]);
        }
    }
    for (size_t k = 0; k + 1 < u.steps.size(); ++k)
        for (int i = 0; i < q.n; ++i) {
            const auto ii = static_cast<size_t>(i);
            // f^{k+1} g^k - h^k f^k = 0, shape V^{k+1}_i x U^k_i
            sys.add(p, off[k + 1][ii], v.steps[k + 1].dims[ii], u.steps[k + 1].dims[ii], &u.maps[k][ii], off[k][ii],
                    u.steps[k].dims[ii], &v.maps[k][ii], u.steps[k].dims[ii]);
        }
    return sys.solution_dim(p);
}

int lambda_euler(const Quiver& q, const Filtration& d, const Filtration& e) {
    if (d.size() != e.size()) throw DimensionError("filtrations of different length");
    int r = 0;
    for (size_t i = 0; i < d.size(); ++i) r += euler_form(q, d[i], e[i]);
    for (size_t i = 0; i + 1 < d.size(); ++i) r -= euler_form(q, d[i], e[i + 1]);
    return r;
}

int repfl_dimension(const Quiver& q, const Filtration& d) {
    if (d.empty()) throw DomainError("empty filtration");
    int r = rep_space_dim(q, d.back());
    for (size_t k = 1; k + 1 < d.size(); ++k) r += euler_form(q, d[k], sub(d[k + 1], d[k]));
    return r;
}

std::vector<int> interpolation_primes(const std::vector<int>& base, int degree_bound) {
    std::vector<int> out = base;
    int next = out.empty() ? 2 : *std::max_element(out.begin(), out.end()) + 1;
    while (static_cast<int>(out.size()) < degree_bound + 2) {
        while (!fp::is_prime(next)) ++next;
        out.push_back(next++);
    }
    return out;
}

QPolynomial fit_counts(const std::function<std::uint64_t(int)>& count_at, const std::vector<int>& primes,
                       int degree_bound) {
    const size_t need = static_cast<size_t>(std::max(degree_bound, 0)) + 1;
    if (primes.size() < need)
        throw DomainError("degree bound " + std::to_string(degree_bound) + " needs at least " + std::to_string(need) +
                          " primes");
    std::vector<std::pair<Rational, Rational>> pts;
    std::vector<std::uint64_t> counts;
    for (int p : primes) counts.push_back(count_at(p));
    for (size_t k = 0; k < need; ++k) pts.emplace_back(Rational(primes[k]), Rational(counts[k]));
    QPolynomial poly = interpolate(pts);
    for (size_t k = need; k < primes.size(); ++k)
        if (poly.eval_at(Rational(primes[k])) != Rational(counts[k]))
            throw InternalError("counts are not polynomial of degree <= " + std::to_string(degree_bound) +
                                " (check node " + std::to_string(primes[k]) + ")");
    return poly;
}

QPolynomial counting_polynomial(const std::function<FpRep(int)>& family, const Filtration& f,
                                const std::vector<int>& primes, int degree_bound) {
    return fit_counts([&](int p) { return enumerate_flags(family(p), f); }, primes, degree_bound);
}

}  // namespace qh
