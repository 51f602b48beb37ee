#include "qh/cyclic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

namespace qh {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x <= 0) throw DomainError("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

Partition Partition::from_exponents(const std::vector<int>& s) {
    std::vector<int> p;
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0) throw DomainError("negative exponent in partition");
        for (int r = 0; r < s[k]; ++r) p.push_back(static_cast<int>(k) + 1);
    }
    return Partition(p);
}

std::vector<int> Partition::exponents() const {
    std::vector<int> s(parts.empty() ? 0 : static_cast<size_t>(parts.front()), 0);
    for (int x : parts) ++s[static_cast<size_t>(x) - 1];
    return s;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, maxp); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// ---------------------------------------------------------------- classes

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

CyclicClass::CyclicClass(int n_, std::vector<Partition> pi_) : n(n_), pi(std::move(pi_)) {
    if (n < 0) throw DomainError("cyclic quiver parameter must be nonnegative");
    if (static_cast<int>(pi.size()) != n + 1) throw DimensionError("cyclic class needs one partition per vertex");
}

CyclicClass CyclicClass::zero(int n) { return CyclicClass(n, std::vector<Partition>(static_cast<size_t>(n) + 1)); }

CyclicClass CyclicClass::segment(int n, int socle, int length) {
    CyclicClass c = zero(n);
    c.pi[static_cast<size_t>(mod(socle, n + 1))] = Partition({length});
    return c;
}

CyclicClass CyclicClass::semisimple(int n, const DimVector& k) {
    if (static_cast<int>(k.size()) != n + 1) throw DimensionError("semisimple letter has the wrong length");
    CyclicClass c = zero(n);
    for (int i = 0; i <= n; ++i) c.pi[static_cast<size_t>(i)] = Partition(std::vector<int>(static_cast<size_t>(k[static_cast<size_t>(i)]), 1));
    return c;
}

CyclicClass CyclicClass::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw DomainError("cyclic class must look like [(2,1);();(1)]");
    std::vector<Partition> pis;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.size() < 2 || item.front() != '(' || item.back() != ')') throw DomainError("bad partition '" + item + "'");
        std::vector<int> parts;
        std::stringstream ps(item.substr(1, item.size() - 2));
        std::string num;
        while (std::getline(ps, num, ',')) {
            try {
                parts.push_back(std::stoi(num));
            } catch (const std::exception&) {
                throw DomainError("bad partition part '" + num + "'");
            }
        }
        pis.emplace_back(parts);
    }
    if (pis.empty()) throw DomainError("cyclic class needs at least one vertex");
    return CyclicClass(static_cast<int>(pis.size()) - 1, pis);
}

DimVector CyclicClass::dim() const {
    const int nv = n + 1;
    DimVector d = zero_vec(nv);
    for (int i = 0; i < nv; ++i)
        for (int l : pi[static_cast<size_t>(i)].parts)
            for (int k = 0; k < l; ++k) ++d[static_cast<size_t>(mod(i - k, nv))];
    return d;
}

bool CyclicClass::is_zero() const {
    return std::all_of(pi.begin(), pi.end(), [](const Partition& p) { return p.empty(); });
}

CyclicClass CyclicClass::operator+(const CyclicClass& o) const {
    if (n != o.n) throw DimensionError("classes on different cyclic quivers");
    CyclicClass r = *this;
    for (size_t i = 0; i < pi.size(); ++i) {
        auto parts = pi[i].parts;
        parts.insert(parts.end(), o.pi[i].parts.begin(), o.pi[i].parts.end());
        r.pi[i] = Partition(parts);
    }
    return r;
}

std::string CyclicClass::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < pi.size(); ++i) s += (i ? ";" : "") + pi[i].to_string();
    return s + "]";
}

std::vector<CyclicClass> classes_of_dim(int n, const DimVector& d) {
    const int nv = n + 1;
    if (static_cast<int>(d.size()) != nv) throw DimensionError("dimension vector has the wrong length");
    if (!is_nonneg(d)) return {};
    const int tot = total(d);
    std::vector<std::pair<int, int>> segs;  // (socle, length)
    for (int i = 0; i < nv; ++i)
        for (int l = 1; l <= tot; ++l) segs.emplace_back(i, l);
    std::vector<CyclicClass> out;
    std::vector<std::vector<int>> parts(static_cast<size_t>(nv));
    DimVector rem = d;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (is_zero(rem)) {
            std::vector<Partition> pis;
            for (auto& p : parts) pis.emplace_back(p);
            out.emplace_back(n, pis);
            return;
        }
        if (idx == segs.size()) return;
        auto [i, l] = segs[idx];
        rec(idx + 1);
        int used = 0;
        while (true) {
            bool ok = true;
            for (int k = 0; k < l; ++k)
                if (--rem[static_cast<size_t>(mod(i - k, nv))] < 0) ok = false;
            ++used;
            parts[static_cast<size_t>(i)].push_back(l);
            if (!ok) break;
            rec(idx + 1);
        }
        for (int u = 0; u < used; ++u) {
            parts[static_cast<size_t>(i)].pop_back();
            for (int k = 0; k < l; ++k) ++rem[static_cast<size_t>(mod(i - k, nv))];
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

HallElement HallElement::unit(int n) { return basis(CyclicClass::zero(n)); }

HallElement HallElement::basis(const CyclicClass& c) {
    HallElement h;
    h.n = c.n;
    h.terms[c] = 1;
    return h;
}

std::string HallElement::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [c, v] : terms) {
        if (!s.empty()) s += " + ";
        s += (v == 1 ? "" : qh::to_string(v) + "*") + "u" + c.to_string();
    }
    return s;
}

// ---------------------------------------------------------------- Hall polynomials at a socle

namespace {

// Quotient of S_i[lambda] after hitting t_k socles of parts of size k: the untouched parts stay
// at socle i and each hit part shrinks by one onto socle i-1.
std::pair<std::vector<int>, std::vector<int>> quotient_parts(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> mu, nu;
    for (size_t k = 0; k < s.size(); ++k) {
        const int size = static_cast<int>(k) + 1;
        for (int r = 0; r < s[k] - t[k]; ++r) mu.push_back(size);
        if (size > 1)
            for (int r = 0; r < t[k]; ++r) nu.push_back(size - 1);
    }
    return {mu, nu};
}

void place(std::vector<std::vector<int>>& parts, int vertex, const std::vector<int>& add) {
    auto& v = parts[static_cast<size_t>(vertex)];
    v.insert(v.end(), add.begin(), add.end());
}

CyclicClass assemble(int n, const std::vector<std::vector<int>>& parts) {
    std::vector<Partition> pis;
    for (const auto& p : parts) pis.emplace_back(p);
    return CyclicClass(n, pis);
}

}  // namespace

HallPolyResult hall_poly_simple_power(int n, int i, const Partition& lambda, const std::vector<int>& t_in) {
    const int nv = n + 1;
    if (i < 0 || i >= nv) throw DomainError("vertex out of range");
    std::vector<int> s = lambda.exponents();
    std::vector<int> t = t_in;
    if (t.size() > s.size()) {
        for (size_t k = s.size(); k < t.size(); ++k)
            if (t[k] != 0) throw DomainError("t exceeds the multiplicities of lambda");
        t.resize(s.size());
    }
    t.resize(s.size(), 0);
    for (size_t k = 0; k < s.size(); ++k)
        if (t[k] < 0 || t[k] > s[k]) throw DomainError("need 0 <= t_k <= s_k");
    QPolynomial f(1);
    int expo = 0, below = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        f = f * qbinom(s[k], t[k]);
        expo += below * (s[k] - t[k]);
        below += t[k];
    }
    f = f * QPolynomial::q_power(expo);
    auto [mu, nu] = quotient_parts(s, t);
    std::vector<std::vector<int>> parts(static_cast<size_t>(nv));
    place(parts, i, mu);
    place(parts, mod(i - 1, nv), nu);
    return {assemble(n, parts), f};
}

CyclicClass q_construction(const CyclicClass& x, const DimVector& k) {
    const int nv = x.vertices();
    if (static_cast<int>(k.size()) != nv) throw DimensionError("socle-removal vector has the wrong length");
    std::vector<std::vector<int>> parts(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        const Partition& lam = x.pi[static_cast<size_t>(i)];
        int left = k[static_cast<size_t>(i)];
        if (left < 0 || left > lam.length())
            throw DomainError("cannot remove " + std::to_string(left) + " socle copies at vertex " + std::to_string(i));
        std::vector<int> s = lam.exponents(), t(s.size(), 0);
        for (size_t m = s.size(); m-- > 0;) {
            t[m] = std::min(s[m], left);
            left -= t[m];
        }
        auto [mu, nu] = quotient_parts(s, t);
        place(parts, i, mu);
        place(parts, mod(i - 1, nv), nu);
    }
    return assemble(x.n, parts);
}

namespace {

bool socle_fits(const CyclicClass& x, const DimVector& k) {
    for (size_t i = 0; i < k.size(); ++i)
        if (k[i] > x.pi[i].length()) return false;
    return true;
}

}  // namespace

HallElement multiply_semisimple_at0(const HallElement& h, const DimVector& k) {
    if (static_cast<int>(k.size()) != h.n + 1) throw DimensionError("semisimple factor has the wrong length");
    if (!is_nonneg(k)) throw DomainError("semisimple factor must be nonnegative");
    HallElement out;
    out.n = h.n;
    std::set<DimVector> dims;
    for (const auto& [c, v] : h.terms) dims.insert(c.dim());
    for (const auto& d : dims)
        for (const auto& x : classes_of_dim(h.n, add(d, k))) {
            if (!socle_fits(x, k)) continue;
            auto it = h.terms.find(q_construction(x, k));
            if (it != h.terms.end() && it->second != 0) out.terms[x] += it->second;
        }
    return out;
}

namespace {

// All quotient classes of X by semisimple submodules with k_i copies of S_i.
std::set<CyclicClass> all_semisimple_quotients(const CyclicClass& x, const DimVector& k) {
    const int nv = x.vertices();
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> options(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        std::vector<int> s = x.pi[static_cast<size_t>(i)].exponents(), t(s.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t m, int left) {
            if (m == s.size()) {
                if (left == 0) options[static_cast<size_t>(i)].push_back(quotient_parts(s, t));
                return;
            }
            for (int v = 0; v <= std::min(s[m], left); ++v) {
                t[m] = v;
                rec(m + 1, left - v);
            }
            t[m] = 0;
        };
        rec(0, k[static_cast<size_t>(i)]);
    }
    std::set<CyclicClass> out;
    std::vector<std::vector<int>> parts(static_cast<size_t>(nv));
    std::function<void(int)> pick = [&](int i) {
        if (i == nv) {
            out.insert(assemble(x.n, parts));
            return;
        }
        for (const auto& [mu, nu] : options[static_cast<size_t>(i)]) {
            auto saved_i = parts[static_cast<size_t>(i)];
            auto saved_prev = parts[static_cast<size_t>(mod(i - 1, nv))];
            place(parts, i, mu);
            place(parts, mod(i - 1, nv), nu);
            pick(i + 1);
            parts[static_cast<size_t>(mod(i - 1, nv))] = saved_prev;
            parts[static_cast<size_t>(i)] = saved_i;
        }
    };
    pick(0);
    return out;
}

}  // namespace

std::set<CyclicClass> word_support(int n, const SemisimpleWord& w) {
    static std::mutex mu;
    static std::map<std::pair<int, SemisimpleWord>, std::set<CyclicClass>> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({n, w});
        if (it != memo.end()) return it->second;
    }
    std::set<CyclicClass> out;
    if (w.empty()) {
        out.insert(CyclicClass::zero(n));
    } else {
        SemisimpleWord prefix(w.begin(), w.end() - 1);
        auto prev = word_support(n, prefix);
        DimVector d = w.back();
        for (const auto& letter : prefix) d = add(d, letter);
        for (const auto& x : classes_of_dim(n, d)) {
            if (!socle_fits(x, w.back())) continue;
            for (const auto& y : all_semisimple_quotients(x, w.back()))
                if (prev.count(y)) {
                    out.insert(x);
                    break;
                }
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo[{n, w}] = out;
    return out;
}

HallElement u_word_at0(int n, const SemisimpleWord& w) {
    HallElement h = HallElement::unit(n);
    for (const auto& letter : w) h = multiply_semisimple_at0(h, letter);
    return h;
}

bool is_separated(const CyclicClass& c) {
    std::set<int> sizes;
    for (const auto& p : c.pi) sizes.insert(p.parts.begin(), p.parts.end());
    for (int k : sizes) {
        bool missing = false;
        for (const auto& p : c.pi)
            if (std::find(p.parts.begin(), p.parts.end(), k) == p.parts.end()) missing = true;
        if (!missing) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Hom order

int segment_hom_dim(int n, int i, int a, int j, int b) {
    const int nv = n + 1;
    int count = 0;
    for (int m = std::max(0, a - b); m <= a - 1; ++m)
        if (mod(m - (i - j), nv) == 0) ++count;
    return count;
}

int cyclic_hom_dim(const CyclicClass& m, const CyclicClass& x) {
    if (m.n != x.n) throw DimensionError("classes on different cyclic quivers");
    int total_dim = 0;
    for (size_t i = 0; i < m.pi.size(); ++i)
        for (int a : m.pi[i].parts)
            for (size_t j = 0; j < x.pi.size(); ++j)
                for (int b : x.pi[j].parts)
                    total_dim += segment_hom_dim(m.n, static_cast<int>(i), a, static_cast<int>(j), b);
    return total_dim;
}

bool hom_order_leq(const CyclicClass& a, const CyclicClass& b) {
    if (a.n != b.n || a.dim() != b.dim()) throw DimensionError("hom order compares classes of equal dimension");
    const int tot = total(a.dim());
    for (int j = 0; j <= a.n; ++j)
        for (int l = 1; l <= tot; ++l) {
            CyclicClass s = CyclicClass::segment(a.n, j, l);
            if (cyclic_hom_dim(a, s) > cyclic_hom_dim(b, s)) return false;
        }
    return true;
}

// ---------------------------------------------------------------- brute-force layer

FpRep cyclic_rep(const CyclicClass& c, int p) {
    const int nv = c.vertices();
    Quiver q = quiver_cyclic(c.n);
    DimVector d = c.dim();
    std::vector<FpMatrix> mats;
    for (int v = 0; v < nv; ++v) mats.emplace_back(d[static_cast<size_t>(mod(v + 1, nv))], d[static_cast<size_t>(v)]);
    std::vector<int> next_index(static_cast<size_t>(nv), 0);
    for (int i = 0; i < nv; ++i)
        for (int l : c.pi[static_cast<size_t>(i)].parts) {
            int prev_vertex = -1, prev_idx = -1;
            for (int k = 0; k < l; ++k) {
                int v = mod(i - l + 1 + k, nv);
                int idx = next_index[static_cast<size_t>(v)]++;
                if (prev_vertex >= 0) mats[static_cast<size_t>(prev_vertex)](idx, prev_idx) = 1;
                prev_vertex = v;
                prev_idx = idx;
            }
        }
    return FpRep(q, p, d, mats);
}

CyclicClass classify_nilpotent(int n, const FpRep& m) {
    const int nv = n + 1;
    if (!(m.quiver == quiver_cyclic(n))) throw DomainError("representation is not on the cyclic quiver C_" + std::to_string(n));
    const int tot = m.total_dim();
    // r[j][len] = rank of the path map of length len starting at j.
    std::vector<std::vector<int>> r(static_cast<size_t>(nv), std::vector<int>(static_cast<size_t>(tot) + 2, 0));
    for (int j = 0; j < nv; ++j) {
        FpMatrix path = FpMatrix::identity(m.dims[static_cast<size_t>(j)]);
        for (int len = 0; len <= tot + 1; ++len) {
            r[static_cast<size_t>(j)][static_cast<size_t>(len)] = fp::rank(path, m.p);
            path = fp::mul(m.mats[static_cast<size_t>(mod(j + len, nv))], path, m.p);
        }
        if (r[static_cast<size_t>(j)][static_cast<size_t>(tot)] != 0) throw DomainError("representation is not nilpotent");
    }
    auto R = [&](int j, int len) { return r[static_cast<size_t>(mod(j, nv))][static_cast<size_t>(len)]; };
    std::vector<std::vector<int>> parts(static_cast<size_t>(nv));
    for (int j = 0; j < nv; ++j)
        for (int l = 1; l <= tot; ++l) {
            int tops = (R(j, l - 1) - R(j, l)) - (R(j - 1, l) - R(j - 1, l + 1));
            for (int c = 0; c < tops; ++c) parts[static_cast<size_t>(mod(j + l - 1, nv))].push_back(l);
        }
    return assemble(n, parts);
}

std::set<CyclicClass> extension_classes(const CyclicClass& quot, const CyclicClass& sub, int p) {
    if (quot.n != sub.n) throw DimensionError("classes on different cyclic quivers");
    std::set<CyclicClass> out;
    for (const auto& x : classes_of_dim(quot.n, add(quot.dim(), sub.dim()))) {
        FpRep rep = cyclic_rep(x, p);
        bool found = false;
        for_each_subrep(rep, sub.dim(), nullptr, [&](const SubrepWitness& u) {
            if (classify_nilpotent(x.n, restrict_rep(rep, u)) == sub &&
                classify_nilpotent(x.n, quotient_rep(rep, u)) == quot) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) out.insert(x);
    }
    return out;
}

CyclicClass tube_generic_extension(const CyclicClass& quot, const CyclicClass& sub, int p) {
    static std::mutex mu;
    static std::map<std::tuple<CyclicClass, CyclicClass, int>, CyclicClass> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({quot, sub, p});
        if (it != memo.end()) return it->second;
    }
    auto ext = extension_classes(quot, sub, p);
    std::vector<CyclicClass> minima;
    for (const auto& x : ext) {
        bool below_all = true;
        for (const auto& y : ext)
            if (!hom_order_leq(x, y)) {
                below_all = false;
                break;
            }
        if (below_all) minima.push_back(x);
    }
    if (minima.size() != 1)
        throw InternalError("extensions of " + quot.to_string() + " by " + sub.to_string() + " have no unique generic class");
    std::lock_guard<std::mutex> lock(mu);
    memo[{quot, sub, p}] = minima[0];
    return minima[0];
}

// ---------------------------------------------------------------- Psi check

namespace {

void words_up_to(int nv, const DimVector& bound, const std::function<void(const SemisimpleWord&, const DimVector&)>& visit,
                 bool simple_only) {
    std::vector<DimVector> letters;
    DimVector l = zero_vec(nv);
    std::function<void(int)> gen = [&](int i) {
        if (i == nv) {
            if (!is_zero(l) && (!simple_only || total(l) == 1)) letters.push_back(l);
            return;
        }
        for (int v = 0; v <= bound[static_cast<size_t>(i)]; ++v) {
            l[static_cast<size_t>(i)] = v;
            gen(i + 1);
        }
        l[static_cast<size_t>(i)] = 0;
    };
    gen(0);
    SemisimpleWord w;
    std::function<void(const DimVector&)> rec = [&](const DimVector& d) {
        visit(w, d);
        for (const auto& letter : letters) {
            DimVector e = add(d, letter);
            if (!leq(e, bound)) continue;
            w.push_back(letter);
            rec(e);
            w.pop_back();
        }
    };
    rec(zero_vec(nv));
}

std::optional<CyclicClass> hom_minimum(const std::set<CyclicClass>& s) {
    for (const auto& x : s) {
        bool ok = true;
        for (const auto& y : s)
            if (!hom_order_leq(x, y)) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

}  // namespace

CheckReport psi_check(int n, const DimVector& bound, bool inject_fault) {
    const int nv = n + 1;
    CheckReport rep;
    if (static_cast<int>(bound.size()) != nv) throw DimensionError("bound has the wrong length");

    // Words, their supports and their q = 0 products.
    std::map<SemisimpleWord, std::set<CyclicClass>> support;
    std::map<DimVector, std::vector<std::set<CyclicClass>>> rows_all, rows_simple;
    words_up_to(nv, bound, [&](const SemisimpleWord& w, const DimVector& d) {
        auto s = word_support(n, w);
        HallElement u = u_word_at0(n, w);
        if (inject_fault && !w.empty()) {
            u.terms.begin()->second += 1;
            inject_fault = false;
        }
        std::set<CyclicClass> us;
        for (const auto& [c, v] : u.terms) {
            ++rep.checks;
            if (v != 1) rep.fail("coefficient " + to_string(v) + " of " + c.to_string());
            us.insert(c);
        }
        if (us != s) rep.fail("support of the q=0 product differs from the filtration classes");
        support[w] = s;
        rows_all[d].push_back(s);
        bool simple = std::all_of(w.begin(), w.end(), [](const DimVector& l) { return total(l) == 1; });
        if (simple) rows_simple[d].push_back(s);
    }, false);

    // Graded dimensions: all classes from semisimple words, separated classes from simple words.
    for (const auto& [d, rows] : rows_all) {
        auto classes = classes_of_dim(n, d);
        auto to_rows = [&](const std::vector<std::set<CyclicClass>>& rs) {
            std::vector<std::vector<Rational>> m;
            for (const auto& s : rs) {
                std::vector<Rational> row;
                for (const auto& c : classes) row.emplace_back(s.count(c) ? 1 : 0);
                m.push_back(row);
            }
            return m;
        };
        ++rep.checks;
        if (rational_rank(to_rows(rows)) != static_cast<int>(classes.size()))
            rep.fail("graded dimension mismatch at " + to_string(d));
        long long separated = std::count_if(classes.begin(), classes.end(), is_separated);
        ++rep.checks;
        if (rational_rank(to_rows(rows_simple[d])) != separated)
            rep.fail("composition subalgebra dimension mismatch at " + to_string(d));
    }

    // Homomorphism property on pairs: supports of concatenations against generic extensions
    // and against the brute-force extension closure over F_2.
    std::map<SemisimpleWord, CyclicClass> generic;
    for (const auto& [w, s] : support) {
        auto m = hom_minimum(s);
        if (!m) {
            rep.fail("support of a word has no generic class");
            return rep;
        }
        generic.emplace(w, *m);
    }
    std::map<std::pair<CyclicClass, DimVector>, std::set<std::pair<CyclicClass, CyclicClass>>> sub_quot;
    auto pairs_of = [&](const CyclicClass& x, const DimVector& dsub) -> const std::set<std::pair<CyclicClass, CyclicClass>>& {
        auto key = std::make_pair(x, dsub);
        auto it = sub_quot.find(key);
        if (it != sub_quot.end()) return it->second;
        std::set<std::pair<CyclicClass, CyclicClass>> out;
        FpRep r = cyclic_rep(x, 2);
        for_each_subrep(r, dsub, nullptr, [&](const SubrepWitness& u) {
            out.emplace(classify_nilpotent(n, restrict_rep(r, u)), classify_nilpotent(n, quotient_rep(r, u)));
            return true;
        });
        return sub_quot.emplace(key, out).first->second;
    };
    std::map<std::pair<std::set<CyclicClass>, std::set<CyclicClass>>, std::set<CyclicClass>> closure_memo;
    for (const auto& [w, sw] : support) {
        if (w.empty()) continue;
        DimVector dw = sw.begin()->dim();
        for (const auto& [v, sv] : support) {
            if (v.empty()) continue;
            DimVector dv = sv.begin()->dim();
            DimVector dwv = add(dw, dv);
            if (!leq(dwv, bound)) continue;
            SemisimpleWord wv = w;
            wv.insert(wv.end(), v.begin(), v.end());
            const auto& target = support.at(wv);
            auto key = std::make_pair(sw, sv);
            auto it = closure_memo.find(key);
            if (it == closure_memo.end()) {
                std::set<CyclicClass> closure;
                for (const auto& x : classes_of_dim(n, dwv))
                    for (const auto& [u, qt] : pairs_of(x, dv))
                        if (sv.count(u) && sw.count(qt)) {
                            closure.insert(x);
                            break;
                        }
                it = closure_memo.emplace(key, closure).first;
            }
            ++rep.checks;
            if (it->second != target) rep.fail("extension closure differs from the support of the concatenated word");
            CyclicClass g = tube_generic_extension(generic.at(w), generic.at(v));
            std::set<CyclicClass> upset;
            for (const auto& x : classes_of_dim(n, dwv))
                if (hom_order_leq(g, x)) upset.insert(x);
            ++rep.checks;
            if (upset != target) rep.fail("generic extension up-set differs from the support of the concatenated word");
        }
    }
    return rep;
}

}  // namespace qh
