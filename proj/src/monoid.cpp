#include "qh/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace qh {

namespace {

using QuiverKey = std::pair<int, std::vector<std::pair<int, int>>>;

QuiverKey key_of(const Quiver& q) { return {q.n, q.arrows}; }

void require_tame(const Quiver& q) {
    auto k = classify(q).kind;
    if (k == QuiverKind::Other) throw UnsupportedError("generic extensions are implemented for Dynkin and extended Dynkin quivers only");
    if (!q.is_acyclic()) throw PreconditionError("the quiver must be acyclic");
}

bool is_extended(const Quiver& q) { return classify(q).kind == QuiverKind::ExtendedDynkin; }

std::optional<DimVector> delta_of(const Quiver& q) { return classify(q).delta; }

// Visits every vector in the box [0, d].
void for_each_below(const DimVector& d, const std::function<void(const DimVector&)>& visit) {
    DimVector v(d.size(), 0);
    while (true) {
        visit(v);
        size_t i = 0;
        while (i < d.size() && v[i] == d[i]) v[i++] = 0;
        if (i == d.size()) return;
        ++v[i];
    }
}

}  // namespace

// ---------------------------------------------------------------- generic ext

int ext_generic(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (static_cast<int>(d.size()) != q.n || static_cast<int>(e.size()) != q.n)
        throw DimensionError("dimension vectors must have one entry per vertex");
    if (!is_nonneg(d) || !is_nonneg(e)) throw PreconditionError("dimension vectors must be nonnegative");
    require_tame(q);
    if (is_zero(d) || is_zero(e)) return 0;

    static std::shared_mutex mu;
    static std::map<std::tuple<QuiverKey, DimVector, DimVector>, int> memo;
    auto key = std::make_tuple(key_of(q), d, e);
    {
        std::shared_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    // ext(d, e) = max of -<d', e> over generic subdimensions d' of d; d' = 0 contributes 0.
    int best = 0;
    for_each_below(d, [&](const DimVector& s) {
        if (is_zero(s)) return;
        int val = -euler_form(q, s, e);
        if (val > best && is_generic_subdim(q, s, d)) best = val;
    });
    std::unique_lock lock(mu);
    memo.emplace(key, best);
    return best;
}

bool is_generic_subdim(const Quiver& q, const DimVector& sub, const DimVector& d) {
    if (!leq(sub, d) || !is_nonneg(sub)) return false;
    if (is_zero(sub) || sub == d) return true;
    return ext_generic(q, sub, qh::sub(d, sub)) == 0;
}

bool is_schur_root(const Quiver& q, const DimVector& d) {
    require_tame(q);
    if (!is_nonneg(d) || is_zero(d)) return false;
    auto delta = delta_of(q);
    if (!is_real_root(q, d) && !(delta && d == *delta)) return false;
    // Rigidity is not enough: delta + E is generically E + R_x. A root is Schur iff every
    // proper generic subdimension b has <b,d> - <d,b> > 0.
    bool schur = true;
    for_each_below(d, [&](const DimVector& b) {
        if (!schur || is_zero(b) || b == d) return;
        if (euler_form(q, b, d) - euler_form(q, d, b) <= 0 && is_generic_subdim(q, b, d)) schur = false;
    });
    return schur;
}

std::vector<DimVector> schur_roots(const Quiver& q, const DimVector& bound) {
    std::vector<DimVector> out;
    for (const auto& r : positive_roots(q, bound))
        if (is_schur_root(q, r.d)) out.push_back(r.d);
    return out;
}

int ext_oracle_min(const Quiver& q, const DimVector& d, const DimVector& e, int p, int per_side) {
    // Either the whole space, or per_side points visited along a multiplicative-hash walk
    // through the lexicographic numbering of all entry vectors.
    auto samples = [&](const DimVector& v) {
        std::vector<FpRep> out;
        const int params = rep_space_dim(q, v);
        unsigned __int128 points = 1;
        for (int k = 0; k < params && points <= static_cast<unsigned __int128>(per_side); ++k) points *= static_cast<unsigned>(p);
        if (points <= static_cast<unsigned __int128>(per_side)) {
            for_each_rep(q, p, v, [&](const FpRep& m) {
                out.push_back(m);
                return true;
            });
            return out;
        }
        points = 1;
        for (int k = 0; k < params; ++k) points *= static_cast<unsigned>(p);
        for (int k = 0; k < per_side; ++k) {
            unsigned __int128 idx = (static_cast<unsigned __int128>(k + 1) * 0x9E3779B97F4A7C19ULL) % points;  // coprime to every p < 37
            std::vector<FpMatrix> mats;
            for (auto [s, t] : q.arrows) {
                FpMatrix m(v[static_cast<size_t>(t)], v[static_cast<size_t>(s)]);
                for (int& x : m.a) {
                    x = static_cast<int>(idx % static_cast<unsigned>(p));
                    idx /= static_cast<unsigned>(p);
                }
                mats.push_back(std::move(m));
            }
            out.emplace_back(q, p, v, std::move(mats));
        }
        return out;
    };
    const int floor = std::max(0, -euler_form(q, d, e));
    auto ms = samples(d), ns = samples(e);
    int best = -1;
    for (const auto& m : ms) {
        for (const auto& n : ns) {
            int x = ext_dim(m, n);
            if (best < 0 || x < best) best = x;
            if (best == floor) return best;
        }
    }
    return best;
}

// ---------------------------------------------------------------- words

void SchurWord::validate() const {
    for (const auto& f : factors) {
        if (static_cast<int>(f.root.size()) != quiver.n) throw DimensionError("root " + qh::to_string(f.root) + " has the wrong length");
        if (f.mult < 1) throw DomainError("multiplicities must be positive");
        if (!is_schur_root(quiver, f.root)) throw DomainError(qh::to_string(f.root) + " is not a Schur root");
    }
}

DimVector SchurWord::dim() const {
    DimVector d = zero_vec(quiver.n);
    for (const auto& f : factors) d = add(d, scale(f.mult, f.root));
    return d;
}

std::string SchurWord::to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& f : factors) s += "⟨" + std::to_string(f.mult) + "·" + qh::to_string(f.root) + "⟩";
    return s;
}

std::vector<SchurFactor> canonical_decomposition(const Quiver& q, const DimVector& d) {
    require_tame(q);
    if (is_zero(d)) return {};
    const auto roots = schur_roots(q, d);
    std::vector<std::vector<SchurFactor>> found;
    std::vector<SchurFactor> cur;
    std::function<void(size_t, const DimVector&)> go = [&](size_t idx, const DimVector& rem) {
        if (is_zero(rem)) {
            found.push_back(cur);
            return;
        }
        for (size_t i = idx; i < roots.size(); ++i) {
            const auto& r = roots[i];
            if (!leq(r, rem)) continue;
            bool ok = true;
            for (const auto& f : cur)
                if (ext_generic(q, f.root, r) != 0 || ext_generic(q, r, f.root) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            DimVector left = rem;
            int m = 0;
            while (leq(r, left)) {
                left = sub(left, r);
                ++m;
                cur.push_back({m, r});
                go(i + 1, left);
                cur.pop_back();
            }
        }
    };
    go(0, d);
    if (found.size() != 1)
        throw InternalError("canonical decomposition of " + to_string(d) + " has " + std::to_string(found.size()) + " candidates");
    return found[0];
}

RootClass schur_class(const Quiver& q, const DimVector& root) {
    auto delta = delta_of(q);
    if (delta && root == *delta) return RootClass::Regular;
    return root_class(q, root);
}

namespace {

std::tuple<int, int, DimVector> factor_key(const Quiver& q, const DimVector& root) {
    switch (schur_class(q, root)) {
        case RootClass::Preprojective: return {0, sigma_counter(q, root), root};
        case RootClass::Regular: return {1, 0, root};
        case RootClass::Preinjective: return {2, -sigma_counter(opposite(q), root), root};
    }
    return {};
}

enum class RuleKind { Merge, Swap, Relation1 };

struct Rule {
    size_t pos;
    RuleKind kind;
};

std::vector<Rule> applicable_rules(const Quiver& q, const std::vector<SchurFactor>& f, bool first_only) {
    std::vector<Rule> out;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
        const auto &x = f[i], &y = f[i + 1];
        const bool xr = is_real_root(q, x.root), yr = is_real_root(q, y.root);
        if (x.root == y.root && xr) {
            out.push_back({i, RuleKind::Merge});
        } else {
            int exy = ext_generic(q, x.root, y.root), eyx = ext_generic(q, y.root, x.root);
            if (exy == 0 && eyx == 0) {
                if (factor_key(q, y.root) < factor_key(q, x.root)) out.push_back({i, RuleKind::Swap});
            } else if (exy != 0 && eyx == 0 && (xr || yr) &&
                       (schur_class(q, x.root) != RootClass::Regular || schur_class(q, y.root) != RootClass::Regular)) {
                out.push_back({i, RuleKind::Relation1});
            }
        }
        if (first_only && !out.empty()) return out;
    }
    return out;
}

}  // namespace

bool factor_precedes(const Quiver& q, const SchurFactor& a, const SchurFactor& b) {
    return factor_key(q, a.root) < factor_key(q, b.root);
}

namespace {

void apply_rule(const Quiver& q, std::vector<SchurFactor>& f, const Rule& r) {
    auto it = f.begin() + static_cast<std::ptrdiff_t>(r.pos);
    switch (r.kind) {
        case RuleKind::Merge:
            it->mult += (it + 1)->mult;
            f.erase(it + 1);
            break;
        case RuleKind::Swap: std::iter_swap(it, it + 1); break;
        case RuleKind::Relation1: {
            auto parts = canonical_decomposition(q, add(scale(it->mult, it->root), scale((it + 1)->mult, (it + 1)->root)));
            std::sort(parts.begin(), parts.end(), [&](const SchurFactor& a, const SchurFactor& b) { return factor_precedes(q, a, b); });
            it = f.erase(it, it + 2);
            f.insert(it, parts.begin(), parts.end());
            break;
        }
    }
}

}  // namespace

SchurWord rewrite_partial_normal_form(const SchurWord& w, std::mt19937* rng) {
    w.validate();
    require_tame(w.quiver);
    const Quiver& q = w.quiver;
    std::vector<SchurFactor> f = w.factors;
    // Each step lowers (sum of pairwise ext, length, inversions) lexicographically.
    for (int guard = 0;; ++guard) {
        if (guard > 100000) throw InternalError("rewriting of " + w.to_string() + " does not terminate");
        auto rules = applicable_rules(q, f, rng == nullptr);
        if (rules.empty()) break;
        Rule r = rules.front();
        if (rng) r = rules[std::uniform_int_distribution<size_t>(0, rules.size() - 1)(*rng)];
        apply_rule(q, f, r);
    }
    SchurWord out{q, f};
    if (!is_partial_normal_form(out)) throw InternalError("rewriting of " + w.to_string() + " stopped at " + out.to_string());
    return out;
}

std::set<std::vector<SchurFactor>> rewrite_all_endpoints(const SchurWord& w) {
    w.validate();
    require_tame(w.quiver);
    const Quiver& q = w.quiver;
    std::set<std::vector<SchurFactor>> seen{w.factors}, ends;
    std::vector<std::vector<SchurFactor>> todo{w.factors};
    while (!todo.empty()) {
        auto f = std::move(todo.back());
        todo.pop_back();
        auto rules = applicable_rules(q, f, false);
        if (rules.empty()) ends.insert(f);
        for (const auto& r : rules) {
            auto g = f;
            apply_rule(q, g, r);
            if (seen.insert(g).second) todo.push_back(std::move(g));
        }
    }
    return ends;
}

bool is_partial_normal_form(const SchurWord& w) {
    const Quiver& q = w.quiver;
    for (size_t i = 0; i + 1 < w.factors.size(); ++i) {
        const auto &x = w.factors[i], &y = w.factors[i + 1];
        auto cx = schur_class(q, x.root), cy = schur_class(q, y.root);
        if (static_cast<int>(cx) > static_cast<int>(cy)) return false;
        if (cx == cy && cx != RootClass::Regular && !factor_precedes(q, x, y)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- tubes and normal forms

std::optional<TubePosition> tube_position(const Quiver& q, const DimVector& root) {
    if (!is_extended(q)) return std::nullopt;
    const auto orbits = regular_simple_dims(q);
    for (size_t t = 0; t < orbits.size(); ++t) {
        const int k = static_cast<int>(orbits[t].size());
        for (int i = 0; i < k; ++i)
            for (int l = 1; l < k; ++l) {
                DimVector s = zero_vec(q.n);
                for (int m = i - l + 1; m <= i; ++m) s = add(s, orbits[t][static_cast<size_t>(((m % k) + k) % k)]);
                if (s == root) return TubePosition{static_cast<int>(t), i, l};
            }
    }
    return std::nullopt;
}

DimVector tube_class_dim(const Quiver& q, int tube, const CyclicClass& c) {
    const auto orbits = regular_simple_dims(q);
    const auto& orbit = orbits.at(static_cast<size_t>(tube));
    if (static_cast<int>(orbit.size()) != c.vertices()) throw DimensionError("class does not live on this tube's cyclic quiver");
    DimVector d = zero_vec(q.n), comp = c.dim();
    for (size_t m = 0; m < orbit.size(); ++m) d = add(d, scale(comp[m], orbit[m]));
    return d;
}

DimVector NormalForm::dim() const {
    DimVector d = zero_vec(quiver.n);
    for (const auto& f : P) d = add(d, scale(f.mult, f.root));
    for (const auto& f : I) d = add(d, scale(f.mult, f.root));
    for (size_t t = 0; t < tubes.size(); ++t) d = add(d, tube_class_dim(quiver, static_cast<int>(t), tubes[t]));
    if (!lambda.empty()) d = add(d, scale(lambda.size(), *classify(quiver).delta));
    return d;
}

bool NormalForm::is_unit() const {
    return P.empty() && I.empty() && lambda.empty() &&
           std::all_of(tubes.begin(), tubes.end(), [](const CyclicClass& c) { return c.is_zero(); });
}

bool NormalForm::operator==(const NormalForm& o) const {
    return quiver == o.quiver && P == o.P && tubes == o.tubes && lambda == o.lambda && I == o.I;
}

std::string NormalForm::to_string() const {
    if (is_unit()) return "1";
    std::vector<std::string> parts;
    auto factors = [](const std::vector<SchurFactor>& fs) {
        std::string s;
        for (const auto& f : fs) s += (s.empty() ? "" : " ") + std::to_string(f.mult) + "·" + qh::to_string(f.root);
        return s;
    };
    if (!P.empty()) parts.push_back("P[" + factors(P) + "]");
    std::string c;
    for (size_t t = 0; t < tubes.size(); ++t)
        if (!tubes[t].is_zero()) c += (c.empty() ? "" : " ") + ("x" + std::to_string(t + 1)) + ":" + tubes[t].to_string();
    if (!c.empty()) parts.push_back("C{" + c + "}");
    if (lambda.length() == 1)
        parts.push_back(lambda.parts[0] == 1 ? "R[δ]" : "R[δ^" + std::to_string(lambda.parts[0]) + "]");
    else if (!lambda.empty())
        parts.push_back("R[δ^" + lambda.to_string() + "]");
    if (!I.empty()) parts.push_back("I[" + factors(I) + "]");
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s;
}

namespace {

NormalForm empty_form(const Quiver& q) {
    NormalForm nf;
    nf.quiver = q;
    if (is_extended(q))
        for (const auto& orbit : regular_simple_dims(q)) nf.tubes.push_back(CyclicClass::zero(static_cast<int>(orbit.size()) - 1));
    return nf;
}

}  // namespace

NormalForm extdynkin_normal_form(const SchurWord& w, bool merge_delta) {
    const Quiver& q = w.quiver;
    SchurWord pr = rewrite_partial_normal_form(w);
    NormalForm nf = empty_form(q);
    auto delta = delta_of(q);
    std::vector<int> deltas;
    for (const auto& f : pr.factors) {
        switch (schur_class(q, f.root)) {
            case RootClass::Preprojective: nf.P.push_back(f); break;
            case RootClass::Preinjective: nf.I.push_back(f); break;
            case RootClass::Regular: {
                if (delta && f.root == *delta) {
                    deltas.push_back(f.mult);
                    break;
                }
                auto pos = tube_position(q, f.root);
                if (!pos) throw InternalError("regular Schur root " + to_string(f.root) + " lies in no inhomogeneous tube");
                CyclicClass& acc = nf.tubes[static_cast<size_t>(pos->tube)];
                CyclicClass piece = CyclicClass::zero(acc.n);
                piece.pi[static_cast<size_t>(pos->socle)] = Partition(std::vector<int>(static_cast<size_t>(f.mult), pos->length));
                // The accumulated left part is the quotient of the next factor.
                acc = tube_generic_extension(acc, piece);
                break;
            }
        }
    }
    if (!deltas.empty()) {
        if (merge_delta)
            nf.lambda = Partition({std::accumulate(deltas.begin(), deltas.end(), 0)});
        else
            nf.lambda = Partition(deltas);
    }
    return nf;
}

// ---------------------------------------------------------------- graded dimensions and PBW

long long graded_dim_c0(const Quiver& q, const DimVector& d) {
    require_tame(q);
    const auto roots = positive_roots(q, d);
    const int colours = q.n - 1;
    std::map<std::pair<size_t, DimVector>, long long> memo;
    std::function<long long(size_t, const DimVector&)> go = [&](size_t idx, const DimVector& rem) -> long long {
        if (is_zero(rem)) return 1;
        if (idx == roots.size()) return 0;
        auto key = std::make_pair(idx, rem);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const auto& r = roots[idx];
        const int c = r.kind == RootKind::Real ? 1 : colours;
        long long total_count = 0;
        DimVector left = rem;
        for (long long k = 0;; ++k) {
            // Multisets of size k drawn from c colours.
            long long ways = 1;
            for (long long j = 1; j <= k; ++j) ways = ways * (c - 1 + j) / j;
            total_count += ways * go(idx + 1, left);
            if (!leq(r.d, left)) break;
            left = sub(left, r.d);
        }
        memo[key] = total_count;
        return total_count;
    };
    return go(0, d);
}

namespace {

void for_each_multiset(const std::vector<DimVector>& roots, size_t idx, const DimVector& rem, std::vector<SchurFactor>& cur,
                       const std::function<void(const std::vector<SchurFactor>&, const DimVector&)>& visit) {
    if (idx == roots.size()) {
        visit(cur, rem);
        return;
    }
    for_each_multiset(roots, idx + 1, rem, cur, visit);
    DimVector left = rem;
    int m = 0;
    while (leq(roots[idx], left)) {
        left = sub(left, roots[idx]);
        ++m;
        cur.push_back({m, roots[idx]});
        for_each_multiset(roots, idx + 1, left, cur, visit);
        cur.pop_back();
    }
}

void for_each_composition_vector(const std::vector<DimVector>& orbit, size_t idx, DimVector& c, const DimVector& rem,
                                 const std::function<void(const DimVector&, const DimVector&)>& visit) {
    if (idx == orbit.size()) {
        visit(c, rem);
        return;
    }
    DimVector left = rem;
    for (c[idx] = 0;; ++c[idx]) {
        for_each_composition_vector(orbit, idx + 1, c, left, visit);
        if (!leq(orbit[idx], left)) break;
        left = sub(left, orbit[idx]);
    }
    c[idx] = 0;
}

}  // namespace

std::vector<NormalForm> pbw_enumerate(const Quiver& q, const DimVector& d) {
    require_tame(q);
    if (!is_nonneg(d)) throw PreconditionError("dimension vector must be nonnegative");
    std::vector<DimVector> pre, inj;
    for (const auto& r : positive_roots(q, d)) {
        if (r.kind != RootKind::Real) continue;
        auto c = schur_class(q, r.d);
        if (c == RootClass::Preprojective) pre.push_back(r.d);
        if (c == RootClass::Preinjective) inj.push_back(r.d);
    }
    auto by_order = [&](const DimVector& a, const DimVector& b) { return factor_key(q, a) < factor_key(q, b); };
    std::sort(pre.begin(), pre.end(), by_order);
    std::sort(inj.begin(), inj.end(), by_order);

    const bool ext = is_extended(q);
    const auto orbits = ext ? regular_simple_dims(q) : std::vector<std::vector<DimVector>>{};
    const DimVector delta = ext ? *delta_of(q) : DimVector{};

    std::vector<NormalForm> out;
    NormalForm nf = empty_form(q);
    std::function<void(size_t, const DimVector&)> tubes = [&](size_t t, const DimVector& rem) {
        if (t == orbits.size()) {
            if (is_zero(rem)) {
                nf.lambda = Partition();
                out.push_back(nf);
                return;
            }
            if (!ext) return;
            int m = 0;
            for (int i = 0; i < q.n; ++i)
                if (delta[static_cast<size_t>(i)] > 0) m = rem[static_cast<size_t>(i)] / delta[static_cast<size_t>(i)];
            if (scale(m, delta) != rem) return;
            for (const auto& lam : partitions_of(m)) {
                nf.lambda = lam;
                out.push_back(nf);
            }
            return;
        }
        DimVector c(orbits[t].size(), 0);
        for_each_composition_vector(orbits[t], 0, c, rem, [&](const DimVector& comp, const DimVector& left) {
            for (const auto& cls : classes_of_dim(static_cast<int>(comp.size()) - 1, comp)) {
                if (!is_separated(cls)) continue;
                nf.tubes[t] = cls;
                tubes(t + 1, left);
            }
            nf.tubes[t] = CyclicClass::zero(static_cast<int>(comp.size()) - 1);
        });
    };
    std::vector<SchurFactor> cur_p, cur_i;
    for_each_multiset(pre, 0, d, cur_p, [&](const std::vector<SchurFactor>& ps, const DimVector& rem1) {
        for_each_multiset(inj, 0, rem1, cur_i, [&](const std::vector<SchurFactor>& is, const DimVector& rem2) {
            nf.P = ps;
            nf.I = is;
            tubes(0, rem2);
        });
    });
    return out;
}

// ---------------------------------------------------------------- Dynkin closures

std::set<RootMultiset> dynkin_closure_support(const SchurWord& normal) {
    const Quiver& q = normal.quiver;
    if (classify(q).kind != QuiverKind::Dynkin) throw PreconditionError("closure supports are computed for Dynkin quivers");
    if (!is_partial_normal_form(normal)) throw PreconditionError("word must be in normal form");
    RootMultiset generic{q, {}};
    for (const auto& f : normal.factors) generic.add(f.root, f.mult);
    const DimVector d = normal.dim();

    constexpr int p = 3;
    std::vector<DimVector> inds;
    for (const auto& r : positive_roots(q, d)) inds.push_back(r.d);
    std::map<DimVector, FpRep> reps;
    for (const auto& r : inds) reps.emplace(r, preprojective_rep(q, p, r));
    std::map<std::pair<DimVector, DimVector>, int> hom;
    auto hom_into = [&](const DimVector& y, const RootMultiset& x) {
        int s = 0;
        for (const auto& [z, m] : x.items) {
            auto key = std::make_pair(y, z);
            auto it = hom.find(key);
            if (it == hom.end()) it = hom.emplace(key, hom_dim(reps.at(y), reps.at(z))).first;
            s += m * it->second;
        }
        return s;
    };
    std::vector<int> base;
    for (const auto& y : inds) base.push_back(hom_into(y, generic));
    std::set<RootMultiset> out;
    for (const auto& x : root_multisets_of_dim(q, d)) {
        bool above = true;
        for (size_t k = 0; k < inds.size() && above; ++k) above = base[k] <= hom_into(inds[k], x);
        if (above) out.insert(x);
    }
    return out;
}

// ---------------------------------------------------------------- Kronecker witnesses

std::vector<KroneckerModule> kronecker_modules_of_dim(int n) {
    const Quiver q = quiver_kronecker();
    std::vector<KroneckerModule> inds;
    for (int k = 0; k + 1 <= n; ++k) {
        DimVector pd{k, k + 1}, id{k + 1, k};
        inds.push_back({"P" + std::to_string(k), pd, [q, pd](int p) { return preprojective_rep(q, p, pd); }});
        inds.push_back({"I" + std::to_string(k), id, [q, id](int p) { return preinjective_rep(q, p, id); }});
    }
    const std::pair<int, const char*> points[] = {{0, "0"}, {1, "1"}, {-1, "inf"}};
    for (auto [x, name] : points)
        for (int l = 1; l <= n; ++l)
            inds.push_back({std::string("R") + name + "[" + std::to_string(l) + "]", {l, l}, [x, l](int p) { return kronecker_regular(p, x, l); }});

    std::vector<KroneckerModule> out;
    std::vector<size_t> chosen;
    std::function<void(size_t, const DimVector&)> go = [&](size_t idx, const DimVector& rem) {
        if (is_zero(rem)) {
            KroneckerModule m;
            m.dim = {n, n};
            std::vector<KroneckerModule> parts;
            for (size_t c : chosen) {
                m.label += (m.label.empty() ? "" : "+") + inds[c].label;
                parts.push_back(inds[c]);
            }
            m.build = [q, parts](int p) {
                FpRep x = zero_rep(q, p);
                for (const auto& part : parts) x = direct_sum(x, part.build(p));
                return x;
            };
            out.push_back(std::move(m));
            return;
        }
        for (size_t i = idx; i < inds.size(); ++i) {
            if (!leq(inds[i].dim, rem)) continue;
            chosen.push_back(i);
            go(i, sub(rem, inds[i].dim));
            chosen.pop_back();
        }
    };
    go(0, {n, n});
    return out;
}

KernelRelationReport kernel_relation_check(const Quiver& q, int r) {
    if (!(q == quiver_kronecker())) throw UnsupportedError("the kernel witness is implemented for the Kronecker quiver");
    if (r < 1 || r > 3) throw UnsupportedError("r must lie in 1..3: the witness uses the points 0, 1 and infinity");
    KernelRelationReport rep;
    rep.r = r;
    const DimVector delta{1, 1};
    const int xs[] = {0, 1, -1};
    auto module = [&](int p) {
        FpRep m = zero_rep(q, p);
        for (int i = 0; i < r; ++i) m = direct_sum(m, kronecker_regular(p, xs[i], 1));
        return m;
    };
    Filtration power{zero_vec(2)}, single{zero_vec(2), {0, r}, scale(r, delta)};
    for (int i = 1; i <= r; ++i) power.push_back(scale(i, delta));
    // Both flag varieties sit inside a product of two complete flag varieties of K^r.
    const int bound = r * (r - 1);
    rep.primes = interpolation_primes({3, 5, 7}, bound);
    rep.power_count = fit_counts([&](int p) { return enumerate_flags(module(p), power); }, rep.primes, bound);
    // u_{r delta} is the indicator of Rep(r delta); it equals u_{(r,0)} u_{(0,r)} since
    // ext((0,r),(r,0)) = 0, whose coefficient on M counts the subspaces (0,r).
    rep.single_count = fit_counts([&](int p) { return enumerate_flags(module(p), single); }, rep.primes, bound);
    rep.ext_delta_delta = ext_generic(q, delta, delta);

    Rational factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    const Rational a = rep.power_count.constant_term(), b = rep.single_count.constant_term();
    std::ostringstream os;
    os << "ct u_delta^" << r << " = " << to_string(a) << ", ct u_{" << r << "delta} = " << to_string(b)
       << ", ext(delta,delta) = " << rep.ext_delta_delta;
    rep.detail = os.str();
    rep.pass = a == factorial && b == 1 && rep.ext_delta_delta == 0;
    return rep;
}

CheckReport delta_commutation_check(int s, int t) {
    if (s < 1 || t < 1) throw PreconditionError("s and t must be positive");
    CheckReport rep;
    const DimVector delta{1, 1};
    const int bound = 2 * s * t;  // Gr(t, s+t) at both vertices
    const auto primes = interpolation_primes({3, 5, 7}, bound);
    for (const auto& m : kronecker_modules_of_dim(s + t)) {
        // The coefficient of M in u_{a delta} u_{b delta} counts subrepresentations of dim b delta.
        auto st = fit_counts([&](int p) { return count_subreps(m.build(p), scale(t, delta)); }, primes, bound);
        auto ts = fit_counts([&](int p) { return count_subreps(m.build(p), scale(s, delta)); }, primes, bound);
        ++rep.checks;
        if (st.constant_term() != ts.constant_term())
            rep.fail(m.label + ": " + to_string(st.constant_term()) + " vs " + to_string(ts.constant_term()));
    }
    if (rep.pass) rep.detail = std::to_string(rep.checks) + " modules of dimension " + std::to_string(s + t) + "δ agree";
    return rep;
}

}  // namespace qh
