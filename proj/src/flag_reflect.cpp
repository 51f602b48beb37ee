#include "qh/flag_reflect.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace qh {

namespace {

bool monotone_nonneg(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i && v[i] < v[i - 1]) return false;
    }
    return true;
}

void require_sink(const Quiver& q, int a) {
    if (a < 0 || a >= q.n || !q.is_sink(a) || q.has_loop(a))
        throw PreconditionError("vertex " + std::to_string(a + 1) + " is not a sink");
}

}  // namespace

QPolynomial grass_count_chain(const RSeq& r, const std::vector<int>& e) {
    if (r.empty() || r.size() != e.size()) throw DimensionError("r and e must have the same nonzero length");
    const size_t nu = r.size() - 1;
    std::vector<int> total_dims(nu + 1);
    for (size_t i = 0; i <= nu; ++i) total_dims[i] = e[i] + r[nu - i];
    if (!std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }) || !monotone_nonneg(total_dims))
        throw PreconditionError("e + reverse(r) must be monotone and nonnegative");
    if (!monotone_nonneg(e)) return {};
    QPolynomial f(1);
    for (size_t i = 0; i <= nu; ++i) {
        const int below = i == nu ? 0 : e[nu - i - 1];
        f = f * qbinom(e[nu - i] - below + r[i], r[i]);
    }
    return f;
}

FpRep chain_module(const RSeq& r, const std::vector<int>& e, int p) {
    if (r.empty() || r.size() != e.size()) throw DimensionError("r and e must have the same nonzero length");
    const size_t nu = r.size() - 1;
    DimVector d(nu + 1);
    for (size_t j = 0; j <= nu; ++j) d[j] = e[nu - j] + r[j];
    for (size_t j = 0; j + 1 <= nu; ++j)
        if (d[j + 1] > d[j] || d[j + 1] < 0) throw PreconditionError("the chain needs surjections");
    std::vector<FpMatrix> mats;
    for (size_t j = 0; j < nu; ++j) {
        FpMatrix m(d[j + 1], d[j]);
        for (int k = 0; k < d[j + 1]; ++k) m(k, k) = 1;
        mats.push_back(m);
    }
    return FpRep(quiver_A(static_cast<int>(nu) + 1), p, d, mats);
}

RSeq r_plus(const Quiver& q, const Filtration& d, int a, int s) {
    require_sink(q, a);
    if (d.empty()) throw DimensionError("empty filtration");
    const size_t nu = d.size() - 1;
    RSeq r(nu + 1, 0);
    for (size_t i = 1; i < nu; ++i)
        r[i] = std::max(0, reflect_dimvec(q, a, sub(d[i - 1], d[i]))[static_cast<size_t>(a)] + r[i - 1]);
    r[nu] = s;
    return r;
}

ReflectedFiltration reflect_filtration(const Quiver& q, int a, const Filtration& d, int s) {
    ReflectedFiltration out;
    out.r = r_plus(q, d, a, s);
    for (size_t i = 0; i < d.size(); ++i) {
        DimVector v = reflect_dimvec(q, a, d[i]);
        v[static_cast<size_t>(a)] += out.r[i];
        out.f.push_back(v);
    }
    out.is_filtration = is_filtration(out.f);
    return out;
}

std::vector<Filtration> filtrations_of(const DimVector& d, int nu) {
    if (nu < 0) throw DomainError("filtration length must be nonnegative");
    if (!is_nonneg(d)) return {};
    if (nu == 0) return is_zero(d) ? std::vector<Filtration>{{d}} : std::vector<Filtration>{};
    std::vector<Filtration> out;
    Filtration cur{zero_vec(static_cast<int>(d.size()))};
    std::function<void(int)> rec = [&](int step) {
        if (step == nu) {
            cur.push_back(d);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        // Next step: every vector between the previous one and d.
        const DimVector lo = cur.back();
        DimVector v = lo;
        std::function<void(size_t)> pick = [&](size_t i) {
            if (i == v.size()) {
                cur.push_back(v);
                rec(step + 1);
                cur.pop_back();
                return;
            }
            for (int x = lo[i]; x <= d[i]; ++x) {
                v[i] = x;
                pick(i + 1);
            }
            v[i] = lo[i];
        };
        pick(0);
    };
    rec(1);
    return out;
}

Filtration dual_filtration(const Filtration& d) {
    Filtration e;
    for (size_t i = 0; i < d.size(); ++i) e.push_back(sub(d.back(), d[d.size() - 1 - i]));
    return e;
}

// ---------------------------------------------------------------- root multisets

DimVector RootMultiset::dim() const {
    DimVector d = zero_vec(quiver.n);
    for (const auto& [root, k] : items) d = qh::add(d, scale(k, root));
    return d;
}

void RootMultiset::add(const DimVector& root, int mult) {
    if (mult <= 0) return;
    items[root] += mult;
}

std::string RootMultiset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [root, k] : items) {
        s += (first ? "" : ", ") + (k == 1 ? "" : std::to_string(k) + "*") + qh::to_string(root);
        first = false;
    }
    return s + "}";
}

std::pair<RootMultiset, int> reflect_root_multiset(int a, const RootMultiset& x) {
    require_sink(x.quiver, a);
    RootMultiset y;
    y.quiver = reflect_quiver(x.quiver, a);
    const DimVector simple = unit_vec(x.quiver.n, a);
    int s = 0;
    for (const auto& [root, k] : x.items) {
        if (root == simple) {
            s = k;
            continue;
        }
        DimVector r = reflect_dimvec(x.quiver, a, root);
        if (!is_nonneg(r)) throw InternalError("reflection left the positive cone at a non-simple root");
        y.add(r, k);
    }
    return {y, s};
}

FpRep realize(const RootMultiset& x, int p) {
    FpRep m = zero_rep(x.quiver, p);
    for (const auto& [root, k] : x.items) {
        FpRep ind;
        switch (root_class(x.quiver, root)) {
            case RootClass::Preprojective: ind = preprojective_rep(x.quiver, p, root); break;
            case RootClass::Preinjective: ind = preinjective_rep(x.quiver, p, root); break;
            case RootClass::Regular: throw UnsupportedError("regular roots do not determine an indecomposable");
        }
        m = direct_sum(m, direct_power(ind, k));
    }
    return m;
}

std::vector<RootMultiset> root_multisets_of_dim(const Quiver& q, const DimVector& d) {
    if (classify(q).kind != QuiverKind::Dynkin) throw PreconditionError("root multisets classify modules only for Dynkin quivers");
    if (static_cast<int>(d.size()) != q.n) throw DimensionError("dimension vector has the wrong length");
    std::vector<DimVector> roots;
    for (const auto& r : positive_roots(q, d)) roots.push_back(r.d);
    std::vector<RootMultiset> out;
    RootMultiset cur;
    cur.quiver = q;
    std::function<void(size_t, const DimVector&)> rec = [&](size_t i, const DimVector& left) {
        if (is_zero(left)) {
            out.push_back(cur);
            return;
        }
        if (i == roots.size()) return;
        rec(i + 1, left);
        DimVector rem = left;
        int k = 0;
        while (leq(roots[i], rem)) {
            rem = sub(rem, roots[i]);
            ++k;
            cur.items[roots[i]] = k;
            rec(i + 1, rem);
        }
        cur.items.erase(roots[i]);
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- mod-q decisions

std::string to_string(FlagOutcome o) {
    switch (o) {
        case FlagOutcome::Empty: return "empty";
        case FlagOutcome::One: return "one";
        case FlagOutcome::Unresolved: return "unresolved";
    }
    return "?";
}

namespace {

bool has_preprojective_summand(const FpRep& m) {
    if (m.is_zero()) return false;
    auto cls = classify(m.quiver);
    if (cls.kind == QuiverKind::Dynkin) return true;
    if (cls.kind != QuiverKind::ExtendedDynkin) throw UnsupportedError("flag reduction needs a Dynkin or extended Dynkin quiver");
    // Hom from regular or preinjective modules into preprojectives vanishes, so a nonzero map
    // into some preprojective P with dim P <= dim M exists iff M has a preprojective summand.
    for (const auto& r : positive_roots(m.quiver, m.dims)) {
        if (r.kind != RootKind::Real || root_class(m.quiver, r.d) != RootClass::Preprojective) continue;
        if (hom_dim(m, preprojective_rep(m.quiver, m.p, r.d)) != 0) return true;
    }
    return false;
}

int round_limit(const DimVector& d) { return 4 * (total(d) + static_cast<int>(d.size())) + 8; }

}  // namespace

FlagModQ flag_count_mod_q(const FpRep& m, const Filtration& d) {
    FlagModQ out;
    if (!m.quiver.is_acyclic()) throw PreconditionError("flag reduction needs an acyclic quiver");
    if (!is_filtration_of(d, m.dims)) {
        out.outcome = FlagOutcome::Empty;
        return out;
    }
    FpRep cur = m;
    Filtration f = d;
    for (int side = 0; side < 2; ++side) {
        int rounds = 0;
        while (has_preprojective_summand(cur)) {
            if (++rounds > round_limit(m.dims)) throw InternalError("preprojective reduction did not terminate");
            const std::vector<int> order = *admissible_ordering(cur.quiver);
            for (int a : order) {
                ReflectedFiltration rf = reflect_filtration(cur.quiver, a, f, s_value(cur, a));
                cur = reflect_rep(a, cur);
                out.trace.push_back({a, rf.f, rf.r});
                if (!rf.is_filtration || rf.f.back() != cur.dims) {
                    out.outcome = FlagOutcome::Empty;
                    return out;
                }
                f = rf.f;
            }
        }
        if (cur.is_zero()) {
            // The zero module has exactly one flag, of the zero type.
            out.outcome = FlagOutcome::One;
            return out;
        }
        if (side == 0) {
            cur = dualize(cur);
            f = dual_filtration(f);
            out.trace.push_back({-1, f, {}});
        }
    }
    out.outcome = FlagOutcome::Unresolved;
    out.residual = cur;
    out.residual_filtration = f;
    return out;
}

FlagModQ flag_count_mod_q(const RootMultiset& x, const Filtration& d) {
    FlagModQ out;
    if (!x.quiver.is_acyclic()) throw PreconditionError("flag reduction needs an acyclic quiver");
    for (const auto& [root, k] : x.items)
        if (root_class(x.quiver, root) != RootClass::Preprojective)
            throw PreconditionError("root " + to_string(root) + " is not preprojective");
    if (!is_filtration_of(d, x.dim())) {
        out.outcome = FlagOutcome::Empty;
        return out;
    }
    RootMultiset cur = x;
    Filtration f = d;
    int rounds = 0;
    while (!cur.empty()) {
        if (++rounds > round_limit(x.dim())) throw InternalError("preprojective reduction did not terminate");
        const std::vector<int> order = *admissible_ordering(cur.quiver);
        for (int a : order) {
            auto [next, s] = reflect_root_multiset(a, cur);
            ReflectedFiltration rf = reflect_filtration(cur.quiver, a, f, s);
            out.trace.push_back({a, rf.f, rf.r});
            if (!rf.is_filtration || rf.f.back() != next.dim()) {
                out.outcome = FlagOutcome::Empty;
                return out;
            }
            cur = next;
            f = rf.f;
        }
    }
    out.outcome = FlagOutcome::One;
    return out;
}

Filtration word_filtration(int vertices, const std::vector<int>& w) {
    Filtration f{zero_vec(vertices)};
    for (size_t k = w.size(); k-- > 0;) {
        if (w[k] < 0 || w[k] >= vertices) throw DomainError("word letter out of range");
        f.push_back(add(f.back(), unit_vec(vertices, w[k])));
    }
    return f;
}

std::vector<RootMultiset> dynkin_word_expand(const Quiver& q, const std::vector<int>& w) {
    Filtration f = word_filtration(q.n, w);
    std::vector<RootMultiset> out;
    for (const auto& x : root_multisets_of_dim(q, f.back()))
        if (flag_count_mod_q(x, f).outcome == FlagOutcome::One) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------- Dynkin classification and counts

DynkinClassifier::DynkinClassifier(Quiver q, int p) : q_(std::move(q)), p_(p) {
    if (qh::classify(q_).kind != QuiverKind::Dynkin) throw PreconditionError("classification by Hom dimensions needs a Dynkin quiver");
}

const FpRep& DynkinClassifier::indecomposable(const DimVector& root) {
    auto it = reps_.find(root);
    if (it == reps_.end()) it = reps_.emplace(root, preprojective_rep(q_, p_, root)).first;
    return it->second;
}

RootMultiset DynkinClassifier::classify(const FpRep& m) {
    RootMultiset out;
    out.quiver = q_;
    if (m.is_zero()) return out;
    std::vector<DimVector> roots;
    for (const auto& r : positive_roots(q_, m.dims)) roots.push_back(r.d);
    const size_t k = roots.size();
    // Augmented system: sum_rho m_rho [I_sigma, I_rho] = [I_sigma, M].
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
    for (size_t s = 0; s < k; ++s) {
        for (size_t r = 0; r < k; ++r) a[s][r] = hom_dim(indecomposable(roots[s]), indecomposable(roots[r]));
        a[s][k] = hom_dim(indecomposable(roots[s]), m);
    }
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && a[piv][c] == 0) ++piv;
        if (piv == k) throw InternalError("Hom matrix of indecomposables is singular");
        std::swap(a[piv], a[c]);
        for (size_t i = 0; i < k; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (size_t j = c; j <= k; ++j) a[i][j] -= f * a[c][j];
        }
    }
    for (size_t r = 0; r < k; ++r) {
        Rational mult = a[r][k] / a[r][r];
        if (mult < 0 || denominator(mult) != 1) throw InternalError("Hom fingerprint does not match a direct sum");
        out.add(roots[r], static_cast<int>(numerator(mult)));
    }
    if (out.dim() != m.dims) throw InternalError("Hom fingerprint gives the wrong dimension");
    return out;
}

const std::map<RootMultiset, std::uint64_t>& DynkinFlagCounter::line_quotients(const RootMultiset& x, int a, int p) {
    auto key = std::make_tuple(x, a, p);
    auto it = lines_.find(key);
    if (it != lines_.end()) return it->second;
    auto& cls = classifiers_.try_emplace(p, q_, p).first->second;
    std::map<RootMultiset, std::uint64_t> out;
    FpRep m = realize(x, p);
    for_each_subrep(m, unit_vec(q_.n, a), nullptr, [&](const SubrepWitness& u) {
        ++out[cls.classify(quotient_rep(m, u))];
        return true;
    });
    return lines_.emplace(key, std::move(out)).first->second;
}

std::uint64_t DynkinFlagCounter::count(const std::vector<int>& w, const RootMultiset& x, int p) {
    if (w.empty()) return x.empty() ? 1 : 0;
    if (word_filtration(q_.n, w).back() != x.dim()) return 0;
    auto key = std::make_tuple(x, w, p);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<int> prefix(w.begin(), w.end() - 1);
    std::uint64_t total_count = 0;
    for (const auto& [y, c] : line_quotients(x, w.back(), p)) total_count += c * count(prefix, y, p);
    memo_[key] = total_count;
    return total_count;
}

// ---------------------------------------------------------------- Psi check

CheckReport dynkin_psi_check(const Quiver& q, int max_len, bool inject_fault) {
    CheckReport rep;
    if (classify(q).kind != QuiverKind::Dynkin) throw PreconditionError("Dynkin check on a non-Dynkin quiver");
    std::vector<std::vector<int>> words{{}};
    for (size_t i = 0; i < words.size(); ++i)
        if (static_cast<int>(words[i].size()) < max_len)
            for (int a = 0; a < q.n; ++a) {
                auto w = words[i];
                w.push_back(a);
                words.push_back(w);
            }
    std::map<std::vector<int>, std::set<RootMultiset>> support;
    std::map<DimVector, std::vector<std::vector<int>>> by_dim;
    for (const auto& w : words) {
        auto s = dynkin_word_expand(q, w);
        support[w] = std::set<RootMultiset>(s.begin(), s.end());
        by_dim[word_filtration(q.n, w).back()].push_back(w);
    }
    if (inject_fault)
        for (auto& [w, s] : support)
            if (w.size() >= 2 && s.size() >= 2) {
                s.erase(s.begin());
                break;
            }

    for (const auto& [d, ws] : by_dim) {
        auto classes = root_multisets_of_dim(q, d);
        std::vector<std::vector<Rational>> rows;
        for (const auto& w : ws) {
            std::vector<Rational> row;
            for (const auto& c : classes) row.emplace_back(support[w].count(c) ? 1 : 0);
            rows.push_back(row);
        }
        ++rep.checks;
        if (rational_rank(rows) != static_cast<int>(classes.size()))
            rep.fail("graded dimension mismatch at " + to_string(d));
    }

    DynkinClassifier cls(q, 3);
    std::map<std::pair<RootMultiset, DimVector>, std::set<std::pair<RootMultiset, RootMultiset>>> sub_quot;
    auto pairs_of = [&](const RootMultiset& x, const DimVector& dsub) -> const std::set<std::pair<RootMultiset, RootMultiset>>& {
        auto key = std::make_pair(x, dsub);
        auto it = sub_quot.find(key);
        if (it != sub_quot.end()) return it->second;
        std::set<std::pair<RootMultiset, RootMultiset>> out;
        FpRep m = realize(x, 3);
        for_each_subrep(m, dsub, nullptr, [&](const SubrepWitness& u) {
            out.emplace(cls.classify(restrict_rep(m, u)), cls.classify(quotient_rep(m, u)));
            return true;
        });
        return sub_quot.emplace(key, out).first->second;
    };
    for (const auto& w : words)
        for (const auto& v : words) {
            if (w.empty() || v.empty() || static_cast<int>(w.size() + v.size()) > max_len) continue;
            auto wv = w;
            wv.insert(wv.end(), v.begin(), v.end());
            DimVector dv = word_filtration(q.n, v).back();
            std::set<RootMultiset> closure;
            for (const auto& x : root_multisets_of_dim(q, word_filtration(q.n, wv).back()))
                for (const auto& [u, qt] : pairs_of(x, dv))
                    if (support[v].count(u) && support[w].count(qt)) {
                        closure.insert(x);
                        break;
                    }
            ++rep.checks;
            if (closure != support[wv]) rep.fail("support of a concatenated word differs from the extension closure");
        }
    return rep;
}

}  // namespace qh
