#include "doctest.h"
#include "qh/quiver.hpp"

#include <random>
#include <set>

using namespace qh;

namespace {

// The 4-vertex star with all arrows into vertex 1.
Quiver star4() { return Quiver(4, {{1, 0}, {2, 0}, {3, 0}}); }

Quiver quiver_D4() { return Quiver(4, {{1, 0}, {2, 0}, {3, 0}}); }

// Brute-force oracle: every root below the bound, found by reducing with decreasing
// reflections to a simple root (real) or to the fundamental set (imaginary).
std::set<DimVector> brute_real_roots(const Quiver& q, const DimVector& bound) {
    std::set<DimVector> out;
    DimVector d(bound.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == d.size()) {
            if (is_zero(d)) return;
            // (d,d) = 2 and reducible to a simple root.
            if (sym_form(q, d, d) != 2) return;
            DimVector v = d;
            for (int guard = 0; guard < 200; ++guard) {
                if (total(v) == 1) {
                    out.insert(d);
                    return;
                }
                bool moved = false;
                for (int j = 0; j < q.n && !moved; ++j) {
                    if (sym_form(q, v, unit_vec(q.n, j)) > 0) {
                        v = reflect_dimvec(q, j, v);
                        moved = true;
                    }
                }
                if (!moved || !is_nonneg(v)) return;
            }
            return;
        }
        for (int x = 0; x <= bound[i]; ++x) {
            d[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_SUITE("quiver_core") {

TEST_CASE("euler and symmetric forms") {
    CHECK(euler_form(quiver_kronecker(), {1, 0}, {0, 1}) == -2);
    CHECK(euler_form(quiver_A(3), {0, 1, 0}, {0, 1, 0}) == 1);
    CHECK(euler_form(quiver_jordan(), {1}, {1}) == 0);
    CHECK(sym_form(quiver_A(2), {1, 0}, {0, 1}) == -1);
    CHECK(sym_form(quiver_A(3), {0, 0, 1}, {0, 0, 1}) == 2);
    CHECK_THROWS_AS(euler_form(quiver_A(2), {1}, {1, 0}), DimensionError);
}

TEST_CASE("reflections on dimension vectors and quivers") {
    Quiver q = star4();
    CHECK(reflect_dimvec(q, 0, {2, 1, 1, 1}) == DimVector{1, 1, 1, 1});
    CHECK(reflect_dimvec(q, 1, {2, 1, 1, 1}) == DimVector{2, 1, 1, 1});
    CHECK(reflect_dimvec(q, 2, unit_vec(4, 2)) == DimVector{0, 0, -1, 0});
    CHECK_THROWS_AS(reflect_dimvec(quiver_jordan(), 0, {1}), UnsupportedError);

    Quiver r = reflect_quiver(q, 0);
    CHECK(r.arrows == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(reflect_quiver(quiver_A(2), 1).arrows == std::vector<std::pair<int, int>>{{1, 0}});
    CHECK(reflect_quiver(reflect_quiver(quiver_A2_tilde(), 2), 2) == quiver_A2_tilde());
}

TEST_CASE("reflection is an involution and preserves the symmetric form") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ent(-4, 4);
    for (const Quiver& q : {quiver_A(3), quiver_kronecker(), quiver_A2_tilde(), quiver_D4_tilde(), star4()}) {
        std::uniform_int_distribution<int> vert(0, q.n - 1);
        for (int trial = 0; trial < 50; ++trial) {
            DimVector d(static_cast<size_t>(q.n)), e(static_cast<size_t>(q.n));
            for (auto& x : d) x = ent(rng);
            for (auto& x : e) x = ent(rng);
            int a = vert(rng);
            CHECK(reflect_dimvec(q, a, reflect_dimvec(q, a, d)) == d);
            CHECK(sym_form(q, reflect_dimvec(q, a, d), reflect_dimvec(q, a, e)) == sym_form(q, d, e));
        }
    }
}

TEST_CASE("classification by the symmetric form") {
    CHECK(classify(quiver_A(3)).kind == QuiverKind::Dynkin);
    CHECK(classify(quiver_D4()).kind == QuiverKind::Dynkin);
    auto k = classify(quiver_kronecker());
    CHECK(k.kind == QuiverKind::ExtendedDynkin);
    CHECK(*k.delta == DimVector{1, 1});
    CHECK(*classify(quiver_jordan()).delta == DimVector{1});
    CHECK(*classify(quiver_A2_tilde()).delta == DimVector{1, 1, 1});
    CHECK(*classify(quiver_D4_tilde()).delta == DimVector{2, 1, 1, 1, 1});
    // E6 and its extension: marks of the radical vector.
    Quiver e6(6, {{0, 1}, {1, 2}, {3, 2}, {4, 3}, {5, 2}});
    CHECK(classify(e6).kind == QuiverKind::Dynkin);
    Quiver e6t(7, {{0, 1}, {1, 2}, {3, 2}, {4, 3}, {5, 2}, {6, 5}});
    CHECK(*classify(e6t).delta == DimVector{1, 2, 3, 2, 1, 2, 1});
    // E8 extension: branch 1-2-3-4-5-6 (6 is the trivalent vertex), 6-7, 6-8-9... arm lengths 2,3,6.
    Quiver e8t(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 5}, {7, 5}, {8, 7}});
    CHECK(*classify(e8t).delta == DimVector{1, 2, 3, 4, 5, 6, 3, 4, 2});
    CHECK(classify(Quiver(2, {{0, 1}, {0, 1}, {0, 1}})).kind == QuiverKind::Other);
    CHECK(classify(Quiver(1, {{0, 0}, {0, 0}})).kind == QuiverKind::Other);
    CHECK_THROWS_AS(classify(Quiver(2, {})), PreconditionError);
    // Cyclic orientation is still extended Dynkin of type A.
    CHECK(*classify(quiver_cyclic(2)).delta == DimVector{1, 1, 1});
}

TEST_CASE("delta lies in the radical") {
    for (const Quiver& q : {quiver_kronecker(), quiver_A2_tilde(), quiver_D4_tilde(), quiver_cyclic(3)}) {
        DimVector delta = *classify(q).delta;
        for (int i = 0; i < q.n; ++i) CHECK(sym_form(q, delta, unit_vec(q.n, i)) == 0);
    }
}

TEST_CASE("defect and its reflection invariance") {
    Quiver k = quiver_kronecker();
    CHECK(defect(k, {1, 1}) == 0);
    CHECK(defect(k, {0, 1}) == -1);
    CHECK(defect(k, {1, 0}) == 1);
    Quiver q = quiver_A2_tilde();
    for (const auto& r : positive_roots(q, {2, 2, 2})) {
        if (r.kind != RootKind::Real) continue;
        DimVector s = reflect_dimvec(q, 1, r.d);  // vertex 2 is the sink
        CHECK(defect(reflect_quiver(q, 1), s) == defect(q, r.d));
    }
    CHECK_THROWS_AS(defect(quiver_A(2), {1, 0}), PreconditionError);
}

TEST_CASE("admissible orderings") {
    CHECK(*admissible_ordering(star4()) == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(admissible_ordering(quiver_cyclic(2)).has_value());
    CHECK(*admissible_ordering(Quiver(1, {})) == std::vector<int>{0});
}

TEST_CASE("positive roots against the brute-force oracle") {
    auto kinds = [](const std::vector<Root>& rs, RootKind k) {
        std::set<DimVector> s;
        for (const auto& r : rs)
            if (r.kind == k) s.insert(r.d);
        return s;
    };
    auto a2 = positive_roots(quiver_A(2), {2, 2});
    CHECK(kinds(a2, RootKind::Real) == std::set<DimVector>{{1, 0}, {0, 1}, {1, 1}});
    auto kr = positive_roots(quiver_kronecker(), {2, 2});
    CHECK(kinds(kr, RootKind::Real) == std::set<DimVector>{{1, 0}, {0, 1}, {2, 1}, {1, 2}});
    CHECK(kinds(kr, RootKind::Imaginary) == std::set<DimVector>{{1, 1}, {2, 2}});
    CHECK(positive_roots(quiver_A(3), {0, 0, 0}).empty());
    // Gabriel counts.
    CHECK(positive_roots(quiver_A(3), {5, 5, 5}).size() == 6);
    CHECK(positive_roots(quiver_D4(), {5, 5, 5, 5}).size() == 12);
    for (const Quiver& q : {quiver_A(3), quiver_kronecker(), quiver_A2_tilde(), quiver_D4_tilde()}) {
        DimVector bound(static_cast<size_t>(q.n), 3);
        CHECK(kinds(positive_roots(q, bound), RootKind::Real) == brute_real_roots(q, bound));
    }
    // Imaginary roots of an extended Dynkin quiver are exactly the positive multiples of delta.
    auto ims = kinds(positive_roots(quiver_D4_tilde(), {4, 2, 2, 2, 2}), RootKind::Imaginary);
    CHECK(ims == std::set<DimVector>{{2, 1, 1, 1, 1}, {4, 2, 2, 2, 2}});
    auto jordan = positive_roots(quiver_jordan(), {3});
    CHECK(jordan.size() == 3);
}

TEST_CASE("regular simple orbits") {
    CHECK(regular_simple_dims(quiver_kronecker()).empty());
    auto a2t = regular_simple_dims(quiver_A2_tilde());
    REQUIRE(a2t.size() == 1);
    CHECK(a2t[0].size() == 2);
    auto d4t = regular_simple_dims(quiver_D4_tilde());
    REQUIRE(d4t.size() == 3);
    for (const Quiver& q : {quiver_A2_tilde(), quiver_D4_tilde(), Quiver(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}})}) {
        auto orbits = regular_simple_dims(q);
        int excess = 0;
        for (const auto& orb : orbits) {
            excess += static_cast<int>(orb.size()) - 1;
            DimVector sum = zero_vec(q.n);
            for (const auto& v : orb) sum = add(sum, v);
            CHECK(sum == *classify(q).delta);
            for (size_t j = 0; j < orb.size(); ++j) CHECK(coxeter_dimvec(q, orb[j]) == orb[(j + 1) % orb.size()]);
        }
        CHECK(excess == q.n - 2);
    }
}

TEST_CASE("total order on preprojective and preinjective roots") {
    Quiver a2 = quiver_A(2);
    CHECK(schur_total_order(a2, {{1, 0}, {1, 1}, {0, 1}}) == std::vector<DimVector>{{0, 1}, {1, 1}, {1, 0}});
    Quiver k = quiver_kronecker();
    CHECK(schur_total_order(k, {{2, 3}, {0, 1}, {1, 2}}) == std::vector<DimVector>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(schur_total_order(k, {{1, 0}, {2, 1}, {0, 1}}) == std::vector<DimVector>{{0, 1}, {2, 1}, {1, 0}});
    CHECK(schur_total_order(k, {{3, 2}}) == std::vector<DimVector>{{3, 2}});
    CHECK_THROWS_AS(schur_total_order(k, {{1, 1}}), DomainError);
}

}
