#pragma once

#include "qh/cyclic.hpp"
#include "qh/ffrep.hpp"
#include "qh/flag_reflect.hpp"
#include "qh/quiver.hpp"

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace qh {

// Generic dim Ext^1(M, N) for M in Rep(d), N in Rep(e) over an algebraically closed field.
// Dynkin or extended Dynkin only; memoised per quiver.
int ext_generic(const Quiver& q, const DimVector& d, const DimVector& e);
// d' is the dimension of a generic subrepresentation of Rep(d).
bool is_generic_subdim(const Quiver& q, const DimVector& sub, const DimVector& d);
bool is_schur_root(const Quiver& q, const DimVector& d);
// Schur roots below the bound, in positive_roots order.
std::vector<DimVector> schur_roots(const Quiver& q, const DimVector& bound);

// Minimum of ext_dim over representation pairs of dimensions d, e over F_p: every pair when
// both spaces hold at most `per_side` points, otherwise `per_side` deterministic points per
// side spread through the space. Stops at the lower bound max(0, -<d,e>).
int ext_oracle_min(const Quiver& q, const DimVector& d, const DimVector& e, int p, int per_side = 48);

struct SchurFactor {
    int mult = 1;
    DimVector root;
    auto operator<=>(const SchurFactor&) const = default;
};

// Product of orbit closures <r d>, left to right; the rightmost factor is the bottom.
struct SchurWord {
    Quiver quiver;
    std::vector<SchurFactor> factors;

    void validate() const;  // throws DomainError unless every root is Schur and mult >= 1
    DimVector dim() const;
    std::string to_string() const;
};

std::vector<SchurFactor> canonical_decomposition(const Quiver& q, const DimVector& d);

// Component of a Schur root: preprojective, regular (including delta) or preinjective.
RootClass schur_class(const Quiver& q, const DimVector& root);
// Sorts P by the sink-reflection counter, R lexicographically, I by the dual counter reversed.
bool factor_precedes(const Quiver& q, const SchurFactor& a, const SchurFactor& b);

// Rewrites to P.R.I using merges, relation (1) and commutations. Without an rng the leftmost
// applicable rule fires; with one, a uniformly random applicable rule fires.
SchurWord rewrite_partial_normal_form(const SchurWord& w, std::mt19937* rng = nullptr);
// Every irreducible word reachable by some rewriting sequence; confluence means exactly one.
std::set<std::vector<SchurFactor>> rewrite_all_endpoints(const SchurWord& w);
bool is_partial_normal_form(const SchurWord& w);

// Inhomogeneous tube membership of a regular real Schur root: the segment S_i[l] of the
// tube's cyclic quiver whose composition factors E_{i-l+1}, ..., E_i sum to the root.
struct TubePosition {
    int tube;
    int socle;
    int length;
};
std::optional<TubePosition> tube_position(const Quiver& q, const DimVector& root);
// Dimension vector on Q of a class in the given tube.
DimVector tube_class_dim(const Quiver& q, int tube, const CyclicClass& c);

struct NormalForm {
    Quiver quiver;
    std::vector<SchurFactor> P;
    std::vector<CyclicClass> tubes;  // one per inhomogeneous tube, in regular_simple_dims order
    Partition lambda;                // delta multiplicities; at most one part once merged
    std::vector<SchurFactor> I;

    int l() const { return lambda.size(); }
    DimVector dim() const;
    bool is_unit() const;
    bool operator==(const NormalForm& o) const;
    std::string to_string() const;
};

// P.C_1...C_r.<l delta>.I for extended Dynkin quivers (P only for Dynkin). With merge_delta
// false the delta factors are kept as the partition of their multiplicities.
NormalForm extdynkin_normal_form(const SchurWord& w, bool merge_delta = true);

// Number of multisets of positive roots summing to d, each m delta in n-1 colours.
long long graded_dim_c0(const Quiver& q, const DimVector& d);
// Basis normal forms of degree d: P and I multisets, separated tube classes and a partition
// of the remaining delta multiple.
std::vector<NormalForm> pbw_enumerate(const Quiver& q, const DimVector& d);

// Support of the orbit-closure product of a normal form on a Dynkin quiver: the classes in
// the closure of the generic module, by the Hom order against every indecomposable.
std::set<RootMultiset> dynkin_closure_support(const SchurWord& normal);

// Kronecker modules used as fixed test sets: preprojectives (k,k+1), preinjectives (k+1,k)
// and regular R_x[l] for x in {0, 1, infinity}.
struct KroneckerModule {
    std::string label;
    DimVector dim;
    std::function<FpRep(int)> build;
};
std::vector<KroneckerModule> kronecker_modules_of_dim(int n);

struct KernelRelationReport {
    int r = 0;
    std::vector<int> primes;
    QPolynomial power_count;   // coefficient of M in u_delta^r
    QPolynomial single_count;  // coefficient of M in u_{r delta}
    int ext_delta_delta = 0;
    bool pass = false;
    std::string detail;
};
// On the Kronecker quiver with M = R_0 + R_1 + ... (r distinct homogeneous tubes), the constant
// terms r! and 1 witness u_delta^r != u_{r delta}, while ext(delta, delta) = 0.
KernelRelationReport kernel_relation_check(const Quiver& q, int r);

// u_{s delta} u_{t delta} = u_{t delta} u_{s delta} at q = 0, coefficientwise on every Kronecker
// module of dimension (s+t) delta built from kronecker_modules_of_dim.
CheckReport delta_commutation_check(int s, int t);

}  // namespace qh
