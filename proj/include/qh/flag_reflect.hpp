#pragma once

#include "qh/ffrep.hpp"
#include "qh/qpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <vector>

namespace qh {

using RSeq = std::vector<int>;

// #Gr_r(X^{r,e}) as a polynomial in q, where X^{r,e} is the chain of surjections
// K^{e^nu + r^0} -> K^{e^{nu-1} + r^1} -> ... -> K^{e^0 + r^nu} on A_{nu+1}.
// Requires e + reverse(r) monotone and nonnegative; zero when e itself is not.
QPolynomial grass_count_chain(const RSeq& r, const std::vector<int>& e);
// The module X^{r,e} over F_p with coordinate projections as the surjections.
FpRep chain_module(const RSeq& r, const std::vector<int>& e, int p);

// Lower bound for the S_a-multiplicities along a flag of a module with s = dim Hom(M, S_a).
RSeq r_plus(const Quiver& q, const Filtration& d, int a, int s);

struct ReflectedFiltration {
    Filtration f;           // on the reflected quiver; the last step is dim S_a^+ M
    RSeq r;                 // the r_plus used
    bool is_filtration;     // false means the flag variety is empty
};
ReflectedFiltration reflect_filtration(const Quiver& q, int a, const Filtration& d, int s);
// All monotone chains 0 = d^0 <= ... <= d^nu = d.
std::vector<Filtration> filtrations_of(const DimVector& d, int nu);
// e^i = d^nu - d^{nu-i}: flags of M correspond to flags of the dual of this type.
Filtration dual_filtration(const Filtration& d);

// An iso class in a representation-finite setting: multiplicities of indecomposables by root.
struct RootMultiset {
    Quiver quiver;
    std::map<DimVector, int> items;

    DimVector dim() const;
    bool empty() const { return items.empty(); }
    void add(const DimVector& root, int mult = 1);
    auto operator<=>(const RootMultiset& o) const { return items <=> o.items; }
    bool operator==(const RootMultiset& o) const { return items == o.items; }
    std::string to_string() const;
};
// Removes the copies of eps_a and reflects the rest; returns the removed multiplicity.
std::pair<RootMultiset, int> reflect_root_multiset(int a, const RootMultiset& x);
FpRep realize(const RootMultiset& x, int p);
// All multisets of positive roots of a Dynkin quiver with the given sum.
std::vector<RootMultiset> root_multisets_of_dim(const Quiver& q, const DimVector& d);

enum class FlagOutcome { Empty, One, Unresolved };
std::string to_string(FlagOutcome o);

struct TraceStep {
    int vertex;      // reflected sink; -1 marks passing to the dual
    Filtration filtration;
    RSeq r_plus;
};
struct FlagModQ {
    FlagOutcome outcome = FlagOutcome::Unresolved;
    std::vector<TraceStep> trace;
    std::optional<FpRep> residual;  // set when unresolved: no preprojective or preinjective summand left
    Filtration residual_filtration;
};
// #Fl(d, M) mod q: one, zero (empty), or reduced to a purely regular residual.
FlagModQ flag_count_mod_q(const FpRep& m, const Filtration& d);
// Same decision from the iso class alone; every root must be preprojective.
FlagModQ flag_count_mod_q(const RootMultiset& x, const Filtration& d);

// Filtration of a word in vertices: the last letter is the bottom step.
Filtration word_filtration(int vertices, const std::vector<int>& w);
// Classes with a flag of type d(w), decided by reflections.
std::vector<RootMultiset> dynkin_word_expand(const Quiver& q, const std::vector<int>& w);

// Iso classes of representations of a Dynkin quiver over F_p from Hom dimensions out of the
// indecomposables; the Hom matrix among indecomposables is unitriangular in the AR order.
class DynkinClassifier {
public:
    DynkinClassifier(Quiver q, int p);
    RootMultiset classify(const FpRep& m);
    const FpRep& indecomposable(const DimVector& root);

private:
    Quiver q_;
    int p_;
    std::map<DimVector, FpRep> reps_;
};

// #Fl(d(w), X) over F_p for Dynkin X, peeling the bottom simple off the socle. Distributions of
// quotients by lines are cached per class, vertex and prime.
class DynkinFlagCounter {
public:
    explicit DynkinFlagCounter(Quiver q) : q_(std::move(q)) {}
    std::uint64_t count(const std::vector<int>& w, const RootMultiset& x, int p);

private:
    const std::map<RootMultiset, std::uint64_t>& line_quotients(const RootMultiset& x, int a, int p);
    Quiver q_;
    std::map<int, DynkinClassifier> classifiers_;
    std::map<std::tuple<RootMultiset, int, int>, std::map<RootMultiset, std::uint64_t>> lines_;
    std::map<std::tuple<RootMultiset, std::vector<int>, int>, std::uint64_t> memo_;
};

// Graded dimensions and the homomorphism property on word pairs for a Dynkin quiver, with the
// extension closure computed over F_3. With inject_fault one support is perturbed.
CheckReport dynkin_psi_check(const Quiver& q, int max_len, bool inject_fault = false);

}  // namespace qh
