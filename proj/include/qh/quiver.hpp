#pragma once

#include "qh/common.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qh {

// Vertices are 0-based internally; the JSON boundary is 1-based.
struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target); order is significant

    Quiver() = default;
    Quiver(int vertex_count, std::vector<std::pair<int, int>> arrow_list);

    bool operator==(const Quiver& o) const = default;

    int vertex_count() const { return n; }
    bool is_sink(int a) const;
    bool is_source(int a) const;
    bool has_loop(int a) const;
    bool is_connected() const;
    bool is_acyclic() const;
};

// Common test quivers.
Quiver quiver_A(int n);          // 1 -> 2 -> ... -> n
Quiver quiver_kronecker();       // two arrows 1 -> 2
Quiver quiver_jordan();          // one vertex, one loop
Quiver quiver_cyclic(int n);     // C_n: vertices 0..n, arrows i -> i+1 mod n+1
Quiver quiver_A2_tilde();        // arrows 1->2, 3->2, 1->3
Quiver quiver_D4_tilde();        // four arms into the centre

Quiver opposite(const Quiver& q);
Quiver reflect_quiver(const Quiver& q, int a);

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
int sym_form(const Quiver& q, const DimVector& d, const DimVector& e);
DimVector reflect_dimvec(const Quiver& q, int a, const DimVector& d);
// Number of parameters of Rep(d): sum over arrows of d_s * d_t.
int rep_space_dim(const Quiver& q, const DimVector& d);

// Smallest-index sink first; none iff q has an oriented cycle.
std::optional<std::vector<int>> admissible_ordering(const Quiver& q);

enum class QuiverKind { Dynkin, ExtendedDynkin, Other };
struct QuiverClass {
    QuiverKind kind = QuiverKind::Other;
    std::optional<DimVector> delta;
};
QuiverClass classify(const Quiver& q);
std::string to_string(QuiverKind k);

int defect(const Quiver& q, const DimVector& d);

enum class RootKind { Real, Imaginary };
struct Root {
    DimVector d;
    RootKind kind;
    bool operator==(const Root& o) const = default;
};
// All positive roots below the bound, sorted by (total, lexicographic).
std::vector<Root> positive_roots(const Quiver& q, const DimVector& bound);
bool is_real_root(const Quiver& q, const DimVector& d);

// Representation-theoretic component of an indecomposable with this dimension vector.
enum class RootClass { Preprojective, Regular, Preinjective };
RootClass root_class(const Quiver& q, const DimVector& d);

DimVector coxeter_dimvec(const Quiver& q, const DimVector& d);

// Coxeter orbits of regular simples in inhomogeneous tubes. Each orbit starts at its
// lexicographically smallest member E_0 and continues E_{j+1} = c(E_j); orbit j is the
// tube whose cyclic-quiver vertex j corresponds to E_j.
std::vector<std::vector<DimVector>> regular_simple_dims(const Quiver& q);

// Sink-reflection path of a preprojective root: the vertices a_1..a_t reflected along the
// canonical ordering (repeated) until the vector equals eps_{a_t}. Throws if the vector
// leaves the positive cone or the step limit is exceeded.
std::vector<int> preprojective_path(const Quiver& q, const DimVector& d);
int sigma_counter(const Quiver& q, const DimVector& d);

// Sorts preprojective and preinjective roots in the total order used for normal forms.
std::vector<DimVector> schur_total_order(const Quiver& q, std::vector<DimVector> roots);
// Strict comparison in that order; both roots must be non-regular.
bool schur_precedes(const Quiver& q, const DimVector& a, const DimVector& b);

}  // namespace qh
