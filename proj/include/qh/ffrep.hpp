#pragma once

#include "qh/qpoly.hpp"
#include "qh/quiver.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qh {

// Dense matrix over F_p; p is carried by the owning representation.
struct FpMatrix {
    int rows = 0, cols = 0;
    std::vector<int> a;

    FpMatrix() = default;
    FpMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
    int& operator()(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
    int operator()(int i, int j) const { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
    bool operator==(const FpMatrix&) const = default;

    static FpMatrix identity(int n);
};

namespace fp {
bool is_prime(int p);
int inv(int x, int p);
FpMatrix mul(const FpMatrix& a, const FpMatrix& b, int p);
FpMatrix transpose(const FpMatrix& a);
// Reduces in place to RREF and returns pivot columns.
std::vector<int> rref(FpMatrix& a, int p);
int rank(FpMatrix a, int p);
// Columns form the canonical basis of the null space (one per free column of the RREF).
FpMatrix nullspace(const FpMatrix& a, int p);
FpMatrix from_rows(const std::vector<std::vector<int>>& rows, int cols, int p);
}  // namespace fp

// Subspace of F_p^n stored by its RREF row basis; canonical, so equality is structural.
struct Subspace {
    int n = 0;
    FpMatrix basis;  // dim x n
    std::vector<int> pivots;

    int dim() const { return basis.rows; }
    bool operator==(const Subspace& o) const { return n == o.n && basis == o.basis; }
    static Subspace whole(int n);
    static Subspace zero(int n);
    static Subspace span(FpMatrix rows, int p);
    bool contains(const std::vector<int>& v, int p) const;
    bool contains(const Subspace& o, int p) const;
    // Coordinates of a vector of this subspace in the RREF basis.
    std::vector<int> coords(const std::vector<int>& v) const;
};

struct FpRep {
    Quiver quiver;
    int p = 2;
    DimVector dims;
    std::vector<FpMatrix> mats;  // one per arrow, shape d_target x d_source

    FpRep() = default;
    FpRep(Quiver q, int prime, DimVector d, std::vector<FpMatrix> m);
    bool operator==(const FpRep&) const = default;
    bool is_zero() const { return is_nonneg(dims) && qh::is_zero(dims); }
    int total_dim() const { return total(dims); }
};

FpRep zero_rep(const Quiver& q, int p);
FpRep simple_rep(const Quiver& q, int p, int i);
FpRep direct_sum(const FpRep& a, const FpRep& b);
FpRep direct_power(const FpRep& a, int k);
// Builds a representation from integer matrices reduced mod p.
FpRep rep_from_integers(const Quiver& q, int p, const DimVector& d,
                        const std::vector<std::vector<std::vector<long long>>>& mats);

// Every representation of dimension d over F_p, in lexicographic order of matrix entries.
// The visitor returns false to stop early.
void for_each_rep(const Quiver& q, int p, const DimVector& d, const std::function<bool(const FpRep&)>& visit);

int hom_dim(const FpRep& m, const FpRep& n);
int ext_dim(const FpRep& m, const FpRep& n);

using SubrepWitness = std::vector<Subspace>;
// Visits every subrepresentation of dimension d contained in `within` (all of M when null).
// The visitor returns false to stop early.
void for_each_subrep(const FpRep& m, const DimVector& d, const SubrepWitness* within,
                     const std::function<bool(const SubrepWitness&)>& visit);
std::vector<SubrepWitness> enumerate_subreps(const FpRep& m, const DimVector& d);
std::uint64_t count_subreps(const FpRep& m, const DimVector& d);

// Chains U^0 <= ... <= U^nu of subrepresentations with the given dimension vectors.
std::uint64_t enumerate_flags(const FpRep& m, const Filtration& f,
                              const std::function<void(const std::vector<SubrepWitness>&)>& visit = {});

FpRep restrict_rep(const FpRep& m, const SubrepWitness& u);
FpRep quotient_rep(const FpRep& m, const SubrepWitness& u);

FpRep reflect_rep(int a, const FpRep& m);
FpRep reflect_rep_minus(int a, const FpRep& m);
int s_value(const FpRep& m, int a);
FpRep dualize(const FpRep& m);
FpRep coxeter_plus(const FpRep& m);

// Indecomposables from real roots via reflection functors.
FpRep preprojective_rep(const Quiver& q, int p, const DimVector& root);
FpRep preinjective_rep(const Quiver& q, int p, const DimVector& root);
// Kronecker regular module R_x[l]; x = -1 encodes the point at infinity.
FpRep kronecker_regular(int p, int x, int l);

// Hom dimensions into X from each test module; equal fingerprints against a complete list of
// indecomposables mean isomorphic (Auslander).
std::vector<int> hom_fingerprint(const std::vector<FpRep>& tests, const FpRep& x);

// A module over Q x A_{nu+1}: a sequence of representations with connecting morphisms.
struct ChainRep {
    std::vector<FpRep> steps;
    std::vector<std::vector<FpMatrix>> maps;  // maps[k][i]: steps[k]_i -> steps[k+1]_i
};
ChainRep flag_chain(const FpRep& m, const std::vector<SubrepWitness>& flag);
ChainRep constant_chain(const FpRep& m, int length);
ChainRep quotient_chain(const FpRep& m, const std::vector<SubrepWitness>& flag);
int lambda_hom_dim(const ChainRep& u, const ChainRep& v);
int lambda_euler(const Quiver& q, const Filtration& d, const Filtration& e);
int repfl_dimension(const Quiver& q, const Filtration& d);

// Primes: the base list extended by consecutive primes until it holds degree_bound + 2 nodes,
// one more than interpolation needs, so every fit is checked at an unused node.
std::vector<int> interpolation_primes(const std::vector<int>& base, int degree_bound);
QPolynomial counting_polynomial(const std::function<FpRep(int)>& family, const Filtration& f,
                                const std::vector<int>& primes, int degree_bound);
// Fits a polynomial of degree <= degree_bound through counts at the given primes, verifying
// every surplus node; throws DomainError on too few nodes and InternalError on a mismatch.
QPolynomial fit_counts(const std::function<std::uint64_t(int)>& count_at, const std::vector<int>& primes,
                       int degree_bound);

}  // namespace qh
