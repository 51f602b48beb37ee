#pragma once

#include "qh/ffrep.hpp"
#include "qh/qpoly.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qh {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);
    static Partition from_exponents(const std::vector<int>& s);  // s[k-1] = multiplicity of k
    std::vector<int> exponents() const;
    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    bool empty() const { return parts.empty(); }
    auto operator<=>(const Partition&) const = default;
    std::string to_string() const;
};

std::vector<Partition> partitions_of(int n);

// Nilpotent representation of C_n (vertices 0..n, arrows i -> i+1 mod n+1); pi[i] lists the
// lengths of the uniserial summands with socle at vertex i.
struct CyclicClass {
    int n = 0;
    std::vector<Partition> pi;

    CyclicClass() = default;
    CyclicClass(int n_, std::vector<Partition> pi_);
    static CyclicClass zero(int n);
    static CyclicClass segment(int n, int socle, int length);
    static CyclicClass semisimple(int n, const DimVector& k);
    static CyclicClass parse(const std::string& text);

    int vertices() const { return n + 1; }
    DimVector dim() const;
    bool is_zero() const;
    CyclicClass operator+(const CyclicClass& o) const;  // direct sum
    auto operator<=>(const CyclicClass&) const = default;
    std::string to_string() const;
};

// Every class of the given dimension vector.
std::vector<CyclicClass> classes_of_dim(int n, const DimVector& d);

// Hall element at q = 0, a finitely supported function on classes.
struct HallElement {
    int n = 0;
    std::map<CyclicClass, Rational> terms;

    static HallElement unit(int n);
    static HallElement basis(const CyclicClass& c);
    std::string to_string() const;
};

struct HallPolyResult {
    CyclicClass quotient;
    QPolynomial poly;
};
// X = S_i[lambda], submodule S_i^{sum t} of the socle hitting t_k parts of size k.
HallPolyResult hall_poly_simple_power(int n, int i, const Partition& lambda, const std::vector<int>& t);

// Greedy quotient of X by the semisimple module with k_i copies of S_i.
CyclicClass q_construction(const CyclicClass& x, const DimVector& k);
HallElement multiply_semisimple_at0(const HallElement& h, const DimVector& k);

using SemisimpleWord = std::vector<DimVector>;  // letters in order; the last letter is the bottom
std::set<CyclicClass> word_support(int n, const SemisimpleWord& w);
HallElement u_word_at0(int n, const SemisimpleWord& w);

bool is_separated(const CyclicClass& c);

// dim Hom between uniserial modules S_i[a] -> S_j[b] on C_n.
int segment_hom_dim(int n, int i, int a, int j, int b);
int cyclic_hom_dim(const CyclicClass& m, const CyclicClass& x);
bool hom_order_leq(const CyclicClass& a, const CyclicClass& b);

// Module of a class over F_p with the standard uniserial bases.
FpRep cyclic_rep(const CyclicClass& c, int p);
// Iso class of a nilpotent representation, read off from ranks of path maps.
CyclicClass classify_nilpotent(int n, const FpRep& m);

// Classes X with a submodule in class `sub` and quotient in class `quot`, by brute force over F_p.
std::set<CyclicClass> extension_classes(const CyclicClass& quot, const CyclicClass& sub, int p);
// The class whose orbit closure is the product of the closures (quotient first).
CyclicClass tube_generic_extension(const CyclicClass& quot, const CyclicClass& sub, int p = 2);

// Monoid homomorphism and graded dimension checks for semisimple words on C_n. With
// inject_fault one product coefficient is perturbed so the harness can prove it reports.
CheckReport psi_check(int n, const DimVector& bound, bool inject_fault = false);

}  // namespace qh
