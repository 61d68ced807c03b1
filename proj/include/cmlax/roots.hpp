#pragma once

#include <set>
#include <string>
#include <vector>

#include "cmlax/linalg.hpp"

namespace cmlax {

/// Crystallographic root system with exact rational coordinates.
/// positive/simple index into `roots`; length_class groups roots by squared
/// length in ascending order, which for the built-in irreducible types
/// coincides with the Weyl orbits and so indexes the multiplicity parameters.
struct RootSystem {
    std::string label;
    char family = '?';
    int rank = 0;
    std::size_t ambient_dim = 0;
    std::vector<Vec> roots;
    std::vector<std::size_t> positive;
    std::vector<std::size_t> simple;
    std::vector<int> length_class;
    std::size_t num_classes = 1;
    Vec ordering_vector;

    const Vec& root(std::size_t i) const { return roots[i]; }
    std::vector<Vec> positive_roots() const;
    std::vector<Vec> simple_roots() const;
    bool contains(const Vec& v) const;
};

/// Generic ordering vector (N^d, ..., N^2, N); generic for every built-in
/// system once N exceeds twice the largest integer coordinate.
Vec default_ordering_vector(std::size_t dim, unsigned long base = 8);

/// Coroot 2a/<a,a>.
Vec coroot(const Vec& alpha);

/// Builds one of A<r> (r>=1), B<r>/C<r> (r>=2), D<r> (r>=4), E6/E7/E8, F4, G2.
/// Roots match the standard lattice constructions; simple/positive systems are
/// derived from the default ordering vector. Axioms are validated.
RootSystem build_root_system(const std::string& label);

/// positive = roots pairing positively with the ordering vector; simple =
/// positive roots that are not the sum of two positive roots. Throws when the
/// ordering vector is orthogonal to some root.
void simple_system(RootSystem& rs, const Vec& ordering_vector);

/// Root-system axioms: every root nonzero, R cap R.alpha = {alpha,-alpha},
/// and sigma_alpha(R) = R. Returns a human-readable failure or empty string.
std::string check_axioms(const RootSystem& rs);

/// <beta, alpha^vee> in Z for all ordered pairs. Empty string when it holds.
std::string check_crystallographic(const RootSystem& rs);

/// Order of sigma_alpha sigma_beta, computed by repeated exact multiplication
/// of the product restricted to span(alpha,beta). Throws CapExceeded past cap.
int coxeter_order(const Vec& alpha, const Vec& beta, int cap = 48);

/// Closure of the simple reflections under multiplication. Throws CapExceeded
/// when the group grows past cap.
std::set<GroupElem> weyl_group_enumerate(const RootSystem& rs, std::size_t cap = 200000);

/// Every positive root as a non-negative integer combination of the simple
/// roots. Empty string when it holds.
std::string check_positive_decomposition(const RootSystem& rs);

/// m(alpha,beta) of all simple pairs, indexed by position in rs.simple.
std::vector<std::vector<int>> coxeter_matrix(const RootSystem& rs);

} // namespace cmlax
