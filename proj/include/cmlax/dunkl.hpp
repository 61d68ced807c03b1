#pragma once

#include <map>
#include <vector>

#include "cmlax/diffop.hpp"
#include "cmlax/roots.hpp"

namespace cmlax {

/// Per-orbit multiplicity values, keyed by length class. Constant on W-orbits
/// by construction.
struct MultiplicityAssignment {
    std::vector<ParamScalar> per_class;

    static MultiplicityAssignment symbolic(const RootSystem& rs);
    static MultiplicityAssignment uniform(const RootSystem& rs, ParamScalar v);
    static MultiplicityAssignment zero(const RootSystem& rs) {
        return uniform(rs, ParamScalar(0));
    }

    const ParamScalar& of_root(const RootSystem& rs, std::size_t root_index) const {
        return per_class[rs.length_class[root_index]];
    }
};

/// Substitution images realizing (w.f)(x) = f(w^{-1}x) over `vars`; when the
/// table carries momenta the action is applied blockwise to both halves.
std::vector<Poly> action_images(const GroupElem& w, const VarTablePtr& vars);

Poly act_on_poly(const GroupElem& w, const Poly& p);
RatFunc act_on_ratfunc(const GroupElem& w, const RatFunc& f);

/// <alpha, x> as a canonical linear form plus the scale it was divided by.
std::pair<LinearForm, mpq_class> root_form(const RootSystem& rs, const VarTablePtr& vars,
                                           const Vec& alpha);

/// Applies (1 - sigma_alpha)/<alpha,.> to a polynomial; exact by construction.
Poly reflection_difference_quotient(const RootSystem& rs, const VarTablePtr& vars,
                                    const Vec& alpha, const Poly& p);

/// D_a p = d_a p - sum_{alpha in R+} c_alpha <alpha,a> (1-sigma_alpha)p / <alpha,x>.
/// The result is again a polynomial; its degree drops by exactly one.
Poly dunkl_apply(const RootSystem& rs, const MultiplicityAssignment& c, const Vec& a,
                 const Poly& p);

/// Element of the semidirect product of the group algebra with differential
/// operators: a finite map from group elements to normal-ordered components.
class DunklElem {
  public:
    using Comps = std::map<GroupElem, DiffOp>;

    DunklElem() = default;
    explicit DunklElem(VarTablePtr vars) : vars_(std::move(vars)) {}

    const Comps& comps() const { return comps_; }
    const VarTablePtr& vars() const { return vars_; }
    bool is_zero() const { return comps_.empty(); }

    void add_component(const GroupElem& g, const DiffOp& op);

    DunklElem operator+(const DunklElem& o) const;
    DunklElem operator-(const DunklElem& o) const;
    /// Semidirect product: (f.g)(h.w) = (f (g h g^{-1})).(g w).
    DunklElem operator*(const DunklElem& o) const;

    bool operator==(const DunklElem& o) const { return comps_ == o.comps_; }

    /// Drop group labels and sum the components.
    DiffOp res() const;

    std::string str() const;

  private:
    VarTablePtr vars_;
    Comps comps_;
};

/// The Dunkl operator as a group-algebra element.
DunklElem dunkl_element(const RootSystem& rs, const MultiplicityAssignment& c, const Vec& a);

/// Delta - sum_alpha (c_alpha <alpha,alpha>/<alpha,x>) d_{alpha^vee}.
DiffOp restricted_square_target(const RootSystem& rs, const MultiplicityAssignment& c);

/// res(sum_j D_{e_j}^2) computed in the group algebra.
DiffOp restricted_square(const RootSystem& rs, const MultiplicityAssignment& c);

/// Delta - sum_alpha c_alpha (c_alpha + 1) <alpha,alpha>/<alpha,x>^2.
DiffOp spectral_target(const RootSystem& rs, const MultiplicityAssignment& c);

/// The gauge-shifted restricted square: every derivative d_a is replaced by
/// d_a + sum_alpha c_alpha <alpha,a>/<alpha,x> before assembling the operator.
DiffOp gauge_shifted_square(const RootSystem& rs, const MultiplicityAssignment& c);

/// W-invariant generators used by the restriction identity: power sums
/// sum_i x_i^m for A-type (m = 2..max), even power sums for B/C-type.
std::vector<Poly> invariant_generators(const RootSystem& rs, std::uint32_t max_degree);

/// True iff p is fixed by all simple reflections.
bool is_invariant(const RootSystem& rs, const Poly& p);

/// All monomials over the ambient variables with 1 <= degree <= max_degree.
std::vector<Poly> monomial_basis(const VarTablePtr& vars, std::uint32_t max_degree);

/// Fibers of rotations: group element w = sigma_a sigma_b (a != b positive)
/// mapped to the list of ordered positive-root index pairs producing it.
std::map<GroupElem, std::vector<std::pair<std::size_t, std::size_t>>> rotation_fibers(
    const RootSystem& rs);

} // namespace cmlax
