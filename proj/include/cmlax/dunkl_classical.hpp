#pragma once

#include "cmlax/dunkl.hpp"
#include "cmlax/phase.hpp"

namespace cmlax {

/// Element of the group algebra over phase-space functions on T*(V): a finite
/// map from group elements to rational functions in (x_1..x_d, p_1..p_d) with
/// position-only denominators.
class ClassicalDunklElem {
  public:
    using Comps = std::map<GroupElem, RatFunc>;

    ClassicalDunklElem() = default;
    explicit ClassicalDunklElem(VarTablePtr vars) : vars_(std::move(vars)) {}

    const Comps& comps() const { return comps_; }
    const VarTablePtr& vars() const { return vars_; }
    bool is_zero() const { return comps_.empty(); }

    void add_component(const GroupElem& g, const RatFunc& f);

    ClassicalDunklElem operator+(const ClassicalDunklElem& o) const;
    ClassicalDunklElem operator-(const ClassicalDunklElem& o) const;
    /// Semidirect product: the left label acts on the right component.
    ClassicalDunklElem operator*(const ClassicalDunklElem& o) const;

    bool operator==(const ClassicalDunklElem& o) const { return comps_ == o.comps_; }

    /// Drop group labels and sum components.
    RatFunc res() const;

    std::string str() const;

  private:
    VarTablePtr vars_;
    Comps comps_;
};

/// D^cl_a = p_a - sum_{alpha in R+} c_alpha <alpha,a>/<alpha,x> (1 - sigma_alpha).
ClassicalDunklElem classical_dunkl(const RootSystem& rs, const MultiplicityAssignment& c,
                                   const Vec& a);

/// Componentwise Poisson bracket with group labels composed multiplicatively
/// and treated as constants under differentiation.
ClassicalDunklElem classical_poisson_bracket(const ClassicalDunklElem& a,
                                             const ClassicalDunklElem& b);

/// sum_j p_j^2 - sum_alpha c_alpha <alpha,alpha>/<alpha,x> p_{alpha^vee}.
RatFunc classical_restricted_target(const RootSystem& rs, const MultiplicityAssignment& c);

/// res^cl(sum_j (D^cl_{e_j})^2).
RatFunc classical_restricted_square(const RootSystem& rs, const MultiplicityAssignment& c);

/// sum_j p_j^2 - sum_alpha c_alpha^2 <alpha,alpha>/<alpha,x>^2.
RatFunc classical_spectral_target(const RootSystem& rs, const MultiplicityAssignment& c);

/// The gauge substitution p_a -> p_a + sum_alpha c_alpha <alpha,a>/<alpha,x>
/// applied to a phase-space function (positions fixed).
RatFunc theta_substitute(const RootSystem& rs, const MultiplicityAssignment& c, const RatFunc& f);

} // namespace cmlax
