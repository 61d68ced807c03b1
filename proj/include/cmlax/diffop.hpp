#pragma once

#include <map>
#include <string>

#include "cmlax/linalg.hpp"
#include "cmlax/ratfunc.hpp"

namespace cmlax {

/// Normal-ordered differential operator with rational-function coefficients:
/// a sum of terms f(x) * d^gamma with every multiplication operator standing
/// to the left of every derivative. Equality of normal forms decides operator
/// equality, so the zero operator is exactly the empty term map.
class DiffOp {
  public:
    using Terms = std::map<Exp, RatFunc>;

    DiffOp() = default;
    explicit DiffOp(VarTablePtr vars) : vars_(std::move(vars)) {}

    /// Pure multiplication operator.
    static DiffOp mul_op(RatFunc f);
    /// d/dx_j.
    static DiffOp derivative(VarTablePtr vars, std::size_t j);
    /// Quantum momentum operator -i d/dx_j.
    static DiffOp momentum(VarTablePtr vars, std::size_t j);
    /// Directional derivative along an exact rational vector.
    static DiffOp directional(VarTablePtr vars, const Vec& a);
    static DiffOp laplacian(VarTablePtr vars);

    const VarTablePtr& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Highest derivative order present.
    std::uint64_t order() const;

    void add_term(const Exp& gamma, const RatFunc& coeff);

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    /// Normal-ordered composition (this applied after o... i.e. (*this) o o).
    DiffOp operator*(const DiffOp& o) const;
    DiffOp operator*(const ParamScalar& c) const;
    DiffOp& operator+=(const DiffOp& o) { *this = *this + o; return *this; }
    DiffOp& operator-=(const DiffOp& o) { *this = *this - o; return *this; }

    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    /// Apply to a polynomial; the result must again be polynomial
    /// (i.e. denominators must cancel), otherwise throws NotDivisible.
    Poly apply_poly(const Poly& p) const;

    /// Conjugation w (.) w^{-1} by an orthogonal transformation: coefficients
    /// get w-translated and d_a becomes d_{w a}.
    DiffOp conjugated(const GroupElem& w) const;

    std::string str() const;

  private:
    VarTablePtr vars_;
    Terms terms_;
};

inline DiffOp operator*(const ParamScalar& c, const DiffOp& d) { return d * c; }

DiffOp commutator(const DiffOp& a, const DiffOp& b);

} // namespace cmlax
