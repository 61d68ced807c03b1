#pragma once

#include <map>
#include <string>

#include "cmlax/poly.hpp"

namespace cmlax {

/// Rational function: a sparse numerator polynomial over a factored
/// denominator (a multiset of canonical linear forms with positive powers).
/// Kept reduced: no denominator form divides the numerator, zero is 0/1.
/// Denominator forms may touch position variables only.
///
/// Reduced canonical form is unique, so structural equality decides
/// mathematical equality.
class RatFunc {
  public:
    using Den = std::map<LinearForm, int>;

    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)) {}
    RatFunc(Poly num, Den den);

    static RatFunc constant(VarTablePtr vars, ParamScalar c) {
        return RatFunc(Poly::constant(std::move(vars), std::move(c)));
    }
    /// c / f^power for a canonical linear form f.
    static RatFunc form_power(VarTablePtr vars, const LinearForm& f, int power, ParamScalar c);

    const Poly& num() const { return num_; }
    const Den& den() const { return den_; }
    const VarTablePtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    /// The numerator as a Poly; throws unless the denominator is trivial.
    const Poly& as_poly() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const ParamScalar& c) const;
    RatFunc operator/(const GaussianRational& c) const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const;

    RatFunc partial_derivative(std::size_t var) const;

    RatFunc relabeled(const VarTablePtr& table, const std::vector<std::size_t>& var_map) const;

    /// Apply an orthogonal change of variables to the position block:
    /// (w.f)(x) = f(w^{-1} x), with w given by its inverse action rows.
    /// `inv_images[v]` is the degree-1 polynomial image of variable v.
    RatFunc substituted_positions(const std::vector<Poly>& inv_images) const;

    std::string str() const;

  private:
    void reduce();
    Poly num_;
    Den den_;
};

inline RatFunc operator*(const ParamScalar& c, const RatFunc& f) { return f * c; }

/// num / prod(den) with both sides given as polynomials of degree <= 1 factors
/// is not supported in general; this helper builds 1/<form> style atoms from a
/// rational linear combination of variables.
/// Returns c * <coeffs,x>^power as a RatFunc (power may be negative).
RatFunc linear_power(const VarTablePtr& vars, const std::vector<mpq_class>& coeffs, int power,
                     const ParamScalar& c);

} // namespace cmlax
