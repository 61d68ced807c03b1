#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmlax/scalar.hpp"

namespace cmlax {

/// Immutable, shared list of variable names. Variables in [0, position_count)
/// are position-type; any remaining ones are momenta and may never appear in
/// a denominator form.
struct VarTable {
    std::vector<std::string> names;
    std::size_t position_count = 0;

    std::size_t size() const { return names.size(); }
    std::size_t index_of(const std::string& name) const;
    bool is_momentum(std::size_t v) const { return v >= position_count; }
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// q_1..q_n, p_1..p_n.
VarTablePtr phase_vars(std::size_t n);
/// x_1..x_d (all positions).
VarTablePtr ambient_vars(std::size_t d);
/// x_1..x_d, p_1..p_d.
VarTablePtr cotangent_vars(std::size_t d);

/// Merge two variable universes by name. Returns the merged table plus the
/// index of every old variable in the merged table.
struct VarMerge {
    VarTablePtr table;
    std::vector<std::size_t> map_a;
    std::vector<std::size_t> map_b;
    bool trivial_a = false;
    bool trivial_b = false;
};
VarMerge unify_vars(const VarTablePtr& a, const VarTablePtr& b);

using Exp = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exp& e);

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically (so x1 beats x2 at equal degree). Fixed globally so that
/// serialized forms are reproducible.
struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const;
};

class LinearForm;

/// Sparse multivariate polynomial over ParamScalar coefficients.
/// The zero polynomial is the empty term map.
class Poly {
  public:
    using Terms = std::map<Exp, ParamScalar, GradedLexLess>;

    Poly() = default;
    explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static Poly constant(VarTablePtr vars, ParamScalar c);
    static Poly variable(VarTablePtr vars, std::size_t index, std::uint32_t power = 1);
    static Poly monomial(VarTablePtr vars, Exp e, ParamScalar c);

    const VarTablePtr& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term coefficient (the whole value when is_constant()).
    ParamScalar constant_part() const;
    std::uint64_t degree() const;

    void add_term(const Exp& e, const ParamScalar& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const ParamScalar& c) const;
    Poly operator/(const GaussianRational& c) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly partial_derivative(std::size_t var) const;

    /// Rewrite over a larger variable table; var_map[i] is the new index of
    /// old variable i.
    Poly relabeled(const VarTablePtr& table, const std::vector<std::size_t>& var_map) const;

    /// Substitute each variable by a degree-<=1 polynomial (same table).
    /// images[v] gives (constant, linear coefficients) of the image of x_v.
    Poly substituted(const std::vector<Poly>& images) const;

    std::string str() const;

    friend class LinearForm;

  private:
    VarTablePtr vars_;
    Terms terms_;
};

inline Poly operator*(const ParamScalar& c, const Poly& p) { return p * c; }

/// Canonicalized homogeneous linear form: integer coefficients, content 1,
/// first nonzero coefficient positive. Used as a denominator key.
class LinearForm {
  public:
    LinearForm() = default;

    /// Canonicalize rational coefficients. Returns the form together with the
    /// rational scale s such that the input form equals s * canonical.
    static std::pair<LinearForm, mpq_class> canonicalize(const std::vector<mpq_class>& coeff);

    const std::vector<mpz_class>& coeff() const { return coeff_; }
    bool is_zero() const;

    /// The form as a degree-1 polynomial over the given table (sizes must match).
    Poly as_poly(const VarTablePtr& vars) const;

    /// Coefficient of variable v as an exact rational.
    mpq_class coeff_q(std::size_t v) const { return mpq_class(coeff_[v]); }

    /// Index of the first variable with a nonzero coefficient.
    std::size_t pivot() const;

    /// Pad with zero coefficients to a larger universe.
    LinearForm relabeled(std::size_t new_size, const std::vector<std::size_t>& var_map) const;

    bool operator==(const LinearForm& o) const { return coeff_ == o.coeff_; }
    bool operator<(const LinearForm& o) const;

    std::string str(const VarTablePtr& vars) const;

  private:
    std::vector<mpz_class> coeff_;
};

/// Exact quotient p / f. Throws NotDivisible if f does not divide p.
Poly exact_divide(const Poly& p, const LinearForm& f);

/// Quotient if f divides p exactly, nullopt otherwise.
std::optional<Poly> try_exact_divide(const Poly& p, const LinearForm& f);

/// Cheap one-sided divisibility filter: true means f certainly does not
/// divide p (p is nonzero at a sample point of the hyperplane f = 0); false
/// is inconclusive and the exact division must decide.
bool surely_not_divisible(const Poly& p, const LinearForm& f);

} // namespace cmlax
