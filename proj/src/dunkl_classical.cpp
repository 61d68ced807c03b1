#include "cmlax/dunkl_classical.hpp"

#include <sstream>

namespace cmlax {

void ClassicalDunklElem::add_component(const GroupElem& g, const RatFunc& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = comps_.emplace(g, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

ClassicalDunklElem ClassicalDunklElem::operator+(const ClassicalDunklElem& o) const {
    ClassicalDunklElem r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    for (const auto& [g, f] : o.comps_) r.add_component(g, f);
    return r;
}

ClassicalDunklElem ClassicalDunklElem::operator-(const ClassicalDunklElem& o) const {
    ClassicalDunklElem r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    for (const auto& [g, f] : o.comps_) r.add_component(g, -f);
    return r;
}

ClassicalDunklElem ClassicalDunklElem::operator*(const ClassicalDunklElem& o) const {
    ClassicalDunklElem r(vars_ ? vars_ : o.vars_);
    for (const auto& [g, a] : comps_)
        for (const auto& [w, b] : o.comps_) r.add_component(g * w, a * act_on_ratfunc(g, b));
    return r;
}

RatFunc ClassicalDunklElem::res() const {
    RatFunc s{Poly(vars_)};
    for (const auto& [g, f] : comps_) s += f;
    return s;
}

std::string ClassicalDunklElem::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    std::size_t label = 0;
    for (const auto& [g, f] : comps_) {
        if (!first) out << " + ";
        first = false;
        out << (g.is_identity() ? "[id]" : "[w" + std::to_string(label) + "]");
        out << "(" << f.str() << ")";
        ++label;
    }
    return out.str();
}

namespace {

RatFunc root_form_power(const RootSystem& rs, const VarTablePtr& vars, const Vec& alpha,
                        int power, const ParamScalar& c) {
    std::vector<mpq_class> coeffs(vars->size(), 0);
    for (std::size_t j = 0; j < rs.ambient_dim; ++j) coeffs[j] = alpha[j];
    return linear_power(vars, coeffs, power, c);
}

} // namespace

ClassicalDunklElem classical_dunkl(const RootSystem& rs, const MultiplicityAssignment& c,
                                   const Vec& a) {
    std::size_t d = rs.ambient_dim;
    VarTablePtr vars = cotangent_vars(d);
    ClassicalDunklElem elem(vars);

    Poly pa(vars);
    for (std::size_t j = 0; j < d; ++j) {
        if (a[j] == 0) continue;
        pa += Poly::variable(vars, d + j) * ParamScalar(GaussianRational(a[j]));
    }
    elem.add_component(GroupElem::identity(d), RatFunc(pa));

    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        mpq_class pairing = dot(alpha, a);
        if (pairing == 0) continue;
        RatFunc coeff =
            root_form_power(rs, vars, alpha, -1, c.of_root(rs, idx) * GaussianRational(pairing));
        elem.add_component(GroupElem::identity(d), -coeff);
        elem.add_component(GroupElem::reflection(alpha), coeff);
    }
    return elem;
}

ClassicalDunklElem classical_poisson_bracket(const ClassicalDunklElem& a,
                                             const ClassicalDunklElem& b) {
    ClassicalDunklElem r(a.vars() ? a.vars() : b.vars());
    for (const auto& [g, fa] : a.comps())
        for (const auto& [w, fb] : b.comps()) r.add_component(g * w, poisson_bracket(fa, fb));
    return r;
}

RatFunc classical_restricted_target(const RootSystem& rs, const MultiplicityAssignment& c) {
    std::size_t d = rs.ambient_dim;
    VarTablePtr vars = cotangent_vars(d);
    Poly kinetic(vars);
    for (std::size_t j = 0; j < d; ++j) kinetic += Poly::variable(vars, d + j, 2);
    RatFunc out{kinetic};
    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        mpq_class nn = dot(alpha, alpha);
        Vec cv = coroot(alpha);
        Poly p_cv(vars);
        for (std::size_t j = 0; j < d; ++j) {
            if (cv[j] == 0) continue;
            p_cv += Poly::variable(vars, d + j) * ParamScalar(GaussianRational(cv[j]));
        }
        RatFunc coeff =
            root_form_power(rs, vars, alpha, -1, c.of_root(rs, idx) * GaussianRational(nn));
        out -= coeff * RatFunc(p_cv);
    }
    return out;
}

RatFunc classical_restricted_square(const RootSystem& rs, const MultiplicityAssignment& c) {
    ClassicalDunklElem total;
    for (std::size_t j = 0; j < rs.ambient_dim; ++j) {
        Vec e(rs.ambient_dim, 0);
        e[j] = 1;
        ClassicalDunklElem d = classical_dunkl(rs, c, e);
        total = total + d * d;
    }
    return total.res();
}

RatFunc classical_spectral_target(const RootSystem& rs, const MultiplicityAssignment& c) {
    std::size_t d = rs.ambient_dim;
    VarTablePtr vars = cotangent_vars(d);
    Poly kinetic(vars);
    for (std::size_t j = 0; j < d; ++j) kinetic += Poly::variable(vars, d + j, 2);
    RatFunc out{kinetic};
    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        mpq_class nn = dot(alpha, alpha);
        const ParamScalar& ca = c.of_root(rs, idx);
        out -= root_form_power(rs, vars, alpha, -2, ca * ca * GaussianRational(nn));
    }
    return out;
}

RatFunc theta_substitute(const RootSystem& rs, const MultiplicityAssignment& c, const RatFunc& f) {
    std::size_t d = rs.ambient_dim;
    const VarTablePtr& vars = f.vars();
    if (vars->size() != 2 * d || vars->position_count != d)
        throw InvalidArgument("theta_substitute: not a cotangent universe");

    // p_j -> p_j + sum_alpha c_alpha alpha_j / <alpha,x>
    std::vector<RatFunc> momentum_images(d, RatFunc{Poly(vars)});
    for (std::size_t j = 0; j < d; ++j) {
        RatFunc img{Poly::variable(vars, d + j)};
        for (auto idx : rs.positive) {
            const Vec& alpha = rs.roots[idx];
            if (alpha[j] == 0) continue;
            img += root_form_power(rs, vars, alpha, -1,
                                   c.of_root(rs, idx) * GaussianRational(alpha[j]));
        }
        momentum_images[j] = std::move(img);
    }

    RatFunc out{Poly(vars)};
    for (const auto& [e, coeff] : f.num().terms()) {
        Exp xpart = e;
        for (std::size_t j = 0; j < d; ++j) xpart[d + j] = 0;
        RatFunc term{Poly::monomial(vars, xpart, coeff)};
        for (std::size_t j = 0; j < d; ++j)
            for (std::uint32_t t = 0; t < e[d + j]; ++t) term *= momentum_images[j];
        out += term;
    }
    for (const auto& [form, power] : f.den())
        out *= RatFunc::form_power(vars, form, -power, ParamScalar(1));
    return out;
}

} // namespace cmlax
