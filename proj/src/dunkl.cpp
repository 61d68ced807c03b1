#include "cmlax/dunkl.hpp"

#include <sstream>

namespace cmlax {

MultiplicityAssignment MultiplicityAssignment::symbolic(const RootSystem& rs) {
    MultiplicityAssignment m;
    for (std::size_t c = 0; c < rs.num_classes; ++c)
        m.per_class.push_back(ParamScalar::multiplicity(c));
    return m;
}

MultiplicityAssignment MultiplicityAssignment::uniform(const RootSystem& rs, ParamScalar v) {
    MultiplicityAssignment m;
    m.per_class.assign(rs.num_classes, std::move(v));
    return m;
}

std::vector<Poly> action_images(const GroupElem& w, const VarTablePtr& vars) {
    std::size_t d = w.dim();
    if (vars->position_count != d || (vars->size() != d && vars->size() != 2 * d))
        throw InvalidArgument("action_images: table does not match group dimension");
    const Mat minv = w.inverse().matrix();
    std::vector<Poly> images;
    images.reserve(vars->size());
    for (std::size_t blk = 0; blk * d < vars->size(); ++blk) {
        for (std::size_t v = 0; v < d; ++v) {
            Poly img(vars);
            for (std::size_t i = 0; i < d; ++i) {
                if (minv.at(v, i) == 0) continue;
                Exp e(vars->size(), 0);
                e[blk * d + i] = 1;
                img.add_term(e, ParamScalar(GaussianRational(minv.at(v, i))));
            }
            images.push_back(std::move(img));
        }
    }
    return images;
}

Poly act_on_poly(const GroupElem& w, const Poly& p) {
    return p.substituted(action_images(w, p.vars()));
}

RatFunc act_on_ratfunc(const GroupElem& w, const RatFunc& f) {
    return f.substituted_positions(action_images(w, f.vars()));
}

std::pair<LinearForm, mpq_class> root_form(const RootSystem& rs, const VarTablePtr& vars,
                                           const Vec& alpha) {
    std::vector<mpq_class> coeffs(vars->size(), 0);
    for (std::size_t j = 0; j < rs.ambient_dim; ++j) coeffs[j] = alpha[j];
    return LinearForm::canonicalize(coeffs);
}

Poly reflection_difference_quotient(const RootSystem& rs, const VarTablePtr& vars,
                                    const Vec& alpha, const Poly& p) {
    GroupElem sigma = GroupElem::reflection(alpha);
    Poly diff = p - act_on_poly(sigma, p);
    if (diff.is_zero()) return diff;
    auto [form, scale] = root_form(rs, vars, alpha);
    return exact_divide(diff, form) / GaussianRational(scale);
}

Poly dunkl_apply(const RootSystem& rs, const MultiplicityAssignment& c, const Vec& a,
                 const Poly& p) {
    const VarTablePtr& vars = p.vars();
    Poly out(vars);
    for (std::size_t j = 0; j < rs.ambient_dim; ++j) {
        if (a[j] == 0) continue;
        out += p.partial_derivative(j) * ParamScalar(GaussianRational(a[j]));
    }
    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        mpq_class pairing = dot(alpha, a);
        if (pairing == 0) continue;
        Poly quot = reflection_difference_quotient(rs, vars, alpha, p);
        if (quot.is_zero()) continue;
        out -= quot * (c.of_root(rs, idx) * GaussianRational(pairing));
    }
    return out;
}

void DunklElem::add_component(const GroupElem& g, const DiffOp& op) {
    if (op.is_zero()) return;
    auto [it, fresh] = comps_.emplace(g, op);
    if (!fresh) {
        it->second += op;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

DunklElem DunklElem::operator+(const DunklElem& o) const {
    DunklElem r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    for (const auto& [g, op] : o.comps_) r.add_component(g, op);
    return r;
}

DunklElem DunklElem::operator-(const DunklElem& o) const {
    DunklElem r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    for (const auto& [g, op] : o.comps_) r.add_component(g, -op);
    return r;
}

DunklElem DunklElem::operator*(const DunklElem& o) const {
    DunklElem r(vars_ ? vars_ : o.vars_);
    for (const auto& [g, a] : comps_) {
        for (const auto& [w, b] : o.comps_) {
            r.add_component(g * w, a * b.conjugated(g));
        }
    }
    return r;
}

DiffOp DunklElem::res() const {
    DiffOp s(vars_);
    for (const auto& [g, op] : comps_) s += op;
    return s;
}

std::string DunklElem::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    std::size_t label = 0;
    for (const auto& [g, op] : comps_) {
        if (!first) out << " + ";
        first = false;
        out << (g.is_identity() ? "[id]" : "[w" + std::to_string(label) + "]");
        out << "(" << op.str() << ")";
        ++label;
    }
    return out.str();
}

DunklElem dunkl_element(const RootSystem& rs, const MultiplicityAssignment& c, const Vec& a) {
    VarTablePtr vars = ambient_vars(rs.ambient_dim);
    DunklElem elem(vars);
    elem.add_component(GroupElem::identity(rs.ambient_dim), DiffOp::directional(vars, a));
    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        mpq_class pairing = dot(alpha, a);
        if (pairing == 0) continue;
        auto [form, scale] = root_form(rs, vars, alpha);
        RatFunc coeff = RatFunc::form_power(vars, form, -1,
                                            c.of_root(rs, idx) * GaussianRational(pairing / scale));
        elem.add_component(GroupElem::identity(rs.ambient_dim), DiffOp::mul_op(-coeff));
        elem.add_component(GroupElem::reflection(alpha), DiffOp::mul_op(coeff));
    }
    return elem;
}

DiffOp restricted_square_target(const RootSystem& rs, const MultiplicityAssignment& c) {
    VarTablePtr vars = ambient_vars(rs.ambient_dim);
    DiffOp op = DiffOp::laplacian(vars);
    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        auto [form, scale] = root_form(rs, vars, alpha);
        mpq_class nn = dot(alpha, alpha);
        RatFunc coeff =
            RatFunc::form_power(vars, form, -1, c.of_root(rs, idx) * GaussianRational(nn / scale));
        op -= DiffOp::mul_op(coeff) * DiffOp::directional(vars, coroot(alpha));
    }
    return op;
}

DiffOp restricted_square(const RootSystem& rs, const MultiplicityAssignment& c) {
    DunklElem total;
    for (std::size_t j = 0; j < rs.ambient_dim; ++j) {
        Vec e(rs.ambient_dim, 0);
        e[j] = 1;
        DunklElem d = dunkl_element(rs, c, e);
        DunklElem sq = d * d;
        total = total + sq;
    }
    return total.res();
}

DiffOp spectral_target(const RootSystem& rs, const MultiplicityAssignment& c) {
    VarTablePtr vars = ambient_vars(rs.ambient_dim);
    DiffOp op = DiffOp::laplacian(vars);
    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        auto [form, scale] = root_form(rs, vars, alpha);
        mpq_class nn = dot(alpha, alpha);
        const ParamScalar& ca = c.of_root(rs, idx);
        ParamScalar strength = (ca * ca + ca) * GaussianRational(nn / (scale * scale));
        op -= DiffOp::mul_op(RatFunc::form_power(vars, form, -2, strength));
    }
    return op;
}

DiffOp gauge_shifted_square(const RootSystem& rs, const MultiplicityAssignment& c) {
    VarTablePtr vars = ambient_vars(rs.ambient_dim);
    std::size_t d = rs.ambient_dim;

    // shifted generators d_j + sum_alpha c_alpha <alpha,e_j>/<alpha,x>
    std::vector<DiffOp> shifted;
    shifted.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        DiffOp s = DiffOp::derivative(vars, j);
        for (auto idx : rs.positive) {
            const Vec& alpha = rs.roots[idx];
            if (alpha[j] == 0) continue;
            auto [form, scale] = root_form(rs, vars, alpha);
            s += DiffOp::mul_op(RatFunc::form_power(
                vars, form, -1, c.of_root(rs, idx) * GaussianRational(alpha[j] / scale)));
        }
        shifted.push_back(std::move(s));
    }

    DiffOp op(vars);
    for (std::size_t j = 0; j < d; ++j) op += shifted[j] * shifted[j];
    for (auto idx : rs.positive) {
        const Vec& alpha = rs.roots[idx];
        auto [form, scale] = root_form(rs, vars, alpha);
        mpq_class nn = dot(alpha, alpha);
        RatFunc coeff =
            RatFunc::form_power(vars, form, -1, c.of_root(rs, idx) * GaussianRational(nn / scale));
        Vec cv = coroot(alpha);
        DiffOp dir(vars);
        for (std::size_t j = 0; j < d; ++j) {
            if (cv[j] == 0) continue;
            dir += shifted[j] * ParamScalar(GaussianRational(cv[j]));
        }
        op -= DiffOp::mul_op(coeff) * dir;
    }
    return op;
}

std::vector<Poly> invariant_generators(const RootSystem& rs, std::uint32_t max_degree) {
    VarTablePtr vars = ambient_vars(rs.ambient_dim);
    std::vector<Poly> gens;
    std::uint32_t step = (rs.family == 'B' || rs.family == 'C') ? 2 : 1;
    std::uint32_t start = 2;
    for (std::uint32_t m = start; m <= max_degree; m += step) {
        Poly g(vars);
        for (std::size_t j = 0; j < rs.ambient_dim; ++j)
            g += Poly::variable(vars, j, m);
        gens.push_back(std::move(g));
    }
    return gens;
}

bool is_invariant(const RootSystem& rs, const Poly& p) {
    for (auto idx : rs.simple) {
        GroupElem sigma = GroupElem::reflection(rs.roots[idx]);
        if (!(act_on_poly(sigma, p) == p)) return false;
    }
    return true;
}

std::vector<Poly> monomial_basis(const VarTablePtr& vars, std::uint32_t max_degree) {
    std::vector<Poly> basis;
    std::size_t d = vars->size();
    Exp e(d, 0);
    auto emit = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
        if (pos + 1 == d) {
            for (std::uint32_t v = 0; v <= remaining; ++v) {
                e[pos] = v;
                if (total_degree(e) >= 1) basis.push_back(Poly::monomial(vars, e, ParamScalar(1)));
            }
            e[pos] = 0;
            return;
        }
        for (std::uint32_t v = 0; v <= remaining; ++v) {
            e[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        e[pos] = 0;
    };
    emit(emit, 0, max_degree);
    return basis;
}

std::map<GroupElem, std::vector<std::pair<std::size_t, std::size_t>>> rotation_fibers(
    const RootSystem& rs) {
    std::map<GroupElem, std::vector<std::pair<std::size_t, std::size_t>>> fibers;
    for (std::size_t a = 0; a < rs.positive.size(); ++a) {
        GroupElem sa = GroupElem::reflection(rs.roots[rs.positive[a]]);
        for (std::size_t b = 0; b < rs.positive.size(); ++b) {
            if (a == b) continue;
            GroupElem sb = GroupElem::reflection(rs.roots[rs.positive[b]]);
            fibers[sa * sb].emplace_back(rs.positive[a], rs.positive[b]);
        }
    }
    return fibers;
}

} // namespace cmlax
