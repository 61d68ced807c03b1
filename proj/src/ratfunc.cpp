#include "cmlax/ratfunc.hpp"

#include <sstream>

namespace cmlax {

namespace {

void check_positions_only(const VarTablePtr& vars, const LinearForm& f) {
    for (std::size_t j = 0; j < f.coeff().size(); ++j)
        if (f.coeff()[j] != 0 && vars->is_momentum(j))
            throw InvalidArgument("denominator form touches a momentum variable");
}

Poly den_product(const VarTablePtr& vars, const RatFunc::Den& den) {
    Poly p = Poly::constant(vars, ParamScalar(1));
    for (const auto& [f, m] : den)
        for (int j = 0; j < m; ++j) p *= f.as_poly(vars);
    return p;
}

} // namespace

RatFunc::RatFunc(Poly num, Den den) : num_(std::move(num)), den_(std::move(den)) {
    for (const auto& [f, m] : den_) {
        if (m <= 0) throw InvalidArgument("RatFunc: non-positive denominator power");
        check_positions_only(num_.vars(), f);
    }
    reduce();
}

RatFunc RatFunc::form_power(VarTablePtr vars, const LinearForm& f, int power, ParamScalar c) {
    if (power >= 0) {
        Poly p = Poly::constant(vars, std::move(c));
        for (int j = 0; j < power; ++j) p *= f.as_poly(vars);
        return RatFunc(std::move(p));
    }
    Den den;
    den[f] = -power;
    return RatFunc(Poly::constant(std::move(vars), std::move(c)), std::move(den));
}

const Poly& RatFunc::as_poly() const {
    if (!den_.empty()) throw Error("RatFunc: not a polynomial");
    return num_;
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            if (surely_not_divisible(num_, it->first)) break;
            auto q = try_exact_divide(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    auto m = unify_vars(vars(), o.vars());
    const RatFunc& a = m.trivial_a ? *this : relabeled(m.table, m.map_a);
    const RatFunc b = m.trivial_b ? o : o.relabeled(m.table, m.map_b);

    // common denominator: per-form max power
    Den den = a.den_;
    for (const auto& [f, p] : b.den_) {
        auto [it, fresh] = den.emplace(f, p);
        if (!fresh) it->second = std::max(it->second, p);
    }
    Den extra_a = den, extra_b = den;
    for (const auto& [f, p] : a.den_) {
        auto& e = extra_a[f];
        e -= p;
        if (e == 0) extra_a.erase(f);
    }
    for (const auto& [f, p] : b.den_) {
        auto& e = extra_b[f];
        e -= p;
        if (e == 0) extra_b.erase(f);
    }
    Poly num = a.num_ * den_product(m.table, extra_a) + b.num_ * den_product(m.table, extra_b);
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.reduce();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    auto m = unify_vars(vars(), o.vars());
    const RatFunc& a = m.trivial_a ? *this : relabeled(m.table, m.map_a);
    const RatFunc b = m.trivial_b ? o : o.relabeled(m.table, m.map_b);
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [f, p] : b.den_) r.den_[f] += p;
    r.reduce();
    return r;
}

RatFunc RatFunc::operator*(const ParamScalar& c) const {
    RatFunc r;
    r.num_ = num_ * c;
    if (!r.num_.is_zero()) r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator/(const GaussianRational& c) const {
    RatFunc r;
    r.num_ = num_ / c;
    r.den_ = den_;
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    // Reduced canonical forms are unique; still fall back to
    // cross-multiplication when the variable universes differ.
    if (vars() == o.vars() || (vars() && o.vars() && vars()->names == o.vars()->names))
        return den_ == o.den_ && num_ == o.num_;
    return (*this - o).is_zero();
}

bool RatFunc::operator<(const RatFunc& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_.terms() < o.num_.terms();
}

RatFunc RatFunc::partial_derivative(std::size_t var) const {
    if (num_.is_zero()) return *this;
    // Only forms actually containing the variable take part in the quotient
    // rule; the others ride along untouched:
    //   d/dv [N / (A B)] = [N' prod_{f in A} f
    //                       - N sum_{f in A} m_f f_v prod_{g in A, g != f} g]
    //                      / (A^{+1} B)
    // where A = forms with f_v != 0 and B = the rest.
    const VarTablePtr& v = vars();
    Poly dnum = num_.partial_derivative(var);
    std::vector<std::pair<const LinearForm*, int>> active;
    for (const auto& [f, m] : den_)
        if (f.coeff_q(var) != 0) active.emplace_back(&f, m);
    if (active.empty()) {
        RatFunc r;
        r.num_ = std::move(dnum);
        if (!r.num_.is_zero()) r.den_ = den_;
        r.reduce();
        return r;
    }

    Poly top(v);
    {
        Poly prod_active = dnum;
        for (const auto& [f, m] : active) prod_active *= f->as_poly(v);
        top = std::move(prod_active);
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
        Poly others = num_;
        for (std::size_t j = 0; j < active.size(); ++j)
            if (j != i) others *= active[j].first->as_poly(v);
        mpq_class dv = active[i].first->coeff_q(var);
        top -= others * ParamScalar(GaussianRational(mpq_class(active[i].second) * dv));
    }
    Den den = den_;
    for (const auto& [f, m] : active) den[*f] = m + 1;
    RatFunc r;
    r.num_ = std::move(top);
    r.den_ = std::move(den);
    r.reduce();
    return r;
}

RatFunc RatFunc::relabeled(const VarTablePtr& table, const std::vector<std::size_t>& var_map) const {
    RatFunc r;
    r.num_ = num_.relabeled(table, var_map);
    for (const auto& [f, m] : den_) r.den_.emplace(f.relabeled(table->size(), var_map), m);
    return r;
}

RatFunc RatFunc::substituted_positions(const std::vector<Poly>& inv_images) const {
    Poly num = num_.substituted(inv_images);
    RatFunc r(std::move(num));
    const VarTablePtr& v = vars();
    for (const auto& [f, m] : den_) {
        std::vector<mpq_class> transformed(v->size(), 0);
        for (std::size_t j = 0; j < f.coeff().size(); ++j) {
            if (f.coeff()[j] == 0) continue;
            // form(image of x_j) contributes coeff_j * image_j
            const Poly& img = inv_images[j];
            for (const auto& [e, c] : img.terms()) {
                if (total_degree(e) != 1) throw InvalidArgument("substitution image is not linear");
                std::size_t target = 0;
                for (std::size_t t = 0; t < e.size(); ++t)
                    if (e[t] == 1) { target = t; break; }
                GaussianRational g = c.constant_part();
                if (!c.is_constant() || !g.is_real())
                    throw InvalidArgument("substitution image has non-rational coefficients");
                transformed[target] += mpq_class(f.coeff()[j]) * g.re;
            }
        }
        auto [canon, scale] = LinearForm::canonicalize(transformed);
        // 1/(s*canon)^m = s^{-m} / canon^m
        mpq_class s = 1;
        for (int j = 0; j < m; ++j) s *= scale;
        r = r * RatFunc::form_power(v, canon, -m, ParamScalar(GaussianRational(1 / s)));
    }
    return r;
}

std::string RatFunc::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream out;
    out << "(" << num_.str() << ")/(";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) out << "*";
        first = false;
        out << "(" << f.str(vars()) << ")";
        if (m > 1) out << "^" << m;
    }
    out << ")";
    return out.str();
}

RatFunc linear_power(const VarTablePtr& vars, const std::vector<mpq_class>& coeffs, int power,
                     const ParamScalar& c) {
    auto [form, scale] = LinearForm::canonicalize(coeffs);
    mpq_class s = 1;
    if (power >= 0)
        for (int j = 0; j < power; ++j) s *= scale;
    else
        for (int j = 0; j < -power; ++j) s /= scale;
    return RatFunc::form_power(vars, form, power, c * GaussianRational(s));
}

} // namespace cmlax
