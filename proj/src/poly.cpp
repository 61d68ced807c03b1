#include "cmlax/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cmlax {

std::size_t VarTable::index_of(const std::string& name) const {
    for (std::size_t j = 0; j < names.size(); ++j)
        if (names[j] == name) return j;
    throw InvalidArgument("unknown variable: " + name);
}

VarTablePtr phase_vars(std::size_t n) {
    auto t = std::make_shared<VarTable>();
    for (std::size_t j = 1; j <= n; ++j) t->names.push_back("q" + std::to_string(j));
    for (std::size_t j = 1; j <= n; ++j) t->names.push_back("p" + std::to_string(j));
    t->position_count = n;
    return t;
}

VarTablePtr ambient_vars(std::size_t d) {
    auto t = std::make_shared<VarTable>();
    for (std::size_t j = 1; j <= d; ++j) t->names.push_back("x" + std::to_string(j));
    t->position_count = d;
    return t;
}

VarTablePtr cotangent_vars(std::size_t d) {
    auto t = std::make_shared<VarTable>();
    for (std::size_t j = 1; j <= d; ++j) t->names.push_back("x" + std::to_string(j));
    for (std::size_t j = 1; j <= d; ++j) t->names.push_back("p" + std::to_string(j));
    t->position_count = d;
    return t;
}

VarMerge unify_vars(const VarTablePtr& a, const VarTablePtr& b) {
    VarMerge m;
    if (a == b || (a && b && a->names == b->names && a->position_count == b->position_count)) {
        m.table = a;
        m.trivial_a = m.trivial_b = true;
        return m;
    }
    if (!a) { m.table = b; m.trivial_a = m.trivial_b = true; return m; }
    if (!b) { m.table = a; m.trivial_a = m.trivial_b = true; return m; }

    // Positions of both tables first, then momenta, each preserving a's order
    // and appending b's unseen names.
    auto merged = std::make_shared<VarTable>();
    auto append_block = [&](bool momenta) {
        for (std::size_t j = 0; j < a->size(); ++j)
            if (a->is_momentum(j) == momenta) merged->names.push_back(a->names[j]);
        for (std::size_t j = 0; j < b->size(); ++j)
            if (b->is_momentum(j) == momenta &&
                std::find(merged->names.begin(), merged->names.end(), b->names[j]) == merged->names.end())
                merged->names.push_back(b->names[j]);
    };
    append_block(false);
    merged->position_count = merged->names.size();
    append_block(true);

    m.table = merged;
    m.map_a.resize(a->size());
    m.map_b.resize(b->size());
    for (std::size_t j = 0; j < a->size(); ++j) m.map_a[j] = merged->index_of(a->names[j]);
    for (std::size_t j = 0; j < b->size(); ++j) m.map_b[j] = merged->index_of(b->names[j]);
    m.trivial_a = true;
    for (std::size_t j = 0; j < a->size(); ++j)
        if (m.map_a[j] != j) { m.trivial_a = false; break; }
    m.trivial_a = m.trivial_a && merged->size() == a->size();
    m.trivial_b = false;
    return m;
}

std::uint64_t total_degree(const Exp& e) {
    std::uint64_t d = 0;
    for (auto v : e) d += v;
    return d;
}

bool GradedLexLess::operator()(const Exp& a, const Exp& b) const {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // lex: earlier variable with larger exponent wins
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t ea = j < a.size() ? a[j] : 0;
        std::uint32_t eb = j < b.size() ? b[j] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Poly Poly::constant(VarTablePtr vars, ParamScalar c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exp(p.vars_->size(), 0), std::move(c));
    return p;
}

Poly Poly::variable(VarTablePtr vars, std::size_t index, std::uint32_t power) {
    Poly p(std::move(vars));
    Exp e(p.vars_->size(), 0);
    e[index] = power;
    if (power == 0) e[index] = 0;
    p.terms_.emplace(std::move(e), ParamScalar(1));
    return p;
}

Poly Poly::monomial(VarTablePtr vars, Exp e, ParamScalar c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

ParamScalar Poly::constant_part() const {
    if (terms_.empty()) return {};
    auto it = terms_.begin();
    if (total_degree(it->first) == 0) return it->second;
    return {};
}

std::uint64_t Poly::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

void Poly::add_term(const Exp& e, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    auto m = unify_vars(vars_, o.vars_);
    if (m.trivial_a && m.trivial_b) {
        Poly r = *this;
        r.vars_ = m.table;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Poly a = relabeled(m.table, m.map_a);
    Poly b = o.relabeled(m.table, m.map_b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    auto m = unify_vars(vars_, o.vars_);
    const Poly& a = (m.trivial_a) ? *this : relabeled(m.table, m.map_a);
    const Poly b = (m.trivial_b) ? o : o.relabeled(m.table, m.map_b);
    Poly r(m.table);
    std::size_t n = m.table->size();
    Exp e(n, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t j = 0; j < n; ++j) e[j] = ea[j] + eb[j];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const ParamScalar& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

Poly Poly::operator/(const GaussianRational& c) const {
    Poly r(vars_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v / c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (vars_ == o.vars_ || (vars_ && o.vars_ && vars_->names == o.vars_->names))
        return terms_ == o.terms_;
    return (*this - o).is_zero();
}

Poly Poly::partial_derivative(std::size_t var) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        r.add_term(d, c * GaussianRational(long(e[var])));
    }
    return r;
}

Poly Poly::relabeled(const VarTablePtr& table, const std::vector<std::size_t>& var_map) const {
    Poly r(table);
    std::size_t n = table->size();
    for (const auto& [e, c] : terms_) {
        Exp ne(n, 0);
        for (std::size_t j = 0; j < e.size(); ++j) ne[var_map[j]] = e[j];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

Poly Poly::substituted(const std::vector<Poly>& images) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(vars_, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t j = 0; j < e[v]; ++j) term *= images[v];
        r += term;
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::ostringstream t;
        std::string cs = c.str();
        bool needs_parens = cs.find(" + ") != std::string::npos;
        bool has_vars = total_degree(e) > 0;
        if (!has_vars) {
            t << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs == "1") {
                // bare monomial
            } else if (cs == "-1") {
                t << "-";
            } else {
                t << (needs_parens ? "(" + cs + ")" : cs) << "*";
            }
            bool firstv = true;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                if (!firstv) t << "*";
                firstv = false;
                t << vars_->names[v];
                if (e[v] > 1) t << "^" << e[v];
            }
        }
        std::string ts = t.str();
        if (first) {
            out << ts;
        } else if (!ts.empty() && ts[0] == '-') {
            out << " - " << ts.substr(1);
        } else {
            out << " + " << ts;
        }
        first = false;
    }
    return out.str();
}

std::pair<LinearForm, mpq_class> LinearForm::canonicalize(const std::vector<mpq_class>& coeff) {
    mpz_class den_lcm = 1;
    for (const auto& c : coeff) {
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> ints(coeff.size());
    mpz_class content = 0;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
        mpq_class scaled = coeff[j] * den_lcm;
        ints[j] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[j].get_mpz_t());
    }
    if (content == 0) throw InvalidArgument("LinearForm: zero form");
    int sign = 0;
    for (const auto& c : ints) {
        if (c != 0) { sign = sgn(c) > 0 ? 1 : -1; break; }
    }
    mpz_class divisor = content * sign;
    LinearForm f;
    f.coeff_.resize(ints.size());
    for (std::size_t j = 0; j < ints.size(); ++j) f.coeff_[j] = ints[j] / divisor;
    // input = (content*sign/den_lcm) * canonical
    mpq_class scale(divisor, den_lcm);
    scale.canonicalize();
    return {std::move(f), std::move(scale)};
}

bool LinearForm::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

Poly LinearForm::as_poly(const VarTablePtr& vars) const {
    Poly p(vars);
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
        if (coeff_[j] == 0) continue;
        Exp e(vars->size(), 0);
        e[j] = 1;
        p.add_term(e, ParamScalar(GaussianRational(mpq_class(coeff_[j]))));
    }
    return p;
}

std::size_t LinearForm::pivot() const {
    for (std::size_t j = 0; j < coeff_.size(); ++j)
        if (coeff_[j] != 0) return j;
    throw InvalidArgument("LinearForm: zero form has no pivot");
}

LinearForm LinearForm::relabeled(std::size_t new_size, const std::vector<std::size_t>& var_map) const {
    LinearForm f;
    f.coeff_.assign(new_size, mpz_class(0));
    for (std::size_t j = 0; j < coeff_.size(); ++j) f.coeff_[var_map[j]] = coeff_[j];
    return f;
}

bool LinearForm::operator<(const LinearForm& o) const {
    if (coeff_.size() != o.coeff_.size()) return coeff_.size() < o.coeff_.size();
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
        int c = cmp(coeff_[j], o.coeff_[j]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string LinearForm::str(const VarTablePtr& vars) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
        if (coeff_[j] == 0) continue;
        if (first) {
            if (coeff_[j] == -1) out << "-";
            else if (coeff_[j] != 1) out << coeff_[j] << "*";
        } else {
            out << (coeff_[j] > 0 ? " + " : " - ");
            mpz_class a = abs(coeff_[j]);
            if (a != 1) out << a << "*";
        }
        out << vars->names[j];
        first = false;
    }
    return out.str();
}

namespace {

mpq_class sample_value(std::size_t var) {
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
    // collisions past the table only weaken the filter, never its soundness
    return primes[var % 16] + long(var / 16);
}

GaussianRational eval_params(const ParamScalar& c) {
    static const long seed[kNumParams] = {2, 3, 5};
    GaussianRational out;
    for (const auto& [e, g] : c.terms()) {
        mpq_class mono = 1;
        for (std::size_t i = 0; i < kNumParams; ++i)
            for (std::uint32_t t = 0; t < e[i]; ++t) mono *= seed[i];
        out += g * GaussianRational(mono);
    }
    return out;
}

} // namespace

bool surely_not_divisible(const Poly& p, const LinearForm& f) {
    if (p.is_zero()) return false;
    std::size_t n = f.coeff().size();
    std::size_t pivot = f.pivot();

    // a rational point on the hyperplane f = 0
    std::vector<mpq_class> pt(n, 0);
    mpq_class acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        pt[j] = sample_value(j);
        acc += mpq_class(f.coeff()[j]) * pt[j];
    }
    pt[pivot] = -acc / mpq_class(f.coeff()[pivot]);

    std::vector<std::vector<mpq_class>> powers(n, {mpq_class(1)});
    auto power_of = [&](std::size_t j, std::uint32_t e) -> const mpq_class& {
        auto& cache = powers[j];
        while (cache.size() <= e) cache.push_back(cache.back() * pt[j]);
        return cache[e];
    };

    GaussianRational total;
    for (const auto& [e, c] : p.terms()) {
        mpq_class mono = 1;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0) mono *= power_of(j, e[j]);
        total += eval_params(c) * GaussianRational(mono);
    }
    return !total.is_zero();
}

std::optional<Poly> try_exact_divide(const Poly& p, const LinearForm& f) {
    if (f.is_zero()) throw InvalidArgument("exact_divide: zero form");
    if (p.is_zero()) return Poly(p.vars());
    if (f.coeff().size() != p.vars()->size())
        throw InvalidArgument("exact_divide: form/variable size mismatch");

    std::size_t pv = f.pivot();
    GaussianRational lead{mpq_class(f.coeff()[pv])};

    // Standard single-divisor division: the leading term of f under graded
    // lex is c*x_pivot, so p is divisible by f iff the remainder stays empty.
    Poly r = p;
    Poly q(p.vars());
    while (!r.is_zero()) {
        auto it = r.terms().rbegin();
        const Exp& e = it->first;
        if (e[pv] == 0) return std::nullopt;
        Exp qe = e;
        qe[pv] -= 1;
        ParamScalar qc = it->second / lead;
        q.add_term(qe, qc);
        // r -= (qc * x^qe) * f
        for (std::size_t j = 0; j < f.coeff().size(); ++j) {
            if (f.coeff()[j] == 0) continue;
            Exp te = qe;
            te[j] += 1;
            r.add_term(te, -(qc * GaussianRational(mpq_class(f.coeff()[j]))));
        }
    }
    return q;
}

Poly exact_divide(const Poly& p, const LinearForm& f) {
    auto q = try_exact_divide(p, f);
    if (!q) throw NotDivisible("polynomial is not divisible by " + f.str(p.vars()));
    return *q;
}

} // namespace cmlax
