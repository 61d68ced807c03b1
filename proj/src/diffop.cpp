#include "cmlax/diffop.hpp"

#include <functional>
#include <sstream>

namespace cmlax {

DiffOp DiffOp::mul_op(RatFunc f) {
    DiffOp d(f.vars());
    if (!f.is_zero()) d.terms_.emplace(Exp(d.vars_->size(), 0), std::move(f));
    return d;
}

DiffOp DiffOp::derivative(VarTablePtr vars, std::size_t j) {
    DiffOp d(vars);
    Exp e(vars->size(), 0);
    e[j] = 1;
    d.terms_.emplace(std::move(e), RatFunc::constant(vars, ParamScalar(1)));
    return d;
}

DiffOp DiffOp::momentum(VarTablePtr vars, std::size_t j) {
    DiffOp d(vars);
    Exp e(vars->size(), 0);
    e[j] = 1;
    d.terms_.emplace(std::move(e), RatFunc::constant(vars, ParamScalar(-GaussianRational::i())));
    return d;
}

DiffOp DiffOp::directional(VarTablePtr vars, const Vec& a) {
    DiffOp d(vars);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        Exp e(vars->size(), 0);
        e[j] = 1;
        d.add_term(e, RatFunc::constant(vars, ParamScalar(GaussianRational(a[j]))));
    }
    return d;
}

DiffOp DiffOp::laplacian(VarTablePtr vars) {
    DiffOp d(vars);
    for (std::size_t j = 0; j < vars->size(); ++j) {
        Exp e(vars->size(), 0);
        e[j] = 2;
        d.add_term(e, RatFunc::constant(vars, ParamScalar(1)));
    }
    return d;
}

std::uint64_t DiffOp::order() const {
    std::uint64_t m = 0;
    for (const auto& [e, f] : terms_) m = std::max(m, total_degree(e));
    return m;
}

void DiffOp::add_term(const Exp& gamma, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(gamma, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r(vars_);
    for (const auto& [e, f] : terms_) r.terms_.emplace(e, -f);
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    for (const auto& [e, f] : o.terms_) r.add_term(e, f);
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

namespace {

mpz_class binom(std::uint32_t n, std::uint32_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// all beta <= gamma componentwise
void enumerate_below(const Exp& gamma, std::size_t pos, Exp& beta,
                     const std::function<void(const Exp&)>& fn) {
    if (pos == gamma.size()) {
        fn(beta);
        return;
    }
    for (std::uint32_t v = 0; v <= gamma[pos]; ++v) {
        beta[pos] = v;
        enumerate_below(gamma, pos + 1, beta, fn);
    }
}

} // namespace

DiffOp DiffOp::operator*(const DiffOp& o) const {
    DiffOp r(vars_ ? vars_ : o.vars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    std::size_t n = vars_->size();

    for (const auto& [delta, g] : o.terms_) {
        // derivatives of g, filled on demand
        std::map<Exp, RatFunc> dg;
        dg.emplace(Exp(n, 0), g);
        std::function<const RatFunc&(const Exp&)> deriv = [&](const Exp& beta) -> const RatFunc& {
            auto it = dg.find(beta);
            if (it != dg.end()) return it->second;
            Exp prev = beta;
            std::size_t v = 0;
            while (prev[v] == 0) ++v;
            prev[v] -= 1;
            RatFunc d = deriv(prev).partial_derivative(v);
            return dg.emplace(beta, std::move(d)).first->second;
        };

        for (const auto& [gamma, f] : terms_) {
            // f d^gamma . g d^delta = sum_{beta<=gamma} C(gamma,beta) f (d^beta g) d^{gamma-beta+delta}
            Exp beta(n, 0);
            enumerate_below(gamma, 0, beta, [&](const Exp& b) {
                mpz_class c = 1;
                for (std::size_t j = 0; j < n; ++j) c *= binom(gamma[j], b[j]);
                const RatFunc& gb = deriv(b);
                if (gb.is_zero()) return;
                Exp e(n);
                for (std::size_t j = 0; j < n; ++j) e[j] = gamma[j] - b[j] + delta[j];
                RatFunc term = f * gb;
                if (c != 1) term = term * ParamScalar(GaussianRational(mpq_class(c)));
                r.add_term(e, term);
            });
        }
    }
    return r;
}

DiffOp DiffOp::operator*(const ParamScalar& c) const {
    DiffOp r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, f] : terms_) r.add_term(e, f * c);
    return r;
}

Poly DiffOp::apply_poly(const Poly& p) const {
    Poly out(p.vars());
    for (const auto& [gamma, f] : terms_) {
        Poly dp = p;
        for (std::size_t j = 0; j < gamma.size() && !dp.is_zero(); ++j)
            for (std::uint32_t t = 0; t < gamma[j]; ++t) dp = dp.partial_derivative(j);
        if (dp.is_zero()) continue;
        RatFunc res = f * RatFunc(dp);
        if (!res.is_polynomial())
            throw NotDivisible("operator application left a denominator: " + res.str());
        out += res.as_poly();
    }
    return out;
}

DiffOp DiffOp::conjugated(const GroupElem& w) const {
    // w f d^gamma w^{-1} = (w.f) (d_{w e})^gamma expanded into normal form;
    // derivatives commute, so the expansion is an ordinary polynomial one.
    std::size_t n = vars_->size();
    if (w.dim() != n) throw InvalidArgument("conjugated: dimension mismatch");
    const Mat minv = w.inverse().matrix();

    // images for coefficient substitution: x_v -> sum_i (w^{-1})_{v i} x_i
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        Poly img(vars_);
        for (std::size_t i = 0; i < n; ++i) {
            if (minv.at(v, i) == 0) continue;
            Exp e(n, 0);
            e[i] = 1;
            img.add_term(e, ParamScalar(GaussianRational(minv.at(v, i))));
        }
        images.push_back(std::move(img));
    }

    DiffOp r(vars_);
    const Mat& m = w.matrix();
    for (const auto& [gamma, f] : terms_) {
        RatFunc cf = f.substituted_positions(images);
        // expand prod_j (sum_i m_{i j} d_i)^{gamma_j}
        std::map<Exp, mpq_class> expansion;
        expansion.emplace(Exp(n, 0), 1);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::uint32_t t = 0; t < gamma[j]; ++t) {
                std::map<Exp, mpq_class> next;
                for (const auto& [e, c] : expansion) {
                    for (std::size_t i = 0; i < n; ++i) {
                        if (m.at(i, j) == 0) continue;
                        Exp e2 = e;
                        e2[i] += 1;
                        auto [it, fresh] = next.emplace(e2, c * m.at(i, j));
                        if (!fresh) it->second += c * m.at(i, j);
                    }
                }
                expansion = std::move(next);
            }
        }
        for (const auto& [e, c] : expansion) {
            if (c == 0) continue;
            r.add_term(e, cf * ParamScalar(GaussianRational(c)));
        }
    }
    return r;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        const auto& [e, f] = *it;
        out << "(" << f.str() << ")";
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            out << "*d[" << vars_->names[j] << "]";
            if (e[j] > 1) out << "^" << e[j];
        }
    }
    return out.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

} // namespace cmlax
