#include "cmlax/scalar.hpp"

#include <sstream>

namespace cmlax {

std::string GaussianRational::str() const {
    std::ostringstream out;
    if (im == 0) {
        out << re;
    } else if (re == 0) {
        if (im == 1) out << "i";
        else if (im == -1) out << "-i";
        else out << im << "*i";
    } else {
        out << "(" << re;
        if (im > 0) out << "+";
        if (im == 1) out << "i";
        else if (im == -1) out << "-i";
        else out << im << "*i";
        out << ")";
    }
    return out.str();
}

ParamScalar ParamScalar::param(std::size_t index, std::uint32_t power) {
    ParamScalar s;
    ParamExp e{};
    e[index] = power;
    s.terms_[e] = GaussianRational(1);
    return s;
}

GaussianRational ParamScalar::constant_part() const {
    auto it = terms_.find(ParamExp{});
    return it == terms_.end() ? GaussianRational() : it->second;
}

void ParamScalar::insert_term(const ParamExp& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
    ParamScalar r = *this;
    r += o;
    return r;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const {
    ParamScalar r = *this;
    r -= o;
    return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
    ParamScalar r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ParamExp e;
            for (std::size_t j = 0; j < kNumParams; ++j) e[j] = ea[j] + eb[j];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

ParamScalar ParamScalar::operator*(const GaussianRational& c) const {
    ParamScalar r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

ParamScalar ParamScalar::operator/(const GaussianRational& c) const {
    if (c.is_zero()) throw Error("ParamScalar: division by zero scalar");
    ParamScalar r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v / c);
    return r;
}

std::string ParamScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::ostringstream t;
        bool has_params = e != ParamExp{};
        if (!has_params) {
            t << c.str();
        } else {
            if (c == GaussianRational(-1)) t << "-";
            else if (c != GaussianRational(1)) t << c.str() << "*";
            bool firstp = true;
            for (std::size_t j = 0; j < kNumParams; ++j) {
                if (e[j] == 0) continue;
                if (!firstp) t << "*";
                firstp = false;
                t << kParamNames[j];
                if (e[j] > 1) t << "^" << e[j];
            }
        }
        std::string ts = t.str();
        if (first) out << ts;
        else if (!ts.empty() && ts[0] == '-') out << " - " << ts.substr(1);
        else out << " + " << ts;
        first = false;
    }
    return out.str();
}

} // namespace cmlax
