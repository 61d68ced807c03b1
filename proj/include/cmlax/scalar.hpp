#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "cmlax/errors.hpp"

namespace cmlax {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
/// Both components are kept in lowest terms by GMP; arithmetic never rounds.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2, a non-negative rational.
    mpq_class norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw Error("GaussianRational: division by zero");
        mpq_class n = o.norm();
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
    bool operator<(const GaussianRational& o) const {
        int c = cmp(re, o.re);
        if (c != 0) return c < 0;
        return cmp(im, o.im) < 0;
    }

    std::string str() const;
};

/// Names of the symbolic parameters every ParamScalar ranges over.
/// Index 0 is the coupling, 1 and 2 the per-orbit multiplicities.
inline constexpr std::array<const char*, 3> kParamNames = {"k", "c1", "c2"};
inline constexpr std::size_t kNumParams = 3;

using ParamExp = std::array<std::uint32_t, kNumParams>;

/// Polynomial in the symbolic parameters (k, c1, c2) with GaussianRational
/// coefficients. The zero polynomial is the empty term map; no zero
/// coefficients are ever stored.
class ParamScalar {
  public:
    using Terms = std::map<ParamExp, GaussianRational>;

    ParamScalar() = default;
    ParamScalar(long v) { if (v != 0) terms_[ParamExp{}] = GaussianRational(v); }
    ParamScalar(GaussianRational v) {
        if (!v.is_zero()) terms_[ParamExp{}] = std::move(v);
    }

    static ParamScalar param(std::size_t index, std::uint32_t power = 1);
    /// The coupling parameter k.
    static ParamScalar k() { return param(0); }
    /// Orbit multiplicity parameter c1 or c2 (class_index 0 or 1).
    static ParamScalar multiplicity(std::size_t class_index) { return param(1 + class_index); }
    static ParamScalar i() { return ParamScalar(GaussianRational::i()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExp{});
    }
    /// The coefficient of the constant monomial (zero if absent).
    GaussianRational constant_part() const;
    const Terms& terms() const { return terms_; }

    ParamScalar operator-() const;
    ParamScalar operator+(const ParamScalar& o) const;
    ParamScalar operator-(const ParamScalar& o) const;
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar& operator*=(const ParamScalar& o) { *this = *this * o; return *this; }

    ParamScalar operator*(const GaussianRational& c) const;
    /// Exact division by a nonzero Gaussian rational.
    ParamScalar operator/(const GaussianRational& c) const;

    bool operator==(const ParamScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }
    bool operator<(const ParamScalar& o) const { return terms_ < o.terms_; }

    std::string str() const;

  private:
    void insert_term(const ParamExp& e, const GaussianRational& c);
    Terms terms_;
};

inline ParamScalar operator*(const GaussianRational& c, const ParamScalar& s) { return s * c; }

} // namespace cmlax
