#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmlax/errors.hpp"

namespace cmlax {

using Vec = std::vector<mpq_class>;

mpq_class dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const mpq_class& c, const Vec& a);
bool is_zero(const Vec& a);
std::string vec_str(const Vec& a);

/// Dense exact rational matrix, row-major.
struct Mat {
    std::size_t n = 0;
    std::vector<mpq_class> a;

    Mat() = default;
    explicit Mat(std::size_t dim) : n(dim), a(dim * dim, 0) {}

    static Mat identity(std::size_t dim);

    mpq_class& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const;
    Mat transposed() const;
    bool is_identity() const;
    bool is_orthogonal() const;

    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool operator<(const Mat& o) const;
};

/// Orthogonal group element over exact rationals; the inverse is the transpose.
class GroupElem {
  public:
    GroupElem() = default;
    explicit GroupElem(Mat m);

    static GroupElem identity(std::size_t dim) { return GroupElem(Mat::identity(dim)); }
    /// Reflection about the hyperplane orthogonal to alpha:
    /// v -> v - 2<v,alpha>/<alpha,alpha> alpha.
    static GroupElem reflection(const Vec& alpha);

    std::size_t dim() const { return m_.n; }
    const Mat& matrix() const { return m_; }

    GroupElem operator*(const GroupElem& o) const { return GroupElem(m_ * o.m_); }
    GroupElem inverse() const { return GroupElem(m_.transposed()); }
    Vec apply(const Vec& v) const { return m_.apply(v); }
    bool is_identity() const { return m_.is_identity(); }

    bool operator==(const GroupElem& o) const { return m_ == o.m_; }
    bool operator!=(const GroupElem& o) const { return !(*this == o); }
    bool operator<(const GroupElem& o) const { return m_ < o.m_; }

  private:
    Mat m_;
};

/// Solve A x = b exactly by Gaussian elimination. A is given by columns
/// (generators); returns nullopt when b is outside the span.
std::optional<Vec> solve_in_span(const std::vector<Vec>& columns, const Vec& b);

/// Rank of a set of vectors over Q.
std::size_t rank_of(const std::vector<Vec>& vectors);

} // namespace cmlax
