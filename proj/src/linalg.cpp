#include "cmlax/linalg.hpp"

#include <sstream>

namespace cmlax {

mpq_class dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: size mismatch");
    mpq_class s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
    return r;
}

Vec operator*(const mpq_class& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = c * a[j];
    return r;
}

bool is_zero(const Vec& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

std::string vec_str(const Vec& a) {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j) out << ",";
        out << a[j];
    }
    out << ")";
    return out.str();
}

Mat Mat::identity(std::size_t dim) {
    Mat m(dim);
    for (std::size_t j = 0; j < dim; ++j) m.at(j, j) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (n != o.n) throw InvalidArgument("Mat: size mismatch");
    Mat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const mpq_class& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += v * o.at(k, j);
            }
        }
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != n) throw InvalidArgument("Mat::apply: size mismatch");
    Vec r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (at(i, j) == 0) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

Mat Mat::transposed() const {
    Mat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_identity() const {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Mat::is_orthogonal() const { return (*this * transposed()).is_identity(); }

bool Mat::operator<(const Mat& o) const {
    if (n != o.n) return n < o.n;
    for (std::size_t j = 0; j < a.size(); ++j) {
        int c = cmp(a[j], o.a[j]);
        if (c != 0) return c < 0;
    }
    return false;
}

GroupElem::GroupElem(Mat m) : m_(std::move(m)) {
    if (!m_.is_orthogonal()) throw InvalidArgument("GroupElem: matrix is not orthogonal");
}

GroupElem GroupElem::reflection(const Vec& alpha) {
    if (is_zero(alpha)) throw InvalidArgument("reflection: zero vector");
    std::size_t d = alpha.size();
    mpq_class nn = dot(alpha, alpha);
    Mat m = Mat::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) -= 2 * alpha[i] * alpha[j] / nn;
    return GroupElem(std::move(m));
}

std::optional<Vec> solve_in_span(const std::vector<Vec>& columns, const Vec& b) {
    if (columns.empty()) return is_zero(b) ? std::optional<Vec>(Vec{}) : std::nullopt;
    std::size_t rows = b.size(), cols = columns.size();
    // augmented [A | b], A's columns are the generators
    std::vector<Vec> m(rows, Vec(cols + 1, 0));
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = columns[c][r];
    for (std::size_t r = 0; r < rows; ++r) m[r][cols] = b[r];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        mpq_class inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (std::size_t c2 = col; c2 <= cols; ++c2) m[r][c2] -= f * m[row][c2];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;
    Vec x(cols, 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][cols];
    return x;
}

std::size_t rank_of(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<Vec> m = vectors;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[row][col];
            for (std::size_t c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[row][c2];
        }
        ++row;
    }
    return row;
}

} // namespace cmlax
