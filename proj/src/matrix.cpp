#include "polyred/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace polyred {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Vec> Matrix::row_list() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

void Matrix::append_row(const Vec& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("appended row has wrong length");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t l = 0; l < x.cols_; ++l) {
            const Rational& xil = x(i, l);
            if (xil.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xil * y(l, j);
        }
    return p;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix s = x;
    for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += y.a_[i];
    return s;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + Rational(-1) * y; }

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix s = m;
    for (auto& e : s.a_) e *= c;
    return s;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Vec operator*(const Matrix& m, const Vec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

Vec vec_times(const Vec& v, const Matrix& m) {
    if (m.rows() != v.size()) throw std::invalid_argument("vector-matrix dimension mismatch");
    Vec out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

Rational dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot product dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    return s;
}

Vec axpy(const Rational& c, const Vec& x, const Vec& y) {
    Vec out = y;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += c * x[i];
    return out;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec e(n);
    e.at(i) = 1;
    return e;
}

Rational bilinear(const Matrix& w, const Vec& x, const Vec& y) { return dot(x, w * y); }

RrefResult rref_pivots(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix form(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) form(i, j) = a(i, j);
    return {form, pivots};
}

Matrix rref(const Matrix& m) {
    RrefResult r = rref_pivots(m);
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < r.form.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r.form(i, j);
    return out;
}

std::size_t rank(const Matrix& m) { return rref_pivots(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref_pivots(aug);
    if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
    return inv;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    Matrix out(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

}  // namespace polyred
