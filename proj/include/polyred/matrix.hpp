#pragma once

#include "polyred/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace polyred {

using Vec = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    std::vector<Vec> row_list() const;
    void append_row(const Vec& r);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_skew() const;

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Rational& c, const Matrix& m);
    friend bool operator==(const Matrix& x, const Matrix& y) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Vec operator*(const Matrix& m, const Vec& v);
// row vector times matrix
Vec vec_times(const Vec& v, const Matrix& m);
Rational dot(const Vec& x, const Vec& y);
Vec axpy(const Rational& c, const Vec& x, const Vec& y);  // c*x + y
bool is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);
// x^T W y
Rational bilinear(const Matrix& w, const Vec& x, const Vec& y);

struct RrefResult {
    Matrix form;                      // reduced row-echelon form, zero rows removed
    std::vector<std::size_t> pivots;  // pivot column of each kept row
};

// reduced row-echelon form with zero rows dropped
RrefResult rref_pivots(const Matrix& m);
// reduced row-echelon form keeping the original row count (zero rows at bottom)
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// inverse of a square matrix; throws std::domain_error when singular
Matrix inverse(const Matrix& m);

// block diagonal assembly
Matrix block_diag(const std::vector<Matrix>& blocks);

}  // namespace polyred
