#pragma once

#include "polyred/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyred {

// A linear subspace of Q^n stored by its canonical basis: the nonzero rows of
// the RREF of any spanning set. Two Subspace values describe the same set
// exactly when their basis matrices compare equal.
class Subspace {
public:
    Subspace() = default;
    // zero subspace of Q^n
    explicit Subspace(std::size_t ambient_dim);
    // span of the rows of a generator matrix
    static Subspace span(const Matrix& generators);
    static Subspace span(const std::vector<Vec>& generators, std::size_t ambient_dim);
    static Subspace whole(std::size_t ambient_dim);
    // span of the coordinate axes listed in `axes`
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_whole() const { return dim() == n_; }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vec> vectors() const { return basis_.row_list(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // v minus its components along the pivot rows; zero iff v lies in this space
    Vec reduce(const Vec& v) const;

    // {w : <w, v> = 0 for all v in this space}, as a subspace of the same Q^n
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace nullspace(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
// image of a subspace under a linear map given as a matrix acting on column vectors
Subspace image(const Matrix& m, const Subspace& s);
// direct product A x B inside Q^(n_A + n_B)
Subspace direct_product(const Subspace& a, const Subspace& b);

struct QuotientMap {
    std::size_t projected_dim = 0;
    // row i: coordinates of the i-th basis vector of A in the complement basis
    Matrix representative;
    // rows: the chosen complement C of B inside A (canonical), so A = B (+) C
    Matrix complement;
    std::vector<std::size_t> complement_pivots;
    // coordinates of a vector of A modulo B
    Vec project(const Vec& v) const;

    Subspace b;  // the subspace quotiented out
};

// requires B a subspace of A; throws std::invalid_argument otherwise
QuotientMap quotient_map(const Subspace& a, const Subspace& b);

}  // namespace polyred

namespace polyred {

struct LinearSolution {
    Vec particular;        // free variables set to zero
    Subspace homogeneous;  // solution space of m x = 0
};

// all x with m x = rhs, or nullopt when the system is inconsistent
std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& rhs);

}  // namespace polyred
