#pragma once

#include "polyred/reduction.hpp"

#include <string>
#include <vector>

namespace polyred {

// Coordinates of the standard model, in order:
//   t1..tk | q1..qn | p1_1..p1_n | ... | pk_1..pk_n
// the t-block is present only for the cosymplectic variant.
FormFamily standard_model(std::size_t k, std::size_t n, bool cosymplectic);

struct StandardIndex {
    std::size_t k, n;
    bool cosymplectic;
    std::size_t t(std::size_t a) const { return a; }
    std::size_t q(std::size_t i) const { return (cosymplectic ? k : 0) + i; }
    std::size_t p(std::size_t a, std::size_t i) const { return (cosymplectic ? k : 0) + n + a * n + i; }
    std::size_t dim() const { return (cosymplectic ? k : 0) + (k + 1) * n; }
};

// coordinate names t1, q1, p1_1, ... in the order above
std::vector<std::string> standard_variable_names(std::size_t k, std::size_t n, bool cosymplectic);

// span{d/dp^a_i}
Subspace vertical_distribution(std::size_t k, std::size_t n, bool cosymplectic);

// k cosymplectic factors (k = 1 each) assembled block-diagonally
FormFamily product_cosymplectic(const std::vector<FormFamily>& factors);

// an affine vector field q -> A q + b on Q^n
struct AffineGenerator {
    Matrix a;
    Vec b;
};

struct CotangentData {
    ActionPointData data;
    std::vector<Vec> lifted_generators;     // one per generator
    std::vector<std::vector<Rational>> j;   // j[g][a] = p^a . (A_g q + b_g)
    Vec q;
    std::vector<Vec> momenta;
};

// cotangent-lifted action at the point (t, q, p^1..p^k) of the standard
// cosymplectic model; throws when the generators are dependent at q
CotangentData cotangent_momentum_data(const std::vector<AffineGenerator>& generators, const Vec& q, std::size_t k,
                                      const std::vector<Vec>& momenta, const Vec& t = {});

// checks i_{xi_M} omega^a = dJ^a_xi at the point, for every generator and a
bool momentum_relation_holds(const CotangentData& c, const std::vector<AffineGenerator>& generators);

}  // namespace polyred
