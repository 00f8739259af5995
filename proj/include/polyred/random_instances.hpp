#pragma once

#include "polyred/models.hpp"

#include <cstdint>
#include <random>

namespace polyred {

using Rng = std::mt19937_64;

// splitmix64 finalizer applied to (master, index); the campaign trial seed
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

long uniform_int(Rng& rng, long lo, long hi);
Vec random_vector(Rng& rng, std::size_t n, long box);
// entries drawn from {-1, 0, 1} with the given chance of zero (percent)
Vec sparse_vector(Rng& rng, std::size_t n, int zero_percent);
// small-integer matrix, rejected until invertible
Matrix random_invertible(Rng& rng, std::size_t n, long box = 2);

// pull a family back along x = A y: W -> A^T W A, eta -> eta A
FormFamily change_basis(const FormFamily& f, const Matrix& a);
// the same subspace in y-coordinates, y = A^{-1} x
Subspace to_new_coordinates(const Subspace& s, const Matrix& a);

struct PresymplecticSample {
    FormFamily forms;  // k = 1, no eta
    Subspace s;
};
// adversarial samples plant a kernel vector of the form inside S
PresymplecticSample random_presymplectic(Rng& rng, std::size_t dim_max, bool adversarial);

// valid polycosymplectic families; the standard model under a random basis change
FormFamily random_polycosymplectic(Rng& rng, std::size_t k, std::size_t n);

// polycosymplectic candidate for the lift iff; adversarial ones fail axiom (ii)
// but keep axioms (i) and (iii)
FormFamily random_lift_candidate(Rng& rng, std::size_t dim_max, std::size_t k_max, bool adversarial);

// regular polysymplectic action data on a disguised standard model. The
// adversarial variant draws sparse {-1,0,1} generators, which land on
// degenerate strata (condition failures) far more often than dense ones.
// Half of the adversarial draws (when k_max >= 2) instead use a random
// jointly nondegenerate family of low-rank forms with dim <= 7.
ActionPointData random_polysymplectic_action(Rng& rng, std::size_t dim_max, std::size_t k_max, bool adversarial);

// polycosymplectic action data with gtilde inside the joint eta kernel;
// k is drawn from [k_min, k_max]
ActionPointData random_polycosymplectic_action(Rng& rng, std::size_t dim_max, std::size_t k_min, std::size_t k_max,
                                               bool adversarial);

struct CosymplecticFactor {
    FormFamily forms;
    Subspace gtilde;
};
CosymplecticFactor random_cosymplectic_factor(Rng& rng, std::size_t n_max);

}  // namespace polyred

#include "polyred/multipoly.hpp"

namespace polyred {

// up to max_terms monomials of total degree <= max_degree with coefficients in
// [-box, box]; monomials use only the listed `support` variables
MultiPoly random_polynomial(Rng& rng, const std::vector<std::string>& vars, const std::vector<std::string>& support,
                            unsigned max_degree, std::size_t max_terms, long box);

}  // namespace polyred
