#pragma once

#include "polyred/models.hpp"
#include "polyred/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyred {

// components of a vector field, one polynomial per coordinate
using PolyVectorField = std::vector<MultiPoly>;

struct PolyKVector {
    std::vector<PolyVectorField> legs;  // legs[a][coordinate]
};

// constant forms written in named coordinates
struct CoordinateModel {
    std::vector<std::string> vars;
    FormFamily forms;
};

CoordinateModel standard_coordinates(std::size_t k, std::size_t n, bool cosymplectic);
// appends the coordinate "s" and lifts the forms
CoordinateModel lifted_coordinates(const CoordinateModel& m);

// a section t -> (t, psi(t), psi_a(t)) of the standard cosymplectic model
struct PolySection {
    std::size_t k = 0, n = 0;
    std::vector<MultiPoly> psi;                  // psi[i], over t1..tk
    std::vector<std::vector<MultiPoly>> psi_mom; // psi_mom[a][i]
};

// X(f) = sum_i X^i df/dx^i
MultiPoly apply_field(const PolyVectorField& x, const MultiPoly& f);
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);

struct HddwResidual {
    std::vector<MultiPoly> q;               // n residuals
    std::vector<std::vector<MultiPoly>> p;  // p[a][i]
    bool all_zero() const;
};

HddwResidual hddw_residual(const MultiPoly& h, const PolySection& s);

enum class KMode { KSym, KCosym };

struct KVectorResidual {
    std::vector<MultiPoly> form;           // one component per coordinate
    std::vector<MultiPoly> normalization;  // eta^a(X_b) - delta, k*k entries (kCosym)
    bool all_zero() const;
};

// R_a(H) for each a; needs a polycosymplectic model
std::vector<MultiPoly> reeb_derivatives(const CoordinateModel& m, const MultiPoly& h);

// symbolic residual of (k-Sym) or (k-Cosym)
KVectorResidual kvector_residual(const CoordinateModel& m, const MultiPoly& h, const PolyKVector& x, KMode mode);

struct PointSolution {
    std::vector<Vec> legs;  // particular solution, free unknowns set to zero
    std::size_t freedom = 0;
    bool verified = false;  // back-substitution reproduced the right-hand side
};

// solves the pointwise linear system for the k-vector at `point`; throws when
// the system is inconsistent
PointSolution solve_hamiltonian_kvector(const FormFamily& f, const MultiPoly& h, const Vec& point, KMode mode);

// a (k-Cosym) solution in Darboux coordinates. free[a][b][i], when given,
// sets the p^b_i component of leg a for every (a, b) except (0, 0); the p^1
// components of leg 0 then absorb the balance sum_a X_a^{p^a_i} = -dH/dq^i.
PolyKVector darboux_kcosym_solution(std::size_t k, std::size_t n, const MultiPoly& h,
                                    const std::vector<std::vector<std::vector<MultiPoly>>>& free = {});
PolyKVector darboux_ksym_solution(std::size_t k, std::size_t n, const MultiPoly& h);

struct LiftedDynamicsReport {
    MultiPoly h_tilde;
    PolyKVector x_tilde;
    KVectorResidual residual;
    bool holds = false;
};

// throws std::invalid_argument when X does not solve (k-Cosym) for H
LiftedDynamicsReport lift_dynamics_verify(const CoordinateModel& m, const MultiPoly& h, const PolyKVector& x);

// c[a][b] = X_a(R_b H) - X_b(R_a H)
std::vector<std::vector<MultiPoly>> integrability_obstruction(const CoordinateModel& m, const MultiPoly& h,
                                                              const PolyKVector& x);

// For a section of the standard model, any lift must have d psi~/dt^a =
// (dH/dt^a) o phi; returns m[a][b] = d/dt^b A_a - d/dt^a A_b, whose
// vanishing is the integrability condition for psi~
std::vector<std::vector<MultiPoly>> lifted_section_obstruction(const MultiPoly& h, const PolySection& s);

// cotangent lift of q -> A q + b on the standard cosymplectic model
PolyVectorField cotangent_lift_field(std::size_t k, std::size_t n, const AffineGenerator& g);
// J^a = p^a . (A q + b) for each a
std::vector<MultiPoly> momentum_polynomials(std::size_t k, std::size_t n, const AffineGenerator& g);

// sum_a X_a(J^a); throws when xi(H) != 0 or X does not solve (k-Cosym)
MultiPoly noether_residual(const CoordinateModel& m, const MultiPoly& h, const PolyKVector& x,
                           const PolyVectorField& xi, const std::vector<MultiPoly>& j);

struct TranslationReport {
    std::size_t reduced_n = 0;
    MultiPoly h_mu;
    PolyKVector projected;
    KVectorResidual residual;
    bool holds = false;
};

// reduction by translations in q1 at the level p^a_1 = mu_a; throws when a
// precondition audit fails
TranslationReport translation_reduce_verify(const MultiPoly& h, const PolyKVector& x, std::size_t k, std::size_t n,
                                            const std::vector<Rational>& mu);

}  // namespace polyred
