#pragma once

#include "yhx/algebra.hpp"
#include "yhx/shapes.hpp"

namespace yhx::calrep {

using algebra::CheckReport;
using algebra::MatrixRep;
using scalars::Cyclo;
using scalars::TowerScalar;
using shapes::PlacedShape;
using shapes::StandardTableau;
using shapes::Weight;

// The module Y^(c, lambda/mu): basis indexed by standard tableaux (ordered
// lexicographically by weight), all t_j and X_j diagonal, g_i acting within
// the {w_T, w_{s_i T}} pairs.
struct CalibratedModule {
    PlacedShape placed;
    long cyclo_order = 1;
    std::vector<StandardTableau> basis;
    std::vector<Weight> weights;                 // weight of each basis tableau
    std::vector<std::vector<TowerScalar>> nu;    // [b][pos] X-eigenvalues
    std::vector<std::vector<int>> tcomp;         // [b][pos] t-eigenvalue index in 1..r
    MatrixRep<TowerScalar> rep;                  // t_j, g_i, X_j (all j), Xinv_1

    long dim() const { return static_cast<long>(basis.size()); }
    long n() const { return placed.n(); }
    long index_of(const StandardTableau& t) const;  // -1 if absent
    TowerScalar t_eigenvalue(int comp_1based) const;
};

// Builds the seminormal matrices on the standard-tableau basis.  Throws
// when two consecutive tableau positions
// in the same component carry equal contents (singular denominator guard).
CalibratedModule build_module(const PlacedShape& placed);

// pi_T: the spectral projector onto the weight line of basis element b,
// assembled as a polynomial in the X_k and t_k matrices.
Matrix<TowerScalar> projector(const CalibratedModule& m, long b);

// tau_i applied to basis vector b; result is a (possibly zero) vector in the
// basis coordinates.  Throws on the undefined case (equal X-weights with
// equal t-weights at i, i+1).
std::vector<TowerScalar> tau_apply(const CalibratedModule& m, long b, int i);

// tau_i as a matrix (columns assembled from tau_apply).
Matrix<TowerScalar> tau_matrix(const CalibratedModule& m, int i);

// The intertwiner identity suite (weight shifts, far commutation, the
// square formula, the braid relation) and the two weight-vector facts.
CheckReport tau_suite(const CalibratedModule& m);

// delta property of the projectors plus completeness (sum = identity).
CheckReport projector_suite(const CalibratedModule& m);

struct IrreducibilityReport {
    bool diagonal = false;          // all X_j, t_j diagonal
    bool weights_distinct = false;  // joint eigenvalue tuples pairwise distinct
    bool connected = false;         // tau-edge graph on basis vectors connected
    bool pass = false;
};

IrreducibilityReport irreducibility_certificate(const CalibratedModule& m);

// Same certificate for an arbitrary representation with diagonal X_j and t_j
// bound for every j (throws on non-diagonal input).
IrreducibilityReport irreducibility_certificate(const MatrixRep<TowerScalar>& rep);

// Non-isomorphism test for calibrated irreducibles: weight multisets.
bool isomorphism_test(const CalibratedModule& a, const CalibratedModule& b);

}  // namespace yhx::calrep
