#pragma once

#include "yhx/calrep.hpp"

namespace yhx::clifford {

using algebra::CheckReport;
using algebra::MatrixRep;
using calrep::CalibratedModule;
using scalars::TowerScalar;
using shapes::PlacedShape;

// sigma^power on placed shapes: every box phase shifts by -power/p (mod 1);
// offsets and the underlying shape are untouched.
PlacedShape twist_shape(const PlacedShape& placed, long p, long power = 1);

struct StabilizerInfo {
    long p = 1;
    long k = 1;        // smallest power fixing the canonicalized placed shape
    long order = 1;    // |K| = p / k
};

// Stabilizer of the Z/pZ twist action, computed on canonical forms (identical
// connected components may trade places).
StabilizerInfo stabilizer(const PlacedShape& placed, long p);

struct SplitComponent {
    long j = 0;          // character index
    long dimension = 0;
    // restricted generator matrices on the p_j-image, keyed by display name:
    // t1..tn, g1..g(n-1), X1^p, XiXinv(i+1)
    std::vector<std::pair<std::string, Matrix<TowerScalar>>> restricted;
    // joint eigenvalues of the diagonal restricted generators per basis vector
    std::vector<std::vector<TowerScalar>> weight_support;
    bool connected = false;
};

struct IdempotentSplit {
    StabilizerInfo stab;
    std::vector<SplitComponent> components;
    CheckReport report;
};

// Decomposition of a calibrated module over the fixed-point subalgebra: the
// monomial intertwiner S realizing the sigma^k twist is solved from the
// g-action, the idempotents p_j = (1/|K|) sum_l zeta^{-jkl} S^l are formed,
// and each p_j-image is reported with its restricted generator matrices.
// Throws on intertwiner inconsistency; never patches silently.
IdempotentSplit clifford_split(const CalibratedModule& m, long p);

// Indexing of the fixed-subalgebra simples in the cyclotomic case p | d:
// r-tuples of d-partitions regrouped as (l,k) slots, with the orbit and
// stabilizer data of the k-shift action.
struct YdpOrbit {
    std::vector<std::vector<std::vector<long>>> rep;  // representative, [h][slot]
    long orbit_size = 1;
    long f = 1;      // smallest fixing power
    long order = 1;  // |K_lambda| = p / f
    std::vector<long> indices;  // j = 0 .. order-1
};

struct YdpCount {
    std::vector<YdpOrbit> orbits;
    long total_indices = 0;
};

YdpCount count_ydp_simples(long r, long d, long p, long n);

}  // namespace yhx::clifford
