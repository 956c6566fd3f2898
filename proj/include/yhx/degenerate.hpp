#pragma once

#include "yhx/algebra.hpp"
#include "yhx/shapes.hpp"

namespace yhx::degenerate {

using algebra::CheckReport;
using algebra::MatrixRep;
using scalars::FFContext;
using scalars::FFElem;
using shapes::RPartition;
using shapes::StandardTableau;

// Weight datum of an integral module: x-eigenvalues in Z_p and t-eigenvalue
// indices in 1..r.
struct ContentVector {
    std::vector<long> alpha;  // entries normalized into 0..p-1
    std::vector<int> j;       // entries in 1..r

    friend bool operator==(const ContentVector& a, const ContentVector& b) {
        return a.alpha == b.alpha && a.j == b.j;
    }
    friend bool operator<(const ContentVector& a, const ContentVector& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.j < b.j;
    }
};

struct Validation {
    bool ok = true;
    std::string reason;
};

// Adjacent positions with equal t-class must carry different contents; for
// p > 2 every repeated value additionally needs both neighbouring values
// between the repeats; for p = 2 entries are restricted to {0,1}.
Validation validate_content_vector(const ContentVector& w, long p, long r);

// s_i is admissible for (alpha, j) when the t-parts differ at i, i+1, or they
// agree and alpha_{i+1} != alpha_i +- 1 (mod p).
bool admissible(const ContentVector& w, int i, long p);
ContentVector apply_admissible(const ContentVector& w, int i);

struct SplittableClass {
    long p = 2, r = 1;
    int n = 1;
    std::vector<ContentVector> members;  // sorted; closed under admissible moves
};

// Breadth-first closure of a valid representative under admissible moves.
SplittableClass splittable_class(const ContentVector& rep, long p, long r);

struct DegenerateModule {
    long p = 2, r = 1;
    int n = 1;
    const FFContext* field = nullptr;
    FFElem zeta;  // designated r-th root of unity in `field`
    bool extended_field = false;
    MatrixRep<FFElem> rep;  // t_j, f_i, x_j
    std::vector<ContentVector> weights;  // per basis vector
};

// The completely splittable module: basis indexed by the class, t and x
// diagonal, f_k built from the inverse-difference and square-root formulas
// (which collapse to the swap / fixed-vector actions at p = 2).
DegenerateModule build_splittable_module(const SplittableClass& cls);

// Verifies the wreath specialization on a module whose weights satisfy the
// wreath weight conditions (first occurrence of each t-class has content
// zero; later contents are adjacent to an earlier one of their class): x_1
// acts by zero and every x_k equals the k-th Jucys-Murphy element assembled
// from the t and f matrices.  Throws when a weight violates the conditions.
CheckReport wreath_specialize(const DegenerateModule& m);

// chi(lambda) = lambda_1 - lambda_last + (number of parts); a p-regular
// partition is splittable when chi <= p.
long chi(const std::vector<long>& lambda);
bool is_p_regular(const std::vector<long>& lambda, long p);

// All p-standard tableaux of a straight r-splittable shape; rejects
// non-splittable or non-p-regular components with their chi.
std::vector<StandardTableau> enumerate_p_standard(const RPartition& lambda, long p);

// The completely splittable wreath-product module on p-standard tableaux,
// with x matrices bound to the Jucys-Murphy images (diagonal contents).
DegenerateModule build_wreath_module(const RPartition& lambda, long p, long r);

}  // namespace yhx::degenerate
