#pragma once

#include "yhx/calrep.hpp"

namespace yhx::branching {

using calrep::CalibratedModule;
using shapes::ContentValue;
using shapes::PlacedShape;
using shapes::RPartition;
using shapes::RSkewShape;

// Classical Littlewood-Richardson coefficient c^lambda_{mu nu}, by direct
// enumeration of LR skew tableaux (column-strict fillings of lambda/mu with
// content nu whose reverse reading word is a lattice word).
long lr_coefficient(const std::vector<long>& lambda, const std::vector<long>& mu,
                    const std::vector<long>& nu);

struct Constituent {
    RPartition label;       // straight r-partition (restriction)
    PlacedShape glued;      // glued placed shape (induction); empty otherwise
    long multiplicity = 0;
    long dimension = 0;
};

struct DecompositionReport {
    std::vector<Constituent> constituents;
    Int lhs = 0, rhs = 0;    // the dimension bookkeeping identity
    bool ledger_ok = false;
    std::string ledger_desc;
};

// Restriction to the finite subalgebra: componentwise LR products over all
// r-partitions of n, with the dimension ledger #Std(lambda/mu) = sum of
// mult * #Std(nu).
DecompositionReport restrict_module(const CalibratedModule& m);
DecompositionReport restrict_shape(const PlacedShape& placed);

// Induction gluing: one glued shape per assignment of vertical/horizontal to
// each component (duplicates collapse when a component pair is empty), with
// the ledger binom(n,k) * dimA * dimB = sum of #Std(glued).
DecompositionReport induce(const PlacedShape& a, const PlacedShape& b);

struct CyclotomicParams {
    std::vector<ContentValue> values;  // v_i as exact phase/offset pairs
    long d() const { return static_cast<long>(values.size()); }
    // d fresh phase classes: u_i = (i-1)/d, offset 0
    static CyclotomicParams fresh(long d);
};

// Membership in the cyclotomic quotient: the northwest-corner contents all
// lie among the v_i.
bool cyclotomic_membership(const CalibratedModule& m, const CyclotomicParams& params);

// Degree of the minimal polynomial of the X_1 matrix (independent route for
// the membership criterion).
long x1_minpoly_degree(const CalibratedModule& m);

// Northwest-corner content values of a placed shape, as exact scalars.
std::vector<scalars::TowerScalar> nw_content_values(const CalibratedModule& m);

// The semisimple-case classification: r-tuples of d-partitions of n with
// contents pinned by q^{2c} = v_i at the northwest corner of the i-th slot.
// Requires the v_i to lie in pairwise distinct phase classes.
std::vector<PlacedShape> enumerate_cyclotomic_simples(long r, long d, long n,
                                                      const CyclotomicParams& params);

}  // namespace yhx::branching
