#pragma once

#include "yhx/laurent.hpp"

namespace yhx::scalars {

// Element of Q(zeta_N)(q): a Laurent rational function in q with cyclotomic
// coefficients, kept in canonical form.  The denominator is a genuine
// polynomial in q (lowest exponent 0) with nonzero constant term and monic
// leading coefficient, coprime to the numerator.  Equality is structural.
//
// q is transcendental here, so a value is zero iff its numerator is zero;
// this is what makes every relation check in the library a plain zero test.
class TowerScalar {
public:
    TowerScalar() : num_(), den_(Laurent::one()) {}
    TowerScalar(Laurent num, Laurent den);

    static TowerScalar zero() { return TowerScalar(); }
    static TowerScalar one() { return from_laurent(Laurent::one()); }
    static TowerScalar from_laurent(Laurent p) { return TowerScalar(std::move(p), Laurent::one()); }
    static TowerScalar from_cyclo(const Cyclo& a) { return from_laurent(Laurent::from_cyclo(a)); }
    static TowerScalar from_rat(const Rat& r) { return from_cyclo(Cyclo::from_rat(r)); }
    static TowerScalar q_power(int e) { return from_laurent(Laurent::q_power(e, Cyclo::one())); }
    // e^{2 pi i u} * q^e with u = k/N given as an exact rational.
    static TowerScalar phase_q_power(const Rat& u, int e, long min_order = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    friend TowerScalar operator+(const TowerScalar& a, const TowerScalar& b);
    friend TowerScalar operator-(const TowerScalar& a, const TowerScalar& b);
    friend TowerScalar operator*(const TowerScalar& a, const TowerScalar& b);
    friend TowerScalar operator/(const TowerScalar& a, const TowerScalar& b);
    TowerScalar operator-() const;
    TowerScalar inverse() const;
    TowerScalar pow(long e) const;

    friend bool operator==(const TowerScalar& a, const TowerScalar& b);
    friend bool operator!=(const TowerScalar& a, const TowerScalar& b) { return !(a == b); }

private:
    Laurent num_, den_;

    void reduce();
};

enum class ArithOp { add, sub, mul, div };

// The four-operation entry point used by the CLI; throws on division by zero.
TowerScalar tower_arith(const TowerScalar& a, const TowerScalar& b, ArithOp op);

}  // namespace yhx::scalars
