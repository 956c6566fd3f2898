#pragma once

#include <map>
#include <optional>

#include "yhx/common.hpp"

namespace yhx::scalars {

// Context for the cyclotomic field Q(zeta_N).  Elements are coefficient
// vectors over Q in the power basis 1, z, ..., z^(deg-1) reduced modulo the
// N-th cyclotomic polynomial.  Contexts are created once, cached globally and
// immutable afterwards, so they can be shared freely between threads.
class CycloContext {
public:
    long order;            // N
    std::vector<Rat> phi;  // Phi_N, monic, size deg+1
    int deg;               // deg Phi_N = phi(N)

    static const CycloContext& get(long n);

private:
    explicit CycloContext(long n);
};

// Element of Q(zeta_N).  Binary operations lift both operands into
// Q(zeta_lcm(N,M)) first, so values of different orders mix transparently.
class Cyclo {
public:
    Cyclo() : order_(1), c_(1, Rat(0)) {}
    Cyclo(long order, std::vector<Rat> coeffs);

    static Cyclo from_rat(const Rat& r, long order = 1);
    static Cyclo zero(long order = 1) { return from_rat(Rat(0), order); }
    static Cyclo one(long order = 1) { return from_rat(Rat(1), order); }
    // zeta_N^k
    static Cyclo root_of_unity(long order, long k = 1);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Rational value when is_rational(), throws otherwise.
    Rat rat_value() const;

    Cyclo lift(long new_order) const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo inverse() const;
    Cyclo pow(long e) const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

private:
    long order_;
    std::vector<Rat> c_;  // size CycloContext::get(order_).deg

    void reduce_from(std::vector<Rat> raw);  // raw has arbitrary length
    friend class CycloContext;
};

// Polynomial utilities over Q used by the cyclotomic machinery and by tests.
namespace polyq {
std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
// Exact division; throws if the remainder is nonzero.
std::vector<Rat> div_exact(const std::vector<Rat>& num, const std::vector<Rat>& den);
std::vector<Rat> x_pow_minus_one(long n);
}  // namespace polyq

// Mobius function, exposed for the Phi_N construction and its tests.
int mobius(long n);

}  // namespace yhx::scalars
