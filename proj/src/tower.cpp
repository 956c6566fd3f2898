#include "yhx/tower.hpp"

namespace yhx::scalars {

TowerScalar::TowerScalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("tower scalar with zero denominator");
    reduce();
}

void TowerScalar::reduce() {
    if (num_.is_zero()) {
        den_ = Laurent::one();
        return;
    }
    // absorb the denominator's q-power into the numerator
    if (den_.lo() != 0) {
        num_ = num_.shifted(-den_.lo());
        den_ = den_.shifted(-den_.lo());
    }
    if (!den_.is_monomial()) {
        Laurent g = Laurent::gcd_poly(num_, den_);
        if (!g.is_one()) {
            int nlo = num_.lo();
            num_ = Laurent::divmod_poly(num_, g).first.shifted(nlo);
            den_ = Laurent::divmod_poly(den_, g).first;
        }
    }
    // monic denominator, constant term at q^0
    if (den_.lo() != 0) {
        num_ = num_.shifted(-den_.lo());
        den_ = den_.shifted(-den_.lo());
    }
    if (!den_.leading().is_one()) {
        Cyclo inv = den_.leading().inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

TowerScalar TowerScalar::phase_q_power(const Rat& u, int e, long min_order) {
    Rat uu = u - Rat(mpz_class(u.get_num() / u.get_den()));
    if (uu < 0) uu += 1;
    if (!uu.get_den().fits_slong_p() || !uu.get_num().fits_slong_p())
        throw Error("phase denominator too large");
    long den = uu.get_den().get_si();
    long num = uu.get_num().get_si();
    long order = lcm_long(den, min_order);
    Cyclo root = Cyclo::root_of_unity(order, num * (order / den));
    return from_laurent(Laurent::q_power(e, root));
}

TowerScalar operator+(const TowerScalar& a, const TowerScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return TowerScalar(a.num_ + b.num_, a.den_);
    return TowerScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TowerScalar operator-(const TowerScalar& a, const TowerScalar& b) { return a + (-b); }

TowerScalar TowerScalar::operator-() const {
    TowerScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

TowerScalar operator*(const TowerScalar& a, const TowerScalar& b) {
    if (a.is_zero() || b.is_zero()) return TowerScalar::zero();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    // cross-cancel first to keep degrees small
    Laurent g1 = b.den_.is_monomial() ? Laurent::one() : Laurent::gcd_poly(a.num_, b.den_);
    Laurent g2 = a.den_.is_monomial() ? Laurent::one() : Laurent::gcd_poly(b.num_, a.den_);
    Laurent an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    if (!g1.is_one()) {
        an = Laurent::divmod_poly(an, g1).first.shifted(an.lo());
        bd = Laurent::divmod_poly(bd, g1).first;
    }
    if (!g2.is_one()) {
        bn = Laurent::divmod_poly(bn, g2).first.shifted(bn.lo());
        ad = Laurent::divmod_poly(ad, g2).first;
    }
    return TowerScalar(an * bn, ad * bd);
}

TowerScalar TowerScalar::inverse() const {
    if (is_zero()) throw Error("tower scalar division by zero");
    return TowerScalar(den_, num_);
}

TowerScalar operator/(const TowerScalar& a, const TowerScalar& b) { return a * b.inverse(); }

TowerScalar TowerScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    TowerScalar acc = TowerScalar::one(), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const TowerScalar& a, const TowerScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

TowerScalar tower_arith(const TowerScalar& a, const TowerScalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div:
            if (b.is_zero()) throw Error("tower_arith: division by zero");
            return a / b;
    }
    throw Error("tower_arith: unknown op");
}

}  // namespace yhx::scalars
