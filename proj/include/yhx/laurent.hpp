#pragma once

#include "yhx/cyclotomic.hpp"

namespace yhx::scalars {

// Laurent polynomial in q with Q(zeta) coefficients, stored as the lowest
// exponent plus a dense coefficient run with nonzero first and last entries.
// The zero polynomial is the empty run.
class Laurent {
public:
    Laurent() = default;
    Laurent(int lo, std::vector<Cyclo> coeffs) : lo_(lo), c_(std::move(coeffs)) { normalize(); }

    static Laurent zero() { return Laurent(); }
    static Laurent from_cyclo(const Cyclo& a) { return Laurent(0, {a}); }
    static Laurent q_power(int e, const Cyclo& coeff) { return Laurent(e, {coeff}); }
    static Laurent one() { return from_cyclo(Cyclo::one()); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0].is_one(); }
    bool is_monomial() const { return c_.size() == 1; }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<Cyclo>& coeffs() const { return c_; }
    const Cyclo& leading() const { return c_.back(); }

    Laurent shifted(int dq) const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;
    Laurent scaled(const Cyclo& s) const;

    friend bool operator==(const Laurent& a, const Laurent& b);
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Polynomial division ignoring q-units: both sides are shifted to lowest
    // exponent zero first.  Returns {quotient, remainder} of the shifted polys.
    static std::pair<Laurent, Laurent> divmod_poly(const Laurent& a, const Laurent& b);
    // Monic gcd of the polynomial parts (lowest exponent normalized to 0).
    static Laurent gcd_poly(const Laurent& a, const Laurent& b);

private:
    int lo_ = 0;
    std::vector<Cyclo> c_;

    void normalize();
};

}  // namespace yhx::scalars
