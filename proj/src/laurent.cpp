#include "yhx/laurent.hpp"

namespace yhx::scalars {

void Laurent::normalize() {
    size_t a = 0, b = c_.size();
    while (a < b && c_[a].is_zero()) ++a;
    while (b > a && c_[b - 1].is_zero()) --b;
    if (a == b) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (a > 0 || b < c_.size()) {
        std::vector<Cyclo> t(c_.begin() + a, c_.begin() + b);
        c_ = std::move(t);
        lo_ += static_cast<int>(a);
    }
}

Laurent Laurent::shifted(int dq) const {
    if (is_zero()) return *this;
    Laurent out = *this;
    out.lo_ += dq;
    return out;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::max(a.hi(), b.hi());
    std::vector<Cyclo> c(hi - lo + 1, Cyclo::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) c[a.lo_ - lo + i] = c[a.lo_ - lo + i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[b.lo_ - lo + i] = c[b.lo_ - lo + i] + b.c_[i];
    return Laurent(lo, std::move(c));
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Laurent Laurent::scaled(const Cyclo& s) const {
    if (s.is_zero() || is_zero()) return Laurent();
    Laurent out = *this;
    for (auto& x : out.c_) x = x * s;
    out.normalize();
    return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    std::vector<Cyclo> c(a.c_.size() + b.c_.size() - 1, Cyclo::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return Laurent(a.lo_ + b.lo_, std::move(c));
}

bool operator==(const Laurent& a, const Laurent& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (a.c_.empty()) return true;
    if (a.lo_ != b.lo_) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<Laurent, Laurent> Laurent::divmod_poly(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw Error("Laurent division by zero");
    Laurent r = a.shifted(-a.lo_);
    Laurent d = b.shifted(-b.lo_);
    if (r.is_zero()) return {Laurent(), Laurent()};
    if (r.c_.size() < d.c_.size()) return {Laurent(), r};
    std::vector<Cyclo> rem = r.c_;
    std::vector<Cyclo> quo(rem.size() - d.c_.size() + 1, Cyclo::zero());
    Cyclo lead_inv = d.c_.back().inverse();
    for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
        Cyclo coef = rem[i + d.c_.size() - 1] * lead_inv;
        quo[i] = coef;
        if (coef.is_zero()) continue;
        for (size_t j = 0; j < d.c_.size(); ++j)
            rem[i + j] = rem[i + j] - coef * d.c_[j];
    }
    return {Laurent(0, std::move(quo)), Laurent(0, std::move(rem))};
}

Laurent Laurent::gcd_poly(const Laurent& a, const Laurent& b) {
    Laurent x = a.shifted(a.is_zero() ? 0 : -a.lo_);
    Laurent y = b.shifted(b.is_zero() ? 0 : -b.lo_);
    while (!y.is_zero()) {
        auto [q, r] = divmod_poly(x, y);
        x = y;
        y = r.is_zero() ? r : r.shifted(-r.lo());
        // keep coefficients tame: make the divisor monic each round
        if (!y.is_zero()) y = y.scaled(y.leading().inverse());
    }
    if (x.is_zero()) return x;
    return x.scaled(x.leading().inverse());
}

}  // namespace yhx::scalars
