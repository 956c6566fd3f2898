#include "yhx/cyclotomic.hpp"

#include <mutex>

namespace yhx::scalars {

namespace polyq {

std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

static void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> div_exact(const std::vector<Rat>& num, const std::vector<Rat>& den) {
    std::vector<Rat> r = num, d = den;
    trim(r);
    trim(d);
    if (d.empty()) throw Error("polynomial division by zero");
    if (r.empty()) return {};
    if (r.size() < d.size()) throw Error("polynomial division is not exact");
    std::vector<Rat> q(r.size() - d.size() + 1, Rat(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Rat coef = r[i + d.size() - 1] / d.back();
        q[i] = coef;
        if (coef == 0) continue;
        for (size_t j = 0; j < d.size(); ++j) r[i + j] -= coef * d[j];
    }
    trim(r);
    if (!r.empty()) throw Error("polynomial division is not exact");
    return q;
}

std::vector<Rat> x_pow_minus_one(long n) {
    std::vector<Rat> p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace polyq

int mobius(long n) {
    int m = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

// Phi_N = prod_{d | N} (x^{N/d} - 1)^{mobius(d)}.
static std::vector<Rat> cyclotomic_poly(long n) {
    std::vector<Rat> num = {Rat(1)}, den = {Rat(1)};
    for (long d : divisors(n)) {
        int m = mobius(d);
        if (m == 1)
            num = polyq::mul(num, polyq::x_pow_minus_one(n / d));
        else if (m == -1)
            den = polyq::mul(den, polyq::x_pow_minus_one(n / d));
    }
    return polyq::div_exact(num, den);
}

CycloContext::CycloContext(long n) : order(n) {
    if (n < 1) throw Error("cyclotomic order must be >= 1");
    phi = cyclotomic_poly(n);
    deg = static_cast<int>(phi.size()) - 1;
}

const CycloContext& CycloContext::get(long n) {
    static std::mutex mu;
    static std::map<long, const CycloContext*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, new CycloContext(n)).first;
    return *it->second;
}

Cyclo::Cyclo(long order, std::vector<Rat> coeffs) : order_(order) {
    const auto& ctx = CycloContext::get(order);
    if (static_cast<int>(coeffs.size()) == ctx.deg) {
        c_ = std::move(coeffs);
    } else {
        reduce_from(std::move(coeffs));
    }
}

void Cyclo::reduce_from(std::vector<Rat> raw) {
    const auto& ctx = CycloContext::get(order_);
    while (raw.size() > static_cast<size_t>(ctx.deg)) {
        Rat coef = raw.back();
        size_t top = raw.size() - 1;
        raw.pop_back();
        if (coef != 0) {
            size_t shift = top - ctx.deg;
            for (int j = 0; j < ctx.deg; ++j) raw[shift + j] -= coef * ctx.phi[j];
        }
    }
    raw.resize(ctx.deg, Rat(0));
    c_ = std::move(raw);
}

Cyclo Cyclo::from_rat(const Rat& r, long order) {
    const auto& ctx = CycloContext::get(order);
    std::vector<Rat> c(ctx.deg, Rat(0));
    c[0] = r;
    return Cyclo(order, std::move(c));
}

Cyclo Cyclo::root_of_unity(long order, long k) {
    k = mod_floor(k, order);
    const auto& ctx = CycloContext::get(order);
    std::vector<Rat> raw(k + 1, Rat(0));
    raw[k] = 1;
    Cyclo z(order, std::vector<Rat>(ctx.deg, Rat(0)));
    z.reduce_from(std::move(raw));
    return z;
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rat_value() const {
    if (!is_rational()) throw Error("cyclotomic element is not rational");
    return c_[0];
}

Cyclo Cyclo::lift(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw Error("cyclotomic lift: order mismatch");
    long step = new_order / order_;
    std::vector<Rat> raw;
    raw.resize(static_cast<size_t>((c_.size() - 1) * step + 1), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    Cyclo out(new_order, std::vector<Rat>(CycloContext::get(new_order).deg, Rat(0)));
    out.reduce_from(std::move(raw));
    return out;
}

static void align(const Cyclo& a, const Cyclo& b, Cyclo& la, Cyclo& lb) {
    long n = std::lcm(a.order(), b.order());
    la = a.lift(n);
    lb = b.lift(n);
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) {
        std::vector<Rat> c(a.c_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
        return Cyclo(a.order_, std::move(c));
    }
    Cyclo la, lb;
    align(a, b, la, lb);
    return la + lb;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) {
        std::vector<Rat> c(a.c_);
        for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
        return Cyclo(a.order_, std::move(c));
    }
    Cyclo la, lb;
    align(a, b, la, lb);
    return la - lb;
}

Cyclo Cyclo::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return Cyclo(order_, std::move(c));
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) {
        if (a.is_zero() || b.is_zero()) return Cyclo::zero(a.order_);
        std::vector<Rat> raw(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        Cyclo out(a.order_, std::vector<Rat>(a.c_.size(), Rat(0)));
        out.reduce_from(std::move(raw));
        return out;
    }
    Cyclo la, lb;
    align(a, b, la, lb);
    return la * lb;
}

// Extended Euclid in Q[x] against Phi_N.
Cyclo Cyclo::inverse() const {
    if (is_zero()) throw Error("cyclotomic division by zero");
    if (is_rational()) return from_rat(Rat(1) / c_[0], order_);
    const auto& ctx = CycloContext::get(order_);
    std::vector<Rat> r0 = ctx.phi, r1(c_);
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(r1);
    std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // s tracks coefficient of this element
    while (true) {
        // divide r0 by r1
        std::vector<Rat> q;
        std::vector<Rat> rem = r0;
        trim(rem);
        if (r1.empty()) throw Error("cyclotomic inverse: unexpected zero remainder");
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, Rat(0));
            for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
                Rat coef = rem[i + r1.size() - 1] / r1.back();
                q[i] = coef;
                if (coef == 0) continue;
                for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= coef * r1[j];
            }
            trim(rem);
        }
        // new s = s0 - q*s1
        std::vector<Rat> qs = polyq::mul(q, s1);
        std::vector<Rat> s2(std::max(s0.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        if (rem.empty()) {
            // r1 is the gcd; Phi_N irreducible => r1 is a nonzero constant
            if (r1.size() != 1)
                throw Error("cyclotomic inverse: gcd not constant (Phi reducible?)");
            Rat lead = r1[0];
            for (auto& x : s1) x /= lead;
            Cyclo out(order_, std::vector<Rat>(ctx.deg, Rat(0)));
            out.reduce_from(std::move(s1));
            return out;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc = Cyclo::one(order_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    Cyclo la, lb;
    align(a, b, la, lb);
    return la.c_ == lb.c_;
}

}  // namespace yhx::scalars
