#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace yhx {

// All arithmetic in this library is exact.  Rationals are GMP-backed;
// everything above them (cyclotomic fields, Laurent rational functions,
// finite fields) is built in this project.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw Error("bad rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw Error("rational with zero denominator: " + s);
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline long mod_floor(long a, long m) {
    long v = a % m;
    return v < 0 ? v + m : v;
}

// Multiplicative order of a modulo m (a, m coprime).
inline long mult_order_mod(long a, long m) {
    if (m == 1) return 1;
    long v = mod_floor(a, m), acc = v, k = 1;
    while (acc != 1) {
        acc = (acc * v) % m;
        ++k;
        if (k > m) throw Error("mult_order_mod: not coprime");
    }
    return k;
}

inline bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace yhx
