#pragma once

#include <array>
#include <optional>
#include <memory>

#include "yhx/common.hpp"

namespace yhx::scalars {

class FFContext;

// Element of F_{p^k}, a coefficient vector in the power basis of the field's
// defining polynomial.  Elements carry their context; mixing contexts is an
// error (embed explicitly via FFContext::embed).
class FFElem {
public:
    FFElem() : ctx_(nullptr) { c_.fill(0); }
    FFElem(const FFContext* ctx, std::array<uint32_t, 8> c) : ctx_(ctx), c_(c) {}

    const FFContext* ctx() const { return ctx_; }
    const std::array<uint32_t, 8>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    FFElem operator-() const;
    FFElem inverse() const;
    FFElem pow(const Int& e) const;

    friend bool operator==(const FFElem& a, const FFElem& b);
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

    // Index in the canonical element enumeration (coefficient-vector
    // lexicographic order, c_0 most significant).
    size_t lex_index() const;

private:
    const FFContext* ctx_;
    std::array<uint32_t, 8> c_;
    friend class FFContext;
};

// F_{p^k} with a fixed defining polynomial, the canonically first irreducible
// monic polynomial of the right degree.  Contexts are interned: requesting the
// same (p, k) twice yields the same instance, so pointer identity is field
// identity.  All tables are built at construction; instances are immutable.
class FFContext {
public:
    long p;
    int k;
    std::vector<uint32_t> poly;  // monic, size k+1, coefficients mod p
    size_t size;                 // p^k

    static const FFContext& get(long p, int k);

    FFElem zero() const;
    FFElem one() const;
    FFElem from_int(long v) const;  // image of v under Z -> F_p -> F_{p^k}
    FFElem from_coeffs(const std::vector<uint32_t>& c) const;
    FFElem element_at(size_t lex_index) const;
    FFElem generator() const;  // the class z of x, zero when k == 1

    // Canonical square root inside this field: the lex-least s with s*s == a,
    // or nullopt when a is not a square here.
    std::optional<FFElem> sqrt_in_field(const FFElem& a) const;

    // Quadratic extension F_{p^{2k}} together with the canonical embedding.
    const FFContext& quadratic_extension() const;
    FFElem embed(const FFElem& a) const;  // from this field into quadratic_extension()

    Int order_minus_one() const;

private:
    FFContext(long p, int k);
    std::vector<int32_t> sqrt_table_;           // lex index -> lex index of canonical root, -1 if none
    mutable const FFContext* ext2_ = nullptr;   // interned, created on demand
    mutable std::vector<uint32_t> embed_root_;  // image of generator in ext2_
    void ensure_ext() const;
};

struct FFWithRoot {
    const FFContext* field;
    FFElem zeta;  // designated element of multiplicative order r
    long r;
};

// F_{p^k} with k = ord_r(p) and a designated primitive r-th root of unity.
// Rejects p | r.
FFWithRoot ff_context(long r, long p);

struct FFSqrt {
    FFElem root;
    bool extended;  // true when the root lives in the quadratic extension
};

// Deterministic square root; extends the field when the input is a non-square.
FFSqrt ff_sqrt(const FFElem& a);

}  // namespace yhx::scalars
