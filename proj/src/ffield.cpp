#include "yhx/ffield.hpp"

#include <map>
#include <mutex>

namespace yhx::scalars {

namespace {

// dense polynomial arithmetic over F_p on small vectors
std::vector<uint32_t> pmul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<uint32_t>((out[i + j] + 1ull * a[i] * b[j]) % p);
    return out;
}

void ptrim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint32_t> pmod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, long p) {
    ptrim(a);
    long inv_lead = 1;
    {
        // m is monic in all call sites, but stay general
        long lead = m.back();
        long t = 1, acc = lead % p;
        long e = p - 2;
        t = 1;
        while (e > 0) {
            if (e & 1) t = (t * acc) % p;
            acc = (acc * acc) % p;
            e >>= 1;
        }
        inv_lead = t;
    }
    while (a.size() >= m.size()) {
        uint32_t coef = static_cast<uint32_t>((1ull * a.back() * inv_lead) % p);
        size_t shift = a.size() - m.size();
        if (coef != 0)
            for (size_t j = 0; j < m.size(); ++j)
                a[shift + j] = static_cast<uint32_t>(
                    (a[shift + j] + 1ull * (p - 1) * coef % p * m[j]) % p);
        a.pop_back();
        ptrim(a);
    }
    return a;
}

std::vector<uint32_t> pmodpow(std::vector<uint32_t> base, Int e, const std::vector<uint32_t>& m,
                              long p) {
    std::vector<uint32_t> acc = {1};
    base = pmod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = pmod(pmul(acc, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

std::vector<uint32_t> pgcd(std::vector<uint32_t> a, std::vector<uint32_t> b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        a = pmod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const std::vector<uint32_t>& f, long p) {
    int k = static_cast<int>(f.size()) - 1;
    // x^{p^k} == x mod f, and gcd(x^{p^{k/t}} - x, f) == 1 for prime t | k
    Int pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::vector<uint32_t> x = {0, 1};
    auto xq = pmodpow(x, pk, f, p);
    // xq - x must be 0 mod f
    std::vector<uint32_t> d = xq;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<uint32_t>((d[1] + p - 1) % p);
    ptrim(d);
    if (!d.empty()) return false;
    for (long t : prime_factors(k)) {
        Int e = 1;
        for (int i = 0; i < k / t; ++i) e *= p;
        auto xe = pmodpow(x, e, f, p);
        std::vector<uint32_t> g = xe;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<uint32_t>((g[1] + p - 1) % p);
        auto gg = pgcd(g, f, p);
        if (!(gg.size() == 1)) return false;
    }
    return true;
}

// canonically first monic irreducible of degree k over F_p
std::vector<uint32_t> find_irreducible(long p, int k) {
    if (k == 1) return {0, 1};  // x
    std::vector<uint32_t> f(k + 1, 0);
    f[k] = 1;
    // iterate constant coefficients lexicographically (c_0 most significant)
    std::vector<uint32_t> c(k, 0);
    while (true) {
        for (int i = 0; i < k; ++i) f[i] = c[i];
        if (is_irreducible(f, p)) return f;
        int i = k - 1;
        while (i >= 0 && c[i] == static_cast<uint32_t>(p - 1)) c[i--] = 0;
        if (i < 0) throw Error("no irreducible polynomial found");
        ++c[i];
    }
}

}  // namespace

bool FFElem::is_zero() const {
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

bool FFElem::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

static void check_ctx(const FFElem& a, const FFElem& b) {
    if (a.ctx() != b.ctx()) throw Error("finite field elements from different fields");
}

FFElem operator+(const FFElem& a, const FFElem& b) {
    check_ctx(a, b);
    long p = a.ctx()->p;
    std::array<uint32_t, 8> c{};
    for (int i = 0; i < a.ctx()->k; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % p;
    return FFElem(a.ctx(), c);
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    check_ctx(a, b);
    long p = a.ctx()->p;
    std::array<uint32_t, 8> c{};
    for (int i = 0; i < a.ctx()->k; ++i) c[i] = (a.coeffs()[i] + p - b.coeffs()[i]) % p;
    return FFElem(a.ctx(), c);
}

FFElem FFElem::operator-() const {
    long p = ctx_->p;
    std::array<uint32_t, 8> c{};
    for (int i = 0; i < ctx_->k; ++i) c[i] = (p - c_[i]) % p;
    return FFElem(ctx_, c);
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    check_ctx(a, b);
    const FFContext* F = a.ctx();
    long p = F->p;
    int k = F->k;
    std::array<uint32_t, 16> raw{};
    for (int i = 0; i < k; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (int j = 0; j < k; ++j)
            raw[i + j] = static_cast<uint32_t>((raw[i + j] + 1ull * a.coeffs()[i] * b.coeffs()[j]) % p);
    }
    // reduce by the monic defining polynomial
    for (int d = 2 * k - 2; d >= k; --d) {
        uint32_t coef = raw[d];
        if (coef == 0) continue;
        raw[d] = 0;
        for (int j = 0; j < k; ++j)
            raw[d - k + j] =
                static_cast<uint32_t>((raw[d - k + j] + 1ull * coef * (p - F->poly[j]) % p) % p);
    }
    std::array<uint32_t, 8> c{};
    for (int i = 0; i < k; ++i) c[i] = raw[i];
    return FFElem(F, c);
}

FFElem FFElem::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    FFElem acc = ctx_->one(), base = *this;
    Int ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) acc = acc * base;
        base = base * base;
        ee >>= 1;
    }
    return acc;
}

FFElem FFElem::inverse() const {
    if (is_zero()) throw Error("finite field division by zero");
    return pow(ctx_->order_minus_one() - 1);
}

bool operator==(const FFElem& a, const FFElem& b) {
    check_ctx(a, b);
    for (int i = 0; i < a.ctx()->k; ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return false;
    return true;
}

size_t FFElem::lex_index() const {
    size_t idx = 0;
    for (int i = 0; i < ctx_->k; ++i) idx = idx * ctx_->p + c_[i];
    return idx;
}

FFContext::FFContext(long p_, int k_) : p(p_), k(k_) {
    if (!is_prime_long(p)) throw Error("finite field characteristic must be prime");
    if (k < 1 || k > 8) throw Error("finite field extension degree out of range");
    poly = find_irreducible(p, k);
    size = 1;
    for (int i = 0; i < k; ++i) size *= p;
    if (size > 4000000) throw Error("finite field too large for table construction");
    // canonical square roots: first preimage in lex order wins
    sqrt_table_.assign(size, -1);
    for (size_t i = 0; i < size; ++i) {
        FFElem e = element_at(i);
        size_t sq = (e * e).lex_index();
        if (sqrt_table_[sq] < 0) sqrt_table_[sq] = static_cast<int32_t>(i);
    }
}

const FFContext& FFContext::get(long p, int k) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, const FFContext*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, new FFContext(p, k)).first;
    return *it->second;
}

FFElem FFContext::zero() const { return FFElem(this, {}); }

FFElem FFContext::one() const {
    std::array<uint32_t, 8> c{};
    c[0] = 1;
    return FFElem(this, c);
}

FFElem FFContext::from_int(long v) const {
    std::array<uint32_t, 8> c{};
    c[0] = static_cast<uint32_t>(mod_floor(v, p));
    return FFElem(this, c);
}

FFElem FFContext::from_coeffs(const std::vector<uint32_t>& in) const {
    if (static_cast<int>(in.size()) > k) throw Error("finite field coefficient vector too long");
    std::array<uint32_t, 8> c{};
    for (size_t i = 0; i < in.size(); ++i) c[i] = in[i] % p;
    return FFElem(this, c);
}

FFElem FFContext::element_at(size_t idx) const {
    std::array<uint32_t, 8> c{};
    for (int i = k - 1; i >= 0; --i) {
        c[i] = static_cast<uint32_t>(idx % p);
        idx /= p;
    }
    return FFElem(this, c);
}

FFElem FFContext::generator() const {
    std::array<uint32_t, 8> c{};
    if (k > 1) c[1] = 1;
    return FFElem(this, c);
}

Int FFContext::order_minus_one() const {
    Int n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    return n - 1;
}

std::optional<FFElem> FFContext::sqrt_in_field(const FFElem& a) const {
    if (a.ctx() != this) throw Error("sqrt_in_field: wrong field");
    int32_t r = sqrt_table_[a.lex_index()];
    if (r < 0) return std::nullopt;
    return element_at(static_cast<size_t>(r));
}

void FFContext::ensure_ext() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (ext2_) return;
    const FFContext& E = FFContext::get(p, 2 * k);
    // embed: find the lex-first root of our defining polynomial in E
    if (k == 1) {
        ext2_ = &E;
        embed_root_ = {0};  // unused, prime field embeds coefficientwise
        return;
    }
    for (size_t i = 0; i < E.size; ++i) {
        FFElem cand = E.element_at(i);
        FFElem acc = E.zero();
        for (int d = k; d >= 0; --d) acc = acc * cand + E.from_int(poly[d]);
        if (acc.is_zero()) {
            embed_root_.assign(cand.coeffs().begin(), cand.coeffs().begin() + E.k);
            ext2_ = &E;
            return;
        }
    }
    throw Error("no embedding root found in quadratic extension");
}

const FFContext& FFContext::quadratic_extension() const {
    ensure_ext();
    return *ext2_;
}

FFElem FFContext::embed(const FFElem& a) const {
    if (a.ctx() != this) throw Error("embed: wrong source field");
    ensure_ext();
    const FFContext& E = *ext2_;
    if (k == 1) return E.from_int(a.coeffs()[0]);
    FFElem root = E.from_coeffs(embed_root_);
    FFElem acc = E.zero();
    for (int d = k - 1; d >= 0; --d) acc = acc * root + E.from_int(a.coeffs()[d]);
    return acc;
}

FFWithRoot ff_context(long r, long p) {
    if (r < 1) throw Error("ff_context: r must be positive");
    if (!is_prime_long(p)) throw Error("ff_context: p must be prime");
    if (r % p == 0) throw Error("ff_context: p divides r");
    long k = (r == 1) ? 1 : mult_order_mod(p, r);
    const FFContext& F = FFContext::get(p, static_cast<int>(k));
    // designated primitive r-th root of unity: lex-first element of order r
    Int cof = F.order_minus_one() / r;
    for (size_t i = 1; i < F.size; ++i) {
        FFElem e = F.element_at(i);
        if (!e.pow(r).is_one()) continue;
        bool exact = true;
        for (long t : prime_factors(r))
            if (e.pow(r / t).is_one()) {
                exact = false;
                break;
            }
        if (r == 1) exact = e.is_one();
        if (exact) return {&F, e, r};
    }
    (void)cof;
    throw Error("ff_context: no element of order r found");
}

FFSqrt ff_sqrt(const FFElem& a) {
    const FFContext* F = a.ctx();
    auto in_field = F->sqrt_in_field(a);
    if (in_field) return {*in_field, false};
    const FFContext& E = F->quadratic_extension();
    FFElem lifted = F->embed(a);
    auto up = E.sqrt_in_field(lifted);
    if (!up) throw Error("ff_sqrt: element is not a square in the quadratic extension");
    return {*up, true};
}

}  // namespace yhx::scalars
