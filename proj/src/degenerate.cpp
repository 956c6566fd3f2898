#include "yhx/degenerate.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace yhx::degenerate {

using namespace yhx::algebra;
using shapes::Box;

Validation validate_content_vector(const ContentVector& w, long p, long r) {
    if (!is_prime_long(p)) return {false, "p is not prime"};
    if (r % p == 0) return {false, "p divides r"};
    size_t n = w.alpha.size();
    if (w.j.size() != n) return {false, "alpha and j have different lengths"};
    for (long a : w.alpha)
        if (a < 0 || a >= p) return {false, "alpha entry out of Z_p range"};
    for (int jj : w.j)
        if (jj < 1 || jj > r) return {false, "j entry out of 1..r"};
    for (size_t i = 0; i + 1 < n; ++i)
        if (w.j[i] == w.j[i + 1] && w.alpha[i] == w.alpha[i + 1])
            return {false, "adjacent equal contents at positions " + std::to_string(i + 1) +
                               "," + std::to_string(i + 2)};
    if (p > 2) {
        for (size_t i = 0; i < n; ++i)
            for (size_t k = i + 1; k < n; ++k) {
                if (w.j[i] != w.j[k] || w.alpha[i] != w.alpha[k]) continue;
                std::set<long> between;
                for (size_t m = i + 1; m < k; ++m)
                    if (w.j[m] == w.j[i]) between.insert(w.alpha[m]);
                long up = mod_floor(w.alpha[i] + 1, p), down = mod_floor(w.alpha[i] - 1, p);
                if (!between.count(up) || !between.count(down))
                    return {false, "betweenness fails for the repeat at positions " +
                                       std::to_string(i + 1) + "," + std::to_string(k + 1)};
            }
    }
    return {true, ""};
}

bool admissible(const ContentVector& w, int i, long p) {
    if (w.j[i - 1] != w.j[i]) return true;
    long diff = mod_floor(w.alpha[i] - w.alpha[i - 1], p);
    return diff != 1 && diff != p - 1;
}

ContentVector apply_admissible(const ContentVector& w, int i) {
    ContentVector out = w;
    std::swap(out.alpha[i - 1], out.alpha[i]);
    std::swap(out.j[i - 1], out.j[i]);
    return out;
}

SplittableClass splittable_class(const ContentVector& rep, long p, long r) {
    auto v = validate_content_vector(rep, p, r);
    if (!v.ok) throw Error("splittable_class: invalid representative: " + v.reason);
    SplittableClass cls;
    cls.p = p;
    cls.r = r;
    cls.n = static_cast<int>(rep.alpha.size());
    std::set<ContentVector> seen{rep};
    std::deque<ContentVector> queue{rep};
    while (!queue.empty()) {
        ContentVector w = queue.front();
        queue.pop_front();
        for (int i = 1; i < cls.n; ++i) {
            if (!admissible(w, i, p)) continue;
            ContentVector next = apply_admissible(w, i);
            if (seen.count(next)) continue;
            auto val = validate_content_vector(next, p, r);
            if (!val.ok)
                throw Error("splittable_class: class left the content-vector set: " + val.reason);
            seen.insert(next);
            queue.push_back(next);
        }
    }
    cls.members.assign(seen.begin(), seen.end());
    return cls;
}

namespace {

struct FieldChoice {
    const FFContext* field;
    FFElem zeta;
    bool extended;
};

// choose F_{p^k} or its quadratic extension so that every needed square root
// exists, and carry the designated r-th root along
FieldChoice choose_field(long r, long p, const std::vector<long>& sqrt_args) {
    auto base = scalars::ff_context(r, p);
    const FFContext* F = base.field;
    bool need_ext = false;
    for (long a : sqrt_args)
        if (!F->sqrt_in_field(F->from_int(a))) need_ext = true;
    if (!need_ext) return {F, base.zeta, false};
    const FFContext& E = F->quadratic_extension();
    return {&E, F->embed(base.zeta), true};
}

}  // namespace

DegenerateModule build_splittable_module(const SplittableClass& cls) {
    DegenerateModule m;
    m.p = cls.p;
    m.r = cls.r;
    m.n = cls.n;
    m.weights = cls.members;
    const long dim = static_cast<long>(cls.members.size());
    const long p = cls.p;

    // the square-root arguments 1 - (alpha_{k+1} - alpha_k)^{-2} live in F_p
    std::vector<long> sqrt_args;
    for (const auto& w : cls.members)
        for (int k = 1; k < m.n; ++k) {
            if (w.j[k - 1] != w.j[k]) continue;
            long diff = mod_floor(w.alpha[k] - w.alpha[k - 1], p);
            long inv = 1;
            {
                long acc = diff % p, e = p - 2, t = 1;
                while (e > 0) {
                    if (e & 1) t = (t * acc) % p;
                    acc = (acc * acc) % p;
                    e >>= 1;
                }
                inv = t;
            }
            sqrt_args.push_back(mod_floor(1 - inv * inv, p));
        }
    auto fc = choose_field(cls.r, p, sqrt_args);
    m.field = fc.field;
    m.zeta = fc.zeta;
    m.extended_field = fc.extended;

    const FFContext& K = *m.field;
    m.rep.r = cls.r;
    m.rep.n = m.n;
    m.rep.dim = dim;
    m.rep.zero = K.zero();
    m.rep.one = K.one();

    auto index_of = [&](const ContentVector& w) {
        auto it = std::lower_bound(cls.members.begin(), cls.members.end(), w);
        if (it == cls.members.end() || !(*it == w))
            throw Error("build_splittable_module: weight not in class");
        return static_cast<long>(it - cls.members.begin());
    };

    for (int i = 1; i <= m.n; ++i) {
        Matrix<FFElem> ti(dim, dim, K.zero()), xi(dim, dim, K.zero());
        for (long b = 0; b < dim; ++b) {
            ti.at(b, b) = m.zeta.pow(cls.members[b].j[i - 1] - 1);
            xi.at(b, b) = K.from_int(cls.members[b].alpha[i - 1]);
        }
        m.rep.set(t_(i), std::move(ti));
        m.rep.set(x_(i), std::move(xi));
    }
    for (int k = 1; k < m.n; ++k) {
        Matrix<FFElem> fk(dim, dim, K.zero());
        for (long b = 0; b < dim; ++b) {
            const ContentVector& w = cls.members[b];
            if (w.j[k - 1] != w.j[k]) {
                fk.at(index_of(apply_admissible(w, k)), b) = K.one();
            } else {
                FFElem diff = K.from_int(w.alpha[k] - w.alpha[k - 1]);
                FFElem D = diff.inverse();
                fk.at(b, b) = D;
                FFElem arg = K.one() - D * D;
                auto root = K.sqrt_in_field(arg);
                if (!root)
                    throw Error("build_splittable_module: missing square root in chosen field");
                if (!root->is_zero()) {
                    if (!admissible(w, k, p))
                        throw Error("build_splittable_module: nonzero root on an inadmissible move");
                    fk.at(index_of(apply_admissible(w, k)), b) = *root;
                }
            }
        }
        m.rep.set(f_(k), std::move(fk));
    }
    return m;
}

CheckReport wreath_specialize(const DegenerateModule& m) {
    const long p = m.p, r = m.r;
    // wreath weight conditions on every weight
    for (const auto& w : m.weights) {
        std::vector<bool> seen_class(r + 1, false);
        for (int i = 0; i < m.n; ++i) {
            int cls = w.j[i];
            if (!seen_class[cls]) {
                seen_class[cls] = true;
                if (w.alpha[i] != 0)
                    throw Error("wreath_specialize: first occurrence of class " +
                                std::to_string(cls) + " has nonzero content");
            } else {
                bool reachable = false;
                for (int q = 0; q < i; ++q) {
                    if (w.j[q] != cls) continue;
                    long d = mod_floor(w.alpha[i] - w.alpha[q], p);
                    if (d == 1 || d == p - 1) reachable = true;
                }
                if (!reachable)
                    throw Error("wreath_specialize: content at position " + std::to_string(i + 1) +
                                " is not adjacent to any earlier content of its class");
            }
        }
    }

    CheckReport rp;
    const FFContext& K = *m.field;
    auto I = m.rep.identity();
    rp.add("x1_zero", m.rep.get(x_(1)).is_zero());

    // (i,k) = f_i f_{i+1} ... f_{k-2} f_{k-1} f_{k-2} ... f_i
    auto transposition = [&](int i, int k) {
        Matrix<FFElem> acc = I;
        for (int a = i; a <= k - 2; ++a) acc = acc * m.rep.get(f_(a));
        acc = acc * m.rep.get(f_(k - 1));
        for (int a = k - 2; a >= i; --a) acc = acc * m.rep.get(f_(a));
        return acc;
    };
    // x_k is sent to sum_{i<k} e_{i,k} (i,k); the idempotent normalization 1/r
    // is forced by the defining relation f_i x_{i+1} = x_i f_i + e_i together
    // with x_1 = 0
    FFElem rinv = K.from_int(r).inverse();
    for (int k = 2; k <= m.n; ++k) {
        Matrix<FFElem> jm(m.rep.dim, m.rep.dim, K.zero());
        for (int i = 1; i < k; ++i) {
            Matrix<FFElem> tsum(m.rep.dim, m.rep.dim, K.zero());
            const auto& ti = m.rep.get(t_(i));
            const auto& tk = m.rep.get(t_(k));
            Matrix<FFElem> tk_inv = r == 1 ? I : tk.pow(r - 1);
            for (long s = 0; s < r; ++s) {
                Matrix<FFElem> term = I;
                for (long c = 0; c < s; ++c) term = term * ti;
                for (long c = 0; c < s; ++c) term = term * tk_inv;
                tsum = tsum + term;
            }
            jm = jm + (tsum * transposition(i, k)).scaled(rinv);
        }
        rp.add("jm(" + std::to_string(k) + ")", jm == m.rep.get(x_(k)));
    }
    return rp;
}

long chi(const std::vector<long>& lambda) {
    if (lambda.empty()) return 0;
    return lambda.front() - lambda.back() + static_cast<long>(lambda.size());
}

bool is_p_regular(const std::vector<long>& lambda, long p) {
    long run = 1;
    if (!lambda.empty() && run >= p) return false;
    for (size_t i = 1; i < lambda.size(); ++i) {
        run = lambda[i] == lambda[i - 1] ? run + 1 : 1;
        if (run >= p) return false;
    }
    return true;
}

namespace {

bool p_standard_ok(const shapes::RSkewShape& sh, const StandardTableau& t, long p) {
    // any two boxes of one component with i > i', j < j' and
    // i - i' + j' - j + 1 = p need t(i',j') > t(i,j)
    for (long a = 0; a < sh.n(); ++a)
        for (long b = 0; b < sh.n(); ++b) {
            const Box &low = sh.box(a), &high = sh.box(b);
            if (low.comp != high.comp) continue;
            if (!(low.row > high.row && low.col < high.col)) continue;
            if (low.row - high.row + high.col - low.col + 1 != p) continue;
            if (!(t.entry(b) > t.entry(a))) return false;
        }
    return true;
}

}  // namespace

std::vector<StandardTableau> enumerate_p_standard(const RPartition& lambda, long p) {
    for (long h = 0; h < lambda.r(); ++h) {
        const auto& comp = lambda.comp(h);
        if (!is_p_regular(comp, p))
            throw Error("enumerate_p_standard: component " + std::to_string(h + 1) +
                        " is not p-regular");
        if (chi(comp) > p)
            throw Error("enumerate_p_standard: component " + std::to_string(h + 1) +
                        " is not splittable (chi = " + std::to_string(chi(comp)) + ")");
    }
    auto sh = shapes::straight_shape(lambda);
    std::vector<StandardTableau> out;
    for (const auto& t : enumerate_std(sh))
        if (p_standard_ok(sh, t, p)) out.push_back(t);
    return out;
}

DegenerateModule build_wreath_module(const RPartition& lambda, long p, long r) {
    if (lambda.r() != r) throw Error("build_wreath_module: component count mismatch");
    auto sh = shapes::straight_shape(lambda);
    auto tabs = enumerate_p_standard(lambda, p);
    const long dim = static_cast<long>(tabs.size());
    const int n = static_cast<int>(sh.n());

    DegenerateModule m;
    m.p = p;
    m.r = r;
    m.n = n;

    // per tableau and position: component index and content mod p
    std::vector<std::vector<int>> comp(dim);
    std::vector<std::vector<long>> cont(dim);
    for (long b = 0; b < dim; ++b) {
        for (int v = 1; v <= n; ++v) {
            long box = tabs[b].box_of_value(v);
            comp[b].push_back(sh.box(box).comp + 1);
            cont[b].push_back(mod_floor(sh.box(box).diag(), p));
        }
        m.weights.push_back({cont[b], comp[b]});
    }

    std::vector<long> sqrt_args;
    for (long b = 0; b < dim; ++b)
        for (int i = 1; i < n; ++i) {
            if (comp[b][i - 1] != comp[b][i]) continue;
            long diff = mod_floor(cont[b][i] - cont[b][i - 1], p);
            if (diff == 0)
                throw Error("build_wreath_module: consecutive entries on content-equal "
                            "diagonals mod p");
            long acc = diff, e = p - 2, inv = 1;
            while (e > 0) {
                if (e & 1) inv = (inv * acc) % p;
                acc = (acc * acc) % p;
                e >>= 1;
            }
            sqrt_args.push_back(mod_floor(1 - inv * inv, p));
        }
    auto fc = choose_field(r, p, sqrt_args);
    m.field = fc.field;
    m.zeta = fc.zeta;
    m.extended_field = fc.extended;
    const FFContext& K = *m.field;

    m.rep.r = r;
    m.rep.n = n;
    m.rep.dim = dim;
    m.rep.zero = K.zero();
    m.rep.one = K.one();

    std::map<std::vector<int>, long> index;
    for (long b = 0; b < dim; ++b) index[tabs[b].entries()] = b;

    for (int j = 1; j <= n; ++j) {
        Matrix<FFElem> tj(dim, dim, K.zero()), xj(dim, dim, K.zero());
        for (long b = 0; b < dim; ++b) {
            tj.at(b, b) = m.zeta.pow(comp[b][j - 1] - 1);
            xj.at(b, b) = K.from_int(cont[b][j - 1]);
        }
        m.rep.set(t_(j), std::move(tj));
        m.rep.set(x_(j), std::move(xj));
    }
    for (int i = 1; i < n; ++i) {
        Matrix<FFElem> gi(dim, dim, K.zero());
        for (long b = 0; b < dim; ++b) {
            auto st = apply_transposition(sh, tabs[b], i);
            long target = -1;
            if (st) {
                auto it = index.find(st->entries());
                if (it != index.end()) target = it->second;  // p-standard neighbours only
            }
            if (comp[b][i - 1] != comp[b][i]) {
                if (target < 0)
                    throw Error("build_wreath_module: cross-component swap left the basis");
                gi.at(target, b) = K.one();
            } else {
                FFElem D = K.from_int(cont[b][i] - cont[b][i - 1]).inverse();
                gi.at(b, b) = D;
                auto root = K.sqrt_in_field(K.one() - D * D);
                if (!root)
                    throw Error("build_wreath_module: missing square root in chosen field");
                if (!root->is_zero()) {
                    if (target < 0)
                        throw Error("build_wreath_module: nonzero root with no p-standard target");
                    gi.at(target, b) = *root;
                }
            }
        }
        m.rep.set(f_(i), std::move(gi));
    }
    return m;
}

}  // namespace yhx::degenerate
