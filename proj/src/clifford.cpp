#include "yhx/clifford.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace yhx::clifford {

using namespace yhx::algebra;
using scalars::Cyclo;
using shapes::Box;
using shapes::CCRecord;
using shapes::ContentValue;
using shapes::StandardTableau;

PlacedShape twist_shape(const PlacedShape& placed, long p, long power) {
    if (p < 1) throw Error("twist_shape: p must be positive");
    std::vector<ContentValue> contents;
    for (long i = 0; i < placed.n(); ++i) {
        const ContentValue& c = placed.content(i);
        contents.emplace_back(c.phase - make_rat(power, p), c.offset);
    }
    return place(placed.shape(), std::move(contents));
}

StabilizerInfo stabilizer(const PlacedShape& placed, long p) {
    StabilizerInfo out;
    out.p = p;
    auto base = placed_canonical_form(placed);
    out.k = p;
    for (long m = 1; m <= p; ++m) {
        if (placed_canonical_form(twist_shape(placed, p, m)) == base) {
            out.k = m;
            break;
        }
    }
    if (p % out.k != 0) throw Error("stabilizer: fixing powers do not form a subgroup");
    out.order = p / out.k;
    return out;
}

namespace {

// box bijection realizing the sigma^k matching: each connected component of
// the twisted shape has a unique equal-record partner among the originals
std::vector<long> matching_box_map(const PlacedShape& placed, long p, long k) {
    const auto& sh = placed.shape();
    PlacedShape twisted = twist_shape(placed, p, k);

    // group boxes by connected component, normalized coordinates
    std::map<int, std::vector<long>> cc_boxes;
    for (long i = 0; i < sh.n(); ++i) cc_boxes[sh.cc_of(i)].push_back(i);
    struct CCInfo {
        int comp;
        CCRecord rec_orig, rec_twisted;
        std::vector<long> labels;                  // sorted by normalized position
        std::vector<std::pair<long, long>> npos;   // normalized positions
    };
    std::vector<CCInfo> ccs;
    for (auto& [cc, labels] : cc_boxes) {
        CCInfo info;
        info.comp = sh.box(labels[0]).comp;
        long minr = sh.box(labels[0]).row, minc = sh.box(labels[0]).col;
        for (long l : labels) {
            minr = std::min(minr, sh.box(l).row);
            minc = std::min(minc, sh.box(l).col);
        }
        std::vector<std::pair<std::pair<long, long>, long>> pos;
        for (long l : labels)
            pos.push_back({{sh.box(l).row - minr + 1, sh.box(l).col - minc + 1}, l});
        std::sort(pos.begin(), pos.end());
        for (auto& [np, l] : pos) {
            info.npos.push_back(np);
            info.labels.push_back(l);
            info.rec_orig.boxes.push_back(np);
            info.rec_orig.contents.push_back(placed.content(l));
            info.rec_twisted.boxes.push_back(np);
            info.rec_twisted.contents.push_back(twisted.content(l));
        }
        ccs.push_back(std::move(info));
    }

    // match each twisted component to the unique equal-record original within
    // the same r-component
    std::vector<long> box_map(sh.n(), -1);
    std::vector<bool> used(ccs.size(), false);
    for (const auto& src : ccs) {
        long target = -1;
        for (size_t t = 0; t < ccs.size(); ++t) {
            if (used[t] || ccs[t].comp != src.comp) continue;
            if (ccs[t].rec_orig == src.rec_twisted) {
                if (target >= 0)
                    throw Error("clifford_split: ambiguous component matching");
                target = static_cast<long>(t);
            }
        }
        if (target < 0)
            throw Error("clifford_split: no matching component for the twist");
        used[target] = true;
        const auto& dst = ccs[target];
        if (src.npos != dst.npos)
            throw Error("clifford_split: matched components have different shapes");
        for (size_t i = 0; i < src.labels.size(); ++i)
            box_map[src.labels[i]] = dst.labels[i];
    }
    return box_map;
}

}  // namespace

IdempotentSplit clifford_split(const CalibratedModule& m, long p) {
    IdempotentSplit out;
    out.stab = stabilizer(m.placed, p);
    const long dim = m.dim();
    const int n = m.rep.n;
    long cyclo = lcm_long(m.cyclo_order, p);
    TowerScalar zero = TowerScalar::zero(), one = TowerScalar::one();
    auto I = m.rep.identity();

    // the fixed-subalgebra generator set acting on the module
    std::vector<std::pair<std::string, Matrix<TowerScalar>>> gens;
    for (int j = 1; j <= n; ++j) gens.push_back({"t" + std::to_string(j), m.rep.get(t_(j))});
    for (int i = 1; i < n; ++i) gens.push_back({"g" + std::to_string(i), m.rep.get(g_(i))});
    if (n >= 1) gens.push_back({"X1^p", m.rep.get(X_(1)).pow(p)});
    for (int i = 1; i < n; ++i)
        gens.push_back({"X" + std::to_string(i) + "Xinv" + std::to_string(i + 1),
                        m.rep.get(X_(i)) * m.rep.get(X_(i + 1)).inverse()});

    const long K = out.stab.order;
    Matrix<TowerScalar> S = I;
    if (K > 1) {
        // tableau permutation induced by the box matching
        auto box_map = matching_box_map(m.placed, p, out.stab.k);
        std::vector<long> perm(dim, -1);
        for (long b = 0; b < dim; ++b) {
            std::vector<int> entries(m.n(), 0);
            for (long box = 0; box < m.n(); ++box)
                entries[box_map[box]] = m.basis[b].entry(box);
            long target = m.index_of(StandardTableau(entries));
            if (target < 0) throw Error("clifford_split: twisted tableau is not standard");
            perm[b] = target;
        }

        // scalars s_b solved along g-moves from the first basis vector
        std::vector<TowerScalar> s(dim, zero);
        std::vector<bool> have(dim, false);
        s[0] = one;
        have[0] = true;
        std::vector<long> queue{0};
        while (!queue.empty()) {
            long b = queue.back();
            queue.pop_back();
            for (int i = 1; i < n; ++i) {
                const auto& gi = m.rep.get(g_(i));
                for (long rr = 0; rr < dim; ++rr) {
                    if (rr == b || gi.at(rr, b).is_zero() || have[rr]) continue;
                    // commutation forces s_rr = s_b * B_{perm(b)} / B_b where B are
                    // the off-diagonal g coefficients
                    const TowerScalar& Bb = gi.at(rr, b);
                    const TowerScalar& Bp = gi.at(perm[rr], perm[b]);
                    s[rr] = s[b] * Bp / Bb;
                    have[rr] = true;
                    queue.push_back(rr);
                }
            }
        }
        for (long b = 0; b < dim; ++b)
            if (!have[b]) throw Error("clifford_split: weight graph is disconnected");

        S = Matrix<TowerScalar>(dim, dim, zero);
        for (long b = 0; b < dim; ++b) S.at(perm[b], b) = s[b];

        // normalization: S^{|K|} must be the identity
        Matrix<TowerScalar> Spow = S.pow(K);
        if (!(Spow == I)) {
            // a constant global scalar is the only freedom; check whether the
            // defect is constant and equal to one after rescaling is possible
            throw Error("clifford_split: intertwiner normalization fails (S^|K| != 1)");
        }
        // exact intertwining checks
        auto& rp = out.report;
        for (int j = 1; j <= n; ++j)
            rp.add("S_commutes_t" + std::to_string(j),
                   S * m.rep.get(t_(j)) == m.rep.get(t_(j)) * S);
        for (int i = 1; i < n; ++i)
            rp.add("S_commutes_g" + std::to_string(i),
                   S * m.rep.get(g_(i)) == m.rep.get(g_(i)) * S);
        if (n >= 1) {
            TowerScalar zk = TowerScalar::from_cyclo(
                Cyclo::root_of_unity(cyclo, out.stab.k * (cyclo / p)));
            rp.add("S_twists_X1",
                   S * m.rep.get(X_(1)) == (m.rep.get(X_(1)) * S).scaled(zk));
            rp.add("S_commutes_X1p",
                   S * m.rep.get(X_(1)).pow(p) == m.rep.get(X_(1)).pow(p) * S);
        }
        if (!rp.all_pass) throw Error("clifford_split: intertwiner inconsistency");
    }

    // idempotents p_j = (1/|K|) sum_l zeta^{-jkl} S^l
    std::vector<Matrix<TowerScalar>> powS(K, I);
    for (long l = 1; l < K; ++l) powS[l] = powS[l - 1] * S;
    std::vector<Matrix<TowerScalar>> pj;
    for (long j = 0; j < K; ++j) {
        Matrix<TowerScalar> acc(dim, dim, zero);
        for (long l = 0; l < K; ++l) {
            TowerScalar c = TowerScalar::from_cyclo(
                Cyclo::root_of_unity(cyclo, mod_floor(-j * out.stab.k * l, p) * (cyclo / p)));
            acc = acc + powS[l].scaled(c);
        }
        pj.push_back(acc.scaled(TowerScalar::from_rat(make_rat(1, K))));
    }
    auto& rp = out.report;
    for (long j = 0; j < K; ++j)
        rp.add("p_idempotent(" + std::to_string(j) + ")", pj[j] * pj[j] == pj[j]);
    for (long a = 0; a < K; ++a)
        for (long b = a + 1; b < K; ++b)
            rp.add("p_orthogonal(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   (pj[a] * pj[b]).is_zero());
    Matrix<TowerScalar> psum(dim, dim, zero);
    for (const auto& pm : pj) psum = psum + pm;
    rp.add("p_sum", psum == I);

    // components: column spaces of the idempotents
    long dims_total = 0;
    for (long j = 0; j < K; ++j) {
        // greedy basis from the columns of p_j
        std::vector<std::vector<TowerScalar>> basis;
        std::vector<long> pivots;
        for (long c = 0; c < dim; ++c) {
            std::vector<TowerScalar> v(dim, zero);
            for (long rr = 0; rr < dim; ++rr) v[rr] = pj[j].at(rr, c);
            for (size_t b = 0; b < basis.size(); ++b) {
                TowerScalar lead = v[pivots[b]];
                if (lead.is_zero()) continue;
                for (long rr = 0; rr < dim; ++rr) v[rr] = v[rr] - lead * basis[b][rr];
            }
            long piv = -1;
            for (long rr = 0; rr < dim; ++rr)
                if (!v[rr].is_zero()) {
                    piv = rr;
                    break;
                }
            if (piv < 0) continue;
            TowerScalar inv = v[piv].inverse();
            for (auto& x : v) x = x * inv;
            basis.push_back(std::move(v));
            pivots.push_back(piv);
        }
        SplitComponent comp;
        comp.j = j;
        comp.dimension = static_cast<long>(basis.size());
        dims_total += comp.dimension;

        long d = comp.dimension;
        Matrix<TowerScalar> B(dim, d, zero);
        for (long c = 0; c < d; ++c)
            for (long rr = 0; rr < dim; ++rr) B.at(rr, c) = basis[c][rr];

        bool invariant_all = true;
        for (const auto& [name, Y] : gens) {
            // solve B * Z = Y * B exactly (restriction of Y to the image);
            // the basis columns carry unit pivots, so coordinates read off by
            // eliminating pivot rows
            Matrix<TowerScalar> work = Y * B;
            Matrix<TowerScalar> Z(d, d, zero);
            for (long c = 0; c < d; ++c) {
                for (long b = 0; b < d; ++b) {
                    TowerScalar coef = work.at(pivots[b], c);
                    if (coef.is_zero()) continue;
                    Z.at(b, c) = coef;
                    for (long rr = 0; rr < dim; ++rr)
                        work.at(rr, c) = work.at(rr, c) - coef * B.at(rr, b);
                }
                for (long rr = 0; rr < dim; ++rr)
                    if (!work.at(rr, c).is_zero()) invariant_all = false;
            }
            comp.restricted.push_back({name, std::move(Z)});
        }
        rp.add("invariance(" + std::to_string(j) + ")", invariant_all);

        // weight support: eigenvalues of the diagonal restricted generators
        for (long c = 0; c < d; ++c) {
            std::vector<TowerScalar> w;
            for (const auto& [name, Z] : comp.restricted) {
                if (name[0] == 'g') continue;
                w.push_back(Z.at(c, c));
            }
            comp.weight_support.push_back(std::move(w));
        }

        // connectivity of the joint weight graph via restricted g entries
        std::vector<long> uf(d);
        for (long i = 0; i < d; ++i) uf[i] = i;
        std::function<long(long)> find = [&](long v) {
            return uf[v] == v ? v : uf[v] = find(uf[v]);
        };
        for (const auto& [name, Z] : comp.restricted) {
            if (name[0] != 'g') continue;
            for (long c = 0; c < d; ++c)
                for (long rr = 0; rr < d; ++rr)
                    if (rr != c && !Z.at(rr, c).is_zero()) uf[find(rr)] = find(c);
        }
        long roots = 0;
        for (long i = 0; i < d; ++i)
            if (find(i) == i) ++roots;
        comp.connected = roots <= 1;
        rp.add("component_connected(" + std::to_string(j) + ")", comp.connected);
        out.components.push_back(std::move(comp));
    }
    rp.add("dims_sum", dims_total == dim);
    return out;
}

YdpCount count_ydp_simples(long r, long d, long p, long n) {
    if (p < 1 || d % p != 0) throw Error("count_ydp_simples: p must divide d");
    using Lambda = std::vector<std::vector<std::vector<long>>>;  // [h][slot]

    std::vector<std::vector<std::vector<long>>> parts_by_size(n + 1);
    {
        std::vector<long> cur;
        std::function<void(long, long, long)> rec = [&](long left, long maxpart, long bucket) {
            if (left == 0) {
                parts_by_size[bucket].push_back(cur);
                return;
            }
            for (long q = std::min(left, maxpart); q >= 1; --q) {
                cur.push_back(q);
                rec(left - q, q, bucket);
                cur.pop_back();
            }
        };
        for (long s = 0; s <= n; ++s) rec(s, s == 0 ? 1 : s, s);
    }

    std::vector<Lambda> all;
    Lambda cur(r, std::vector<std::vector<long>>(d));
    std::function<void(long, long)> rec = [&](long slot, long left) {
        if (slot == r * d) {
            if (left == 0) all.push_back(cur);
            return;
        }
        for (long s = 0; s <= left; ++s)
            for (const auto& part : parts_by_size[s]) {
                cur[slot / d][slot % d] = part;
                rec(slot + 1, left - s);
                cur[slot / d][slot % d].clear();
            }
    };
    rec(0, n);

    auto sigma = [&](const Lambda& lam) {
        Lambda out = lam;
        for (long h = 0; h < r; ++h)
            for (long l = 0; l < d / p; ++l)
                for (long k = 0; k < p; ++k)
                    out[h][l * p + k] = lam[h][l * p + mod_floor(k - 1, p)];
        return out;
    };

    YdpCount out;
    std::set<Lambda> seen;
    for (const auto& lam : all) {
        if (seen.count(lam)) continue;
        // orbit and minimal fixing power
        Lambda cur_l = lam, minimal = lam;
        long f = 0;
        std::vector<Lambda> orbit;
        for (long m = 1; m <= p; ++m) {
            cur_l = sigma(cur_l);
            orbit.push_back(cur_l);
            if (f == 0 && cur_l == lam) f = m;
            if (cur_l < minimal) minimal = cur_l;
        }
        for (const auto& o : orbit) seen.insert(o);
        YdpOrbit rec_out;
        rec_out.rep = minimal;
        rec_out.f = f;
        rec_out.order = p / f;
        rec_out.orbit_size = f;
        for (long j = 0; j < rec_out.order; ++j) rec_out.indices.push_back(j);
        out.total_indices += rec_out.order;
        out.orbits.push_back(std::move(rec_out));
    }
    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const YdpOrbit& a, const YdpOrbit& b) { return a.rep < b.rep; });
    return out;
}

}  // namespace yhx::clifford
