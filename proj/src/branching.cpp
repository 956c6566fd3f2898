#include "yhx/branching.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace yhx::branching {

using shapes::Box;
using shapes::StandardTableau;

namespace {

long part_at(const std::vector<long>& p, long row) {
    return (row >= 1 && row <= static_cast<long>(p.size())) ? p[row - 1] : 0;
}

long size_of(const std::vector<long>& p) {
    long s = 0;
    for (long v : p) s += v;
    return s;
}

std::vector<std::vector<long>> partitions_of(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

}  // namespace

long lr_coefficient(const std::vector<long>& lambda, const std::vector<long>& mu,
                    const std::vector<long>& nu) {
    long nlam = size_of(lambda), nmu = size_of(mu), nnu = size_of(nu);
    if (nlam != nmu + nnu) return 0;
    for (size_t i = 0; i < mu.size(); ++i)
        if (part_at(mu, i + 1) > part_at(lambda, i + 1)) return 0;
    if (nnu == 0) return 1;

    // boxes in reverse reading order: rows top to bottom, right to left
    struct Cell {
        long row, col;
    };
    std::vector<Cell> cells;
    for (long i = 1; i <= static_cast<long>(lambda.size()); ++i)
        for (long j = part_at(lambda, i); j > part_at(mu, i); --j) cells.push_back({i, j});

    long rows = static_cast<long>(lambda.size());
    long width = lambda.empty() ? 0 : lambda[0];
    std::vector<std::vector<long>> fill(rows + 1, std::vector<long>(width + 2, 0));
    std::vector<long> cnt(nnu + 2, 0);
    long count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[idx];
        long maxv = static_cast<long>(nu.size());
        for (long v = 1; v <= maxv; ++v) {
            if (cnt[v] + 1 > part_at(nu, v)) continue;
            if (v >= 2 && cnt[v] + 1 > cnt[v - 1]) continue;  // lattice prefix
            // weakly increasing along rows: right neighbour already placed
            if (j < part_at(lambda, i) && fill[i][j + 1] != 0 && v > fill[i][j + 1]) continue;
            // strictly increasing down columns: the box above is placed earlier
            if (i > 1 && fill[i - 1][j] != 0 && v <= fill[i - 1][j]) continue;
            fill[i][j] = v;
            ++cnt[v];
            rec(idx + 1);
            --cnt[v];
            fill[i][j] = 0;
        }
    };
    rec(0);
    return count;
}

DecompositionReport restrict_shape(const PlacedShape& placed) {
    const RSkewShape& sh = placed.shape();
    long r = sh.r();
    std::vector<long> comp_sizes;
    for (long h = 0; h < r; ++h) comp_sizes.push_back(sh.comp_size(h));

    // candidate nu per component: partitions of the component's box count
    std::vector<std::vector<std::vector<long>>> cand(r);
    for (long h = 0; h < r; ++h) cand[h] = partitions_of(comp_sizes[h]);

    DecompositionReport rep;
    long total_std = static_cast<long>(enumerate_std(sh).size());
    rep.lhs = total_std;
    rep.rhs = 0;

    std::vector<std::vector<long>> choice(r);
    std::function<void(long, long)> rec = [&](long h, long mult) {
        if (mult == 0) return;
        if (h == r) {
            RPartition nu(choice);
            long dim = static_cast<long>(enumerate_std(shapes::straight_shape(nu)).size());
            rep.constituents.push_back({nu, {}, mult, dim});
            rep.rhs += Int(mult) * dim;
            return;
        }
        std::vector<long> lam = sh.outer().comp(h), mu = sh.inner().comp(h);
        for (const auto& nu_h : cand[h]) {
            long c = lr_coefficient(lam, mu, nu_h);
            if (c == 0) continue;
            choice[h] = nu_h;
            rec(h + 1, mult * c);
        }
    };
    rec(0, 1);
    std::sort(rep.constituents.begin(), rep.constituents.end(),
              [](const Constituent& a, const Constituent& b) { return a.label < b.label; });
    rep.ledger_ok = rep.lhs == rep.rhs;
    rep.ledger_desc = "#Std(shape) = sum of mult * #Std(nu)";
    return rep;
}

DecompositionReport restrict_module(const CalibratedModule& m) { return restrict_shape(m.placed); }

namespace {

struct GlueBox {
    long row, col;
    ContentValue content;
};

// realize a set of boxes (one component) as an (outer, inner) pair; throws
// when the set is not a skew diagram
std::pair<std::vector<long>, std::vector<long>> realize_rows(std::vector<GlueBox>& boxes) {
    if (boxes.empty()) return {{}, {}};
    long minr = boxes[0].row, minc = boxes[0].col;
    for (const auto& b : boxes) {
        minr = std::min(minr, b.row);
        minc = std::min(minc, b.col);
    }
    for (auto& b : boxes) {
        b.row += 1 - minr;
        b.col += 1 - minc;
    }
    long maxr = 0;
    for (const auto& b : boxes) maxr = std::max(maxr, b.row);
    std::vector<long> lo(maxr + 1, 0), hi(maxr + 1, 0);
    for (const auto& b : boxes) {
        if (lo[b.row] == 0) {
            lo[b.row] = hi[b.row] = b.col;
        } else {
            lo[b.row] = std::min(lo[b.row], b.col);
            hi[b.row] = std::max(hi[b.row], b.col);
        }
    }
    // contiguity per row
    std::vector<std::vector<bool>> present(maxr + 1);
    for (long i = 1; i <= maxr; ++i) present[i].assign(hi[i] + 2, false);
    for (const auto& b : boxes) {
        if (present[b.row][b.col]) throw Error("induce: glued boxes collide");
        present[b.row][b.col] = true;
    }
    for (long i = 1; i <= maxr; ++i)
        for (long j = lo[i]; j <= hi[i]; ++j)
            if (lo[i] > 0 && !present[i][j]) throw Error("induce: glued shape has a row gap");
    // fill empty rows bottom-up and check monotonicity
    std::vector<long> outer(maxr, 0), inner(maxr, 0);
    long next_out = 0, next_in = 0;
    for (long i = maxr; i >= 1; --i) {
        if (lo[i] == 0) {
            outer[i - 1] = next_out;
            inner[i - 1] = next_out;
        } else {
            if (hi[i] < next_out || lo[i] - 1 < next_in)
                throw Error("induce: glued shape is not a skew diagram");
            outer[i - 1] = hi[i];
            inner[i - 1] = lo[i] - 1;
            next_out = hi[i];
            next_in = lo[i] - 1;
        }
        next_out = outer[i - 1];
        next_in = inner[i - 1];
    }
    return {outer, inner};
}

}  // namespace

DecompositionReport induce(const PlacedShape& a, const PlacedShape& b) {
    if (a.r() != b.r()) throw Error("induce: component counts differ");
    long r = a.r();
    long k = a.n(), l = b.n(), n = k + l;

    // per-component box lists in label order
    std::vector<std::vector<GlueBox>> abox(r), bbox(r);
    for (long i = 0; i < a.n(); ++i) {
        const Box& bx = a.shape().box(i);
        abox[bx.comp].push_back({bx.row, bx.col, a.content(i)});
    }
    for (long i = 0; i < b.n(); ++i) {
        const Box& bx = b.shape().box(i);
        bbox[bx.comp].push_back({bx.row, bx.col, b.content(i)});
    }

    // compatibility: last box of a's component + 1 = first box of b's component
    for (long h = 0; h < r; ++h) {
        if (abox[h].empty() || bbox[h].empty()) continue;
        const ContentValue& ca = abox[h].back().content;
        const ContentValue& cb = bbox[h].front().content;
        if (!(ca.phase == cb.phase && cb.offset == ca.offset + 1))
            throw Error("induce: content compatibility fails at component " +
                        std::to_string(h + 1));
    }

    std::vector<PlacedShape> glued;
    for (long mask = 0; mask < (1L << r); ++mask) {
        std::vector<std::vector<long>> outs(r), ins(r);
        std::vector<std::map<std::tuple<long, long, long>, ContentValue>> content_at(r);
        bool ok = true;
        for (long h = 0; h < r && ok; ++h) {
            bool vertical = (mask >> h) & 1;
            std::vector<GlueBox> boxes = abox[h];
            if (!bbox[h].empty()) {
                long dr = 0, dc = 0;
                if (!abox[h].empty()) {
                    const GlueBox& last = abox[h].back();
                    long tr = vertical ? last.row - 1 : last.row;
                    long tc = vertical ? last.col : last.col + 1;
                    dr = tr - bbox[h].front().row;
                    dc = tc - bbox[h].front().col;
                }
                for (const auto& gb : bbox[h]) boxes.push_back({gb.row + dr, gb.col + dc, gb.content});
            }
            auto [outer, inner] = realize_rows(boxes);
            outs[h] = outer;
            ins[h] = inner;
            for (const auto& gb : boxes)
                content_at[h].insert({{h, gb.row, gb.col}, gb.content});
        }
        if (!ok) continue;
        RSkewShape shape = build_skew(RPartition(outs), RPartition(ins));
        std::vector<ContentValue> contents;
        for (long i = 0; i < shape.n(); ++i) {
            const Box& bx = shape.box(i);
            contents.push_back(content_at[bx.comp].at({bx.comp, bx.row, bx.col}));
        }
        PlacedShape p = place(shape, std::move(contents));  // placedness validation
        if (std::find(glued.begin(), glued.end(), p) == glued.end()) glued.push_back(p);
    }

    DecompositionReport rep;
    Int binom = 1;
    for (long i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
    long dimA = static_cast<long>(enumerate_std(a.shape()).size());
    long dimB = static_cast<long>(enumerate_std(b.shape()).size());
    rep.lhs = binom * dimA * dimB;
    rep.rhs = 0;
    for (const auto& p : glued) {
        long dim = static_cast<long>(enumerate_std(p.shape()).size());
        rep.constituents.push_back({{}, p, 1, dim});
        rep.rhs += dim;
    }
    rep.ledger_ok = rep.lhs == rep.rhs;
    rep.ledger_desc = "binom(n,k) * dimA * dimB = sum of #Std(glued)";
    return rep;
}

CyclotomicParams CyclotomicParams::fresh(long d) {
    CyclotomicParams p;
    for (long i = 0; i < d; ++i) p.values.emplace_back(make_rat(i, d), 0);
    return p;
}

std::vector<scalars::TowerScalar> nw_content_values(const CalibratedModule& m) {
    std::vector<scalars::TowerScalar> out;
    for (long b : m.placed.shape().nw_corner_boxes()) {
        const ContentValue& c = m.placed.content(b);
        auto v = scalars::TowerScalar::phase_q_power(c.phase, 2 * static_cast<int>(c.offset),
                                                     m.cyclo_order);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

bool cyclotomic_membership(const CalibratedModule& m, const CyclotomicParams& params) {
    std::vector<scalars::TowerScalar> vs;
    for (const auto& c : params.values)
        vs.push_back(scalars::TowerScalar::phase_q_power(c.phase, 2 * static_cast<int>(c.offset),
                                                         m.cyclo_order));
    for (const auto& v : nw_content_values(m))
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) return false;
    return true;
}

long x1_minpoly_degree(const CalibratedModule& m) {
    if (m.n() == 0) return 1;
    auto p = minimal_polynomial(m.rep.get(algebra::X_(1)), m.rep.one);
    return static_cast<long>(p.size()) - 1;
}

std::vector<PlacedShape> enumerate_cyclotomic_simples(long r, long d, long n,
                                                      const CyclotomicParams& params) {
    if (params.d() != d) throw Error("enumerate_cyclotomic_simples: need d parameter values");
    for (long i = 0; i < d; ++i)
        for (long j = i + 1; j < d; ++j)
            if (params.values[i].phase == params.values[j].phase)
                throw Error("enumerate_cyclotomic_simples: parameters must lie in distinct "
                            "phase classes");

    // all (r*d)-tuples of partitions with n boxes in total, slot (h, i)
    std::vector<std::vector<std::vector<long>>> parts_by_size(n + 1);
    for (long s = 0; s <= n; ++s) parts_by_size[s] = partitions_of(s);
    std::vector<PlacedShape> out;
    std::vector<std::vector<long>> slots(r * d);
    std::function<void(long, long)> rec = [&](long slot, long left) {
        if (slot == r * d) {
            if (left != 0) return;
            // assemble: component h = diagonal stack of slots (h,0..d-1),
            // slot i pinned to content v_i at its northwest corner
            std::vector<std::vector<long>> outs(r), ins(r);
            std::vector<std::map<std::pair<long, long>, ContentValue>> content_at(r);
            for (long h = 0; h < r; ++h) {
                std::vector<std::vector<long>> blocks;
                std::vector<long> block_slot;
                for (long i = 0; i < d; ++i) {
                    if (!slots[h * d + i].empty()) {
                        blocks.push_back(slots[h * d + i]);
                        block_slot.push_back(i);
                    }
                }
                long mblocks = static_cast<long>(blocks.size());
                std::vector<long> G(mblocks, 0), O(mblocks, 0);
                for (long bi = 0; bi < mblocks; ++bi)
                    for (long bj = bi + 1; bj < mblocks; ++bj)
                        G[bi] += static_cast<long>(blocks[bj].size());
                for (long bi = 0; bi < mblocks; ++bi)
                    for (long bj = 0; bj < bi; ++bj) O[bi] += blocks[bj][0];
                long rows = mblocks == 0 ? 0 : G[0] + static_cast<long>(blocks[0].size());
                outs[h].assign(rows, 0);
                ins[h].assign(rows, 0);
                for (long bi = 0; bi < mblocks; ++bi) {
                    const auto& lam = blocks[bi];
                    const ContentValue& base = params.values[block_slot[bi]];
                    for (long t = 0; t < static_cast<long>(lam.size()); ++t) {
                        outs[h][G[bi] + t] = O[bi] + lam[t];
                        ins[h][G[bi] + t] = O[bi];
                        for (long c = 1; c <= lam[t]; ++c)
                            content_at[h].insert(
                                {{G[bi] + t + 1, O[bi] + c},
                                 ContentValue(base.phase, base.offset + (c - (t + 1)))});
                    }
                }
            }
            RSkewShape shape = build_skew(RPartition(outs), RPartition(ins));
            std::vector<ContentValue> contents;
            for (long i = 0; i < shape.n(); ++i) {
                const Box& bx = shape.box(i);
                contents.push_back(content_at[bx.comp].at({bx.row, bx.col}));
            }
            out.push_back(place(shape, std::move(contents)));
            return;
        }
        for (long s = 0; s <= left; ++s)
            for (const auto& p : parts_by_size[s]) {
                slots[slot] = p;
                rec(slot + 1, left - s);
                slots[slot].clear();
            }
    };
    rec(0, n);
    return out;
}

}  // namespace yhx::branching
