#include "yhx/shapes.hpp"

#include <algorithm>
#include <functional>

namespace yhx::shapes {

RPartition::RPartition(std::vector<std::vector<long>> comps) : comps_(std::move(comps)) {
    for (auto& c : comps_) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] <= 0) throw Error("partition parts must be positive");
            if (i > 0 && c[i] > c[i - 1]) throw Error("partition parts must be non-increasing");
        }
    }
}

long RPartition::size() const {
    long s = 0;
    for (const auto& c : comps_)
        for (long p : c) s += p;
    return s;
}

long RPartition::part(long h, long row) const {
    const auto& c = comps_[h];
    if (row < 1 || row > static_cast<long>(c.size())) return 0;
    return c[row - 1];
}

bool RPartition::contains(const RPartition& mu) const {
    if (r() != mu.r()) return false;
    for (long h = 0; h < r(); ++h) {
        long rows = std::max(comps_[h].size(), mu.comps_[h].size());
        for (long i = 1; i <= rows; ++i)
            if (mu.part(h, i) > part(h, i)) return false;
    }
    return true;
}

RSkewShape build_skew(const RPartition& outer, const RPartition& inner) {
    if (outer.r() != inner.r()) throw Error("build_skew: component counts differ");
    for (long h = 0; h < outer.r(); ++h) {
        long rows = std::max(outer.comp(h).size(), inner.comp(h).size());
        for (long i = 1; i <= rows; ++i)
            if (inner.part(h, i) > outer.part(h, i))
                throw Error("build_skew: containment fails at component " + std::to_string(h + 1) +
                            ", row " + std::to_string(i));
    }
    RSkewShape s;
    s.outer_ = outer;
    s.inner_ = inner;
    for (long h = 0; h < outer.r(); ++h) {
        std::vector<Box> comp_boxes;
        for (long i = 1; i <= static_cast<long>(outer.comp(h).size()); ++i)
            for (long j = inner.part(h, i) + 1; j <= outer.part(h, i); ++j)
                comp_boxes.push_back(Box{static_cast<int>(h), i, j});
        std::sort(comp_boxes.begin(), comp_boxes.end(), [](const Box& a, const Box& b) {
            if (a.diag() != b.diag()) return a.diag() < b.diag();
            return a.row > b.row;
        });
        s.comp_sizes_.push_back(static_cast<long>(comp_boxes.size()));
        for (auto& b : comp_boxes) s.boxes_.push_back(b);
    }
    for (long i = 0; i < s.n(); ++i)
        s.index_[{s.boxes_[i].comp, s.boxes_[i].row, s.boxes_[i].col}] = i;
    // connected components by edge adjacency inside each component
    s.cc_of_.assign(s.n(), -1);
    int cc = 0;
    for (long i = 0; i < s.n(); ++i) {
        if (s.cc_of_[i] >= 0) continue;
        std::vector<long> stack{i};
        s.cc_of_[i] = cc;
        while (!stack.empty()) {
            long b = stack.back();
            stack.pop_back();
            const Box& bx = s.boxes_[b];
            for (auto [dr, dc] : {std::pair<long, long>{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                long nb = s.box_index(bx.comp, bx.row + dr, bx.col + dc);
                if (nb >= 0 && s.cc_of_[nb] < 0) {
                    s.cc_of_[nb] = cc;
                    stack.push_back(nb);
                }
            }
        }
        ++cc;
    }
    s.cc_count_ = cc;
    return s;
}

RSkewShape straight_shape(const RPartition& lambda) {
    return build_skew(lambda, RPartition(std::vector<std::vector<long>>(lambda.r())));
}

long RSkewShape::box_index(int comp, long row, long col) const {
    auto it = index_.find({comp, row, col});
    return it == index_.end() ? -1 : it->second;
}

std::vector<long> RSkewShape::nw_corner_boxes() const {
    std::vector<long> out;
    for (long i = 0; i < n(); ++i) {
        const Box& b = boxes_[i];
        if (!has_box(b.comp, b.row - 1, b.col) && !has_box(b.comp, b.row, b.col - 1))
            out.push_back(i);
    }
    return out;
}

ContentValue::ContentValue(Rat u, long a) : phase(std::move(u)), offset(a) {
    Int fl = phase.get_num() / phase.get_den();
    phase -= Rat(fl);
    if (phase < 0) phase += 1;
}

PlacedShape place(const RSkewShape& shape, std::vector<ContentValue> contents) {
    if (static_cast<long>(contents.size()) != shape.n())
        throw Error("place: need one content value per box");
    auto fail = [&](const char* axiom, long a, long b) {
        throw Error(std::string("place: ") + axiom + " axiom fails for boxes " +
                    std::to_string(a + 1) + ", " + std::to_string(b + 1));
    };
    long start = 0;
    for (long h = 0; h < shape.r(); ++h) {
        long end = start + shape.comp_size(h);
        for (long a = start; a < end; ++a) {
            for (long b = a + 1; b < end; ++b) {
                long dd = shape.box(b).diag() - shape.box(a).diag();  // >= 0 by label order
                if (contents[a].same_class(contents[b])) {
                    long delta = contents[b].offset - contents[a].offset;
                    if (delta < 0) fail("monotonicity", a, b);
                    if ((delta == 0) != (dd == 0)) fail("diagonal", a, b);
                    if ((delta == 1) != (dd == 1)) fail("adjacency", a, b);
                } else {
                    if (dd == 0) fail("diagonal", a, b);
                    if (dd == 1) fail("adjacency", a, b);
                }
            }
        }
        start = end;
    }
    PlacedShape p;
    p.shape_ = shape;
    p.contents_ = std::move(contents);
    return p;
}

PlacedShape classical_placed(const RSkewShape& shape, const std::vector<Rat>& phases,
                             const std::vector<long>& shifts) {
    if (static_cast<long>(phases.size()) != shape.r())
        throw Error("classical_placed: one phase per component");
    std::vector<ContentValue> contents;
    contents.reserve(shape.n());
    for (long i = 0; i < shape.n(); ++i) {
        const Box& b = shape.box(i);
        long shift = shifts.empty() ? 0 : shifts[b.comp];
        contents.emplace_back(phases[b.comp], b.diag() + shift);
    }
    return place(shape, std::move(contents));
}

long PlacedShape::cyclo_order() const {
    long n = std::max<long>(1, r());
    for (const auto& c : contents_) n = lcm_long(n, c.phase.get_den().get_si());
    return n;
}

long StandardTableau::box_of_value(int v) const {
    for (long i = 0; i < n(); ++i)
        if (entry_[i] == v) return i;
    throw Error("tableau has no such entry");
}

bool is_standard(const RSkewShape& shape, const StandardTableau& t) {
    if (t.n() != shape.n()) return false;
    std::vector<bool> seen(shape.n() + 1, false);
    for (long i = 0; i < shape.n(); ++i) {
        int e = t.entry(i);
        if (e < 1 || e > shape.n() || seen[e]) return false;
        seen[e] = true;
    }
    for (long i = 0; i < shape.n(); ++i) {
        const Box& b = shape.box(i);
        long left = shape.box_index(b.comp, b.row, b.col - 1);
        long up = shape.box_index(b.comp, b.row - 1, b.col);
        if (left >= 0 && t.entry(left) >= t.entry(i)) return false;
        if (up >= 0 && t.entry(up) >= t.entry(i)) return false;
    }
    return true;
}

std::vector<StandardTableau> enumerate_std(const RSkewShape& shape) {
    long n = shape.n();
    std::vector<int> entry(n, 0);
    std::vector<StandardTableau> out;
    // place values 1..n one at a time; a box is available once its left and
    // up neighbours (when present) are filled
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.emplace_back(entry);
            return;
        }
        for (long i = 0; i < n; ++i) {
            if (entry[i] != 0) continue;
            const Box& b = shape.box(i);
            long left = shape.box_index(b.comp, b.row, b.col - 1);
            long up = shape.box_index(b.comp, b.row - 1, b.col);
            if (left >= 0 && entry[left] == 0) continue;
            if (up >= 0 && entry[up] == 0) continue;
            entry[i] = v;
            rec(v + 1);
            entry[i] = 0;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// visit order shared by the two reading tableaux: returns box labels grouped
// by component, with connected components ordered by their diagonal range.
// The row reading walks everything from the northeast end (components in
// reverse, NE-most piece first), the column reading from the southwest end;
// these are the maximum and minimum of {w_T} in the weak order.
std::vector<long> reading_order(const RSkewShape& shape, bool rows, bool ne_first) {
    std::vector<long> comp_order;
    for (long h = 0; h < shape.r(); ++h)
        comp_order.push_back(ne_first ? shape.r() - 1 - h : h);
    std::vector<long> order;
    for (long h : comp_order) {
        // collect this component's connected components with their min diagonal
        std::map<int, long> cc_min_diag;
        std::map<int, std::vector<long>> cc_boxes;
        for (long i = 0; i < shape.n(); ++i) {
            if (shape.box(i).comp != h) continue;
            int cc = shape.cc_of(i);
            cc_boxes[cc].push_back(i);
            auto it = cc_min_diag.find(cc);
            long d = shape.box(i).diag();
            if (it == cc_min_diag.end() || d < it->second) cc_min_diag[cc] = d;
        }
        std::vector<int> ccs;
        for (auto& [cc, _] : cc_boxes) ccs.push_back(cc);
        std::sort(ccs.begin(), ccs.end(), [&](int a, int b) {
            return ne_first ? cc_min_diag[a] > cc_min_diag[b] : cc_min_diag[a] < cc_min_diag[b];
        });
        for (int cc : ccs) {
            auto boxes = cc_boxes[cc];
            std::sort(boxes.begin(), boxes.end(), [&](long a, long b) {
                const Box &ba = shape.box(a), &bb = shape.box(b);
                if (rows) {
                    if (ba.row != bb.row) return ba.row < bb.row;
                    return ba.col < bb.col;
                }
                if (ba.col != bb.col) return ba.col < bb.col;
                return ba.row < bb.row;
            });
            for (long b : boxes) order.push_back(b);
        }
    }
    return order;
}

StandardTableau from_order(const RSkewShape& shape, const std::vector<long>& order) {
    std::vector<int> entry(shape.n(), 0);
    for (size_t v = 0; v < order.size(); ++v) entry[order[v]] = static_cast<int>(v) + 1;
    StandardTableau t(std::move(entry));
    if (!is_standard(shape, t)) throw Error("reading tableau is not standard");
    return t;
}

}  // namespace

StandardTableau row_reading_tableau(const RSkewShape& shape) {
    return from_order(shape, reading_order(shape, true, true));
}

StandardTableau column_reading_tableau(const RSkewShape& shape) {
    return from_order(shape, reading_order(shape, false, false));
}

Perm tableau_to_permutation(const RSkewShape& shape, const StandardTableau& t) {
    std::vector<int> img(shape.n());
    for (long l = 0; l < shape.n(); ++l) img[l] = t.entry(l) - 1;
    return Perm(std::move(img));
}

std::optional<StandardTableau> apply_transposition(const RSkewShape& shape,
                                                   const StandardTableau& t, int i) {
    if (i < 1 || i >= shape.n()) throw Error("apply_transposition: index out of range");
    long a = t.box_of_value(i), b = t.box_of_value(i + 1);
    std::vector<int> entry = t.entries();
    std::swap(entry[a], entry[b]);
    StandardTableau s(std::move(entry));
    if (!is_standard(shape, s)) return std::nullopt;
    return s;
}

bool operator<(const Weight& a, const Weight& b) {
    for (size_t i = 0; i < a.comp.size() && i < b.comp.size(); ++i) {
        if (a.comp[i] != b.comp[i]) return a.comp[i] < b.comp[i];
        if (a.content[i] != b.content[i]) return a.content[i] < b.content[i];
    }
    return a.comp.size() < b.comp.size();
}

Weight weight_of(const PlacedShape& placed, const StandardTableau& t) {
    Weight w;
    for (int v = 1; v <= placed.n(); ++v) {
        long b = t.box_of_value(v);
        w.comp.push_back(placed.shape().box(b).comp + 1);
        w.content.push_back(placed.content(b));
    }
    return w;
}

BruhatReport bruhat_interval(const RSkewShape& shape, long bound) {
    if (shape.n() > bound) throw Error("bruhat_interval: size exceeds configured bound");
    BruhatReport rep;
    rep.w_col = tableau_to_permutation(shape, column_reading_tableau(shape));
    rep.w_row = tableau_to_permutation(shape, row_reading_tableau(shape));
    std::vector<Perm> tab_perms;
    for (const auto& t : enumerate_std(shape)) tab_perms.push_back(tableau_to_permutation(shape, t));
    std::sort(tab_perms.begin(), tab_perms.end());
    rep.std_count = tab_perms.size();
    std::vector<Perm> interval;
    bool contained = true;
    for (const auto& w : all_permutations(static_cast<int>(shape.n())))
        if (weak_leq(rep.w_col, w) && weak_leq(w, rep.w_row)) interval.push_back(w);
    std::sort(interval.begin(), interval.end());
    rep.interval_size = interval.size();
    rep.match = interval == tab_perms;
    // diagnostic: {w_T} always sits inside the strong-order interval too
    for (const auto& w : tab_perms)
        if (!(bruhat_leq(rep.w_col, w) && bruhat_leq(w, rep.w_row))) contained = false;
    rep.strong_containment = contained;
    return rep;
}

bool operator<(const CCRecord& a, const CCRecord& b) {
    if (a.boxes != b.boxes) return a.boxes < b.boxes;
    for (size_t i = 0; i < a.contents.size(); ++i) {
        if (a.contents[i] != b.contents[i])
            return a.contents[i] < b.contents[i];
    }
    return false;
}

std::vector<std::vector<CCRecord>> placed_canonical_form(const PlacedShape& placed) {
    const RSkewShape& sh = placed.shape();
    std::vector<std::vector<CCRecord>> out(sh.r());
    std::map<int, std::vector<long>> cc_boxes;
    for (long i = 0; i < sh.n(); ++i) cc_boxes[sh.cc_of(i)].push_back(i);
    for (auto& [cc, labels] : cc_boxes) {
        long min_row = labels.empty() ? 1 : sh.box(labels[0]).row;
        long min_col = labels.empty() ? 1 : sh.box(labels[0]).col;
        for (long l : labels) {
            min_row = std::min(min_row, sh.box(l).row);
            min_col = std::min(min_col, sh.box(l).col);
        }
        std::vector<std::pair<std::pair<long, long>, ContentValue>> rec;
        for (long l : labels)
            rec.push_back({{sh.box(l).row - min_row + 1, sh.box(l).col - min_col + 1},
                           placed.content(l)});
        std::sort(rec.begin(), rec.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        CCRecord r;
        for (auto& [pos, c] : rec) {
            r.boxes.push_back(pos);
            r.contents.push_back(c);
        }
        out[sh.box(labels[0]).comp].push_back(std::move(r));
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

}  // namespace yhx::shapes
