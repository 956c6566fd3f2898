#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "yhx/permutation.hpp"

namespace yhx::shapes {

// An r-tuple of partitions.  Components may be empty; parts are positive and
// non-increasing (trailing zeros are stripped on construction).
class RPartition {
public:
    RPartition() = default;
    explicit RPartition(std::vector<std::vector<long>> comps);

    long r() const { return static_cast<long>(comps_.size()); }
    long size() const;  // total number of boxes
    const std::vector<std::vector<long>>& comps() const { return comps_; }
    const std::vector<long>& comp(long h) const { return comps_[h]; }
    long part(long h, long row) const;  // 0 when row exceeds the component

    bool contains(const RPartition& mu) const;  // componentwise containment

    friend bool operator==(const RPartition& a, const RPartition& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator<(const RPartition& a, const RPartition& b) {
        return a.comps_ < b.comps_;
    }

private:
    std::vector<std::vector<long>> comps_;
};

struct Box {
    int comp;       // 0-based component index
    long row, col;  // 1-based coordinates inside the component
    long diag() const { return col - row; }
    friend bool operator==(const Box& a, const Box& b) {
        return a.comp == b.comp && a.row == b.row && a.col == b.col;
    }
};

// Skew shape of an r-partition pair with the canonical box labeling: boxes
// sorted by component, then diagonal ascending, then row descending (i.e.
// along each diagonal from its lower end upward).  Connected components are
// computed by edge adjacency inside each component.
class RSkewShape {
public:
    RSkewShape() = default;

    long r() const { return outer_.r(); }
    long n() const { return static_cast<long>(boxes_.size()); }
    const RPartition& outer() const { return outer_; }
    const RPartition& inner() const { return inner_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    const Box& box(long label) const { return boxes_[label]; }  // 0-based label
    long comp_size(long h) const { return comp_sizes_[h]; }

    // index of the box at (comp,row,col), or -1
    long box_index(int comp, long row, long col) const;
    bool has_box(int comp, long row, long col) const { return box_index(comp, row, col) >= 0; }

    int cc_of(long label) const { return cc_of_[label]; }
    int cc_count() const { return cc_count_; }
    // northwest corner boxes: no box above and none to the left
    std::vector<long> nw_corner_boxes() const;

    friend bool operator==(const RSkewShape& a, const RSkewShape& b) {
        return a.outer_ == b.outer_ && a.inner_ == b.inner_;
    }

    friend RSkewShape build_skew(const RPartition& outer, const RPartition& inner);

private:
    RPartition outer_, inner_;
    std::vector<Box> boxes_;
    std::vector<long> comp_sizes_;
    std::vector<int> cc_of_;
    int cc_count_ = 0;
    std::map<std::tuple<int, long, long>, long> index_;
};

RSkewShape build_skew(const RPartition& outer, const RPartition& inner);
RSkewShape straight_shape(const RPartition& lambda);

// Content of one box: q^{2c} = e^{2 pi i u} q^{2a} with u rational in [0,1).
struct ContentValue {
    Rat phase;    // u, normalized into [0,1)
    long offset;  // a

    ContentValue() : phase(0), offset(0) {}
    ContentValue(Rat u, long a);

    bool same_class(const ContentValue& o) const { return phase == o.phase; }
    friend bool operator==(const ContentValue& a, const ContentValue& b) {
        return a.phase == b.phase && a.offset == b.offset;
    }
    friend bool operator!=(const ContentValue& a, const ContentValue& b) { return !(a == b); }
    friend bool operator<(const ContentValue& a, const ContentValue& b) {
        if (a.phase != b.phase) return a.phase < b.phase;
        return a.offset < b.offset;
    }
};

// Skew shape plus a validated content function (one value per box, in
// canonical label order).
class PlacedShape {
public:
    PlacedShape() = default;

    const RSkewShape& shape() const { return shape_; }
    const std::vector<ContentValue>& contents() const { return contents_; }
    const ContentValue& content(long label) const { return contents_[label]; }
    long n() const { return shape_.n(); }
    long r() const { return shape_.r(); }

    // least common multiple of r and all phase denominators: the natural
    // cyclotomic order for modules over this shape
    long cyclo_order() const;

    friend bool operator==(const PlacedShape& a, const PlacedShape& b) {
        return a.shape_ == b.shape_ && a.contents_ == b.contents_;
    }

    friend PlacedShape place(const RSkewShape& shape, std::vector<ContentValue> contents);

private:
    RSkewShape shape_;
    std::vector<ContentValue> contents_;
};

// Validates the three placedness axioms inside each component; throws with the
// axiom name and the offending box pair on violation.
PlacedShape place(const RSkewShape& shape, std::vector<ContentValue> contents);

// Classical contents c = u_h + (col - row) + shift_h per component.
PlacedShape classical_placed(const RSkewShape& shape, const std::vector<Rat>& phases,
                             const std::vector<long>& shifts = {});

// Standard filling: entry_of[label] in 1..n, increasing along rows and down
// columns of every component.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<int> entry_of) : entry_(std::move(entry_of)) {}

    int entry(long label) const { return entry_[label]; }
    const std::vector<int>& entries() const { return entry_; }
    long n() const { return static_cast<long>(entry_.size()); }
    // 0-based label of the box containing value v (1-based)
    long box_of_value(int v) const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.entry_ == b.entry_;
    }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        return a.entry_ < b.entry_;
    }

private:
    std::vector<int> entry_;
};

bool is_standard(const RSkewShape& shape, const StandardTableau& t);
std::vector<StandardTableau> enumerate_std(const RSkewShape& shape);
StandardTableau row_reading_tableau(const RSkewShape& shape);
StandardTableau column_reading_tableau(const RSkewShape& shape);

// The two-row map w_T: position l (canonical label, 1-based) -> T(box_l).
Perm tableau_to_permutation(const RSkewShape& shape, const StandardTableau& t);

// s_i T when standard (entries i, i+1 swapped), 1 <= i <= n-1.
std::optional<StandardTableau> apply_transposition(const RSkewShape& shape,
                                                   const StandardTableau& t, int i);

struct Weight {
    std::vector<int> comp;               // p(T|1..n), 1-based component indices
    std::vector<ContentValue> content;   // c(T|1..n)

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.comp == b.comp && a.content == b.content;
    }
    friend bool operator<(const Weight& a, const Weight& b);
};

Weight weight_of(const PlacedShape& placed, const StandardTableau& t);

struct BruhatReport {
    Perm w_col, w_row;
    size_t interval_size = 0;
    size_t std_count = 0;
    bool match = false;              // {w_T} equals [w_col, w_row] in the weak order
    bool strong_containment = false; // {w_T} lies inside the strong-order interval
};

// Brute-force check of the tableau <-> interval bijection.  The interval is
// taken in the weak (Bruhat) order: the strong-order reading is impossible in
// general (strong intervals of rank two are diamonds, but shapes with three
// standard tableaux produce three-element chains).
BruhatReport bruhat_interval(const RSkewShape& shape, long bound = 8);

// Connected-component record normalized up to translation: used for abstract
// equality of placed shapes (identical components may sit at different
// diagonals without changing the placed shape).
struct CCRecord {
    std::vector<std::pair<long, long>> boxes;  // sorted, translated to min row/col 1
    std::vector<ContentValue> contents;        // in box order above

    friend bool operator==(const CCRecord& a, const CCRecord& b) {
        return a.boxes == b.boxes && a.contents == b.contents;
    }
    friend bool operator<(const CCRecord& a, const CCRecord& b);
};

// Per component, the sorted list of its connected-component records.
std::vector<std::vector<CCRecord>> placed_canonical_form(const PlacedShape& placed);

}  // namespace yhx::shapes
