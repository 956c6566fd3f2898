#pragma once

#include <vector>

#include "yhx/common.hpp"

namespace yhx::shapes {

// Permutation of {0..n-1} in one-line notation: img[i] is the image of i.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> img);
    static Perm identity(int n);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& one_line() const { return img_; }

    Perm compose(const Perm& other) const;  // (*this) after other: i -> this(other(i))
    Perm inverse() const;
    long length() const;  // number of inversions

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

// Strong Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Perm& u, const Perm& w);

// Weak (Bruhat) order: u <= w iff some reduced word of w ends with one of u,
// equivalently l(w u^-1) + l(u) = l(w).  This is the order in which the
// standard tableaux of a shape form the interval [w_C, w_R].
bool weak_leq(const Perm& u, const Perm& w);

std::vector<Perm> all_permutations(int n);

}  // namespace yhx::shapes
