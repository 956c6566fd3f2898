#include "yhx/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace yhx::shapes {

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw Error("not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

Perm Perm::compose(const Perm& other) const {
    if (n() != other.n()) throw Error("permutation size mismatch");
    std::vector<int> v(img_.size());
    for (int i = 0; i < n(); ++i) v[i] = img_[other(i)];
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 0; i < n(); ++i) v[img_[i]] = i;
    return Perm(std::move(v));
}

long Perm::length() const {
    long inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

// u <= w iff for all i,j: #{k <= i : u(k) <= j} >= #{k <= i : w(k) <= j}.
bool bruhat_leq(const Perm& u, const Perm& w) {
    int n = u.n();
    if (n != w.n()) throw Error("permutation size mismatch");
    std::vector<int> du(n, 0), dw(n, 0);
    for (int i = 0; i < n; ++i) {
        // column counts accumulate row by row
        for (int j = u(i); j < n; ++j) ++du[j];
        for (int j = w(i); j < n; ++j) ++dw[j];
        for (int j = 0; j < n; ++j)
            if (du[j] < dw[j]) return false;
    }
    return true;
}

bool weak_leq(const Perm& u, const Perm& w) {
    return u.length() + w.compose(u.inverse()).length() == w.length();
}

std::vector<Perm> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace yhx::shapes
