#pragma once

#include <vector>

#include "yhx/common.hpp"

namespace yhx {

// Dense matrix over an exact field element type T (TowerScalar or FFElem).
// T must provide is_zero(), inverse(), +, -, *, ==.  The exemplar `zero`
// carries any field context T needs.  Multiplication short-circuits on zero
// entries; at desk scale the generator matrices are very sparse and this is
// what keeps exact relation checking fast.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(long rows, long cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

    static Matrix identity(long n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (long i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const T& zero() const { return zero_; }
    T& at(long i, long j) { return a_[i * cols_ + j]; }
    const T& at(long i, long j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_shape(a, b);
        Matrix out = a;
        for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] + b.a_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_shape(a, b);
        Matrix out = a;
        for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] - b.a_[i];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_, a.zero_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const T& av = a.at(i, k);
                if (av.is_zero()) continue;
                for (long j = 0; j < b.cols_; ++j) {
                    const T& bv = b.at(k, j);
                    if (bv.is_zero()) continue;
                    out.at(i, j) = out.at(i, j) + av * bv;
                }
            }
        return out;
    }

    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (auto& x : out.a_) x = x * s;
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<long>(v.size()) != cols_) throw Error("matrix apply shape mismatch");
        std::vector<T> out(rows_, zero_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero() || v[j].is_zero()) continue;
                out[i] = out[i] + at(i, j) * v[j];
            }
        return out;
    }

    Matrix pow(long e) const {
        if (rows_ != cols_) throw Error("matrix power needs a square matrix");
        if (e < 0) return inverse().pow(-e);
        Matrix acc;
        bool acc_set = false;
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) {
                acc = acc_set ? acc * base : base;
                acc_set = true;
            }
            base = base * base;
            e >>= 1;
        }
        if (!acc_set) throw Error("matrix pow(0) needs an explicit identity");
        return acc;
    }

    // Gauss-Jordan inverse; throws on singular input.
    Matrix inverse() const {
        if (rows_ != cols_) throw Error("matrix inverse needs a square matrix");
        long n = rows_;
        Matrix work = *this;
        T one = detect_one();
        Matrix inv = identity(n, zero_, one);
        for (long col = 0; col < n; ++col) {
            long piv = -1;
            for (long rr = col; rr < n; ++rr)
                if (!work.at(rr, col).is_zero()) {
                    piv = rr;
                    break;
                }
            if (piv < 0) throw Error("matrix is singular");
            if (piv != col) {
                for (long j = 0; j < n; ++j) {
                    std::swap(work.at(piv, j), work.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            }
            T pinv = work.at(col, col).inverse();
            for (long j = 0; j < n; ++j) {
                work.at(col, j) = work.at(col, j) * pinv;
                inv.at(col, j) = inv.at(col, j) * pinv;
            }
            for (long rr = 0; rr < n; ++rr) {
                if (rr == col || work.at(rr, col).is_zero()) continue;
                T f = work.at(rr, col);
                for (long j = 0; j < n; ++j) {
                    work.at(rr, j) = work.at(rr, j) - f * work.at(col, j);
                    inv.at(rr, j) = inv.at(rr, j) - f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // any nonzero entry x gives one = x * x^{-1}; falls back for zero matrices
    T detect_one() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return x * x.inverse();
        throw Error("cannot detect multiplicative identity from a zero matrix");
    }

private:
    long rows_, cols_;
    T zero_;
    std::vector<T> a_;

    static void check_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
    }
};

// Minimal polynomial of a square matrix by Krylov-style elimination on the
// flattened powers I, M, M^2, ...; returns monic coefficients low -> high.
template <class T>
std::vector<T> minimal_polynomial(const Matrix<T>& m, const T& one) {
    long n = m.rows();
    const T& zero = m.zero();
    std::vector<std::vector<T>> reduced;  // row-echelon basis of seen powers
    std::vector<long> pivot_of;           // pivot position per basis row
    std::vector<std::vector<T>> combos;   // expression of basis rows in powers
    Matrix<T> power = Matrix<T>::identity(n, zero, one);
    for (long k = 0;; ++k) {
        std::vector<T> vec(n * n, zero);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) vec[i * n + j] = power.at(i, j);
        std::vector<T> combo(k + 1, zero);
        combo[k] = one;
        for (size_t b = 0; b < reduced.size(); ++b) {
            T lead = vec[pivot_of[b]];
            if (lead.is_zero()) continue;
            for (long i = 0; i < n * n; ++i)
                if (!reduced[b][i].is_zero()) vec[i] = vec[i] - lead * reduced[b][i];
            for (size_t c = 0; c < combos[b].size(); ++c)
                combo[c] = combo[c] - lead * combos[b][c];
            vec[pivot_of[b]] = zero;
        }
        long piv = -1;
        for (long i = 0; i < n * n; ++i)
            if (!vec[i].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // dependence found: M^k = -sum combo[c] M^c, normalize monic
            std::vector<T> out(k + 1, zero);
            out[k] = one;
            for (long c = 0; c < k; ++c) out[c] = combo[c];
            return out;
        }
        T pinv = vec[piv].inverse();
        for (auto& x : vec) x = x * pinv;
        for (auto& x : combo) x = x * pinv;
        reduced.push_back(std::move(vec));
        pivot_of.push_back(piv);
        combos.push_back(std::move(combo));
        power = power * m;
        if (k > n) throw Error("minimal polynomial search exceeded dimension bound");
    }
}

}  // namespace yhx
