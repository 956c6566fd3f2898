#pragma once

#include <map>
#include <string>

#include "yhx/ffield.hpp"
#include "yhx/matrix.hpp"
#include "yhx/tower.hpp"

namespace yhx::algebra {

using scalars::Cyclo;
using scalars::FFElem;
using scalars::TowerScalar;

struct GenSym {
    enum class Kind { t, g, X, Xinv, f, x } kind;
    int index;  // 1-based; t_j, x_j for 1..n, g_i, f_i for 1..n-1, X/Xinv usually 1

    friend bool operator<(const GenSym& a, const GenSym& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }
    friend bool operator==(const GenSym& a, const GenSym& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    std::string str() const;
};

inline GenSym t_(int j) { return {GenSym::Kind::t, j}; }
inline GenSym g_(int i) { return {GenSym::Kind::g, i}; }
inline GenSym X_(int j) { return {GenSym::Kind::X, j}; }
inline GenSym Xinv_(int j) { return {GenSym::Kind::Xinv, j}; }
inline GenSym f_(int i) { return {GenSym::Kind::f, i}; }
inline GenSym x_(int j) { return {GenSym::Kind::x, j}; }

// Scalar coefficient of a relation term: rat * (q - q^{-1})^qq.  The q-part
// only appears in the affine flavor; finite-field evaluation rejects it.
struct RelCoeff {
    Rat rat;
    int qq = 0;
};

struct RelTerm {
    RelCoeff coeff;
    std::vector<GenSym> word;  // empty word = identity
};

// One defining relation, stored as a linear combination of words that must
// evaluate to the zero matrix.
struct Relation {
    std::string name;
    std::vector<RelTerm> terms;
};

enum class Flavor { affineYH, degenerateYH, wreath };

struct RelationSet {
    long r = 1;
    int n = 1;
    Flavor flavor = Flavor::affineYH;
    std::vector<Relation> relations;
};

// Full instantiation of the defining relations over all admissible indices,
// with e_i expanded through its t-sum.  The wreath flavor is the t/f part of
// the degenerate presentation (the group G(r,1,n)).
RelationSet defining_relations(long r, int n, Flavor flavor);

// Matrix model of the generators.  Calibrated modules store every X_j; plain
// relation checking only needs X_1 and its inverse.
template <class T>
struct MatrixRep {
    long r = 1;
    int n = 1;
    long dim = 0;
    T zero, one;
    std::map<GenSym, Matrix<T>> mats;

    bool has(const GenSym& s) const { return mats.count(s) > 0; }
    const Matrix<T>& get(const GenSym& s) const {
        auto it = mats.find(s);
        if (it == mats.end()) throw Error("unbound generator symbol " + s.str());
        return it->second;
    }
    void set(const GenSym& s, Matrix<T> m) { mats.insert_or_assign(s, std::move(m)); }
    Matrix<T> identity() const { return Matrix<T>::identity(dim, zero, one); }
};

template <class T>
struct ScalarFrom;  // converts RelCoeff into T

template <>
struct ScalarFrom<TowerScalar> {
    TowerScalar operator()(const RelCoeff& c) const {
        TowerScalar v = TowerScalar::from_rat(c.rat);
        if (c.qq != 0) {
            TowerScalar qmqi = TowerScalar::q_power(1) - TowerScalar::q_power(-1);
            v = v * qmqi.pow(c.qq);
        }
        return v;
    }
};

template <>
struct ScalarFrom<FFElem> {
    const scalars::FFContext* ctx;
    FFElem operator()(const RelCoeff& c) const {
        if (c.qq != 0) throw Error("q-coefficients have no finite-field meaning");
        FFElem num = ctx->from_int(c.rat.get_num().get_si());
        FFElem den = ctx->from_int(c.rat.get_den().get_si());
        return num * den.inverse();
    }
};

inline ScalarFrom<TowerScalar> make_conv(const MatrixRep<TowerScalar>&) { return {}; }
inline ScalarFrom<FFElem> make_conv(const MatrixRep<FFElem>& rep) {
    return {rep.zero.ctx()};
}

struct CheckItem {
    std::string name;
    bool pass;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass = true;
    void add(std::string name, bool pass) {
        all_pass = all_pass && pass;
        items.push_back({std::move(name), pass});
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& it : items)
            if (!it.pass) out.push_back(it.name);
        return out;
    }
};

template <class T>
Matrix<T> evaluate_word(const MatrixRep<T>& rep, const std::vector<GenSym>& word) {
    Matrix<T> acc = rep.identity();
    for (const auto& s : word) acc = acc * rep.get(s);
    return acc;
}

template <class T>
Matrix<T> evaluate_relation(const MatrixRep<T>& rep, const Relation& rel,
                            const ScalarFrom<T>& conv) {
    Matrix<T> acc(rep.dim, rep.dim, rep.zero);
    for (const auto& term : rel.terms)
        acc = acc + evaluate_word(rep, term.word).scaled(conv(term.coeff));
    return acc;
}

// Evaluates every relation exactly; pass means the exact zero matrix.
// Honors the YHX_THREADS environment variable (relations are independent).
template <class T>
CheckReport check_relations(const MatrixRep<T>& rep, const RelationSet& rels);

// Derived elements of the affine flavor: the idempotents e_{i,k}, the X tower
// X_{i+1} = g_i X_i g_i, and the identity suite around them.
struct DerivedData {
    CheckReport report;
    std::map<std::pair<int, int>, Matrix<TowerScalar>> e;  // e_{i,k}
    std::vector<Matrix<TowerScalar>> X, Xinv;              // index 0 unused
};

DerivedData derived_elements(const MatrixRep<TowerScalar>& rep);

// Formal S_n-symmetric Laurent polynomial in the pairs (X_i, t_i).
struct SymLaurent {
    struct Term {
        Rat coeff;
        std::vector<long> xexp;  // size n, exponents of X_1..X_n
        std::vector<long> texp;  // size n, exponents of t_1..t_n (mod r)
    };
    std::vector<Term> terms;
};

// True iff the evaluated element commutes with every generator matrix.
// Rejects non-symmetric input.
bool central_check(const MatrixRep<TowerScalar>& rep, const SymLaurent& element);

}  // namespace yhx::algebra
