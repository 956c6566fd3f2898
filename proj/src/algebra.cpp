#include "yhx/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace yhx::algebra {

std::string GenSym::str() const {
    const char* names[] = {"t", "g", "X", "Xinv", "f", "x"};
    return std::string(names[static_cast<int>(kind)]) + std::to_string(index);
}

namespace {

std::vector<GenSym> rep_word(const GenSym& s, long count) {
    return std::vector<GenSym>(count, s);
}

// words of (q - q^{-1}) e_i * tail, expanded through e_i = (1/r) sum t_i^s t_k^{-s}
void append_e_terms(Relation& rel, long r, int i, int k, const std::vector<GenSym>& tail,
                    const Rat& scale, int qq) {
    for (long s = 0; s < r; ++s) {
        RelTerm term;
        term.coeff = {scale / r, qq};
        for (long c = 0; c < s; ++c) term.word.push_back(t_(i));
        if (s > 0)
            for (long c = 0; c < r - s; ++c) term.word.push_back(t_(k));
        term.word.insert(term.word.end(), tail.begin(), tail.end());
        rel.terms.push_back(std::move(term));
    }
}

Relation commutator(const std::string& name, const std::vector<GenSym>& a,
                    const std::vector<GenSym>& b) {
    Relation rel{name, {}};
    RelTerm ab{{make_rat(1), 0}, a};
    ab.word.insert(ab.word.end(), b.begin(), b.end());
    RelTerm ba{{make_rat(-1), 0}, b};
    ba.word.insert(ba.word.end(), a.begin(), a.end());
    rel.terms = {std::move(ab), std::move(ba)};
    return rel;
}

}  // namespace

RelationSet defining_relations(long r, int n, Flavor flavor) {
    if (r < 1 || n < 1) throw Error("defining_relations: need r >= 1, n >= 1");
    RelationSet out;
    out.r = r;
    out.n = n;
    out.flavor = flavor;
    auto& rels = out.relations;

    const bool affine = flavor == Flavor::affineYH;
    const GenSym::Kind braid_kind = affine ? GenSym::Kind::g : GenSym::Kind::f;
    auto b_ = [&](int i) { return GenSym{braid_kind, i}; };
    const char* bn = affine ? "g" : "f";

    // t relations
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            rels.push_back(commutator("t_commute(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                      {t_(i)}, {t_(j)}));
    for (int i = 1; i <= n; ++i) {
        Relation rel{"t_order(" + std::to_string(i) + ")", {}};
        rel.terms.push_back({{make_rat(1), 0}, rep_word(t_(i), r)});
        rel.terms.push_back({{make_rat(-1), 0}, {}});
        rels.push_back(std::move(rel));
    }

    // braid-generator relations
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
            int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
            Relation rel{std::string(bn) + "_t(" + std::to_string(i) + "," + std::to_string(j) + ")",
                         {}};
            rel.terms.push_back({{make_rat(1), 0}, {b_(i), t_(j)}});
            rel.terms.push_back({{make_rat(-1), 0}, {t_(sj), b_(i)}});
            rels.push_back(std::move(rel));
        }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            rels.push_back(commutator(std::string(bn) + "_commute(" + std::to_string(i) + "," +
                                          std::to_string(j) + ")",
                                      {b_(i)}, {b_(j)}));
    for (int i = 1; i + 1 < n; ++i) {
        Relation rel{std::string(bn) + "_braid(" + std::to_string(i) + ")", {}};
        rel.terms.push_back({{make_rat(1), 0}, {b_(i), b_(i + 1), b_(i)}});
        rel.terms.push_back({{make_rat(-1), 0}, {b_(i + 1), b_(i), b_(i + 1)}});
        rels.push_back(std::move(rel));
    }

    // quadratic relation
    for (int i = 1; i < n; ++i) {
        if (affine) {
            // g_i^2 - 1 - (q - q^{-1}) e_i g_i = 0
            Relation rel{"g_quad(" + std::to_string(i) + ")", {}};
            rel.terms.push_back({{make_rat(1), 0}, {g_(i), g_(i)}});
            rel.terms.push_back({{make_rat(-1), 0}, {}});
            append_e_terms(rel, r, i, i + 1, {g_(i)}, make_rat(-1), 1);
            rels.push_back(std::move(rel));
        } else {
            Relation rel{"f_quad(" + std::to_string(i) + ")", {}};
            rel.terms.push_back({{make_rat(1), 0}, {f_(i), f_(i)}});
            rel.terms.push_back({{make_rat(-1), 0}, {}});
            rels.push_back(std::move(rel));
        }
    }

    if (affine) {
        rels.push_back(
            Relation{"X_inverse_l", {{{make_rat(1), 0}, {X_(1), Xinv_(1)}}, {{make_rat(-1), 0}, {}}}});
        rels.push_back(
            Relation{"X_inverse_r", {{{make_rat(1), 0}, {Xinv_(1), X_(1)}}, {{make_rat(-1), 0}, {}}}});
        if (n >= 2)
            rels.push_back(commutator("g1_X1_g1_X1", {g_(1), X_(1), g_(1), X_(1)},
                                      {X_(1), g_(1), X_(1), g_(1)}));
        for (int i = 2; i < n; ++i)
            rels.push_back(commutator("g_X1(" + std::to_string(i) + ")", {g_(i)}, {X_(1)}));
        for (int j = 1; j <= n; ++j)
            rels.push_back(commutator("t_X1(" + std::to_string(j) + ")", {t_(j)}, {X_(1)}));
    } else if (flavor == Flavor::degenerateYH) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                rels.push_back(commutator(
                    "x_commute(" + std::to_string(i) + "," + std::to_string(j) + ")", {x_(i)},
                    {x_(j)}));
        for (int i = 1; i < n; ++i) {
            // f_i x_{i+1} - x_i f_i - e_i = 0
            Relation rel{"f_x_cross(" + std::to_string(i) + ")", {}};
            rel.terms.push_back({{make_rat(1), 0}, {f_(i), x_(i + 1)}});
            rel.terms.push_back({{make_rat(-1), 0}, {x_(i), f_(i)}});
            append_e_terms(rel, r, i, i + 1, {}, make_rat(-1), 0);
            rels.push_back(std::move(rel));
        }
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                rels.push_back(commutator(
                    "f_x(" + std::to_string(i) + "," + std::to_string(j) + ")", {f_(i)}, {x_(j)}));
            }
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i)
                rels.push_back(commutator(
                    "t_x(" + std::to_string(j) + "," + std::to_string(i) + ")", {t_(j)}, {x_(i)}));
    }
    return out;
}

namespace {

int env_threads() {
    const char* v = std::getenv("YHX_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t < 1 ? 1 : (t > 64 ? 64 : t);
}

}  // namespace

template <class T>
CheckReport check_relations(const MatrixRep<T>& rep, const RelationSet& rels) {
    if (rep.dim <= 0) throw Error("check_relations: empty representation");
    ScalarFrom<T> conv = make_conv(rep);
    size_t m = rels.relations.size();
    std::vector<char> pass(m, 0);
    int threads = env_threads();
    auto run = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < m; i += step)
            pass[i] = evaluate_relation(rep, rels.relations[i], conv).is_zero() ? 1 : 0;
    };
    if (threads <= 1 || m < 8) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
        for (auto& th : pool) th.join();
    }
    CheckReport report;
    for (size_t i = 0; i < m; ++i) report.add(rels.relations[i].name, pass[i] != 0);
    return report;
}

template CheckReport check_relations<TowerScalar>(const MatrixRep<TowerScalar>&,
                                                  const RelationSet&);
template CheckReport check_relations<FFElem>(const MatrixRep<FFElem>&, const RelationSet&);

DerivedData derived_elements(const MatrixRep<TowerScalar>& rep) {
    DerivedData out;
    const int n = rep.n;
    const long r = rep.r;
    auto I = rep.identity();
    TowerScalar qmqi = TowerScalar::q_power(1) - TowerScalar::q_power(-1);

    // e_{i,k} = (1/r) sum_s t_i^s t_k^{-s}, with t^{-1} = t^{r-1}
    std::vector<Matrix<TowerScalar>> t(n + 1, I), tinv(n + 1, I);
    for (int j = 1; j <= n; ++j) {
        t[j] = rep.get(t_(j));
        tinv[j] = r == 1 ? I : t[j].pow(r - 1);
    }
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            Matrix<TowerScalar> acc = I;
            for (long s = 1; s < r; ++s) acc = acc + t[i].pow(s) * tinv[k].pow(s);
            out.e.emplace(std::make_pair(i, k), acc.scaled(TowerScalar::from_rat(make_rat(1, r))));
        }
    auto& rp = out.report;
    for (int i = 1; i <= n; ++i) rp.add("e_diag(" + std::to_string(i) + ")", out.e.at({i, i}) == I);
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            rp.add("e_symm(" + std::to_string(i) + "," + std::to_string(k) + ")",
                   out.e.at({i, k}) == out.e.at({k, i}));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            rp.add("e_idem(" + std::to_string(i) + "," + std::to_string(k) + ")",
                   out.e.at({i, k}) * out.e.at({i, k}) == out.e.at({i, k}));

    // e_{j,k} g_i = g_i e_{s_i(j), s_i(k)}
    for (int i = 1; i < n; ++i) {
        auto si = [&](int v) { return v == i ? i + 1 : (v == i + 1 ? i : v); };
        const auto& g = rep.get(g_(i));
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                rp.add("egge(" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")",
                       out.e.at({j, k}) * g == g * out.e.at({si(j), si(k)}));
    }

    // X tower and inverses
    out.X.assign(n + 1, I);
    out.Xinv.assign(n + 1, I);
    out.X[1] = rep.get(X_(1));
    out.Xinv[1] = rep.has(Xinv_(1)) ? rep.get(Xinv_(1)) : out.X[1].inverse();
    for (int i = 1; i < n; ++i) {
        const auto& g = rep.get(g_(i));
        out.X[i + 1] = g * out.X[i] * g;
        out.Xinv[i + 1] = out.X[i + 1].inverse();
        if (rep.has(X_(i + 1)))
            rp.add("X_tower(" + std::to_string(i + 1) + ")", out.X[i + 1] == rep.get(X_(i + 1)));
    }

    // commutative family {t_j, X_j}
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            rp.add("commfam_XX(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   out.X[a] * out.X[b] == out.X[b] * out.X[a]);
            rp.add("commfam_tt(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   t[a] * t[b] == t[b] * t[a]);
        }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            rp.add("commfam_Xt(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   out.X[a] * t[b] == t[b] * out.X[a]);

    // the four gX identities and invertibility of g
    for (int i = 1; i < n; ++i) {
        const auto& g = rep.get(g_(i));
        const auto& e = out.e.at({i, i + 1});
        auto corr = [&](const Matrix<TowerScalar>& m) { return (e * m).scaled(qmqi); };
        rp.add("gxxg1(" + std::to_string(i) + ")",
               g * out.X[i] == out.X[i + 1] * g - corr(out.X[i + 1]));
        rp.add("gxxg2(" + std::to_string(i) + ")",
               g * out.X[i + 1] == out.X[i] * g + corr(out.X[i + 1]));
        rp.add("gxxg3(" + std::to_string(i) + ")",
               g * out.Xinv[i] == out.Xinv[i + 1] * g + corr(out.Xinv[i]));
        rp.add("gxxg4(" + std::to_string(i) + ")",
               g * out.Xinv[i + 1] == out.Xinv[i] * g - corr(out.Xinv[i]));
        rp.add("g_inverse(" + std::to_string(i) + ")", g * (g - e.scaled(qmqi)) == I);
    }
    return out;
}

bool central_check(const MatrixRep<TowerScalar>& rep, const SymLaurent& element) {
    const int n = rep.n;
    // symmetry: the term multiset must be invariant under every adjacent
    // transposition acting jointly on (xexp, texp)
    auto canon = [](std::vector<SymLaurent::Term> ts) {
        std::vector<std::tuple<std::vector<long>, std::vector<long>, Rat>> v;
        for (auto& t : ts) v.emplace_back(t.xexp, t.texp, t.coeff);
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) {
                      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
                      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
                      return std::get<2>(a) < std::get<2>(b);
                  });
        return v;
    };
    auto base = canon(element.terms);
    for (int i = 0; i + 1 < n; ++i) {
        auto permuted = element.terms;
        for (auto& t : permuted) {
            if (static_cast<int>(t.xexp.size()) != n || static_cast<int>(t.texp.size()) != n)
                throw Error("central_check: exponent vectors must have length n");
            std::swap(t.xexp[i], t.xexp[i + 1]);
            std::swap(t.texp[i], t.texp[i + 1]);
        }
        if (canon(permuted) != base) throw Error("central_check: element is not S_n-symmetric");
    }

    DerivedData der = derived_elements(rep);
    Matrix<TowerScalar> acc(rep.dim, rep.dim, rep.zero);
    auto I = rep.identity();
    for (const auto& term : element.terms) {
        Matrix<TowerScalar> m = I;
        for (int j = 1; j <= n; ++j) {
            long e = term.xexp[j - 1];
            if (e > 0) m = m * der.X[j].pow(e);
            if (e < 0) m = m * der.Xinv[j].pow(-e);
            long te = mod_floor(term.texp[j - 1], rep.r);
            if (te > 0) m = m * rep.get(t_(j)).pow(te);
        }
        acc = acc + m.scaled(TowerScalar::from_rat(term.coeff));
    }
    for (const auto& [sym, mat] : rep.mats)
        if (!(acc * mat == mat * acc)) return false;
    return true;
}

}  // namespace yhx::algebra
