#include "yhx/calrep.hpp"

#include <algorithm>
#include <functional>

namespace yhx::calrep {

using namespace yhx::algebra;
using shapes::ContentValue;

long CalibratedModule::index_of(const StandardTableau& t) const {
    for (long i = 0; i < dim(); ++i)
        if (basis[i] == t) return i;
    return -1;
}

TowerScalar CalibratedModule::t_eigenvalue(int comp) const {
    long r = placed.r();
    return TowerScalar::from_cyclo(
        Cyclo::root_of_unity(cyclo_order, (comp - 1) * (cyclo_order / r)));
}

namespace {

TowerScalar content_eigenvalue(const ContentValue& c, long order) {
    return TowerScalar::phase_q_power(c.phase, 2 * static_cast<int>(c.offset), order);
}

}  // namespace

CalibratedModule build_module(const PlacedShape& placed) {
    CalibratedModule m;
    m.placed = placed;
    m.cyclo_order = placed.cyclo_order();
    const long n = placed.n();

    auto tabs = enumerate_std(placed.shape());
    std::vector<std::pair<Weight, StandardTableau>> order;
    for (auto& t : tabs) order.emplace_back(weight_of(placed, t), t);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [w, t] : order) {
        m.weights.push_back(w);
        m.basis.push_back(t);
    }
    const long dim = m.dim();

    // non-degeneracy guard: consecutive equal contents inside one component
    for (long b = 0; b < dim; ++b)
        for (long i = 1; i < n; ++i) {
            const Weight& w = m.weights[b];
            if (w.comp[i - 1] == w.comp[i] && w.content[i - 1] == w.content[i])
                throw Error("build_module: equal contents at positions " + std::to_string(i) +
                            "," + std::to_string(i + 1) + " of tableau " + std::to_string(b + 1));
        }

    for (long b = 0; b < dim; ++b) {
        std::vector<TowerScalar> nus;
        std::vector<int> comps;
        for (long i = 0; i < n; ++i) {
            nus.push_back(content_eigenvalue(m.weights[b].content[i], m.cyclo_order));
            comps.push_back(m.weights[b].comp[i]);
        }
        m.nu.push_back(std::move(nus));
        m.tcomp.push_back(std::move(comps));
    }

    TowerScalar zero = TowerScalar::zero(), one = TowerScalar::one();
    m.rep.r = placed.r();
    m.rep.n = static_cast<int>(n);
    m.rep.dim = dim;
    m.rep.zero = zero;
    m.rep.one = one;

    for (long j = 1; j <= n; ++j) {
        Matrix<TowerScalar> tj(dim, dim, zero), Xj(dim, dim, zero);
        for (long b = 0; b < dim; ++b) {
            tj.at(b, b) = m.t_eigenvalue(m.tcomp[b][j - 1]);
            Xj.at(b, b) = m.nu[b][j - 1];
        }
        m.rep.set(t_(static_cast<int>(j)), std::move(tj));
        m.rep.set(X_(static_cast<int>(j)), std::move(Xj));
    }
    if (n >= 1) {
        Matrix<TowerScalar> Xinv(dim, dim, zero);
        for (long b = 0; b < dim; ++b) Xinv.at(b, b) = m.nu[b][0].inverse();
        m.rep.set(Xinv_(1), std::move(Xinv));
    }

    TowerScalar q = TowerScalar::q_power(1), qi = TowerScalar::q_power(-1);
    TowerScalar qmqi = q - qi;
    for (int i = 1; i < n; ++i) {
        Matrix<TowerScalar> gi(dim, dim, zero);
        for (long b = 0; b < dim; ++b) {
            auto st = apply_transposition(placed.shape(), m.basis[b], i);
            if (m.tcomp[b][i - 1] != m.tcomp[b][i]) {
                // entries i, i+1 lie in different components: g_i swaps
                if (!st) throw Error("build_module: cross-component swap not standard");
                gi.at(m.index_of(*st), b) = one;
            } else {
                const TowerScalar &nu_i = m.nu[b][i - 1], &nu_i1 = m.nu[b][i];
                TowerScalar denom = nu_i1 - nu_i;
                gi.at(b, b) = nu_i1 * qmqi / denom;
                if (st) {
                    long sb = m.index_of(*st);
                    gi.at(sb, b) = (q * nu_i1 - qi * nu_i) / denom;
                }
            }
        }
        m.rep.set(g_(i), std::move(gi));
    }
    return m;
}

Matrix<TowerScalar> projector(const CalibratedModule& m, long b) {
    const long dim = m.dim(), n = m.n();
    auto I = m.rep.identity();
    Matrix<TowerScalar> acc = I;
    for (long k = 1; k <= n; ++k) {
        // distinct X_k and t_k eigenvalues over the basis
        std::vector<TowerScalar> xs, ts;
        for (long c = 0; c < dim; ++c) {
            TowerScalar xv = m.nu[c][k - 1];
            TowerScalar tv = m.t_eigenvalue(m.tcomp[c][k - 1]);
            if (std::find(xs.begin(), xs.end(), xv) == xs.end()) xs.push_back(xv);
            if (std::find(ts.begin(), ts.end(), tv) == ts.end()) ts.push_back(tv);
        }
        const auto& Xk = m.rep.get(X_(static_cast<int>(k)));
        const auto& tk = m.rep.get(t_(static_cast<int>(k)));
        TowerScalar x0 = m.nu[b][k - 1];
        TowerScalar t0 = m.t_eigenvalue(m.tcomp[b][k - 1]);
        for (const auto& c : xs) {
            if (c == x0) continue;
            acc = acc * (Xk - I.scaled(c)).scaled((x0 - c).inverse());
        }
        for (const auto& c : ts) {
            if (c == t0) continue;
            acc = acc * (tk - I.scaled(c)).scaled((t0 - c).inverse());
        }
    }
    return acc;
}

std::vector<TowerScalar> tau_apply(const CalibratedModule& m, long b, int i) {
    if (i < 1 || i >= m.n()) throw Error("tau_apply: index out of range");
    const long dim = m.dim();
    std::vector<TowerScalar> out(dim, TowerScalar::zero());
    const auto& gi = m.rep.get(g_(i));
    if (m.tcomp[b][i - 1] != m.tcomp[b][i]) {
        for (long rr = 0; rr < dim; ++rr) out[rr] = gi.at(rr, b);
        return out;
    }
    const TowerScalar &nu_i = m.nu[b][i - 1], &nu_i1 = m.nu[b][i];
    if (nu_i == nu_i1) throw Error("tau_apply: undefined on equal weights with equal t-part");
    TowerScalar corr =
        (TowerScalar::q_power(1) - TowerScalar::q_power(-1)) * nu_i1 / (nu_i1 - nu_i);
    for (long rr = 0; rr < dim; ++rr) out[rr] = gi.at(rr, b);
    out[b] = out[b] - corr;
    return out;
}

Matrix<TowerScalar> tau_matrix(const CalibratedModule& m, int i) {
    Matrix<TowerScalar> out(m.dim(), m.dim(), TowerScalar::zero());
    for (long b = 0; b < m.dim(); ++b) {
        auto col = tau_apply(m, b, i);
        for (long rr = 0; rr < m.dim(); ++rr) out.at(rr, b) = col[rr];
    }
    return out;
}

namespace {

bool column_equal(const Matrix<TowerScalar>& a, const Matrix<TowerScalar>& b, long col) {
    for (long rr = 0; rr < a.rows(); ++rr)
        if (!(a.at(rr, col) == b.at(rr, col))) return false;
    return true;
}

}  // namespace

CheckReport tau_suite(const CalibratedModule& m) {
    CheckReport rp;
    const long n = m.n(), dim = m.dim();
    if (n < 2) return rp;
    TowerScalar q = TowerScalar::q_power(1), qi = TowerScalar::q_power(-1);
    std::vector<Matrix<TowerScalar>> tau;
    for (int i = 1; i < n; ++i) tau.push_back(tau_matrix(m, i));
    auto X = [&](int j) -> const Matrix<TowerScalar>& { return m.rep.get(X_(j)); };

    for (int i = 1; i < n; ++i) {
        const auto& ti = tau[i - 1];
        // tau_i X_{i+1} = X_i tau_i and X_{i+1} tau_i = tau_i X_i, per column
        // where nu_i != nu_{i+1} and the t-parts agree
        Matrix<TowerScalar> l1 = ti * X(i + 1), r1 = X(i) * ti;
        Matrix<TowerScalar> l2 = X(i + 1) * ti, r2 = ti * X(i);
        bool ok24 = true;
        for (long b = 0; b < dim; ++b) {
            if (m.tcomp[b][i - 1] != m.tcomp[b][i]) continue;
            if (!(column_equal(l1, r1, b) && column_equal(l2, r2, b))) ok24 = false;
        }
        rp.add("tau_X_shift(" + std::to_string(i) + ")", ok24);

        // X_j with j away from i, i+1 commutes with tau_i
        bool ok25 = true;
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            if (!(ti * X(j) == X(j) * ti)) ok25 = false;
        }
        rp.add("tau_X_far(" + std::to_string(i) + ")", ok25);

        // tau_i^2 acts by (q nu_{i+1} - q^{-1} nu_i)(q nu_i - q^{-1} nu_{i+1})
        // / ((nu_{i+1} - nu_i)(nu_i - nu_{i+1})) on each eligible column
        Matrix<TowerScalar> sq = ti * ti;
        bool ok27 = true;
        for (long b = 0; b < dim; ++b) {
            if (m.tcomp[b][i - 1] != m.tcomp[b][i]) continue;
            const TowerScalar &vi = m.nu[b][i - 1], &vi1 = m.nu[b][i];
            TowerScalar expect =
                (q * vi1 - qi * vi) * (q * vi - qi * vi1) / ((vi1 - vi) * (vi - vi1));
            for (long rr = 0; rr < dim; ++rr) {
                TowerScalar want = rr == b ? expect : TowerScalar::zero();
                if (!(sq.at(rr, b) == want)) ok27 = false;
            }
        }
        rp.add("tau_square(" + std::to_string(i) + ")", ok27);

        // the image of a weight vector is a weight vector of the swapped
        // weight, and is nonzero away from the q^{+-2} wall
        bool ok_a = true, ok_b_fact = true;
        for (long b = 0; b < dim; ++b) {
            auto col = tau_apply(m, b, i);
            bool same_t = m.tcomp[b][i - 1] == m.tcomp[b][i];
            std::vector<TowerScalar> snu = m.nu[b];
            std::swap(snu[i - 1], snu[i]);
            std::vector<int> sj = m.tcomp[b];
            if (!same_t) std::swap(sj[i - 1], sj[i]);
            for (long rr = 0; rr < dim; ++rr) {
                if (col[rr].is_zero()) continue;
                if (!(m.nu[rr] == snu && m.tcomp[rr] == sj)) ok_a = false;
            }
            if (same_t) {
                const TowerScalar &vi = m.nu[b][i - 1], &vi1 = m.nu[b][i];
                bool excluded = vi == vi1 || vi == vi1 * q * q || vi == vi1 * qi * qi;
                if (!excluded) {
                    bool nonzero = false;
                    for (const auto& x : col)
                        if (!x.is_zero()) nonzero = true;
                    if (!nonzero) ok_b_fact = false;
                }
            }
        }
        rp.add("tau_weight_shift(" + std::to_string(i) + ")", ok_a);
        rp.add("tau_nonzero(" + std::to_string(i) + ")", ok_b_fact);
    }

    // far tau operators commute
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            rp.add("tau_far(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   tau[i - 1] * tau[j - 1] == tau[j - 1] * tau[i - 1]);

    // braid relation on columns with pairwise distinct nu_i, nu_{i+1}, nu_{i+2}
    for (int i = 1; i + 1 < n; ++i) {
        const auto &a = tau[i - 1], &b = tau[i];
        Matrix<TowerScalar> lhs = a * b * a, rhs = b * a * b;
        bool ok = true;
        for (long col = 0; col < dim; ++col) {
            const auto &v1 = m.nu[col][i - 1], &v2 = m.nu[col][i], &v3 = m.nu[col][i + 1];
            if (v1 == v2 || v1 == v3 || v2 == v3) continue;
            if (!column_equal(lhs, rhs, col)) ok = false;
        }
        rp.add("tau_braid(" + std::to_string(i) + ")", ok);
    }
    return rp;
}

CheckReport projector_suite(const CalibratedModule& m) {
    CheckReport rp;
    const long dim = m.dim();
    Matrix<TowerScalar> sum(dim, dim, TowerScalar::zero());
    for (long b = 0; b < dim; ++b) {
        auto pi = projector(m, b);
        bool delta = true;
        for (long c = 0; c < dim; ++c)
            for (long rr = 0; rr < dim; ++rr) {
                TowerScalar want =
                    (c == b && rr == b) ? TowerScalar::one() : TowerScalar::zero();
                if (!(pi.at(rr, c) == want)) delta = false;
            }
        rp.add("projector_delta(" + std::to_string(b + 1) + ")", delta);
        sum = sum + pi;
    }
    rp.add("projector_sum", sum == m.rep.identity());
    return rp;
}

IrreducibilityReport irreducibility_certificate(const CalibratedModule& m) {
    IrreducibilityReport out;
    const long n = m.n(), dim = m.dim();
    out.diagonal = true;
    for (int j = 1; j <= static_cast<int>(n); ++j) {
        if (!m.rep.get(X_(j)).is_diagonal()) out.diagonal = false;
        if (!m.rep.get(t_(j)).is_diagonal()) out.diagonal = false;
    }
    // joint eigenvalue tuples pairwise distinct
    out.weights_distinct = true;
    for (long a = 0; a < dim; ++a)
        for (long b = a + 1; b < dim; ++b)
            if (m.nu[a] == m.nu[b] && m.tcomp[a] == m.tcomp[b]) out.weights_distinct = false;
    // tau-edge connectivity
    std::vector<long> comp(dim);
    for (long i = 0; i < dim; ++i) comp[i] = i;
    std::function<long(long)> find = [&](long v) {
        return comp[v] == v ? v : comp[v] = find(comp[v]);
    };
    for (int i = 1; i < n; ++i) {
        auto ti = tau_matrix(m, i);
        for (long c = 0; c < dim; ++c)
            for (long rr = 0; rr < dim; ++rr)
                if (rr != c && !ti.at(rr, c).is_zero()) comp[find(rr)] = find(c);
    }
    long roots = 0;
    for (long i = 0; i < dim; ++i)
        if (find(i) == i) ++roots;
    out.connected = roots <= 1;
    out.pass = out.diagonal && out.weights_distinct && out.connected;
    return out;
}

IrreducibilityReport irreducibility_certificate(const MatrixRep<TowerScalar>& rep) {
    IrreducibilityReport out;
    const int n = rep.n;
    const long dim = rep.dim;
    out.diagonal = true;
    for (int j = 1; j <= n; ++j) {
        if (!rep.get(X_(j)).is_diagonal() || !rep.get(t_(j)).is_diagonal())
            throw Error("irreducibility_certificate: X and t matrices must be diagonal");
    }
    std::vector<std::vector<TowerScalar>> nu(dim), tv(dim);
    for (long b = 0; b < dim; ++b)
        for (int j = 1; j <= n; ++j) {
            nu[b].push_back(rep.get(X_(j)).at(b, b));
            tv[b].push_back(rep.get(t_(j)).at(b, b));
        }
    out.weights_distinct = true;
    for (long a = 0; a < dim; ++a)
        for (long b = a + 1; b < dim; ++b)
            if (nu[a] == nu[b] && tv[a] == tv[b]) out.weights_distinct = false;

    std::vector<long> comp(dim);
    for (long i = 0; i < dim; ++i) comp[i] = i;
    std::function<long(long)> find = [&](long v) {
        return comp[v] == v ? v : comp[v] = find(comp[v]);
    };
    TowerScalar qmqi = TowerScalar::q_power(1) - TowerScalar::q_power(-1);
    for (int i = 1; i < n; ++i) {
        const auto& gi = rep.get(g_(i));
        for (long b = 0; b < dim; ++b) {
            std::vector<TowerScalar> col(dim, TowerScalar::zero());
            for (long rr = 0; rr < dim; ++rr) col[rr] = gi.at(rr, b);
            if (tv[b][i - 1] == tv[b][i]) {
                if (nu[b][i - 1] == nu[b][i]) continue;  // tau undefined here: no edge
                col[b] = col[b] - qmqi * nu[b][i] / (nu[b][i] - nu[b][i - 1]);
            }
            for (long rr = 0; rr < dim; ++rr)
                if (rr != b && !col[rr].is_zero()) comp[find(rr)] = find(b);
        }
    }
    long roots = 0;
    for (long i = 0; i < dim; ++i)
        if (find(i) == i) ++roots;
    out.connected = roots <= 1;
    out.pass = out.diagonal && out.weights_distinct && out.connected;
    return out;
}

bool isomorphism_test(const CalibratedModule& a, const CalibratedModule& b) {
    if (a.dim() != b.dim()) return false;
    std::vector<Weight> wa = a.weights, wb = b.weights;
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    return wa == wb;
}

}  // namespace yhx::calrep
