#pragma once

#include <string>
#include <vector>

#include "quiverh1/linalg.hpp"

namespace qh1 {

/// Finite-dimensional Lie algebra by structure constants.
/// Antisymmetry and the Jacobi identity are verified at construction.
template <class F>
struct LieAlgebra {
    int n = 0;
    std::vector<std::string> labels;
    // c[i][j] = coordinates of [b_i, b_j]
    std::vector<std::vector<Vec<F>>> c;

    static LieAlgebra make(const F& K, std::vector<std::string> labels,
                           std::vector<std::vector<Vec<F>>> constants) {
        LieAlgebra L;
        L.n = static_cast<int>(labels.size());
        L.labels = std::move(labels);
        L.c = std::move(constants);
        L.verify(K);
        return L;
    }

    void verify(const F& K) const {
        for (int i = 0; i < n; ++i) {
            if (!vec_is_zero(K, c[i][i]))
                throw Error(ErrorKind::Internal, "LieAlgebra: [x,x] != 0 at basis " + std::to_string(i));
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (!K.eq(c[i][j][k], K.neg(c[j][i][k])))
                        throw Error(ErrorKind::Internal, "LieAlgebra: antisymmetry fails");
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    Vec<F> s = bracket(K, c[i][j], k_basis(K, k));
                    vec_acc(K, s, bracket(K, c[j][k], k_basis(K, i)));
                    vec_acc(K, s, bracket(K, c[k][i], k_basis(K, j)));
                    if (!vec_is_zero(K, s))
                        throw Error(ErrorKind::Internal, "LieAlgebra: Jacobi identity fails");
                }
    }

    Vec<F> k_basis(const F& K, int i) const {
        Vec<F> v = zero_vec(K, n);
        v[i] = K.one();
        return v;
    }

    static void vec_acc(const F& K, Vec<F>& y, const Vec<F>& x) {
        for (size_t i = 0; i < y.size(); ++i) y[i] = K.add(y[i], x[i]);
    }

    Vec<F> bracket(const F& K, const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> r = zero_vec(K, n);
        for (int i = 0; i < n; ++i) {
            if (K.is_zero(x[i])) continue;
            for (int j = 0; j < n; ++j) {
                if (K.is_zero(y[j])) continue;
                auto f = K.mul(x[i], y[j]);
                for (int k = 0; k < n; ++k) r[k] = K.add(r[k], K.mul(f, c[i][j][k]));
            }
        }
        return r;
    }

    /// Matrix of ad(x) acting on coordinates.
    Matrix<F> ad(const F& K, const Vec<F>& x) const {
        Matrix<F> m(K, n, n);
        for (int j = 0; j < n; ++j) {
            Vec<F> col = bracket(K, x, k_basis(K, j));
            for (int k = 0; k < n; ++k) m.at(k, j) = col[k];
        }
        return m;
    }

    bool is_abelian(const F& K) const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!vec_is_zero(K, c[i][j])) return false;
        return true;
    }

    /// Span of brackets [A, B] of two subspaces.
    Subspace<F> bracket_span(const F& K, const Subspace<F>& A, const Subspace<F>& B) const {
        std::vector<Vec<F>> gens;
        for (const auto& a : A.basis)
            for (const auto& b : B.basis) gens.push_back(bracket(K, a, b));
        return Subspace<F>::span(K, n, gens);
    }

    bool is_ideal(const F& K, const Subspace<F>& R) const {
        for (int i = 0; i < n; ++i)
            for (const auto& r : R.basis)
                if (!R.contains(K, bracket(K, k_basis(K, i), r))) return false;
        return true;
    }

    /// Derived series D0 = L, D_{k+1} = [D_k, D_k] until stable; dims reported.
    std::vector<Subspace<F>> derived_series(const F& K) const {
        std::vector<Subspace<F>> out{Subspace<F>::full(K, n)};
        while (true) {
            const auto& prev = out.back();
            auto next = bracket_span(K, prev, prev);
            if (next.dim() == prev.dim()) break;
            out.push_back(std::move(next));
            if (out.back().dim() == 0) break;
        }
        return out;
    }

    /// Lower central series C0 = L, C_{k+1} = [L, C_k] until stable.
    std::vector<Subspace<F>> lower_central_series(const F& K) const {
        auto full = Subspace<F>::full(K, n);
        std::vector<Subspace<F>> out{full};
        while (true) {
            auto next = bracket_span(K, full, out.back());
            if (next.dim() == out.back().dim()) break;
            out.push_back(std::move(next));
            if (out.back().dim() == 0) break;
        }
        return out;
    }

    bool is_solvable(const F& K) const { return derived_series(K).back().dim() == 0; }
    bool is_nilpotent(const F& K) const { return lower_central_series(K).back().dim() == 0; }

    /// Derived series of a subalgebra (used for solvable-ideal verification).
    bool subspace_solvable(const F& K, const Subspace<F>& R) const {
        Subspace<F> cur = R;
        while (cur.dim() > 0) {
            auto next = bracket_span(K, cur, cur);
            if (next.dim() == cur.dim()) return false;
            cur = std::move(next);
        }
        return true;
    }

    Subspace<F> center(const F& K) const {
        // solution space of [x, b_j] = 0 for all j
        Matrix<F> m(K, n * n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i) m.at(j * n + k, i) = c[i][j][k];
        return kernel(K, m);
    }

    Matrix<F> killing_form(const F& K) const {
        // K(b_i, b_j) = tr(ad b_i . ad b_j) = sum_{m,k} c[i][m][k] c[j][k][m]
        Matrix<F> kf(K, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                auto s = K.zero();
                for (int m = 0; m < n; ++m)
                    for (int k = 0; k < n; ++k) s = K.add(s, K.mul(c[i][m][k], c[j][k][m]));
                kf.at(i, j) = s;
                kf.at(j, i) = s;
            }
        return kf;
    }

    /// Killing-orthogonal complement of a subspace.
    Subspace<F> killing_orthogonal(const F& K, const Subspace<F>& S) const {
        auto kf = killing_form(K);
        Matrix<F> m(K, S.dim(), n);
        for (int r = 0; r < S.dim(); ++r)
            for (int i = 0; i < n; ++i) {
                auto s = K.zero();
                for (int j = 0; j < n; ++j) s = K.add(s, K.mul(S.basis[r][j], kf.at(j, i)));
                m.at(r, i) = s;
            }
        return kernel(K, m);
    }

    /// Quotient by an ideal, with constants on canonical representatives.
    std::pair<LieAlgebra, QuotientSpace<F>> quotient_by_ideal(const F& K, const Subspace<F>& R) const {
        auto q = make_quotient(K, Subspace<F>::full(K, n), R);
        int m = q.dim();
        std::vector<std::string> lbl;
        for (int i = 0; i < m; ++i) lbl.push_back("q" + std::to_string(i));
        std::vector<std::vector<Vec<F>>> cc(m, std::vector<Vec<F>>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) cc[i][j] = q.reduce(K, bracket(K, q.reps[i], q.reps[j]));
        return {make(K, std::move(lbl), std::move(cc)), std::move(q)};
    }

    /// Block-diagonal direct sum.
    static LieAlgebra direct_sum(const F& K, const std::vector<const LieAlgebra*>& parts) {
        int total = 0;
        for (auto* p : parts) total += p->n;
        std::vector<std::string> lbl;
        std::vector<std::vector<Vec<F>>> cc(total, std::vector<Vec<F>>(total, zero_vec(K, total)));
        int off = 0;
        for (auto* p : parts) {
            for (int i = 0; i < p->n; ++i) lbl.push_back(p->labels[i]);
            for (int i = 0; i < p->n; ++i)
                for (int j = 0; j < p->n; ++j)
                    for (int k = 0; k < p->n; ++k) cc[off + i][off + j][off + k] = p->c[i][j][k];
            off += p->n;
        }
        return make(K, std::move(lbl), std::move(cc));
    }
};

/// True iff the Killing form is nonsingular (Cartan's criterion; meaningful
/// as a semisimplicity test over the rationals only).
template <class F>
bool killing_nonsingular(const F& K, const LieAlgebra<F>& L) {
    if (K.characteristic() != 0)
        throw Error(ErrorKind::WrongCharacteristic, "Killing criterion requires characteristic 0");
    auto kf = L.killing_form(K);
    auto piv = rref_inplace(K, kf);
    return static_cast<int>(piv.size()) == L.n;
}

/// Checks that `phi` (images of L's basis in M's coordinates) is a Lie algebra
/// isomorphism by structure-constant equality plus invertibility.
template <class F>
bool lie_isomorphic_under(const F& K, const LieAlgebra<F>& L, const LieAlgebra<F>& M,
                          const std::vector<Vec<F>>& phi) {
    if (L.n != M.n || static_cast<int>(phi.size()) != L.n) return false;
    if (Subspace<F>::span(K, M.n, phi).dim() != M.n) return false;
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.n; ++j) {
            Vec<F> lhs = M.bracket(K, phi[i], phi[j]);
            Vec<F> rhs = zero_vec(K, M.n);
            for (int k = 0; k < L.n; ++k)
                if (!K.is_zero(L.c[i][j][k])) vec_axpy(K, rhs, L.c[i][j][k], phi[k]);
            for (int k = 0; k < M.n; ++k)
                if (!K.eq(lhs[k], rhs[k])) return false;
        }
    return true;
}

/// Witt algebra W(1,1) = Der(k[X]/(X^p)) over F_p: basis e_{-1},...,e_{p-2},
/// [e_i, e_j] = (j - i) e_{i+j}, zero out of range.
template <class F>
LieAlgebra<F> witt_algebra(const F& K) {
    long long p = K.characteristic();
    if (p < 2) throw Error(ErrorKind::BadSpec, "W(1,1) requires a prime field");
    int n = static_cast<int>(p);
    std::vector<std::string> lbl;
    for (int u = 0; u < n; ++u) lbl.push_back("e" + std::to_string(u - 1));
    std::vector<std::vector<Vec<F>>> cc(n, std::vector<Vec<F>>(n, zero_vec(K, n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int deg = (u - 1) + (v - 1);
            if (deg < -1 || deg > n - 2) continue;
            cc[u][v][deg + 1] = K.from_int(v - u);
        }
    return LieAlgebra<F>::make(K, std::move(lbl), std::move(cc));
}

namespace detail {

/// Structure constants for a list of n x n matrices spanning a Lie algebra
/// inside gl(n)/(central), where `central` is an optional spanning matrix
/// (the identity, for pgl) that commutators are reduced against.
template <class F>
LieAlgebra<F> matrix_lie_algebra(const F& K, int n, const std::vector<Matrix<F>>& basis,
                                 std::vector<std::string> labels, bool mod_identity) {
    int m = static_cast<int>(basis.size());
    int amb = n * n;
    std::vector<Vec<F>> gens;
    for (const auto& b : basis) gens.push_back(b.a);
    if (mod_identity) gens.push_back(Matrix<F>::identity(K, n).a);
    CoordSolver<F> solver(K, amb, gens);
    std::vector<std::vector<Vec<F>>> cc(m, std::vector<Vec<F>>(m, zero_vec(K, m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Matrix<F> comm = Matrix<F>::mul(K, basis[i], basis[j]);
            Matrix<F> ji = Matrix<F>::mul(K, basis[j], basis[i]);
            for (int t = 0; t < amb; ++t) comm.a[t] = K.sub(comm.a[t], ji.a[t]);
            auto coords = solver.coords(K, comm.a);
            if (!coords) throw Error(ErrorKind::Internal, "matrix_lie_algebra: commutator outside span");
            Vec<F> v = zero_vec(K, m);
            for (int t = 0; t < m; ++t) v[t] = (*coords)[t];
            cc[i][j] = std::move(v);
        }
    return LieAlgebra<F>::make(K, std::move(labels), std::move(cc));
}

} // namespace detail

/// sl(n): trace-zero matrices; basis e_ij (i != j) then h_i = e_ii - e_{i+1,i+1}.
template <class F>
LieAlgebra<F> sl_algebra(const F& K, int n) {
    if (n < 2) throw Error(ErrorKind::BadSpec, "sl(n) requires n >= 2");
    std::vector<Matrix<F>> basis;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix<F> m(K, n, n);
            m.at(i, j) = K.one();
            basis.push_back(std::move(m));
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (int i = 0; i + 1 < n; ++i) {
        Matrix<F> m(K, n, n);
        m.at(i, i) = K.one();
        m.at(i + 1, i + 1) = K.neg(K.one());
        basis.push_back(std::move(m));
        labels.push_back("H" + std::to_string(i + 1));
    }
    return detail::matrix_lie_algebra(K, n, basis, std::move(labels), false);
}

/// pgl(n) = gl(n)/k1; basis: images of e_pq for (p,q) != (n,n).
template <class F>
LieAlgebra<F> pgl_algebra(const F& K, int n) {
    if (n < 1) throw Error(ErrorKind::BadSpec, "pgl(n) requires n >= 1");
    std::vector<Matrix<F>> basis;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) continue;
            Matrix<F> m(K, n, n);
            m.at(i, j) = K.one();
            basis.push_back(std::move(m));
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return detail::matrix_lie_algebra(K, n, basis, std::move(labels), true);
}

/// Block-diagonal product of pgl(s) over the listed sizes.
template <class F>
LieAlgebra<F> pgl_product(const F& K, const std::vector<int>& sizes) {
    std::vector<LieAlgebra<F>> blocks;
    for (int s : sizes) blocks.push_back(pgl_algebra(K, s));
    std::vector<const LieAlgebra<F>*> ptrs;
    for (const auto& b : blocks) ptrs.push_back(&b);
    return LieAlgebra<F>::direct_sum(K, ptrs);
}

} // namespace qh1
