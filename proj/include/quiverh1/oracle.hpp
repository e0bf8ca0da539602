#pragma once

#include <set>
#include <string>
#include <vector>

#include "quiverh1/cohomology.hpp"
#include "quiverh1/lie.hpp"

namespace qh1 {

/// The monomial algebra as a multiplication table on its path basis:
/// product of basis paths is their concatenation when composable and
/// relation-free, zero otherwise.
struct AlgebraTable {
    const PathBasis* basis = nullptr;
    int n = 0;
    std::vector<std::vector<int>> mul; // basis index or -1 for zero
    std::vector<int> idempotents;      // basis indices of the vertices

    static AlgebraTable build(const PathBasis& basis) {
        AlgebraTable t;
        t.basis = &basis;
        t.n = basis.size();
        t.mul.assign(t.n, std::vector<int>(t.n, -1));
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j) {
                auto p = basis.mul(i, j);
                t.mul[i][j] = p ? *p : -1;
            }
        const Quiver& q = basis.quiver();
        for (int v = 0; v < q.num_vertices(); ++v) {
            auto idx = basis.index(Path::trivial(v));
            if (!idx) throw Error(ErrorKind::Internal, "vertex missing from basis");
            t.idempotents.push_back(*idx);
        }
        t.verify();
        return t;
    }

    void verify() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    int ij = mul[i][j];
                    int jk = mul[j][k];
                    int l = ij < 0 ? -1 : mul[ij][k];
                    int r = jk < 0 ? -1 : mul[i][jk];
                    if (l != r) throw Error(ErrorKind::Internal, "algebra table is not associative");
                }
        for (int e : idempotents)
            for (int f : idempotents)
                if (mul[e][f] != (e == f ? e : -1))
                    throw Error(ErrorKind::Internal, "vertex idempotents are not orthogonal");
        for (int i = 0; i < n; ++i) {
            int left = 0, right = 0;
            for (int e : idempotents) {
                if (mul[e][i] == i) ++left;
                if (mul[i][e] == i) ++right;
            }
            if (left != 1 || right != 1)
                throw Error(ErrorKind::Internal, "sum of vertices is not the unit");
        }
    }
};

/// Endomorphisms of the algebra are indexed by eta * n + delta: the
/// coefficient of basis path eta in f(basis path delta).
template <class F>
int endo_index(const AlgebraTable& alg, int eta, int delta) {
    return eta * alg.n + delta;
}

/// Solution space of the Leibniz constraints f(xy) = f(x)y + x f(y) over all
/// basis pairs, inside the n^2-dimensional endomorphism space.
template <class F>
Subspace<F> derivations(const F& K, const AlgebraTable& alg) {
    int n = alg.n;
    int amb = n * n;
    // unique divisors: left_div[j][eta] = gamma with gamma*B_j = B_eta
    std::vector<std::vector<int>> left_div(n, std::vector<int>(n, -1));
    std::vector<std::vector<int>> right_div(n, std::vector<int>(n, -1));
    for (int g = 0; g < n; ++g)
        for (int j = 0; j < n; ++j) {
            int e = alg.mul[g][j];
            if (e >= 0) left_div[j][e] = g;
        }
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < n; ++g) {
            int e = alg.mul[i][g];
            if (e >= 0) right_div[i][e] = g;
        }

    // rows with small integer coefficients, reduced into the field up front
    // (a +-2 must vanish in characteristic 2), deduplicated before elimination
    const long long ch = K.characteristic();
    auto canon = [ch](long long c) { return ch == 0 ? c : ((c % ch) + ch) % ch; };
    std::set<std::vector<std::pair<int, long long>>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int rho = alg.mul[i][j];
            for (int eta = 0; eta < n; ++eta) {
                int g1 = left_div[j][eta];
                int g2 = right_div[i][eta];
                if (rho < 0 && g1 < 0 && g2 < 0) continue;
                std::map<int, long long> m;
                if (rho >= 0) m[eta * n + rho] += 1;
                if (g1 >= 0) m[g1 * n + i] -= 1;
                if (g2 >= 0) m[g2 * n + j] -= 1;
                std::vector<std::pair<int, long long>> row;
                for (auto [k, v] : m)
                    if (canon(v) != 0) row.emplace_back(k, canon(v));
                if (!row.empty()) rows.insert(std::move(row));
            }
        }

    // propagate forced-zero unknowns before elimination
    std::vector<char> zeroed(amb, 0);
    std::vector<std::vector<std::pair<int, long long>>> work(rows.begin(), rows.end());
    std::vector<std::vector<int>> incidence(amb);
    for (size_t r = 0; r < work.size(); ++r)
        for (auto& [var, c] : work[r]) incidence[var].push_back(static_cast<int>(r));
    std::vector<int> queue;
    auto note_row = [&](size_t r) {
        int live = 0, last = -1;
        for (auto& [var, c] : work[r])
            if (!zeroed[var]) {
                ++live;
                last = var;
            }
        if (live == 1) queue.push_back(last);
    };
    for (size_t r = 0; r < work.size(); ++r) note_row(r);
    while (!queue.empty()) {
        int var = queue.back();
        queue.pop_back();
        if (zeroed[var]) continue;
        zeroed[var] = 1;
        for (int r : incidence[var]) note_row(static_cast<size_t>(r));
    }

    SparseEchelon<F> ech(amb);
    for (int v = 0; v < amb; ++v)
        if (zeroed[v]) ech.insert(K, {{v, K.one()}});
    for (const auto& row : work) {
        std::vector<typename SparseEchelon<F>::Term> srow;
        for (auto [var, c] : row)
            if (!zeroed[var]) srow.emplace_back(var, K.from_int(c));
        if (!srow.empty()) ech.insert(K, std::move(srow));
    }
    return Subspace<F>::span(K, amb, ech.kernel_basis(K));
}

/// Image of x -> ad(x) = [x, .] over the basis of the algebra.
template <class F>
Subspace<F> inner_derivations(const F& K, const AlgebraTable& alg) {
    int n = alg.n;
    std::vector<Vec<F>> gens;
    for (int t = 0; t < n; ++t) {
        Vec<F> v = zero_vec(K, n * n);
        for (int d = 0; d < n; ++d) {
            int td = alg.mul[t][d];
            int dt = alg.mul[d][t];
            if (td >= 0) v[td * n + d] = K.add(v[td * n + d], K.one());
            if (dt >= 0) v[dt * n + d] = K.sub(v[dt * n + d], K.one());
        }
        gens.push_back(std::move(v));
    }
    return Subspace<F>::span(K, n * n, gens);
}

template <class F>
Vec<F> endo_compose(const F& K, const AlgebraTable& alg, const Vec<F>& f, const Vec<F>& g) {
    int n = alg.n;
    Vec<F> out = zero_vec(K, n * n);
    for (int d = 0; d < n; ++d)
        for (int m = 0; m < n; ++m) {
            const auto& gv = g[m * n + d];
            if (K.is_zero(gv)) continue;
            for (int e = 0; e < n; ++e) {
                const auto& fv = f[e * n + m];
                if (!K.is_zero(fv)) out[e * n + d] = K.add(out[e * n + d], K.mul(fv, gv));
            }
        }
    return out;
}

template <class F>
Vec<F> endo_commutator(const F& K, const AlgebraTable& alg, const Vec<F>& f, const Vec<F>& g) {
    auto fg = endo_compose(K, alg, f, g);
    auto gf = endo_compose(K, alg, g, f);
    for (size_t i = 0; i < fg.size(); ++i) fg[i] = K.sub(fg[i], gf[i]);
    return fg;
}

/// omega1: sends (a, gamma) to the endomorphism eps -> eps^(a, gamma),
/// extended linearly over Q1//B coordinates.
template <class F>
Vec<F> omega1(const F& K, const CochainBases& cb, const AlgebraTable& alg, const Vec<F>& x) {
    int n = alg.n;
    Vec<F> out = zero_vec(K, n * n);
    for (int t = 0; t < cb.c1.size(); ++t) {
        if (K.is_zero(x[t])) continue;
        int a = cb.c1.pairs[t].x;
        const Path& gamma = cb.basis->path(cb.c1.pairs[t].y);
        for (int d = 0; d < n; ++d)
            for (auto [bidx, mult] : substitute(cb.basis->path(d), a, gamma, *cb.basis)) {
                int u = bidx * n + d;
                out[u] = K.add(out[u], K.mul(x[t], K.from_int(mult)));
            }
    }
    return out;
}

/// varsigma1: reads the coefficients of an endomorphism on the arrows;
/// requires every arrow image to lie in the span of parallel basis paths.
template <class F>
Vec<F> varsigma1(const F& K, const CochainBases& cb, const AlgebraTable& alg, const Vec<F>& f) {
    const Quiver& q = *cb.q;
    int n = alg.n;
    Vec<F> out = zero_vec(K, cb.c1.size());
    for (int a = 0; a < q.num_arrows(); ++a) {
        auto delta = cb.basis->index(Path{-1, {a}});
        if (!delta) throw Error(ErrorKind::Internal, "arrow missing from basis");
        for (int eta = 0; eta < n; ++eta) {
            const auto& c = f[eta * n + *delta];
            if (K.is_zero(c)) continue;
            if (!cb.basis->path(eta).parallel_to(q, Path{-1, {a}}))
                throw Error(ErrorKind::NotEBimodule,
                            "endomorphism maps arrow '" + q.arrow(a).name +
                                "' outside the span of parallel paths");
            out[cb.c1_index(a, eta)] = K.add(out[cb.c1_index(a, eta)], c);
        }
    }
    return out;
}

template <class F>
struct OracleH1 {
    AlgebraTable alg;
    Subspace<F> der;
    Subspace<F> inner;
    QuotientSpace<F> quot;
    LieAlgebra<F> algebra;
};

/// H1 from the standard complex: derivations modulo inner derivations, with
/// the commutator bracket on canonical representatives.
template <class F>
OracleH1<F> h1_direct(const F& K, const PathBasis& basis) {
    OracleH1<F> o;
    o.alg = AlgebraTable::build(basis);
    o.der = derivations(K, o.alg);
    o.inner = inner_derivations(K, o.alg);
    if (!o.der.contains_subspace(K, o.inner))
        throw Error(ErrorKind::OracleMismatch, "inner derivations are not derivations");
    o.quot = make_quotient(K, o.der, o.inner);
    int m = o.quot.dim();
    std::vector<std::string> lbl;
    for (int i = 0; i < m; ++i) lbl.push_back("d" + std::to_string(i));
    std::vector<std::vector<Vec<F>>> cc(m, std::vector<Vec<F>>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            cc[i][j] = o.quot.reduce(K, endo_commutator(K, o.alg, o.quot.reps[i], o.quot.reps[j]));
    o.algebra = LieAlgebra<F>::make(K, std::move(lbl), std::move(cc));
    return o;
}

/// Asserts [Der, Der] <= Der and [Der, Ad] <= Ad on basis pairs.
template <class F>
void check_der_closure(const F& K, const OracleH1<F>& o) {
    for (size_t i = 0; i < o.der.basis.size(); ++i)
        for (size_t j = i + 1; j < o.der.basis.size(); ++j)
            if (!o.der.contains(K, endo_commutator(K, o.alg, o.der.basis[i], o.der.basis[j])))
                throw Error(ErrorKind::OracleMismatch, "[Der, Der] escapes Der");
    for (const auto& d : o.der.basis)
        for (const auto& ad : o.inner.basis)
            if (!o.inner.contains(K, endo_commutator(K, o.alg, d, ad)))
                throw Error(ErrorKind::OracleMismatch, "[Der, Ad] escapes Ad");
}

struct OracleOutcome {
    bool pass = false;
    int dim_minimal = 0;
    int dim_direct = 0;
    int dim_der = 0;
    int dim_inner = 0;
    std::string detail;
};

/// Cross-validates the minimal-complex pipeline against the standard complex:
/// dimensions agree, omega1 maps kernel representatives to derivations and
/// psi0 images to inner derivations, and the bracket transports through
/// varsigma1([omega1 x, omega1 y]) = [x, y] modulo Im psi0.
/// Throws OracleMismatch with the first failing witness.
template <class F>
OracleOutcome cross_check(const F& K, const GradedH1<F>& h, const OracleH1<F>& o) {
    OracleOutcome r;
    r.dim_der = o.der.dim();
    r.dim_inner = o.inner.dim();
    r.dim_minimal = h.dim;
    r.dim_direct = o.quot.dim();
    if (r.dim_minimal != r.dim_direct)
        throw Error(ErrorKind::OracleMismatch,
                    "dim H1 mismatch: minimal " + std::to_string(r.dim_minimal) + " vs standard " +
                        std::to_string(r.dim_direct));
    // varsigma1 . omega1 = identity on Q1//B
    for (int t = 0; t < h.cb.c1.size(); ++t) {
        Vec<F> unit = zero_vec(K, h.cb.c1.size());
        unit[t] = K.one();
        auto back = varsigma1(K, h.cb, o.alg, omega1(K, h.cb, o.alg, unit));
        back[t] = K.sub(back[t], K.one());
        if (!vec_is_zero(K, back))
            throw Error(ErrorKind::OracleMismatch,
                        "varsigma1 . omega1 is not the identity at " + h.cb.c1_label(t));
    }
    // omega1 of kernel representatives are derivations
    std::vector<Vec<F>> omega_reps;
    for (int i = 0; i < h.dim; ++i) {
        auto w = omega1(K, h.cb, o.alg, h.rep_vec(i));
        if (!o.der.contains(K, w))
            throw Error(ErrorKind::OracleMismatch,
                        "omega1 of a Ker psi1 representative violates Leibniz");
        omega_reps.push_back(std::move(w));
    }
    // omega1 of Im psi0 lands in the inner derivations
    for (const auto& v : h.im0.basis)
        if (!o.inner.contains(K, omega1(K, h.cb, o.alg, v)))
            throw Error(ErrorKind::OracleMismatch, "omega1 of an Im psi0 element is not inner");
    // bracket transport on representative pairs
    for (int i = 0; i < h.dim; ++i)
        for (int j = i; j < h.dim; ++j) {
            auto comm = endo_commutator(K, o.alg, omega_reps[i], omega_reps[j]);
            auto back = varsigma1(K, h.cb, o.alg, comm);
            auto br = bracket_c1(K, h.cb, h.rep_vec(i), h.rep_vec(j));
            for (size_t t = 0; t < back.size(); ++t) back[t] = K.sub(back[t], br[t]);
            if (!h.im0.contains(K, back))
                throw Error(ErrorKind::OracleMismatch,
                            "bracket transport fails on representatives " + std::to_string(i) +
                                ", " + std::to_string(j));
        }
    r.pass = true;
    r.detail = "dims " + std::to_string(r.dim_minimal) + " = " + std::to_string(r.dim_direct);
    return r;
}

} // namespace qh1
