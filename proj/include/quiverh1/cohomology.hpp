#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "quiverh1/lie.hpp"
#include "quiverh1/linalg.hpp"
#include "quiverh1/quiver.hpp"

namespace qh1 {

/// The three indexed parallel-pair sets of the cochain complex
/// 0 -> k(Q0//B) -> k(Q1//B) -> k(Z//B), plus lookup tables.
struct CochainBases {
    const Quiver* q = nullptr;
    const RelationSet* z = nullptr;
    const PathBasis* basis = nullptr;
    ParallelPairs c0; // Q0//B, degree of (e, gamma) is len(gamma)
    ParallelPairs c1; // Q1//B, degree of (a, gamma) is len(gamma) - 1
    ParallelPairs c2; // Z//B

    // (arrow, basis path index) -> index in c1
    std::map<std::pair<int, int>, int> c1_lookup;
    std::map<std::pair<int, int>, int> c2_lookup;

    static CochainBases build(const Quiver& q, const RelationSet& z, const PathBasis& basis) {
        CochainBases cb;
        cb.q = &q;
        cb.z = &z;
        cb.basis = &basis;
        cb.c0 = parallel_pairs(PathSet::Q0, PathSet::B, q, z, basis);
        cb.c1 = parallel_pairs(PathSet::Q1, PathSet::B, q, z, basis);
        cb.c2 = parallel_pairs(PathSet::Z, PathSet::B, q, z, basis);
        for (int i = 0; i < cb.c1.size(); ++i)
            cb.c1_lookup.emplace(std::make_pair(cb.c1.pairs[i].x, cb.c1.pairs[i].y), i);
        for (int i = 0; i < cb.c2.size(); ++i)
            cb.c2_lookup.emplace(std::make_pair(cb.c2.pairs[i].x, cb.c2.pairs[i].y), i);
        return cb;
    }

    int c1_index(int arrow, int basis_path) const {
        auto it = c1_lookup.find({arrow, basis_path});
        if (it == c1_lookup.end())
            throw Error(ErrorKind::Internal, "CochainBases: missing Q1//B pair");
        return it->second;
    }

    std::string c1_label(int i) const {
        const auto& p = c1.pairs[i];
        return "(" + q->arrow(p.x).name + ", " + basis->path(p.y).to_string(*q) + ")";
    }
};

/// psi0: k(Q0//B) -> k(Q1//B),
/// (e, g) -> sum over arrows a with source e of chi_B(g then a) (a, g then a)
///           minus arrows a with target e of chi_B(a then g) (a, a then g).
template <class F>
Matrix<F> build_psi0(const F& K, const CochainBases& cb) {
    const Quiver& q = *cb.q;
    const PathBasis& basis = *cb.basis;
    Matrix<F> m(K, cb.c1.size(), cb.c0.size());
    for (int col = 0; col < cb.c0.size(); ++col) {
        int e = cb.c0.pairs[col].x;
        const Path& gamma = basis.path(cb.c0.pairs[col].y);
        for (int a : q.arrows_from(e)) {
            auto prod = gamma.then(q, Path{-1, {a}});
            if (!prod) continue;
            if (auto idx = basis.index(*prod)) {
                int row = cb.c1_index(a, *idx);
                m.at(row, col) = K.add(m.at(row, col), K.one());
            }
        }
        for (int a : q.arrows_into(e)) {
            auto prod = Path{-1, {a}}.then(q, gamma);
            if (!prod) continue;
            if (auto idx = basis.index(*prod)) {
                int row = cb.c1_index(a, *idx);
                m.at(row, col) = K.sub(m.at(row, col), K.one());
            }
        }
    }
    return m;
}

/// psi1: k(Q1//B) -> k(Z//B), (a, g) -> sum over relations p of (p, p^(a,g)).
template <class F>
Matrix<F> build_psi1(const F& K, const CochainBases& cb) {
    const RelationSet& z = *cb.z;
    const PathBasis& basis = *cb.basis;
    Matrix<F> m(K, cb.c2.size(), cb.c1.size());
    for (int col = 0; col < cb.c1.size(); ++col) {
        int a = cb.c1.pairs[col].x;
        const Path& gamma = basis.path(cb.c1.pairs[col].y);
        for (int r = 0; r < z.size(); ++r) {
            for (auto [bidx, mult] : substitute(z[r], a, gamma, basis)) {
                auto it = cb.c2_lookup.find({r, bidx});
                if (it == cb.c2_lookup.end())
                    throw Error(ErrorKind::Internal, "psi1: substitution result missing from Z//B");
                m.at(it->second, col) = K.add(m.at(it->second, col), K.from_int(mult));
            }
        }
    }
    return m;
}

/// [(a,g),(b,e)] = (b, e^(a,g)) - (a, g^(b,e)), extended bilinearly.
/// Arguments and result are coordinate vectors over Q1//B.
template <class F>
Vec<F> bracket_c1(const F& K, const CochainBases& cb, const Vec<F>& x, const Vec<F>& y) {
    const PathBasis& basis = *cb.basis;
    Vec<F> out = zero_vec(K, cb.c1.size());
    for (int i = 0; i < cb.c1.size(); ++i) {
        if (K.is_zero(x[i])) continue;
        int ax = cb.c1.pairs[i].x;
        const Path& gx = basis.path(cb.c1.pairs[i].y);
        for (int j = 0; j < cb.c1.size(); ++j) {
            if (K.is_zero(y[j])) continue;
            int ay = cb.c1.pairs[j].x;
            const Path& gy = basis.path(cb.c1.pairs[j].y);
            auto f = K.mul(x[i], y[j]);
            for (auto [bidx, mult] : substitute(gy, ax, gx, basis)) {
                int t = cb.c1_index(ay, bidx);
                out[t] = K.add(out[t], K.mul(f, K.from_int(mult)));
            }
            for (auto [bidx, mult] : substitute(gx, ay, gy, basis)) {
                int t = cb.c1_index(ax, bidx);
                out[t] = K.sub(out[t], K.mul(f, K.from_int(mult)));
            }
        }
    }
    return out;
}

template <class F>
struct DegreePiece {
    int degree = 0;
    Subspace<F> ker; // degree-d part of Ker psi1, in full Q1//B coordinates
    Subspace<F> im;  // psi0 of the degree-d part of Q0//B
    QuotientSpace<F> quot;
};

/// H1 = Ker psi1 / Im psi0 with its grading; representatives chosen degree by
/// degree, each supported in a single degree.
template <class F>
struct GradedH1 {
    CochainBases cb;
    Matrix<F> psi0, psi1;
    Subspace<F> ker1, im0;
    std::vector<DegreePiece<F>> pieces; // ascending degree, nonzero kernel only
    int dim = 0;
    std::vector<std::pair<int, int>> basis_loc; // H1 basis index -> (piece, rep)

    int degree_of_basis(int i) const { return pieces[basis_loc[i].first].degree; }

    /// Representative of the i-th H1 basis vector, in Q1//B coordinates.
    const Vec<F>& rep_vec(int i) const {
        return pieces[basis_loc[i].first].quot.reps[basis_loc[i].second];
    }

    std::map<int, int> graded_dims() const {
        std::map<int, int> out;
        for (const auto& p : pieces)
            if (p.quot.dim() > 0) out[p.degree] = p.quot.dim();
        return out;
    }

    int dim_in_degree(int d) const {
        for (const auto& p : pieces)
            if (p.degree == d) return p.quot.dim();
        return 0;
    }

    /// H1 coordinates of a kernel element given in Q1//B coordinates.
    Vec<F> reduce(const F& K, const Vec<F>& x) const {
        Vec<F> out = zero_vec(K, dim);
        Vec<F> leftover = x;
        int off = 0;
        for (const auto& piece : pieces) {
            Vec<F> part = zero_vec(K, cb.c1.size());
            for (int i = 0; i < cb.c1.size(); ++i)
                if (cb.c1.degree[i] == piece.degree) {
                    part[i] = leftover[i];
                    leftover[i] = K.zero();
                }
            auto coords = piece.quot.reduce(K, part);
            for (int i = 0; i < piece.quot.dim(); ++i) out[off + i] = coords[i];
            off += piece.quot.dim();
        }
        if (!vec_is_zero(K, leftover))
            throw Error(ErrorKind::Internal, "GradedH1::reduce: element outside Ker psi1");
        return out;
    }

    /// Canonical representative in Q1//B coordinates of H1 coordinates.
    Vec<F> lift(const F& K, const Vec<F>& coords) const {
        Vec<F> r = zero_vec(K, cb.c1.size());
        for (int i = 0; i < dim; ++i)
            if (!K.is_zero(coords[i])) vec_axpy(K, r, coords[i], rep_vec(i));
        return r;
    }
};

template <class F>
GradedH1<F> compute_h1(const F& K, const Quiver& q, const RelationSet& z, const PathBasis& basis) {
    GradedH1<F> h;
    h.cb = CochainBases::build(q, z, basis);
    h.psi0 = build_psi0(K, h.cb);
    h.psi1 = build_psi1(K, h.cb);
    if (!Matrix<F>::mul(K, h.psi1, h.psi0).is_zero(K))
        throw Error(ErrorKind::ComplexBroken, "psi1 . psi0 != 0");
    h.ker1 = kernel(K, h.psi1);
    h.im0 = image(K, h.psi0);

    std::set<int> degrees(h.cb.c1.degree.begin(), h.cb.c1.degree.end());
    for (int d : degrees) {
        // kernel of psi1 restricted to the degree-d coordinate block
        std::vector<int> cols;
        for (int i = 0; i < h.cb.c1.size(); ++i)
            if (h.cb.c1.degree[i] == d) cols.push_back(i);
        Matrix<F> sub(K, h.psi1.rows, static_cast<int>(cols.size()));
        for (int r = 0; r < h.psi1.rows; ++r)
            for (size_t c = 0; c < cols.size(); ++c) sub.at(r, static_cast<int>(c)) = h.psi1.at(r, cols[c]);
        auto kd = kernel(K, sub);
        std::vector<Vec<F>> kgens;
        for (const auto& row : kd.basis) {
            Vec<F> v = zero_vec(K, h.cb.c1.size());
            for (size_t c = 0; c < cols.size(); ++c) v[cols[c]] = row[c];
            kgens.push_back(std::move(v));
        }
        auto ker_d = Subspace<F>::span(K, h.cb.c1.size(), kgens);

        std::vector<Vec<F>> igens;
        for (int col = 0; col < h.cb.c0.size(); ++col) {
            if (h.cb.c0.degree[col] != d) continue;
            Vec<F> v = zero_vec(K, h.cb.c1.size());
            for (int r = 0; r < h.psi0.rows; ++r) v[r] = h.psi0.at(r, col);
            igens.push_back(std::move(v));
        }
        auto im_d = Subspace<F>::span(K, h.cb.c1.size(), igens);
        if (!ker_d.contains_subspace(K, im_d))
            throw Error(ErrorKind::ComplexBroken, "Im psi0 not contained in Ker psi1 in degree " +
                                                      std::to_string(d));
        if (ker_d.dim() == 0) continue;
        DegreePiece<F> piece;
        piece.degree = d;
        piece.quot = make_quotient(K, ker_d, im_d);
        piece.ker = std::move(ker_d);
        piece.im = std::move(im_d);
        h.pieces.push_back(std::move(piece));
    }
    int idx = 0;
    for (size_t p = 0; p < h.pieces.size(); ++p)
        for (int r = 0; r < h.pieces[p].quot.dim(); ++r) {
            h.basis_loc.emplace_back(static_cast<int>(p), r);
            ++idx;
        }
    h.dim = idx;
    return h;
}

/// Label for an H1 basis vector: its representative as a signed combination
/// of parallel pairs.
template <class F>
std::string h1_basis_label(const F& K, const GradedH1<F>& h, int i) {
    const auto& v = h.rep_vec(i);
    std::string s;
    for (int t = 0; t < h.cb.c1.size(); ++t) {
        if (K.is_zero(v[t])) continue;
        std::string coeff = K.to_string(v[t]);
        bool neg = !coeff.empty() && coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        s += mag == "1" ? h.cb.c1_label(t) : mag + "*" + h.cb.c1_label(t);
    }
    return s.empty() ? "0" : s;
}

/// Structure constants of H1 as a Lie algebra: brackets of representative
/// pairs reduced modulo Im psi0, expressed in quotient coordinates.
template <class F>
LieAlgebra<F> structure_constants(const F& K, const GradedH1<F>& h) {
    int n = h.dim;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(h1_basis_label(K, h, i));
    std::vector<std::vector<Vec<F>>> cc(n, std::vector<Vec<F>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cc[i][j] = h.reduce(K, bracket_c1(K, h.cb, h.rep_vec(i), h.rep_vec(j)));
    return LieAlgebra<F>::make(K, std::move(labels), std::move(cc));
}

} // namespace qh1
