#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quiverh1/errors.hpp"
#include "quiverh1/field.hpp"

namespace qh1 {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
Vec<F> zero_vec(const F& K, int n) {
    return Vec<F>(n, K.zero());
}

template <class F>
bool vec_is_zero(const F& K, const Vec<F>& v) {
    for (const auto& x : v)
        if (!K.is_zero(x)) return false;
    return true;
}

template <class F>
void vec_axpy(const F& K, Vec<F>& y, const typename F::Elem& c, const Vec<F>& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] = K.add(y[i], K.mul(c, x[i]));
}

template <class F>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    Matrix() = default;
    Matrix(const F& K, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K.zero()) {}

    typename F::Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const typename F::Elem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Matrix identity(const F& K, int n) {
        Matrix m(K, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K.one();
        return m;
    }

    Matrix transposed(const F& K) const {
        Matrix t(K, cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    static Matrix mul(const F& K, const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw Error(ErrorKind::Internal, "Matrix::mul: shape mismatch");
        Matrix r(K, x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const auto& xv = x.at(i, k);
                if (K.is_zero(xv)) continue;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) = K.add(r.at(i, j), K.mul(xv, y.at(k, j)));
            }
        return r;
    }

    bool is_zero(const F& K) const {
        for (const auto& x : a)
            if (!K.is_zero(x)) return false;
        return true;
    }

    Vec<F> apply(const F& K, const Vec<F>& v) const {
        if (static_cast<int>(v.size()) != cols) throw Error(ErrorKind::Internal, "Matrix::apply: shape mismatch");
        Vec<F> r = zero_vec(K, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!K.is_zero(at(i, j))) r[i] = K.add(r[i], K.mul(at(i, j), v[j]));
        return r;
    }
};

/// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref_inplace(const F& K, Matrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r)
            if (!K.is_zero(m.at(r, col))) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        auto piv = m.at(row, col);
        auto pinv = K.inv(piv);
        for (int c = col; c < m.cols; ++c) m.at(row, c) = K.mul(pinv, m.at(row, c));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            auto f = m.at(r, col);
            if (K.is_zero(f)) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = K.sub(m.at(r, c), K.mul(f, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Row space of a matrix in canonical reduced form.
template <class F>
struct Subspace {
    int ambient = 0;
    std::vector<Vec<F>> basis; // rows of the RREF, leading coefficient 1
    std::vector<int> pivots;   // strictly increasing pivot columns

    int dim() const { return static_cast<int>(basis.size()); }

    static Subspace zero(const F&, int ambient) { return Subspace{ambient, {}, {}}; }

    static Subspace full(const F& K, int ambient) {
        Subspace s{ambient, {}, {}};
        for (int i = 0; i < ambient; ++i) {
            auto v = zero_vec(K, ambient);
            v[i] = K.one();
            s.basis.push_back(std::move(v));
            s.pivots.push_back(i);
        }
        return s;
    }

    static Subspace span(const F& K, int ambient, const std::vector<Vec<F>>& gens) {
        Matrix<F> m(K, static_cast<int>(gens.size()), ambient);
        for (size_t r = 0; r < gens.size(); ++r)
            for (int c = 0; c < ambient; ++c) m.at(static_cast<int>(r), c) = gens[r][c];
        auto piv = rref_inplace(K, m);
        Subspace s{ambient, {}, piv};
        for (size_t r = 0; r < piv.size(); ++r) {
            Vec<F> row(ambient, K.zero());
            for (int c = 0; c < ambient; ++c) row[c] = m.at(static_cast<int>(r), c);
            s.basis.push_back(std::move(row));
        }
        return s;
    }

    /// Eliminates this subspace from v: linear, kills the subspace, identity on reduced vectors.
    Vec<F> reduce(const F& K, Vec<F> v) const {
        for (size_t i = 0; i < basis.size(); ++i) {
            const auto& c = v[pivots[i]];
            if (K.is_zero(c)) continue;
            auto f = c;
            for (int j = pivots[i]; j < ambient; ++j) v[j] = K.sub(v[j], K.mul(f, basis[i][j]));
        }
        return v;
    }

    bool contains(const F& K, const Vec<F>& v) const { return vec_is_zero(K, reduce(K, v)); }

    bool contains_subspace(const F& K, const Subspace& w) const {
        for (const auto& row : w.basis)
            if (!contains(K, row)) return false;
        return true;
    }

    bool equals(const F& K, const Subspace& w) const {
        return dim() == w.dim() && contains_subspace(K, w);
    }

    static Subspace sum(const F& K, const Subspace& a, const Subspace& b) {
        std::vector<Vec<F>> gens = a.basis;
        gens.insert(gens.end(), b.basis.begin(), b.basis.end());
        return span(K, a.ambient, gens);
    }
};

template <class F>
Subspace<F> row_space(const F& K, Matrix<F> m) {
    auto piv = rref_inplace(K, m);
    Subspace<F> s{m.cols, {}, piv};
    for (size_t r = 0; r < piv.size(); ++r) {
        Vec<F> row(m.cols, K.zero());
        for (int c = 0; c < m.cols; ++c) row[c] = m.at(static_cast<int>(r), c);
        s.basis.push_back(std::move(row));
    }
    return s;
}

/// Column space, presented in the row-index ambient space.
template <class F>
Subspace<F> image(const F& K, const Matrix<F>& m) {
    return row_space(K, m.transposed(K));
}

template <class F>
Subspace<F> kernel(const F& K, Matrix<F> m) {
    int n = m.cols;
    auto piv = rref_inplace(K, m);
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec<F>> gens;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        Vec<F> v = zero_vec(K, n);
        v[freec] = K.one();
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = K.neg(m.at(static_cast<int>(r), freec));
        gens.push_back(std::move(v));
    }
    return Subspace<F>::span(K, n, gens);
}

/// Incremental independence tracker over a fixed ambient space.
template <class F>
struct IncrementalSpan {
    int ambient = 0;
    std::map<int, Vec<F>> rows; // lead index -> row with lead coefficient 1

    explicit IncrementalSpan(int amb) : ambient(amb) {}

    Vec<F> residual(const F& K, Vec<F> v) const {
        for (const auto& [lead, row] : rows) {
            if (K.is_zero(v[lead])) continue;
            auto f = v[lead];
            for (int j = lead; j < ambient; ++j) v[j] = K.sub(v[j], K.mul(f, row[j]));
        }
        return v;
    }

    /// Returns true when v was independent of the current span.
    bool add(const F& K, const Vec<F>& v) {
        auto r = residual(K, v);
        int lead = -1;
        for (int j = 0; j < ambient; ++j)
            if (!K.is_zero(r[j])) { lead = j; break; }
        if (lead < 0) return false;
        auto f = K.inv(r[lead]);
        for (int j = lead; j < ambient; ++j) r[j] = K.mul(f, r[j]);
        rows.emplace(lead, std::move(r));
        return true;
    }

    bool contains(const F& K, const Vec<F>& v) const { return vec_is_zero(K, residual(K, v)); }
    int dim() const { return static_cast<int>(rows.size()); }
};

/// Expresses vectors in a fixed list of linearly independent generators.
template <class F>
struct CoordSolver {
    int ambient = 0;
    int ngens = 0;
    struct Row {
        Vec<F> w;    // echelon row over the ambient space, lead coefficient 1
        Vec<F> tag;  // w written in the generators
        int lead;
    };
    std::vector<Row> rows;

    CoordSolver() = default;

    CoordSolver(const F& K, int amb, const std::vector<Vec<F>>& gens) : ambient(amb), ngens(static_cast<int>(gens.size())) {
        for (int g = 0; g < ngens; ++g) {
            Vec<F> w = gens[g];
            Vec<F> tag = zero_vec(K, ngens);
            tag[g] = K.one();
            eliminate(K, w, tag);
            int lead = -1;
            for (int j = 0; j < ambient; ++j)
                if (!K.is_zero(w[j])) { lead = j; break; }
            if (lead < 0) throw Error(ErrorKind::Internal, "CoordSolver: generators are dependent");
            auto f = K.inv(w[lead]);
            for (int j = 0; j < ambient; ++j) w[j] = K.mul(f, w[j]);
            for (int j = 0; j < ngens; ++j) tag[j] = K.mul(f, tag[j]);
            rows.push_back(Row{std::move(w), std::move(tag), lead});
        }
    }

    void eliminate(const F& K, Vec<F>& w, Vec<F>& tag) const {
        for (const auto& row : rows) {
            const auto& c = w[row.lead];
            if (K.is_zero(c)) continue;
            auto f = c;
            for (int j = 0; j < ambient; ++j) w[j] = K.sub(w[j], K.mul(f, row.w[j]));
            for (int j = 0; j < ngens; ++j) tag[j] = K.sub(tag[j], K.mul(f, row.tag[j]));
        }
    }

    /// Coordinates of x in the generators, or nullopt when x is outside their span.
    std::optional<Vec<F>> coords(const F& K, Vec<F> x) const {
        Vec<F> acc = zero_vec(K, ngens);
        for (const auto& row : rows) {
            const auto& c = x[row.lead];
            if (K.is_zero(c)) continue;
            auto f = c;
            for (int j = 0; j < ambient; ++j) x[j] = K.sub(x[j], K.mul(f, row.w[j]));
            for (int j = 0; j < ngens; ++j) acc[j] = K.add(acc[j], K.mul(f, row.tag[j]));
        }
        if (!vec_is_zero(K, x)) return std::nullopt;
        return acc;
    }
};

/// V / W with canonical representatives: V's reduced basis rows modulo W,
/// kept in canonical order while independent.
template <class F>
struct QuotientSpace {
    Subspace<F> V, W;
    std::vector<Vec<F>> reps;
    CoordSolver<F> solver; // over W.basis followed by reps

    int dim() const { return static_cast<int>(reps.size()); }

    /// Quotient coordinates of x (x must lie in V).
    Vec<F> reduce(const F& K, const Vec<F>& x) const {
        auto c = solver.coords(K, x);
        if (!c) throw Error(ErrorKind::NotSubspace, "QuotientSpace::reduce: vector outside the ambient subspace");
        Vec<F> out(reps.size(), K.zero());
        for (size_t i = 0; i < reps.size(); ++i) out[i] = (*c)[W.dim() + i];
        return out;
    }

    /// Canonical representative of quotient coordinates.
    Vec<F> lift(const F& K, const Vec<F>& coords) const {
        Vec<F> r = zero_vec(K, V.ambient);
        for (size_t i = 0; i < reps.size(); ++i)
            if (!K.is_zero(coords[i])) vec_axpy(K, r, coords[i], reps[i]);
        return r;
    }
};

template <class F>
QuotientSpace<F> make_quotient(const F& K, const Subspace<F>& V, const Subspace<F>& W) {
    if (V.ambient != W.ambient || !V.contains_subspace(K, W))
        throw Error(ErrorKind::NotSubspace, "quotient: W is not a subspace of V");
    QuotientSpace<F> q;
    q.V = V;
    q.W = W;
    IncrementalSpan<F> seen(V.ambient);
    for (const auto& row : W.basis) seen.add(K, row);
    for (const auto& row : V.basis) {
        auto red = W.reduce(K, row);
        if (seen.add(K, red)) q.reps.push_back(std::move(red));
    }
    if (static_cast<int>(q.reps.size()) != V.dim() - W.dim())
        throw Error(ErrorKind::Internal, "quotient: dimension law violated");
    std::vector<Vec<F>> gens = W.basis;
    gens.insert(gens.end(), q.reps.begin(), q.reps.end());
    q.solver = CoordSolver<F>(K, V.ambient, gens);
    return q;
}

/// Sparse incremental row echelon for large, very sparse exact systems
/// (the standard-complex derivation solve).
template <class F>
struct SparseEchelon {
    using Term = std::pair<int, typename F::Elem>; // (index, coefficient), sorted by index
    int ambient = 0;
    std::map<int, std::vector<Term>> pivot_rows; // lead index -> row, lead coefficient 1

    explicit SparseEchelon(int amb) : ambient(amb) {}

    int rank() const { return static_cast<int>(pivot_rows.size()); }

    static void axpy_sparse(const F& K, std::vector<Term>& y, const typename F::Elem& c, const std::vector<Term>& x) {
        std::vector<Term> out;
        out.reserve(y.size() + x.size());
        size_t i = 0, j = 0;
        while (i < y.size() || j < x.size()) {
            if (j >= x.size() || (i < y.size() && y[i].first < x[j].first)) {
                out.push_back(y[i++]);
            } else if (i >= y.size() || x[j].first < y[i].first) {
                auto v = K.mul(c, x[j].second);
                if (!K.is_zero(v)) out.emplace_back(x[j].first, v);
                ++j;
            } else {
                auto v = K.add(y[i].second, K.mul(c, x[j].second));
                if (!K.is_zero(v)) out.emplace_back(y[i].first, v);
                ++i;
                ++j;
            }
        }
        y = std::move(out);
    }

    /// Returns true when the row increased the rank.
    bool insert(const F& K, std::vector<Term> row) {
        while (!row.empty()) {
            auto it = pivot_rows.find(row.front().first);
            if (it == pivot_rows.end()) break;
            auto c = K.neg(row.front().second);
            axpy_sparse(K, row, c, it->second);
        }
        if (row.empty()) return false;
        auto f = K.inv(row.front().second);
        for (auto& t : row) t.second = K.mul(f, t.second);
        int lead = row.front().first;
        pivot_rows.emplace(lead, std::move(row));
        return true;
    }

    /// Kernel of the inserted row system, as dense vectors.
    std::vector<Vec<F>> kernel_basis(const F& K) const {
        std::vector<bool> is_pivot(ambient, false);
        for (const auto& [lead, _] : pivot_rows) is_pivot[lead] = true;
        std::vector<Vec<F>> out;
        for (int freec = 0; freec < ambient; ++freec) {
            if (is_pivot[freec]) continue;
            Vec<F> x = zero_vec(K, ambient);
            x[freec] = K.one();
            for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
                const auto& row = it->second;
                auto s = K.zero();
                for (size_t t = 1; t < row.size(); ++t)
                    s = K.add(s, K.mul(row[t].second, x[row[t].first]));
                x[it->first] = K.neg(s);
            }
            out.push_back(std::move(x));
        }
        return out;
    }
};

} // namespace qh1
