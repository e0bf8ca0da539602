#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quiverh1/cohomology.hpp"
#include "quiverh1/lie.hpp"

namespace qh1 {

/// The saturation preorder on parallel arrows: a <= b iff every replacement
/// of one occurrence of b in a relation lands back in the relation ideal.
/// Field-independent (all substitution multiplicities are 1 for distinct
/// arrows), so computed once per presentation.
struct SaturationOrder {
    std::vector<std::vector<int>> classes;                 // parallel classes, canonical order
    std::vector<std::vector<bool>> leq;                    // leq[a][b]: a <= b (parallel arrows only)
    std::vector<std::vector<std::vector<int>>> sat_classes; // per class: equivalence classes of ~
    std::vector<std::vector<std::vector<int>>> components;  // per class: components of symmetrized <=

    bool completely_saturated = true; // every two parallel arrows equivalent
    bool symmetric = true;            // <= symmetric on every class
    bool any_comparable_distinct = false;

    bool le(int a, int b) const { return leq[a][b]; }
    bool equivalent(int a, int b) const { return leq[a][b] && leq[b][a]; }
};

inline SaturationOrder saturation_order(const Quiver& q, const RelationSet& z, const PathBasis& basis) {
    SaturationOrder s;
    s.classes = parallel_classes(q);
    int n = q.num_arrows();
    s.leq.assign(n, std::vector<bool>(n, false));
    for (const auto& cls : s.classes) {
        for (int a : cls)
            for (int b : cls) {
                // a <= b iff p^(b,a) = 0 for every relation p
                bool le = true;
                for (const auto& p : z.relations())
                    if (!substitution_vanishes(p, b, Path{-1, {a}}, basis)) {
                        le = false;
                        break;
                    }
                s.leq[a][b] = le;
            }
        // the relation is reflexive and transitive on each class; asserted, not assumed
        for (int a : cls) {
            if (!s.leq[a][a])
                throw Error(ErrorKind::Internal, "saturation order is not reflexive");
            for (int b : cls)
                for (int c : cls)
                    if (s.leq[a][b] && s.leq[b][c] && !s.leq[a][c])
                        throw Error(ErrorKind::Internal, "saturation order is not transitive");
        }
        for (int a : cls)
            for (int b : cls) {
                if (a != b && s.leq[a][b]) s.any_comparable_distinct = true;
                if (s.leq[a][b] && !s.leq[b][a]) s.symmetric = false;
                if (!(s.leq[a][b] && s.leq[b][a]) && a != b) s.completely_saturated = false;
            }
        // equivalence classes of mutual saturation, canonical order
        std::vector<std::vector<int>> eqs;
        for (int a : cls) {
            bool placed = false;
            for (auto& e : eqs)
                if (s.leq[a][e.front()] && s.leq[e.front()][a]) {
                    e.push_back(a);
                    placed = true;
                    break;
                }
            if (!placed) eqs.push_back({a});
        }
        s.sat_classes.push_back(eqs);
        // connected components of the symmetrized relation
        std::vector<std::vector<int>> comps;
        std::vector<bool> seen(q.num_arrows(), false);
        for (int a : cls) {
            if (seen[a]) continue;
            std::vector<int> comp, stack{a};
            seen[a] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                for (int y : cls)
                    if (!seen[y] && (s.leq[x][y] || s.leq[y][x])) {
                        seen[y] = true;
                        stack.push_back(y);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        s.components.push_back(std::move(comps));
    }
    return s;
}

/// The combinatorial basis of L0: (i) one-way and mutual couples (a,b), a != b,
/// lying in Ker psi1; (ii) per parallel class, all but the last diagonal;
/// (iii) further independent diagonals modulo the vertex relations.
struct L0BasisDescription {
    std::vector<std::pair<int, int>> off_diagonal; // (a, b) arrows, a != b
    std::vector<int> class_diagonals;              // item (ii) arrows
    std::vector<int> extra_diagonals;              // item (iii) arrows
    int dim = 0;
};

template <class F>
Vec<F> c1_unit(const F& K, const CochainBases& cb, int arrow, int basis_path) {
    Vec<F> v = zero_vec(K, cb.c1.size());
    v[cb.c1_index(arrow, basis_path)] = K.one();
    return v;
}

template <class F>
Vec<F> arrow_pair_vec(const F& K, const CochainBases& cb, int a, int b) {
    auto idx = cb.basis->index(Path{-1, {b}});
    if (!idx) throw Error(ErrorKind::Internal, "arrow missing from basis");
    return c1_unit(K, cb, a, *idx);
}

template <class F>
L0BasisDescription l0_basis(const F& K, const GradedH1<F>& h, const SaturationOrder& sat) {
    const CochainBases& cb = h.cb;
    L0BasisDescription out;
    // (i) all (a,b), a != b, with (a,b) in Ker psi1, i.e. b <= a
    for (const auto& cls : sat.classes)
        for (int a : cls)
            for (int b : cls)
                if (a != b && sat.le(b, a)) out.off_diagonal.emplace_back(a, b);
    // degree-0 vertex relations
    std::vector<Vec<F>> relations;
    for (int col = 0; col < cb.c0.size(); ++col) {
        if (cb.c0.degree[col] != 0) continue;
        Vec<F> v = zero_vec(K, cb.c1.size());
        for (int r = 0; r < h.psi0.rows; ++r) v[r] = h.psi0.at(r, col);
        relations.push_back(std::move(v));
    }
    IncrementalSpan<F> span(cb.c1.size());
    for (const auto& r : relations) span.add(K, r);
    // (ii) per class: first n-1 diagonals; dependence here is a bug sentinel
    for (const auto& cls : sat.classes)
        for (size_t i = 0; i + 1 < cls.size(); ++i) {
            if (!span.add(K, arrow_pair_vec(K, cb, cls[i], cls[i])))
                throw Error(ErrorKind::DimensionMismatch, "L0 basis item (ii) is dependent");
            out.class_diagonals.push_back(cls[i]);
        }
    // (iii) further diagonals, canonical arrow order, greedily independent
    std::set<int> used(out.class_diagonals.begin(), out.class_diagonals.end());
    for (int a = 0; a < cb.q->num_arrows(); ++a) {
        if (used.count(a)) continue;
        if (span.add(K, arrow_pair_vec(K, cb, a, a))) out.extra_diagonals.push_back(a);
    }
    out.dim = static_cast<int>(out.off_diagonal.size() + out.class_diagonals.size() +
                               out.extra_diagonals.size());
    if (out.dim != h.dim_in_degree(0))
        throw Error(ErrorKind::DimensionMismatch,
                    "L0 basis has " + std::to_string(out.dim) + " elements but dim L0 = " +
                        std::to_string(h.dim_in_degree(0)));
    return out;
}

/// Generators of the radical of H1 (valid when L_{-1} = 0): per equivalence
/// class S the diagonal sum, every strictly one-way couple, the char-2 extras
/// for two-element classes, and everything of degree >= 1.
template <class F>
Subspace<F> combinatorial_radical(const F& K, const GradedH1<F>& h, const SaturationOrder& sat) {
    if (h.dim_in_degree(-1) != 0)
        throw Error(ErrorKind::Inapplicable, "combinatorial radical requires L_{-1} = 0");
    const CochainBases& cb = h.cb;
    std::vector<Vec<F>> gens;
    auto push = [&](const Vec<F>& c1vec) { gens.push_back(h.reduce(K, c1vec)); };
    for (size_t ci = 0; ci < sat.classes.size(); ++ci) {
        for (const auto& S : sat.sat_classes[ci]) {
            Vec<F> sum = zero_vec(K, cb.c1.size());
            for (int a : S) vec_axpy(K, sum, K.one(), arrow_pair_vec(K, cb, a, a));
            push(sum);
            if (K.characteristic() == 2 && S.size() == 2) {
                push(arrow_pair_vec(K, cb, S[0], S[1]));
                push(arrow_pair_vec(K, cb, S[1], S[0]));
                push(arrow_pair_vec(K, cb, S[0], S[0]));
            }
        }
        for (int a : sat.classes[ci])
            for (int b : sat.classes[ci])
                if (a != b && sat.le(b, a) && !sat.le(a, b)) push(arrow_pair_vec(K, cb, a, b));
    }
    for (int i = 0; i < h.dim; ++i)
        if (h.degree_of_basis(i) >= 1) {
            Vec<F> unit = zero_vec(K, h.dim);
            unit[i] = K.one();
            gens.push_back(std::move(unit));
        }
    return Subspace<F>::span(K, h.dim, gens);
}

/// The expected center of L0: the span of the diagonal
/// sums over connected components of parallel classes, in H1 coordinates.
template <class F>
Subspace<F> component_sum_span(const F& K, const GradedH1<F>& h, const SaturationOrder& sat) {
    std::vector<Vec<F>> gens;
    for (size_t ci = 0; ci < sat.classes.size(); ++ci)
        for (const auto& comp : sat.components[ci]) {
            Vec<F> sum = zero_vec(K, h.cb.c1.size());
            for (int a : comp) vec_axpy(K, sum, K.one(), arrow_pair_vec(K, h.cb, a, a));
            gens.push_back(h.reduce(K, sum));
        }
    return Subspace<F>::span(K, h.dim, gens);
}

struct PglBlock {
    std::vector<int> arrows; // the equivalence class S, canonical order
    int size = 0;
};

template <class F>
struct SemisimpleQuotientModel {
    std::vector<PglBlock> blocks;
    bool match = false;          // structure constants equal the pgl product
    int quotient_dim = 0;
};

/// H1 / Rad compared against the product of pgl(|S|) blocks, under the
/// explicit map sending the couple (alpha_p, alpha_q) to the matrix unit
/// E_{qp} of its block (the transpose pairing is the one that matches the
/// bracket orientation used here).
template <class F>
SemisimpleQuotientModel<F> semisimple_quotient_model(const F& K, const GradedH1<F>& h,
                                                     const LieAlgebra<F>& L,
                                                     const SaturationOrder& sat,
                                                     const Subspace<F>& radical) {
    SemisimpleQuotientModel<F> out;
    for (size_t ci = 0; ci < sat.classes.size(); ++ci)
        for (const auto& S : sat.sat_classes[ci]) {
            bool qualifies = K.characteristic() == 2 ? S.size() > 2 : S.size() >= 2;
            if (qualifies) out.blocks.push_back(PglBlock{S, static_cast<int>(S.size())});
        }
    auto [Lq, qspace] = L.quotient_by_ideal(K, radical);
    out.quotient_dim = Lq.n;

    int expected = 0;
    for (const auto& b : out.blocks) expected += b.size * b.size - 1;
    if (expected != Lq.n) {
        out.match = false;
        return out;
    }
    if (Lq.n == 0) {
        out.match = true;
        return out;
    }
    // designated quotient basis: images of (alpha_p, alpha_q), (p,q) != (m,m)
    std::vector<Vec<F>> xs;
    for (const auto& b : out.blocks) {
        int m = b.size;
        for (int p = 0; p < m; ++p)
            for (int qq = 0; qq < m; ++qq) {
                if (p == m - 1 && qq == m - 1) continue;
                auto v = arrow_pair_vec(K, h.cb, b.arrows[p], b.arrows[qq]);
                xs.push_back(qspace.reduce(K, h.reduce(K, v)));
            }
    }
    if (Subspace<F>::span(K, Lq.n, xs).dim() != Lq.n) {
        out.match = false;
        return out;
    }
    CoordSolver<F> solver(K, Lq.n, xs);
    int nx = static_cast<int>(xs.size());
    std::vector<std::vector<Vec<F>>> cc(nx, std::vector<Vec<F>>(nx));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j) {
            auto coords = solver.coords(K, Lq.bracket(K, xs[i], xs[j]));
            if (!coords) {
                out.match = false;
                return out;
            }
            cc[i][j] = *coords;
        }
    std::vector<std::string> lbl(nx, "x");
    LieAlgebra<F> Lx = LieAlgebra<F>::make(K, lbl, std::move(cc));

    std::vector<int> sizes;
    for (const auto& b : out.blocks) sizes.push_back(b.size);
    LieAlgebra<F> model = pgl_product(K, sizes);
    // phi: x_{(p,q)} of block t -> E_{q+1,p+1} of block t
    std::vector<Vec<F>> phi;
    int block_off = 0;
    for (const auto& b : out.blocks) {
        int m = b.size;
        auto model_index = [&](int i, int j) {
            // pgl basis enumerates (i,j) row-major skipping (m-1, m-1)
            int idx = i * m + j;
            return block_off + idx;
        };
        for (int p = 0; p < m; ++p)
            for (int qq = 0; qq < m; ++qq) {
                if (p == m - 1 && qq == m - 1) continue;
                // image of (alpha_p, alpha_q) is E_{q p}; the dropped unit
                // (m-1, m-1) cannot occur since (p,q) != (m,m)
                Vec<F> v = zero_vec(K, model.n);
                v[model_index(qq, p)] = K.one();
                phi.push_back(std::move(v));
            }
        block_off += m * m - 1;
    }
    out.match = lie_isomorphic_under(K, Lx, model, phi);
    return out;
}

enum class V3 { Yes, No, Inapplicable };

inline std::string v3_str(V3 v) {
    switch (v) {
        case V3::Yes: return "yes";
        case V3::No: return "no";
        default: return "inapplicable";
    }
}

struct SeriesDims {
    std::vector<int> derived;
    std::vector<int> lower_central;
    int center = 0;
};

/// Classification of one connected component.
struct ClassificationReport {
    int dim_h1 = 0;
    bool zero_algebra = false;

    bool l_minus1_zero = true;
    std::vector<std::string> l_minus1_witnesses;
    std::vector<std::string> l_minus1_reasons; // sufficient conditions that fired

    bool loop_case = false; // single loop with truncation length divisible by char
    int loop_m = 0;

    bool guard_acyclic_or_char0 = false;
    bool radical_applicable = false;

    V3 solvable = V3::Inapplicable;
    V3 nilpotent = V3::Inapplicable;
    V3 abelian = V3::Inapplicable;
    V3 reductive = V3::Inapplicable;
    V3 semisimple = V3::Inapplicable;
    V3 simple = V3::Inapplicable;

    std::string simple_model; // "sl(n)" / "W(1,1)" when identified
    std::vector<int> pgl_blocks;
    bool pgl_match = false;
    bool pgl_applicable = false;

    int radical_dim = -1; // -1 when not applicable
    bool radical_is_solvable_ideal = false;
    bool center_matches_component_sums = false;

    SeriesDims series;
    bool bf_solvable = false, bf_nilpotent = false, bf_abelian = false;
    std::optional<bool> bf_reductive;
    std::optional<bool> killing_nonsingular_flag; // characteristic 0 only
    int euler_count = 0;                          // |Q1| - |Q0| + 1

    std::vector<std::pair<std::string, std::string>> bf_agreement; // criterion -> "agree"/"brute-force only"/...
};

namespace detail {

/// Zero test of p^(a, e) in the field: every accumulated multiplicity dies.
template <class F>
bool substitution_zero_in_field(const F& K, const Path& p, int a, const Path& gamma,
                                const PathBasis& basis) {
    for (auto [idx, mult] : substitute(p, a, gamma, basis))
        if (!K.is_zero(K.from_int(mult))) return false;
    return true;
}

} // namespace detail

/// Field-aware witnesses for L_{-1}: loops (a, e) killed by every relation.
template <class F>
std::vector<int> l_minus1_witness_loops(const F& K, const Quiver& q, const RelationSet& z,
                                        const PathBasis& basis) {
    std::vector<int> out;
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).src != q.arrow(a).dst) continue;
        Path e = Path::trivial(q.arrow(a).src);
        bool all_zero = true;
        for (const auto& p : z.relations())
            if (!detail::substitution_zero_in_field(K, p, a, e, basis)) {
                all_zero = false;
                break;
            }
        if (all_zero) out.push_back(a);
    }
    return out;
}

/// pgl(n) is isomorphic to sl(n) when the characteristic does not divide n;
/// verified by the explicit trace-correction map.
template <class F>
bool pgl_isomorphic_to_sl(const F& K, int n) {
    if (n < 2) return false;
    long long ch = K.characteristic();
    if (ch != 0 && n % ch == 0) return false;
    auto P = pgl_algebra(K, n);
    auto S = sl_algebra(K, n);
    // sl basis matrices, same order as sl_algebra
    std::vector<Vec<F>> sl_mats;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix<F> m(K, n, n);
            m.at(i, j) = K.one();
            sl_mats.push_back(m.a);
        }
    for (int i = 0; i + 1 < n; ++i) {
        Matrix<F> m(K, n, n);
        m.at(i, i) = K.one();
        m.at(i + 1, i + 1) = K.neg(K.one());
        sl_mats.push_back(m.a);
    }
    CoordSolver<F> solver(K, n * n, sl_mats);
    // phi(Ebar_ij) = e_ij - delta_ij (1/n) I
    auto inv_n = K.inv(K.from_int(n));
    std::vector<Vec<F>> phi;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) continue;
            Matrix<F> m(K, n, n);
            m.at(i, j) = K.one();
            if (i == j)
                for (int t = 0; t < n; ++t) m.at(t, t) = K.sub(m.at(t, t), inv_n);
            auto coords = solver.coords(K, m.a);
            if (!coords) return false;
            phi.push_back(*coords);
        }
    return lie_isomorphic_under(K, P, S, phi);
}

namespace detail {

/// Smallest m with a^m outside the basis, when the relation a^m is literally
/// present in Z (the pure power truncating the loop a).
inline std::optional<int> loop_power_in_relations(const Quiver& q, const RelationSet& z,
                                                  const PathBasis& basis, int a) {
    int m = 1;
    while (true) {
        Path pw{-1, std::vector<int>(static_cast<size_t>(m), a)};
        if (!basis.contains(pw)) break;
        ++m;
        if (m > basis.size() + 1) return std::nullopt;
    }
    Path pw{-1, std::vector<int>(static_cast<size_t>(m), a)};
    for (const auto& p : z.relations())
        if (p == pw) return m;
    return std::nullopt;
}

inline bool is_truncated_algebra(const Quiver& q, const RelationSet& z) {
    if (z.size() == 0) return false;
    int m = z[0].length();
    for (const auto& p : z.relations())
        if (p.length() != m) return false;
    // count all paths of length m
    long long count = 0;
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < q.num_arrows(); ++a) frontier.push_back({a});
    for (int len = 1; len < m; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int a : q.arrows_from(q.arrow(w.back()).dst)) {
                auto ww = w;
                ww.push_back(a);
                next.push_back(std::move(ww));
                if (static_cast<long long>(next.size()) > z.size() + 1) return false;
            }
        frontier = std::move(next);
    }
    count = static_cast<long long>(frontier.size());
    return count == z.size();
}

} // namespace detail

template <class F>
struct ComponentVerdicts {
    ClassificationReport report;
    Subspace<F> radical;           // valid iff report.radical_applicable
    SemisimpleQuotientModel<F> model; // valid iff report.pgl_applicable
};

/// Evaluates the combinatorial classification of one connected component and
/// cross-checks every applicable verdict against brute force on the structure
/// constants.
template <class F>
ComponentVerdicts<F> classify_component(const F& K, const Quiver& q, const RelationSet& z,
                                        const PathBasis& basis, const GradedH1<F>& h,
                                        const LieAlgebra<F>& L, const SaturationOrder& sat) {
    ComponentVerdicts<F> out;
    ClassificationReport& r = out.report;
    const long long ch = K.characteristic();
    r.dim_h1 = h.dim;
    r.zero_algebra = h.dim == 0;
    r.euler_count = q.num_arrows() - q.num_vertices() + 1;

    // ---- L_{-1} ----
    auto witnesses = l_minus1_witness_loops(K, q, z, basis);
    r.l_minus1_zero = witnesses.empty();
    for (int a : witnesses)
        r.l_minus1_witnesses.push_back("(" + q.arrow(a).name + ", " +
                                       q.vertex_name(q.arrow(a).src) + ")");
    if (h.dim_in_degree(-1) != static_cast<int>(witnesses.size()))
        throw Error(ErrorKind::Internal, "dim L_{-1} disagrees with its loop witnesses");
    bool has_loop = false;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(a).src == q.arrow(a).dst) has_loop = true;
    if (!has_loop) r.l_minus1_reasons.push_back("quiver has no loop");
    if (ch == 0) r.l_minus1_reasons.push_back("characteristic 0");
    if (has_loop && ch > 0) {
        bool all_coprime = true;
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(a).src != q.arrow(a).dst) continue;
            auto m = detail::loop_power_in_relations(q, z, basis, a);
            if (!m || *m % ch == 0) all_coprime = false;
        }
        if (all_coprime)
            r.l_minus1_reasons.push_back("every loop is truncated by a power coprime to the characteristic");
        bool truncated = detail::is_truncated_algebra(q, z);
        if (truncated && !(q.num_vertices() == 1 && q.num_arrows() == 1))
            r.l_minus1_reasons.push_back("truncated algebra on a quiver other than the loop");
    }

    // ---- brute-force facts from structure constants ----
    auto ds = L.derived_series(K);
    auto lc = L.lower_central_series(K);
    for (const auto& s : ds) r.series.derived.push_back(s.dim());
    for (const auto& s : lc) r.series.lower_central.push_back(s.dim());
    auto center = L.center(K);
    r.series.center = center.dim();
    r.bf_solvable = ds.back().dim() == 0;
    r.bf_nilpotent = lc.back().dim() == 0;
    r.bf_abelian = L.is_abelian(K);
    if (ch == 0) r.killing_nonsingular_flag = killing_nonsingular(K, L);

    r.guard_acyclic_or_char0 = !q.has_oriented_cycle() || ch == 0;
    r.radical_applicable = r.l_minus1_zero;
    r.loop_case = q.num_vertices() == 1 && q.num_arrows() == 1 && z.size() == 1 && ch > 0 &&
                  z[0].length() % ch == 0;
    if (r.loop_case) r.loop_m = z[0].length();

    // ---- L0 center: must equal the span of component sums ----
    {
        std::vector<int> deg0;
        for (int i = 0; i < h.dim; ++i)
            if (h.degree_of_basis(i) == 0) deg0.push_back(i);
        int m = static_cast<int>(deg0.size());
        std::vector<std::vector<Vec<F>>> cc(m, std::vector<Vec<F>>(m, zero_vec(K, m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) cc[i][j][k] = L.c[deg0[i]][deg0[j]][deg0[k]];
        auto L0 = LieAlgebra<F>::make(K, std::vector<std::string>(m, "l0"), std::move(cc));
        auto z_l0 = L0.center(K);
        auto sums = component_sum_span(K, h, sat);
        // restrict the component-sum span to the degree-0 coordinates
        std::vector<Vec<F>> restricted;
        for (const auto& row : sums.basis) {
            Vec<F> v(m, K.zero());
            for (int i = 0; i < m; ++i) v[i] = row[deg0[i]];
            restricted.push_back(std::move(v));
        }
        r.center_matches_component_sums =
            z_l0.equals(K, Subspace<F>::span(K, m, restricted));
    }

    bool higher_zero = true;
    for (const auto& piece : h.pieces)
        if (piece.degree >= 1 && piece.quot.dim() > 0) higher_zero = false;

    if (r.radical_applicable) {
        out.radical = combinatorial_radical(K, h, sat);
        r.radical_dim = out.radical.dim();
        r.radical_is_solvable_ideal =
            L.is_ideal(K, out.radical) && L.subspace_solvable(K, out.radical);
        r.bf_reductive = out.radical.equals(K, center);
    }

    auto agree = [&](const std::string& name, bool a, bool b) {
        r.bf_agreement.emplace_back(name, a == b ? "agree" : "DISAGREE");
    };
    auto brute_only = [&](const std::string& name) {
        r.bf_agreement.emplace_back(name, "brute-force only");
    };

    int nontrivial_classes = 0, nontrivial_size = 0;
    bool parallel_class_of_two = false;
    for (const auto& cls : sat.classes) {
        if (cls.size() >= 2) {
            ++nontrivial_classes;
            nontrivial_size = static_cast<int>(cls.size());
        }
        if (cls.size() == 2) parallel_class_of_two = true;
    }
    bool sat_class_of_two = false;
    bool sat_classes_all_singleton = true, sat_classes_all_le2 = true;
    for (const auto& per_class : sat.sat_classes)
        for (const auto& S : per_class) {
            if (S.size() == 2) sat_class_of_two = true;
            if (S.size() > 1) sat_classes_all_singleton = false;
            if (S.size() > 2) sat_classes_all_le2 = false;
        }

    if (r.loop_case) {
        // exceptional single-loop case: classification by the truncation length
        bool ss = (r.loop_m == ch && ch > 2);
        r.semisimple = ss ? V3::Yes : V3::No;
        r.simple = ss ? V3::Yes : V3::No;
        r.solvable = r.bf_solvable ? V3::Yes : V3::No;
        r.nilpotent = r.bf_nilpotent ? V3::Yes : V3::No;
        r.abelian = r.bf_abelian ? V3::Yes : V3::No;
        brute_only("solvable");
        brute_only("nilpotent");
        brute_only("abelian");
        if (ss) {
            // H1 is the Witt algebra under e_{i-1} = class of (a, a^i)
            auto W = witt_algebra(K);
            std::vector<Vec<F>> phi;
            for (int i = 0; i < h.dim; ++i) phi.push_back(W.k_basis(K, i));
            bool match = (h.dim == static_cast<int>(ch)) && lie_isomorphic_under(K, L, W, phi);
            if (match) r.simple_model = "W(1,1)";
            agree("semisimple (Witt model)", ss, match);
            r.reductive = V3::Yes;
        } else {
            // brute-force witness of non-semisimplicity: a nonzero solvable ideal
            bool witness = r.bf_solvable && h.dim > 0;
            if (!witness) {
                std::vector<Vec<F>> gens;
                for (int i = 0; i < h.dim; ++i)
                    if (h.degree_of_basis(i) >= static_cast<int>(ch) - 1) {
                        Vec<F> u = zero_vec(K, h.dim);
                        u[i] = K.one();
                        gens.push_back(std::move(u));
                    }
                auto tail = Subspace<F>::span(K, h.dim, gens);
                witness = tail.dim() > 0 && L.is_ideal(K, tail) && L.subspace_solvable(K, tail);
            }
            agree("not semisimple (solvable ideal witness)", true, witness);
            if (r.bf_solvable)
                r.reductive = r.bf_abelian ? V3::Yes : V3::No;
            else
                r.reductive = V3::Inapplicable;
        }
        return out;
    }

    // ---- solvability ----
    if (r.radical_applicable) {
        bool comb = ch == 2 ? sat_classes_all_le2 : sat_classes_all_singleton;
        r.solvable = comb ? V3::Yes : V3::No;
        agree("solvable", comb, r.bf_solvable);
    } else {
        r.solvable = r.bf_solvable ? V3::Yes : V3::No;
        brute_only("solvable");
    }

    // ---- nilpotency chain ----
    if (r.guard_acyclic_or_char0) {
        bool item_iv = higher_zero && !sat.any_comparable_distinct;
        bool item_vi = h.dim == r.euler_count;
        r.nilpotent = item_iv ? V3::Yes : V3::No;
        r.abelian = item_iv ? V3::Yes : V3::No;
        agree("nilpotent", item_iv, r.bf_nilpotent);
        agree("abelian", item_iv, r.bf_abelian);
        agree("abelian = euler count", item_iv, item_vi);
    } else {
        r.nilpotent = r.bf_nilpotent ? V3::Yes : V3::No;
        r.abelian = r.bf_abelian ? V3::Yes : V3::No;
        brute_only("nilpotent");
        brute_only("abelian");
    }

    // ---- reductivity ----
    if (r.guard_acyclic_or_char0) {
        bool comb = higher_zero && sat.symmetric && (ch != 2 || !sat_class_of_two);
        r.reductive = comb ? V3::Yes : V3::No;
        if (r.bf_reductive) agree("reductive", comb, *r.bf_reductive);
    } else if (r.radical_applicable) {
        r.reductive = *r.bf_reductive ? V3::Yes : V3::No;
        brute_only("reductive");
    }

    // ---- semisimplicity and simplicity ----
    if (r.radical_applicable) {
        Quiver qb = qbar(q);
        bool char2_clause = ch != 2 || !parallel_class_of_two;
        bool comb = qb.is_tree() && nontrivial_classes >= 1 && sat.completely_saturated &&
                    char2_clause;
        r.semisimple = comb ? V3::Yes : V3::No;
        bool bf_ss = out.radical.dim() == 0 && h.dim > 0;
        agree("semisimple (radical = 0)", comb, bf_ss);
        if (ch == 0) agree("semisimple (Killing)", comb, *r.killing_nonsingular_flag && h.dim > 0);

        r.pgl_applicable = true;
        auto model = semisimple_quotient_model(K, h, L, sat, out.radical);
        for (const auto& b : model.blocks) r.pgl_blocks.push_back(b.size);
        r.pgl_match = model.match;
        out.model = std::move(model);

        bool comb_simple = qb.is_tree() && nontrivial_classes == 1 && sat.completely_saturated &&
                           nontrivial_size >= 2 && (ch == 0 || nontrivial_size % ch != 0) &&
                           char2_clause;
        r.simple = comb_simple ? V3::Yes : V3::No;
        if (comb_simple) {
            bool sl_ok = r.pgl_match && static_cast<int>(r.pgl_blocks.size()) == 1 &&
                         pgl_isomorphic_to_sl(K, nontrivial_size);
            if (sl_ok) r.simple_model = "sl(" + std::to_string(nontrivial_size) + ")";
            agree("simple (sl model)", comb_simple, sl_ok);
        }
    }
    return out;
}

} // namespace qh1
