#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverh1/cohomology.hpp"
#include "quiverh1/lie_analysis.hpp"
#include "quiverh1/oracle.hpp"

namespace qh1 {

struct AnalyzeOptions {
    long long cap = 100000;  // basis-size guard
    bool with_oracle = false;
    int oracle_cap = 60;     // per-component |B| bound for the standard-complex solve
    bool oracle_closure = false; // also assert [Der,Der] and [Der,Ad] closure
};

template <class F>
struct ComponentAnalysis {
    ComponentSlice slice;
    PathBasis basis;
    GradedH1<F> h1;
    LieAlgebra<F> L;
    SaturationOrder sat;
    L0BasisDescription l0;
    ComponentVerdicts<F> verdicts;
    std::optional<OracleOutcome> oracle;
};

/// Full analysis of one presentation: the whole-quiver pipeline (correct for
/// disconnected quivers since parallel pairs never mix components) plus a
/// per-component run for the classification machinery.
template <class F>
struct Analysis {
    Quiver q;
    RelationSet z;
    PathBasis basis;
    GradedH1<F> h1;
    LieAlgebra<F> L;
    SaturationOrder sat;
    std::vector<std::unique_ptr<ComponentAnalysis<F>>> comps;
};

template <class F>
std::unique_ptr<Analysis<F>> run_analysis(const F& K, Quiver q, RelationSet z,
                                          const AnalyzeOptions& opt = {}) {
    auto A = std::make_unique<Analysis<F>>();
    A->q = std::move(q);
    A->z = std::move(z);
    validate_relations(A->q, A->z);
    A->basis = enumerate_basis(A->q, A->z, opt.cap);
    A->h1 = compute_h1(K, A->q, A->z, A->basis);
    A->L = structure_constants(K, A->h1);
    A->sat = saturation_order(A->q, A->z, A->basis);

    int dim_sum = 0;
    for (auto& s : split_components(A->q, A->z)) {
        auto ca = std::make_unique<ComponentAnalysis<F>>();
        ca->slice = std::move(s);
        ca->basis = enumerate_basis(ca->slice.quiver, ca->slice.relations, opt.cap);
        ca->h1 = compute_h1(K, ca->slice.quiver, ca->slice.relations, ca->basis);
        ca->L = structure_constants(K, ca->h1);
        ca->sat = saturation_order(ca->slice.quiver, ca->slice.relations, ca->basis);
        ca->l0 = l0_basis(K, ca->h1, ca->sat);
        ca->verdicts = classify_component(K, ca->slice.quiver, ca->slice.relations, ca->basis,
                                          ca->h1, ca->L, ca->sat);
        if (opt.with_oracle) {
            if (ca->basis.size() > opt.oracle_cap)
                throw Error(ErrorKind::CapExceeded,
                            "|B| = " + std::to_string(ca->basis.size()) +
                                " exceeds the oracle cap " + std::to_string(opt.oracle_cap));
            auto o = h1_direct(K, ca->basis);
            if (opt.oracle_closure) check_der_closure(K, o);
            ca->oracle = cross_check(K, ca->h1, o);
        }
        dim_sum += ca->h1.dim;
        A->comps.push_back(std::move(ca));
    }
    if (dim_sum != A->h1.dim)
        throw Error(ErrorKind::Internal, "H1 is not additive over components");
    return A;
}

// ---------------------------------------------------------------------------
// crown algebras (group algebras with a normal cyclic Sylow p-subgroup)
// ---------------------------------------------------------------------------

struct CrownSpec {
    uint32_t p = 0;
    uint32_t a = 1;
    std::vector<uint32_t> crowns; // cycle lengths

    void validate() const {
        if (!is_prime_u32(p)) throw Error(ErrorKind::BadSpec, "crown spec: p must be prime");
        if (a < 1) throw Error(ErrorKind::BadSpec, "crown spec: a must be >= 1");
        if (crowns.empty()) throw Error(ErrorKind::BadSpec, "crown spec: need at least one crown");
        for (auto n : crowns)
            if (n < 1) throw Error(ErrorKind::BadSpec, "crown spec: crown lengths must be >= 1");
        double power = 1;
        for (uint32_t i = 0; i < a; ++i) power *= p;
        if (power < 2 || power > 1e6) throw Error(ErrorKind::BadSpec, "crown spec: p^a out of range");
    }

    long long truncation_length() const {
        long long m = 1;
        for (uint32_t i = 0; i < a; ++i) m *= p;
        return m;
    }
};

/// The disjoint union of oriented cycles, truncated by all paths of length p^a
/// (one relation per start vertex on each crown).
inline std::pair<Quiver, RelationSet> build_crown_presentation(const CrownSpec& spec) {
    spec.validate();
    Quiver q;
    long long m = spec.truncation_length();
    std::vector<Path> rels;
    for (size_t c = 0; c < spec.crowns.size(); ++c) {
        int n = static_cast<int>(spec.crowns[c]);
        std::string tag = "c" + std::to_string(c + 1);
        int v0 = q.num_vertices();
        for (int i = 0; i < n; ++i) q.add_vertex(tag + "v" + std::to_string(i + 1));
        int a0 = q.num_arrows();
        for (int i = 0; i < n; ++i)
            q.add_arrow(tag + "a" + std::to_string(i + 1), q.vertex_name(v0 + i),
                        q.vertex_name(v0 + (i + 1) % n));
        for (int start = 0; start < n; ++start) {
            std::vector<int> word;
            for (long long t = 0; t < m; ++t) word.push_back(a0 + static_cast<int>((start + t) % n));
            rels.push_back(Path{-1, std::move(word)});
        }
    }
    return {std::move(q), RelationSet(std::move(rels))};
}

struct GroupAlgebraInfo {
    uint32_t p = 0, a = 0;
    std::vector<uint32_t> crowns;
    bool semisimple_expected = false; // all crowns length 1, a = 1, p > 2
    bool simple_expected = false;     // additionally exactly one crown
    std::vector<int> crown_dims;
    bool verdicts_match_expected = false;
};

// ---------------------------------------------------------------------------
// field-independent report data
// ---------------------------------------------------------------------------

struct TermStr {
    std::string coeff;
    int index;
};

struct ComponentReport {
    std::vector<std::string> vertices, arrows, relations;
    int dim = 0;
    std::vector<std::pair<int, int>> graded; // (degree, dim)
    std::vector<std::string> basis_labels;
    std::vector<int> basis_degrees;
    std::vector<std::vector<std::vector<TermStr>>> table; // [i][j] -> terms
    ClassificationReport cls;
    std::vector<std::string> l0_items;
    std::optional<OracleOutcome> oracle;
};

struct AnalysisReport {
    int schema_version = 1;
    std::string field_name;
    int num_vertices = 0, num_arrows = 0, num_relations = 0;
    std::vector<int> basis_by_length;
    int basis_total = 0;
    int dim_total = 0;
    std::vector<std::pair<int, int>> graded_total;
    std::vector<std::string> basis_labels;
    std::vector<int> basis_degrees;
    std::vector<std::vector<std::vector<TermStr>>> table;
    std::vector<ComponentReport> components;
    std::optional<GroupAlgebraInfo> group;
};

template <class F>
std::vector<TermStr> render_coords(const F& K, const Vec<F>& v) {
    std::vector<TermStr> out;
    for (size_t k = 0; k < v.size(); ++k)
        if (!K.is_zero(v[k])) out.push_back(TermStr{K.to_string(v[k]), static_cast<int>(k)});
    return out;
}

template <class F>
AnalysisReport build_report(const F& K, const Analysis<F>& A) {
    AnalysisReport r;
    r.field_name = K.spec().name();
    r.num_vertices = A.q.num_vertices();
    r.num_arrows = A.q.num_arrows();
    r.num_relations = A.z.size();
    r.basis_by_length = A.basis.sizes_by_length();
    r.basis_total = A.basis.size();
    r.dim_total = A.h1.dim;
    for (auto [d, dim] : A.h1.graded_dims()) r.graded_total.emplace_back(d, dim);
    for (int i = 0; i < A.h1.dim; ++i) {
        r.basis_labels.push_back(h1_basis_label(K, A.h1, i));
        r.basis_degrees.push_back(A.h1.degree_of_basis(i));
    }
    r.table.assign(A.L.n, std::vector<std::vector<TermStr>>(A.L.n));
    for (int i = 0; i < A.L.n; ++i)
        for (int j = 0; j < A.L.n; ++j) r.table[i][j] = render_coords(K, A.L.c[i][j]);

    for (const auto& ca : A.comps) {
        ComponentReport c;
        const Quiver& cq = ca->slice.quiver;
        for (int v = 0; v < cq.num_vertices(); ++v) c.vertices.push_back(cq.vertex_name(v));
        for (int a = 0; a < cq.num_arrows(); ++a) c.arrows.push_back(cq.arrow(a).name);
        for (const auto& p : ca->slice.relations.relations()) c.relations.push_back(p.to_string(cq));
        c.dim = ca->h1.dim;
        for (auto [d, dim] : ca->h1.graded_dims()) c.graded.emplace_back(d, dim);
        for (int i = 0; i < ca->h1.dim; ++i) {
            c.basis_labels.push_back(h1_basis_label(K, ca->h1, i));
            c.basis_degrees.push_back(ca->h1.degree_of_basis(i));
        }
        c.table.assign(ca->L.n, std::vector<std::vector<TermStr>>(ca->L.n));
        for (int i = 0; i < ca->L.n; ++i)
            for (int j = 0; j < ca->L.n; ++j) c.table[i][j] = render_coords(K, ca->L.c[i][j]);
        c.cls = ca->verdicts.report;
        for (auto [a, b] : ca->l0.off_diagonal)
            c.l0_items.push_back("(" + cq.arrow(a).name + ", " + cq.arrow(b).name + ")");
        for (int a : ca->l0.class_diagonals)
            c.l0_items.push_back("(" + cq.arrow(a).name + ", " + cq.arrow(a).name + ")");
        for (int a : ca->l0.extra_diagonals)
            c.l0_items.push_back("(" + cq.arrow(a).name + ", " + cq.arrow(a).name + ") [extra]");
        c.oracle = ca->oracle;
        r.components.push_back(std::move(c));
    }
    return r;
}

/// Analysis + report for a crown specification, over F_p.
inline std::pair<std::unique_ptr<Analysis<PrimeField>>, AnalysisReport> run_group_algebra(
    const CrownSpec& spec, const AnalyzeOptions& opt = {}) {
    auto [q, z] = build_crown_presentation(spec);
    PrimeField K(spec.p);
    auto A = run_analysis(K, std::move(q), std::move(z), opt);
    AnalysisReport r = build_report(K, *A);
    GroupAlgebraInfo info;
    info.p = spec.p;
    info.a = spec.a;
    info.crowns = spec.crowns;
    bool all_loops = true;
    for (auto n : spec.crowns)
        if (n != 1) all_loops = false;
    info.semisimple_expected = all_loops && spec.a == 1 && spec.p > 2;
    info.simple_expected = info.semisimple_expected && spec.crowns.size() == 1;
    bool computed_ss = true, any = false;
    for (const auto& ca : A->comps) {
        info.crown_dims.push_back(ca->h1.dim);
        any = true;
        if (ca->verdicts.report.semisimple != V3::Yes) computed_ss = false;
    }
    bool computed_simple = A->comps.size() == 1 && any &&
                           A->comps.front()->verdicts.report.simple == V3::Yes;
    info.verdicts_match_expected =
        (computed_ss == info.semisimple_expected) && (computed_simple == info.simple_expected);
    r.group = info;
    return {std::move(A), std::move(r)};
}

} // namespace qh1
