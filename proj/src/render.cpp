#include "quiverh1/render.hpp"

#include <sstream>

#include <json.hpp>

namespace qh1 {

namespace {

using ojson = nlohmann::ordered_json;

std::string terms_to_string(const std::vector<TermStr>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (size_t t = 0; t < terms.size(); ++t) {
        const auto& term = terms[t];
        std::string coeff = term.coeff;
        bool neg = !coeff.empty() && coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        if (t == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (mag == "1")
            s += "e" + std::to_string(term.index);
        else
            s += mag + "*e" + std::to_string(term.index);
    }
    return s;
}

std::string graded_to_string(const std::vector<std::pair<int, int>>& graded) {
    if (graded.empty()) return "(none)";
    std::string s;
    for (size_t i = 0; i < graded.size(); ++i) {
        if (i) s += ", ";
        s += "L_" + std::to_string(graded[i].first) + " = " + std::to_string(graded[i].second);
    }
    return s;
}

void render_classification_text(std::ostream& os, const ClassificationReport& c,
                                const std::string& ind) {
    if (c.zero_algebra) os << ind << "zero algebra\n";
    os << ind << "L_{-1} = 0: " << (c.l_minus1_zero ? "yes" : "no");
    if (!c.l_minus1_witnesses.empty()) {
        os << "  [nonzero witness loops:";
        for (const auto& w : c.l_minus1_witnesses) os << " " << w;
        os << "]";
    }
    os << "\n";
    for (const auto& reason : c.l_minus1_reasons) os << ind << "  reason: " << reason << "\n";
    if (c.loop_case)
        os << ind << "loop case: truncation length " << c.loop_m
           << " divisible by the characteristic\n";
    os << ind << "solvable:   " << v3_str(c.solvable) << "\n";
    os << ind << "nilpotent:  " << v3_str(c.nilpotent) << "\n";
    os << ind << "abelian:    " << v3_str(c.abelian) << "\n";
    os << ind << "reductive:  " << v3_str(c.reductive) << "\n";
    os << ind << "semisimple: " << v3_str(c.semisimple) << "\n";
    os << ind << "simple:     " << v3_str(c.simple);
    if (!c.simple_model.empty()) os << "  (model " << c.simple_model << ")";
    os << "\n";
    if (c.pgl_applicable) {
        os << ind << "semisimple quotient: ";
        if (c.pgl_blocks.empty())
            os << "0";
        else {
            for (size_t i = 0; i < c.pgl_blocks.size(); ++i) {
                if (i) os << " x ";
                os << "pgl(" << c.pgl_blocks[i] << ")";
            }
            os << (c.pgl_match ? "  [structure constants match]" : "  [MODEL MISMATCH]");
        }
        os << "\n";
    }
    if (c.radical_dim >= 0)
        os << ind << "radical: dim " << c.radical_dim
           << (c.radical_is_solvable_ideal ? " (verified solvable ideal)" : " (VERIFICATION FAILED)")
           << "\n";
    os << ind << "series: derived dims";
    for (int d : c.series.derived) os << " " << d;
    os << "; lower central dims";
    for (int d : c.series.lower_central) os << " " << d;
    os << "; center dim " << c.series.center << "\n";
    if (c.killing_nonsingular_flag)
        os << ind << "Killing form: " << (*c.killing_nonsingular_flag ? "nonsingular" : "singular")
           << "\n";
    os << ind << "center = component sums: " << (c.center_matches_component_sums ? "yes" : "NO")
       << "\n";
    for (const auto& [name, status] : c.bf_agreement)
        os << ind << "cross-check " << name << ": " << status << "\n";
}

ojson classification_json(const ClassificationReport& c) {
    ojson j;
    j["dim"] = c.dim_h1;
    j["zero_algebra"] = c.zero_algebra;
    j["l_minus1_zero"] = c.l_minus1_zero;
    j["l_minus1_witnesses"] = c.l_minus1_witnesses;
    j["l_minus1_reasons"] = c.l_minus1_reasons;
    j["loop_case"] = c.loop_case;
    if (c.loop_case) j["loop_truncation"] = c.loop_m;
    j["solvable"] = v3_str(c.solvable);
    j["nilpotent"] = v3_str(c.nilpotent);
    j["abelian"] = v3_str(c.abelian);
    j["reductive"] = v3_str(c.reductive);
    j["semisimple"] = v3_str(c.semisimple);
    j["simple"] = v3_str(c.simple);
    j["simple_model"] = c.simple_model.empty() ? ojson(nullptr) : ojson(c.simple_model);
    if (c.pgl_applicable) {
        j["semisimple_quotient_pgl_blocks"] = c.pgl_blocks;
        j["semisimple_quotient_match"] = c.pgl_match;
    } else {
        j["semisimple_quotient_pgl_blocks"] = "inapplicable";
        j["semisimple_quotient_match"] = "inapplicable";
    }
    j["radical_dim"] = c.radical_dim >= 0 ? ojson(c.radical_dim) : ojson("inapplicable");
    j["radical_is_solvable_ideal"] =
        c.radical_dim >= 0 ? ojson(c.radical_is_solvable_ideal) : ojson("inapplicable");
    j["derived_series_dims"] = c.series.derived;
    j["lower_central_series_dims"] = c.series.lower_central;
    j["center_dim"] = c.series.center;
    j["killing_nonsingular"] =
        c.killing_nonsingular_flag ? ojson(*c.killing_nonsingular_flag) : ojson("inapplicable");
    j["center_matches_component_sums"] = c.center_matches_component_sums;
    ojson agreements = ojson::object();
    for (const auto& [name, status] : c.bf_agreement) agreements[name] = status;
    j["cross_checks"] = agreements;
    j["euler_count"] = c.euler_count;
    return j;
}

void render_oracle_text(std::ostream& os, const OracleOutcome& o, const std::string& ind) {
    os << ind << "oracle: " << (o.pass ? "pass" : "FAIL") << " (" << o.detail << "; Der dim "
       << o.dim_der << ", inner dim " << o.dim_inner << ")\n";
}

} // namespace

std::string render_text(const AnalysisReport& r, ReportMode mode) {
    std::ostringstream os;
    os << "field: " << r.field_name << "\n";
    os << "quiver: " << r.num_vertices << " vertices, " << r.num_arrows << " arrows, "
       << r.num_relations << " relations\n";
    os << "basis: |B| = " << r.basis_total << " (by length:";
    for (size_t i = 0; i < r.basis_by_length.size(); ++i) os << " " << r.basis_by_length[i];
    os << ")\n";
    if (r.group) {
        os << "group algebra: p = " << r.group->p << ", a = " << r.group->a << ", crowns:";
        for (auto n : r.group->crowns) os << " " << n;
        os << "\n";
        os << "expected classification: " << (r.group->semisimple_expected ? "semisimple" : "not semisimple");
        if (r.group->simple_expected) os << ", simple";
        os << "; verdicts " << (r.group->verdicts_match_expected ? "match" : "DO NOT MATCH") << "\n";
        os << "crown dims:";
        for (int d : r.group->crown_dims) os << " " << d;
        os << "\n";
    }
    if (r.dim_total == 0) os << "H1 = 0\n";
    else os << "H1: dim " << r.dim_total << "; graded: " << graded_to_string(r.graded_total) << "\n";

    bool want_basis = mode == ReportMode::Analyze || mode == ReportMode::Bracket;
    bool want_cls = mode == ReportMode::Analyze || mode == ReportMode::Criteria;
    bool want_oracle = mode != ReportMode::Bracket;

    if (want_basis && r.dim_total > 0) {
        os << "basis of H1:\n";
        for (size_t i = 0; i < r.basis_labels.size(); ++i)
            os << "  e" << i << " [deg " << r.basis_degrees[i] << "] = " << r.basis_labels[i] << "\n";
        os << "brackets (nonzero):\n";
        bool any = false;
        for (size_t i = 0; i < r.table.size(); ++i)
            for (size_t j = i + 1; j < r.table.size(); ++j)
                if (!r.table[i][j].empty()) {
                    os << "  [e" << i << ", e" << j << "] = " << terms_to_string(r.table[i][j])
                       << "\n";
                    any = true;
                }
        if (!any) os << "  (all zero)\n";
    }

    os << "components: " << r.components.size() << "\n";
    for (size_t ci = 0; ci < r.components.size(); ++ci) {
        const auto& c = r.components[ci];
        os << "component " << (ci + 1) << ": vertices";
        for (const auto& v : c.vertices) os << " " << v;
        os << "; arrows";
        if (c.arrows.empty()) os << " (none)";
        for (const auto& a : c.arrows) os << " " << a;
        os << "\n";
        if (c.dim == 0) os << "  H1 = 0\n";
        else os << "  dim H1 = " << c.dim << "; graded: " << graded_to_string(c.graded) << "\n";
        if (want_cls) {
            render_classification_text(os, c.cls, "  ");
            if (!c.l0_items.empty()) {
                os << "  L0 basis:";
                for (const auto& it : c.l0_items) os << " " << it;
                os << "\n";
            }
        }
        if (want_oracle && c.oracle) render_oracle_text(os, *c.oracle, "  ");
    }
    return os.str();
}

std::string render_json(const AnalysisReport& r) {
    ojson j;
    j["schema_version"] = r.schema_version;
    j["field"] = r.field_name;
    j["quiver"] = {{"vertices", r.num_vertices},
                   {"arrows", r.num_arrows},
                   {"relations", r.num_relations}};
    j["basis"] = {{"total", r.basis_total}, {"by_length", r.basis_by_length}};
    if (r.group) {
        ojson g;
        g["p"] = r.group->p;
        g["a"] = r.group->a;
        g["crowns"] = r.group->crowns;
        g["semisimple_expected"] = r.group->semisimple_expected;
        g["simple_expected"] = r.group->simple_expected;
        g["crown_dims"] = r.group->crown_dims;
        g["verdicts_match_expected"] = r.group->verdicts_match_expected;
        j["group_algebra"] = g;
    }
    ojson h1;
    h1["dim"] = r.dim_total;
    ojson graded = ojson::array();
    for (auto [d, dim] : r.graded_total) graded.push_back({{"degree", d}, {"dim", dim}});
    h1["graded"] = graded;
    ojson basis = ojson::array();
    for (size_t i = 0; i < r.basis_labels.size(); ++i)
        basis.push_back({{"index", i}, {"degree", r.basis_degrees[i]}, {"label", r.basis_labels[i]}});
    h1["basis"] = basis;
    ojson brackets = ojson::array();
    for (size_t i = 0; i < r.table.size(); ++i)
        for (size_t jx = 0; jx < r.table.size(); ++jx) {
            if (r.table[i][jx].empty()) continue;
            ojson terms = ojson::array();
            for (const auto& t : r.table[i][jx])
                terms.push_back({{"k", t.index}, {"coeff", t.coeff}});
            brackets.push_back({{"i", i}, {"j", jx}, {"terms", terms}});
        }
    h1["brackets"] = brackets;
    j["h1"] = h1;

    ojson comps = ojson::array();
    for (const auto& c : r.components) {
        ojson cj;
        cj["vertices"] = c.vertices;
        cj["arrows"] = c.arrows;
        cj["relations"] = c.relations;
        cj["dim"] = c.dim;
        ojson cgraded = ojson::array();
        for (auto [d, dim] : c.graded) cgraded.push_back({{"degree", d}, {"dim", dim}});
        cj["graded"] = cgraded;
        ojson cb = ojson::array();
        for (size_t i = 0; i < c.basis_labels.size(); ++i)
            cb.push_back({{"index", i}, {"degree", c.basis_degrees[i]}, {"label", c.basis_labels[i]}});
        cj["basis"] = cb;
        cj["classification"] = classification_json(c.cls);
        cj["l0_basis"] = c.l0_items;
        if (c.oracle) {
            cj["oracle"] = {{"pass", c.oracle->pass},
                            {"dim_minimal", c.oracle->dim_minimal},
                            {"dim_direct", c.oracle->dim_direct},
                            {"dim_derivations", c.oracle->dim_der},
                            {"dim_inner", c.oracle->dim_inner}};
        } else {
            cj["oracle"] = "not run";
        }
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j.dump(2) + "\n";
}

} // namespace qh1
