#include <doctest.h>

#include <json.hpp>

#include "quiverh1/analysis.hpp"
#include "quiverh1/input.hpp"
#include "quiverh1/render.hpp"
#include "support/corpus.hpp"

using namespace qh1;

namespace {

const char* kKroneckerDoc =
    "# the Kronecker quiver\n"
    "field rational\n"
    "vertex v1 v2\n"
    "arrow a : v1 -> v2\n"
    "arrow b : v1 -> v2\n";

AnalysisReport analyze_doc(const std::string& text, bool oracle = false) {
    auto doc = parse_input(text);
    AnalyzeOptions opt;
    opt.with_oracle = oracle;
    return with_field(doc.field, [&](auto K) {
        auto A = run_analysis(K, std::move(doc.quiver), std::move(doc.relations), opt);
        return build_report(K, *A);
    });
}

} // namespace

TEST_CASE("parsing the grammar") {
    SUBCASE("well-formed document") {
        auto doc = parse_input(kKroneckerDoc);
        CHECK(doc.field.rational);
        CHECK(doc.quiver.num_vertices() == 2);
        CHECK(doc.quiver.num_arrows() == 2);
        CHECK(doc.relations.size() == 0);
    }
    SUBCASE("relations in traversal order") {
        auto doc = parse_input(
            "field prime 3\nvertex v\narrow a : v -> v\nrelation a a a\n");
        REQUIRE(doc.relations.size() == 1);
        CHECK(doc.relations[0].length() == 3);
        CHECK(doc.field.p == 3);
    }
    SUBCASE("non-composable relation is a located error") {
        const char* text =
            "field rational\nvertex v1 v2 v3\narrow a : v1 -> v2\narrow c : v2 -> v3\n"
            "relation c a\n";
        try {
            parse_input(text);
            FAIL("expected NonComposable-style error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("line 5") != std::string::npos);
            CHECK(std::string(e.what()).find("non-composable") != std::string::npos);
        }
    }
    SUBCASE("field prime 4 is rejected") {
        try {
            parse_input("field prime 4\nvertex v\n");
            FAIL("expected NotPrime");
        } catch (const Error& e) {
            CHECK(e.kind == ErrorKind::NotPrime);
        }
    }
    SUBCASE("unknown vertex and unknown arrow are located") {
        CHECK_THROWS_WITH_AS(parse_input("field rational\nvertex v\narrow a : v -> w\n"),
                             doctest::Contains("unknown vertex 'w'"), Error);
        CHECK_THROWS_WITH_AS(parse_input("field rational\nvertex v\nrelation a a\n"),
                             doctest::Contains("unknown arrow 'a'"), Error);
    }
    SUBCASE("missing field declaration") {
        CHECK_THROWS_WITH_AS(parse_input("vertex v\n"), doctest::Contains("missing 'field'"),
                             Error);
    }
    SUBCASE("duplicate names rejected") {
        CHECK_THROWS_AS(parse_input("field rational\nvertex v v\n"), Error);
    }
    SUBCASE("comments and blank lines are ignored") {
        CHECK_NOTHROW(parse_input("# nothing\n\nfield rational\nvertex v # trailing\n"));
    }
}

TEST_CASE("reports are deterministic and JSON round-trips") {
    auto r1 = analyze_doc(kKroneckerDoc, true);
    auto r2 = analyze_doc(kKroneckerDoc, true);
    auto t1 = render_text(r1, ReportMode::Analyze);
    auto t2 = render_text(r2, ReportMode::Analyze);
    CHECK(t1 == t2);
    auto j1 = render_json(r1);
    auto j2 = render_json(r2);
    CHECK(j1 == j2);

    auto parsed = nlohmann::json::parse(j1);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["h1"]["dim"] == 3);
    CHECK(parsed["components"][0]["classification"]["simple"] == "yes");
    CHECK(parsed["components"][0]["oracle"]["pass"] == true);
    CHECK(parsed.dump() == nlohmann::json::parse(j2).dump());
}

TEST_CASE("inapplicable verdicts are explicit, never absent") {
    // degraded case: L_{-1} != 0 on a two-loop quiver over F2
    auto inst = corpus::two_loops_bab();
    std::string text =
        "field prime 2\nvertex v\narrow a : v -> v\narrow b : v -> v\n"
        "relation a a\nrelation b b\nrelation b a b\n";
    auto r = analyze_doc(text);
    auto parsed = nlohmann::json::parse(render_json(r));
    const auto& cls = parsed["components"][0]["classification"];
    CHECK(cls["semisimple"] == "inapplicable");
    CHECK(cls["simple"] == "inapplicable");
    CHECK(cls["reductive"] == "inapplicable");
    CHECK(cls["radical_dim"] == "inapplicable");
    CHECK(cls["killing_nonsingular"] == "inapplicable");
    CHECK(cls["solvable"] == "yes");
    CHECK(cls.contains("semisimple_quotient_pgl_blocks"));
}

TEST_CASE("zero report renders cleanly") {
    auto r = analyze_doc("field rational\nvertex v1 v2\narrow a : v1 -> v2\n");
    auto text = render_text(r, ReportMode::Analyze);
    CHECK(text.find("H1 = 0") != std::string::npos);
    auto parsed = nlohmann::json::parse(render_json(r));
    CHECK(parsed["h1"]["dim"] == 0);
    CHECK(parsed["h1"]["basis"].empty());
}

TEST_CASE("group-algebra command (crown specifications)") {
    SUBCASE("C3 over F3: simple Witt algebra of dimension 3") {
        CrownSpec spec{3, 1, {1}};
        auto [A, r] = run_group_algebra(spec);
        REQUIRE(r.group.has_value());
        CHECK(r.group->semisimple_expected);
        CHECK(r.group->simple_expected);
        CHECK(r.group->verdicts_match_expected);
        CHECK(r.group->crown_dims == std::vector<int>{3});
        CHECK(r.components[0].cls.simple_model == "W(1,1)");
    }
    SUBCASE("S3 over F3 (one crown of length 2): not semisimple, dim 1") {
        CrownSpec spec{3, 1, {2}};
        auto [A, r] = run_group_algebra(spec);
        CHECK_FALSE(r.group->semisimple_expected);
        CHECK(r.group->verdicts_match_expected);
        CHECK(r.group->crown_dims == std::vector<int>{1});
    }
    SUBCASE("C2 over F2: excluded characteristic") {
        CrownSpec spec{2, 1, {1}};
        auto [A, r] = run_group_algebra(spec);
        CHECK_FALSE(r.group->semisimple_expected);
        CHECK(r.group->verdicts_match_expected);
        CHECK(r.components[0].cls.semisimple == V3::No);
    }
    SUBCASE("multi-crown is a block product") {
        CrownSpec spec{3, 1, {1, 2}};
        auto [A, r] = run_group_algebra(spec);
        CHECK(r.group->crown_dims == std::vector<int>{3, 1});
        CHECK(r.dim_total == 4);
    }
    SUBCASE("bad specs are rejected") {
        CHECK_THROWS_AS(run_group_algebra(CrownSpec{4, 1, {1}}), Error);
        CHECK_THROWS_AS(run_group_algebra(CrownSpec{3, 0, {1}}), Error);
        CHECK_THROWS_AS(run_group_algebra(CrownSpec{3, 1, {}}), Error);
        CHECK_THROWS_AS(run_group_algebra(CrownSpec{3, 1, {0}}), Error);
    }
}

TEST_CASE("parser never crashes on garbage input") {
    std::mt19937 rng(31337);
    const std::string alphabet = "abvz123 :->#\n\t_%$";
    for (int t = 0; t < 3000; ++t) {
        std::string text;
        int len = static_cast<int>(rng() % 120);
        for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        try {
            parse_input(text);
        } catch (const Error&) {
            // any structured error is acceptable; crashes and other exception
            // types are not
        }
    }
    // mutated valid documents
    for (int t = 0; t < 2000; ++t) {
        std::string text = kKroneckerDoc;
        text[rng() % text.size()] = alphabet[rng() % alphabet.size()];
        try {
            parse_input(text);
        } catch (const Error&) {
        }
    }
}

TEST_CASE("exit-code mapping") {
    CHECK(exit_code_for(ErrorKind::InputSyntax) == 1);
    CHECK(exit_code_for(ErrorKind::NotPrime) == 1);
    CHECK(exit_code_for(ErrorKind::CapExceeded) == 1);
    CHECK(exit_code_for(ErrorKind::InfiniteDimensional) == 2);
    CHECK(exit_code_for(ErrorKind::ComplexBroken) == 3);
    CHECK(exit_code_for(ErrorKind::OracleMismatch) == 3);
    CHECK(exit_code_for(ErrorKind::DimensionMismatch) == 3);
}
