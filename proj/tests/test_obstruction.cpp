#include <gtest/gtest.h>

#include "corpus.hpp"
#include "knotpos/generators.hpp"
#include "knotpos/obstruction.hpp"

using namespace knotpos;
using knotpos::testing::random_positive_corpus;

namespace {

LaurentPoly1 t(const std::string& s) { return parse_poly1(s, Var::t); }
LaurentPoly1 z(const std::string& s) { return parse_poly1(s, Var::z); }

} // namespace

TEST(Obstruction, TrefoilIsInconclusive) {
    ObstructionReport r = positivity_test(t("t + t^3 - t^4"), z("1 + z^2"), 1);
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_EQ(r.bound_value, Rational::of(4, 1));
    EXPECT_EQ(r.max_v, Rational::of(4, 1));
}

TEST(Obstruction, SecondCoefficientDispatch) {
    // |V1| = 1: 4 min + 2 lead - 2
    ObstructionReport a = positivity_test(t("t^3 - t^4 + t^9"), z("1 + 2z^6"), 1);
    EXPECT_EQ(a.bound_value, Rational::of(14, 1));
    EXPECT_EQ(a.verdict, Verdict::Inconclusive);
    // |V1| = 2: 4 min + lead
    ObstructionReport b = positivity_test(t("t^3 - 2t^4 + t^16"), z("1 + 3z^6"), 1);
    EXPECT_EQ(b.bound_value, Rational::of(15, 1));
    EXPECT_EQ(b.verdict, Verdict::NotPositive);
    ObstructionReport c = positivity_test(t("t^3 + 3t^4 + t^40"), z("1 + z^2"), 1);
    EXPECT_EQ(c.verdict, Verdict::NotApplicable);
    // two components add a half
    ObstructionReport d = positivity_test(t("-t^(1/2) - t^(5/2)"), z("z"), 2);
    EXPECT_EQ(d.bound_value, Rational::of(5, 2));
    EXPECT_EQ(d.verdict, Verdict::Inconclusive);
    EXPECT_THROW(positivity_test(LaurentPoly1(Var::t), z("1"), 1), DegreeError);
    EXPECT_THROW(positivity_test(t("1"), LaurentPoly1(Var::z), 1), DegreeError);
}

TEST(Obstruction, NamedKnotVerdicts) {
    const std::pair<const char*, int> expect[] = {{"ap16", 16}, {"ap15a", 14}, {"ap15b", 15}};
    for (const auto& [name, bound] : expect) {
        nlohmann::json j = analyze(named_knot(name));
        EXPECT_EQ(j["obstruction"]["verdict"], "NotPositive") << name;
        EXPECT_EQ(j["obstruction"]["bound"], std::to_string(bound)) << name;
        EXPECT_EQ(j["obstruction"]["max_deg_v"], name == std::string("ap16") ? "18" : "16") << name;
        EXPECT_EQ(j["schema"], kReportSchema);
        EXPECT_FALSE(j.contains("predictions"));
    }
}

TEST(Obstruction, AnalyzePretzelAgrees) {
    nlohmann::json j = analyze(pretzel(-2, -2, -2));
    EXPECT_EQ(j["obstruction"]["verdict"], "Inconclusive");
    const auto& p = j["predictions"];
    EXPECT_TRUE(p["second_coeff_agrees"].get<bool>());
    EXPECT_TRUE(p["lead_conway_agrees"].get<bool>());
    EXPECT_TRUE(p["burdening_number_agrees"].get<bool>());
    EXPECT_TRUE(p["conway_degree_agrees"].get<bool>());
    EXPECT_TRUE(p["b_circle_bound_holds"].get<bool>());
}

TEST(Obstruction, AnalyzeUnknot) {
    nlohmann::json j = analyze(Diagram::unknot());
    EXPECT_EQ(j["obstruction"]["verdict"], "Inconclusive");
    EXPECT_EQ(j["obstruction"]["bound"], "0");
    EXPECT_EQ(j["obstruction"]["max_deg_v"], "0");
}

TEST(Obstruction, AnalyzeSplitLink) {
    nlohmann::json j = analyze(Diagram::unknot(2));
    EXPECT_EQ(j["obstruction"]["verdict"], "NotApplicable");
    EXPECT_EQ(j["conway"], "0");
}

TEST(Obstruction, SoundOnRandomPositive) {
    for (const auto& f : random_positive_corpus(60, 12, 4242)) {
        nlohmann::json j = analyze(f.d);
        EXPECT_NE(j["obstruction"]["verdict"], "NotPositive") << f.name;
    }
}

TEST(Obstruction, FamilyArc) {
    Diagram base = named_knot("ap15b");
    int arc = family_arc(base);
    EXPECT_GE(arc, 0);
    EXPECT_THROW(family_arc(torus_braid(3)), DiagramError);
}

TEST(Obstruction, FamilyFirstStep) {
    Diagram base = named_knot("ap15a");
    FamilyReport rep = verify_family_claims(base, family_arc(base), 1);
    ASSERT_EQ(rep.rows.size(), 2u);
    EXPECT_TRUE(rep.passed());
    const FamilyRow& w0 = rep.rows[0];
    EXPECT_TRUE(w0.ok());
    EXPECT_EQ(w0.c, 15);
    const FamilyRow& w1 = rep.rows[1];
    EXPECT_EQ(w1.c, 18);
    EXPECT_EQ(w1.max_v, Rational::of(20, 1));
    EXPECT_EQ(w1.min_v, Rational::of(4, 1));
    EXPECT_EQ(w1.second_coeff, -1);
    EXPECT_EQ(w1.lead_conway, 2);
    EXPECT_TRUE(w1.recursion_ok);
    EXPECT_EQ(to_json(rep)["rows"].size(), 2u);
}

TEST(Obstruction, TypeTwoInequality) {
    InequalityResult r = check_type2_inequality(40);
    EXPECT_GT(r.even_checked, 1000);
    EXPECT_GT(r.odd_checked, 1000);
    EXPECT_TRUE(r.violations.empty());
}
