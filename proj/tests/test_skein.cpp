#include <gtest/gtest.h>

#include "corpus.hpp"
#include "knotpos/generators.hpp"
#include "knotpos/io.hpp"
#include "knotpos/skein.hpp"
#include "knotpos/statesum.hpp"

using namespace knotpos;
using knotpos::testing::generated_positive;
using knotpos::testing::random_positive_corpus;

namespace {

LaurentPoly1 z(const std::string& s) { return parse_poly1(s, Var::z); }

} // namespace

TEST(Skein, TrefoilHomfly) {
    EXPECT_EQ(homfly(torus_braid(3)), parse_poly2("2a^-2 - a^-4 + a^-2 z^2"));
    EXPECT_EQ(homfly(Diagram::unknot()), LaurentPoly2::constant(1));
    EXPECT_EQ(homfly(Diagram::unknot(2)), parse_poly2("a z^-1 - a^-1 z^-1"));
}

TEST(Skein, TorusLinks) {
    for (int p = 1; p <= 6; ++p) {
        LaurentPoly1 expect(Var::z);
        expect.add_term(4, p);
        EXPECT_EQ(conway(torus_2_2p(p)), expect) << p;
    }
}

TEST(Skein, Pretzels) {
    EXPECT_EQ(conway(pretzel(-2, -2, -2)), z("3z^2"));
    EXPECT_EQ(conway(pretzel(-1, -3, -3)), z("1 + 4z^2"));
    EXPECT_EQ(conway(pretzel(-1, -1, -1)), z("1 + z^2"));
    EXPECT_EQ(conway(pretzel(0, -2, -2)), z("z^2"));
}

TEST(Skein, NamedKnots) {
    EXPECT_EQ(conway(named_knot("ap16")), z("1 + 11z^2 + 24z^4 + 15z^6 + z^8"));
    EXPECT_EQ(conway(named_knot("ap15b")), z("1 + 9z^2 + 14z^4 + 3z^6"));
    LaurentPoly2 p = homfly(named_knot("ap15a"));
    EXPECT_EQ(p.coeff(-6, 6), 1);
    EXPECT_EQ(p.coeff(-6, 4), 5);
    EXPECT_EQ(specialize(p, Target::conway), z("1 + 8z^2 + 14z^4 + 2z^6"));
}

TEST(Skein, OracleTriangle) {
    auto corpus = generated_positive(14);
    auto extra = random_positive_corpus(20, 12, 5);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
    for (const auto& f : corpus) {
        LaurentPoly2 p = homfly(f.d);
        EXPECT_EQ(specialize(p, Target::jones), jones(f.d)) << f.name;
        EXPECT_EQ(specialize(p, Target::conway), conway(f.d)) << f.name;
    }
}

TEST(Skein, AlexanderRouteAgrees) {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int i = 0; i < 80 && checked < 25; ++i) {
        Diagram d = random_positive(rng, RandomOptions{3, 12, true});
        if (d.component_count() != 1) continue;
        ++checked;
        EXPECT_EQ(conway_alexander(d), conway(d));
        Diagram s = switch_crossing(d, 0);
        EXPECT_EQ(conway_alexander(s), conway(s));
    }
    EXPECT_GE(checked, 10);
    for (const auto& name : named_knots()) EXPECT_EQ(conway_alexander(named_knot(name)), conway(named_knot(name))) << name;
    EXPECT_THROW(conway_alexander(torus_2_2p(2)), DiagramError);
}

TEST(Skein, LeadTerms) {
    LeadTerm t = lead_conway(torus_braid(3));
    EXPECT_EQ(t.degree, 2);
    EXPECT_EQ(t.coeff, 1);
    LeadTerm p = lead_conway(pretzel(-1, -3, -3));
    EXPECT_EQ(p.degree, 2);
    EXPECT_EQ(p.coeff, 4);
    LeadTerm k = lead_conway(named_knot("ap15a"));
    EXPECT_EQ(k.degree, 6);
    EXPECT_EQ(k.coeff, 2);
    EXPECT_THROW(lead_conway(Diagram::unknot(2)), DegreeError);
}

TEST(Skein, PositiveConwayCoefficients) {
    auto corpus = generated_positive(14);
    for (const auto& name : named_knots()) corpus.push_back({name, named_knot(name)});
    for (const auto& f : corpus) {
        LaurentPoly1 c = conway(f.d);
        for (const auto& [e, k] : c.terms()) EXPECT_GT(k, 0) << f.name;
    }
}

TEST(Skein, DegreeLaw) {
    for (const auto& f : generated_positive(14)) {
        DiagramStats st = stats(f.d);
        LeadTerm lt = lead_conway(f.d);
        EXPECT_EQ(lt.degree, st.c - st.s + 1) << f.name;
        EXPECT_EQ(Rational::of(lt.degree, 1), jones(f.d).degree_info().min_deg * 2) << f.name;
    }
    for (const auto& name : named_knots()) {
        Diagram d = named_knot(name);
        EXPECT_EQ(Rational::of(lead_conway(d).degree, 1), jones(d).degree_info().min_deg * 2) << name;
    }
}

TEST(Skein, ParallelCrossingLaw) {
    for (const auto& f : generated_positive(12)) {
        if (!is_reduced(f.d)) continue;
        int x = f.d.crossing_count() - 1;
        Diagram plus = add_parallel_crossing(f.d, x);
        int nx = plus.crossing_count() - 1;
        LeadTerm lp = lead_conway(plus);
        LaurentPoly1 minus = conway(switch_crossing(plus, nx));
        if (!minus.is_zero()) EXPECT_LT(lead_term(minus).degree, lp.degree) << f.name;
        LeadTerm l0 = lead_conway(smooth_crossing(plus, nx, Smoothing::Oriented));
        EXPECT_EQ(lp.degree, l0.degree + 1) << f.name;
        EXPECT_EQ(lp.coeff, l0.coeff) << f.name;
    }
}

TEST(Skein, NodeLimit) {
    SkeinOptions opt;
    opt.max_nodes = 5;
    EXPECT_THROW(conway(named_knot("ap15a"), opt), ResourceError);
    SkeinOptions small;
    small.max_crossings = 10;
    EXPECT_THROW(homfly(named_knot("ap15a"), small), ResourceError);
}

TEST(Skein, TraceIsATree) {
    std::vector<SkeinEvent> events;
    SkeinOptions opt;
    opt.trace = [&](const SkeinEvent& e) { events.push_back(e); };
    homfly(pretzel(-1, -3, -3), opt);
    ASSERT_FALSE(events.empty());
    EXPECT_EQ(events.front().branch, SkeinBranch::Root);
    for (std::size_t i = 1; i < events.size(); ++i) EXPECT_LT(events[i].parent, events[i].node);
}

TEST(Skein, PivotOfDescendingDiagram) {
    EXPECT_EQ(skein_pivot(Diagram::unknot()), -1);
    EXPECT_GE(skein_pivot(torus_braid(3)), 0);
}
