#include <gtest/gtest.h>

#include "corpus.hpp"
#include "knotpos/generators.hpp"
#include "knotpos/io.hpp"
#include "knotpos/statesum.hpp"

using namespace knotpos;
using knotpos::testing::generated_positive;

TEST(Io, PdRoundTrip) {
    for (const auto& f : generated_positive(14)) {
        Diagram back = parse_pd(serialize_pd(f.d));
        EXPECT_TRUE(isomorphic(back, f.d)) << f.name;
    }
}

TEST(Io, JsonRoundTrip) {
    for (const auto& f : generated_positive(10)) {
        Diagram back = diagram_from_json(to_json(f.d));
        EXPECT_EQ(back, f.d) << f.name;
    }
}

TEST(Io, DtRoundTripNamedKnots) {
    for (const auto& name : named_knots()) {
        DTCode code = parse_dt(named_knot_dt(name));
        Diagram d = realize_dt(code);
        EXPECT_EQ(extract_dt(d), code) << name;
        EXPECT_EQ(format_dt(code), named_knot_dt(name));
        EXPECT_EQ(d.negative_count(), 1) << name;
        EXPECT_TRUE(is_reduced(d)) << name;
    }
}

TEST(Io, DtRoundTripRandomKnots) {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 20; ++i) {
        Diagram d = random_positive(rng, RandomOptions{4, 10, true});
        if (d.component_count() != 1) continue;
        ++checked;
        DTCode code = extract_dt(d);
        Diagram back = realize_dt(code);
        EXPECT_EQ(jones(back), jones(d)) << format_dt(code);
    }
    EXPECT_GE(checked, 10);
}

TEST(Io, MirrorPolicy) {
    DTCode code = parse_dt(named_knot_dt("ap15a"));
    Diagram given = realize_dt(code, MirrorPolicy::AsGiven);
    Diagram mirrored = realize_dt(code, MirrorPolicy::Mirrored);
    EXPECT_EQ(given.crossing_count(), 15);
    LaurentPoly1 v = jones(given), vm = jones(mirrored);
    for (const auto& [e, c] : v.terms()) EXPECT_EQ(vm.coeff(-e), c);
    Diagram fewest = realize_dt(code);
    EXPECT_EQ(fewest.negative_count(), std::min(given.negative_count(), mirrored.negative_count()));
}

TEST(Io, KnotTheoryConventions) {
    // left-handed trefoil and figure-eight as tabulated
    Diagram t = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
    EXPECT_EQ(jones(t), parse_poly1("-t^-4 + t^-3 + t^-1", Var::t));
    Diagram e = parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]");
    EXPECT_EQ(jones(e), parse_poly1("t^-2 - t^-1 + 1 - t + t^2", Var::t));
    EXPECT_EQ(jones(parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]")), parse_poly1("t + t^3 - t^4", Var::t));
}

TEST(Io, EmptyPdIsUnknot) {
    Diagram u = parse_pd("PD[]");
    EXPECT_EQ(u.crossing_count(), 0);
    EXPECT_EQ(u.component_count(), 1);
}

TEST(Io, ParseErrors) {
    EXPECT_THROW(parse_pd("PD[X[1,2,3]]"), ParseError);
    EXPECT_THROW(parse_pd("PD[X[1,2,3,4]"), ParseError);
    EXPECT_ANY_THROW(parse_pd("PD[X[2,1,3,2]]"));
    EXPECT_ANY_THROW(parse_pd("hello"));
    EXPECT_ANY_THROW(parse_dt("[4, 6]"));
    EXPECT_ANY_THROW(parse_dt("[3, 5, 1]"));
    EXPECT_ANY_THROW(parse_dt("[]x"));
    EXPECT_ANY_THROW(diagram_from_json(nlohmann::json::parse(R"({"crossings":[[0,1,2]]})")));
}

TEST(Io, AutoFormat) {
    Diagram a = parse_diagram("[4, 6, 2]");
    Diagram b = parse_diagram("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]");
    EXPECT_EQ(a.crossing_count(), 3);
    EXPECT_EQ(jones(a), jones(b));
    EXPECT_ANY_THROW(parse_diagram("[4, 6, 2]", "pd"));
}

TEST(Io, DtLimit) {
    DTCode code = parse_dt(named_knot_dt("ap16"));
    EXPECT_ANY_THROW(realize_dt(code, MirrorPolicy::FewestNegative, 10));
}
