#include "knotpos/obstruction.hpp"

#include "knotpos/stategraph.hpp"

namespace knotpos {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::NotPositive: return "NotPositive";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NotApplicable: break;
    }
    return "NotApplicable";
}

std::string route_name(ConwayRoute r) { return r == ConwayRoute::Skein ? "skein" : "alexander"; }

ObstructionReport positivity_test(const LaurentPoly1& v, const LaurentPoly1& nabla, int n) {
    if (v.is_zero()) throw DegreeError("Jones polynomial is zero");
    if (nabla.is_zero()) throw DegreeError("Conway polynomial is zero");
    DegreeInfo info = v.degree_info();
    ObstructionReport r;
    r.min_v = info.min_deg;
    r.max_v = info.max_deg;
    r.second_coeff = info.second_coeff;
    r.lead_conway = nabla.terms().rbegin()->second;
    r.n = n;
    r.bound_value = info.min_deg * 4 + Rational::of(n - 1, 2);
    Int mag = abs(r.second_coeff);
    if (mag >= 3) {
        r.verdict = Verdict::NotApplicable;
        return r;
    }
    long lead = r.lead_conway.get_si();
    if (mag == 1) r.bound_value = r.bound_value + Rational::of(2 * lead - 2, 1);
    if (mag == 2) r.bound_value = r.bound_value + Rational::of(lead, 1);
    r.verdict = r.max_v > r.bound_value ? Verdict::NotPositive : Verdict::Inconclusive;
    return r;
}

nlohmann::json to_json(const ObstructionReport& r) {
    return {{"min_deg_v", r.min_v.str()},
            {"max_deg_v", r.max_v.str()},
            {"second_coeff", r.second_coeff.get_str()},
            {"lead_conway", r.lead_conway.get_str()},
            {"components", r.n},
            {"bound", r.bound_value.str()},
            {"verdict", verdict_name(r.verdict)}};
}

LaurentPoly1 conway_auto(const Diagram& d, const SkeinOptions& opt, ConwayRoute* route) {
    if (d.crossing_count() <= opt.max_crossings || d.component_count() != 1) {
        if (route) *route = ConwayRoute::Skein;
        try {
            return conway(d, opt);
        } catch (const ResourceError&) {
            if (d.component_count() != 1) throw;
        }
    }
    if (route) *route = ConwayRoute::Alexander;
    return conway_alexander(d);
}

nlohmann::json analyze(const Diagram& d, const AnalyzeOptions& opt) {
    DiagramStats st = stats(d);
    nlohmann::json out;
    out["schema"] = kReportSchema;
    out["stats"] = {{"crossings", st.c},       {"components", st.n}, {"seifert_circles", st.s},
                    {"a_circles", st.A},       {"b_circles", st.B},  {"negative_crossings", st.q},
                    {"writhe", st.writhe},     {"reduced", is_reduced(d)}};
    Adequacy ad = adequacy(d);
    out["adequacy"] = {{"a", ad.a_adequate}, {"b", ad.b_adequate}};

    LaurentPoly1 v = jones(d, opt.state);
    ConwayRoute route{};
    LaurentPoly1 nabla = conway_auto(d, opt.skein, &route);
    out["jones"] = v.str();
    out["conway"] = nabla.str();
    out["conway_route"] = route_name(route);
    if (d.crossing_count() <= opt.skein.max_crossings)
        out["homfly"] = homfly(d, opt.skein).str();
    else
        out["homfly"] = nullptr;

    DegreeBounds b = degree_bounds(d);
    DegreeInfo vi = v.degree_info();
    out["degree_bounds"] = {{"min_bound", b.min_bound.str()},
                            {"max_bound", b.max_bound.str()},
                            {"min_tight", b.min_tight},
                            {"max_tight", b.max_tight},
                            {"holds", vi.min_deg >= b.min_bound && vi.max_deg <= b.max_bound}};

    if (nabla.is_zero()) {
        out["obstruction"] = {{"verdict", verdict_name(Verdict::NotApplicable)}, {"reason", "Conway polynomial is zero"}};
    } else {
        out["obstruction"] = to_json(positivity_test(v, nabla, st.n));
    }

    if (d.is_positive() && !d.is_split() && !nabla.is_zero()) {
        nlohmann::json pred;
        Classification cls = classify(d);
        pred["classification"] = to_json(cls);
        int v1 = second_coeff_predicted(d);
        pred["second_coeff"] = v1;
        pred["second_coeff_agrees"] = Int(v1) == vi.second_coeff;
        LeadTerm lt = lead_term(nabla);
        pred["conway_degree"] = st.c - st.s + 1;
        pred["conway_degree_agrees"] = lt.degree == st.c - st.s + 1 && Rational::of(lt.degree, 1) == vi.min_deg * 2;
        if (cls.classified()) {
            int bound = b_circle_bound(cls, st.n);
            pred["b_circle_bound"] = bound;
            pred["b_circle_bound_holds"] = st.B <= bound;
        }
        if (cls.classified() && cls.type > 0) {
            Rational lead = predicted_lead_conway(cls);
            pred["lead_conway"] = lead.str();
            pred["lead_conway_agrees"] = lead == Rational::of(lt.coeff.get_si(), 1);
            int m = burdening_number_formula(cls, st, vi.min_deg);
            pred["burdening_number"] = m;
            pred["burdening_number_agrees"] = m == cls.m;
        }
        out["predictions"] = pred;
    }
    return out;
}

int family_arc(const Diagram& base) {
    int neg = -1;
    for (int x = 0; x < base.crossing_count(); ++x) {
        if (base.crossing(x).positive) continue;
        if (neg >= 0) throw DiagramError("family base must have exactly one negative crossing");
        neg = x;
    }
    if (neg < 0) throw DiagramError("family base must have exactly one negative crossing");
    return base.crossing(neg).e[1];
}

bool FamilyReport::passed() const {
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return !rows.empty();
}

FamilyReport verify_family_claims(const Diagram& base, int arc, int w_max, const FamilyOptions& opt) {
    int neg = -1;
    for (int x = 0; x < base.crossing_count(); ++x)
        if (!base.crossing(x).positive) neg = x;
    if (neg < 0) throw DiagramError("family base has no negative crossing");
    // z nabla(D00) nabla(3_1)^(w-1) is the correction term of the recursion
    LaurentPoly1 d00 = conway_auto(smooth_crossing(base, neg, Smoothing::Oriented), opt.skein).shifted(4);
    LaurentPoly1 trefoil = LaurentPoly1::constant(Var::z, 1) + LaurentPoly1::power(Var::z, 2);
    LaurentPoly1 one_plus_z2 = trefoil;

    FamilyReport rep;
    LaurentPoly1 prev;
    for (int w = 0; w <= w_max; ++w) {
        Diagram dw = w == 0 ? base : insert_positive_loops(base, arc, w);
        FamilyRow row;
        row.w = w;
        row.c = dw.crossing_count();
        LaurentPoly1 v = jones(dw, opt.state);
        LaurentPoly1 nabla = conway_auto(dw, opt.skein, &row.route);
        DegreeInfo vi = v.degree_info();
        row.min_v = vi.min_deg;
        row.max_v = vi.max_deg;
        row.second_coeff = vi.second_coeff;
        row.lead_conway = nabla.terms().rbegin()->second;
        if (w > 0) {
            const FamilyRow& b = rep.rows.front();
            row.min_ok = row.min_v == b.min_v + Rational::of(w, 1);
            row.max_ok = row.max_v == b.max_v + Rational::of(4 * w, 1);
            row.second_ok = row.second_coeff == b.second_coeff;
            row.lead_ok = row.lead_conway == b.lead_conway;
            row.recursion_ok = nabla == one_plus_z2 * prev + d00 * trefoil.pow(static_cast<unsigned>(w - 1));
        }
        prev = nabla;
        rep.rows.push_back(row);
    }
    return rep;
}

nlohmann::json to_json(const FamilyReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"w", row.w},
                        {"crossings", row.c},
                        {"min_deg_v", row.min_v.str()},
                        {"max_deg_v", row.max_v.str()},
                        {"second_coeff", row.second_coeff.get_str()},
                        {"lead_conway", row.lead_conway.get_str()},
                        {"conway_route", route_name(row.route)},
                        {"min_ok", row.min_ok},
                        {"max_ok", row.max_ok},
                        {"second_ok", row.second_ok},
                        {"lead_ok", row.lead_ok},
                        {"recursion_ok", row.recursion_ok}});
    return {{"schema", kReportSchema}, {"rows", rows}, {"passed", r.passed()}};
}

InequalityResult check_type2_inequality(int limit) {
    InequalityResult res;
    // x, y, z are the three path lengths: k1 = x + y, k2 = x + z
    for (int x = 0; x <= limit; ++x) {
        for (int y = 0; x + y <= limit; ++y) {
            for (int z = y; x + z <= limit; ++z) {
                int k1 = x + y, k2 = x + z;
                int zeros = (x == 0) + (y == 0) + (z == 0);
                int ones = (x == 1) + (y == 1) + (z == 1);
                bool even = x % 2 == 0 && y % 2 == 0 && z % 2 == 0 && zeros <= 1 && x + y >= 4 && x + z >= 4 && y + z >= 4;
                bool odd = x % 2 == 1 && y % 2 == 1 && z % 2 == 1 && ones <= 1;
                long lhs = k1 + k2 - x - 4;
                long rhs4 = static_cast<long>(k1) * k2 - static_cast<long>(x) * x;
                if (even) {
                    ++res.even_checked;
                    if (4 * lhs > rhs4) res.violations.push_back({k1, k2, x});
                } else if (odd) {
                    ++res.odd_checked;
                    if (4 * (lhs + 1) > rhs4 + 1) res.violations.push_back({k1, k2, x});
                }
            }
        }
    }
    return res;
}

} // namespace knotpos
