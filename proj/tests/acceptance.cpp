// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "corpus.hpp"
#include "knotpos/generators.hpp"
#include "knotpos/io.hpp"
#include "knotpos/obstruction.hpp"
#include "knotpos/skein.hpp"
#include "knotpos/stategraph.hpp"
#include "knotpos/statesum.hpp"

using namespace knotpos;
using namespace knotpos::testing;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

LaurentPoly1 t(const std::string& s) { return parse_poly1(s, Var::t); }
LaurentPoly1 z(const std::string& s) { return parse_poly1(s, Var::z); }

struct Listing {
    const char* name;
    const char* jones;
    const char* homfly;
    const char* conway; // empty when not listed
    int bound, max_v;
};

const Listing kListings[] = {
    {"ap16",
     "t^4 - 3t^6 + 12t^7 - 24t^8 + 38t^9 - 49t^10 + 56t^11 - 56t^12 + 48t^13 - 37t^14 + 23t^15 - 12t^16 + "
     "5t^17 - t^18",
     "a^-8 z^8 + 8a^-8 z^6 + 17a^-8 z^4 + 13a^-8 z^2 + 3a^-8 + 3a^-10 z^6 + 5a^-10 z^4 - 2a^-10 + 4a^-12 z^6 + "
     "10a^-12 z^4 + 11a^-12 z^2 + 6a^-12 - 8a^-14 z^4 - 18a^-14 z^2 - 11a^-14 + 5a^-16 z^2 + 6a^-16 - a^-18",
     "", 16, 18},
    {"ap15a",
     "t^3 - t^4 + 2t^5 - t^6 - t^7 + 5t^8 - 8t^9 + 11t^10 - 13t^11 + 12t^12 - 10t^13 + 6t^14 - 3t^15 + t^16",
     "a^-6 z^6 + 5a^-6 z^4 + 6a^-6 z^2 + 2a^-6 + a^-8 z^6 + 5a^-8 z^4 + 3a^-8 z^2 + 2a^-10 z^4 + a^-10 z^2 + "
     "2a^-12 z^4 + a^-12 z^2 - 3a^-14 z^2 - 2a^-14 + a^-16",
     "1 + 8z^2 + 14z^4 + 2z^6", 14, 16},
    {"ap15b",
     "t^3 - 2t^4 + 5t^5 - 6t^6 + 7t^7 - 6t^8 + 3t^9 + t^10 - 4t^11 + 6t^12 - 7t^13 + 5t^14 - 3t^15 + t^16",
     "a^-6 z^6 + 4a^-6 z^4 + 4a^-6 z^2 + a^-6 + 2a^-8 z^6 + 9a^-8 z^4 + 10a^-8 z^2 + 3a^-8 - a^-10 z^4 - "
     "6a^-10 z^2 - 4a^-10 + 2a^-12 z^4 + 4a^-12 z^2 + 3a^-12 - 3a^-14 z^2 - 3a^-14 + a^-16",
     "1 + 9z^2 + 14z^4 + 3z^6", 15, 16},
};

void named_example(int id, const Listing& l, bool check_homfly) {
    auto t0 = Clock::now();
    Diagram d = realize_dt(parse_dt(named_knot_dt(l.name)));
    LaurentPoly1 v = jones(d);
    bool ok = v == t(l.jones);
    std::string detail = std::string(l.name) + " jones " + (ok ? "exact" : "MISMATCH " + v.str());
    if (check_homfly) {
        LaurentPoly2 p = homfly(d);
        bool hp = p == parse_poly2(l.homfly);
        ok = ok && hp;
        detail += std::string(", homfly ") + (hp ? "exact" : "MISMATCH " + p.str());
    }
    if (*l.conway) {
        LaurentPoly1 c = conway(d);
        bool hc = c == z(l.conway);
        ok = ok && hc;
        detail += std::string(", conway ") + (hc ? "exact" : "MISMATCH " + c.str());
    }
    ObstructionReport r = positivity_test(v, conway_auto(d, {}, nullptr), d.component_count());
    bool verdict = r.verdict == Verdict::NotPositive && r.bound_value == Rational::of(l.bound, 1) &&
                   r.max_v == Rational::of(l.max_v, 1);
    ok = ok && verdict;
    double secs = since(t0);
    ok = ok && secs < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, ", %s bound %s vs max %s, %.2fs", std::string(verdict_name(r.verdict)).c_str(), r.bound_value.str().c_str(),
                  r.max_v.str().c_str(), secs);
    report(id, ok, std::string("example ") + l.name, detail + buf);
}

void closed_forms() {
    int checked = 0, bad = 0;
    for (int p = 1; p <= 6; ++p) {
        LaurentPoly1 expect(Var::z);
        expect.add_term(4, p);
        ++checked;
        if (conway(torus_2_2p(p)) != expect) ++bad;
    }
    for (int p : {2, 4})
        for (int q : {2, 4})
            for (int r : {2, 4}) {
                LaurentPoly1 expect(Var::z);
                expect.add_term(8, (p * q + p * r + q * r) / 4);
                ++checked;
                if (conway(pretzel(-p, -q, -r)) != expect) ++bad;
            }
    for (int p : {1, 3, 5})
        for (int q : {1, 3, 5})
            for (int r : {1, 3, 5}) {
                LaurentPoly1 expect(Var::z);
                expect.add_term(0, 1);
                expect.add_term(8, (p * q + p * r + q * r + 1) / 4);
                ++checked;
                if (conway(pretzel(-p, -q, -r)) != expect) ++bad;
            }
    report(4, bad == 0, "closed-form families", std::to_string(checked) + " checked, " + std::to_string(bad) + " mismatches");
}

std::vector<Fixture> corpus14() {
    std::vector<Fixture> c = generated_positive(14);
    auto extra = random_positive_corpus(40, 14, 7);
    c.insert(c.end(), extra.begin(), extra.end());
    return c;
}

void oracle_triangle(const std::vector<Fixture>& corpus) {
    int bad = 0;
    for (const auto& f : corpus) {
        LaurentPoly2 p = homfly(f.d);
        if (specialize(p, Target::jones) != jones(f.d) || specialize(p, Target::conway) != conway(f.d)) {
            ++bad;
            std::printf("  mismatch on %s\n", f.name.c_str());
        }
    }
    report(5, corpus.size() >= 50 && bad == 0, "oracle triangle",
           std::to_string(corpus.size()) + " diagrams, " + std::to_string(bad) + " mismatches");
}

void degree_laws(const std::vector<Fixture>& corpus) {
    int bad = 0, adequate = 0;
    for (const auto& f : corpus) {
        DiagramStats st = stats(f.d);
        DegreeInfo v = jones(f.d).degree_info();
        bool ok = v.min_deg == Rational::of(st.c - st.A + 1, 2) && v.max_deg <= Rational::of(2 * st.c + st.B - 1, 2);
        LaurentPoly1 c = conway(f.d);
        if (!c.is_zero()) ok = ok && Rational::of(lead_term(c).degree, 1) == v.min_deg * 2;
        if (adequacy(f.d).b_adequate) {
            ++adequate;
            ok = ok && v.max_deg == Rational::of(2 * st.c + st.B - 1, 2);
        }
        if (!ok) {
            ++bad;
            std::printf("  degree law fails on %s\n", f.name.c_str());
        }
    }
    for (const auto& name : named_knots()) {
        Diagram d = named_knot(name);
        if (!adequacy(d).b_adequate) continue;
        ++adequate;
        if (jones(d).degree_info().max_deg != degree_bounds(d).max_bound) ++bad;
    }
    report(6, bad == 0, "degree laws",
           std::to_string(corpus.size()) + " diagrams, " + std::to_string(adequate) + " B-adequate, " +
               std::to_string(bad) + " failures");
}

void taxonomy(const std::vector<Fixture>& corpus, const std::vector<Fixture>& classified) {
    int bad = 0;
    for (const auto& f : corpus) {
        if (!cycles_even(reduce_graph(a_state_graph(f.d)))) ++bad;
        if (Int(second_coeff_predicted(f.d)) != jones(f.d).degree_info().second_coeff) ++bad;
    }
    int lead_checked = 0, burdened1 = 0, burdened2 = 0, balanced = 0, oddly = 0;
    for (const auto& f : classified) {
        Classification c = classify(f.d);
        DiagramStats st = stats(f.d);
        if (c.family == Family::Balanced) {
            ++balanced;
            if (st.B != st.n) ++bad;
        }
        if (c.family == Family::OddlyBalanced) {
            ++oddly;
            if (st.B != st.n && std::abs(st.B - st.n) != 2) ++bad;
        }
        if (c.type == 0) continue;
        ++lead_checked;
        if (c.family == Family::Burdened || c.family == Family::OddlyBurdened) {
            burdened1 += c.m == 1;
            burdened2 += c.m == 2;
        }
        if (predicted_lead_conway(c) != Rational::of(lead_conway(f.d).coeff.get_si(), 1)) ++bad;
    }
    int clasped = 0;
    for (const auto& f : generated_positive(14)) {
        auto w = claspable(f.d);
        if (!w) continue;
        ++clasped;
        DiagramStats a = stats(f.d), b = stats(clasp_move(f.d, *w));
        if (a.B != b.B || a.n != b.n) ++bad;
    }
    bool ok = bad == 0 && lead_checked >= 20 && burdened1 > 0 && burdened2 > 0 && balanced > 0 && oddly > 0 && clasped > 0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%d lead checks (m=1: %d, m=2: %d), %d balanced, %d oddly balanced, %d clasps, %d failures",
                  lead_checked, burdened1, burdened2, balanced, oddly, clasped, bad);
    report(7, ok, "taxonomy properties", buf);
}

void burdening(const std::vector<Fixture>& classified) {
    int checked = 0, skipped = 0, bad = 0;
    for (const auto& f : classified) {
        Classification c = classify(f.d);
        if (c.type == 0) {
            ++skipped;
            continue;
        }
        ++checked;
        if (burdening_number_formula(c, stats(f.d), jones(f.d).degree_info().min_deg) != c.m) ++bad;
    }
    report(8, checked > 0 && bad == 0, "burdening cross-check",
           std::to_string(checked) + " fixtures, " + std::to_string(skipped) + " type 0 skipped, " + std::to_string(bad) +
               " mismatches");
}

void family_claims() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& name : named_knots()) {
        Diagram base = named_knot(name);
        FamilyReport rep = verify_family_claims(base, family_arc(base), 3);
        ok = ok && rep.passed() && rep.rows.size() == 4;
        detail += name + (rep.passed() ? " ok, " : " FAILED, ");
    }
    double secs = since(t0);
    ok = ok && secs < 300.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "w=1..3 in %.1fs", secs);
    report(9, ok, "family claims", detail + buf);
}

void soundness() {
    auto corpus = random_positive_corpus(200, 12, 20240517);
    auto gen = generated_positive(12);
    corpus.insert(corpus.end(), gen.begin(), gen.end());
    int bad = 0;
    for (const auto& f : corpus) {
        ObstructionReport r = positivity_test(jones(f.d), conway(f.d), f.d.component_count());
        if (r.verdict == Verdict::NotPositive) {
            ++bad;
            std::printf("  false positive on %s\n", f.name.c_str());
        }
    }
    report(10, bad == 0, "soundness sweep", std::to_string(corpus.size()) + " diagrams, " + std::to_string(bad) + " NotPositive");
}

void inequality() {
    auto t0 = Clock::now();
    InequalityResult r = check_type2_inequality(40);
    double secs = since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%ld even, %ld odd triples, %zu violations, %.3fs", r.even_checked, r.odd_checked,
                  r.violations.size(), secs);
    report(11, r.violations.empty() && secs < 1.0, "type 2 inequality", buf);
}

template <class F>
void guarded(int id, const char* what, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        report(id, false, what, std::string("exception: ") + e.what());
    }
}

} // namespace

int main() {
    guarded(1, "example ap16", [] { named_example(1, kListings[0], true); });
    guarded(2, "example ap15a", [] { named_example(2, kListings[1], true); });
    guarded(3, "example ap15b", [] { named_example(3, kListings[2], true); });
    guarded(4, "closed-form families", closed_forms);
    std::vector<Fixture> corpus = corpus14();
    std::vector<Fixture> classified = classified_fixtures();
    guarded(5, "oracle triangle", [&] { oracle_triangle(corpus); });
    guarded(6, "degree laws", [&] { degree_laws(corpus); });
    guarded(7, "taxonomy properties", [&] { taxonomy(corpus, classified); });
    guarded(8, "burdening cross-check", [&] { burdening(classified); });
    guarded(9, "family claims", family_claims);
    guarded(10, "soundness sweep", soundness);
    guarded(11, "type 2 inequality", inequality);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
