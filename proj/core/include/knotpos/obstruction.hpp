#pragma once

#include <nlohmann/json.hpp>

#include <array>
#include <string>
#include <vector>

#include "knotpos/diagram.hpp"
#include "knotpos/laurent.hpp"
#include "knotpos/skein.hpp"
#include "knotpos/statesum.hpp"

namespace knotpos {

inline constexpr const char* kReportSchema = "knotpos.report/1";

enum class Verdict { NotPositive, Inconclusive, NotApplicable };
std::string verdict_name(Verdict v);

struct ObstructionReport {
    Rational min_v, max_v;
    Int second_coeff;
    Int lead_conway;
    int n = 1;
    Rational bound_value;
    Verdict verdict = Verdict::Inconclusive;
};

// v in t (half-integer grid), nabla in z. Throws DegreeError on zero input.
ObstructionReport positivity_test(const LaurentPoly1& v, const LaurentPoly1& nabla, int n);
nlohmann::json to_json(const ObstructionReport& r);

struct AnalyzeOptions {
    StateSumOptions state;
    SkeinOptions skein;
};

enum class ConwayRoute { Skein, Alexander };
std::string route_name(ConwayRoute r);

// Skein recursion within the skein limit; knots beyond it, or past the node cap, use the Alexander determinant.
LaurentPoly1 conway_auto(const Diagram& d, const SkeinOptions& opt, ConwayRoute* route = nullptr);

nlohmann::json analyze(const Diagram& d, const AnalyzeOptions& opt = {});

// Edge of the unique negative crossing where the positive loops of the D_w family are inserted.
int family_arc(const Diagram& base);

struct FamilyRow {
    int w = 0;
    int c = 0;
    Rational min_v, max_v;
    Int second_coeff, lead_conway;
    ConwayRoute route = ConwayRoute::Skein;
    bool min_ok = true, max_ok = true, second_ok = true, lead_ok = true, recursion_ok = true;
    bool ok() const { return min_ok && max_ok && second_ok && lead_ok && recursion_ok; }
};

struct FamilyReport {
    std::vector<FamilyRow> rows; // rows[0] is the base
    bool passed() const;
};

struct FamilyOptions {
    StateSumOptions state{25};
    SkeinOptions skein;
};

FamilyReport verify_family_claims(const Diagram& base, int arc, int w_max, const FamilyOptions& opt = {});
nlohmann::json to_json(const FamilyReport& r);

struct InequalityResult {
    long even_checked = 0, odd_checked = 0;
    std::vector<std::array<int, 3>> violations; // (k1, k2, x)
};
// Exhaustive check of the type 2 inequality with k1, k2 <= limit.
InequalityResult check_type2_inequality(int limit = 40);

} // namespace knotpos
