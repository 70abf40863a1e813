#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "knotpos/diagram.hpp"

namespace knotpos {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// PD text: "PD[X[1,5,2,4], X[3,1,4,6], ...]" or "[[1,5,2,4], ...]". Each tuple lists arc labels
// counterclockwise starting at the incoming under-strand. "PD[]" is the unknot.
Diagram parse_pd(const std::string& text);
std::string serialize_pd(const Diagram& d);

using DTCode = std::vector<int>;

enum class MirrorPolicy { FewestNegative, AsGiven, Mirrored };

// "[4, 8, -22, ...]"; entries must be even with absolute values exactly {2, ..., 2c}.
DTCode parse_dt(const std::string& text);
std::string format_dt(const DTCode& code);

// A positive entry means the even-numbered passage goes under.
Diagram realize_dt(const DTCode& code, MirrorPolicy policy = MirrorPolicy::FewestNegative, int max_crossings = 24);
// DT code read along the first component starting at edge 0. Knots only.
DTCode extract_dt(const Diagram& d);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

// Reads "pd" or "dt" text; "auto" picks dt for a bare list of integers.
Diagram parse_diagram(const std::string& text, const std::string& format = "auto",
                      MirrorPolicy policy = MirrorPolicy::FewestNegative);

} // namespace knotpos
