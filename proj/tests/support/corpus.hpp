#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotpos/diagram.hpp"

namespace knotpos::testing {

struct Fixture {
    std::string name;
    Diagram d;
};

// Torus links, braid closures, pretzels, surplus crossings and clasp outputs; all positive.
std::vector<Fixture> generated_positive(int max_crossings = 16);
std::vector<Fixture> random_positive_corpus(int count, int max_crossings, std::uint64_t seed);
// Generated fixtures with a Balanced/Burdened classification.
std::vector<Fixture> classified_fixtures();

} // namespace knotpos::testing
