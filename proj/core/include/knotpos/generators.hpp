#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotpos/diagram.hpp"

namespace knotpos {

// Standard alternating diagram of T(2,2p) as a horizontal twist, oriented antiparallel, all positive.
Diagram torus_2_2p(int p);
// Closure of the positive 2-braid sigma_1^n (parallel strands). n = 3 is the trefoil.
Diagram torus_braid(int n);
// Standard diagram of the pretzel link P(p, q, r) with non-positive twist counts, oriented so that
// every twist column is antiparallel, all positive. Zero columns are straight wires.
Diagram pretzel(int p, int q, int r);

struct RandomOptions {
    int min_crossings = 3;
    int max_crossings = 12;
    bool reduced_only = true;
};

// Positive diagram grown from a small seed by random crossing insertions inside faces.
Diagram random_positive(std::mt19937_64& rng, const RandomOptions& opt = {});

// Almost-positive knots by name: "ap16", "ap15a", "ap15b".
std::string named_knot_dt(const std::string& name);
std::vector<std::string> named_knots();
Diagram named_knot(const std::string& name);

} // namespace knotpos
