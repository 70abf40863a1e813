#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "knotpos/diagram.hpp"
#include "knotpos/laurent.hpp"

namespace knotpos {

class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultStateLimit = 24;

struct StateCircles {
    int count = 0;
    std::vector<int> membership; // circle id per edge
};

// a_choice[x] true means crossing x is A-smoothed.
StateCircles state_circles(const Diagram& d, const std::vector<bool>& a_choice);

struct StateSumOptions {
    int max_crossings = kDefaultStateLimit;
    int threads = 0; // 0: hardware concurrency
    bool reverse_order = false; // walk states in decreasing Gray index
};

// Unnormalized bracket in A with <O> = 1.
LaurentPoly1 kauffman_bracket(const Diagram& d, const StateSumOptions& opt = {});
LaurentPoly1 jones(const Diagram& d, const StateSumOptions& opt = {});
// (-A)^(-3w) <D> in A
LaurentPoly1 normalized_bracket(const Diagram& d, const StateSumOptions& opt = {});

struct StateRecord {
    std::uint64_t bits; // bit x set: crossing x A-smoothed
    int a_count;
    int b_count;
    int circles;
};
// Visits every state in Gray-code order.
void for_each_state(const Diagram& d, const std::function<void(const StateRecord&)>& fn,
                    int max_crossings = kDefaultStateLimit);

struct DegreeBounds {
    Rational min_bound;
    Rational max_bound;
    bool min_tight = false; // equality guaranteed (A-adequate)
    bool max_tight = false; // equality guaranteed (B-adequate)
};

DegreeBounds degree_bounds(const DiagramStats& st);
DegreeBounds degree_bounds(const Diagram& d);

struct Adequacy {
    bool a_adequate = false;
    bool b_adequate = false;
};
Adequacy adequacy(const Diagram& d);

} // namespace knotpos
