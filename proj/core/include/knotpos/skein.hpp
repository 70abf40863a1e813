#pragma once

#include <cstdint>
#include <functional>

#include "knotpos/diagram.hpp"
#include "knotpos/laurent.hpp"
#include "knotpos/statesum.hpp"

namespace knotpos {

inline constexpr int kDefaultSkeinLimit = 20;
inline constexpr std::uint64_t kDefaultSkeinNodes = std::uint64_t{1} << 22;

enum class SkeinBranch { Root, Switch, Smooth, Piece, Simplify };

struct SkeinEvent {
    std::uint64_t node;
    std::uint64_t parent;
    int depth;
    int pivot; // -1 for leaves
    SkeinBranch branch;
    int crossings;
};

struct SkeinOptions {
    int max_crossings = kDefaultSkeinLimit;
    std::uint64_t max_nodes = kDefaultSkeinNodes;
    std::function<void(const SkeinEvent&)> trace;
};

// Convention: alpha P(+) - alpha^-1 P(-) = z P(0), P(unknot) = 1.
LaurentPoly2 homfly(const Diagram& d, const SkeinOptions& opt = {});
// Direct recursion nabla(+) - nabla(-) = z nabla(0).
LaurentPoly1 conway(const Diagram& d, const SkeinOptions& opt = {});

// Conway polynomial of a knot from the Alexander matrix determinant, normalized symmetric with value 1 at t = 1.
LaurentPoly1 conway_alexander(const Diagram& d);

struct LeadTerm {
    int degree = 0;
    Int coeff;
};
// Throws DegreeError for split links (zero polynomial).
LeadTerm lead_conway(const Diagram& d, const SkeinOptions& opt = {});
LeadTerm lead_term(const LaurentPoly1& nabla);

// First crossing met on its under-strand, walking components from their first edge; -1 if descending.
int skein_pivot(const Diagram& d);

} // namespace knotpos
