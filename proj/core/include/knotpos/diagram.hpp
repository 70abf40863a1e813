#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotpos {

class DiagramError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Crossing slots are listed counterclockwise starting at the incoming under-strand, as in PD codes.
// The under-strand runs e[0] -> e[2]. Positive crossings carry the over-strand e[3] -> e[1];
// negative ones carry it e[1] -> e[3].
struct Crossing {
    std::array<int, 4> e{};
    bool positive = true;

    int over_in() const { return positive ? 3 : 1; }
    int over_out() const { return positive ? 1 : 3; }
    bool is_in(int slot) const { return slot == 0 || slot == over_in(); }
    bool operator==(const Crossing&) const = default;
};

struct Port {
    int x = -1;
    int slot = -1;
    bool operator==(const Port&) const = default;
};

enum class Smoothing { A, B, Oriented };

class MapBuilder;

// Oriented link diagram on the sphere. Edges are numbered 0..2c-1 along components.
// Crossingless unknotted components are kept as a loop count.
class Diagram {
  public:
    Diagram() : loops_(1) {}
    static Diagram unknot(int loops = 1);
    // Validates labels (0..2c-1, each once in and once out) and indexes the result.
    static Diagram from_crossings(std::vector<Crossing> xs, int loops = 0);

    int crossing_count() const { return static_cast<int>(x_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int loop_count() const { return loops_; }
    const std::vector<Crossing>& crossings() const { return x_; }
    const Crossing& crossing(int i) const { return x_.at(static_cast<std::size_t>(i)); }

    Port head(int e) const { return head_.at(static_cast<std::size_t>(e)); }
    Port tail(int e) const { return tail_.at(static_cast<std::size_t>(e)); }
    int component_of_edge(int e) const { return comp_.at(static_cast<std::size_t>(e)); }

    int component_count() const { return static_cast<int>(comps_.size()) + loops_; }
    const std::vector<std::vector<int>>& components() const { return comps_; }
    int negative_count() const;
    int writhe() const;
    bool is_positive() const { return negative_count() == 0; }

    // Connected pieces of the shadow, loops included.
    int piece_count() const;
    bool is_split() const { return piece_count() > 1; }
    // Crossing ids per connected piece of the crossing graph (loops excluded).
    std::vector<std::vector<int>> pieces() const;

    int face_count() const;
    bool is_planar() const;

    bool operator==(const Diagram& o) const { return x_ == o.x_ && loops_ == o.loops_; }

    MapBuilder to_builder() const;

  private:
    friend class MapBuilder;
    void index();

    std::vector<Crossing> x_;
    int loops_ = 0;
    std::vector<Port> head_, tail_;
    std::vector<int> comp_;
    std::vector<std::vector<int>> comps_;
};

// Unoriented 4-valent map with over/under data and orientation hints, used to assemble diagrams.
// Darts are numbered 4*x + slot with slots counterclockwise.
class MapBuilder {
  public:
    int add_crossing(int over_axis = 1);
    void connect(Port a, Port b);
    void set_over_axis(int x, int axis) { over_axis_.at(static_cast<std::size_t>(x)) = axis; }
    // Declares that the strand through `p` enters its crossing at p.slot.
    void hint(Port p, int strength = 2);
    void add_loops(int k) { loops_ += k; }
    // Detaches the edge at `p` and returns the port it was glued to.
    Port unlink(Port p);

    int crossing_count() const { return static_cast<int>(over_axis_.size()); }
    int loop_count() const { return loops_; }
    int link(int dart) const { return link_.at(static_cast<std::size_t>(dart)); }
    int over_axis(int x) const { return over_axis_.at(static_cast<std::size_t>(x)); }
    int hint_slot(int x, int axis) const;

    // Removes the given crossings, joining slot pairs {s, pair[s]} inside each; closed
    // cycles that pass only through removed crossings become loops.
    MapBuilder contracted(const std::vector<int>& removed, const std::vector<std::array<int, 4>>& pairing) const;

    // strict: conflicting strength-2 hints throw. Dangling darts always throw.
    Diagram build(bool strict = false) const;

    std::vector<int> raw_links() const { return link_; }

  private:
    std::vector<int> link_;
    std::vector<int> over_axis_;
    std::vector<std::array<int8_t, 2>> hint_slot_;
    std::vector<std::array<int8_t, 2>> hint_strength_;
    int loops_ = 0;
};

struct DiagramStats {
    int c = 0, n = 0, s = 0, A = 0, B = 0, q = 0, writhe = 0, chi = 0;
    bool operator==(const DiagramStats&) const = default;
};

// Circles of the state where crossing i is A-smoothed iff bit i of `a_mask` is set.
int count_state_circles(const Diagram& d, const std::vector<bool>& a_choice);
// Union-find labels of edges in that state.
std::vector<int> state_circle_labels(const Diagram& d, const std::vector<bool>& a_choice, int* count = nullptr);
int seifert_circle_count(const Diagram& d);
std::vector<int> seifert_circle_labels(const Diagram& d, int* count = nullptr);

DiagramStats stats(const Diagram& d);

Diagram smooth_crossing(const Diagram& d, int x, Smoothing mode);
Diagram smooth_crossings(const Diagram& d, const std::vector<int>& xs, Smoothing mode);
Diagram switch_crossing(const Diagram& d, int x);
Diagram mirror(const Diagram& d);
Diagram make_positive(const Diagram& d);
// Reverses the orientation of the components whose bit is set in `mask` (crossingless loops are unaffected).
Diagram reverse_components(const Diagram& d, std::uint32_t mask);

// Three positive crossings forming a curl of `arc` clasped with its neighbour at the crossing
// `arc` runs into; the neighbour is the outgoing strand paired with `arc` by the oriented smoothing.
// On a diagram without crossings the curl is formed on the single loop.
Diagram insert_positive_loop(const Diagram& d, int arc);
// Repeats insert_positive_loop w times at the slot that `arc` enters.
Diagram insert_positive_loops(const Diagram& d, int arc, int w);

Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2, int arc2);

// Adds a crossing next to `x` between the same two Seifert circles, signed like `x`.
Diagram add_parallel_crossing(const Diagram& d, int x);

// Face sides are darts from faces(): side (x, s) runs along the edge leaving slot s of x.
// Inserts one crossing inside the face shared by both sides, reconnecting them so that one
// smoothing of the new crossing gives `d` back. The new crossing gets index c and the given sign.
Diagram insert_crossing(const Diagram& d, int side_i, int side_j, bool positive = true);
// Pushes side i across side j inside their common face, forming a clasp of two positive crossings
// (indices c and c+1).
Diagram clasp_sides(const Diagram& d, int side_i, int side_j);
int side_edge(const Diagram& d, int side);

// Two crossings bounding a bigon with the same strand over at both, or nothing.
std::optional<std::pair<int, int>> find_r2_bigon(const Diagram& d);
// Pulls the two strands of such a bigon apart.
Diagram remove_r2_pair(const Diagram& d, int x, int y);

// One diagram per connected piece (crossing pieces first, then one unknot per loop).
std::vector<Diagram> split_pieces(const Diagram& d);

bool is_reduced(const Diagram& d);
std::vector<int> nugatory_crossings(const Diagram& d);

// Faces as cyclic lists of darts (4*x + slot); each dart starts the edge leaving that slot.
std::vector<std::vector<int>> faces(const Diagram& d);

// Combinatorial-map isomorphism preserving orientation, signs and the sphere orientation.
bool isomorphic(const Diagram& a, const Diagram& b);

} // namespace knotpos
