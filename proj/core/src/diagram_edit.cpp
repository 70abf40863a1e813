#include <algorithm>
#include <map>

#include "knotpos/diagram.hpp"

namespace knotpos {

namespace {

constexpr int slot_of(int dart) { return dart & 3; }
constexpr int xing_of(int dart) { return dart >> 2; }
constexpr int dart_of(int x, int s) { return 4 * x + s; }

Port port_of(int dart) { return Port{xing_of(dart), slot_of(dart)}; }

// the dart at the other end of the edge leaving `dart`
int across(const Diagram& d, int dart) {
    int x = xing_of(dart), s = slot_of(dart);
    int e = d.crossing(x).e[static_cast<std::size_t>(s)];
    Port p = d.crossing(x).is_in(s) ? d.tail(e) : d.head(e);
    return dart_of(p.x, p.slot);
}

MapBuilder builder_with_flips(const Diagram& d, std::uint32_t mask) {
    MapBuilder b;
    for (int x = 0; x < d.crossing_count(); ++x) b.add_crossing(1);
    for (int e = 0; e < d.edge_count(); ++e) b.connect(d.tail(e), d.head(e));
    for (int x = 0; x < d.crossing_count(); ++x) {
        const Crossing& c = d.crossing(x);
        bool fu = (mask >> d.component_of_edge(c.e[0])) & 1U;
        bool fo = (mask >> d.component_of_edge(c.e[static_cast<std::size_t>(c.over_in())])) & 1U;
        b.hint({x, fu ? 2 : 0}, 2);
        b.hint({x, fo ? c.over_out() : c.over_in()}, 2);
    }
    b.add_loops(d.loop_count());
    return b;
}

} // namespace

int side_edge(const Diagram& d, int side) {
    return d.crossing(xing_of(side)).e[static_cast<std::size_t>(slot_of(side))];
}

Diagram mirror(const Diagram& d) {
    Diagram out = d;
    for (int x = 0; x < d.crossing_count(); ++x) out = switch_crossing(out, x);
    return out;
}

Diagram make_positive(const Diagram& d) {
    Diagram out = d;
    for (int x = 0; x < d.crossing_count(); ++x)
        if (!out.crossing(x).positive) out = switch_crossing(out, x);
    return out;
}

Diagram reverse_components(const Diagram& d, std::uint32_t mask) { return builder_with_flips(d, mask).build(true); }

Diagram insert_positive_loop(const Diagram& d, int arc) {
    if (d.crossing_count() == 0) {
        if (d.loop_count() < 1 || arc != 0) throw DiagramError("unknown arc " + std::to_string(arc));
        // the curl closed on itself: a positive trefoil
        enum { a, b, c, dd, f, h };
        std::vector<Crossing> xs{{{dd, b, f, a}, true}, {{b, h, c, f}, true}, {{h, dd, a, c}, true}};
        return Diagram::from_crossings(std::move(xs), d.loop_count() - 1);
    }
    if (arc < 0 || arc >= d.edge_count()) throw DiagramError("unknown arc " + std::to_string(arc));
    Port H = d.head(arc);
    const Crossing& cx = d.crossing(H.x);
    int sa = H.slot;
    bool direct = !cx.is_in((sa + 1) & 3);
    int sb = direct ? (sa + 1) & 3 : (sa + 3) & 3;
    int right = cx.e[static_cast<std::size_t>(sb)];
    Port tl = d.tail(arc);
    Port hr = d.head(right);

    MapBuilder mb = d.to_builder();
    mb.unlink(H);
    if (right != arc) mb.unlink({H.x, sb});
    int r = mb.add_crossing(1), s = mb.add_crossing(1), t = mb.add_crossing(1);

    // slots of the named tangle edges at r, s, t
    struct Slots {
        int r_a, r_b, r_d, r_f, s_b, s_c, s_g, s_h, t_c, t_d, t_h, t_i;
    };
    const Slots k = direct ? Slots{3, 1, 0, 2, 0, 2, 3, 1, 3, 1, 0, 2} : Slots{0, 2, 3, 1, 3, 1, 0, 2, 0, 2, 3, 1};
    mb.connect({r, k.r_b}, {s, k.s_b});
    mb.connect({s, k.s_c}, {t, k.t_c});
    mb.connect({r, k.r_d}, {t, k.t_d});
    mb.connect({s, k.s_h}, {t, k.t_h});
    mb.connect({r, k.r_f}, H);
    mb.connect({s, k.s_g}, {H.x, sb});
    if (right != arc) {
        mb.connect({r, k.r_a}, tl);
        mb.connect({t, k.t_i}, hr);
    } else {
        mb.connect({r, k.r_a}, {t, k.t_i});
    }
    for (int x : {r, s, t}) {
        mb.hint({x, 0}, 2);
        mb.hint({x, 3}, 2);
    }
    return mb.build(true);
}

Diagram insert_positive_loops(const Diagram& d, int arc, int w) {
    if (w < 0) throw DiagramError("negative loop count");
    if (w == 0) return d;
    if (d.crossing_count() == 0) {
        Diagram out = insert_positive_loop(d, arc);
        // later copies sit on the strand entering the first curl crossing at its over slot
        for (int k = 1; k < w; ++k) out = insert_positive_loop(out, out.crossing(0).e[3]);
        return out;
    }
    if (arc < 0 || arc >= d.edge_count()) throw DiagramError("unknown arc " + std::to_string(arc));
    Port H = d.head(arc);
    Diagram out = d;
    for (int k = 0; k < w; ++k) out = insert_positive_loop(out, out.crossing(H.x).e[static_cast<std::size_t>(H.slot)]);
    return out;
}

Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2, int arc2) {
    auto check = [](const Diagram& d, int arc) {
        int limit = d.crossing_count() == 0 ? 1 : d.edge_count();
        if (arc < 0 || arc >= limit) throw DiagramError("unknown arc " + std::to_string(arc));
    };
    check(d1, arc1);
    check(d2, arc2);
    if (d1.crossing_count() == 0) {
        MapBuilder b = d2.to_builder();
        b.add_loops(d1.loop_count() - 1);
        return b.build(true);
    }
    if (d2.crossing_count() == 0) {
        MapBuilder b = d1.to_builder();
        b.add_loops(d2.loop_count() - 1);
        return b.build(true);
    }
    MapBuilder b = d1.to_builder();
    int off = d1.crossing_count();
    for (int x = 0; x < d2.crossing_count(); ++x) b.add_crossing(1);
    auto shift = [off](Port p) { return Port{p.x + off, p.slot}; };
    for (int e = 0; e < d2.edge_count(); ++e)
        if (e != arc2) b.connect(shift(d2.tail(e)), shift(d2.head(e)));
    for (int x = 0; x < d2.crossing_count(); ++x) {
        b.hint({x + off, 0}, 2);
        b.hint({x + off, d2.crossing(x).over_in()}, 2);
    }
    b.unlink(d1.head(arc1));
    b.connect(d1.tail(arc1), shift(d2.head(arc2)));
    b.connect(shift(d2.tail(arc2)), d1.head(arc1));
    b.add_loops(d2.loop_count());
    return b.build(true);
}

static void require_common_face(const Diagram& d, int side_i, int side_j) {
    int n = 4 * d.crossing_count();
    if (side_i < 0 || side_j < 0 || side_i >= n || side_j >= n) throw DiagramError("unknown face side");
    if (side_edge(d, side_i) == side_edge(d, side_j)) throw DiagramError("face sides must lie on distinct edges");
    for (auto& f : faces(d)) {
        bool hi = std::find(f.begin(), f.end(), side_i) != f.end();
        bool hj = std::find(f.begin(), f.end(), side_j) != f.end();
        if (hi && hj) return;
        if (hi || hj) break;
    }
    throw DiagramError("face sides do not bound a common face");
}

Diagram insert_crossing(const Diagram& d, int side_i, int side_j, bool positive) {
    require_common_face(d, side_i, side_j);
    int pi = side_i, qi = across(d, side_i), pj = side_j, qj = across(d, side_j);
    MapBuilder mb = d.to_builder();
    mb.unlink(port_of(pi));
    mb.unlink(port_of(pj));
    int nx = mb.add_crossing(1);
    mb.connect(port_of(pi), {nx, 0});
    mb.connect(port_of(qj), {nx, 1});
    mb.connect(port_of(pj), {nx, 2});
    mb.connect(port_of(qi), {nx, 3});
    Diagram out = mb.build(false);
    if (out.crossing(nx).positive != positive) out = switch_crossing(out, nx);
    return out;
}

Diagram clasp_sides(const Diagram& d, int side_i, int side_j) {
    require_common_face(d, side_i, side_j);
    int pi = side_i, qi = across(d, side_i), pj = side_j, qj = across(d, side_j);
    MapBuilder mb = d.to_builder();
    mb.unlink(port_of(pi));
    mb.unlink(port_of(pj));
    int X = mb.add_crossing(1), Y = mb.add_crossing(1);
    mb.connect({X, 0}, {Y, 2});
    mb.connect({X, 1}, port_of(pi));
    mb.connect({X, 2}, port_of(qj));
    mb.connect({X, 3}, {Y, 3});
    mb.connect({Y, 0}, port_of(pj));
    mb.connect({Y, 1}, port_of(qi));
    Diagram out = mb.build(true);
    return make_positive(out);
}

std::optional<std::pair<int, int>> find_r2_bigon(const Diagram& d) {
    auto over = [&](int x, int e) {
        const auto& q = d.crossing(x).e;
        return q[1] == e || q[3] == e;
    };
    for (const auto& f : faces(d)) {
        if (f.size() != 2) continue;
        int x = f[0] / 4, y = f[1] / 4;
        if (x == y) continue;
        int e = side_edge(d, f[0]);
        if (over(x, e) == over(y, e)) return std::pair{std::min(x, y), std::max(x, y)};
    }
    return std::nullopt;
}

Diagram remove_r2_pair(const Diagram& d, int x, int y) {
    static constexpr std::array<int, 4> straight{2, 3, 0, 1};
    return d.to_builder().contracted({x, y}, {straight, straight}).build(false);
}

Diagram add_parallel_crossing(const Diagram& d, int x) {
    if (x < 0 || x >= d.crossing_count()) throw DiagramError("unknown crossing id " + std::to_string(x));
    const Crossing& c = d.crossing(x);
    int s1 = c.positive ? 1 : 0;
    int s2 = s1 + 1;
    if (c.e[static_cast<std::size_t>(s1)] == c.e[static_cast<std::size_t>(s2)])
        throw DiagramError("crossing " + std::to_string(x) + " is a kink");
    return insert_crossing(d, across(d, dart_of(x, s1)), dart_of(x, s2), c.positive);
}

std::vector<Diagram> split_pieces(const Diagram& d) {
    std::vector<Diagram> out;
    for (const auto& piece : d.pieces()) {
        std::vector<int> relabel(static_cast<std::size_t>(d.edge_count()), -1);
        std::vector<int> used;
        for (int x : piece)
            for (int e : d.crossing(x).e) used.push_back(e);
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        for (std::size_t k = 0; k < used.size(); ++k) relabel[static_cast<std::size_t>(used[k])] = static_cast<int>(k);
        std::vector<Crossing> xs;
        for (int x : piece) {
            Crossing c = d.crossing(x);
            for (int& e : c.e) e = relabel[static_cast<std::size_t>(e)];
            xs.push_back(c);
        }
        out.push_back(Diagram::from_crossings(std::move(xs), 0));
    }
    for (int k = 0; k < d.loop_count(); ++k) out.push_back(Diagram::unknot());
    return out;
}

std::vector<int> nugatory_crossings(const Diagram& d) {
    std::vector<int> out;
    for (auto& f : faces(d)) {
        std::map<int, int> seen;
        for (int dart : f)
            if (++seen[xing_of(dart)] == 2) out.push_back(xing_of(dart));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_reduced(const Diagram& d) { return nugatory_crossings(d).empty(); }

namespace {

// maps the connected piece of `a` containing xa onto `b` with xa -> xb
bool match_piece(const Diagram& a, const Diagram& b, int xa, int xb, std::vector<int>& cmap, std::vector<int>& used) {
    std::vector<int> cm = cmap, us = used;
    std::vector<int> emap(static_cast<std::size_t>(a.edge_count()), -1);
    std::vector<std::pair<int, int>> stack{{xa, xb}};
    if (cm[static_cast<std::size_t>(xa)] != -1 || us[static_cast<std::size_t>(xb)]) return false;
    cm[static_cast<std::size_t>(xa)] = xb;
    us[static_cast<std::size_t>(xb)] = 1;
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        const Crossing& ca = a.crossing(x);
        const Crossing& cb = b.crossing(y);
        if (ca.positive != cb.positive) return false;
        for (int j = 0; j < 4; ++j) {
            int ea = ca.e[static_cast<std::size_t>(j)], eb = cb.e[static_cast<std::size_t>(j)];
            int& slot = emap[static_cast<std::size_t>(ea)];
            if (slot != -1 && slot != eb) return false;
            slot = eb;
            Port pa = ca.is_in(j) ? a.tail(ea) : a.head(ea);
            Port pb = cb.is_in(j) ? b.tail(eb) : b.head(eb);
            if (pa.slot != pb.slot) return false;
            int& m = cm[static_cast<std::size_t>(pa.x)];
            if (m == -1) {
                if (us[static_cast<std::size_t>(pb.x)]) return false;
                m = pb.x;
                us[static_cast<std::size_t>(pb.x)] = 1;
                stack.emplace_back(pa.x, pb.x);
            } else if (m != pb.x) {
                return false;
            }
        }
    }
    cmap.swap(cm);
    used.swap(us);
    return true;
}

bool match_all(const Diagram& a, const Diagram& b, const std::vector<std::vector<int>>& pa, std::size_t k,
               std::vector<int>& cmap, std::vector<int>& used) {
    if (k == pa.size()) return true;
    int xa = pa[k][0];
    for (int xb = 0; xb < b.crossing_count(); ++xb) {
        if (used[static_cast<std::size_t>(xb)]) continue;
        std::vector<int> cm = cmap, us = used;
        if (match_piece(a, b, xa, xb, cm, us) && match_all(a, b, pa, k + 1, cm, us)) {
            cmap.swap(cm);
            used.swap(us);
            return true;
        }
    }
    return false;
}

} // namespace

bool isomorphic(const Diagram& a, const Diagram& b) {
    if (a.crossing_count() != b.crossing_count() || a.loop_count() != b.loop_count() ||
        a.negative_count() != b.negative_count() || a.component_count() != b.component_count())
        return false;
    auto pa = a.pieces();
    if (pa.size() != b.pieces().size()) return false;
    std::vector<int> cmap(static_cast<std::size_t>(a.crossing_count()), -1);
    std::vector<int> used(static_cast<std::size_t>(b.crossing_count()), 0);
    return match_all(a, b, pa, 0, cmap, used);
}

} // namespace knotpos
