#include "knotpos/generators.hpp"

#include "knotpos/io.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace knotpos {

namespace {

enum Leg { NE = 0, NW = 1, SW = 2, SE = 3 };

struct Visit {
    int x, slot;
};

// strands of the raw map, each traversed once in an arbitrary direction
std::vector<std::vector<Visit>> raw_strands(const MapBuilder& mb) {
    int c = mb.crossing_count();
    std::vector<std::array<char, 2>> seen(static_cast<std::size_t>(c), {0, 0});
    std::vector<std::vector<Visit>> out;
    for (int x0 = 0; x0 < c; ++x0) {
        for (int a = 0; a < 2; ++a) {
            if (seen[static_cast<std::size_t>(x0)][static_cast<std::size_t>(a)]) continue;
            std::vector<Visit> seq;
            int x = x0, s = a;
            do {
                seq.push_back({x, s});
                seen[static_cast<std::size_t>(x)][static_cast<std::size_t>(s & 1)] = 1;
                int nxt = mb.link(4 * x + ((s + 2) & 3));
                x = nxt >> 2;
                s = nxt & 3;
            } while (!(x == x0 && s == a));
            out.push_back(std::move(seq));
        }
    }
    return out;
}

} // namespace

Diagram torus_2_2p(int p) {
    if (p < 1) throw DiagramError("torus_2_2p needs p >= 1");
    int n = 2 * p;
    MapBuilder mb;
    for (int k = 0; k < n; ++k) mb.add_crossing(1);
    for (int k = 0; k + 1 < n; ++k) {
        mb.connect({k, NE}, {k + 1, NW});
        mb.connect({k, SE}, {k + 1, SW});
    }
    mb.connect({0, NW}, {n - 1, NE});
    mb.connect({0, SW}, {n - 1, SE});
    // the top strand runs right, the other left
    for (int k = 0; k < n; ++k) {
        mb.hint({k, k % 2 ? SW : NW}, 2);
        mb.hint({k, k % 2 ? SE : NE}, 2);
    }
    return make_positive(mb.build(true));
}

Diagram torus_braid(int n) {
    if (n < 1) throw DiagramError("torus_braid needs n >= 1");
    MapBuilder mb;
    for (int k = 0; k < n; ++k) mb.add_crossing(1);
    for (int k = 0; k + 1 < n; ++k) {
        mb.connect({k, SW}, {k + 1, NW});
        mb.connect({k, SE}, {k + 1, NE});
    }
    mb.connect({n - 1, SE}, {0, NE});
    mb.connect({n - 1, SW}, {0, NW});
    for (int k = 0; k < n; ++k) {
        mb.hint({k, NW}, 2);
        mb.hint({k, NE}, 2);
    }
    return make_positive(mb.build(true));
}

Diagram pretzel(int p, int q, int r) {
    std::array<int, 3> len{-p, -q, -r};
    for (int v : len)
        if (v < 0) throw DiagramError("pretzel twist counts must be non-positive");

    // terminals 4*i + {TL, TR, BL, BR}; real ones map to ports, wires join TL-BL and TR-BR of empty columns
    enum { TL, TR, BL, BR };
    MapBuilder mb;
    std::vector<Port> port(12, Port{});
    std::vector<std::vector<int>> col(3);
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < len[static_cast<std::size_t>(i)]; ++k) col[static_cast<std::size_t>(i)].push_back(mb.add_crossing(1));
        auto& cx = col[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k + 1 < cx.size(); ++k) {
            mb.connect({cx[k], SW}, {cx[k + 1], NW});
            mb.connect({cx[k], SE}, {cx[k + 1], NE});
        }
        if (!cx.empty()) {
            port[static_cast<std::size_t>(4 * i + TL)] = {cx.front(), NW};
            port[static_cast<std::size_t>(4 * i + TR)] = {cx.front(), NE};
            port[static_cast<std::size_t>(4 * i + BL)] = {cx.back(), SW};
            port[static_cast<std::size_t>(4 * i + BR)] = {cx.back(), SE};
        }
    }
    std::vector<std::vector<int>> adj(12);
    auto join = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        join(4 * i + TR, 4 * j + TL);
        join(4 * i + BR, 4 * j + BL);
        if (len[static_cast<std::size_t>(i)] == 0) {
            join(4 * i + TL, 4 * i + BL);
            join(4 * i + TR, 4 * i + BR);
        }
    }
    std::vector<char> used(12, 0);
    for (int t = 0; t < 12; ++t) {
        if (used[static_cast<std::size_t>(t)] || port[static_cast<std::size_t>(t)].x < 0) continue;
        int prev = t, cur = adj[static_cast<std::size_t>(t)][0];
        used[static_cast<std::size_t>(t)] = 1;
        while (port[static_cast<std::size_t>(cur)].x < 0) {
            used[static_cast<std::size_t>(cur)] = 1;
            const auto& nb = adj[static_cast<std::size_t>(cur)];
            int nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        }
        used[static_cast<std::size_t>(cur)] = 1;
        mb.connect(port[static_cast<std::size_t>(t)], port[static_cast<std::size_t>(cur)]);
    }
    int loops = 0;
    for (int t = 0; t < 12; ++t) {
        if (used[static_cast<std::size_t>(t)]) continue;
        ++loops;
        int prev = -1, cur = t;
        while (!used[static_cast<std::size_t>(cur)]) {
            used[static_cast<std::size_t>(cur)] = 1;
            const auto& nb = adj[static_cast<std::size_t>(cur)];
            int nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        }
    }
    mb.add_loops(loops);
    if (mb.crossing_count() == 0) return mb.build(false);

    auto strands = raw_strands(mb);
    if (strands.size() > 16) throw DiagramError("too many components");
    for (std::uint32_t mask = 0; mask < (1U << strands.size()); ++mask) {
        // in-slot per crossing and axis under this choice of directions
        std::vector<std::array<int, 2>> in(static_cast<std::size_t>(mb.crossing_count()), {-1, -1});
        for (std::size_t k = 0; k < strands.size(); ++k)
            for (auto& v : strands[k]) {
                int s = ((mask >> k) & 1U) ? (v.slot + 2) & 3 : v.slot;
                in[static_cast<std::size_t>(v.x)][static_cast<std::size_t>(s & 1)] = s;
            }
        bool ok = std::all_of(in.begin(), in.end(), [](const std::array<int, 2>& a) {
            bool nw_in = a[1] == NW, ne_in = a[0] == NE;
            return nw_in != ne_in;
        });
        if (!ok) continue;
        for (int x = 0; x < mb.crossing_count(); ++x)
            for (int a = 0; a < 2; ++a) mb.hint({x, in[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)]}, 2);
        Diagram d = make_positive(mb.build(true));
        if (d.is_split()) throw DiagramError("pretzel parameters give a split diagram");
        return d;
    }
    throw DiagramError("pretzel(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                       ") has no orientation with antiparallel twists");
}

Diagram random_positive(std::mt19937_64& rng, const RandomOptions& opt) {
    if (opt.min_crossings < 2 || opt.max_crossings < opt.min_crossings)
        throw DiagramError("random_positive: bad crossing range");
    std::uniform_int_distribution<int> target_dist(opt.min_crossings, opt.max_crossings);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int target = target_dist(rng);
        Diagram d = torus_braid(2);
        while (d.crossing_count() < target) {
            auto fs = faces(d);
            std::vector<std::size_t> usable;
            for (std::size_t f = 0; f < fs.size(); ++f)
                if (fs[f].size() >= 2) usable.push_back(f);
            const auto& f = fs[usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)]];
            std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
            int a = f[pick(rng)], b = f[pick(rng)];
            if (side_edge(d, a) == side_edge(d, b)) continue;
            d = insert_crossing(d, a, b, true);
        }
        d = make_positive(d);
        if (!opt.reduced_only || is_reduced(d)) return d;
    }
    throw DiagramError("random_positive: no reduced diagram found");
}

namespace {

const std::vector<std::pair<std::string, std::string>> kNamed = {
    {"ap16", "[4, 8, 22, 2, 26, 24, -30, -12, -28, -16, 6, 32, 10, -20, -18, -14]"},
    {"ap15a", "[4, 10, 30, 20, 2, 24, 22, -26, -14, 8, 28, 12, -18, -16, 6]"},
    {"ap15b", "[4, 8, 22, 2, 20, 26, 24, -28, -14, 10, 6, 30, 12, -18, -16]"},
};

} // namespace

std::string named_knot_dt(const std::string& name) {
    for (const auto& [k, v] : kNamed)
        if (k == name) return v;
    throw DiagramError("unknown knot name: " + name);
}

std::vector<std::string> named_knots() {
    std::vector<std::string> out;
    for (const auto& kv : kNamed) out.push_back(kv.first);
    return out;
}

Diagram named_knot(const std::string& name) { return realize_dt(parse_dt(named_knot_dt(name))); }

} // namespace knotpos
