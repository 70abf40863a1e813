#include "knotpos/stategraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace knotpos {

StateGraph a_state_graph(const Diagram& d) {
    StateGraph g;
    int count = 0;
    g.circle_of_edge = state_circle_labels(d, std::vector<bool>(static_cast<std::size_t>(d.crossing_count()), true), &count);
    g.vertices = count;
    for (const auto& x : d.crossings())
        g.edges.emplace_back(g.circle_of_edge[static_cast<std::size_t>(x.e[0])], g.circle_of_edge[static_cast<std::size_t>(x.e[2])]);
    g.from_positive = d.is_positive();
    return g;
}

namespace {

bool connected_without(const ReducedGraph& g, int skip_a, int skip_b, int from, int to) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertices));
    for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
        if (k == skip_a || k == skip_b) continue;
        const auto& e = g.edges[static_cast<std::size_t>(k)];
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.vertices), 0);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return false;
}

// vertices reachable from `from` avoiding edges skip_a, skip_b
std::vector<int> component_without(const ReducedGraph& g, int skip_a, int skip_b, int from) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertices), 0);
    std::vector<int> stack{from}, out;
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
            if (k == skip_a || k == skip_b) continue;
            const auto& e = g.edges[static_cast<std::size_t>(k)];
            int w = e.u == v ? e.v : e.v == v ? e.u : -1;
            if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return out;
}

} // namespace

ReducedGraph reduce_graph(const StateGraph& g) {
    ReducedGraph r;
    r.vertices = g.vertices;
    std::map<std::pair<int, int>, std::size_t> where;
    for (int x = 0; x < static_cast<int>(g.edges.size()); ++x) {
        auto [a, b] = g.edges[static_cast<std::size_t>(x)];
        if (a == b) {
            ++r.self_loops;
            continue;
        }
        auto key = std::minmax(a, b);
        auto it = where.find(key);
        if (it == where.end()) {
            it = where.emplace(key, r.edges.size()).first;
            r.edges.push_back(ReducedEdge{key.first, key.second, 0, false, {}});
        }
        auto& e = r.edges[it->second];
        ++e.multiplicity;
        e.crossings.push_back(x);
    }
    std::sort(r.edges.begin(), r.edges.end(), [](const ReducedEdge& a, const ReducedEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (int k = 0; k < static_cast<int>(r.edges.size()); ++k) {
        auto& e = r.edges[static_cast<std::size_t>(k)];
        e.cut = !connected_without(r, k, -1, e.u, e.v);
    }
    return r;
}

bool is_connected(const ReducedGraph& g) {
    if (g.vertices == 0) return true;
    return static_cast<int>(component_without(g, -1, -1, 0).size()) == g.vertices;
}

int betti(const ReducedGraph& g) {
    if (!is_connected(g)) throw DiagramError("betti number of a disconnected graph");
    return static_cast<int>(g.edges.size()) - g.vertices + 1;
}

bool cycles_even(const ReducedGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertices), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertices));
    for (const auto& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (int s = 0; s < g.vertices; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Balanced: return "Balanced";
    case Family::OddlyBalanced: return "OddlyBalanced";
    case Family::Burdened: return "Burdened";
    case Family::OddlyBurdened: return "OddlyBurdened";
    case Family::Unclassified: break;
    }
    return "Unclassified";
}

namespace {

Classification unclassified(std::string why) {
    Classification c;
    c.diagnostic = std::move(why);
    return c;
}

// hole lengths of the cycle-edge subgraph when the first Betti number is 2
void hole_lengths(const ReducedGraph& g, Classification& cls) {
    std::vector<int> cyc;
    for (int k = 0; k < static_cast<int>(g.edges.size()); ++k)
        if (!g.edges[static_cast<std::size_t>(k)].cut) cyc.push_back(k);
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.vertices));
    for (int k : cyc) {
        inc[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(k)].u)].push_back(k);
        inc[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(k)].v)].push_back(k);
    }
    auto other = [&](int k, int v) {
        const auto& e = g.edges[static_cast<std::size_t>(k)];
        return e.u == v ? e.v : e.u;
    };
    // walk from v along edge k through degree-2 vertices; returns (length, end vertex)
    auto walk = [&](int v, int k) {
        int len = 1;
        int cur = other(k, v);
        while (inc[static_cast<std::size_t>(cur)].size() == 2) {
            const auto& ks = inc[static_cast<std::size_t>(cur)];
            k = ks[0] == k ? ks[1] : ks[0];
            cur = other(k, cur);
            ++len;
        }
        return std::pair{len, cur};
    };
    std::vector<int> branch;
    for (int v = 0; v < g.vertices; ++v)
        if (inc[static_cast<std::size_t>(v)].size() > 2) branch.push_back(v);

    int total = static_cast<int>(cyc.size());
    if (branch.empty()) {
        // two disjoint cycles
        int v = g.edges[static_cast<std::size_t>(cyc[0])].u;
        int len = 1, cur = other(cyc[0], v), k = cyc[0];
        while (cur != v) {
            const auto& ks = inc[static_cast<std::size_t>(cur)];
            k = ks[0] == k ? ks[1] : ks[0];
            cur = other(k, cur);
            ++len;
        }
        cls.k1 = std::min(len, total - len);
        cls.k2 = std::max(len, total - len);
        cls.x = 0;
    } else if (branch.size() == 1) {
        // two cycles sharing a vertex
        int len = walk(branch[0], inc[static_cast<std::size_t>(branch[0])][0]).first;
        cls.k1 = std::min(len, total - len);
        cls.k2 = std::max(len, total - len);
        cls.x = 0;
    } else {
        int a = branch[0];
        std::vector<int> lens;
        for (int k : inc[static_cast<std::size_t>(a)]) lens.push_back(walk(a, k).first);
        std::sort(lens.begin(), lens.end());
        cls.x = lens[0];
        cls.k1 = lens[0] + lens[1];
        cls.k2 = lens[0] + lens[2];
    }
}

} // namespace

Classification classify(const ReducedGraph& g) {
    if (g.self_loops > 0) return unclassified("a crossing joins an A-circle to itself");
    if (!is_connected(g)) return unclassified("A-state graph is disconnected");
    int b = betti(g);
    if (b > 2) return unclassified("reduced A-state graph has " + std::to_string(b) + " holes");
    Classification cls;
    cls.type = b;
    for (const auto& e : g.edges) {
        if (e.cut) {
            if (e.multiplicity < 2)
                return unclassified("cut edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has one crossing");
            cls.m += e.multiplicity - 2;
        } else {
            cls.m += e.multiplicity - 1;
            ++cls.cycle_edges;
        }
    }
    bool odd = b == 2 && cls.cycle_edges % 2 == 1;
    if (cls.m == 0)
        cls.family = odd ? Family::OddlyBalanced : Family::Balanced;
    else
        cls.family = odd ? Family::OddlyBurdened : Family::Burdened;
    if (b == 1) cls.k = cls.cycle_edges;
    if (b == 2) hole_lengths(g, cls);
    return cls;
}

Classification classify(const Diagram& d) {
    if (!d.is_positive()) return unclassified("diagram is not positive");
    if (d.is_split()) return unclassified("diagram is split");
    return classify(reduce_graph(a_state_graph(d)));
}

int second_coeff_predicted(const Diagram& d) {
    if (!d.is_positive()) throw DiagramError("second coefficient formula needs a positive diagram");
    int s = 0;
    auto lab = seifert_circle_labels(d, &s);
    std::set<std::pair<int, int>> pairs;
    for (const auto& x : d.crossings()) {
        int a = lab[static_cast<std::size_t>(x.e[0])], b = lab[static_cast<std::size_t>(x.e[2])];
        if (a != b) pairs.insert(std::minmax(a, b));
    }
    int v = s - 1 - static_cast<int>(pairs.size());
    return d.component_count() % 2 == 1 ? v : -v;
}

int burdening_number_formula(const Classification& cls, const DiagramStats& st, const Rational& min_v) {
    if (!cls.classified() || (cls.type != 1 && cls.type != 2))
        throw DiagramError("burdening number formula applies to classified diagrams of type 1 or 2");
    Rational four = min_v * 4;
    if (four.den != 1) throw DiagramError("minimum degree is not a half-integer");
    long base = four.num - st.c;
    return static_cast<int>(cls.type == 1 ? base + cls.k - 2 : base + cls.k1 + cls.k2 - cls.x - 4);
}

Rational predicted_lead_conway(const Classification& cls) {
    if (!cls.classified() || (cls.type != 1 && cls.type != 2))
        throw DiagramError("leading Conway prediction applies to classified diagrams of type 1 or 2");
    if (cls.type == 1) return Rational::of(cls.k, 2);
    return Rational::of(cls.k1 * cls.k2 - cls.x * cls.x + (cls.odd() ? 1 : 0), 4);
}

int b_circle_bound(const Classification& cls, int n) {
    if (!cls.classified()) throw DiagramError("B-circle bound needs a classified diagram");
    return n + 2 * (cls.m + (cls.odd() ? 1 : 0));
}

std::optional<ClaspWitness> claspable(const Diagram& d) {
    if (!d.is_positive() || !is_reduced(d) || d.is_split()) return std::nullopt;
    ReducedGraph g = reduce_graph(a_state_graph(d));
    if (g.self_loops > 0) return std::nullopt;
    for (const auto& e : g.edges)
        if (e.multiplicity != (e.cut ? 2 : 1)) return std::nullopt;
    std::optional<ClaspWitness> best;
    for (int v2 = 0; v2 < g.vertices; ++v2) {
        std::vector<int> ks;
        for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
            const auto& e = g.edges[static_cast<std::size_t>(k)];
            if (!e.cut && (e.u == v2 || e.v == v2)) ks.push_back(k);
        }
        for (int ka : ks) {
            for (int kb : ks) {
                if (ka == kb) continue;
                const auto& ea = g.edges[static_cast<std::size_t>(ka)];
                const auto& eb = g.edges[static_cast<std::size_t>(kb)];
                int v1 = ea.u == v2 ? ea.v : ea.u;
                int v3 = eb.u == v2 ? eb.v : eb.u;
                ClaspWitness w{v1, v2, v3};
                if (best && std::tie(best->v1, best->v2, best->v3) <= std::tie(w.v1, w.v2, w.v3)) continue;
                auto side = component_without(g, ka, kb, v2);
                if (std::find(side.begin(), side.end(), v1) != side.end() ||
                    std::find(side.begin(), side.end(), v3) != side.end())
                    continue;
                std::set<int> in(side.begin(), side.end());
                int inner_edges = 0;
                for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
                    const auto& e = g.edges[static_cast<std::size_t>(k)];
                    if (k != ka && k != kb && in.count(e.u) && in.count(e.v)) ++inner_edges;
                }
                if (inner_edges != static_cast<int>(side.size()) - 1) continue;
                best = w;
            }
        }
    }
    return best;
}

bool multigraph_isomorphic(int n, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
    if (a.size() != b.size()) return false;
    auto matrix = [n](const std::vector<std::pair<int, int>>& es) {
        std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (auto [u, v] : es) {
            ++m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (u != v) ++m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        }
        return m;
    };
    auto ma = matrix(a), mb = matrix(b);
    auto signature = [n](const std::vector<std::vector<int>>& m, int v) {
        std::vector<int> row = m[static_cast<std::size_t>(v)];
        int self = row[static_cast<std::size_t>(v)];
        row.erase(row.begin() + v);
        std::sort(row.begin(), row.end());
        row.push_back(self);
        (void)n;
        return row;
    };
    std::vector<std::vector<int>> sa, sb;
    for (int v = 0; v < n; ++v) {
        sa.push_back(signature(ma, v));
        sb.push_back(signature(mb, v));
    }
    {
        auto xa = sa, xb = sb;
        std::sort(xa.begin(), xa.end());
        std::sort(xb.begin(), xb.end());
        if (xa != xb) return false;
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> extend = [&](int v) {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || sa[static_cast<std::size_t>(v)] != sb[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = ma[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] ==
                     mb[static_cast<std::size_t>(w)][static_cast<std::size_t>(map[static_cast<std::size_t>(u)])];
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(v + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return extend(0);
}

Diagram clasp_move(const Diagram& d, const ClaspWitness& w) {
    auto found = claspable(d);
    if (!found) throw DiagramError("diagram is not claspable");
    StateGraph g = a_state_graph(d);
    ReducedGraph r = reduce_graph(g);
    auto has_cycle_edge = [&](int a, int b) {
        auto key = std::minmax(a, b);
        return std::any_of(r.edges.begin(), r.edges.end(),
                           [&](const ReducedEdge& e) { return e.u == key.first && e.v == key.second && !e.cut; });
    };
    if (w.v1 < 0 || w.v3 < 0 || w.v1 >= g.vertices || w.v3 >= g.vertices || w.v1 == w.v3 ||
        !has_cycle_edge(w.v1, w.v2) || !has_cycle_edge(w.v2, w.v3))
        throw DiagramError("invalid clasp witness");

    std::vector<std::pair<int, int>> predicted;
    for (auto [a, b] : g.edges) predicted.emplace_back(a == w.v3 ? w.v1 : a, b == w.v3 ? w.v1 : b);
    predicted.emplace_back(w.v1, w.v3);
    predicted.emplace_back(w.v1, w.v3);

    const auto& circle = g.circle_of_edge;
    for (const auto& f : faces(d)) {
        for (int i : f) {
            for (int j : f) {
                if (i == j) continue;
                int ci = circle[static_cast<std::size_t>(side_edge(d, i))];
                int cj = circle[static_cast<std::size_t>(side_edge(d, j))];
                if (!(ci == w.v1 && cj == w.v3) && !(ci == w.v3 && cj == w.v1)) continue;
                Diagram out = clasp_sides(d, i, j);
                StateGraph h = a_state_graph(out);
                if (h.vertices == g.vertices && multigraph_isomorphic(h.vertices, h.edges, predicted)) return out;
            }
        }
    }
    throw DiagramError("no clasp realizes the predicted A-state graph");
}

std::string to_dot(const ReducedGraph& g) {
    std::ostringstream os;
    os << "graph A {\n";
    for (int v = 0; v < g.vertices; ++v) os << "  " << v << ";\n";
    for (const auto& e : g.edges)
        os << "  " << e.u << " -- " << e.v << " [label=\"" << e.multiplicity << "\"" << (e.cut ? ", style=dashed" : "")
           << "];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const ReducedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"u", e.u}, {"v", e.v}, {"multiplicity", e.multiplicity}, {"role", e.cut ? "cut" : "cycle"}});
    nlohmann::json j{{"vertices", g.vertices}, {"edges", edges}, {"self_loops", g.self_loops}};
    if (is_connected(g)) j["betti"] = betti(g);
    return j;
}

nlohmann::json to_json(const Classification& c) {
    nlohmann::json j{{"family", family_name(c.family)}, {"type", c.type}, {"m", c.m}, {"cycle_edges", c.cycle_edges}};
    if (c.type == 1) j["k"] = c.k;
    if (c.type == 2) {
        j["k1"] = c.k1;
        j["k2"] = c.k2;
        j["x"] = c.x;
    }
    if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
    return j;
}

} // namespace knotpos
