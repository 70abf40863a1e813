#include "knotpos/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "union_find.hpp"

namespace knotpos {

namespace {

constexpr int slot_of(int dart) { return dart & 3; }
constexpr int xing_of(int dart) { return dart >> 2; }
constexpr int dart_of(int x, int s) { return 4 * x + s; }

} // namespace

// ---- MapBuilder

int MapBuilder::add_crossing(int over_axis) {
    int x = crossing_count();
    link_.insert(link_.end(), 4, -1);
    over_axis_.push_back(over_axis);
    hint_slot_.push_back({-1, -1});
    hint_strength_.push_back({0, 0});
    return x;
}

void MapBuilder::connect(Port a, Port b) {
    int da = dart_of(a.x, a.slot), db = dart_of(b.x, b.slot);
    if (a.x < 0 || b.x < 0 || a.x >= crossing_count() || b.x >= crossing_count())
        throw DiagramError("connect: unknown crossing");
    if (da == db) throw DiagramError("connect: a slot cannot be glued to itself");
    if (link_[static_cast<std::size_t>(da)] != -1 || link_[static_cast<std::size_t>(db)] != -1)
        throw DiagramError("connect: slot already in use");
    link_[static_cast<std::size_t>(da)] = db;
    link_[static_cast<std::size_t>(db)] = da;
}

void MapBuilder::hint(Port p, int strength) {
    auto& hs = hint_slot_.at(static_cast<std::size_t>(p.x));
    auto& st = hint_strength_.at(static_cast<std::size_t>(p.x));
    int axis = p.slot & 1;
    hs[static_cast<std::size_t>(axis)] = static_cast<int8_t>(p.slot);
    st[static_cast<std::size_t>(axis)] = static_cast<int8_t>(strength);
}

Port MapBuilder::unlink(Port p) {
    int da = dart_of(p.x, p.slot);
    int db = link_.at(static_cast<std::size_t>(da));
    if (db < 0) throw DiagramError("unlink: slot is free");
    link_[static_cast<std::size_t>(da)] = -1;
    link_[static_cast<std::size_t>(db)] = -1;
    return Port{xing_of(db), slot_of(db)};
}

int MapBuilder::hint_slot(int x, int axis) const {
    return hint_slot_.at(static_cast<std::size_t>(x))[static_cast<std::size_t>(axis)];
}

MapBuilder MapBuilder::contracted(const std::vector<int>& removed,
                                  const std::vector<std::array<int, 4>>& pairing) const {
    int c = crossing_count();
    std::vector<int> gone(static_cast<std::size_t>(c), -1);
    for (std::size_t k = 0; k < removed.size(); ++k) {
        int x = removed[k];
        if (x < 0 || x >= c) throw DiagramError("unknown crossing id " + std::to_string(x));
        if (gone[static_cast<std::size_t>(x)] != -1) throw DiagramError("crossing listed twice");
        gone[static_cast<std::size_t>(x)] = static_cast<int>(k);
    }
    auto partner = [&](int dart) {
        int x = xing_of(dart);
        return dart_of(x, pairing[static_cast<std::size_t>(gone[static_cast<std::size_t>(x)])]
                              [static_cast<std::size_t>(slot_of(dart))]);
    };
    std::vector<int> newid(static_cast<std::size_t>(c), -1);
    MapBuilder out;
    for (int x = 0; x < c; ++x) {
        if (gone[static_cast<std::size_t>(x)] != -1) continue;
        newid[static_cast<std::size_t>(x)] = out.add_crossing(over_axis_[static_cast<std::size_t>(x)]);
        out.hint_slot_.back() = hint_slot_[static_cast<std::size_t>(x)];
        out.hint_strength_.back() = hint_strength_[static_cast<std::size_t>(x)];
    }
    std::vector<char> seen(link_.size(), 0);
    for (int x = 0; x < c; ++x) {
        if (gone[static_cast<std::size_t>(x)] != -1) continue;
        for (int s = 0; s < 4; ++s) {
            int t = link_[static_cast<std::size_t>(dart_of(x, s))];
            while (gone[static_cast<std::size_t>(xing_of(t))] != -1) {
                seen[static_cast<std::size_t>(t)] = 1;
                int p = partner(t);
                seen[static_cast<std::size_t>(p)] = 1;
                t = link_[static_cast<std::size_t>(p)];
            }
            int a = dart_of(newid[static_cast<std::size_t>(x)], s);
            int b = dart_of(newid[static_cast<std::size_t>(xing_of(t))], slot_of(t));
            out.link_[static_cast<std::size_t>(a)] = b;
        }
    }
    out.loops_ = loops_;
    for (int x : removed) {
        for (int s = 0; s < 4; ++s) {
            int start = dart_of(x, s);
            if (seen[static_cast<std::size_t>(start)]) continue;
            int t = start;
            do {
                seen[static_cast<std::size_t>(t)] = 1;
                int p = partner(t);
                seen[static_cast<std::size_t>(p)] = 1;
                t = link_[static_cast<std::size_t>(p)];
            } while (t != start);
            ++out.loops_;
        }
    }
    return out;
}

Diagram MapBuilder::build(bool strict) const {
    int c = crossing_count();
    for (std::size_t d = 0; d < link_.size(); ++d)
        if (link_[d] < 0) throw DiagramError("dangling arc at crossing " + std::to_string(d / 4));

    // in_slot[x][axis] once oriented
    std::vector<std::array<int, 2>> in_slot(static_cast<std::size_t>(c), {-1, -1});
    struct Visit {
        int x, slot;
    };
    std::vector<std::vector<Visit>> comps;
    for (int x0 = 0; x0 < c; ++x0) {
        for (int axis0 = 0; axis0 < 2; ++axis0) {
            if (in_slot[static_cast<std::size_t>(x0)][static_cast<std::size_t>(axis0)] != -1) continue;
            std::vector<Visit> seq;
            int x = x0, s = axis0;
            do {
                seq.push_back({x, s});
                in_slot[static_cast<std::size_t>(x)][static_cast<std::size_t>(s & 1)] = -2;
                int nxt = link_[static_cast<std::size_t>(dart_of(x, (s + 2) & 3))];
                x = xing_of(nxt);
                s = slot_of(nxt);
            } while (!(x == x0 && s == axis0));
            // pick direction from the strongest hint met first
            int best = 0;
            bool forward = true;
            for (auto& v : seq) {
                int st = hint_strength_[static_cast<std::size_t>(v.x)][static_cast<std::size_t>(v.slot & 1)];
                if (st > best) {
                    best = st;
                    forward = hint_slot_[static_cast<std::size_t>(v.x)][static_cast<std::size_t>(v.slot & 1)] == v.slot;
                    if (best == 2) break;
                }
            }
            if (!forward) {
                // reversed traversal from the same starting strand
                std::vector<Visit> rev;
                rev.reserve(seq.size());
                rev.push_back({seq[0].x, (seq[0].slot + 2) & 3});
                for (std::size_t k = seq.size() - 1; k >= 1; --k) rev.push_back({seq[k].x, (seq[k].slot + 2) & 3});
                seq.swap(rev);
            }
            for (auto& v : seq) {
                auto axis = static_cast<std::size_t>(v.slot & 1);
                if (strict && hint_strength_[static_cast<std::size_t>(v.x)][axis] == 2 &&
                    hint_slot_[static_cast<std::size_t>(v.x)][axis] != v.slot)
                    throw DiagramError("inconsistent orientation at crossing " + std::to_string(v.x));
                in_slot[static_cast<std::size_t>(v.x)][axis] = v.slot;
            }
            comps.push_back(std::move(seq));
        }
    }

    // label edges along components: the edge entering the k-th visit gets base + k
    std::vector<int> label(link_.size(), -1);
    int next = 0;
    for (auto& seq : comps) {
        for (auto& v : seq) {
            int in = dart_of(v.x, v.slot);
            label[static_cast<std::size_t>(in)] = next;
            label[static_cast<std::size_t>(link_[static_cast<std::size_t>(in)])] = next;
            ++next;
        }
    }

    Diagram d;
    d.loops_ = loops_;
    d.x_.resize(static_cast<std::size_t>(c));
    for (int x = 0; x < c; ++x) {
        int oa = over_axis_[static_cast<std::size_t>(x)];
        int uin = in_slot[static_cast<std::size_t>(x)][static_cast<std::size_t>(1 - oa)];
        int oin = in_slot[static_cast<std::size_t>(x)][static_cast<std::size_t>(oa)];
        Crossing& cr = d.x_[static_cast<std::size_t>(x)];
        for (int j = 0; j < 4; ++j) cr.e[static_cast<std::size_t>(j)] = label[static_cast<std::size_t>(dart_of(x, (uin + j) & 3))];
        cr.positive = ((oin - uin + 4) & 3) == 3;
    }
    d.index();
    return d;
}

// ---- Diagram

Diagram Diagram::from_crossings(std::vector<Crossing> xs, int loops) {
    Diagram d;
    d.x_ = std::move(xs);
    d.loops_ = loops;
    d.index();
    for (int e = 0; e < d.edge_count(); ++e)
        if (d.head_[static_cast<std::size_t>(e)].x < 0 || d.tail_[static_cast<std::size_t>(e)].x < 0)
            throw DiagramError("edge " + std::to_string(e) + " is not attached at both ends");
    return d;
}

Diagram Diagram::unknot(int loops) {
    Diagram d;
    d.loops_ = loops;
    d.index();
    return d;
}

void Diagram::index() {
    int e = edge_count();
    head_.assign(static_cast<std::size_t>(e), Port{});
    tail_.assign(static_cast<std::size_t>(e), Port{});
    for (int x = 0; x < crossing_count(); ++x) {
        const Crossing& cr = x_[static_cast<std::size_t>(x)];
        for (int j = 0; j < 4; ++j) {
            int id = cr.e[static_cast<std::size_t>(j)];
            if (id < 0 || id >= e) throw DiagramError("edge label out of range");
            Port& slot = cr.is_in(j) ? head_[static_cast<std::size_t>(id)] : tail_[static_cast<std::size_t>(id)];
            if (slot.x != -1) throw DiagramError("edge " + std::to_string(id) + " has inconsistent orientation");
            slot = Port{x, j};
        }
    }
    comp_.assign(static_cast<std::size_t>(e), -1);
    comps_.clear();
    for (int s = 0; s < e; ++s) {
        if (comp_[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> path;
        int cur = s;
        do {
            comp_[static_cast<std::size_t>(cur)] = static_cast<int>(comps_.size());
            path.push_back(cur);
            Port h = head_[static_cast<std::size_t>(cur)];
            cur = x_[static_cast<std::size_t>(h.x)].e[static_cast<std::size_t>((h.slot + 2) & 3)];
        } while (cur != s);
        comps_.push_back(std::move(path));
    }
}

int Diagram::negative_count() const {
    return static_cast<int>(std::count_if(x_.begin(), x_.end(), [](const Crossing& c) { return !c.positive; }));
}

int Diagram::writhe() const { return crossing_count() - 2 * negative_count(); }

std::vector<std::vector<int>> Diagram::pieces() const {
    UnionFind uf(crossing_count());
    for (int e = 0; e < edge_count(); ++e) uf.unite(head(e).x, tail(e).x);
    std::vector<int> root_to_piece(static_cast<std::size_t>(crossing_count()), -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < crossing_count(); ++x) {
        int r = uf.find(x);
        if (root_to_piece[static_cast<std::size_t>(r)] == -1) {
            root_to_piece[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(root_to_piece[static_cast<std::size_t>(r)])].push_back(x);
    }
    return out;
}

int Diagram::piece_count() const { return static_cast<int>(pieces().size()) + loops_; }

std::vector<std::vector<int>> faces(const Diagram& d) {
    int n = 4 * d.crossing_count();
    auto other = [&](int dart) {
        int x = xing_of(dart), s = slot_of(dart);
        int e = d.crossing(x).e[static_cast<std::size_t>(s)];
        Port p = d.crossing(x).is_in(s) ? d.tail(e) : d.head(e);
        return dart_of(p.x, p.slot);
    };
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> f;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            f.push_back(cur);
            int o = other(cur);
            cur = dart_of(xing_of(o), (slot_of(o) + 1) & 3);
        } while (cur != start);
        out.push_back(std::move(f));
    }
    return out;
}

int Diagram::face_count() const { return static_cast<int>(faces(*this).size()); }

bool Diagram::is_planar() const {
    int p = static_cast<int>(pieces().size());
    return face_count() == crossing_count() + 2 * p;
}

MapBuilder Diagram::to_builder() const {
    MapBuilder b;
    for (int x = 0; x < crossing_count(); ++x) b.add_crossing(1);
    for (int e = 0; e < edge_count(); ++e) b.connect(tail(e), head(e));
    for (int x = 0; x < crossing_count(); ++x) {
        b.hint({x, 0}, 2);
        b.hint({x, x_[static_cast<std::size_t>(x)].over_in()}, 2);
    }
    b.add_loops(loops_);
    return b;
}

// ---- state circles

std::vector<int> state_circle_labels(const Diagram& d, const std::vector<bool>& a_choice, int* count) {
    int c = d.crossing_count();
    if (static_cast<int>(a_choice.size()) != c) throw DiagramError("state length does not match crossing count");
    UnionFind uf(d.edge_count());
    for (int x = 0; x < c; ++x) {
        const auto& e = d.crossing(x).e;
        if (a_choice[static_cast<std::size_t>(x)]) {
            uf.unite(e[0], e[1]);
            uf.unite(e[2], e[3]);
        } else {
            uf.unite(e[0], e[3]);
            uf.unite(e[1], e[2]);
        }
    }
    std::vector<int> lab(static_cast<std::size_t>(d.edge_count()), -1);
    std::vector<int> root_id(static_cast<std::size_t>(d.edge_count()), -1);
    int k = 0;
    for (int e = 0; e < d.edge_count(); ++e) {
        int r = uf.find(e);
        if (root_id[static_cast<std::size_t>(r)] == -1) root_id[static_cast<std::size_t>(r)] = k++;
        lab[static_cast<std::size_t>(e)] = root_id[static_cast<std::size_t>(r)];
    }
    if (count) *count = k + d.loop_count();
    return lab;
}

int count_state_circles(const Diagram& d, const std::vector<bool>& a_choice) {
    int k = 0;
    state_circle_labels(d, a_choice, &k);
    return k;
}

static std::vector<bool> oriented_choice(const Diagram& d) {
    std::vector<bool> ch(static_cast<std::size_t>(d.crossing_count()));
    for (int x = 0; x < d.crossing_count(); ++x) ch[static_cast<std::size_t>(x)] = d.crossing(x).positive;
    return ch;
}

std::vector<int> seifert_circle_labels(const Diagram& d, int* count) {
    return state_circle_labels(d, oriented_choice(d), count);
}

int seifert_circle_count(const Diagram& d) { return count_state_circles(d, oriented_choice(d)); }

DiagramStats stats(const Diagram& d) {
    DiagramStats st;
    st.c = d.crossing_count();
    st.n = d.component_count();
    st.s = seifert_circle_count(d);
    st.A = count_state_circles(d, std::vector<bool>(static_cast<std::size_t>(st.c), true));
    st.B = count_state_circles(d, std::vector<bool>(static_cast<std::size_t>(st.c), false));
    st.q = d.negative_count();
    st.writhe = d.writhe();
    st.chi = st.s - st.c;
    return st;
}

// ---- edits

static constexpr std::array<int, 4> kPairA{1, 0, 3, 2};
static constexpr std::array<int, 4> kPairB{3, 2, 1, 0};

Diagram smooth_crossings(const Diagram& d, const std::vector<int>& xs, Smoothing mode) {
    std::vector<std::array<int, 4>> pairing;
    for (int x : xs) {
        if (x < 0 || x >= d.crossing_count()) throw DiagramError("unknown crossing id " + std::to_string(x));
        bool a = mode == Smoothing::A || (mode == Smoothing::Oriented && d.crossing(x).positive);
        pairing.push_back(a ? kPairA : kPairB);
    }
    return d.to_builder().contracted(xs, pairing).build(false);
}

Diagram smooth_crossing(const Diagram& d, int x, Smoothing mode) { return smooth_crossings(d, {x}, mode); }

Diagram switch_crossing(const Diagram& d, int x) {
    if (x < 0 || x >= d.crossing_count()) throw DiagramError("unknown crossing id " + std::to_string(x));
    std::vector<Crossing> xs = d.crossings();
    Crossing& c = xs[static_cast<std::size_t>(x)];
    auto e = c.e;
    if (c.positive)
        c.e = {e[3], e[0], e[1], e[2]};
    else
        c.e = {e[1], e[2], e[3], e[0]};
    c.positive = !c.positive;
    return Diagram::from_crossings(std::move(xs), d.loop_count());
}

} // namespace knotpos
