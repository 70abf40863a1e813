#include "knotpos/skein.hpp"

#include <vector>

#include "union_find.hpp"

namespace knotpos {

int skein_pivot(const Diagram& d) {
    std::vector<char> seen(static_cast<std::size_t>(d.crossing_count()), 0);
    for (const auto& path : d.components()) {
        for (int e : path) {
            Port h = d.head(e);
            if (seen[static_cast<std::size_t>(h.x)]) continue;
            seen[static_cast<std::size_t>(h.x)] = 1;
            if (h.slot == 0) return h.x;
        }
    }
    return -1;
}

namespace {

struct HomflyRing {
    using Value = LaurentPoly2;
    static constexpr bool split_is_zero = false;

    static Value one() { return LaurentPoly2::constant(1); }
    static Value delta() { return LaurentPoly2::monomial(1, -1) - LaurentPoly2::monomial(-1, -1); }
    static Value unlink(int k) { return delta().pow(static_cast<unsigned>(k - 1)); }
    // P(+) = a^-2 P(-) + a^-1 z P(0);  P(-) = a^2 P(+) - a z P(0)
    static Value combine(bool positive, const Value& switched, const Value& smoothed) {
        if (positive) return LaurentPoly2::monomial(-2, 0) * switched + LaurentPoly2::monomial(-1, 1) * smoothed;
        return LaurentPoly2::monomial(2, 0) * switched - LaurentPoly2::monomial(1, 1) * smoothed;
    }
    static Value times(const Value& a, const Value& b) { return a * b; }
};

struct ConwayRing {
    using Value = LaurentPoly1;
    static constexpr bool split_is_zero = true;

    static Value one() { return LaurentPoly1::constant(Var::z, 1); }
    static Value zero() { return LaurentPoly1(Var::z); }
    static Value delta() { return zero(); }
    static Value unlink(int k) { return k == 1 ? one() : zero(); }
    // nabla(+) = nabla(-) + z nabla(0);  nabla(-) = nabla(+) - z nabla(0)
    static Value combine(bool positive, const Value& switched, const Value& smoothed) {
        Value zs = smoothed.shifted(4);
        return positive ? switched + zs : switched - zs;
    }
    static Value times(const Value& a, const Value& b) { return a * b; }
};

template <class Ring>
class Recursor {
  public:
    explicit Recursor(const SkeinOptions& opt) : opt_(opt) {}

    typename Ring::Value run(const Diagram& d) {
        if (d.crossing_count() > opt_.max_crossings)
            throw ResourceError("skein limit exceeded: " + std::to_string(d.crossing_count()) + " crossings > limit " +
                                std::to_string(opt_.max_crossings));
        return eval(d, 0, 0, SkeinBranch::Root);
    }

  private:
    typename Ring::Value eval(const Diagram& d, std::uint64_t parent, int depth, SkeinBranch branch) {
        std::uint64_t node = ++nodes_;
        if (nodes_ > opt_.max_nodes)
            throw ResourceError("skein node limit exceeded (" + std::to_string(opt_.max_nodes) + " nodes)");
        auto emit = [&](int pivot) {
            if (opt_.trace) opt_.trace(SkeinEvent{node, parent, depth, pivot, branch, d.crossing_count()});
        };
        if (d.crossing_count() == 0) {
            emit(-1);
            return Ring::unlink(d.loop_count());
        }
        int pieces = d.piece_count();
        if (pieces > 1) {
            emit(-1);
            if constexpr (Ring::split_is_zero) {
                return Ring::delta();
            } else {
                auto value = Ring::unlink(pieces);
                for (const auto& p : split_pieces(d)) value = Ring::times(value, eval(p, node, depth + 1, SkeinBranch::Piece));
                return value;
            }
        }
        auto nug = nugatory_crossings(d);
        if (!nug.empty()) {
            Diagram sm = smooth_crossing(d, nug.front(), Smoothing::Oriented);
            if (sm.piece_count() > 1) {
                emit(nug.front());
                auto value = Ring::one();
                for (const auto& p : split_pieces(sm)) value = Ring::times(value, eval(p, node, depth + 1, SkeinBranch::Piece));
                return value;
            }
        }
        if (auto bigon = find_r2_bigon(d)) {
            emit(-1);
            return eval(remove_r2_pair(d, bigon->first, bigon->second), node, depth + 1, SkeinBranch::Simplify);
        }
        int x = skein_pivot(d);
        emit(x);
        if (x < 0) return Ring::unlink(d.component_count());
        bool positive = d.crossing(x).positive;
        auto sw = eval(switch_crossing(d, x), node, depth + 1, SkeinBranch::Switch);
        auto sm = eval(smooth_crossing(d, x, Smoothing::Oriented), node, depth + 1, SkeinBranch::Smooth);
        return Ring::combine(positive, sw, sm);
    }

    const SkeinOptions& opt_;
    std::uint64_t nodes_ = 0;
};

} // namespace

LaurentPoly2 homfly(const Diagram& d, const SkeinOptions& opt) { return Recursor<HomflyRing>(opt).run(d); }

LaurentPoly1 conway(const Diagram& d, const SkeinOptions& opt) { return Recursor<ConwayRing>(opt).run(d); }

namespace {

LaurentPoly1 determinant(std::vector<std::vector<LaurentPoly1>> m) {
    std::size_t n = m.size();
    if (n == 0) return LaurentPoly1::constant(Var::t, 1);
    bool flip = false;
    LaurentPoly1 prev = LaurentPoly1::constant(Var::t, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t r = k;
        while (r < n && m[r][k].is_zero()) ++r;
        if (r == n) return LaurentPoly1(Var::t);
        if (r != k) {
            std::swap(m[r], m[k]);
            flip = !flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
            m[i][k] = LaurentPoly1(Var::t);
        }
        prev = m[k][k];
    }
    return flip ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace

LaurentPoly1 conway_alexander(const Diagram& d) {
    if (d.component_count() != 1) throw DiagramError("Alexander route supports knots only");
    int c = d.crossing_count();
    if (c <= 1) return LaurentPoly1::constant(Var::z, 1);
    // over-arcs: edges joined through their over-passages
    UnionFind uf(2 * c);
    for (const auto& x : d.crossings()) uf.unite(x.e[1], x.e[3]);
    std::vector<int> id(static_cast<std::size_t>(2 * c), -1);
    int arcs = 0;
    for (int e = 0; e < 2 * c; ++e)
        if (id[static_cast<std::size_t>(uf.find(e))] == -1) id[static_cast<std::size_t>(uf.find(e))] = arcs++;
    if (arcs != c) throw DiagramError("unexpected arc count in Alexander matrix");
    auto find = [&](int e) { return uf.find(e); };
    auto T = [](int q, long k) { return LaurentPoly1::monomial(Var::t, q, Int(k)); };
    std::vector<std::vector<LaurentPoly1>> m(static_cast<std::size_t>(c), std::vector<LaurentPoly1>(static_cast<std::size_t>(c), LaurentPoly1(Var::t)));
    for (int x = 0; x < c; ++x) {
        const auto& cr = d.crossing(x);
        auto& row = m[static_cast<std::size_t>(x)];
        auto i = static_cast<std::size_t>(id[static_cast<std::size_t>(find(cr.e[0]))]);
        auto j = static_cast<std::size_t>(id[static_cast<std::size_t>(find(cr.e[2]))]);
        auto k = static_cast<std::size_t>(id[static_cast<std::size_t>(find(cr.e[1]))]);
        if (cr.positive) {
            row[k] += T(0, 1) - T(4, 1);
            row[i] += T(4, 1);
            row[j] += T(0, -1);
        } else {
            row[k] += T(4, 1) - T(0, 1);
            row[i] += T(0, 1);
            row[j] += T(4, -1);
        }
    }
    m.pop_back();
    for (auto& row : m) row.pop_back();
    LaurentPoly1 delta = determinant(std::move(m));
    if (delta.is_zero()) throw DiagramError("vanishing Alexander determinant");
    int lo = delta.terms().begin()->first, hi = delta.terms().rbegin()->first;
    delta = delta.shifted(-(lo + hi) / 2);
    Int at_one = 0;
    for (auto& [e, v] : delta.terms()) at_one += v;
    if (abs(at_one) != 1) throw DiagramError("Alexander polynomial does not evaluate to 1 at t = 1");
    if (at_one < 0) delta = -delta;
    // t^k + t^-k in w = z^2: T0 = 2, T1 = w + 2, T(k+1) = (w + 2) T(k) - T(k-1)
    LaurentPoly1 u = LaurentPoly1::monomial(Var::z, 8, 1) + LaurentPoly1::constant(Var::z, 2);
    LaurentPoly1 prev2 = LaurentPoly1::constant(Var::z, 2), cur = u;
    LaurentPoly1 out = LaurentPoly1::constant(Var::z, delta.coeff(0));
    for (int k = 1; 4 * k <= hi - (lo + hi) / 2; ++k) {
        out += cur.scaled(delta.coeff(4 * k));
        LaurentPoly1 nxt = u * cur - prev2;
        prev2 = cur;
        cur = nxt;
    }
    return out;
}

LeadTerm lead_term(const LaurentPoly1& nabla) {
    if (nabla.is_zero()) throw DegreeError("Conway polynomial is zero (split link)");
    auto it = nabla.terms().rbegin();
    return LeadTerm{it->first / 4, it->second};
}

LeadTerm lead_conway(const Diagram& d, const SkeinOptions& opt) { return lead_term(conway(d, opt)); }

} // namespace knotpos
