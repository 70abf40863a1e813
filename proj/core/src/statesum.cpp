#include "knotpos/statesum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

namespace knotpos {

namespace {

constexpr int kMaxEnum = 40;

// per-state union-find over at most 2 * kMaxEnum edges
struct SmallUF {
    std::array<std::uint8_t, 2 * kMaxEnum> p{};
    int n;
    explicit SmallUF(int size) : n(size) {
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) {
            p[static_cast<std::size_t>(x)] = p[p[static_cast<std::size_t>(x)]];
            x = p[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[static_cast<std::size_t>(std::max(a, b))] = static_cast<std::uint8_t>(std::min(a, b));
        return true;
    }
};

struct Enumerator {
    int c;
    int loops;
    std::vector<std::array<int, 4>> e;

    explicit Enumerator(const Diagram& d) : c(d.crossing_count()), loops(d.loop_count()) {
        for (const auto& x : d.crossings()) e.push_back(x.e);
    }

    int circles(std::uint64_t bits) const {
        SmallUF uf(2 * c);
        int comps = 2 * c;
        for (int x = 0; x < c; ++x) {
            const auto& q = e[static_cast<std::size_t>(x)];
            if ((bits >> x) & 1U) {
                comps -= uf.unite(q[0], q[1]);
                comps -= uf.unite(q[2], q[3]);
            } else {
                comps -= uf.unite(q[0], q[3]);
                comps -= uf.unite(q[1], q[2]);
            }
        }
        return comps + loops;
    }
};

void check_limit(const Diagram& d, int limit) {
    int c = d.crossing_count();
    if (c > limit)
        throw ResourceError("state sum limit exceeded: " + std::to_string(c) + " crossings > limit " +
                            std::to_string(limit));
    if (c > kMaxEnum) throw ResourceError("state sum supports at most " + std::to_string(kMaxEnum) + " crossings");
}

LaurentPoly1 delta_power(int k) {
    LaurentPoly1 delta(Var::A);
    delta.add_term(8, -1);
    delta.add_term(-8, -1);
    return delta.pow(static_cast<unsigned>(k));
}

} // namespace

StateCircles state_circles(const Diagram& d, const std::vector<bool>& a_choice) {
    StateCircles out;
    out.membership = state_circle_labels(d, a_choice, &out.count);
    return out;
}

void for_each_state(const Diagram& d, const std::function<void(const StateRecord&)>& fn, int max_crossings) {
    check_limit(d, max_crossings);
    Enumerator en(d);
    std::uint64_t total = std::uint64_t{1} << en.c;
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint64_t g = i ^ (i >> 1);
        int a = std::popcount(g);
        fn(StateRecord{g, a, en.c - a, en.circles(g)});
    }
}

LaurentPoly1 kauffman_bracket(const Diagram& d, const StateSumOptions& opt) {
    check_limit(d, opt.max_crossings);
    Enumerator en(d);
    int c = en.c;
    int kmax = c + 1 + en.loops;
    std::uint64_t total = std::uint64_t{1} << c;
    using Table = std::vector<std::uint64_t>; // [a * (kmax + 1) + k]
    auto idx = [kmax](int a, int k) { return static_cast<std::size_t>(a * (kmax + 1) + k); };

    int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    if (c < 14) threads = 1;
    std::vector<Table> parts(static_cast<std::size_t>(threads), Table(static_cast<std::size_t>((c + 1) * (kmax + 1)), 0));
    auto work = [&](int t) {
        Table& tab = parts[static_cast<std::size_t>(t)];
        std::uint64_t lo = total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t);
        std::uint64_t hi = t + 1 == threads ? total : total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t + 1);
        for (std::uint64_t n = lo; n < hi; ++n) {
            std::uint64_t i = opt.reverse_order ? total - 1 - n : n;
            std::uint64_t g = i ^ (i >> 1);
            ++tab[idx(std::popcount(g), en.circles(g))];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    LaurentPoly1 out(Var::A);
    for (int k = 1; k <= kmax; ++k) {
        LaurentPoly1 byA(Var::A);
        for (int a = 0; a <= c; ++a) {
            std::uint64_t n = 0;
            for (const auto& tab : parts) n += tab[idx(a, k)];
            if (n) byA.add_term(4 * (2 * a - c), Int(static_cast<unsigned long>(n)));
        }
        if (!byA.is_zero()) out += byA * delta_power(k - 1);
    }
    return out;
}

LaurentPoly1 normalized_bracket(const Diagram& d, const StateSumOptions& opt) {
    int w = d.writhe();
    // (-A)^(-3w)
    Int sign = (w % 2 == 0) ? 1 : -1;
    return kauffman_bracket(d, opt) * LaurentPoly1::monomial(Var::A, -12 * w, sign);
}

LaurentPoly1 jones(const Diagram& d, const StateSumOptions& opt) {
    LaurentPoly1 f = normalized_bracket(d, opt);
    LaurentPoly1 v(Var::t, Grid::Half);
    // A^k -> t^(-k/4): quarter exponent 4k becomes -k
    for (auto& [e, c] : f.terms()) v.add_term(-e / 4, c);
    return v;
}

DegreeBounds degree_bounds(const DiagramStats& st) {
    DegreeBounds b;
    b.min_bound = Rational::of(st.c - st.A + 1 - 3 * st.q, 2);
    b.max_bound = Rational::of(2 * st.c + st.B - 1 - 3 * st.q, 2);
    return b;
}

DegreeBounds degree_bounds(const Diagram& d) {
    DegreeBounds b = degree_bounds(stats(d));
    Adequacy ad = adequacy(d);
    b.min_tight = ad.a_adequate;
    b.max_tight = ad.b_adequate;
    return b;
}

Adequacy adequacy(const Diagram& d) {
    int c = d.crossing_count();
    auto la = state_circle_labels(d, std::vector<bool>(static_cast<std::size_t>(c), true));
    auto lb = state_circle_labels(d, std::vector<bool>(static_cast<std::size_t>(c), false));
    Adequacy out{true, true};
    for (const auto& x : d.crossings()) {
        if (la[static_cast<std::size_t>(x.e[0])] == la[static_cast<std::size_t>(x.e[2])]) out.a_adequate = false;
        if (lb[static_cast<std::size_t>(x.e[0])] == lb[static_cast<std::size_t>(x.e[1])]) out.b_adequate = false;
    }
    return out;
}

} // namespace knotpos
