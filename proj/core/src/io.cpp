#include "knotpos/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace knotpos {

namespace {

struct Scanner {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(i));
    }
    bool eat_word(const char* w) {
        skip();
        std::size_t n = std::char_traits<char>::length(w);
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    int integer() {
        skip();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected an integer at offset " + std::to_string(start));
        return std::stoi(s.substr(start, i - start));
    }
    bool done() {
        skip();
        return i == s.size();
    }
};

constexpr int dart_of(int x, int s) { return 4 * x + s; }

// faces of a raw 4-valent map
int raw_face_count(const std::vector<int>& link) {
    std::vector<char> seen(link.size(), 0);
    int f = 0;
    for (std::size_t start = 0; start < link.size(); ++start) {
        if (seen[start]) continue;
        ++f;
        int cur = static_cast<int>(start);
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            int o = link[static_cast<std::size_t>(cur)];
            cur = (o & ~3) | ((o + 1) & 3);
        } while (cur != static_cast<int>(start));
    }
    return f;
}

} // namespace

Diagram parse_pd(const std::string& text) {
    Scanner sc{text};
    sc.eat_word("PD");
    sc.expect('[');
    std::vector<std::array<int, 4>> tuples;
    if (!sc.eat(']')) {
        do {
            sc.eat_word("X");
            sc.expect('[');
            std::vector<int> t;
            do t.push_back(sc.integer());
            while (sc.eat(','));
            sc.expect(']');
            if (t.size() != 4)
                throw ParseError("crossing " + std::to_string(tuples.size() + 1) + " has " + std::to_string(t.size()) +
                                 " labels, expected 4");
            tuples.push_back({t[0], t[1], t[2], t[3]});
        } while (sc.eat(','));
        sc.expect(']');
    }
    if (!sc.done()) throw ParseError("trailing characters after PD code");
    if (tuples.empty()) return Diagram::unknot();

    std::map<int, std::vector<Port>> uses;
    for (int x = 0; x < static_cast<int>(tuples.size()); ++x)
        for (int j = 0; j < 4; ++j) uses[tuples[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)]].push_back({x, j});
    MapBuilder mb;
    for (std::size_t x = 0; x < tuples.size(); ++x) mb.add_crossing(1);
    for (auto& [label, ports] : uses) {
        if (ports.size() != 2)
            throw ParseError("dangling arc " + std::to_string(label) + " (appears " + std::to_string(ports.size()) +
                             " times)");
        mb.connect(ports[0], ports[1]);
    }
    for (int x = 0; x < static_cast<int>(tuples.size()); ++x) {
        const auto& t = tuples[static_cast<std::size_t>(x)];
        mb.hint({x, 0}, 2);
        // over-strand direction from consecutive labels, used only where no under-passage decides it
        bool over_from_3 = t[1] - t[3] == 1 || t[3] - t[1] > 1;
        mb.hint({x, over_from_3 ? 3 : 1}, 1);
    }
    Diagram d;
    try {
        d = mb.build(true);
    } catch (const DiagramError& e) {
        throw ParseError(std::string("inconsistent PD code: ") + e.what());
    }
    if (!d.is_planar()) throw ParseError("PD code does not describe a planar diagram");
    if (d.is_split()) throw ParseError("split diagrams are not supported");
    return d;
}

std::string serialize_pd(const Diagram& d) {
    if (d.crossing_count() == 0) {
        if (d.loop_count() != 1) throw DiagramError("split unlink has no PD code");
        return "PD[]";
    }
    if (d.loop_count() > 0) throw DiagramError("split diagram has no PD code");
    std::ostringstream os;
    os << "PD[";
    for (int x = 0; x < d.crossing_count(); ++x) {
        const auto& e = d.crossing(x).e;
        if (x) os << ", ";
        os << "X[" << e[0] + 1 << "," << e[1] + 1 << "," << e[2] + 1 << "," << e[3] + 1 << "]";
    }
    os << "]";
    return os.str();
}

DTCode parse_dt(const std::string& text) {
    Scanner sc{text};
    sc.eat_word("DT");
    sc.expect('[');
    DTCode code;
    if (!sc.eat(']')) {
        do code.push_back(sc.integer());
        while (sc.eat(','));
        sc.expect(']');
    }
    if (!sc.done()) throw ParseError("trailing characters after DT code");
    std::vector<char> seen(code.size() + 1, 0);
    for (int v : code) {
        int a = std::abs(v);
        if (a % 2 != 0) throw ParseError("DT entry " + std::to_string(v) + " is odd");
        if (a < 2 || a > 2 * static_cast<int>(code.size()))
            throw ParseError("DT entry " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(a / 2)]++) throw ParseError("DT entry " + std::to_string(a) + " repeated");
    }
    return code;
}

std::string format_dt(const DTCode& code) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < code.size(); ++k) os << (k ? ", " : "") << code[k];
    os << "]";
    return os.str();
}

Diagram realize_dt(const DTCode& code, MirrorPolicy policy, int max_crossings) {
    int c = static_cast<int>(code.size());
    if (c == 0) return Diagram::unknot();
    if (c > max_crossings)
        throw DiagramError("DT realization limit exceeded: " + std::to_string(c) + " > " + std::to_string(max_crossings));
    if (c > 31) throw DiagramError("DT realization supports at most 31 crossings");
    {
        std::vector<char> seen(static_cast<std::size_t>(c + 1), 0);
        for (int v : code) {
            int a = std::abs(v);
            if (a % 2 || a < 2 || a > 2 * c || seen[static_cast<std::size_t>(a / 2)]++)
                throw ParseError("invalid DT code " + format_dt(code));
        }
    }
    // passage p (1-based) lies on crossing xing[p]; odd passages use slots 0 -> 2
    std::vector<int> xing(static_cast<std::size_t>(2 * c + 1));
    for (int k = 0; k < c; ++k) {
        xing[static_cast<std::size_t>(2 * k + 1)] = k;
        xing[static_cast<std::size_t>(std::abs(code[static_cast<std::size_t>(k)]))] = k;
    }
    auto assemble = [&](std::uint32_t bits) {
        std::vector<int> link(static_cast<std::size_t>(4 * c), -1);
        auto in_slot = [&](int p) {
            if (p % 2) return 0;
            return ((bits >> xing[static_cast<std::size_t>(p)]) & 1U) ? 3 : 1;
        };
        for (int p = 1; p <= 2 * c; ++p) {
            int q = p == 2 * c ? 1 : p + 1;
            int out = dart_of(xing[static_cast<std::size_t>(p)], (in_slot(p) + 2) & 3);
            int in = dart_of(xing[static_cast<std::size_t>(q)], in_slot(q));
            link[static_cast<std::size_t>(out)] = in;
            link[static_cast<std::size_t>(in)] = out;
        }
        return link;
    };
    std::optional<std::uint32_t> found;
    for (std::uint32_t bits = 0; bits < (1U << (c - 1)); ++bits) {
        auto link = assemble(bits << 1);
        if (raw_face_count(link) == c + 2) {
            found = bits << 1;
            break;
        }
    }
    if (!found) throw ParseError("DT code " + format_dt(code) + " is not realizable in the plane");

    auto build = [&](std::uint32_t bits) {
        MapBuilder mb;
        for (int k = 0; k < c; ++k) mb.add_crossing(code[static_cast<std::size_t>(k)] > 0 ? 0 : 1);
        auto link = assemble(bits);
        for (std::size_t dd = 0; dd < link.size(); ++dd)
            if (static_cast<int>(dd) < link[dd])
                mb.connect({static_cast<int>(dd) >> 2, static_cast<int>(dd) & 3}, {link[dd] >> 2, link[dd] & 3});
        for (int k = 0; k < c; ++k) {
            mb.hint({k, 0}, 2);
            mb.hint({k, ((bits >> k) & 1U) ? 3 : 1}, 2);
        }
        return mb.build(true);
    };
    std::uint32_t all = (1U << c) - 1;
    Diagram given = build(*found);
    if (policy == MirrorPolicy::AsGiven) return given;
    Diagram mirrored = build(*found ^ all);
    if (policy == MirrorPolicy::Mirrored) return mirrored;
    return mirrored.negative_count() < given.negative_count() ? mirrored : given;
}

DTCode extract_dt(const Diagram& d) {
    if (d.crossing_count() == 0) return {};
    if (d.component_count() != 1) throw DiagramError("DT codes describe knots only");
    const auto& path = d.components()[0];
    int c = d.crossing_count();
    std::vector<std::array<int, 2>> passages(static_cast<std::size_t>(c), {0, 0});
    std::vector<int> fill(static_cast<std::size_t>(c), 0);
    std::vector<char> under(static_cast<std::size_t>(2 * c + 1), 0);
    for (std::size_t k = 0; k < path.size(); ++k) {
        Port h = d.head(path[k]);
        int p = static_cast<int>(k) + 1;
        passages[static_cast<std::size_t>(h.x)][static_cast<std::size_t>(fill[static_cast<std::size_t>(h.x)]++)] = p;
        under[static_cast<std::size_t>(p)] = h.slot == 0;
    }
    std::vector<int> odd_to_even(static_cast<std::size_t>(2 * c + 1), 0);
    for (auto [p1, p2] : passages) {
        if ((p1 + p2) % 2 == 0) throw DiagramError("diagram has a crossing between passages of equal parity");
        int odd = p1 % 2 ? p1 : p2, even = p1 % 2 ? p2 : p1;
        odd_to_even[static_cast<std::size_t>(odd)] = under[static_cast<std::size_t>(even)] ? even : -even;
    }
    DTCode out;
    for (int k = 0; k < c; ++k) out.push_back(odd_to_even[static_cast<std::size_t>(2 * k + 1)]);
    return out;
}

nlohmann::json to_json(const Diagram& d) {
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& c : d.crossings()) xs.push_back({c.e[0], c.e[1], c.e[2], c.e[3], c.positive ? 1 : -1});
    return {{"crossings", xs}, {"loops", d.loop_count()}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
    std::vector<Crossing> xs;
    try {
        for (const auto& t : j.at("crossings")) {
            if (t.size() != 5) throw ParseError("crossing record must be [e0, e1, e2, e3, sign]");
            int sign = t[4].get<int>();
            if (sign != 1 && sign != -1) throw ParseError("crossing sign must be 1 or -1");
            xs.push_back({{t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()}, sign == 1});
        }
        return Diagram::from_crossings(std::move(xs), j.value("loops", 0));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
}

Diagram parse_diagram(const std::string& text, const std::string& format, MirrorPolicy policy) {
    std::string fmt = format;
    if (fmt == "auto") {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) throw ParseError("empty input");
        if (text.compare(first, 2, "PD") == 0) {
            fmt = "pd";
        } else if (text[first] == '{') {
            fmt = "json";
        } else {
            auto next = text.find_first_not_of(" \t\r\n", text[first] == '[' ? first + 1 : first);
            fmt = (next != std::string::npos && text[next] == '[') ? "pd" : "dt";
        }
    }
    if (fmt == "pd") return parse_pd(text);
    if (fmt == "dt") return realize_dt(parse_dt(text), policy);
    if (fmt == "json") {
        try {
            auto j = nlohmann::json::parse(text);
            return diagram_from_json(j.contains("diagram") ? j.at("diagram") : j);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
    }
    throw ParseError("unknown input format '" + format + "'");
}

} // namespace knotpos
