#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "knotpos/generators.hpp"
#include "knotpos/io.hpp"
#include "knotpos/obstruction.hpp"
#include "knotpos/skein.hpp"
#include "knotpos/stategraph.hpp"
#include "knotpos/statesum.hpp"

using namespace knotpos;

namespace {

struct Input {
    std::string inline_code;
    std::string file;
    std::string format = "auto";
    std::string mirror = "fewest";
};

struct Limits {
    int state = kDefaultStateLimit;
    int skein = kDefaultSkeinLimit;
    std::uint64_t nodes = kDefaultSkeinNodes;
    int threads = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MirrorPolicy mirror_policy(const std::string& s) {
    if (s == "fewest") return MirrorPolicy::FewestNegative;
    if (s == "as-given") return MirrorPolicy::AsGiven;
    return MirrorPolicy::Mirrored;
}

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

Diagram load(const Input& in) {
    if (!in.inline_code.empty() && !in.file.empty()) throw UsageError("give either an inline code or --file, not both");
    std::string text;
    if (!in.file.empty()) {
        if (in.file == "-") {
            text = read_all(std::cin);
        } else {
            std::ifstream f(in.file);
            if (!f) throw std::runtime_error("cannot open " + in.file);
            text = read_all(f);
        }
    } else {
        text = in.inline_code;
    }
    if (blank(text)) throw UsageError("no input diagram (pass a code or --file)");
    if (in.format == "json") return diagram_from_json(nlohmann::json::parse(text));
    return parse_diagram(text, in.format, mirror_policy(in.mirror));
}

void add_input(CLI::App* app, Input& in) {
    app->add_option("code", in.inline_code, "inline PD or DT code");
    app->add_option("-f,--file", in.file, "read the diagram from a file ('-' for stdin)");
    app->add_option("--format", in.format, "input format")->check(CLI::IsMember({"auto", "pd", "dt", "json"}));
    app->add_option("--mirror", in.mirror, "DT realization choice")
        ->check(CLI::IsMember({"fewest", "as-given", "mirrored"}));
}

void add_limits(CLI::App* app, Limits& lim) {
    app->add_option("--state-limit", lim.state, "max crossings for the state sum")->envname("KNOTPOS_STATE_LIMIT");
    app->add_option("--skein-limit", lim.skein, "max crossings for skein recursion")->envname("KNOTPOS_SKEIN_LIMIT");
    app->add_option("--skein-nodes", lim.nodes, "skein node cap")->envname("KNOTPOS_SKEIN_NODES");
    app->add_option("--threads", lim.threads, "state sum threads (0: all cores)")->envname("KNOTPOS_THREADS");
}

StateSumOptions state_options(const Limits& lim) {
    StateSumOptions o;
    o.max_crossings = lim.state;
    o.threads = lim.threads;
    return o;
}

SkeinOptions skein_options(const Limits& lim) {
    SkeinOptions o;
    o.max_crossings = lim.skein;
    o.max_nodes = lim.nodes;
    return o;
}

void print_text(const nlohmann::json& j, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array() && !j.empty() && j.front().is_structured()) {
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const nlohmann::json& j, bool text) {
    if (text)
        print_text(j);
    else
        std::cout << j.dump(2) << "\n";
}

nlohmann::json invariants_report(const Diagram& d, const Limits& lim) {
    DiagramStats st = stats(d);
    nlohmann::json out{{"schema", kReportSchema},
                       {"stats",
                        {{"crossings", st.c},
                         {"components", st.n},
                         {"seifert_circles", st.s},
                         {"a_circles", st.A},
                         {"b_circles", st.B},
                         {"negative_crossings", st.q},
                         {"writhe", st.writhe}}}};
    out["bracket"] = kauffman_bracket(d, state_options(lim)).str();
    out["jones"] = jones(d, state_options(lim)).str();
    ConwayRoute route{};
    out["conway"] = conway_auto(d, skein_options(lim), &route).str();
    out["conway_route"] = route_name(route);
    if (d.crossing_count() <= lim.skein)
        out["homfly"] = homfly(d, skein_options(lim)).str();
    else
        out["homfly"] = nullptr;
    return out;
}

Diagram generate(const std::string& kind, const std::vector<int>& args, const std::string& name) {
    auto need = [&](std::size_t k) {
        if (args.size() != k) throw UsageError("generate " + kind + " takes " + std::to_string(k) + " integer argument(s)");
    };
    if (kind == "torus") {
        need(1);
        return torus_2_2p(args[0]);
    }
    if (kind == "braid") {
        need(1);
        return torus_braid(args[0]);
    }
    if (kind == "pretzel") {
        need(3);
        return pretzel(args[0], args[1], args[2]);
    }
    if (kind == "knot") {
        need(0);
        return named_knot(name);
    }
    if (kind == "dw") {
        need(1);
        Diagram base = named_knot(name);
        return args[0] == 0 ? base : insert_positive_loops(base, family_arc(base), args[0]);
    }
    throw UsageError("unknown generator " + kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knot invariants and positivity obstructions for link diagrams"};
    app.require_subcommand(1);
    bool text = false;
    app.add_flag("--text", text, "human-readable output instead of JSON");
    Input in;
    Limits lim;

    auto* inv = app.add_subcommand("invariants", "bracket, Jones, Conway and HOMFLY polynomials");
    add_input(inv, in);
    add_limits(inv, lim);

    bool dot = false;
    auto* cls = app.add_subcommand("classify", "A-state graph and Balanced/Burdened classification");
    add_input(cls, in);
    cls->add_flag("--dot", dot, "print the reduced A-state graph in DOT");

    auto* obs = app.add_subcommand("obstruct", "positivity obstruction report");
    add_input(obs, in);
    add_limits(obs, lim);

    std::string kind, name, to = "pd", out_file;
    std::vector<int> gen_args;
    auto* gen = app.add_subcommand("generate", "write a fixture diagram");
    gen->add_option("kind", kind, "torus P | braid N | pretzel P Q R | knot | dw W")
        ->required()
        ->check(CLI::IsMember({"torus", "braid", "pretzel", "knot", "dw"}));
    gen->add_option("args", gen_args, "integer parameters")->allow_extra_args();
    gen->add_option("--name", name, "named knot for 'knot' and 'dw'")->check(CLI::IsMember(named_knots()));
    gen->add_option("--to", to, "output format")->check(CLI::IsMember({"pd", "dt", "json"}));
    gen->add_option("-o,--output", out_file, "output file");

    int w_max = 3;
    int family_state = 25;
    auto* ver = app.add_subcommand("verify-claims", "check the D_w family claims for an almost-positive base");
    add_input(ver, in);
    ver->add_option("--name", name, "named base knot instead of an input code")->check(CLI::IsMember(named_knots()));
    ver->add_option("--w-max", w_max, "largest w")->check(CLI::NonNegativeNumber);
    ver->add_option("--state-limit", family_state, "max crossings for the state sum")->envname("KNOTPOS_STATE_LIMIT");
    ver->add_option("--skein-limit", lim.skein, "max crossings for skein recursion")->envname("KNOTPOS_SKEIN_LIMIT");
    ver->add_option("--threads", lim.threads, "state sum threads")->envname("KNOTPOS_THREADS");

    auto* trace = app.add_subcommand("bracket-trace", "CSV of all Kauffman states");
    add_input(trace, in);
    trace->add_option("--state-limit", lim.state, "max crossings for the state sum")->envname("KNOTPOS_STATE_LIMIT");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) {
            emit(invariants_report(load(in), lim), text);
        } else if (cls->parsed()) {
            Diagram d = load(in);
            ReducedGraph g = reduce_graph(a_state_graph(d));
            if (dot) {
                std::cout << to_dot(g);
            } else {
                emit(nlohmann::json{{"schema", kReportSchema},
                                    {"classification", to_json(classify(d))},
                                    {"graph", to_json(g)},
                                    {"claspable", [&]() -> nlohmann::json {
                                         auto w = claspable(d);
                                         if (!w) return nullptr;
                                         return {w->v1, w->v2, w->v3};
                                     }()}},
                     text);
            }
        } else if (obs->parsed()) {
            AnalyzeOptions opt;
            opt.state = state_options(lim);
            opt.skein = skein_options(lim);
            emit(analyze(load(in), opt), text);
        } else if (gen->parsed()) {
            if ((kind == "knot" || kind == "dw") && name.empty()) throw UsageError("--name is required for " + kind);
            Diagram d = generate(kind, gen_args, name);
            std::string body = to == "pd" ? serialize_pd(d) : to == "dt" ? format_dt(extract_dt(d)) : to_json(d).dump();
            if (out_file.empty()) {
                std::cout << body << "\n";
            } else {
                std::ofstream f(out_file);
                if (!f) throw std::runtime_error("cannot write " + out_file);
                f << body << "\n";
            }
        } else if (ver->parsed()) {
            if (!name.empty() && (!in.inline_code.empty() || !in.file.empty()))
                throw UsageError("give either --name or an input diagram");
            Diagram base = name.empty() ? load(in) : named_knot(name);
            FamilyOptions opt;
            opt.state = state_options(lim);
            opt.state.max_crossings = family_state;
            opt.skein.max_crossings = lim.skein;
            FamilyReport rep = verify_family_claims(base, family_arc(base), w_max, opt);
            emit(to_json(rep), text);
            return 0;
        } else if (trace->parsed()) {
            Diagram d = load(in);
            std::cout << "state,a,b,circles\n";
            for_each_state(
                d,
                [&](const StateRecord& r) {
                    std::string bits;
                    for (int x = d.crossing_count() - 1; x >= 0; --x) bits += ((r.bits >> x) & 1U) ? 'A' : 'B';
                    std::cout << bits << "," << r.a_count << "," << r.b_count << "," << r.circles << "\n";
                },
                lim.state);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
