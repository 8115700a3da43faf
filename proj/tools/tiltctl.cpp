#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "tilt/gathering.hpp"
#include "tilt/generators.hpp"
#include "tilt/gridio.hpp"
#include "tilt/oracle.hpp"

using namespace tilt;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3 };

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

Variant variant_of(const std::string& model, const std::string& merge) {
    Variant v;
    v.model = model == "s1" ? Model::S1 : Model::FT;
    v.merge = merge == "block" ? Merge::Blocking : Merge::Merging;
    return v;
}

std::vector<int> parse_ints(const std::string& s, char sep = ',') {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::string word_or_dash(const std::string& w) { return w.empty() ? "-" : w; }

// ---- gather ----

struct GatherOpts {
    std::string input;
    std::string model = "ft";
    std::string variant = "merge";
    std::string at;
};

int cmd_gather(const GatherOpts& o) {
    GridDocument doc = parse_grid(read_input(o.input));
    if (o.variant == "block") throw Error(ErrorKind::ParseError, "gathering needs the merging variant");
    const Polyomino& P = doc.P;
    bool full = doc.C.empty() || static_cast<int>(doc.C.size()) == P.size();
    Config C = full ? full_config(P) : doc.C;
    std::optional<GatherResult> g;
    if (P.size() == 1) {
        g = GatherResult{"", P.pixel(0), o.model == "s1" ? kS1Merge : kFTMerge};
    } else if (o.model == "s1") {
        auto r = search(P, C, kS1Merge, kDefaultExploreBudget, Goal{[](const Config& c) { return c.size() == 1; }, {}});
        if (r.goal >= 0) {
            GatherResult res;
            res.sequence = r.graph.witness(r.goal);
            res.target = P.pixel(r.graph.configs[r.goal][0]);
            res.model = kS1Merge;
            g = res;
        }
    } else if (!o.at.empty()) {
        if (!full) throw Error(ErrorKind::ParseError, "--at needs the full configuration");
        g = gather_at_pixel(P.boundary(), parse_pixel(o.at));
    } else if (full) {
        g = full_gathering(P.boundary());
    } else {
        g = subset_gathering_exact(P, C);
    }
    if (!g) {
        std::cout << "NOT GATHERABLE\n";
        return kNegative;
    }
    if (!verify_gathering(P, C, *g)) throw Error(ErrorKind::VerificationFailed, "gathering word does not verify");
    std::cout << word_or_dash(g->sequence) << " " << g->target.x << "," << g->target.y << "\n";
    return kOk;
}

// ---- generate ----

struct GenOpts {
    std::string kind;
    std::string out;
    int m = 1;
    bool maze = false;
    std::vector<std::string> automata;
    std::string automatonFile;
    std::string words;
    int sigma = 2;
    std::string primes;
    int count = 2;
    int k = 0;
};

std::vector<TallyAutomaton> tally_input(const GenOpts& o) {
    if (!o.primes.empty()) return gen_prime_tally(parse_ints(o.primes));
    if (o.automata.empty()) return example_tally_pair();
    std::vector<TallyAutomaton> as;
    for (auto& spec : o.automata) {
        auto parts = split(spec, ':');
        if (parts.size() != 3) throw Error(ErrorKind::ParseError, "automaton must be rho:acc,acc:initial");
        as.push_back(tally_cycle(std::stoi(parts[0]), parse_ints(parts[1]), std::stoi(parts[2])));
    }
    return as;
}

void describe_tally(GridDocument& doc, const TallyInstance& t) {
    std::vector<Pixel> reps;
    for (auto& row : t.reps) reps.insert(reps.end(), row.begin(), row.end());
    doc.set("representatives", format_pixel_list(reps));
    doc.set("accepting", format_pixel_list(t.acceptingReps));
    doc.set("goal", format_pixel_list({t.goalBottom}));
    std::string desc;
    long long bound = 1;
    for (auto& a : t.automata) {
        if (!desc.empty()) desc += " ";
        desc += std::to_string(a.rho) + ":";
        for (size_t i = 0; i < a.accepting.size(); ++i) desc += (i ? "," : "") + std::to_string(a.accepting[i]);
        desc += ":" + std::to_string(a.initial);
        bound = std::lcm(bound, static_cast<long long>(a.rho));
    }
    doc.set("automata", desc);
    auto l = tally_intersection_smallest(t.automata, bound);
    doc.set("intersection", l ? std::to_string(*l) : "none");
}

GridDocument generate(const GenOpts& o) {
    GridDocument doc;
    doc.set("kind", o.kind);
    if (o.kind == "pm") {
        auto L = gen_lower_bound(o.m, o.maze);
        doc.P = L.P;
        doc.C = make_config(L.P, {L.classes.at("p")[0], L.classes.at("p")[o.m]});
        doc.set("m", std::to_string(o.m));
        for (auto& [name, px] : L.classes) doc.set("class." + name, format_pixel_list(px));
        for (auto& [name, p] : L.extras) doc.set("extra." + name, format_pixel_list({p}));
        doc.set("representatives", format_pixel_list(L.classes.at("p")));
    } else if (o.kind == "simulate") {
        Acceptor acc = o.automatonFile.empty() ? example_acceptor_a0() : parse_automaton(read_input(o.automatonFile));
        auto S = gen_simulation(acc.a, o.maze);
        doc.P = S.P;
        doc.C = make_config(S.P, {S.reps.at(acc.initial)});
        std::vector<Pixel> acceptPx;
        for (int q : acc.accepting) acceptPx.push_back(S.reps.at(q));
        doc.targets = make_config(S.P, acceptPx);
        doc.set("representatives", format_pixel_list(S.reps));
        doc.set("corners", std::to_string(S.P.boundary().n));
    } else if (o.kind == "tally" || o.kind == "primes") {
        auto as = o.kind == "primes" && o.primes.empty() ? gen_prime_tally(greedy_odd_primes(o.count)) : tally_input(o);
        auto t = gen_tally(as, o.maze);
        doc.P = t.P;
        doc.C = t.C0;
        doc.targets = make_config(t.P, {t.goalBottom});
        describe_tally(doc, t);
    } else if (o.kind == "tiltcover") {
        auto tc = gen_tiltcover(tally_input(o), o.maze);
        doc.P = tc.P;
        doc.C = tc.C;
        doc.targets = tc.target;
        doc.set("cycle", tc.cycle);
        doc.set("variant", "ft-block");
        describe_tally(doc, tc.base);
    } else if (o.kind == "occupancy") {
        auto as = tally_input(o);
        auto oc = gen_occupancy_variant(as, o.k > 0 ? o.k : static_cast<int>(as.size()));
        doc.P = oc.P;
        doc.C = oc.C;
        doc.targets = oc.goal;
        doc.set("probe", format_pixel_list({oc.P.pixel(oc.probe)}));
        doc.set("variant", "ft-block");
        describe_tally(doc, oc.base);
    } else if (o.kind == "scs2") {
        auto s = gen_scs_binary(split(o.words, ','));
        doc.P = s.P;
        doc.C = s.deep();
        doc.set("words", o.words);
    } else if (o.kind == "scsN") {
        std::vector<std::vector<int>> ws;
        for (auto& w : split(o.words, ',')) ws.push_back(parse_ints(w, '.'));
        auto s = gen_scs_general(ws, o.sigma);
        doc.P = s.P;
        doc.C = s.deep();
        doc.set("words", o.words);
        doc.set("bits", std::to_string(s.bits));
    } else {
        throw Error(ErrorKind::ParseError, "unknown kind '" + o.kind + "'");
    }
    return doc;
}

int cmd_generate(const GenOpts& o) {
    write_output(o.out, render_document(generate(o)));
    return kOk;
}

// ---- oracle ----

struct OracleOpts {
    std::string problem;
    std::string input;
    std::string model = "ft";
    std::string variant;
    std::string probe;
    std::string cycle;
    std::string check;
    long long budget = kDefaultExploreBudget;
    bool witness = false;
};

Variant oracle_variant(const OracleOpts& o, const GridDocument& doc, const std::string& fallback) {
    std::string v = o.variant;
    std::string model = o.model;
    if (v.empty()) {
        const std::string* meta = doc.get("variant");
        std::string s = meta ? *meta : fallback;
        auto dash = s.find('-');
        model = s.substr(0, dash);
        v = dash == std::string::npos ? "merge" : s.substr(dash + 1);
    }
    return variant_of(model, v);
}

int print_result(bool found, const std::string& value, const std::optional<std::string>& w, bool witness) {
    if (!found) {
        std::cout << "NONE\n";
        return kNegative;
    }
    std::cout << value;
    if (witness && w) std::cout << " " << word_or_dash(*w);
    std::cout << "\n";
    return kOk;
}

int check_word(const OracleOpts& o, const GridDocument& doc) {
    const Polyomino& P = doc.P;
    std::string w = o.check == "-" ? "" : o.check;
    Config C = doc.C.empty() ? full_config(P) : doc.C;
    bool ok = false;
    if (o.problem == "sgs") {
        ok = apply(P, C, w, kFTMerge).size() == 1;
    } else if (o.problem == "occupancy") {
        int p = P.index(parse_pixel(o.probe.empty() ? *doc.get("probe") : o.probe));
        Config r = apply(P, C, w, oracle_variant(o, doc, "ft-block"));
        ok = std::binary_search(r.begin(), r.end(), p);
    } else if (o.problem == "reconfig") {
        ok = apply(P, C, w, oracle_variant(o, doc, "ft-block")) == doc.targets;
    } else if (o.problem == "cover") {
        ok = includes(apply(P, C, w, oracle_variant(o, doc, "ft-block")), doc.targets);
    } else {
        throw Error(ErrorKind::ParseError, "--check is not defined for " + o.problem);
    }
    std::cout << (ok ? "OK" : "FAIL") << "\n";
    return ok ? kOk : kNegative;
}

int cmd_oracle(const OracleOpts& o) {
    GridDocument doc = parse_grid(read_input(o.input));
    if (!o.check.empty()) return check_word(o, doc);
    const Polyomino& P = doc.P;
    Config C = doc.C.empty() ? full_config(P) : doc.C;
    if (o.problem == "sgs") {
        auto r = sgs_exact(P, C, o.budget);
        return print_result(r.has_value(), r ? std::to_string(r->length) : "", r ? std::optional(r->word) : std::nullopt,
                            o.witness);
    }
    if (o.problem == "occupancy") {
        const std::string* meta = doc.get("probe");
        if (o.probe.empty() && !meta) throw Error(ErrorKind::ParseError, "occupancy needs --probe");
        int p = P.index(parse_pixel(o.probe.empty() ? *meta : o.probe));
        if (p < 0) throw Error(ErrorKind::PixelOutsidePolyomino, "probe outside polyomino");
        std::string w;
        bool yes = occupancy(P, C, p, oracle_variant(o, doc, "ft-block"), o.budget, &w);
        if (!yes) {
            std::cout << "NO\n";
            return kNegative;
        }
        std::cout << "YES";
        if (o.witness) std::cout << " " << word_or_dash(w);
        std::cout << "\n";
        return kOk;
    }
    if (o.problem == "reconfig" || o.problem == "cover") {
        Variant v = oracle_variant(o, doc, "ft-block");
        auto r = o.problem == "reconfig" ? shape_reconfiguration(P, C, doc.targets, v, o.budget)
                                         : tilt_cover(P, C, doc.targets, v, o.budget);
        return print_result(r.has_value(), r ? std::to_string(r->size()) : "", r, o.witness);
    }
    if (o.problem == "cover-det") {
        const std::string* meta = doc.get("cycle");
        std::string cyc = !o.cycle.empty() ? o.cycle : meta ? *meta : "LURD";
        auto r = tilt_cover_deterministic(P, C, doc.targets, cyc, oracle_variant(o, doc, "ft-block"), o.budget);
        return print_result(r.has_value(), r ? std::to_string(*r) : "", std::nullopt, false);
    }
    if (o.problem == "census") {
        std::cout << rectangle_census(P, C, o.budget) << "\n";
        return kOk;
    }
    throw Error(ErrorKind::ParseError, "unknown problem '" + o.problem + "'");
}

// ---- render ----

int cmd_render(const std::string& input, const std::string& format) {
    GridDocument doc = parse_grid(read_input(input));
    std::cout << (format == "svg" ? render_svg(doc) : render_document(doc));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tiltctl: gathering and reconfiguration of particles under tilt moves"};
    app.require_subcommand(1);

    GatherOpts g;
    auto* gather = app.add_subcommand("gather", "find a gathering sequence");
    gather->add_option("input", g.input, "instance file or -")->required();
    gather->add_option("--model", g.model)->check(CLI::IsMember({"ft", "s1"}));
    gather->add_option("--variant", g.variant)->check(CLI::IsMember({"merge", "block"}));
    gather->add_option("--at", g.at, "gather at pixel x,y");

    GenOpts gen;
    auto* generate_cmd = app.add_subcommand("generate", "build a reduction instance");
    generate_cmd->add_option("kind", gen.kind)
        ->required()
        ->check(CLI::IsMember({"pm", "simulate", "tally", "scs2", "scsN", "primes", "tiltcover", "occupancy"}));
    generate_cmd->add_option("-o,--out", gen.out, "output file (default stdout)");
    generate_cmd->add_option("--m", gen.m, "lower bound parameter")->check(CLI::PositiveNumber);
    generate_cmd->add_flag("--maze", gen.maze);
    generate_cmd->add_option("--automaton", gen.automata, "tally automaton rho:acc,acc:initial (repeatable)");
    generate_cmd->add_option("--automaton-file", gen.automatonFile, "binary acceptor for simulate");
    generate_cmd->add_option("--words", gen.words, "comma separated words (symbols joined by '.' for scsN)");
    generate_cmd->add_option("--sigma", gen.sigma, "alphabet size for scsN");
    generate_cmd->add_option("--primes", gen.primes, "comma separated odd primes");
    generate_cmd->add_option("--count", gen.count, "number of odd primes for primes");
    generate_cmd->add_option("--k", gen.k, "goal size for occupancy (default: number of automata)");

    OracleOpts orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact search oracles");
    oracle_cmd->add_option("problem", orc.problem)
        ->required()
        ->check(CLI::IsMember({"sgs", "occupancy", "reconfig", "cover", "cover-det", "census"}));
    oracle_cmd->add_option("input", orc.input)->required();
    oracle_cmd->add_option("--model", orc.model)->check(CLI::IsMember({"ft", "s1"}));
    oracle_cmd->add_option("--variant", orc.variant)->check(CLI::IsMember({"merge", "block"}));
    oracle_cmd->add_option("--probe", orc.probe, "probe pixel x,y");
    oracle_cmd->add_option("--cycle", orc.cycle, "move cycle for cover-det");
    oracle_cmd->add_option("--budget", orc.budget, "state budget");
    oracle_cmd->add_option("--check", orc.check, "verify a witness word ('-' for the empty word)");
    oracle_cmd->add_flag("--witness", orc.witness);

    std::string rinput, rformat = "ascii";
    auto* render = app.add_subcommand("render", "render an instance");
    render->add_option("input", rinput)->required();
    render->add_option("--format", rformat)->check(CLI::IsMember({"ascii", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*gather) return cmd_gather(g);
        if (*generate_cmd) return cmd_generate(gen);
        if (*oracle_cmd) return cmd_oracle(orc);
        if (*render) return cmd_render(rinput, rformat);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == ErrorKind::BudgetExceeded ? kBudget : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
