#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "causal_bgk/dcc.hpp"
#include "causal_bgk/decomposition.hpp"
#include "causal_bgk/effects.hpp"
#include "causal_bgk/errors.hpp"
#include "causal_bgk/identification.hpp"
#include "causal_bgk/io.hpp"
#include "causal_bgk/mpdag_char.hpp"
#include "causal_bgk/oracle.hpp"
#include "causal_bgk/sim.hpp"
#include "json.hpp"

namespace causal_bgk::cli {
namespace {

using json = nlohmann::json;

constexpr int schema_version = 1;

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 7;
    bool quiet = false;
};

// ------------------------------------------------------------- conversions

json labels(const Pdag& g, const VertexSet& s) {
    std::vector<std::string> v;
    for (Vertex x : s) v.push_back(g.label(x));
    std::sort(v.begin(), v.end());
    return v;
}

json edge_list(const Pdag& g, const std::vector<Edge>& es, bool undirected) {
    std::vector<std::pair<std::string, std::string>> v;
    for (auto e : es) {
        std::string a = g.label(e.tail), b = g.label(e.head);
        if (undirected && b < a) std::swap(a, b);
        v.emplace_back(a, b);
    }
    std::sort(v.begin(), v.end());
    json out = json::array();
    for (auto& [a, b] : v) out.push_back({a, b});
    return out;
}

json graph_json(const Pdag& g) {
    return {{"vertices", labels(g, g.all())},
            {"directed", edge_list(g, g.directed_edges(), false)},
            {"undirected", edge_list(g, g.undirected_edges(), true)}};
}

json clause_json(const Pdag& g, const Dcc& c) { return {{"tail", g.label(c.tail)}, {"heads", labels(g, c.heads)}}; }

std::string set_text(const Pdag& g, const VertexSet& s) {
    std::string out;
    for (auto& l : labels(g, s)) out += (out.empty() ? "" : ",") + l.get<std::string>();
    return "{" + out + "}";
}

// ------------------------------------------------------------------ inputs

Pdag load_graph(const std::string& path) { return parse_graph(read_file(path)); }

DccSet load_knowledge(const Pdag& g, const std::string& path, const Globals& glob, std::ostream& err) {
    if (path.empty()) return {};
    Knowledge k = parse_knowledge(g, read_file(path));
    if (!glob.quiet)
        for (auto& w : k.warnings) err << "warning: " << path << ": " << w << "\n";
    return knowledge_to_dccs(g, k);
}

VertexSet parse_labels(const Pdag& g, const std::string& list) {
    VertexSet s(g.size());
    std::stringstream ss(list);
    std::string l;
    while (std::getline(ss, l, ',')) {
        l.erase(0, l.find_first_not_of(" \t"));
        l.erase(l.find_last_not_of(" \t") + 1);
        if (l.empty()) continue;
        auto v = g.find(l);
        if (!v) throw ContractError("unknown vertex '" + l + "'");
        s.insert(*v);
    }
    return s;
}

Vertex single(const Pdag& g, const std::string& label) {
    VertexSet s = parse_labels(g, label);
    if (s.size() != 1) throw ContractError("expected exactly one vertex, got '" + label + "'");
    return s.first();
}

std::set<std::vector<int>> member_codes(const RestrictedClass& rc) {
    std::set<std::vector<int>> out;
    for (auto& d : rc.members) {
        std::vector<int> c;
        for (auto e : d.graph().directed_edges()) c.push_back(e.tail * d.graph().size() + e.head);
        out.insert(c);
    }
    return out;
}

void emit(std::ostream& out, const Globals& glob, json doc, const std::string& text) {
    if (glob.format == "json") {
        doc["schema_version"] = schema_version;
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
}

// ------------------------------------------------------------- subcommands

struct CheckArgs {
    std::string graph, knowledge, mode = "consistency";
    bool oracle = false;
};

int cmd_check(const CheckArgs& a, const Globals& glob, std::ostream& out, std::ostream& err) {
    Pdag g = load_graph(a.graph);
    if (a.mode == "mpdag") {
        if (a.oracle) throw ContractError("--oracle is not available with --mode mpdag");
        auto rep = is_causal_mpdag(g);
        json vs = json::array();
        std::string text = std::string("causal MPDAG: ") + (rep.is_causal_mpdag ? "yes" : "no") + "\n";
        for (auto& v : rep.violations) {
            VertexSet s(g.size());
            for (Vertex x : v.vertices) s.insert(x);
            vs.push_back({{"condition", condition_name(v.condition)},
                          {"vertices", labels(g, s)},
                          {"edges", edge_list(g, v.edges, false)},
                          {"detail", v.detail}});
            text += std::string("  (") + condition_name(v.condition) + ") " + v.detail + "\n";
        }
        json gen = json::array();
        if (rep.is_causal_mpdag) {
            gen = edge_list(g, minimal_generator(g), false);
            for (auto& e : gen) text += "  generator " + e[0].get<std::string>() + " -> " + e[1].get<std::string>() + "\n";
        }
        emit(out, glob, {{"is_causal_mpdag", rep.is_causal_mpdag}, {"violations", vs}, {"minimal_generator", gen}},
             text);
        return rep.is_causal_mpdag ? 0 : 1;
    }
    if (a.mode != "consistency") throw ContractError("unknown mode '" + a.mode + "'");
    Cpdag cg = Cpdag::from(g);
    DccSet k = load_knowledge(g, a.knowledge, glob, err);
    json doc;
    bool ok;
    if (a.oracle) {
        auto rc = restricted_class(cg, k);
        ok = !rc.members.empty();
        doc = {{"consistent", ok}, {"class_size", rc.members.size()}};
    } else {
        ok = check_consistency(cg, k);
        doc = {{"consistent", ok}};
        if (!ok) doc["witness"] = labels(g, elimination_residue(cg, k));
    }
    emit(out, glob, doc, std::string(ok ? "consistent" : "inconsistent") + "\n");
    return ok ? 0 : 1;
}

struct EquivArgs {
    std::string graph, k1, k2;
    bool oracle = false;
};

int cmd_equiv(const EquivArgs& a, const Globals& glob, std::ostream& out, std::ostream& err) {
    Pdag g = load_graph(a.graph);
    Cpdag cg = Cpdag::from(g);
    DccSet k1 = load_knowledge(g, a.k1, glob, err), k2 = load_knowledge(g, a.k2, glob, err);
    bool eq = a.oracle ? member_codes(restricted_class(cg, k1)) == member_codes(restricted_class(cg, k2))
                       : check_equivalency(cg, k1, k2);
    emit(out, glob, {{"equivalent", eq}}, std::string(eq ? "equivalent" : "not equivalent") + "\n");
    return eq ? 0 : 1;
}

struct DecomposeArgs {
    std::string graph, knowledge;
    bool oracle = false;
};

int cmd_decompose(const DecomposeArgs& a, const Globals& glob, std::ostream& out, std::ostream& err) {
    Pdag g = load_graph(a.graph);
    Cpdag cg = Cpdag::from(g);
    DccSet k = load_knowledge(g, a.knowledge, glob, err);
    if (a.oracle) {
        auto rc = restricted_class(cg, k);
        if (rc.members.empty()) {
            emit(out, glob, {{"consistent", false}}, "inconsistent\n");
            return 1;
        }
        Mpdag h = oracle_mpdag(rc);
        emit(out, glob, {{"mpdag", graph_json(h)}, {"class_size", rc.members.size()}}, format_graph(h));
        return 0;
    }
    try {
        Decomposition d = decompose(cg, k);
        json res = json::array();
        std::string text = format_graph(d.mpdag);
        for (auto& c : d.residual) {
            res.push_back(clause_json(g, c));
            text += "residual " + format_dcc(g, c) + "\n";
        }
        bool fi = is_fully_informative(cg, d.clauses, d.mpdag);
        text += std::string("fully informative: ") + (fi ? "yes" : "no") + "\n";
        emit(out, glob, {{"mpdag", graph_json(d.mpdag)}, {"residual", res}, {"fully_informative", fi}}, text);
        return 0;
    } catch (const InconsistentError& e) {
        VertexSet w(g.size());
        for (int v : e.witness()) w.insert(v);
        emit(out, glob, {{"consistent", false}, {"witness", labels(g, w)}},
             "inconsistent, no potential leaf among " + set_text(g, w) + "\n");
        return 1;
    }
}

struct IdentifyArgs {
    std::string graph, knowledge, x, y, z;
    bool has_z = false;
};

int cmd_identify(const IdentifyArgs& a, const Globals& glob, std::ostream& out, std::ostream& err) {
    Pdag g = load_graph(a.graph);
    // without knowledge the graph itself is the MPDAG
    Mpdag h = a.knowledge.empty() ? Mpdag::from(g) : construct_mpdag(Cpdag::from(g), load_knowledge(g, a.knowledge, glob, err));
    EffectQuery q{parse_labels(g, a.x), parse_labels(g, a.y), std::nullopt};
    q.validate();
    bool id = is_identifiable(h, q);
    json doc = {{"identifiable", id}, {"forbidden", labels(g, forbidden_set(h, q.X, q.Y))}, {"z_valid", nullptr},
                {"suggested_z", nullptr}};
    std::string text = std::string("identifiable: ") + (id ? "yes" : "no") + "\n";
    bool z_ok = true;
    if (a.has_z) {
        q.Z = parse_labels(g, a.z);
        z_ok = satisfies_b_adjustment(h, q);
        doc["z_valid"] = z_ok;
        text += set_text(g, *q.Z) + (z_ok ? " is" : " is not") + " a valid adjustment set\n";
    }
    if (id)
        if (auto z = find_adjustment_set(h, q.X, q.Y)) {
            doc["suggested_z"] = labels(g, *z);
            text += "adjust for " + set_text(g, *z) + "\n";
        }
    emit(out, glob, doc, text);
    return id && z_ok ? 0 : 1;
}

struct IdaArgs {
    std::string graph, knowledge, x, y, cov;
    bool oracle = false;
};

int cmd_ida(const IdaArgs& a, const Globals& glob, std::ostream& out, std::ostream& err) {
    Pdag g = load_graph(a.graph);
    Cpdag cg = Cpdag::from(g);
    DccSet k = load_knowledge(g, a.knowledge, glob, err);
    Covariance cov = parse_covariance_csv(g, read_file(a.cov));
    Vertex x = single(g, a.x), y = single(g, a.y);
    EffectMultiset eff = a.oracle ? oracle_effects(restricted_class(cg, k), x, y, cov) : bgk_ida(cg, k, x, y, cov);
    if (eff.empty()) throw InconsistentError("knowledge is inconsistent with the graph");
    json es = json::array();
    std::string text;
    double lo = eff[0].value, hi = eff[0].value;
    for (auto& e : eff) {
        es.push_back({{"value", e.value}, {"parents", labels(g, e.parents)}});
        lo = std::min(lo, e.value);
        hi = std::max(hi, e.value);
        std::ostringstream line;
        line.precision(10);
        line << e.value << "  pa = " << set_text(g, e.parents) << "\n";
        text += line.str();
    }
    emit(out, glob, {{"effects", es}, {"min", lo}, {"max", hi}}, text);
    return 0;
}

struct SimulateArgs {
    int n = 10, e = 15, reps = 500;
    std::string b = "0,1,2,3,4,5", kinds = "direct,ancestral,nonancestral", out;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> v;
    std::stringstream ss(s);
    std::string x;
    while (std::getline(ss, x, ','))
        if (!x.empty()) v.push_back(x);
    return v;
}

int cmd_simulate(const SimulateArgs& a, const Globals& glob, std::ostream& out, std::ostream& err) {
    SimConfig cfg;
    cfg.n = a.n;
    cfg.e = a.e;
    cfg.replicates = a.reps;
    cfg.seed = glob.seed;
    cfg.b_values.clear();
    for (auto& s : split(a.b)) cfg.b_values.push_back(std::stoi(s));
    cfg.kinds.clear();
    for (auto& s : split(a.kinds)) {
        if (s == "direct") cfg.kinds.push_back(ConstraintKind::direct);
        else if (s == "ancestral") cfg.kinds.push_back(ConstraintKind::ancestral);
        else if (s == "nonancestral" || s == "non_ancestral") cfg.kinds.push_back(ConstraintKind::non_ancestral);
        else throw ContractError("unknown constraint kind '" + s + "'");
    }
    if (cfg.kinds.empty()) throw ContractError("no constraint kinds given");
    SimResult res = run_experiment(cfg);
    if (!glob.quiet)
        for (auto& l : res.log) err << l << "\n";
    std::string csv = to_csv(res);
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw ContractError("cannot write '" + a.out + "'");
        f << csv;
    }
    json rows = json::array();
    for (auto& r : res.rows)
        rows.push_back({{"kind", kind_name(r.kind)}, {"b", r.b}, {"mean_rescaled_cmse", r.mean_rescaled_cmse},
                        {"raw_cmse_mean", r.raw_cmse_mean}, {"replicates_used", r.replicates_used}});
    OracleOptions cap;
    json meta = {{"n", cfg.n},
                 {"e", cfg.e},
                 {"replicates", cfg.replicates},
                 {"seed", cfg.seed},
                 {"noise", "unit error variances"},
                 {"weights", "uniform(0.5, 2)"},
                 {"connected_graphs", true},
                 {"dag_sampler", cfg.n <= cap.max_component ? "uniform over the class" : "uniform when the class is "
                                                                                         "enumerable, else random PEO"},
                 {"replicates_dropped", res.replicates_dropped},
                 {"replicates_skipped", res.log.size()}};
    emit(out, glob, {{"metadata", meta}, {"rows", rows}}, a.out.empty() ? csv : "wrote " + a.out + "\n");
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Causal background knowledge over CPDAGs"};
    app.name("causal-bgk");
    app.require_subcommand(1);
    app.fallthrough();
    Globals glob;
    auto* fmt_opt =
        app.add_option("--format", glob.format, "output format")->check(CLI::IsMember({"json", "text"}));
    auto* seed_opt = app.add_option("--seed", glob.seed, "random seed");
    app.add_flag("--quiet", glob.quiet, "suppress warnings");

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "consistency of knowledge, or --mode mpdag to test a graph");
    check->add_option("--graph", ca.graph, "graph file")->required();
    check->add_option("--knowledge", ca.knowledge, "knowledge file");
    check->add_option("--mode", ca.mode, "consistency or mpdag")->check(CLI::IsMember({"consistency", "mpdag"}));
    check->add_flag("--oracle", ca.oracle, "answer by class enumeration");

    EquivArgs ea;
    auto* equiv = app.add_subcommand("equiv", "whether two knowledge files restrict the class equally");
    equiv->add_option("--graph", ea.graph, "CPDAG file")->required();
    equiv->add_option("--k1", ea.k1, "first knowledge file")->required();
    equiv->add_option("--k2", ea.k2, "second knowledge file")->required();
    equiv->add_flag("--oracle", ea.oracle, "answer by class enumeration");

    DecomposeArgs da;
    auto* dec = app.add_subcommand(
        "decompose",
        "MPDAG plus residual clauses. Clauses are dropped greedily in file order, so the residual depends on it.");
    dec->add_option("--graph", da.graph, "CPDAG file")->required();
    dec->add_option("--knowledge", da.knowledge, "knowledge file");
    dec->add_option("--out", glob.format, "output format")->check(CLI::IsMember({"json", "text"}));
    dec->add_flag("--oracle", da.oracle, "answer by class enumeration");

    IdentifyArgs ia;
    auto* ident = app.add_subcommand("identify", "identifiability and adjustment sets");
    ident->add_option("--graph", ia.graph, "CPDAG file, or an MPDAG when no knowledge is given")->required();
    ident->add_option("--knowledge", ia.knowledge, "knowledge file");
    ident->add_option("--x", ia.x, "treatments, comma separated")->required();
    ident->add_option("--y", ia.y, "outcomes, comma separated")->required();
    auto* zopt = ident->add_option("--z", ia.z, "adjustment set to test");

    IdaArgs ida;
    auto* idac = app.add_subcommand("ida", "all possible effects of x on y");
    idac->add_option("--graph", ida.graph, "CPDAG file")->required();
    idac->add_option("--knowledge", ida.knowledge, "knowledge file");
    idac->add_option("--x", ida.x, "treatment")->required();
    idac->add_option("--y", ida.y, "outcome")->required();
    idac->add_option("--cov", ida.cov, "covariance CSV")->required();
    idac->add_flag("--oracle", ida.oracle, "answer by class enumeration");

    std::string task;
    auto* orc = app.add_subcommand("oracle", "run check, equiv, decompose or ida by brute-force enumeration");
    orc->add_option("--task", task, "check, equiv, decompose or ida")
        ->required()
        ->check(CLI::IsMember({"check", "equiv", "decompose", "ida"}));
    orc->allow_extras();
    orc->fallthrough(false);

    SimulateArgs sa;
    auto* simc = app.add_subcommand("simulate", "rescaled CMSE over constraint counts");
    simc->add_option("--n", sa.n, "vertices");
    simc->add_option("--e", sa.e, "edges");
    simc->add_option("--b", sa.b, "constraint counts, comma separated, starting at 0");
    simc->add_option("--kinds", sa.kinds, "direct, ancestral, nonancestral");
    simc->add_option("--reps", sa.reps, "replicates");
    simc->add_option("--out", sa.out, "CSV output path");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (orc->parsed()) {
            std::vector<std::string> re{argv[0], task};
            for (auto& x : orc->remaining()) re.push_back(x);
            re.push_back("--oracle");
            // global flags given before the subcommand name
            if (fmt_opt->count()) {
                re.push_back("--format");
                re.push_back(glob.format);
            }
            if (seed_opt->count()) {
                re.push_back("--seed");
                re.push_back(std::to_string(glob.seed));
            }
            if (glob.quiet) re.push_back("--quiet");
            std::vector<const char*> av;
            for (auto& s : re) av.push_back(s.c_str());
            return run(static_cast<int>(av.size()), av.data(), out, err);
        }
        if (check->parsed()) return cmd_check(ca, glob, out, err);
        if (equiv->parsed()) return cmd_equiv(ea, glob, out, err);
        if (dec->parsed()) return cmd_decompose(da, glob, out, err);
        if (ident->parsed()) {
            ia.has_z = zopt->count() > 0;
            return cmd_identify(ia, glob, out, err);
        }
        if (idac->parsed()) return cmd_ida(ida, glob, out, err);
        if (simc->parsed()) return cmd_simulate(sa, glob, out, err);
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.line() > 0) err << " at line " << e.line();
        err << ": " << e.what() << "\n";
        return 2;
    } catch (const InconsistentError& e) {
        err << "inconsistent: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace causal_bgk::cli
