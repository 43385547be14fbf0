#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hatgames/classifiers.hpp"
#include "hatgames/constructors.hpp"
#include "hatgames/hgf.hpp"
#include "hatgames/lll.hpp"
#include "hatgames/oracle.hpp"
#include "hatgames/prisms.hpp"

namespace {

constexpr int kExitWinnable = 0;
constexpr int kExitUnwinnable = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw hg::ParseError("cannot open " + path, 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
}

int verdict_exit(hg::Verdict v) {
    switch (v) {
        case hg::Verdict::Winnable: return kExitWinnable;
        case hg::Verdict::Unwinnable: return kExitUnwinnable;
        default: return kExitUnknown;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !s.empty()) out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    for (const std::string& t : split(s, sep)) out.push_back(std::stoi(t));
    return out;
}

std::vector<int> names_to_indices(const hg::Game& game, const std::string& s) {
    std::vector<int> out;
    for (const std::string& nm : split(s, '+')) {
        const int v = game.d.index_of(nm);
        if (v < 0) throw hg::ParseError("unknown vertex " + nm, 0, 0);
        out.push_back(v);
    }
    return out;
}

hg::Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return hg::Rat(hg::Int(s));
    return hg::Rat(hg::Int(s.substr(0, slash)), hg::Int(s.substr(slash + 1)));
}

nlohmann::json trace_json(const std::vector<hg::TraceStep>& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const hg::TraceStep& s : trace)
        arr.push_back({{"rule", s.rule},
                       {"vertices", s.vertices},
                       {"rewrite", s.rewrite}});
    return arr;
}

void print_trace(const std::vector<hg::TraceStep>& trace) {
    for (const hg::TraceStep& s : trace) {
        std::cout << s.rule;
        for (const std::string& v : s.vertices) std::cout << " " << v;
        if (!s.rewrite.empty()) std::cout << "  [" << s.rewrite << "]";
        std::cout << "\n";
    }
}

hg::Outcome solve_with_method(const hg::Game& game, const std::string& method,
                              const hg::SearchBudget& budget) {
    if (method == "classify") return hg::classify_auto(game);
    if (method == "oracle") return hg::decide_winnable(game, budget);
    hg::Outcome o = hg::classify_auto(game);
    if (o.verdict != hg::Verdict::Unknown) return o;
    hg::Outcome e = hg::decide_winnable(game, budget);
    e.trace.insert(e.trace.begin(), o.trace.begin(), o.trace.end());
    return e;
}

struct KvArgs {
    std::vector<std::pair<std::string, std::string>> kv;

    std::string get(const std::string& key, const std::string& dflt = "") const {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        if (dflt.empty())
            throw hg::ParseError("construct: missing --args " + key, 0, 0);
        return dflt;
    }
    bool has(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key) return true;
        return false;
    }
};

hg::Construction run_construct(const std::string& op,
                               const std::vector<hg::Construction>& in,
                               const KvArgs& args) {
    const hg::Game& g0 = in.at(0).game;
    const hg::Strategy& f0 = in.at(0).strategy;
    if (op == "product_single_point")
        return hg::product_single_point(g0, f0, in.at(1).game, in.at(1).strategy,
                                        args.get("shared"));
    if (op == "attach_vertex_clique")
        return hg::attach_vertex_clique(g0, f0, names_to_indices(g0, args.get("ys")),
                                        std::stoi(args.get("hx")),
                                        std::stoi(args.get("gx")), args.get("x"));
    if (op == "attach_vertex_general")
        return hg::attach_vertex_general(
            g0, f0, names_to_indices(g0, args.get("ys")),
            parse_ints(args.get("q"), '+'), parse_ints(args.get("k"), '+'),
            std::stoi(args.get("hx")), std::stoi(args.get("gx")), args.get("x"));
    if (op == "attach_hatness3")
        return hg::attach_hatness3(g0, f0, names_to_indices(g0, args.get("ys")),
                                   g0.d.index_of(args.get("b")), args.get("x"));
    if (op == "attach_path") {
        hg::PathAttachment spec;
        spec.pattern = parse_ints(args.get("pattern"), '+');
        spec.x = names_to_indices(g0, args.get("x"));
        spec.z = names_to_indices(g0, args.get("z"));
        spec.x_clique = args.get("x_clique", "0") == "1";
        spec.z_clique = args.get("z_clique", "0") == "1";
        spec.name_prefix = args.get("prefix", "p");
        return hg::attach_path(g0, f0, spec);
    }
    if (op == "clique_product" || op == "general_product") {
        std::vector<std::vector<int>> sets;
        const std::string key = op == "clique_product" ? "cliques" : "parts";
        std::vector<std::string> per = split(args.get(key), '/');
        if (per.size() != in.size())
            throw hg::ParseError("construct: one vertex set per operand", 0, 0);
        for (std::size_t i = 0; i < in.size(); ++i)
            sets.push_back(names_to_indices(in[i].game, per[i]));
        if (op == "clique_product") return hg::clique_product(in, sets);
        return hg::general_product(in, sets, parse_ints(args.get("surplus"), '+'));
    }
    if (op == "clique_general_product")
        return hg::clique_general_product(
            g0, f0, names_to_indices(g0, args.get("h1")), in.at(1).game,
            in.at(1).strategy, names_to_indices(in.at(1).game, args.get("h2")));
    if (op == "replace_vertex_with_arcs")
        return hg::replace_vertex_with_arcs(g0, f0, g0.d.index_of(args.get("v")));
    throw hg::ParseError("construct: unknown op " + op, 0, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hat-guessing game workbench"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker count (verdicts are deterministic)");

    std::string file, strategy_file, emit, cert_out, method = "auto";
    std::string format = "text";
    hg::SearchBudget budget;
    bool deterministic = false;

    auto* solve = app.add_subcommand("solve", "decide winnability");
    solve->add_option("file", file)->required();
    solve->add_option("--budget-nodes", budget.max_nodes);
    solve->add_option("--budget-colorings", budget.max_colorings);
    solve->add_flag("--deterministic", deterministic);
    solve->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "oracle", "classify"}));
    solve->add_option("--certificate", cert_out, "write winning strategy here");

    auto* classify = app.add_subcommand("classify", "polynomial classifiers only");
    classify->add_option("file", file)->required();

    auto* verify = app.add_subcommand("verify", "check a strategy");
    verify->add_option("file", file)->required();
    verify->add_option("--strategy", strategy_file)->required();

    auto* reduce = app.add_subcommand("reduce", "apply deletion rules");
    reduce->add_option("file", file)->required();
    reduce->add_option("--emit", emit, "write the residual game here");

    std::string op, in_csv, strat_csv, args_csv;
    auto* construct = app.add_subcommand("construct", "run a strategy constructor");
    construct->add_option("--op", op)->required();
    construct->add_option("--in", in_csv, "operand game files")->required();
    construct->add_option("--strategy", strat_csv, "operand strategy files")
        ->required();
    construct->add_option("--args", args_csv, "k=v,k=v,...");
    construct->add_option("--emit", emit, "write the built game here");
    construct->add_option("--certificate", cert_out, "write the built strategy here");

    auto* bound = app.add_subcommand("bound", "degree and local-lemma bounds");
    bound->add_option("file", file)->required();

    std::string weights_csv, subset_csv;
    auto* poly = app.add_subcommand("poly", "acyclicity polynomial");
    poly->add_option("file", file)->required();
    poly->add_option("--weights", weights_csv)->required();
    poly->add_option("--subset", subset_csv);

    std::string dims_csv, prism_csv;
    int pack_count = 1, pack_overlap = 1;
    auto* pack = app.add_subcommand("pack", "prism packing");
    pack->add_option("--dims", dims_csv)->required();
    pack->add_option("--prism", prism_csv)->required();
    pack->add_option("--count", pack_count)->required();
    pack->add_option("--overlap", pack_overlap)->required();

    auto* report = app.add_subcommand("report", "solve and emit a report");
    report->add_option("file", file)->required();
    report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    report->add_option("--certificate", cert_out, "write winning strategy here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed() || report->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            hg::Game game = hg::parse_game(read_file(file));
            hg::Outcome o = solve_with_method(game, method, budget);
            const auto millis =
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
            std::string cert_path;
            if (o.certificate && !cert_out.empty()) {
                write_file(cert_out, hg::print_strategy(game, *o.certificate));
                cert_path = cert_out;
            }
            if (report->parsed() && format == "json") {
                nlohmann::json j{
                    {"verdict", hg::to_string(o.verdict)},
                    {"certificate_path",
                     cert_path.empty() ? nlohmann::json() : nlohmann::json(cert_path)},
                    {"trace", trace_json(o.trace)},
                    {"stats",
                     {{"nodes", o.stats.nodes},
                      {"colorings", o.stats.colorings},
                      {"millis", millis}}}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << hg::to_string(o.verdict) << "\n";
                print_trace(o.trace);
                if (report->parsed())
                    std::cout << "nodes " << o.stats.nodes << ", colorings "
                              << o.stats.colorings << ", millis " << millis << "\n";
                if (solve->parsed() && o.certificate && cert_out.empty())
                    std::cout << hg::print_strategy(game, *o.certificate);
            }
            return verdict_exit(o.verdict);
        }
        if (classify->parsed()) {
            hg::Game game = hg::parse_game(read_file(file));
            hg::Outcome o = hg::classify_auto(game);
            std::cout << hg::to_string(o.verdict) << "\n";
            print_trace(o.trace);
            return verdict_exit(o.verdict);
        }
        if (verify->parsed()) {
            hg::Game game = hg::parse_game(read_file(file));
            hg::Strategy f = hg::parse_strategy(read_file(strategy_file), game);
            hg::VerifyResult r = hg::verify_strategy(game, f);
            if (r.wins) {
                std::cout << "wins (" << r.colorings_checked << " colorings)\n";
                return kExitWinnable;
            }
            std::cout << "loses, disprover:";
            for (int c : *r.disprover) std::cout << " " << c;
            std::cout << "\n";
            return kExitUnwinnable;
        }
        if (reduce->parsed()) {
            hg::Game game = hg::parse_game(read_file(file));
            hg::ReductionTrace tr = hg::reduce_game(game);
            print_trace(tr.steps);
            if (!emit.empty()) write_file(emit, hg::print_game(tr.residual));
            if (tr.decided) return verdict_exit(*tr.decided);
            return tr.residual.n() == 0 ? kExitUnwinnable : kExitUnknown;
        }
        if (construct->parsed()) {
            std::vector<std::string> gfiles = split(in_csv, ',');
            std::vector<std::string> sfiles = split(strat_csv, ',');
            if (gfiles.size() != sfiles.size())
                throw hg::ParseError("construct: one strategy per game", 0, 0);
            std::vector<hg::Construction> in;
            for (std::size_t i = 0; i < gfiles.size(); ++i) {
                hg::Game g = hg::parse_game(read_file(gfiles[i]));
                hg::Strategy f = hg::parse_strategy(read_file(sfiles[i]), g);
                in.push_back({std::move(g), std::move(f)});
            }
            KvArgs kv;
            if (!args_csv.empty())
                for (const std::string& t : split(args_csv, ',')) {
                    const auto eq = t.find('=');
                    if (eq == std::string::npos)
                        throw hg::ParseError("construct: bad --args entry " + t, 0, 0);
                    kv.kv.emplace_back(t.substr(0, eq), t.substr(eq + 1));
                }
            hg::Construction out = run_construct(op, in, kv);
            const std::string gtext = hg::print_game(out.game);
            const std::string stext = hg::print_strategy(out.game, out.strategy);
            if (!emit.empty()) write_file(emit, gtext);
            if (!cert_out.empty()) write_file(cert_out, stext);
            if (emit.empty() && cert_out.empty()) std::cout << gtext << stext;
            return kExitWinnable;
        }
        if (bound->parsed()) {
            hg::Game game = hg::parse_game(read_file(file));
            hg::DegreeBounds b = hg::degree_bounds(game.d);
            if (b.directed)
                std::cout << "directed-threshold " << *b.directed << "\n";
            if (b.undirected)
                std::cout << "undirected-threshold " << *b.undirected << "\n";
            hg::LllResult r = hg::lll_unwinnable_test(game);
            if (r.unwinnable) {
                std::cout << "local-lemma unwinnable, weights";
                for (const hg::Rat& x : r.x) std::cout << " " << x;
                std::cout << "\n";
                return kExitUnwinnable;
            }
            std::cout << "local-lemma inconclusive\n";
            return kExitUnknown;
        }
        if (poly->parsed()) {
            hg::Game game = hg::parse_game(read_file(file));
            std::vector<hg::Rat> w;
            for (const std::string& t : split(weights_csv, ','))
                w.push_back(parse_rat(t));
            std::vector<bool> s(game.n(), true);
            if (!subset_csv.empty()) {
                s.assign(game.n(), false);
                for (int v : names_to_indices(game, subset_csv)) s[v] = true;
            }
            std::cout << hg::acyclicity_poly(game.d, w, s) << "\n";
            return kExitWinnable;
        }
        if (pack->parsed()) {
            hg::PackingInstance inst;
            inst.d = parse_ints(dims_csv, ',');
            inst.a = parse_ints(prism_csv, ',');
            inst.x = pack_count;
            inst.y = pack_overlap;
            auto prisms = hg::solve_star_packing(inst);
            if (!prisms) {
                std::cout << "unsat\n";
                return kExitUnwinnable;
            }
            for (const hg::Prism& p : *prisms) {
                std::cout << "prism";
                for (const std::vector<int>& z : p.axes) {
                    std::cout << " ";
                    for (std::size_t i = 0; i < z.size(); ++i)
                        std::cout << (i ? "+" : "") << z[i];
                }
                std::cout << "\n";
            }
            return kExitWinnable;
        }
    } catch (const hg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
