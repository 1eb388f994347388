// ddglab: generate divisible design graph families, verify their structure,
// compute vertex connectivity, apply dual Seidel switching, and run the
// headline regression table.
//
// Exit codes: 0 success, 1 check failure (a verified property does not hold),
// 2 usage or data error (bad flags, bad parameters, unreadable input).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ddg/analysis.hpp"
#include "ddg/connectivity.hpp"
#include "ddg/constructions.hpp"
#include "ddg/errors.hpp"
#include "ddg/graph.hpp"
#include "ddg/graph6.hpp"
#include "ddg/switching.hpp"

namespace {

using nlohmann::json;
using namespace ddg;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string family;
    std::string srg;
    std::string design;
    std::string ingredient = "matching";
    std::string format = "graph6";
    std::string in_path;
    std::string out_path;
    int t = 1;
    int q = 0;
    int n = 0;
    int m = 0;
    int threads = 0;
    bool deep = false;
};

// --threads flag wins; DDGLAB_THREADS is the fallback; default is serial.
int resolve_threads(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("DDGLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

int parse_positive(const std::string& s, const char* what) {
    int v = 0;
    std::size_t pos = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || v <= 0) throw Error(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

// One graph per non-empty line, graph6-encoded; empty path means stdin.
std::vector<Graph> read_graphs(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty()) {
        file.open(path);
        if (!file) throw Error("cannot open input file: " + path);
        in = &file;
    }
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) graphs.push_back(graph6_decode(line));
    }
    if (graphs.empty()) throw Error("no graphs in input");
    return graphs;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    for (const std::string& line : lines) out << line << '\n';
}

Graph named_graph(const std::string& name, int q, int n) {
    if (name == "petersen") return petersen();
    if (name == "paley") {
        if (q <= 0) throw Error("--srg paley needs --q");
        return paley(q);
    }
    if (q > 0 && n <= 0) n = q;  // tolerate --q for the one-parameter families
    if (name == "lattice" || name == "lattice-complement" || name == "triangular") {
        if (n <= 0) throw Error("--srg " + name + " needs --n");
        if (name == "lattice") return lattice(n);
        if (name == "lattice-complement") return lattice_complement(n);
        return triangular(n);
    }
    throw Error("unknown graph name: " + name +
                " (petersen, paley, lattice, lattice-complement, triangular)");
}

// Base graph for the constructions that consume one: a named graph via --srg
// or exactly one graph6 line via --in.
Graph resolve_base(const Options& o) {
    if (!o.srg.empty()) return named_graph(o.srg, o.q, o.n);
    if (!o.in_path.empty()) {
        const std::vector<Graph> graphs = read_graphs(o.in_path);
        if (graphs.size() != 1)
            throw Error("expected exactly one input graph, got " + std::to_string(graphs.size()));
        return graphs.front();
    }
    throw Error("supply --srg <name> or --in <file>");
}

Design resolve_design(const std::string& token) {
    if (token.empty()) throw Error("--design required (fano, complete:<n>, or a file path)");
    if (token == "fano") return Design::projective_plane_order2();
    if (token.rfind("complete:", 0) == 0)
        return Design::complete_design(parse_positive(token.substr(9), "--design complete:<n>"));
    return Design::from_file(token);
}

Graph ingredient_graph(const std::string& kind, int n) {
    if (kind == "coclique") return Graph::empty(n);
    if (kind == "matching") {
        if (n % 2 != 0) throw Error("matching ingredient needs even --n");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; i += 2) edges.push_back({i, i + 1});
        return Graph::from_edges(n, edges);
    }
    throw Error("unknown --ingredient: " + kind + " (coclique or matching)");
}

struct GenItem {
    Graph graph;
    json meta;
};

json params_json(const DdgParams& p) {
    return {{"v", p.v},           {"k", p.k}, {"lambda1", p.lambda1},
            {"lambda2", p.lambda2}, {"m", p.m}, {"n", p.n}};
}

std::vector<GenItem> generate(const Options& o) {
    std::vector<GenItem> items;
    const auto push = [&](const Construction& c, json extra = json::object()) {
        json meta = {{"family", o.family}, {"params", params_json(c.params)}};
        meta.update(extra);
        items.push_back({c.graph, std::move(meta)});
    };
    const std::string& f = o.family;
    if (f == "gamma" || f == "gamma1" || f == "gamma2") {
        const GammaFamily fam = gamma_family(o.t);
        push(f == "gamma" ? fam.gamma : f == "gamma1" ? fam.gamma1 : fam.gamma2,
             {{"t", o.t}});
    } else if (f == "construction1") {
        push(design_incidence_graph(resolve_design(o.design)));
    } else if (f == "construction2") {
        if (o.n <= 0) throw Error("construction2 needs --n (class size)");
        // --n is the class size here, so a named base takes its size from --q
        // (e.g. --srg lattice --q 4 --n 3 blows lattice(4) up by 3).
        Options base = o;
        base.n = 0;
        push(vkl_blowup(resolve_base(base), o.n));
    } else if (f == "construction3") {
        if (o.m < 2) throw Error("construction3 needs --m >= 2 (number of parts)");
        if (o.n <= 0) throw Error("construction3 needs --n (part size)");
        const Graph part = ingredient_graph(o.ingredient, o.n);
        push(join_of_vkl_graphs(std::vector<Graph>(o.m, part)),
             {{"ingredient", o.ingredient}});
    } else if (f == "construction4") {
        push(lexicographic_double(resolve_base(o)));
    } else if (f == "construction5") {
        // Zero outputs is a valid result: the double has no Seidel
        // automorphism. Each output shares the double's parameters.
        const Graph base = resolve_base(o);
        const Construction doubled = lexicographic_double(base);
        for (const Graph& g : switched_doubles(base))
            items.push_back({g, {{"family", f}, {"params", params_json(doubled.params)}}});
    } else if (f == "construction6") {
        push(hadamard_block_graph(hadamard_tower(o.t)), {{"t", o.t}});
    } else if (f == "petersen" || f == "paley" || f == "lattice" ||
               f == "lattice-complement" || f == "triangular") {
        const Graph g = named_graph(f, o.q, o.n);
        json meta = {{"family", f}, {"v", g.size()}, {"k", g.degree(0)}};
        if (f == "paley") meta["q"] = o.q;
        if (f == "lattice" || f == "lattice-complement" || f == "triangular") meta["n"] = o.n;
        items.push_back({g, std::move(meta)});
    } else {
        throw Error("unknown family: " + f);
    }
    return items;
}

int cmd_gen(const Options& o) {
    const std::vector<GenItem> items = generate(o);
    std::vector<std::string> lines;
    json sidecar = json::array();
    for (const GenItem& item : items) {
        lines.push_back(o.format == "json" ? adjacency_json(item.graph)
                                           : graph6_encode(item.graph));
        json meta = item.meta;
        meta["line"] = static_cast<int>(lines.size());
        sidecar.push_back(std::move(meta));
    }
    if (o.out_path.empty()) {
        for (const std::string& line : lines) std::cout << line << '\n';
    } else {
        write_lines(o.out_path, lines);
        write_lines(o.out_path + ".json", {sidecar.dump(2)});
        std::cerr << "wrote " << lines.size() << " graph(s) to " << o.out_path << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o) {
    bool all_ok = true;
    for (const Graph& g : read_graphs(o.in_path)) {
        json report = json::parse(analysis_report_json(g));
        const std::optional<int> diam = diameter(g);
        report["diameter"] = diam ? json(*diam) : json(nullptr);
        std::cout << report.dump() << '\n';
        if (!report.value("ddg", false)) all_ok = false;
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_kappa(const Options& o) {
    const int threads = resolve_threads(o.threads);
    for (const Graph& g : read_graphs(o.in_path)) {
        const KappaResult r = vertex_connectivity(g, threads);
        std::cout << kappa_report_json(r, "maxflow") << '\n';
    }
    return kExitOk;
}

int cmd_switch(const Options& o) {
    const Graph g = resolve_base(o);
    const std::vector<Involution> sigmas = seidel_automorphisms(g);
    std::vector<std::string> lines;
    lines.reserve(sigmas.size());
    for (const Involution& sigma : sigmas)
        lines.push_back(graph6_encode(dual_seidel_switch(g, sigma)));
    json report = {{"vertices", g.size()},
                   {"seidel_automorphisms", sigmas.size()},
                   {"outputs", lines.size()}};
    if (!o.out_path.empty()) {
        write_lines(o.out_path, lines);
        report["out"] = o.out_path;
    } else {
        for (const std::string& line : lines) std::cout << line << '\n';
    }
    // The report is always the last stdout line, after any streamed graphs.
    std::cout << report.dump() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce: headline numbers as a regression table.

struct Row {
    std::string instance;
    std::string predicted;
    std::function<std::string()> compute;
    std::string computed;
    bool pass = false;
};

std::string format_params(const DdgParams& p) {
    std::ostringstream out;
    out << '(' << p.v << ',' << p.k << ',' << p.lambda1 << ',' << p.lambda2 << ',' << p.m
        << ',' << p.n << ')';
    return out.str();
}

std::string recognized_params(const Graph& g) {
    const Recognition rec = recognize_ddg(g);
    if (rec.kind != Recognition::Kind::Proper || rec.readings.size() != 1)
        return "not a proper divisible design graph";
    return format_params(rec.readings.front().first);
}

std::string kappa_of(const Graph& g) {
    return std::to_string(vertex_connectivity(g).kappa);
}

std::string min_switched_kappa(const Graph& base) {
    const std::vector<Graph> out = switched_doubles(base);
    if (out.empty()) return "none";
    int best = -1;
    for (const Graph& g : out) {
        const int k = vertex_connectivity(g).kappa;
        if (best < 0 || k < best) best = k;
    }
    return std::to_string(best);
}

std::vector<Row> reproduce_rows(bool deep) {
    std::vector<Row> rows;
    const auto add = [&rows](std::string instance, std::string predicted,
                             std::function<std::string()> compute) {
        rows.push_back({std::move(instance), std::move(predicted), std::move(compute), "", false});
    };

    const int t_max = deep ? 3 : 2;
    for (int t = 1; t <= t_max; ++t) {
        const long long ft = 1LL << (2 * t);  // 4^t
        const long long et = 1LL << t;        // 2^t
        add("gamma t=" + std::to_string(t) + " params",
            format_params({static_cast<int>(6 * ft), static_cast<int>(2 * ft + et),
                           static_cast<int>(ft + et), static_cast<int>((ft + et) / 2), 3,
                           static_cast<int>(2 * ft)}),
            [t] { return recognized_params(gamma_family(t).gamma.graph); });
        add("gamma t=" + std::to_string(t) + " kappa", std::to_string(2 * ft),
            [t] { return kappa_of(gamma_family(t).gamma.graph); });
        add("gamma1 t=" + std::to_string(t) + " kappa", std::to_string(ft + et),
            [t] { return kappa_of(gamma_family(t).gamma1.graph); });
        add("gamma2 t=" + std::to_string(t) + " params",
            format_params({static_cast<int>(2 * ft), static_cast<int>(ft), 0,
                           static_cast<int>(ft / 2), static_cast<int>(ft), 2}),
            [t] { return recognized_params(gamma_family(t).gamma2.graph); });
        add("gamma2 t=" + std::to_string(t) + " kappa", std::to_string(ft),
            [t] { return kappa_of(gamma_family(t).gamma2.graph); });
        if (t >= 2)
            add("gamma2 t=" + std::to_string(t) + " certificate", "certified", [t, ft, et] {
                const Graph g = gamma_family(t).gamma2.graph;
                const CertificateOutcome outcome =
                    neighbourhood_certificate(g, ft / 4, et * et);
                return outcome == CertificateOutcome::Certified ? "certified" : "inconclusive";
            });
        add("gamma t=" + std::to_string(t) + " tower audit", "ok", [t] {
            return gamma_connectivity_bound_check(t).ok() ? "ok" : "violated";
        });
    }

    add("petersen[K2] kappa", "6", [] { return kappa_of(lexicographic_double(petersen()).graph); });
    add("lattice(3)[K2] kappa", "8", [] { return kappa_of(lexicographic_double(lattice(3)).graph); });
    add("paley(13)[K2] kappa", "12", [] { return kappa_of(lexicographic_double(paley(13)).graph); });

    add("switched petersen double kappa", "6", [] { return min_switched_kappa(petersen()); });
    add("switched lattice(3) double kappa", "8", [] { return min_switched_kappa(lattice(3)); });
    add("switched triangular(5) double count", "0",
        [] { return std::to_string(switched_doubles(triangular(5)).size()); });
    add("paley(13) seidel automorphisms", "0",
        [] { return std::to_string(seidel_automorphisms(paley(13)).size()); });
    add("paley(17) seidel automorphisms", "0",
        [] { return std::to_string(seidel_automorphisms(paley(17)).size()); });

    add("join of 3 matchings kappa", "8", [] {
        return kappa_of(join_of_vkl_graphs(std::vector<Graph>(3, ingredient_graph("matching", 4))).graph);
    });
    add("join of 3 matchings lambda2", "6", [] {
        const Construction c = join_of_vkl_graphs(std::vector<Graph>(3, ingredient_graph("matching", 4)));
        return std::to_string(c.params.lambda2);
    });
    add("join of 3 cocliques kappa", "8", [] {
        return kappa_of(join_of_vkl_graphs(std::vector<Graph>(3, Graph::empty(4))).graph);
    });

    add("fano incidence double params", "(14,3,1,0,2,7)", [] {
        return recognized_params(design_incidence_graph(Design::projective_plane_order2()).graph);
    });
    add("fano incidence double kappa", "3", [] {
        return kappa_of(design_incidence_graph(Design::projective_plane_order2()).graph);
    });

    add("block census t<=6", "closed forms", [] {
        for (int t = 1; t <= 6; ++t) {
            const BlockCensus c = block_census(t);
            const long long q = 1LL << (2 * (t - 1));  // 4^(t-1)
            const long long e = 1LL << (t - 1);        // 2^(t-1)
            const auto counts_match = [](const PairCounts& p, long long dd, long long ii,
                                         long long di, long long id) {
                return p.dd == dd && p.ii == ii && p.di == di && p.id == id;
            };
            if (c.a1.row_d != q + e || c.a1.row_i != q - e) return std::string("mismatch");
            if (!counts_match(c.a1.partner, q + e, q - e, 0, 0)) return std::string("mismatch");
            if (t >= 2 && !counts_match(c.a1.other, 2 * (q / 4 + e / 2), 2 * (q / 4 - e / 2),
                                        q / 2, q / 2))
                return std::string("mismatch");
            if (c.a2.row_d != q || c.a2.row_i != q) return std::string("mismatch");
            if (!counts_match(c.a2.partner, 0, 0, q, q)) return std::string("mismatch");
            if (t >= 2 && !counts_match(c.a2.other, q / 2, q / 2, q / 2, q / 2))
                return std::string("mismatch");
        }
        return std::string("closed forms");
    });

    return rows;
}

int cmd_reproduce(const Options& o) {
    std::vector<Row> rows = reproduce_rows(o.deep);
    const int threads = std::max(1, std::min<int>(resolve_threads(o.threads),
                                                  static_cast<int>(rows.size())));
    std::atomic<std::size_t> next{0};
    const auto worker = [&rows, &next] {
        for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
            try {
                rows[i].computed = rows[i].compute();
            } catch (const std::exception& e) {
                rows[i].computed = std::string("error: ") + e.what();
            }
            rows[i].pass = rows[i].computed == rows[i].predicted;
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    std::size_t width = 8;
    for (const Row& row : rows) width = std::max(width, row.instance.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "instance"
        << " | " << std::setw(20) << "predicted" << " | " << std::setw(20) << "computed"
        << " | result\n";
    out << std::string(width + 54, '-') << '\n';
    bool all_pass = true;
    for (const Row& row : rows) {
        out << std::left << std::setw(static_cast<int>(width)) << row.instance << " | "
            << std::setw(20) << row.predicted << " | " << std::setw(20) << row.computed
            << " | " << (row.pass ? "PASS" : "FAIL") << '\n';
        all_pass = all_pass && row.pass;
    }
    std::cout << out.str();
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for divisible design graphs"};
    app.require_subcommand(1);
    Options o;

    CLI::App* gen = app.add_subcommand("gen", "generate a family member as graph6 lines");
    gen->add_option("--family", o.family,
                    "gamma|gamma1|gamma2|construction1..construction6|"
                    "petersen|paley|lattice|lattice-complement|triangular")
        ->required();
    gen->add_option("--t", o.t, "family order for gamma*/construction6");
    gen->add_option("--q", o.q, "prime order for paley");
    gen->add_option("--n", o.n, "size parameter (lattice/triangular side, class or part size)");
    gen->add_option("--m", o.m, "number of parts for construction3");
    gen->add_option("--design", o.design, "fano, complete:<n>, or an incidence file");
    gen->add_option("--srg", o.srg, "named base graph for construction2/4/5");
    gen->add_option("--ingredient", o.ingredient, "construction3 part: matching|coclique");
    gen->add_option("--in", o.in_path, "graph6 file supplying the base graph");
    gen->add_option("--out", o.out_path, "output file (JSON sidecar at <out>.json)");
    gen->add_option("--format", o.format, "graph6|json")
        ->check(CLI::IsMember({"graph6", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "verify divisible design structure");
    verify->add_option("--in", o.in_path, "graph6 file (default stdin)");

    CLI::App* kappa = app.add_subcommand("kappa", "compute vertex connectivity");
    kappa->add_option("--in", o.in_path, "graph6 file (default stdin)");
    kappa->add_option("--threads", o.threads, "worker threads (or DDGLAB_THREADS)");

    CLI::App* switch_cmd =
        app.add_subcommand("switch", "apply dual Seidel switching to every Seidel automorphism");
    switch_cmd->add_option("--srg", o.srg, "named input graph");
    switch_cmd->add_option("--q", o.q, "prime order for paley");
    switch_cmd->add_option("--n", o.n, "size parameter for lattice/triangular");
    switch_cmd->add_option("--in", o.in_path, "graph6 file supplying the input graph");
    switch_cmd->add_option("--out", o.out_path, "file for the switched graphs");

    CLI::App* reproduce = app.add_subcommand("reproduce", "run the headline regression table");
    reproduce->add_option("--threads", o.threads, "worker threads (or DDGLAB_THREADS)");
    reproduce->add_flag("--deep", o.deep, "include the order-3 instances (384 vertices)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (verify->parsed()) return cmd_verify(o);
        if (kappa->parsed()) return cmd_kappa(o);
        if (switch_cmd->parsed()) return cmd_switch(o);
        if (reproduce->parsed()) return cmd_reproduce(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
