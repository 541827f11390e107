#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "strongedge/audit.hpp"
#include "strongedge/coloring.hpp"
#include "strongedge/degeneracy.hpp"
#include "strongedge/edgelist.hpp"
#include "strongedge/exact.hpp"
#include "strongedge/generate.hpp"
#include "strongedge/multigraph.hpp"
#include "strongedge/ordering.hpp"
#include "strongedge/serialize.hpp"

namespace strongedge::cli {

// Exit codes: 0 success, 1 verification or audit failure, 2 input error.

namespace detail {

inline LoadedGraph load_graph(const std::string& path, std::istream& fallback) {
    if (path.empty()) return read_edge_list(fallback);
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    return read_edge_list(f);
}

inline json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    return json::parse(f);
}

// `saturated-k` is accepted alongside the generate() families and routes to
// the exact-degeneracy construction.
inline MultiGraph build_corpus_graph(const std::string& family, const GenSpec& spec) {
    if (family == "saturated-k") return saturate_k(spec);
    GenSpec s = spec;
    s.family = family_from_name(family);
    return generate(s);
}

struct BenchRow {
    std::string name;
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    int k = 0;
    int max_degree = 0;
    int colors_used = 0;
    std::optional<long long> bound;
    std::optional<long long> slack;
    std::optional<int> exact;
    bool valid = false;
    bool audit_pass = false;
    double wall_ms = 0.0;

    bool pass() const {
        if (!valid || !audit_pass) return false;
        if (slack && *slack < 0) return false;
        if (exact && colors_used < *exact) return false;
        return true;
    }
};

inline BenchRow bench_instance(const std::string& family, const GenSpec& spec,
                               std::optional<long long> exact_budget) {
    auto t0 = std::chrono::steady_clock::now();
    MultiGraph g = build_corpus_graph(family, spec);
    DegeneracyCertificate cert = degeneracy(g);

    BenchRow row;
    row.seed = spec.seed;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.k = cert.k;
    row.max_degree = g.max_degree();
    {
        std::ostringstream name;
        name << family << "-n" << spec.n << "-k" << spec.k << "-s" << spec.seed;
        row.name = name.str();
    }

    EdgeOrdering ord = build_ordering(g, cert.k);
    StrongColoring coloring = greedy_color(g, ord);
    row.colors_used = coloring.colors_used;
    row.valid = verify_strong_coloring(g, coloring).ok && verify_ordering(g, cert.k, ord).ok;
    row.audit_pass = audit_all_pass(audit(g, cert.k, ord));
    if (row.m > 0 && cert.k >= 1) {
        row.bound = strong_bound(cert.k, g.max_degree());
        row.slack = *row.bound - row.colors_used;
    }
    if (exact_budget && row.m <= 20) {
        ExactResult ex = exact_chi_s(g, *exact_budget);
        if (!ex.timed_out) row.exact = ex.chi_s;
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return row;
}

inline json bench_row_to_json(const BenchRow& row) {
    json j{{"name", row.name},     {"seed", row.seed},
           {"n", row.n},           {"m", row.m},
           {"k", row.k},           {"max_degree", row.max_degree},
           {"colors_used", row.colors_used}, {"valid", row.valid},
           {"audit_pass", row.audit_pass}};
    j["bound"] = row.bound ? json(*row.bound) : json(nullptr);
    j["slack"] = row.slack ? json(*row.slack) : json(nullptr);
    j["exact"] = row.exact ? json(*row.exact) : json(nullptr);
    return j;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"strong edge coloring of k-degenerate multigraphs"};
    app.name("strongedge");
    app.require_subcommand(1);

    std::string input_path;
    std::string format = "json";
    std::optional<int> k_opt;

    auto add_common = [&](CLI::App* cmd, bool with_k) {
        cmd->add_option("--input", input_path, "graph file (canonical or DIMACS); stdin if omitted");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        if (with_k)
            cmd->add_option("--k", k_opt, "degeneracy parameter; computed when omitted");
    };

    CLI::App* cmd_degeneracy = app.add_subcommand("degeneracy", "degeneracy value and peel order");
    add_common(cmd_degeneracy, false);

    CLI::App* cmd_order = app.add_subcommand("order", "build the special-edge ordering");
    add_common(cmd_order, true);

    CLI::App* cmd_color = app.add_subcommand("color", "order, greedily color and verify");
    add_common(cmd_color, true);

    std::string coloring_path;
    CLI::App* cmd_verify = app.add_subcommand("verify", "check a coloring file against a graph");
    add_common(cmd_verify, false);
    cmd_verify->add_option("--coloring", coloring_path, "coloring JSON file")->required();

    std::string ordering_path;
    CLI::App* cmd_audit = app.add_subcommand("audit", "per-edge counting checks for an ordering");
    add_common(cmd_audit, true);
    cmd_audit->add_option("--ordering", ordering_path,
                          "ordering JSON to replay; built fresh when omitted");

    long long budget = 5'000'000;
    CLI::App* cmd_exact = app.add_subcommand("exact", "exact strong chromatic index (small graphs)");
    add_common(cmd_exact, false);
    cmd_exact->add_option("--budget", budget, "search-node budget");

    std::string family = "random-k-degenerate";
    int gen_n = 10;
    int gen_k = 2;
    std::uint64_t seed = 0;
    double parallel_prob = 0.2;
    std::string output_path;
    CLI::App* cmd_gen = app.add_subcommand("gen", "emit a generated graph as canonical edge list");
    cmd_gen->add_option("--family", family,
                        "path|cycle|complete|star|random-tree|random-k-degenerate|"
                        "multi-k-degenerate|saturated-k")
        ->required();
    cmd_gen->add_option("--n", gen_n, "vertex count")->required();
    cmd_gen->add_option("--k", gen_k, "degeneracy target");
    cmd_gen->add_option("--seed", seed, "64-bit seed");
    cmd_gen->add_option("--parallel-prob", parallel_prob, "duplication chance (multi family)");
    cmd_gen->add_option("--output", output_path, "write here instead of stdout");

    int count = 100;
    int jobs = 1;
    CLI::App* cmd_bench = app.add_subcommand("bench", "run the pipeline over a seeded corpus");
    cmd_bench->add_option("--family", family, "corpus family (see gen)");
    cmd_bench->add_option("--n", gen_n, "vertex count per instance");
    cmd_bench->add_option("--k", gen_k, "degeneracy target per instance");
    cmd_bench->add_option("--seed", seed, "base seed; instance i uses seed+i");
    cmd_bench->add_option("--count", count, "number of instances");
    cmd_bench->add_option("--jobs", jobs, "worker threads");
    cmd_bench->add_option("--parallel-prob", parallel_prob, "duplication chance (multi family)");
    CLI::Option* bench_budget =
        cmd_bench->add_option("--budget", budget, "also run the exact oracle (edges <= 20)");
    cmd_bench->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes reversed argv
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_degeneracy) {
            MultiGraph g = detail::load_graph(input_path, in).graph;
            DegeneracyCertificate cert = degeneracy(g);
            if (format == "json") {
                out << degeneracy_to_json(cert).dump(2) << '\n';
            } else {
                out << "k = " << cert.k << '\n' << "peel order:";
                for (Vertex v : cert.peel_order) out << ' ' << v;
                out << '\n' << "back degrees:";
                for (int d : cert.back_degrees) out << ' ' << d;
                out << '\n';
            }
            return 0;
        }

        if (*cmd_order) {
            MultiGraph g = detail::load_graph(input_path, in).graph;
            int k = k_opt ? *k_opt : degeneracy(g).k;
            EdgeOrdering ord = build_ordering(g, k);
            if (format == "json") {
                out << ordering_to_json(g, ord).dump(2) << '\n';
            } else {
                for (int i = 0; i < static_cast<int>(ord.sequence.size()); ++i) {
                    const Edge& ed = g.edge(ord.sequence[i].edge);
                    out << "pos=" << i + 1 << " id=" << ord.sequence[i].edge << " edge=(" << ed.u
                        << ',' << ed.v << ") special=" << ord.sequence[i].special << '\n';
                }
            }
            return 0;
        }

        if (*cmd_color) {
            MultiGraph g = detail::load_graph(input_path, in).graph;
            ColorRun run = color_graph(g, k_opt);
            if (format == "json") {
                out << coloring_report_to_json(g, run).dump(2) << '\n';
            } else {
                out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " k=" << run.report.k
                    << " max_degree=" << run.report.max_degree;
                if (run.report.bound) out << " bound=" << *run.report.bound;
                out << " colors_used=" << run.report.colors_used
                    << " valid=" << (run.report.valid ? "yes" : "no") << '\n';
            }
            return run.report.valid ? 0 : 1;
        }

        if (*cmd_verify) {
            MultiGraph g = detail::load_graph(input_path, in).graph;
            StrongColoring coloring = coloring_from_json(g, detail::load_json(coloring_path));
            ColoringVerdict verdict = verify_strong_coloring(g, coloring);
            if (format == "json") {
                json j{{"valid", verdict.ok}};
                if (!verdict.ok) {
                    j["edge_a"] = verdict.first;
                    j["edge_b"] = verdict.second;
                    j["color"] = verdict.color;
                    j["reason"] = verdict.reason;
                }
                out << j.dump(2) << '\n';
            } else {
                out << (verdict.ok ? "valid strong coloring" : "INVALID: " + verdict.reason)
                    << '\n';
            }
            return verdict.ok ? 0 : 1;
        }

        if (*cmd_audit) {
            MultiGraph g = detail::load_graph(input_path, in).graph;
            int k = k_opt ? *k_opt : degeneracy(g).k;
            bool ordering_ok = true;
            EdgeOrdering ord;
            if (ordering_path.empty()) {
                ord = build_ordering(g, k);
            } else {
                ord = ordering_from_json(g, detail::load_json(ordering_path));
                OrderingVerdict v = verify_ordering(g, k, ord);
                ordering_ok = v.ok;
                if (!v.ok)
                    err << "ordering invalid at position " << v.position << ": " << v.reason
                        << '\n';
            }
            std::vector<AuditRecord> records = audit(g, k, ord);
            bool pass = audit_all_pass(records) && ordering_ok;
            if (format == "json") {
                out << audit_to_json(g, records).dump(2) << '\n';
            } else {
                out << "records=" << records.size() << " k=" << k
                    << " all_checks=" << (audit_all_pass(records) ? "pass" : "FAIL") << '\n';
                for (const AuditRecord& r : records)
                    if (!r.checks.all())
                        out << "  pos=" << r.position << " id=" << r.edge
                            << " total=" << r.total_conflicts << " u_side=" << r.u_side_count
                            << " v_side=" << r.v_side_count << '\n';
            }
            return pass ? 0 : 1;
        }

        if (*cmd_exact) {
            MultiGraph g = detail::load_graph(input_path, in).graph;
            ExactResult res = exact_chi_s(g, budget);
            if (format == "json") {
                out << exact_to_json(res).dump(2) << '\n';
            } else if (res.timed_out) {
                out << "chi_s <= " << res.chi_s << " (timed out; lower_bound=" << res.lower_bound
                    << " nodes=" << res.nodes_explored << ")\n";
            } else {
                out << "chi_s = " << res.chi_s << " (nodes=" << res.nodes_explored << ")\n";
            }
            return 0;
        }

        if (*cmd_gen) {
            GenSpec spec{Family::random_k_degenerate, gen_n, gen_k, seed, parallel_prob};
            MultiGraph g = detail::build_corpus_graph(family, spec);
            if (output_path.empty()) {
                write_edge_list(out, g);
            } else {
                std::ofstream f(output_path);
                if (!f) throw std::invalid_argument("cannot open output file: " + output_path);
                write_edge_list(f, g);
            }
            return 0;
        }

        if (*cmd_bench) {
            if (count < 0) throw std::invalid_argument("count must be non-negative");
            if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
            std::optional<long long> exact_budget;
            if (bench_budget->count() > 0) exact_budget = budget;

            std::vector<detail::BenchRow> rows(count);
            std::vector<std::string> failures;
            std::atomic<int> next{0};
            std::mutex failure_mutex;
            auto worker = [&]() {
                for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        GenSpec spec{Family::random_k_degenerate, gen_n, gen_k,
                                     seed + static_cast<std::uint64_t>(i), parallel_prob};
                        rows[i] = detail::bench_instance(family, spec, exact_budget);
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        failures.push_back("instance " + std::to_string(i) + ": " + e.what());
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
            if (!failures.empty()) {
                for (const std::string& f : failures) err << "error: " << f << '\n';
                return 2;
            }

            int violations = 0;
            std::optional<long long> min_slack;
            for (const auto& row : rows) {
                if (!row.pass()) ++violations;
                if (row.slack && (!min_slack || *row.slack < *min_slack)) min_slack = *row.slack;
            }

            if (format == "json") {
                json j{{"rows", json::array()},
                       {"summary",
                        {{"count", count},
                         {"violations", violations},
                         {"min_slack", min_slack ? json(*min_slack) : json(nullptr)}}}};
                for (const auto& row : rows) j["rows"].push_back(detail::bench_row_to_json(row));
                out << j.dump(2) << '\n';
            } else {
                out << std::left << std::setw(34) << "name" << std::right << std::setw(5) << "n"
                    << std::setw(6) << "m" << std::setw(4) << "k" << std::setw(5) << "D"
                    << std::setw(8) << "colors" << std::setw(8) << "bound" << std::setw(7)
                    << "slack" << std::setw(7) << "exact" << std::setw(7) << "ok" << std::setw(10)
                    << "ms" << '\n';
                for (const auto& row : rows) {
                    out << std::left << std::setw(34) << row.name << std::right << std::setw(5)
                        << row.n << std::setw(6) << row.m << std::setw(4) << row.k << std::setw(5)
                        << row.max_degree << std::setw(8) << row.colors_used;
                    out << std::setw(8) << (row.bound ? std::to_string(*row.bound) : "-");
                    out << std::setw(7) << (row.slack ? std::to_string(*row.slack) : "-");
                    out << std::setw(7) << (row.exact ? std::to_string(*row.exact) : "-");
                    out << std::setw(7) << (row.pass() ? "yes" : "NO") << std::setw(10)
                        << std::fixed << std::setprecision(2) << row.wall_ms << '\n';
                }
                out << "instances=" << count << " violations=" << violations;
                if (min_slack) out << " min_slack=" << *min_slack;
                out << '\n';
            }
            return violations == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace strongedge::cli
