// Command-line front end for the disjointness-graph toolkit.
//
// Exit codes: 0 = ran to completion with all mathematical expectations
// holding, 1 = a mathematical expectation failed (a verdict contradicting
// the classification, a fixture that no longer verifies, more order types
// than the published total), 2 = unusable input or environment.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dlab/disjointness.hpp"
#include "dlab/geometry.hpp"
#include "dlab/hamilton.hpp"
#include "dlab/metrics.hpp"
#include "dlab/minor.hpp"
#include "dlab/ordertype.hpp"
#include "dlab/plotnikov.hpp"
#include "dlab/report.hpp"
#include "dlab/util.hpp"

namespace {

struct ReportSink {
    std::unique_ptr<std::ofstream> file;
    std::unique_ptr<dlab::ReportStream> stream;

    // Reports go to the named file, or to stdout when the path is empty and
    // stdout is not already claimed by primary output.
    ReportSink(const std::string& path, bool timings, bool stdout_fallback) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw dlab::Error("cannot open report file: " + path);
            stream = std::make_unique<dlab::ReportStream>(*file, timings);
        } else if (stdout_fallback) {
            stream = std::make_unique<dlab::ReportStream>(std::cout, timings);
        }
    }

    void emit(dlab::ojson rec) {
        if (stream) stream->emit(std::move(rec));
    }
};

std::string db_path(const std::string& dir, int n) {
    return dir + "/" + dlab::database_filename(n);
}

dlab::PointSet read_points_file(const std::string& path) {
    if (path == "-") return dlab::read_point_set(std::cin);
    std::ifstream in(path);
    if (!in) throw dlab::Error("cannot open point file: " + path);
    return dlab::read_point_set(in);
}

std::string cycle_string(const std::vector<int>& cycle) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) ss << " ";
        ss << cycle[i];
    }
    return ss.str();
}

struct Verdict {
    dlab::ojson record;
    bool consistent = true;
};

// One full verdict record for a point set: classification, certificate and
// the supporting invariants, checked against the expected classification.
Verdict verdict_for(std::uint64_t id, const dlab::PointSet& ps) {
    int n = ps.size();
    dlab::DisjointnessGraph d = dlab::build_disjointness_graph(ps);
    bool convex = dlab::is_convex_position(ps);
    dlab::HamiltonResult ham = dlab::find_hamiltonian_cycle(d.graph);
    int alpha = dlab::independence_number(d.graph);
    int kappa = dlab::vertex_connectivity(d.graph);
    int bound = n >= 3 ? dlab::connectivity_lower_bound(n) : 0;

    bool hamiltonian = ham.status == dlab::HamiltonResult::Status::kFound;
    std::string witness_or_reason =
        hamiltonian ? "cycle: " + cycle_string(ham.cycle)
                    : "exhausted: " + std::to_string(ham.nodes) + " nodes";

    Verdict v;
    v.record = dlab::ojson{{"order_type_id", id},
                           {"n", n},
                           {"signature", dlab::canonical_signature(ps, true).hex()},
                           {"convex", convex},
                           {"hamiltonian", hamiltonian},
                           {"witness_or_reason", witness_or_reason},
                           {"alpha", alpha},
                           {"kappa", kappa},
                           {"bound", bound}};
    bool ham_ok = hamiltonian == dlab::theorem1_expected_hamiltonian(n, convex) &&
                  (hamiltonian ? dlab::verify_cycle(d.graph, ham.cycle) : ham.exhausted);
    bool alpha_ok = n < 5 || alpha == n - 1 || alpha == n;
    bool kappa_ok = n < 5 || kappa >= bound;
    v.consistent = ham_ok && alpha_ok && kappa_ok;
    v.record["consistent"] = v.consistent;
    return v;
}

int cmd_verify_theorem(const std::string& db_dir, int n, unsigned jobs,
                       const std::string& report_path, bool timings) {
    std::string path = db_path(db_dir, n);
    std::vector<dlab::PointSet> sets = dlab::ingest_database(path, n);
    ReportSink sink(report_path, timings, true);
    sink.emit(dlab::ojson{{"event", "meta"},
                          {"tool", "verify-theorem"},
                          {"n", n},
                          {"db_file", path},
                          {"db_fnv1a64", dlab::file_hash_hex(path)},
                          {"order_types", sets.size()}});
    std::vector<Verdict> verdicts(sets.size());
    dlab::parallel_for(sets.size(), jobs, [&](std::size_t i) {
        verdicts[i] = verdict_for(i, sets[i]);
    });
    std::uint64_t hamiltonian = 0, inconsistent = 0;
    for (Verdict& v : verdicts) {
        if (v.record["hamiltonian"].get<bool>()) ++hamiltonian;
        if (!v.consistent) ++inconsistent;
        sink.emit(std::move(v.record));
    }
    std::uint64_t non_ham = sets.size() - hamiltonian;
    std::uint64_t expected_non_ham =
        n < 6 ? sets.size() : (n == 6 ? 1 : 0);  // exactly the six-point convex class
    bool consistent = inconsistent == 0 && non_ham == expected_non_ham;
    sink.emit(dlab::ojson{{"event", "summary"},
                          {"n", n},
                          {"order_types", sets.size()},
                          {"hamiltonian", hamiltonian},
                          {"non_hamiltonian", non_ham},
                          {"expected_non_hamiltonian", expected_non_ham},
                          {"consistent", consistent}});
    if (!report_path.empty())
        std::cout << "n=" << n << ": " << sets.size() << " order types, " << non_ham
                  << " non-hamiltonian (expected " << expected_non_ham << ") -> "
                  << (consistent ? "consistent" : "CONTRADICTION") << "\n";
    return consistent ? 0 : 1;
}

int cmd_ham_check(const std::string& points_path, const std::string& report_path, bool timings) {
    dlab::PointSet ps = read_points_file(points_path);
    int n = ps.size();
    Verdict v = verdict_for(0, ps);
    dlab::DisjointnessGraph d = dlab::build_disjointness_graph(ps);
    if (!d.graph.is_connected())
        std::cout << "DISCONNECTED\n";
    else if (v.record["hamiltonian"].get<bool>())
        std::cout << "HAMILTONIAN\n";
    else
        std::cout << "NOT HAMILTONIAN\n";
    std::cout << v.record["witness_or_reason"].get<std::string>() << "\n";
    std::cout << "alpha: " << v.record["alpha"] << "\n";
    std::cout << "kappa: " << v.record["kappa"] << "\n";
    std::cout << "bound: " << v.record["bound"] << "\n";
    ReportSink sink(report_path, timings, false);
    sink.emit(dlab::ojson{{"event", "meta"}, {"tool", "ham-check"}, {"points", points_path}, {"n", n}});
    sink.emit(v.record);
    // A verdict against the classification is a mathematical contradiction.
    bool connected_ok = d.graph.is_connected() == (n >= 5);
    return v.consistent && connected_ok ? 0 : 1;
}

int cmd_census(int n, std::uint64_t trials, std::uint64_t seed, bool reflection, unsigned jobs,
               const std::string& report_path, bool timings) {
    dlab::Census census = dlab::census(n, trials, seed, reflection, jobs);
    for (const auto& [sig, rep] : census.representatives) {
        std::cout << sig.hex() << "\t";
        const auto& pts = rep.points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) std::cout << " ";
            std::cout << pts[i].x << " " << pts[i].y;
        }
        std::cout << "\n";
    }
    ReportSink sink(report_path, timings, false);
    sink.emit(dlab::ojson{{"event", "meta"},
                          {"tool", "census"},
                          {"n", n},
                          {"trials", trials},
                          {"seed", seed},
                          {"reflection", reflection},
                          {"found", census.representatives.size()}});
    for (const auto& [trial, count] : census.milestones)
        sink.emit(dlab::ojson{{"event", "milestone"}, {"trial", trial}, {"distinct", count}});
    auto known = dlab::known_order_type_count(n);
    if (known && reflection) {
        // finding more classes than the published total would disprove it
        bool consistent = census.representatives.size() <= *known;
        sink.emit(dlab::ojson{{"event", "summary"},
                              {"found", census.representatives.size()},
                              {"known", *known},
                              {"saturated", census.representatives.size() == *known},
                              {"consistent", consistent}});
        if (!consistent) {
            std::cerr << "census found " << census.representatives.size()
                      << " classes, more than the published " << *known << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_export_graph(const std::string& points_path, const std::string& out_path) {
    dlab::PointSet ps = read_points_file(points_path);
    dlab::DisjointnessGraph d = dlab::build_disjointness_graph(ps);
    if (out_path.empty()) {
        dlab::export_graph(std::cout, d);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) throw dlab::Error("cannot open output file: " + out_path);
    dlab::export_graph(out, d);
    return 0;
}

// Prints the four counterexample checks for H; returns true when all hold.
bool report_counterexample_checks(const dlab::CounterexampleReport& r, ReportSink& sink) {
    std::cout << "kappa: " << r.kappa << " (need >= 2: " << (r.two_connected ? "ok" : "FAIL")
              << ")\n";
    if (r.non_hamiltonian)
        std::cout << "hamiltonian-cycle: none, search exhausted after " << r.ham.nodes
                  << " nodes (ok)\n";
    else
        std::cout << "hamiltonian-cycle: " << (r.ham.status == dlab::HamiltonResult::Status::kFound
                                                   ? "found -- not a counterexample"
                                                   : "undecided")
                  << " (FAIL)\n";
    std::cout << "alpha: " << r.alpha << " (need <= 3: " << (r.alpha_at_most_3 ? "ok" : "FAIL")
              << ")\n";
    std::cout << "criterion: " << (r.criterion.holds ? "holds" : "violated") << " over "
              << r.criterion.sets_checked << " independent sets ("
              << (r.criterion.holds ? "ok" : "FAIL") << ")\n";
    sink.emit(dlab::ojson{{"event", "counterexample-check"},
                          {"kappa", r.kappa},
                          {"non_hamiltonian", r.non_hamiltonian},
                          {"search_nodes", r.ham.nodes},
                          {"alpha", r.alpha},
                          {"criterion_holds", r.criterion.holds},
                          {"independent_sets_checked", r.criterion.sets_checked},
                          {"is_counterexample", r.is_counterexample()}});
    return r.is_counterexample();
}

int cmd_plotnikov_verify_fixture(const std::string& fixture_path, const std::string& report_path,
                                 bool timings) {
    std::ifstream in(fixture_path);
    if (!in) throw dlab::Error("cannot open fixture file: " + fixture_path);
    dlab::MinorWitness w = dlab::read_witness(in);
    if (w.source_id != "D(C6)")
        throw dlab::Error("fixture source is '" + w.source_id + "', expected 'D(C6)'");
    dlab::SimpleGraph source = dlab::build_disjointness_graph(dlab::convex_hexagon_c6()).graph;
    ReportSink sink(report_path, timings, false);
    sink.emit(dlab::ojson{{"event", "meta"},
                          {"tool", "plotnikov-verify-fixture"},
                          {"fixture", fixture_path},
                          {"fixture_fnv1a64", dlab::file_hash_hex(fixture_path)},
                          {"ops", w.ops.size()}});
    if (!dlab::verify_witness(w, source)) {
        std::cout << "witness-replay: FAIL (script does not reproduce the recorded result)\n";
        return 1;
    }
    dlab::SimpleGraph h = dlab::replay_minor_ops(source, w.ops);
    std::cout << "witness-replay: ok (" << w.ops.size() << " ops -> " << h.vertex_count()
              << " vertices, " << h.edge_count() << " edges)\n";
    dlab::CounterexampleReport r = dlab::verify_counterexample(h);
    bool good = report_counterexample_checks(r, sink);
    std::cout << (good ? "counterexample: confirmed\n" : "counterexample: NOT confirmed\n");
    return good ? 0 : 1;
}

int cmd_plotnikov_mine(std::uint64_t seed, std::uint64_t budget, unsigned jobs,
                       const std::string& out_path, const std::string& report_path, bool timings) {
    dlab::SimpleGraph source = dlab::build_disjointness_graph(dlab::convex_hexagon_c6()).graph;
    dlab::MineParams params;
    params.seed = seed;
    params.budget = budget;
    params.jobs = jobs;
    dlab::MineOutcome out = dlab::mine_counterexample(source, "D(C6)", params);
    ReportSink sink(report_path, timings, false);
    sink.emit(dlab::ojson{{"event", "meta"},
                          {"tool", "plotnikov-mine"},
                          {"seed", seed},
                          {"budget", budget},
                          {"found", out.found},
                          {"candidates_tried", out.candidates_tried}});
    if (!out.found) {
        std::cout << "no counterexample found in " << out.candidates_tried
                  << " candidates; rerun with a different --seed or a larger --budget\n";
        return 0;
    }
    std::cout << "counterexample found after " << out.candidates_tried << " candidates\n";
    report_counterexample_checks(out.report, sink);
    if (out_path.empty()) {
        dlab::write_witness(std::cout, out.witness);
    } else {
        std::ofstream f(out_path);
        if (!f) throw dlab::Error("cannot open output file: " + out_path);
        dlab::write_witness(f, out.witness);
        std::cout << "witness written to " << out_path << "\n";
    }
    return 0;
}

int cmd_plotnikov_check(const std::string& graph_path, const std::string& report_path,
                        bool timings) {
    std::ifstream in(graph_path);
    if (!in) throw dlab::Error("cannot open graph file: " + graph_path);
    dlab::SimpleGraph g = dlab::read_graph_auto(in);
    ReportSink sink(report_path, timings, false);
    sink.emit(dlab::ojson{{"event", "meta"},
                          {"tool", "plotnikov-check"},
                          {"graph", graph_path},
                          {"vertices", g.vertex_count()},
                          {"edges", g.edge_count()}});
    dlab::CounterexampleReport r = dlab::verify_counterexample(g);
    bool good = report_counterexample_checks(r, sink);
    std::cout << (good ? "counterexample: confirmed\n" : "counterexample: not confirmed\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disjointness-graph toolkit"};
    app.require_subcommand(1);

    std::string db_dir = "data";
    std::uint64_t seed = 1;
    unsigned jobs = dlab::default_jobs();
    std::string report_path;
    bool timings = false;
    app.add_option("--db-dir", db_dir, "directory holding otypes*.bin")
        ->envname("DLAB_DB_DIR");
    app.add_option("--seed", seed, "random seed for sampling commands")->envname("DLAB_SEED");
    app.add_option("--jobs", jobs, "worker threads")->envname("DLAB_JOBS")->check(CLI::Range(1u, 256u));
    app.add_option("--report", report_path, "write the JSON-lines report to this file")
        ->envname("DLAB_REPORT");
    app.add_flag("--timings", timings, "include wall-clock fields in reports (breaks byte-for-byte determinism)")
        ->envname("DLAB_TIMINGS");

    auto* verify = app.add_subcommand("verify-theorem",
                                      "sweep an order-type database and check every verdict");
    verify->fallthrough();
    int verify_n = 6;
    verify->add_option("--n", verify_n, "point count of the database to sweep")
        ->required()
        ->check(CLI::Range(3, 10));

    auto* ham = app.add_subcommand("ham-check", "classify one point set read from a file");
    ham->fallthrough();
    std::string ham_points;
    ham->add_option("--points", ham_points, "point-set file ('-' for stdin)")->required();

    auto* census_cmd = app.add_subcommand("census", "sample random point sets and list the distinct order types");
    census_cmd->fallthrough();
    int census_n = 5;
    std::uint64_t census_trials = 100000;
    std::string census_reflection = "on";
    census_cmd->add_option("--n", census_n, "points per sample")->required()->check(CLI::Range(3, 8));
    census_cmd->add_option("--trials", census_trials, "number of random sets to draw")
        ->envname("DLAB_TRIALS");
    census_cmd->add_option("--reflection", census_reflection,
                           "identify mirror images: on (default) or off")
        ->envname("DLAB_REFLECTION")
        ->check(CLI::IsMember({"on", "off"}));

    auto* exportg = app.add_subcommand("export-graph", "write the disjointness graph of a point set");
    exportg->fallthrough();
    std::string export_points, export_out;
    exportg->add_option("--points", export_points, "point-set file ('-' for stdin)")->required();
    exportg->add_option("--out", export_out, "output file (default: stdout)");

    auto* plot = app.add_subcommand("plotnikov", "criterion counterexample tools");
    plot->fallthrough();
    plot->require_subcommand(1);
    auto* fixture = plot->add_subcommand("verify-fixture", "replay and re-verify a stored witness");
    fixture->fallthrough();
    std::string fixture_path = "data/minor_witness_c6.txt";
    fixture->add_option("--fixture", fixture_path, "witness file to verify");
    auto* mine = plot->add_subcommand("mine", "search minors of D(C6) for a counterexample");
    mine->fallthrough();
    std::uint64_t mine_budget = 20000;
    std::string mine_out;
    mine->add_option("--budget", mine_budget, "candidate partitions to examine");
    mine->add_option("--out", mine_out, "write the witness here (default: stdout)");
    auto* check = plot->add_subcommand("check", "run the counterexample checks on any graph file");
    check->fallthrough();
    std::string check_graph;
    check->add_option("--graph", check_graph, "graph file (edge list or segment format)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify))
            return cmd_verify_theorem(db_dir, verify_n, jobs, report_path, timings);
        if (app.got_subcommand(ham)) return cmd_ham_check(ham_points, report_path, timings);
        if (app.got_subcommand(census_cmd))
            return cmd_census(census_n, census_trials, seed, census_reflection == "on", jobs,
                              report_path, timings);
        if (app.got_subcommand(exportg)) return cmd_export_graph(export_points, export_out);
        if (app.got_subcommand(plot)) {
            if (plot->got_subcommand(fixture))
                return cmd_plotnikov_verify_fixture(fixture_path, report_path, timings);
            if (plot->got_subcommand(mine))
                return cmd_plotnikov_mine(seed, mine_budget, jobs, mine_out, report_path, timings);
            if (plot->got_subcommand(check))
                return cmd_plotnikov_check(check_graph, report_path, timings);
        }
    } catch (const dlab::GeneralPositionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const dlab::IngestError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const dlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}
