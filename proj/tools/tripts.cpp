// Command-line front end: generate point sets, analyze the empty-triangle
// graphs, compute matchings, augment, sweep random instances, render SVG.
//
// Exit codes: 0 = success and all asserted checks passed, 1 = a check failed,
// 2 = bad input (unreadable/malformed file, non-general-position set, bad
// flags).

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tripts/augment.hpp"
#include "tripts/families.hpp"
#include "tripts/generate.hpp"
#include "tripts/io.hpp"
#include "tripts/matching.hpp"
#include "tripts/structure.hpp"
#include "tripts/svg.hpp"

namespace {

using namespace tripts;

int oracle_limit() {
    if (const char* v = std::getenv("TRIPTS_ORACLE_LIMIT")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("TRIPTS_ORACLE_LIMIT is not an integer");
        }
    }
    return 200;
}

PointSet load_points(const std::string& path) {
    PointSet ps = read_points_file(path);
    auto gp = general_position(ps);
    if (!gp.ok) {
        throw std::invalid_argument("input not in general position (pair " +
                                    std::to_string(gp.violating_pair->first) + "," +
                                    std::to_string(gp.violating_pair->second) + ")");
    }
    ps.mark_certified();
    return ps;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

TriGraph build_flavor(const PointSet& ps, Flavor f) {
    switch (f) {
        case Flavor::down:
        case Flavor::up: return build_cone_minimum(ps, f);
        case Flavor::union_of:
            return union_graph(build_cone_minimum(ps, Flavor::down),
                               build_cone_minimum(ps, Flavor::up));
        case Flavor::intersection:
            return intersect_graph(build_cone_minimum(ps, Flavor::down),
                                   build_cone_minimum(ps, Flavor::up));
    }
    throw std::invalid_argument("bad flavor");
}

bool check_enabled(const std::vector<std::string>& checks, const std::string& name) {
    if (checks.empty()) return true;
    if (std::find(checks.begin(), checks.end(), "all") != checks.end()) return true;
    return std::find(checks.begin(), checks.end(), name) != checks.end();
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const std::string& input, Flavor flavor, const std::vector<std::string>& checks,
                const std::string& oracle_mode, const std::string& out) {
    PointSet ps = load_points(input);
    const int n = int(ps.size());
    TriGraph g = build_flavor(ps, flavor);

    RunReport r;
    r.add("n", long(n));
    r.add("flavor", flavor_name(flavor));
    r.add("edges", long(g.edges.size()));

    bool want_oracle = oracle_mode == "on" || (oracle_mode == "auto" && n <= oracle_limit());
    if (want_oracle && check_enabled(checks, "oracle_equivalence")) {
        bool eq = true;
        for (Flavor f : {Flavor::down, Flavor::up}) {
            if (flavor == Flavor::down && f == Flavor::up) continue;
            if (flavor == Flavor::up && f == Flavor::down) continue;
            eq = eq && build_cone_minimum(ps, f).edges == build_oracle(ps, f).edges;
        }
        r.add("oracle_equivalence", eq);
    }

    // the union flavor is not planar in general; only its two halves are
    if (flavor != Flavor::union_of && check_enabled(checks, "planar")) {
        r.add("planar", check_planarity_by_segments(g));
    }
    if (check_enabled(checks, "connected")) r.add("connected", is_connected(n, g.edges));

    if (flavor == Flavor::down || flavor == Flavor::up) {
        if (check_enabled(checks, "internal_triangulation") && !g.edges.empty()) {
            Embedding e = embed(g, false);
            r.add("internal_triangulation", check_internal_triangulation(e));
            if (check_enabled(checks, "cut_vertices_on_outer")) {
                r.add("cut_vertices_on_outer",
                      check_cut_vertices_on_outer_face(e, block_cut_tree(g)));
            }
        }
        if (check_enabled(checks, "degree_one_limit")) {
            r.add("degree_one_count", long(degree_one_census(g).size()));
            r.add("degree_one_limit", degree_one_census(g).size() <= 3);
        }
        if (check_enabled(checks, "path_in_triangle")) {
            bool ok = true;
            try {
                for (int p = 0; p < n && ok; ++p) {
                    for (int q = p + 1; q < n; ++q) check_path_in_triangle(g, p, q);
                }
            } catch (const std::logic_error&) {
                ok = false;
            }
            r.add("path_in_triangle", ok);
        }
    }

    if (flavor == Flavor::down) {
        if (check_enabled(checks, "matching_lower_bound")) {
            DownMatchingReport dm = check_down_matching_bound(ps);
            r.add("matching_size", long(dm.matching_size));
            r.add("matching_bound", long(dm.bound));
            r.add("matching_lower_bound", dm.pass);
        }
        if (check_enabled(checks, "augmentation") && n >= 3) {
            AugmentedGraph a = augment(g, embed(g, false));
            AugmentReport ar = verify_augmented(a);
            bool transfer = restrict_matching(a, max_matching(a.graph)).size() >=
                            max_matching(a.graph).size() - int(a.added_vertices.size());
            PlanarMatchingReport pm = check_planar_matching_bound(a.graph);
            r.add("augmentation", ar.pass() && transfer && pm.preconditions_ok && pm.pass);
        }
    }

    if (flavor == Flavor::union_of) {
        if (check_enabled(checks, "degree_one_limit")) {
            r.add("degree_one_count", long(degree_one_census(g).size()));
            r.add("degree_one_limit", degree_one_census(g).size() <= 2);
        }
        if (check_enabled(checks, "edge_bound") && n >= 3) {
            r.add("edge_bound", long(g.edges.size()) <= 5L * n - 11);
        }
        if (check_enabled(checks, "cut_cone_split")) {
            r.add("cut_cone_split", check_cut_vertex_structure(g));
        }
        if (check_enabled(checks, "block_tree_path")) {
            r.add("block_tree_path", block_cut_tree(g).is_path());
        }
    }

    if (flavor == Flavor::intersection) {
        if (check_enabled(checks, "intersection_spanning")) {
            bool ok = is_connected(n, g.edges) && long(g.edges.size()) >= n - 1;
            if (ok && n >= 2) {
                for (const Edge& e : hexagon_growth_tree(ps)) {
                    if (!g.edges.count(e)) ok = false;
                }
            }
            r.add("intersection_spanning", ok);
        }
    }

    std::ostringstream os;
    r.print(os);
    write_output(out, os.str());
    return r.all_checks_pass() ? 0 : 1;
}

// ------------------------------------------------------------------ match --

int run_match(const std::string& input, Flavor flavor, const std::string& oracle_mode,
              const std::string& out) {
    PointSet ps = load_points(input);
    TriGraph g = build_flavor(ps, flavor);
    Matching m = max_matching(g);

    RunReport r;
    r.add("n", long(ps.size()));
    r.add("flavor", flavor_name(flavor));
    r.add("matching_size", long(m.size()));
    bool want_oracle =
        oracle_mode == "on" || (oracle_mode == "auto" && g.n() <= 14);
    if (want_oracle) {
        r.add("oracle_agrees", brute_force_matching(g).size() == m.size());
    }
    std::ostringstream os;
    r.print(os);
    for (auto& [u, v] : m.edges) os << "edge=" << u << " " << v << "\n";
    write_output(out, os.str());
    return r.all_checks_pass() ? 0 : 1;
}

// ---------------------------------------------------------------- augment --

int run_augment(const std::string& input, const std::string& out) {
    PointSet ps = load_points(input);
    TriGraph g = build_cone_minimum(ps, Flavor::down);
    AugmentedGraph a = augment(g, embed(g, false));
    AugmentReport ar = verify_augmented(a);

    Matching big = max_matching(a.graph);
    Matching small = restrict_matching(a, big);
    PlanarMatchingReport pm = check_planar_matching_bound(a.graph);

    RunReport r;
    r.add("n", long(g.n()));
    r.add("added_vertices", long(a.added_vertices.size()));
    r.add("min_degree_three", ar.min_degree_three);
    r.add("two_connected", ar.two_connected);
    r.add("planar_embedding", ar.planar_embedding);
    r.add("vertex_count", ar.vertex_count_ok);
    r.add("transfer_inequality",
          small.size() >= big.size() - int(a.added_vertices.size()));
    r.add("planar_matching_bound", pm.preconditions_ok && pm.pass);
    std::ostringstream os;
    r.print(os);
    write_output(out, os.str());
    return r.all_checks_pass() ? 0 : 1;
}

// ------------------------------------------------------- conjecture-search --

struct TrialResult {
    int n = 0;
    int matching = 0;
    int slack = 0; // matching - floor(n/2)
    bool counterexample = false;
    std::string dump;
};

int run_conjecture_search(long trials, int n_min, int n_max, unsigned long seed,
                          const std::string& dump_dir, const std::string& out) {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad n range");
    auto one_trial = [&](long t) {
        std::mt19937_64 rng(seed + (unsigned long)t);
        int n = n_min + int(rng() % (unsigned long)(n_max - n_min + 1));
        PointSet ps = random_general_position(n, rng());
        TriGraph g = build_flavor(ps, Flavor::union_of);
        TrialResult tr;
        tr.n = n;
        tr.matching = max_matching(g).size();
        tr.slack = tr.matching - n / 2;
        tr.counterexample = tr.slack < 0;
        if (tr.counterexample) {
            std::ostringstream os;
            write_points(os, ps);
            tr.dump = os.str();
        }
        return tr;
    };

    // fan trials out to a fixed worker pool; results are merged by index so
    // the report is deterministic in (seed, trials, range)
    unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<TrialResult> results{std::size_t(trials)};
    std::atomic<long> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, [&]() {
            for (long t = next++; t < trials; t = next++) results[std::size_t(t)] = one_trial(t);
        }));
    }
    for (auto& f : pool) f.get();

    long ce = 0, perfect = 0, slack_sum = 0;
    int min_slack = 0;
    bool first = true;
    for (long t = 0; t < trials; ++t) {
        const TrialResult& tr = results[std::size_t(t)];
        slack_sum += tr.slack;
        if (first || tr.slack < min_slack) min_slack = tr.slack;
        first = false;
        if (tr.n % 2 == 0 && tr.matching == tr.n / 2) ++perfect;
        if (tr.counterexample) {
            ++ce;
            std::string path = dump_dir + "/counterexample_" + std::to_string(t) + ".pts";
            std::ofstream f(path);
            f << "# trial " << t << " seed " << seed << "\n" << tr.dump;
            std::cerr << "counterexample dumped to " << path << "\n";
        }
    }
    RunReport r;
    r.add("trials", trials);
    r.add("counterexamples", ce);
    if (trials > 0) {
        r.add("min_slack", long(min_slack));
        r.add("mean_slack_millis", 1000 * slack_sum / trials);
        r.add("perfect", perfect);
    }
    std::ostringstream os;
    r.print(os);
    write_output(out, os.str());
    return 0; // report-only: a counterexample is a successful find, not an error
}

// ----------------------------------------------------------------- render --

int run_render(const std::string& input, Flavor flavor, bool show_triangles, bool plain,
               const std::string& out) {
    PointSet ps = load_points(input);
    TriGraph g = build_flavor(ps, flavor);
    Matching m;
    if (!plain) m = max_matching(g);
    SvgOptions opt;
    opt.show_triangles = show_triangles;
    std::ostringstream os;
    render_svg(os, g, m, opt);
    write_output(out, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-orientation empty-triangle graphs: construction, "
                 "matching, verification"};
    app.require_subcommand(1);

    std::string out;
    std::string input;
    std::string flavor_str = "down";
    std::string oracle_mode = "auto";
    std::vector<std::string> checks;
    unsigned long seed = 1;

    auto* gen = app.add_subcommand("generate", "write a point-set file");
    bool g_random = false, g_tight = false, g_three = false;
    int g_n = 10, g_m = 5, g_drop = 0, g_resolution = 1 << 12;
    gen->add_flag("--random", g_random, "uniform random general-position set");
    gen->add_flag("--tight", g_tight, "family with matching exactly ceil((n-2)/3)");
    gen->add_flag("--three-connected", g_three,
                  "3-connected family with matching exactly ceil((n+5)/3)");
    gen->add_option("-n", g_n, "point count (random)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--resolution", g_resolution, "coordinate grid resolution (random)");
    gen->add_option("-m", g_m, "family size parameter (m >= 5)");
    gen->add_option("--drop", g_drop, "drop the first 1 or 2 family points");
    gen->add_option("-o", out, "output file (default stdout)");

    auto* ana = app.add_subcommand("analyze", "run structural checks on a point set");
    ana->add_option("input", input, "points file")->required();
    ana->add_option("--flavor", flavor_str, "down|up|union|intersection");
    ana->add_option("--checks", checks, "check names or 'all'")->delimiter(',');
    ana->add_option("--oracle", oracle_mode, "on|off|auto");
    ana->add_option("-o", out, "report output (default stdout)");

    auto* mat = app.add_subcommand("match", "compute a maximum matching");
    mat->add_option("input", input, "points file")->required();
    mat->add_option("--flavor", flavor_str, "down|up|union|intersection");
    mat->add_option("--oracle", oracle_mode, "on|off|auto");
    mat->add_option("-o", out, "output (default stdout)");

    auto* aug = app.add_subcommand("augment", "augment the down graph and verify");
    aug->add_option("input", input, "points file")->required();
    aug->add_option("-o", out, "report output (default stdout)");

    auto* con = app.add_subcommand("conjecture-search",
                                   "random sweep for union-graph matchings below floor(n/2)");
    long c_trials = 100;
    int c_nmin = 4, c_nmax = 40;
    std::string c_dump = ".";
    con->add_option("--trials", c_trials, "number of random instances");
    con->add_option("--n-min", c_nmin, "minimum point count");
    con->add_option("--n-max", c_nmax, "maximum point count");
    con->add_option("--seed", seed, "sweep seed");
    con->add_option("--dump-dir", c_dump, "directory for counterexample dumps");
    con->add_option("-o", out, "report output (default stdout)");

    auto* ren = app.add_subcommand("render", "render the graph and matching as SVG");
    bool r_triangles = false, r_plain = false;
    ren->add_option("input", input, "points file")->required();
    ren->add_option("--flavor", flavor_str, "down|up|union|intersection");
    ren->add_flag("--show-triangles", r_triangles, "shade the witness triangle of each edge");
    ren->add_flag("--plain", r_plain, "skip the matching highlight");
    ren->add_option("-o", out, "output SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (int(g_random) + int(g_tight) + int(g_three) != 1) {
                throw std::invalid_argument(
                    "choose exactly one of --random, --tight, --three-connected");
            }
            PointSet ps = g_random ? random_general_position(g_n, seed, g_resolution)
                          : g_tight ? tight_family(g_m, g_drop)
                                    : three_connected_family(g_m, g_drop);
            std::ostringstream os;
            write_points(os, ps);
            write_output(out, os.str());
            return 0;
        }
        if (ana->parsed()) {
            return run_analyze(input, parse_flavor(flavor_str), checks, oracle_mode, out);
        }
        if (mat->parsed()) {
            return run_match(input, parse_flavor(flavor_str), oracle_mode, out);
        }
        if (aug->parsed()) return run_augment(input, out);
        if (con->parsed()) {
            return run_conjecture_search(c_trials, c_nmin, c_nmax, seed, c_dump, out);
        }
        if (ren->parsed()) {
            return run_render(input, parse_flavor(flavor_str), r_triangles, r_plain, out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
