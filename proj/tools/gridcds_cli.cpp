// gridcds: bounds, constructions, exact solving and lemma audits for
// connected dominating sets of grid graphs.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gridcds/analysis.hpp"
#include "gridcds/audit.hpp"
#include "gridcds/bounds.hpp"
#include "gridcds/constructions.hpp"
#include "gridcds/errors.hpp"
#include "gridcds/solver.hpp"

namespace {

using namespace gridcds;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    std::stringstream list(text);
    std::string part;
    while (std::getline(list, part, ',')) {
        if (part.empty()) continue;
        std::size_t sep = part.find("..");
        std::size_t width = 2;
        if (sep == std::string::npos) {
            sep = part.find(':');
            width = 1;
        }
        try {
            if (sep == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                const int lo = std::stoi(part.substr(0, sep));
                const int hi = std::stoi(part.substr(sep + width));
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw InputError("bad range \"" + text + "\"; use a..b, a:b, or a,b,c");
        }
    }
    return out;
}

SolveOptions solve_options(int frontier_limit, double timeout, unsigned threads) {
    SolveOptions o;
    o.frontier_limit = frontier_limit > 0 ? frontier_limit : frontier_limit_from_env();
    o.threads = threads;
    if (timeout > 0) o.timeout = std::chrono::duration<double>(timeout);
    return o;
}

void print_stats(const StructureStats& st) {
    std::cout << "size=" << st.size << "\n"
              << "l=" << st.leaves << "\n"
              << "d2=" << st.bends << "\n"
              << "degree2=" << st.degree2 << "\n"
              << "d3=" << st.deg3 << "\n"
              << "d4=" << st.deg4 << "\n"
              << "h_segments=" << st.h_segments << "\n"
              << "v_segments=" << st.v_segments << "\n"
              << "h_spans_height=" << std::boolalpha << st.h_spans_height << "\n"
              << "v_spans_width=" << st.v_spans_width << "\n"
              << "loss=" << st.loss << "\n"
              << "excess=" << st.excess << "\n"
              << "edges=" << st.edges << "\n"
              << "connected=" << st.connected << "\n"
              << "dominating=" << st.dominating << "\n"
              << "corner_free=" << st.corner_free << "\n"
              << "has_2x2_block=" << st.has_2x2_block << "\n";
}

void print_audit(const AuditReport& r) {
    std::cout << "grid " << r.dims.n << "x" << r.dims.m << "  |S|=" << r.stats.size
              << "  is_tree=" << std::boolalpha << r.is_tree
              << "  has_2x2_block=" << r.has_2x2_block << "\n";
    std::cout << std::left << std::setw(14) << "check" << std::right << std::setw(8) << "lhs"
              << std::setw(8) << "rhs" << std::setw(8) << "slack" << "  status     asserted\n";
    for (const auto& c : r.checks) {
        std::cout << std::left << std::setw(14) << c.name << std::right;
        if (c.skipped) {
            std::cout << std::setw(8) << "-" << std::setw(8) << "-" << std::setw(8) << "-"
                      << "  skipped    -        " << c.note << "\n";
            continue;
        }
        std::cout << std::setw(8) << c.lhs << std::setw(8) << c.rhs << std::setw(8) << c.slack
                  << "  " << std::left << std::setw(11) << (c.holds ? "holds" : "VIOLATED")
                  << std::setw(9) << (c.asserted ? "yes" : "no") << c.note << std::right << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connected dominating sets of grid graphs"};
    app.require_subcommand(1);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on gamma_c");
    int bn = 0, bm = 0;
    bool b_json = false, b_csv = false;
    bounds_cmd->add_option("n", bn, "rows")->required();
    bounds_cmd->add_option("m", bm, "columns")->required();
    auto* bj = bounds_cmd->add_flag("--json", b_json, "JSON output");
    bounds_cmd->add_flag("--csv", b_csv, "CSV output")->excludes(bj);

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Build D1 or D2");
    std::string which, c_format = "ascii";
    int cn = 0, cm = 0;
    construct_cmd->add_option("which", which, "d1 or d2")
        ->required()
        ->check(CLI::IsMember({"d1", "d2"}));
    construct_cmd->add_option("n", cn, "rows")->required();
    construct_cmd->add_option("m", cm, "columns")->required();
    construct_cmd->add_option("--format", c_format, "ascii, json or svg")
        ->check(CLI::IsMember({"ascii", "json", "svg"}));

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "Exact connected domination number");
    int en = 0, em = 0, e_frontier = 0;
    std::string engine = "auto";
    double e_timeout = 0;
    unsigned e_threads = 1;
    bool e_json = false;
    exact_cmd->add_option("n", en, "rows")->required();
    exact_cmd->add_option("m", em, "columns")->required();
    exact_cmd->add_option("--engine", engine, "bf, dp or auto")
        ->check(CLI::IsMember({"bf", "dp", "auto"}));
    exact_cmd->add_option("--frontier-limit", e_frontier,
                          "largest min(n,m) the DP accepts (default 10, or GRIDCDS_FRONTIER_LIMIT)");
    exact_cmd->add_option("--timeout", e_timeout, "seconds; reports unsolved when exceeded");
    exact_cmd->add_option("--threads", e_threads, "DP worker threads, 0 = all cores");
    exact_cmd->add_flag("--json", e_json, "JSON output");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Structure statistics of a vertex set");
    std::string a_file;
    bool a_json = false;
    analyze_cmd->add_option("file", a_file, "vertex-set file ('-' for stdin)")->required();
    analyze_cmd->add_flag("--json", a_json, "JSON output");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "Evaluate every lemma-level inequality");
    std::string u_file, u_nrange = "4..8", u_mrange = "4..8", u_sources = "constructions,random,optimal";
    bool u_json = false, u_sweep = false;
    std::uint64_t u_seed = 0;
    int u_random = 1;
    unsigned u_threads = 1;
    audit_cmd->add_option("file", u_file, "vertex-set file ('-' for stdin)");
    audit_cmd->add_flag("--json", u_json, "JSON output");
    auto* sweep_flag = audit_cmd->add_flag("--sweep", u_sweep, "audit a batch of generated sets, print CSV summary");
    audit_cmd->add_option("--n-range", u_nrange, "rows for --sweep");
    audit_cmd->add_option("--m-range", u_mrange, "columns for --sweep");
    audit_cmd->add_option("--sources", u_sources, "comma list of constructions,random,optimal");
    auto* seed_opt = audit_cmd->add_option("--seed", u_seed, "seed for random sets");
    audit_cmd->add_option("--random-per-dims", u_random, "random sets per grid size");
    audit_cmd->add_option("--threads", u_threads, "worker threads, 0 = all cores");

    // survey
    auto* survey_cmd = app.add_subcommand("survey", "Bounds, gaps and exact values over a range");
    std::string s_nrange, s_mrange;
    bool s_exact = false, s_csv = false, s_diag = false, s_gaps = false;
    int s_frontier = 0;
    double s_timeout = 0;
    unsigned s_threads = 1;
    survey_cmd->add_option("--n-range", s_nrange, "rows: a..b, a:b or a,b,c")->required();
    survey_cmd->add_option("--m-range", s_mrange, "columns (defaults to the row range)");
    survey_cmd->add_flag("--diagonal", s_diag, "only square grids n = m");
    survey_cmd->add_flag("--exact-when-feasible", s_exact, "solve exactly where the solver accepts");
    survey_cmd->add_flag("--csv", s_csv, "CSV output");
    survey_cmd->add_flag("--gaps", s_gaps, "append construction gap columns");
    survey_cmd->add_option("--frontier-limit", s_frontier, "DP frontier limit");
    survey_cmd->add_option("--timeout", s_timeout, "per-grid solver timeout in seconds");
    survey_cmd->add_option("--threads", s_threads, "DP worker threads");

    // render
    auto* render_cmd = app.add_subcommand("render", "Re-render a vertex-set file");
    std::string r_file, r_format = "ascii";
    render_cmd->add_option("file", r_file, "vertex-set file ('-' for stdin)")->required();
    render_cmd->add_option("--format", r_format, "ascii, json or svg")
        ->check(CLI::IsMember({"ascii", "json", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto render = [](const VertexSet& s, const std::string& format) {
        if (format == "json") {
            std::cout << to_json(s).dump() << "\n";
        } else if (format == "svg") {
            std::cout << to_svg(s);
        } else {
            std::cout << to_text(s);
        }
    };

    try {
        if (*bounds_cmd) {
            const BoundsReport r = bounds_report(GridDims(bn, bm));
            if (b_json) {
                nlohmann::json j = to_json(r);
                j["gaps"] = to_json(gap_report(r.dims));
                std::cout << j.dump(2) << "\n";
            } else if (b_csv) {
                std::cout << kBoundsCsvHeader << "\n" << to_csv_row(r) << "\n";
            } else {
                std::cout << "grid " << bn << "x" << bm << "\n"
                          << "bound1=" << r.bound1 << " bound2=" << r.bound2
                          << " main=" << r.main_bound << "\n"
                          << "upper_d1=" << r.upper_d1 << " upper_d2=" << r.upper_d2
                          << " upper=" << r.upper << "\n"
                          << "gap=" << r.gap << "\n";
            }
        } else if (*construct_cmd) {
            const GridDims d(cn, cm);
            render(which == "d1" ? build_d1(d) : build_d2(d), c_format);
        } else if (*exact_cmd) {
            const GridDims d(en, em);
            const SolveOptions o = solve_options(e_frontier, e_timeout, e_threads);
            try {
                const SolveResult r = engine == "bf"   ? solve_bruteforce(d, o)
                                      : engine == "dp" ? solve_dp(d, o)
                                                       : solve_auto(d, o);
                if (e_json) {
                    std::cout << to_json(r).dump(2) << "\n";
                } else {
                    std::cout << "gamma_c=" << r.gamma_c << " engine=" << to_string(r.engine)
                              << " states_or_nodes=" << r.stats.states_or_nodes
                              << " elapsed=" << r.stats.elapsed.count() << "s\n"
                              << to_text(r.witness);
                }
            } catch (const Timeout&) {
                if (e_json) {
                    std::cout << nlohmann::json{{"status", "unsolved"}, {"n", en}, {"m", em},
                                                {"reason", "timeout"}}.dump(2) << "\n";
                } else {
                    std::cout << "status=unsolved reason=timeout after " << e_timeout << "s\n";
                }
            }
        } else if (*analyze_cmd) {
            const StructureStats st = structure_stats(parse_vertex_set(read_input(a_file)));
            if (a_json) {
                std::cout << to_json(st).dump(2) << "\n";
            } else {
                print_stats(st);
            }
        } else if (*audit_cmd) {
            if (u_sweep) {
                if (!*seed_opt) throw InputError("audit --sweep requires an explicit --seed");
                const auto ns = parse_range(u_nrange);
                const auto ms = parse_range(u_mrange);
                if (ns.empty() || ms.empty()) throw InputError("empty sweep range");
                SweepOptions so;
                so.n_min = ns.front();
                so.n_max = ns.back();
                so.m_min = ms.front();
                so.m_max = ms.back();
                so.constructions = u_sources.find("constructions") != std::string::npos;
                so.random = u_sources.find("random") != std::string::npos;
                so.optimal = u_sources.find("optimal") != std::string::npos;
                so.seed = u_seed;
                so.random_per_dims = u_random;
                so.threads = u_threads;
                const SweepResult res = audit_sweep(so);
                for (const auto& note : res.notices) std::cerr << "notice: " << note << "\n";
                std::cout << summary_csv(res);
            } else {
                if (u_file.empty()) throw InputError("audit needs a file or --sweep");
                const AuditReport r = audit(parse_vertex_set(read_input(u_file)));
                if (u_json) {
                    std::cout << to_json(r).dump(2) << "\n";
                } else {
                    print_audit(r);
                }
            }
            (void)sweep_flag;
        } else if (*survey_cmd) {
            const auto ns = parse_range(s_nrange);
            const auto ms = s_mrange.empty() ? ns : parse_range(s_mrange);
            std::vector<GridDims> grid;
            for (int n : ns) {
                if (s_diag) {
                    grid.emplace_back(n, n);
                    continue;
                }
                for (int m : ms) grid.emplace_back(n, m);
            }
            const SolveOptions o = solve_options(s_frontier, s_timeout, s_threads);
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header{"n",        "m",     "bound1",  "bound2",
                                            "main",     "upper_d1", "upper_d2", "upper",
                                            "gamma_c",  "gap",   "sandwich_ok"};
            if (s_gaps) {
                for (const char* h : {"d1_gap_vs_trivial", "d1_gap_vs_L", "d2_gap_vs_trivial",
                                      "d2_gap_vs_L"}) {
                    header.emplace_back(h);
                }
            }
            bool sandwich_broken = false;
            for (const GridDims d : grid) {
                const BoundsReport b = bounds_report(d);
                std::string gamma = "", sandwich = "na";
                if (s_exact) {
                    try {
                        const SolveResult r = solve_auto(d, o);
                        gamma = std::to_string(r.gamma_c);
                        const bool ok = b.main_bound <= r.gamma_c && r.gamma_c <= b.upper;
                        sandwich = ok ? "ok" : "FAIL";
                        sandwich_broken = sandwich_broken || !ok;
                    } catch (const LimitExceeded&) {
                        gamma = "";
                    } catch (const Timeout&) {
                        gamma = "unsolved";
                    }
                }
                std::vector<std::string> row;
                for (std::int64_t v : {std::int64_t{d.n}, std::int64_t{d.m}, b.bound1, b.bound2,
                                       b.main_bound, b.upper_d1, b.upper_d2, b.upper}) {
                    row.push_back(std::to_string(v));
                }
                row.push_back(gamma);
                row.push_back(std::to_string(b.gap));
                row.push_back(sandwich);
                if (s_gaps) {
                    const GapReport g = gap_report(d);
                    for (std::int64_t v : {g.d1_gap_vs_trivial, g.d1_gap_vs_L,
                                           g.d2_gap_vs_trivial, g.d2_gap_vs_L}) {
                        row.push_back(std::to_string(v));
                    }
                }
                rows.push_back(std::move(row));
            }
            if (s_csv) {
                auto emit = [](const std::vector<std::string>& cells) {
                    for (std::size_t k = 0; k < cells.size(); ++k) {
                        std::cout << (k ? "," : "") << cells[k];
                    }
                    std::cout << "\n";
                };
                emit(header);
                for (const auto& row : rows) emit(row);
            } else {
                std::vector<std::size_t> width(header.size());
                for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
                for (const auto& row : rows) {
                    for (std::size_t k = 0; k < row.size(); ++k) {
                        width[k] = std::max(width[k], row[k].size());
                    }
                }
                auto emit = [&](const std::vector<std::string>& cells) {
                    for (std::size_t k = 0; k < cells.size(); ++k) {
                        std::cout << (k ? "  " : "") << std::setw(static_cast<int>(width[k]))
                                  << cells[k];
                    }
                    std::cout << "\n";
                };
                emit(header);
                for (const auto& row : rows) emit(row);
            }
            if (sandwich_broken) {
                std::cerr << "internal inconsistency: exact value outside the bound sandwich\n";
                return kExitInternal;
            }
        } else if (*render_cmd) {
            render(parse_vertex_set(read_input(r_file)), r_format);
        }
    } catch (const std::logic_error& e) {
        // InputError derives from invalid_argument, a logic_error.
        if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const DomainError*>(&e)) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
