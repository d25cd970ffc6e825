// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gridcds/analysis.hpp"
#include "gridcds/audit.hpp"
#include "gridcds/bounds.hpp"
#include "gridcds/constructions.hpp"
#include "gridcds/solver.hpp"

using namespace gridcds;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << what;
        ok = ok && cond;
    }
};

// Every CDS built during the run, for the unconditional lemma suite.
std::vector<VertexSet> g_seen;

void remember(const VertexSet& s) { g_seen.push_back(s); }

int g_failures = 0;

void run(const char* id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.require(false, "took " + std::to_string(secs) + "s, limit " + std::to_string(limit_s) + "s");
    }
    if (!o.ok) ++g_failures;
    std::printf("[%s] %s %s (%.3fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                o.ok ? "" : ": ", o.detail.str().c_str());
    std::fflush(stdout);
}

std::string dims_str(GridDims d) { return std::to_string(d.n) + "x" + std::to_string(d.m); }

std::map<std::pair<int, int>, std::int64_t> load_golden() {
    std::ifstream in(GRIDCDS_GOLDEN_DIR "/gamma_bruteforce.txt");
    std::map<std::pair<int, int>, std::int64_t> out;
    int n = 0, m = 0;
    std::int64_t g = 0;
    while (in >> n >> m >> g) out[{n, m}] = g;
    return out;
}

VertexSet ladder_4x4() {
    VertexSet s(GridDims(4, 4));
    for (int i = 1; i <= 4; ++i) {
        s.insert({i, 2});
        s.insert({i, 3});
    }
    return s;
}

}  // namespace

int main() {
    run("AC1", "bounds(7,11) formula reproduction", 1e-3, [](Outcome& o) {
        const GridDims d(7, 11);
        const auto up = upper_fujie(d);
        o.require(lower_bound1(d) == 26, "bound1 != 26");
        o.require(lower_bound2(d) == 28, "bound2 != 28");
        o.require(lower_main(d) == 28, "main != 28");
        o.require(up.d1 == 31, "upper_d1 != 31");
        o.require(up.d2 == 34, "upper_d2 != 34");
    });

    run("AC2", "D1/D2 valid with exact sizes on 4..40 x 4..40", 10.0, [](Outcome& o) {
        int grids = 0;
        for (int n = 4; n <= 40; ++n) {
            for (int m = 4; m <= 40; ++m) {
                const GridDims d(n, m);
                const auto up = upper_fujie(d);
                const VertexSet a = build_d1(d);
                const VertexSet b = build_d2(d);
                o.require(is_cds(a), "D1 not a CDS on " + dims_str(d));
                o.require(is_cds(b), "D2 not a CDS on " + dims_str(d));
                o.require(static_cast<std::int64_t>(a.size()) == up.d1, "|D1| mismatch on " + dims_str(d));
                o.require(static_cast<std::int64_t>(b.size()) == up.d2, "|D2| mismatch on " + dims_str(d));
                remember(a);
                remember(b);
                ++grids;
            }
        }
        o.require(grids == 1369, "grid count");
    });

    run("AC3", "brute force (golden) == frontier DP for n*m <= 20", 300.0, [](Outcome& o) {
        const auto golden = load_golden();
        o.require(golden.size() == 66, "golden table missing or incomplete");
        // Brute force first, checked against the frozen oracle.
        std::map<std::pair<int, int>, std::int64_t> bf;
        for (const auto& [nm, g] : golden) {
            const SolveResult r = solve_bruteforce(GridDims(nm.first, nm.second));
            o.require(r.gamma_c == g, "brute force disagrees with golden on " + dims_str(r.dims));
            bf[nm] = r.gamma_c;
            remember(r.witness);
        }
        for (const auto& [nm, g] : bf) {
            const SolveResult r = solve_dp(GridDims(nm.first, nm.second));
            o.require(r.gamma_c == g, "DP disagrees on " + dims_str(r.dims));
            o.require(is_cds(r.witness), "DP witness invalid on " + dims_str(r.dims));
            remember(r.witness);
        }
        for (int k = 3; k <= 12; ++k) o.require(bf.at({1, k}) == k - 2, "1xk != k-2");
        o.require(bf.at({2, 2}) == 2, "2x2 != 2");
        o.require(bf.at({3, 3}) == 3, "3x3 != 3");
    });

    run("AC4", "lower_main <= gamma_c <= upper on solved grids", 0, [](Outcome& o) {
        std::vector<GridDims> grids{GridDims(4, 4), GridDims(4, 5), GridDims(5, 4), GridDims(4, 6)};
        for (int n = 4; n <= 8; ++n) {
            for (int m = 4; m <= 10; ++m) grids.emplace_back(n, m);
        }
        for (const GridDims d : grids) {
            const SolveResult r = solve_dp(d);
            o.require(lower_main(d) <= r.gamma_c, "gamma_c below lower_main on " + dims_str(d));
            o.require(r.gamma_c <= upper_fujie(d).best, "gamma_c above upper on " + dims_str(d));
            remember(r.witness);
        }
    });

    run("AC5", "identity n*m = 5|S| - loss - excess", 0, [](Outcome& o) {
        std::mt19937_64 rng(20240601);
        for (int k = 0; k < 200; ++k) {
            const GridDims d(4 + static_cast<int>(rng() % 9), 4 + static_cast<int>(rng() % 9));
            const VertexSet s = normalize_corner_free(random_cds(d, rng()));
            o.require(is_cds(s) && is_corner_free(s), "normalization failed on " + dims_str(d));
            o.require(verify_identity(s), "identity fails on random set in " + dims_str(d));
            remember(s);
        }
        for (int n = 4; n <= 40; ++n) {
            for (int m = 4; m <= 40; ++m) {
                const GridDims d(n, m);
                o.require(verify_identity(build_d1(d)), "identity fails on D1 " + dims_str(d));
                o.require(verify_identity(build_d2(d)), "identity fails on D2 " + dims_str(d));
            }
        }
    });

    run("AC6", "handshake, excess >= 4, segment span on every CDS seen", 0, [](Outcome& o) {
        const char* names[] = {checks::handshake, checks::excess_ge_4, checks::segment_span};
        std::size_t evaluated = 0;
        for (const VertexSet& s : g_seen) {
            const AuditReport r = audit(s);
            for (const char* name : names) {
                const CheckResult* c = r.find(name);
                if (c->skipped) continue;
                ++evaluated;
                o.require(c->holds, std::string(name) + " violated on " + dims_str(s.dims()));
            }
        }
        o.require(evaluated > 0, "nothing evaluated");
        std::printf("      %zu sets, %zu check evaluations\n", g_seen.size(), evaluated);
    });

    run("AC7", "thin-tree lemma suite and ladder pin", 0, [](Outcome& o) {
        std::vector<VertexSet> pool;
        for (int n = 4; n <= 40; ++n) {
            for (int m = 4; m <= 40; ++m) {
                pool.push_back(build_d1(GridDims(n, m)));
                pool.push_back(build_d2(GridDims(n, m)));
            }
        }
        for (const GridDims d : {GridDims(4, 4), GridDims(4, 5), GridDims(5, 4)}) {
            for (auto& s : enumerate_min_cds(d, 1000)) pool.push_back(std::move(s));
        }
        const char* names[] = {checks::loss_lower, checks::param_bound1, checks::param_bound2,
                               checks::param_bound3};
        std::size_t thin = 0;
        for (const VertexSet& s : pool) {
            const AuditReport r = audit(s);
            if (!r.thin_tree()) continue;
            ++thin;
            for (const char* name : names) {
                o.require(r.find(name)->holds, std::string(name) + " violated on thin tree " +
                                                   dims_str(s.dims()));
            }
        }
        o.require(thin > 0, "no thin-tree instances");
        std::printf("      %zu candidates, %zu thin trees\n", pool.size(), thin);

        const AuditReport lad = audit(ladder_4x4());
        const CheckResult* c = lad.find(checks::loss_lower);
        o.require(c->lhs == 20 && c->rhs == 32 && !c->holds, "ladder loss inequality not 20 < 32");
        o.require(lad.has_2x2_block, "ladder lacks has_2x2_block");
    });

    run("AC8", "gap table for square grids", 0, [](Outcome& o) {
        for (int m : {9, 18, 27, 36}) {
            o.require(gap_report(GridDims(m, m)).d1_gap_vs_L == m / 9,
                      "d1_gap_vs_L != m/9 at m=" + std::to_string(m));
        }
        for (int m = 3; m <= 99; m += 3) {
            if (m < 4) continue;
            const double gap = static_cast<double>(gap_report(GridDims(m, m)).d1_gap_vs_L);
            o.require(std::abs(gap - m / 9.0) <= 2.0, "|gap - m/9| > 2 at m=" + std::to_string(m));
        }
    });

    run("AC9", "D1(7,11) structure", 0, [](Outcome& o) {
        const VertexSet s = build_d1(GridDims(7, 11));
        const StructureStats st = structure_stats(s);
        o.require(st.leaves == 6, "l != 6");
        o.require(st.bends == 0, "d2 != 0");
        o.require(st.deg3 == 4, "d3 != 4");
        o.require(st.deg4 == 0, "d4 != 0");
        o.require(st.loss == 72, "loss != 72");
        o.require(st.excess == 6, "excess != 6");
        o.require(5 * st.size - 77 - st.excess == st.loss, "identity cross-check");
    });

    run("AC10", "4x12 frontier DP, deterministic across threads", 60.0, [](Outcome& o) {
        SolveOptions one;
        one.threads = 1;
        SolveOptions many;
        many.threads = std::max(2u, std::thread::hardware_concurrency());
        const SolveResult a = solve_dp(GridDims(4, 12), one);
        const SolveResult b = solve_dp(GridDims(4, 12), many);
        o.require(a.gamma_c == b.gamma_c, "gamma_c differs across thread counts");
        o.require(a.witness == b.witness, "witness differs across thread counts");
        o.require(is_cds(a.witness), "invalid witness");
        std::printf("      gamma_c(4x12) = %lld\n", static_cast<long long>(a.gamma_c));
    });

    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
    return g_failures == 0 ? 0 : 1;
}
