#include "gridcds/audit.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <map>
#include <thread>

#include <nlohmann/json.hpp>

#include "gridcds/bounds.hpp"
#include "gridcds/constructions.hpp"
#include "gridcds/errors.hpp"
#include "gridcds/solver.hpp"

namespace gridcds {

const CheckResult* AuditReport::find(std::string_view name) const noexcept {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::vector<const CheckResult*> AuditReport::asserted_violations() const {
    std::vector<const CheckResult*> out;
    for (const auto& c : checks) {
        if (c.asserted && !c.skipped && !c.holds) out.push_back(&c);
    }
    return out;
}

namespace {

CheckResult at_least(std::string name, std::int64_t lhs, std::int64_t rhs, bool asserted) {
    CheckResult c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = lhs - rhs;
    c.holds = c.slack >= 0;
    c.asserted = asserted;
    return c;
}

CheckResult skipped(std::string name, std::string why) {
    CheckResult c;
    c.name = std::move(name);
    c.skipped = true;
    c.holds = true;
    c.note = "skipped: precondition " + std::move(why);
    return c;
}

}  // namespace

AuditReport audit(const VertexSet& s) {
    const StructureStats st = structure_stats(s);
    if (!st.is_cds()) throw DomainError("audit: S is not a connected dominating set");

    AuditReport r;
    r.dims = s.dims();
    r.stats = st;
    r.is_tree = st.is_tree();
    r.has_2x2_block = st.has_2x2_block;
    const bool thin = r.thin_tree();
    const bool regime = r.dims.n >= 4 && r.dims.m >= 4;
    const std::int64_t joins = min_side_thirds(r.dims);
    const std::int64_t l = st.leaves;
    const std::int64_t size = st.size;
    const std::int64_t loss_plus_excess = st.loss + st.excess;
    const char* kRegime = "n,m >= 4";

    auto regime_check = [&](const char* name, std::int64_t lhs, std::int64_t rhs, bool asserted) {
        return regime ? at_least(name, lhs, rhs, asserted) : skipped(name, kRegime);
    };

    if (size >= 2) {
        r.checks.push_back(at_least(checks::handshake, st.deg3 + 2 * st.deg4 + 2, l, true));
    } else {
        r.checks.push_back(skipped(checks::handshake, "|S| >= 2"));
    }
    r.checks.push_back(regime_check(checks::excess_ge_4, st.excess, 4, true));
    if (size >= 2) {
        r.checks.push_back(at_least(checks::loss_lower, st.loss,
                                    2 * size - l + st.bends + 3 * st.deg3 + 6 * st.deg4, thin));
    } else {
        r.checks.push_back(skipped(checks::loss_lower, "|S| >= 2"));
    }
    r.checks.push_back(regime_check(checks::param_bound1, loss_plus_excess, 2 * size + 2 * l - 2, thin));
    r.checks.push_back(regime_check(checks::param_bound2, loss_plus_excess, 2 * size + joins + l, thin));
    r.checks.push_back(
        regime_check(checks::param_bound3, loss_plus_excess, 2 * size + 2 * joins + 2 - l, thin));
    r.checks.push_back(regime_check(checks::joins_count, st.bends + st.deg3 + st.deg4, joins, thin));
    r.checks.push_back(regime_check(checks::bends_count, st.bends, 2 * (joins - l + 1), thin));

    if (st.corner_free && r.dims.n >= 2 && r.dims.m >= 2) {
        CheckResult c;
        c.name = checks::identity;
        c.lhs = static_cast<std::int64_t>(r.dims.cell_count());
        c.rhs = 5 * size - st.loss - st.excess;
        c.slack = c.lhs - c.rhs;
        c.holds = c.slack == 0;
        c.asserted = true;
        r.checks.push_back(c);
    } else {
        r.checks.push_back(skipped(checks::identity, "corner-free, n,m >= 2"));
    }

    if (size >= 2) {
        // Take whichever spanning direction leaves more room.
        const std::int64_t h_slack = st.h_segments - ceil_div(r.dims.n, 3);
        const std::int64_t v_slack = st.v_segments - ceil_div(r.dims.m, 3);
        CheckResult c;
        if (st.h_spans_height && (!st.v_spans_width || h_slack >= v_slack)) {
            c = at_least(checks::segment_span, st.h_segments, ceil_div(r.dims.n, 3), true);
            c.note = "horizontal segments span the height";
        } else if (st.v_spans_width) {
            c = at_least(checks::segment_span, st.v_segments, ceil_div(r.dims.m, 3), true);
            c.note = "vertical segments span the width";
        } else {
            c = at_least(checks::segment_span, 0, 1, true);
            c.note = "neither direction spans";
        }
        r.checks.push_back(c);
    } else {
        r.checks.push_back(skipped(checks::segment_span, "|S| >= 2"));
    }

    r.checks.push_back(regime_check(checks::main_theorem, size, regime ? lower_main(r.dims) : 0, true));
    return r;
}

std::string_view to_string(AuditSource s) noexcept {
    switch (s) {
        case AuditSource::constructions: return "constructions";
        case AuditSource::random: return "random";
        case AuditSource::optimal: return "optimal";
    }
    return "unknown";
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, int n, int m, int k) {
    // splitmix64 over the packed tuple.
    std::uint64_t z = seed ^ (static_cast<std::uint64_t>(n) << 40) ^
                      (static_cast<std::uint64_t>(m) << 20) ^ static_cast<std::uint64_t>(k);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string dims_label(int n, int m) { return std::to_string(n) + "x" + std::to_string(m); }

}  // namespace

SweepResult audit_sweep(const SweepOptions& opts) {
    SweepResult result;
    struct Job {
        AuditSource source;
        std::string label;
        std::function<VertexSet()> make;
    };
    std::vector<Job> jobs;
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        for (int m = opts.m_min; m <= opts.m_max; ++m) {
            const GridDims d(n, m);
            const bool regime = n >= 4 && m >= 4;
            if (opts.constructions) {
                if (regime) {
                    jobs.push_back({AuditSource::constructions, "D1 " + dims_label(n, m),
                                    [d] { return build_d1(d); }});
                    jobs.push_back({AuditSource::constructions, "D2 " + dims_label(n, m),
                                    [d] { return build_d2(d); }});
                } else {
                    result.notices.push_back("constructions skipped for " + dims_label(n, m) +
                                             ": require n,m >= 4");
                }
            }
            if (opts.random) {
                if (n >= 2 && m >= 2) {
                    for (int k = 0; k < opts.random_per_dims; ++k) {
                        const std::uint64_t seed = mix_seed(opts.seed, n, m, k);
                        jobs.push_back({AuditSource::random,
                                        "random " + dims_label(n, m) + " #" + std::to_string(k),
                                        [d, seed, regime] {
                                            VertexSet s = random_cds(d, seed);
                                            return regime ? normalize_corner_free(s) : s;
                                        }});
                    }
                } else {
                    result.notices.push_back("random skipped for " + dims_label(n, m) +
                                             ": requires n,m >= 2");
                }
            }
            if (opts.optimal) {
                if (d.cell_count() <= opts.brute_force_cells) {
                    SolveOptions so;
                    so.brute_force_cells = opts.brute_force_cells;
                    for (std::size_t k = 0; auto& s : enumerate_min_cds(d, opts.optimal_limit, so)) {
                        jobs.push_back({AuditSource::optimal,
                                        "optimal " + dims_label(n, m) + " #" + std::to_string(k++),
                                        [s] { return s; }});
                    }
                } else {
                    result.notices.push_back("optimal skipped for " + dims_label(n, m) +
                                             ": exceeds brute-force limit");
                }
            }
        }
    }

    std::vector<std::optional<AuditReport>> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) reports[k] = audit(jobs[k].make());
    };
    const unsigned threads = std::max(1U, opts.threads == 0 ? std::thread::hardware_concurrency()
                                                            : opts.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<std::pair<std::string, AuditSource>, SweepCount> counts;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const AuditReport& rep = *reports[k];
        for (const auto& c : rep.checks) {
            if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
            auto& cnt = counts[{c.name, jobs[k].source}];
            cnt.check = c.name;
            cnt.source = jobs[k].source;
            if (c.skipped) {
                ++cnt.skipped;
            } else if (c.holds) {
                ++cnt.holds;
            } else {
                ++cnt.violations;
                if (c.asserted) ++cnt.asserted_violations;
            }
        }
        result.entries.push_back({jobs[k].source, jobs[k].label, rep});
    }
    for (const auto& name : names) {
        for (AuditSource src : {AuditSource::constructions, AuditSource::random, AuditSource::optimal}) {
            auto it = counts.find({name, src});
            if (it != counts.end()) result.summary.push_back(it->second);
        }
    }
    return result;
}

nlohmann::json to_json(const AuditReport& r) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json j{{"name", c.name},   {"lhs", c.lhs},         {"rhs", c.rhs},
                         {"slack", c.slack}, {"holds", c.holds},     {"skipped", c.skipped},
                         {"asserted", c.asserted}};
        if (!c.note.empty()) j["note"] = c.note;
        list.push_back(std::move(j));
    }
    return {{"n", r.dims.n},
            {"m", r.dims.m},
            {"is_tree", r.is_tree},
            {"has_2x2_block", r.has_2x2_block},
            {"stats", to_json(r.stats)},
            {"checks", std::move(list)}};
}

std::string summary_csv(const SweepResult& r) {
    std::string out = "check,source,holds,violations,asserted_violations,skipped\n";
    for (const auto& c : r.summary) {
        out += c.check + "," + std::string(to_string(c.source)) + "," + std::to_string(c.holds) +
               "," + std::to_string(c.violations) + "," + std::to_string(c.asserted_violations) +
               "," + std::to_string(c.skipped) + "\n";
    }
    return out;
}

}  // namespace gridcds
