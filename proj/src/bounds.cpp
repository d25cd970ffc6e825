#include "gridcds/bounds.hpp"

#include <algorithm>
#include <utility>

#include <nlohmann/json.hpp>

namespace gridcds {

namespace {

std::int64_t area(GridDims d) {
    return static_cast<std::int64_t>(d.n) * static_cast<std::int64_t>(d.m);
}

}  // namespace

std::int64_t min_side_thirds(GridDims dims) { return ceil_div(std::min(dims.n, dims.m), 3); }

std::int64_t lower_bound1(GridDims dims) {
    require_at_least_4x4(dims, "lower_bound1");
    return ceil_div(area(dims), 3);
}

std::int64_t lower_bound2(GridDims dims) {
    require_at_least_4x4(dims, "lower_bound2");
    const std::int64_t joins = min_side_thirds(dims);
    return ceil_div(area(dims) + ceil_div(3 * joins, 2) + 1, 3);
}

std::int64_t lower_main(GridDims dims) {
    require_at_least_4x4(dims, "lower_main");
    return ceil_div(area(dims) + 2 * min_side_thirds(dims), 3);
}

UpperBounds upper_fujie(GridDims dims) {
    require_at_least_4x4(dims, "upper_fujie");
    const std::int64_t n = dims.n;
    const std::int64_t m = dims.m;
    UpperBounds u;
    u.d1 = 2 * n + (m - 4) + ((m - 4) / 3) * (n - 2);
    u.d2 = 2 * m + (n - 4) + ((n - 4) / 3) * (m - 2);
    u.best = std::min(u.d1, u.d2);
    return u;
}

BoundsReport bounds_report(GridDims dims) {
    BoundsReport r;
    r.dims = dims;
    r.bound1 = lower_bound1(dims);
    r.bound2 = lower_bound2(dims);
    r.main_bound = lower_main(dims);
    const UpperBounds u = upper_fujie(dims);
    r.upper_d1 = u.d1;
    r.upper_d2 = u.d2;
    r.upper = u.best;
    r.gap = r.upper - r.main_bound;
    return r;
}

GapReport gap_report(GridDims dims) {
    require_at_least_4x4(dims, "gap_report");
    GapReport g;
    g.canonical = dims.m <= dims.n ? dims : dims.transposed();
    const UpperBounds u = upper_fujie(g.canonical);
    const std::int64_t trivial = lower_bound1(g.canonical);
    const std::int64_t main = lower_main(g.canonical);
    g.d1_gap_vs_trivial = u.d1 - trivial;
    g.d1_gap_vs_L = u.d1 - main;
    g.d2_gap_vs_trivial = u.d2 - trivial;
    g.d2_gap_vs_L = u.d2 - main;
    return g;
}

nlohmann::json to_json(const BoundsReport& r) {
    return {{"n", r.dims.n},           {"m", r.dims.m},         {"bound1", r.bound1},
            {"bound2", r.bound2},      {"main", r.main_bound},  {"upper_d1", r.upper_d1},
            {"upper_d2", r.upper_d2},  {"upper", r.upper},      {"gap", r.gap}};
}

nlohmann::json to_json(const GapReport& g) {
    return {{"n", g.canonical.n},
            {"m", g.canonical.m},
            {"d1_gap_vs_trivial", g.d1_gap_vs_trivial},
            {"d1_gap_vs_L", g.d1_gap_vs_L},
            {"d2_gap_vs_trivial", g.d2_gap_vs_trivial},
            {"d2_gap_vs_L", g.d2_gap_vs_L}};
}

std::string to_csv_row(const BoundsReport& r) {
    std::string row;
    for (std::int64_t v : {std::int64_t{r.dims.n}, std::int64_t{r.dims.m}, r.bound1, r.bound2,
                           r.main_bound, r.upper_d1, r.upper_d2, r.upper, r.gap}) {
        if (!row.empty()) row.push_back(',');
        row += std::to_string(v);
    }
    return row;
}

}  // namespace gridcds
