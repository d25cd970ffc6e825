#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gridcds/grid.hpp"

namespace gridcds {

/// ceil(a / b) for a >= 0, b > 0.
[[nodiscard]] constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept {
    return (a + b - 1) / b;
}

/// ceil(min(n, m) / 3), the join count every CDS must reach.
[[nodiscard]] std::int64_t min_side_thirds(GridDims dims);

// All bound formulas throw DomainError below 4 x 4.

/// ceil(nm / 3).
[[nodiscard]] std::int64_t lower_bound1(GridDims dims);
/// ceil((nm + ceil(3/2 * ceil(min/3)) + 1) / 3).
[[nodiscard]] std::int64_t lower_bound2(GridDims dims);
/// ceil((nm + 2 ceil(min/3)) / 3).
[[nodiscard]] std::int64_t lower_main(GridDims dims);

struct UpperBounds {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    std::int64_t best = 0;
};

/// Sizes of the two constructions and their minimum.
[[nodiscard]] UpperBounds upper_fujie(GridDims dims);

struct BoundsReport {
    GridDims dims;
    std::int64_t bound1 = 0;
    std::int64_t bound2 = 0;
    std::int64_t main_bound = 0;
    std::int64_t upper_d1 = 0;
    std::int64_t upper_d2 = 0;
    std::int64_t upper = 0;
    std::int64_t gap = 0;  ///< upper - main_bound
};

[[nodiscard]] BoundsReport bounds_report(GridDims dims);

/// Gaps of both constructions against ceil(nm/3) and against the main bound.
/// Dimensions are canonicalised so that m <= n before evaluation.
struct GapReport {
    GridDims canonical;
    std::int64_t d1_gap_vs_trivial = 0;
    std::int64_t d1_gap_vs_L = 0;
    std::int64_t d2_gap_vs_trivial = 0;
    std::int64_t d2_gap_vs_L = 0;
};

[[nodiscard]] GapReport gap_report(GridDims dims);

[[nodiscard]] nlohmann::json to_json(const BoundsReport& r);
[[nodiscard]] nlohmann::json to_json(const GapReport& g);

inline constexpr const char* kBoundsCsvHeader = "n,m,bound1,bound2,main,upper_d1,upper_d2,upper,gap";
/// One CSV row matching kBoundsCsvHeader, without trailing newline.
[[nodiscard]] std::string to_csv_row(const BoundsReport& r);

}  // namespace gridcds
