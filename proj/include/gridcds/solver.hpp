#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gridcds/vertex_set.hpp"

namespace gridcds {

enum class Engine { brute_force, frontier_dp };

[[nodiscard]] std::string_view to_string(Engine e) noexcept;

struct SolveStats {
    std::uint64_t states_or_nodes = 0;
    std::chrono::duration<double> elapsed{0};
};

struct SolveResult {
    GridDims dims;
    std::int64_t gamma_c = 0;
    VertexSet witness;
    Engine engine = Engine::brute_force;
    SolveStats stats;
};

inline constexpr std::size_t kDefaultBruteForceCells = 20;
inline constexpr int kDefaultFrontierLimit = 10;
/// Hard ceiling imposed by the packed frontier encoding.
inline constexpr int kMaxFrontier = 15;

struct SolveOptions {
    std::size_t brute_force_cells = kDefaultBruteForceCells;
    int frontier_limit = kDefaultFrontierLimit;
    /// Worker threads for the frontier DP; 0 picks hardware concurrency.
    unsigned threads = 1;
    std::optional<std::chrono::duration<double>> timeout;
};

/// Exhaustive search by increasing size. The witness is the row-major
/// lexicographically least optimum. Throws LimitExceeded above
/// opts.brute_force_cells cells and Timeout past the deadline.
[[nodiscard]] SolveResult solve_bruteforce(GridDims dims, const SolveOptions& opts = {});

/// Column-sweep dynamic program over frontier states carrying membership,
/// pending domination and a non-crossing connectivity partition. The sweep
/// runs along the longer side, so the frontier is min(n, m) cells. The
/// witness is the lexicographically least optimum in sweep order: row-major
/// when m <= n, column-major otherwise. Throws LimitExceeded when
/// min(n, m) > opts.frontier_limit and Timeout past the deadline.
[[nodiscard]] SolveResult solve_dp(GridDims dims, const SolveOptions& opts = {});

/// Brute force when the grid is small enough, the frontier DP otherwise.
[[nodiscard]] SolveResult solve_auto(GridDims dims, const SolveOptions& opts = {});

/// Up to `limit` distinct minimum CDSs in row-major lexicographic order.
[[nodiscard]] std::vector<VertexSet> enumerate_min_cds(GridDims dims, std::size_t limit,
                                                       const SolveOptions& opts = {});

/// Frontier limit from GRIDCDS_FRONTIER_LIMIT, falling back to the default.
[[nodiscard]] int frontier_limit_from_env();

[[nodiscard]] nlohmann::json to_json(const SolveResult& r);

}  // namespace gridcds
