#pragma once

#include <cstdint>

#include <nlohmann/json_fwd.hpp>

#include "gridcds/vertex_set.hpp"

namespace gridcds {

/// Combinatorial parameters of the induced subgraph G[S].
struct StructureStats {
    std::int64_t size = 0;
    std::int64_t leaves = 0;   ///< degree 1 in G[S]
    std::int64_t bends = 0;    ///< degree 2 with one horizontal and one vertical S-neighbour
    std::int64_t degree2 = 0;  ///< all degree-2 members, bends included
    std::int64_t deg3 = 0;
    std::int64_t deg4 = 0;
    std::int64_t isolated = 0;    ///< degree 0 in G[S]
    std::int64_t h_segments = 0;  ///< maximal same-row runs of length >= 2
    std::int64_t v_segments = 0;  ///< maximal same-column runs of length >= 2
    bool h_spans_height = false;  ///< N[horizontal segments] meets every row
    bool v_spans_width = false;   ///< N[vertical segments] meets every column
    std::int64_t loss = 0;
    std::int64_t excess = 0;
    std::int64_t edges = 0;
    bool connected = false;
    bool dominating = false;
    bool corner_free = false;
    bool has_2x2_block = false;

    [[nodiscard]] bool is_cds() const noexcept { return connected && dominating; }
    [[nodiscard]] bool is_tree() const noexcept { return connected && edges == size - 1; }
};

[[nodiscard]] bool is_dominating(const VertexSet& s);
[[nodiscard]] bool is_connected(const VertexSet& s);
[[nodiscard]] inline bool is_cds(const VertexSet& s) { return is_dominating(s) && is_connected(s); }
[[nodiscard]] bool is_corner_free(const VertexSet& s);

/// |N_{G'}[v] ∩ S| - 1 for v in the padded grid. Throws DomainError when no
/// member of S sees v, InputError when v is outside the padded grid.
[[nodiscard]] std::int64_t loss_vertex(const VertexSet& s, Vertex v);

/// Sum of loss_vertex over N_{G'}[S], by direct summation.
[[nodiscard]] std::int64_t loss_set(const VertexSet& s);

/// |N_{G'}[S]|, the closed neighbourhood of S in the padded grid.
[[nodiscard]] std::int64_t padded_closed_neighborhood_size(const VertexSet& s);

/// Number of members lying on the grid boundary.
[[nodiscard]] std::int64_t excess(const VertexSet& s);

[[nodiscard]] bool has_2x2_block(const VertexSet& s);

[[nodiscard]] StructureStats structure_stats(const VertexSet& s);

/// Checks n*m == 5|S| - loss(S) - excess(S). Requires a dominating, corner-free
/// set on a grid with n,m >= 2; throws DomainError naming the failed
/// precondition otherwise.
[[nodiscard]] bool verify_identity(const VertexSet& s);

/// Rewrites a CDS into a same-size CDS without grid corners by sliding each
/// corner-anchored run one line inward. Requires n, m >= 4 and a CDS.
[[nodiscard]] VertexSet normalize_corner_free(const VertexSet& s);

/// A connected dominating set grown at random from a seed cell; deterministic
/// in (dims, seed). Requires n, m >= 2.
[[nodiscard]] VertexSet random_cds(GridDims dims, std::uint64_t seed);

[[nodiscard]] nlohmann::json to_json(const StructureStats& st);

}  // namespace gridcds
