#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace gridcds {

/// Dimensions of the n x m grid graph: n rows, m columns.
struct GridDims {
    int n = 1;
    int m = 1;

    constexpr GridDims() = default;
    /// Throws InputError unless n >= 1 and m >= 1.
    GridDims(int rows, int cols);

    [[nodiscard]] constexpr std::size_t cell_count() const noexcept {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
    }
    [[nodiscard]] constexpr GridDims transposed() const noexcept {
        GridDims t;
        t.n = m;
        t.m = n;
        return t;
    }

    friend constexpr bool operator==(const GridDims&, const GridDims&) = default;
};

/// A cell (i, j), 1-indexed. Row 0 / row n+1 and column 0 / column m+1 form
/// the frame of the padded grid.
struct Vertex {
    int i = 0;
    int j = 0;

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

[[nodiscard]] constexpr bool in_grid(Vertex v, GridDims d) noexcept {
    return v.i >= 1 && v.i <= d.n && v.j >= 1 && v.j <= d.m;
}

[[nodiscard]] constexpr bool in_padded_grid(Vertex v, GridDims d) noexcept {
    return v.i >= 0 && v.i <= d.n + 1 && v.j >= 0 && v.j <= d.m + 1;
}

/// Row-major index of a grid cell, 0-based.
[[nodiscard]] constexpr std::size_t cell_index(Vertex v, GridDims d) noexcept {
    return static_cast<std::size_t>(v.i - 1) * static_cast<std::size_t>(d.m) +
           static_cast<std::size_t>(v.j - 1);
}

[[nodiscard]] constexpr Vertex cell_at(std::size_t index, GridDims d) noexcept {
    return Vertex{static_cast<int>(index / static_cast<std::size_t>(d.m)) + 1,
                  static_cast<int>(index % static_cast<std::size_t>(d.m)) + 1};
}

/// Grid neighbours of v (Manhattan distance 1), in the order up, down, left, right.
/// Throws InputError when v lies outside the grid.
[[nodiscard]] std::vector<Vertex> neighbors(Vertex v, GridDims d);

/// v together with its four neighbours in the padded grid, clipped to the frame.
/// Throws InputError when v lies outside the padded grid.
[[nodiscard]] std::vector<Vertex> closed_neighbors_extended(Vertex v, GridDims d);

/// True iff v has at most three neighbours, i.e. lies in an extreme row or column.
[[nodiscard]] bool is_boundary(Vertex v, GridDims d);

[[nodiscard]] bool is_corner(Vertex v, GridDims d) noexcept;

/// Throws DomainError unless n >= 4 and m >= 4.
void require_at_least_4x4(GridDims d, const char* what);

}  // namespace gridcds
