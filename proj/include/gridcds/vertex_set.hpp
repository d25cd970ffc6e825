#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gridcds/grid.hpp"

namespace gridcds {

/// A subset S of the cells of one grid. Value type; iteration is row-major.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(GridDims dims);
    VertexSet(GridDims dims, std::initializer_list<Vertex> cells);
    VertexSet(GridDims dims, const std::vector<Vertex>& cells);

    [[nodiscard]] GridDims dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    [[nodiscard]] bool empty() const noexcept { return count_ == 0; }

    /// False for anything outside the grid, including frame cells.
    [[nodiscard]] bool contains(Vertex v) const noexcept;
    [[nodiscard]] bool contains_index(std::size_t index) const noexcept { return mask_[index] != 0; }

    /// Throws InputError when v lies outside the grid. Returns true if v was newly added.
    bool insert(Vertex v);
    bool erase(Vertex v);

    /// Members in row-major order.
    [[nodiscard]] std::vector<Vertex> members() const;

    /// Membership mask indexed by cell_index.
    [[nodiscard]] const std::vector<unsigned char>& mask() const noexcept { return mask_; }

    [[nodiscard]] VertexSet transposed() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.dims_ == b.dims_ && a.mask_ == b.mask_;
    }
    /// Row-major lexicographic order on the sorted member lists.
    friend bool operator<(const VertexSet& a, const VertexSet& b);

private:
    GridDims dims_;
    std::vector<unsigned char> mask_ = std::vector<unsigned char>(1, 0);
    std::size_t count_ = 0;
};

// Text format: "n m" on the first line, then n lines of m characters,
// '#' for a member and '.' otherwise, each newline-terminated.
[[nodiscard]] std::string to_text(const VertexSet& s);
[[nodiscard]] VertexSet parse_text(std::string_view text);

// JSON format: {"n": .., "m": .., "cells": [[i, j], ...]}, cells 1-indexed, row-major.
[[nodiscard]] nlohmann::json to_json(const VertexSet& s);
[[nodiscard]] VertexSet vertex_set_from_json(const nlohmann::json& j);

/// Accepts either format; JSON is recognised by a leading '{'.
[[nodiscard]] VertexSet parse_vertex_set(std::string_view text);

/// Presentational drawing: filled circles for members, hollow for the rest.
[[nodiscard]] std::string to_svg(const VertexSet& s);

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace gridcds
