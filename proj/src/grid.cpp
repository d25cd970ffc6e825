#include "gridcds/grid.hpp"

#include <string>

#include "gridcds/errors.hpp"

namespace gridcds {

namespace {

std::string describe(Vertex v, GridDims d) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ") outside " +
           std::to_string(d.n) + "x" + std::to_string(d.m);
}

}  // namespace

GridDims::GridDims(int rows, int cols) : n(rows), m(cols) {
    if (rows < 1 || cols < 1) {
        throw InputError("grid dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    }
}

std::vector<Vertex> neighbors(Vertex v, GridDims d) {
    if (!in_grid(v, d)) throw InputError("neighbors: " + describe(v, d));
    std::vector<Vertex> out;
    out.reserve(4);
    for (Vertex w : {Vertex{v.i - 1, v.j}, Vertex{v.i + 1, v.j}, Vertex{v.i, v.j - 1},
                     Vertex{v.i, v.j + 1}}) {
        if (in_grid(w, d)) out.push_back(w);
    }
    return out;
}

std::vector<Vertex> closed_neighbors_extended(Vertex v, GridDims d) {
    if (!in_padded_grid(v, d)) throw InputError("closed_neighbors_extended: " + describe(v, d));
    std::vector<Vertex> out{v};
    for (Vertex w : {Vertex{v.i - 1, v.j}, Vertex{v.i + 1, v.j}, Vertex{v.i, v.j - 1},
                     Vertex{v.i, v.j + 1}}) {
        if (in_padded_grid(w, d)) out.push_back(w);
    }
    return out;
}

bool is_boundary(Vertex v, GridDims d) {
    if (!in_grid(v, d)) throw InputError("is_boundary: " + describe(v, d));
    return v.i == 1 || v.i == d.n || v.j == 1 || v.j == d.m;
}

bool is_corner(Vertex v, GridDims d) noexcept {
    return (v.i == 1 || v.i == d.n) && (v.j == 1 || v.j == d.m);
}

void require_at_least_4x4(GridDims d, const char* what) {
    if (d.n < 4 || d.m < 4) {
        throw DomainError(std::string(what) + ": theorems require n,m >= 4, got " +
                          std::to_string(d.n) + "x" + std::to_string(d.m));
    }
}

}  // namespace gridcds
