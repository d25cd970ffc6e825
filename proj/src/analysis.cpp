#include "gridcds/analysis.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridcds/errors.hpp"

namespace gridcds {

namespace {

constexpr std::array<Vertex, 4> kSteps{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

Vertex offset(Vertex v, Vertex step) { return Vertex{v.i + step.i, v.j + step.j}; }

// Marks N_G[S] in a row-major mask.
std::vector<unsigned char> dominated_mask(const VertexSet& s) {
    const GridDims d = s.dims();
    std::vector<unsigned char> dom(d.cell_count(), 0);
    for (Vertex v : s.members()) {
        dom[cell_index(v, d)] = 1;
        for (Vertex step : kSteps) {
            const Vertex w = offset(v, step);
            if (in_grid(w, d)) dom[cell_index(w, d)] = 1;
        }
    }
    return dom;
}

int degree_in(const VertexSet& s, Vertex v) {
    int deg = 0;
    for (Vertex step : kSteps) deg += s.contains(offset(v, step)) ? 1 : 0;
    return deg;
}

}  // namespace

bool is_dominating(const VertexSet& s) {
    if (s.empty()) return false;
    for (unsigned char c : dominated_mask(s)) {
        if (!c) return false;
    }
    return true;
}

bool is_connected(const VertexSet& s) {
    if (s.empty()) return false;
    const GridDims d = s.dims();
    const auto cells = s.members();
    std::vector<unsigned char> seen(d.cell_count(), 0);
    std::vector<Vertex> stack{cells.front()};
    seen[cell_index(cells.front(), d)] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex step : kSteps) {
            const Vertex w = offset(v, step);
            if (!s.contains(w)) continue;
            auto& mark = seen[cell_index(w, d)];
            if (mark) continue;
            mark = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == s.size();
}

bool is_corner_free(const VertexSet& s) {
    const GridDims d = s.dims();
    for (Vertex c : {Vertex{1, 1}, Vertex{1, d.m}, Vertex{d.n, 1}, Vertex{d.n, d.m}}) {
        if (s.contains(c)) return false;
    }
    return true;
}

std::int64_t loss_vertex(const VertexSet& s, Vertex v) {
    const auto closed = closed_neighbors_extended(v, s.dims());
    std::int64_t seen_by = 0;
    for (Vertex w : closed) seen_by += s.contains(w) ? 1 : 0;
    if (seen_by == 0) {
        throw DomainError("loss_vertex: (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                          ") is not dominated by S");
    }
    return seen_by - 1;
}

namespace {

// Cells of N_{G'}[S], row-major over the padded grid.
std::vector<Vertex> padded_closed_neighborhood(const VertexSet& s) {
    const GridDims d = s.dims();
    const int rows = d.n + 2;
    const int cols = d.m + 2;
    std::vector<unsigned char> mark(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                                    0);
    auto idx = [cols](Vertex v) {
        return static_cast<std::size_t>(v.i) * static_cast<std::size_t>(cols) +
               static_cast<std::size_t>(v.j);
    };
    for (Vertex v : s.members()) {
        mark[idx(v)] = 1;
        for (Vertex step : kSteps) mark[idx(offset(v, step))] = 1;
    }
    std::vector<Vertex> out;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (mark[idx({i, j})]) out.push_back({i, j});
        }
    }
    return out;
}

}  // namespace

std::int64_t loss_set(const VertexSet& s) {
    std::int64_t total = 0;
    for (Vertex v : padded_closed_neighborhood(s)) total += loss_vertex(s, v);
    return total;
}

std::int64_t padded_closed_neighborhood_size(const VertexSet& s) {
    return static_cast<std::int64_t>(padded_closed_neighborhood(s).size());
}

std::int64_t excess(const VertexSet& s) {
    std::int64_t count = 0;
    for (Vertex v : s.members()) count += is_boundary(v, s.dims()) ? 1 : 0;
    return count;
}

bool has_2x2_block(const VertexSet& s) {
    const GridDims d = s.dims();
    for (int i = 1; i < d.n; ++i) {
        for (int j = 1; j < d.m; ++j) {
            if (s.contains({i, j}) && s.contains({i + 1, j}) && s.contains({i, j + 1}) &&
                s.contains({i + 1, j + 1})) {
                return true;
            }
        }
    }
    return false;
}

StructureStats structure_stats(const VertexSet& s) {
    const GridDims d = s.dims();
    StructureStats st;
    st.size = static_cast<std::int64_t>(s.size());

    std::int64_t degree_sum = 0;
    for (Vertex v : s.members()) {
        const bool up = s.contains({v.i - 1, v.j});
        const bool down = s.contains({v.i + 1, v.j});
        const bool left = s.contains({v.i, v.j - 1});
        const bool right = s.contains({v.i, v.j + 1});
        const int deg = degree_in(s, v);
        degree_sum += deg;
        switch (deg) {
            case 0: ++st.isolated; break;
            case 1: ++st.leaves; break;
            case 2:
                ++st.degree2;
                if ((up || down) && (left || right)) ++st.bends;
                break;
            case 3: ++st.deg3; break;
            default: ++st.deg4; break;
        }
    }
    st.edges = degree_sum / 2;

    // Rows met by N_G of horizontal segments, columns met by N_G of vertical ones.
    std::vector<unsigned char> rows_met(static_cast<std::size_t>(d.n) + 2, 0);
    std::vector<unsigned char> cols_met(static_cast<std::size_t>(d.m) + 2, 0);
    for (int i = 1; i <= d.n; ++i) {
        int run = 0;
        for (int j = 1; j <= d.m + 1; ++j) {
            if (j <= d.m && s.contains({i, j})) {
                ++run;
                continue;
            }
            if (run >= 2) {
                ++st.h_segments;
                rows_met[static_cast<std::size_t>(i - 1)] = 1;
                rows_met[static_cast<std::size_t>(i)] = 1;
                rows_met[static_cast<std::size_t>(i + 1)] = 1;
            }
            run = 0;
        }
    }
    for (int j = 1; j <= d.m; ++j) {
        int run = 0;
        for (int i = 1; i <= d.n + 1; ++i) {
            if (i <= d.n && s.contains({i, j})) {
                ++run;
                continue;
            }
            if (run >= 2) {
                ++st.v_segments;
                cols_met[static_cast<std::size_t>(j - 1)] = 1;
                cols_met[static_cast<std::size_t>(j)] = 1;
                cols_met[static_cast<std::size_t>(j + 1)] = 1;
            }
            run = 0;
        }
    }
    st.h_spans_height = true;
    for (int i = 1; i <= d.n; ++i) st.h_spans_height = st.h_spans_height && rows_met[i];
    st.v_spans_width = true;
    for (int j = 1; j <= d.m; ++j) st.v_spans_width = st.v_spans_width && cols_met[j];

    st.loss = loss_set(s);
    st.excess = excess(s);
    st.connected = is_connected(s);
    st.dominating = is_dominating(s);
    st.corner_free = is_corner_free(s);
    st.has_2x2_block = has_2x2_block(s);
    return st;
}

bool verify_identity(const VertexSet& s) {
    if (!is_dominating(s)) throw DomainError("verify_identity: S is not dominating");
    if (!is_corner_free(s)) throw DomainError("verify_identity: S contains a grid corner");
    const GridDims d = s.dims();
    if (d.n < 2 || d.m < 2) throw DomainError("verify_identity: requires n,m >= 2");
    const auto size = static_cast<std::int64_t>(s.size());
    return static_cast<std::int64_t>(d.cell_count()) == 5 * size - loss_set(s) - excess(s);
}

namespace {

// View of the grid reflected so that a chosen corner sits at local (1, 1).
struct CornerFrame {
    GridDims dims;
    bool flip_rows = false;
    bool flip_cols = false;

    [[nodiscard]] Vertex to_global(Vertex local) const {
        return Vertex{flip_rows ? dims.n + 1 - local.i : local.i,
                      flip_cols ? dims.m + 1 - local.j : local.j};
    }
};

// Slides the run anchored at the frame's corner one line inward. Returns
// false when the corner is not a member.
bool clear_corner(VertexSet& s, const CornerFrame& f) {
    auto in = [&](int i, int j) { return s.contains(f.to_global({i, j})); };
    if (!in(1, 1)) return false;
    const GridDims d = s.dims();
    const bool right = in(1, 2);
    const bool down = in(2, 1);

    if (right && down) {
        // Both arms present: (2,2) reconnects them and dominates everything (1,1) did
        // except (1,1) itself, which (1,2) already covers.
        s.erase(f.to_global({1, 1}));
        if (!in(2, 2)) {
            s.insert(f.to_global({2, 2}));
            return true;
        }
        // Keep the size: add the first non-member, non-corner cell adjacent to S.
        for (Vertex v : s.members()) {
            for (Vertex step : kSteps) {
                const Vertex w = offset(v, step);
                if (in_grid(w, d) && !s.contains(w) && !is_corner(w, d)) {
                    s.insert(w);
                    return true;
                }
            }
        }
        throw DomainError("normalize_corner_free: no room to keep the set size");
    }

    // Walk the run along the arm that exists; (along, across) are local steps.
    const bool horizontal = right;
    auto cell = [&](int along, int across) {
        return horizontal ? f.to_global({across, along}) : f.to_global({along, across});
    };
    const int length = horizontal ? d.m : d.n;
    int first_attached = 0;
    for (int k = 1; k <= length && s.contains(cell(k, 1)); ++k) {
        if (s.contains(cell(k, 2))) {
            first_attached = k;
            break;
        }
    }
    if (first_attached == 0) {
        throw DomainError("normalize_corner_free: corner run has no perpendicular attachment");
    }
    for (int k = 1; k < first_attached; ++k) {
        s.erase(cell(k, 1));
        s.insert(cell(k, 2));
    }
    return true;
}

}  // namespace

VertexSet normalize_corner_free(const VertexSet& s) {
    require_at_least_4x4(s.dims(), "normalize_corner_free");
    if (!is_cds(s)) throw DomainError("normalize_corner_free: S is not a connected dominating set");
    VertexSet out = s;
    for (bool flip_rows : {false, true}) {
        for (bool flip_cols : {false, true}) {
            clear_corner(out, CornerFrame{s.dims(), flip_rows, flip_cols});
        }
    }
    return out;
}

VertexSet random_cds(GridDims dims, std::uint64_t seed) {
    if (dims.n < 2 || dims.m < 2) throw DomainError("random_cds: requires n,m >= 2");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    const std::size_t cells = dims.cell_count();
    VertexSet s(dims);
    std::vector<unsigned char> dominated(cells, 0);
    std::size_t dominated_count = 0;
    auto add = [&](Vertex v) {
        s.insert(v);
        auto mark = [&](Vertex w) {
            if (!in_grid(w, dims)) return;
            auto& slot = dominated[cell_index(w, dims)];
            if (!slot) {
                slot = 1;
                ++dominated_count;
            }
        };
        mark(v);
        for (Vertex step : kSteps) mark(offset(v, step));
    };

    add(cell_at(pick(cells), dims));
    std::vector<Vertex> candidates;
    while (dominated_count < cells) {
        // Grow only through cells that dominate something new; such a cell always
        // exists while the set is not yet dominating.
        candidates.clear();
        for (std::size_t k = 0; k < cells; ++k) {
            const Vertex v = cell_at(k, dims);
            if (s.contains(v) || degree_in(s, v) == 0) continue;
            bool fresh = !dominated[k];
            for (Vertex step : kSteps) {
                const Vertex w = offset(v, step);
                fresh = fresh || (in_grid(w, dims) && !dominated[cell_index(w, dims)]);
            }
            if (fresh) candidates.push_back(v);
        }
        add(candidates[pick(candidates.size())]);
    }
    return s;
}

nlohmann::json to_json(const StructureStats& st) {
    return {{"size", st.size},
            {"leaves", st.leaves},
            {"bends", st.bends},
            {"degree2", st.degree2},
            {"deg3", st.deg3},
            {"deg4", st.deg4},
            {"h_segments", st.h_segments},
            {"v_segments", st.v_segments},
            {"h_spans_height", st.h_spans_height},
            {"v_spans_width", st.v_spans_width},
            {"loss", st.loss},
            {"excess", st.excess},
            {"edges", st.edges},
            {"connected", st.connected},
            {"dominating", st.dominating},
            {"corner_free", st.corner_free},
            {"has_2x2_block", st.has_2x2_block}};
}

}  // namespace gridcds
