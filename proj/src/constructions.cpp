#include "gridcds/constructions.hpp"

namespace gridcds {

VertexSet build_d1(GridDims dims) {
    require_at_least_4x4(dims, "build_d1");
    const int n = dims.n;
    const int m = dims.m;
    VertexSet s(dims);
    for (int i = 1; i <= n; ++i) {
        s.insert({i, 2});
        s.insert({i, m - 1});
    }
    for (int j = 3; j <= m - 2; ++j) s.insert({2, j});
    for (int k = 1; k <= (m - 4) / 3; ++k) {
        for (int i = 3; i <= n; ++i) s.insert({i, 3 * k + 2});
    }
    return s;
}

VertexSet build_d2(GridDims dims) {
    require_at_least_4x4(dims, "build_d2");
    const int n = dims.n;
    const int m = dims.m;
    VertexSet s(dims);
    for (int j = 1; j <= m; ++j) {
        s.insert({2, j});
        s.insert({n - 1, j});
    }
    // The bridge runs down column 2 between the two full rows.
    for (int i = 3; i <= n - 2; ++i) s.insert({i, 2});
    for (int k = 1; k <= (n - 4) / 3; ++k) {
        for (int j = 3; j <= m; ++j) s.insert({3 * k + 2, j});
    }
    return s;
}

}  // namespace gridcds
