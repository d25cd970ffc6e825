#include <set>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "gridcds/analysis.hpp"
#include "gridcds/bounds.hpp"
#include "gridcds/constructions.hpp"
#include "gridcds/errors.hpp"

using namespace gridcds;

namespace {

VertexSet columns(GridDims d, std::initializer_list<int> cols) {
    VertexSet s(d);
    for (int j : cols) {
        for (int i = 1; i <= d.n; ++i) s.insert({i, j});
    }
    return s;
}

// |N_{G'}[S]| counted independently of the library: every member and its four
// padded-grid neighbours, deduplicated.
std::int64_t padded_neighbourhood_oracle(const VertexSet& s) {
    std::set<std::pair<int, int>> seen;
    for (Vertex v : s.members()) {
        seen.insert({v.i, v.j});
        seen.insert({v.i - 1, v.j});
        seen.insert({v.i + 1, v.j});
        seen.insert({v.i, v.j - 1});
        seen.insert({v.i, v.j + 1});
    }
    return static_cast<std::int64_t>(seen.size());
}

}  // namespace

TEST_CASE("domination") {
    const GridDims d3(3, 3);
    CHECK(is_dominating(VertexSet(d3, {{2, 1}, {2, 2}, {2, 3}})));
    CHECK_FALSE(is_dominating(VertexSet(d3, {{2, 2}})));
    CHECK(is_dominating(VertexSet(GridDims(2, 2), {{1, 1}, {1, 2}})));
    CHECK_FALSE(is_dominating(VertexSet(d3)));
}

TEST_CASE("connectivity") {
    const GridDims d(4, 4);
    CHECK(is_connected(VertexSet(d, {{1, 1}, {1, 2}, {2, 2}})));
    CHECK_FALSE(is_connected(VertexSet(d, {{1, 1}, {2, 2}})));
    CHECK(is_connected(VertexSet(d, {{3, 3}})));
    CHECK_FALSE(is_connected(VertexSet(d)));
}

TEST_CASE("loss of single vertices on the 4x4 ladder") {
    const VertexSet ladder = columns(GridDims(4, 4), {2, 3});
    CHECK(loss_vertex(ladder, {2, 2}) == 3);
    CHECK(loss_vertex(ladder, {1, 1}) == 0);
    CHECK(loss_vertex(ladder, {0, 2}) == 0);
    CHECK_THROWS_AS((void)loss_vertex(ladder, {0, 0}), DomainError);
    CHECK_THROWS_AS((void)loss_vertex(ladder, {7, 7}), InputError);
}

TEST_CASE("loss and excess of the ladder, singletons and D1") {
    const VertexSet ladder = columns(GridDims(4, 4), {2, 3});
    CHECK(loss_set(ladder) == 20);
    CHECK(padded_neighbourhood_oracle(ladder) == 20);
    CHECK(excess(ladder) == 4);

    CHECK(loss_set(VertexSet(GridDims(5, 5), {{3, 3}})) == 0);
    CHECK(loss_set(VertexSet(GridDims(5, 5), {{1, 1}})) == 0);
    CHECK(excess(VertexSet(GridDims(5, 5), {{2, 2}, {2, 3}, {3, 3}})) == 0);

    const VertexSet d1 = build_d1(GridDims(7, 11));
    CHECK(loss_set(d1) == 72);
    CHECK(5 * 31 - (77 + 6) == 72);
    CHECK(excess(d1) == 6);
    std::set<Vertex> on_boundary;
    for (Vertex v : d1.members()) {
        if (is_boundary(v, d1.dims())) on_boundary.insert(v);
    }
    CHECK(on_boundary == std::set<Vertex>{{1, 2}, {7, 2}, {1, 10}, {7, 10}, {7, 5}, {7, 8}});
}

TEST_CASE("structure statistics") {
    SUBCASE("D1 on 7x11") {
        const StructureStats st = structure_stats(build_d1(GridDims(7, 11)));
        CHECK(st.size == 31);
        CHECK(st.leaves == 6);
        CHECK(st.bends == 0);
        CHECK(st.deg3 == 4);
        CHECK(st.deg4 == 0);
        CHECK(st.excess == 6);
        CHECK(st.loss == 72);
        CHECK(st.is_cds());
        CHECK(st.is_tree());
    }
    SUBCASE("4x4 ladder") {
        const StructureStats st = structure_stats(columns(GridDims(4, 4), {2, 3}));
        CHECK(st.leaves == 0);
        CHECK(st.bends == 4);
        CHECK(st.deg3 == 4);
        CHECK(st.deg4 == 0);
        CHECK(st.has_2x2_block);
        CHECK_FALSE(st.is_tree());
    }
    SUBCASE("straight horizontal path") {
        VertexSet path(GridDims(3, 7));
        for (int j = 2; j <= 6; ++j) path.insert({2, j});
        const StructureStats st = structure_stats(path);
        CHECK(st.leaves == 2);
        CHECK(st.bends == 0);
        CHECK(st.deg3 == 0);
        CHECK(st.deg4 == 0);
        CHECK(st.h_segments == 1);
        CHECK(st.v_segments == 0);
        CHECK(st.h_spans_height);
        CHECK_FALSE(st.v_spans_width);
    }
    SUBCASE("plus sign has one degree-4 join") {
        const StructureStats st =
            structure_stats(VertexSet(GridDims(3, 3), {{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}));
        CHECK(st.deg4 == 1);
        CHECK(st.leaves == 4);
        CHECK(st.h_segments == 1);
        CHECK(st.v_segments == 1);
    }
}

TEST_CASE("loss/excess identity") {
    CHECK(verify_identity(columns(GridDims(4, 4), {2, 3})));
    CHECK(verify_identity(build_d1(GridDims(7, 11))));
    CHECK_THROWS_AS((void)verify_identity(columns(GridDims(4, 4), {1, 2})), DomainError);
    CHECK_THROWS_AS((void)verify_identity(VertexSet(GridDims(4, 4), {{2, 2}})), DomainError);
    CHECK_THROWS_AS((void)verify_identity(VertexSet(GridDims(1, 3), {{1, 2}})), DomainError);
}

TEST_CASE("corner normalisation") {
    SUBCASE("corner-free input is returned unchanged") {
        const VertexSet d1 = build_d1(GridDims(6, 9));
        CHECK(normalize_corner_free(d1) == d1);
    }
    SUBCASE("run along row 1 slides down up to the first attachment") {
        const GridDims d(4, 4);
        const VertexSet s(d, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {4, 2}, {4, 3}});
        REQUIRE(is_cds(s));
        const VertexSet out = normalize_corner_free(s);
        CHECK(out == VertexSet(d, {{2, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {4, 2}, {4, 3}}));
        CHECK(is_cds(out));
        CHECK(is_corner_free(out));
    }
    SUBCASE("run down column 1") {
        const GridDims d(5, 5);
        VertexSet s(d, {{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 2}, {5, 2}});
        for (int i = 1; i <= 5; ++i) s.insert({i, 4});
        REQUIRE(is_cds(s));
        VertexSet expected = s;
        expected.erase({1, 1});
        expected.erase({2, 1});
        expected.insert({1, 2});
        expected.insert({2, 2});
        const VertexSet out = normalize_corner_free(s);
        CHECK(out == expected);
        CHECK(is_cds(out));
        CHECK(is_corner_free(out));
    }
    SUBCASE("both arms at a corner") {
        const GridDims d(4, 4);
        const VertexSet s(d, {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {4, 2}, {4, 3}});
        REQUIRE(is_cds(s));
        const VertexSet out = normalize_corner_free(s);
        CHECK(out.size() == s.size());
        CHECK(is_cds(out));
        CHECK(is_corner_free(out));
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS((void)normalize_corner_free(VertexSet(GridDims(4, 4), {{2, 2}})),
                        DomainError);
        CHECK_THROWS_AS(
            (void)normalize_corner_free(VertexSet(GridDims(3, 3), {{2, 1}, {2, 2}, {2, 3}})),
            DomainError);
    }
}

TEST_CASE("random CDS generator") {
    const VertexSet a = random_cds(GridDims(4, 4), 1);
    CHECK(is_dominating(a));
    CHECK(is_connected(a));
    CHECK(random_cds(GridDims(4, 4), 1) == a);
    CHECK_THROWS_AS((void)random_cds(GridDims(1, 5), 1), DomainError);

    const VertexSet b = normalize_corner_free(random_cds(GridDims(8, 8), 7));
    CHECK(verify_identity(b));
}

TEST_CASE("property: invariants over random connected dominating sets") {
    int checked = 0;
    for (int n = 2; n <= 12; ++n) {
        for (int m = 2; m <= 12; ++m) {
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                const VertexSet s = random_cds(GridDims(n, m), seed * 7919 + n * 31 + m);
                REQUIRE(is_cds(s));
                const StructureStats st = structure_stats(s);
                const auto size = static_cast<std::int64_t>(s.size());

                // double counting of the loss
                CHECK(st.loss == 5 * size - padded_neighbourhood_oracle(s));
                CHECK(st.leaves + st.degree2 + st.deg3 + st.deg4 + st.isolated == size);
                CHECK(st.bends <= st.degree2);
                if (size >= 2) {
                    CHECK(st.isolated == 0);
                    CHECK(st.deg3 + 2 * st.deg4 >= st.leaves - 2);
                    CHECK((st.h_spans_height || st.v_spans_width));
                    if (st.h_spans_height) CHECK(st.h_segments >= ceil_div(n, 3));
                    if (st.v_spans_width) CHECK(st.v_segments >= ceil_div(m, 3));
                }
                if (n >= 4 && m >= 4) {
                    CHECK(st.excess >= 4);
                    const VertexSet norm = normalize_corner_free(s);
                    CHECK(norm.size() == s.size());
                    CHECK(is_cds(norm));
                    CHECK(is_corner_free(norm));
                    CHECK(verify_identity(norm));
                }
                ++checked;
            }
        }
    }
    CHECK(checked == 11 * 11 * 4);
}

TEST_CASE("stats serialise to JSON") {
    const auto j = to_json(structure_stats(build_d1(GridDims(7, 11))));
    CHECK(j.at("leaves") == 6);
    CHECK(j.at("loss") == 72);
    CHECK(j.at("connected") == true);
}
