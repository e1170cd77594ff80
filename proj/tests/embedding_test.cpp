#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "gridcube/embedding.hpp"
#include "gridcube/graycode.hpp"
#include "gridcube/specs.hpp"
#include "gridcube/topology.hpp"

using namespace gridcube;

namespace {

// Test-local adjacency notion: exactly one digit differs, by exactly 1,
// without modular wraparound.  Stronger than cube adjacency.
bool one_step_no_wrap(const Coordinate& a, const Coordinate& b) {
    if (a.digits.size() != b.digits.size()) return false;
    int changed = 0;
    bool unit = true;
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        if (a.digits[i] == b.digits[i]) continue;
        ++changed;
        unit = unit && std::abs(a.digits[i] - b.digits[i]) == 1;
    }
    return changed == 1 && unit;
}

struct SweepCase {
    CubeSpec cube;
    GridSpec grid;
};

std::vector<SweepCase> fitting_grids(const std::vector<int>& arities, int max_n,
                                     std::uint64_t node_cap) {
    std::vector<SweepCase> cases;
    for (int k : arities) {
        for (int n = 1; n <= max_n; ++n) {
            if (detail::saturating_pow(k, n) > node_cap) continue;
            const CubeSpec cube(k, n);
            const std::uint64_t col_bound = detail::saturating_pow(k, n - 1);
            for (std::int64_t rows = 1; rows <= k; ++rows) {
                for (std::uint64_t cols = 1; cols <= col_bound; ++cols) {
                    if (rows == 1 && cols == 1) continue;
                    cases.push_back({cube, GridSpec(rows, static_cast<std::int64_t>(cols))});
                }
            }
        }
    }
    return cases;
}

}  // namespace

TEST_CASE("check_fit accepts inside-bounds grids and names violations") {
    CHECK_FALSE(check_fit(GridSpec(3, 9), CubeSpec(4, 3)).has_value());
    CHECK_FALSE(check_fit(GridSpec(4, 16), CubeSpec(4, 3)).has_value());

    const auto row = check_fit(GridSpec(5, 1), CubeSpec(4, 3));
    REQUIRE(row.has_value());
    CHECK(row->kind == FitFailure::RowOverflow);
    CHECK(row->have == 5);
    CHECK(row->bound == 4);
    CHECK(row->message().find("RowOverflow") != std::string::npos);

    const auto col = check_fit(GridSpec(4, 17), CubeSpec(4, 3));
    REQUIRE(col.has_value());
    CHECK(col->kind == FitFailure::ColOverflow);
    CHECK(col->have == 17);
    CHECK(col->bound == 16);
    CHECK(col->message().find("ColOverflow") != std::string::npos);
}

TEST_CASE("embed_grid places the 3x9 grid as in the worked example") {
    const EmbeddingMap map = embed_grid(GridSpec(3, 9), CubeSpec(4, 3));

    CHECK(map.at(0, 0) == Coordinate{{0, 0, 0}});
    CHECK(label_of_coordinate(map.cube(), map.at(0, 0)).str() == "000000");

    CHECK(map.at(2, 8) == Coordinate{{2, 2, 0}});
    CHECK(label_of_coordinate(map.cube(), map.at(2, 8)).str() == "111100");

    std::set<Coordinate> image(map.assignments().begin(), map.assignments().end());
    CHECK(image.size() == 27);
}

TEST_CASE("embed_grid fills the whole binary 2-cube with a 2x2 grid") {
    const EmbeddingMap map = embed_grid(GridSpec(2, 2), CubeSpec(2, 2));
    CHECK(map.at(0, 0) == Coordinate{{0, 0}});
    CHECK(map.at(0, 1) == Coordinate{{0, 1}});
    CHECK(map.at(1, 0) == Coordinate{{1, 0}});
    CHECK(map.at(1, 1) == Coordinate{{1, 1}});
}

TEST_CASE("embed_grid propagates fit violations") {
    CHECK_THROWS_AS(embed_grid(GridSpec(5, 1), CubeSpec(4, 3)), fit_error);
    try {
        embed_grid(GridSpec(4, 17), CubeSpec(4, 3));
        FAIL("expected fit_error");
    } catch (const fit_error& e) {
        CHECK(e.violation().kind == FitFailure::ColOverflow);
        CHECK(std::string(e.what()).find("ColOverflow") != std::string::npos);
    }
}

TEST_CASE("grid edges always land on single-digit unit steps") {
    for (const SweepCase& c : fitting_grids({2, 3, 4, 5}, 3, 512)) {
        const EmbeddingMap map = embed_grid(c.grid, c.cube);

        std::set<Coordinate> image;
        for (std::int64_t x = 0; x < c.grid.rows(); ++x) {
            for (std::int64_t y = 0; y < c.grid.cols(); ++y) {
                const Coordinate& at = map.at(x, y);
                REQUIRE(coordinate_valid(c.cube, at));
                image.insert(at);
                if (y + 1 < c.grid.cols()) REQUIRE(one_step_no_wrap(at, map.at(x, y + 1)));
                if (x + 1 < c.grid.rows()) REQUIRE(one_step_no_wrap(at, map.at(x + 1, y)));
            }
        }
        REQUIRE(image.size() == c.grid.point_count());
    }
}

TEST_CASE("embedding is deterministic") {
    const GridSpec grid(3, 7);
    const CubeSpec cube(4, 3);
    CHECK(embed_grid(grid, cube) == embed_grid(grid, cube));
}

TEST_CASE("inflate_k rounds the arity up to a power of 2") {
    CHECK(inflate_k(4, 3) == CubeSpec(4, 3));
    CHECK(inflate_k(3, 2) == CubeSpec(4, 2));
    CHECK(inflate_k(5, 3) == CubeSpec(8, 3));
    CHECK(inflate_k(2, 7) == CubeSpec(2, 7));
    CHECK_THROWS_AS(inflate_k(1, 2), std::invalid_argument);
}

TEST_CASE("labelled view reproduces the worked field widths") {
    const auto view = labelled_view(embed_grid(GridSpec(3, 9), CubeSpec(4, 3)));
    REQUIRE(view.size() == 27);
    for (const LabelledPoint& point : view) {
        REQUIRE(point.label.width() == 6);
        REQUIRE(point.partition.row_bits.width() == 2);
        REQUIRE(point.partition.pad_bits.width() == 0);
        REQUIRE(point.partition.col_bits.width() == 4);
    }
    CHECK(view.front().label.str() == "000000");
    CHECK(view.back().label.str() == "111100");
}

TEST_CASE("labelled view handles degenerate line grids") {
    // Hand-built 1x2 line covering a 2-node ring; too wide for embed_grid's
    // column bound but a perfectly valid map.
    const EmbeddingMap line(GridSpec(1, 2), CubeSpec(2, 1),
                            {Coordinate{{0}}, Coordinate{{1}}});
    const auto view = labelled_view(line);
    REQUIRE(view.size() == 2);
    CHECK(view[0].label.str() == "0");
    CHECK(view[1].label.str() == "1");
    CHECK(view[0].partition.row_bits.width() == 0);
    CHECK(view[0].partition.col_bits.str() == "0");
}

TEST_CASE("labelled view splits pad bits for narrow grids") {
    const auto view = labelled_view(embed_grid(GridSpec(2, 4), CubeSpec(4, 3)));
    REQUIRE(view.size() == 8);
    for (const LabelledPoint& point : view) {
        REQUIRE(point.partition.row_bits.width() == 1);
        REQUIRE(point.partition.pad_bits.width() == 3);
        REQUIRE(point.partition.col_bits.width() == 2);
    }
}

TEST_CASE("labelled view refuses non-power-of-2 arities") {
    const EmbeddingMap map = embed_grid(GridSpec(3, 3), CubeSpec(3, 2));
    CHECK_THROWS_AS(labelled_view(map), std::domain_error);
}

TEST_CASE("column fields carry the Gray codeword of the column index") {
    for (const SweepCase& c : fitting_grids({2, 4, 8}, 3, 512)) {
        if (c.grid.cols() < 2) continue;
        const int col_width = detail::ceil_log2(static_cast<std::uint64_t>(c.grid.cols()));
        for (const LabelledPoint& point : labelled_view(embed_grid(c.grid, c.cube))) {
            REQUIRE(point.partition.col_bits ==
                    bin_gray_encode(static_cast<std::uint64_t>(point.y), col_width));
        }
    }
}

TEST_CASE("row fields carry the Gray codeword of the row index when the row field spans the dimension") {
    // With fewer rows the identity row placement keeps dilation 1 but the
    // truncated Gray prefix is no longer the row-index codeword.
    for (const SweepCase& c : fitting_grids({2, 4, 8}, 3, 512)) {
        if (2 * c.grid.rows() <= c.cube.k()) continue;
        const int row_width = detail::ceil_log2(static_cast<std::uint64_t>(c.grid.rows()));
        for (const LabelledPoint& point : labelled_view(embed_grid(c.grid, c.cube))) {
            REQUIRE(point.partition.row_bits ==
                    bin_gray_encode(static_cast<std::uint64_t>(point.x), row_width));
        }
    }
}

TEST_CASE("grid specs validate their parameters") {
    CHECK_THROWS_AS(GridSpec(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(1, 1), std::invalid_argument);
    CHECK(GridSpec(1, 2).point_count() == 2);
    CHECK(GridSpec(3, 9).point_count() == 27);
}
