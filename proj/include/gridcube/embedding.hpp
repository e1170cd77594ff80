#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridcube/graycode.hpp"
#include "gridcube/specs.hpp"
#include "gridcube/topology.hpp"

namespace gridcube {

enum class FitFailure { RowOverflow, ColOverflow };

/// Which fit bound failed, by how much.
struct FitViolation {
    FitFailure kind;
    std::int64_t have;    // A or B
    std::uint64_t bound;  // k or k^(n-1)

    std::string message() const {
        const std::uint64_t excess = static_cast<std::uint64_t>(have) - bound;
        if (kind == FitFailure::RowOverflow) {
            return "RowOverflow: grid rows A=" + std::to_string(have) +
                   " exceed cube arity k=" + std::to_string(bound) + " by " +
                   std::to_string(excess);
        }
        return "ColOverflow: grid columns B=" + std::to_string(have) +
               " exceed k^(n-1)=" + std::to_string(bound) + " by " + std::to_string(excess);
    }
};

class fit_error : public std::domain_error {
public:
    explicit fit_error(const FitViolation& violation)
        : std::domain_error(violation.message()), violation_(violation) {}

    const FitViolation& violation() const { return violation_; }

private:
    FitViolation violation_;
};

/// Empty when the grid fits: A <= k and B <= k^(n-1).
inline std::optional<FitViolation> check_fit(const GridSpec& grid, const CubeSpec& cube) {
    if (grid.rows() > cube.k()) {
        return FitViolation{FitFailure::RowOverflow, grid.rows(),
                            static_cast<std::uint64_t>(cube.k())};
    }
    const std::uint64_t col_bound =
        detail::saturating_pow(static_cast<std::uint64_t>(cube.k()), cube.n() - 1);
    if (static_cast<std::uint64_t>(grid.cols()) > col_bound) {
        return FitViolation{FitFailure::ColOverflow, grid.cols(), col_bound};
    }
    return std::nullopt;
}

/// An assignment of every grid point to a cube node, stored x-major
/// (index = x * cols + y).  Plain data: embed_grid always produces an
/// injective dilation-1 map, but hand-built or deserialized maps may be
/// arbitrary and are judged by verify().
class EmbeddingMap {
public:
    EmbeddingMap(GridSpec grid, CubeSpec cube, std::vector<Coordinate> assignment)
        : grid_(std::move(grid)), cube_(std::move(cube)), assignment_(std::move(assignment)) {
        if (assignment_.size() != grid_.point_count()) {
            throw std::invalid_argument("assignment covers " + std::to_string(assignment_.size()) +
                                        " points but the grid has " +
                                        std::to_string(grid_.point_count()));
        }
    }

    const GridSpec& grid() const { return grid_; }
    const CubeSpec& cube() const { return cube_; }
    const std::vector<Coordinate>& assignments() const { return assignment_; }

    const Coordinate& at(std::int64_t x, std::int64_t y) const {
        if (x < 0 || x >= grid_.rows() || y < 0 || y >= grid_.cols()) {
            throw std::out_of_range("grid point (" + std::to_string(x) + "," + std::to_string(y) +
                                    ") out of range for a " + std::to_string(grid_.rows()) + "x" +
                                    std::to_string(grid_.cols()) + " grid");
        }
        return assignment_[static_cast<std::size_t>(x * grid_.cols() + y)];
    }

    bool operator==(const EmbeddingMap&) const = default;

private:
    GridSpec grid_;
    CubeSpec cube_;
    std::vector<Coordinate> assignment_;
};

/// The grid embedding: (x, y) lands on the cube node whose dimension-0 digit
/// is x and whose remaining n-1 digits form the rank-y tuple of the
/// reflected base-k Gray sequence.  Grid neighbors differ by exactly 1 in a
/// single digit, so every grid edge lies on a cube edge (dilation 1) without
/// ever using a wraparound link.
inline EmbeddingMap embed_grid(const GridSpec& grid, const CubeSpec& cube) {
    if (auto violation = check_fit(grid, cube)) {
        throw fit_error(*violation);
    }

    std::vector<std::vector<int>> column_tails;
    column_tails.reserve(static_cast<std::size_t>(grid.cols()));
    for (std::int64_t y = 0; y < grid.cols(); ++y) {
        if (cube.n() > 1) {
            column_tails.push_back(
                kary_gray_rank_to_tuple(static_cast<std::uint64_t>(y), cube.k(), cube.n() - 1));
        } else {
            column_tails.emplace_back();
        }
    }

    std::vector<Coordinate> assignment;
    assignment.reserve(static_cast<std::size_t>(grid.point_count()));
    for (std::int64_t x = 0; x < grid.rows(); ++x) {
        for (std::int64_t y = 0; y < grid.cols(); ++y) {
            Coordinate coord;
            coord.digits.reserve(static_cast<std::size_t>(cube.n()));
            coord.digits.push_back(static_cast<int>(x));
            const auto& tail = column_tails[static_cast<std::size_t>(y)];
            coord.digits.insert(coord.digits.end(), tail.begin(), tail.end());
            assignment.push_back(std::move(coord));
        }
    }
    return EmbeddingMap(grid, cube, std::move(assignment));
}

/// The smallest power-of-2 arity >= k, with the dimension count unchanged.
/// Identity when k is already a power of 2.
inline CubeSpec inflate_k(int k, int n) {
    if (k < 2) throw std::invalid_argument("arity k must be >= 2, got " + std::to_string(k));
    const int inflated = 1 << detail::ceil_log2(static_cast<std::uint64_t>(k));
    return CubeSpec(inflated, n);
}

/// One grid point of the bit-level view: its cube coordinate, binary label
/// and the label's row/pad/column fields.
struct LabelledPoint {
    std::int64_t x;
    std::int64_t y;
    Coordinate coord;
    BitString label;
    LabelPartition partition;

    bool operator==(const LabelledPoint&) const = default;
};

/// The bit-level table of an embedding, x-major.  Requires a power-of-2
/// arity (labels are undefined otherwise).
inline std::vector<LabelledPoint> labelled_view(const EmbeddingMap& map) {
    std::vector<LabelledPoint> rows;
    rows.reserve(static_cast<std::size_t>(map.grid().point_count()));
    for (std::int64_t x = 0; x < map.grid().rows(); ++x) {
        for (std::int64_t y = 0; y < map.grid().cols(); ++y) {
            LabelledPoint point;
            point.x = x;
            point.y = y;
            point.coord = map.at(x, y);
            point.label = label_of_coordinate(map.cube(), point.coord);
            point.partition = partition_label(point.label, map.grid(), map.cube());
            rows.push_back(std::move(point));
        }
    }
    return rows;
}

}  // namespace gridcube
