#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridcube/specs.hpp"

namespace gridcube {

namespace detail {

inline void require_valid(const CubeSpec& cube, const Coordinate& coord, const char* role) {
    if (!coordinate_valid(cube, coord)) {
        throw std::invalid_argument(std::string(role) + " coordinate " + coordinate_str(coord) +
                                    " is not valid for a " + std::to_string(cube.k()) + "-ary " +
                                    std::to_string(cube.n()) + "-cube");
    }
}

}  // namespace detail

/// Dense node index in lexicographic digit order, dimension 0 most
/// significant: index = sum of digit_i * k^(n-1-i).
inline std::uint64_t index_of(const CubeSpec& cube, const Coordinate& coord) {
    detail::require_valid(cube, coord, "node");
    std::uint64_t index = 0;
    for (int digit : coord.digits) {
        index = index * static_cast<std::uint64_t>(cube.k()) + static_cast<std::uint64_t>(digit);
    }
    return index;
}

inline Coordinate coordinate_at(const CubeSpec& cube, std::uint64_t index) {
    if (index >= cube.node_count()) {
        throw std::out_of_range("node index " + std::to_string(index) +
                                " out of range: cube has " + std::to_string(cube.node_count()) +
                                " nodes");
    }
    Coordinate coord;
    coord.digits.assign(static_cast<std::size_t>(cube.n()), 0);
    for (int dim = cube.n() - 1; dim >= 0; --dim) {
        coord.digits[static_cast<std::size_t>(dim)] =
            static_cast<int>(index % static_cast<std::uint64_t>(cube.k()));
        index /= static_cast<std::uint64_t>(cube.k());
    }
    return coord;
}

/// All k^n coordinates in lexicographic digit order.  Materializes the whole
/// list; intended for small cubes (tests, DOT export, the oracle).
inline std::vector<Coordinate> nodes(const CubeSpec& cube) {
    std::vector<Coordinate> all;
    all.reserve(static_cast<std::size_t>(cube.node_count()));
    for (std::uint64_t index = 0; index < cube.node_count(); ++index) {
        all.push_back(coordinate_at(cube, index));
    }
    return all;
}

/// The +-1 (mod k) neighbors along every dimension.  2n coordinates for
/// k > 2; n for k = 2, where the two directions coincide.
inline std::vector<Coordinate> neighbors(const CubeSpec& cube, const Coordinate& coord) {
    detail::require_valid(cube, coord, "node");
    std::vector<Coordinate> result;
    result.reserve(static_cast<std::size_t>(cube.k() == 2 ? cube.n() : 2 * cube.n()));
    for (int dim = 0; dim < cube.n(); ++dim) {
        const int digit = coord.digits[static_cast<std::size_t>(dim)];
        Coordinate up = coord;
        up.digits[static_cast<std::size_t>(dim)] = (digit + 1) % cube.k();
        result.push_back(std::move(up));
        if (cube.k() > 2) {
            Coordinate down = coord;
            down.digits[static_cast<std::size_t>(dim)] = (digit + cube.k() - 1) % cube.k();
            result.push_back(std::move(down));
        }
    }
    return result;
}

/// True iff the coordinates differ in exactly one dimension, and there by
/// +-1 modulo k.  Symmetric; false for equal coordinates.
inline bool are_adjacent(const CubeSpec& cube, const Coordinate& a, const Coordinate& b) {
    detail::require_valid(cube, a, "first");
    detail::require_valid(cube, b, "second");
    int differing = 0;
    bool unit_step = true;
    for (int dim = 0; dim < cube.n(); ++dim) {
        const int da = a.digits[static_cast<std::size_t>(dim)];
        const int db = b.digits[static_cast<std::size_t>(dim)];
        if (da == db) continue;
        ++differing;
        const int gap = std::abs(da - db);
        unit_step = unit_step && (gap == 1 || gap == cube.k() - 1);
    }
    return differing == 1 && unit_step;
}

/// Lee distance: per-dimension wraparound distance min(|a-b|, k-|a-b|),
/// summed over dimensions.  Equals the shortest-path length in the cube.
inline int torus_distance(const CubeSpec& cube, const Coordinate& a, const Coordinate& b) {
    detail::require_valid(cube, a, "first");
    detail::require_valid(cube, b, "second");
    int total = 0;
    for (int dim = 0; dim < cube.n(); ++dim) {
        const int gap = std::abs(a.digits[static_cast<std::size_t>(dim)] -
                                 b.digits[static_cast<std::size_t>(dim)]);
        total += std::min(gap, cube.k() - gap);
    }
    return total;
}

struct CubeStats {
    std::uint64_t node_count;
    std::uint64_t edge_count;
    int degree;
    int diameter;

    bool operator==(const CubeStats&) const = default;
};

inline CubeStats cube_stats(const CubeSpec& cube) {
    CubeStats stats;
    stats.node_count = cube.node_count();
    stats.degree = cube.k() == 2 ? cube.n() : 2 * cube.n();
    // Every node has `degree` incident edges, each counted twice.
    stats.edge_count = stats.node_count * static_cast<std::uint64_t>(stats.degree) / 2;
    stats.diameter = cube.n() * (cube.k() / 2);
    return stats;
}

}  // namespace gridcube
