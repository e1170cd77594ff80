#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridcube/embedding.hpp"
#include "gridcube/specs.hpp"
#include "gridcube/topology.hpp"

namespace gridcube {

/// Quality metrics of an embedding map.  isomorphic = injective AND
/// dilation 1, the sense in which a grid placement preserves the algorithm's
/// communication structure exactly.
struct EmbeddingReport {
    bool injective;
    int dilation;    // max cube distance over grid edges
    int load;        // max grid points per cube node
    int congestion;  // max grid edges routed over one cube edge
    std::uint64_t expansion_num;  // k^n / (A*B) in lowest terms
    std::uint64_t expansion_den;
    bool isomorphic;

    bool operator==(const EmbeddingReport&) const = default;
};

class validation_error : public std::runtime_error {
public:
    validation_error(const std::string& what, std::vector<std::string> offenders)
        : std::runtime_error(format(what, offenders)), offenders_(std::move(offenders)) {}

    const std::vector<std::string>& offenders() const { return offenders_; }

private:
    static std::string format(const std::string& what, const std::vector<std::string>& offenders) {
        std::string msg = what;
        for (std::size_t i = 0; i < offenders.size(); ++i) {
            msg += i == 0 ? ": " : ", ";
            msg += offenders[i];
        }
        return msg;
    }

    std::vector<std::string> offenders_;
};

namespace detail {

/// Unit steps of the deterministic shortest path between two nodes:
/// dimensions corrected in ascending order, non-wrapping direction on ties.
/// Emits each traversed cube edge as a (min, max) node-index pair.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> route_edges(const CubeSpec& cube,
                                                                        const Coordinate& from,
                                                                        const Coordinate& to) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    Coordinate cur = from;
    for (int dim = 0; dim < cube.n(); ++dim) {
        const int target = to.digits[static_cast<std::size_t>(dim)];
        while (cur.digits[static_cast<std::size_t>(dim)] != target) {
            const int digit = cur.digits[static_cast<std::size_t>(dim)];
            const int direct = std::abs(target - digit);
            const int wrap = cube.k() - direct;
            int step;
            if (direct <= wrap) {
                step = target > digit ? 1 : -1;
            } else {
                step = target > digit ? -1 : 1;
            }
            const std::uint64_t a = index_of(cube, cur);
            cur.digits[static_cast<std::size_t>(dim)] = (digit + step + cube.k()) % cube.k();
            const std::uint64_t b = index_of(cube, cur);
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    return edges;
}

}  // namespace detail

/// Measures a map exactly as defined: injectivity, dilation, load,
/// congestion, expansion.  Pure; accepts any map, not only ones produced by
/// embed_grid.  Throws validation_error when a coordinate is not a valid
/// cube node.
inline EmbeddingReport verify(const EmbeddingMap& map) {
    const GridSpec& grid = map.grid();
    const CubeSpec& cube = map.cube();

    std::vector<std::string> offenders;
    for (std::int64_t x = 0; x < grid.rows(); ++x) {
        for (std::int64_t y = 0; y < grid.cols(); ++y) {
            if (!coordinate_valid(cube, map.at(x, y))) {
                offenders.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ") -> " +
                                    coordinate_str(map.at(x, y)));
            }
        }
    }
    if (!offenders.empty()) {
        throw validation_error("embedding map contains invalid cube coordinates", offenders);
    }

    EmbeddingReport report{};

    std::unordered_map<std::uint64_t, std::uint32_t> points_per_node;
    points_per_node.reserve(static_cast<std::size_t>(grid.point_count()));
    for (const Coordinate& coord : map.assignments()) {
        ++points_per_node[index_of(cube, coord)];
    }
    std::uint32_t load = 0;
    for (const auto& [node, count] : points_per_node) load = std::max(load, count);
    report.load = static_cast<int>(load);
    report.injective = load == 1;

    int dilation = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> edges_per_edge;
    const auto account_edge = [&](const Coordinate& a, const Coordinate& b) {
        dilation = std::max(dilation, torus_distance(cube, a, b));
        for (const auto& [lo, hi] : detail::route_edges(cube, a, b)) {
            ++edges_per_edge[lo * cube.node_count() + hi];
        }
    };
    for (std::int64_t x = 0; x < grid.rows(); ++x) {
        for (std::int64_t y = 0; y < grid.cols(); ++y) {
            if (y + 1 < grid.cols()) account_edge(map.at(x, y), map.at(x, y + 1));
            if (x + 1 < grid.rows()) account_edge(map.at(x, y), map.at(x + 1, y));
        }
    }
    report.dilation = dilation;
    std::uint32_t congestion = 0;
    for (const auto& [edge, count] : edges_per_edge) congestion = std::max(congestion, count);
    report.congestion = static_cast<int>(congestion);

    const std::uint64_t divisor = std::gcd(cube.node_count(), grid.point_count());
    report.expansion_num = cube.node_count() / divisor;
    report.expansion_den = grid.point_count() / divisor;

    report.isomorphic = report.injective && report.dilation == 1;
    return report;
}

inline bool is_isomorphic_embedding(const EmbeddingMap& map) { return verify(map).isomorphic; }

enum class OracleStatus { Found, None, BudgetExhausted };

/// Outcome of the brute-force search.  `None` is an exhaustive proof that no
/// isomorphic embedding exists; `BudgetExhausted` is inconclusive.
struct OracleResult {
    OracleStatus status;
    std::optional<EmbeddingMap> map;  // set iff status == Found
    std::uint64_t steps;              // placement attempts consumed
};

/// Exhaustive backtracking search for an isomorphic embedding, independent
/// of the Gray-code construction.  Deterministic: grid points are filled
/// x-major, candidate cube nodes tried in lexicographic order, and a branch
/// is pruned as soon as a placed grid neighbor is not cube-adjacent.  Every
/// candidate placement attempt costs one step of node_budget; exponential in
/// the worst case, so intended for small cubes (k^n <= 64 or so).
inline OracleResult oracle_search(const GridSpec& grid, const CubeSpec& cube,
                                  std::uint64_t node_budget) {
    if (node_budget == 0) {
        throw std::invalid_argument("oracle node budget must be positive");
    }

    const std::uint64_t node_count = cube.node_count();
    const std::uint64_t point_count = grid.point_count();
    const std::int64_t cols = grid.cols();

    std::vector<Coordinate> coord_cache;
    if (node_count <= 65536) coord_cache = nodes(cube);
    const auto coord_of = [&](std::uint64_t node) {
        return coord_cache.empty() ? coordinate_at(cube, node) : coord_cache[node];
    };

    std::vector<std::uint64_t> chosen(point_count, 0);
    std::vector<std::uint64_t> cursor(point_count, 0);
    std::vector<bool> used(node_count, false);
    std::uint64_t steps = 0;
    std::uint64_t depth = 0;

    const auto placement_ok = [&](std::uint64_t point, std::uint64_t node) {
        const std::int64_t x = static_cast<std::int64_t>(point) / cols;
        const std::int64_t y = static_cast<std::int64_t>(point) % cols;
        const Coordinate candidate = coord_of(node);
        if (y > 0 && !are_adjacent(cube, candidate, coord_of(chosen[point - 1]))) return false;
        if (x > 0 && !are_adjacent(cube, candidate,
                                   coord_of(chosen[point - static_cast<std::uint64_t>(cols)]))) {
            return false;
        }
        return true;
    };

    while (true) {
        if (depth == point_count) {
            std::vector<Coordinate> assignment;
            assignment.reserve(point_count);
            for (std::uint64_t point = 0; point < point_count; ++point) {
                assignment.push_back(coord_of(chosen[point]));
            }
            return OracleResult{OracleStatus::Found,
                                EmbeddingMap(grid, cube, std::move(assignment)), steps};
        }

        bool placed = false;
        for (std::uint64_t node = cursor[depth]; node < node_count; ++node) {
            if (used[node]) continue;
            if (steps == node_budget) {
                return OracleResult{OracleStatus::BudgetExhausted, std::nullopt, steps};
            }
            ++steps;
            if (!placement_ok(depth, node)) continue;
            chosen[depth] = node;
            used[node] = true;
            cursor[depth] = node + 1;
            ++depth;
            if (depth < point_count) cursor[depth] = 0;
            placed = true;
            break;
        }
        if (placed) continue;

        if (depth == 0) {
            return OracleResult{OracleStatus::None, std::nullopt, steps};
        }
        --depth;
        used[chosen[depth]] = false;
    }
}

}  // namespace gridcube
