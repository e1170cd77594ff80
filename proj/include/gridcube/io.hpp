#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gridcube/embedding.hpp"
#include "gridcube/graycode.hpp"
#include "gridcube/specs.hpp"
#include "gridcube/topology.hpp"
#include "gridcube/verify.hpp"

namespace gridcube {

/// JSON embedding-map document: {"k", "n", "rows", "cols", "assignments"},
/// assignments x-major, each {"x", "y", "coord", "label"}.  label is the
/// binary node label, or null when k is not a power of 2.
inline nlohmann::ordered_json map_to_json(const EmbeddingMap& map) {
    const bool with_labels = map.cube().k_is_power_of_two();
    nlohmann::ordered_json doc;
    doc["k"] = map.cube().k();
    doc["n"] = map.cube().n();
    doc["rows"] = map.grid().rows();
    doc["cols"] = map.grid().cols();
    doc["assignments"] = nlohmann::ordered_json::array();
    for (std::int64_t x = 0; x < map.grid().rows(); ++x) {
        for (std::int64_t y = 0; y < map.grid().cols(); ++y) {
            const Coordinate& coord = map.at(x, y);
            nlohmann::ordered_json entry;
            entry["x"] = x;
            entry["y"] = y;
            entry["coord"] = coord.digits;
            if (with_labels) {
                entry["label"] = label_of_coordinate(map.cube(), coord).str();
            } else {
                entry["label"] = nullptr;
            }
            doc["assignments"].push_back(std::move(entry));
        }
    }
    return doc;
}

/// Parses an embedding-map document.  Structural problems (missing fields,
/// duplicate or missing grid points, malformed entries) raise
/// validation_error listing the offenders; coordinate digit ranges are left
/// to verify().
inline EmbeddingMap map_from_json(const nlohmann::ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("n") || !doc.contains("rows") ||
        !doc.contains("cols") || !doc.contains("assignments")) {
        throw validation_error("embedding map document must carry k, n, rows, cols, assignments",
                               {});
    }
    if (!doc["k"].is_number_integer() || !doc["n"].is_number_integer() ||
        !doc["rows"].is_number_integer() || !doc["cols"].is_number_integer() ||
        !doc["assignments"].is_array()) {
        throw validation_error("embedding map document has wrongly typed fields", {});
    }

    const CubeSpec cube(doc["k"].get<int>(), doc["n"].get<int>());
    const GridSpec grid(doc["rows"].get<std::int64_t>(), doc["cols"].get<std::int64_t>());

    std::vector<std::string> offenders;
    std::vector<Coordinate> assignment(static_cast<std::size_t>(grid.point_count()));
    std::vector<bool> seen(static_cast<std::size_t>(grid.point_count()), false);

    std::size_t entry_index = 0;
    for (const auto& entry : doc["assignments"]) {
        const std::string where = "assignments[" + std::to_string(entry_index++) + "]";
        if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") ||
            !entry.contains("coord") || !entry["x"].is_number_integer() ||
            !entry["y"].is_number_integer() || !entry["coord"].is_array()) {
            offenders.push_back(where + " malformed");
            continue;
        }
        const std::int64_t x = entry["x"].get<std::int64_t>();
        const std::int64_t y = entry["y"].get<std::int64_t>();
        if (x < 0 || x >= grid.rows() || y < 0 || y >= grid.cols()) {
            offenders.push_back(where + " point (" + std::to_string(x) + "," + std::to_string(y) +
                                ") outside the grid");
            continue;
        }
        const std::size_t slot = static_cast<std::size_t>(x * grid.cols() + y);
        if (seen[slot]) {
            offenders.push_back("point (" + std::to_string(x) + "," + std::to_string(y) +
                                ") assigned more than once");
            continue;
        }
        Coordinate coord;
        bool coord_ok = true;
        for (const auto& digit : entry["coord"]) {
            if (!digit.is_number_integer()) {
                coord_ok = false;
                break;
            }
            const std::int64_t value = digit.get<std::int64_t>();
            if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
                coord_ok = false;
                break;
            }
            coord.digits.push_back(static_cast<int>(value));
        }
        if (!coord_ok) {
            offenders.push_back(where + " coord is not an array of integers");
            continue;
        }
        seen[slot] = true;
        assignment[slot] = std::move(coord);
    }

    for (std::int64_t x = 0; x < grid.rows(); ++x) {
        for (std::int64_t y = 0; y < grid.cols(); ++y) {
            if (!seen[static_cast<std::size_t>(x * grid.cols() + y)]) {
                offenders.push_back("point (" + std::to_string(x) + "," + std::to_string(y) +
                                    ") missing");
            }
        }
    }
    if (!offenders.empty()) {
        throw validation_error("embedding map document is malformed", offenders);
    }
    return EmbeddingMap(grid, cube, std::move(assignment));
}

inline nlohmann::ordered_json report_to_json(const EmbeddingReport& report) {
    nlohmann::ordered_json doc;
    doc["injective"] = report.injective;
    doc["dilation"] = report.dilation;
    doc["load"] = report.load;
    doc["congestion"] = report.congestion;
    doc["expansion"] = {report.expansion_num, report.expansion_den};
    doc["isomorphic"] = report.isomorphic;
    return doc;
}

namespace detail {

inline std::string dot_node_name(const Coordinate& coord) {
    std::string name;
    for (std::size_t i = 0; i < coord.digits.size(); ++i) {
        if (i > 0) name += ',';
        name += std::to_string(coord.digits[i]);
    }
    return name;
}

inline std::string to_dot_impl(const CubeSpec& cube, const std::vector<bool>* used) {
    const bool with_labels = cube.k_is_power_of_two();
    std::ostringstream out;
    out << "graph cube {\n";
    for (std::uint64_t index = 0; index < cube.node_count(); ++index) {
        const Coordinate coord = coordinate_at(cube, index);
        const std::string name = dot_node_name(coord);
        std::vector<std::string> attrs;
        if (with_labels) {
            attrs.push_back("label=\"" + name + "\\n" + label_of_coordinate(cube, coord).str() +
                            "\"");
        }
        if (used != nullptr && (*used)[static_cast<std::size_t>(index)]) {
            attrs.push_back("style=filled");
        }
        out << "  \"" << name << "\"";
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) {
                if (i > 0) out << ", ";
                out << attrs[i];
            }
            out << "]";
        }
        out << ";\n";
    }
    // Each torus edge once: the +1 edge from every node, the wrap edge from
    // the last digit; for k = 2 the two coincide so only digit 0 emits.
    for (std::uint64_t index = 0; index < cube.node_count(); ++index) {
        const Coordinate coord = coordinate_at(cube, index);
        for (int dim = 0; dim < cube.n(); ++dim) {
            const int digit = coord.digits[static_cast<std::size_t>(dim)];
            if (digit == cube.k() - 1 && cube.k() == 2) continue;
            Coordinate next = coord;
            next.digits[static_cast<std::size_t>(dim)] = (digit + 1) % cube.k();
            out << "  \"" << dot_node_name(coord) << "\" -- \"" << dot_node_name(next) << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace detail

/// DOT rendering of the bare host graph: one node statement per cube node,
/// binary-label annotations when k is a power of 2.
inline std::string to_dot(const CubeSpec& cube) { return detail::to_dot_impl(cube, nullptr); }

/// DOT rendering of the host graph with the embedding's nodes filled and the
/// idle nodes hollow.
inline std::string to_dot(const EmbeddingMap& map) {
    std::vector<bool> used(static_cast<std::size_t>(map.cube().node_count()), false);
    for (const Coordinate& coord : map.assignments()) {
        used[static_cast<std::size_t>(index_of(map.cube(), coord))] = true;
    }
    return detail::to_dot_impl(map.cube(), &used);
}

/// Human-readable table mirroring labelled_view: one line per grid point
/// with coordinate, label and the row/pad/col label fields.
inline std::string render_table(const EmbeddingMap& map) {
    const std::vector<LabelledPoint> view = labelled_view(map);

    const std::vector<std::string> header = {"x", "y", "coord", "label", "row", "pad", "col"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header);
    for (const LabelledPoint& point : view) {
        cells.push_back({std::to_string(point.x), std::to_string(point.y),
                         coordinate_str(point.coord), point.label.str(),
                         point.partition.row_bits.str(), point.partition.pad_bits.str(),
                         point.partition.col_bits.str()});
    }

    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& row : cells) {
        for (std::size_t col = 0; col < row.size(); ++col) {
            widths[col] = std::max(widths[col], row[col].size());
        }
    }

    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (col > 0) out << "  ";
            out << row[col];
            if (col + 1 < row.size()) {
                out << std::string(widths[col] - row[col].size(), ' ');
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace gridcube
