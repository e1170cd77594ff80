// Embeds a 3x9 grid into a 4-ary 3-cube, prints the labelled table and the
// verification report.

#include <iostream>

#include "gridcube/gridcube.hpp"

int main() {
    const gridcube::GridSpec grid(3, 9);
    const gridcube::CubeSpec cube(4, 3);

    const gridcube::EmbeddingMap map = gridcube::embed_grid(grid, cube);
    std::cout << gridcube::render_table(map) << "\n";

    const gridcube::EmbeddingReport report = gridcube::verify(map);
    std::cout << gridcube::report_to_json(report).dump(2) << "\n";
    return report.isomorphic ? 0 : 1;
}
