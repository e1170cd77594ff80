// Prints the DOT rendering of a grid embedding; pipe into `dot -Tsvg` to see
// the used nodes filled in.  Usage: export_dot [A B k n], default 3 9 4 3.

#include <cstdlib>
#include <iostream>

#include "gridcube/gridcube.hpp"

int main(int argc, char** argv) {
    const std::int64_t rows = argc > 1 ? std::atoll(argv[1]) : 3;
    const std::int64_t cols = argc > 2 ? std::atoll(argv[2]) : 9;
    const int k = argc > 3 ? std::atoi(argv[3]) : 4;
    const int n = argc > 4 ? std::atoi(argv[4]) : 3;

    try {
        const gridcube::EmbeddingMap map =
            gridcube::embed_grid(gridcube::GridSpec(rows, cols), gridcube::CubeSpec(k, n));
        std::cout << gridcube::to_dot(map);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
