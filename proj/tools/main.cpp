#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gridcube/gridcube.hpp"

namespace {

int run_embed(std::int64_t rows, std::int64_t cols, int k, int n, const std::string& format,
              const std::string& out_path, bool inflate) {
    const gridcube::CubeSpec cube = inflate ? gridcube::inflate_k(k, n) : gridcube::CubeSpec(k, n);
    const gridcube::GridSpec grid(rows, cols);
    const gridcube::EmbeddingMap map = gridcube::embed_grid(grid, cube);

    std::string body;
    if (format == "json") {
        body = gridcube::map_to_json(map).dump(2) + "\n";
    } else if (format == "dot") {
        body = gridcube::to_dot(map);
    } else {
        body = gridcube::render_table(map);
    }

    if (out_path == "-") {
        std::cout << body;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    out << body;
    return out ? 0 : 1;
}

int run_verify(const std::string& map_path) {
    std::string text;
    if (map_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(map_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read " << map_path << "\n";
            return 1;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }

    const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
    const gridcube::EmbeddingMap map = gridcube::map_from_json(doc);
    const gridcube::EmbeddingReport report = gridcube::verify(map);
    std::cout << gridcube::report_to_json(report).dump(2) << "\n";
    return report.isomorphic ? 0 : 1;
}

int run_oracle(std::int64_t rows, std::int64_t cols, int k, int n, std::uint64_t budget) {
    const gridcube::GridSpec grid(rows, cols);
    const gridcube::CubeSpec cube(k, n);
    const gridcube::OracleResult result = gridcube::oracle_search(grid, cube, budget);
    switch (result.status) {
        case gridcube::OracleStatus::Found:
            std::cout << "found\n";
            return 0;
        case gridcube::OracleStatus::None:
            std::cout << "none\n";
            return 1;
        case gridcube::OracleStatus::BudgetExhausted:
        default:
            std::cout << "budget_exhausted\n";
            return 1;
    }
}

int run_info(int k, int n) {
    const gridcube::CubeSpec cube(k, n);
    const gridcube::CubeStats stats = gridcube::cube_stats(cube);
    std::cout << "nodes " << stats.node_count << "\n"
              << "edges " << stats.edge_count << "\n"
              << "degree " << stats.degree << "\n"
              << "diameter " << stats.diameter << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Map rectangular grids onto k-ary n-cube networks and verify the result"};
    app.require_subcommand(1);

    std::int64_t rows = 0;
    std::int64_t cols = 0;
    int k = 0;
    int n = 0;
    std::string format = "json";
    std::string out_path = "-";
    bool inflate = false;
    std::string map_path = "-";
    std::uint64_t budget = 10'000'000;

    CLI::App* embed = app.add_subcommand("embed", "Embed an AxB grid into a k-ary n-cube");
    embed->add_option("-A,--rows", rows, "grid row count A")->required()->check(CLI::PositiveNumber);
    embed->add_option("-B,--cols", cols, "grid column count B")
        ->required()
        ->check(CLI::PositiveNumber);
    embed->add_option("-k,--arity", k, "cube arity k")->required()->check(CLI::PositiveNumber);
    embed->add_option("-n,--dims", n, "cube dimension count n")
        ->required()
        ->check(CLI::PositiveNumber);
    embed->add_option("--format", format, "output format: json, dot or table")
        ->check(CLI::IsMember({"json", "dot", "table"}));
    embed->add_option("-o,--out", out_path, "output file, - for stdout");
    embed->add_flag("--inflate", inflate, "round k up to the next power of 2 before fitting");

    CLI::App* verify = app.add_subcommand("verify", "Verify a JSON embedding map");
    verify->add_option("map", map_path, "map file, - for stdin");

    CLI::App* oracle =
        app.add_subcommand("oracle", "Exhaustively search for an isomorphic embedding");
    oracle->add_option("-A,--rows", rows, "grid row count A")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("-B,--cols", cols, "grid column count B")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("-k,--arity", k, "cube arity k")->required()->check(CLI::PositiveNumber);
    oracle->add_option("-n,--dims", n, "cube dimension count n")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--budget", budget, "backtracking step budget")->check(CLI::PositiveNumber);

    CLI::App* info = app.add_subcommand("info", "Print k-ary n-cube statistics");
    info->add_option("-k,--arity", k, "cube arity k")->required()->check(CLI::PositiveNumber);
    info->add_option("-n,--dims", n, "cube dimension count n")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(embed)) {
            return run_embed(rows, cols, k, n, format, out_path, inflate);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(map_path);
        }
        if (app.got_subcommand(oracle)) {
            return run_oracle(rows, cols, k, n, budget);
        }
        if (app.got_subcommand(info)) {
            return run_info(k, n);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
