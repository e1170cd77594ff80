#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridcube {

/// Default cap on k^n (and on grid point counts): keeps node indices and
/// dense bookkeeping comfortably inside 64-bit arithmetic and sane memory.
inline constexpr std::uint64_t kDefaultNodeLimit = std::uint64_t{1} << 24;

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, int exponent, std::uint64_t limit,
                                 const char* what) {
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (result > limit / base) {
            throw std::invalid_argument(std::string(what) + " exceeds the supported limit of " +
                                        std::to_string(limit));
        }
        result *= base;
    }
    return result;
}

// base^exponent, saturating at uint64 max instead of overflowing.
inline std::uint64_t saturating_pow(std::uint64_t base, int exponent) {
    constexpr std::uint64_t kMax = ~std::uint64_t{0};
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (result > kMax / base) return kMax;
        result *= base;
    }
    return result;
}

inline bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

// Smallest w with 2^w >= v.  ceil_log2(1) == 0.
inline int ceil_log2(std::uint64_t v) {
    int w = 0;
    std::uint64_t reach = 1;
    while (reach < v) {
        reach <<= 1;
        ++w;
    }
    return w;
}

}  // namespace detail

/// Host-graph parameters of a k-ary n-cube: n dimensions, k nodes per
/// dimension, wraparound (torus) edges along every dimension.
class CubeSpec {
public:
    CubeSpec(int arity, int dimensions, std::uint64_t node_limit = kDefaultNodeLimit)
        : k_(arity), n_(dimensions) {
        if (k_ < 2) {
            throw std::invalid_argument("cube arity k must be >= 2, got " + std::to_string(k_));
        }
        if (n_ < 1) {
            throw std::invalid_argument("cube dimension count n must be >= 1, got " +
                                        std::to_string(n_));
        }
        node_count_ = detail::checked_pow(static_cast<std::uint64_t>(k_), n_, node_limit,
                                          "cube node count k^n");
    }

    int k() const { return k_; }
    int n() const { return n_; }
    std::uint64_t node_count() const { return node_count_; }

    bool k_is_power_of_two() const { return detail::is_power_of_two(static_cast<std::uint64_t>(k_)); }

    /// log2(k); only meaningful when k is a power of two.
    int bits_per_digit() const { return detail::ceil_log2(static_cast<std::uint64_t>(k_)); }

    /// Width of a binary node label: n * log2(k).
    int label_width() const { return n_ * bits_per_digit(); }

    bool operator==(const CubeSpec&) const = default;

private:
    int k_;
    int n_;
    std::uint64_t node_count_;
};

/// A node of the cube as an n-digit base-k tuple, dimension 0 first.
struct Coordinate {
    std::vector<int> digits;

    auto operator<=>(const Coordinate&) const = default;
};

inline bool coordinate_valid(const CubeSpec& cube, const Coordinate& coord) {
    if (coord.digits.size() != static_cast<std::size_t>(cube.n())) return false;
    for (int digit : coord.digits) {
        if (digit < 0 || digit >= cube.k()) return false;
    }
    return true;
}

inline std::string coordinate_str(const Coordinate& coord) {
    std::string out = "(";
    for (std::size_t i = 0; i < coord.digits.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(coord.digits[i]);
    }
    out += ')';
    return out;
}

/// Target-graph parameters: an A-row by B-column rectangular grid with the
/// standard 4-neighbor mesh adjacency and no wraparound.
class GridSpec {
public:
    GridSpec(std::int64_t rows, std::int64_t cols,
             std::uint64_t point_limit = kDefaultNodeLimit)
        : rows_(rows), cols_(cols) {
        if (rows_ < 1) {
            throw std::invalid_argument("grid row count A must be >= 1, got " +
                                        std::to_string(rows_));
        }
        if (cols_ < 1) {
            throw std::invalid_argument("grid column count B must be >= 1, got " +
                                        std::to_string(cols_));
        }
        if (rows_ == 1 && cols_ == 1) {
            throw std::invalid_argument("a 1x1 grid has no edges; need A*B >= 2");
        }
        if (static_cast<std::uint64_t>(rows_) > point_limit / static_cast<std::uint64_t>(cols_)) {
            throw std::invalid_argument("grid point count A*B exceeds the supported limit of " +
                                        std::to_string(point_limit));
        }
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    std::uint64_t point_count() const {
        return static_cast<std::uint64_t>(rows_) * static_cast<std::uint64_t>(cols_);
    }

    bool operator==(const GridSpec&) const = default;

private:
    std::int64_t rows_;
    std::int64_t cols_;
};

}  // namespace gridcube
