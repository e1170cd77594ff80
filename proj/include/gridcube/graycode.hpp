#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridcube/specs.hpp"

namespace gridcube {

/// A fixed-width binary word, most significant bit first.  Width zero is the
/// empty word; it appears as the degenerate row/pad field of a label
/// partition when a grid dimension is 1.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (std::uint8_t b : bits_) {
            if (b > 1) throw std::invalid_argument("BitString digits must be 0 or 1");
        }
    }

    static BitString parse(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("BitString may contain only '0' and '1', got '" +
                                            std::string(1, c) + "'");
            }
            bits.push_back(static_cast<std::uint8_t>(c == '1'));
        }
        return BitString(std::move(bits));
    }

    static BitString from_value(std::uint64_t value, int width) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(width));
        for (int i = width - 1; i >= 0; --i) {
            bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value & 1u);
            value >>= 1;
        }
        return BitString(std::move(bits));
    }

    int width() const { return static_cast<int>(bits_.size()); }
    bool empty() const { return bits_.empty(); }

    /// Bit at position pos, where position 0 is the most significant bit.
    int bit(int pos) const {
        if (pos < 0 || pos >= width()) {
            throw std::out_of_range("bit position " + std::to_string(pos) +
                                    " out of range for width " + std::to_string(width()));
        }
        return bits_[static_cast<std::size_t>(pos)];
    }

    std::string str() const {
        std::string out;
        out.reserve(bits_.size());
        for (std::uint8_t b : bits_) out += static_cast<char>('0' + b);
        return out;
    }

    BitString slice(int pos, int len) const {
        if (pos < 0 || len < 0 || pos + len > width()) {
            throw std::out_of_range("slice [" + std::to_string(pos) + ", " +
                                    std::to_string(pos + len) + ") out of range for width " +
                                    std::to_string(width()));
        }
        return BitString(std::vector<std::uint8_t>(bits_.begin() + pos, bits_.begin() + pos + len));
    }

    friend BitString operator+(const BitString& a, const BitString& b) {
        std::vector<std::uint8_t> bits;
        bits.reserve(a.bits_.size() + b.bits_.size());
        bits.insert(bits.end(), a.bits_.begin(), a.bits_.end());
        bits.insert(bits.end(), b.bits_.begin(), b.bits_.end());
        return BitString(std::move(bits));
    }

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline int hamming_distance(const BitString& a, const BitString& b) {
    if (a.width() != b.width()) {
        throw std::invalid_argument("hamming_distance requires equal widths, got " +
                                    std::to_string(a.width()) + " and " + std::to_string(b.width()));
    }
    int count = 0;
    for (int i = 0; i < a.width(); ++i) count += a.bit(i) != b.bit(i);
    return count;
}

/// index-th codeword of the binary reflected Gray code at the given width.
/// Consecutive indices differ in one bit; so do index 0 and index 2^width-1.
inline BitString bin_gray_encode(std::uint64_t index, int width) {
    if (width < 1 || width > 63) {
        throw std::invalid_argument("Gray code width must be in [1, 63], got " +
                                    std::to_string(width));
    }
    const std::uint64_t count = std::uint64_t{1} << width;
    if (index >= count) {
        throw std::domain_error("Gray code index " + std::to_string(index) +
                                " out of range: must be < 2^" + std::to_string(width) + " = " +
                                std::to_string(count));
    }
    return BitString::from_value(index ^ (index >> 1), width);
}

/// Rank of a codeword in the binary reflected Gray code of its width.
inline std::uint64_t bin_gray_decode(const BitString& code) {
    std::uint64_t value = 0;
    std::uint64_t acc = 0;
    for (int i = 0; i < code.width(); ++i) {
        acc ^= static_cast<std::uint64_t>(code.bit(i));
        value = (value << 1) | acc;
    }
    return value;
}

/// rank-th tuple of the reflected base-k Gray sequence over digit_count
/// digits, most significant digit first.  The sequence visits every tuple in
/// {0..k-1}^digit_count once; consecutive tuples differ in exactly one digit,
/// and in that digit by exactly +-1 (never wrapping k-1 <-> 0).
inline std::vector<int> kary_gray_rank_to_tuple(std::uint64_t rank, int k, int digit_count) {
    if (k < 2) throw std::invalid_argument("Gray base k must be >= 2, got " + std::to_string(k));
    if (digit_count < 1) {
        throw std::invalid_argument("Gray digit count must be >= 1, got " +
                                    std::to_string(digit_count));
    }
    const std::uint64_t total = detail::saturating_pow(static_cast<std::uint64_t>(k), digit_count);
    if (rank >= total) {
        throw std::domain_error("Gray rank " + std::to_string(rank) +
                                " out of range: must be < k^d = " + std::to_string(total));
    }

    std::vector<int> plain(static_cast<std::size_t>(digit_count));
    std::uint64_t rest = rank;
    for (int i = digit_count - 1; i >= 0; --i) {
        plain[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
        rest /= static_cast<std::uint64_t>(k);
    }

    // Reflect a digit whenever the Gray digits above it have odd sum.
    std::vector<int> tuple(static_cast<std::size_t>(digit_count));
    int parity = 0;
    for (int i = 0; i < digit_count; ++i) {
        const int digit = parity ? k - 1 - plain[static_cast<std::size_t>(i)]
                                 : plain[static_cast<std::size_t>(i)];
        tuple[static_cast<std::size_t>(i)] = digit;
        parity ^= digit & 1;
    }
    return tuple;
}

/// Exact inverse of kary_gray_rank_to_tuple.
inline std::uint64_t kary_gray_tuple_to_rank(std::span<const int> tuple, int k) {
    if (k < 2) throw std::invalid_argument("Gray base k must be >= 2, got " + std::to_string(k));
    if (tuple.empty()) throw std::invalid_argument("Gray tuple must have at least one digit");
    std::uint64_t rank = 0;
    int parity = 0;
    for (int digit : tuple) {
        if (digit < 0 || digit >= k) {
            throw std::domain_error("Gray tuple digit " + std::to_string(digit) +
                                    " out of range for base " + std::to_string(k));
        }
        const int plain = parity ? k - 1 - digit : digit;
        rank = rank * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(plain);
        parity ^= digit & 1;
    }
    return rank;
}

/// Binary node label: the concatenation, dimension 0 first, of the
/// per-dimension Gray codewords of the coordinate digits.  Cube neighbors
/// along any dimension differ in exactly one label bit.
inline BitString label_of_coordinate(const CubeSpec& cube, const Coordinate& coord) {
    if (!cube.k_is_power_of_two()) {
        throw std::domain_error("binary labels require a power-of-2 arity, got k=" +
                                std::to_string(cube.k()) +
                                "; use inflate_k to pick the next power of 2");
    }
    if (!coordinate_valid(cube, coord)) {
        throw std::invalid_argument("coordinate " + coordinate_str(coord) +
                                    " is not valid for a " + std::to_string(cube.k()) + "-ary " +
                                    std::to_string(cube.n()) + "-cube");
    }
    const int bits = cube.bits_per_digit();
    BitString label;
    for (int digit : coord.digits) {
        label = label + bin_gray_encode(static_cast<std::uint64_t>(digit), bits);
    }
    return label;
}

/// A node label split into the row field (most significant ceil(log2 A)
/// bits), the column field (least significant ceil(log2 B) bits) and the pad
/// field between them.  row + pad + col reassembles the label.
struct LabelPartition {
    BitString row_bits;
    BitString pad_bits;
    BitString col_bits;

    bool operator==(const LabelPartition&) const = default;
};

inline LabelPartition partition_label(const BitString& label, const GridSpec& grid,
                                      const CubeSpec& cube) {
    if (!cube.k_is_power_of_two()) {
        throw std::domain_error("label partitions require a power-of-2 arity, got k=" +
                                std::to_string(cube.k()) +
                                "; use inflate_k to pick the next power of 2");
    }
    if (label.width() != cube.label_width()) {
        throw std::domain_error("label width " + std::to_string(label.width()) +
                                " does not match n*log2(k) = " +
                                std::to_string(cube.label_width()));
    }
    const int row_width = detail::ceil_log2(static_cast<std::uint64_t>(grid.rows()));
    const int col_width = detail::ceil_log2(static_cast<std::uint64_t>(grid.cols()));
    if (row_width + col_width > label.width()) {
        throw std::domain_error("row and column fields need " +
                                std::to_string(row_width + col_width) +
                                " bits but the label has only " + std::to_string(label.width()));
    }
    LabelPartition part;
    part.row_bits = label.slice(0, row_width);
    part.pad_bits = label.slice(row_width, label.width() - row_width - col_width);
    part.col_bits = label.slice(label.width() - col_width, col_width);
    return part;
}

}  // namespace gridcube
