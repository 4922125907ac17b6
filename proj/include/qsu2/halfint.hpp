#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsu2 {

/// Exact half-integer (spins j, weights m). Stored as twice the value so that
/// sums and differences stay closed and exact; twice=1 means 1/2.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    /// The integer n viewed as a half-integer (twice = 2n).
    static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice); }

    int as_int() const {
        if (!is_integer())
            throw std::logic_error("HalfInt " + to_string() + " is not an integer");
        return twice / 2;
    }

    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    constexpr HalfInt abs() const { return HalfInt(twice < 0 ? -twice : twice); }

    /// "3/2", "-1/2", "2", "0" -- integers render without the /2 suffix.
    std::string to_string() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    /// Parse "p/2" or a plain integer. Throws std::invalid_argument otherwise.
    static HalfInt parse(const std::string& text);
};

/// Weights j, j-1, ..., -j in the basis order used throughout (descending m).
std::vector<HalfInt> weights_descending(HalfInt j);

}  // namespace qsu2
