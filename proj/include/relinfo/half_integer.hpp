#pragma once

#include <compare>
#include <string>

namespace relinfo {

/// Exact multiple of 1/2, stored as twice its value. Used for the angular
/// momenta j and m_j.
class HalfInteger {
  public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

    /// Throws DomainError unless 2*value is an integer (to 1e-9).
    static HalfInteger from_double(double value);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_half_odd() const { return (twice_ % 2) != 0; }

    constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return HalfInteger(a.twice_ + b.twice_); }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return HalfInteger(a.twice_ - b.twice_); }
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    /// "1/2", "-3/2", "2".
    std::string to_string() const;

  private:
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}
    int twice_ = 0;
};

inline constexpr HalfInteger kHalf = HalfInteger::from_twice(1);

} // namespace relinfo
