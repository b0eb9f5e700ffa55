#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace orw {

// Element of (1/2)Z stored as its double, so arithmetic on indices in Z and
// Z+1/2 is exact integer arithmetic.
class HalfInt {
  public:
    constexpr HalfInt() : doubled_(0) {}
    static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt(d); }
    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integral() const { return doubled_ % 2 == 0; }
    /// Valid only when integral.
    constexpr std::int64_t as_integer() const { return doubled_ / 2; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.doubled_ + b.doubled_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.doubled_ - b.doubled_); }
    constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  private:
    explicit constexpr HalfInt(std::int64_t d) : doubled_(d) {}
    std::int64_t doubled_;
};

inline constexpr HalfInt operator""_h(unsigned long long n) { return HalfInt::whole(static_cast<std::int64_t>(n)); }

/// "n" when integral, "d/2" otherwise ("3/2", "-1/2").
std::string to_string(HalfInt h);

/// Parses "n" or "p/2". Returns nullopt on malformed input.
std::optional<HalfInt> halfint_from_string(const std::string& text);

}  // namespace orw
