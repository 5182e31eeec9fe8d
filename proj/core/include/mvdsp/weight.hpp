#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mvdsp {

/// Exact non-negative rational edge length, always kept in lowest terms.
///
/// Addition and comparison never round. Intermediate products are computed in
/// 128 bits; a sum whose reduced form does not fit into 64 bits throws
/// std::overflow_error instead of wrapping.
class Weight {
public:
    constexpr Weight() noexcept = default;

    /// Throws std::invalid_argument for a negative numerator or a non-positive denominator.
    Weight(std::int64_t numerator, std::int64_t denominator = 1);

    static constexpr Weight zero() noexcept { return Weight{}; }
    static Weight one() { return Weight{1}; }

    /// Accepts "<int>" or "<int>/<int>"; throws std::invalid_argument otherwise.
    static Weight parse(std::string_view text);

    constexpr std::int64_t numerator() const noexcept { return num_; }
    constexpr std::int64_t denominator() const noexcept { return den_; }
    constexpr bool is_zero() const noexcept { return num_ == 0; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    Weight& operator+=(const Weight& other);
    friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }

    friend constexpr bool operator==(const Weight&, const Weight&) noexcept = default;
    friend std::strong_ordering operator<=>(const Weight& lhs, const Weight& rhs) noexcept;

    /// Canonical text: "n" for integers, "n/d" otherwise.
    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

} // namespace mvdsp
