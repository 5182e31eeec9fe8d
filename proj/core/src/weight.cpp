#include "mvdsp/weight.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mvdsp {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 value) {
    if (value > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("rational weight exceeds 64-bit range");
    return static_cast<std::int64_t>(value);
}

i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
        i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return value;
}

} // namespace

Weight::Weight(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0)
        throw std::invalid_argument("weight denominator must be positive");
    if (numerator < 0)
        throw std::invalid_argument("weight must be non-negative");
    std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Weight Weight::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Weight{parse_int(text)};
    return Weight{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.num_ == 0) return *this;
    if (num_ == 0) return *this = other;
    i128 g = std::gcd(den_, other.den_);
    i128 den = static_cast<i128>(den_ / g) * other.den_;
    i128 num = static_cast<i128>(num_) * (other.den_ / g) + static_cast<i128>(other.num_) * (den_ / g);
    i128 r = gcd128(num, den);
    num_ = narrow(num / r);
    den_ = narrow(den / r);
    return *this;
}

std::strong_ordering operator<=>(const Weight& lhs, const Weight& rhs) noexcept {
    i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Weight::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

} // namespace mvdsp
