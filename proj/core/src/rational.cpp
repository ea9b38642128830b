#include "kswitch/rational.hpp"

#include <charconv>
#include <numeric>

#include "kswitch/errors.hpp"

namespace kswitch {

__extension__ typedef __int128 wide_int;

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

std::optional<std::int64_t> Rational::times_integer(std::int64_t x) const {
    const wide_int p = static_cast<wide_int>(num_) * x;
    if (p % den_ != 0) return std::nullopt;
    return static_cast<std::int64_t>(p / den_);
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 15) throw Error(ErrorCode::ParseError, "too many decimals");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const bool negative = !whole.empty() && whole.front() == '-';
        const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        const std::int64_t magnitude = (w < 0 ? -w : w) * den + f;
        return Rational(negative ? -magnitude : magnitude, den);
    }
    return Rational(parse_int(text));
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const wide_int l = static_cast<wide_int>(a.num_) * b.den_;
    const wide_int r = static_cast<wide_int>(b.num_) * a.den_;
    return l <=> r;
}

}  // namespace kswitch
