#include "tsched/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace tsched {

namespace {

using wide = __int128;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

wide wide_gcd(wide a, wide b) {
	if (a < 0) a = -a;
	if (b < 0) b = -b;
	while (b != 0) {
		wide t = a % b;
		a = b;
		b = t;
	}
	return a;
}

std::int64_t parse_int(std::string_view text) {
	std::int64_t value = 0;
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
	if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
		throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
	return value;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
	*this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(wide numerator, wide denominator) {
	if (denominator == 0) throw std::domain_error("rational with zero denominator");
	if (denominator < 0) {
		numerator = -numerator;
		denominator = -denominator;
	}
	wide g = wide_gcd(numerator, denominator);
	if (g > 1) {
		numerator /= g;
		denominator /= g;
	}
	if (numerator > kMax || numerator < kMin || denominator > kMax)
		throw ArithmeticOverflow("rational arithmetic exceeds 64-bit range");
	Rational r;
	r.num_ = static_cast<std::int64_t>(numerator);
	r.den_ = static_cast<std::int64_t>(denominator);
	return r;
}

std::int64_t Rational::floor() const {
	std::int64_t q = num_ / den_;
	if (num_ % den_ != 0 && num_ < 0) --q;
	return q;
}

std::int64_t Rational::ceil() const {
	std::int64_t q = num_ / den_;
	if (num_ % den_ != 0 && num_ > 0) ++q;
	return q;
}

std::int64_t Rational::to_integer() const {
	if (den_ != 1) throw std::domain_error("rational " + to_string() + " is not an integer");
	return num_;
}

std::string Rational::to_string() const {
	if (den_ == 1) return std::to_string(num_);
	return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
	auto slash = text.find('/');
	if (slash == std::string_view::npos) return Rational(parse_int(text));
	return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& rhs) {
	// Add over the lcm of the denominators to keep intermediates small.
	wide g = std::gcd(den_, rhs.den_);
	wide lhs_scale = rhs.den_ / g;
	wide rhs_scale = den_ / g;
	*this = from_wide(wide(num_) * lhs_scale + wide(rhs.num_) * rhs_scale, wide(den_) * lhs_scale);
	return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
	return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
	*this = from_wide(wide(num_) * rhs.num_, wide(den_) * rhs.den_);
	return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
	if (rhs.num_ == 0) throw std::domain_error("division by zero");
	*this = from_wide(wide(num_) * rhs.den_, wide(den_) * rhs.num_);
	return *this;
}

Rational Rational::operator-() const {
	return from_wide(-wide(num_), den_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
	if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
	wide a = wide(lhs.num_) * rhs.den_;
	wide b = wide(rhs.num_) * lhs.den_;
	if (a < b) return std::strong_ordering::less;
	if (a > b) return std::strong_ordering::greater;
	return std::strong_ordering::equal;
}

Rational pow(const Rational& base, unsigned exponent) {
	Rational result(1);
	Rational factor = base;
	while (exponent > 0) {
		if (exponent & 1u) result *= factor;
		exponent >>= 1u;
		if (exponent > 0) factor *= factor;
	}
	return result;
}

std::size_t RationalHash::operator()(const Rational& r) const noexcept {
	std::size_t h = std::hash<std::int64_t>{}(r.num());
	return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace tsched
