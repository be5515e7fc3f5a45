#ifndef TSCHED_RATIONAL_HPP
#define TSCHED_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tsched {

/// Thrown when an exact computation leaves the 64-bit range.
class ArithmeticOverflow : public std::overflow_error {
public:
	using std::overflow_error::overflow_error;
};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by 64-bit integers with 128-bit intermediates; every operation
/// either yields the exact result or throws ArithmeticOverflow.
class Rational {
public:
	constexpr Rational() = default;
	constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit on purpose
	Rational(std::int64_t numerator, std::int64_t denominator);

	std::int64_t num() const { return num_; }
	std::int64_t den() const { return den_; }
	bool is_integer() const { return den_ == 1; }

	std::int64_t floor() const;
	std::int64_t ceil() const;

	/// Value as an integer; throws std::domain_error unless is_integer().
	std::int64_t to_integer() const;

	/// "n" for integers, "n/d" otherwise.
	std::string to_string() const;

	/// Accepts "n", "-n" or "n/d".
	static Rational parse(std::string_view text);

	double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

	Rational& operator+=(const Rational& rhs);
	Rational& operator-=(const Rational& rhs);
	Rational& operator*=(const Rational& rhs);
	Rational& operator/=(const Rational& rhs);

	friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
	friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
	friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
	friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
	Rational operator-() const;

	friend bool operator==(const Rational&, const Rational&) = default;
	friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

	friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
	static Rational from_wide(__int128 numerator, __int128 denominator);

	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
};

Rational pow(const Rational& base, unsigned exponent);

struct RationalHash {
	std::size_t operator()(const Rational& r) const noexcept;
};

} // namespace tsched

#endif
