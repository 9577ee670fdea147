#ifndef NALG_RATIONAL_HPP
#define NALG_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nalg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP's mpq_class.
class Rational
{
public:
	Rational() = default;

	template <std::integral I>
	Rational(I value) // NOLINT(google-explicit-constructor)
	    : q_(static_cast<long>(value))
	{
	}

	Rational(long numerator, long denominator)
	{
		if (denominator == 0)
			throw std::domain_error("rational with zero denominator");
		q_ = mpq_class(numerator, denominator);
		q_.canonicalize();
	}

	/// Accepts exactly `[+-]?[0-9]+(/[0-9]+)?` with a nonzero denominator.
	static Rational parse(std::string_view text)
	{
		auto fail = [&] {
			throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
		};
		std::size_t pos = 0;
		std::string num, den;
		if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
		{
			if (text[pos] == '-')
				num.push_back('-');
			++pos;
		}
		std::size_t digits = 0;
		while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
		{
			num.push_back(text[pos++]);
			++digits;
		}
		if (digits == 0)
			fail();
		if (pos < text.size())
		{
			if (text[pos] != '/')
				fail();
			++pos;
			while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
				den.push_back(text[pos++]);
			if (den.empty() || pos != text.size())
				fail();
		}
		Rational r;
		r.q_.get_num().set_str(num, 10);
		if (!den.empty())
		{
			r.q_.get_den().set_str(den, 10);
			if (r.q_.get_den() == 0)
				throw std::domain_error("rational with zero denominator '" + std::string(text) + "'");
			r.q_.canonicalize();
		}
		return r;
	}

	/// Canonical text: "p" for integers, "p/q" otherwise.
	std::string str() const
	{
		if (q_.get_den() == 1)
			return q_.get_num().get_str();
		return q_.get_num().get_str() + "/" + q_.get_den().get_str();
	}

	bool is_zero() const { return sgn(q_) == 0; }
	int sign() const { return sgn(q_); }

	Rational operator-() const
	{
		Rational r;
		r.q_ = -q_;
		return r;
	}
	Rational &operator+=(Rational const &o)
	{
		q_ += o.q_;
		return *this;
	}
	Rational &operator-=(Rational const &o)
	{
		q_ -= o.q_;
		return *this;
	}
	Rational &operator*=(Rational const &o)
	{
		q_ *= o.q_;
		return *this;
	}
	Rational &operator/=(Rational const &o)
	{
		if (o.is_zero())
			throw std::domain_error("division by zero");
		q_ /= o.q_;
		return *this;
	}

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
	friend Rational operator/(Rational a, Rational const &b) { return a /= b; }

	friend bool operator==(Rational const &a, Rational const &b) { return a.q_ == b.q_; }
	friend std::strong_ordering operator<=>(Rational const &a, Rational const &b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

	friend std::ostream &operator<<(std::ostream &os, Rational const &r) { return os << r.str(); }

private:
	mpq_class q_;
};

} // namespace nalg

#endif
