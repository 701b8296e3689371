#pragma once

// Exact scalars for A(G): rationals, complex rationals, and square roots of
// rationals (moduli). Nothing in here rounds except the to_double() helpers.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace steinberg {

using Rational = mpq_class;

/// Parses an unsigned or signed decimal ("3", "-0.25") or a fraction ("1/3").
Rational parse_rational(std::string_view text);

/// Exact decimal when the denominator is of the form 2^a 5^b, "p/q" otherwise.
std::string format_rational(const Rational& q);

class Complex {
  public:
	Complex() = default;
	Complex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im))
	{
		re_.canonicalize();
		im_.canonicalize();
	}
	Complex(long re) : re_(re), im_(0) {}

	const Rational& real() const { return re_; }
	const Rational& imag() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	Complex conj() const { return {re_, -im_}; }
	/// |z|^2, always rational.
	Rational norm2() const { return re_ * re_ + im_ * im_; }
	std::complex<double> to_double() const;

	Complex& operator+=(const Complex& o)
	{
		re_ += o.re_;
		im_ += o.im_;
		return *this;
	}
	Complex& operator-=(const Complex& o)
	{
		re_ -= o.re_;
		im_ -= o.im_;
		return *this;
	}
	Complex& operator*=(const Complex& o)
	{
		Rational r = re_ * o.re_ - im_ * o.im_;
		Rational i = re_ * o.im_ + im_ * o.re_;
		re_ = std::move(r);
		im_ = std::move(i);
		return *this;
	}

	friend Complex operator+(Complex a, const Complex& b) { return a += b; }
	friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
	friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
	friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }
	friend bool operator==(const Complex& a, const Complex& b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}
	/// Lexicographic on (re, im); only used to keep sets deterministic.
	friend bool operator<(const Complex& a, const Complex& b)
	{
		if (a.re_ != b.re_)
			return a.re_ < b.re_;
		return a.im_ < b.im_;
	}

  private:
	Rational re_{0};
	Rational im_{0};
};

/// Parses the coefficient grammar `[-]a[.b][±c[.d]i]`, plus fractions and a
/// bare imaginary part ("2i", "-i").
Complex parse_complex(std::string_view text);

/// Inverse of parse_complex: "3", "-1.5", "1-2i", "0+1i".
std::string format_complex(const Complex& z);

/// A non-negative real of the form sqrt(q), q rational. Every |z| for exact
/// complex z has this shape, so comparisons stay exact.
class Modulus {
  public:
	Modulus() = default;
	static Modulus of(const Complex& z) { return Modulus(z.norm2()); }
	static Modulus of_rational(const Rational& r) { return Modulus(r * r); }
	explicit Modulus(Rational squared);

	const Rational& squared() const { return squared_; }
	/// The value itself when sqrt(squared) is rational.
	std::optional<Rational> exact() const;
	double to_double() const;

	friend Modulus operator*(const Modulus& a, const Modulus& b)
	{
		return Modulus(a.squared_ * b.squared_);
	}
	friend bool operator==(const Modulus& a, const Modulus& b)
	{
		return a.squared_ == b.squared_;
	}
	friend std::strong_ordering operator<=>(const Modulus& a, const Modulus& b)
	{
		int c = cmp(a.squared_, b.squared_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

  private:
	Rational squared_{0};
};

/// Sign of a - (b + eps), exactly, for eps >= 0.
int compare_with_slack(const Modulus& a, const Modulus& b, const Rational& eps);
/// Exact test of a <= b + eps for eps >= 0.
bool le_with_slack(const Modulus& a, const Modulus& b, const Rational& eps);

/// A sum of moduli. Exact when every summand was a rational modulus;
/// otherwise only the double approximation is meaningful.
struct Real {
	double approx = 0.0;
	std::optional<Rational> exact = Rational(0);

	static Real from(const Modulus& m);
	Real& operator+=(const Real& o);
	friend Real operator+(Real a, const Real& b) { return a += b; }
	friend Real operator*(const Real& a, const Real& b);
	/// Exact comparison when both sides are exact, double comparison otherwise.
	friend bool operator<(const Real& a, const Real& b);
	static Real max(const Real& a, const Real& b) { return a < b ? b : a; }
};

std::string format_modulus(const Modulus& m);
std::string format_real(const Real& r);
std::string format_double(double x);

} // namespace steinberg
