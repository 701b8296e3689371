#include "steinberg/number.hpp"

#include "steinberg/errors.hpp"

#include <fmt/format.h>

#include <cctype>
#include <cmath>

namespace steinberg {

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

// "12", "12.5", "12/7" without sign.
Rational parse_unsigned(std::string_view s, std::string_view whole)
{
	if (auto slash = s.find('/'); slash != std::string_view::npos) {
		auto num = s.substr(0, slash), den = s.substr(slash + 1);
		if (!all_digits(num) || !all_digits(den))
			throw ParseError(fmt::format("malformed number '{}'", whole));
		mpz_class n(std::string(num), 10), d(std::string(den), 10);
		if (d == 0)
			throw ParseError(fmt::format("zero denominator in '{}'", whole));
		Rational q{n, d};
		q.canonicalize();
		return q;
	}
	auto dot = s.find('.');
	auto int_part = s.substr(0, dot);
	std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
	if (!all_digits(int_part) || (dot != std::string_view::npos && !all_digits(frac_part)))
		throw ParseError(fmt::format("malformed number '{}'", whole));
	mpz_class num(std::string(int_part) + std::string(frac_part), 10);
	mpz_class den;
	mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
	Rational q(num, den);
	q.canonicalize();
	return q;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	if (text.empty())
		throw ParseError("empty number");
	bool neg = false;
	std::string_view body = text;
	if (body.front() == '-' || body.front() == '+') {
		neg = body.front() == '-';
		body.remove_prefix(1);
	}
	Rational q = parse_unsigned(body, text);
	return neg ? Rational(-q) : q;
}

std::string format_rational(const Rational& q)
{
	mpz_class den = q.get_den();
	unsigned twos = 0, fives = 0;
	while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
		den /= 2;
		++twos;
	}
	while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
		den /= 5;
		++fives;
	}
	if (den != 1)
		return q.get_str();
	unsigned digits = std::max(twos, fives);
	if (digits == 0)
		return q.get_num().get_str();
	mpz_class scale;
	mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
	mpz_class scaled = q.get_num() * scale / q.get_den();
	bool neg = scaled < 0;
	std::string s = mpz_class(abs(scaled)).get_str();
	if (s.size() <= digits)
		s.insert(0, digits - s.size() + 1, '0');
	s.insert(s.size() - digits, ".");
	return neg ? "-" + s : s;
}

std::complex<double> Complex::to_double() const { return {re_.get_d(), im_.get_d()}; }

Complex parse_complex(std::string_view text)
{
	if (text.empty())
		throw ParseError("empty coefficient");
	if (text.back() != 'i')
		return Complex(parse_rational(text));
	std::string_view body = text.substr(0, text.size() - 1);
	// split at the last sign that is not the leading one
	size_t split = std::string_view::npos;
	for (size_t k = body.size(); k-- > 1;) {
		if (body[k] == '+' || body[k] == '-') {
			split = k;
			break;
		}
	}
	auto imag_of = [&](std::string_view s) -> Rational {
		if (s.empty() || s == "+")
			return 1;
		if (s == "-")
			return -1;
		return parse_rational(s);
	};
	if (split == std::string_view::npos)
		return Complex(0, imag_of(body));
	return Complex(parse_rational(body.substr(0, split)), imag_of(body.substr(split)));
}

std::string format_complex(const Complex& z)
{
	if (sgn(z.imag()) == 0)
		return format_rational(z.real());
	std::string out = format_rational(z.real());
	out += sgn(z.imag()) < 0 ? "-" : "+";
	out += format_rational(abs(z.imag()));
	out += "i";
	return out;
}

Modulus::Modulus(Rational squared) : squared_(std::move(squared))
{
	squared_.canonicalize();
	if (sgn(squared_) < 0)
		throw PreconditionError("negative squared modulus");
}

std::optional<Rational> Modulus::exact() const
{
	const mpz_class& n = squared_.get_num();
	const mpz_class& d = squared_.get_den();
	if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
		return std::nullopt;
	return Rational(sqrt(n), sqrt(d));
}

double Modulus::to_double() const
{
	if (auto e = exact())
		return e->get_d();
	return std::sqrt(squared_.get_d());
}

int compare_with_slack(const Modulus& a, const Modulus& b, const Rational& eps)
{
	if (sgn(eps) < 0)
		throw PreconditionError("negative slack");
	const Rational& A = a.squared();
	const Rational& B = b.squared();
	if (sgn(eps) == 0)
		return cmp(A, B) < 0 ? -1 : (cmp(A, B) > 0 ? 1 : 0);
	if (A <= B)
		return -1;
	Rational e2 = eps * eps;
	if (A <= e2) // sqrt(A) - eps <= 0 <= sqrt(B)
		return A == e2 && sgn(B) == 0 ? 0 : -1;
	// sqrt(A) - eps > 0: compare (sqrt(A) - eps)^2 with B, i.e. L with
	// 2 eps sqrt(A) where L = A + eps^2 - B > 0.
	Rational L = A - B + e2;
	int c = cmp(L * L, 4 * e2 * A);
	return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool le_with_slack(const Modulus& a, const Modulus& b, const Rational& eps)
{
	return compare_with_slack(a, b, eps) <= 0;
}

Real Real::from(const Modulus& m)
{
	Real r;
	r.approx = m.to_double();
	r.exact = m.exact();
	return r;
}

Real& Real::operator+=(const Real& o)
{
	approx += o.approx;
	if (exact && o.exact)
		*exact += *o.exact;
	else
		exact.reset();
	if (exact)
		approx = exact->get_d();
	return *this;
}

Real operator*(const Real& a, const Real& b)
{
	Real r;
	r.approx = a.approx * b.approx;
	if (a.exact && b.exact) {
		r.exact = *a.exact * *b.exact;
		r.approx = r.exact->get_d();
	} else {
		r.exact.reset();
	}
	return r;
}

bool operator<(const Real& a, const Real& b)
{
	if (a.exact && b.exact)
		return *a.exact < *b.exact;
	return a.approx < b.approx;
}

std::string format_double(double x)
{
	if (x == 0.0)
		return "0";
	return fmt::format("{:.10g}", x);
}

std::string format_modulus(const Modulus& m)
{
	if (auto e = m.exact())
		return format_rational(*e);
	return format_double(m.to_double());
}

std::string format_real(const Real& r)
{
	if (r.exact)
		return format_rational(*r.exact);
	return format_double(r.approx);
}

} // namespace steinberg
