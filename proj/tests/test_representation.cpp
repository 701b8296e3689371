#include "support.hpp"

#include "steinberg/errors.hpp"
#include "steinberg/random.hpp"
#include "steinberg/representation.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>

using namespace test;

namespace {

Eigen::MatrixXcd to_eigen(const oracle::DenseMatrix& m)
{
	Eigen::MatrixXcd e(m.size(), m.size());
	for (size_t r = 0; r < m.size(); ++r)
		for (size_t c = 0; c < m.size(); ++c)
			e(r, c) = m(r, c);
	return e;
}

double svd_norm(const Eigen::MatrixXcd& m)
{
	if (m.size() == 0)
		return 0;
	return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

std::vector<std::vector<Complex>> entries(const FiberOperator& op)
{
	std::vector<std::vector<Complex>> out(op.size(), std::vector<Complex>(op.size()));
	for (size_t r = 0; r < op.size(); ++r)
		for (size_t c = 0; c < op.size(); ++c)
			out[r][c] = op.at(r, c);
	return out;
}

} // namespace

TEST_CASE("regular representation examples")
{
	auto p = pair({"u", "v"});
	Element swap = ind(p, fb(p, {"e_uv"})) + ind(p, fb(p, {"e_vu"}));
	FiberOperator op = regular_rep(swap, pt(p, "e_uu"));
	REQUIRE(op.size() == 2);
	// basis {e_uu, e_vu}: swap sends one to the other
	CHECK(op.at(0, 0) == 0);
	CHECK(op.at(1, 1) == 0);
	CHECK(op.at(0, 1) == 1);
	CHECK(op.at(1, 0) == 1);

	auto s = snake(2);
	Element f = ind(s, sb(s, {""})) - ind(s, sb(s, {""}, 1));
	FiberOperator fo = regular_rep(f, TestPoint::base());
	CHECK(fo.basis() == std::vector<TestPoint>{TestPoint::base(), pt(s, "head:1")});
	CHECK(entries(fo) == std::vector<std::vector<Complex>>{{1, -1}, {-1, 1}});

	Element one = ind(s, sb(s, {""}));
	for (auto x : {TestPoint::base(), pt(s, "unit:1")}) {
		FiberOperator id = regular_rep(one, x);
		for (size_t r = 0; r < id.size(); ++r)
			for (size_t c = 0; c < id.size(); ++c)
				CHECK(id.at(r, c) == (r == c ? Complex(1) : Complex()));
	}
	CHECK_THROWS_AS(regular_rep(f, pt(s, "head:1")), PreconditionError);
	auto sz = snake(std::nullopt);
	CHECK_THROWS_AS(regular_rep(ind(sz, sb(sz, {""})), TestPoint::base()), InfiniteFiber);
}

TEST_CASE("fiber and reduced norms")
{
	auto p = pair({"u", "v"});
	Element swap = ind(p, fb(p, {"e_uv"})) + ind(p, fb(p, {"e_vu"}));
	CHECK(fiber_norm(swap, pt(p, "e_uu")).value == doctest::Approx(1).epsilon(1e-10));
	CHECK(reduced_norm(swap).value == doctest::Approx(1).epsilon(1e-10));

	auto s = snake(2);
	Element f = ind(s, sb(s, {""})) - ind(s, sb(s, {""}, 1));
	NormValue r = reduced_norm(f);
	CHECK(std::abs(r.value - 2) <= 1e-10);
	CHECK(r.tolerance == kNormTolerance);
	CHECK(r.value > sup_norm(f).to_double());
	CHECK(fiber_norm(Element(s), TestPoint::base()).value == 0);
	CHECK(reduced_norm(ind(s, sb(s, {"01"}))).value == doctest::Approx(1));

	auto sz = snake(std::nullopt);
	CHECK_THROWS_AS(reduced_norm(ind(sz, sb(sz, {""}, 1))), InfiniteFiber);
}

TEST_CASE("matrix_norm")
{
	oracle::DenseMatrix m(2);
	m(0, 0) = 1;
	m(0, 1) = -1;
	m(1, 0) = -1;
	m(1, 1) = 1;
	CHECK(std::abs(oracle::matrix_norm(m) - 2) <= 1e-10);
	oracle::DenseMatrix id(5);
	for (size_t k = 0; k < 5; ++k)
		id(k, k) = 1;
	CHECK(std::abs(oracle::matrix_norm(id) - 1) <= 1e-10);
	CHECK(oracle::matrix_norm(oracle::DenseMatrix(4)) == 0);
	CHECK_THROWS_AS(oracle::DenseMatrix(513), PreconditionError);
	CHECK_NOTHROW(oracle::DenseMatrix(513, 1024));
}

TEST_CASE("matrix_norm agrees with an SVD")
{
	std::mt19937_64 rng(17);
	std::uniform_int_distribution<int> entry(-3, 3);
	for (int trial = 0; trial < 200; ++trial) {
		size_t n = 1 + trial % 7;
		oracle::DenseMatrix m(n);
		for (size_t r = 0; r < n; ++r)
			for (size_t c = 0; c < n; ++c)
				m(r, c) = {double(entry(rng)), double(entry(rng) % 2)};
		double expected = svd_norm(to_eigen(m));
		CAPTURE(trial);
		CHECK(std::abs(oracle::matrix_norm(m) - expected) <= 1e-8 * std::max(1.0, expected));
	}
}

TEST_CASE("reduced norms agree with an SVD of every fiber")
{
	auto rng = random::stream(23, "reduced");
	for (int trial = 0; trial < 150; ++trial) {
		GroupoidPtr g = trial % 2 ? random::cyclic_snake(rng) : random::finite_groupoid(rng);
		Element f = random::element(g, rng);
		double expected = 0;
		for (auto const& x : representative_units(f))
			expected = std::max(expected, svd_norm(to_eigen(regular_rep(f, x).to_dense())));
		CHECK(std::abs(reduced_norm(f).value - expected) <= 1e-8 * std::max(1.0, expected));
	}
}

TEST_CASE("symbol norm")
{
	auto sz = snake(std::nullopt);
	Bisection G0 = sb(sz, {""}), B1 = sb(sz, {""}, 1), Bm1 = sb(sz, {""}, -1);
	NormValue one = symbol_norm(ind(sz, G0));
	CHECK(one.value == 1);
	CHECK(one.tolerance == 0);

	NormValue two = symbol_norm(ind(sz, G0) + ind(sz, B1));
	CHECK(two.tolerance > 0);
	CHECK(std::abs(two.value - 2) <= two.tolerance);

	NormValue sine = symbol_norm(ind(sz, B1) - ind(sz, Bm1));
	CHECK(std::abs(sine.value - 2) <= sine.tolerance + 1e-12);

	auto s2 = snake(2);
	CHECK_THROWS_AS(symbol_norm(ind(s2, sb(s2, {""}))), ModelMismatch);
}

TEST_CASE("norm sandwich")
{
	auto s = snake(2);
	Element f = ind(s, sb(s, {""})) - ind(s, sb(s, {""}, 1));
	NormReport r = norm_sandwich(f);
	CHECK(r.sup == Modulus::of_rational(1));
	CHECK(r.inorm.exact == Rational(2));
	CHECK(std::abs(r.reduced.value - 2) <= 1e-10);
	CHECK(r.mf.exact == Rational(2));
	CHECK_FALSE(r.bisection_bound);
	CHECK(r.pinned);
	CHECK(r.full_upper == 2);

	Element b = ind(s, sb(s, {""}, 1));
	NormReport rb = norm_sandwich(b);
	CHECK(rb.sup == Modulus::of_rational(1));
	CHECK(rb.inorm.exact == Rational(1));
	CHECK(std::abs(rb.reduced.value - 1) <= 1e-10);
	CHECK(rb.mf.exact == Rational(1));
	CHECK(rb.bisection_bound);
	CHECK(rb.pinned);

	NormReport z = norm_sandwich(Element(s));
	CHECK(z.sup == Modulus());
	CHECK(z.reduced.value == 0);
	CHECK(z.full_upper == 0);

	auto sz = snake(std::nullopt);
	NormReport rz = norm_sandwich(ind(sz, sb(sz, {""})) + ind(sz, sb(sz, {""}, 1)));
	CHECK(std::abs(rz.reduced.value - 2) <= rz.reduced.tolerance);
	CHECK(rz.full_upper == 2);
}

TEST_CASE("representation is a *-homomorphism")
{
	auto rng = random::stream(31, "star");
	for (int trial = 0; trial < 100; ++trial) {
		GroupoidPtr g = trial % 2 ? random::cyclic_snake(rng) : random::finite_groupoid(rng);
		Element a = random::element(g, rng), b = random::element(g, rng);
		for (auto const& x : representative_units(a + b)) {
			CHECK(regular_rep(convolve(a, b), x) == regular_rep(a, x) * regular_rep(b, x));
			CHECK(regular_rep(involute(a), x) == regular_rep(a, x).adjoint());
		}
	}
}
