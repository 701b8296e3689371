#include "steinberg/representation.hpp"

#include "steinberg/errors.hpp"
#include "steinberg/rewriting.hpp"

#include <fmt/format.h>

#include <cmath>
#include <map>

namespace steinberg {

FiberOperator::FiberOperator(std::vector<TestPoint> basis)
    : basis_(std::move(basis)), m_(basis_.size() * basis_.size())
{}

FiberOperator FiberOperator::adjoint() const
{
	FiberOperator out(basis_);
	for (size_t r = 0; r < size(); ++r)
		for (size_t c = 0; c < size(); ++c)
			out.at(c, r) = at(r, c).conj();
	return out;
}

oracle::DenseMatrix FiberOperator::to_dense() const
{
	oracle::DenseMatrix d(size());
	for (size_t r = 0; r < size(); ++r)
		for (size_t c = 0; c < size(); ++c)
			d(r, c) = at(r, c).to_double();
	return d;
}

FiberOperator operator*(const FiberOperator& a, const FiberOperator& b)
{
	if (a.basis_ != b.basis_)
		throw PreconditionError("fiber operators on different fibers");
	FiberOperator out(a.basis_);
	const size_t n = a.size();
	for (size_t r = 0; r < n; ++r)
		for (size_t k = 0; k < n; ++k) {
			if (a.at(r, k).is_zero())
				continue;
			for (size_t c = 0; c < n; ++c)
				out.at(r, c) += a.at(r, k) * b.at(k, c);
		}
	return out;
}

bool operator==(const FiberOperator& a, const FiberOperator& b)
{
	return a.basis_ == b.basis_ && a.m_ == b.m_;
}

FiberOperator regular_rep(const Element& f, const TestPoint& x)
{
	const Groupoid& G = f.groupoid();
	const std::vector<TestPoint> basis = fiber(G, x).points();
	std::map<TestPoint, size_t> index;
	for (size_t k = 0; k < basis.size(); ++k)
		index.emplace(basis[k], k);
	FiberOperator op(basis);
	for (size_t c = 0; c < basis.size(); ++c) {
		const TestPoint& gamma = basis[c];
		const Fiber over = fiber(G, range(G, gamma));
		for (auto const& alpha : over.points()) {
			Complex v = evaluate(f, alpha);
			if (v.is_zero())
				continue;
			auto ag = compose(G, alpha, gamma);
			if (!ag)
				throw std::logic_error("fiber arrows are not composable");
			op.at(index.at(*ag), c) += v;
		}
	}
	return op;
}

NormValue fiber_norm(const Element& f, const TestPoint& x, double tolerance)
{
	oracle::PowerIteration opts;
	opts.tolerance = tolerance;
	return {oracle::matrix_norm(regular_rep(f, x).to_dense(), opts), tolerance};
}

std::vector<TestPoint> representative_units(const Element& f)
{
	const Groupoid& G = f.groupoid();
	std::vector<TestPoint> out;
	if (auto g = G.as_finite()) {
		for (ArrowId u : g->units())
			out.push_back(TestPoint::of_arrow(u));
		return out;
	}
	for (auto const& p : enumerate_test_points(G, f.family()))
		if (is_unit(G, p))
			out.push_back(p);
	return out;
}

NormValue reduced_norm(const Element& f, double tolerance)
{
	const Groupoid& G = f.groupoid();
	if (auto s = G.as_snake(); s && s->integer_heads())
		throw InfiniteFiber();
	NormValue best{0, tolerance};
	for (auto const& x : representative_units(f))
		best.value = std::max(best.value, fiber_norm(f, x, tolerance).value);
	return best;
}

NormValue symbol_norm(const Element& f)
{
	const Groupoid& G = f.groupoid();
	auto s = G.as_snake();
	if (!s || !s->integer_heads())
		throw ModelMismatch("the symbol norm needs the Z-headed snake");
	std::vector<std::pair<std::int64_t, std::complex<double>>> coeffs;
	double slope = 0;
	Complex c0 = evaluate(f, TestPoint::base());
	if (!c0.is_zero())
		coeffs.emplace_back(0, c0.to_double());
	for (auto k : heads_used(f.family())) {
		Complex c = evaluate(f, TestPoint::of_head(*s, k));
		if (c.is_zero())
			continue;
		coeffs.emplace_back(k, c.to_double());
		slope += std::abs(static_cast<double>(k)) * std::abs(c.to_double());
	}
	const double step = 2 * M_PI / static_cast<double>(kSymbolGrid);
	double best = 0;
	for (size_t j = 0; j < kSymbolGrid; ++j) {
		const double theta = step * static_cast<double>(j);
		std::complex<double> v;
		for (auto const& [k, c] : coeffs)
			v += c * std::polar(1.0, static_cast<double>(k) * theta);
		best = std::max(best, std::abs(v));
	}
	return {best, step * slope};
}

NormReport norm_sandwich(const Element& f, double tolerance)
{
	const Groupoid& G = f.groupoid();
	NormReport r;
	r.sup = sup_norm(f);
	r.inorm = i_norm(f);
	r.mf = trivial_bound(f);
	r.bisection_bound = is_supported_in_some_bisection(f);
	r.unit_bound = is_supported_in_units(f);
	if (auto s = G.as_snake(); s && s->integer_heads()) {
		r.reduced = symbol_norm(f);
		r.reduced.tolerance += tolerance;
		for (auto const& x : representative_units(f))
			if (x.kind != TestPoint::Kind::Base)
				r.reduced.value = std::max(r.reduced.value, Modulus::of(evaluate(f, x)).to_double());
	} else {
		r.reduced = reduced_norm(f, tolerance);
	}
	r.full_lower = r.reduced.value;
	r.full_upper = r.mf.approx;
	if (r.bisection_bound || r.unit_bound)
		r.full_upper = std::min(r.full_upper, r.sup.to_double());
	r.pinned = r.full_upper - r.full_lower <= std::max(kPinTolerance, r.reduced.tolerance);
	return r;
}

} // namespace steinberg
