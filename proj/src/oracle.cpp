#include "steinberg/oracle.hpp"

#include "steinberg/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace steinberg::oracle {

namespace {

const FiniteGroupoid& finite_model(const Element& f)
{
	auto g = f.groupoid().as_finite();
	if (!g)
		throw ModelMismatch("the brute-force oracle needs a finite groupoid");
	return *g;
}

} // namespace

std::vector<Complex> brute_values(const Element& f)
{
	const FiniteGroupoid& g = finite_model(f);
	std::vector<Complex> v(g.size());
	for (auto const& t : f.terms())
		for (ArrowId a : t.bisection.as_finite()->arrows)
			v[a] += t.coeff;
	return v;
}

std::vector<Complex> brute_convolve(const Element& f, const Element& g)
{
	const FiniteGroupoid& G = finite_model(f);
	if (f.model() != g.model())
		throw ModelMismatch();
	auto fv = brute_values(f);
	auto gv = brute_values(g);
	std::vector<Complex> out(G.size());
	for (ArrowId a = 0; a < G.size(); ++a) {
		if (fv[a].is_zero())
			continue;
		for (ArrowId b = 0; b < G.size(); ++b)
			if (G.arrow(a).src == G.arrow(b).rng)
				out[*G.compose(a, b)] += fv[a] * gv[b];
	}
	return out;
}

std::vector<ArrowId> brute_support(const Element& f)
{
	auto v = brute_values(f);
	std::vector<ArrowId> out;
	for (ArrowId a = 0; a < v.size(); ++a)
		if (!v[a].is_zero())
			out.push_back(a);
	return out;
}

DenseMatrix::DenseMatrix(size_t n, size_t cap) : n_(n), a_(n * n)
{
	if (n > cap)
		throw PreconditionError(fmt::format("matrix dimension {} exceeds the cap {}", n, cap));
}

namespace {

using Vec = std::vector<std::complex<double>>;

Vec apply(const DenseMatrix& m, const Vec& v, bool adjoint)
{
	const size_t n = m.size();
	Vec out(n);
	for (size_t r = 0; r < n; ++r)
		for (size_t c = 0; c < n; ++c)
			out[adjoint ? c : r] += (adjoint ? std::conj(m(r, c)) * v[r] : m(r, c) * v[c]);
	return out;
}

double norm2(const Vec& v)
{
	double s = 0;
	for (auto const& z : v)
		s += std::norm(z);
	return std::sqrt(s);
}

double iterate(const DenseMatrix& m, Vec v, const PowerIteration& opts)
{
	double len = norm2(v);
	if (len == 0)
		return 0;
	for (auto& z : v)
		z /= len;
	double lambda = 0;
	for (size_t it = 0; it < opts.max_iterations; ++it) {
		Vec mv = apply(m, v, false);
		double rayleigh = norm2(mv);
		rayleigh *= rayleigh; // <v, M*M v> for unit v
		Vec w = apply(m, mv, true);
		double wl = norm2(w);
		if (wl == 0)
			return 0;
		for (auto& z : w)
			z /= wl;
		v = std::move(w);
		bool settled = std::abs(rayleigh - lambda) <= opts.tolerance * 1e-3 * std::max(1.0, rayleigh);
		lambda = rayleigh;
		if (settled)
			break;
	}
	return std::sqrt(lambda);
}

} // namespace

double matrix_norm(const DenseMatrix& m, const PowerIteration& opts)
{
	const size_t n = m.size();
	if (n == 0)
		return 0;
	Vec ones(n, 1.0), phases(n);
	for (size_t k = 0; k < n; ++k) {
		double t = std::fmod(static_cast<double>(k + 1) * 0.6180339887498949, 1.0);
		phases[k] = std::polar(1.0 + t, 2 * M_PI * std::fmod(static_cast<double>(k + 1) * 0.7548776662466927, 1.0));
	}
	return std::max(iterate(m, ones, opts), iterate(m, phases, opts));
}

} // namespace steinberg::oracle
