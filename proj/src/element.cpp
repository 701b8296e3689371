#include "steinberg/element.hpp"

#include "steinberg/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>

namespace steinberg {

Element::Element(GroupoidPtr model, std::vector<Term> terms)
    : model_(std::move(model)), terms_(std::move(terms))
{
	if (!model_)
		throw PreconditionError("element without a groupoid model");
	for (auto const& t : terms_)
		validate(*model_, t.bisection);
}

Element Element::indicator(GroupoidPtr model, Bisection b, Complex coeff)
{
	return Element(std::move(model), {Term{std::move(coeff), std::move(b)}});
}

std::vector<Bisection> Element::family() const
{
	std::vector<Bisection> out;
	out.reserve(terms_.size());
	for (auto const& t : terms_)
		out.push_back(t.bisection);
	return out;
}

Element Element::compacted() const
{
	std::vector<Term> out;
	std::map<Bisection, size_t> slot;
	for (auto const& t : terms_) {
		if (t.bisection.empty())
			continue;
		auto [it, fresh] = slot.emplace(t.bisection, out.size());
		if (fresh)
			out.push_back(t);
		else
			out[it->second].coeff += t.coeff;
	}
	std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
	Element e(model_);
	e.terms_ = std::move(out);
	return e;
}

void require_same_model(const Element& f, const Element& g)
{
	if (f.model() != g.model())
		throw ModelMismatch();
}

Element add(const Element& f, const Element& g)
{
	require_same_model(f, g);
	std::vector<Term> terms = f.terms();
	terms.insert(terms.end(), g.terms().begin(), g.terms().end());
	return Element(f.model(), std::move(terms));
}

Element scale(const Complex& c, const Element& f)
{
	std::vector<Term> terms = f.terms();
	for (auto& t : terms)
		t.coeff *= c;
	return Element(f.model(), std::move(terms));
}

Element convolve(const Element& f, const Element& g)
{
	require_same_model(f, g);
	const Groupoid& G = f.groupoid();
	std::vector<Term> terms;
	for (auto const& x : f.terms())
		for (auto const& y : g.terms()) {
			Complex c = x.coeff * y.coeff;
			if (c.is_zero())
				continue;
			Bisection bd = product(G, x.bisection, y.bisection);
			if (!bd.empty())
				terms.push_back({std::move(c), std::move(bd)});
		}
	return Element(f.model(), std::move(terms)).compacted();
}

Element involute(const Element& f)
{
	std::vector<Term> terms;
	for (auto const& t : f.terms())
		terms.push_back({t.coeff.conj(), inverse(f.groupoid(), t.bisection)});
	return Element(f.model(), std::move(terms));
}

Complex evaluate(const Element& f, const TestPoint& p)
{
	const Groupoid& G = f.groupoid();
	if (G.as_finite() ? p.kind != TestPoint::Kind::Arrow || p.arrow >= G.finite().size()
	                  : p.kind == TestPoint::Kind::Arrow)
		throw PreconditionError("point does not belong to the element's groupoid");
	Complex v;
	for (auto const& t : f.terms())
		if (contains(G, t.bisection, p))
			v += t.coeff;
	return v;
}

namespace {

std::vector<TestPoint> joint_points(const Element& f, std::span<const Bisection> extra)
{
	auto family = f.family();
	family.insert(family.end(), extra.begin(), extra.end());
	return enumerate_test_points(f.groupoid(), family);
}

} // namespace

bool equals(const Element& f, const Element& g)
{
	require_same_model(f, g);
	auto gf = g.family();
	for (auto const& p : joint_points(f, gf))
		if (!(evaluate(f, p) == evaluate(g, p)))
			return false;
	return true;
}

SupportDescription open_support(const Element& f)
{
	const Groupoid& G = f.groupoid();
	SupportDescription out;
	auto family = f.family();
	auto points = enumerate_test_points(G, family);
	if (G.as_finite()) {
		for (auto const& p : points)
			if (!evaluate(f, p).is_zero())
				out.classes.push_back({p, G.finite().name(p.arrow), true});
		return out;
	}
	const size_t depth = class_depth(family);
	bool punctured_in = false, base_level_in = false;
	for (auto const& p : points) {
		if (evaluate(f, p).is_zero())
			continue;
		SupportClass c{p, {}, true};
		switch (p.kind) {
		case TestPoint::Kind::CantorUnit:
			if (is_punctured_representative(p, depth)) {
				c.region = fmt::format("cyl({})\\{{base}}", std::string(depth, '0'));
				punctured_in = true;
			} else {
				std::string w = p.word;
				w.resize(depth, '0');
				c.region = fmt::format("cyl({})", w);
			}
			break;
		case TestPoint::Kind::Base:
			c.region = "base";
			c.open = false;
			base_level_in = true;
			break;
		case TestPoint::Kind::Head:
			c.region = fmt::format("head({})", p.head);
			c.open = false;
			base_level_in = true;
			break;
		case TestPoint::Kind::Arrow:
			break;
		}
		out.classes.push_back(std::move(c));
	}
	// Every neighbourhood of the base point or of a head contains a punctured
	// cylinder around the base point.
	out.open = !base_level_in || punctured_in;
	return out;
}

bool is_supported_in(const Element& f, std::span<const Bisection> target)
{
	const Groupoid& G = f.groupoid();
	for (auto const& b : target)
		validate(G, b);
	for (auto const& p : joint_points(f, target)) {
		if (evaluate(f, p).is_zero())
			continue;
		bool inside = std::any_of(target.begin(), target.end(),
		                          [&](const Bisection& b) { return contains(G, b, p); });
		if (!inside)
			return false;
	}
	return true;
}

bool is_supported_in(const Element& f, const Bisection& target)
{
	return is_supported_in(f, std::span<const Bisection>(&target, 1));
}

bool is_supported_in_units(const Element& f) { return is_supported_in(f, unit_space(f.groupoid())); }

bool is_supported_in_some_bisection(const Element& f)
{
	const Groupoid& G = f.groupoid();
	auto support = open_support(f);
	if (auto fin = G.as_finite()) {
		std::set<ArrowId> src, rng;
		for (auto const& c : support.classes) {
			auto const& a = fin->arrow(c.representative.arrow);
			if (!src.insert(a.src).second || !rng.insert(a.rng).second)
				return false;
		}
		return true;
	}
	// All snake arrows are loops and only the base fiber has more than one
	// point, so a single base-level arrow in the support is the only constraint.
	return std::count_if(support.classes.begin(), support.classes.end(), [](const SupportClass& c) {
		       return c.representative.kind == TestPoint::Kind::Base ||
		              c.representative.kind == TestPoint::Kind::Head;
	       }) <= 1;
}

Modulus sup_norm(const Element& f)
{
	Modulus best;
	for (auto const& p : enumerate_test_points(f.groupoid(), f.family()))
		best = std::max(best, Modulus::of(evaluate(f, p)));
	return best;
}

Real i_norm(const Element& f)
{
	const Groupoid& G = f.groupoid();
	auto points = enumerate_test_points(G, f.family());
	Real best;
	if (auto fin = G.as_finite()) {
		std::map<ArrowId, Real> src_sum, rng_sum;
		for (auto const& p : points) {
			Real v = Real::from(Modulus::of(evaluate(f, p)));
			src_sum[fin->arrow(p.arrow).src] += v;
			rng_sum[fin->arrow(p.arrow).rng] += v;
		}
		for (auto const& [u, s] : src_sum)
			best = Real::max(best, s);
		for (auto const& [u, s] : rng_sum)
			best = Real::max(best, s);
		return best;
	}
	// Snake: every arrow is a loop, so source and range fibers coincide. The
	// fiber over the base point is the base plus the heads; heads outside the
	// family carry the value 0.
	Real base_fiber;
	for (auto const& p : points) {
		Real v = Real::from(Modulus::of(evaluate(f, p)));
		if (p.kind == TestPoint::Kind::Base || p.kind == TestPoint::Kind::Head)
			base_fiber += v;
		else
			best = Real::max(best, v);
	}
	return Real::max(best, base_fiber);
}

Spectrum unit_spectrum(const Element& f, const Bisection& window)
{
	const Groupoid& G = f.groupoid();
	validate(G, window);
	if (!is_unit_region(G, window))
		throw PreconditionError("spectral window is not a unit region");
	if (!is_supported_in(f, window))
		throw PreconditionError("support escapes the spectral window");
	std::set<Complex> values;
	for (auto const& p : joint_points(f, std::span<const Bisection>(&window, 1)))
		if (is_unit(G, p) && contains(G, window, p))
			values.insert(evaluate(f, p));
	return {{values.begin(), values.end()}};
}

Modulus spectral_radius(const Element& f, const Bisection& window)
{
	Modulus best;
	for (auto const& z : unit_spectrum(f, window).values)
		best = std::max(best, Modulus::of(z));
	return best;
}

} // namespace steinberg
