#include "steinberg/rewriting.hpp"

#include "steinberg/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace steinberg {

namespace {

struct Classes {
	size_t depth = 1;
	std::vector<TestPoint> points;
};

Classes classes_of(const Groupoid& g, const std::vector<Bisection>& family)
{
	return {class_depth(family), enumerate_test_points(g, family)};
}

void check(bool ok, const char* what)
{
	if (!ok)
		throw std::logic_error(fmt::format("rewriting invariant violated: {}", what));
}

bool in_union(const Groupoid& g, std::span<const Bisection> region, const TestPoint& p)
{
	return std::any_of(region.begin(), region.end(), [&](const Bisection& b) { return contains(g, b, p); });
}

// The base-level arrow of a snake bisection whose clopen set holds the base point.
TestPoint base_level_of(const Groupoid& g, const Bisection& b)
{
	return TestPoint::of_head(g.snake(), b.as_snake()->head);
}

// Neighbourhood of a class, with the punctured class replaced by the
// base-level arrow of `owner`. Returns the point actually used.
std::pair<TestPoint, Bisection> neighbourhood(const Groupoid& g, const TestPoint& p, size_t depth,
                                              const Bisection& owner)
{
	if (auto n = class_neighbourhood(g, p, depth))
		return {p, *n};
	TestPoint q = base_level_of(g, owner);
	check(contains(g, owner, q), "punctured class without a base-level arrow");
	return {q, *class_neighbourhood(g, q, depth)};
}

// Union of subsets of `within`.
Bisection union_within(const Groupoid& g, const std::vector<Bisection>& pieces, const Bisection& within)
{
	if (g.as_finite()) {
		std::vector<ArrowId> arrows;
		for (auto const& b : pieces)
			arrows.insert(arrows.end(), b.as_finite()->arrows.begin(), b.as_finite()->arrows.end());
		return Bisection::of_arrows(std::move(arrows));
	}
	ClopenSet c;
	for (auto const& b : pieces)
		c = c | b.as_snake()->clopen;
	return Bisection::snake_canonical(g.snake(), std::move(c), within.as_snake()->head);
}

Complex sum_at(const Groupoid& g, const std::vector<Term>& terms, const TestPoint& p)
{
	Complex v;
	for (auto const& t : terms)
		if (contains(g, t.bisection, p))
			v += t.coeff;
	return v;
}

} // namespace

Element rewrite_within(const Element& f, std::span<const Bisection> region)
{
	const Groupoid& G = f.groupoid();
	if (!is_supported_in(f, region))
		throw PreconditionError("support-not-contained: the support of the element escapes the region");
	auto family = f.family();
	family.insert(family.end(), region.begin(), region.end());
	const Classes cls = classes_of(G, family);

	auto escapes = [&](const Bisection& b) {
		return std::any_of(cls.points.begin(), cls.points.end(),
		                   [&](const TestPoint& p) { return contains(G, b, p) && !in_union(G, region, p); });
	};

	std::vector<Term> pending;
	for (auto const& t : f.terms())
		if (!t.bisection.empty())
			pending.push_back(t);
	std::vector<Term> done;

	while (!pending.empty()) {
		std::vector<Term> rest;
		for (auto& t : pending)
			(escapes(t.bisection) ? rest : done).push_back(std::move(t));
		pending = std::move(rest);
		if (pending.empty())
			break;

		const Bisection b1 = pending.front().bisection;
		// Neighbourhoods of the escaping classes of B1, each paired with the
		// terms that contain its class point.
		std::vector<Bisection> hoods;
		std::vector<std::vector<size_t>> members;
		for (auto const& p : cls.points) {
			if (!contains(G, b1, p) || in_union(G, region, p))
				continue;
			auto [q, n] = neighbourhood(G, p, cls.depth, b1);
			if (q != p) {
				check(!in_union(G, region, q), "punctured class escapes but its base-level arrow does not");
				continue; // handled at q itself
			}
			std::vector<size_t> s;
			Complex total;
			for (size_t k = 0; k < pending.size(); ++k)
				if (contains(G, pending[k].bisection, p)) {
					s.push_back(k);
					total += pending[k].coeff;
				}
			check(total.is_zero(), "coefficients over an escaping point do not cancel");
			hoods.push_back(std::move(n));
			members.push_back(std::move(s));
		}
		check(!hoods.empty(), "escaping term without escaping classes");
		auto pieces = disjointify(G, hoods, b1);

		for (size_t k = 0; k < pending.size(); ++k) {
			Bisection d = pending[k].bisection;
			for (size_t h = 0; h < pieces.size(); ++h)
				if (std::find(members[h].begin(), members[h].end(), k) != members[h].end())
					d = difference(G, d, pieces[h]);
			pending[k].bisection = std::move(d);
		}
		check(!escapes(pending.front().bisection), "first term still escapes after the cut");
		done.push_back(std::move(pending.front()));
		pending.erase(pending.begin());
		std::erase_if(pending, [](const Term& t) { return t.bisection.empty(); });
	}

	Element out = Element(f.model(), std::move(done)).compacted();
	check(equals(out, f), "rewritten element differs from the input");
	return out;
}

Element rewrite_within(const Element& f, const Bisection& region)
{
	return rewrite_within(f, std::span<const Bisection>(&region, 1));
}

Element restrict_to(const Element& f, const Bisection& b, const Bisection& within)
{
	const Groupoid& G = f.groupoid();
	validate(G, b);
	validate(G, within);
	if (!subset_of(G, b, within))
		throw PreconditionError(fmt::format("restriction target {} is not contained in {}",
		                                    format_bisection(G, b), format_bisection(G, within)));
	Element g = rewrite_within(f, within);
	std::vector<Term> terms;
	for (auto const& t : g.terms())
		terms.push_back({t.coeff, intersection(G, t.bisection, b)});
	return Element(f.model(), std::move(terms)).compacted();
}

Bisection unit_support_window(const Element& f)
{
	const Groupoid& G = f.groupoid();
	if (!is_supported_in_units(f))
		throw PreconditionError("the support of the element is not contained in the unit space");
	std::vector<Bisection> sources;
	for (auto const& t : f.terms())
		sources.push_back(source_region(G, t.bisection));
	return unit_region_union(G, sources);
}

std::vector<Element> initial_parts(const Element& f, std::span<const Bisection> cover)
{
	const Groupoid& G = f.groupoid();
	for (auto const& b : cover)
		validate(G, b);
	Element g = rewrite_within(f, cover);
	auto family = g.family();
	family.insert(family.end(), cover.begin(), cover.end());
	const Classes cls = classes_of(G, family);

	std::vector<std::vector<Term>> parts(cover.size());
	for (auto const& t : g.terms()) {
		const Bisection& d = t.bisection;
		std::vector<std::vector<Bisection>> by_member(cover.size());
		for (auto const& p : cls.points) {
			if (!contains(G, d, p))
				continue;
			auto [q, n] = neighbourhood(G, p, cls.depth, d);
			if (q != p)
				continue;
			auto it = std::find_if(cover.begin(), cover.end(),
			                       [&](const Bisection& b) { return contains(G, b, p); });
			check(it != cover.end(), "confined term leaves the cover");
			check(subset_of(G, n, *it) && subset_of(G, n, d), "class neighbourhood leaves D ∩ B_i");
			by_member[it - cover.begin()].push_back(std::move(n));
		}
		std::vector<Bisection> merged;
		std::vector<size_t> owner;
		for (size_t i = 0; i < cover.size(); ++i)
			if (!by_member[i].empty()) {
				merged.push_back(union_within(G, by_member[i], d));
				owner.push_back(i);
			}
		auto pieces = disjointify(G, merged, d);
		for (size_t k = 0; k < pieces.size(); ++k)
			if (!pieces[k].empty())
				parts[owner[k]].push_back({t.coeff, std::move(pieces[k])});
	}
	std::vector<Element> out;
	for (auto& p : parts)
		out.push_back(Element(f.model(), std::move(p)).compacted());
	return out;
}

Decomposition repair_parts(const Element& f, std::span<const Bisection> cover,
                           std::vector<Element> parts, const Rational& epsilon)
{
	const Groupoid& G = f.groupoid();
	if (sgn(epsilon) <= 0)
		throw PreconditionError("epsilon must be positive");
	if (parts.size() != cover.size())
		throw PreconditionError("one part per cover member is required");
	Element total(f.model());
	for (size_t i = 0; i < parts.size(); ++i) {
		require_same_model(f, parts[i]);
		parts[i] = rewrite_within(parts[i], cover[i]);
		total = total + parts[i];
	}
	if (!equals(total, f))
		throw PreconditionError("the parts do not sum to the element");

	const Modulus bound = sup_norm(f);
	auto family = f.family();
	family.insert(family.end(), cover.begin(), cover.end());
	for (auto const& p : parts)
		for (auto const& b : p.family())
			family.push_back(b);
	const Classes cls = classes_of(G, family);

	std::vector<std::vector<Term>> terms;
	for (auto const& p : parts)
		terms.push_back(p.terms());

	auto sup_of = [&](size_t i) {
		Modulus m;
		for (auto const& p : cls.points)
			m = std::max(m, Modulus::of(sum_at(G, terms[i], p)));
		return m;
	};
	auto violations = [&] {
		size_t n = 0;
		for (size_t i = 0; i < terms.size(); ++i)
			n += compare_with_slack(sup_of(i), bound, epsilon) > 0;
		return n;
	};

	Decomposition out;
	out.epsilon = epsilon;
	for (size_t before = violations(); before > 0;) {
		size_t i = 0;
		while (compare_with_slack(sup_of(i), bound, epsilon) <= 0)
			++i;
		const Bisection& bi = cover[i];
		std::vector<Bisection> patches;
		std::vector<std::vector<size_t>> patch_members;
		std::vector<std::vector<Complex>> patch_values;
		for (auto const& p : cls.points) {
			if (!contains(G, bi, p))
				continue;
			if (compare_with_slack(Modulus::of(sum_at(G, terms[i], p)), bound, epsilon) < 0)
				continue;
			auto [q, patch] = neighbourhood(G, p, cls.depth, bi);
			if (q != p)
				continue; // the base-level patch of B_i covers this class
			std::vector<size_t> s;
			std::vector<Complex> values;
			Complex reached = sum_at(G, terms[i], p);
			for (size_t j = 0; j < cover.size(); ++j)
				if (j != i && contains(G, cover[j], p)) {
					check(subset_of(G, patch, cover[j]), "patch leaves a cover member");
					s.push_back(j);
					values.push_back(sum_at(G, terms[j], p));
					reached += values.back();
				}
			check(reached == evaluate(f, p), "parts do not add up to the element at a class point");
			check(!s.empty(), "oversized value with no other member to absorb it");
			for (auto const& r : cls.points)
				if (contains(G, patch, r)) {
					check(sum_at(G, terms[i], r) == sum_at(G, terms[i], p), "part not constant on patch");
					for (size_t k = 0; k < s.size(); ++k)
						check(sum_at(G, terms[s[k]], r) == values[k], "part not constant on patch");
				}
			patches.push_back(std::move(patch));
			patch_members.push_back(std::move(s));
			patch_values.push_back(std::move(values));
		}
		auto pieces = disjointify(G, patches, bi);
		for (size_t p = 0; p < pieces.size(); ++p) {
			if (pieces[p].empty())
				continue;
			for (size_t k = 0; k < patch_members[p].size(); ++k) {
				const Complex& v = patch_values[p][k];
				if (v.is_zero())
					continue;
				terms[i].push_back({v, pieces[p]});
				terms[patch_members[p][k]].push_back({-v, pieces[p]});
			}
		}
		++out.repair_rounds;
		size_t after = violations();
		check(after < before, "repair round did not reduce the number of violating parts");
		before = after;
	}

	for (size_t i = 0; i < cover.size(); ++i)
		out.parts.push_back({Element(f.model(), std::move(terms[i])).compacted(), cover[i]});
	return out;
}

Decomposition bounded_summands(const Element& f, std::span<const Bisection> cover, const Rational& epsilon)
{
	if (sgn(epsilon) <= 0)
		throw PreconditionError("epsilon must be positive");
	if (!is_supported_in(f, cover))
		throw PreconditionError("the cover does not contain the support of the element");
	return repair_parts(f, cover, initial_parts(f, cover), epsilon);
}

Real trivial_bound(const Element& f)
{
	Real m;
	for (auto const& t : f.terms())
		m += Real::from(Modulus::of(t.coeff));
	return m;
}

} // namespace steinberg
