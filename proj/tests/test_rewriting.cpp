#include "support.hpp"

#include "steinberg/errors.hpp"
#include "steinberg/random.hpp"
#include "steinberg/rewriting.hpp"

#include <doctest.h>

using namespace test;

namespace {

bool terms_within(const Element& f, const std::vector<Bisection>& region)
{
	for (auto const& t : f.terms())
		if (!subset_of_union(f.groupoid(), t.bisection, region))
			return false;
	return true;
}

void check_parts(const Element& f, const Decomposition& d, const std::vector<Bisection>& cover)
{
	REQUIRE(d.parts.size() == cover.size());
	Element total(f.model());
	for (size_t i = 0; i < d.parts.size(); ++i) {
		CHECK(d.parts[i].assigned == cover[i]);
		CHECK(is_supported_in(d.parts[i].element, cover[i]));
		CHECK(le_with_slack(sup_norm(d.parts[i].element), sup_norm(f), d.epsilon));
		total = total + d.parts[i].element;
	}
	CHECK(equals(total, f));
}

} // namespace

TEST_CASE("rewrite_within on the two-headed snake")
{
	auto s = snake(2);
	Bisection G0 = sb(s, {""}), B = sb(s, {""}, 1), U = sb(s, {"0"}), U1 = sb(s, {"0"}, 1);
	Element f = ind(s, G0) - ind(s, B);
	std::vector<Bisection> C{U, U1};
	Element out = rewrite_within(f, C);
	CHECK(equals(out, f));
	CHECK(equals(out, ind(s, U) - ind(s, U1)));
	CHECK(terms_within(out, C));
	for (auto const& t : out.terms())
		CHECK((subset_of(*s, t.bisection, U) || subset_of(*s, t.bisection, U1)));

	CHECK_THROWS_AS(rewrite_within(f, std::vector<Bisection>{U}), PreconditionError);
}

TEST_CASE("rewrite_within base cases")
{
	auto s = snake(3);
	Bisection U = sb(s, {"01"}), W = sb(s, {"0"}, 2);
	Element f = ind(s, U, 2) + ind(s, W, cx(0, 1));
	std::vector<Bisection> C{sb(s, {"0"}, 2), sb(s, {"1"})};
	Element out = rewrite_within(f, C);
	CHECK(equals(out, f));
	CHECK(terms_within(out, C));
	CHECK(terms_within(rewrite_within(Element(s), C), C));
	CHECK(rewrite_within(Element(s), C).terms().empty());

	auto p = pair({"u", "v"});
	Element g = ind(p, fb(p, {"e_uv", "e_vu"})) + ind(p, fb(p, {"e_uu", "e_vv"}), 2) - ind(p, fb(p, {"e_uu"}), 2) -
	            ind(p, fb(p, {"e_vv"}), 2);
	std::vector<Bisection> D{fb(p, {"e_uv", "e_vu"})};
	Element h = rewrite_within(g, D);
	CHECK(equals(h, g));
	CHECK(terms_within(h, D));
}

TEST_CASE("rewrite_within on random confined elements")
{
	auto rng = random::stream(5, "rewrite");
	for (int k = 0; k < 150; ++k) {
		GroupoidPtr g = k % 3 == 0 ? random::finite_groupoid(rng)
		                           : (k % 3 == 1 ? random::cyclic_snake(rng) : random::integer_snake());
		auto c = random::confined(g, rng);
		Element out = rewrite_within(c.f, c.region);
		CHECK(equals(out, c.f));
		CHECK(terms_within(out, c.region));
	}
}

TEST_CASE("restriction")
{
	auto p = model("kind: finite\nunit a b c\n");
	Bisection abc = fb(p, {"a", "b", "c"}), b = fb(p, {"b"});
	Element f = ind(p, fb(p, {"a", "b"})) + ind(p, fb(p, {"b", "c"}), 2);
	Element r = restrict_to(f, b, abc);
	CHECK(evaluate(r, pt(p, "b")) == 3);
	CHECK(evaluate(r, pt(p, "a")) == 0);
	CHECK(evaluate(r, pt(p, "c")) == 0);
	CHECK(equals(restrict_to(ind(p, abc), b, abc), ind(p, b)));
	CHECK(equals(restrict_to(f, abc, abc), f));
	CHECK_THROWS_AS(restrict_to(f, b, fb(p, {"a"})), PreconditionError);
	CHECK_THROWS_AS(restrict_to(f, fb(p, {"a", "b"}), fb(p, {"b", "c"})), PreconditionError);

	auto s = snake(2);
	Bisection B = sb(s, {""}, 1), U1 = sb(s, {"0"}, 1), N = sb(s, {"00"}, 1);
	Element g = ind(s, B, 2) + ind(s, U1) - ind(s, U1);
	CHECK(equals(restrict_to(g, N, B), ind(s, N, 2)));
	CHECK_THROWS_AS(restrict_to(g, N, U1), PreconditionError); // g is 2 on cyl(1)
}

TEST_CASE("unit support windows")
{
	auto s = snake(2);
	Bisection V = sb(s, {"01"}), U = sb(s, {"1"}), W = sb(s, {"001"});
	Bisection w = unit_support_window(ind(s, V, 2));
	CHECK(subset_of(*s, V, w));
	CHECK(is_unit_region(*s, w));

	Element c = ind(s, U) - ind(s, U) + ind(s, W);
	Bisection cw = unit_support_window(c);
	CHECK(subset_of(*s, U, cw));
	CHECK(subset_of(*s, W, cw));

	Element f = ind(s, sb(s, {""})) - ind(s, sb(s, {""}, 1));
	CHECK_THROWS_AS(unit_support_window(f), PreconditionError);

	// cancelling non-unit terms: the window is s(K) for the union K of all terms
	Element h = ind(s, sb(s, {"0"}, 1)) - ind(s, sb(s, {"0"}, 1)) + ind(s, U);
	Bisection hw = unit_support_window(h);
	CHECK(is_unit_region(*s, hw));
	CHECK(subset_of(*s, sb(s, {"0"}), hw));
}

TEST_CASE("bounded summands: cancelling presentation of zero")
{
	auto g = model("kind: group\nelements: e g\nrow e: e g\nrow g: g e\n");
	Bisection e = fb(g, {"e"});
	std::vector<Bisection> cover{e, e};
	Element f = ind(g, e, 5) - ind(g, e, 5);
	const Rational eps(1, 10);
	check_parts(f, bounded_summands(f, cover, eps), cover);

	// The repair loop proper: initial parts 5*1_e and -5*1_e both violate the bound.
	Decomposition d = repair_parts(f, cover, {ind(g, e, 5), ind(g, e, -5)}, eps);
	check_parts(f, d, cover);
	CHECK(d.repair_rounds > 0);
	for (auto const& part : d.parts)
		CHECK(sup_norm(part.element) == Modulus());
}

TEST_CASE("bounded summands: simple covers")
{
	auto s = snake(2);
	Bisection B1 = sb(s, {"0"}, 1), B2 = sb(s, {"1"});
	std::vector<Bisection> cover{B1, B2};
	Element f = ind(s, sb(s, {"00"}, 1), 3);
	Decomposition d = bounded_summands(f, cover, Rational(1, 100));
	check_parts(f, d, cover);
	CHECK(equals(d.parts[0].element, f));
	CHECK(equals(d.parts[1].element, Element(s)));

	Element g = ind(s, B1) + ind(s, B2);
	Decomposition e = bounded_summands(g, cover, Rational(1, 100));
	check_parts(g, e, cover);
	CHECK(equals(e.parts[0].element, ind(s, B1)));
	CHECK(equals(e.parts[1].element, ind(s, B2)));
	CHECK(e.repair_rounds == 0);

	CHECK_THROWS_AS(bounded_summands(g, cover, 0), PreconditionError);
	CHECK_THROWS_AS(bounded_summands(g, std::vector<Bisection>{B1}, 1), PreconditionError);
}

TEST_CASE("bounded summands on random inputs")
{
	auto rng = random::stream(9, "summands");
	const Rational eps[] = {1, Rational(1, 10), Rational(1, 100)};
	size_t repaired = 0;
	for (int k = 0; k < 150; ++k) {
		GroupoidPtr g = k % 2 ? random::cyclic_snake(rng) : random::finite_groupoid(rng);
		auto c = random::confined(g, rng);
		check_parts(c.f, bounded_summands(c.f, c.region, eps[k % 3]), c.region);

		// overlapping members receive opposite shifts, forcing repairs
		auto parts = initial_parts(c.f, c.region);
		for (size_t i = 0; i + 1 < parts.size(); ++i) {
			try {
				Bisection n = intersection(*g, c.region[i], c.region[i + 1]);
				if (n.empty())
					continue;
				parts[i] = parts[i] + ind(g, n, 7);
				parts[i + 1] = parts[i + 1] - ind(g, n, 7);
			} catch (const NotRepresentable&) {
			}
		}
		Decomposition d = repair_parts(c.f, c.region, parts, eps[k % 3]);
		check_parts(c.f, d, c.region);
		repaired += d.repair_rounds > 0;
	}
	CHECK(repaired > 10);
}

TEST_CASE("repair_parts rejects parts that do not add up")
{
	auto p = pair({"u", "v"});
	Bisection a = fb(p, {"e_uv"});
	std::vector<Bisection> cover{a};
	CHECK_THROWS_AS(repair_parts(ind(p, a), cover, {ind(p, a, 2)}, 1), PreconditionError);
}

TEST_CASE("trivial bound")
{
	auto s = snake(2);
	Bisection G0 = sb(s, {""}), B = sb(s, {""}, 1), U = sb(s, {"0"});
	CHECK(trivial_bound(ind(s, B) - ind(s, G0)).exact == Rational(2));
	CHECK(trivial_bound(Element(s)).exact == Rational(0));
	CHECK(trivial_bound(ind(s, B, cx(1, 1))).approx == doctest::Approx(std::sqrt(2.0)));

	Element f = ind(s, G0) - ind(s, G0) + ind(s, U);
	Element out = rewrite_within(f, U);
	CHECK(equals(out, f));
	CHECK(trivial_bound(f).exact == Rational(3));
	CHECK(*trivial_bound(out).exact < 3);
}
