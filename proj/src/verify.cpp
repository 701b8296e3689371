#include "steinberg/verify.hpp"

#include "steinberg/element_io.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/groupoid_io.hpp"
#include "steinberg/oracle.hpp"
#include "steinberg/random.hpp"
#include "steinberg/representation.hpp"
#include "steinberg/rewriting.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace steinberg {

namespace {

using random::Rng;

struct CaseFailure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what)
{
	if (!ok)
		throw CaseFailure(what);
}

struct Property {
	const char* name;
	size_t multiplier; // cases per trial
	std::function<void(Rng&, size_t)> run;
};

// Rotates through finite models, Z/n snakes and (where allowed) the Z snake.
GroupoidPtr model_for(Rng& rng, size_t trial, bool allow_integer = true)
{
	switch (trial % 3) {
	case 1:
		return random::cyclic_snake(rng);
	case 2:
		if (allow_integer)
			return random::integer_snake();
		[[fallthrough]];
	default:
		return random::finite_groupoid(rng);
	}
}

bool same_set(const Groupoid& g, const Bisection& a, const Bisection& b)
{
	std::vector<Bisection> family{a, b};
	for (auto const& p : enumerate_test_points(g, family))
		if (contains(g, a, p) != contains(g, b, p))
			return false;
	return true;
}

bool le_real(const Real& a, const Real& b)
{
	if (a.exact && b.exact)
		return *a.exact <= *b.exact;
	return a.approx <= b.approx + 1e-9 * std::max(1.0, b.approx);
}

bool eq_real(const Real& a, const Real& b) { return le_real(a, b) && le_real(b, a); }

// |m| <= r, exactly when r is exact.
bool modulus_le_real(const Modulus& m, const Real& r)
{
	if (r.exact)
		return sgn(*r.exact) >= 0 && m.squared() <= *r.exact * *r.exact;
	return m.to_double() <= r.approx + 1e-9 * std::max(1.0, r.approx);
}

// The same function with every term cut in two.
Element split_terms(const Element& f, Rng& rng)
{
	const Groupoid& g = f.groupoid();
	std::vector<Term> terms;
	for (auto const& t : f.terms()) {
		Bisection part = random::sub_bisection(g, t.bisection, rng);
		terms.push_back({t.coeff, part});
		terms.push_back({t.coeff, difference(g, t.bisection, part)});
	}
	return Element(f.model(), std::move(terms));
}

Element with_cancelling_pair(const Element& f, Rng& rng)
{
	std::vector<Term> terms = f.terms();
	Bisection e = random::bisection(f.groupoid(), rng);
	Complex a = random::coefficient(rng);
	terms.push_back({a, e});
	terms.push_back({-a, e});
	return Element(f.model(), std::move(terms));
}

// ---------------------------------------------------------------------------
// axioms

std::vector<Property> axioms_properties()
{
	return {
	    {"random-groupoid-axioms", 1,
	     [](Rng& rng, size_t) {
		     auto g = random::finite_groupoid(rng);
		     auto v = check_axioms(g->finite());
		     expect(v.empty(), v.empty() ? "" : v.front().property + ": " + v.front().message);
	     }},
	    {"inverse-semigroup-laws", 1,
	     [](Rng& rng, size_t trial) {
		     auto gp = model_for(rng, trial);
		     const Groupoid& g = *gp;
		     Bisection b = random::bisection(g, rng), d = random::bisection(g, rng), e = random::bisection(g, rng);
		     expect(same_set(g, product(g, product(g, b, d), e), product(g, b, product(g, d, e))),
		            "(BD)E != B(DE)");
		     expect(same_set(g, inverse(g, product(g, b, d)), product(g, inverse(g, d), inverse(g, b))),
		            "(BD)^-1 != D^-1 B^-1");
		     expect(same_set(g, product(g, product(g, b, inverse(g, b)), b), b), "B B^-1 B != B");
		     expect(same_set(g, inverse(g, inverse(g, b)), b), "(B^-1)^-1 != B");
	     }},
	    {"bisection-fiber-singleton", 1,
	     [](Rng& rng, size_t trial) {
		     auto gp = model_for(rng, trial);
		     const Groupoid& g = *gp;
		     Bisection b = random::bisection(g, rng);
		     std::vector<Bisection> family{b};
		     auto points = enumerate_test_points(g, family);
		     for (auto const& x : points) {
			     if (!is_unit(g, x))
				     continue;
			     size_t n = 0;
			     for (auto const& p : points)
				     n += contains(g, b, p) && source(g, p) == x;
			     expect(n <= 1, fmt::format("{} meets the fiber over {} twice", format_bisection(g, b),
			                                format_point(g, x)));
		     }
	     }},
	    {"disjointify", 1,
	     [](Rng& rng, size_t trial) {
		     auto gp = model_for(rng, trial);
		     const Groupoid& g = *gp;
		     Bisection w = random::bisection(g, rng);
		     std::vector<Bisection> cover;
		     for (size_t k = 0, n = 1 + random::below(rng, 4); k < n; ++k)
			     cover.push_back(random::sub_bisection(g, w, rng));
		     auto out = disjointify(g, cover, w);
		     expect(out.size() == cover.size() && out.front() == cover.front(), "first member changed");
		     std::vector<Bisection> family = cover;
		     family.insert(family.end(), out.begin(), out.end());
		     for (auto const& p : enumerate_test_points(g, family)) {
			     size_t hits = std::count_if(out.begin(), out.end(), [&](auto const& b) { return contains(g, b, p); });
			     bool before = std::any_of(cover.begin(), cover.end(), [&](auto const& b) { return contains(g, b, p); });
			     expect(hits <= 1, "output members overlap");
			     expect((hits == 1) == before, "union changed");
		     }
	     }},
	    {"clopen-canonical", 1,
	     [](Rng& rng, size_t) {
		     auto words = [&] {
			     std::vector<std::string> w;
			     for (size_t k = 0, n = random::below(rng, 6); k < n; ++k) {
				     std::string s;
				     for (size_t j = 0, len = random::below(rng, 5); j < len; ++j)
					     s += random::coin(rng) ? '1' : '0';
				     w.push_back(s);
			     }
			     return w;
		     };
		     ClopenSet a(words()), b(words());
		     expect(ClopenSet(a.words()) == a, "canonical form not idempotent");
		     auto const& w = a.words();
		     expect(std::is_sorted(w.begin(), w.end()), "words not sorted");
		     for (size_t i = 0; i < w.size(); ++i)
			     for (size_t j = 0; j < w.size(); ++j)
				     if (i != j) {
					     expect(w[j].compare(0, w[i].size(), w[i]) != 0, "a word is a prefix of another");
					     if (w[i].size() == w[j].size() && !w[i].empty())
						     expect(w[i].substr(0, w[i].size() - 1) != w[j].substr(0, w[j].size() - 1),
						            "unmerged sibling pair");
				     }
		     size_t d = std::max(a.depth(), b.depth());
		     bool same_points = true;
		     for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
			     std::string p(d, '0');
			     for (size_t k = 0; k < d; ++k)
				     if (bits >> (d - 1 - k) & 1)
					     p[k] = '1';
			     same_points &= a.contains_eventually_zero(p) == b.contains_eventually_zero(p);
		     }
		     expect(same_points == (a == b), "canonical equality differs from point equality");
		     expect(((a | b) - b) == (a - b) && (a & b) == (b & a), "Boolean identities fail");
	     }},
	};
}

const char* const kAxiomProperties[] = {"endpoints", "composition-domain", "composition-endpoints",
                                        "unit-laws", "inverse", "associativity"};

std::vector<PropertyResult> fixture_results(const std::vector<std::filesystem::path>& fixtures)
{
	std::vector<PropertyResult> out;
	PropertyResult parse{"axioms", "fixture-parse", 0, 0, {}};
	std::vector<PropertyResult> axioms;
	for (auto const* name : kAxiomProperties)
		axioms.push_back({"axioms", std::string("fixture-") + name, 0, 0, {}});
	for (auto const& path : fixtures) {
		++parse.cases;
		std::vector<AxiomViolation> violations;
		try {
			violations = axiom_report(parse_groupoid(read_text_file(path)));
		} catch (const AxiomError& e) {
			violations.push_back({e.property(), e.what()});
		} catch (const std::exception& e) {
			if (!parse.failures++)
				parse.first_failure = fmt::format("{}: {}", path.string(), e.what());
			continue;
		}
		for (auto& r : axioms) {
			++r.cases;
			auto hit = std::find_if(violations.begin(), violations.end(),
			                        [&](auto const& v) { return "fixture-" + v.property == r.property; });
			if (hit != violations.end() && !r.failures++)
				r.first_failure = fmt::format("{}: {}", path.string(), hit->message);
		}
	}
	out.push_back(std::move(parse));
	for (auto& r : axioms)
		out.push_back(std::move(r));
	return out;
}

// ---------------------------------------------------------------------------
// convolution

std::vector<Property> convolution_properties()
{
	return {
	    {"oracle-convolution", 5,
	     [](Rng& rng, size_t) {
		     auto g = random::finite_groupoid(rng);
		     Element f = random::element(g, rng), h = random::element(g, rng);
		     Element fh = convolve(f, h);
		     auto brute = oracle::brute_convolve(f, h);
		     for (ArrowId a = 0; a < brute.size(); ++a)
			     expect(evaluate(fh, TestPoint::of_arrow(a)) == brute[a],
			            fmt::format("value at {} differs from the brute-force sum", g->finite().name(a)));
	     }},
	    {"oracle-support", 1,
	     [](Rng& rng, size_t) {
		     auto g = random::finite_groupoid(rng);
		     Element f = with_cancelling_pair(random::element(g, rng), rng);
		     std::vector<ArrowId> from_support;
		     for (auto const& c : open_support(f).classes)
			     from_support.push_back(c.representative.arrow);
		     std::sort(from_support.begin(), from_support.end());
		     expect(from_support == oracle::brute_support(f), "open_support differs from the scan");
	     }},
	    {"associativity", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element a = random::element(g, rng, 4), b = random::element(g, rng, 4), c = random::element(g, rng, 4);
		     expect(equals(convolve(convolve(a, b), c), convolve(a, convolve(b, c))), "(fg)h != f(gh)");
	     }},
	    {"distributivity", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element a = random::element(g, rng, 4), b = random::element(g, rng, 4), c = random::element(g, rng, 4);
		     expect(equals(convolve(a, b + c), convolve(a, b) + convolve(a, c)), "f(g+h) != fg+fh");
		     expect(equals(convolve(a + b, c), convolve(a, c) + convolve(b, c)), "(f+g)h != fh+gh");
	     }},
	    {"involution-antimultiplicative", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element a = random::element(g, rng), b = random::element(g, rng);
		     expect(equals(involute(convolve(a, b)), convolve(involute(b), involute(a))), "(fg)* != g*f*");
		     expect(equals(involute(involute(a)), a), "f** != f");
	     }},
	    {"involution-conjugate-linear", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element a = random::element(g, rng), b = random::element(g, rng);
		     Complex c = random::coefficient(rng);
		     expect(equals(involute(c * a + b), c.conj() * involute(a) + involute(b)), "(cf+g)* != conj(c)f*+g*");
	     }},
	    {"norm-involution-invariance", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element f = random::element(g, rng);
		     expect(sup_norm(involute(f)) == sup_norm(f), "sup norm changes under involution");
		     expect(eq_real(i_norm(involute(f)), i_norm(f)), "I-norm changes under involution");
	     }},
	    {"i-norm-submultiplicative", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element a = random::element(g, rng), b = random::element(g, rng);
		     expect(le_real(i_norm(convolve(a, b)), i_norm(a) * i_norm(b)), "I(fg) > I(f) I(g)");
	     }},
	    {"bisection-support-star", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Bisection b = random::bisection(*g, rng);
		     Element f = random::element_inside(g, b, rng);
		     expect(is_supported_in(f, b) && is_supported_in_some_bisection(f), "support not in the bisection");
		     expect(is_supported_in_units(convolve(involute(f), f)), "supp(f*f) leaves the unit space");
	     }},
	    {"spectral-identity", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element f = with_cancelling_pair(random::unit_element(g, rng), rng);
		     if (!is_supported_in_units(f))
			     f = random::unit_element(g, rng);
		     Bisection u = unit_support_window(f);
		     Element ff = convolve(involute(f), f);
		     Rational s2 = sup_norm(f).squared();
		     expect(spectral_radius(ff, u).squared() == Rational(s2 * s2), "r(f*f) != ||f||^2");
		     auto values = unit_spectrum(f, u).values;
		     for (auto const& p : enumerate_test_points(*g, f.family()))
			     if (is_unit(*g, p) && contains(*g, u, p))
				     expect(std::binary_search(values.begin(), values.end(), evaluate(f, p)),
				            "spectrum misses a value of f");
	     }},
	    {"print-roundtrip", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element f = random::element(g, rng);
		     std::string text = format_document("model.grpd", {{"f", f}});
		     auto doc = parse_elements(text, g);
		     expect(equals(doc.element("f"), f), "printed element does not re-parse to itself");
	     }},
	};
}

// ---------------------------------------------------------------------------
// representation

TestPoint random_unit(const Element& f, Rng& rng)
{
	auto units = representative_units(f);
	return units[random::below(rng, units.size())];
}

std::vector<Property> representation_properties()
{
	return {
	    {"star-homomorphism", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial, false);
		     Element a = random::element(g, rng), b = random::element(g, rng);
		     TestPoint x = random_unit(a + b, rng);
		     expect(regular_rep(convolve(a, b), x) == regular_rep(a, x) * regular_rep(b, x),
		            fmt::format("pi(fg) != pi(f) pi(g) at {}", format_point(*g, x)));
		     expect(regular_rep(involute(a), x) == regular_rep(a, x).adjoint(),
		            fmt::format("pi(f*) != pi(f)* at {}", format_point(*g, x)));
	     }},
	    {"i-norm-domination", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial, false);
		     Element f = random::element(g, rng);
		     double bound = i_norm(f).approx + 1e-8;
		     for (auto const& x : representative_units(f))
			     expect(fiber_norm(f, x).value <= bound,
			            fmt::format("||pi_x(f)|| > ||f||_I at {}", format_point(*g, x)));
	     }},
	    {"c-star-identity", 1,
	     [](Rng& rng, size_t) {
		     auto g = random::finite_groupoid(rng);
		     Element f = random::element(g, rng);
		     double r = reduced_norm(f).value;
		     double rr = reduced_norm(convolve(involute(f), f)).value;
		     expect(std::abs(rr - r * r) <= 1e-6, fmt::format("||f*f|| = {} but ||f||^2 = {}", rr, r * r));
	     }},
	    {"unit-support-norm", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial, false);
		     Element f = random::unit_element(g, rng);
		     double r = reduced_norm(f).value, s = sup_norm(f).to_double();
		     expect(std::abs(r - s) <= 1e-8, fmt::format("reduced {} != sup {}", r, s));
	     }},
	    {"bisection-support-norm", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial, false);
		     Element f = random::element_inside(g, random::bisection(*g, rng), rng);
		     double r = reduced_norm(f).value, s = sup_norm(f).to_double();
		     expect(r <= s + 1e-8, fmt::format("reduced {} > sup {}", r, s));
	     }},
	    {"faithfulness", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial, false);
		     Element f = random::element(g, rng, 3);
		     if (random::coin(rng)) {
			     Element h = split_terms(f, rng);
			     f = random::coin(rng) ? f - h : f - h + random::element(g, rng, 1);
		     }
		     bool zero = equals(f, Element(g));
		     double r = reduced_norm(f).value;
		     expect(zero == (r <= 1e-9), fmt::format("reduced norm {} but element {} zero", r, zero ? "is" : "is not"));
	     }},
	    {"matrix-norm-2x2", 1,
	     [](Rng& rng, size_t) {
		     auto small = [&] { return (static_cast<double>(random::below(rng, 41)) - 20) / 4; };
		     double a = small(), d = small();
		     std::complex<double> b(small(), small());
		     double mean = (a + d) / 2, rad = std::sqrt((a - d) * (a - d) / 4 + std::norm(b));
		     double expected = std::max(std::abs(mean + rad), std::abs(mean - rad));
		     oracle::DenseMatrix m(2);
		     m(0, 0) = a;
		     m(1, 1) = d;
		     m(0, 1) = b;
		     m(1, 0) = std::conj(b);
		     double got = oracle::matrix_norm(m);
		     expect(std::abs(got - expected) <= 1e-8, fmt::format("matrix_norm {} != {}", got, expected));
	     }},
	    {"symbol-norm-bounds", 1,
	     [](Rng& rng, size_t) {
		     auto g = random::integer_snake();
		     Element f = random::element(g, rng);
		     NormValue s = symbol_norm(f);
		     double l1 = 0, l2 = 0;
		     std::vector<TestPoint> base{TestPoint::base()};
		     for (auto k : heads_used(f.family()))
			     base.push_back(TestPoint::of_head(g->snake(), k));
		     for (auto const& p : base) {
			     double v = Modulus::of(evaluate(f, p)).to_double();
			     l1 += v;
			     l2 += v * v;
		     }
		     expect(std::sqrt(l2) <= s.value + s.tolerance + 1e-9, "symbol norm below the l2 norm of the symbol");
		     expect(s.value <= l1 + 1e-9, "symbol norm above the l1 norm of the coefficients");
	     }},
	    {"norm-sandwich-chain", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element f = random::element(g, rng);
		     NormReport r = norm_sandwich(f);
		     double tol = r.reduced.tolerance + 1e-9;
		     expect(r.reduced.value <= r.inorm.approx + tol, "reduced > I-norm");
		     expect(r.reduced.value <= r.mf.approx + tol, "reduced > M_f");
		     if (r.bisection_bound)
			     expect(r.reduced.value <= r.sup.to_double() + tol, "reduced > sup with bisection support");
		     expect(r.full_lower <= r.full_upper + tol, "empty full-norm bracket");
	     }},
	};
}

// ---------------------------------------------------------------------------
// lemmas

void check_decomposition(const Element& f, const Decomposition& d)
{
	Element total(f.model());
	const Modulus bound = sup_norm(f);
	for (auto const& p : d.parts) {
		total = total + p.element;
		expect(is_supported_in(p.element, p.assigned), "a part leaves its cover member");
		expect(compare_with_slack(sup_norm(p.element), bound, d.epsilon) <= 0,
		       fmt::format("a part has sup norm {} > {} + {}", format_modulus(sup_norm(p.element)),
		                   format_modulus(bound), format_rational(d.epsilon)));
	}
	expect(equals(total, f), "parts do not sum to the element");
}

Rational epsilon_for(size_t trial)
{
	static const Rational eps[] = {Rational(1), Rational(1, 10), Rational(1, 100)};
	return eps[trial % 3];
}

std::vector<Property> lemmas_properties()
{
	return {
	    {"rewrite-within", 1,
	     [](Rng& rng, size_t trial) {
		     if (trial == 0) {
			     auto g = std::make_shared<const Groupoid>(SnakeGroupoid(2));
			     const SnakeGroupoid& s = g->snake();
			     Bisection g0 = Bisection::of_snake(s, ClopenSet::full(), 0);
			     Bisection b = Bisection::of_snake(s, ClopenSet::full(), 1);
			     Bisection u = Bisection::of_snake(s, ClopenSet::cylinder("0"), 0);
			     Bisection u1 = Bisection::of_snake(s, ClopenSet::cylinder("0"), 1);
			     Element f(g, {{1, g0}, {-1, b}});
			     std::vector<Bisection> c{u, u1};
			     Element out = rewrite_within(f, c);
			     Element expected(g, {{1, u}, {-1, u1}});
			     expect(equals(out, f) && equals(out, expected), "snake example not rewritten to 1_U - 1_U1");
			     for (auto const& t : out.terms())
				     expect(subset_of(*g, t.bisection, u) || subset_of(*g, t.bisection, u1),
				            "snake example term escapes C");
			     return;
		     }
		     auto g = model_for(rng, trial);
		     auto c = random::confined(g, rng);
		     Element out = rewrite_within(c.f, c.region);
		     expect(equals(out, c.f), "rewritten element differs");
		     for (auto const& t : out.terms())
			     expect(subset_of_union(*g, t.bisection, c.region), "a term escapes the region");
	     }},
	    {"restrict", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Bisection d = random::bisection(*g, rng);
		     Element f = with_cancelling_pair(random::element_inside(g, d, rng), rng);
		     Bisection b = random::sub_bisection(*g, d, rng);
		     Element r = restrict_to(f, b, d);
		     auto family = f.family();
		     family.push_back(b);
		     for (auto const& t : r.terms())
			     family.push_back(t.bisection);
		     for (auto const& p : enumerate_test_points(*g, family))
			     expect(evaluate(r, p) == (contains(*g, b, p) ? evaluate(f, p) : Complex()),
			            fmt::format("restriction wrong at {}", format_point(*g, p)));
		     Element rest = restrict_to(f, difference(*g, d, b), d);
		     expect(equals(r + rest, f), "restriction and its complement do not rebuild f");
	     }},
	    {"unit-support-window", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     Element f = with_cancelling_pair(random::unit_element(g, rng), rng);
		     if (!is_supported_in_units(f)) {
			     bool threw = false;
			     try {
				     unit_support_window(f);
			     } catch (const PreconditionError&) {
				     threw = true;
			     }
			     expect(threw, "window accepted an element supported off the unit space");
			     return;
		     }
		     Bisection u = unit_support_window(f);
		     validate(*g, u);
		     expect(is_unit_region(*g, u), "window is not a unit region");
		     expect(is_supported_in(f, u), "window misses the support");
	     }},
	    {"bounded-summands", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     auto c = random::confined(g, rng);
		     check_decomposition(c.f, bounded_summands(c.f, c.region, epsilon_for(trial)));
	     }},
	    {"repair-loop", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     auto c = random::confined(g, rng);
		     auto parts = initial_parts(c.f, c.region);
		     // Shift mass between overlapping members so that the bound fails.
		     for (size_t i = 0; i < parts.size(); ++i)
			     for (size_t j = 0; j < parts.size(); ++j) {
				     if (i == j || !random::coin(rng))
					     continue;
				     Bisection n;
				     try {
					     n = intersection(*g, c.region[i], c.region[j]);
				     } catch (const NotRepresentable&) {
					     continue;
				     }
				     if (n.empty())
					     continue;
				     Complex v = Complex(3) * random::coefficient(rng);
				     parts[i] = parts[i] + Element::indicator(g, n, v);
				     parts[j] = parts[j] - Element::indicator(g, n, v);
			     }
		     check_decomposition(c.f, repair_parts(c.f, c.region, parts, epsilon_for(trial)));
	     }},
	    {"trivial-bound", 1,
	     [](Rng& rng, size_t trial) {
		     auto g = model_for(rng, trial);
		     auto c = random::confined(g, rng);
		     expect(modulus_le_real(sup_norm(c.f), trivial_bound(c.f)), "M_f < sup norm");
		     Element out = rewrite_within(c.f, c.region);
		     expect(modulus_le_real(sup_norm(out), trivial_bound(out)), "M_f < sup norm after rewriting");
		     if (auto s = g->as_snake(); !s || !s->integer_heads())
			     expect(reduced_norm(c.f).value <= trivial_bound(c.f).approx + 1e-10, "M_f < reduced norm");
	     }},
	};
}

std::vector<Property> properties_of(const std::string& suite)
{
	if (suite == "axioms")
		return axioms_properties();
	if (suite == "convolution")
		return convolution_properties();
	if (suite == "representation")
		return representation_properties();
	if (suite == "lemmas")
		return lemmas_properties();
	throw PreconditionError(fmt::format("unknown suite '{}'", suite));
}

} // namespace

const std::vector<std::string>& suite_names()
{
	static const std::vector<std::string> names{"axioms", "convolution", "representation", "lemmas"};
	return names;
}

std::vector<PropertyResult> run_verify(const VerifyConfig& config)
{
	std::vector<std::string> suites;
	for (auto const& s : config.suites) {
		if (s == "all")
			suites.insert(suites.end(), suite_names().begin(), suite_names().end());
		else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end())
			suites.push_back(s);
		else
			throw PreconditionError(fmt::format("unknown suite '{}'", s));
	}
	std::vector<PropertyResult> out;
	std::set<std::string> seen;
	for (auto const& suite : suites) {
		if (!seen.insert(suite).second)
			continue;
		for (auto const& prop : properties_of(suite)) {
			PropertyResult r{suite, prop.name, 0, 0, {}};
			Rng rng = random::stream(config.seed, suite + "/" + prop.name);
			const size_t cases = config.trials * prop.multiplier;
			for (size_t k = 0; k < cases; ++k) {
				++r.cases;
				try {
					prop.run(rng, k);
				} catch (const std::exception& e) {
					if (!r.failures++)
						r.first_failure = fmt::format("case {}: {}", k, e.what());
				}
			}
			out.push_back(std::move(r));
		}
		if (suite == "axioms" && !config.fixtures.empty())
			for (auto& r : fixture_results(config.fixtures))
				out.push_back(std::move(r));
	}
	return out;
}

std::string format_record(const PropertyResult& r)
{
	return fmt::format("suite={} property={} cases={} failures={} status={}", r.suite, r.property, r.cases,
	                   r.failures, r.passed() ? "pass" : "fail");
}

} // namespace steinberg
