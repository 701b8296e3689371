#include "support.hpp"

#include "steinberg/errors.hpp"
#include "steinberg/random.hpp"
#include "steinberg/verify.hpp"

#include <doctest.h>

#include <set>

using namespace test;

namespace {

const std::filesystem::path kData = STEINBERG_DATA;

std::vector<std::string> records(const VerifyConfig& cfg)
{
	std::vector<std::string> out;
	for (auto const& r : run_verify(cfg))
		out.push_back(format_record(r));
	return out;
}

} // namespace

TEST_CASE("generator streams are reproducible and independent of labels")
{
	auto a = random::stream(7, "x"), b = random::stream(7, "x"), c = random::stream(7, "y"),
	     d = random::stream(8, "x");
	auto va = a(), vb = b(), vc = c(), vd = d();
	CHECK(va == vb);
	CHECK(va != vc);
	CHECK(va != vd);
}

TEST_CASE("generated objects respect the size limits")
{
	auto rng = random::stream(1, "limits");
	const std::set<Rational> re{-2, -1, 1, 2}, im{-1, 0, 1};
	for (int k = 0; k < 300; ++k) {
		auto g = random::finite_groupoid(rng);
		CHECK(g->finite().size() <= 12);
		CHECK(check_axioms(g->finite()).empty());
		Element f = random::element(g, rng);
		CHECK(f.terms().size() <= 6);
		for (auto const& t : f.terms()) {
			CHECK(t.bisection.as_finite()->arrows.size() <= 4);
			CHECK(re.count(t.coeff.real()));
			CHECK(im.count(t.coeff.imag()));
		}
		auto s = random::cyclic_snake(rng);
		CHECK(*s->snake().order() >= 2);
		CHECK(*s->snake().order() <= 5);
		Element h = random::element(s, rng);
		for (auto const& t : h.terms())
			CHECK(t.bisection.as_snake()->clopen.depth() <= 4);
		Bisection w = random::bisection(*s, rng);
		CHECK(subset_of(*s, random::sub_bisection(*s, w, rng), w));
		CHECK(is_unit_region(*s, random::unit_region(*s, rng)));
		CHECK(is_supported_in_units(random::unit_element(s, rng)));
		auto c = random::confined(s, rng);
		CHECK(is_supported_in(c.f, c.region));
	}
}

TEST_CASE("zero trials")
{
	VerifyConfig cfg;
	cfg.suites = {"all"};
	cfg.trials = 0;
	auto results = run_verify(cfg);
	CHECK(results.size() > 20);
	for (auto const& r : results) {
		CHECK(r.cases == 0);
		CHECK(r.passed());
	}
}

TEST_CASE("records are deterministic")
{
	VerifyConfig cfg;
	cfg.suites = {"lemmas", "representation"};
	cfg.trials = 20;
	cfg.seed = 4;
	auto first = records(cfg);
	CHECK(first == records(cfg));
	CHECK(first.front().starts_with("suite=lemmas property=rewrite-within cases=20 failures=0 status=pass"));

	// a property's stream does not depend on which other suites run
	VerifyConfig only = cfg;
	only.suites = {"representation"};
	auto second = records(only);
	for (auto const& line : second)
		CHECK(std::find(first.begin(), first.end(), line) != first.end());
}

TEST_CASE("every suite passes")
{
	for (auto const& suite : suite_names()) {
		VerifyConfig cfg;
		cfg.suites = {suite};
		cfg.trials = 60;
		cfg.seed = 12;
		for (auto const& r : run_verify(cfg)) {
			CAPTURE(r.property);
			CAPTURE(r.first_failure);
			CHECK(r.passed());
			CHECK(r.cases >= 60);
		}
	}
}

TEST_CASE("corrupted fixtures fail the named property")
{
	VerifyConfig cfg;
	cfg.suites = {"axioms"};
	cfg.trials = 1;
	cfg.fixtures = {kData / "pair2.grpd", kData / "bad_inverse.grpd", kData / "snake2.grpd"};
	std::vector<std::string> failed;
	for (auto const& r : run_verify(cfg))
		if (!r.passed())
			failed.push_back(r.property);
	CHECK(failed == std::vector<std::string>{"fixture-inverse"});

	cfg.fixtures = {kData / "s3.grpd", kData / "pair2_table.grpd"};
	for (auto const& r : run_verify(cfg))
		CHECK(r.passed());
}

TEST_CASE("unknown suites are rejected")
{
	VerifyConfig cfg;
	cfg.suites = {"everything"};
	CHECK_THROWS_AS(run_verify(cfg), PreconditionError);
}
