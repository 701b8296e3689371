// steinberg: command-line front end for the Steinberg algebra library.

#include "steinberg/element_io.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/groupoid_io.hpp"
#include "steinberg/representation.hpp"
#include "steinberg/rewriting.hpp"
#include "steinberg/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fmt/ranges.h>

#include <functional>

using namespace steinberg;

namespace {

struct Options {
	std::string format = "human";
	std::uint64_t seed = 0;
	double tolerance = kNormTolerance;

	std::string path;
	std::string expr;
	std::string point;
	std::string kind = "sandwich";
	std::string window;
	std::vector<std::string> within;
	std::string to;
	std::string domain;
	std::string epsilon = "0.1";

	std::vector<std::string> suites;
	size_t trials = 100;
	std::vector<std::string> fixtures;
};

bool records(const Options& o) { return o.format == "records"; }

std::vector<Bisection> named(const ElementDocument& doc, const std::vector<std::string>& names)
{
	std::vector<Bisection> out;
	for (auto const& n : names)
		out.push_back(doc.bisection(n));
	return out;
}

std::string name_of(const ElementDocument& doc, const Bisection& b)
{
	for (auto const& [n, d] : doc.bisections)
		if (d == b)
			return n;
	return format_bisection(*doc.model, b);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_validate(const Options& o)
{
	auto g = load_groupoid_file(o.path);
	size_t arrows = g->as_finite() ? g->finite().size() : 0;
	if (records(o))
		fmt::print("status=valid kind=\"{}\" arrows={}\n", g->describe(), g->as_finite() ? std::to_string(arrows) : "inf");
	else if (g->as_finite())
		fmt::print("valid: {} groupoid, {} units\n", g->describe(), g->finite().units().size());
	else
		fmt::print("valid: {}\n", g->describe());
	return 0;
}

int cmd_compute(const Options& o)
{
	auto doc = load_element_file(o.path);
	Element r = evaluate_expression(doc, o.expr).compacted();
	auto family = r.family();
	auto points = enumerate_test_points(*doc.model, family);
	if (records(o)) {
		fmt::print("element=\"{}\"\n", format_terms(r, doc.bisections));
		for (auto const& p : points)
			fmt::print("point={} value={}\n", format_point(*doc.model, p), format_complex(evaluate(r, p)));
		return 0;
	}
	fmt::print("{}", format_document(doc.groupoid_path, {{"result", r}}, doc.bisections));
	if (!points.empty())
		fmt::print("# values on test points\n");
	for (auto const& p : points)
		fmt::print("#   {:<12} {}\n", format_point(*doc.model, p), format_complex(evaluate(r, p)));
	return 0;
}

int cmd_eval(const Options& o)
{
	auto doc = load_element_file(o.path);
	Element r = evaluate_expression(doc, o.expr);
	TestPoint p = parse_point(*doc.model, o.point);
	Complex v = evaluate(r, p);
	if (records(o))
		fmt::print("point={} value={}\n", format_point(*doc.model, p), format_complex(v));
	else
		fmt::print("{}\n", format_complex(v));
	return 0;
}

int cmd_norm(const Options& o)
{
	auto doc = load_element_file(o.path);
	Element f = evaluate_expression(doc, o.expr);
	const bool rec = records(o);
	if (o.kind == "sup") {
		fmt::print("{}{}\n", rec ? "sup=" : "", format_modulus(sup_norm(f)));
	} else if (o.kind == "inorm") {
		fmt::print("{}{}\n", rec ? "inorm=" : "", format_real(i_norm(f)));
	} else if (o.kind == "reduced" || o.kind == "symbol") {
		NormValue v = o.kind == "reduced" ? reduced_norm(f, o.tolerance) : symbol_norm(f);
		if (rec)
			fmt::print("{}={} {}_tol={}\n", o.kind, format_double(v.value), o.kind, format_double(v.tolerance));
		else
			fmt::print("{} (+/- {})\n", format_double(v.value), format_double(v.tolerance));
	} else if (o.kind == "spectrum") {
		Bisection u = o.window.empty() ? unit_support_window(f) : doc.bisection(o.window);
		Spectrum s = unit_spectrum(f, u);
		std::vector<std::string> vals;
		for (auto const& z : s.values)
			vals.push_back(format_complex(z));
		Modulus r = spectral_radius(f, u);
		if (rec)
			fmt::print("spectrum={} spectral_radius={}\n", fmt::join(vals, ","), format_modulus(r));
		else
			fmt::print("spectrum in A({}): {{{}}}\nspectral radius: {}\n", name_of(doc, u), fmt::join(vals, ", "),
			           format_modulus(r));
	} else if (o.kind == "sandwich") {
		NormReport r = norm_sandwich(f, o.tolerance);
		if (rec) {
			fmt::print("sup={} inorm={} reduced={} reduced_tol={} mf={} bisection_bound={} unit_bound={} "
			           "full_lower={} full_upper={} pinned={}\n",
			           format_modulus(r.sup), format_real(r.inorm), format_double(r.reduced.value),
			           format_double(r.reduced.tolerance), format_real(r.mf), yes_no(r.bisection_bound),
			           yes_no(r.unit_bound), format_double(r.full_lower), format_double(r.full_upper),
			           yes_no(r.pinned));
		} else {
			fmt::print("sup norm        {}\n", format_modulus(r.sup));
			fmt::print("I-norm          {}\n", format_real(r.inorm));
			fmt::print("reduced norm    {} (+/- {})\n", format_double(r.reduced.value),
			           format_double(r.reduced.tolerance));
			fmt::print("M_f             {}\n", format_real(r.mf));
			if (r.bisection_bound)
				fmt::print("support lies in one bisection: full norm <= sup norm\n");
			if (r.unit_bound)
				fmt::print("support lies in the unit space\n");
			fmt::print("full norm in    [{}, {}]{}\n", format_double(r.full_lower), format_double(r.full_upper),
			           r.pinned ? " (pinned)" : "");
		}
	} else {
		throw PreconditionError(fmt::format("unknown norm kind '{}'", o.kind));
	}
	return 0;
}

int cmd_rewrite(const Options& o)
{
	auto doc = load_element_file(o.path);
	Element f = evaluate_expression(doc, o.expr);
	Element r = rewrite_within(f, named(doc, o.within));
	fmt::print("{}", format_document(doc.groupoid_path, {{"rewritten", r}}, doc.bisections));
	return 0;
}

int cmd_restrict(const Options& o)
{
	auto doc = load_element_file(o.path);
	Element f = evaluate_expression(doc, o.expr);
	Element r = restrict_to(f, doc.bisection(o.to), doc.bisection(o.domain));
	fmt::print("{}", format_document(doc.groupoid_path, {{"restricted", r}}, doc.bisections));
	return 0;
}

int cmd_decompose(const Options& o)
{
	auto doc = load_element_file(o.path);
	Element f = evaluate_expression(doc, o.expr);
	Rational eps = parse_rational(o.epsilon);
	Decomposition d = bounded_summands(f, named(doc, o.within), eps);
	const Modulus bound = sup_norm(f);
	if (records(o)) {
		for (size_t i = 0; i < d.parts.size(); ++i)
			fmt::print("part={} assigned={} sup={} bound={} epsilon={} rounds={}\n", i + 1, o.within[i],
			           format_modulus(sup_norm(d.parts[i].element)), format_modulus(bound),
			           format_rational(eps), d.repair_rounds);
		return 0;
	}
	std::vector<std::pair<std::string, Element>> elements;
	for (size_t i = 0; i < d.parts.size(); ++i)
		elements.emplace_back(fmt::format("f{}", i + 1), d.parts[i].element);
	fmt::print("# ||f||_inf = {}, epsilon = {}, repair rounds = {}\n", format_modulus(bound),
	           format_rational(eps), d.repair_rounds);
	for (size_t i = 0; i < d.parts.size(); ++i)
		fmt::print("# f{} is supported in {}, ||f{}||_inf = {}\n", i + 1, o.within[i], i + 1,
		           format_modulus(sup_norm(d.parts[i].element)));
	fmt::print("{}", format_document(doc.groupoid_path, elements, doc.bisections));
	return 0;
}

int cmd_verify(const Options& o)
{
	VerifyConfig cfg;
	cfg.suites = o.suites.empty() ? std::vector<std::string>{"all"} : o.suites;
	cfg.trials = o.trials;
	cfg.seed = o.seed;
	for (auto const& f : o.fixtures)
		cfg.fixtures.emplace_back(f);
	auto results = run_verify(cfg);
	bool ok = true;
	for (auto const& r : results) {
		ok &= r.passed();
		if (records(o))
			fmt::print("{}\n", format_record(r));
		else
			fmt::print("{:<6} {}/{}: {} cases, {} failures\n", r.passed() ? "pass" : "FAIL", r.suite, r.property,
			           r.cases, r.failures);
		if (!r.passed())
			fmt::print(stderr, "{}/{}: {}\n", r.suite, r.property, r.first_failure);
	}
	if (!records(o))
		fmt::print("{}\n", ok ? "all properties hold" : "some properties failed");
	return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
	Options o;
	CLI::App app{"Exact computations in Steinberg algebras of ample groupoids"};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "records"}));
	app.add_option("--seed", o.seed, "Seed for randomized suites");
	app.add_option("--tolerance", o.tolerance, "Tolerance for numerical norms")->check(CLI::PositiveNumber);

	std::function<int()> run;
	auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
		auto* s = app.add_subcommand(name, help);
		s->callback([&run, &o, fn] { run = [&o, fn] { return fn(o); }; });
		return s;
	};
	auto elt = [&](CLI::App* s) {
		s->add_option("file", o.path, "Element file (.elt)")->required();
		s->add_option("expr", o.expr, "Element expression")->required();
	};

	sub("validate", "Check a groupoid file", cmd_validate)->add_option("file", o.path)->required();

	auto* compute = sub("compute", "Evaluate an expression and print the element", cmd_compute);
	elt(compute);

	auto* eval = sub("eval", "Value of an expression at a point", cmd_eval);
	elt(eval);
	eval->add_option("point", o.point, "e_uv | unit:<word> | base | head:<k>")->required();

	auto* norm = sub("norm", "Norms of an element", cmd_norm);
	elt(norm);
	norm->add_option("--kind", o.kind)
	    ->check(CLI::IsMember({"sup", "inorm", "reduced", "symbol", "sandwich", "spectrum"}));
	norm->add_option("--window", o.window, "Unit region for --kind spectrum (default: source window of f)");

	auto* rewrite = sub("rewrite", "Confine the terms of an element to a region", cmd_rewrite);
	elt(rewrite);
	rewrite->add_option("--within", o.within, "Bisection names")->required()->delimiter(',');

	auto* restrict = sub("restrict", "Restrict an element to a bisection", cmd_restrict);
	elt(restrict);
	restrict->add_option("--to", o.to, "Bisection B")->required();
	restrict->add_option("--within", o.domain, "Bisection D containing B and the support")->required();

	auto* decompose = sub("decompose", "Split an element along a cover with bounded sup norms", cmd_decompose);
	elt(decompose);
	decompose->add_option("--cover", o.within, "Bisection names")->required()->delimiter(',');
	decompose->add_option("--epsilon", o.epsilon, "Slack on the sup norm bound");

	auto* verify = sub("verify", "Run the randomized property suites", cmd_verify);
	verify->add_option("--suite", o.suites, "axioms, convolution, representation, lemmas or all")->delimiter(',');
	verify->add_option("--trials", o.trials, "Trials per property");
	verify->add_option("--fixture", o.fixtures, "Groupoid files checked by the axioms suite");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}
	try {
		return run();
	} catch (const Error& e) {
		fmt::print(stderr, "error: {}\n", e.what());
		return e.exit_code();
	} catch (const std::exception& e) {
		fmt::print(stderr, "internal error: {}\n", e.what());
		return 1;
	}
}
