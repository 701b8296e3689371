#include "support.hpp"

#include "steinberg/element_io.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/random.hpp"

#include <doctest.h>

#include <filesystem>

using namespace test;

namespace {

const std::filesystem::path kData = STEINBERG_DATA;

const char* kSnakeDoc = R"(groupoid: snake2.grpd
# comments and blank lines are ignored

bisection G0 = clopen("") head unit
bisection B = clopen("") head 1
bisection U = clopen("0") head unit
element f = 1*G0 - 1*B
element g = -1+2i*U + B - 1/3*G0
element z = 0
)";

} // namespace

TEST_CASE("parsing element documents")
{
	auto s = snake(2);
	auto doc = parse_elements(kSnakeDoc, s);
	CHECK(doc.groupoid_path == "snake2.grpd");
	CHECK(doc.bisections.size() == 3);
	CHECK(doc.bisection("B") == sb(s, {""}, 1));
	const Element& f = doc.element("f");
	CHECK(equals(f, ind(s, sb(s, {""})) - ind(s, sb(s, {""}, 1))));
	const Element& g = doc.element("g");
	CHECK(evaluate(g, pt(s, "unit:01")) == Complex(Rational(-1, 3), 2));
	CHECK(evaluate(g, pt(s, "head:1")) == 1);
	CHECK(doc.element("z").terms().empty());
	CHECK_THROWS_AS(doc.element("nope"), ParseError);
	CHECK_THROWS_AS(doc.bisection("f"), ParseError);
}

TEST_CASE("coefficient signs")
{
	auto s = snake(2);
	auto doc = parse_elements("bisection A = clopen(\"\") head unit\n"
	                          "element a = -2*A\n"
	                          "element c = -A\n"
	                          "element d = A - -1*A\n"
	                          "element e = 2.5 * A\n",
	                          s);
	auto at = [&](const char* name) { return evaluate(doc.element(name), TestPoint::base()); };
	CHECK(at("a") == -2);
	CHECK(at("c") == -1);
	CHECK(at("d") == 2);
	CHECK(at("e") == Complex(Rational(5, 2)));
	CHECK_THROWS_AS(parse_elements("bisection A = clopen(\"\") head unit\nelement b = 1 - 1+2i*A\n", s),
	                ParseError);
	auto ok = parse_elements("bisection A = clopen(\"\") head unit\nelement b = 1*A - 1+2i*A\n", s);
	CHECK(evaluate(ok.element("b"), TestPoint::base()) == Complex(0, -2));
}

TEST_CASE("malformed element documents")
{
	auto s = snake(2);
	auto p = pair({"u", "v"});
	auto fails = [](const char* text, const GroupoidPtr& g) {
		try {
			parse_elements(text, g);
		} catch (const ParseError& e) {
			return std::string(e.what());
		}
		return std::string("no error");
	};
	CHECK(fails("bisection A = clopen(\"1\") head 1\n", s).find("line 1") != std::string::npos);
	CHECK(fails("bisection A = clopen(\"2\") head unit\n", s) != "no error");
	CHECK(fails("bisection A = arrows(e_uu, e_vu)\n", p) != "no error");
	CHECK(fails("bisection A = arrows(e_ww)\n", p) != "no error");
	CHECK(fails("element f = 2*Q\n", s).find("Q") != std::string::npos);
	CHECK(fails("bisection A = clopen(\"\") head unit\nbisection A = clopen(\"\") head unit\n", s) != "no error");
	CHECK(fails("frobnicate x\n", s) != "no error");
	CHECK(fails("bisection A = clopen(\"\") head unit\nelement f = 2*A +\n", s) != "no error");
}

TEST_CASE("loading element files resolves the groupoid path")
{
	auto doc = load_element_file(kData / "snake2.elt");
	REQUIRE(doc.model->as_snake());
	CHECK(doc.model->snake().order() == 2);
	CHECK(doc.find_element("f"));
	auto pdoc = load_element_file(kData / "pair2.elt");
	CHECK(evaluate(pdoc.element("x"), pt(pdoc.model, "e_uv")) == Complex(1, -1));
	CHECK(evaluate(pdoc.element("y"), pt(pdoc.model, "e_uu")) == Complex(Rational(1, 3)));
	CHECK_THROWS_AS(load_element_file(kData / "missing.elt"), IoError);
}

TEST_CASE("expressions")
{
	auto doc = load_element_file(kData / "snake2.elt");
	const Element& f = doc.element("f");
	CHECK(equals(evaluate_expression(doc, "f ** f"), 2 * f));
	CHECK(equals(evaluate_expression(doc, "adj(f)"), f));
	CHECK(equals(evaluate_expression(doc, "0 * f"), Element(doc.model)));
	CHECK(equals(evaluate_expression(doc, "G0 - B"), f));
	CHECK(equals(evaluate_expression(doc, "(f + g) ** h"),
	             convolve(f + doc.element("g"), doc.element("h"))));
	CHECK(equals(evaluate_expression(doc, "2i * f - -f"), Complex(1, 2) * f));
	CHECK(equals(evaluate_expression(doc, "i*g"), Complex(0, 1) * doc.element("g")));
	CHECK(equals(evaluate_expression(doc, "1/2 * (f ** f)"), f));
	CHECK(equals(evaluate_expression(doc, "adj(1i*U1)"), Complex(0, -1) * ind(doc.model, doc.bisection("U1"))));
	CHECK_THROWS_AS(evaluate_expression(doc, "f ** "), ParseError);
	CHECK_THROWS_AS(evaluate_expression(doc, "nothing"), ParseError);
	CHECK_THROWS_AS(evaluate_expression(doc, "f * f"), ParseError);
	CHECK_THROWS_AS(evaluate_expression(doc, "2 ** f"), ParseError);
	CHECK_THROWS_AS(evaluate_expression(doc, "(f"), ParseError);
}

TEST_CASE("printing round-trips")
{
	auto rng = random::stream(2, "print");
	for (int trial = 0; trial < 200; ++trial) {
		GroupoidPtr g = trial % 3 == 0 ? random::finite_groupoid(rng)
		                               : (trial % 3 == 1 ? random::cyclic_snake(rng) : random::integer_snake());
		Element f = random::element(g, rng);
		Element h = Complex(Rational(1, 3), Rational(-7, 4)) * random::element(g, rng);
		std::string text = format_document("m.grpd", {{"f", f}, {"h", h}});
		CAPTURE(text);
		auto doc = parse_elements(text, g);
		CHECK(equals(doc.element("f"), f));
		CHECK(equals(doc.element("h"), h));
		CHECK(doc.groupoid_path == "m.grpd");
	}
}

TEST_CASE("printing reuses bisection names")
{
	auto doc = load_element_file(kData / "snake2.elt");
	std::string text = format_document("snake2.grpd", {{"r", doc.element("f")}}, doc.bisections);
	CHECK(text.find("element r = 1*G0 - 1*B") != std::string::npos);
	CHECK(format_terms(Element(doc.model), doc.bisections) == "0");
	Element odd = ind(doc.model, sb(doc.model, {"11"}), 2);
	std::string t2 = format_document("snake2.grpd", {{"o", odd}}, doc.bisections);
	CHECK(t2.find("bisection b1 = clopen(\"11\") head unit") != std::string::npos);
}
