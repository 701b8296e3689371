#include "steinberg/element_io.hpp"

#include "steinberg/errors.hpp"
#include "steinberg/groupoid_io.hpp"

#include <fmt/format.h>

#include <cctype>
#include <variant>

namespace steinberg {

namespace {

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s)
{
	if (s.empty() || !ident_start(s.front()))
		return false;
	for (char c : s)
		if (!ident_char(c))
			return false;
	return true;
}

std::string strip_spaces(std::string_view s)
{
	std::string out;
	for (char c : s)
		if (!std::isspace(static_cast<unsigned char>(c)))
			out += c;
	return out;
}

// Comma-separated items inside "name(...)", returning the rest after ')'.
std::vector<std::string_view> call_args(std::string_view text, std::string_view name, std::string_view& rest)
{
	text = trim(text);
	if (text.substr(0, name.size()) != name)
		throw ParseError(fmt::format("expected {}(...) in '{}'", name, text));
	std::string_view body = trim(text.substr(name.size()));
	if (body.empty() || body.front() != '(')
		throw ParseError(fmt::format("expected '(' after {} in '{}'", name, text));
	auto close = body.find(')');
	if (close == std::string_view::npos)
		throw ParseError(fmt::format("missing ')' in '{}'", text));
	rest = trim(body.substr(close + 1));
	std::string_view inner = trim(body.substr(1, close - 1));
	std::vector<std::string_view> out;
	if (inner.empty())
		return out;
	while (true) {
		auto comma = inner.find(',');
		out.push_back(trim(inner.substr(0, comma)));
		if (comma == std::string_view::npos)
			break;
		inner = inner.substr(comma + 1);
	}
	return out;
}

} // namespace

Bisection parse_bisection(const Groupoid& g, std::string_view text)
{
	std::string_view rest;
	if (auto fin = g.as_finite()) {
		std::vector<ArrowId> arrows;
		for (auto name : call_args(text, "arrows", rest)) {
			auto a = fin->find(name);
			if (!a)
				throw ParseError(fmt::format("unknown arrow '{}'", name));
			arrows.push_back(*a);
		}
		if (!rest.empty())
			throw ParseError(fmt::format("unexpected '{}' after arrows(...)", rest));
		Bisection b = Bisection::of_arrows(std::move(arrows));
		validate(g, b);
		return b;
	}
	std::vector<std::string> words;
	for (auto w : call_args(text, "clopen", rest)) {
		if (w.size() < 2 || w.front() != '"' || w.back() != '"')
			throw ParseError(fmt::format("cylinder words must be quoted: {}", w));
		words.emplace_back(w.substr(1, w.size() - 2));
	}
	if (rest.substr(0, 4) != "head")
		throw ParseError(fmt::format("expected 'head <k|unit>' after clopen(...) in '{}'", text));
	std::string_view h = trim(rest.substr(4));
	std::int64_t head = 0;
	if (h != "unit") {
		try {
			size_t used = 0;
			head = std::stoll(std::string(h), &used);
			if (used != h.size())
				throw std::invalid_argument("trailing");
		} catch (const std::exception&) {
			throw ParseError(fmt::format("malformed head '{}'", h));
		}
	}
	const SnakeGroupoid& s = g.snake();
	return Bisection::of_snake(s, ClopenSet(std::move(words)), s.normalize(head));
}

const Bisection* ElementDocument::find_bisection(std::string_view name) const
{
	for (auto const& [n, b] : bisections)
		if (n == name)
			return &b;
	return nullptr;
}

const Element* ElementDocument::find_element(std::string_view name) const
{
	for (auto const& [n, e] : elements)
		if (n == name)
			return &e;
	return nullptr;
}

const Bisection& ElementDocument::bisection(std::string_view name) const
{
	if (auto b = find_bisection(name))
		return *b;
	throw ParseError(fmt::format("unknown bisection '{}'", name));
}

const Element& ElementDocument::element(std::string_view name) const
{
	if (auto e = find_element(name))
		return *e;
	if (find_bisection(name))
		throw ParseError(fmt::format("'{}' is a bisection, not an element", name));
	throw ParseError(fmt::format("unknown element '{}'", name));
}

namespace {

Element parse_terms(const ElementDocument& doc, std::string_view text)
{
	std::vector<Term> terms;
	size_t pos = 0;
	auto skip_ws = [&] {
		while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
			++pos;
	};
	skip_ws();
	if (trim(text) == "0")
		return Element(doc.model);
	bool first = true;
	while (true) {
		skip_ws();
		if (pos == text.size()) {
			if (first)
				throw ParseError("empty element definition");
			break;
		}
		// Between terms the sign is a separator negating the whole coefficient;
		// on the first term a leading '-' belongs to the coefficient.
		bool negate = false;
		if (!first) {
			if (text[pos] != '+' && text[pos] != '-')
				throw ParseError(fmt::format("expected '+' or '-' at '{}'", text.substr(pos)));
			negate = text[pos] == '-';
			++pos;
			skip_ws();
		}
		first = false;
		// A bare name, optionally negated, stands for +-1*name.
		size_t q = pos + (text[pos] == '-' ? 1 : 0);
		size_t end = q;
		while (end < text.size() && ident_char(text[end]))
			++end;
		size_t after = end;
		while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after])))
			++after;
		std::string_view name;
		Complex coeff = q > pos ? Complex(-1) : Complex(1);
		if (end > q && ident_start(text[q]) && (after == text.size() || text[after] == '+' || text[after] == '-')) {
			name = text.substr(q, end - q);
			pos = end;
		} else {
			auto star = text.find('*', pos);
			if (star == std::string_view::npos)
				throw ParseError(fmt::format("expected <coefficient>*<bisection> at '{}'", text.substr(pos)));
			coeff = parse_complex(strip_spaces(text.substr(pos, star - pos)));
			pos = star + 1;
			skip_ws();
			end = pos;
			while (end < text.size() && ident_char(text[end]))
				++end;
			name = text.substr(pos, end - pos);
			if (!is_identifier(name))
				throw ParseError(fmt::format("expected a bisection name at '{}'", text.substr(pos)));
			pos = end;
		}
		if (negate)
			coeff = -coeff;
		terms.push_back({std::move(coeff), doc.bisection(name)});
	}
	return Element(doc.model, std::move(terms));
}

struct Line {
	size_t number;
	std::string_view text;
};

// "<word> <name> = <rhs>"
std::pair<std::string_view, std::string_view> definition(const Line& l, std::string_view keyword)
{
	std::string_view body = trim(l.text.substr(keyword.size()));
	auto eq = body.find('=');
	if (eq == std::string_view::npos)
		throw ParseError(fmt::format("line {}: expected '{} <name> = ...'", l.number, keyword));
	std::string_view name = trim(body.substr(0, eq));
	if (!is_identifier(name))
		throw ParseError(fmt::format("line {}: invalid name '{}'", l.number, name));
	return {name, trim(body.substr(eq + 1))};
}

ElementDocument parse_document(std::string_view text, GroupoidPtr model, const std::filesystem::path* base)
{
	ElementDocument doc;
	doc.model = std::move(model);
	size_t number = 0;
	while (!text.empty()) {
		++number;
		auto nl = text.find('\n');
		std::string_view raw = text.substr(0, nl);
		text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
		if (auto hash = raw.find('#'); hash != std::string_view::npos)
			raw = raw.substr(0, hash);
		Line l{number, trim(raw)};
		if (l.text.empty())
			continue;
		auto word_end = l.text.find_first_of(" \t:");
		std::string_view word = l.text.substr(0, word_end);
		try {
			if (word == "groupoid") {
				if (!doc.groupoid_path.empty())
					throw ParseError("duplicate groupoid line");
				auto colon = l.text.find(':');
				if (colon == std::string_view::npos)
					throw ParseError("expected 'groupoid: <path>'");
				std::string path(trim(l.text.substr(colon + 1)));
				if (path.empty())
					throw ParseError("empty groupoid path");
				if (base) {
					auto resolved = (base->parent_path() / path).lexically_normal();
					doc.groupoid_path = resolved.string();
					doc.model = load_groupoid_file(resolved);
				} else {
					doc.groupoid_path = path;
				}
				continue;
			}
			if (!doc.model)
				throw ParseError("the 'groupoid:' line must come first");
			if (word == "bisection") {
				auto [name, rhs] = definition(l, word);
				if (doc.find_bisection(name) || doc.find_element(name))
					throw ParseError(fmt::format("duplicate name '{}'", name));
				doc.bisections.emplace_back(std::string(name), parse_bisection(*doc.model, rhs));
			} else if (word == "element") {
				auto [name, rhs] = definition(l, word);
				if (doc.find_bisection(name) || doc.find_element(name))
					throw ParseError(fmt::format("duplicate name '{}'", name));
				doc.elements.emplace_back(std::string(name), parse_terms(doc, rhs));
			} else {
				throw ParseError(fmt::format("unknown key '{}'", word));
			}
		} catch (const AxiomError&) {
			throw;
		} catch (const IoError&) {
			throw;
		} catch (const Error& e) {
			throw ParseError(fmt::format("line {}: {}", l.number, e.what()));
		}
	}
	if (!doc.model)
		throw ParseError("missing 'groupoid:' line");
	return doc;
}

} // namespace

ElementDocument parse_elements(std::string_view text, GroupoidPtr model)
{
	return parse_document(text, std::move(model), nullptr);
}

ElementDocument load_element_file(const std::filesystem::path& path)
{
	std::string text = read_text_file(path);
	return parse_document(text, nullptr, &path);
}

std::string format_terms(const Element& f, const std::vector<std::pair<std::string, Bisection>>& names)
{
	std::string out;
	for (auto const& t : f.terms()) {
		auto it = std::find_if(names.begin(), names.end(), [&](auto const& n) { return n.second == t.bisection; });
		if (it == names.end())
			throw PreconditionError("format_terms: unnamed bisection");
		bool neg = sgn(t.coeff.real()) < 0 || (sgn(t.coeff.real()) == 0 && sgn(t.coeff.imag()) < 0);
		std::string mag = format_complex(neg ? -t.coeff : t.coeff);
		if (out.empty())
			out = format_complex(t.coeff) + "*" + it->first;
		else
			out += fmt::format(" {} {}*{}", neg ? '-' : '+', mag, it->first);
	}
	return out.empty() ? "0" : out;
}

std::string format_document(const std::string& groupoid_path,
                            const std::vector<std::pair<std::string, Element>>& elements,
                            const std::vector<std::pair<std::string, Bisection>>& names)
{
	if (elements.empty())
		return fmt::format("groupoid: {}\n", groupoid_path);
	const Groupoid& g = elements.front().second.groupoid();
	std::vector<std::pair<std::string, Bisection>> used;
	auto taken = [&](const std::string& n) {
		return std::any_of(names.begin(), names.end(), [&](auto const& x) { return x.first == n; }) ||
		       std::any_of(used.begin(), used.end(), [&](auto const& x) { return x.first == n; }) ||
		       std::any_of(elements.begin(), elements.end(), [&](auto const& x) { return x.first == n; });
	};
	size_t fresh = 0;
	for (auto const& [en, e] : elements)
		for (auto const& t : e.terms()) {
			if (std::any_of(used.begin(), used.end(), [&](auto const& x) { return x.second == t.bisection; }))
				continue;
			auto known = std::find_if(names.begin(), names.end(), [&](auto const& x) { return x.second == t.bisection; });
			std::string name;
			if (known != names.end() && !std::any_of(used.begin(), used.end(),
			                                         [&](auto const& x) { return x.first == known->first; }))
				name = known->first;
			else
				do
					name = fmt::format("b{}", ++fresh);
				while (taken(name));
			used.emplace_back(std::move(name), t.bisection);
		}
	std::string out = fmt::format("groupoid: {}\n", groupoid_path);
	for (auto const& [n, b] : used)
		out += fmt::format("bisection {} = {}\n", n, format_bisection(g, b));
	for (auto const& [n, e] : elements)
		out += fmt::format("element {} = {}\n", n, format_terms(e, used));
	return out;
}

// ---------------------------------------------------------------------------
// Expressions

namespace {

using Value = std::variant<Complex, Element>;

class ExprParser {
  public:
	ExprParser(const ElementDocument& doc, std::string_view text) : doc_(doc), text_(text) {}

	Element run()
	{
		Value v = sum();
		skip();
		if (pos_ != text_.size())
			fail("unexpected input");
		if (auto e = std::get_if<Element>(&v))
			return *e;
		throw ParseError("expression evaluates to a scalar, not an element");
	}

  private:
	const ElementDocument& doc_;
	std::string_view text_;
	size_t pos_ = 0;

	[[noreturn]] void fail(const std::string& what) const
	{
		throw ParseError(fmt::format("{} at position {} of '{}'", what, pos_ + 1, text_));
	}

	void skip()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool accept(std::string_view tok)
	{
		skip();
		if (text_.substr(pos_, tok.size()) == tok) {
			pos_ += tok.size();
			return true;
		}
		return false;
	}

	Value sum()
	{
		Value v = product();
		while (true) {
			if (accept("+"))
				v = combine(v, product(), +1);
			else if (accept("-"))
				v = combine(v, product(), -1);
			else
				return v;
		}
	}

	Value combine(const Value& a, const Value& b, int sign)
	{
		if (auto x = std::get_if<Complex>(&a))
			if (auto y = std::get_if<Complex>(&b))
				return sign > 0 ? *x + *y : *x - *y;
		if (auto x = std::get_if<Element>(&a))
			if (auto y = std::get_if<Element>(&b))
				return sign > 0 ? *x + *y : *x - *y;
		fail("cannot add a scalar and an element");
	}

	Value product()
	{
		Value v = unary();
		while (true) {
			if (accept("**")) {
				Value w = unary();
				auto x = std::get_if<Element>(&v);
				auto y = std::get_if<Element>(&w);
				if (!x || !y)
					fail("'**' needs two elements");
				v = convolve(*x, *y);
			} else if (accept("*")) {
				Value w = unary();
				v = multiply(v, w);
			} else {
				return v;
			}
		}
	}

	Value multiply(const Value& a, const Value& b)
	{
		if (auto x = std::get_if<Complex>(&a)) {
			if (auto y = std::get_if<Complex>(&b))
				return *x * *y;
			return scale(*x, std::get<Element>(b));
		}
		if (auto y = std::get_if<Complex>(&b))
			return scale(*y, std::get<Element>(a));
		fail("'*' is scalar multiplication; use '**' to convolve two elements");
	}

	Value unary()
	{
		if (accept("-")) {
			Value v = unary();
			if (auto x = std::get_if<Complex>(&v))
				return -*x;
			return scale(-1, std::get<Element>(v));
		}
		if (accept("+"))
			return unary();
		return primary();
	}

	Value primary()
	{
		skip();
		if (accept("(")) {
			Value v = sum();
			if (!accept(")"))
				fail("expected ')'");
			return v;
		}
		if (pos_ == text_.size())
			fail("unexpected end of expression");
		char c = text_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
			size_t start = pos_;
			while (pos_ < text_.size() &&
			       (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '/'))
				++pos_;
			bool imag = pos_ < text_.size() && text_[pos_] == 'i' &&
			            (pos_ + 1 == text_.size() || !ident_char(text_[pos_ + 1]));
			Rational q = parse_rational(text_.substr(start, pos_ - start));
			if (imag) {
				++pos_;
				return Complex(0, q);
			}
			return Complex(q);
		}
		if (!ident_start(c))
			fail("unexpected character");
		size_t start = pos_;
		while (pos_ < text_.size() && ident_char(text_[pos_]))
			++pos_;
		std::string_view name = text_.substr(start, pos_ - start);
		if (name == "adj") {
			skip();
			if (pos_ < text_.size() && text_[pos_] == '(') {
				accept("(");
				Value v = sum();
				if (!accept(")"))
					fail("expected ')'");
				if (auto x = std::get_if<Complex>(&v))
					return x->conj();
				return involute(std::get<Element>(v));
			}
		}
		if (auto e = doc_.find_element(name))
			return *e;
		if (auto b = doc_.find_bisection(name))
			return Element::indicator(doc_.model, *b);
		if (name == "i")
			return Complex(0, 1);
		pos_ = start;
		fail(fmt::format("unknown name '{}'", name));
	}
};

} // namespace

Element evaluate_expression(const ElementDocument& doc, std::string_view expr)
{
	return ExprParser(doc, expr).run();
}

} // namespace steinberg
