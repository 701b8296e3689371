#include "steinberg/groupoid_io.hpp"

#include "steinberg/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

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

std::vector<std::string> split_ws(std::string_view s)
{
	std::vector<std::string> out;
	std::istringstream in{std::string(s)};
	for (std::string tok; in >> tok;)
		out.push_back(tok);
	return out;
}

struct Line {
	size_t number;
	std::string_view text;
};

std::vector<Line> meaningful_lines(std::string_view text)
{
	std::vector<Line> out;
	size_t number = 0;
	while (!text.empty()) {
		++number;
		auto nl = text.find('\n');
		std::string_view line = text.substr(0, nl);
		text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		line = trim(line);
		if (!line.empty())
			out.push_back({number, line});
	}
	return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what)
{
	throw ParseError(fmt::format("line {}: {}", l.number, what));
}

// "key: rest" -> key, rest
std::pair<std::string_view, std::string_view> key_value(const Line& l)
{
	auto colon = l.text.find(':');
	if (colon == std::string_view::npos)
		return {std::string_view{}, l.text};
	return {trim(l.text.substr(0, colon)), trim(l.text.substr(colon + 1))};
}

Groupoid parse_pair(std::span<const Line> lines)
{
	std::vector<std::string> units;
	for (auto const& l : lines) {
		auto [key, rest] = key_value(l);
		if (key != "units")
			fail(l, fmt::format("unknown key '{}' for kind pair", key.empty() ? l.text : key));
		for (auto& u : split_ws(rest))
			units.push_back(u);
	}
	if (units.empty())
		throw ParseError("pair groupoid declares no units");
	return Groupoid(make_pair_groupoid(units));
}

Groupoid parse_group(std::span<const Line> lines)
{
	std::vector<std::string> elements;
	std::map<std::string, std::vector<std::string>> rows;
	for (auto const& l : lines) {
		auto [key, rest] = key_value(l);
		if (key == "elements") {
			if (!elements.empty())
				fail(l, "duplicate elements line");
			elements = split_ws(rest);
		} else if (key.starts_with("row ")) {
			auto name = std::string(trim(key.substr(4)));
			if (!rows.emplace(name, split_ws(rest)).second)
				fail(l, fmt::format("duplicate row for '{}'", name));
		} else {
			fail(l, fmt::format("unknown key '{}' for kind group", key.empty() ? l.text : key));
		}
	}
	std::vector<std::vector<std::string>> table;
	for (auto const& e : elements) {
		auto it = rows.find(e);
		if (it == rows.end())
			throw AxiomError("composition-domain", fmt::format("group table has no row for '{}'", e));
		table.push_back(it->second);
	}
	if (rows.size() != elements.size())
		throw ParseError("group table has rows for undeclared elements");
	return Groupoid(make_group(elements, table));
}

Groupoid parse_finite(std::span<const Line> lines)
{
	FiniteGroupoid g;
	auto lookup = [&](const Line& l, std::string_view name) {
		auto a = g.find(name);
		if (!a)
			fail(l, fmt::format("unknown arrow '{}'", name));
		return *a;
	};
	auto fresh = [&](const Line& l, const std::string& name) {
		if (g.find(name))
			fail(l, fmt::format("duplicate name '{}'", name));
	};
	for (auto const& l : lines) {
		auto tok = split_ws(l.text);
		const std::string& head = tok.front();
		if (head == "unit") {
			if (tok.size() < 2)
				fail(l, "unit: expected at least one name");
			for (size_t k = 1; k < tok.size(); ++k) {
				fresh(l, tok[k]);
				g.add_unit(tok[k]);
			}
		} else if (head == "arrow") {
			if (tok.size() != 4 || !tok[2].starts_with("src=") || !tok[3].starts_with("rng="))
				fail(l, "expected 'arrow <name> src=<unit> rng=<unit>'");
			fresh(l, tok[1]);
			ArrowId s = lookup(l, tok[2].substr(4));
			ArrowId r = lookup(l, tok[3].substr(4));
			if (!g.is_unit(s) || !g.is_unit(r))
				throw AxiomError("endpoints", fmt::format("arrow '{}' has an endpoint that is not a unit", tok[1]));
			g.add_arrow(tok[1], s, r);
		} else if (head == "compose") {
			if (tok.size() != 5 || tok[3] != "=")
				fail(l, "expected 'compose <a> <b> = <c>'");
			ArrowId a = lookup(l, tok[1]), b = lookup(l, tok[2]), c = lookup(l, tok[4]);
			if (!g.set_compose(a, b, c))
				throw AxiomError("composition-domain",
				                 fmt::format("compose {} {} is given two different values", tok[1], tok[2]));
		} else if (head == "inverse") {
			if (tok.size() != 4 || tok[2] != "=")
				fail(l, "expected 'inverse <a> = <b>'");
			ArrowId a = lookup(l, tok[1]), b = lookup(l, tok[3]);
			if (!g.set_inverse(a, b))
				throw AxiomError("inverse", fmt::format("inverse of '{}' is given two different values", tok[1]));
		} else {
			fail(l, fmt::format("unknown key '{}' for kind finite", head));
		}
	}
	if (auto conflict = g.complete_unit_laws())
		throw AxiomError("unit-laws", *conflict);
	return Groupoid(std::move(g));
}

Groupoid parse_snake(std::span<const Line> lines)
{
	std::optional<Groupoid> out;
	for (auto const& l : lines) {
		auto [key, rest] = key_value(l);
		if (key != "heads")
			fail(l, fmt::format("unknown key '{}' for kind snake", key.empty() ? l.text : key));
		if (out)
			fail(l, "duplicate heads line");
		if (rest == "Z") {
			out.emplace(SnakeGroupoid(std::nullopt));
			continue;
		}
		std::string r(rest);
		size_t used = 0;
		long long n = 0;
		try {
			n = std::stoll(r, &used);
		} catch (const std::exception&) {
			fail(l, fmt::format("heads: expected an integer >= 2 or Z, got '{}'", rest));
		}
		if (used != r.size() || n < 2)
			fail(l, fmt::format("heads: expected an integer >= 2 or Z, got '{}'", rest));
		out.emplace(SnakeGroupoid(n));
	}
	if (!out)
		throw ParseError("snake groupoid needs a 'heads:' line");
	return std::move(*out);
}

} // namespace

Groupoid parse_groupoid(std::string_view text)
{
	auto lines = meaningful_lines(text);
	if (lines.empty())
		throw ParseError("empty groupoid file");
	auto [key, kind] = key_value(lines.front());
	if (key != "kind")
		fail(lines.front(), "first entry must be 'kind: finite | pair | group | snake'");
	std::span<const Line> body(lines.data() + 1, lines.size() - 1);
	if (kind == "pair")
		return parse_pair(body);
	if (kind == "group")
		return parse_group(body);
	if (kind == "finite")
		return parse_finite(body);
	if (kind == "snake")
		return parse_snake(body);
	fail(lines.front(), fmt::format("unknown kind '{}'", kind));
}

std::vector<AxiomViolation> axiom_report(const Groupoid& g)
{
	if (auto f = g.as_finite())
		return check_axioms(*f);
	return {};
}

GroupoidPtr load_groupoid(std::string_view text)
{
	Groupoid g = parse_groupoid(text);
	auto violations = axiom_report(g);
	if (!violations.empty())
		throw AxiomError(violations.front().property, violations.front().message);
	return std::make_shared<const Groupoid>(std::move(g));
}

std::string read_text_file(const std::filesystem::path& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError(fmt::format("cannot read '{}'", path.string()));
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

GroupoidPtr load_groupoid_file(const std::filesystem::path& path)
{
	return load_groupoid(read_text_file(path));
}

} // namespace steinberg
