#include "steinberg/groupoid.hpp"

#include "steinberg/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <iterator>
#include <set>

namespace steinberg {

// ---------------------------------------------------------------------------
// FiniteGroupoid

ArrowId FiniteGroupoid::add_unit(std::string name)
{
	auto id = static_cast<ArrowId>(arrows_.size());
	add_arrow(std::move(name), id, id);
	units_.back() = true;
	arrows_.back().inv = id;
	return id;
}

ArrowId FiniteGroupoid::add_arrow(std::string name, ArrowId src, ArrowId rng)
{
	auto id = static_cast<ArrowId>(arrows_.size());
	names_.emplace(name, id);
	arrows_.push_back({std::move(name), src, rng, kNoArrow});
	units_.push_back(false);
	for (auto& row : table_)
		row.push_back(kNoArrow);
	table_.emplace_back(arrows_.size(), kNoArrow);
	return id;
}

bool FiniteGroupoid::set_compose(ArrowId a, ArrowId b, ArrowId c)
{
	ArrowId& slot = table_.at(a).at(b);
	if (slot != kNoArrow && slot != c)
		return false;
	slot = c;
	return true;
}

bool FiniteGroupoid::set_inverse(ArrowId a, ArrowId b)
{
	ArrowId& slot = arrows_.at(a).inv;
	if (slot != kNoArrow && slot != b)
		return false;
	slot = b;
	return true;
}

void FiniteGroupoid::add_alias(std::string alias, ArrowId a) { names_.emplace(std::move(alias), a); }

std::optional<std::string> FiniteGroupoid::complete_unit_laws()
{
	for (ArrowId a = 0; a < size(); ++a) {
		const Arrow& x = arrows_[a];
		if (x.src >= size() || x.rng >= size())
			return fmt::format("arrow '{}' has an unknown endpoint", x.name);
		if (!set_compose(a, x.src, a))
			return fmt::format("compose {} {} must be {}", x.name, name(x.src), x.name);
		if (!set_compose(x.rng, a, a))
			return fmt::format("compose {} {} must be {}", name(x.rng), x.name, x.name);
	}
	return std::nullopt;
}

std::vector<ArrowId> FiniteGroupoid::units() const
{
	std::vector<ArrowId> out;
	for (ArrowId a = 0; a < size(); ++a)
		if (units_[a])
			out.push_back(a);
	return out;
}

std::optional<ArrowId> FiniteGroupoid::find(std::string_view name) const
{
	auto it = names_.find(name);
	if (it == names_.end())
		return std::nullopt;
	return it->second;
}

std::vector<AxiomViolation> check_axioms(const FiniteGroupoid& g, size_t max_reports)
{
	std::vector<AxiomViolation> out;
	auto report = [&](const char* property, std::string msg) {
		if (out.size() < max_reports)
			out.push_back({property, std::move(msg)});
	};
	const size_t n = g.size();
	for (ArrowId a = 0; a < n; ++a) {
		auto const& x = g.arrow(a);
		if (x.src >= n || x.rng >= n || !g.is_unit(x.src) || !g.is_unit(x.rng))
			report("endpoints", fmt::format("arrow '{}' has an endpoint that is not a unit", x.name));
		if (g.is_unit(a) && (x.src != a || x.rng != a))
			report("endpoints", fmt::format("unit '{}' is not its own source and range", x.name));
	}
	if (!out.empty())
		return out; // nothing below is meaningful without sane endpoints

	for (ArrowId a = 0; a < n; ++a)
		for (ArrowId b = 0; b < n; ++b) {
			auto ab = g.compose(a, b);
			bool composable = g.arrow(a).src == g.arrow(b).rng;
			if (ab && !composable)
				report("composition-domain",
				       fmt::format("compose {} {} is defined but src({}) != rng({})", g.name(a),
				                   g.name(b), g.name(a), g.name(b)));
			else if (!ab && composable)
				report("composition-domain",
				       fmt::format("compose {} {} is missing although src({}) = rng({})", g.name(a),
				                   g.name(b), g.name(a), g.name(b)));
			else if (ab && (g.arrow(*ab).src != g.arrow(b).src || g.arrow(*ab).rng != g.arrow(a).rng))
				report("composition-endpoints",
				       fmt::format("compose {} {} = {} has the wrong source or range", g.name(a),
				                   g.name(b), g.name(*ab)));
		}

	for (ArrowId a = 0; a < n; ++a) {
		auto const& x = g.arrow(a);
		if (g.compose(a, x.src) != a || g.compose(x.rng, a) != a)
			report("unit-laws", fmt::format("units do not act trivially on '{}'", x.name));
		if (x.inv == kNoArrow || x.inv >= n) {
			report("inverse", fmt::format("arrow '{}' has no inverse", x.name));
			continue;
		}
		if (g.arrow(x.inv).inv != a)
			report("inverse", fmt::format("inverse of the inverse of '{}' is not '{}'", x.name, x.name));
		if (g.compose(x.inv, a) != x.src || g.compose(a, x.inv) != x.rng)
			report("inverse", fmt::format("'{}' times its inverse '{}' is not a unit", x.name,
			                              g.name(x.inv)));
	}

	for (ArrowId a = 0; a < n; ++a)
		for (ArrowId b = 0; b < n; ++b) {
			auto ab = g.compose(a, b);
			if (!ab)
				continue;
			for (ArrowId c = 0; c < n; ++c) {
				auto bc = g.compose(b, c);
				if (!bc)
					continue;
				auto left = g.compose(*ab, c);
				auto right = g.compose(a, *bc);
				if (left != right)
					report("associativity",
					       fmt::format("({} {}) {} != {} ({} {})", g.name(a), g.name(b), g.name(c),
					                   g.name(a), g.name(b), g.name(c)));
			}
		}
	return out;
}

FiniteGroupoid make_pair_groupoid(const std::vector<std::string>& units)
{
	FiniteGroupoid g;
	const size_t k = units.size();
	std::vector<std::vector<ArrowId>> id(k, std::vector<ArrowId>(k, kNoArrow));
	std::set<std::string> seen;
	for (size_t a = 0; a < k; ++a) {
		std::string name = "e_" + units[a] + units[a];
		if (!seen.insert(name).second || !seen.insert(units[a]).second)
			throw ParseError(fmt::format("pair groupoid: generated name '{}' is ambiguous", name));
		id[a][a] = g.add_unit(name);
		g.add_alias(units[a], id[a][a]);
	}
	for (size_t a = 0; a < k; ++a)
		for (size_t b = 0; b < k; ++b) {
			if (a == b)
				continue;
			std::string name = "e_" + units[a] + units[b];
			if (!seen.insert(name).second)
				throw ParseError(fmt::format("pair groupoid: generated name '{}' is ambiguous", name));
			// e_ab goes from b to a
			id[a][b] = g.add_arrow(name, id[b][b], id[a][a]);
		}
	for (size_t a = 0; a < k; ++a)
		for (size_t b = 0; b < k; ++b) {
			g.set_inverse(id[a][b], id[b][a]);
			for (size_t c = 0; c < k; ++c)
				g.set_compose(id[a][b], id[b][c], id[a][c]);
		}
	return g;
}

FiniteGroupoid make_group(const std::vector<std::string>& elements,
                          const std::vector<std::vector<std::string>>& table)
{
	const size_t n = elements.size();
	if (n == 0)
		throw ParseError("group: no elements");
	if (table.size() != n)
		throw ParseError(fmt::format("group: expected {} table rows, got {}", n, table.size()));
	std::map<std::string, size_t> index;
	for (size_t k = 0; k < n; ++k)
		if (!index.emplace(elements[k], k).second)
			throw ParseError(fmt::format("group: duplicate element '{}'", elements[k]));
	std::vector<std::vector<size_t>> mul(n, std::vector<size_t>(n));
	for (size_t a = 0; a < n; ++a) {
		if (table[a].size() != n)
			throw ParseError(fmt::format("group: row '{}' has {} entries, expected {}", elements[a],
			                             table[a].size(), n));
		for (size_t b = 0; b < n; ++b) {
			auto it = index.find(table[a][b]);
			if (it == index.end())
				throw ParseError(fmt::format("group: unknown element '{}' in row '{}'", table[a][b],
				                             elements[a]));
			mul[a][b] = it->second;
		}
	}
	std::optional<size_t> identity;
	for (size_t e = 0; e < n && !identity; ++e) {
		bool ok = true;
		for (size_t h = 0; h < n && ok; ++h)
			ok = mul[e][h] == h && mul[h][e] == h;
		if (ok)
			identity = e;
	}
	if (!identity)
		throw AxiomError("unit-laws", "group table has no identity element");

	FiniteGroupoid g;
	std::vector<ArrowId> id(n);
	id[*identity] = g.add_unit(elements[*identity]);
	for (size_t k = 0; k < n; ++k)
		if (k != *identity)
			id[k] = g.add_arrow(elements[k], id[*identity], id[*identity]);
	for (size_t a = 0; a < n; ++a)
		for (size_t b = 0; b < n; ++b) {
			g.set_compose(id[a], id[b], id[mul[a][b]]);
			if (mul[a][b] == *identity && mul[b][a] == *identity)
				g.set_inverse(id[a], id[b]);
		}
	return g;
}

FiniteGroupoid make_cyclic_group(int order, const std::string& prefix)
{
	std::vector<std::string> el;
	for (int k = 0; k < order; ++k)
		el.push_back(prefix + std::to_string(k));
	std::vector<std::vector<std::string>> table(order);
	for (int a = 0; a < order; ++a)
		for (int b = 0; b < order; ++b)
			table[a].push_back(el[(a + b) % order]);
	return make_group(el, table);
}

// ---------------------------------------------------------------------------
// SnakeGroupoid, Groupoid

SnakeGroupoid::SnakeGroupoid(std::optional<std::int64_t> order) : order_(order)
{
	if (order_ && *order_ < 2)
		throw ParseError(fmt::format("snake: head group order must be at least 2, got {}", *order_));
}

std::int64_t SnakeGroupoid::normalize(std::int64_t k) const
{
	if (!order_)
		return k;
	std::int64_t r = k % *order_;
	return r < 0 ? r + *order_ : r;
}

const FiniteGroupoid& Groupoid::finite() const
{
	if (auto g = as_finite())
		return *g;
	throw PreconditionError("operation requires a finite groupoid model");
}

const SnakeGroupoid& Groupoid::snake() const
{
	if (auto s = as_snake())
		return *s;
	throw PreconditionError("operation requires a snake groupoid model");
}

std::string Groupoid::describe() const
{
	if (auto s = as_snake())
		return s->integer_heads() ? "snake Z" : fmt::format("snake Z/{}", *s->order());
	return fmt::format("finite ({} arrows)", finite().size());
}

// ---------------------------------------------------------------------------
// Points

TestPoint TestPoint::cantor_unit(std::string w)
{
	for (char c : w)
		if (c != '0' && c != '1')
			throw ParseError("unit word '" + w + "' is not binary");
	while (!w.empty() && w.back() == '0')
		w.pop_back();
	if (w.empty())
		return base();
	return {Kind::CantorUnit, kNoArrow, std::move(w), 0};
}

TestPoint TestPoint::of_head(const SnakeGroupoid& s, std::int64_t k)
{
	k = s.normalize(k);
	if (k == 0)
		return base();
	return {Kind::Head, kNoArrow, {}, k};
}

namespace {

void check_point(const Groupoid& g, const TestPoint& p)
{
	bool arrow = p.kind == TestPoint::Kind::Arrow;
	if (auto f = g.as_finite()) {
		if (!arrow || p.arrow >= f->size())
			throw PreconditionError("point does not belong to this finite groupoid");
	} else if (arrow) {
		throw PreconditionError("arrow point used with a snake groupoid");
	}
}

std::int64_t head_of(const TestPoint& p) { return p.kind == TestPoint::Kind::Head ? p.head : 0; }

bool base_level(const TestPoint& p)
{
	return p.kind == TestPoint::Kind::Base || p.kind == TestPoint::Kind::Head;
}

} // namespace

bool is_unit(const Groupoid& g, const TestPoint& p)
{
	check_point(g, p);
	if (auto f = g.as_finite())
		return f->is_unit(p.arrow);
	return p.kind != TestPoint::Kind::Head;
}

TestPoint source(const Groupoid& g, const TestPoint& p)
{
	check_point(g, p);
	if (auto f = g.as_finite())
		return TestPoint::of_arrow(f->arrow(p.arrow).src);
	return p.kind == TestPoint::Kind::Head ? TestPoint::base() : p;
}

TestPoint range(const Groupoid& g, const TestPoint& p)
{
	check_point(g, p);
	if (auto f = g.as_finite())
		return TestPoint::of_arrow(f->arrow(p.arrow).rng);
	return p.kind == TestPoint::Kind::Head ? TestPoint::base() : p;
}

TestPoint inverse(const Groupoid& g, const TestPoint& p)
{
	check_point(g, p);
	if (auto f = g.as_finite())
		return TestPoint::of_arrow(f->arrow(p.arrow).inv);
	if (p.kind == TestPoint::Kind::Head)
		return TestPoint::of_head(g.snake(), -p.head);
	return p;
}

std::optional<TestPoint> compose(const Groupoid& g, const TestPoint& a, const TestPoint& b)
{
	if (source(g, a) != range(g, b))
		return std::nullopt;
	if (auto f = g.as_finite()) {
		auto c = f->compose(a.arrow, b.arrow);
		if (!c)
			return std::nullopt;
		return TestPoint::of_arrow(*c);
	}
	if (base_level(a))
		return TestPoint::of_head(g.snake(), head_of(a) + head_of(b));
	return a;
}

std::string format_point(const Groupoid& g, const TestPoint& p)
{
	check_point(g, p);
	switch (p.kind) {
	case TestPoint::Kind::Arrow:
		return g.finite().name(p.arrow);
	case TestPoint::Kind::CantorUnit:
		return "unit:" + p.word;
	case TestPoint::Kind::Base:
		return "base";
	case TestPoint::Kind::Head:
		return fmt::format("head:{}", p.head);
	}
	return {};
}

TestPoint parse_point(const Groupoid& g, std::string_view text)
{
	if (auto f = g.as_finite()) {
		auto a = f->find(text);
		if (!a)
			throw ParseError(fmt::format("unknown arrow '{}'", text));
		return TestPoint::of_arrow(*a);
	}
	if (text == "base")
		return TestPoint::base();
	if (text.starts_with("unit:"))
		return TestPoint::cantor_unit(std::string(text.substr(5)));
	if (text.starts_with("head:")) {
		std::string k(text.substr(5));
		try {
			size_t used = 0;
			long long v = std::stoll(k, &used);
			if (used != k.size())
				throw ParseError("");
			return TestPoint::of_head(g.snake(), v);
		} catch (const std::exception&) {
			throw ParseError(fmt::format("malformed head index in '{}'", text));
		}
	}
	throw ParseError(fmt::format("malformed point '{}' (expected base, unit:<word> or head:<k>)", text));
}

const std::vector<TestPoint>& Fiber::points() const
{
	if (integer_heads_)
		throw InfiniteFiber();
	return points_;
}

std::vector<TestPoint> Fiber::take(size_t n) const
{
	if (!integer_heads_)
		return {points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(std::min(n, points_.size()))};
	std::vector<TestPoint> out;
	for (std::int64_t k = 0; out.size() < n; ++k) {
		if (k == 0) {
			out.push_back(TestPoint::base());
			continue;
		}
		out.push_back({TestPoint::Kind::Head, kNoArrow, {}, k});
		if (out.size() < n)
			out.push_back({TestPoint::Kind::Head, kNoArrow, {}, -k});
	}
	return out;
}

Fiber fiber(const Groupoid& g, const TestPoint& x)
{
	if (!is_unit(g, x))
		throw PreconditionError(fmt::format("'{}' is not a unit", format_point(g, x)));
	std::vector<TestPoint> pts;
	if (auto f = g.as_finite()) {
		for (ArrowId a = 0; a < f->size(); ++a)
			if (f->arrow(a).src == x.arrow)
				pts.push_back(TestPoint::of_arrow(a));
		return {std::move(pts), false};
	}
	auto const& s = g.snake();
	pts.push_back(x);
	if (x.kind != TestPoint::Kind::Base)
		return {std::move(pts), false};
	if (s.integer_heads())
		return {std::move(pts), true};
	for (std::int64_t k = 1; k < *s.order(); ++k)
		pts.push_back(TestPoint::of_head(s, k));
	return {std::move(pts), false};
}

// ---------------------------------------------------------------------------
// Bisections

Bisection Bisection::of_arrows(std::vector<ArrowId> arrows)
{
	std::sort(arrows.begin(), arrows.end());
	arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
	Bisection b;
	b.impl_ = FiniteBisection{std::move(arrows)};
	return b;
}

Bisection Bisection::of_snake(const SnakeGroupoid& s, ClopenSet c, std::int64_t head)
{
	head = s.normalize(head);
	if (head != 0 && !c.contains_zero())
		throw NotRepresentable(fmt::format("head {} requires the base point in {}", head, c.to_string()));
	Bisection b;
	b.impl_ = SnakeBisection{std::move(c), head};
	return b;
}

Bisection Bisection::snake_canonical(const SnakeGroupoid& s, ClopenSet c, std::int64_t head)
{
	if (!c.contains_zero())
		head = 0;
	return of_snake(s, std::move(c), head);
}

bool Bisection::empty() const
{
	if (auto f = as_finite())
		return f->arrows.empty();
	return as_snake()->clopen.empty();
}

namespace {

const FiniteBisection& fin(const Groupoid& g, const Bisection& b)
{
	auto f = b.as_finite();
	if (!f || !g.as_finite())
		throw PreconditionError("bisection does not belong to this groupoid model");
	return *f;
}

const SnakeBisection& snk(const Groupoid& g, const Bisection& b)
{
	auto s = b.as_snake();
	if (!s || !g.as_snake())
		throw PreconditionError("bisection does not belong to this groupoid model");
	return *s;
}

} // namespace

void validate(const Groupoid& g, const Bisection& b)
{
	if (auto f = g.as_finite()) {
		auto const& arrows = fin(g, b).arrows;
		std::set<ArrowId> src, rng;
		for (ArrowId a : arrows) {
			if (a >= f->size())
				throw PreconditionError("bisection refers to an unknown arrow");
			if (!src.insert(f->arrow(a).src).second || !rng.insert(f->arrow(a).rng).second)
				throw NotRepresentable(fmt::format("{} is not a bisection: source or range repeats",
				                                   format_bisection(g, b)));
		}
		return;
	}
	auto const& s = snk(g, b);
	if (s.head != g.snake().normalize(s.head))
		throw NotRepresentable(fmt::format("head {} is not reduced", s.head));
	if (s.head != 0 && !s.clopen.contains_zero())
		throw NotRepresentable(fmt::format("head {} requires the base point in the clopen set", s.head));
}

Bisection product(const Groupoid& g, const Bisection& b, const Bisection& d)
{
	if (auto f = g.as_finite()) {
		std::vector<ArrowId> out;
		for (ArrowId x : fin(g, b).arrows)
			for (ArrowId y : fin(g, d).arrows)
				if (auto xy = f->compose(x, y))
					out.push_back(*xy);
		return Bisection::of_arrows(std::move(out));
	}
	auto const& x = snk(g, b);
	auto const& y = snk(g, d);
	return Bisection::snake_canonical(g.snake(), x.clopen & y.clopen, x.head + y.head);
}

Bisection inverse(const Groupoid& g, const Bisection& b)
{
	if (auto f = g.as_finite()) {
		std::vector<ArrowId> out;
		for (ArrowId x : fin(g, b).arrows)
			out.push_back(f->arrow(x).inv);
		return Bisection::of_arrows(std::move(out));
	}
	auto const& x = snk(g, b);
	return Bisection::snake_canonical(g.snake(), x.clopen, -x.head);
}

Bisection source_region(const Groupoid& g, const Bisection& b)
{
	if (auto f = g.as_finite()) {
		std::vector<ArrowId> out;
		for (ArrowId x : fin(g, b).arrows)
			out.push_back(f->arrow(x).src);
		return Bisection::of_arrows(std::move(out));
	}
	return Bisection::of_snake(g.snake(), snk(g, b).clopen, 0);
}

Bisection range_region(const Groupoid& g, const Bisection& b)
{
	if (auto f = g.as_finite()) {
		std::vector<ArrowId> out;
		for (ArrowId x : fin(g, b).arrows)
			out.push_back(f->arrow(x).rng);
		return Bisection::of_arrows(std::move(out));
	}
	return Bisection::of_snake(g.snake(), snk(g, b).clopen, 0);
}

Bisection unit_space(const Groupoid& g)
{
	if (auto f = g.as_finite())
		return Bisection::of_arrows(f->units());
	return Bisection::of_snake(g.snake(), ClopenSet::full(), 0);
}

Bisection empty_bisection(const Groupoid& g)
{
	if (g.as_finite())
		return Bisection::of_arrows({});
	return Bisection::of_snake(g.snake(), ClopenSet(), 0);
}

bool is_unit_region(const Groupoid& g, const Bisection& b)
{
	if (auto f = g.as_finite())
		return std::all_of(fin(g, b).arrows.begin(), fin(g, b).arrows.end(),
		                   [&](ArrowId a) { return f->is_unit(a); });
	return snk(g, b).head == 0;
}

Bisection unit_region_union(const Groupoid& g, std::span<const Bisection> regions)
{
	for (auto const& r : regions)
		if (!is_unit_region(g, r))
			throw PreconditionError("unit_region_union: argument is not a unit region");
	if (g.as_finite()) {
		std::vector<ArrowId> out;
		for (auto const& r : regions)
			out.insert(out.end(), fin(g, r).arrows.begin(), fin(g, r).arrows.end());
		return Bisection::of_arrows(std::move(out));
	}
	ClopenSet c;
	for (auto const& r : regions)
		c = c | snk(g, r).clopen;
	return Bisection::of_snake(g.snake(), std::move(c), 0);
}

bool contains(const Groupoid& g, const Bisection& b, const TestPoint& p)
{
	if (g.as_finite()) {
		auto const& arrows = fin(g, b).arrows;
		return p.kind == TestPoint::Kind::Arrow && std::binary_search(arrows.begin(), arrows.end(), p.arrow);
	}
	auto const& s = snk(g, b);
	switch (p.kind) {
	case TestPoint::Kind::CantorUnit:
		return s.clopen.contains_eventually_zero(p.word);
	case TestPoint::Kind::Base:
		return s.head == 0 && s.clopen.contains_zero();
	case TestPoint::Kind::Head:
		return s.head == p.head && s.clopen.contains_zero();
	case TestPoint::Kind::Arrow:
		break;
	}
	throw PreconditionError("arrow point used with a snake groupoid");
}

bool subset_of(const Groupoid& g, const Bisection& b, const Bisection& d)
{
	if (g.as_finite()) {
		auto const& x = fin(g, b).arrows;
		auto const& y = fin(g, d).arrows;
		return std::includes(y.begin(), y.end(), x.begin(), x.end());
	}
	auto const& x = snk(g, b);
	auto const& y = snk(g, d);
	return x.clopen.subset_of(y.clopen) && (!x.clopen.contains_zero() || x.head == y.head);
}

bool subset_of_union(const Groupoid& g, const Bisection& b, std::span<const Bisection> cover)
{
	std::vector<Bisection> family(cover.begin(), cover.end());
	family.push_back(b);
	for (auto const& p : enumerate_test_points(g, family)) {
		if (!contains(g, b, p))
			continue;
		bool covered = std::any_of(cover.begin(), cover.end(),
		                           [&](const Bisection& c) { return contains(g, c, p); });
		if (!covered)
			return false;
	}
	return true;
}

Bisection intersection(const Groupoid& g, const Bisection& b, const Bisection& d)
{
	if (g.as_finite()) {
		auto const& x = fin(g, b).arrows;
		auto const& y = fin(g, d).arrows;
		std::vector<ArrowId> out;
		std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
		return Bisection::of_arrows(std::move(out));
	}
	auto const& x = snk(g, b);
	auto const& y = snk(g, d);
	ClopenSet c = x.clopen & y.clopen;
	if (c.contains_zero() && x.head != y.head)
		throw NotRepresentable("intersection of snake bisections with different heads over the base "
		                       "point is not compact");
	return Bisection::snake_canonical(g.snake(), std::move(c), x.head);
}

Bisection difference(const Groupoid& g, const Bisection& b, const Bisection& d)
{
	if (g.as_finite()) {
		auto const& x = fin(g, b).arrows;
		auto const& y = fin(g, d).arrows;
		std::vector<ArrowId> out;
		std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
		return Bisection::of_arrows(std::move(out));
	}
	auto const& x = snk(g, b);
	auto const& y = snk(g, d);
	if (x.clopen.contains_zero() && y.clopen.contains_zero() && x.head != y.head)
		throw NotRepresentable("difference of snake bisections with different heads over the base "
		                       "point is not compact");
	return Bisection::snake_canonical(g.snake(), x.clopen - y.clopen, x.head);
}

std::vector<Bisection> disjointify(const Groupoid& g, std::span<const Bisection> cover,
                                   const Bisection& within)
{
	for (size_t k = 0; k < cover.size(); ++k)
		if (!subset_of(g, cover[k], within))
			throw PreconditionError(fmt::format("disjointify: member {} ({}) is not contained in {}", k,
			                                    format_bisection(g, cover[k]),
			                                    format_bisection(g, within)));
	std::vector<Bisection> out;
	for (size_t k = 0; k < cover.size(); ++k) {
		Bisection d = cover[k];
		for (size_t j = 0; j < k; ++j)
			d = difference(g, d, cover[j]);
		out.push_back(std::move(d));
	}
	return out;
}

std::string format_bisection(const Groupoid& g, const Bisection& b)
{
	if (auto f = g.as_finite()) {
		std::string s = "arrows(";
		auto const& arrows = fin(g, b).arrows;
		for (size_t k = 0; k < arrows.size(); ++k)
			s += (k ? "," : "") + f->name(arrows[k]);
		return s + ")";
	}
	auto const& s = snk(g, b);
	return s.clopen.to_string() + " head " + (s.head == 0 ? std::string("unit") : std::to_string(s.head));
}

// ---------------------------------------------------------------------------
// Test points

namespace {
constexpr size_t kMaxDepth = 20;
}

size_t class_depth(std::span<const Bisection> family)
{
	size_t d = 1;
	for (auto const& b : family)
		if (auto s = b.as_snake())
			d = std::max(d, s->clopen.depth());
	return d;
}

std::vector<std::int64_t> heads_used(std::span<const Bisection> family)
{
	std::set<std::int64_t> heads;
	for (auto const& b : family)
		if (auto s = b.as_snake(); s && s->head != 0)
			heads.insert(s->head);
	return {heads.begin(), heads.end()};
}

std::vector<TestPoint> snake_class_points(const SnakeGroupoid& s, size_t depth,
                                          std::span<const std::int64_t> heads)
{
	if (depth > kMaxDepth)
		throw PreconditionError(fmt::format("cylinder depth {} exceeds the supported maximum {}", depth,
		                                    kMaxDepth));
	std::vector<TestPoint> out;
	for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << depth); ++bits) {
		std::string w(depth, '0');
		for (size_t k = 0; k < depth; ++k)
			if (bits >> (depth - 1 - k) & 1)
				w[k] = '1';
		out.push_back(TestPoint::cantor_unit(std::move(w)));
	}
	out.push_back(TestPoint::cantor_unit(std::string(depth, '0') + "1"));
	out.push_back(TestPoint::base());
	for (auto k : heads)
		out.push_back(TestPoint::of_head(s, k));
	return out;
}

std::vector<TestPoint> enumerate_test_points(const Groupoid& g, std::span<const Bisection> family)
{
	if (g.as_finite()) {
		std::set<ArrowId> arrows;
		for (auto const& b : family)
			for (ArrowId a : fin(g, b).arrows)
				arrows.insert(a);
		std::vector<TestPoint> out;
		for (ArrowId a : arrows)
			out.push_back(TestPoint::of_arrow(a));
		return out;
	}
	for (auto const& b : family)
		snk(g, b);
	if (family.empty())
		return {TestPoint::base()};
	auto heads = heads_used(family);
	return snake_class_points(g.snake(), class_depth(family), heads);
}

bool is_punctured_representative(const TestPoint& p, size_t depth)
{
	return p.kind == TestPoint::Kind::CantorUnit && p.word.size() == depth + 1 &&
	       p.word == std::string(depth, '0') + "1";
}

std::optional<Bisection> class_neighbourhood(const Groupoid& g, const TestPoint& p, size_t depth)
{
	check_point(g, p);
	if (g.as_finite())
		return Bisection::of_arrows({p.arrow});
	auto const& s = g.snake();
	switch (p.kind) {
	case TestPoint::Kind::CantorUnit: {
		if (is_punctured_representative(p, depth))
			return std::nullopt;
		std::string w = p.word;
		if (w.size() < depth)
			w.resize(depth, '0');
		return Bisection::of_snake(s, ClopenSet::cylinder(std::move(w)), 0);
	}
	case TestPoint::Kind::Base:
	case TestPoint::Kind::Head:
		return Bisection::of_snake(s, ClopenSet::cylinder(std::string(depth, '0')), head_of(p));
	case TestPoint::Kind::Arrow:
		break;
	}
	return std::nullopt;
}

} // namespace steinberg
