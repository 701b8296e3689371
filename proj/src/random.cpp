#include "steinberg/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <set>

namespace steinberg::random {

Rng stream(std::uint64_t seed, std::string_view label)
{
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : label) {
		h ^= c;
		h *= 1099511628211ull;
	}
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
	return Rng(seq);
}

size_t below(Rng& rng, size_t n) { return n == 0 ? 0 : static_cast<size_t>(rng() % n); }
bool coin(Rng& rng) { return rng() & 1; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng)
{
	for (size_t k = v.size(); k > 1; --k)
		std::swap(v[k - 1], v[below(rng, k)]);
}

namespace {

using Table = std::vector<std::vector<size_t>>;

Table cyclic_table(size_t n)
{
	Table t(n, std::vector<size_t>(n));
	for (size_t a = 0; a < n; ++a)
		for (size_t b = 0; b < n; ++b)
			t[a][b] = (a + b) % n;
	return t;
}

Table s3_table()
{
	std::vector<std::array<int, 3>> perms;
	std::array<int, 3> p{0, 1, 2};
	do
		perms.push_back(p);
	while (std::next_permutation(p.begin(), p.end()));
	Table t(6, std::vector<size_t>(6));
	for (size_t a = 0; a < 6; ++a)
		for (size_t b = 0; b < 6; ++b) {
			std::array<int, 3> c{};
			for (int k = 0; k < 3; ++k)
				c[k] = perms[a][perms[b][k]];
			t[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
		}
	return t;
}

// Adds pair(k) x H as a component; H given by a table with identity 0.
void add_component(FiniteGroupoid& g, size_t index, size_t k, const Table& h)
{
	const size_t n = h.size();
	std::vector<size_t> inv(n);
	for (size_t a = 0; a < n; ++a)
		for (size_t b = 0; b < n; ++b)
			if (h[a][b] == 0)
				inv[a] = b;
	// id[a][b][x]: the arrow b -> a labelled x.
	std::vector<std::vector<std::vector<ArrowId>>> id(k, std::vector<std::vector<ArrowId>>(k, std::vector<ArrowId>(n)));
	for (size_t a = 0; a < k; ++a)
		id[a][a][0] = g.add_unit(fmt::format("c{}u{}", index, a));
	for (size_t a = 0; a < k; ++a)
		for (size_t b = 0; b < k; ++b)
			for (size_t x = 0; x < n; ++x)
				if (a != b || x != 0)
					id[a][b][x] = g.add_arrow(fmt::format("c{}a{}{}h{}", index, a, b, x), id[b][b][0], id[a][a][0]);
	for (size_t a = 0; a < k; ++a)
		for (size_t b = 0; b < k; ++b)
			for (size_t x = 0; x < n; ++x) {
				g.set_inverse(id[a][b][x], id[b][a][inv[x]]);
				for (size_t c = 0; c < k; ++c)
					for (size_t y = 0; y < n; ++y)
						g.set_compose(id[a][b][x], id[b][c][y], id[a][c][h[x][y]]);
			}
}

} // namespace

GroupoidPtr finite_groupoid(Rng& rng, size_t max_arrows)
{
	static const std::vector<Table> groups{cyclic_table(1), cyclic_table(2), cyclic_table(3), s3_table()};
	FiniteGroupoid g;
	size_t budget = max_arrows;
	size_t components = 1 + below(rng, 3);
	for (size_t c = 0; c < components && budget > 0; ++c) {
		std::vector<std::pair<size_t, size_t>> options;
		for (size_t k = 1; k <= 3; ++k)
			for (size_t h = 0; h < groups.size(); ++h)
				if (k * k * groups[h].size() <= budget)
					options.emplace_back(k, h);
		if (options.empty())
			break;
		auto [k, h] = options[below(rng, options.size())];
		add_component(g, c, k, groups[h]);
		budget -= k * k * groups[h].size();
	}
	return std::make_shared<const Groupoid>(std::move(g));
}

GroupoidPtr cyclic_snake(Rng& rng, std::int64_t max_order)
{
	std::int64_t n = 2 + static_cast<std::int64_t>(below(rng, static_cast<size_t>(max_order - 1)));
	return std::make_shared<const Groupoid>(SnakeGroupoid(n));
}

GroupoidPtr integer_snake() { return std::make_shared<const Groupoid>(SnakeGroupoid(std::nullopt)); }

Complex coefficient(Rng& rng)
{
	static const int re[] = {-2, -1, 1, 2};
	return Complex(re[below(rng, 4)], static_cast<int>(below(rng, 3)) - 1);
}

namespace {

ClopenSet random_clopen(Rng& rng)
{
	size_t depth = below(rng, 5);
	std::vector<std::string> words;
	for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << depth); ++bits)
		if (coin(rng)) {
			std::string w(depth, '0');
			for (size_t k = 0; k < depth; ++k)
				if (bits >> (depth - 1 - k) & 1)
					w[k] = '1';
			words.push_back(std::move(w));
		}
	return ClopenSet(std::move(words));
}

std::int64_t random_head(const SnakeGroupoid& s, Rng& rng)
{
	if (auto n = s.order())
		return 1 + static_cast<std::int64_t>(below(rng, static_cast<size_t>(*n - 1)));
	std::int64_t k = 1 + static_cast<std::int64_t>(below(rng, 3));
	return coin(rng) ? k : -k;
}

} // namespace

Bisection bisection(const Groupoid& g, Rng& rng)
{
	if (auto f = g.as_finite()) {
		size_t want = 1 + below(rng, 4);
		std::vector<ArrowId> arrows;
		std::set<ArrowId> src, rng_used;
		for (size_t attempt = 0; attempt < 16 && arrows.size() < want; ++attempt) {
			ArrowId a = static_cast<ArrowId>(below(rng, f->size()));
			if (src.count(f->arrow(a).src) || rng_used.count(f->arrow(a).rng))
				continue;
			src.insert(f->arrow(a).src);
			rng_used.insert(f->arrow(a).rng);
			arrows.push_back(a);
		}
		return Bisection::of_arrows(std::move(arrows));
	}
	const SnakeGroupoid& s = g.snake();
	ClopenSet c = random_clopen(rng);
	std::int64_t head = c.contains_zero() && coin(rng) ? random_head(s, rng) : 0;
	return Bisection::of_snake(s, std::move(c), head);
}

Bisection sub_bisection(const Groupoid& g, const Bisection& b, Rng& rng)
{
	if (auto fb = b.as_finite()) {
		std::vector<ArrowId> arrows;
		for (ArrowId a : fb->arrows)
			if (below(rng, 3) != 0)
				arrows.push_back(a);
		return Bisection::of_arrows(std::move(arrows));
	}
	auto const& sb = *b.as_snake();
	return Bisection::snake_canonical(g.snake(), sb.clopen & random_clopen(rng), sb.head);
}

Bisection unit_region(const Groupoid& g, Rng& rng)
{
	if (auto f = g.as_finite()) {
		std::vector<ArrowId> units;
		for (ArrowId u : f->units())
			if (coin(rng))
				units.push_back(u);
		return Bisection::of_arrows(std::move(units));
	}
	return Bisection::of_snake(g.snake(), random_clopen(rng), 0);
}

Element element(const GroupoidPtr& g, Rng& rng, size_t max_terms)
{
	std::vector<Term> terms;
	size_t n = below(rng, max_terms + 1);
	for (size_t k = 0; k < n; ++k)
		terms.push_back({coefficient(rng), bisection(*g, rng)});
	return Element(g, std::move(terms));
}

Element element_inside(const GroupoidPtr& g, const Bisection& within, Rng& rng, size_t max_terms)
{
	std::vector<Term> terms;
	size_t n = below(rng, max_terms + 1);
	for (size_t k = 0; k < n; ++k)
		terms.push_back({coefficient(rng), sub_bisection(*g, within, rng)});
	return Element(g, std::move(terms));
}

Element unit_element(const GroupoidPtr& g, Rng& rng, size_t max_terms)
{
	std::vector<Term> terms;
	size_t n = below(rng, max_terms + 1);
	for (size_t k = 0; k < n; ++k)
		terms.push_back({coefficient(rng), unit_region(*g, rng)});
	return Element(g, std::move(terms));
}

namespace {

// A bisection agreeing with e on part of it and differing elsewhere.
Bisection twin(const Groupoid& g, const Bisection& e, Rng& rng)
{
	if (auto s = e.as_snake()) {
		if (s->clopen.contains_zero() && coin(rng)) {
			std::int64_t h = g.snake().normalize(s->head + random_head(g.snake(), rng));
			return Bisection::of_snake(g.snake(), s->clopen, h);
		}
		return sub_bisection(g, e, rng);
	}
	Bisection sub = sub_bisection(g, e, rng);
	Bisection extra = bisection(g, rng);
	std::vector<ArrowId> arrows = sub.as_finite()->arrows;
	std::set<ArrowId> src, rng_used;
	const FiniteGroupoid& f = g.finite();
	for (ArrowId a : arrows) {
		src.insert(f.arrow(a).src);
		rng_used.insert(f.arrow(a).rng);
	}
	for (ArrowId a : extra.as_finite()->arrows)
		if (!src.count(f.arrow(a).src) && !rng_used.count(f.arrow(a).rng)) {
			arrows.push_back(a);
			src.insert(f.arrow(a).src);
			rng_used.insert(f.arrow(a).rng);
		}
	return Bisection::of_arrows(std::move(arrows));
}

bool try_merge(const Groupoid& g, Bisection& into, const Bisection& piece)
{
	if (g.as_finite()) {
		std::vector<ArrowId> arrows = into.as_finite()->arrows;
		arrows.insert(arrows.end(), piece.as_finite()->arrows.begin(), piece.as_finite()->arrows.end());
		Bisection u = Bisection::of_arrows(std::move(arrows));
		try {
			validate(g, u);
		} catch (const std::exception&) {
			return false;
		}
		into = std::move(u);
		return true;
	}
	auto const& a = *into.as_snake();
	auto const& b = *piece.as_snake();
	bool az = a.clopen.contains_zero(), bz = b.clopen.contains_zero();
	if (az && bz && a.head != b.head)
		return false;
	std::int64_t head = az ? a.head : b.head;
	into = Bisection::of_snake(g.snake(), a.clopen | b.clopen, head);
	return true;
}

} // namespace

Confined confined(const GroupoidPtr& g, Rng& rng)
{
	const Groupoid& G = *g;
	std::vector<Term> terms = element(g, rng, 3).terms();
	size_t pairs = 1 + below(rng, 2);
	for (size_t k = 0; k < pairs; ++k) {
		Bisection e = bisection(G, rng);
		Complex a = coefficient(rng);
		terms.push_back({a, e});
		terms.push_back({-a, twin(G, e, rng)});
	}
	shuffle(terms, rng);
	Element f(g, std::move(terms));

	Confined out{f, {}};
	size_t extra = below(rng, 3);
	for (size_t k = 0; k < extra; ++k)
		out.region.push_back(bisection(G, rng));
	auto family = f.family();
	family.insert(family.end(), out.region.begin(), out.region.end());
	const size_t depth = class_depth(family);
	for (auto const& p : enumerate_test_points(G, family)) {
		if (evaluate(f, p).is_zero())
			continue;
		if (std::any_of(out.region.begin(), out.region.end(), [&](const Bisection& b) { return contains(G, b, p); }))
			continue;
		auto n = class_neighbourhood(G, p, depth);
		Bisection piece = n ? *n : Bisection::of_snake(G.snake(), ClopenSet::cylinder(std::string(depth, '0')), 0);
		bool merged = false;
		if (!out.region.empty() && coin(rng))
			merged = try_merge(G, out.region[below(rng, out.region.size())], piece);
		if (!merged)
			out.region.push_back(std::move(piece));
	}
	shuffle(out.region, rng);
	return out;
}

} // namespace steinberg::random
