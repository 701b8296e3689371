#pragma once

#include "steinberg/element.hpp"
#include "steinberg/groupoid_io.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace test {

using namespace steinberg;

inline GroupoidPtr snake(std::optional<std::int64_t> heads)
{
	return std::make_shared<const Groupoid>(SnakeGroupoid(heads));
}

inline GroupoidPtr pair(const std::vector<std::string>& units)
{
	return std::make_shared<const Groupoid>(make_pair_groupoid(units));
}

inline GroupoidPtr model(std::string_view text) { return load_groupoid(text); }

inline Bisection sb(const GroupoidPtr& g, std::vector<std::string> words, std::int64_t head = 0)
{
	return Bisection::of_snake(g->snake(), ClopenSet(std::move(words)), head);
}

inline Bisection fb(const GroupoidPtr& g, const std::vector<std::string>& names)
{
	std::vector<ArrowId> ids;
	for (auto const& n : names)
		ids.push_back(*g->finite().find(n));
	return Bisection::of_arrows(ids);
}

inline TestPoint pt(const GroupoidPtr& g, std::string_view text) { return parse_point(*g, text); }

inline Element ind(const GroupoidPtr& g, const Bisection& b, Complex c = 1) { return Element::indicator(g, b, c); }

inline Complex cx(long re, long im) { return Complex(Rational(re), Rational(im)); }

} // namespace test
