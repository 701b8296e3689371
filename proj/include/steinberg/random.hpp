#pragma once

// Seeded generators of small models, bisections and elements for the
// property suites. Sizes: finite groupoids with at most 12 arrows, bisections
// of at most 4 arrows or cylinder depth at most 4, at most 6 terms, and
// coefficients in {-2,-1,1,2} + {-1,0,1}i.

#include "steinberg/element.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace steinberg::random {

using Rng = std::mt19937_64;

/// A generator seeded from (seed, label); independent streams per label.
Rng stream(std::uint64_t seed, std::string_view label);

/// Uniform in [0, n).
size_t below(Rng& rng, size_t n);
bool coin(Rng& rng);

/// A disjoint union of pair groupoids times groups (trivial, Z2, Z3, S3).
GroupoidPtr finite_groupoid(Rng& rng, size_t max_arrows = 12);
/// A snake with Z/n heads, n drawn from [2, max_order].
GroupoidPtr cyclic_snake(Rng& rng, std::int64_t max_order = 5);
GroupoidPtr integer_snake();

Complex coefficient(Rng& rng);
Bisection bisection(const Groupoid& g, Rng& rng);
/// A random sub-bisection of b (a subset with the same head over the base).
Bisection sub_bisection(const Groupoid& g, const Bisection& b, Rng& rng);
/// A random unit region.
Bisection unit_region(const Groupoid& g, Rng& rng);

Element element(const GroupoidPtr& g, Rng& rng, size_t max_terms = 6);
/// Terms drawn from sub-bisections of `within`.
Element element_inside(const GroupoidPtr& g, const Bisection& within, Rng& rng, size_t max_terms = 6);
/// Terms drawn from unit regions.
Element unit_element(const GroupoidPtr& g, Rng& rng, size_t max_terms = 6);

/// A random element together with a region containing its support. The
/// element includes cancelling terms that escape the region, so that
/// confining it to the region requires real rewriting.
struct Confined {
	Element f;
	std::vector<Bisection> region;
};
Confined confined(const GroupoidPtr& g, Rng& rng);

} // namespace steinberg::random
