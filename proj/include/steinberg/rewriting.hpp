#pragma once

// Constructive rewriting of elements: confining term lists to a region,
// restriction to a bisection, unit-support windows, and decomposition into
// summands that are each supported in one member of a cover with a controlled
// uniform norm.
//
// All algorithms work on test-point classes at the working depth of the
// family involved. Every term bisection, every cover member and every patch
// built here is a union of such classes, so values are constant on classes
// and the neighbourhoods below are always available. The only class without
// a neighbourhood of its own is the punctured cylinder around the snake base
// point; it is handled through the base-level arrow of the bisection
// containing it.

#include "steinberg/element.hpp"

#include <span>
#include <vector>

namespace steinberg {

/// An element equal to f whose every term bisection lies inside a member of
/// `region`. Throws PreconditionError unless f is supported in the union.
Element rewrite_within(const Element& f, std::span<const Bisection> region);
Element rewrite_within(const Element& f, const Bisection& region);

/// f restricted to B: equal to f on B and 0 elsewhere. Requires B ⊆ D and
/// f supported in D.
Element restrict_to(const Element& f, const Bisection& b, const Bisection& within);

/// s(K) for K the union of the term bisections of f. Requires f supported in
/// the unit space.
Bisection unit_support_window(const Element& f);

struct Part {
	Element element;
	Bisection assigned;
};

struct Decomposition {
	std::vector<Part> parts;
	Rational epsilon;
	size_t repair_rounds = 0;
};

/// The first-phase summands: f is confined to the cover, each term D is cut
/// into the classes it contains, and each class goes to the first cover
/// member containing it. Parts are supported in their cover members and sum
/// to f, but need not satisfy the norm bound.
std::vector<Element> initial_parts(const Element& f, std::span<const Bisection> cover);

/// Repairs arbitrary parts (part i supported in cover[i], sum equal to f)
/// until ||part_i||_inf <= ||f||_inf + epsilon for every i.
Decomposition repair_parts(const Element& f, std::span<const Bisection> cover,
                           std::vector<Element> parts, const Rational& epsilon);

/// initial_parts followed by repair_parts.
Decomposition bounded_summands(const Element& f, std::span<const Bisection> cover,
                               const Rational& epsilon);

/// M_f = sum of |a_D| over the current term list. Depends on the term list,
/// not only on the function.
Real trivial_bound(const Element& f);

} // namespace steinberg
