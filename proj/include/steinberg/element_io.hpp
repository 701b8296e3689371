#pragma once

// Element files (.elt) and element expressions.
//
//     groupoid: snake2.grpd            # relative to the .elt file
//     bisection G0 = clopen("") head unit
//     bisection B  = clopen("") head 1
//     element f = 1*G0 - 1*B
//
// Finite models use `bisection B = arrows(e_uv, e_vu)`. Coefficients follow
// `[-]a[.b][±c[.d]i]` and may also be fractions such as 1/3; a bare name
// stands for 1*name.

#include "steinberg/element.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace steinberg {

struct ElementDocument {
	std::string groupoid_path; // resolved against the .elt location
	GroupoidPtr model;
	std::vector<std::pair<std::string, Bisection>> bisections;
	std::vector<std::pair<std::string, Element>> elements;

	const Bisection* find_bisection(std::string_view name) const;
	const Element* find_element(std::string_view name) const;
	/// Throw ParseError naming the unknown entry.
	const Bisection& bisection(std::string_view name) const;
	const Element& element(std::string_view name) const;
};

/// Parses an element document over a known model; a `groupoid:` line, if
/// present, is recorded but not loaded.
ElementDocument parse_elements(std::string_view text, GroupoidPtr model);

/// Reads a .elt file and the groupoid file it names.
ElementDocument load_element_file(const std::filesystem::path& path);

Bisection parse_bisection(const Groupoid& g, std::string_view text);

/// A complete .elt document defining `elements`, reusing the bisection names
/// of `names` where they match and inventing b1, b2, ... otherwise.
std::string format_document(const std::string& groupoid_path,
                            const std::vector<std::pair<std::string, Element>>& elements,
                            const std::vector<std::pair<std::string, Bisection>>& names = {});

/// Right-hand side of an `element` line for f, given names for its bisections.
std::string format_terms(const Element& f, const std::vector<std::pair<std::string, Bisection>>& names);

/// Evaluates `f ** g`, `adj(f)`, `+`, `-`, scalar `*` and parentheses over the
/// elements (and bisections, read as indicators) of a document.
Element evaluate_expression(const ElementDocument& doc, std::string_view expr);

} // namespace steinberg
