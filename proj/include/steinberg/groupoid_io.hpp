#pragma once

#include "steinberg/groupoid.hpp"

#include <filesystem>
#include <string_view>

namespace steinberg {

/// Parses a .grpd document without checking the groupoid axioms. Malformed
/// text raises ParseError; conflicting table entries raise AxiomError.
Groupoid parse_groupoid(std::string_view text);

/// Axiom violations of a parsed model (always empty for snakes).
std::vector<AxiomViolation> axiom_report(const Groupoid& g);

/// parse_groupoid followed by an exhaustive axiom check; the first violation
/// is raised as AxiomError naming the property and the offending arrows.
GroupoidPtr load_groupoid(std::string_view text);
GroupoidPtr load_groupoid_file(const std::filesystem::path& path);

/// Whole-file read; IoError on failure.
std::string read_text_file(const std::filesystem::path& path);

} // namespace steinberg
