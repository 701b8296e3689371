#pragma once

// Randomized property suites. Every property draws from its own generator
// stream seeded by (seed, suite/property), so results do not depend on which
// suites are selected or in which order they run.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace steinberg {

struct PropertyResult {
	std::string suite;
	std::string property;
	size_t cases = 0;
	size_t failures = 0;
	std::string first_failure;

	bool passed() const { return failures == 0; }
};

struct VerifyConfig {
	std::vector<std::string> suites; // axioms, convolution, representation, lemmas
	size_t trials = 100;
	std::uint64_t seed = 0;
	/// Groupoid files whose axioms are checked by the axioms suite.
	std::vector<std::filesystem::path> fixtures;
};

const std::vector<std::string>& suite_names();

/// Runs the selected suites; "all" selects every suite.
std::vector<PropertyResult> run_verify(const VerifyConfig& config);

/// `suite=... property=... cases=N failures=M status=pass|fail`
std::string format_record(const PropertyResult& r);

} // namespace steinberg
