#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace steinberg {

/// A clopen subset of the Cantor set {0,1}^N, stored as a finite union of
/// cylinders. A word w stands for every sequence with prefix w; the empty word
/// is the whole space. The word list is kept canonical: sorted, prefix-free,
/// and with no sibling pair w0, w1 left unmerged. Two sets are equal as point
/// sets iff their canonical word lists are equal.
class ClopenSet {
  public:
	ClopenSet() = default;
	/// Canonicalizes; throws ParseError on characters other than '0'/'1'.
	explicit ClopenSet(std::vector<std::string> words);

	static ClopenSet full() { return ClopenSet({std::string()}); }
	static ClopenSet cylinder(std::string word) { return ClopenSet({std::move(word)}); }

	const std::vector<std::string>& words() const { return words_; }
	bool empty() const { return words_.empty(); }
	/// Longest word; 0 for the empty set and the full space.
	size_t depth() const;

	/// Membership of the eventually-zero sequence w000...
	bool contains_eventually_zero(std::string_view w) const;
	/// Membership of 000... (the base point).
	bool contains_zero() const { return contains_eventually_zero({}); }

	bool subset_of(const ClopenSet& other) const;

	friend ClopenSet operator&(const ClopenSet& a, const ClopenSet& b);
	friend ClopenSet operator|(const ClopenSet& a, const ClopenSet& b);
	friend ClopenSet operator-(const ClopenSet& a, const ClopenSet& b);
	friend bool operator==(const ClopenSet&, const ClopenSet&) = default;
	friend auto operator<=>(const ClopenSet&, const ClopenSet&) = default;

	/// "clopen("0","11")" style listing, as used in element files.
	std::string to_string() const;

  private:
	std::vector<std::string> words_;
};

/// Canonical form of an arbitrary word list (exposed for property tests).
std::vector<std::string> canonical_words(std::vector<std::string> words);

} // namespace steinberg
