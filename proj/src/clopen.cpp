#include "steinberg/clopen.hpp"

#include "steinberg/errors.hpp"

#include <algorithm>
#include <set>

namespace steinberg {

namespace {

bool is_prefix(std::string_view p, std::string_view w)
{
	return p.size() <= w.size() && w.substr(0, p.size()) == p;
}

// cyl(a) \ cyl(b) for b extending a: the siblings along the path from a to b.
void subtract_extension(const std::string& a, const std::string& b, std::vector<std::string>& out)
{
	for (size_t k = a.size(); k < b.size(); ++k) {
		std::string s = b.substr(0, k);
		s.push_back(b[k] == '0' ? '1' : '0');
		out.push_back(std::move(s));
	}
}

} // namespace

std::vector<std::string> canonical_words(std::vector<std::string> words)
{
	for (auto const& w : words)
		for (char c : w)
			if (c != '0' && c != '1')
				throw ParseError("cylinder word '" + w + "' is not binary");
	std::sort(words.begin(), words.end());
	words.erase(std::unique(words.begin(), words.end()), words.end());

	std::set<std::string> kept;
	const std::string* last = nullptr;
	for (auto const& w : words) {
		if (last && is_prefix(*last, w))
			continue;
		last = &*kept.insert(w).first;
	}

	bool changed = true;
	while (changed) {
		changed = false;
		for (auto it = kept.begin(); it != kept.end(); ++it) {
			if (it->empty())
				continue;
			std::string sibling = *it;
			sibling.back() = sibling.back() == '0' ? '1' : '0';
			if (auto sib = kept.find(sibling); sib != kept.end()) {
				std::string parent = it->substr(0, it->size() - 1);
				kept.erase(sib);
				kept.erase(it);
				kept.insert(std::move(parent));
				changed = true;
				break;
			}
		}
	}
	return {kept.begin(), kept.end()};
}

ClopenSet::ClopenSet(std::vector<std::string> words) : words_(canonical_words(std::move(words))) {}

size_t ClopenSet::depth() const
{
	size_t d = 0;
	for (auto const& w : words_)
		d = std::max(d, w.size());
	return d;
}

bool ClopenSet::contains_eventually_zero(std::string_view w) const
{
	for (auto const& c : words_) {
		bool match = true;
		for (size_t k = 0; k < c.size() && match; ++k) {
			char x = k < w.size() ? w[k] : '0';
			match = x == c[k];
		}
		if (match)
			return true;
	}
	return false;
}

bool ClopenSet::subset_of(const ClopenSet& other) const { return (*this - other).empty(); }

ClopenSet operator&(const ClopenSet& a, const ClopenSet& b)
{
	std::vector<std::string> out;
	for (auto const& x : a.words_)
		for (auto const& y : b.words_) {
			if (is_prefix(x, y))
				out.push_back(y);
			else if (is_prefix(y, x))
				out.push_back(x);
		}
	return ClopenSet(std::move(out));
}

ClopenSet operator|(const ClopenSet& a, const ClopenSet& b)
{
	std::vector<std::string> out = a.words_;
	out.insert(out.end(), b.words_.begin(), b.words_.end());
	return ClopenSet(std::move(out));
}

ClopenSet operator-(const ClopenSet& a, const ClopenSet& b)
{
	std::vector<std::string> current = a.words_;
	for (auto const& y : b.words_) {
		std::vector<std::string> next;
		for (auto const& x : current) {
			if (is_prefix(y, x))
				continue; // x inside y
			if (is_prefix(x, y))
				subtract_extension(x, y, next);
			else
				next.push_back(x);
		}
		current = std::move(next);
	}
	return ClopenSet(std::move(current));
}

std::string ClopenSet::to_string() const
{
	std::string s = "clopen(";
	for (size_t k = 0; k < words_.size(); ++k) {
		if (k)
			s += ",";
		s += "\"" + words_[k] + "\"";
	}
	return s + ")";
}

} // namespace steinberg
