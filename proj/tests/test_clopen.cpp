#include "steinberg/clopen.hpp"
#include "steinberg/errors.hpp"

#include <doctest.h>

#include <random>

using namespace steinberg;

namespace {

// Membership of w000... in the union of cylinders, straight from a raw word list.
bool raw_contains(const std::vector<std::string>& words, const std::string& w)
{
	for (auto const& c : words) {
		bool ok = true;
		for (size_t k = 0; k < c.size() && ok; ++k)
			ok = c[k] == (k < w.size() ? w[k] : '0');
		if (ok)
			return true;
	}
	return false;
}

std::vector<std::string> all_words(size_t d)
{
	std::vector<std::string> out{""};
	for (size_t k = 0; k < d; ++k) {
		std::vector<std::string> next;
		for (auto const& w : out) {
			next.push_back(w + '0');
			next.push_back(w + '1');
		}
		out = std::move(next);
	}
	return out;
}

std::vector<std::string> random_words(std::mt19937_64& rng)
{
	std::vector<std::string> w(rng() % 6);
	for (auto& s : w)
		for (size_t k = 0, n = rng() % 5; k < n; ++k)
			s += rng() % 2 ? '1' : '0';
	return w;
}

} // namespace

TEST_CASE("canonical forms")
{
	CHECK(ClopenSet({"0", "1"}) == ClopenSet::full());
	CHECK(ClopenSet({"00", "01", "1"}) == ClopenSet::full());
	CHECK(ClopenSet({"0", "01"}).words() == std::vector<std::string>{"0"});
	CHECK(ClopenSet({"110", "111", "10"}).words() == std::vector<std::string>{"1"});
	CHECK(ClopenSet(std::vector<std::string>{}).empty());
	CHECK(ClopenSet::full().depth() == 0);
	CHECK(ClopenSet({"011", "1"}).depth() == 3);
	CHECK_THROWS_AS(ClopenSet({"012"}), ParseError);
	CHECK(ClopenSet({"01", "1"}).to_string() == "clopen(\"01\",\"1\")");
}

TEST_CASE("base point membership")
{
	CHECK(ClopenSet::full().contains_zero());
	CHECK(ClopenSet::cylinder("000").contains_zero());
	CHECK_FALSE(ClopenSet::cylinder("001").contains_zero());
	CHECK(ClopenSet::cylinder("001").contains_eventually_zero("001"));
	CHECK(ClopenSet::cylinder("1").contains_eventually_zero("10"));
}

TEST_CASE("Boolean operations agree with raw membership")
{
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 400; ++trial) {
		auto wa = random_words(rng), wb = random_words(rng);
		ClopenSet a(wa), b(wb);
		CHECK(ClopenSet(a.words()) == a);
		bool same = true, sub = true;
		for (auto const& w : all_words(5)) {
			bool x = raw_contains(wa, w), y = raw_contains(wb, w);
			CHECK(a.contains_eventually_zero(w) == x);
			CHECK((a & b).contains_eventually_zero(w) == (x && y));
			CHECK((a | b).contains_eventually_zero(w) == (x || y));
			CHECK((a - b).contains_eventually_zero(w) == (x && !y));
			same &= x == y;
			sub &= !x || y;
		}
		CHECK((a == b) == same);
		CHECK(a.subset_of(b) == sub);
	}
}

TEST_CASE("canonical_words matches the constructor")
{
	CHECK(canonical_words({"1", "0"}) == std::vector<std::string>{""});
	CHECK(canonical_words({"10", "0", "10"}) == ClopenSet({"0", "10"}).words());
}
