#pragma once

// Concrete ample groupoids and the inverse semigroup of their compact open
// bisections.
//
// Two backends are provided:
//   * FiniteGroupoid: a finite discrete groupoid given by its composition
//     table. Every subset is compact open, so a bisection is any arrow set on
//     which source and range are injective.
//   * SnakeGroupoid: the group bundle over the Cantor set whose only
//     nontrivial isotropy group sits over the base point 000..., and is
//     either Z/n or Z. Its arrows over the base point are the heads
//     gamma_k, with gamma_0 the base point itself.
//
// Snake bisections are encoded as a pair (C, h): C a clopen set of units and
// h a head index. (C, 0) denotes C; for h != 0 the base point must lie in C,
// and (C, h) denotes (C minus base) plus gamma_h. Every compact open
// bisection has this form: all arrows are loops, a bisection meets the base
// fiber at most once, and an open set containing gamma_h contains a
// punctured cylinder around the base, so compactness forces a cylinder word
// covering the base to be part of C. Nothing else is needed to close off the
// punctured neighbourhood.

#include "steinberg/clopen.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace steinberg {

using ArrowId = std::uint32_t;
inline constexpr ArrowId kNoArrow = static_cast<ArrowId>(-1);

struct AxiomViolation {
	std::string property; // e.g. "associativity", "inverse"
	std::string message;
};

class FiniteGroupoid {
  public:
	struct Arrow {
		std::string name;
		ArrowId src = kNoArrow;
		ArrowId rng = kNoArrow;
		ArrowId inv = kNoArrow;
	};

	// Unchecked builder interface; run check_axioms() before trusting the result.
	ArrowId add_unit(std::string name);
	ArrowId add_arrow(std::string name, ArrowId src, ArrowId rng);
	/// Records a*b = c. Returns false if a different product was already set.
	bool set_compose(ArrowId a, ArrowId b, ArrowId c);
	bool set_inverse(ArrowId a, ArrowId b);
	void add_alias(std::string alias, ArrowId a);
	/// Fills in the products with units and the inverses of units.
	/// Returns the first conflicting entry, if any.
	std::optional<std::string> complete_unit_laws();

	size_t size() const { return arrows_.size(); }
	const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
	const std::string& name(ArrowId a) const { return arrows_.at(a).name; }
	bool is_unit(ArrowId a) const { return units_.at(a); }
	std::vector<ArrowId> units() const;
	/// The product a*b, defined exactly when src(a) = rng(b).
	std::optional<ArrowId> compose(ArrowId a, ArrowId b) const
	{
		ArrowId c = table_.at(a).at(b);
		return c == kNoArrow ? std::nullopt : std::optional<ArrowId>(c);
	}
	std::optional<ArrowId> find(std::string_view name) const;

  private:
	std::vector<Arrow> arrows_;
	std::vector<bool> units_;
	std::vector<std::vector<ArrowId>> table_;
	std::map<std::string, ArrowId, std::less<>> names_;
};

/// Exhaustive check of the groupoid axioms. Empty result means valid.
std::vector<AxiomViolation> check_axioms(const FiniteGroupoid& g, size_t max_reports = 16);

class SnakeGroupoid {
  public:
	/// order >= 2 for Z/order heads; std::nullopt for Z heads.
	explicit SnakeGroupoid(std::optional<std::int64_t> order);

	bool integer_heads() const { return !order_; }
	std::optional<std::int64_t> order() const { return order_; }
	/// Reduces a head index into the head group (mod n for cyclic heads).
	std::int64_t normalize(std::int64_t k) const;

  private:
	std::optional<std::int64_t> order_;
};

class Groupoid {
  public:
	explicit Groupoid(FiniteGroupoid g) : impl_(std::move(g)) {}
	explicit Groupoid(SnakeGroupoid s) : impl_(std::move(s)) {}

	const FiniteGroupoid* as_finite() const { return std::get_if<FiniteGroupoid>(&impl_); }
	const SnakeGroupoid* as_snake() const { return std::get_if<SnakeGroupoid>(&impl_); }
	const FiniteGroupoid& finite() const;
	const SnakeGroupoid& snake() const;
	/// "finite", "snake Z/n" or "snake Z".
	std::string describe() const;

  private:
	std::variant<FiniteGroupoid, SnakeGroupoid> impl_;
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

/// The pair groupoid on the given units; arrows are named e_<a><b>.
FiniteGroupoid make_pair_groupoid(const std::vector<std::string>& units);
/// A group given by its multiplication table (row g lists g*h in element order).
FiniteGroupoid make_group(const std::vector<std::string>& elements,
                          const std::vector<std::vector<std::string>>& table);
FiniteGroupoid make_cyclic_group(int order, const std::string& prefix = "g");

// ---------------------------------------------------------------------------
// Points

/// A single element of G, used as the carrier of exact evaluation.
struct TestPoint {
	enum class Kind { Arrow, CantorUnit, Base, Head };
	Kind kind = Kind::Base;
	ArrowId arrow = kNoArrow; // Kind::Arrow
	std::string word;         // Kind::CantorUnit, no trailing zeros, not all zero
	std::int64_t head = 0;    // Kind::Head, nonzero and normalized

	static TestPoint of_arrow(ArrowId a) { return {Kind::Arrow, a, {}, 0}; }
	/// The unit w000...; an all-zero word is the base point.
	static TestPoint cantor_unit(std::string w);
	static TestPoint base() { return {}; }
	static TestPoint of_head(const SnakeGroupoid& s, std::int64_t k);

	friend bool operator==(const TestPoint&, const TestPoint&) = default;
	friend auto operator<=>(const TestPoint&, const TestPoint&) = default;
};

bool is_unit(const Groupoid& g, const TestPoint& p);
TestPoint source(const Groupoid& g, const TestPoint& p);
TestPoint range(const Groupoid& g, const TestPoint& p);
TestPoint inverse(const Groupoid& g, const TestPoint& p);
/// a*b when source(a) = range(b).
std::optional<TestPoint> compose(const Groupoid& g, const TestPoint& a, const TestPoint& b);

/// `e_uv`, `unit:01`, `base`, `head:-2`.
std::string format_point(const Groupoid& g, const TestPoint& p);
TestPoint parse_point(const Groupoid& g, std::string_view text);

/// G_x = s^{-1}(x). Over the base point of the Z-headed snake this is
/// infinite; it can then only be enumerated in the order base, 1, -1, 2, ...
class Fiber {
  public:
	Fiber(std::vector<TestPoint> points, bool integer_heads)
	    : points_(std::move(points)), integer_heads_(integer_heads)
	{}
	bool is_finite() const { return !integer_heads_; }
	/// All points; throws InfiniteFiber if the fiber is infinite.
	const std::vector<TestPoint>& points() const;
	std::vector<TestPoint> take(size_t n) const;

  private:
	std::vector<TestPoint> points_;
	bool integer_heads_ = false;
};

Fiber fiber(const Groupoid& g, const TestPoint& x);

// ---------------------------------------------------------------------------
// Bisections

struct FiniteBisection {
	std::vector<ArrowId> arrows; // sorted, unique
	friend bool operator==(const FiniteBisection&, const FiniteBisection&) = default;
	friend auto operator<=>(const FiniteBisection&, const FiniteBisection&) = default;
};

struct SnakeBisection {
	ClopenSet clopen;
	std::int64_t head = 0; // 0 is the unit choice
	friend bool operator==(const SnakeBisection&, const SnakeBisection&) = default;
	friend auto operator<=>(const SnakeBisection&, const SnakeBisection&) = default;
};

class Bisection {
  public:
	Bisection() = default;
	static Bisection of_arrows(std::vector<ArrowId> arrows);
	/// Strict encoding: throws NotRepresentable if head != 0 and the base
	/// point is not in C.
	static Bisection of_snake(const SnakeGroupoid& s, ClopenSet c, std::int64_t head);
	/// Drops the head when the base point is not in C.
	static Bisection snake_canonical(const SnakeGroupoid& s, ClopenSet c, std::int64_t head);

	const FiniteBisection* as_finite() const { return std::get_if<FiniteBisection>(&impl_); }
	const SnakeBisection* as_snake() const { return std::get_if<SnakeBisection>(&impl_); }
	bool empty() const;

	friend bool operator==(const Bisection&, const Bisection&) = default;
	friend auto operator<=>(const Bisection&, const Bisection&) = default;

  private:
	std::variant<FiniteBisection, SnakeBisection> impl_;
};

/// Throws if B is not a valid compact open bisection of g.
void validate(const Groupoid& g, const Bisection& b);

Bisection product(const Groupoid& g, const Bisection& b, const Bisection& d);
Bisection inverse(const Groupoid& g, const Bisection& b);
/// s(B) and r(B) as bisections consisting of units.
Bisection source_region(const Groupoid& g, const Bisection& b);
Bisection range_region(const Groupoid& g, const Bisection& b);
Bisection unit_space(const Groupoid& g);
Bisection empty_bisection(const Groupoid& g);
bool is_unit_region(const Groupoid& g, const Bisection& b);
/// Union of unit regions (always a unit region again).
Bisection unit_region_union(const Groupoid& g, std::span<const Bisection> regions);

bool contains(const Groupoid& g, const Bisection& b, const TestPoint& p);
bool subset_of(const Groupoid& g, const Bisection& b, const Bisection& d);
/// B ⊆ C_1 ∪ ... ∪ C_n, decided on test points.
bool subset_of_union(const Groupoid& g, const Bisection& b, std::span<const Bisection> cover);
/// Intersection and difference; throw NotRepresentable when the result is not
/// compact open (two snake bisections disagreeing on the head at the base).
Bisection intersection(const Groupoid& g, const Bisection& b, const Bisection& d);
Bisection difference(const Groupoid& g, const Bisection& b, const Bisection& d);

/// D_1' = D_1, D_i' = D_i minus (D_1 ∪ ... ∪ D_{i-1}), in input order.
/// Every member must lie inside `within`.
std::vector<Bisection> disjointify(const Groupoid& g, std::span<const Bisection> cover,
                                   const Bisection& within);

/// Right-hand side of a `bisection` line: `arrows(a,b)` or `clopen("0") head 1`.
std::string format_bisection(const Groupoid& g, const Bisection& b);

// ---------------------------------------------------------------------------
// Test points

/// A finite set of points separating every pair of linear combinations of
/// indicators of the family. Finite model: the arrows appearing in the family.
/// Snake: with d = max(1, longest cylinder word), the units w000... for
/// |w| = d, w != 0^d, the punctured representative 0^d 1 000..., the base
/// point, and the heads used by the family. An empty snake family yields the
/// base point only.
std::vector<TestPoint> enumerate_test_points(const Groupoid& g, std::span<const Bisection> family);

/// Snake working depth max(1, longest word) of a family.
size_t class_depth(std::span<const Bisection> family);
/// The snake classes at a given depth: words, punctured representative, base,
/// and the given heads.
std::vector<TestPoint> snake_class_points(const SnakeGroupoid& s, size_t depth,
                                          std::span<const std::int64_t> heads);
/// True for the snake point 0^depth 1 000..., the representative of the
/// punctured cylinder around the base point.
bool is_punctured_representative(const TestPoint& p, size_t depth);
/// The smallest compact open bisection around a class representative p at the
/// given depth: {p} in a finite model; cyl(w) for a word class; (cyl(0^d), k)
/// for the base point or head k. The punctured class has no compact
/// neighbourhood of this kind and yields std::nullopt; it is always covered by
/// the neighbourhood of the base-level arrow of any bisection containing it.
std::optional<Bisection> class_neighbourhood(const Groupoid& g, const TestPoint& p, size_t depth);

/// Heads (nonzero) used by a snake family, sorted.
std::vector<std::int64_t> heads_used(std::span<const Bisection> family);

} // namespace steinberg
