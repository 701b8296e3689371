#pragma once

// Elements of the Steinberg algebra A(G): finite formal sums
//     f = sum_B a_B 1_B
// of indicators of compact open bisections with exact complex coefficients.
//
// There is no normal form. In a non-Hausdorff groupoid an element need not
// be a combination over disjoint bisections, so equality is pointwise and is
// decided on the test points of the bisections involved.

#include "steinberg/groupoid.hpp"
#include "steinberg/number.hpp"

#include <span>
#include <vector>

namespace steinberg {

struct Term {
	Complex coeff;
	Bisection bisection;
};

class Element {
  public:
	/// Validates every bisection against the model.
	Element(GroupoidPtr model, std::vector<Term> terms = {});
	static Element indicator(GroupoidPtr model, Bisection b, Complex coeff = 1);

	const GroupoidPtr& model() const { return model_; }
	const Groupoid& groupoid() const { return *model_; }
	const std::vector<Term>& terms() const { return terms_; }
	std::vector<Bisection> family() const;

	/// Same function: equal bisections merged (first occurrence keeps its
	/// position), zero coefficients and empty bisections dropped.
	Element compacted() const;

  private:
	GroupoidPtr model_;
	std::vector<Term> terms_;
};

/// Throws ModelMismatch unless f and g share a model.
void require_same_model(const Element& f, const Element& g);

Element add(const Element& f, const Element& g);
Element scale(const Complex& c, const Element& f);
inline Element operator+(const Element& f, const Element& g) { return add(f, g); }
inline Element operator-(const Element& f, const Element& g) { return add(f, scale(-1, g)); }
inline Element operator*(const Complex& c, const Element& f) { return scale(c, f); }

/// sum_B sum_D a_B b_D 1_{BD}, compacted.
Element convolve(const Element& f, const Element& g);
/// sum_B conj(a_B) 1_{B^{-1}}.
Element involute(const Element& f);

Complex evaluate(const Element& f, const TestPoint& p);
bool equals(const Element& f, const Element& g);

struct SupportClass {
	TestPoint representative;
	std::string region; // "e_uv", "cyl(01)", "cyl(00)\{base}", "base", "head(1)"
	bool open = true;   // whether this class is an open subset of G
};

/// supp°(f) = {f != 0} as a union of test-point classes, plus whether that
/// union is open in G (it need not be when G is not Hausdorff).
struct SupportDescription {
	std::vector<SupportClass> classes;
	bool open = true;
};

SupportDescription open_support(const Element& f);
/// Every class where f != 0 lies in the union of `target`.
bool is_supported_in(const Element& f, std::span<const Bisection> target);
bool is_supported_in(const Element& f, const Bisection& target);
bool is_supported_in_units(const Element& f);
/// True when supp°(f) fits inside one compact open bisection.
bool is_supported_in_some_bisection(const Element& f);

Modulus sup_norm(const Element& f);
/// sup over units x of max(sum_{s(γ)=x} |f(γ)|, sum_{r(γ)=x} |f(γ)|).
Real i_norm(const Element& f);

struct Spectrum {
	std::vector<Complex> values; // sorted, unique
};

/// The spectrum of f in the unital algebra A(U), U a compact open unit region:
/// the values attained by f on U (0 included if f vanishes somewhere on U).
Spectrum unit_spectrum(const Element& f, const Bisection& window);
Modulus spectral_radius(const Element& f, const Bisection& window);

} // namespace steinberg
