#pragma once

// Regular representations π_x(f) on ℓ²(G_x) as exact matrices, the reduced
// norm, the symbol norm for the Z-headed snake, and the norm report that
// brackets the full norm.

#include "steinberg/element.hpp"
#include "steinberg/oracle.hpp"

#include <vector>

namespace steinberg {

/// Exact complex square matrix indexed by a fiber basis.
class FiberOperator {
  public:
	FiberOperator(std::vector<TestPoint> basis);

	const std::vector<TestPoint>& basis() const { return basis_; }
	size_t size() const { return basis_.size(); }
	Complex& at(size_t r, size_t c) { return m_[r * size() + c]; }
	const Complex& at(size_t r, size_t c) const { return m_[r * size() + c]; }

	FiberOperator adjoint() const;
	oracle::DenseMatrix to_dense() const;
	friend FiberOperator operator*(const FiberOperator& a, const FiberOperator& b);
	friend bool operator==(const FiberOperator& a, const FiberOperator& b);

  private:
	std::vector<TestPoint> basis_;
	std::vector<Complex> m_;
};

/// π_x(f): column γ is sum over α in G_{r(γ)} of f(α) δ_{αγ}.
/// Throws PreconditionError if x is not a unit, InfiniteFiber for the base
/// point of the Z-headed snake.
FiberOperator regular_rep(const Element& f, const TestPoint& x);

struct NormValue {
	double value = 0;
	double tolerance = 0;
};

inline constexpr double kNormTolerance = 1e-10;

/// ||π_x(f)||.
NormValue fiber_norm(const Element& f, const TestPoint& x, double tolerance = kNormTolerance);

/// The units over which the reduced norm is taken: every unit of a finite
/// model, one unit per test-point class of a snake.
std::vector<TestPoint> representative_units(const Element& f);

/// max of fiber_norm over representative_units(f). Throws InfiniteFiber for
/// the Z-headed snake.
NormValue reduced_norm(const Element& f, double tolerance = kNormTolerance);

inline constexpr size_t kSymbolGrid = size_t{1} << 16;

/// Z-headed snake only: max over the 2^16-point circle grid of
/// |sum_k f(γ_k) e^{ikθ}| (γ_0 the base point), with the one-sided error
/// bound grid step * sum_k |k f(γ_k)|.
NormValue symbol_norm(const Element& f);

struct NormReport {
	Modulus sup;
	Real inorm;
	NormValue reduced;
	Real mf;
	bool bisection_bound = false; // support inside one bisection
	bool unit_bound = false;      // support inside the unit space
	// The full norm is not computed. It lies in [full_lower, full_upper].
	double full_lower = 0;
	double full_upper = 0;
	bool pinned = false; // the bracket is narrower than the tolerance
};

/// The full norm is pinned when full_upper - reduced <= kPinTolerance.
inline constexpr double kPinTolerance = 1e-8;

/// For the Z-headed snake the reduced norm is the larger of the symbol norm
/// and the values at units off the base point (those fibers are singletons).
NormReport norm_sandwich(const Element& f, double tolerance = kNormTolerance);

} // namespace steinberg
