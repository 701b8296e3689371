#pragma once

// Brute-force reference computations used to cross-check the library. They
// read raw term lists and composition tables directly and do not call the
// evaluation, convolution or support code they are meant to check.

#include "steinberg/element.hpp"

#include <complex>
#include <vector>

namespace steinberg::oracle {

/// (f*g)(γ) = sum over αβ = γ of f(α) g(β), for every arrow γ (indexed by
/// ArrowId). Finite models only.
std::vector<Complex> brute_convolve(const Element& f, const Element& g);

/// The arrows where f is nonzero, by exhaustive scan. Finite models only.
std::vector<ArrowId> brute_support(const Element& f);

/// f(γ) for every arrow, summed straight from the term list.
std::vector<Complex> brute_values(const Element& f);

inline constexpr size_t kDefaultCap = 512;

class DenseMatrix {
  public:
	explicit DenseMatrix(size_t n, size_t cap = kDefaultCap);
	size_t size() const { return n_; }
	std::complex<double>& operator()(size_t r, size_t c) { return a_[r * n_ + c]; }
	const std::complex<double>& operator()(size_t r, size_t c) const { return a_[r * n_ + c]; }

  private:
	size_t n_;
	std::vector<std::complex<double>> a_;
};

struct PowerIteration {
	double tolerance = 1e-10;
	size_t max_iterations = 100000;
};

/// Largest singular value by power iteration on M*M. Two fixed start
/// vectors are run (all ones, and a fixed irrational-phase vector) and the
/// larger estimate is returned.
double matrix_norm(const DenseMatrix& m, const PowerIteration& opts = {});

} // namespace steinberg::oracle
