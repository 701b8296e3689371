#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

/// Base of every error the library throws. Each kind maps to a CLI exit code.
class Error : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
	virtual int exit_code() const { return 2; }
};

/// Malformed text: groupoid files, element files, expressions, points.
class ParseError : public Error {
  public:
	using Error::Error;
};

/// A groupoid file that parses but violates a groupoid axiom.
class AxiomError : public Error {
  public:
	AxiomError(std::string property, const std::string& what)
	    : Error(property + ": " + what), property_(std::move(property))
	{}
	int exit_code() const override { return 3; }
	const std::string& property() const { return property_; }

  private:
	std::string property_;
};

class IoError : public Error {
  public:
	using Error::Error;
	int exit_code() const override { return 4; }
};

/// Operands built over different groupoid models.
class ModelMismatch : public Error {
  public:
	ModelMismatch() : Error("operands belong to different groupoid models") {}
	explicit ModelMismatch(const std::string& what) : Error(what) {}
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
  public:
	using Error::Error;
};

/// A set that is not a compact open bisection of the model (e.g. the
/// intersection of two snake bisections with different heads at the base).
class NotRepresentable : public Error {
  public:
	using Error::Error;
};

/// A fiber over the base point of the Z-headed snake was needed in full.
class InfiniteFiber : public Error {
  public:
	InfiniteFiber()
	    : Error("fiber over the base point is infinite (Z heads); use the symbol norm instead")
	{}
};

} // namespace steinberg
