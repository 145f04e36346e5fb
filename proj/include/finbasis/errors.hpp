#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace finbasis {

// Base for all domain errors thrown on violated preconditions. Checks whose
// negative outcome is an ordinary result report it through verdict structs
// (SubsetVerdict, BasisReport, UnionCheckResult) instead of throwing.
class Error : public std::runtime_error {
public:
  explicit Error(std::string what) : std::runtime_error(std::move(what)) {}
};

// Carries the element (or token) that triggered the violation.
class ElementError : public Error {
public:
  ElementError(const char* kind, std::string element)
      : Error(std::string(kind) + ": " + element), element_(std::move(element)) {}

  const std::string& element() const { return element_; }

private:
  std::string element_;
};

struct SubsetEscapesUniverse final : ElementError {
  explicit SubsetEscapesUniverse(std::string e)
      : ElementError("subset escapes universe", std::move(e)) {}
};

struct SubsetEscapesCarrier final : ElementError {
  explicit SubsetEscapesCarrier(std::string e)
      : ElementError("subset escapes carrier", std::move(e)) {}
};

struct SubsetEscapesBasis final : ElementError {
  explicit SubsetEscapesBasis(std::string e)
      : ElementError("subset escapes basis", std::move(e)) {}
};

struct ElementNotInUniverse final : ElementError {
  explicit ElementNotInUniverse(std::string e)
      : ElementError("element not in universe", std::move(e)) {}
};

struct ElementNotInBasis final : ElementError {
  explicit ElementNotInBasis(std::string e)
      : ElementError("element not in basis", std::move(e)) {}
};

struct UnknownElement final : ElementError {
  explicit UnknownElement(std::string e)
      : ElementError("unknown element", std::move(e)) {}
};

struct NotCovered final : ElementError {
  explicit NotCovered(std::string e)
      : ElementError("element lies in no member set", std::move(e)) {}
};

struct IdealNotInCompletion final : ElementError {
  explicit IdealNotInCompletion(std::string label)
      : ElementError("ideal not in completion", std::move(label)) {}
};

class NotAFinitaryBasis final : public Error {
public:
  explicit NotAFinitaryBasis(std::string detail)
      : Error("not a finitary basis: " + std::move(detail)) {}
};

class IoFailure final : public Error {
public:
  explicit IoFailure(std::string path)
      : Error("i/o failure: " + path), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace finbasis
