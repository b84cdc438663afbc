#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace socs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A constructor argument or operation parameter violates an invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Malformed input text. Carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Structurally valid input whose fields do not match the document schema.
/// Carries the JSON-pointer-style path of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string field_path)
      : Error(what + " (at " + field_path + ")"),
        field_path_(std::move(field_path)) {}

  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

/// A restriction or slice left no voters behind.
class EmptySubsocietyError : public Error {
 public:
  explicit EmptySubsocietyError(const std::string& what) : Error(what) {}
};

/// A subset enumeration would exceed the configured budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, double required, double budget)
      : Error(what), required_(required), budget_(budget) {}

  double required() const { return required_; }
  double budget() const { return budget_; }

 private:
  double required_;
  double budget_;
};

}  // namespace socs
