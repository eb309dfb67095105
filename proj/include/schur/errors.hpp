#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schur {

// Base of every error the toolkit throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed presentation text or Cayley-table file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An order, coset or homology cap was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Coset enumeration ran out of cosets before the table closed.
class EnumerationError : public SizeError {
 public:
  using SizeError::SizeError;
};

// Input outside the domain of a formula (non p-power, m < 1, k = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A table that is not a group, or a subgroup that is not what it claims.
class InvalidGroupError : public Error {
 public:
  using Error::Error;
};

// An internal identity failed (negative t, nonzero free rank of H2, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Catalog integrity: bad manifest data, or an entry that does not
// instantiate to its declared order.
class CatalogError : public Error {
 public:
  using Error::Error;
};

// Unknown catalog id, or a (p, n) family the catalog does not cover.
class NotCatalogued : public Error {
 public:
  using Error::Error;
};

}  // namespace schur
