#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringforge {

// Error taxonomy shared by the library and the CLI. Codes map 1:1 to the
// structured error names emitted in reports.
enum class errc {
  not_prime,
  reducible_modulus,
  zero_ring,
  empty_product,
  ring_mismatch,
  non_monic_divisor,
  not_a_product,
  not_a_field,
  not_vanishing,
  wrong_ring_shape,
  budget_exceeded,
  not_found_within,
  invalid_a,
  too_large,
  invalid_non_root_set,
  not_squarefree,
  coefficient_out_of_ring,
  semantic_error,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Parse failures carry the byte offset of the offending position.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(errc::parse_error, message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Aborted searches report the largest exponent whose coefficient space was
// fully excluded before the abort.
class SearchError : public Error {
 public:
  SearchError(errc code, const std::string& message, unsigned largest_excluded)
      : Error(code, message), largest_excluded_(largest_excluded) {}
  unsigned largest_excluded() const { return largest_excluded_; }

 private:
  unsigned largest_excluded_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ringforge
