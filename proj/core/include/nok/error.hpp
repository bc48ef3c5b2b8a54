#pragma once

#include <stdexcept>
#include <string>

namespace nok {

enum class Errc {
  dim_cap_exceeded,
  dim_mismatch,
  arity_mismatch,
  span_mismatch,
  bad_corank,
  zero_poly,
  dependent_basis,
  empty_generators,
  level_zero_generator,
  not_strongly_admissible,
  not_finitely_generated,
  cone_not_interior,
  ridge_not_trivial,
  empty_level,
  empty_component,
  order_mismatch,
  m_not_one,
  truncation_exceeded,
  complexity_cap,
  input_parse,
  invalid_input,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nok
