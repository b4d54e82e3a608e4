#pragma once

#include <stdexcept>
#include <string>

namespace flagtke {

enum class Errc {
  invalid_type,       // unknown series or rank out of range
  invalid_index,      // node index out of range or duplicated
  not_a_flag,         // theta is all of Sigma
  not_a_root,
  dimension_mismatch,
  non_positive_class,
  parse,
  internal,           // a self-check failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flagtke
