#pragma once

#include <stdexcept>
#include <string>

namespace sbs {

enum class errc {
  closure_overflow,
  not_invertible,
  subgroup_overflow,
  not_normal,
  not_nested,
  unknown_name,
  bad_parameter,
  unsupported_irrep,
  not_a_point_group,
  not_symmetry_breaking,
  not_partial_breaking,
  not_partial_sbs,
  infinite_normalizer,
  symbolic_group,
  group_not_closed,
  hypothesis_unmet,
  relator_violation,
  invalid_input,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sbs
