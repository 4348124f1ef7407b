#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace variform {

enum class Errc {
  invalid_degree,
  invalid_index,
  dimension_mismatch,
  map_evaluation,
  off_submanifold,
  unsupported_degree,
  zero_vector,
  pivot_degenerate,
  not_in_chart,
  immersion_failure,
  invalid_partition,
  orientation_violation,
  slit_domain,
  evaluation,
  invalid_argument,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace variform
