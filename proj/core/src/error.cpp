#include "variform/error.hpp"

namespace variform {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_degree: return "invalid-degree";
    case Errc::invalid_index: return "invalid-index";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::map_evaluation: return "map-evaluation";
    case Errc::off_submanifold: return "off-submanifold";
    case Errc::unsupported_degree: return "unsupported-degree";
    case Errc::zero_vector: return "zero-vector";
    case Errc::pivot_degenerate: return "pivot-degenerate";
    case Errc::not_in_chart: return "not-in-chart";
    case Errc::immersion_failure: return "immersion-failure";
    case Errc::invalid_partition: return "invalid-partition";
    case Errc::orientation_violation: return "orientation-violation";
    case Errc::slit_domain: return "slit-domain";
    case Errc::evaluation: return "evaluation";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace variform
