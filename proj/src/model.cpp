#include "signet/model.hpp"

#include <algorithm>

#include "signet/error.hpp"

namespace signet {

void LearnConfig::validate() const {
  if (em_sample_size && *em_sample_size == 0) throw Error(ErrorKind::InvalidArgument, "EM sample size must be >= 1");
  if (!(em_tol > 0) || !(ab_tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  if (!(rho_init > 0 && rho_init < 1)) throw Error(ErrorKind::InvalidArgument, "initial rho must be in (0, 1)");
}

std::size_t LearnConfig::sample_size_for(std::size_t num_edges) const {
  return std::min(num_edges, em_sample_size.value_or(5000));
}

void ModelParams::validate() const {
  auto check = [](double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidArgument, std::string(name) + " outside [0, 1]");
  };
  check(rho, "rho");
  check(alpha, "alpha");
  check(beta, "beta");
  check(eta, "eta");
  check(delta_B, "delta_B");
}

}  // namespace signet
