#include "signet/estimators.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "signet/error.hpp"
#include "signet/metrics.hpp"

namespace signet {
namespace {

constexpr std::size_t kCompensatedThreshold = 100'000;

// Neumaier summation; plain accumulation below the threshold.
class Accumulator {
 public:
  explicit Accumulator(bool compensated) : compensated_(compensated) {}

  void add(double x) {
    if (!compensated_) {
      sum_ += x;
      return;
    }
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) correction_ += (sum_ - t) + x;
    else correction_ += (x - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + correction_; }

 private:
  bool compensated_;
  double sum_ = 0.0;
  double correction_ = 0.0;
};

struct DegreeMoments {
  double n = 0;
  double m = 0;
  double avg_d = 0;
  double avg_d2 = 0;

  // (avg(d^2) - avg(d)) / (avg(d) M N (N - 1))
  double pair_coefficient() const { return (avg_d2 - avg_d) / (avg_d * m * n * (n - 1.0)); }
};

DegreeMoments check_and_measure(std::span<const std::uint64_t> d, std::uint64_t m,
                                std::size_t min_vertices, std::uint64_t min_edges) {
  if (d.size() < min_vertices) {
    throw Error(ErrorKind::InvalidArgument, "need at least " + std::to_string(min_vertices) + " vertices");
  }
  if (m < min_edges) {
    throw Error(ErrorKind::InvalidArgument, "need at least " + std::to_string(min_edges) + " edges");
  }
  std::uint64_t sum = 0;
  double sum_sq = 0;
  for (const auto x : d) {
    sum += x;
    sum_sq += static_cast<double>(x) * static_cast<double>(x);
  }
  if (sum == 0) throw Error(ErrorKind::DegenerateDegrees, "all degrees are zero");
  if (sum != 2 * m) {
    throw Error(ErrorKind::InvalidArgument,
                "degree sum " + std::to_string(sum) + " != 2M = " + std::to_string(2 * m));
  }
  DegreeMoments mom;
  mom.n = static_cast<double>(d.size());
  mom.m = static_cast<double>(m);
  mom.avg_d = static_cast<double>(sum) / mom.n;
  mom.avg_d2 = sum_sq / mom.n;
  return mom;
}

double wedge_weight(std::uint64_t d) { return static_cast<double>(d) * (static_cast<double>(d) - 1.0); }

double excess(std::uint64_t d) { return d > 0 ? static_cast<double>(d) - 1.0 : 0.0; }

}  // namespace

std::vector<double> suffix_degree_sums(std::span<const std::uint64_t> degrees) {
  std::vector<double> s(degrees.size(), 0.0);
  for (std::size_t k = degrees.size(); k-- > 1;) s[k - 1] = s[k] + static_cast<double>(degrees[k]);
  return s;
}

double delta_random_fast(std::span<const std::uint64_t> degrees, std::uint64_t num_edges) {
  const auto mom = check_and_measure(degrees, num_edges, 2, 1);
  const auto s = suffix_degree_sums(degrees);
  Accumulator acc(degrees.size() > kCompensatedThreshold);
  for (std::size_t k = 0; k + 1 < degrees.size(); ++k) acc.add(static_cast<double>(degrees[k]) * s[k]);
  return mom.pair_coefficient() * acc.value();
}

double delta_random_exact(std::span<const std::uint64_t> degrees, std::uint64_t num_edges) {
  const auto mom = check_and_measure(degrees, num_edges, 2, 1);
  const std::size_t n = degrees.size();
  const double two_m = 2.0 * mom.m;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double common = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        common += wedge_weight(degrees[l]) / two_m;
      }
      total += static_cast<double>(degrees[i]) * static_cast<double>(degrees[j]) / two_m * common;
    }
  }
  return total / (0.5 * mom.n * (mom.n - 1.0));
}

double balanced_random_coefficient(double eta, double alpha) {
  const double pp = eta * eta;
  const double pm = eta * (1.0 - eta);
  const double mm = (1.0 - eta) * (1.0 - eta);
  return alpha * pp + (1.0 - alpha) * pm + (1.0 - alpha) * pm + alpha * mm;
}

double delta_random_balanced(double delta_random, double eta, double alpha) {
  return balanced_random_coefficient(eta, alpha) * delta_random;
}

double delta_triangle_fast(std::span<const std::uint64_t> degrees, std::uint64_t num_edges) {
  const auto mom = check_and_measure(degrees, num_edges, 3, 2);
  const std::size_t n = degrees.size();
  Accumulator acc(n > kCompensatedThreshold);
  double suffix = 0.0;  // sum of excess(d_j) for j > k
  for (std::size_t k = n; k-- > 0;) {
    acc.add(excess(degrees[k]) * suffix);
    suffix += excess(degrees[k]);
  }
  return 1.0 + mom.pair_coefficient() * acc.value();
}

double delta_triangle_exact(std::span<const std::uint64_t> degrees, std::uint64_t num_edges) {
  const auto mom = check_and_measure(degrees, num_edges, 3, 2);
  const std::size_t n = degrees.size();
  const double two_m = 2.0 * mom.m;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double common = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        common += wedge_weight(degrees[l]) / two_m;
      }
      total += 1.0 + excess(degrees[i]) * excess(degrees[j]) / two_m * common;
    }
  }
  return total / (0.5 * mom.n * (mom.n - 1.0));
}

TriangleEstimates estimate_all(std::span<const std::uint64_t> degrees, std::uint64_t num_edges,
                               double eta, double alpha) {
  TriangleEstimates est;
  const auto mom = check_and_measure(degrees, num_edges, 3, 2);
  est.avg_d = mom.avg_d;
  est.avg_d2 = mom.avg_d2;
  est.delta_random = delta_random_fast(degrees, num_edges);
  est.delta_random_balanced = delta_random_balanced(est.delta_random, eta, alpha);
  est.delta_triangle = delta_triangle_fast(degrees, num_edges);
  return est;
}

TriangleEstimates estimate_all(const SignedGraph& g) {
  const double eta = compute_eta(g);
  return estimate_all(g.degrees(), g.num_edges(), eta, eta);
}

}  // namespace signet
