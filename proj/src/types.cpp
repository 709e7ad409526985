#include "jscc/types.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "jscc/errors.hpp"

namespace jscc {

namespace {
constexpr double kSumTolerance = 1e-12;
}

BecSpec::BecSpec(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DomainError("erasure probability must lie in (0, 1), got " + std::to_string(epsilon));
}

double BecSpec::log_inv() const noexcept { return -std::log2(epsilon_); }

SourceSpec::SourceSpec(int k, double p) : k_(k), p_(p) {
  if (k < 1) throw DomainError("source dimension k must be >= 1");
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("distortion power p must be > 0");
}

ChannelMatrix::ChannelMatrix(std::size_t inputs, std::size_t outputs, std::vector<double> entries,
                             std::vector<double> input_dist)
    : inputs_(inputs), outputs_(outputs), entries_(std::move(entries)), q_(std::move(input_dist)) {
  if (inputs_ < 2 || outputs_ < 2) throw DomainError("channel needs at least 2 inputs and 2 outputs");
  if (entries_.size() != inputs_ * outputs_) throw DomainError("transition matrix has wrong size");
  if (q_.size() != inputs_) throw DomainError("input distribution length must equal input count");
  for (double v : entries_)
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("transition probabilities must lie in [0, 1]");
  for (std::size_t i = 0; i < inputs_; ++i) {
    const auto r = row(i);
    if (std::abs(std::accumulate(r.begin(), r.end(), 0.0) - 1.0) > kSumTolerance)
      throw DomainError("row " + std::to_string(i) + " of the transition matrix does not sum to 1");
  }
  for (double v : q_)
    if (!(v >= 0.0)) throw DomainError("input distribution entries must be nonnegative");
  if (std::abs(std::accumulate(q_.begin(), q_.end(), 0.0) - 1.0) > kSumTolerance)
    throw DomainError("input distribution does not sum to 1");
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::exact: return "exact";
    case Method::simplified: return "simplified";
    case Method::asymptotic: return "asymptotic";
  }
  return "exact";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::exact;
  if (name == "simplified") return Method::simplified;
  if (name == "asymptotic") return Method::asymptotic;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

}  // namespace jscc
