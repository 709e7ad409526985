#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jscc {

/// Binary erasure channel with bit-erasure probability epsilon in (0, 1).
class BecSpec {
 public:
  explicit BecSpec(double epsilon);

  double epsilon() const noexcept { return epsilon_; }
  double capacity() const noexcept { return 1.0 - epsilon_; }
  /// log2(1/epsilon)
  double log_inv() const noexcept;
  /// Outside the small-erasure regime the rate theorems are derived for.
  bool outside_small_erasure_regime() const noexcept { return epsilon_ >= 0.5; }

 private:
  double epsilon_;
};

/// k-dimensional source with p-th power distortion measure.
class SourceSpec {
 public:
  SourceSpec(int k, double p);

  int k() const noexcept { return k_; }
  double p() const noexcept { return p_; }
  /// p/k, the slope of the quantizer exponent per unit rate.
  double p_over_k() const noexcept { return p_ / static_cast<double>(k_); }

 private:
  int k_;
  double p_;
};

/// Discrete memoryless channel P(j|i) (row-major, K x J) with input law q.
class ChannelMatrix {
 public:
  ChannelMatrix(std::size_t inputs, std::size_t outputs,
                std::vector<double> entries, std::vector<double> input_dist);

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t outputs() const noexcept { return outputs_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * outputs_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * outputs_, outputs_};
  }
  std::span<const double> input_dist() const noexcept { return q_; }

 private:
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<double> entries_;
  std::vector<double> q_;
};

/// Exponent in bits per channel use. Negative suprema are clamped to zero and
/// flagged vacuous; `rho` is the maximizing parameter when one was searched.
struct ExponentValue {
  double value = 0.0;
  double rho = 0.0;
  bool vacuous = false;
};

/// Which lower-bound rate variant produced r_ex.
enum class Method { exact, simplified, asymptotic };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view name);

}  // namespace jscc
