#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oodrel {

/// A point on the K-class probability simplex. Hard labels are the one-hot
/// special case.
class SoftLabel {
 public:
  static constexpr double kSimplexTolerance = 1e-9;

  SoftLabel() = default;

  explicit SoftLabel(std::vector<double> probs) : probs_(std::move(probs)) {
    validate();
  }

  static SoftLabel one_hot(std::size_t index, std::size_t num_classes) {
    if (index >= num_classes)
      throw std::invalid_argument("one_hot: class index " + std::to_string(index) +
                                  " out of range for K=" + std::to_string(num_classes));
    std::vector<double> p(num_classes, 0.0);
    p[index] = 1.0;
    return SoftLabel(std::move(p));
  }

  static SoftLabel uniform(std::size_t num_classes) {
    return SoftLabel(std::vector<double>(num_classes, 1.0 / static_cast<double>(num_classes)));
  }

  std::size_t num_classes() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Index of the largest probability; ties broken by lowest class index.
  std::size_t argmax() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs_.size(); ++i)
      if (probs_[i] > probs_[best]) best = i;
    return best;
  }

  bool is_one_hot() const {
    for (double p : probs_)
      if (p != 0.0 && p != 1.0) return false;
    return true;
  }

  friend bool operator==(const SoftLabel& a, const SoftLabel& b) {
    return a.probs_ == b.probs_;
  }

 private:
  void validate() const {
    if (probs_.empty()) throw std::invalid_argument("SoftLabel: empty probability vector");
    double sum = 0.0;
    for (double p : probs_) {
      if (!(p >= 0.0)) throw std::invalid_argument("SoftLabel: negative or NaN entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance)
      throw std::invalid_argument("SoftLabel: entries sum to " + std::to_string(sum) +
                                  ", expected 1 within 1e-9");
  }

  std::vector<double> probs_;
};

}  // namespace oodrel
