#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace irreal {

struct Subsystem {
  std::string label;
  int dim = 0;

  bool operator==(const Subsystem&) const = default;
};

/// Ordered tensor-factor structure of a finite composite Hilbert space.
/// Factor 0 is the most significant digit of the flat index, i.e. flat
/// indices follow row-major Kronecker order.
class CompositeSpace {
 public:
  /// Throws std::invalid_argument on nonpositive dims or duplicate labels.
  explicit CompositeSpace(std::vector<Subsystem> subsystems);

  int total_dim() const { return total_dim_; }
  std::size_t factor_count() const { return subsystems_.size(); }
  const Subsystem& factor(std::size_t i) const { return subsystems_[i]; }
  const std::vector<Subsystem>& factors() const { return subsystems_; }

  bool has_label(std::string_view label) const;
  /// Position of the factor with the given label; throws
  /// std::invalid_argument for unknown labels.
  std::size_t index_of(std::string_view label) const;

  int stride(std::size_t i) const { return strides_[i]; }
  int digit(int flat_index, std::size_t i) const;
  std::vector<int> unravel(int flat_index) const;
  int ravel(const std::vector<int>& digits) const;

  bool operator==(const CompositeSpace&) const = default;

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<int> strides_;
  int total_dim_ = 1;
};

CompositeSpace single_system(std::string label, int dim);

}  // namespace irreal
