#include "irreal/composite_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace irreal {

CompositeSpace::CompositeSpace(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  if (subsystems_.empty()) {
    throw std::invalid_argument("composite space needs at least one factor");
  }
  std::unordered_set<std::string> seen;
  for (const auto& s : subsystems_) {
    if (s.dim <= 0) {
      throw std::invalid_argument("subsystem '" + s.label +
                                  "' has nonpositive dimension");
    }
    if (!seen.insert(s.label).second) {
      throw std::invalid_argument("duplicate subsystem label '" + s.label +
                                  "'");
    }
    total_dim_ *= s.dim;
  }
  strides_.assign(subsystems_.size(), 1);
  for (std::size_t i = subsystems_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * subsystems_[i].dim;
  }
}

bool CompositeSpace::has_label(std::string_view label) const {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t CompositeSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) {
      return i;
    }
  }
  throw std::invalid_argument("unknown subsystem label '" +
                              std::string(label) + "'");
}

int CompositeSpace::digit(int flat_index, std::size_t i) const {
  return (flat_index / strides_[i]) % subsystems_[i].dim;
}

std::vector<int> CompositeSpace::unravel(int flat_index) const {
  std::vector<int> digits(subsystems_.size());
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    digits[i] = digit(flat_index, i);
  }
  return digits;
}

int CompositeSpace::ravel(const std::vector<int>& digits) const {
  if (digits.size() != subsystems_.size()) {
    throw std::invalid_argument("digit count does not match factor count");
  }
  int index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= subsystems_[i].dim) {
      throw std::invalid_argument("digit out of range for subsystem '" +
                                  subsystems_[i].label + "'");
    }
    index += digits[i] * strides_[i];
  }
  return index;
}

CompositeSpace single_system(std::string label, int dim) {
  return CompositeSpace({{std::move(label), dim}});
}

}  // namespace irreal
