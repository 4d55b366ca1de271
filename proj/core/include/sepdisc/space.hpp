#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace sepdisc {

/// Tensor-factor layout d_1 x ... x d_K. Basis index ordering is row-major:
/// party 0 is the most significant digit.
class StateSpace {
 public:
  StateSpace() = default;
  explicit StateSpace(std::vector<int> dims);
  StateSpace(std::initializer_list<int> dims) : StateSpace(std::vector<int>(dims)) {}

  const std::vector<int>& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  int total() const { return total_; }

  /// Digits of a flat index, one per party.
  std::vector<int> digits(int index) const;
  int index(const std::vector<int>& digits) const;

  /// Subspace formed by a subset of parties (in increasing order).
  StateSpace restricted(const std::vector<int>& parties) const;

  /// Parties not in `parties`, in increasing order.
  std::vector<int> complement(const std::vector<int>& parties) const;

  std::string to_string() const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  int total_ = 0;
};

/// Validates a party subset for a bipartition (proper, nonempty, in range,
/// no duplicates) and returns it sorted. Throws BadBipartition.
std::vector<int> normalize_bipartition(const StateSpace& space, std::vector<int> parties);

}  // namespace sepdisc
