#include "sepdisc/space.hpp"

#include <algorithm>
#include <sstream>

#include "sepdisc/error.hpp"

namespace sepdisc {

StateSpace::StateSpace(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.size() < 2) throw Error(ErrorCode::DimensionMismatch, "state space needs at least two parties");
  total_ = 1;
  for (int d : dims_) {
    if (d < 2) throw Error(ErrorCode::DimensionMismatch, "every party dimension must be at least 2");
    if (total_ > (1 << 20) / d) throw Error(ErrorCode::DimensionMismatch, "state space too large");
    total_ *= d;
  }
}

std::vector<int> StateSpace::digits(int index) const {
  std::vector<int> out(dims_.size());
  for (int k = parties() - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = index % dims_[static_cast<std::size_t>(k)];
    index /= dims_[static_cast<std::size_t>(k)];
  }
  return out;
}

int StateSpace::index(const std::vector<int>& digits) const {
  int idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) idx = idx * dims_[k] + digits[k];
  return idx;
}

StateSpace StateSpace::restricted(const std::vector<int>& parties) const {
  std::vector<int> d;
  d.reserve(parties.size());
  for (int p : parties) d.push_back(dim(p));
  return StateSpace(std::move(d));
}

std::vector<int> StateSpace::complement(const std::vector<int>& parties) const {
  std::vector<int> out;
  for (int k = 0; k < this->parties(); ++k) {
    if (std::find(parties.begin(), parties.end(), k) == parties.end()) out.push_back(k);
  }
  return out;
}

std::string StateSpace::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) os << "x";
    os << dims_[k];
  }
  return os.str();
}

std::vector<int> normalize_bipartition(const StateSpace& space, std::vector<int> parties) {
  std::sort(parties.begin(), parties.end());
  if (parties.empty()) throw Error(ErrorCode::BadBipartition, "empty side");
  if (std::adjacent_find(parties.begin(), parties.end()) != parties.end())
    throw Error(ErrorCode::BadBipartition, "duplicate party");
  if (parties.front() < 0 || parties.back() >= space.parties())
    throw Error(ErrorCode::BadBipartition, "party index out of range");
  if (static_cast<int>(parties.size()) == space.parties())
    throw Error(ErrorCode::BadBipartition, "bipartition must be proper");
  return parties;
}

}  // namespace sepdisc
