#pragma once

// Exhaustive enumeration of a Weyl group with multiplication tables indexed
// by element ids.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flagdeg/errors.hpp"
#include "flagdeg/weyl.hpp"

namespace flagdeg {

inline constexpr std::uint64_t kDefaultGroupCap = 60000;

/// Element ids are positions in the deterministic (length, matrix) order, so
/// id 0 is the identity and the last id is w0.
class EnumeratedGroup {
 public:
  explicit EnumeratedGroup(WeylGroup group, std::uint64_t cap = kDefaultGroupCap) : group_(std::move(group)) {
    const std::uint64_t expected = group_.root_system().type().weyl_group_order();
    if (expected > cap) throw CapExceeded(expected, cap);
    const int n = group_.rank();

    // BFS by right multiplication with simple generators.
    std::unordered_map<IntMatrix, int, IntMatrixHash> seen;
    std::vector<IntMatrix> found{IntMatrix::identity(n)};
    seen.emplace(found[0], 0);
    for (std::size_t k = 0; k < found.size(); ++k) {
      for (int i = 1; i <= n; ++i) {
        IntMatrix m = found[k];
        group_.right_multiply_simple(m, i);
        if (seen.emplace(m, static_cast<int>(found.size())).second) {
          found.push_back(std::move(m));
          if (found.size() > cap) throw CapExceeded(expected, cap);
        }
      }
    }
    elements_.reserve(found.size());
    for (auto& m : found) elements_.push_back(group_.make(std::move(m)));
    std::sort(elements_.begin(), elements_.end());
    index_.reserve(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k].matrix(), static_cast<int>(k));

    const std::size_t size = elements_.size();
    left_.assign(static_cast<std::size_t>(n), std::vector<int>(size));
    right_.assign(static_cast<std::size_t>(n), std::vector<int>(size));
    inverse_.assign(size, -1);
    for (int i = 1; i <= n; ++i) {
      const IntMatrix s = group_.simple_reflection(i).matrix();
      for (std::size_t k = 0; k < size; ++k) {
        IntMatrix r = elements_[k].matrix();
        group_.right_multiply_simple(r, i);
        right_[i - 1][k] = index_.at(r);
        left_[i - 1][k] = index_.at(s * elements_[k].matrix());
      }
    }
    // inverse(x s_i) = s_i inverse(x), filled in length order.
    inverse_[0] = 0;
    for (std::size_t k = 0; k < size; ++k)
      for (int i = 0; i < n; ++i) {
        const int up = right_[i][k];
        if (inverse_[up] < 0) inverse_[up] = left_[i][inverse_[k]];
      }
  }

  const WeylGroup& group() const noexcept { return group_; }
  const RootSystem& root_system() const noexcept { return group_.root_system(); }
  int rank() const noexcept { return group_.rank(); }
  int size() const noexcept { return static_cast<int>(elements_.size()); }

  const WeylElement& element(int id) const { return elements_.at(id); }
  const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  int length(int id) const { return elements_[id].length(); }
  int identity_id() const noexcept { return 0; }
  int longest_id() const noexcept { return size() - 1; }

  int id_of(const WeylElement& w) const { return id_of(w.matrix()); }
  int id_of(const IntMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InvalidInput("element is not in the enumerated group");
    return it->second;
  }

  /// s_i * x
  int left_mul(int i, int x) const { return left_[i - 1][x]; }
  /// x * s_i
  int right_mul(int x, int i) const { return right_[i - 1][x]; }
  int inverse(int x) const { return inverse_[x]; }
  int multiply(int a, int b) const { return id_of(elements_[a].matrix() * elements_[b].matrix()); }

  bool is_left_descent(int x, int i) const { return length(left_mul(i, x)) < length(x); }
  bool is_right_descent(int x, int i) const { return length(right_mul(x, i)) < length(x); }

 private:
  WeylGroup group_;
  std::vector<WeylElement> elements_;
  std::unordered_map<IntMatrix, int, IntMatrixHash> index_;
  std::vector<std::vector<int>> left_, right_;
  std::vector<int> inverse_;
};

}  // namespace flagdeg
