#pragma once

#include <stdexcept>
#include <vector>

namespace so3cov {

// Permutation of {1..n} in one-line notation: img[k-1] = sigma(k).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation");
      seen[v - 1] = true;
    }
  }
  static Perm identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Perm(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[k - 1]; }

  // (s.compose(t))(k) = s(t(k))
  Perm compose(const Perm& t) const {
    std::vector<int> v(img_.size());
    for (int k = 1; k <= size(); ++k) v[k - 1] = img_[t(k) - 1];
    return Perm(std::move(v));
  }

  Perm inverse() const {
    std::vector<int> v(img_.size());
    for (int k = 1; k <= size(); ++k) v[img_[k - 1] - 1] = k;
    return Perm(std::move(v));
  }

  int sign() const {
    int s = 1;
    std::vector<bool> seen(img_.size(), false);
    for (int k = 1; k <= size(); ++k) {
      if (seen[k - 1]) continue;
      int len = 0, c = k;
      while (!seen[c - 1]) {
        seen[c - 1] = true;
        c = img_[c - 1];
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  const std::vector<int>& one_line() const { return img_; }
  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

// all permutations of {1..n}, lexicographic in one-line notation
std::vector<Perm> all_perms(int n);

}  // namespace so3cov
