#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace so3cov {

enum class VarKind { SkewEntry, ZEntry, YEntry, Tau, Coeff };

struct VarInfo {
  VarKind kind;
  int i = 0, j = 0, k = 0;  // paper indices (1-based); meaning depends on kind
  std::string name;
  int group = 0;  // multigrading group
};

// Global ordered variable table. Order is fixed at construction; polynomials
// over different tables never mix.
class VarTable {
 public:
  using Ptr = std::shared_ptr<const VarTable>;

  // t^{(k)}_{ij} for 1<=i<j<=3, k=1..p (3p variables, group k-1),
  // optionally followed by z_{ij}, 1<=i,j<=3 (group p).
  static Ptr skew(int p, bool with_z);
  // y_{ik}, i=1..p, k=1..3; group i-1.
  static Ptr vectors(int p);
  // tau_1..tau_n, one group per variable.
  static Ptr tau(int n = 3);
  // c_1..c_n, single group.
  static Ptr coeffs(int n);

  int size() const { return static_cast<int>(vars_.size()); }
  int group_count() const { return group_count_; }
  const VarInfo& info(int v) const { return vars_[v]; }
  int group_of(int v) const { return vars_[v].group; }
  const std::string& name(int v) const { return vars_[v].name; }
  int index_of(const std::string& name) const;

  int p() const { return p_; }
  bool has_z() const { return has_z_; }

  int skew_var(int i, int j, int k) const;  // requires i<j
  int z_var(int i, int j) const;
  int y_var(int i, int k) const;
  int tau_var(int i) const;

 private:
  std::vector<VarInfo> vars_;
  std::map<std::string, int> by_name_;
  int group_count_ = 0;
  int p_ = 0;
  bool has_z_ = false;

  void push(VarInfo v);
};

}  // namespace so3cov
