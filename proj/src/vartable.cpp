#include "so3cov/vartable.hpp"

#include <stdexcept>

namespace so3cov {

void VarTable::push(VarInfo v) {
  by_name_[v.name] = static_cast<int>(vars_.size());
  vars_.push_back(std::move(v));
}

VarTable::Ptr VarTable::skew(int p, bool with_z) {
  if (p < 1) throw std::invalid_argument("skew table needs p >= 1");
  auto t = std::make_shared<VarTable>();
  t->p_ = p;
  t->has_z_ = with_z;
  for (int k = 1; k <= p; ++k)
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        t->push({VarKind::SkewEntry, i, j, k,
                 "t" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(k), k - 1});
  if (with_z)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        t->push({VarKind::ZEntry, i, j, 0, "z" + std::to_string(i) + std::to_string(j), p});
  t->group_count_ = p + (with_z ? 1 : 0);
  return t;
}

VarTable::Ptr VarTable::vectors(int p) {
  auto t = std::make_shared<VarTable>();
  t->p_ = p;
  for (int i = 1; i <= p; ++i)
    for (int k = 1; k <= 3; ++k)
      t->push({VarKind::YEntry, i, 0, k, "y" + std::to_string(i) + std::to_string(k), i - 1});
  t->group_count_ = p;
  return t;
}

VarTable::Ptr VarTable::tau(int n) {
  auto t = std::make_shared<VarTable>();
  for (int i = 1; i <= n; ++i) t->push({VarKind::Tau, i, 0, 0, "tau" + std::to_string(i), i - 1});
  t->group_count_ = n;
  return t;
}

VarTable::Ptr VarTable::coeffs(int n) {
  auto t = std::make_shared<VarTable>();
  for (int i = 1; i <= n; ++i) t->push({VarKind::Coeff, i, 0, 0, "c" + std::to_string(i), 0});
  t->group_count_ = 1;
  return t;
}

int VarTable::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw std::invalid_argument("unknown variable " + name);
  return it->second;
}

int VarTable::skew_var(int i, int j, int k) const {
  if (!(1 <= i && i < j && j <= 3) || k < 1 || k > p_)
    throw std::out_of_range("skew_var index out of range");
  return (k - 1) * 3 + (i == 1 ? (j == 2 ? 0 : 1) : 2);
}

int VarTable::z_var(int i, int j) const {
  if (!has_z_ || i < 1 || i > 3 || j < 1 || j > 3) throw std::out_of_range("z_var out of range");
  return 3 * p_ + (i - 1) * 3 + (j - 1);
}

int VarTable::y_var(int i, int k) const {
  if (i < 1 || i > p_ || k < 1 || k > 3) throw std::out_of_range("y_var out of range");
  return (i - 1) * 3 + (k - 1);
}

int VarTable::tau_var(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("tau_var out of range");
  return i - 1;
}

}  // namespace so3cov
