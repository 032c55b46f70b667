#pragma once

#include <vector>

#include "lshape/scalar.hpp"

namespace lshape::exact {

/// Factorial memo owned by one evaluation; never shared between threads.
class FactorialTable {
 public:
  FactorialTable() : table_{Integer(1)} {}

  Integer factorial(int n) {
    while (static_cast<int>(table_.size()) <= n)
      table_.push_back(table_.back() * static_cast<long>(table_.size()));
    return table_[static_cast<size_t>(n)];
  }

  Integer binomial(int n, int k) {
    if (k < 0 || k > n) return Integer(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
  }

 private:
  std::vector<Integer> table_;
};

}  // namespace lshape::exact
