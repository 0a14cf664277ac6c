#pragma once

#include <functional>
#include <vector>

namespace twomon {

/// Depth-first enumeration over finite-domain variables.
///
/// Variables are assigned in the order they were added. The domain of a
/// variable may depend on the values already assigned to earlier variables.
/// A check registered at variable `v` runs as soon as `v` is assigned, so it
/// may read any variable with index <= v.
class Search {
 public:
  using Assignment = std::vector<int>;
  using DomainFn = std::function<void(const Assignment&, std::vector<int>& out)>;
  using CheckFn = std::function<bool(const Assignment&)>;
  using VisitFn = std::function<bool(const Assignment&)>;

  int add_variable(DomainFn domain);
  /// Variable with a fixed domain.
  int add_variable(std::vector<int> values);
  void add_check(int at_variable, CheckFn check);

  int size() const { return static_cast<int>(domains_.size()); }

  /// Calls `visit` on every full assignment passing all checks; stops early
  /// when `visit` returns false. Returns the number of solutions visited.
  std::size_t run(const VisitFn& visit) const;

  /// All solutions, in enumeration order.
  std::vector<Assignment> all() const;

 private:
  std::vector<DomainFn> domains_;
  std::vector<std::vector<CheckFn>> checks_;
};

}  // namespace twomon
