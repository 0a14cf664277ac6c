#pragma once

#include <vector>

namespace twomon {

/// Partial composition on a graph: stores second∘first for exactly the
/// composable pairs (target(first) == source(second)). Storage per node is
/// |in(node)| x |out(node)|, so it is proportional to the number of
/// composable pairs, not to the square of the arrow count.
class CompositionTable {
 public:
  CompositionTable() = default;
  CompositionTable(int node_count, std::vector<int> source, std::vector<int> target);

  int node_count() const { return static_cast<int>(offset_.size()); }
  int arrow_count() const { return static_cast<int>(source_.size()); }
  int source(int arrow) const { return source_[static_cast<std::size_t>(arrow)]; }
  int target(int arrow) const { return target_[static_cast<std::size_t>(arrow)]; }

  bool composable(int second, int first) const { return source(second) == target(first); }
  /// -1 when not composable or not yet set.
  int at(int second, int first) const;
  void set(int second, int first, int value);

  const std::vector<int>& into(int node) const { return in_[static_cast<std::size_t>(node)]; }
  const std::vector<int>& out_of(int node) const { return out_[static_cast<std::size_t>(node)]; }

  bool operator==(const CompositionTable& other) const = default;

 private:
  std::size_t slot(int second, int first) const;

  std::vector<int> source_, target_;
  std::vector<std::vector<int>> in_, out_;
  std::vector<int> in_pos_, out_pos_;
  std::vector<std::size_t> offset_;
  std::vector<int> table_;
};

}  // namespace twomon
