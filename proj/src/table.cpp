#include "twomon/table.hpp"

#include <stdexcept>

namespace twomon {

CompositionTable::CompositionTable(int node_count, std::vector<int> source, std::vector<int> target)
    : source_(std::move(source)), target_(std::move(target)) {
  const auto nodes = static_cast<std::size_t>(node_count);
  in_.resize(nodes);
  out_.resize(nodes);
  in_pos_.resize(source_.size());
  out_pos_.resize(source_.size());
  for (std::size_t a = 0; a < source_.size(); ++a) {
    auto& in = in_[static_cast<std::size_t>(target_[a])];
    in_pos_[a] = static_cast<int>(in.size());
    in.push_back(static_cast<int>(a));
    auto& out = out_[static_cast<std::size_t>(source_[a])];
    out_pos_[a] = static_cast<int>(out.size());
    out.push_back(static_cast<int>(a));
  }
  offset_.resize(nodes);
  std::size_t total = 0;
  for (std::size_t v = 0; v < nodes; ++v) {
    offset_[v] = total;
    total += in_[v].size() * out_[v].size();
  }
  table_.assign(total, -1);
}

std::size_t CompositionTable::slot(int second, int first) const {
  const auto node = static_cast<std::size_t>(target(first));
  return offset_[node] +
         static_cast<std::size_t>(in_pos_[static_cast<std::size_t>(first)]) * out_[node].size() +
         static_cast<std::size_t>(out_pos_[static_cast<std::size_t>(second)]);
}

int CompositionTable::at(int second, int first) const {
  if (second < 0 || first < 0 || !composable(second, first)) return -1;
  return table_[slot(second, first)];
}

void CompositionTable::set(int second, int first, int value) {
  if (!composable(second, first)) throw std::logic_error("CompositionTable::set on non-composable pair");
  table_[slot(second, first)] = value;
}

}  // namespace twomon
