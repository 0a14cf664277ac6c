#include "twomon/search.hpp"

namespace twomon {

int Search::add_variable(DomainFn domain) {
  domains_.push_back(std::move(domain));
  checks_.emplace_back();
  return size() - 1;
}

int Search::add_variable(std::vector<int> values) {
  return add_variable([values = std::move(values)](const Assignment&, std::vector<int>& out) {
    out = values;
  });
}

void Search::add_check(int at_variable, CheckFn check) {
  checks_.at(static_cast<std::size_t>(at_variable)).push_back(std::move(check));
}

std::size_t Search::run(const VisitFn& visit) const {
  const int n = size();
  Assignment assignment(static_cast<std::size_t>(n), -1);
  std::size_t found = 0;
  if (n == 0) {
    ++found;
    visit(assignment);
    return found;
  }
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  int depth = 0;
  domains_[0](assignment, candidates[0]);
  while (depth >= 0) {
    auto d = static_cast<std::size_t>(depth);
    if (cursor[d] >= candidates[d].size()) {
      assignment[d] = -1;
      --depth;
      continue;
    }
    assignment[d] = candidates[d][cursor[d]++];
    bool ok = true;
    for (const auto& check : checks_[d]) {
      if (!check(assignment)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 == n) {
      ++found;
      if (!visit(assignment)) return found;
      continue;
    }
    ++depth;
    auto nd = static_cast<std::size_t>(depth);
    candidates[nd].clear();
    domains_[nd](assignment, candidates[nd]);
    cursor[nd] = 0;
  }
  return found;
}

std::vector<Search::Assignment> Search::all() const {
  std::vector<Assignment> out;
  run([&](const Assignment& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace twomon
