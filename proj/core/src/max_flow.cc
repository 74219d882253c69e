// Copyright 2026 The Rigicheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rigicheck/max_flow.h"

#include <algorithm>
#include <queue>

namespace rigicheck {

MaxFlow::MaxFlow(int num_nodes) : head_(num_nodes, -1) {}

int MaxFlow::AddNode() {
  head_.push_back(-1);
  return static_cast<int>(head_.size()) - 1;
}

int MaxFlow::AddArc(int from, int to, std::int64_t capacity) {
  const int index = static_cast<int>(arcs_.size());
  arcs_.push_back({to, head_[from], capacity, capacity});
  head_[from] = index;
  arcs_.push_back({from, head_[to], 0, 0});
  head_[to] = index + 1;
  return index;
}

bool MaxFlow::BuildLevels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop();
    for (int a = head_[x]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[x] + 1;
        frontier.push(arcs_[a].to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::Push(int node, int sink, std::int64_t amount) {
  if (node == sink) return amount;
  for (int& a = cursor_[node]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    if (arc.residual <= 0 || level_[arc.to] != level_[node] + 1) continue;
    std::int64_t pushed = Push(arc.to, sink, std::min(amount, arc.residual));
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[a ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::Run(int source, int sink, std::int64_t limit) {
  std::int64_t total = 0;
  while (total < limit && BuildLevels(source, sink)) {
    cursor_ = head_;
    while (total < limit) {
      std::int64_t pushed = Push(source, sink, limit - total);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> MaxFlow::SourceSide(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int a = head_[x]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].residual > 0 && !seen[arcs_[a].to]) {
        seen[arcs_[a].to] = true;
        stack.push_back(arcs_[a].to);
      }
    }
  }
  return seen;
}

std::int64_t MaxFlow::flow_on(int arc) const {
  return arcs_[arc].capacity - arcs_[arc].residual;
}

}  // namespace rigicheck
