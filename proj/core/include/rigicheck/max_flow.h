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

#ifndef RIGICHECK_MAX_FLOW_H_
#define RIGICHECK_MAX_FLOW_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace rigicheck {

// Dinic max-flow on a directed network with integer capacities.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int num_nodes);

  int AddNode();
  // Returns the index of the forward arc.
  int AddArc(int from, int to, std::int64_t capacity);

  // Pushes flow until none remains or `limit` is reached. May be called again
  // after adding arcs; flow accumulates.
  std::int64_t Run(int source, int sink, std::int64_t limit = kInfinity);

  // Nodes reachable from `source` in the residual network of the last Run.
  std::vector<bool> SourceSide(int source) const;

  std::int64_t flow_on(int arc) const;
  int num_nodes() const { return static_cast<int>(head_.size()); }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t residual;
    std::int64_t capacity;
  };

  bool BuildLevels(int source, int sink);
  std::int64_t Push(int node, int sink, std::int64_t amount);

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace rigicheck

#endif  // RIGICHECK_MAX_FLOW_H_
