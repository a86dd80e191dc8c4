#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace dibrush::detail {

/// Dinic's algorithm on an explicit residual graph. Each add_edge creates a
/// forward/backward pair with independent starting capacities, which lets a
/// caller seed the residual graph of an existing flow directly.
class Dinic {
 public:
  static constexpr long long kInf = std::numeric_limits<int>::max() / 4;

  explicit Dinic(int nodes) : adj_(nodes), level_(nodes), cursor_(nodes) {}

  /// Returns the id of the forward edge; its partner is id ^ 1.
  int add_edge(int from, int to, long long cap, long long back_cap = 0) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, cap, cap});
    edges_.push_back({from, back_cap, back_cap});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  long long max_flow(int s, int t, long long limit = kInf) {
    long long total = 0;
    while (total < limit && bfs(s, t)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (total < limit) {
        long long pushed = dfs(s, t, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Net amount pushed through edge `id` since construction (negative when
  /// the partner edge carried more).
  long long pushed(int id) const { return edges_[id].initial - edges_[id].cap; }

  void disable(int id) {
    edges_[id].cap = 0;
    edges_[id ^ 1].cap = 0;
  }

 private:
  struct Edge {
    int to;
    long long cap;
    long long initial;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int id : adj_[v]) {
        const Edge& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (std::size_t& i = cursor_[v]; i < adj_[v].size(); ++i) {
      const int id = adj_[v][i];
      Edge& e = edges_[id];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      const long long got = dfs(e.to, t, std::min(limit, e.cap));
      if (got > 0) {
        e.cap -= got;
        edges_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace dibrush::detail
