#pragma once
// Internal: Dinic max-flow on tiny demand networks. Deterministic: edges are
// explored in insertion order, BFS levels give lowest-index augmenting paths.

#include <algorithm>
#include <utility>
#include <vector>

namespace ils::detail {

class Flow {
 public:
  explicit Flow(int n) : g_(n), level_(n), it_(n) {}

  // returns an edge handle usable with flow_on()
  std::pair<int, int> add(int a, int b, int cap) {
    g_[a].push_back({b, cap, static_cast<int>(g_[b].size())});
    g_[b].push_back({a, 0, static_cast<int>(g_[a].size()) - 1});
    return {a, static_cast<int>(g_[a].size()) - 1};
  }

  long long maxflow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (long long f = dfs(s, t, 1LL << 60)) total += f;
    }
    return total;
  }

  int flow_on(std::pair<int, int> ref) const {
    const Edge& e = g_[ref.first][ref.second];
    return g_[e.to][e.rev].cap;  // residual of the reverse edge
  }

 private:
  struct Edge {
    int to, cap, rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    level_[s] = 0;
    std::vector<int> q{s};
    for (size_t h = 0; h < q.size(); ++h) {
      int a = q[h];
      for (const Edge& e : g_[a])
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[a] + 1;
          q.push_back(e.to);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int a, int t, long long f) {
    if (a == t) return f;
    for (int& i = it_[a]; i < static_cast<int>(g_[a].size()); ++i) {
      Edge& e = g_[a][i];
      if (e.cap > 0 && level_[e.to] == level_[a] + 1) {
        long long d = dfs(e.to, t, std::min<long long>(f, e.cap));
        if (d > 0) {
          e.cap -= static_cast<int>(d);
          g_[e.to][e.rev].cap += static_cast<int>(d);
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> g_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace ils::detail
