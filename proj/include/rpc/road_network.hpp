#pragma once

// Directed road network with planar vertex coordinates (meters) and a region
// label per vertex. Shortest-path distances are integral meter sums computed
// by Dijkstra; per-source rows are cached and shared between copies of the
// network, so instances serialized from a common city stay cheap. Travel
// speed is a function of (interval, origin region, destination region) with
// uniform peak/off-peak defaults and optional per-region-pair tables.

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rpc/types.hpp"

namespace rpc {

constexpr Meters kUnreachable = std::numeric_limits<Meters>::max() / 4;

struct NetVertex {
  VertexId id = 0;
  std::int64_t x = 0;  // meters
  std::int64_t y = 0;
  int region = 0;
};

struct NetEdge {
  VertexId from = 0;
  VertexId to = 0;
  Meters length = 0;
};

// Fifteen-minute interval grid over the service day. Peak spans 7:00-9:59
// and 16:00-19:59.
struct DayGrid {
  int start_hour = 6;
  int interval_minutes = 15;
  int intervals = 72;

  Seconds interval_start(int t) const {
    return Seconds{3600} * start_hour + Seconds{60} * interval_minutes * t;
  }
  Seconds interval_end(int t) const { return interval_start(t + 1); }
  int hour_of(int t) const { return static_cast<int>(interval_start(t) / 3600); }
  bool is_peak(int t) const {
    int h = hour_of(t);
    return (h >= 7 && h < 10) || (h >= 16 && h < 20);
  }
};

struct SpeedTable {
  double offpeak_mps = 7.0;
  double peak_mps = 5.0;
  // Optional region-pair overrides, indexed [from_region][to_region].
  std::vector<std::vector<double>> offpeak_table;
  std::vector<std::vector<double>> peak_table;

  double speed(bool peak, int from_region, int to_region) const {
    const auto& table = peak ? peak_table : offpeak_table;
    if (!table.empty()) {
      if (from_region < 0 || from_region >= static_cast<int>(table.size()) || to_region < 0 ||
          to_region >= static_cast<int>(table[from_region].size()))
        throw std::out_of_range("region outside speed table");
      return table[from_region][to_region];
    }
    return peak ? peak_mps : offpeak_mps;
  }
};

class RoadNetwork {
 public:
  RoadNetwork() : cache_(std::make_shared<Cache>()) {}

  RoadNetwork(std::vector<NetVertex> vertices, std::vector<NetEdge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)),
        cache_(std::make_shared<Cache>()) {
    const int n = static_cast<int>(vertices_.size());
    for (int i = 0; i < n; ++i)
      if (vertices_[i].id != i) throw std::invalid_argument("vertex ids must be 0..n-1 in order");
    head_.assign(n + 1, 0);
    for (const NetEdge& e : edges_) {
      check_vertex(e.from);
      check_vertex(e.to);
      if (e.length < 0) throw std::invalid_argument("negative edge length");
      ++head_[e.from + 1];
    }
    for (int i = 0; i < n; ++i) head_[i + 1] += head_[i];
    csr_.resize(edges_.size());
    std::vector<int> fill(head_.begin(), head_.end() - 1);
    for (const NetEdge& e : edges_) csr_[fill[e.from]++] = {e.to, e.length};
    cache_->rows.assign(n, {});
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<NetVertex>& vertices() const { return vertices_; }
  const std::vector<NetEdge>& edges() const { return edges_; }
  int region(VertexId v) const { return vertices_[check_vertex(v)].region; }

  double straight_line(VertexId a, VertexId b) const {
    const NetVertex& va = vertices_[check_vertex(a)];
    const NetVertex& vb = vertices_[check_vertex(b)];
    return std::hypot(static_cast<double>(va.x - vb.x), static_cast<double>(va.y - vb.y));
  }

  // Shortest-path distance in meters; kUnreachable when no path exists.
  Meters shortest_path_dist(VertexId from, VertexId to) const {
    check_vertex(from);
    check_vertex(to);
    return row(from)[to];
  }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::vector<Meters>> rows;
  };

  int check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex id out of range");
    return v;
  }

  const std::vector<Meters>& row(VertexId source) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& r = cache_->rows[source];
    if (!r.empty()) return r;
    r.assign(vertex_count(), kUnreachable);
    using Item = std::pair<Meters, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    r[source] = 0;
    pq.emplace(0, source);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > r[u]) continue;
      for (int i = head_[u]; i < head_[u + 1]; ++i) {
        auto [v, len] = csr_[i];
        if (d + len < r[v]) {
          r[v] = d + len;
          pq.emplace(r[v], v);
        }
      }
    }
    return r;
  }

  std::vector<NetVertex> vertices_;
  std::vector<NetEdge> edges_;
  std::vector<int> head_;
  std::vector<std::pair<VertexId, Meters>> csr_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace rpc
