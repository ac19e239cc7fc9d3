#pragma once

// Independent gallery-distance oracle: breadth-first search over the chamber
// graph of the standard apartment, generated by the three simple reflections.
// Used to pin down the closed-form Weyl length; kept strictly test-side.

#include <map>
#include <queue>

#include "sl3pong/weyl.hpp"

namespace sl3pong::testing {

inline std::map<AffineWeyl, long> bfs_lengths(long radius) {
  std::map<AffineWeyl, long> dist;
  std::queue<AffineWeyl> q;
  AffineWeyl id = AffineWeyl::identity();
  dist[id] = 0;
  q.push(id);
  while (!q.empty()) {
    AffineWeyl w = q.front();
    q.pop();
    long d = dist[w];
    if (d == radius) continue;
    for (int i = 0; i < 3; ++i) {
      AffineWeyl n = w * AffineWeyl::simple(i);
      if (dist.emplace(n, d + 1).second) q.push(n);
    }
  }
  return dist;
}

}  // namespace sl3pong::testing
