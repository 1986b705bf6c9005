#pragma once

// Brute-force reference for the full description partition: worlds are
// equivalent iff they agree on every formula with modal depth <= max_depth
// and node count <= max_size. Listing the formulas is hopeless, but only
// their truth sets matter, and over <= ~12 worlds there are few distinct
// ones; dynamic programming over (depth, truth-set mask) with minimal
// formula sizes visits exactly the achievable truth sets.

#include <cstdint>
#include <limits>
#include <vector>

#include "belief/frames.hpp"

namespace belt::oracle {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// minimal size of a formula with modal depth <= d per truth-set mask.
inline std::vector<std::vector<std::size_t>> achievable_masks(
    const Model& m, const std::vector<Rat>& thetas, int max_depth,
    std::size_t max_size) {
  std::size_t n = m.frame.worlds->size();
  std::size_t nmasks = std::size_t{1} << n;
  std::vector<std::vector<std::size_t>> best(
      static_cast<std::size_t>(max_depth) + 1,
      std::vector<std::size_t>(nmasks, kInf));

  auto mask_of = [&](const Event& e) {
    std::size_t mask = 0;
    for (std::size_t w = 0; w < n; ++w)
      if (e.contains_point(w)) mask |= std::size_t{1} << w;
    return mask;
  };

  for (std::size_t p = 0; p < m.vocab.size(); ++p) best[0][mask_of(m.interp[p])] = 1;

  auto boolean_closure = [&](std::vector<std::size_t>& lvl) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < nmasks; ++a) {
        if (lvl[a] == kInf) continue;
        std::size_t neg = (~a) & (nmasks - 1);
        if (lvl[a] + 1 <= max_size && lvl[a] + 1 < lvl[neg]) {
          lvl[neg] = lvl[a] + 1;
          changed = true;
        }
        for (std::size_t b = 0; b < nmasks; ++b) {
          if (lvl[b] == kInf) continue;
          std::size_t s = lvl[a] + lvl[b] + 1;
          if (s <= max_size && s < lvl[a & b]) {
            lvl[a & b] = s;
            changed = true;
          }
        }
      }
    }
  };

  boolean_closure(best[0]);
  for (int d = 1; d <= max_depth; ++d) {
    best[static_cast<std::size_t>(d)] = best[static_cast<std::size_t>(d) - 1];
    auto& lvl = best[static_cast<std::size_t>(d)];
    const auto& below = best[static_cast<std::size_t>(d) - 1];
    for (std::size_t a = 0; a < nmasks; ++a) {
      if (below[a] == kInf || below[a] + 1 > max_size) continue;
      std::vector<bool> pts(n);
      for (std::size_t w = 0; w < n; ++w) pts[w] = (a >> w) & 1;
      Event e = event_from_mask(m.frame.worlds, pts);
      for (int i = 1; i <= m.frame.agents; ++i) {
        for (const Rat& theta : thetas) {
          std::size_t bmask = 0;
          for (std::size_t w = 0; w < n; ++w)
            if (m.frame.belief(i, w).of(e) >= theta) bmask |= std::size_t{1} << w;
          if (below[a] + 1 < lvl[bmask]) lvl[bmask] = below[a] + 1;
        }
      }
    }
    boolean_closure(lvl);
  }
  return best;
}

// Partition of the worlds by agreement on every achievable truth set, as a
// world -> class assignment with classes ordered by least member.
inline std::vector<std::size_t> brute_force_full_partition(
    const Model& m, const std::vector<Rat>& thetas, int max_depth,
    std::size_t max_size) {
  std::size_t n = m.frame.worlds->size();
  auto best = achievable_masks(m, thetas, max_depth, max_size);
  const auto& lvl = best[static_cast<std::size_t>(max_depth)];
  std::vector<std::size_t> cls(n, 0);
  for (std::size_t mask = 0; mask < lvl.size(); ++mask) {
    if (lvl[mask] == kInf) continue;
    std::vector<std::size_t> next(n);
    std::vector<std::pair<std::size_t, bool>> seen;
    std::size_t next_count = 0;
    for (std::size_t w = 0; w < n; ++w) {
      std::pair<std::size_t, bool> key{cls[w], ((mask >> w) & 1) != 0};
      std::size_t id = kInf;
      for (std::size_t k = 0; k < seen.size(); ++k)
        if (seen[k] == key) id = k;
      if (id == kInf) {
        id = next_count++;
        seen.push_back(key);
      }
      next[w] = id;
    }
    cls = std::move(next);
  }
  return cls;
}

}  // namespace belt::oracle
