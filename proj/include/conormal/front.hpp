#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "conormal/errors.hpp"

namespace conormal {

enum class EventKind { LeftCusp, RightCusp, Crossing };

/// One front singularity. pos is the 1-based strand index from the bottom:
/// a LeftCusp inserts strands at pos, pos+1; RightCusp/Crossing act on the
/// existing strands pos, pos+1.
struct FrontEvent {
  EventKind kind;
  int pos;
  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

inline FrontEvent L(int p) { return {EventKind::LeftCusp, p}; }
inline FrontEvent R(int p) { return {EventKind::RightCusp, p}; }
inline FrontEvent X(int p) { return {EventKind::Crossing, p}; }

/// Generic front of a Legendrian in R^3, events ordered left to right.
struct LineFront {
  std::vector<FrontEvent> events;
  int orientation = 1;       // traversal seed: direction of the first cusp's lower strand
  bool is_link = false;      // set when construction produced >1 component
};

/// Front in J^1(S^1), cut open at the theta = 0 wall. events run in sweep
/// order from the wall; wall strands are indexed bottom-up and carry the
/// traversal direction (+1 = oriented in +theta).
struct TorusFront {
  std::vector<FrontEvent> events;
  std::vector<int> wall_orientations;
  int wall_strands() const { return static_cast<int>(wall_orientations.size()); }
};

struct InvariantReport {
  int tb = 0;
  int rot = 0;
  std::optional<int> winding;  // torus fronts only
  std::optional<int> jplus;
  int crossings = 0;
  int left_cusps = 0;
  int right_cusps = 0;
};

namespace detail {

struct CuspRec {
  bool left;        // left cusp (birth) or right cusp (death)
  int lower, upper; // arc ids
  std::size_t event;
};

struct CrossRec {
  int lower_in, upper_in;  // arc entering at pos / pos+1
  std::size_t event;
};

/// Sweep of an event list. Arcs are maximal strand pieces between cusps
/// (and the wall); crossings do not break arcs.
struct Trace {
  int initial_strands = 0;
  std::vector<CuspRec> cusps;
  std::vector<CrossRec> crossings;
  std::vector<int> start_ids;   // wall strands at sweep start, bottom-up
  std::vector<int> end_ids;
  int arc_count = 0;
  // per-arc crossing visits in event order: (event index, crossing index)
  std::vector<std::vector<std::pair<std::size_t, int>>> visits;

  static Trace run(const std::vector<FrontEvent>& events, int initial) {
    Trace t;
    t.initial_strands = initial;
    std::vector<int> slice;
    for (int i = 0; i < initial; ++i) {
      slice.push_back(t.arc_count++);
      t.start_ids.push_back(slice.back());
    }
    t.visits.resize(t.arc_count);
    for (std::size_t e = 0; e < events.size(); ++e) {
      const auto& ev = events[e];
      const int p = ev.pos;
      const int n = static_cast<int>(slice.size());
      switch (ev.kind) {
        case EventKind::LeftCusp: {
          if (p < 1 || p > n + 1)
            throw ValidationError(Err::InvalidFront, "left cusp out of range");
          int lo = t.arc_count++, up = t.arc_count++;
          t.visits.resize(t.arc_count);
          slice.insert(slice.begin() + (p - 1), {lo, up});
          t.cusps.push_back({true, lo, up, e});
          break;
        }
        case EventKind::RightCusp: {
          if (p < 1 || p + 1 > n)
            throw ValidationError(Err::InvalidFront, "right cusp out of range");
          t.cusps.push_back({false, slice[p - 1], slice[p], e});
          slice.erase(slice.begin() + (p - 1), slice.begin() + (p + 1));
          break;
        }
        case EventKind::Crossing: {
          if (p < 1 || p + 1 > n)
            throw ValidationError(Err::InvalidFront, "crossing out of range");
          int lo = slice[p - 1], up = slice[p];
          int ci = static_cast<int>(t.crossings.size());
          t.crossings.push_back({lo, up, e});
          t.visits[lo].push_back({e, ci});
          t.visits[up].push_back({e, ci});
          std::swap(slice[p - 1], slice[p]);
          break;
        }
      }
    }
    if (static_cast<int>(slice.size()) != initial)
      throw ValidationError(Err::InvalidFront, "strand count does not close up");
    t.end_ids = slice;
    return t;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { while (parent[a] != a) a = parent[a] = parent[parent[a]]; return a; }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Traversal directions per arc: +1 rightward (+x or +theta). Constraints:
/// the two arcs of a cusp run oppositely; wall-paired arcs run alike.
/// `seeds` pins specific arcs; leftover components are seeded at their first
/// cusp's lower arc.
struct Orientation {
  std::vector<int> dir;

  static Orientation solve(const Trace& t,
                           const std::vector<std::pair<int, int>>& seeds) {
    Orientation o;
    o.dir.assign(t.arc_count, 0);
    // adjacency: (arc, arc, relation) relation -1 opposite, +1 equal
    std::vector<std::vector<std::pair<int, int>>> adj(t.arc_count);
    for (const auto& c : t.cusps) {
      adj[c.lower].push_back({c.upper, -1});
      adj[c.upper].push_back({c.lower, -1});
    }
    for (std::size_t i = 0; i < t.start_ids.size(); ++i) {
      adj[t.start_ids[i]].push_back({t.end_ids[i], 1});
      adj[t.end_ids[i]].push_back({t.start_ids[i], 1});
    }
    auto flood = [&](int root, int value) {
      std::vector<int> stack{root};
      o.dir[root] = value;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (auto [b, rel] : adj[a]) {
          int want = rel * o.dir[a];
          if (o.dir[b] == 0) {
            o.dir[b] = want;
            stack.push_back(b);
          } else if (o.dir[b] != want) {
            throw ValidationError(Err::InvalidFront,
                                  "inconsistent strand orientations");
          }
        }
      }
    };
    for (auto [arc, value] : seeds) {
      if (o.dir[arc] == 0) flood(arc, value);
      else if (o.dir[arc] != value)
        throw ValidationError(Err::InvalidFront, "contradictory orientation seeds");
    }
    for (const auto& c : t.cusps)
      if (o.dir[c.lower] == 0) flood(c.lower, 1);
    for (int a = 0; a < t.arc_count; ++a)
      if (o.dir[a] == 0) flood(a, 1);
    return o;
  }
};

inline int component_count(const Trace& t) {
  UnionFind uf(t.arc_count);
  for (const auto& c : t.cusps) uf.unite(c.lower, c.upper);
  for (std::size_t i = 0; i < t.start_ids.size(); ++i)
    uf.unite(t.start_ids[i], t.end_ids[i]);
  std::vector<int> roots;
  for (int a = 0; a < t.arc_count; ++a) roots.push_back(uf.find(a));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return static_cast<int>(roots.size());
}

inline InvariantReport invariants_impl(const Trace& t, const Orientation& o,
                                       const std::vector<int>* wall) {
  InvariantReport r;
  int down = 0, up = 0;
  for (const auto& c : t.cusps) {
    if (c.left) ++r.left_cusps; else ++r.right_cusps;
    // Entering arc travels toward the cusp point: -x into a left cusp,
    // +x into a right cusp. Entering on the lower arc means z increases.
    int entering_dir = c.left ? -1 : 1;
    bool enter_lower = o.dir[c.lower] == entering_dir;
    if (enter_lower) ++up; else ++down;
  }
  if ((down - up) % 2 != 0)
    throw ValidationError(Err::OddCuspImbalance, "odd cusp imbalance");
  r.rot = (down - up) / 2;
  int signed_x = 0;
  for (const auto& c : t.crossings) {
    ++r.crossings;
    signed_x += (o.dir[c.lower_in] == o.dir[c.upper_in]) ? 1 : -1;
  }
  r.tb = signed_x - r.right_cusps;
  if (wall) {
    int w = 0;
    for (int s : *wall) w += s;
    r.winding = w;
    r.jplus = r.tb - w * w + 1;
  }
  return r;
}

}  // namespace detail

inline detail::Trace trace(const LineFront& f) {
  return detail::Trace::run(f.events, 0);
}

inline detail::Trace trace(const TorusFront& f) {
  return detail::Trace::run(f.events, f.wall_strands());
}

inline detail::Orientation orient(const LineFront& f, const detail::Trace& t) {
  std::vector<std::pair<int, int>> seeds;
  if (!t.cusps.empty()) seeds.push_back({t.cusps.front().lower, f.orientation});
  return detail::Orientation::solve(t, seeds);
}

inline detail::Orientation orient(const TorusFront& f, const detail::Trace& t) {
  std::vector<std::pair<int, int>> seeds;
  for (std::size_t i = 0; i < t.start_ids.size(); ++i)
    seeds.push_back({t.start_ids[i], f.wall_orientations[i]});
  return detail::Orientation::solve(t, seeds);
}

inline int components(const LineFront& f) { return detail::component_count(trace(f)); }
inline int components(const TorusFront& f) { return detail::component_count(trace(f)); }

inline InvariantReport invariants(const LineFront& f) {
  auto t = trace(f);
  auto o = orient(f, t);
  return detail::invariants_impl(t, o, nullptr);
}

inline InvariantReport invariants(const TorusFront& f) {
  auto t = trace(f);
  auto o = orient(f, t);
  return detail::invariants_impl(t, o, &f.wall_orientations);
}

template <typename Front>
int tb(const Front& f) { return invariants(f).tb; }

template <typename Front>
int rot(const Front& f) { return invariants(f).rot; }

inline int winding(const TorusFront& f) {
  int w = 0;
  for (int s : f.wall_orientations) w += s;
  return w;
}

inline int jplus(const TorusFront& f) {
  int w = winding(f);
  return tb(f) - w * w + 1;
}

/// Traversal order of crossings around the knot, for Gauss-type codes.
/// Walks every component; for each arc the crossings come in event order
/// (reversed when the arc is traversed leftward).
namespace detail {
inline std::vector<std::vector<int>> knot_walk(const Trace& t, const Orientation& o) {
  // left neighbor (via cusp or wall) and right neighbor per arc
  std::vector<int> left_peer(t.arc_count, -1), right_peer(t.arc_count, -1);
  std::vector<char> is_start(t.arc_count, 0), is_end(t.arc_count, 0);
  for (const auto& c : t.cusps) {
    if (c.left) {
      left_peer[c.lower] = c.upper;
      left_peer[c.upper] = c.lower;
    } else {
      right_peer[c.lower] = c.upper;
      right_peer[c.upper] = c.lower;
    }
  }
  for (std::size_t i = 0; i < t.start_ids.size(); ++i) {
    // sweep end wraps to sweep start
    right_peer[t.end_ids[i]] = t.start_ids[i];
    left_peer[t.start_ids[i]] = t.end_ids[i];
    is_end[t.end_ids[i]] = 1;
    is_start[t.start_ids[i]] = 1;
  }
  std::vector<bool> seen(t.arc_count, false);
  std::vector<std::vector<int>> walks;
  for (int a0 = 0; a0 < t.arc_count; ++a0) {
    if (seen[a0]) continue;
    std::vector<int> code;
    int arc = a0;
    int dir = o.dir[a0];
    do {
      seen[arc] = true;
      auto vs = t.visits[arc];
      if (dir < 0) std::reverse(vs.begin(), vs.end());
      for (auto [e, ci] : vs) code.push_back(ci);
      bool via_wall = dir > 0 ? bool(is_end[arc]) : bool(is_start[arc]);
      int next = dir > 0 ? right_peer[arc] : left_peer[arc];
      if (next == -1)
        throw ValidationError(Err::InvalidFront, "open strand end");
      // direction flips at cusps, persists across the wall
      if (!via_wall) dir = -dir;
      arc = next;
    } while (arc != a0);
    walks.push_back(std::move(code));
  }
  return walks;
}
}  // namespace detail

/// Canonical framed diagram code: smallest rotation/relabeling of the
/// crossing traversal sequence (both directions), plus tb and winding.
/// Equal codes certify the same framed diagram; unequal codes prove nothing.
struct FramedCode {
  std::vector<int> gauss;
  int tb = 0;
  int winding = 0;
  friend bool operator==(const FramedCode&, const FramedCode&) = default;
};

namespace detail {
inline std::vector<int> canonical_cycle(std::vector<int> seq) {
  if (seq.empty()) return seq;
  std::vector<int> best;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t s = 0; s < seq.size(); ++s) {
      std::vector<int> rot(seq.begin() + s, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + s);
      // relabel by first appearance
      std::vector<int> label(*std::max_element(seq.begin(), seq.end()) + 1, -1);
      int next = 0;
      for (auto& v : rot) {
        if (label[v] < 0) label[v] = next++;
        v = label[v];
      }
      if (best.empty() || rot < best) best = rot;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}
}  // namespace detail

template <typename Front>
FramedCode framed_code(const Front& f) {
  auto t = trace(f);
  auto o = orient(f, t);
  auto walks = detail::knot_walk(t, o);
  FramedCode code;
  std::vector<int> seq;
  for (auto& w : walks) seq.insert(seq.end(), w.begin(), w.end());
  code.gauss = detail::canonical_cycle(std::move(seq));
  auto rep = detail::invariants_impl(t, o, nullptr);
  code.tb = rep.tb;
  if constexpr (std::is_same_v<Front, TorusFront>) code.winding = winding(f);
  return code;
}

}  // namespace conormal
