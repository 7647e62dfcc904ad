#pragma once

#include <vector>

#include "conormal/front.hpp"

namespace conormal {

/// A torus-front pattern cut open at the theta = 0 wall: an event list with
/// m strands entering on the left and m leaving on the right, endpoint i on
/// the left matching endpoint i on the right (bottom-up).
struct Tangle {
  std::vector<FrontEvent> events;
  std::vector<int> endpoint_orientations;  // per strand, +1 = +theta
  int strands() const { return static_cast<int>(endpoint_orientations.size()); }
};

inline Tangle cut(const TorusFront& p) {
  return Tangle{p.events, p.wall_orientations};
}

namespace satellite_detail {
/// Bubble an order of 2n local strands into a target order, emitting one
/// crossing per inverted adjacent pair. Keys are target positions.
inline void sort_emitting(std::vector<int>& keys, int base,
                          std::vector<FrontEvent>& out) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t s = 0; s + 1 < keys.size(); ++s) {
      if (keys[s] > keys[s + 1]) {
        std::swap(keys[s], keys[s + 1]);
        out.push_back(X(base + static_cast<int>(s)));
        moved = true;
      }
    }
  }
}
}  // namespace satellite_detail

/// The n-parallel-copy of a front: n Reeb pushoffs, copy i displaced
/// downward by (i-1) steps. Cusps become n stacked cusps whose branches
/// re-sort through C(n,2) crossings between lower branches and upper
/// branches of copies further down; crossings become n x n grids. On each
/// branch the copies keep their vertical order, copy 1 on top.
inline LineFront n_copy(const LineFront& c, int n) {
  if (n <= 0) throw ValidationError(Err::BadN, "copy count must be positive");
  if (n == 1) return c;
  LineFront out;
  out.orientation = c.orientation;
  for (const auto& ev : c.events) {
    const int P = n * (ev.pos - 1) + 1;
    switch (ev.kind) {
      case EventKind::LeftCusp: {
        // stacked cusps, bottom pair created last; then fan the pairs out
        // into the two parallel branch blocks
        for (int j = 0; j < n; ++j) out.events.push_back(L(P));
        // local order now: Cn-lo, Cn-up, ..., C1-lo, C1-up
        std::vector<int> keys;
        for (int k = n; k >= 1; --k) {
          keys.push_back(n - k + 1);       // Ck-lo -> slot n-k+1
          keys.push_back(2 * n - k + 1);   // Ck-up -> slot 2n-k+1
        }
        satellite_detail::sort_emitting(keys, P, out.events);
        break;
      }
      case EventKind::RightCusp: {
        // gather the branch blocks into adjacent per-copy pairs, then close
        std::vector<int> keys;
        for (int k = n; k >= 1; --k) keys.push_back(2 * (n - k) + 1);  // Ck-lo
        for (int k = n; k >= 1; --k) keys.push_back(2 * (n - k) + 2);  // Ck-up
        satellite_detail::sort_emitting(keys, P, out.events);
        for (int j = 0; j < n; ++j) out.events.push_back(R(P));
        break;
      }
      case EventKind::Crossing: {
        // move the lower block of n strands past the upper block
        for (int i = n; i >= 1; --i)
          for (int q = i; q <= n + i - 1; ++q)
            out.events.push_back(X(P + q - 1));
        break;
      }
    }
  }
  return out;
}

/// Where the pattern tangle landed inside a spliced front, for callers that
/// inspect the satellite's generators box by box.
struct SpliceLayout {
  std::size_t tangle_begin = 0;  // index range into the result's events
  std::size_t tangle_end = 0;
};

/// Legendrian satellite: replace the companion by its m-copy and insert the
/// pattern, cut at the wall, into the m parallel strands at the first
/// available slice (just right of the companion's leading left-cusp nest).
/// Pattern wall strand i rides companion copy strand i, counted bottom-up.
inline LineFront splice(const TorusFront& p, const LineFront& c,
                        SpliceLayout* layout = nullptr) {
  Tangle t = cut(p);
  const int m = t.strands();
  if (m == 0) throw ValidationError(Err::BadN, "pattern has no wall strands");
  LineFront copy = n_copy(c, m);
  if (c.events.empty() || c.events.front().kind != EventKind::LeftCusp)
    throw ValidationError(Err::InvalidFront, "companion must open with a left cusp");
  // events of the leading nest: m cusps + C(m,2) sorting crossings
  std::size_t lead = static_cast<std::size_t>(m + m * (m - 1) / 2);
  LineFront out;
  out.orientation = c.orientation;
  out.events.assign(copy.events.begin(), copy.events.begin() + lead);
  if (layout) layout->tangle_begin = out.events.size();
  // the m lower-branch copies occupy positions 1..m here; the tangle's
  // internal growth stays below the parked upper branches, so positions
  // carry over unchanged
  out.events.insert(out.events.end(), t.events.begin(), t.events.end());
  if (layout) layout->tangle_end = out.events.size();
  out.events.insert(out.events.end(), copy.events.begin() + lead, copy.events.end());
  out.is_link = detail::component_count(detail::Trace::run(out.events, 0)) > 1;
  return out;
}

/// Front of the once-stabilized unknot; rot equals `sign`.
inline LineFront stabilized_unknot(int sign) {
  LineFront f;
  if (sign >= 0) {
    f.events = {L(1), L(1), R(2), R(1)};
    f.orientation = 1;
  } else {
    f.events = {L(1), L(3), R(2), R(1)};
    f.orientation = -1;
  }
  return f;
}

}  // namespace conormal
