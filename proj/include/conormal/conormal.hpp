#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "conormal/curve.hpp"
#include "conormal/front.hpp"
#include "conormal/rational.hpp"

namespace conormal {

/// One dot of the connect-the-dots construction: the conormal position of a
/// rectilinear segment, at a quarter angle (theta = sector * pi/2), plus the
/// turn sign of the corner that follows the segment.
struct Dot {
  int sector;           // theta in quarter turns: 0, 1(pi/2), 2(pi), 3(3pi/2)
  std::int64_t height;  // z value
  int turn;             // +1 left / -1 right at the next corner
};

struct DotPath {
  std::vector<Dot> dots;  // one per segment, traversal order
};

/// Segment -> dot per the four direction rules:
/// +x -> (pi/2, y), +y -> (pi, -x), -x -> (3pi/2, -y), -y -> (0, x).
inline DotPath dots(const RectCurve& c) {
  DotPath path;
  const auto& corners = c.corners();
  const std::size_t n = corners.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = corners[i];
    Dot d{};
    switch (c.axis(i)) {
      case Axis::PlusX:  d = {1, a.second, 0}; break;
      case Axis::PlusY:  d = {2, -a.first, 0}; break;
      case Axis::MinusX: d = {3, -a.second, 0}; break;
      case Axis::MinusY: d = {0, a.first, 0}; break;
    }
    d.turn = c.turn_after(i);
    path.dots.push_back(d);
  }
  return path;
}

namespace detail {

struct Chord {
  int sector;           // occupies [sector, sector+1] in quarter turns
  std::int64_t hl, hr;  // heights at the sector's left/right wall
  int dir;              // traversal: +1 toward +theta
  int idx;              // source chord index (dot i -> dot i+1)
  std::int64_t slope() const { return hr - hl; }
};

struct SectorCrossing {
  int sector;
  Rational s;  // offset in (0,1) within the sector
  Rational h;
  int a, b;    // chord indices
};

}  // namespace detail

/// The Section 2.2 front: connect consecutive dots by straight chords, one
/// quarter-turn wide each; dots where the adjacent turns disagree become
/// cusps; chord crossings (exact rational arithmetic) become crossings.
/// The wall sits just before theta = 0, so dots lying on theta = 0 are the
/// first events of the cyclic list.
inline TorusFront conormal_front(const RectCurve& c) {
  using detail::Chord;
  const DotPath path = dots(c);
  const std::size_t n = path.dots.size();

  std::vector<Chord> chords(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Dot& a = path.dots[i];
    const Dot& b = path.dots[(i + 1) % n];
    Chord ch;
    ch.dir = a.turn;
    ch.idx = static_cast<int>(i);
    if (a.turn > 0) {
      ch.sector = a.sector;
      ch.hl = a.height;
      ch.hr = b.height;
    } else {
      ch.sector = b.sector;
      ch.hl = b.height;
      ch.hr = a.height;
    }
    chords[i] = ch;
  }

  // Initial slice: sector-3 chords ordered bottom-up just left of the wall.
  // Chords sharing their right dot (a cusp on the wall) tie-break by slope:
  // the steeper chord sits lower just before the shared point.
  std::vector<int> slice;
  for (std::size_t i = 0; i < n; ++i)
    if (chords[i].sector == 3) slice.push_back(static_cast<int>(i));
  std::sort(slice.begin(), slice.end(), [&](int a, int b) {
    if (chords[a].hr != chords[b].hr) return chords[a].hr < chords[b].hr;
    return chords[a].slope() > chords[b].slope();
  });

  TorusFront front;
  for (int id : slice) front.wall_orientations.push_back(chords[id].dir);
  const std::vector<int> initial_slice = slice;

  // Dot events per wall u = 0..3.
  struct DotEvent {
    std::int64_t height;
    int kind;  // 0 pass, +1 left cusp, -1 right cusp
    int before, after;  // chord indices around the dot
  };
  std::map<int, std::vector<DotEvent>> wall_events;
  for (std::size_t i = 0; i < n; ++i) {
    const Dot& d = path.dots[i];
    int before = static_cast<int>((i + n - 1) % n);
    int after = static_cast<int>(i);
    int tb = path.dots[before].turn, ta = d.turn;
    int kind = (tb == ta) ? 0 : (tb < ta ? 1 : -1);
    wall_events[d.sector].push_back({d.height, kind, before, after});
  }
  for (auto& [u, evs] : wall_events)
    std::sort(evs.begin(), evs.end(),
              [](const DotEvent& a, const DotEvent& b) { return a.height < b.height; });

  // Exact crossings per sector.
  std::vector<detail::SectorCrossing> crossings;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Chord &A = chords[i], &B = chords[j];
      if (A.sector != B.sector) continue;
      std::int64_t dl = A.hl - B.hl, dr = A.hr - B.hr;
      if (dl == 0 || dr == 0 || (dl > 0) == (dr > 0)) continue;
      Rational s(B.hl - A.hl, A.slope() - B.slope());
      Rational h = Rational(A.hl) + Rational(A.slope()) * s;
      crossings.push_back({A.sector, s, h, static_cast<int>(i), static_cast<int>(j)});
    }
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const detail::SectorCrossing& a, const detail::SectorCrossing& b) {
              if (a.sector != b.sector) return a.sector < b.sector;
              if (a.s != b.s) return a.s < b.s;
              return a.h < b.h;
            });

  auto height_at = [&](int chord, int u) -> std::int64_t {
    return chords[chord].sector == u ? chords[chord].hl : chords[chord].hr;
  };
  auto position_of = [&](int chord) -> int {
    for (std::size_t k = 0; k < slice.size(); ++k)
      if (slice[k] == chord) return static_cast<int>(k);
    throw InternalError("chord missing from sweep slice");
  };

  std::size_t ci = 0;
  for (int u = 0; u < 4; ++u) {
    for (const DotEvent& ev : wall_events[u]) {
      switch (ev.kind) {
        case 0: {  // pass-through: swap the ending chord for the starting one
          int ending = path.dots[(ev.after) % n].turn > 0 ? ev.before : ev.after;
          int starting = ending == ev.before ? ev.after : ev.before;
          slice[position_of(ending)] = starting;
          break;
        }
        case -1: {  // right cusp: both chords end here
          int pa = position_of(ev.before), pb = position_of(ev.after);
          if (pa > pb) std::swap(pa, pb);
          if (pb != pa + 1)
            throw InternalError("right cusp strands not adjacent");
          front.events.push_back(R(pa + 1));
          slice.erase(slice.begin() + pa, slice.begin() + pb + 1);
          break;
        }
        case 1: {  // left cusp: both chords start here; flatter chord below
          int lo = ev.before, hi = ev.after;
          if (chords[lo].slope() > chords[hi].slope()) std::swap(lo, hi);
          int pos = 0;
          for (int id : slice)
            if (height_at(id, u) < ev.height) ++pos;
          front.events.push_back(L(pos + 1));
          slice.insert(slice.begin() + pos, {lo, hi});
          break;
        }
      }
    }
    while (ci < crossings.size() && crossings[ci].sector == u) {
      // group chords concurrent at one point
      std::size_t cj = ci;
      std::set<int> group;
      while (cj < crossings.size() && crossings[cj].sector == u &&
             crossings[cj].s == crossings[ci].s && crossings[cj].h == crossings[ci].h) {
        group.insert(crossings[cj].a);
        group.insert(crossings[cj].b);
        ++cj;
      }
      std::vector<int> positions;
      for (int chord : group) positions.push_back(position_of(chord));
      std::sort(positions.begin(), positions.end());
      const int m = static_cast<int>(positions.size());
      if (positions.back() - positions.front() + 1 != m)
        throw InternalError("concurrent chords not adjacent in slice");
      int base = positions.front();
      for (int a = 0; a < m - 1; ++a)
        for (int b = 0; b < m - 1 - a; ++b) {
          front.events.push_back(X(base + b + 1));
          std::swap(slice[base + b], slice[base + b + 1]);
        }
      ci = cj;
    }
  }

  if (slice != initial_slice)
    throw InternalError("sweep slice does not close up at the wall");
  return front;
}

}  // namespace conormal
