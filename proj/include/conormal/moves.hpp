#pragma once

#include <optional>
#include <random>
#include <vector>

#include "conormal/front.hpp"

namespace conormal {

/// Legendrian front moves. Every exposed variant is an isotopy: tb, rot and
/// (for torus fronts) winding are unchanged.
///   I   triple-point slide            [X p, X p+1, X p] <-> [X p+1, X p, X p+1]
///   II  cusp-crossing birth/death     [L p+1] <-> [L p, X p+1, X p]  (a strand
///       passes through a cusp; four reflections, crossings born or killed)
///   III cusp-crossing slide           [X p+1, R p] <-> [X p, R p+1] and the
///       left-cusp mirror (a crossing moves past a cusp)
enum class MoveKind { I, II, III };

struct Move {
  MoveKind kind;
  std::size_t site;  // index of the first event of the pattern
  int variant;       // which local pattern, see apply_move
};

namespace move_detail {

// strand count before each event index (and after the last)
inline std::vector<int> widths(const std::vector<FrontEvent>& ev) {
  std::vector<int> w{0};
  for (const auto& e : ev) {
    int d = e.kind == EventKind::LeftCusp ? 2
          : e.kind == EventKind::RightCusp ? -2 : 0;
    w.push_back(w.back() + d);
  }
  return w;
}

inline bool is(const FrontEvent& e, EventKind k, int p) {
  return e.kind == k && e.pos == p;
}

/// Rewrites events[site..] if the variant's left-hand pattern matches;
/// returns the replacement length.
inline std::optional<std::vector<FrontEvent>> rewrite(
    const std::vector<FrontEvent>& ev, const std::vector<int>& width,
    MoveKind kind, std::size_t site, int variant) {
  auto at = [&](std::size_t i) -> const FrontEvent& { return ev[i]; };
  const std::size_t n = ev.size();
  switch (kind) {
    case MoveKind::I: {
      if (site + 3 > n) return std::nullopt;
      int p = at(site).pos;
      if (variant == 0) {  // [p, p+1, p] -> [p+1, p, p+1]
        if (is(at(site), EventKind::Crossing, p) &&
            is(at(site + 1), EventKind::Crossing, p + 1) &&
            is(at(site + 2), EventKind::Crossing, p))
          return std::vector<FrontEvent>{X(p + 1), X(p), X(p + 1)};
      } else {             // [p, p-1, p] -> [p-1, p, p-1]
        if (p >= 2 && is(at(site), EventKind::Crossing, p) &&
            is(at(site + 1), EventKind::Crossing, p - 1) &&
            is(at(site + 2), EventKind::Crossing, p))
          return std::vector<FrontEvent>{X(p - 1), X(p), X(p - 1)};
      }
      return std::nullopt;
    }
    case MoveKind::II: {
      // births: a lone cusp grows two crossings against a neighbor strand
      int p = at(site).pos;
      switch (variant) {
        case 0:  // birth below: [L p+1] -> [L p, X p+1, X p], needs strand at p
          if (is(at(site), EventKind::LeftCusp, p) && p >= 2)
            return std::vector<FrontEvent>{L(p - 1), X(p), X(p - 1)};
          return std::nullopt;
        case 1:  // birth above: [L p] -> [L p+1, X p, X p+1], strand at p
          if (is(at(site), EventKind::LeftCusp, p) && p <= width[site])
            return std::vector<FrontEvent>{L(p + 1), X(p), X(p + 1)};
          return std::nullopt;
        case 2:  // right-cusp birth below: [R p+1] -> [X p, X p+1, R p]
          if (is(at(site), EventKind::RightCusp, p) && p >= 2)
            return std::vector<FrontEvent>{X(p - 1), X(p), R(p - 1)};
          return std::nullopt;
        case 3:  // right-cusp birth above: [R p] -> [X p+1, X p, R p+1]
          if (is(at(site), EventKind::RightCusp, p) && p + 2 <= width[site])
            return std::vector<FrontEvent>{X(p + 1), X(p), R(p + 1)};
          return std::nullopt;
        case 4:  // death below: [L p, X p+1, X p] -> [L p+1]
          if (site + 3 <= n && is(at(site), EventKind::LeftCusp, p) &&
              is(at(site + 1), EventKind::Crossing, p + 1) &&
              is(at(site + 2), EventKind::Crossing, p))
            return std::vector<FrontEvent>{L(p + 1)};
          return std::nullopt;
        case 5:  // death above: [L p, X p-1, X p] -> [L p-1]
          if (site + 3 <= n && is(at(site), EventKind::LeftCusp, p) && p >= 2 &&
              is(at(site + 1), EventKind::Crossing, p - 1) &&
              is(at(site + 2), EventKind::Crossing, p))
            return std::vector<FrontEvent>{L(p - 1)};
          return std::nullopt;
        case 6:  // right death below: [X p, X p+1, R p] -> [R p+1]
          if (site + 3 <= n && is(at(site), EventKind::Crossing, p) &&
              is(at(site + 1), EventKind::Crossing, p + 1) &&
              is(at(site + 2), EventKind::RightCusp, p))
            return std::vector<FrontEvent>{R(p + 1)};
          return std::nullopt;
        case 7:  // right death above: [X p, X p-1, R p] -> [R p-1]
          if (site + 3 <= n && p >= 2 && is(at(site), EventKind::Crossing, p) &&
              is(at(site + 1), EventKind::Crossing, p - 1) &&
              is(at(site + 2), EventKind::RightCusp, p))
            return std::vector<FrontEvent>{R(p - 1)};
          return std::nullopt;
      }
      return std::nullopt;
    }
    case MoveKind::III: {
      if (site + 2 > n) return std::nullopt;
      int p = at(site).pos;
      switch (variant) {
        case 0:  // [X p+1, R p] -> [X p, R p+1]
          if (is(at(site), EventKind::Crossing, p) && p >= 2 &&
              is(at(site + 1), EventKind::RightCusp, p - 1))
            return std::vector<FrontEvent>{X(p - 1), R(p)};
          return std::nullopt;
        case 1:  // [X p, R p+1] -> [X p+1, R p]
          if (is(at(site), EventKind::Crossing, p) &&
              is(at(site + 1), EventKind::RightCusp, p + 1))
            return std::vector<FrontEvent>{X(p + 1), R(p)};
          return std::nullopt;
        case 2:  // [L p, X p+1] -> [L p+1, X p]
          if (is(at(site), EventKind::LeftCusp, p) &&
              is(at(site + 1), EventKind::Crossing, p + 1))
            return std::vector<FrontEvent>{L(p + 1), X(p)};
          return std::nullopt;
        case 3:  // [L p+1, X p] -> [L p, X p+1]
          if (is(at(site), EventKind::LeftCusp, p) && p >= 2 &&
              is(at(site + 1), EventKind::Crossing, p - 1))
            return std::vector<FrontEvent>{L(p - 1), X(p)};
          return std::nullopt;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::size_t pattern_length(MoveKind kind, int variant) {
  if (kind == MoveKind::I) return 3;
  if (kind == MoveKind::III) return 2;
  return variant < 4 ? 1 : 3;  // II births consume one event, deaths three
}

template <typename Front>
Front apply_impl(const Front& f, const Move& m) {
  auto width = widths(f.events);
  auto repl = rewrite(f.events, width, m.kind, m.site, m.variant);
  if (!repl)
    throw ValidationError(Err::IllegalSite, "move pattern does not match");
  Front out = f;
  auto begin = out.events.begin() + m.site;
  out.events.erase(begin, begin + pattern_length(m.kind, m.variant));
  out.events.insert(out.events.begin() + m.site, repl->begin(), repl->end());
  // reject rewrites that leave the strand bookkeeping inconsistent
  (void)trace(out);
  return out;
}

}  // namespace move_detail

inline LineFront apply_move(const LineFront& f, const Move& m) {
  return move_detail::apply_impl(f, m);
}
inline TorusFront apply_move(const TorusFront& f, const Move& m) {
  return move_detail::apply_impl(f, m);
}

/// All moves whose pattern matches somewhere and whose result is a valid
/// front with the same classical invariants (the rewrite rules guarantee
/// this; validity is re-checked).
template <typename Front>
std::vector<Move> legal_moves(const Front& f) {
  std::vector<Move> out;
  auto width = move_detail::widths(f.events);
  for (std::size_t site = 0; site < f.events.size(); ++site) {
    for (MoveKind kind : {MoveKind::I, MoveKind::II, MoveKind::III}) {
      int variants = kind == MoveKind::I ? 2 : kind == MoveKind::II ? 8 : 4;
      for (int v = 0; v < variants; ++v) {
        if (!move_detail::rewrite(f.events, width, kind, site, v)) continue;
        Move m{kind, site, v};
        try {
          (void)apply_move(f, m);
          out.push_back(m);
        } catch (const ValidationError&) {
        }
      }
    }
  }
  return out;
}

/// Performs `count` random legal moves, skipping steps when no move applies.
template <typename Front>
Front random_moves(Front f, int count, std::mt19937& rng) {
  for (int i = 0; i < count; ++i) {
    auto moves = legal_moves(f);
    if (moves.empty()) break;
    f = apply_move(f, moves[rng() % moves.size()]);
  }
  return f;
}

}  // namespace conormal
