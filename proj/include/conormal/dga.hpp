#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "conormal/front.hpp"

namespace conormal {

using Word = std::vector<int>;  // generator indices, left to right

struct DgaGenerator {
  std::string name;
  int degree;
  bool right_cusp;
  std::size_t event;  // front event index
};

/// Chekanov-Eliashberg algebra of a knot front over Z/2. Words of the
/// differential are stored as a sorted set (symmetric difference = sum).
struct Dga {
  std::vector<DgaGenerator> generators;
  std::vector<std::vector<Word>> differential;
  int rot = 0;
  int grading_modulus = 0;  // 0 for integer grading, else 2|rot|
};

using Augmentation = std::vector<std::uint8_t>;  // 0/1 per generator

/// degree -> dimension, zero entries dropped.
using PoincarePolynomial = std::map<int, int>;

namespace dga_detail {

// Resolved diagram: right cusps become crossing + rightward cap.
struct Resolved {
  enum Type { Open, Close, Cross } type;
  int pos;  // 1-based lower strand
  int gen;  // generator index for Cross
};

struct Interval {
  int lo, hi;  // 0-based strand positions, lo < hi
};

// Boundary frontier of a partial disk, counterclockwise order anchored at
// the positive corner: gaps[0] ival[0] gaps[1] ... ival[k-1] gaps[k].
// Letters found at an interval's hi endpoint append to the gap before it;
// letters at the lo endpoint prepend to the gap after it.
struct SweepState {
  std::vector<Interval> ivals;
  std::vector<Word> gaps;
};

inline void emit_words_from(const std::vector<Resolved>& resolved, int start,
                            SweepState state, std::vector<Word>& out) {
  // Depth-first over the event list, westward. Branches fork at crossings
  // (corner or pass) and closes (loop swallow).
  if (state.ivals.empty()) {
    out.push_back(state.gaps[0]);
    return;
  }
  if (start < 0) return;
  const Resolved& ev = resolved[start];
  const int q = ev.pos - 1;  // 0-based lower strand of the event

  if (ev.type == Resolved::Cross) {
    // options per endpoint touching the crossing
    struct Choice { int ival; bool hi; int new_pos; bool letter; };
    std::vector<std::vector<Choice>> menu;
    for (std::size_t i = 0; i < state.ivals.size(); ++i) {
      const Interval& iv = state.ivals[i];
      if (iv.hi == q) {
        menu.push_back({{(int)i, true, q + 1, false}, {(int)i, true, q, true}});
      } else if (iv.hi == q + 1) {
        menu.push_back({{(int)i, true, q, false}});
      }
      if (iv.lo == q) {
        menu.push_back({{(int)i, false, q + 1, false}});
      } else if (iv.lo == q + 1) {
        menu.push_back({{(int)i, false, q, false}, {(int)i, false, q + 1, true}});
      }
    }
    std::vector<int> pick(menu.size(), 0);
    while (true) {
      SweepState next = state;
      bool ok = true;
      for (std::size_t m = 0; m < menu.size(); ++m) {
        const Choice& ch = menu[m][pick[m]];
        Interval& iv = next.ivals[ch.ival];
        (ch.hi ? iv.hi : iv.lo) = ch.new_pos;
        if (ch.letter) {
          if (ch.hi)
            next.gaps[ch.ival].push_back(ev.gen);
          else
            next.gaps[ch.ival + 1].insert(next.gaps[ch.ival + 1].begin(), ev.gen);
        }
      }
      for (const Interval& iv : next.ivals)
        if (iv.lo >= iv.hi) { ok = false; break; }
      if (ok) emit_words_from(resolved, start - 1, std::move(next), out);
      // advance mixed-radix counter
      std::size_t m = 0;
      for (; m < menu.size(); ++m) {
        if (++pick[m] < (int)menu[m].size()) break;
        pick[m] = 0;
      }
      if (m == menu.size()) break;
    }
    return;
  }

  if (ev.type == Resolved::Close) {
    // westward: strands q, q+1 appear; enclosing intervals may swallow the loop
    SweepState shifted = state;
    for (Interval& iv : shifted.ivals) {
      if (iv.lo >= q) iv.lo += 2;
      if (iv.hi >= q) iv.hi += 2;
    }
    std::vector<int> splittable;
    for (std::size_t i = 0; i < shifted.ivals.size(); ++i)
      if (shifted.ivals[i].lo < q && shifted.ivals[i].hi > q + 1)
        splittable.push_back((int)i);
    const std::size_t combos = std::size_t(1) << splittable.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      SweepState next = shifted;
      // split from the topmost index down so indices stay valid
      for (int b = (int)splittable.size() - 1; b >= 0; --b) {
        if (!(mask >> b & 1)) continue;
        int i = splittable[b];
        Interval whole = next.ivals[i];
        next.ivals[i] = {q + 1, whole.hi};
        next.ivals.insert(next.ivals.begin() + i + 1, Interval{whole.lo, q});
        next.gaps.insert(next.gaps.begin() + i + 1, Word{});
      }
      emit_words_from(resolved, start - 1, std::move(next), out);
    }
    return;
  }

  // Open: strands q, q+1 vanish westward. Every endpoint on them must close.
  SweepState next = state;
  for (int i = (int)next.ivals.size() - 1; i >= 0; --i) {
    Interval& iv = next.ivals[i];
    bool lo_on = iv.lo == q || iv.lo == q + 1;
    bool hi_on = iv.hi == q || iv.hi == q + 1;
    if (lo_on != hi_on) return;  // a lone arc cannot continue past the cap
    if (!lo_on) continue;
    if (iv.lo != q || iv.hi != q + 1) return;
    next.ivals.erase(next.ivals.begin() + i);
    Word tail = std::move(next.gaps[i + 1]);
    next.gaps[i].insert(next.gaps[i].end(), tail.begin(), tail.end());
    next.gaps.erase(next.gaps.begin() + i + 1);
  }
  for (Interval& iv : next.ivals) {
    if (iv.lo > q + 1) iv.lo -= 2;
    if (iv.hi > q + 1) iv.hi -= 2;
  }
  emit_words_from(resolved, start - 1, std::move(next), out);
}

inline void xor_into(std::vector<Word>& acc, const std::vector<Word>& words) {
  for (const Word& w : words) {
    auto it = std::lower_bound(acc.begin(), acc.end(), w);
    if (it != acc.end() && *it == w)
      acc.erase(it);
    else
      acc.insert(it, w);
  }
}

}  // namespace dga_detail

/// Maslov potential per arc (jumps by one at cusps, upper strand higher).
/// For rot != 0 the potential only closes up modulo 2|rot|.
inline std::vector<int> maslov_potential(const detail::Trace& t, int modulus) {
  std::vector<int> mu(t.arc_count, INT32_MIN);
  std::vector<std::vector<std::pair<int, int>>> adj(t.arc_count);  // (other, offset)
  for (const auto& c : t.cusps) {
    adj[c.lower].push_back({c.upper, +1});
    adj[c.upper].push_back({c.lower, -1});
  }
  for (int root = 0; root < t.arc_count; ++root) {
    if (mu[root] != INT32_MIN) continue;
    mu[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (auto [b, off] : adj[a]) {
        int want = mu[a] + off;
        if (mu[b] == INT32_MIN) {
          mu[b] = want;
          stack.push_back(b);
        } else if (mu[b] != want) {
          int defect = mu[b] - want;
          if (modulus == 0 || defect % modulus != 0)
            throw InternalError("Maslov potential does not close up");
        }
      }
    }
  }
  return mu;
}

/// Builds the Chekanov-Eliashberg DGA of a knot front by resolving it and
/// counting admissible disks with a single positive corner. Generators are
/// the crossings and right cusps; the disk count sweeps away from the
/// positive corner with convex negative corners and loop swallows.
inline Dga build_dga(const LineFront& f, bool strict_integer_grading = false) {
  using namespace dga_detail;
  auto t = trace(f);
  if (detail::component_count(t) != 1)
    throw ValidationError(Err::ComponentMismatch, "DGA needs a knot, not a link");
  auto o = orient(f, t);
  auto rep = detail::invariants_impl(t, o, nullptr);

  Dga dga;
  dga.rot = rep.rot;
  dga.grading_modulus = rep.rot == 0 ? 0 : 2 * std::abs(rep.rot);
  if (strict_integer_grading && dga.grading_modulus != 0)
    throw ValidationError(Err::UngradableFront,
                          "rotation number is nonzero; no integer grading");
  auto mu = maslov_potential(t, dga.grading_modulus);

  auto norm_deg = [&](int d) {
    if (dga.grading_modulus == 0) return d;
    int m = dga.grading_modulus;
    return ((d % m) + m) % m;
  };

  // resolved event list + generators, in diagram order
  std::vector<Resolved> resolved;
  std::size_t cusp_i = 0, cross_i = 0;
  for (std::size_t e = 0; e < f.events.size(); ++e) {
    const auto& ev = f.events[e];
    switch (ev.kind) {
      case EventKind::LeftCusp:
        resolved.push_back({Resolved::Open, ev.pos, -1});
        ++cusp_i;
        break;
      case EventKind::RightCusp: {
        int g = static_cast<int>(dga.generators.size());
        dga.generators.push_back(
            {"a" + std::to_string(g + 1), norm_deg(1), true, e});
        resolved.push_back({Resolved::Cross, ev.pos, g});
        resolved.push_back({Resolved::Close, ev.pos, -1});
        ++cusp_i;
        break;
      }
      case EventKind::Crossing: {
        const auto& cr = t.crossings[cross_i++];
        int g = static_cast<int>(dga.generators.size());
        dga.generators.push_back(
            {"a" + std::to_string(g + 1),
             norm_deg(mu[cr.upper_in] - mu[cr.lower_in]), false, e});
        resolved.push_back({Resolved::Cross, ev.pos, g});
        break;
      }
    }
  }

  // reflected copy for disks opening to the east
  std::vector<Resolved> mirrored(resolved.rbegin(), resolved.rend());
  for (auto& ev : mirrored) {
    if (ev.type == Resolved::Open) ev.type = Resolved::Close;
    else if (ev.type == Resolved::Close) ev.type = Resolved::Open;
  }

  dga.differential.resize(dga.generators.size());
  for (std::size_t r = 0; r < resolved.size(); ++r) {
    if (resolved[r].type != Resolved::Cross) continue;
    int g = resolved[r].gen;
    SweepState seed;
    seed.ivals = {Interval{resolved[r].pos - 1, resolved[r].pos}};
    seed.gaps = {Word{}, Word{}};
    std::vector<Word> west;
    emit_words_from(resolved, static_cast<int>(r) - 1, seed, west);
    std::vector<Word> east;
    emit_words_from(mirrored, static_cast<int>(resolved.size() - 2 - r), seed, east);
    for (Word& w : east) std::reverse(w.begin(), w.end());

    std::vector<Word>& d = dga.differential[g];
    xor_into(d, west);
    xor_into(d, east);
  }

  // every word must drop degree by exactly one
  for (std::size_t g = 0; g < dga.generators.size(); ++g) {
    for (const Word& w : dga.differential[g]) {
      int deg = 0;
      for (int letter : w) deg += dga.generators[letter].degree;
      int want = dga.generators[g].degree - 1;
      if (dga.grading_modulus == 0 ? deg != want
                                   : norm_deg(deg) != norm_deg(want))
        throw InternalError("differential word breaks the grading");
    }
  }
  return dga;
}

/// Full Leibniz expansion of d(d(g)) over Z/2; empty for every generator iff
/// the differential squares to zero.
inline bool d_squared_is_zero(const Dga& dga) {
  using namespace dga_detail;
  for (std::size_t g = 0; g < dga.generators.size(); ++g) {
    std::vector<Word> acc;
    for (const Word& w : dga.differential[g]) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (const Word& inner : dga.differential[w[i]]) {
          Word expanded(w.begin(), w.begin() + i);
          expanded.insert(expanded.end(), inner.begin(), inner.end());
          expanded.insert(expanded.end(), w.begin() + i + 1, w.end());
          xor_into(acc, {expanded});
        }
      }
    }
    if (!acc.empty()) return false;
  }
  return true;
}

/// All graded augmentations, in lexicographic order of the assignment to
/// degree-zero generators (generator order = diagram order).
inline std::vector<Augmentation> augmentations(const Dga& dga) {
  const std::size_t n = dga.generators.size();
  std::vector<int> vars;  // generators allowed to be nonzero
  for (std::size_t g = 0; g < n; ++g)
    if (dga.generators[g].degree == 0) vars.push_back((int)g);

  // reduce each constraint eps(d g) = 0 to monomials over the vars
  struct Constraint {
    bool constant = false;            // contains the empty word
    std::vector<std::vector<int>> monomials;  // sets of var positions
    int max_var = -1;                 // last var position appearing
  };
  std::vector<int> var_pos(n, -1);
  for (std::size_t i = 0; i < vars.size(); ++i) var_pos[vars[i]] = (int)i;
  std::vector<Constraint> constraints;
  for (std::size_t g = 0; g < n; ++g) {
    Constraint c;
    bool nontrivial = false;
    for (const Word& w : dga.differential[g]) {
      bool alive = true;
      std::set<int> mono;
      for (int letter : w) {
        if (var_pos[letter] < 0) { alive = false; break; }
        mono.insert(var_pos[letter]);
      }
      if (!alive) continue;
      nontrivial = true;
      if (mono.empty()) {
        c.constant = !c.constant;
      } else {
        std::vector<int> m(mono.begin(), mono.end());
        c.max_var = std::max(c.max_var, m.back());
        auto it = std::find(c.monomials.begin(), c.monomials.end(), m);
        if (it != c.monomials.end()) c.monomials.erase(it);  // Z/2 cancel
        else c.monomials.push_back(m);
      }
    }
    if (nontrivial || c.constant) constraints.push_back(std::move(c));
  }
  // constraints with no variables at all must already vanish
  for (const auto& c : constraints)
    if (c.monomials.empty() && c.constant) return {};

  // group constraints by the last variable they mention; a constraint with
  // max_var = m becomes checkable once vars 0..m are assigned
  std::vector<std::vector<const Constraint*>> checkable(vars.size() + 1);
  for (const auto& c : constraints)
    if (!c.monomials.empty()) checkable[c.max_var + 1].push_back(&c);

  std::vector<Augmentation> found;
  std::vector<std::uint8_t> assign(vars.size(), 0);
  auto eval = [&](const Constraint& c) {
    bool v = c.constant;
    for (const auto& m : c.monomials) {
      bool prod = true;
      for (int p : m)
        if (!assign[p]) { prod = false; break; }
      v ^= prod;
    }
    return !v;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    for (const Constraint* c : checkable[k])
      if (!eval(*c)) return;
    if (k == vars.size()) {
      Augmentation a(dga.generators.size(), 0);
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = assign[i];
      found.push_back(std::move(a));
      return;
    }
    for (int v : {0, 1}) {
      assign[k] = static_cast<std::uint8_t>(v);
      self(self, k + 1);
    }
    assign[k] = 0;
  };
  rec(rec, 0);
  return found;
}

inline bool is_augmentation(const Dga& dga, const Augmentation& e) {
  if (e.size() != dga.generators.size()) return false;
  for (std::size_t g = 0; g < dga.generators.size(); ++g) {
    if (e[g] && dga.generators[g].degree != 0) return false;
    bool sum = false;
    for (const Word& w : dga.differential[g]) {
      bool prod = true;
      for (int letter : w)
        if (!e[letter]) { prod = false; break; }
      sum ^= prod;
    }
    if (sum) return false;
  }
  return true;
}

/// Per-degree boundary matrices of the augmentation-twisted differential,
/// keeping word-length-one terms. matrices[d] maps degree d to d-1 and is
/// indexed [target][source] over the per-degree generator lists.
struct LinearizedComplex {
  std::map<int, std::vector<int>> basis;  // degree -> generator indices
  std::map<int, std::vector<std::vector<std::uint8_t>>> matrices;
};

inline LinearizedComplex linearize(const Dga& dga, const Augmentation& e) {
  if (!is_augmentation(dga, e))
    throw ValidationError(Err::NotAnAugmentation, "not a graded augmentation");
  LinearizedComplex lc;
  std::vector<int> index_in_degree(dga.generators.size());
  for (std::size_t g = 0; g < dga.generators.size(); ++g) {
    auto& basis = lc.basis[dga.generators[g].degree];
    index_in_degree[g] = (int)basis.size();
    basis.push_back((int)g);
  }
  for (auto& [deg, basis] : lc.basis) {
    auto target = lc.basis.find(deg - 1);
    lc.matrices[deg].assign(target == lc.basis.end() ? 0 : target->second.size(),
                            std::vector<std::uint8_t>(basis.size(), 0));
  }
  for (std::size_t g = 0; g < dga.generators.size(); ++g) {
    const int deg = dga.generators[g].degree;
    auto& M = lc.matrices[deg];
    for (const Word& w : dga.differential[g]) {
      // substitute letter -> letter + eps(letter); keep length-one terms
      for (std::size_t i = 0; i < w.size(); ++i) {
        bool coeff = true;
        for (std::size_t j = 0; j < w.size(); ++j) {
          if (j == i) continue;
          if (!e[w[j]]) { coeff = false; break; }
        }
        if (!coeff) continue;
        if (dga.generators[w[i]].degree != deg - 1)
          throw InternalError("linearized term off by more than one degree");
        if (M.empty()) throw InternalError("missing target block");
        M[index_in_degree[w[i]]][index_in_degree[g]] =
            M[index_in_degree[w[i]]][index_in_degree[g]] ^ 1;
      }
    }
  }
  return lc;
}

namespace dga_detail {
inline int gf2_rank(std::vector<std::vector<std::uint8_t>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !m[pivot][c]) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if ((int)r != rank && m[r][c])
        for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k];
    if (++rank == (int)rows) break;
  }
  return rank;
}
}  // namespace dga_detail

/// Z/2 homology dimensions of the linearized complex.
inline PoincarePolynomial poincare(const Dga& dga, const Augmentation& e) {
  if (dga.grading_modulus != 0)
    throw ValidationError(Err::CyclicGrading,
                          "Poincare polynomial needs rot = 0");
  auto lc = linearize(dga, e);
  // verify the chain complex law
  for (auto& [deg, M] : lc.matrices) {
    auto up = lc.matrices.find(deg + 1);
    if (up == lc.matrices.end() || M.empty() || up->second.empty()) continue;
    const auto& A = M;
    const auto& B = up->second;
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = 0; j < B[0].size(); ++j) {
        std::uint8_t s = 0;
        for (std::size_t k = 0; k < B.size(); ++k) s ^= A[i][k] & B[k][j];
        if (s) throw InternalError("linearized differential does not square to zero");
      }
  }
  PoincarePolynomial poly;
  for (auto& [deg, basis] : lc.basis) {
    int dim = (int)basis.size();
    int r_out = dga_detail::gf2_rank(lc.matrices[deg]);
    int r_in = 0;
    auto up = lc.matrices.find(deg + 1);
    if (up != lc.matrices.end()) r_in = dga_detail::gf2_rank(up->second);
    int h = dim - r_out - r_in;
    if (h < 0) throw InternalError("negative homology dimension");
    if (h > 0) poly[deg] = h;
  }
  return poly;
}

/// { poincare(d, e) : e augmentation }, deduplicated and canonically ordered.
inline std::set<PoincarePolynomial> poincare_set(const LineFront& f) {
  Dga dga = build_dga(f);
  if (dga.grading_modulus != 0)
    throw ValidationError(Err::CyclicGrading,
                          "Poincare set needs rot = 0");
  std::set<PoincarePolynomial> out;
  for (const auto& e : augmentations(dga)) out.insert(poincare(dga, e));
  return out;
}

/// Graded normal rulings of a knot front: pair strands at cusps, allow
/// switches at degree-zero crossings subject to the normality condition.
/// Returns the number of rulings.
inline int graded_ruling_count(const LineFront& f) {
  auto t = trace(f);
  if (detail::component_count(t) != 1)
    throw ValidationError(Err::ComponentMismatch, "rulings need a knot");
  auto o = orient(f, t);
  auto rep = detail::invariants_impl(t, o, nullptr);
  int modulus = rep.rot == 0 ? 0 : 2 * std::abs(rep.rot);
  auto mu = maslov_potential(t, modulus);
  // degree of each crossing event
  std::map<std::size_t, int> cross_degree;
  {
    std::size_t ci = 0;
    for (std::size_t e = 0; e < f.events.size(); ++e)
      if (f.events[e].kind == EventKind::Crossing) {
        const auto& cr = t.crossings[ci++];
        int d = mu[cr.upper_in] - mu[cr.lower_in];
        if (modulus) d = ((d % modulus) + modulus) % modulus;
        cross_degree[e] = d;
      }
  }

  int count = 0;
  // partner[i] = position paired with position i (0-based), -1 none
  auto rec = [&](auto&& self, std::size_t e, std::vector<int> partner) -> void {
    if (e == f.events.size()) {
      if (partner.empty()) ++count;
      return;
    }
    const auto& ev = f.events[e];
    const int q = ev.pos - 1;
    switch (ev.kind) {
      case EventKind::LeftCusp: {
        for (int& p : partner)
          if (p >= q) p += 2;
        partner.insert(partner.begin() + q, {q + 1, q});
        self(self, e + 1, std::move(partner));
        return;
      }
      case EventKind::RightCusp: {
        if (partner[q] != q + 1) return;  // paths must die together
        partner.erase(partner.begin() + q, partner.begin() + q + 2);
        for (int& p : partner)
          if (p > q + 1) p -= 2;
        self(self, e + 1, std::move(partner));
        return;
      }
      case EventKind::Crossing: {
        int pa = partner[q], pb = partner[q + 1];
        if (pa == q + 1) return;  // partners may not cross
        {
          // non-switch: the strands swap position
          std::vector<int> next = partner;
          next[q] = pb;
          next[q + 1] = pa;
          next[pa] = q + 1;
          next[pb] = q;
          self(self, e + 1, std::move(next));
        }
        if (cross_degree[e] == 0) {
          // switch, if the two companion intervals do not interleave
          int alo = std::min(q, pa), ahi = std::max(q, pa);
          int blo = std::min(q + 1, pb), bhi = std::max(q + 1, pb);
          bool disjoint = ahi < blo || bhi < alo;
          bool nested = (alo < blo && bhi < ahi) || (blo < alo && ahi < bhi);
          if (disjoint || nested) self(self, e + 1, partner);
        }
        return;
      }
    }
  };
  rec(rec, 0, {});
  return count;
}

inline bool has_graded_ruling(const LineFront& f) {
  return graded_ruling_count(f) > 0;
}

}  // namespace conormal
