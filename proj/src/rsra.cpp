#include "onethree/rsra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace onethree {

ParitySystem build_parity_system(const Instance& inst) {
  const int m = inst.num_clauses();
  const int n = inst.num_vars();
  ParitySystem sys{Gf2Matrix(m, n), std::vector<std::uint8_t>(m, 0)};
  for (int p = 0; p < m; ++p) {
    int negations = 0;
    for (const Literal& lit : inst.clause(p).lits) {
      sys.a.set(p, lit.var - 1, true);
      negations += lit.negated ? 1 : 0;
    }
    // Σ W ≡ 1 with W = 1 − x for a negated literal.
    sys.b[p] = static_cast<std::uint8_t>(1 ^ (negations & 1));
  }
  return sys;
}

Reduction reduce(const Instance& inst) {
  const int n = inst.num_vars();
  const int m = inst.num_clauses();
  const ParitySystem sys = build_parity_system(inst);

  // Augmented matrix; column n carries b.
  Gf2Matrix aug(m, n + 1);
  for (int p = 0; p < m; ++p) {
    auto dst = aug.row(p);
    auto src = sys.a.row(p);
    std::copy(src.begin(), src.end(), dst.begin());
    aug.set(p, n, sys.b[p] != 0);
  }

  std::vector<int> pivot_row_of(n, -1);
  int rank = 0;
  for (int c = 0; c < n && rank < m; ++c) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (aug.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    aug.swap_rows(rank, pivot);
    for (int r = 0; r < m; ++r) {
      if (r != rank && aug.get(r, c)) aug.xor_row(r, rank);
    }
    pivot_row_of[c] = rank;
    ++rank;
  }

  Reduction red;
  red.n = n;
  red.k = rank;
  for (int r = rank; r < m; ++r) {
    // Rows below the rank have a zero A part; a set b bit means 0 ≡ 1.
    if (aug.get(r, n)) red.consistent = false;
  }

  for (int c = 0; c < n; ++c) {
    if (pivot_row_of[c] < 0) red.free_vars.push_back(c + 1);
  }
  const int dim = n - rank;
  red.l = Gf2Matrix(n, dim);
  red.offset.assign(n, 0);
  for (int j = 0; j < dim; ++j) {
    const int f = red.free_vars[j] - 1;
    red.l.set(f, j, true);
    for (int c = 0; c < n; ++c) {
      const int r = pivot_row_of[c];
      if (r >= 0 && aug.get(r, f)) red.l.set(c, j, true);
    }
  }
  if (red.consistent) {
    for (int c = 0; c < n; ++c) {
      const int r = pivot_row_of[c];
      if (r >= 0) red.offset[c] = aug.get(r, n) ? 1 : 0;
    }
  }
  return red;
}

Assignment decode(const Reduction& red, std::span<const std::uint8_t> s) {
  if (!red.consistent) throw std::invalid_argument("decode: inconsistent reduction has no solutions");
  if (static_cast<int>(s.size()) != red.dim()) {
    throw std::invalid_argument("decode: S has length " + std::to_string(s.size()) + ", expected " +
                                std::to_string(red.dim()));
  }
  Assignment x = red.l.multiply(s);
  for (int i = 0; i < red.n; ++i) x[i] ^= red.offset[i];
  return x;
}

Assignment decode_index(const Reduction& red, std::uint64_t s) {
  if (red.dim() > 64) throw std::invalid_argument("decode_index: dimension exceeds 64");
  std::vector<std::uint8_t> bits(red.dim());
  for (int j = 0; j < red.dim(); ++j) bits[j] = static_cast<std::uint8_t>((s >> j) & 1U);
  return decode(red, bits);
}

Reduction normalize_all_ones(const Reduction& red, const Instance& inst) {
  if (!inst.positive_only()) {
    throw std::invalid_argument("normalize_all_ones: instance has negated literals");
  }
  if (!red.consistent) throw std::invalid_argument("normalize_all_ones: inconsistent reduction");
  Reduction out = red;
  out.offset.assign(red.n, 1);
  return out;
}

bool GSet::contains(int var) const { return std::binary_search(vars.begin(), vars.end(), var); }

bool is_valid_g_set(const Instance& inst, const GSet& g) {
  if (!std::is_sorted(g.vars.begin(), g.vars.end())) return false;
  for (int v : g.vars) {
    if (v < 1 || v > inst.num_vars()) return false;
  }
  for (const Clause& c : inst.clauses()) {
    int inside = 0;
    for (const Literal& lit : c.lits) inside += g.contains(lit.var) ? 1 : 0;
    if (inside < 2) return false;
  }
  return true;
}

GSet select_g_set(const Instance& inst) {
  const int n = inst.num_vars();
  const int m = inst.num_clauses();
  std::vector<std::vector<int>> occ(n + 1);
  for (int p = 0; p < m; ++p) {
    for (const Literal& lit : inst.clause(p).lits) occ[lit.var].push_back(p);
  }

  std::vector<int> need(m, 2);
  std::vector<bool> in_g(n + 1, false);
  std::vector<int> score(n + 1, 0);
  for (int v = 1; v <= n; ++v) score[v] = static_cast<int>(occ[v].size());
  int open = m;
  while (open > 0) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (!in_g[v] && (best < 0 || score[v] > score[best])) best = v;
    }
    in_g[best] = true;
    for (int p : occ[best]) {
      if (need[p] == 0) continue;
      if (--need[p] == 0) {
        --open;
        for (const Literal& lit : inst.clause(p).lits) --score[lit.var];
      }
    }
  }

  // Drop members whose removal keeps every clause at two, lowest degree first.
  std::vector<int> inside(m, 0);
  for (int p = 0; p < m; ++p) {
    for (const Literal& lit : inst.clause(p).lits) inside[p] += in_g[lit.var] ? 1 : 0;
  }
  std::vector<int> members;
  for (int v = 1; v <= n; ++v) {
    if (in_g[v]) members.push_back(v);
  }
  std::stable_sort(members.begin(), members.end(),
                   [&](int a, int b) { return occ[a].size() < occ[b].size(); });
  for (int v : members) {
    const bool removable =
        std::all_of(occ[v].begin(), occ[v].end(), [&](int p) { return inside[p] > 2; });
    if (!removable) continue;
    in_g[v] = false;
    for (int p : occ[v]) --inside[p];
  }

  GSet g;
  for (int v = 1; v <= n; ++v) {
    if (in_g[v]) g.vars.push_back(v);
  }
  return g;
}

ResidualTwoSat residual_two_sat(const Instance& inst, PairPolicy policy, const GSet* g) {
  ResidualTwoSat out;
  out.pairs.reserve(inst.num_clauses());
  if (policy == PairPolicy::FirstTwo) {
    for (const Clause& c : inst.clauses()) out.pairs.push_back({c.lits[0], c.lits[1]});
    return out;
  }
  if (g == nullptr || !is_valid_g_set(inst, *g)) {
    throw std::invalid_argument("residual_two_sat: G-aligned policy needs a valid G set");
  }
  for (const Clause& c : inst.clauses()) {
    std::array<Literal, 2> pair{};
    int taken = 0;
    for (const Literal& lit : c.lits) {
      if (taken < 2 && g->contains(lit.var)) pair[taken++] = lit;
    }
    out.pairs.push_back(pair);
  }
  return out;
}

}  // namespace onethree
