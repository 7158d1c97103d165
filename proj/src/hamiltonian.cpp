#include "onethree/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>
#include <string>

#include "onethree/kernels.hpp"

namespace onethree {

double h_q(const Instance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.num_vars()) throw std::invalid_argument("h_q: size mismatch");
  double total = 0.0;
  for (const Clause& c : inst.clauses()) {
    int sum = -1;
    for (const Literal& lit : c.lits) sum += literal_value(lit, a) ? 1 : 0;
    total += static_cast<double>(sum * sum);
  }
  return total;
}

double h_rsra(const Instance& inst, const ResidualTwoSat& pairs, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.num_vars()) throw std::invalid_argument("h_rsra: size mismatch");
  double total = 0.0;
  for (const auto& pr : pairs.pairs) {
    if (literal_value(pr[0], a) && literal_value(pr[1], a)) total += 1.0;
  }
  return total;
}

namespace {

std::uint64_t row_mask(const Reduction& red, int var) {
  std::uint64_t mask = 0;
  for (int j = 0; j < red.dim(); ++j) {
    if (red.l.get(var - 1, j)) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

std::vector<std::uint32_t> row_support(const Reduction& red, int var) {
  std::vector<std::uint32_t> out;
  for (int j = red.l.find_next_in_row(var - 1, 0); j >= 0; j = red.l.find_next_in_row(var - 1, j + 1)) {
    out.push_back(static_cast<std::uint32_t>(j));
  }
  return out;
}

}  // namespace

DiagonalH build_diagonal(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                         int qubit_budget) {
  if (!red.consistent) throw std::invalid_argument("build_diagonal: inconsistent reduction");
  if (red.dim() > qubit_budget || red.dim() > 62) {
    throw std::invalid_argument("build_diagonal: n-k=" + std::to_string(red.dim()) +
                                " exceeds the simulation budget of " + std::to_string(qubit_budget));
  }
  if (static_cast<int>(pairs.pairs.size()) != inst.num_clauses()) {
    throw std::invalid_argument("build_diagonal: pair count does not match clause count");
  }
  std::vector<kernels::PairMask> masks;
  masks.reserve(pairs.pairs.size());
  for (const auto& pr : pairs.pairs) {
    kernels::PairMask pm;
    pm.mask1 = row_mask(red, pr[0].var);
    pm.mask2 = row_mask(red, pr[1].var);
    pm.flip1 = static_cast<std::uint8_t>(red.offset[pr[0].var - 1] ^ (pr[0].negated ? 1 : 0));
    pm.flip2 = static_cast<std::uint8_t>(red.offset[pr[1].var - 1] ^ (pr[1].negated ? 1 : 0));
    masks.push_back(pm);
  }

  DiagonalH diag;
  diag.num_qubits = red.dim();
  const std::size_t size = std::size_t{1} << red.dim();
  diag.levels.resize(size);
  kernels::omp::diagonal_levels(masks, diag.levels);
  diag.values.resize(size);
  for (std::size_t s = 0; s < size; ++s) {
    diag.values[s] = static_cast<double>(diag.levels[s]);
    diag.max_level = std::max(diag.max_level, diag.levels[s]);
  }
  return diag;
}

double ParityTerm::value_at(std::uint64_t s) const {
  int parity = 0;
  for (std::uint32_t i : support) parity ^= static_cast<int>((s >> i) & 1U);
  return coeff * sign * (parity ? -1.0 : 1.0);
}

std::vector<ParityTerm> parity_decompose(const Instance& inst, const Reduction& red,
                                         const ResidualTwoSat& pairs) {
  if (!red.consistent) throw std::invalid_argument("parity_decompose: inconsistent reduction");
  if (static_cast<int>(pairs.pairs.size()) != inst.num_clauses()) {
    throw std::invalid_argument("parity_decompose: pair count does not match clause count");
  }
  std::vector<ParityTerm> terms;
  terms.reserve(4 * pairs.pairs.size());
  for (const auto& pr : pairs.pairs) {
    // W = (1 − q σ)/2 with q = +1 for a positive literal, −1 for a negated one.
    const double q1 = pr[0].negated ? -1.0 : 1.0;
    const double q2 = pr[1].negated ? -1.0 : 1.0;
    const int t1 = red.offset[pr[0].var - 1] ? -1 : 1;
    const int t2 = red.offset[pr[1].var - 1] ? -1 : 1;
    auto s1 = row_support(red, pr[0].var);
    auto s2 = row_support(red, pr[1].var);
    std::vector<std::uint32_t> s12;
    std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(s12));

    terms.push_back(ParityTerm{0.25, 1, {}});
    terms.push_back(ParityTerm{-0.25 * q1, t1, std::move(s1)});
    terms.push_back(ParityTerm{-0.25 * q2, t2, std::move(s2)});
    terms.push_back(ParityTerm{0.25 * q1 * q2, t1 * t2, std::move(s12)});
  }
  return terms;
}

}  // namespace onethree
