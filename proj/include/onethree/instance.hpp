#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace onethree {

// A literal refers to a 1-based variable index, as in the on-disk format.
struct Literal {
  int var = 0;
  bool negated = false;

  int signed_value() const { return negated ? -var : var; }
  static Literal from_signed(int v) { return Literal{v < 0 ? -v : v, v < 0}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  std::array<Literal, 3> lits;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// One byte per variable, value 0 or 1; index i holds x_{i+1}.
using Assignment = std::vector<std::uint8_t>;

// Value of a literal under an assignment (the W_{p,i} map of the literal).
inline bool literal_value(const Literal& lit, const Assignment& a) {
  return (a[lit.var - 1] != 0) != lit.negated;
}

// Immutable one-in-three SAT formula. Construction validates every clause.
class Instance {
 public:
  Instance() = default;
  Instance(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int p) const { return clauses_[p]; }
  bool positive_only() const { return positive_only_; }

  // Number of distinct variables that appear in at least one clause.
  int occurring_vars() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  bool positive_only_ = true;
};

// Uniform random instance: each clause draws three distinct variables; when
// positive_only is false each literal is negated with probability 1/2.
Instance generate_random(int n, int m, std::uint64_t seed, bool positive_only = true);

bool is_satisfying(const Instance& inst, const Assignment& a);

// Every satisfying assignment, enumerated exhaustively. n must be <= 26.
std::set<Assignment> brute_force_solutions(const Instance& inst);

inline constexpr int kBruteForceLimit = 26;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

}  // namespace onethree
