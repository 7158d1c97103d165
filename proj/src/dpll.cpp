#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "onethree/baselines.hpp"

namespace onethree {

namespace {

// Literal code: 2·(var − 1) + (negative ? 1 : 0).
int code_of(int lit) { return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); }

class Dpll {
 public:
  explicit Dpll(const CnfFormula& f)
      : n_(f.n),
        clauses_(f.clauses),
        occ_(2 * static_cast<std::size_t>(f.n)),
        value_(f.n + 1, -1),
        num_true_(f.clauses.size(), 0),
        num_false_(f.clauses.size(), 0) {
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      if (clauses_[c].empty()) throw std::invalid_argument("dpll_solve: empty clause in input");
      for (int lit : clauses_[c]) {
        if (lit == 0 || std::abs(lit) > n_) throw std::invalid_argument("dpll_solve: literal out of range");
        occ_[code_of(lit)].push_back(static_cast<int>(c));
      }
    }
  }

  ClassicalResult solve() {
    ClassicalResult result;
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      if (clauses_[c].size() == 1) pending_.push_back(clauses_[c][0]);
    }
    bool ok = propagate();
    while (true) {
      if (!ok) {
        ++result.conflicts;
        if (!backtrack()) return result;
        ok = propagate();
        continue;
      }
      const int var = pick_branch();
      if (var == 0) break;
      decisions_.push_back({trail_.size(), var, false});
      pending_.push_back(var);
      ok = propagate();
    }
    result.sat = true;
    Assignment model(n_, 0);
    for (int v = 1; v <= n_; ++v) model[v - 1] = value_[v] == 1 ? 1 : 0;
    result.model = std::move(model);
    return result;
  }

 private:
  struct Decision {
    std::size_t trail_pos;
    int var;
    bool flipped;
  };

  bool is_true(int lit) const {
    const int v = value_[std::abs(lit)];
    return v >= 0 && (v == 1) == (lit > 0);
  }

  // Assigns lit true; returns false when some clause becomes all-false.
  bool assign(int lit) {
    value_[std::abs(lit)] = lit > 0 ? 1 : 0;
    trail_.push_back(lit);
    for (int c : occ_[code_of(lit)]) {
      if (num_true_[c]++ == 0) ++satisfied_;
    }
    bool ok = true;
    for (int c : occ_[code_of(-lit)]) {
      const int size = static_cast<int>(clauses_[c].size());
      ++num_false_[c];
      if (num_true_[c] > 0) continue;
      if (num_false_[c] == size) {
        ok = false;
      } else if (num_false_[c] == size - 1) {
        for (int other : clauses_[c]) {
          if (value_[std::abs(other)] < 0) {
            pending_.push_back(other);
            break;
          }
        }
      }
    }
    return ok;
  }

  void unassign_to(std::size_t pos) {
    while (trail_.size() > pos) {
      const int lit = trail_.back();
      trail_.pop_back();
      for (int c : occ_[code_of(lit)]) {
        if (--num_true_[c] == 0) --satisfied_;
      }
      for (int c : occ_[code_of(-lit)]) --num_false_[c];
      value_[std::abs(lit)] = -1;
    }
  }

  bool propagate() {
    while (!pending_.empty()) {
      const int lit = pending_.back();
      pending_.pop_back();
      const int v = value_[std::abs(lit)];
      if (v >= 0) {
        if (is_true(lit)) continue;
        pending_.clear();
        return false;
      }
      if (!assign(lit)) {
        pending_.clear();
        return false;
      }
    }
    return true;
  }

  bool backtrack() {
    while (!decisions_.empty() && decisions_.back().flipped) {
      decisions_.pop_back();
    }
    if (decisions_.empty()) return false;
    Decision& d = decisions_.back();
    unassign_to(d.trail_pos);
    d.flipped = true;
    pending_.push_back(-d.var);
    return true;
  }

  int pick_branch() const {
    if (satisfied_ == clauses_.size()) return 0;
    int best = 0;
    long best_count = 0;
    for (int v = 1; v <= n_; ++v) {
      if (value_[v] >= 0) continue;
      long count = 0;
      for (int code : {2 * (v - 1), 2 * (v - 1) + 1}) {
        for (int c : occ_[code]) count += num_true_[c] == 0 ? 1 : 0;
      }
      if (count > best_count) {
        best = v;
        best_count = count;
      }
    }
    return best;
  }

  int n_;
  const std::vector<std::vector<int>>& clauses_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> value_;  // −1 unassigned, 0 false, 1 true
  std::vector<int> num_true_;
  std::vector<int> num_false_;
  std::size_t satisfied_ = 0;
  std::vector<int> trail_;
  std::vector<int> pending_;
  std::vector<Decision> decisions_;
};

}  // namespace

ClassicalResult dpll_solve(const CnfFormula& f) { return Dpll(f).solve(); }

}  // namespace onethree
