#include <stdexcept>
#include <vector>

#include "onethree/baselines.hpp"

namespace onethree {

namespace {

// Node 0 is the root; nodes 1..items are column headers; the rest are
// set entries.
class Dlx {
 public:
  explicit Dlx(const ExactCoverProblem& p) : p_(p) {
    const int items = p.num_items;
    const std::size_t headers = static_cast<std::size_t>(items) + 1;
    left_.resize(headers);
    right_.resize(headers);
    up_.resize(headers);
    down_.resize(headers);
    col_.resize(headers);
    row_.assign(headers, -1);
    size_.assign(headers, 0);
    for (int i = 0; i <= items; ++i) {
      left_[i] = i == 0 ? items : i - 1;
      right_[i] = i == items ? 0 : i + 1;
      up_[i] = down_[i] = i;
      col_[i] = i;
    }
    for (std::size_t s = 0; s < p.sets.size(); ++s) {
      const auto& items_of = p.sets[s].items;
      if (items_of.empty()) throw std::invalid_argument("dlx_solve: empty candidate set");
      int first = -1;
      for (int item : items_of) {
        if (item < 0 || item >= items) throw std::invalid_argument("dlx_solve: item out of range");
        const int c = item + 1;
        const int node = static_cast<int>(left_.size());
        col_.push_back(c);
        row_.push_back(static_cast<int>(s));
        size_.push_back(0);
        up_.push_back(up_[c]);
        down_.push_back(c);
        down_[up_[c]] = node;
        up_[c] = node;
        ++size_[c];
        if (first < 0) {
          left_.push_back(node);
          right_.push_back(node);
          first = node;
        } else {
          left_.push_back(left_[first]);
          right_.push_back(first);
          right_[left_[first]] = node;
          left_[first] = node;
        }
      }
    }
  }

  ClassicalResult solve(bool count_all) {
    count_all_ = count_all;
    search();
    ClassicalResult r;
    r.sat = found_ > 0;
    r.conflicts = conflicts_;
    if (count_all) r.solutions = found_;
    if (r.sat) {
      Assignment model(p_.num_vars, 0);
      for (int s : first_cover_) model[p_.sets[s].var - 1] = 1;
      r.model = std::move(model);
    }
    return r;
  }

 private:
  void cover(int c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (int i = down_[c]; i != c; i = down_[i]) {
      for (int j = right_[i]; j != i; j = right_[j]) {
        down_[up_[j]] = down_[j];
        up_[down_[j]] = up_[j];
        --size_[col_[j]];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[c]; i != c; i = up_[i]) {
      for (int j = left_[i]; j != i; j = left_[j]) {
        ++size_[col_[j]];
        down_[up_[j]] = j;
        up_[down_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  // Returns true when the search should stop.
  bool search() {
    if (right_[0] == 0) {
      if (found_++ == 0) first_cover_ = partial_;
      return !count_all_;
    }
    int best = right_[0];
    for (int c = right_[best]; c != 0; c = right_[c]) {
      if (size_[c] < size_[best]) best = c;
    }
    if (size_[best] == 0) {
      ++conflicts_;
      return false;
    }
    cover(best);
    bool stop = false;
    for (int r = down_[best]; r != best && !stop; r = down_[r]) {
      partial_.push_back(row_[r]);
      for (int j = right_[r]; j != r; j = right_[j]) cover(col_[j]);
      stop = search();
      for (int j = left_[r]; j != r; j = left_[j]) uncover(col_[j]);
      partial_.pop_back();
    }
    uncover(best);
    return stop;
  }

  const ExactCoverProblem& p_;
  std::vector<int> left_, right_, up_, down_, col_, row_, size_;
  std::vector<int> partial_;
  std::vector<int> first_cover_;
  long found_ = 0;
  long conflicts_ = 0;
  bool count_all_ = false;
};

}  // namespace

ClassicalResult dlx_solve(const ExactCoverProblem& p, bool count_all) { return Dlx(p).solve(count_all); }

}  // namespace onethree
