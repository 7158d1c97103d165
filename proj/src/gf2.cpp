#include "onethree/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace onethree {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Gf2Matrix: negative dimension");
  bits_.assign(static_cast<std::size_t>(rows_) * words_, 0);
}

void Gf2Matrix::xor_row(int dst, int src) {
  auto d = row(dst);
  auto s = row(src);
  for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  auto ra = row(a);
  auto rb = row(b);
  for (int w = 0; w < words_; ++w) std::swap(ra[w], rb[w]);
}

bool Gf2Matrix::row_is_zero(int r) const {
  for (Word w : row(r)) {
    if (w != 0) return false;
  }
  return true;
}

int Gf2Matrix::row_weight(int r) const {
  int total = 0;
  for (Word w : row(r)) total += std::popcount(w);
  return total;
}

int Gf2Matrix::col_weight(int c) const {
  int total = 0;
  for (int r = 0; r < rows_; ++r) total += get(r, c) ? 1 : 0;
  return total;
}

int Gf2Matrix::find_next_in_row(int r, int from) const {
  if (from >= cols_) return -1;
  auto rw = row(r);
  int w = from / kWordBits;
  Word cur = rw[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) {
      const int c = w * kWordBits + std::countr_zero(cur);
      return c < cols_ ? c : -1;
    }
    if (++w >= words_) return -1;
    cur = rw[w];
  }
}

std::vector<std::uint8_t> Gf2Matrix::multiply(std::span<const std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Gf2Matrix::multiply: size mismatch");
  std::vector<Word> packed(words_, 0);
  for (int c = 0; c < cols_; ++c) {
    if (v[c]) packed[c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  std::vector<std::uint8_t> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    int parity = 0;
    auto rw = row(r);
    for (int w = 0; w < words_; ++w) parity ^= std::popcount(rw[w] & packed[w]) & 1;
    out[r] = static_cast<std::uint8_t>(parity);
  }
  return out;
}

int Gf2Matrix::rank() const {
  Gf2Matrix m = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(rank, pivot);
    for (int r = rank + 1; r < rows_; ++r) {
      if (m.get(r, c)) m.xor_row(r, rank);
    }
    ++rank;
  }
  return rank;
}

}  // namespace onethree
