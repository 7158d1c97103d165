#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace onethree {

// Dense bit-packed matrix over GF(2). Rows are stored as contiguous 64-bit
// words, so row XOR and row scans cost O(cols / 64).
class Gf2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }

  bool get(int r, int c) const { return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1U; }
  void set(int r, int c, bool v) {
    Word& w = row(r)[c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(int r, int c) { row(r)[c / kWordBits] ^= Word{1} << (c % kWordBits); }

  std::span<Word> row(int r) { return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)}; }
  std::span<const Word> row(int r) const {
    return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }

  // row(dst) ^= row(src)
  void xor_row(int dst, int src);
  void swap_rows(int a, int b);
  bool row_is_zero(int r) const;
  int row_weight(int r) const;
  int col_weight(int c) const;

  // First set column in row r at or after `from`, or -1.
  int find_next_in_row(int r, int from) const;

  // Matrix-vector product over GF(2); v has cols() entries of 0/1.
  std::vector<std::uint8_t> multiply(std::span<const std::uint8_t> v) const;

  // Rank by elimination on a copy.
  int rank() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<Word> bits_;
};

}  // namespace onethree
