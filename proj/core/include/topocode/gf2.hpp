#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topo {

/// Fixed-length vector over GF(2), packed into 64-bit words.
/// Addition is XOR, so v + v = 0.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  static BitVec from_indices(std::size_t len, const std::vector<std::size_t>& ones);
  static BitVec from_string(const std::string& bits);  // e.g. "01101"

  std::size_t size() const { return len_; }
  bool empty_support() const;

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
  friend BitVec operator+(BitVec a, const BitVec& b) { a ^= b; return a; }  // GF(2) sum

  bool operator==(const BitVec& o) const { return len_ == o.len_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  bool operator<(const BitVec& o) const;  // by length, then word content (deterministic order)

  std::size_t weight() const;                 // popcount
  bool dot(const BitVec& o) const;            // parity of <a,b>
  int lowest_set() const;                     // -1 if zero
  std::vector<std::size_t> indices() const;   // set-bit positions, ascending

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major dense matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows), ncols_(ncols), rows_(nrows, BitVec(ncols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVec>& rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVec>& rows() const { return rows_; }

  BitMatrix transposed() const;
  BitVec mul(const BitVec& v) const;          // M * v, v has ncols entries
  BitMatrix mul(const BitMatrix& o) const;

  bool operator==(const BitMatrix& o) const {
    return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
  }

 private:
  std::size_t nrows_ = 0, ncols_ = 0;
  std::vector<BitVec> rows_;
};

/// Row echelon form of a matrix, kept around for repeated solves and
/// membership queries. Pivots are chosen left to right, first nonzero row.
class Echelon {
 public:
  Echelon() = default;
  explicit Echelon(const BitMatrix& m);
  explicit Echelon(const std::vector<BitVec>& rows);

  std::size_t rank() const { return pivot_cols_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  const std::vector<BitVec>& rows() const { return rows_; }

  /// Reduce v against the echelon rows; the result is zero iff v lies in the
  /// row space.
  BitVec reduce(const BitVec& v) const;
  bool contains(const BitVec& v) const { return reduce(v).empty_support(); }

  /// Coordinates of v in terms of the original rows are not tracked; this
  /// reports membership only.

 private:
  void push_row(BitVec r);
  std::size_t ncols_ = 0;
  std::vector<BitVec> rows_;               // reduced echelon rows
  std::vector<std::size_t> pivot_cols_;    // ascending
};

std::size_t rank(const BitMatrix& m);

/// Basis of the kernel {v : M v = 0}; size is ncols - rank(M).
/// Deterministic: free columns are scanned in ascending order.
std::vector<BitVec> kernel_basis(const BitMatrix& m);

/// True iff v is a GF(2) combination of the basis vectors.
/// Throws std::invalid_argument on length mismatch.
bool in_span(const BitVec& v, const std::vector<BitVec>& basis);

/// Some x with M x = b, or nullopt if the system is inconsistent.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b);

}  // namespace topo
