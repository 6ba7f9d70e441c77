#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gf4relax {

/// Raised when an operation is called outside its domain (inverse of zero,
/// non-square determinant, bad indices, violated construction preconditions).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive search is asked to run beyond its configured size.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text readers. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {
// Encoding: 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2 = w + 1.
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kMul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
inline constexpr std::array<std::uint8_t, 4> kInv = {0, 1, 3, 2};
}  // namespace detail

/// An element of the four-element field, stored as two bits.
class Gf4 {
 public:
  constexpr Gf4() = default;

  static constexpr Gf4 from_bits(std::uint8_t bits) { return Gf4(bits & 3u); }
  static constexpr Gf4 zero() { return Gf4(0); }
  static constexpr Gf4 one() { return Gf4(1); }
  static constexpr Gf4 omega() { return Gf4(2); }
  static constexpr Gf4 omega2() { return Gf4(3); }

  constexpr std::uint8_t bits() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.v_ ^ b.v_); }
  friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
  friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(detail::kMul[a.v_][b.v_]); }
  friend constexpr bool operator==(Gf4, Gf4) = default;

  Gf4 inverse() const {
    if (v_ == 0) throw DomainError("inverse of zero in GF(4)");
    return Gf4(detail::kInv[v_]);
  }
  Gf4 operator/(Gf4 b) const { return *this * b.inverse(); }

  // x -> x^2, the nontrivial field automorphism (swaps w and w^2).
  constexpr Gf4 frobenius() const { return Gf4(detail::kMul[v_][v_]); }

 private:
  constexpr explicit Gf4(std::uint8_t v) : v_(v) {}
  std::uint8_t v_ = 0;
};

inline constexpr std::array<Gf4, 3> kNonzeroGf4 = {Gf4::one(), Gf4::omega(), Gf4::omega2()};

/// Tokens of the text format: 0, 1, w (omega), v (omega squared).
char to_token(Gf4 x);
std::optional<Gf4> from_token(char c);

/// Dense row-major matrix over GF(4) with optional axis labels. Values are
/// immutable once built; every transform returns a new matrix.
class Gf4Matrix {
 public:
  Gf4Matrix() = default;
  Gf4Matrix(std::size_t rows, std::size_t cols);
  Gf4Matrix(std::size_t rows, std::size_t cols, std::vector<Gf4> entries);
  static Gf4Matrix identity(std::size_t n);
  static Gf4Matrix from_rows(const std::vector<std::vector<Gf4>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  Gf4 at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Gf4> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Gf4>& entries() const { return data_; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  Gf4Matrix with_labels(std::vector<std::string> row_labels,
                        std::vector<std::string> col_labels) const;

  Gf4Matrix with_entry(std::size_t i, std::size_t j, Gf4 value) const;
  Gf4Matrix transpose() const;
  Gf4Matrix frobenius() const;
  std::size_t nonzero_count() const;

  friend bool operator==(const Gf4Matrix& a, const Gf4Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf4> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Ordered selection; entry (i,j) of the result is m(rows[i], cols[j]).
Gf4Matrix submatrix(const Gf4Matrix& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols);
Gf4Matrix multiply(const Gf4Matrix& a, const Gf4Matrix& b);
Gf4 determinant(const Gf4Matrix& m);
std::size_t rank(const Gf4Matrix& m);

Gf4Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Gf4Matrix& m);
/// Compact single-line form used in sweep records: rows joined by ';'.
std::string format_matrix_inline(const Gf4Matrix& m);

/// Determinant of an n x n matrix held in a scratch buffer (row-major,
/// destroyed). Used by the hot search loops; n <= 16.
std::uint8_t det_in_place(std::uint8_t* a, int n);

}  // namespace gf4relax
