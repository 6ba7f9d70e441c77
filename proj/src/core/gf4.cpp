#include "core/gf4.hpp"

#include <sstream>
#include <utility>

namespace gf4relax {

char to_token(Gf4 x) {
  static constexpr char kTokens[4] = {'0', '1', 'w', 'v'};
  return kTokens[x.bits()];
}

std::optional<Gf4> from_token(char c) {
  switch (c) {
    case '0': return Gf4::zero();
    case '1': return Gf4::one();
    case 'w': return Gf4::omega();
    case 'v': return Gf4::omega2();
    default: return std::nullopt;
  }
}

Gf4Matrix::Gf4Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Gf4Matrix::Gf4Matrix(std::size_t rows, std::size_t cols, std::vector<Gf4> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DomainError("matrix entry count does not match shape");
}

Gf4Matrix Gf4Matrix::identity(std::size_t n) {
  Gf4Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Gf4::one();
  return m;
}

Gf4Matrix Gf4Matrix::from_rows(const std::vector<std::vector<Gf4>>& rows) {
  if (rows.empty()) return {};
  const std::size_t c = rows.front().size();
  std::vector<Gf4> data;
  data.reserve(rows.size() * c);
  for (const auto& r : rows) {
    if (r.size() != c) throw DomainError("ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Gf4Matrix(rows.size(), c, std::move(data));
}

namespace {
void check_unique(const std::vector<std::string>& labels, const char* axis) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw DomainError(std::string("duplicate ") + axis + " label '" + labels[i] + "'");
}
}  // namespace

Gf4Matrix Gf4Matrix::with_labels(std::vector<std::string> row_labels,
                                 std::vector<std::string> col_labels) const {
  if ((!row_labels.empty() && row_labels.size() != rows_) ||
      (!col_labels.empty() && col_labels.size() != cols_))
    throw DomainError("label count does not match matrix shape");
  check_unique(row_labels, "row");
  check_unique(col_labels, "column");
  Gf4Matrix out = *this;
  out.row_labels_ = std::move(row_labels);
  out.col_labels_ = std::move(col_labels);
  return out;
}

Gf4Matrix Gf4Matrix::with_entry(std::size_t i, std::size_t j, Gf4 value) const {
  if (i >= rows_ || j >= cols_) throw DomainError("entry index out of range");
  Gf4Matrix out = *this;
  out.data_[i * cols_ + j] = value;
  return out;
}

Gf4Matrix Gf4Matrix::transpose() const {
  Gf4Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

Gf4Matrix Gf4Matrix::frobenius() const {
  Gf4Matrix out = *this;
  for (auto& x : out.data_) x = x.frobenius();
  return out;
}

std::size_t Gf4Matrix::nonzero_count() const {
  std::size_t n = 0;
  for (Gf4 x : data_) n += !x.is_zero();
  return n;
}

Gf4Matrix submatrix(const Gf4Matrix& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  auto validate = [](std::span<const std::size_t> idx, std::size_t bound, const char* axis) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] >= bound) throw DomainError(std::string(axis) + " index out of range");
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (idx[a] == idx[b]) throw DomainError(std::string("duplicated ") + axis + " index");
    }
  };
  validate(rows, m.rows(), "row");
  validate(cols, m.cols(), "column");
  std::vector<Gf4> data;
  data.reserve(rows.size() * cols.size());
  for (std::size_t i : rows)
    for (std::size_t j : cols) data.push_back(m.at(i, j));
  Gf4Matrix out(rows.size(), cols.size(), std::move(data));
  if (!m.row_labels().empty() || !m.col_labels().empty()) {
    std::vector<std::string> rl, cl;
    if (!m.row_labels().empty())
      for (std::size_t i : rows) rl.push_back(m.row_labels()[i]);
    if (!m.col_labels().empty())
      for (std::size_t j : cols) cl.push_back(m.col_labels()[j]);
    out = out.with_labels(std::move(rl), std::move(cl));
  }
  return out;
}

Gf4Matrix multiply(const Gf4Matrix& a, const Gf4Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("shape mismatch in matrix product");
  std::vector<Gf4> data(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Gf4 s;
      for (std::size_t k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
      data[i * b.cols() + j] = s;
    }
  return Gf4Matrix(a.rows(), b.cols(), std::move(data));
}

std::uint8_t det_in_place(std::uint8_t* a, int n) {
  std::uint8_t det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c)
      for (int j = c; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
    const std::uint8_t piv = a[c * n + c];
    det = detail::kMul[det][piv];
    const std::uint8_t inv = detail::kInv[piv];
    for (int i = c + 1; i < n; ++i) {
      const std::uint8_t lead = a[i * n + c];
      if (lead == 0) continue;
      const std::uint8_t f = detail::kMul[lead][inv];
      for (int j = c; j < n; ++j) a[i * n + j] ^= detail::kMul[f][a[c * n + j]];
    }
  }
  return det;
}

Gf4 determinant(const Gf4Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  std::vector<std::uint8_t> buf(m.entries().size());
  for (std::size_t k = 0; k < buf.size(); ++k) buf[k] = m.entries()[k].bits();
  return Gf4::from_bits(det_in_place(buf.data(), n));
}

std::size_t rank(const Gf4Matrix& m) {
  std::vector<std::uint8_t> a(m.entries().size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = m.entries()[k].bits();
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p * C + c] == 0) ++p;
    if (p == R) continue;
    for (std::size_t j = 0; j < C; ++j) std::swap(a[p * C + j], a[r * C + j]);
    const std::uint8_t inv = detail::kInv[a[r * C + c]];
    for (std::size_t i = r + 1; i < R; ++i) {
      const std::uint8_t lead = a[i * C + c];
      if (lead == 0) continue;
      const std::uint8_t f = detail::kMul[lead][inv];
      for (std::size_t j = c; j < C; ++j) a[i * C + j] ^= detail::kMul[f][a[r * C + j]];
    }
    ++r;
  }
  return r;
}

Gf4Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Gf4>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::vector<Gf4> row;
    for (std::size_t i = 0; i < line.size();) {
      const char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      std::string_view tok = line.substr(i, j - i);
      auto v = tok.size() == 1 ? from_token(tok[0]) : std::nullopt;
      if (!v)
        throw ParseError("unknown token \"" + std::string(tok) + "\"", line_no,
                         static_cast<int>(i) + 1);
      row.push_back(*v);
      i = j;
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size())
        throw ParseError("ragged row: expected " + std::to_string(rows.front().size()) +
                             " entries, found " + std::to_string(row.size()),
                         line_no, 1);
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return Gf4Matrix::from_rows(rows);
}

std::string format_matrix(const Gf4Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_token(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_inline(const Gf4Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) out += to_token(m.at(i, j));
  }
  return out;
}

}  // namespace gf4relax
