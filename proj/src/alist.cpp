#include "luep/alist.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace luep {
namespace codes {

namespace {

long read_long(std::istream& in, const char* what) {
  long v;
  if (!(in >> v)) {
    throw std::runtime_error(std::string("alist: truncated file, expected ") + what);
  }
  return v;
}

}  // namespace

BinaryMatrix read_alist(std::istream& in) {
  const long n = read_long(in, "column count");
  const long m = read_long(in, "row count");
  if (n < 1 || m < 1) throw std::runtime_error("alist: nonpositive dimensions");
  read_long(in, "max column weight");
  read_long(in, "max row weight");

  std::vector<long> col_w(n), row_w(m);
  for (long j = 0; j < n; ++j) col_w[j] = read_long(in, "column weight");
  for (long i = 0; i < m; ++i) row_w[i] = read_long(in, "row weight");

  BinaryMatrix h = BinaryMatrix::Zero(m, n);
  for (long j = 0; j < n; ++j) {
    for (long t = 0; t < col_w[j]; ++t) {
      const long r = read_long(in, "row index");
      if (r == 0) continue;  // writer padding
      if (r < 1 || r > m) throw std::runtime_error("alist: row index out of range");
      h(r - 1, j) = 1;
    }
  }
  // Row lists are redundant; read them and cross-check against the column lists.
  BinaryMatrix check = BinaryMatrix::Zero(m, n);
  for (long i = 0; i < m; ++i) {
    for (long t = 0; t < row_w[i]; ++t) {
      const long c = read_long(in, "column index");
      if (c == 0) continue;
      if (c < 1 || c > n) throw std::runtime_error("alist: column index out of range");
      check(i, c - 1) = 1;
    }
  }
  if (h != check) throw std::runtime_error("alist: row and column lists disagree");
  return h;
}

BinaryMatrix read_alist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("alist: cannot open " + path);
  return read_alist(in);
}

void write_alist(std::ostream& out, ConstRefMat h) {
  const Eigen::Index m = h.rows(), n = h.cols();
  std::vector<long> col_w(n, 0), row_w(m, 0);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (h(i, j)) {
        ++row_w[i];
        ++col_w[j];
      }
    }
  }
  long max_col = 0, max_row = 0;
  for (long w : col_w) max_col = std::max(max_col, w);
  for (long w : row_w) max_row = std::max(max_row, w);

  out << n << " " << m << "\n" << max_col << " " << max_row << "\n";
  for (Eigen::Index j = 0; j < n; ++j) out << col_w[j] << (j + 1 < n ? " " : "\n");
  for (Eigen::Index i = 0; i < m; ++i) out << row_w[i] << (i + 1 < m ? " " : "\n");
  for (Eigen::Index j = 0; j < n; ++j) {
    bool first = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (h(i, j)) {
        out << (first ? "" : " ") << (i + 1);
        first = false;
      }
    }
    out << "\n";
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    bool first = true;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (h(i, j)) {
        out << (first ? "" : " ") << (j + 1);
        first = false;
      }
    }
    out << "\n";
  }
}

void write_alist_file(const std::string& path, ConstRefMat h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("alist: cannot write " + path);
  write_alist(out, h);
  if (!out) throw std::runtime_error("alist: write failed for " + path);
}

}  // namespace codes
}  // namespace luep
