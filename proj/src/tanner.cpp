#include "luep/tanner.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace luep {
namespace decoder {

TannerGraph build_tanner(ConstRefMat h) {
  if (h.rows() < 1 || h.cols() < 1) {
    throw std::invalid_argument("build_tanner: empty parity-check matrix");
  }
  if ((h.array() > 1).any()) {
    throw std::invalid_argument("build_tanner: entries must be 0 or 1");
  }
  TannerGraph g;
  g.variable_count = h.cols();
  g.check_count = h.rows();
  g.check_vars.resize(static_cast<std::size_t>(h.rows()));
  g.check_edges.resize(static_cast<std::size_t>(h.rows()));
  g.var_checks.resize(static_cast<std::size_t>(h.cols()));
  g.var_edges.resize(static_cast<std::size_t>(h.cols()));
  int edge = 0;
  for (Eigen::Index c = 0; c < h.rows(); ++c) {
    for (Eigen::Index v = 0; v < h.cols(); ++v) {
      if (!h(c, v)) continue;
      g.check_vars[static_cast<std::size_t>(c)].push_back(static_cast<int>(v));
      g.check_edges[static_cast<std::size_t>(c)].push_back(edge);
      g.var_checks[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
      g.var_edges[static_cast<std::size_t>(v)].push_back(edge);
      ++edge;
    }
  }
  g.edge_count = static_cast<std::size_t>(edge);
  return g;
}

void write_dot(std::ostream& out, const TannerGraph& g) {
  out << "graph tanner {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n";
  for (Eigen::Index v = 0; v < g.variable_count; ++v) {
    out << "  v" << v << ";\n";
  }
  out << "  node [shape=square];\n";
  for (Eigen::Index c = 0; c < g.check_count; ++c) {
    out << "  c" << c << ";\n";
  }
  for (std::size_t c = 0; c < g.check_vars.size(); ++c) {
    for (int v : g.check_vars[c]) {
      out << "  c" << c << " -- v" << v << ";\n";
    }
  }
  out << "}\n";
}

void write_dot_file(const std::string& path, const TannerGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_dot: cannot write " + path);
  write_dot(out, g);
  if (!out) throw std::runtime_error("write_dot: write failed for " + path);
}

}  // namespace decoder
}  // namespace luep
