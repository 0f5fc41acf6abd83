#ifndef LUEP_TANNER_HPP
#define LUEP_TANNER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "luep/types.hpp"

namespace luep {
namespace decoder {

// Bipartite adjacency of a parity-check matrix: one check node per row, one
// variable node per column, an edge per nonzero entry. Edge ids are assigned
// check-major so the BP message arrays can be indexed either way.
struct TannerGraph {
  Eigen::Index variable_count = 0;
  Eigen::Index check_count = 0;
  std::vector<std::vector<int>> check_vars;   // per check: variable indices
  std::vector<std::vector<int>> check_edges;  // per check: edge ids (parallel)
  std::vector<std::vector<int>> var_checks;   // per variable: check indices
  std::vector<std::vector<int>> var_edges;    // per variable: edge ids
  std::size_t edge_count = 0;
};

TannerGraph build_tanner(ConstRefMat h);

// Graphviz rendering: variables as circles v<i>, checks as squares c<j>.
void write_dot(std::ostream& out, const TannerGraph& g);
void write_dot_file(const std::string& path, const TannerGraph& g);

}  // namespace decoder
}  // namespace luep

#endif  // LUEP_TANNER_HPP
