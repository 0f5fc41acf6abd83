#include "luep/distance.hpp"

#include <bit>
#include <climits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "luep/gf2.hpp"

namespace luep {
namespace codes {

namespace {

struct ScanResult {
  int min_all = INT_MAX;
  std::uint64_t argmin = 0;
  int min_first = INT_MAX;
  int min_second = INT_MAX;
};

std::uint64_t combine_rows(const std::vector<std::uint64_t>& rows,
                           std::uint64_t message) {
  std::uint64_t cw = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if ((message >> r) & 1) cw ^= rows[r];
  }
  return cw;
}

void consider(ScanResult& res, std::uint64_t g, std::uint64_t cw,
              std::uint64_t mask_first, std::uint64_t mask_second) {
  const int w = std::popcount(cw);
  if (w < res.min_all || (w == res.min_all && cw < res.argmin)) {
    res.min_all = w;
    res.argmin = cw;
  }
  if ((g & mask_first) && w < res.min_first) res.min_first = w;
  if ((g & mask_second) && w < res.min_second) res.min_second = w;
}

// Walk message indices [begin, end) in Gray order: message gray(i) differs
// from gray(i-1) in bit ctz(i), so each codeword is one row XOR away from
// its predecessor.
ScanResult scan_range(const std::vector<std::uint64_t>& rows,
                      std::uint64_t begin, std::uint64_t end,
                      std::uint64_t mask_first, std::uint64_t mask_second) {
  ScanResult res;
  std::uint64_t g = begin ^ (begin >> 1);
  std::uint64_t cw = combine_rows(rows, g);
  for (std::uint64_t i = begin;;) {
    if (g != 0) consider(res, g, cw, mask_first, mask_second);
    if (++i == end) break;
    const int bit = std::countr_zero(i);
    g ^= std::uint64_t(1) << bit;
    cw ^= rows[static_cast<std::size_t>(bit)];
  }
  return res;
}

void merge(ScanResult& into, const ScanResult& part) {
  if (part.min_all < into.min_all ||
      (part.min_all == into.min_all && part.argmin < into.argmin)) {
    into.min_all = part.min_all;
    into.argmin = part.argmin;
  }
  into.min_first = std::min(into.min_first, part.min_first);
  into.min_second = std::min(into.min_second, part.min_second);
}

ScanResult scan(ConstRefMat g, Eigen::Index k_first,
                const EnumerationOptions& opts) {
  const Eigen::Index k = g.rows();
  if (k < 1 || g.cols() < 1) {
    throw std::invalid_argument("distance: empty generator");
  }
  if (g.cols() > 64) {
    throw std::invalid_argument("distance: more than 64 columns");
  }
  if (k >= 63 || (std::uint64_t(1) << k) > opts.max_codewords) {
    throw CapacityError("distance: 2^" + std::to_string(k) +
                        " codewords exceeds the enumeration cap");
  }
  if (gf2_rank(g) != k) {
    throw std::invalid_argument("distance: generator rows are dependent");
  }

  const std::vector<std::uint64_t> rows = gf2_pack_rows(g);
  const std::uint64_t total = std::uint64_t(1) << k;
  const std::uint64_t mask_first =
      (k_first >= k) ? ~std::uint64_t(0) : (std::uint64_t(1) << k_first) - 1;
  const std::uint64_t mask_second = ((std::uint64_t(1) << k) - 1) & ~mask_first;

  unsigned workers = opts.threads ? opts.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
  if (std::uint64_t(workers) * 4096 > total) workers = 1;  // not worth splitting

  if (workers == 1) return scan_range(rows, 0, total, mask_first, mask_second);

  std::vector<ScanResult> parts(workers);
  std::vector<std::thread> pool;
  const std::uint64_t per = total / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::uint64_t begin = per * t;
    const std::uint64_t end = (t + 1 == workers) ? total : per * (t + 1);
    pool.emplace_back([&rows, begin, end, mask_first, mask_second, &parts, t] {
      parts[t] = scan_range(rows, begin, end, mask_first, mask_second);
    });
  }
  for (auto& th : pool) th.join();

  ScanResult res;
  for (const auto& part : parts) merge(res, part);  // fixed order, deterministic
  return res;
}

}  // namespace

int min_distance(ConstRefMat g, const EnumerationOptions& opts) {
  return scan(g, g.rows(), opts).min_all;
}

std::uint64_t min_weight_codeword(ConstRefMat g, const EnumerationOptions& opts) {
  return scan(g, g.rows(), opts).argmin;
}

std::pair<int, int> separation_vector(ConstRefMat g, Eigen::Index k_first,
                                      const EnumerationOptions& opts) {
  if (k_first < 1 || k_first >= g.rows()) {
    throw std::invalid_argument("separation_vector: class split out of range");
  }
  const ScanResult res = scan(g, k_first, opts);
  return {res.min_first, res.min_second};
}

std::pair<int, int> separation_vector(const PlotkinCode& code,
                                      const EnumerationOptions& opts) {
  // Generator rows [0, k1) carry msg1 (the weak class), [k1, k1+k2) msg2.
  const auto [s_msg1, s_msg2] = separation_vector(code.inner.G, code.k1(), opts);
  return {s_msg2, s_msg1};
}

}  // namespace codes
}  // namespace luep
