#ifndef LUEP_HARNESS_HPP
#define LUEP_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "luep/linear_code.hpp"
#include "luep/stbc.hpp"
#include "luep/types.hpp"

namespace luep {
namespace harness {

enum class ChannelKind { awgn, rayleigh };
enum class Mode { superposition, uncoded_qpsk };

struct Scenario {
  ChannelKind channel = ChannelKind::awgn;
  Mode mode = Mode::superposition;
  bool alamouti = false;
  stbc::Pairing pairing = stbc::Pairing::offset_n;
  std::vector<double> ebn0_db;
  long frames = 10000;
  int max_iter = 50;
  double csi_error_var = 0.0;
  Eigen::Index block_len = 0;  // fading block in symbols; 0 = one block per frame
  std::uint64_t master_seed = 1;
  unsigned threads = 1;  // 0 = hardware concurrency; results identical either way
  bool max_log = false;
};

struct BerRecord {
  double ebn0_db = 0;
  double ber_high = 0;  // the k2 strongly protected message bits
  double ber_low = 0;   // the k1 weakly protected message bits
  double bler = 0;      // frames with any message bit wrong
  long frames = 0;
  double mean_iter = 0;
  // Raw counts behind the rates (not part of the CSV schema). -1 after
  // parsing a CSV back in.
  long long err_high = -1, err_low = -1, frame_errors = -1;
};

// Eb/N0 accounting: every transmitted frame spends n_symbols unit-energy
// channel uses on k_bits information bits, so Eb = n_symbols / k_bits and
// sigma2 = N0/2 = n_symbols / (2 k_bits 10^(dB/10)). The composite code is
// (40 symbols, 26 bits); uncoded QPSK is (1 symbol, 2 bits).
double sigma2_from_ebn0(double ebn0_db, Eigen::Index n_symbols,
                        Eigen::Index k_bits);

// Throws std::invalid_argument before any trial runs. code may be null only
// in uncoded-qpsk mode.
void validate_scenario(const Scenario& s, const codes::PlotkinCode* code);

// Monte-Carlo sweep over s.ebn0_db. Every frame derives its own engine from
// (master_seed, tag, point index, frame index) and draws in a fixed order, so
// records are bit-identical for any thread count.
std::vector<BerRecord> run_scenario(const Scenario& s,
                                    const codes::PlotkinCode* code);

// CSV with the fixed header ebn0_db,ber_high,ber_low,bler,frames,mean_iter
// and one %.17g row per sweep point.
void emit_results(const std::vector<BerRecord>& records, std::ostream& out);
void emit_results_file(const std::vector<BerRecord>& records,
                       const std::string& path);
std::vector<BerRecord> parse_results(std::istream& in);

// SPC(20,19,2) + the golden (20,7,6) alist from code_dir, combined into the
// (40,26) composite. Re-verifies the constituent distance on load.
codes::PlotkinCode load_composite_code(const std::string& code_dir);

}  // namespace harness
}  // namespace luep

#endif  // LUEP_HARNESS_HPP
