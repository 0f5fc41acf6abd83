#include "luep/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "luep/alist.hpp"
#include "luep/bp.hpp"
#include "luep/channel.hpp"
#include "luep/distance.hpp"
#include "luep/golden.hpp"
#include "luep/modem.hpp"
#include "luep/rng.hpp"
#include "luep/tanner.hpp"

namespace luep {
namespace harness {

double sigma2_from_ebn0(double ebn0_db, Eigen::Index n_symbols,
                        Eigen::Index k_bits) {
  const double gamma = std::pow(10.0, ebn0_db / 10.0);
  return static_cast<double>(n_symbols) / (2.0 * static_cast<double>(k_bits) * gamma);
}

namespace {

constexpr std::uint64_t kFrameTag = 0x6672616d65ull;

Eigen::Index resolved_block_len(const Scenario& s, Eigen::Index air_len) {
  return s.block_len == 0 ? air_len : s.block_len;
}

Eigen::Index air_length(const codes::PlotkinCode* code) {
  return 2 * code->n();
}

struct Tally {
  long long err_high = 0;
  long long err_low = 0;
  long long frame_err = 0;
  long long iter_sum = 0;

  Tally& operator+=(const Tally& o) {
    err_high += o.err_high;
    err_low += o.err_low;
    frame_err += o.frame_err;
    iter_sum += o.iter_sum;
    return *this;
  }
};

BitVector draw_bits(std::mt19937_64& eng, Eigen::Index n) {
  BitVector bits(n);
  for (Eigen::Index i = 0; i < n; ++i) bits[i] = Bit(eng() & 1);
  return bits;
}

long long count_diff(ConstRefBits a, ConstRefBits b) {
  long long diff = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  return diff;
}

// Fixed per-frame draw order: msg2, msg1, fading, CSI error, noise. Anything
// unused in a configuration is simply skipped, never drawn and discarded.
void superposition_frame(const Scenario& s, const codes::PlotkinCode& code,
                         const decoder::TannerGraph& graph, double sigma2,
                         std::uint64_t point, std::uint64_t frame,
                         Tally& tally) {
  auto eng = make_engine({s.master_seed, kFrameTag, point, frame});
  const BitVector msg2 = draw_bits(eng, code.k2());
  const BitVector msg1 = draw_bits(eng, code.k1());
  const codes::Encoding enc = codes::encode(code, msg2, msg1);

  const Eigen::Index air = 2 * code.n();
  const Eigen::Index block = resolved_block_len(s, air);
  channel::ChannelRealization ch =
      s.channel == ChannelKind::rayleigh
          ? channel::rayleigh_draw((air + block - 1) / block, block, eng)
          : channel::unit_gains(air);
  channel::CsiEstimate csi = s.csi_error_var > 0
                                 ? channel::estimate_csi(ch, s.csi_error_var, eng)
                                 : channel::perfect_csi(ch);

  const modem::DemapOptions demap_opts{s.max_log};
  LlrFrame llr;
  if (s.alamouti) {
    const SymbolFrame s1 = modem::map_i(enc.v1);
    const SymbolFrame s2 = modem::map_q(enc.v2);
    const stbc::AlamoutiFrame af = stbc::alamouti_schedule(s1, s2, s.pairing);
    const SymbolFrame y = channel::awgn(
        channel::apply_gains(ch, af.node1_tx, af.node2_tx), {sigma2}, eng);
    const stbc::CombinedFrame cf = stbc::mrc_combine(y, csi, s.pairing);
    llr = modem::demap_mrc(cf.s1_tilde, cf.s2_tilde, cf.effective_gain, sigma2,
                           demap_opts);
  } else {
    const auto [f1, f2] = modem::map_sources(enc.v1, enc.v2);
    const SymbolFrame y =
        channel::awgn(channel::apply_gains(ch, f1, f2), {sigma2}, eng);
    llr = modem::demap(y, channel::slot_gains1(csi, air),
                       channel::slot_gains2(csi, air), sigma2, demap_opts);
  }

  decoder::BpOptions bp_opts;
  bp_opts.max_iter = s.max_iter;
  const decoder::DecodeResult res = decoder::decode_frame(code, graph, llr, bp_opts);

  const long long eh = count_diff(msg2, res.msg2);
  const long long el = count_diff(msg1, res.msg1);
  tally.err_high += eh;
  tally.err_low += el;
  tally.frame_err += (eh + el) > 0;
  tally.iter_sum += res.iterations;
}

void uncoded_frame(const Scenario& s, double sigma2, std::uint64_t point,
                   std::uint64_t frame, Tally& tally) {
  auto eng = make_engine({s.master_seed, kFrameTag, point, frame});
  const Bit b0 = Bit(eng() & 1);
  const Bit b1 = Bit(eng() & 1);
  SymbolFrame x(1);
  x[0] = Complex(modem::bit_amplitude(b0), modem::bit_amplitude(b1));
  const SymbolFrame y = channel::awgn(x, {sigma2}, eng);
  const Bit d0 = y[0].real() < 0 ? Bit(1) : Bit(0);
  const Bit d1 = y[0].imag() < 0 ? Bit(1) : Bit(0);
  const long long errs = (d0 != b0) + (d1 != b1);
  tally.err_high += errs;
  tally.err_low += errs;
  tally.frame_err += errs > 0;
}

}  // namespace

void validate_scenario(const Scenario& s, const codes::PlotkinCode* code) {
  if (s.ebn0_db.empty()) throw std::invalid_argument("scenario: empty Eb/N0 sweep");
  if (s.frames < 1) throw std::invalid_argument("scenario: frames must be >= 1");
  if (s.max_iter < 1) throw std::invalid_argument("scenario: max-iter must be >= 1");
  if (s.csi_error_var < 0) throw std::invalid_argument("scenario: csi-error-var < 0");
  if (s.block_len < 0) throw std::invalid_argument("scenario: block-len < 0");

  if (s.mode == Mode::uncoded_qpsk) {
    if (s.channel != ChannelKind::awgn || s.alamouti) {
      throw std::invalid_argument(
          "scenario: uncoded-qpsk is an AWGN calibration mode without Alamouti");
    }
    return;
  }

  if (code == nullptr) {
    throw std::invalid_argument("scenario: superposition mode needs a code");
  }
  if (s.csi_error_var > 0 && s.channel != ChannelKind::rayleigh) {
    throw std::invalid_argument(
        "scenario: csi-error-var applies to the rayleigh channel only");
  }
  if (s.channel == ChannelKind::rayleigh) {
    const Eigen::Index air = air_length(code);
    const Eigen::Index block = resolved_block_len(s, air);
    if (s.alamouti) {
      if (block < 2 || block % 2 != 0) {
        throw std::invalid_argument(
            "scenario: alamouti needs an even block-len >= 2");
      }
      if (s.pairing == stbc::Pairing::offset_n && block < air) {
        throw std::invalid_argument(
            "scenario: offset-n pairing spans the whole frame; needs "
            "block-len >= frame length (or 0)");
      }
    }
  }
}

std::vector<BerRecord> run_scenario(const Scenario& s,
                                    const codes::PlotkinCode* code) {
  validate_scenario(s, code);

  decoder::TannerGraph graph;
  if (s.mode == Mode::superposition) graph = decoder::build_tanner(code->inner.H);

  unsigned workers = s.threads ? s.threads : std::max(1u, std::thread::hardware_concurrency());
  if (static_cast<long>(workers) > s.frames) {
    workers = static_cast<unsigned>(s.frames);
  }

  std::vector<BerRecord> records;
  records.reserve(s.ebn0_db.size());
  for (std::size_t p = 0; p < s.ebn0_db.size(); ++p) {
    const double db = s.ebn0_db[p];
    const double sigma2 = s.mode == Mode::superposition
                              ? sigma2_from_ebn0(db, air_length(code),
                                                 code->inner.k)
                              : sigma2_from_ebn0(db, 1, 2);

    std::vector<Tally> parts(workers);
    auto run_range = [&](unsigned w, long begin, long end) {
      Tally local;
      for (long f = begin; f < end; ++f) {
        if (s.mode == Mode::superposition) {
          superposition_frame(s, *code, graph, sigma2, p, std::uint64_t(f), local);
        } else {
          uncoded_frame(s, sigma2, p, std::uint64_t(f), local);
        }
      }
      parts[w] = local;
    };

    if (workers == 1) {
      run_range(0, 0, s.frames);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        const long begin = s.frames * long(w) / workers;
        const long end = s.frames * long(w + 1) / workers;
        pool.emplace_back(run_range, w, begin, end);
      }
      for (auto& th : pool) th.join();
    }

    Tally total;
    for (const Tally& part : parts) total += part;  // integer sums: order-free

    const long long bits_high =
        (s.mode == Mode::superposition ? code->k2() : 2) * (long long)s.frames;
    const long long bits_low =
        (s.mode == Mode::superposition ? code->k1() : 2) * (long long)s.frames;

    BerRecord rec;
    rec.ebn0_db = db;
    rec.frames = s.frames;
    rec.err_high = total.err_high;
    rec.err_low = total.err_low;
    rec.frame_errors = total.frame_err;
    rec.ber_high = double(total.err_high) / double(bits_high);
    rec.ber_low = double(total.err_low) / double(bits_low);
    rec.bler = double(total.frame_err) / double(s.frames);
    rec.mean_iter = double(total.iter_sum) / double(s.frames);
    records.push_back(rec);
  }
  return records;
}

namespace {

constexpr const char* kCsvHeader = "ebn0_db,ber_high,ber_low,bler,frames,mean_iter";

}  // namespace

void emit_results(const std::vector<BerRecord>& records, std::ostream& out) {
  if (records.empty()) throw std::invalid_argument("emit_results: no records");
  out << kCsvHeader << "\n";
  char line[256];
  for (const BerRecord& r : records) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%ld,%.17g\n",
                  r.ebn0_db, r.ber_high, r.ber_low, r.bler, r.frames,
                  r.mean_iter);
    out << line;
  }
}

void emit_results_file(const std::vector<BerRecord>& records,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_results: cannot write " + path);
  emit_results(records, out);
  if (!out) throw std::runtime_error("emit_results: write failed for " + path);
}

std::vector<BerRecord> parse_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("parse_results: bad or missing header");
  }
  std::vector<BerRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    BerRecord r;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%ld,%lf", &r.ebn0_db,
                    &r.ber_high, &r.ber_low, &r.bler, &r.frames,
                    &r.mean_iter) != 6) {
      throw std::runtime_error("parse_results: malformed row: " + line);
    }
    records.push_back(r);
  }
  if (records.empty()) throw std::runtime_error("parse_results: no rows");
  return records;
}

codes::PlotkinCode load_composite_code(const std::string& code_dir) {
  std::string path = code_dir;
  if (!path.empty() && path.back() != '/') path += '/';
  path += codes::kGolden2076File;
  const BinaryMatrix h2 = codes::read_alist_file(path);
  codes::LinearCode c2 = codes::code_from_parity(h2, 6);
  if (codes::min_distance(c2.G) != 6) {
    throw std::runtime_error("load_composite_code: " + path +
                             " does not define a distance-6 code");
  }
  return codes::plotkin_combine(codes::spc_code(20), c2);
}

}  // namespace harness
}  // namespace luep
