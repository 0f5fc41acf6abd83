#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "luep/harness.hpp"
#include "luep/tanner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo simulator for two-level superposition broadcasting"};
  app.set_config("--config", "",
                 "Flat key=value file with the long option names; "
                 "command-line flags override it");

  std::string channel = "awgn";
  std::string mode = "superposition";
  std::string alamouti = "off";
  std::string pairing = "offset-n";
  std::vector<double> ebn0;
  long frames = 10000;
  int max_iter = 50;
  double csi_error_var = 0.0;
  long block_len = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool max_log = false;
  std::string out = "results.csv";
  std::string code_dir = "codes";
  std::string emit_tanner;

  app.add_option("--channel", channel, "Channel model")
      ->check(CLI::IsMember({"awgn", "rayleigh"}))
      ->capture_default_str();
  app.add_option("--mode", mode, "superposition or the uncoded-qpsk reference")
      ->check(CLI::IsMember({"superposition", "uncoded-qpsk"}))
      ->capture_default_str();
  app.add_option("--alamouti", alamouti, "Transmit diversity across the two nodes")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  app.add_option("--pairing", pairing, "Alamouti pair slot geometry")
      ->check(CLI::IsMember({"adjacent", "offset-n"}))
      ->capture_default_str();
  app.add_option("--ebn0", ebn0, "Eb/N0 sweep points in dB, comma separated")
      ->delimiter(',');
  app.add_option("--frames", frames, "Frames per sweep point")
      ->capture_default_str();
  app.add_option("--max-iter", max_iter, "BP iteration cap")
      ->capture_default_str();
  app.add_option("--csi-error-var", csi_error_var,
                 "Channel estimation error variance (rayleigh only)")
      ->capture_default_str();
  app.add_option("--block-len", block_len,
                 "Fading block length in symbols; 0 = one block per frame")
      ->capture_default_str();
  app.add_option("--seed", seed, "Master seed")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads; 0 = hardware")
      ->capture_default_str();
  app.add_flag("--max-log", max_log, "Max-log demapper instead of exact");
  app.add_option("--out", out, "Results CSV path, '-' for stdout")
      ->capture_default_str();
  app.add_option("--code-dir", code_dir, "Directory with the golden alist")
      ->capture_default_str();
  app.add_option("--emit-tanner", emit_tanner,
                 "Write the composite code's Tanner graph as Graphviz dot");

  CLI11_PARSE(app, argc, argv);

  try {
    luep::harness::Scenario sc;
    sc.channel = channel == "awgn" ? luep::harness::ChannelKind::awgn
                                   : luep::harness::ChannelKind::rayleigh;
    sc.mode = mode == "superposition" ? luep::harness::Mode::superposition
                                      : luep::harness::Mode::uncoded_qpsk;
    sc.alamouti = alamouti == "on";
    sc.pairing = pairing == "adjacent" ? luep::stbc::Pairing::adjacent
                                       : luep::stbc::Pairing::offset_n;
    sc.ebn0_db = ebn0;
    sc.frames = frames;
    sc.max_iter = max_iter;
    sc.csi_error_var = csi_error_var;
    sc.block_len = block_len;
    sc.master_seed = seed;
    sc.threads = threads;
    sc.max_log = max_log;

    std::optional<luep::codes::PlotkinCode> code;
    const bool need_code =
        sc.mode == luep::harness::Mode::superposition || !emit_tanner.empty();
    if (need_code) code = luep::harness::load_composite_code(code_dir);

    if (!emit_tanner.empty()) {
      luep::decoder::write_dot_file(emit_tanner,
                                    luep::decoder::build_tanner(code->inner.H));
      std::cerr << "wrote " << emit_tanner << "\n";
    }

    if (!ebn0.empty()) {
      const auto records =
          luep::harness::run_scenario(sc, code ? &*code : nullptr);
      for (const auto& r : records) {
        std::fprintf(stderr,
                     "ebn0=%g dB  ber_high=%.3g ber_low=%.3g bler=%.3g "
                     "mean_iter=%.2f\n",
                     r.ebn0_db, r.ber_high, r.ber_low, r.bler, r.mean_iter);
      }
      if (out == "-") {
        luep::harness::emit_results(records, std::cout);
      } else {
        luep::harness::emit_results_file(records, out);
        std::cerr << "wrote " << out << "\n";
      }
    } else if (emit_tanner.empty()) {
      throw std::invalid_argument("nothing to do: give --ebn0 or --emit-tanner");
    }
  } catch (const std::exception& e) {
    std::cerr << "luepsim: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
