#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsdim/dimension.hpp"
#include "fsdim/error.hpp"
#include "fsdim/fst.hpp"
#include "fsdim/infocontent.hpp"
#include "fsdim/pool.hpp"
#include "fsdim/precision.hpp"
#include "fsdim/separator.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using namespace fsdim;
using fsdim::cli::ordered_json;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t burst_limit = 64;
};

Globals g;

// Primary output: --out PATH when given, stdout otherwise.
class Sink {
 public:
  Sink() {
    if (!g.out.empty()) {
      file_ = std::make_unique<std::ofstream>(g.out, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::Io, "cannot write '" + g.out + "'");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void warn(const std::string& msg) { std::cerr << "fsdim: warning: " << msg << '\n'; }

Fst load_checked(const std::string& path) {
  Fst t = load_fst(path);
  if (t.max_burst() > g.burst_limit) {
    warn(path + ": max burst " + std::to_string(t.max_burst()) + " exceeds " +
         std::to_string(g.burst_limit) + "; searches may be slow");
  }
  return t;
}

// A directory of *.fst files (sorted by name) or a single file.
Family load_family(const std::string& where) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(where, ec)) {
    for (const auto& entry : fs::directory_iterator(where)) {
      if (entry.is_regular_file() && entry.path().extension() == ".fst") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(ErrorCode::Io, "no .fst files in '" + where + "'");
  } else if (fs::exists(where, ec)) {
    files.push_back(where);
  } else {
    throw Error(ErrorCode::Io, "cannot open transducer family '" + where + "'");
  }
  Family family;
  for (const auto& f : files) family.push_back({f.stem().string(), load_checked(f.string())});
  return family;
}

void check_family_base(const Family& family, unsigned base, const std::string& where) {
  for (const NamedFst& t : family) {
    if (t.fst.base() != base) {
      throw Error(ErrorCode::InvalidBase, where + ": transducer '" + t.id + "' has base " +
                                              std::to_string(t.fst.base()) + ", expected " +
                                              std::to_string(base));
    }
  }
}

DigitStream open_real(const std::string& spec, unsigned base) {
  return DigitStream::open(parse_real_spec(spec), base);
}

// "P/Q", "P", or "b^-n".
Rational parse_delta(const std::string& text) {
  auto caret = text.find("^-");
  if (caret != std::string::npos) {
    Integer b = parse_integer(text.substr(0, caret));
    Integer n = parse_integer(text.substr(caret + 2));
    if (b < 2 || b > 10) throw Error(ErrorCode::InvalidBase, "delta base out of range");
    return inverse_power(static_cast<unsigned>(b.get_ui()), n.get_ui());
  }
  return parse_rational(text);
}

Rational parse_fraction_option(const std::string& text) { return parse_rational(text); }

std::string csv_result(const CostResult& r, bool with_output) {
  std::string line(to_string(r.status));
  line += ',';
  if (r.found()) line += std::to_string(r.cost);
  line += ',';
  if (r.found()) line += to_string(r.witness_input);
  if (with_output) {
    line += ',';
    if (r.found()) line += to_string(r.witness_output);
  }
  return line;
}

void emit_result(const CostResult& r, bool with_output) {
  Sink sink;
  if (g.json) sink.os() << cli::to_json(r).dump(2) << '\n';
  else sink.os() << csv_result(r, with_output) << '\n';
}

struct CapOptions {
  std::optional<std::size_t> cap_in;
  std::optional<std::size_t> cap_out;
  std::size_t lookahead = kDefaultLookahead;

  void add(CLI::App* app) {
    app->add_option("--cap-in", cap_in, "Input-length cap (default 4(n+2))");
    app->add_option("--cap-out", cap_out, "Output-length cap (default maxBurst * cap-in)");
    app->add_option("--lookahead", lookahead, "Carry/borrow lookahead for digit streams")
        ->capture_default_str();
  }
  ProfileCaps caps() const { return {cap_in, cap_out, lookahead}; }
};

struct EstimateArgs {
  std::string fsts;
  std::vector<std::string> xs;
  unsigned base = 2;
  std::size_t nmax = 0;
  std::string window_frac = "1/2";
  std::string csv;
  CapOptions caps;

  void add(CLI::App* app, const char* xname, bool many) {
    app->add_option("--fsts", fsts, "Directory of .fst files, or one file")->required();
    auto* x = app->add_option(xname, xs, "Real spec: rat:P/Q periodic:W dyadic:W champernowne "
                                          "digitfile:PATH")
                  ->required();
    if (!many) x->expected(1);
    app->add_option("--base", base, "Digit base 2..10")->required();
    app->add_option("--nmax", nmax, "Largest precision n")->required();
    app->add_option("--window-frac", window_frac, "Window start as a fraction of nmax")
        ->capture_default_str();
    app->add_option("--csv", csv, "Also write the per-transducer profile CSV here");
    caps.add(app);
  }

  EstimateOptions options() const {
    EstimateOptions o;
    o.n_max = nmax;
    o.window_frac = parse_fraction_option(window_frac);
    o.caps = caps.caps();
    return o;
  }
};

void emit_report(const EstimateReport& r, const std::string& csv) {
  if (!csv.empty()) {
    std::ofstream out(csv, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + csv + "'");
    cli::write_estimate_csv(out, r);
  }
  Sink sink;
  if (g.json) sink.os() << cli::to_json(r).dump(2) << '\n';
  else cli::write_estimate_text(sink.os(), r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-state information content and dimension estimates"};
  app.name("fsdim");
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Emit JSON instead of CSV/text");
  app.add_option("--seed", g.seed, "Seed for pseudo-random generation")->capture_default_str();
  app.add_option("--out", g.out, "Write the primary output to PATH");
  app.add_option("--burst-limit", g.burst_limit, "Warn when a transducer's burst exceeds this")
      ->capture_default_str();

  std::function<void()> action;

  // fst validate | gen
  auto* fst_cmd = app.add_subcommand("fst", "Validate or generate transducer files");
  fst_cmd->require_subcommand(1);
  std::vector<std::string> validate_files;
  auto* validate = fst_cmd->add_subcommand("validate", "Parse and check .fst files");
  validate->add_option("files", validate_files, "Files to check")->required();
  validate->callback([&] {
    action = [&] {
      Sink sink;
      ordered_json arr = ordered_json::array();
      for (const auto& f : validate_files) {
        Fst t = load_checked(f);
        if (g.json) {
          arr.push_back({{"file", f},
                         {"base", t.base()},
                         {"states", t.state_count()},
                         {"max_burst", t.max_burst()}});
        } else {
          sink.os() << "ok " << f << " base=" << t.base() << " states=" << t.state_count()
                    << " max_burst=" << t.max_burst() << '\n';
        }
      }
      if (g.json) sink.os() << arr.dump(2) << '\n';
    };
  });

  std::string gen_kind;
  unsigned gen_base = 2;
  std::string gen_pattern;
  std::size_t gen_copies = 1;
  std::string gen_train;
  std::size_t gen_block = 1;
  std::size_t gen_prefix = 256;
  auto* gen = fst_cmd->add_subcommand("gen", "Write a built-in transducer");
  gen->add_option("--kind", gen_kind, "identity | periodic | huffman")
      ->required()
      ->check(CLI::IsMember({"identity", "periodic", "huffman"}));
  gen->add_option("--base", gen_base, "Digit base 2..10")->capture_default_str();
  gen->add_option("--pattern", gen_pattern, "periodic: the repeated pattern");
  gen->add_option("--copies", gen_copies, "periodic: copies per input digit")
      ->capture_default_str();
  gen->add_option("--train", gen_train, "huffman: real spec to train on");
  gen->add_option("--block", gen_block, "huffman: block length")->capture_default_str();
  gen->add_option("--prefix-len", gen_prefix, "huffman: training digits")->capture_default_str();
  gen->callback([&] {
    if (gen_kind == "periodic" && gen_pattern.empty()) {
      throw CLI::RequiredError("--pattern is required for --kind periodic");
    }
    if (gen_kind == "huffman" && gen_train.empty()) {
      throw CLI::RequiredError("--train is required for --kind huffman");
    }
    action = [&] {
      std::optional<Fst> t;
      if (gen_kind == "identity") t = make_identity(gen_base);
      if (gen_kind == "periodic") {
        t = make_periodic_decoder(parse_digits(gen_pattern, gen_base), gen_copies, gen_base);
      }
      if (gen_kind == "huffman") {
        t = make_block_huffman(open_real(gen_train, gen_base), gen_prefix, gen_block, gen_base);
      }
      Sink sink;
      sink.os() << format_fst(*t);
    };
  });

  // kt
  std::string kt_fst, kt_w;
  std::optional<std::size_t> kt_cap;
  auto* kt_cmd = app.add_subcommand("kt", "Shortest input producing a word, K^T(w)");
  kt_cmd->add_option("--fst", kt_fst, "Transducer file")->required();
  kt_cmd->add_option("--w", kt_w, "Target word (digits); empty for the empty word")->required();
  kt_cmd->add_option("--cap", kt_cap, "Input-length cap (default 4(|w|+2))");
  kt_cmd->callback([&] {
    action = [&] {
      Fst t = load_checked(kt_fst);
      Digits w = parse_digits(kt_w, t.base());
      emit_result(kt(t, w, kt_cap.value_or(default_cap_input(w.size()))), false);
    };
  });

  // kdelta
  std::string kd_fst, kd_x, kd_delta;
  unsigned kd_base = 2;
  std::optional<std::size_t> kd_n;
  CapOptions kd_caps;
  auto* kd = app.add_subcommand("kdelta", "Cheapest output within delta of x, K^T_delta(x)");
  kd->add_option("--fst", kd_fst, "Transducer file")->required();
  kd->add_option("--x", kd_x, "Real spec")->required();
  kd->add_option("--base", kd_base, "Digit base 2..10")->required();
  auto* n_opt = kd->add_option("--n", kd_n, "Precision delta = base^-n");
  auto* d_opt = kd->add_option("--delta", kd_delta, "Precision as P/Q or b^-n");
  n_opt->excludes(d_opt);
  kd_caps.add(kd);
  kd->callback([&] {
    if (!kd_n && kd_delta.empty()) throw CLI::RequiredError("one of --n or --delta");
    action = [&] {
      Fst t = load_checked(kd_fst);
      DigitStream x = open_real(kd_x, kd_base);
      Rational delta = kd_n ? inverse_power(kd_base, *kd_n) : parse_delta(kd_delta);
      std::size_t n_equiv = kd_n.value_or(0);
      if (!kd_n) {
        // smallest n with b^-n <= delta, for the default caps
        while (inverse_power(kd_base, n_equiv) > delta) ++n_equiv;
      }
      PrecisionQuery q{x, delta, default_cap_input(n_equiv), 0, kd_caps.lookahead};
      if (kd_caps.cap_in) q.cap_input = *kd_caps.cap_in;
      q.cap_output = kd_caps.cap_out.value_or(std::max<std::size_t>(1, t.max_burst()) *
                                              q.cap_input);
      emit_result(kdelta(t, q), true);
    };
  });

  // profile
  std::string pr_fsts, pr_x;
  unsigned pr_base = 2;
  std::size_t pr_nmax = 0;
  CapOptions pr_caps;
  auto* pr = app.add_subcommand("profile", "Precision profile over n = 1..nmax");
  pr->add_option("--fsts", pr_fsts, "Directory of .fst files, or one file")->required();
  pr->add_option("--x", pr_x, "Real spec")->required();
  pr->add_option("--base", pr_base, "Digit base 2..10")->required();
  pr->add_option("--nmax", pr_nmax, "Largest precision n")->required();
  pr_caps.add(pr);
  pr->callback([&] {
    action = [&] {
      Family family = load_family(pr_fsts);
      check_family_base(family, pr_base, pr_fsts);
      std::vector<Fst> ts;
      for (const auto& t : family) ts.push_back(t.fst);
      auto rows = kdelta_profile(ts, open_real(pr_x, pr_base), pr_nmax, pr_caps.caps());
      Sink sink;
      if (g.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
          ordered_json j = cli::to_json(row);
          j["best"] = row.status == CostStatus::Found ? ordered_json(family[row.best].id)
                                                      : ordered_json(nullptr);
          arr.push_back(j);
        }
        sink.os() << arr.dump(2) << '\n';
      } else {
        cli::write_profile_csv(sink.os(), rows);
      }
    };
  });

  // dim point | seq | set
  auto* dim = app.add_subcommand("dim", "Finite-state dimension upper-bound estimates");
  dim->require_subcommand(1);
  EstimateArgs dp, ds, dset;
  auto* dim_point = dim->add_subcommand("point", "Estimate for a real x");
  dp.add(dim_point, "--x", false);
  dim_point->callback([&] {
    action = [&] {
      Family family = load_family(dp.fsts);
      check_family_base(family, dp.base, dp.fsts);
      emit_report(dim_point_estimate(family, open_real(dp.xs.at(0), dp.base), dp.options()),
                  dp.csv);
    };
  });
  auto* dim_seq = dim->add_subcommand("seq", "Estimate for the digit sequence of a real");
  ds.add(dim_seq, "--s", false);
  dim_seq->callback([&] {
    action = [&] {
      Family family = load_family(ds.fsts);
      check_family_base(family, ds.base, ds.fsts);
      emit_report(dim_seq_estimate(family, open_real(ds.xs.at(0), ds.base), ds.options()),
                  ds.csv);
    };
  });
  auto* dim_set = dim->add_subcommand("set", "Estimate for a finite set (repeat --x)");
  dset.add(dim_set, "--x", true);
  dim_set->callback([&] {
    action = [&] {
      Family family = load_family(dset.fsts);
      check_family_base(family, dset.base, dset.fsts);
      std::vector<DigitStream> xs;
      for (const auto& s : dset.xs) xs.push_back(open_real(s, dset.base));
      emit_report(dim_set_estimate(family, xs, dset.options()), dset.csv);
    };
  });

  // normality
  std::string nm_x, nm_threshold = "95/100", nm_window = "1/2", nm_csv;
  unsigned nm_base = 2;
  std::size_t nm_nmax = 0, nm_k = 4;
  CapOptions nm_caps;
  auto* nm = app.add_subcommand("normality", "Compression evidence about normality");
  nm->add_option("--x", nm_x, "Real spec")->required();
  nm->add_option("--base", nm_base, "Digit base 2..10")->required();
  nm->add_option("--nmax", nm_nmax, "Largest precision n")->required();
  nm->add_option("--k", nm_k, "Largest Huffman block length")->capture_default_str();
  nm->add_option("--threshold", nm_threshold, "Verdict threshold")->capture_default_str();
  nm->add_option("--window-frac", nm_window, "Window start as a fraction of nmax")
      ->capture_default_str();
  nm->add_option("--csv", nm_csv, "Also write the per-transducer profile CSV here");
  nm_caps.add(nm);
  nm->callback([&] {
    action = [&] {
      NormalityOptions o;
      o.n_max = nm_nmax;
      o.max_block = nm_k;
      o.threshold = parse_fraction_option(nm_threshold);
      o.window_frac = parse_fraction_option(nm_window);
      o.caps = nm_caps.caps();
      emit_report(normality_report(open_real(nm_x, nm_base), o), nm_csv);
    };
  });

  // sedim
  std::string se_f, se_fsts, se_x, se_window = "1/2", se_csv, se_threshold;
  unsigned se_base = 2;
  std::size_t se_nmax = 0;
  std::optional<std::size_t> se_max_len;
  auto* se = app.add_subcommand("sedim", "Separator-enumerator dimension estimate");
  se->add_option("--f", se_f, "canonical | blockperm:m:PERMFILE | targeted:SPEC")->required();
  se->add_option("--fsts", se_fsts, "Directory of .fst files, or one file")->required();
  se->add_option("--x", se_x, "Real spec")->required();
  se->add_option("--base", se_base, "Digit base 2..10")->required();
  se->add_option("--nmax", se_nmax, "Largest precision n")->required();
  se->add_option("--max-input-len", se_max_len, "Input enumeration bound (default 20 in base 2)");
  se->add_option("--window-frac", se_window, "Window start as a fraction of nmax")
      ->capture_default_str();
  se->add_option("--threshold", se_threshold, "Opt-in f-normality threshold, e.g. 95/100");
  se->add_option("--csv", se_csv, "Also write the per-transducer profile CSV here");
  se->callback([&] {
    action = [&] {
      Family family = load_family(se_fsts);
      check_family_base(family, se_base, se_fsts);
      SeparatorEnumerator f = parse_enumerator(se_f, se_base);
      if (se_max_len && *se_max_len > default_max_input_len(se_base)) {
        warn("--max-input-len " + std::to_string(*se_max_len) + " enumerates up to " +
             std::to_string(se_base) + "^" + std::to_string(*se_max_len) +
             " inputs per transducer and precision");
      }
      EstimateOptions o;
      o.n_max = se_nmax;
      o.window_frac = parse_fraction_option(se_window);
      o.caps.cap_input = se_max_len;
      EstimateReport r = dimf_estimate(family, f, open_real(se_x, se_base), o);
      if (!se_threshold.empty()) {
        r.verdict = r.estimate < parse_fraction_option(se_threshold)
                        ? "below threshold (not f-normal)"
                        : "at or above threshold (consistent with f-normality)";
      }
      emit_report(r, se_csv);
    };
  });

  // pool
  std::size_t pool_count = 1, pool_states = 4, pool_burst = 2;
  unsigned pool_base = 2;
  std::string pool_dir;
  auto* pool = app.add_subcommand("pool", "Write seeded random transducers");
  pool->add_option("--count", pool_count, "Number of transducers")->capture_default_str();
  pool->add_option("--max-states", pool_states, "States drawn from 1..N")->capture_default_str();
  pool->add_option("--base", pool_base, "Digit base 2..10")->capture_default_str();
  pool->add_option("--max-burst", pool_burst, "Output lengths drawn from 0..N")
      ->capture_default_str();
  pool->add_option("--dir", pool_dir, "Output directory")->required();
  pool->callback([&] {
    action = [&] {
      auto paths = write_pool({g.seed, pool_count, pool_states, pool_base, pool_burst}, pool_dir);
      Sink sink;
      if (g.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& p : paths) arr.push_back(p.string());
        sink.os() << arr.dump(2) << '\n';
      } else {
        for (const auto& p : paths) sink.os() << p.string() << '\n';
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const CLI::App* where = &app;
    for (auto subs = where->get_subcommands(); !subs.empty(); subs = where->get_subcommands()) {
      where = subs.front();
    }
    std::cerr << "fsdim: usage error: " << e.what() << "\n\n" << where->help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "fsdim: error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    std::cerr << "fsdim: error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "fsdim: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
