#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mistqueue/bounds.hpp"
#include "mistqueue/engine.hpp"
#include "mistqueue/knapsack.hpp"
#include "mistqueue/trace_io.hpp"
#include "mistqueue/traffic.hpp"

namespace mistqueue::cli {

// Exit codes: 0 success, 2 flag/validation error, 3 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fmt(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

inline constexpr std::uint64_t kTraceSeedTag = 101;
inline constexpr std::uint64_t kRunSeedTag = 102;

struct Options {
  int W = 256;
  int V = 16;
  int B = 10;
  double alpha = 0.3;
  double r = 1.0;
  int i_star = 3;  // 0 draws the class uniformly per run
  int j_star = 3;
  std::string regime = "default";
  std::vector<int> lw;
  std::vector<int> lv;
  std::uint64_t seed = 1;
  int traces = 100;
  long long packets = 10000;
  std::vector<std::string> trace_files;
  std::string policies = "fifo,sam,sao-fifo,sao-wtv,sao-effect";
  std::string out = "-";
  int jobs = 4;
  bool batch_sort = false;
  bool no_pipelining = false;
  bool nonempty_capacity = false;
  double lambda_high = 10.0;
  double lambda_low = 0.5;
  double high_duration = 10.0;
  double duration_ratio = 0.0;  // 0 -> W
  std::string sweep;
  std::vector<double> grid;
};

inline std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline TrafficConfig traffic_config(const Options& o, std::uint64_t trace_seed) {
  TrafficConfig tc;
  tc.lambda_high = o.lambda_high;
  tc.lambda_low = o.lambda_low;
  tc.mean_high_duration = o.high_duration;
  tc.duration_ratio = o.duration_ratio;
  tc.alpha = o.alpha;
  tc.W = o.W;
  tc.V = o.V;
  tc.total_packets = o.packets;
  tc.seed = trace_seed;
  return tc;
}

inline Regime parse_regime_name(const std::string& name, Regime natural, bool& oblivious) {
  oblivious = false;
  if (name == "default") return natural;
  if (name == "exact") return Regime::Exact;
  if (name == "closure") return Regime::Closure;
  if (name == "small-sets") return Regime::SmallSets;
  if (name == "oblivious") {
    oblivious = true;
    return natural;
  }
  throw CLI::ValidationError("--regime", "unknown regime '" + name + "'");
}

inline PolicyConfig build_policy(const std::string& name, const Options& o) {
  PolicyConfig cfg;
  cfg.B = o.B;
  cfg.W = o.W;
  cfg.V = o.V;
  cfg.r = o.r;
  cfg.batch_sort = o.batch_sort;
  Regime natural = Regime::Exact;
  if (name == "fifo") {
    cfg.kind = PolicyKind::PlainFifo;
    return cfg;
  } else if (name == "sam") {
    cfg.kind = PolicyKind::Sam;
    natural = Regime::Exact;
  } else if (name == "sam-ss") {
    cfg.kind = PolicyKind::SamSs;
    natural = Regime::SmallSets;
    cfg.small_set_works = o.lw;
    cfg.small_set_profits = o.lv;
  } else if (name == "sao-fifo" || name == "sao-wtv" || name == "sao-effect") {
    cfg.kind = PolicyKind::Sao;
    cfg.pipelining = !o.no_pipelining;
    natural = Regime::Closure;
    cfg.order = name == "sao-fifo" ? SchedOrder::Fifo
                : name == "sao-wtv" ? SchedOrder::WThenV
                                    : SchedOrder::Effect;
  } else {
    throw CLI::ValidationError("--policy", "unknown policy '" + name + "'");
  }

  bool oblivious = false;
  const Regime regime = parse_regime_name(o.regime, natural, oblivious);
  if (oblivious) {
    cfg.selector = oblivious_selector(regime);
  } else if (regime == Regime::SmallSets) {
    cfg.selector.regime = Regime::SmallSets;  // drawn from the value sets
    if (cfg.small_set_works.empty()) cfg.small_set_works = o.lw;
    if (cfg.small_set_profits.empty()) cfg.small_set_profits = o.lv;
  } else if (o.i_star > 0 && o.j_star > 0) {
    if (o.i_star > class_count(o.W) || o.j_star > class_count(o.V)) {
      throw CLI::ValidationError("--i-star/--j-star", "class index exceeds log2 of the maximum");
    }
    cfg.selector = fixed_selector(regime, {o.i_star, o.j_star});
  } else {
    cfg.selector.regime = regime;  // uniform draw per run
  }
  return cfg;
}

inline std::vector<PolicyConfig> build_policies(const Options& o) {
  std::vector<PolicyConfig> out;
  for (const std::string& name : split_csv(o.policies)) out.push_back(build_policy(name, o));
  if (out.empty()) throw CLI::ValidationError("--policy", "no policies given");
  return out;
}

struct OutputFile {
  explicit OutputFile(const std::string& path) {
    if (path.empty() || path == "-") {
      stream = &std::cout;
      return;
    }
    file.open(path, std::ios::binary);
    if (!file) throw IoError("cannot open output file '" + path + "'");
    stream = &file;
  }
  std::ostream& out() { return *stream; }
  std::ofstream file;
  std::ostream* stream = nullptr;
};

inline std::vector<Trace> load_or_generate_traces(const Options& o,
                                                  std::vector<std::uint64_t>& run_seeds) {
  std::vector<Trace> traces;
  run_seeds.clear();
  if (!o.trace_files.empty()) {
    for (std::size_t i = 0; i < o.trace_files.size(); ++i) {
      std::ifstream in(o.trace_files[i], std::ios::binary);
      if (!in) throw IoError("cannot open trace file '" + o.trace_files[i] + "'");
      try {
        traces.push_back(read_trace(in));
      } catch (const TraceParseError& e) {
        throw IoError(o.trace_files[i] + ": " + e.what());
      }
      run_seeds.push_back(derive_seed(derive_seed(o.seed, kRunSeedTag), i));
    }
  } else {
    for (int i = 0; i < o.traces; ++i) {
      const std::uint64_t trace_seed = derive_seed(derive_seed(o.seed, kTraceSeedTag), i);
      traces.push_back(generate_trace(traffic_config(o, trace_seed)));
      run_seeds.push_back(derive_seed(derive_seed(o.seed, kRunSeedTag), i));
    }
  }
  if (traces.empty()) throw CLI::ValidationError("--traces", "no traces to run");
  return traces;
}

inline const char* kRunHeader =
    "algorithm,i_star,j_star,regime,order,alpha,r,B,seed,throughput,ub_greedy,ub_certified,"
    "ratio";

struct RowText {
  std::string algorithm;
  double ratio = 0.0;
  long long throughput = 0;
  std::string text;
};

inline RowText format_row(const Options& o, const PolicyConfig& cfg, const RunRow& row,
                          const KnapsackBound& kb) {
  RowText out;
  out.algorithm = policy_name(cfg);
  out.throughput = row.stats.throughput;
  out.ratio = performance_ratio(row.stats.throughput, kb.ub_approx);
  std::ostringstream line;
  const bool has_class = cfg.kind != PolicyKind::PlainFifo && row.selector.has_selection;
  line << out.algorithm << ',' << (has_class ? row.selector.selected.i : 0) << ','
       << (has_class ? row.selector.selected.j : 0) << ',';
  if (cfg.kind == PolicyKind::PlainFifo) {
    line << '-';
  } else if (row.selector.oblivious) {
    line << "oblivious-" << to_string(row.selector.regime);
  } else {
    line << to_string(row.selector.regime);
  }
  line << ',' << (cfg.kind == PolicyKind::Sao ? to_string(cfg.order) : "fifo") << ','
       << fmt(o.alpha, 4) << ',' << fmt(cfg.r, 4) << ',' << cfg.B << ',' << row.seed << ','
       << row.stats.throughput << ',' << fmt(kb.greedy_value, 1) << ','
       << fmt(kb.ub_certified, 1) << ',' << fmt(out.ratio, 6);
  out.text = line.str();
  return out;
}

inline void write_summaries(std::ostream& out, const std::string& prefix,
                            const std::vector<RowText>& rows) {
  std::map<std::string, std::vector<const RowText*>> by_alg;
  for (const RowText& r : rows) by_alg[r.algorithm].push_back(&r);
  for (const auto& [alg, list] : by_alg) {
    std::vector<double> ratios;
    std::vector<double> throughputs;
    for (const RowText* r : list) {
      ratios.push_back(r->ratio);
      throughputs.push_back(static_cast<double>(r->throughput));
    }
    const Summary sr = summarize(ratios);
    const Summary st = summarize(throughputs);
    out << "#summary," << prefix << alg << ",n=" << sr.n << ",mean_ratio=" << fmt(sr.mean, 6)
        << ",std_ratio=" << fmt(sr.stddev, 6) << ",mean_throughput=" << fmt(st.mean, 2)
        << ",std_throughput=" << fmt(st.stddev, 2) << "\n";
  }
}

inline int cmd_generate(const Options& o) {
  std::filesystem::path dir(o.out == "-" ? "traces" : o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
  std::cout << "#mistqueue-manifest traces=" << o.traces << " packets=" << o.packets
            << " W=" << o.W << " V=" << o.V << " alpha=" << fmt(o.alpha, 4) << " seed=" << o.seed
            << "\n";
  for (int i = 0; i < o.traces; ++i) {
    const std::uint64_t trace_seed = derive_seed(derive_seed(o.seed, kTraceSeedTag), i);
    const Trace t = generate_trace(traffic_config(o, trace_seed));
    char name[64];
    std::snprintf(name, sizeof(name), "trace-%04d.trace", i);
    const std::filesystem::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "'");
    write_trace(t, out);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
    std::cout << path.string() << "\t" << packet_count(t) << "\t"
              << (t.batches.empty() ? 0 : t.batches.back().cycle + 1) << "\t" << trace_seed
              << "\n";
  }
  return kExitOk;
}

inline int cmd_run(const Options& o) {
  std::vector<std::uint64_t> run_seeds;
  const std::vector<Trace> traces = load_or_generate_traces(o, run_seeds);
  Options adjusted = o;
  adjusted.W = traces.front().meta.W;
  adjusted.V = traces.front().meta.V;
  for (const Trace& t : traces) {
    if (t.meta.W != adjusted.W || t.meta.V != adjusted.V) {
      throw CLI::ValidationError("--trace-file", "traces disagree on W/V");
    }
  }
  const std::vector<PolicyConfig> policies = build_policies(adjusted);

  std::vector<KnapsackBound> bounds;
  bounds.reserve(traces.size());
  for (const Trace& t : traces) {
    bounds.push_back(knapsack_upper_bound(t, adjusted.B, adjusted.V, adjusted.nonempty_capacity));
  }
  const std::vector<RunRow> rows = run_batch(traces, policies, run_seeds, adjusted.jobs);

  OutputFile sink(o.out);
  sink.out() << kRunHeader << "\n";
  std::vector<RowText> texts;
  texts.reserve(rows.size());
  for (const RunRow& row : rows) {
    texts.push_back(format_row(adjusted, policies[row.policy_index], row,
                               bounds[row.trace_index]));
    sink.out() << texts.back().text << "\n";
  }
  write_summaries(sink.out(), "algorithm=", texts);
  if (!sink.out()) throw IoError("write failed");
  return kExitOk;
}

inline int cmd_sweep(const Options& o) {
  static const std::vector<std::string> kParams{"i-star", "j-star", "alpha", "r"};
  if (std::find(kParams.begin(), kParams.end(), o.sweep) == kParams.end()) {
    throw CLI::ValidationError("--sweep", "must be one of i-star|j-star|alpha|r");
  }
  if (o.grid.empty()) throw CLI::ValidationError("--grid", "empty sweep grid");
  if (!o.trace_files.empty()) {
    throw CLI::ValidationError("--trace-file", "sweeps generate their own traces");
  }

  OutputFile sink(o.out);
  sink.out() << "sweep,value," << kRunHeader << "\n";

  // Traces are regenerated per grid point only for the alpha sweep; the
  // generator's substreams keep everything but the K/U marks identical.
  std::vector<Trace> traces;
  std::vector<std::uint64_t> run_seeds;
  const bool alpha_sweep = o.sweep == "alpha";
  if (!alpha_sweep) traces = load_or_generate_traces(o, run_seeds);

  std::vector<RowText> all_rows;
  for (const double value : o.grid) {
    Options point = o;
    if (o.sweep == "i-star") point.i_star = static_cast<int>(value);
    if (o.sweep == "j-star") point.j_star = static_cast<int>(value);
    if (o.sweep == "alpha") point.alpha = value;
    if (o.sweep == "r") point.r = value;
    if (alpha_sweep) traces = load_or_generate_traces(point, run_seeds);

    const std::vector<PolicyConfig> policies = build_policies(point);
    std::vector<KnapsackBound> bounds;
    for (const Trace& t : traces) {
      bounds.push_back(knapsack_upper_bound(t, point.B, point.V, point.nonempty_capacity));
    }
    const std::vector<RunRow> rows = run_batch(traces, policies, run_seeds, point.jobs);
    std::vector<RowText> texts;
    for (const RunRow& row : rows) {
      RowText rt = format_row(point, policies[row.policy_index], row, bounds[row.trace_index]);
      rt.algorithm = rt.algorithm + ",value=" + fmt(value, 4);  // summary key per point
      sink.out() << o.sweep << ',' << fmt(value, 4) << ',' << rt.text << "\n";
      texts.push_back(std::move(rt));
    }
    for (RowText& rt : texts) all_rows.push_back(std::move(rt));
  }
  write_summaries(sink.out(), "algorithm=", all_rows);
  if (!sink.out()) throw IoError("write failed");
  return kExitOk;
}

struct BoundsOptions {
  std::vector<int> v_grid{1, 2, 4, 8, 16};
  std::vector<int> w_grid{2, 4, 8, 16, 32, 64, 128, 256};
  int m_max = 64;
  std::string out = "-";
  int subopt_seeds = 0;  // 0 disables the Monte-Carlo validation
  int sub_V = 2, sub_W = 4, sub_w = 2, sub_M = 2;
  long long sub_N = 10000;
};

inline int cmd_bounds(const BoundsOptions& bo) {
  OutputFile sink(bo.out);
  sink.out() << "V,W,w,M,p_star,bound,region,check\n";
  for (const int V : bo.v_grid) {
    for (const int W : bo.w_grid) {
      for (const int w : {1, W / 2, W}) {
        if (w < 1 || w > W) continue;
        if (bound_params_degenerate(V, W, w)) continue;  // V=1, w=W carries no signal
        if (w == W / 2 && W / 2 == 1) continue;          // dedupe W=2
        for (int M = 1; M <= bo.m_max; ++M) {
          const BoundParams bp{V, W, w, M};
          const bool small = in_small_m_region(bp);
          const bool ok = small ? check_small_M(bp) : check_large_M(bp);
          sink.out() << V << ',' << W << ',' << w << ',' << M << ','
                     << fmt(p_star(V, W, w), 9) << ',' << fmt(lower_bound_general(bp), 6) << ','
                     << (small ? "small_M" : "large_M") << ',' << (ok ? "true" : "false")
                     << "\n";
        }
      }
    }
  }
  if (bo.subopt_seeds > 0) {
    const BoundParams bp{bo.sub_V, bo.sub_W, bo.sub_w, bo.sub_M};
    validate_bound_params(bp);
    double total = 0.0;
    for (int s = 0; s < bo.subopt_seeds; ++s) {
      SplitMix64 rng(derive_seed(4242, static_cast<std::uint64_t>(s)));
      total += static_cast<double>(subopt_run(adversarial_trace(bp, bo.sub_N, 2, rng), bp));
    }
    const double mean = total / bo.subopt_seeds;
    sink.out() << "#subopt,V=" << bo.sub_V << ",W=" << bo.sub_W << ",w=" << bo.sub_w
               << ",M=" << bo.sub_M << ",N=" << bo.sub_N << ",seeds=" << bo.subopt_seeds
               << ",mean=" << fmt(mean, 3) << ",expected="
               << fmt(subopt_expected_throughput(bp, bo.sub_N), 3) << "\n";
  }
  if (!sink.out()) throw IoError("write failed");
  return kExitOk;
}

// Line-oriented key=value config support: values from the file are appended
// as --key=value arguments unless the same flag already appears on the
// command line, so explicit flags always win. '#' starts a comment.
inline std::vector<std::string> merge_config_args(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");

  std::vector<std::string> given;
  for (const std::string& a : args) {
    if (a.rfind("--", 0) == 0) given.push_back(a.substr(0, a.find('=')));
  }
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw IoError(path + ": line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = "--" + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(given.begin(), given.end(), key) != given.end()) continue;
    args.push_back(key + "=" + value);
  }
  return args;
}

inline void add_common_options(CLI::App* cmd, Options& o, bool with_traffic) {
  static std::string config_path;  // consumed before parsing; registered for help
  cmd->add_option("--config", config_path, "line-oriented key=value config file (flags win)");
  cmd->add_option("--W", o.W, "maximum work per packet");
  cmd->add_option("--V", o.V, "maximum profit per packet");
  cmd->add_option("--B", o.B, "buffer capacity");
  cmd->add_option("--alpha", o.alpha, "probability an arrival is unknown")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--r", o.r, "admittance probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--i-star", o.i_star, "fixed work-class index (0 = uniform per run)");
  cmd->add_option("--j-star", o.j_star, "fixed profit-class index (0 = uniform per run)");
  cmd->add_option("--regime", o.regime, "class regime: exact|closure|small-sets|oblivious");
  cmd->add_option("--lw", o.lw, "small-sets work values")->delimiter(',');
  cmd->add_option("--lv", o.lv, "small-sets profit values")->delimiter(',');
  cmd->add_option("--seed", o.seed, "master seed")->envname("MISTQUEUE_SEED");
  cmd->add_option("--traces", o.traces, "number of traces to generate");
  cmd->add_option("--packets", o.packets, "packets per generated trace");
  cmd->add_option("--policy", o.policies, "comma list: fifo|sam|sao-fifo|sao-wtv|sao-effect|sam-ss");
  cmd->add_option("--out", o.out, "output path ('-' for stdout)");
  cmd->add_option("--jobs", o.jobs, "worker threads for batch runs");
  cmd->add_flag("--batch-sort", o.batch_sort, "sort once per batch instead of per acceptance");
  cmd->add_flag("--no-pipelining", o.no_pipelining, "disable fill-during-flush for sao");
  cmd->add_flag("--nonempty-capacity", o.nonempty_capacity,
                "knapsack capacity counts only cycles with arrivals");
  if (with_traffic) {
    cmd->add_option("--lambda-high", o.lambda_high, "HIGH-state mean arrivals per cycle");
    cmd->add_option("--lambda-low", o.lambda_low, "LOW-state mean arrivals per cycle");
    cmd->add_option("--high-duration", o.high_duration, "mean HIGH-state duration in cycles");
    cmd->add_option("--duration-ratio", o.duration_ratio,
                    "LOW duration as a multiple of HIGH (0 = W)");
  }
}

}  // namespace detail

inline int run_main(int argc, const char* const* argv) {
  CLI::App app{"mistqueue: buffer management and scheduling under unknown packet characteristics"};
  app.require_subcommand(1);

  detail::Options gen_opts, run_opts, sweep_opts;
  detail::BoundsOptions bounds_opts;

  CLI::App* generate = app.add_subcommand("generate", "generate trace files");
  detail::add_common_options(generate, gen_opts, true);

  CLI::App* run_cmd = app.add_subcommand("run", "run policies over traces and emit CSV");
  detail::add_common_options(run_cmd, run_opts, true);
  run_cmd->add_option("--trace-file", run_opts.trace_files, "run over existing trace files")
      ->delimiter(',');

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter over a grid");
  detail::add_common_options(sweep, sweep_opts, true);
  sweep->add_option("--sweep", sweep_opts.sweep, "parameter: i-star|j-star|alpha|r")->required();
  sweep->add_option("--grid", sweep_opts.grid, "grid values")->delimiter(',')->required();

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate the lower-bound tables");
  static std::string bounds_config;
  bounds->add_option("--config", bounds_config, "line-oriented key=value config file (flags win)");
  bounds->add_option("--V-grid", bounds_opts.v_grid, "profit maxima")->delimiter(',');
  bounds->add_option("--W-grid", bounds_opts.w_grid, "work maxima")->delimiter(',');
  bounds->add_option("--M-max", bounds_opts.m_max, "evaluate M = 1..M-max");
  bounds->add_option("--out", bounds_opts.out, "output path ('-' for stdout)");
  bounds->add_option("--subopt-mc", bounds_opts.subopt_seeds,
                     "validate SubOPT against its closed form over this many seeds");
  bounds->add_option("--sub-V", bounds_opts.sub_V, "SubOPT validation V");
  bounds->add_option("--sub-W", bounds_opts.sub_W, "SubOPT validation W");
  bounds->add_option("--sub-w", bounds_opts.sub_w, "SubOPT validation minimum work");
  bounds->add_option("--sub-M", bounds_opts.sub_M, "SubOPT validation M");
  bounds->add_option("--sub-N", bounds_opts.sub_N, "SubOPT validation fill length");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = detail::merge_config_args(std::move(args));
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  try {
    if (generate->parsed()) return detail::cmd_generate(gen_opts);
    if (run_cmd->parsed()) return detail::cmd_run(run_opts);
    if (sweep->parsed()) return detail::cmd_sweep(sweep_opts);
    if (bounds->parsed()) return detail::cmd_bounds(bounds_opts);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace mistqueue::cli
