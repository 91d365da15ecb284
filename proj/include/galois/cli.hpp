#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galois/classify.hpp"
#include "galois/database.hpp"
#include "galois/error.hpp"
#include "galois/nsn.hpp"
#include "galois/suites.hpp"

namespace galois::cli {

struct CommandConfig {
  int degree = 0;
  int height = 0;
  std::vector<long long> coeffs;
  std::string in, out, model;
  int prime_budget = kDefaultPrimeBudget;
  int precision_bits = static_cast<int>(kDefaultPrecisionBits);
  std::uint64_t seed = 42;
  int workers = 1;
  int epochs = 100;
  int max_per_class = 2000;
  bool exhaustive = false;
  bool listing_compatible = false;
  bool monic = false;
  bool all_rows = false;
  bool include_long = false;
  std::string suite;

  ClassifyOptions classify_options() const {
    ClassifyOptions o;
    o.prime_budget = exhaustive ? kExhaustivePrimeBudget : prime_budget;
    o.precision_bits = precision_bits;
    return o;
  }
};

inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("GALOIS_DATA_DIR"); env && *env) return env;
  return "galois-data";
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

inline void require_file(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  if (!std::filesystem::is_regular_file(path)) throw Error(ErrorCode::IoError, "no such file: " + path);
}

inline int do_classify(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  if (c.coeffs.empty()) throw UsageError("--coeffs is required");
  if (c.degree != static_cast<int>(c.coeffs.size()) - 1)
    throw UsageError("--degree " + std::to_string(c.degree) + " does not match " + std::to_string(c.coeffs.size()) +
                     " coefficients");
  const PolyKey key = canonicalize(std::span<const long long>(c.coeffs));
  auto built = build_record(key, c.classify_options());
  if (const auto* skip = std::get_if<Skip>(&built)) {
    err << "galois: " << key.to_string() << " is " << skip->reason << "\n";
    return 1;
  }
  const auto& rec = std::get<PolyRecord>(built);
  if (!c.listing_compatible) {
    out << record_to_json(rec) << "\n";
    return 0;
  }
  auto j = nlohmann::ordered_json::parse(record_to_json(rec));
  const IntPolynomial f = poly_from_key(key);
  j["listing"] = {{"signature", listing_signature(f)}, {"real_roots", listing_real_root_count(f)}};
  out << j.dump() << "\n";
  return 0;
}

inline int do_generate(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const std::filesystem::path dir = c.out.empty() ? default_data_dir() : std::filesystem::path(c.out);
  std::filesystem::create_directories(dir);
  const std::string stem = database_stem(c.degree, c.height, c.monic);
  GenerateOptions opts;
  opts.workers = c.workers;
  opts.monic = c.monic;
  opts.classify = c.classify_options();
  const auto records = dir / (stem + ".jsonl");
  CensusSummary s = generate_database(c.degree, c.height, records, opts);
  write_summary(s, dir / (stem + ".summary.json"));
  err << "galois: wrote " << records.string() << "\n";
  out << s.to_json().dump(2) << "\n";
  return 0;
}

inline int do_summarize(const CommandConfig& c, std::ostream& out, std::ostream&) {
  require_file(c.in, "--in");
  const std::string text = summarize(read_records(c.in)).to_json().dump(2) + "\n";
  if (!c.out.empty())
    write_text(c.out, text);
  else
    out << text;
  return 0;
}

inline int do_train(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  require_file(c.in, "--in");
  nsn::TrainConfig tc;
  tc.seed = c.seed;
  tc.epochs = c.epochs;
  tc.max_per_class = c.max_per_class;
  const auto model = nsn::train_model(read_records(c.in), tc);
  const std::filesystem::path path = c.out.empty() ? default_data_dir() / "model.json" : std::filesystem::path(c.out);
  write_text(path, nsn::model_to_json(model).dump() + "\n");
  err << "galois: wrote " << path.string() << "\n";
  nlohmann::ordered_json report;
  report["epochs"] = tc.epochs;
  report["seed"] = tc.seed;
  report["initial_loss"] = model.loss_history.front();
  report["final_loss"] = model.loss_history.back();
  report["loss_history"] = model.loss_history;
  out << report.dump(2) << "\n";
  return 0;
}

inline int do_evaluate(const CommandConfig& c, std::ostream& out, std::ostream&) {
  require_file(c.in, "--in");
  require_file(c.model, "--model");
  std::ifstream mf(c.model);
  const auto model = nsn::model_from_json(nlohmann::json::parse(mf));
  auto records = read_records(c.in);
  if (!c.all_rows) records = nsn::held_out(model, records);
  const auto ev = nsn::evaluate_model(model, records);
  if (!c.out.empty()) write_text(c.out, ev.to_json().dump(2) + "\n");
  out << ev.table();
  return 0;
}

inline int do_verify(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  suites::Context ctx;
  ctx.data_dir = c.out.empty() ? default_data_dir() : std::filesystem::path(c.out);
  ctx.workers = c.workers;
  std::vector<const suites::Suite*> chosen;
  if (c.suite == "all") {
    for (const auto& s : suites::all_suites())
      if (!s.long_running || c.include_long) chosen.push_back(&s);
  } else if (const auto* s = suites::find_suite(c.suite)) {
    chosen.push_back(s);
  } else {
    std::string names;
    for (const auto& s : suites::all_suites()) names += " " + s.name;
    throw UsageError("unknown suite '" + c.suite + "'; known:" + names + " all");
  }
  bool all_pass = true;
  for (const auto* s : chosen) {
    const auto o = s->run(ctx);
    all_pass = all_pass && o.pass;
    out << (o.pass ? "PASS " : "FAIL ") << s->name << ": " << o.detail << "\n";
  }
  if (!all_pass) err << "galois: verification failed\n";
  return all_pass ? 0 : 1;
}

}  // namespace detail

/// 0 on success, 1 on a domain error, 2 on a usage error.
inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  CommandConfig c;
  CLI::App app{"Galois groups of integer polynomials of bounded height", "galois"};
  app.require_subcommand(1);

  auto degree_opt = [&](CLI::App* sub) { return sub->add_option("--degree", c.degree, "polynomial degree"); };
  auto classify_opts = [&](CLI::App* sub) {
    sub->add_option("--prime-budget", c.prime_budget, "usable primes sampled")->check(CLI::Range(1, 100000));
    sub->add_option("--precision-bits", c.precision_bits, "starting MPFR precision")->check(CLI::Range(64, 4096));
    sub->add_flag("--exhaustive", c.exhaustive, "sample " + std::to_string(kExhaustivePrimeBudget) + " primes");
  };

  auto* classify = app.add_subcommand("classify", "classify one polynomial, coefficients a0 first");
  degree_opt(classify)->required()->check(CLI::Range(3, 5));
  classify->add_option("--coeffs", c.coeffs, "a0,a1,...,an")->required()->delimiter(',');
  classify_opts(classify);
  classify->add_flag("--listing-compatible", c.listing_compatible, "also report the reference listing's outputs");

  auto* generate = app.add_subcommand("generate", "enumerate and classify all keys of bounded height");
  degree_opt(generate)->required()->check(CLI::Range(3, 5));
  generate->add_option("--height", c.height, "height bound")->required()->check(CLI::Range(1, 1000));
  generate->add_option("--out", c.out, "output directory (default $GALOIS_DATA_DIR or ./galois-data)");
  generate->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1, 256));
  generate->add_flag("--monic", c.monic, "only keys with leading coefficient 1");
  classify_opts(generate);

  auto* summarize_cmd = app.add_subcommand("summarize", "census summary of a record file");
  summarize_cmd->add_option("--in", c.in, "record file")->required();
  summarize_cmd->add_option("--out", c.out, "summary file (default stdout)");

  auto* train = app.add_subcommand("train", "train the classifier on a record file");
  train->add_option("--in", c.in, "record file")->required();
  train->add_option("--out", c.out, "model file");
  train->add_option("--seed", c.seed, "random seed");
  train->add_option("--epochs", c.epochs, "training epochs")->check(CLI::Range(1, 100000));
  train->add_option("--max-per-class", c.max_per_class, "records kept per class, 0 for all")
      ->check(CLI::Range(0, 100000000));

  auto* evaluate = app.add_subcommand("evaluate", "network-only and rule-augmented metrics");
  evaluate->add_option("--in", c.in, "record file")->required();
  evaluate->add_option("--model", c.model, "model file")->required();
  evaluate->add_option("--out", c.out, "JSON report");
  evaluate->add_flag("--all", c.all_rows, "evaluate every row instead of the held-out split");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", c.suite, "suite name or 'all'")->required();
  verify->add_option("--out", c.out, "data directory (default $GALOIS_DATA_DIR or ./galois-data)");
  verify->add_option("--workers", c.workers, "worker threads for database generation")->check(CLI::Range(1, 256));
  verify->add_flag("--long", c.include_long, "include long-running suites in 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  try {
    if (*classify) return detail::do_classify(c, out, err);
    if (*generate) return detail::do_generate(c, out, err);
    if (*summarize_cmd) return detail::do_summarize(c, out, err);
    if (*train) return detail::do_train(c, out, err);
    if (*evaluate) return detail::do_evaluate(c, out, err);
    if (*verify) return detail::do_verify(c, out, err);
  } catch (const detail::UsageError& e) {
    err << "galois: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "galois: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "galois: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace galois::cli
