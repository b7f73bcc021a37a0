#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "chtilde/certifier.hpp"
#include "chtilde/recurrence_engine.hpp"
#include "chtilde/verification.hpp"

namespace chtilde::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Series>
Json coeff_pairs(const Series& s) {
  Json out = Json::array();
  for (const auto& [index, c] : s.coeffs()) out.push_back(Json::array({index, to_decimal(c)}));
  return out;
}

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::raw:
      return "raw";
    case Mode::closed:
      return "closed";
    case Mode::both:
      return "both";
  }
  return "raw";
}

// Writes to --out when given, otherwise to `out`.
int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
  if (!config.out) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << *config.out << " for writing\n";
    return kExitFailure;
  }
  file << text;
  return kExitOk;
}

void validate(const RunConfig& config) {
  try {
    validate_coeff_index(config.n, config.i, config.j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (config.trials <= 0) throw UsageError("--trials must be positive");
  for (const auto& s : config.suites) {
    if (!is_suite_name(s)) throw UsageError("unknown suite: " + s);
  }
}

}  // namespace

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RecurrenceEngine engine;
  const auto [n, i, j] = std::tuple{config.n, config.i, config.j};
  TildeElement element;
  if (config.mode == Mode::closed) {
    element = engine.closed(n, i, j);
  } else {
    element = engine.raw(n, i, j);
    if (config.mode == Mode::both && !(engine.closed(n, i, j) == element)) {
      err << "error: raw and closed forms of e(" << n << "," << i << "," << j << ") differ\n";
      return kExitFailure;
    }
  }
  const ChElement folded = fold_L(element);

  std::ostringstream os;
  switch (config.format) {
    case Format::text:
      os << to_string(element) << "\nL: " << to_string(folded) << '\n';
      break;
    case Format::json: {
      Json doc;
      doc["n"] = n;
      doc["i"] = i;
      doc["j"] = j;
      doc["mode"] = mode_name(config.mode);
      doc["element"] = coeff_pairs(element);
      doc["fold"] = coeff_pairs(folded);
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::tsv:
      os << "series\tindex\tcoefficient\n";
      for (const auto& [index, c] : element.coeffs()) os << "element\t" << index << '\t' << c << '\n';
      for (const auto& [index, c] : folded.coeffs()) os << "fold\t" << index << '\t' << c << '\n';
      break;
  }
  return emit(config, os.str(), out, err);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RecurrenceEngine engine;
  const SuiteConfig suite_config{config.n, config.trials, config.seed};
  std::vector<std::string> names = config.suites;
  if (names.empty()) {
    for (std::string_view s : suite_names()) names.emplace_back(s);
  }

  std::vector<Report> reports;
  for (const auto& name : names) reports.push_back(run_suite(name, suite_config, engine));

  std::size_t total = 0;
  std::size_t passed = 0;
  std::ostringstream os;
  Json doc = Json::array();
  if (config.format == Format::tsv) os << "suite\tstatus\tassertion\tanchor\twitness\n";
  for (const Report& report : reports) {
    for (const Assertion& a : report.assertions) {
      ++total;
      if (a.passed) ++passed;
      switch (config.format) {
        case Format::text:
          os << (a.passed ? "PASS  " : "FAIL  ") << report.title << ": " << a.name << "  ["
             << a.anchor << "]\n";
          if (!a.passed) os << "      witness: " << a.witness << '\n';
          break;
        case Format::tsv:
          os << report.title << '\t' << (a.passed ? "PASS" : "FAIL") << '\t' << a.name << '\t'
             << a.anchor << '\t' << a.witness << '\n';
          break;
        case Format::json:
          doc.push_back({{"suite", report.title},
                         {"assertion", a.name},
                         {"anchor", a.anchor},
                         {"passed", a.passed},
                         {"witness", a.witness}});
          break;
      }
    }
  }
  if (config.format == Format::json) {
    os << Json{{"n", config.n}, {"trials", config.trials}, {"seed", config.seed},
               {"passed", passed}, {"total", total}, {"assertions", doc}}
              .dump(2)
       << '\n';
  } else if (config.format == Format::text) {
    os << "verify: " << passed << '/' << total << " assertions passed\n";
  }
  if (const int rc = emit(config, os.str(), out, err); rc != kExitOk) return rc;
  return passed == total ? kExitOk : kExitFailure;
}

int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RecurrenceEngine engine;
  CertificateSet set;
  try {
    set = certify_all(engine, config.n);
  } catch (const ConeViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (config.out) {
    namespace fs = std::filesystem;
    const fs::path dir(*config.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      err << "error: cannot create directory " << dir << ": " << ec.message() << '\n';
      return kExitFailure;
    }
    const auto write = [&](const fs::path& p, const std::string& body) {
      std::ofstream f(p, std::ios::binary);
      f << body << '\n';
      return static_cast<bool>(f);
    };
    bool ok = true;
    for (const auto& c : set.positivity) {
      ok &= write(dir / ("positivity_n" + std::to_string(c.n) + "_i" + std::to_string(c.i) + "_j" +
                         std::to_string(c.j) + ".json"),
                  to_json(c));
    }
    for (const auto& c : set.cone) {
      ok &= write(dir / ("cone_n" + std::to_string(c.n) + "_j" + std::to_string(c.j) + ".json"),
                  to_json(c));
    }
    if (!ok) {
      err << "error: failed writing certificates under " << dir << '\n';
      return kExitFailure;
    }
    out << "wrote " << set.positivity.size() << " positivity and " << set.cone.size()
        << " cone certificates to " << dir.string() << '\n';
  } else {
    std::ostringstream os;
    switch (config.format) {
      case Format::json:
        os << to_json(set) << '\n';
        break;
      case Format::tsv:
        os << "kind\tn\ti\tj\tcenter\tvalid\n";
        for (const auto& c : set.positivity) {
          os << "positivity\t" << c.n << '\t' << c.i << '\t' << c.j << '\t' << c.center << '\t'
             << (is_valid(c) ? "true" : "false") << '\n';
        }
        for (const auto& c : set.cone) {
          os << "cone\t" << c.n << "\t\t" << c.j << '\t' << c.center << '\t'
             << (is_valid(c) ? "true" : "false") << '\n';
        }
        break;
      case Format::text:
        for (const auto& c : set.positivity) {
          os << (is_valid(c) ? "VALID    " : "INVALID  ") << "positivity e(" << c.n << ','
             << c.i << ',' << c.j << ")  c=" << c.center << "  terms=" << c.coefficients.size()
             << "  mass=" << to_decimal(c.mass) << '\n';
        }
        for (const auto& c : set.cone) {
          os << (is_valid(c) ? "VALID    " : "INVALID  ") << "cone M_{" << c.n << ',' << c.j
             << "} in R(" << c.center << ")  radii=" << c.decomposition.radii.size()
             << "  singletons=" << c.decomposition.singletons.size() << '\n';
        }
        os << "certify: " << set.positivity.size() << " positivity + " << set.cone.size()
           << " cone certificates\n";
        break;
    }
    out << os.str();
  }

  if (!set.all_valid()) {
    err << "error: at least one certificate failed validation\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RecurrenceEngine engine;
  std::ostringstream os;
  const auto opt = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::vector<GrowthStats> rows;
  for (int n = 0; n <= config.n; ++n) {
    for (int j : {0, 1}) rows.push_back(engine.growth_stats(n, j));
  }
  switch (config.format) {
    case Format::tsv:
      os << "n\tj\tsupport_size\tmin_index\tmax_index\tmass\n";
      for (const auto& s : rows) {
        os << s.n << '\t' << s.j << '\t' << s.support_size << '\t' << opt(s.min_index) << '\t'
           << opt(s.max_index) << '\t' << to_decimal(s.mass) << '\n';
      }
      break;
    case Format::text:
      for (const auto& s : rows) {
        os << "e(" << s.n << ",0," << s.j << "): support " << s.support_size << ", indices ["
           << opt(s.min_index) << ", " << opt(s.max_index) << "], mass " << to_decimal(s.mass)
           << '\n';
      }
      break;
    case Format::json: {
      Json doc = Json::array();
      for (const auto& s : rows) {
        doc.push_back({{"n", s.n},
                       {"j", s.j},
                       {"support_size", s.support_size},
                       {"min_index", s.min_index ? Json(*s.min_index) : Json(nullptr)},
                       {"max_index", s.max_index ? Json(*s.max_index) : Json(nullptr)},
                       {"mass", to_decimal(s.mass)}});
      }
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return emit(config, os.str(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification kernel for the CH~2 coefficient recurrences", "chtilde"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"tsv", Format::tsv}, {"text", Format::text}};
  const std::map<std::string, Mode> modes{
      {"raw", Mode::raw}, {"closed", Mode::closed}, {"both", Mode::both}};

  RunConfig config;
  std::string mode_text = "raw";
  std::string out_path;

  auto* compute = app.add_subcommand("compute", "Print e(n,i,j) and its fold");
  compute->add_option("--n", config.n, "Depth n >= 0")->required();
  compute->add_option("--i", config.i, "Coefficient index in {-1,0,1}");
  compute->add_option("--j", config.j, "0 = leading, 1 = penultimate leading");
  compute->add_option("--mode", mode_text, "raw, closed or both")
      ->check(CLI::IsMember({"raw", "closed", "both"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--n", config.n, "Depth / index bound (default 3)");
  verify->add_option("--suite", config.suites, "Suites to run (repeatable or comma separated)")
      ->delimiter(',');
  verify->add_option("--trials", config.trials, "Random instances per property (default 200)");
  verify->add_option("--seed", config.seed, "Seed for every randomized check (default 1)");

  auto* certify = app.add_subcommand("certify", "Emit positivity and cone certificates");
  certify->add_option("--n", config.n, "Certify every depth up to n (default 3)");

  auto* stats = app.add_subcommand("stats", "Growth table for e(n,0,j)");
  stats->add_option("--n", config.n, "Largest depth (default 3)");

  // Each subcommand has its own --format default.
  std::map<CLI::App*, std::string> format_text{
      {compute, "text"}, {verify, "text"}, {certify, "json"}, {stats, "tsv"}};
  for (auto& [sub, text] : format_text) {
    sub->add_option("--format", text, "Output format: json, tsv or text")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option(
        "--out", out_path, sub == certify ? "Write one file per certificate into this directory"
                                          : "Write output to this file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.format = formats.at(format_text.at(chosen));
  config.mode = modes.at(mode_text);
  if (!out_path.empty()) config.out = out_path;
  if (chosen == compute) {
    config.command = Command::compute;
  } else if (chosen == verify) {
    config.command = Command::verify;
  } else if (chosen == certify) {
    config.command = Command::certify;
  } else {
    config.command = Command::stats;
  }

  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  switch (config.command) {
    case Command::compute:
      return cmd_compute(config, out, err);
    case Command::verify:
      return cmd_verify(config, out, err);
    case Command::certify:
      return cmd_certify(config, out, err);
    case Command::stats:
      return cmd_stats(config, out, err);
  }
  return kExitUsage;
}

}  // namespace chtilde::cli
