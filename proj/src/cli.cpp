#include "tribo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tribo/cubic.hpp"
#include "tribo/genfunc.hpp"
#include "tribo/oct_sequence.hpp"
#include "tribo/verify.hpp"

namespace tribo::cli {

namespace {

std::size_t parse_index(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("malformed range '" + std::string(whole) + "'");
  }
  return value;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

RecurrenceParams make_params(const std::map<std::string, Scalar>& values) {
  bool any_rational = false;
  for (const auto& [key, v] : values) any_rational |= v.kind() == ScalarKind::exact_rational;
  auto get = [&](const char* key) {
    const Scalar& v = values.at(key);
    return any_rational ? v.promote_to_rational() : v;
  };
  return {get("r"), get("s"), get("t"), get("v0"), get("v1"), get("v2")};
}

constexpr const char* kParamKeys[] = {"r", "s", "t", "v0", "v1", "v2"};

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto n = parse_index(text, text);
    return {n, n};
  }
  const auto lo = parse_index(text.substr(0, dots), text);
  const auto hi = parse_index(text.substr(dots + 2), text);
  if (lo > hi) throw ParseError("malformed range '" + std::string(text) + "': start exceeds end");
  return {lo, hi};
}

RecurrenceParams parse_config(std::istream& in) {
  std::map<std::string, Scalar> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ParseError(where + "expected 'key = value'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (std::find(std::begin(kParamKeys), std::end(kParamKeys), key) == std::end(kParamKeys)) {
      throw ParseError(where + "unknown key '" + key + "'");
    }
    if (values.count(key) != 0) throw ParseError(where + "duplicate key '" + key + "'");
    try {
      values.emplace(key, Scalar::parse_exact(value));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  for (const char* key : kParamKeys) {
    if (values.count(key) == 0) throw ParseError(std::string("missing key '") + key + "'");
  }
  return make_params(values);
}

namespace {

struct ParamSource {
  std::string preset;
  std::string config;
  std::map<std::string, std::string> explicit_values;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--preset", preset,
                   "tribonacci | padovan | narayana | third-order-jacobsthal");
    cmd.add_option("--config", config, "parameter file with r, s, t, v0, v1, v2");
    for (const char* key : kParamKeys) {
      cmd.add_option(std::string("--") + key, explicit_values[key], "exact integer or p/q");
    }
  }

  bool has_explicit() const {
    for (const auto& [key, v] : explicit_values) {
      if (!v.empty()) return true;
    }
    return false;
  }

  int count() const {
    return static_cast<int>(!preset.empty()) + static_cast<int>(!config.empty()) +
           static_cast<int>(has_explicit());
  }

  std::optional<Preset> preset_value() const {
    auto p = parse_preset(preset);
    if (!p) throw ParseError("unknown preset '" + preset + "'");
    return p;
  }

  RecurrenceParams resolve() const {
    if (count() != 1) {
      throw ParseError("give exactly one parameter source: --preset, --config, or --r/--s/--t/--v0/--v1/--v2");
    }
    if (!preset.empty()) return preset_lookup(*preset_value());
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw ParseError("malformed config '" + config + "': cannot open file");
      try {
        return parse_config(in);
      } catch (const ParseError& e) {
        throw ParseError("malformed config '" + config + "': " + e.what());
      }
    }
    std::map<std::string, Scalar> values;
    for (const auto& [key, text] : explicit_values) {
      if (text.empty()) throw ParseError("missing --" + key + " (explicit parameters need all six)");
      values.emplace(key, Scalar::parse_exact(text));
    }
    return make_params(values);
  }
};

void emit_seq(std::ostream& out, const RecurrenceParams& params, std::size_t lo, std::size_t hi,
              const std::string& format) {
  const auto v = sequence_terms(params, hi + 1);
  if (format == "csv") out << "n,value\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    if (format == "csv") {
      out << n << "," << v[n].to_string() << "\n";
    } else if (format == "jsonl") {
      out << nlohmann::json{{"n", n}, {"value", v[n].to_string()}}.dump() << "\n";
    } else {
      out << "V_" << n << " = " << v[n].to_string() << "\n";
    }
  }
}

void emit_octonions(std::ostream& out, std::size_t lo, std::size_t hi, const std::string& format,
                    const std::function<Octonion(std::size_t)>& value, const char* label) {
  if (format == "csv") out << "n,e0,e1,e2,e3,e4,e5,e6,e7\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    const Octonion o = value(n);
    const auto parts = o.to_strings();
    if (format == "csv") {
      out << n;
      for (const auto& p : parts) out << "," << p;
      out << "\n";
    } else if (format == "jsonl") {
      out << nlohmann::json{{"n", n}, {"components", parts}}.dump() << "\n";
    } else {
      out << label << "_" << n << " = " << o.to_string() << "\n";
    }
  }
}

void emit_roots(std::ostream& out, const CubicRoots& roots) {
  out << "alpha = " << format_double(roots.alpha) << "\n";
  out << "omega1 = " << format_complex(roots.omega1) << "\n";
  out << "omega2 = " << format_complex(roots.omega2) << "\n";
  out << "delta = " << format_double(roots.discriminant) << "\n";
  out << "P = " << format_complex(roots.P) << "\n";
  out << "Q = " << format_complex(roots.Q) << "\n";
  out << "R = " << format_complex(roots.R) << "\n";
}

void emit_genfunc(std::ostream& out, const OctSequenceContext& ctx) {
  const RationalGF gf = rational_gf(ctx);
  for (std::size_t slot = 0; slot < 8; ++slot) {
    out << "e" << slot << ": " << format_polynomial(gf.numerator.slot(slot)) << "\n";
  }
  out << "denominator: " << format_denominator(gf) << "\n";
}

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Tribonacci sequences and their octonion lift", "tribo"};
  app.require_subcommand(1);

  std::string range = "0..9";
  std::string format = "csv";
  std::string out_path;

  ParamSource seq_src, oct_src, roots_src, gf_src, sum_src, verify_src;
  auto add_formatted = [&](CLI::App* cmd, ParamSource& src) {
    src.add_to(*cmd);
    cmd->add_option("--n", range, "index A or inclusive span A..B")->capture_default_str();
    cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl", "text"}))->capture_default_str();
    cmd->add_option("--out", out_path, "write to PATH instead of standard output");
  };

  auto* seq = app.add_subcommand("seq", "exact terms V_n");
  add_formatted(seq, seq_src);
  bool companion = false;
  seq->add_flag("--companion", companion, "emit U_n = V_n(0, 1, r; r, s, t) instead");

  auto* oct = app.add_subcommand("oct", "exact octonions O_n = (V_n, ..., V_{n+7})");
  add_formatted(oct, oct_src);

  auto* roots = app.add_subcommand("roots", "roots of the characteristic cubic and Binet weights");
  roots_src.add_to(*roots);
  roots->add_option("--out", out_path);

  auto* genfunc = app.add_subcommand("genfunc", "generating-function numerator and denominator");
  gf_src.add_to(*genfunc);
  genfunc->add_option("--out", out_path);

  auto* sum = app.add_subcommand("sum", "partial sums O_0 + ... + O_n by the closed form");
  add_formatted(sum, sum_src);
  bool scalar_sum = false;
  sum->add_flag("--scalar", scalar_sum, "sum V_0 + ... + V_n instead");

  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify_src.add_to(*verify);
  std::size_t n_max = 40;
  std::size_t m_max = 20;
  std::string report_format = "text";
  std::uint64_t seed = 1;
  std::size_t random_sets = 0;
  unsigned threads = 1;
  verify->add_option("--n-max", n_max)->capture_default_str();
  verify->add_option("--m,--m-max", m_max)->capture_default_str();
  verify->add_option("--report", report_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--random", random_sets, "number of randomized integer parameter sets")->capture_default_str();
  verify->add_option("--threads", threads)->capture_default_str();
  verify->add_option("--out", out_path);

  std::vector<const char*> argv{"tribo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (seq->parsed()) {
      const auto [lo, hi] = parse_range(range);
      auto params = seq_src.resolve();
      if (companion) params = params.companion();
      OutputSink sink(out_path, out);
      emit_seq(sink.stream(), params, lo, hi, format);
    } else if (oct->parsed()) {
      const auto [lo, hi] = parse_range(range);
      const OctSequenceContext ctx(oct_src.resolve(), hi);
      OutputSink sink(out_path, out);
      emit_octonions(sink.stream(), lo, hi, format, [&](std::size_t n) { return oct_term(ctx, n); }, "O");
    } else if (roots->parsed()) {
      const auto params = roots_src.resolve();
      const CubicRoots r = cubic_roots(params);
      OutputSink sink(out_path, out);
      emit_roots(sink.stream(), r);
    } else if (genfunc->parsed()) {
      const OctSequenceContext ctx(gf_src.resolve(), 2);
      OutputSink sink(out_path, out);
      emit_genfunc(sink.stream(), ctx);
    } else if (sum->parsed()) {
      const auto [lo, hi] = parse_range(range);
      const OctSequenceContext ctx(sum_src.resolve(), hi);
      if (ctx.params().delta().is_zero()) {
        throw DomainError("closed-form sum undefined: r + s + t - 1 = 0");
      }
      OutputSink sink(out_path, out);
      if (scalar_sum) {
        auto& o = sink.stream();
        if (format == "csv") o << "n,value\n";
        for (std::size_t n = lo; n <= hi; ++n) {
          const auto v = partial_sum_formula(ctx.params(), n).to_string();
          if (format == "csv") {
            o << n << "," << v << "\n";
          } else if (format == "jsonl") {
            o << nlohmann::json{{"n", n}, {"value", v}}.dump() << "\n";
          } else {
            o << "S_" << n << " = " << v << "\n";
          }
        }
      } else {
        emit_octonions(sink.stream(), lo, hi, format,
                       [&](std::size_t n) { return sum_octonions(ctx, n); }, "S");
      }
    } else if (verify->parsed()) {
      SuiteConfig config;
      if (verify_src.preset == "all") {
        if (!verify_src.config.empty() || verify_src.has_explicit()) {
          throw ParseError("give exactly one parameter source: --preset, --config, or --r/--s/--t/--v0/--v1/--v2");
        }
        config.presets.assign(kAllPresets.begin(), kAllPresets.end());
      } else if (!verify_src.preset.empty() && verify_src.count() == 1) {
        config.presets.push_back(*verify_src.preset_value());
      } else {
        config.extra_params.push_back(verify_src.resolve());
      }
      config.n_max = n_max;
      config.m_max = m_max;
      config.seed = seed;
      config.random_sets = random_sets;
      config.threads = threads;
      const VerificationReport report = run_suite(config);
      OutputSink sink(out_path, out);
      sink.stream() << (report_format == "json" ? report.to_json() : report.to_text());
      return report.passed() ? 0 : 2;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const RegimeError& e) {
    err << "error: out of regime: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: invalid request: " << e.what() << "\n";
    return 1;
  } catch (const VariantMismatch& e) {
    err << "error: inconsistent parameters: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tribo::cli
