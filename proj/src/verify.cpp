#include "tribo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tribo/genfunc.hpp"
#include "tribo/oct_sequence.hpp"

namespace tribo {

bool is_exact_category(std::string_view name) {
  return name != "binet-v" && name != "binet-oct" && name != "p4-norm" && name != "p6-quad";
}

std::map<std::string, double> default_tolerances() {
  return {{"binet-v", 1e-9}, {"binet-oct", 1e-8}, {"p4-norm", 1e-6}, {"p6-quad", 1e-8}};
}

void CategoryResult::record(bool ok, double abs_residual, double rel_residual) {
  ++run;
  if (!ok) ++failed;
  max_abs_residual = std::max(max_abs_residual, abs_residual);
  max_rel_residual = std::max(max_rel_residual, rel_residual);
}

void CategoryResult::merge(const CategoryResult& other) {
  run += other.run;
  failed += other.failed;
  skipped += other.skipped;
  max_abs_residual = std::max(max_abs_residual, other.max_abs_residual);
  max_rel_residual = std::max(max_rel_residual, other.max_rel_residual);
}

PublishedTables published_tables() {
  PublishedTables t;
  t.table2 = {
      {Preset::narayana,
       {{{0, 1, 0}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1, 2}, {4, 2, 3}, {6, 3, 4}}}},
      {Preset::tribonacci,
       {{{0, 1, 0}, {1, 0, 0}, {1, 1, 1}, {2, 2, 1}, {4, 3, 2}, {7, 6, 4}, {13, 11, 7},
         {24, 20, 13}}}},
      {Preset::padovan,
       {{{0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {2, 2, 1}, {2, 3, 2}}}},
      {Preset::third_order_jacobsthal,
       {{{0, 1, 0}, {1, 0, 0}, {1, 1, 1}, {2, 3, 2}, {5, 4, 4}, {9, 9, 10}, {18, 19, 18},
         {37, 36, 36}}}},
  };
  // e2 numerator is printed as 1 + x + x^2; V4 - r V3 - s V2 = 5 - 2 - 1 = 2.
  t.table2_errata = {{Preset::third_order_jacobsthal, 2, 2, 1, 2}};
  t.table3 = {
      {Preset::narayana, 1, {{1, 3}}, {1, 1, 2, 3, 4, 6, 9, 13}},
      {Preset::tribonacci, 2, {{1, 2}, {1, 0}}, {1, 1, 3, 5, 9, 17, 31, 57}},
      {Preset::padovan, 1, {{1, 5}}, {1, 1, 2, 2, 3, 4, 5, 7}},
      {Preset::third_order_jacobsthal, 3, {{1, 2}, {2, 0}}, {1, 1, 4, 7, 13, 28, 55, 109}},
  };
  t.table4 = {
      {Preset::narayana, {{{{1, -1}}, {{1, -3}}, {{1, -2}}}}},
      {Preset::tribonacci, {{{{1, -1}}, {{1, -2}, {1, -3}}, {{1, -2}}}}},
      {Preset::padovan, {{{{1, -1}}, {{1, 0}}, {{1, -2}}}}},
      {Preset::third_order_jacobsthal, {{{{1, -1}}, {{1, -2}, {2, -3}}, {{2, -2}}}}},
  };
  return t;
}

void SuiteConfig::validate() const {
  if (n_max < 3) throw DomainError("n_max must be >= 3");
  if (m_max < 3) throw DomainError("m_max must be >= 3");
  for (const auto& [name, tol] : tolerances) {
    if (!(tol > 0.0)) throw DomainError("tolerance for " + name + " must be positive");
  }
}

std::vector<RecurrenceParams> random_params(std::uint64_t seed, std::size_t count,
                                            RandomParamsOptions options) {
  std::mt19937_64 rng(seed);
  // Modulo mapping keeps the stream identical across standard libraries.
  auto draw = [&rng](long bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long>(rng() % span) - bound;
  };
  std::vector<RecurrenceParams> out;
  while (out.size() < count) {
    const long r = draw(options.coefficient_bound);
    const long s = draw(options.coefficient_bound);
    const long t = draw(options.coefficient_bound);
    const long v0 = draw(options.initial_bound);
    const long v1 = draw(options.initial_bound);
    const long v2 = draw(options.initial_bound);
    if (options.require_nonzero_delta && r + s + t == 1) continue;
    out.push_back(RecurrenceParams::from_ints(r, s, t, v0, v1, v2));
  }
  return out;
}

namespace {

double scalar_abs(const Scalar& x) { return std::abs(x.to_complex()); }

double exact_residual(const Octonion& lhs, const Octonion& rhs) {
  return max_abs_difference(lhs, rhs);
}

struct SetOutcome {
  std::map<std::string, CategoryResult> categories;
  std::vector<std::string> errata;
  std::size_t printed_sign_checks = 0;
  std::size_t printed_sign_counterexamples = 0;
  std::string first_counterexample;
};

class SetChecker {
 public:
  SetChecker(const SuiteConfig& config, const RecurrenceParams& params, std::optional<Preset> preset,
             bool numeric)
      : config_(config),
        params_(params),
        preset_(preset),
        numeric_(numeric),
        ctx_(params, config.n_max + config.m_max) {}

  SetOutcome run() {
    check_recurrence();
    check_eq9();
    check_partial_sums();
    check_octonion_sums();
    check_shift();
    if (preset_) {
      check_table2();
      check_table3();
      check_table4();
    }
    if (numeric_) check_numeric();
    return std::move(out_);
  }

 private:
  CategoryResult& cat(const char* name) { return out_.categories[name]; }

  void record_exact(const char* name, const IdentitySides<Octonion>& sides) {
    const bool ok = sides.holds();
    const double abs = ok ? 0.0 : exact_residual(sides.lhs, sides.rhs);
    cat(name).record(ok, abs, abs / std::max(1.0, max_abs_component(sides.lhs)));
  }

  void record_exact(const char* name, const IdentitySides<Scalar>& sides) {
    const bool ok = sides.holds();
    const double abs = ok ? 0.0 : scalar_abs(sides.lhs - sides.rhs);
    cat(name).record(ok, abs, abs / std::max(1.0, scalar_abs(sides.lhs)));
  }

  void record_numeric(const char* name, double abs, double scale) {
    const double rel = abs / std::max(1.0, scale);
    cat(name).record(rel <= config_.tolerances.at(name), abs, rel);
  }

  void check_recurrence() {
    for (std::size_t n = 1; n <= config_.n_max; ++n) record_exact("recurrence", recurrence_check(ctx_, n));
  }

  void check_eq9() {
    for (std::size_t n = 2; n <= config_.n_max; ++n) record_exact("eq9", seq_identity_eq9(params_, n));
  }

  void check_partial_sums() {
    const bool degenerate = params_.delta().is_zero();
    Scalar direct = Scalar::zero(ScalarKind::exact_rational);
    for (std::size_t n = 0; n <= config_.n_max; ++n) {
      direct += ctx_.term(n).promote_to_rational();
      if (degenerate) {
        ++cat("p2-sum").skipped;
        continue;
      }
      record_exact("p2-sum", IdentitySides<Scalar>{direct, partial_sum_formula(params_, n)});
      ++out_.printed_sign_checks;
      if (!(partial_sum_formula(params_, n, LambdaSign::as_printed) == direct)) {
        if (out_.printed_sign_counterexamples++ == 0) {
          out_.first_counterexample = params_.to_string() + " n=" + std::to_string(n);
        }
      }
    }
  }

  void check_octonion_sums() {
    const bool degenerate = params_.delta().is_zero();
    Octonion direct = Octonion::zero(ScalarKind::exact_rational);
    for (std::size_t n = 0; n <= config_.n_max; ++n) {
      direct += oct_term(ctx_, n).to_rational();
      if (degenerate) {
        ++cat("p3-oct-sum").skipped;
        continue;
      }
      record_exact("p3-oct-sum", IdentitySides<Octonion>{direct, sum_octonions(ctx_, n)});
    }
  }

  void check_shift() {
    for (std::size_t m = 3; m <= config_.m_max; ++m) {
      for (std::size_t n = 0; n <= config_.n_max; ++n) record_exact("table4-p5", shift_formula(ctx_, n, m));
    }
  }

  void check_table2() {
    const auto& tables = config_.tables;
    const auto row = std::find_if(tables.table2.begin(), tables.table2.end(),
                                  [&](const Table2Row& r) { return r.preset == *preset_; });
    if (row == tables.table2.end()) return;
    const OctPolynomial numerator = gf_numerator(ctx_);
    for (int slot = 0; slot < 8; ++slot) {
      for (int power = 0; power < 3; ++power) {
        const Scalar computed = numerator.coeff(static_cast<std::size_t>(power))[static_cast<std::size_t>(slot)];
        const long printed = row->printed[static_cast<std::size_t>(slot)][static_cast<std::size_t>(power)];
        if (computed == Scalar::integer(printed)) {
          cat("table2").record(true);
          continue;
        }
        const bool known = std::any_of(
            tables.table2_errata.begin(), tables.table2_errata.end(), [&](const Table2Erratum& e) {
              return e.preset == *preset_ && e.slot == slot && e.power == power &&
                     e.printed == printed && computed == Scalar::integer(e.computed);
            });
        const double abs = scalar_abs(computed - Scalar::integer(printed));
        if (known) {
          cat("table2").record(true);
          out_.errata.push_back("table2 " + std::string(preset_name(*preset_)) + " e" +
                                std::to_string(slot) + " x^" + std::to_string(power) +
                                ": printed " + std::to_string(printed) + ", computed " +
                                computed.to_string());
        } else {
          cat("table2").record(false, abs, abs / std::max(1.0, scalar_abs(computed)));
        }
      }
    }
  }

  void check_table3() {
    const auto& rows = config_.tables.table3;
    const auto row = std::find_if(rows.begin(), rows.end(),
                                  [&](const Table3Row& r) { return r.preset == *preset_; });
    if (row == rows.end()) return;
    Octonion::Components k;
    for (std::size_t l = 0; l < 8; ++l) k[l] = Scalar(Scalar::Rational(row->subtracted[l]));
    const Octonion subtracted(k);
    record_exact("table3", IdentitySides<Octonion>{omega_const(params_), -subtracted});

    const Scalar divisor(Scalar::Rational(row->divisor));
    Octonion direct = Octonion::zero(ScalarKind::exact_rational);
    for (std::size_t n = 0; n <= config_.n_max; ++n) {
      direct += oct_term(ctx_, n).to_rational();
      Octonion formula = -subtracted;
      for (const auto& [coeff, shift] : row->terms) {
        formula += Scalar(Scalar::Rational(coeff)) *
                   oct_term(ctx_, n + static_cast<std::size_t>(shift)).to_rational();
      }
      record_exact("table3", IdentitySides<Octonion>{direct, formula / divisor});
    }
  }

  void check_table4() {
    const auto& rows = config_.tables.table4;
    const auto row = std::find_if(rows.begin(), rows.end(),
                                  [&](const Table4Row& r) { return r.preset == *preset_; });
    if (row == rows.end()) return;
    const auto u = sequence_terms(params_.companion(), config_.m_max + 1);
    for (std::size_t m = 3; m <= config_.m_max; ++m) {
      std::array<Scalar, 3> c;
      for (std::size_t k = 0; k < 3; ++k) {
        c[k] = Scalar::zero(params_.kind());
        for (const auto& [coeff, offset] : row->coefficients[k]) {
          const auto index = static_cast<std::size_t>(static_cast<long>(m) + offset);
          c[k] += Scalar::integer(coeff) * u[index];
        }
      }
      for (std::size_t n = 0; n <= config_.n_max; ++n) {
        Octonion rhs = c[0] * oct_term(ctx_, n + 2) + c[1] * oct_term(ctx_, n + 1) +
                       c[2] * oct_term(ctx_, n);
        record_exact("table4-p5", IdentitySides<Octonion>{oct_term(ctx_, n + m), rhs});
      }
    }
  }

  void check_numeric() {
    const std::size_t binet_hi = std::min(config_.n_max, config_.windows.binet);
    const std::size_t quad_hi = std::min(config_.n_max, config_.windows.quad);
    const std::size_t norm_hi = std::min(config_.n_max, config_.windows.norm);
    if (!ctx_.has_roots()) {
      cat("binet-v").skipped += 2 * (binet_hi + 1);
      cat("binet-oct").skipped += binet_hi + 1;
      cat("p6-quad").skipped += 3 * (quad_hi + 1);
      cat("p4-norm").skipped += norm_hi + 1;
      return;
    }
    const CubicRoots& roots = ctx_.roots();
    const auto u = sequence_terms(params_.companion(), binet_hi + 1);
    for (std::size_t n = 0; n <= binet_hi; ++n) {
      for (const auto which : {BinetSeries::v, BinetSeries::u}) {
        const double exact = (which == BinetSeries::v ? ctx_.term(n) : u[n]).to_complex().real();
        const Complex b = binet_scalar(roots, params_, n, which);
        const double abs = std::max(std::abs(b.real() - exact), std::abs(b.imag()));
        record_numeric("binet-v", abs, std::abs(exact));
      }
      const Octonion exact = oct_term(ctx_, n);
      record_numeric("binet-oct", max_abs_difference(oct_binet(ctx_, n), exact),
                     max_abs_component(exact));
    }
    for (std::size_t n = 0; n <= quad_hi; ++n) {
      for (const auto line : {RootLine::alpha, RootLine::omega1, RootLine::omega2}) {
        const auto sides = quad_approx(ctx_, n, line);
        record_numeric("p6-quad", max_abs_difference(sides.lhs, sides.rhs),
                       max_abs_component(sides.lhs));
      }
    }
    for (std::size_t n = 0; n <= norm_hi; ++n) {
      const double exact = oct_term(ctx_, n).norm_sq().to_complex().real();
      const Complex formula = norm_formula(ctx_, n);
      const double abs = std::max(std::abs(formula.real() - exact), std::abs(formula.imag()));
      record_numeric("p4-norm", abs, exact);
    }
  }

  const SuiteConfig& config_;
  RecurrenceParams params_;
  std::optional<Preset> preset_;
  bool numeric_;
  OctSequenceContext ctx_;
  SetOutcome out_;
};

struct Job {
  RecurrenceParams params;
  std::optional<Preset> preset;
  bool numeric;
};

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  std::vector<Job> jobs;
  for (Preset p : config.presets) jobs.push_back({preset_lookup(p), p, true});
  for (const auto& p : config.extra_params) jobs.push_back({p, std::nullopt, true});
  for (const auto& p : random_params(config.seed, config.random_sets)) {
    jobs.push_back({p, std::nullopt, false});
  }
  // The printed-sign diagnostic always includes this known counterexample.
  jobs.push_back({RecurrenceParams::from_ints(1, 1, 1, 1, 0, 0), std::nullopt, false});
  const std::size_t diagnostic_only = jobs.size() - 1;

  std::vector<SetOutcome> outcomes(jobs.size());
  auto run_job = [&](std::size_t i) {
    return SetChecker(config, jobs[i].params, jobs[i].preset, jobs[i].numeric).run();
  };
  if (config.threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) outcomes[i] = run_job(i);
  } else {
    for (std::size_t start = 0; start < jobs.size(); start += config.threads) {
      std::vector<std::future<SetOutcome>> batch;
      const std::size_t stop = std::min(jobs.size(), start + config.threads);
      for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, run_job, i));
      for (std::size_t i = start; i < stop; ++i) outcomes[i] = batch[i - start].get();
    }
  }

  VerificationReport report;
  report.seed = config.seed;
  for (auto name : kCategoryNames) report.categories[std::string(name)];
  std::string first_counterexample;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (i != diagnostic_only) {
      for (const auto& [name, result] : o.categories) report.categories[name].merge(result);
      report.errata.insert(report.errata.end(), o.errata.begin(), o.errata.end());
    }
    report.printed_sign_checks += o.printed_sign_checks;
    report.printed_sign_counterexamples += o.printed_sign_counterexamples;
    if (first_counterexample.empty()) first_counterexample = o.first_counterexample;
  }
  std::ostringstream note;
  note << "p2-sum: V0 coefficient printed as (r-s-1) fails in " << report.printed_sign_counterexamples
       << " of " << report.printed_sign_checks << " checks";
  if (!first_counterexample.empty()) note << " (first: " << first_counterexample << ")";
  note << "; (r+s-1) is used";
  report.errata.push_back(note.str());
  return report;
}

bool VerificationReport::passed() const {
  return std::all_of(categories.begin(), categories.end(),
                     [](const auto& entry) { return entry.second.failed == 0; });
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["categories"] = nlohmann::json::object();
  for (const auto& [name, c] : categories) {
    j["categories"][name] = {{"run", c.run},
                             {"failed", c.failed},
                             {"skipped", c.skipped},
                             {"max_rel_residual", c.max_rel_residual}};
  }
  j["errata"] = errata;
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& [name, c] : categories) {
    out << (c.failed == 0 ? "PASS " : "FAIL ") << name << ": run=" << c.run
        << " failed=" << c.failed << " skipped=" << c.skipped
        << " max_rel_residual=" << format_double(c.max_rel_residual) << "\n";
  }
  for (const auto& e : errata) out << "erratum: " << e << "\n";
  out << "seed: " << seed << "\n";
  return out.str();
}

}  // namespace tribo
