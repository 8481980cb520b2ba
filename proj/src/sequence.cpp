#include "tribo/sequence.hpp"

namespace tribo {

RecurrenceParams::RecurrenceParams(Scalar r, Scalar s, Scalar t, Scalar v0, Scalar v1, Scalar v2)
    : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)), v0_(std::move(v0)), v1_(std::move(v1)),
      v2_(std::move(v2)) {
  if (!r_.is_exact()) throw DomainError("recurrence parameters must be exact (ExactInt or ExactRational)");
  for (const Scalar* x : {&s_, &t_, &v0_, &v1_, &v2_}) {
    require_same_kind(r_.kind(), x->kind(), "recurrence parameters");
  }
}

RecurrenceParams RecurrenceParams::from_ints(long r, long s, long t, long v0, long v1, long v2) {
  return {Scalar::integer(r), Scalar::integer(s), Scalar::integer(t),
          Scalar::integer(v0), Scalar::integer(v1), Scalar::integer(v2)};
}

Scalar RecurrenceParams::delta() const { return r_ + s_ + t_ - Scalar::one(kind()); }

RecurrenceParams RecurrenceParams::companion() const {
  return {r_, s_, t_, Scalar::zero(kind()), Scalar::one(kind()), r_};
}

RecurrenceParams RecurrenceParams::to_rational() const {
  return {r_.promote_to_rational(),  s_.promote_to_rational(),  t_.promote_to_rational(),
          v0_.promote_to_rational(), v1_.promote_to_rational(), v2_.promote_to_rational()};
}

std::string RecurrenceParams::to_string() const {
  return "V(" + v0_.to_string() + "," + v1_.to_string() + "," + v2_.to_string() + ";" +
         r_.to_string() + "," + s_.to_string() + "," + t_.to_string() + ")";
}

RecurrenceParams preset_lookup(Preset preset) {
  switch (preset) {
    case Preset::tribonacci:
      return RecurrenceParams::from_ints(1, 1, 1, 0, 1, 1);
    case Preset::padovan:
      return RecurrenceParams::from_ints(0, 1, 1, 0, 1, 0);
    case Preset::narayana:
      return RecurrenceParams::from_ints(1, 0, 1, 0, 1, 1);
    case Preset::third_order_jacobsthal:
      return RecurrenceParams::from_ints(1, 1, 2, 0, 1, 1);
  }
  throw DomainError("unknown preset");
}

std::string_view preset_name(Preset preset) {
  switch (preset) {
    case Preset::tribonacci:
      return "tribonacci";
    case Preset::padovan:
      return "padovan";
    case Preset::narayana:
      return "narayana";
    case Preset::third_order_jacobsthal:
      return "third_order_jacobsthal";
  }
  return "?";
}

std::optional<Preset> parse_preset(std::string_view name) {
  std::string normalized(name);
  for (auto& ch : normalized) {
    if (ch == '-') ch = '_';
  }
  for (Preset p : kAllPresets) {
    if (preset_name(p) == normalized) return p;
  }
  return std::nullopt;
}

std::vector<Scalar> sequence_terms(const RecurrenceParams& params, std::size_t count) {
  std::vector<Scalar> v;
  v.reserve(count);
  const auto init = params.initials();
  for (std::size_t n = 0; n < count; ++n) {
    if (n < 3) {
      v.push_back(init[n]);
    } else {
      v.push_back(params.r() * v[n - 1] + params.s() * v[n - 2] + params.t() * v[n - 3]);
    }
  }
  return v;
}

Scalar seq_term(const RecurrenceParams& params, std::size_t n) {
  return sequence_terms(params, n + 1).back();
}

Scalar u_term(const RecurrenceParams& params, std::size_t n) {
  return seq_term(params.companion(), n);
}

IdentitySides<Scalar> seq_identity_eq9(const RecurrenceParams& params, std::size_t n) {
  if (n < 2) throw DomainError("identity needs n >= 2, got " + std::to_string(n));
  const auto v = sequence_terms(params, n + 2);
  const auto u = sequence_terms(params.companion(), n + 1);
  const auto& s = params.s();
  const auto& t = params.t();
  Scalar rhs = params.v2() * u[n] + (s * params.v1() + t * params.v0()) * u[n - 1] +
               t * params.v1() * u[n - 2];
  return {v[n + 1], std::move(rhs)};
}

Scalar lambda_const(const RecurrenceParams& params, LambdaSign sign) {
  const Scalar one = Scalar::one(params.kind());
  const Scalar v0_coeff = sign == LambdaSign::corrected ? params.r() + params.s() - one
                                                        : params.r() - params.s() - one;
  return v0_coeff * params.v0() + (params.r() - one) * params.v1() - params.v2();
}

Scalar partial_sum_formula(const RecurrenceParams& params, std::size_t n, LambdaSign sign) {
  const RecurrenceParams q = params.to_rational();
  const Scalar delta = q.delta();
  if (delta.is_zero()) {
    throw DomainError("partial-sum formula undefined: r + s + t - 1 = 0");
  }
  const auto v = sequence_terms(q, n + 3);
  const Scalar one = Scalar::one(ScalarKind::exact_rational);
  Scalar numerator = v[n + 2] + (one - q.r()) * v[n + 1] + q.t() * v[n] + lambda_const(q, sign);
  return numerator / delta;
}

Scalar direct_partial_sum(const RecurrenceParams& params, std::size_t n) {
  const RecurrenceParams q = params.to_rational();
  Scalar sum = Scalar::zero(ScalarKind::exact_rational);
  for (const auto& x : sequence_terms(q, n + 1)) sum += x;
  return sum;
}

}  // namespace tribo
