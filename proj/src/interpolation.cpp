#include "sobmult/interpolation.hpp"

#include "sobmult/errors.hpp"

namespace sobmult {

namespace {

// Case patterns under which the interpolated W space is identified with the
// parameter-arithmetic result.
void classify_w_admissibility(const SpaceSpec& a, const SpaceSpec& b, const SpaceSpec& out,
                              InterpParams& params) {
  const bool noninteger_triple = !a.s.is_integer() && !b.s.is_integer() && !out.s.is_integer();
  const bool right_integer_case = b.s.is_integer() && !out.s.is_integer();
  if (noninteger_triple || right_integer_case) {
    params.method = InterpMethod::Real;
    params.secondary = out.p;
    params.admissible = true;
    return;
  }
  if (!a.s.is_integer() && !b.s.is_integer() && out.p >= Rational(2)) {
    // One-sided only: the space embeds into the interpolation space.
    params.method = InterpMethod::Complex;
    params.admissible = true;
    params.caveats.push_back("embedding-only identification (p >= 2, both endpoint orders non-integer, "
                             "interpolated order integer)");
    return;
  }
  params.admissible = false;
  if (out.s.is_integer()) {
    params.caveats.push_back("s integer, real-interpolation cases exclude");
  }
  if (a.s.is_integer() && !b.s.is_integer()) {
    params.caveats.push_back("mixed pattern (s0 integer, s1 non-integer) is not a listed case");
  }
  if (out.p < Rational(2) && out.s.is_integer()) {
    params.caveats.push_back("embedding-only fallback needs p >= 2");
  }
}

} // namespace

std::pair<SpaceSpec, InterpParams> interpolate_specs(const SpaceSpec& a, const SpaceSpec& b,
                                                     const Rational& theta) {
  validate_space(a);
  validate_space(b);
  if (a.family != b.family) {
    throw QueryError("interpolation endpoints must share a family");
  }
  if (!(a.domain == b.domain)) {
    throw QueryError("interpolation endpoints must share a domain");
  }
  if (theta <= Rational(0) || theta >= Rational(1)) {
    throw DomainError("theta must lie strictly between 0 and 1, got " + theta.str());
  }

  const Rational one_minus = Rational(1) - theta;
  SpaceSpec out = a;
  out.s = one_minus * a.s + theta * b.s;
  out.p = (one_minus / a.p + theta / b.p).inverse();

  InterpParams params;
  params.theta = theta;

  const bool endpoint_orders_ok = a.s >= Rational(0) && b.s >= Rational(0);
  const bool endpoint_integrability_ok = a.p > Rational(1) && b.p > Rational(1);
  if (!endpoint_orders_ok) {
    params.caveats.push_back("endpoint smoothness must be >= 0 for the interpolation theorems");
  }
  if (!endpoint_integrability_ok) {
    params.caveats.push_back("endpoint integrability must satisfy 1 < p for the interpolation theorems");
  }

  switch (a.family) {
    case Family::H:
      params.method = InterpMethod::Complex;
      params.admissible = endpoint_orders_ok && endpoint_integrability_ok;
      break;
    case Family::W:
      classify_w_admissibility(a, b, out, params);
      params.admissible = params.admissible && endpoint_orders_ok && endpoint_integrability_ok;
      break;
    case Family::Bpp:
      params.admissible = false;
      params.caveats.push_back("no interpolation identification for the Bpp family in scope");
      break;
  }
  return {out, params};
}

BilinearDerivation interpolate_bilinear(const MultQuery& end0, const Verdict& verdict0,
                                        const MultQuery& end1, const Verdict& verdict1,
                                        const Rational& theta,
                                        std::optional<std::array<Rational, 3>> real_secondary) {
  if (verdict0.status != VerdictStatus::Proved || !verdict0.certificate) {
    throw DerivationError("endpoint 0 is not proved");
  }
  if (verdict1.status != VerdictStatus::Proved || !verdict1.certificate) {
    throw DerivationError("endpoint 1 is not proved");
  }
  if (end0.left.family != end1.left.family || !(end0.left.domain == end1.left.domain)) {
    throw QueryError("bilinear interpolation endpoints must share family and domain");
  }

  Certificate cert;
  cert.rule = RuleId::InterpBilinear;
  cert.conditions.push_back(make_condition("0 < theta", Rational(0), Relation::Less, theta));
  cert.conditions.push_back(make_condition("theta < 1", theta, Relation::Less, Rational(1)));
  if (!cert.conditions[0].satisfied || !cert.conditions[1].satisfied) {
    throw DomainError("theta must lie strictly between 0 and 1, got " + theta.str());
  }

  auto [left, left_params] = interpolate_specs(end0.left, end1.left, theta);
  auto [right, right_params] = interpolate_specs(end0.right, end1.right, theta);
  auto [target, target_params] = interpolate_specs(end0.target, end1.target, theta);
  MultQuery derived{left, right, target};

  if (real_secondary) {
    const auto& [sp, sq, sr] = *real_secondary;
    const Rational lhs = sp.inverse() + sq.inverse() - Rational(1);
    if (lhs < Rational(0)) {
      throw DomainError("real secondary exponents need 1/p + 1/q - 1 >= 0, got " + lhs.str());
    }
    if (lhs != sr.inverse()) {
      throw DomainError("real secondary exponents need 1/r = 1/p + 1/q - 1, got 1/r = " +
                        sr.inverse().str() + " vs " + lhs.str());
    }
    cert.conditions.push_back(
        make_condition("real method: 1/r = 1/p + 1/q - 1", sr.inverse(), Relation::Equal, lhs));
    cert.conditions.push_back(
        make_condition("real method: 1/p + 1/q - 1 >= 0", lhs, Relation::GreaterEq, Rational(0)));
    cert.notes.push_back("derived by real bilinear interpolation with secondary exponents (" + sp.str() +
                         ", " + sq.str() + ", " + sr.str() + ")");
    if (sr != target.p || sp != left.p || sq != right.p) {
      cert.notes.push_back("secondary exponents differ from the interpolated integrabilities; "
                           "identification of the interpolation spaces is not automatic");
    }
  } else {
    cert.notes.push_back("derived by complex bilinear interpolation");
  }

  cert.notes.push_back("endpoint 0 rule: " + std::string(rule_id_name(verdict0.certificate->rule)));
  cert.notes.push_back("endpoint 1 rule: " + std::string(rule_id_name(verdict1.certificate->rule)));
  for (const auto& params : {left_params, right_params, target_params}) {
    for (const auto& caveat : params.caveats) cert.notes.push_back("component caveat: " + caveat);
  }

  for (const auto& cond : verdict0.certificate->conditions) {
    AtomicCondition copy = cond;
    copy.label = "end0 " + copy.label;
    cert.conditions.push_back(std::move(copy));
  }
  for (const auto& cond : verdict1.certificate->conditions) {
    AtomicCondition copy = cond;
    copy.label = "end1 " + copy.label;
    cert.conditions.push_back(std::move(copy));
  }

  return BilinearDerivation{std::move(derived), std::move(cert)};
}

EpsilonShift suggest_epsilon_shift(const SpaceSpec& spec,
                                   std::span<const std::pair<std::string, Rational>> slack_terms) {
  std::vector<std::pair<std::string, Rational>> terms;
  // The unit step keeps s - epsilon out of Z for any epsilon in (0, 1).
  terms.emplace_back("unit step", Rational(1));
  if (!spec.s.is_integer()) {
    terms.emplace_back("s - floor(s)", spec.s.frac());
  }
  for (const auto& [label, value] : slack_terms) {
    if (value <= Rational(0)) {
      throw DomainError("slack term '" + label + "' must be positive, got " + value.str());
    }
    terms.emplace_back(label, value);
  }

  Rational smallest = terms.front().second;
  for (const auto& [label, value] : terms) smallest = Rational::min(smallest, value);

  EpsilonShift shift;
  shift.epsilon = smallest / Rational(2);
  shift.shifted = spec;
  shift.shifted.s = spec.s - shift.epsilon;
  for (const auto& [label, value] : terms) {
    if (value == smallest) shift.active_terms.push_back(label);
  }
  return shift;
}

} // namespace sobmult
