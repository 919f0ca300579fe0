#include "sobmult/space.hpp"

#include "sobmult/errors.hpp"

namespace sobmult {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::H: return "H";
    case Family::Bpp: return "Bpp";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  if (name == "W") return Family::W;
  if (name == "H") return Family::H;
  if (name == "Bpp" || name == "B") return Family::Bpp;
  throw ParseError("unknown space family: '" + std::string(name) + "'");
}

std::string space_str(const SpaceSpec& spec) {
  std::string dom = spec.domain.kind == DomainKind::WholeSpace
                        ? "R^" + std::to_string(spec.domain.n)
                        : "Omega_" + std::to_string(spec.domain.n);
  if (spec.family == Family::Bpp) {
    return "B^{" + spec.s.str() + "}_{" + spec.p.str() + "," + spec.p.str() + "}(" + dom + ")";
  }
  return std::string(family_name(spec.family)) + "^{" + spec.s.str() + "," + spec.p.str() + "}(" + dom + ")";
}

SpaceSpec validate_space(const SpaceSpec& spec) {
  if (spec.domain.n < 1) {
    throw ValidationError("spatial dimension must satisfy n >= 1, got n = " + std::to_string(spec.domain.n));
  }
  const bool needs_open_range = spec.family == Family::H || spec.s < Rational(0);
  if (needs_open_range) {
    if (spec.p <= Rational(1)) {
      throw ValidationError(space_str(spec) + ": " +
                            (spec.family == Family::H ? std::string("family H requires 1 < p")
                                                      : std::string("negative s requires p > 1")) +
                            ", got p = " + spec.p.str());
    }
  } else {
    if (spec.p < Rational(1)) {
      throw ValidationError(space_str(spec) + ": requires p >= 1, got p = " + spec.p.str());
    }
  }
  return spec; // Rational values are always canonical
}

std::optional<std::pair<Rational, Rational>> predual_parameters(const SpaceSpec& spec) {
  if (spec.s >= Rational(0)) return std::nullopt;
  return std::make_pair(-spec.s, conjugate_exponent(spec.p));
}

} // namespace sobmult
