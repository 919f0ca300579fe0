#pragma once

#include "sobmult/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sobmult {

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

std::string_view relation_str(Relation r);               // "<", "<=", "=", ">=", ">"
Relation relation_from_str(std::string_view s);          // throws ParseError
bool holds(const Rational& lhs, Relation rel, const Rational& rhs);

/**
 * One exact inequality of a certificate. `satisfied` is the truth value of
 * `lhs rel rhs` under exact arithmetic at construction time; replaying the
 * comparison must reproduce it.
 */
struct AtomicCondition {
  std::string label;
  Rational lhs;
  Relation rel;
  Rational rhs;
  bool satisfied = false;

  std::string describe() const;
};

AtomicCondition make_condition(std::string label, const Rational& lhs, Relation rel, const Rational& rhs);

/// Identifier of the theorem (or device) a certificate rests on.
enum class RuleId {
  EmbI,               // Embedding Theorem I
  EmbII,              // Embedding Theorem II (exposed via notes only)
  EmbIII,             // Embedding Theorem III (bounded domain)
  MultH,              // multiplication in Bessel spaces, s >= 0
  MultHolderH,        // Hoelder-type rule for Bessel spaces
  MultInt,            // multiplication with integer target smoothness
  MultRn,             // multiplication on R^n, nonnegative exponents
  MultBdd,            // multiplication on bounded domains, nonnegative exponents
  MultNegI,           // negative exponents I (mixed signs)
  MultNegII,          // negative exponents II (nonnegative factors, negative target)
  MultUnified,        // unified statement
  BesovZolesio,       // quoted Besov multiplication rule (diagonal case)
  DisproveNecessity,  // necessity of p1 <= p, via the g_N sequence
  Identity,           // source equals target
  InterpBilinear,     // derived by bilinear interpolation between proved endpoints
};

std::string_view rule_id_name(RuleId id);        // "Emb-I", "Mult-Rn", ...
RuleId rule_id_from_name(std::string_view name); // throws ParseError

/// Replayable evidence for a verdict: the rule used plus the exact atomic
/// inequalities its hypotheses reduced to. Every condition in a Proved
/// certificate holds.
struct Certificate {
  RuleId rule = RuleId::Identity;
  std::vector<AtomicCondition> conditions;
  std::vector<std::string> notes;
};

enum class VerdictStatus { Proved, Disproved, Undetermined };

std::string_view status_name(VerdictStatus s);
VerdictStatus status_from_name(std::string_view name); // throws ParseError

/// A rule that was attempted and did not fire, with its first failed
/// condition (or gate) for transparency.
struct RuleAttempt {
  RuleId rule;
  std::string first_failed;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Undetermined;
  std::optional<Certificate> certificate; // present for Proved / Disproved
  std::vector<RuleAttempt> tried;         // nonempty for Undetermined
};

/// u * v : left x right -> target, all over the same domain.
struct MultQuery {
  SpaceSpec left;
  SpaceSpec right;
  SpaceSpec target;

  MultQuery swapped() const { return {right, left, target}; }
};

/// source -> target, same domain on both sides.
struct EmbedQuery {
  SpaceSpec source;
  SpaceSpec target;
};

/// Decides source -> target continuity from the embedding theorems.
/// Rule order: Identity, Emb-I, Emb-III. Notes carry the Emb-II facts
/// (algebra / L^infinity / L^q thresholds of the source space).
Verdict check_embedding(const EmbedQuery& query);

/// Decides left x right -> target continuity of pointwise multiplication.
/// Fixed rule order (first match wins):
///   W:   Mult-Int, Mult-Rn, Mult-Bdd, Mult-Neg-I, Mult-Neg-II, Mult-Unified
///   H:   Mult-Holder-H, Mult-H
///   Bpp: Mult-H (diagonal Besov variant), Besov-Zolesio
/// If no rule fires, the necessity test may yield Disproved; otherwise the
/// verdict is Undetermined (the rules are sufficient conditions only).
Verdict check_multiplication(const MultQuery& query);

/// Necessity of p1 <= p: fires exactly when the left factor shares the
/// target's non-integer positive smoothness, all integrabilities exceed 1,
/// s2 >= 0, and left.p > target.p (or the mirrored condition on the right
/// factor). Family W on the whole space only.
std::optional<Certificate> necessity_disproof(const MultQuery& query);

/// Re-evaluates every atomic condition with exact arithmetic; true iff all
/// recorded truth values are reproduced.
bool replay_certificate(const Certificate& certificate);

} // namespace sobmult
