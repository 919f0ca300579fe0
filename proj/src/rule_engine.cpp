#include "sobmult/rule_engine.hpp"

#include "sobmult/errors.hpp"

#include <array>
#include <functional>
#include <utility>

namespace sobmult {

std::string_view relation_str(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Relation relation_from_str(std::string_view s) {
  if (s == "<") return Relation::Less;
  if (s == "<=") return Relation::LessEq;
  if (s == "=") return Relation::Equal;
  if (s == ">=") return Relation::GreaterEq;
  if (s == ">") return Relation::Greater;
  throw ParseError("unknown relation: '" + std::string(s) + "'");
}

bool holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
  }
  return false;
}

AtomicCondition make_condition(std::string label, const Rational& lhs, Relation rel, const Rational& rhs) {
  return AtomicCondition{std::move(label), lhs, rel, rhs, holds(lhs, rel, rhs)};
}

std::string AtomicCondition::describe() const {
  return label + ": " + lhs.str() + " " + std::string(relation_str(rel)) + " " + rhs.str() +
         (satisfied ? " [holds]" : " [fails]");
}

namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 15> kRuleNames{{
    {RuleId::EmbI, "Emb-I"},
    {RuleId::EmbII, "Emb-II"},
    {RuleId::EmbIII, "Emb-III"},
    {RuleId::MultH, "Mult-H"},
    {RuleId::MultHolderH, "Mult-Holder-H"},
    {RuleId::MultInt, "Mult-Int"},
    {RuleId::MultRn, "Mult-Rn"},
    {RuleId::MultBdd, "Mult-Bdd"},
    {RuleId::MultNegI, "Mult-Neg-I"},
    {RuleId::MultNegII, "Mult-Neg-II"},
    {RuleId::MultUnified, "Mult-Unified"},
    {RuleId::BesovZolesio, "Besov-Zolesio"},
    {RuleId::DisproveNecessity, "Disprove-Necessity"},
    {RuleId::Identity, "Identity"},
    {RuleId::InterpBilinear, "Interp-Bilinear"},
}};

} // namespace

std::string_view rule_id_name(RuleId id) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == id) return name;
  }
  return "?";
}

RuleId rule_id_from_name(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames) {
    if (n == name) return rule;
  }
  throw ParseError("unknown rule id: '" + std::string(name) + "'");
}

std::string_view status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Proved: return "Proved";
    case VerdictStatus::Disproved: return "Disproved";
    case VerdictStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

VerdictStatus status_from_name(std::string_view name) {
  if (name == "Proved") return VerdictStatus::Proved;
  if (name == "Disproved") return VerdictStatus::Disproved;
  if (name == "Undetermined") return VerdictStatus::Undetermined;
  throw ParseError("unknown verdict status: '" + std::string(name) + "'");
}

namespace {

/// Accumulates the hypothesis list of one rule. All conditions are
/// evaluated (deterministically, in order); the first failure is kept for
/// the `tried` record.
class RuleEval {
public:
  explicit RuleEval(RuleId id) { cert_.rule = id; }

  void gate(bool ok, std::string why) {
    if (!ok && failure_.empty()) failure_ = std::move(why);
  }

  void require(std::string label, const Rational& lhs, Relation rel, const Rational& rhs) {
    AtomicCondition c = make_condition(std::move(label), lhs, rel, rhs);
    if (!c.satisfied && failure_.empty()) failure_ = c.describe();
    cert_.conditions.push_back(std::move(c));
  }

  /// v is an integer, encoded as the exact comparison frac(v) = 0.
  void require_integer(std::string label, const Rational& v) {
    require(std::move(label), v.frac(), Relation::Equal, Rational(0));
  }

  /// v is not an integer, encoded as frac(v) > 0.
  void require_fractional(std::string label, const Rational& v) {
    require(std::move(label), v.frac(), Relation::Greater, Rational(0));
  }

  void note(std::string n) { cert_.notes.push_back(std::move(n)); }

  bool passed() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  Certificate take_certificate() && { return std::move(cert_); }

private:
  Certificate cert_;
  std::string failure_;
};

/// Exact quantities shared by every multiplication rule.
struct MultCtx {
  Rational s1, p1, s2, p2, s, p;
  Rational n;
  DomainKind kind = DomainKind::WholeSpace;

  Rational defect(int i) const { return (i == 1 ? s1 : s2) - s; }
  Rational gap(int i) const { return n * ((i == 1 ? p1 : p2).inverse() - p.inverse()); }
  Rational sum_lhs() const { return s1 + s2 - s; }
  Rational sum_rhs() const { return n * (p1.inverse() + p2.inverse() - p.inverse()); }
  Rational pair_lhs() const { return s1 + s2; }
  Rational pair_rhs() const { return n * (p1.inverse() + p2.inverse() - Rational(1)); }
};

MultCtx make_ctx(const MultQuery& q) {
  return MultCtx{q.left.s,  q.left.p,  q.right.s, q.right.p, q.target.s, q.target.p,
                 Rational(q.target.domain.n), q.target.domain.kind};
}

void require_smoothness_order(RuleEval& r, const MultCtx& c) {
  r.require("(i): s1 >= s", c.s1, Relation::GreaterEq, c.s);
  r.require("(i): s2 >= s", c.s2, Relation::GreaterEq, c.s);
}

void require_gap(RuleEval& r, const MultCtx& c, int i, Relation rel) {
  std::string idx = std::to_string(i);
  r.require("(iii): s" + idx + " - s " + std::string(relation_str(rel)) + " n(1/p" + idx + " - 1/p)",
            c.defect(i), rel, c.gap(i));
}

void require_sum(RuleEval& r, const MultCtx& c, Relation rel) {
  r.require("(iv): s1+s2-s " + std::string(relation_str(rel)) + " n(1/p1+1/p2-1/p)",
            c.sum_lhs(), rel, c.sum_rhs());
}

void require_sum_tail(RuleEval& r, const MultCtx& c) {
  r.require("(iv): n(1/p1+1/p2-1/p) >= 0", c.sum_rhs(), Relation::GreaterEq, Rational(0));
}

// Integer target smoothness; strictness of (iii)/(iv) interchangeable, no
// ordering between p_i and p. Valid on R^n and, via extension operators, on
// bounded Lipschitz domains.
RuleEval eval_mult_int_variant(const MultCtx& c, bool interchanged) {
  RuleEval r(RuleId::MultInt);
  r.require("1 <= p1", Rational(1), Relation::LessEq, c.p1);
  r.require("1 <= p2", Rational(1), Relation::LessEq, c.p2);
  r.require("1 <= p", Rational(1), Relation::LessEq, c.p);
  require_smoothness_order(r, c);
  r.require("(i): s >= 0", c.s, Relation::GreaterEq, Rational(0));
  r.require_integer("(ii): s in N0", c.s);
  const Relation gap_rel = interchanged ? Relation::Greater : Relation::GreaterEq;
  const Relation sum_rel = interchanged ? Relation::GreaterEq : Relation::Greater;
  require_gap(r, c, 1, gap_rel);
  require_gap(r, c, 2, gap_rel);
  require_sum(r, c, sum_rel);
  require_sum_tail(r, c);
  r.note(interchanged ? "strictness pattern interchanged: strict (iii), non-strict (iv)"
                      : "strictness pattern: non-strict (iii), strict (iv)");
  if (c.kind == DomainKind::BoundedLipschitz) {
    r.note("bounded-domain variant (corollary): extension operators cited");
  }
  return r;
}

RuleEval eval_mult_int(const MultCtx& c) {
  RuleEval plain = eval_mult_int_variant(c, false);
  if (plain.passed()) return plain;
  RuleEval interchanged = eval_mult_int_variant(c, true);
  if (interchanged.passed()) return interchanged;
  return plain; // report the canonical variant's first failure
}

// Nonnegative exponents on R^n with the ordering p_i <= p.
RuleEval eval_mult_rn(const MultCtx& c) {
  RuleEval r(RuleId::MultRn);
  r.gate(c.kind == DomainKind::WholeSpace, "rule stated on R^n only");
  r.require("1 <= p1", Rational(1), Relation::LessEq, c.p1);
  r.require("p1 <= p", c.p1, Relation::LessEq, c.p);
  r.require("1 <= p2", Rational(1), Relation::LessEq, c.p2);
  r.require("p2 <= p", c.p2, Relation::LessEq, c.p);
  require_smoothness_order(r, c);
  r.require("(ii): s >= 0", c.s, Relation::GreaterEq, Rational(0));
  require_gap(r, c, 1, Relation::GreaterEq);
  require_gap(r, c, 2, Relation::GreaterEq);
  require_sum(r, c, Relation::Greater);
  return r;
}

// Bounded Lipschitz domains; no ordering between p_i and p. When
// max{p1,p2} > p, condition (iv) is replaced by s1+s2-s > n/min{p1,p2}.
RuleEval eval_mult_bdd(const MultCtx& c) {
  RuleEval r(RuleId::MultBdd);
  r.gate(c.kind == DomainKind::BoundedLipschitz, "rule requires a bounded Lipschitz domain");
  r.require("1 <= p1", Rational(1), Relation::LessEq, c.p1);
  r.require("1 <= p2", Rational(1), Relation::LessEq, c.p2);
  r.require("1 <= p", Rational(1), Relation::LessEq, c.p);
  require_smoothness_order(r, c);
  r.require("(ii): s >= 0", c.s, Relation::GreaterEq, Rational(0));
  require_gap(r, c, 1, Relation::GreaterEq);
  require_gap(r, c, 2, Relation::GreaterEq);
  if (Rational::max(c.p1, c.p2) > c.p) {
    r.require("(iv'): s1+s2-s > n/min{p1,p2}", c.sum_lhs(), Relation::Greater,
              c.n / Rational::min(c.p1, c.p2));
    r.note("replacement clause applied (max{p1,p2} > p); (i)-(iii) kept verbatim, only (iv) swapped");
  } else {
    require_sum(r, c, Relation::Greater);
  }
  r.note("bounded-domain rule");
  return r;
}

// Negative exponents I: at least one factor has negative smoothness. The
// bounded-domain variant drops the lower bound 1/p1+1/p2 >= 1.
RuleEval eval_mult_neg1(const MultCtx& c) {
  RuleEval r(RuleId::MultNegI);
  r.require("1 < p1", Rational(1), Relation::Less, c.p1);
  r.require("p1 <= p", c.p1, Relation::LessEq, c.p);
  r.require("1 < p2", Rational(1), Relation::Less, c.p2);
  r.require("p2 <= p", c.p2, Relation::LessEq, c.p);
  require_smoothness_order(r, c);
  r.require("(ii): min{s1,s2} < 0", Rational::min(c.s1, c.s2), Relation::Less, Rational(0));
  require_gap(r, c, 1, Relation::GreaterEq);
  require_gap(r, c, 2, Relation::GreaterEq);
  require_sum(r, c, Relation::Greater);
  r.require("(v): s1+s2 >= n(1/p1+1/p2-1)", c.pair_lhs(), Relation::GreaterEq, c.pair_rhs());
  if (c.kind == DomainKind::WholeSpace) {
    r.require("(v): n(1/p1+1/p2-1) >= 0", c.pair_rhs(), Relation::GreaterEq, Rational(0));
  } else {
    r.note("bounded-domain variant (remark): assumption 1/p1+1/p2 >= 1 dropped; extension argument cited");
  }
  return r;
}

// Negative exponents II: nonnegative factors, negative target, no ordering
// between p_i and p; the pair condition (v) is strict.
RuleEval eval_mult_neg2(const MultCtx& c) {
  RuleEval r(RuleId::MultNegII);
  r.require("1 < p1", Rational(1), Relation::Less, c.p1);
  r.require("1 < p2", Rational(1), Relation::Less, c.p2);
  r.require("1 < p", Rational(1), Relation::Less, c.p);
  require_smoothness_order(r, c);
  r.require("(ii): min{s1,s2} >= 0", Rational::min(c.s1, c.s2), Relation::GreaterEq, Rational(0));
  r.require("(ii): s < 0", c.s, Relation::Less, Rational(0));
  require_gap(r, c, 1, Relation::GreaterEq);
  require_gap(r, c, 2, Relation::GreaterEq);
  require_sum(r, c, Relation::Greater);
  require_sum_tail(r, c);
  r.require("(v): s1+s2 > n(1/p1+1/p2-1) (strict)", c.pair_lhs(), Relation::Greater, c.pair_rhs());
  if (c.kind == DomainKind::BoundedLipschitz) {
    r.note("bounded-domain variant (remark): extension argument cited");
  }
  return r;
}

// Unified statement with per-index clauses and conditional tails.
RuleEval eval_mult_unified(const MultCtx& c) {
  RuleEval r(RuleId::MultUnified);
  r.gate(c.kind == DomainKind::WholeSpace, "rule stated on R^n only");
  r.require("1 < p1", Rational(1), Relation::Less, c.p1);
  r.require("1 < p2", Rational(1), Relation::Less, c.p2);
  r.require("1 < p", Rational(1), Relation::Less, c.p);
  require_smoothness_order(r, c);
  r.require("s1+s2 >= 0", c.pair_lhs(), Relation::GreaterEq, Rational(0));
  for (int i : {1, 2}) {
    require_gap(r, c, i, Relation::GreaterEq);
    const Rational& si = (i == 1) ? c.s1 : c.s2;
    const Rational& pi = (i == 1) ? c.p1 : c.p2;
    if (si == c.s && !c.s.is_integer()) {
      r.require("per-index clause (s" + std::to_string(i) + " = s not in Z): p" + std::to_string(i) + " <= p",
                pi, Relation::LessEq, c.p);
    }
  }
  require_sum(r, c, Relation::Greater);
  require_sum_tail(r, c);
  if (c.s < Rational(0)) {
    if (Rational::min(c.s1, c.s2) >= Rational(0)) {
      r.require("(v): s1+s2 > n(1/p1+1/p2-1) (strict; min{s1,s2} >= 0)", c.pair_lhs(), Relation::Greater,
                c.pair_rhs());
    } else {
      r.require("(v): s1+s2 >= n(1/p1+1/p2-1) (equality allowed; min{s1,s2} < 0)", c.pair_lhs(),
                Relation::GreaterEq, c.pair_rhs());
    }
    r.note("strictness of (v) required iff min{s1,s2} >= 0; the source parenthetical is ambiguous");
  }
  if (c.pair_lhs() == Rational(0) && !Rational::min(c.s1, c.s2).is_integer()) {
    r.require("zero-sum clause (s1+s2 = 0, min{s1,s2} not in Z): 1/p1+1/p2 >= 1",
              c.p1.inverse() + c.p2.inverse(), Relation::GreaterEq, Rational(1));
  }
  return r;
}

// Hoelder-type rule for Bessel spaces: shared smoothness, conjugate-style
// integrability split.
RuleEval eval_mult_holder_h(const MultCtx& c) {
  RuleEval r(RuleId::MultHolderH);
  r.gate(c.kind == DomainKind::WholeSpace, "rule stated on R^n only");
  r.require("1 < p1", Rational(1), Relation::Less, c.p1);
  r.require("1 < p2", Rational(1), Relation::Less, c.p2);
  r.require("1 < p", Rational(1), Relation::Less, c.p);
  r.require("s1 = s", c.s1, Relation::Equal, c.s);
  r.require("s2 = s", c.s2, Relation::Equal, c.s);
  r.require("s >= 0", c.s, Relation::GreaterEq, Rational(0));
  r.require("1/p1 + 1/p2 = 1/p", c.p1.inverse() + c.p2.inverse(), Relation::Equal, c.p.inverse());
  return r;
}

// Bessel-space rule with s >= 0 (also valid verbatim for the diagonal
// Besov scale).
RuleEval eval_mult_h(const MultCtx& c, bool besov_variant) {
  RuleEval r(RuleId::MultH);
  r.gate(c.kind == DomainKind::WholeSpace, "rule stated on R^n only");
  r.require("1 < p1", Rational(1), Relation::Less, c.p1);
  r.require("p1 <= p", c.p1, Relation::LessEq, c.p);
  r.require("1 < p2", Rational(1), Relation::Less, c.p2);
  r.require("p2 <= p", c.p2, Relation::LessEq, c.p);
  require_smoothness_order(r, c);
  r.require("(ii): s >= 0", c.s, Relation::GreaterEq, Rational(0));
  require_gap(r, c, 1, Relation::GreaterEq);
  require_gap(r, c, 2, Relation::GreaterEq);
  require_sum(r, c, Relation::Greater);
  if (besov_variant) r.note("B^s_{p,p} statement (remark variant of the Bessel-space rule)");
  return r;
}

// Quoted Besov multiplication rule, restricted to the diagonal q_i = p_i,
// q = p. Requires non-natural target smoothness.
RuleEval eval_besov_zolesio(const MultCtx& c) {
  RuleEval r(RuleId::BesovZolesio);
  r.gate(c.kind == DomainKind::WholeSpace, "rule stated on R^n only");
  r.require("1 < p1", Rational(1), Relation::Less, c.p1);
  r.require("1 < p2", Rational(1), Relation::Less, c.p2);
  r.require("1 < p", Rational(1), Relation::Less, c.p);
  r.require("q1 <= q (diagonal): p1 <= p", c.p1, Relation::LessEq, c.p);
  r.require("q2 <= q (diagonal): p2 <= p", c.p2, Relation::LessEq, c.p);
  r.require("0 <= s", Rational(0), Relation::LessEq, c.s);
  r.require("s <= s1", c.s, Relation::LessEq, c.s1);
  r.require("s <= s2", c.s, Relation::LessEq, c.s2);
  if (c.s.is_integer()) {
    r.require("s not in N: s <= 0", c.s, Relation::LessEq, Rational(0));
  } else {
    r.require_fractional("s not in N: fractional part positive", c.s);
  }
  require_gap(r, c, 1, Relation::GreaterEq);
  require_gap(r, c, 2, Relation::GreaterEq);
  require_sum(r, c, Relation::Greater);
  r.note("diagonal case q1 = p1, q2 = p2, q = p");
  return r;
}

RuleEval eval_necessity(const MultCtx& c, bool mirrored) {
  RuleEval r(RuleId::DisproveNecessity);
  const Rational& sf = mirrored ? c.s2 : c.s1;
  const Rational& pf = mirrored ? c.p2 : c.p1;
  const Rational& so = mirrored ? c.s1 : c.s2;
  const std::string f = mirrored ? "s2" : "s1";
  const std::string fp = mirrored ? "p2" : "p1";
  const std::string o = mirrored ? "s1" : "s2";
  r.require(f + " = s", sf, Relation::Equal, c.s);
  r.require_fractional("s not in Z: fractional part positive", c.s);
  r.require("s > 0", c.s, Relation::Greater, Rational(0));
  r.require(o + " >= 0", so, Relation::GreaterEq, Rational(0));
  r.require("p1 > 1", c.p1, Relation::Greater, Rational(1));
  r.require("p2 > 1", c.p2, Relation::Greater, Rational(1));
  r.require("p > 1", c.p, Relation::Greater, Rational(1));
  r.require(fp + " > p", pf, Relation::Greater, c.p);
  r.note("necessity of " + fp + " <= p for the Hoelder-type inequality in W spaces");
  r.note("witnessed by the g_N sequence of dyadically modulated copies: the ratio "
         "||g_N f|| / (||g_N|| ||f||) grows like N^{1/p - 1/" + fp + "}");
  if (mirrored) r.note("mirrored condition on the right factor");
  return r;
}

void validate_mult_query(const MultQuery& q) {
  validate_space(q.left);
  validate_space(q.right);
  validate_space(q.target);
  if (q.left.family != q.right.family || q.left.family != q.target.family) {
    throw QueryError("multiplication query mixes families: " + space_str(q.left) + " x " +
                     space_str(q.right) + " -> " + space_str(q.target));
  }
  if (!(q.left.domain == q.right.domain) || !(q.left.domain == q.target.domain)) {
    throw QueryError("multiplication query mixes domains");
  }
}

// Thresholds of Embedding Theorem II for the source space, as notes.
void add_embedding_facts(Certificate& cert, const SpaceSpec& source) {
  if (source.s < Rational(0)) return;
  const Rational sp = source.s * source.p;
  const Rational n(source.domain.n);
  if (sp > n) {
    cert.notes.push_back("Emb-II: s*p > n, source embeds in L^inf and C^0 and is a Banach algebra");
  } else if (sp == n) {
    cert.notes.push_back("Emb-II: s*p = n, source embeds in L^q for all p <= q < inf");
  } else {
    const Rational pstar = n * source.p / (n - sp);
    cert.notes.push_back("Emb-II: s*p < n, source embeds in L^q for p <= q <= np/(n-sp) = " + pstar.str());
  }
}

RuleEval eval_emb1(const EmbedQuery& q) {
  const Rational n(q.source.domain.n);
  RuleEval r(RuleId::EmbI);
  r.gate(q.source.family == q.target.family, "embedding rules require matching families");
  r.gate(q.source.family != Family::Bpp, "no embedding rule for the Bpp family in scope");
  if (q.source.family == Family::H) {
    r.gate(q.source.domain.kind == DomainKind::WholeSpace, "Bessel-family case stated on R^n only");
    r.require("1 < p (Bessel case)", Rational(1), Relation::Less, q.source.p);
  } else {
    r.require("1 <= p", Rational(1), Relation::LessEq, q.source.p);
  }
  r.require("p <= q", q.source.p, Relation::LessEq, q.target.p);
  r.require("0 <= t", Rational(0), Relation::LessEq, q.target.s);
  r.require("t <= s", q.target.s, Relation::LessEq, q.source.s);
  r.require("s - n/p >= t - n/q", q.source.s - n / q.source.p, Relation::GreaterEq,
            q.target.s - n / q.target.p);
  return r;
}

RuleEval eval_emb3(const EmbedQuery& q) {
  const Rational n(q.source.domain.n);
  RuleEval r(RuleId::EmbIII);
  r.gate(q.source.family == q.target.family && q.source.family == Family::W,
         "rule stated for W spaces only");
  r.gate(q.source.domain.kind == DomainKind::BoundedLipschitz,
         "rule requires a bounded Lipschitz domain");
  r.require("1 <= p", Rational(1), Relation::LessEq, q.source.p);
  r.require("1 <= q", Rational(1), Relation::LessEq, q.target.p);
  r.require("0 <= t", Rational(0), Relation::LessEq, q.target.s);
  r.require("t <= s", q.target.s, Relation::LessEq, q.source.s);
  r.require("s - n/p >= t - n/q", q.source.s - n / q.source.p, Relation::GreaterEq,
            q.target.s - n / q.target.p);
  r.note("integrability ordering between p and q not required on bounded domains");
  return r;
}

} // namespace

Verdict check_embedding(const EmbedQuery& query) {
  validate_space(query.source);
  validate_space(query.target);
  if (!(query.source.domain == query.target.domain)) {
    throw QueryError("embedding query mixes domains");
  }

  Verdict verdict;
  if (query.source == query.target) {
    Certificate cert;
    cert.rule = RuleId::Identity;
    cert.notes.push_back("source equals target");
    add_embedding_facts(cert, query.source);
    verdict.status = VerdictStatus::Proved;
    verdict.certificate = std::move(cert);
    return verdict;
  }

  for (auto* rule : {&eval_emb1, &eval_emb3}) {
    RuleEval eval = rule(query);
    if (eval.passed()) {
      Certificate cert = std::move(eval).take_certificate();
      add_embedding_facts(cert, query.source);
      verdict.status = VerdictStatus::Proved;
      verdict.certificate = std::move(cert);
      return verdict;
    }
    verdict.tried.push_back({rule == &eval_emb1 ? RuleId::EmbI : RuleId::EmbIII, eval.failure()});
  }

  verdict.status = VerdictStatus::Undetermined;
  return verdict;
}

std::optional<Certificate> necessity_disproof(const MultQuery& query) {
  validate_mult_query(query);
  if (query.target.family != Family::W) return std::nullopt;
  if (query.target.domain.kind != DomainKind::WholeSpace) return std::nullopt;
  const MultCtx ctx = make_ctx(query);
  for (bool mirrored : {false, true}) {
    RuleEval eval = eval_necessity(ctx, mirrored);
    if (eval.passed()) return std::move(eval).take_certificate();
  }
  return std::nullopt;
}

Verdict check_multiplication(const MultQuery& query) {
  validate_mult_query(query);
  const MultCtx ctx = make_ctx(query);

  using RuleFn = std::function<RuleEval(const MultCtx&)>;
  std::vector<std::pair<RuleId, RuleFn>> rules;
  switch (query.target.family) {
    case Family::W:
      rules = {{RuleId::MultInt, eval_mult_int},
               {RuleId::MultRn, eval_mult_rn},
               {RuleId::MultBdd, eval_mult_bdd},
               {RuleId::MultNegI, eval_mult_neg1},
               {RuleId::MultNegII, eval_mult_neg2},
               {RuleId::MultUnified, eval_mult_unified}};
      break;
    case Family::H:
      rules = {{RuleId::MultHolderH, eval_mult_holder_h},
               {RuleId::MultH, [](const MultCtx& c) { return eval_mult_h(c, false); }}};
      break;
    case Family::Bpp:
      rules = {{RuleId::MultH, [](const MultCtx& c) { return eval_mult_h(c, true); }},
               {RuleId::BesovZolesio, eval_besov_zolesio}};
      break;
  }

  Verdict verdict;
  for (auto& [id, fn] : rules) {
    RuleEval eval = fn(ctx);
    if (eval.passed()) {
      verdict.status = VerdictStatus::Proved;
      verdict.certificate = std::move(eval).take_certificate();
      return verdict;
    }
    verdict.tried.push_back({id, eval.failure()});
  }

  if (auto cert = necessity_disproof(query)) {
    verdict.status = VerdictStatus::Disproved;
    verdict.certificate = std::move(cert);
    return verdict;
  }

  verdict.status = VerdictStatus::Undetermined;
  return verdict;
}

bool replay_certificate(const Certificate& certificate) {
  for (const auto& cond : certificate.conditions) {
    if (holds(cond.lhs, cond.rel, cond.rhs) != cond.satisfied) return false;
  }
  return true;
}

} // namespace sobmult
