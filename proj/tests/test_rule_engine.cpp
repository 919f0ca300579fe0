#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sobmult/errors.hpp"
#include "sobmult/rule_engine.hpp"
#include "sobmult/serialization.hpp"

#include "support.hpp"

using namespace sobmult;

namespace {

const DomainSpec r1{DomainKind::WholeSpace, 1};
const DomainSpec r2{DomainKind::WholeSpace, 2};
const DomainSpec r3{DomainKind::WholeSpace, 3};
const DomainSpec omega1{DomainKind::BoundedLipschitz, 1};
const DomainSpec omega2{DomainKind::BoundedLipschitz, 2};

MultQuery w_query(const char* s1, const char* p1, const char* s2, const char* p2, const char* s,
                  const char* p, const DomainSpec& dom, Family fam = Family::W) {
  return MultQuery{{fam, Rational::parse(s1), Rational::parse(p1), dom},
                   {fam, Rational::parse(s2), Rational::parse(p2), dom},
                   {fam, Rational::parse(s), Rational::parse(p), dom}};
}

} // namespace

TEST_CASE("worked multiplication instances") {
  SUBCASE("integer algebra case on R^3") {
    const Verdict v = check_multiplication(w_query("2", "2", "2", "2", "2", "2", r3));
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::MultInt);
  }
  SUBCASE("negative smoothness case on R^3") {
    const Verdict v = check_multiplication(w_query("-1/2", "2", "2", "2", "-1/2", "2", r3));
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::MultNegI);
  }
  SUBCASE("sufficient conditions all fail without a necessity hit") {
    const Verdict v = check_multiplication(w_query("1/4", "2", "1/4", "2", "1/4", "2", r1));
    CHECK(v.status == VerdictStatus::Undetermined);
    CHECK_FALSE(v.certificate.has_value());
    CHECK_FALSE(v.tried.empty());
  }
  SUBCASE("necessity disproof on R^1") {
    const Verdict v = check_multiplication(w_query("1/2", "4", "1", "2", "1/2", "2", r1));
    REQUIRE(v.status == VerdictStatus::Disproved);
    CHECK(v.certificate->rule == RuleId::DisproveNecessity);
  }
  SUBCASE("the same query is rescued on a bounded domain") {
    const Verdict v = check_multiplication(w_query("1/2", "4", "1", "2", "1/2", "2", omega1));
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::MultBdd);
    bool replaced = false;
    for (const auto& note : v.certificate->notes) {
      if (note.find("replacement clause") != std::string::npos) replaced = true;
    }
    CHECK(replaced);
  }
}

TEST_CASE("interchanged strictness variant of the integer rule") {
  // L^4 x L^4 -> L^2 needs strict (iii) with non-strict (iv)
  const Verdict v = check_multiplication(w_query("0", "4", "0", "4", "0", "2", r1));
  REQUIRE(v.status == VerdictStatus::Proved);
  CHECK(v.certificate->rule == RuleId::MultInt);
  bool interchanged = false;
  for (const auto& note : v.certificate->notes) {
    if (note.find("interchanged") != std::string::npos) interchanged = true;
  }
  CHECK(interchanged);
}

TEST_CASE("negative rule variants") {
  SUBCASE("pair-sum tail drops on bounded domains") {
    const MultQuery q = w_query("-1/4", "3", "1/2", "3", "-1/4", "3", omega1);
    const Verdict bounded = check_multiplication(q);
    REQUIRE(bounded.status == VerdictStatus::Proved);
    CHECK(bounded.certificate->rule == RuleId::MultNegI);

    // On R^n the tail 1/p1 + 1/p2 >= 1 fails, but the unified rule with its
    // equality-allowed clause still applies.
    const Verdict whole = check_multiplication(w_query("-1/4", "3", "1/2", "3", "-1/4", "3", r1));
    REQUIRE(whole.status == VerdictStatus::Proved);
    CHECK(whole.certificate->rule == RuleId::MultUnified);
  }
  SUBCASE("nonnegative factors with negative target") {
    const Verdict v = check_multiplication(w_query("1/2", "2", "1/2", "2", "-1/4", "2", r1));
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::MultNegII);
  }
  SUBCASE("zero-sum clause of the unified rule") {
    const Verdict v = check_multiplication(w_query("3/4", "3", "-3/4", "3/2", "-3/4", "3/2", r1));
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::MultUnified);
    bool zero_sum = false;
    for (const auto& cond : v.certificate->conditions) {
      if (cond.label.find("zero-sum") != std::string::npos) zero_sum = true;
    }
    CHECK(zero_sum);
  }
}

TEST_CASE("Bessel family rules") {
  SUBCASE("Hoelder split") {
    const Verdict v = check_multiplication(w_query("1", "4", "1", "4", "1", "2", r1, Family::H));
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::MultHolderH);
  }
  SUBCASE("algebra case falls through to the general rule") {
    const Verdict v = check_multiplication(w_query("2", "2", "2", "2", "2", "2", r1, Family::H));
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::MultH);
  }
  SUBCASE("no rule on bounded domains") {
    const Verdict v = check_multiplication(w_query("2", "2", "2", "2", "2", "2", omega1, Family::H));
    CHECK(v.status == VerdictStatus::Undetermined);
    CHECK_FALSE(v.tried.empty());
  }
}

TEST_CASE("diagonal Besov rules") {
  const Verdict v = check_multiplication(w_query("3/4", "2", "3/4", "2", "1/2", "2", r1, Family::Bpp));
  REQUIRE(v.status == VerdictStatus::Proved);
  CHECK(v.certificate->rule == RuleId::MultH);
  bool besov_note = false;
  for (const auto& note : v.certificate->notes) {
    if (note.find("B^s_{p,p}") != std::string::npos) besov_note = true;
  }
  CHECK(besov_note);

  // the quoted diagonal rule is attempted after the remark variant
  const Verdict und = check_multiplication(w_query("1/4", "2", "1/4", "2", "1/4", "2", r1, Family::Bpp));
  CHECK(und.status == VerdictStatus::Undetermined);
  REQUIRE(und.tried.size() == 2);
  CHECK(und.tried[0].rule == RuleId::MultH);
  CHECK(und.tried[1].rule == RuleId::BesovZolesio);
}

TEST_CASE("necessity test fires exactly on its hypothesis set") {
  CHECK(necessity_disproof(w_query("1/2", "4", "1", "2", "1/2", "2", r1)).has_value());
  // p1 <= p: no contradiction
  CHECK_FALSE(necessity_disproof(w_query("1/2", "2", "1", "2", "1/2", "2", r1)).has_value());
  // integer smoothness: proposition does not apply
  CHECK_FALSE(necessity_disproof(w_query("1", "4", "1", "2", "1", "2", r1)).has_value());
  // bounded domain: out of scope
  CHECK_FALSE(necessity_disproof(w_query("1/2", "4", "1", "2", "1/2", "2", omega1)).has_value());
  // H family: out of scope
  CHECK_FALSE(
      necessity_disproof(w_query("1/2", "4", "1", "2", "1/2", "2", r1, Family::H)).has_value());

  const auto mirrored = necessity_disproof(w_query("1", "2", "1/2", "4", "1/2", "2", r1));
  REQUIRE(mirrored.has_value());
  bool mirror_note = false;
  for (const auto& note : mirrored->notes) {
    if (note.find("mirrored") != std::string::npos) mirror_note = true;
  }
  CHECK(mirror_note);
}

TEST_CASE("embedding instances") {
  SUBCASE("standard embedding on R^2") {
    const EmbedQuery q{{Family::W, Rational(1), Rational(2), r2},
                       {Family::W, Rational(0), Rational(4), r2}};
    const Verdict v = check_embedding(q);
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::EmbI);
  }
  SUBCASE("reversed integrability ordering needs a bounded domain") {
    const EmbedQuery bounded{{Family::W, Rational(1), Rational(3), omega2},
                             {Family::W, Rational(1), Rational(2), omega2}};
    const Verdict v = check_embedding(bounded);
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::EmbIII);

    const EmbedQuery whole{{Family::W, Rational(1), Rational(3), r2},
                           {Family::W, Rational(1), Rational(2), r2}};
    const Verdict und = check_embedding(whole);
    CHECK(und.status == VerdictStatus::Undetermined);
    CHECK_FALSE(und.tried.empty());
  }
  SUBCASE("identity embedding") {
    const SpaceSpec spec{Family::W, Rational(5, 3), Rational(7, 2), r3};
    const Verdict v = check_embedding({spec, spec});
    REQUIRE(v.status == VerdictStatus::Proved);
    CHECK(v.certificate->rule == RuleId::Identity);
    CHECK(v.certificate->conditions.empty());
    CHECK(replay_certificate(*v.certificate));
  }
  SUBCASE("Bessel embeddings hold on R^n only") {
    const EmbedQuery whole{{Family::H, Rational(1), Rational(2), r1},
                           {Family::H, Rational(0), Rational(2), r1}};
    CHECK(check_embedding(whole).status == VerdictStatus::Proved);

    const EmbedQuery bounded{{Family::H, Rational(1), Rational(2), omega1},
                             {Family::H, Rational(0), Rational(2), omega1}};
    CHECK(check_embedding(bounded).status == VerdictStatus::Undetermined);
  }
  SUBCASE("algebra and Lebesgue range notes") {
    const EmbedQuery q{{Family::W, Rational(2), Rational(2), r1},
                       {Family::W, Rational(0), Rational(2), r1}};
    const Verdict v = check_embedding(q);
    REQUIRE(v.status == VerdictStatus::Proved);
    bool algebra = false;
    for (const auto& note : v.certificate->notes) {
      if (note.find("Banach algebra") != std::string::npos) algebra = true;
    }
    CHECK(algebra);
  }
  SUBCASE("mismatched domains are rejected") {
    CHECK_THROWS_AS(check_embedding({{Family::W, Rational(1), Rational(2), r1},
                                     {Family::W, Rational(0), Rational(2), r2}}),
                    QueryError);
  }
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(check_multiplication(MultQuery{{Family::W, Rational(1), Rational(2), r1},
                                                 {Family::H, Rational(1), Rational(2), r1},
                                                 {Family::W, Rational(1), Rational(2), r1}}),
                  QueryError);
  CHECK_THROWS_AS(check_multiplication(MultQuery{{Family::W, Rational(1), Rational(2), r1},
                                                 {Family::W, Rational(1), Rational(2), r2},
                                                 {Family::W, Rational(1), Rational(2), r1}}),
                  QueryError);
  CHECK_THROWS_AS(check_multiplication(w_query("-1/2", "1", "2", "2", "-1/2", "2", r3)),
                  ValidationError);
}

TEST_CASE("certificate replay") {
  const Verdict v = check_multiplication(w_query("2", "2", "2", "2", "2", "2", r3));
  REQUIRE(v.certificate.has_value());
  CHECK(replay_certificate(*v.certificate));

  Certificate tampered = *v.certificate;
  tampered.conditions.back().rhs = tampered.conditions.back().rhs + Rational(7);
  CHECK_FALSE(replay_certificate(tampered));

  Certificate empty;
  empty.rule = RuleId::Identity;
  CHECK(replay_certificate(empty));
}

TEST_CASE("swap symmetry of verdict status") {
  testsupport::QueryGen gen(20240020);
  for (int i = 0; i < 3000; ++i) {
    const MultQuery q = gen.mult_query();
    CHECK(check_multiplication(q).status == check_multiplication(q.swapped()).status);
  }
}

TEST_CASE("proved and disproved are mutually exclusive") {
  testsupport::QueryGen gen(20240021);
  for (int i = 0; i < 3000; ++i) {
    const MultQuery q = gen.mult_query();
    const Verdict v = check_multiplication(q);
    if (v.status == VerdictStatus::Proved) {
      CHECK_FALSE(necessity_disproof(q).has_value());
      CHECK(replay_certificate(*v.certificate));
    }
  }
}

TEST_CASE("determinism: identical queries give identical certificates") {
  testsupport::QueryGen gen(20240022);
  for (int i = 0; i < 300; ++i) {
    const MultQuery q = gen.mult_query();
    const std::string first = verdict_to_json(q, check_multiplication(q)).dump();
    const std::string second = verdict_to_json(q, check_multiplication(q)).dump();
    CHECK(first == second);
  }
}

TEST_CASE("no-op spec rewrite never changes a proved verdict") {
  testsupport::QueryGen gen(20240023);
  int proved = 0;
  for (int i = 0; i < 3000 && proved < 300; ++i) {
    const MultQuery q = gen.mult_query();
    const Verdict v = check_multiplication(q);
    if (v.status != VerdictStatus::Proved) continue;
    ++proved;
    // rebuild every exponent through its textual form (an identity rewrite)
    auto rebuild = [](const SpaceSpec& spec) {
      return SpaceSpec{spec.family, Rational::parse(spec.s.fraction_str()),
                       Rational::parse(spec.p.fraction_str()), spec.domain};
    };
    const MultQuery rewritten{rebuild(q.left), rebuild(q.right), rebuild(q.target)};
    const Verdict again = check_multiplication(rewritten);
    REQUIRE(again.status == VerdictStatus::Proved);
    CHECK(verdict_to_json(q, v).dump() == verdict_to_json(rewritten, again).dump());
  }
  CHECK(proved > 0);
}
