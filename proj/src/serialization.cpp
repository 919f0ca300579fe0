#include "sobmult/serialization.hpp"

#include "sobmult/errors.hpp"

#include <sstream>

namespace sobmult {

namespace {

nlohmann::json domain_to_json(const DomainSpec& domain) {
  return nlohmann::json{{"kind", domain.kind == DomainKind::WholeSpace ? "rn" : "bounded"},
                        {"n", domain.n}};
}

DomainSpec domain_from_json(const nlohmann::json& j) {
  DomainSpec domain;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rn") {
    domain.kind = DomainKind::WholeSpace;
  } else if (kind == "bounded") {
    domain.kind = DomainKind::BoundedLipschitz;
  } else {
    throw ParseError("unknown domain kind: '" + kind + "'");
  }
  domain.n = j.at("n").get<int>();
  return domain;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const auto& c : cert.conditions) {
    conditions.push_back(nlohmann::json{{"label", c.label},
                                        {"lhs", c.lhs.fraction_str()},
                                        {"rel", std::string(relation_str(c.rel))},
                                        {"rhs", c.rhs.fraction_str()},
                                        {"holds", c.satisfied}});
  }
  return nlohmann::json{{"rule", std::string(rule_id_name(cert.rule))},
                        {"conditions", std::move(conditions)},
                        {"notes", cert.notes}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate cert;
  cert.rule = rule_id_from_name(j.at("rule").get<std::string>());
  for (const auto& c : j.at("conditions")) {
    AtomicCondition cond;
    cond.label = c.at("label").get<std::string>();
    cond.lhs = Rational::parse(c.at("lhs").get<std::string>());
    cond.rel = relation_from_str(c.at("rel").get<std::string>());
    cond.rhs = Rational::parse(c.at("rhs").get<std::string>());
    cond.satisfied = c.at("holds").get<bool>();
    cert.conditions.push_back(std::move(cond));
  }
  if (j.contains("notes")) {
    for (const auto& note : j.at("notes")) cert.notes.push_back(note.get<std::string>());
  }
  return cert;
}

nlohmann::json verdict_body(const Verdict& verdict) {
  nlohmann::json out;
  out["status"] = std::string(status_name(verdict.status));
  if (verdict.certificate) {
    const nlohmann::json cert = certificate_to_json(*verdict.certificate);
    out["rule"] = cert.at("rule");
    out["conditions"] = cert.at("conditions");
    out["notes"] = cert.at("notes");
  } else {
    out["rule"] = nullptr;
    out["conditions"] = nlohmann::json::array();
    out["notes"] = nlohmann::json::array();
  }
  nlohmann::json tried = nlohmann::json::array();
  for (const auto& attempt : verdict.tried) {
    tried.push_back(nlohmann::json{{"rule", std::string(rule_id_name(attempt.rule))},
                                   {"first_failed", attempt.first_failed}});
  }
  out["tried"] = std::move(tried);
  return out;
}

Verdict verdict_from_body(const nlohmann::json& j) {
  Verdict verdict;
  verdict.status = status_from_name(j.at("status").get<std::string>());
  if (j.contains("rule") && !j.at("rule").is_null()) {
    Certificate cert = certificate_from_json(j);
    verdict.certificate = std::move(cert);
  }
  if (j.contains("tried")) {
    for (const auto& attempt : j.at("tried")) {
      verdict.tried.push_back({rule_id_from_name(attempt.at("rule").get<std::string>()),
                               attempt.at("first_failed").get<std::string>()});
    }
  }
  return verdict;
}

} // namespace

nlohmann::json verdict_to_json(const MultQuery& query, const Verdict& verdict) {
  nlohmann::json out = verdict_body(verdict);
  out["query"] = nlohmann::json{{"kind", "multiplication"},
                                {"family", std::string(family_name(query.target.family))},
                                {"domain", domain_to_json(query.target.domain)},
                                {"s1", query.left.s.fraction_str()},
                                {"p1", query.left.p.fraction_str()},
                                {"s2", query.right.s.fraction_str()},
                                {"p2", query.right.p.fraction_str()},
                                {"s", query.target.s.fraction_str()},
                                {"p", query.target.p.fraction_str()}};
  return out;
}

nlohmann::json verdict_to_json(const EmbedQuery& query, const Verdict& verdict) {
  nlohmann::json out = verdict_body(verdict);
  out["query"] = nlohmann::json{{"kind", "embedding"},
                                {"family", std::string(family_name(query.source.family))},
                                {"domain", domain_to_json(query.source.domain)},
                                {"s", query.source.s.fraction_str()},
                                {"p", query.source.p.fraction_str()},
                                {"t", query.target.s.fraction_str()},
                                {"q", query.target.p.fraction_str()}};
  return out;
}

ParsedVerdict verdict_from_json(const nlohmann::json& j) {
  const nlohmann::json& q = j.at("query");
  const std::string kind = q.at("kind").get<std::string>();
  const Family family = family_from_name(q.at("family").get<std::string>());
  const DomainSpec domain = domain_from_json(q.at("domain"));

  ParsedVerdict parsed{MultQuery{}, verdict_from_body(j)};
  if (kind == "multiplication") {
    MultQuery query;
    query.left = {family, Rational::parse(q.at("s1").get<std::string>()),
                  Rational::parse(q.at("p1").get<std::string>()), domain};
    query.right = {family, Rational::parse(q.at("s2").get<std::string>()),
                   Rational::parse(q.at("p2").get<std::string>()), domain};
    query.target = {family, Rational::parse(q.at("s").get<std::string>()),
                    Rational::parse(q.at("p").get<std::string>()), domain};
    parsed.query = query;
  } else if (kind == "embedding") {
    EmbedQuery query;
    query.source = {family, Rational::parse(q.at("s").get<std::string>()),
                    Rational::parse(q.at("p").get<std::string>()), domain};
    query.target = {family, Rational::parse(q.at("t").get<std::string>()),
                    Rational::parse(q.at("q").get<std::string>()), domain};
    parsed.query = query;
  } else {
    throw ParseError("unknown query kind: '" + kind + "'");
  }
  return parsed;
}

std::string query_str(const MultQuery& query) {
  return space_str(query.left) + " x " + space_str(query.right) + " -> " + space_str(query.target);
}

std::string query_str(const EmbedQuery& query) {
  return space_str(query.source) + " -> " + space_str(query.target);
}

std::string format_verdict(const std::string& query_line, const Verdict& verdict) {
  std::ostringstream out;
  out << "query:   " << query_line << "\n";
  out << "verdict: " << status_name(verdict.status);
  if (verdict.certificate) {
    out << " (" << rule_id_name(verdict.certificate->rule) << ")";
  }
  out << "\n";
  if (verdict.certificate) {
    for (const auto& cond : verdict.certificate->conditions) {
      out << "  " << cond.describe() << "\n";
    }
    for (const auto& note : verdict.certificate->notes) {
      out << "  note: " << note << "\n";
    }
  }
  if (!verdict.tried.empty()) {
    out << "tried:\n";
    for (const auto& attempt : verdict.tried) {
      out << "  " << rule_id_name(attempt.rule) << ": failed at " << attempt.first_failed << "\n";
    }
  }
  return out.str();
}

} // namespace sobmult
