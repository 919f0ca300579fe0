#include "sobmult/errors.hpp"
#include "sobmult/experiments.hpp"
#include "sobmult/interpolation.hpp"
#include "sobmult/rule_engine.hpp"
#include "sobmult/serialization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace sobmult;

constexpr int kExitProved = 0;
constexpr int kExitError = 1;
constexpr int kExitDisproved = 2;
constexpr int kExitUndetermined = 3;

int status_exit_code(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Proved: return kExitProved;
    case VerdictStatus::Disproved: return kExitDisproved;
    case VerdictStatus::Undetermined: return kExitUndetermined;
  }
  return kExitError;
}

struct QueryFlags {
  std::string domain = "rn";
  std::string family = "W";
  int n = 1;

  DomainSpec domain_spec() const {
    if (domain == "rn") return {DomainKind::WholeSpace, n};
    if (domain == "bounded") return {DomainKind::BoundedLipschitz, n};
    throw ParseError("--domain must be 'rn' or 'bounded', got '" + domain + "'");
  }
};

void add_common_flags(CLI::App* cmd, QueryFlags& flags) {
  cmd->add_option("--n", flags.n, "spatial dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--domain", flags.domain, "domain kind: rn | bounded");
  cmd->add_option("--family", flags.family, "space family: W | H | Bpp");
}

struct MultFlags {
  QueryFlags common;
  std::string s1, p1, s2, p2, s, p;

  MultQuery query() const {
    const Family family = family_from_name(common.family);
    const DomainSpec domain = common.domain_spec();
    return MultQuery{{family, Rational::parse(s1), Rational::parse(p1), domain},
                     {family, Rational::parse(s2), Rational::parse(p2), domain},
                     {family, Rational::parse(s), Rational::parse(p), domain}};
  }
};

void add_mult_flags(CLI::App* cmd, MultFlags& flags) {
  add_common_flags(cmd, flags.common);
  cmd->add_option("--s1", flags.s1, "left factor smoothness")->required();
  cmd->add_option("--p1", flags.p1, "left factor integrability")->required();
  cmd->add_option("--s2", flags.s2, "right factor smoothness")->required();
  cmd->add_option("--p2", flags.p2, "right factor integrability")->required();
  cmd->add_option("--s", flags.s, "target smoothness")->required();
  cmd->add_option("--p", flags.p, "target integrability")->required();
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stoll(field));
    } catch (const std::exception&) {
      throw ParseError("malformed integer list entry: '" + field + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision engine for Sobolev multiplication and embedding queries, "
               "with a discrete spectral verification harness"};
  app.require_subcommand(1);

  std::string output_mode = "text";

  // --- check-mult ---
  auto* check_mult = app.add_subcommand("check-mult", "decide a pointwise multiplication query");
  MultFlags mult_flags;
  add_mult_flags(check_mult, mult_flags);
  check_mult->add_option("--output", output_mode, "output mode: text | json");

  // --- check-embed ---
  auto* check_embed = app.add_subcommand("check-embed", "decide an embedding query");
  QueryFlags embed_common;
  std::string embed_s, embed_p, embed_t, embed_q;
  add_common_flags(check_embed, embed_common);
  check_embed->add_option("--s", embed_s, "source smoothness")->required();
  check_embed->add_option("--p", embed_p, "source integrability")->required();
  check_embed->add_option("--t", embed_t, "target smoothness")->required();
  check_embed->add_option("--q", embed_q, "target integrability")->required();
  check_embed->add_option("--output", output_mode, "output mode: text | json");

  // --- interp ---
  auto* interp = app.add_subcommand("interp", "interpolate two space specifications");
  QueryFlags interp_common;
  std::string interp_s0, interp_p0, interp_s1, interp_p1, interp_theta;
  add_common_flags(interp, interp_common);
  interp->add_option("--s0", interp_s0, "first endpoint smoothness")->required();
  interp->add_option("--p0", interp_p0, "first endpoint integrability")->required();
  interp->add_option("--s1", interp_s1, "second endpoint smoothness")->required();
  interp->add_option("--p1", interp_p1, "second endpoint integrability")->required();
  interp->add_option("--theta", interp_theta, "interpolation parameter in (0,1)")->required();
  interp->add_option("--output", output_mode, "output mode: text | json");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "numerically exercise a proved query");
  QueryFlags verify_common;
  std::string vf_s1, vf_p1, vf_s2, vf_p2, vf_s, vf_p, vf_t, vf_q;
  add_common_flags(verify, verify_common);
  verify->add_option("--s1", vf_s1, "left factor smoothness (multiplication)");
  verify->add_option("--p1", vf_p1, "left factor integrability (multiplication)");
  verify->add_option("--s2", vf_s2, "right factor smoothness (multiplication)");
  verify->add_option("--p2", vf_p2, "right factor integrability (multiplication)");
  verify->add_option("--s", vf_s, "target (or embedding source) smoothness")->required();
  verify->add_option("--p", vf_p, "target (or embedding source) integrability")->required();
  verify->add_option("--t", vf_t, "embedding target smoothness");
  verify->add_option("--q", vf_q, "embedding target integrability");
  long long verify_samples = 200;
  std::uint64_t verify_seed = 1;
  std::size_t verify_grid = 0;
  double verify_decay = 1.0;
  std::string verify_out;
  std::string verify_bandwidths = "16,32,64,128";
  verify->add_option("--samples", verify_samples, "samples per bandwidth");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->add_option("--grid", verify_grid, "grid size (0: choose per bandwidth)");
  verify->add_option("--decay", verify_decay, "spectral decay exponent of the samples");
  verify->add_option("--bandwidths", verify_bandwidths, "comma-separated bandwidth ladder");
  verify->add_option("--out", verify_out, "report path prefix (.json/.csv appended)")->required();

  // --- counterexample ---
  auto* counter = app.add_subcommand("counterexample", "reproduce the g_N growth law");
  std::string cx_s = "1/2", cx_p1 = "4", cx_p = "2", cx_p2 = "2", cx_s2;
  long long cx_nmax = 8;
  std::size_t cx_grid = 16384;
  std::string cx_out;
  counter->add_option("--s", cx_s, "shared smoothness (non-integer)");
  counter->add_option("--p1", cx_p1, "left factor integrability");
  counter->add_option("--p", cx_p, "target integrability");
  counter->add_option("--p2", cx_p2, "right factor integrability (constant term)");
  counter->add_option("--s2", cx_s2, "right factor smoothness (default: s)");
  counter->add_option("--Nmax", cx_nmax, "largest N; runs N = 1, 2, 4, ... <= Nmax");
  counter->add_option("--grid", cx_grid, "grid size M (power of two)");
  counter->add_option("--out", cx_out, "report path prefix (.json/.csv appended)")->required();

  // --- replay ---
  auto* replay = app.add_subcommand("replay", "re-check a serialized verdict certificate");
  std::string replay_in;
  replay->add_option("--in", replay_in, "verdict JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  const bool json_output = output_mode == "json";
  if (!json_output && output_mode != "text") {
    std::cerr << "error: --output must be 'text' or 'json', got '" << output_mode << "'\n";
    return kExitError;
  }

  try {
    if (check_mult->parsed()) {
      const MultQuery query = mult_flags.query();
      const Verdict verdict = check_multiplication(query);
      if (json_output) {
        std::cout << verdict_to_json(query, verdict).dump(2) << "\n";
      } else {
        std::cout << format_verdict(query_str(query), verdict);
      }
      return status_exit_code(verdict.status);
    }

    if (check_embed->parsed()) {
      const Family family = family_from_name(embed_common.family);
      const DomainSpec domain = embed_common.domain_spec();
      const EmbedQuery query{{family, Rational::parse(embed_s), Rational::parse(embed_p), domain},
                             {family, Rational::parse(embed_t), Rational::parse(embed_q), domain}};
      const Verdict verdict = check_embedding(query);
      if (json_output) {
        std::cout << verdict_to_json(query, verdict).dump(2) << "\n";
      } else {
        std::cout << format_verdict(query_str(query), verdict);
      }
      return status_exit_code(verdict.status);
    }

    if (interp->parsed()) {
      const Family family = family_from_name(interp_common.family);
      const DomainSpec domain = interp_common.domain_spec();
      const SpaceSpec a{family, Rational::parse(interp_s0), Rational::parse(interp_p0), domain};
      const SpaceSpec b{family, Rational::parse(interp_s1), Rational::parse(interp_p1), domain};
      const auto [spec, params] = interpolate_specs(a, b, Rational::parse(interp_theta));
      if (json_output) {
        nlohmann::json j{{"family", std::string(family_name(spec.family))},
                         {"s", spec.s.fraction_str()},
                         {"p", spec.p.fraction_str()},
                         {"theta", params.theta.fraction_str()},
                         {"method", params.method == InterpMethod::Real ? "real" : "complex"},
                         {"admissible", params.admissible},
                         {"caveats", params.caveats}};
        if (params.secondary) j["secondary"] = params.secondary->fraction_str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "interpolated: " << space_str(spec) << "\n";
        std::cout << "method:       " << (params.method == InterpMethod::Real ? "real" : "complex");
        if (params.secondary) std::cout << " (secondary exponent " << params.secondary->str() << ")";
        std::cout << "\n";
        std::cout << "admissible:   " << (params.admissible ? "yes" : "no") << "\n";
        for (const auto& caveat : params.caveats) std::cout << "  caveat: " << caveat << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      BoundednessOptions options;
      options.bandwidths = parse_int_list(verify_bandwidths);
      options.decay = verify_decay;
      options.grid_m = verify_grid;
      const Family family = family_from_name(verify_common.family);
      const DomainSpec domain = verify_common.domain_spec();
      const bool embed_mode = !vf_t.empty() || !vf_q.empty();
      const bool mult_mode = !vf_s1.empty() || !vf_p1.empty() || !vf_s2.empty() || !vf_p2.empty();
      if (embed_mode == mult_mode) {
        std::cerr << "error: give either --s1/--p1/--s2/--p2 (multiplication) or --t/--q (embedding)\n";
        return kExitError;
      }
      ExperimentReport report;
      if (embed_mode) {
        const EmbedQuery query{{family, Rational::parse(vf_s), Rational::parse(vf_p), domain},
                               {family, Rational::parse(vf_t), Rational::parse(vf_q), domain}};
        report = empirical_boundedness(query, verify_samples, verify_seed, options);
      } else {
        const MultQuery query{{family, Rational::parse(vf_s1), Rational::parse(vf_p1), domain},
                              {family, Rational::parse(vf_s2), Rational::parse(vf_p2), domain},
                              {family, Rational::parse(vf_s), Rational::parse(vf_p), domain}};
        report = empirical_boundedness(query, verify_samples, verify_seed, options);
      }
      write_report_json(report, verify_out + ".json");
      write_report_csv(report, verify_out + ".csv");
      if (json_output) {
        std::cout << report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << "boundedness slope " << report.fitted_slope << " (tolerance "
                  << report.tolerance << "): " << (report.pass ? "pass" : "fail") << "\n";
        std::cout << "report written to " << verify_out << ".json / .csv\n";
      }
      return report.pass ? 0 : kExitDisproved;
    }

    if (counter->parsed()) {
      CounterexampleConfig cfg;
      cfg.s = Rational::parse(cx_s);
      cfg.p1 = Rational::parse(cx_p1);
      cfg.p = Rational::parse(cx_p);
      cfg.p2 = Rational::parse(cx_p2);
      cfg.s2 = cx_s2.empty() ? cfg.s : Rational::parse(cx_s2);
      cfg.grid_m = cx_grid;
      if (cfg.p1 <= cfg.p) {
        std::cerr << "error: p1 <= p: no contradiction expected\n";
        return kExitError;
      }
      cfg.n_values.clear();
      for (long long n = 1; n <= cx_nmax; n *= 2) cfg.n_values.push_back(n);
      const ExperimentReport report = counterexample_growth(cfg);
      write_report_json(report, cx_out + ".json");
      write_report_csv(report, cx_out + ".csv");
      if (json_output) {
        std::cout << report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << "growth slope " << report.fitted_slope << ", expected "
                  << report.expected_slope.str() << " +/- " << report.tolerance << ": "
                  << (report.pass ? "pass" : "fail") << "\n";
        std::cout << "report written to " << cx_out << ".json / .csv\n";
      }
      return report.pass ? 0 : kExitDisproved;
    }

    if (replay->parsed()) {
      std::ifstream in(replay_in);
      if (!in) {
        std::cerr << "error: cannot open '" << replay_in << "'\n";
        return kExitError;
      }
      nlohmann::json j;
      in >> j;
      const ParsedVerdict parsed = verdict_from_json(j);
      if (parsed.verdict.certificate && !replay_certificate(*parsed.verdict.certificate)) {
        std::cerr << "certificate does not replay: a recorded condition changed truth value\n";
        return kExitError;
      }
      std::cout << "certificate replays; status " << status_name(parsed.verdict.status) << "\n";
      return status_exit_code(parsed.verdict.status);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
