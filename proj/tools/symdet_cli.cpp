#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "symdet/code.hpp"
#include "symdet/combinat.hpp"
#include "symdet/errors.hpp"
#include "symdet/gf.hpp"
#include "symdet/guard.hpp"
#include "symdet/krawtchouk.hpp"
#include "symdet/oracle.hpp"
#include "symdet/qnumbers.hpp"
#include "symdet/skew.hpp"
#include "symdet/symmat.hpp"
#include "symdet/weights.hpp"

namespace {

using namespace symdet;

int exit_code_for(errc c) {
  switch (c) {
    case errc::guard_exceeded:
      return 3;
    case errc::non_prime:
    case errc::even_characteristic:
    case errc::degree_out_of_range:
    case errc::division_by_zero:
    case errc::length_mismatch:
    case errc::size_mismatch:
    case errc::invalid_rank_type_pair:
    case errc::range_error:
      return 2;
    default:
      return 1;
  }
}

RankType parse_stratum(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    fail(errc::range_error, "stratum must be k,tau (got '" + text + "')");
  RankType s;
  s.rank = std::stoi(text.substr(0, comma));
  s.type = std::stoi(text.substr(comma + 1));
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(errc::io_error, "cannot open " + out_path + " for writing");
  out << text;
  if (!out) fail(errc::io_error, "write to " + out_path + " failed");
}

// ---- verify ----------------------------------------------------------------

struct VerifyReport {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::size_t failures = 0;
  bool json = false;

  void add(const std::string& name, const std::string& params,
           const std::string& formula, const std::string& oracle) {
    const bool ok = formula == oracle;
    if (!ok) ++failures;
    if (json) {
      checks.push_back({{"check", name},
                        {"params", params},
                        {"formula", formula},
                        {"oracle", oracle},
                        {"pass", ok}});
    } else {
      std::cout << name << ' ' << params << " formula=" << formula
                << " oracle=" << oracle << (ok ? " PASS" : " FAIL") << '\n';
    }
  }
};

void verify_census(const Field& f, int m, const GuardPolicy& g,
                   VerifyReport& rep) {
  const std::string base = "q=" + std::to_string(f.q()) + " m=" + std::to_string(m);
  auto tally = census(f, m, g);
  for (const RankType& s : strata(m))
    rep.add("census", base + " stratum=" + stratum_name(s),
            mu_rt(f, m, s).get_str(), tally[s].get_str());
}

void verify_qnum(const Field& f, int m, const GuardPolicy& g,
                 VerifyReport& rep) {
  const std::string base = "q=" + std::to_string(f.q()) + " m=" + std::to_string(m);
  const std::vector<RankType> all = strata(m);
  for (const RankType& col : all) {
    const SymMatrix a = representative(f, m, col.rank, col.type);
    const auto dists = trace_distributions_all(f, m, a, g);
    for (std::size_t i = 0; i < all.size(); ++i)
      rep.add("qnum",
              base + " row=" + stratum_name(all[i]) +
                  " col=" + stratum_name(col),
              q_number(f, m, all[i], col).get_str(),
              dists[i].char_sum().get_str());
  }
}

void verify_kraw(const Field& f, int m, const GuardPolicy& g,
                 VerifyReport& rep) {
  const std::string base = "q=" + std::to_string(f.q()) + " m=" + std::to_string(m);
  const int n = m / 2;
  for (int s = 0; s <= n; ++s) {
    const SkewMatrix a = skew_representative(f, m, s);
    const auto dists = skew_pair_distributions_all(f, m, a, g);
    for (int r = 0; r <= n; ++r)
      rep.add("kraw", base + " r=" + std::to_string(r) + " s=" + std::to_string(s),
              kraw_F(f, m, r, s).get_str(), dists[r].char_sum().get_str());
  }
  for (int s = 0; s <= n; ++s)
    rep.add("skewcount", base + " s=" + std::to_string(s),
            kraw_F(f, m, s, 0).get_str(),
            skew_rank_count(f, m, s, g).get_str());
}

void verify_weights(const Field& f, int m, int t, BruteMode mode,
                    const GuardPolicy& g, VerifyReport& rep) {
  const std::string base = "q=" + std::to_string(f.q()) +
                           " m=" + std::to_string(m) + " t=" + std::to_string(t);
  const WeightTable formula = weight_distribution(f, m, t);
  const WeightTable oracle = brute_weight_table(f, m, t, mode, g);
  rep.add("weights", base + " length", formula.length.get_str(),
          oracle.length.get_str());
  for (std::size_t i = 0; i < formula.rows.size(); ++i) {
    const WeightRow& fr = formula.rows[i];
    const WeightRow& br = oracle.rows[i];
    rep.add("weights",
            base + " row=" + stratum_name({fr.k, fr.tau}),
            fr.weight.get_str() + "*" + fr.multiplicity.get_str(),
            br.weight.get_str() + "*" + br.multiplicity.get_str());
  }
  rep.add("mindist", base, formula.min_distance.get_str(),
          oracle.min_distance.get_str());
}

// ---- main ------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Weight distributions of symmetric determinantal codes over odd-characteristic fields"};
  app.require_subcommand(1);

  std::uint64_t q = 0;
  int m = 0, t = 0, r = -1, s = -1, k = 0;
  int tau = 2;  // sentinel: unset
  bool projective = false, no_labels = false, force = false;
  bool as_json = false, as_csv = false, matrix = false;
  std::string out_path, row_text, col_text;
  std::uint64_t delta_enc = 0, alpha_enc = 0;
  std::string mode_text = "representative";

  auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "field size, an odd prime power")->required();
  };
  auto add_m = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "matrix size")->required();
  };

  CLI::App* mu_cmd = app.add_subcommand("mu", "stratum sizes mu_{r,tau}(m)");
  add_q(mu_cmd);
  add_m(mu_cmd);
  mu_cmd->add_option("--r", r, "rank filter");
  mu_cmd->add_option("--tau", tau, "type filter (+1 or -1)");

  CLI::App* nu_cmd = app.add_subcommand("nu", "variety size nu_m(t)");
  add_q(nu_cmd);
  add_m(nu_cmd);
  nu_cmd->add_option("--t", t, "rank bound")->required();

  CLI::App* kraw_cmd = app.add_subcommand("kraw", "Krawtchouk value F_r^(m)(s)");
  add_q(kraw_cmd);
  add_m(kraw_cmd);
  kraw_cmd->add_option("--r", r, "degree index")->required();
  kraw_cmd->add_option("--s", s, "evaluation index")->required();

  CLI::App* qnum_cmd = app.add_subcommand("qnum", "Q-numbers of the association scheme");
  add_q(qnum_cmd);
  add_m(qnum_cmd);
  qnum_cmd->add_option("--row", row_text, "row stratum as k,tau");
  qnum_cmd->add_option("--col", col_text, "column stratum as k,tau");
  qnum_cmd->add_flag("--matrix", matrix, "emit the full matrix as CSV");

  CLI::App* weights_cmd = app.add_subcommand("weights", "full weight distribution");
  add_q(weights_cmd);
  add_m(weights_cmd);
  weights_cmd->add_option("--t", t, "rank bound")->required();
  weights_cmd->add_flag("--json", as_json, "JSON output (default)");
  weights_cmd->add_flag("--csv", as_csv, "CSV output");
  weights_cmd->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* mindist_cmd = app.add_subcommand("mindist", "minimum distance");
  add_q(mindist_cmd);
  add_m(mindist_cmd);
  mindist_cmd->add_option("--t", t, "rank bound")->required();
  mindist_cmd->add_flag("--projective", projective,
                        "projective distance and length");

  CLI::App* ptrace_cmd = app.add_subcommand("ptrace", "delta-partial k-trace census");
  add_q(ptrace_cmd);
  add_m(ptrace_cmd);
  ptrace_cmd->add_option("--t", t, "rank bound")->required();
  ptrace_cmd->add_option("--k", k, "trace cutoff")->required();
  ptrace_cmd->add_option("--delta", delta_enc, "delta encoding")->required();
  ptrace_cmd->add_option("--alpha", alpha_enc, "target value encoding")->required();

  CLI::App* genmat_cmd = app.add_subcommand("genmat", "generator matrix export");
  add_q(genmat_cmd);
  add_m(genmat_cmd);
  genmat_cmd->add_option("--t", t, "rank bound")->required();
  genmat_cmd->add_flag("--projective", projective, "projective columns");
  genmat_cmd->add_flag("--no-labels", no_labels, "omit column labels");
  genmat_cmd->add_option("--out", out_path, "output path")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "formulas against brute force");
  add_q(verify_cmd);
  add_m(verify_cmd);
  verify_cmd->add_option("--t", t, "restrict the weight check to one t");
  verify_cmd->add_option("--mode", mode_text, "weight oracle mode")
      ->check(CLI::IsMember({"full", "representative"}));
  verify_cmd->add_flag("--force", force, "bypass enumeration guards");
  verify_cmd->add_flag("--json", as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool t_given_verify = verify_cmd->count("--t") > 0;

  GuardPolicy guard = GuardPolicy::from_env();
  guard.force = force;

  const Field f = Field::from_order(q);

  if (mu_cmd->parsed()) {
    const bool has_r = mu_cmd->count("--r") > 0;
    const bool has_tau = mu_cmd->count("--tau") > 0;
    if (has_tau && !has_r)
      fail(errc::range_error, "--tau requires --r");
    if (!has_r) {
      for (const RankType& st : strata(m))
        std::cout << stratum_name(st) << ' ' << mu_rt(f, m, st).get_str()
                  << '\n';
    } else if (!has_tau) {
      std::cout << mu(f, m, r).get_str() << '\n';
    } else {
      std::cout << mu_rt(f, m, {r, tau}).get_str() << '\n';
    }
  } else if (nu_cmd->parsed()) {
    std::cout << nu(f, m, t).get_str() << '\n';
  } else if (kraw_cmd->parsed()) {
    std::cout << kraw_F(f, m, r, s).get_str() << '\n';
  } else if (qnum_cmd->parsed()) {
    if (matrix == (!row_text.empty() || !col_text.empty()))
      fail(errc::range_error, "use either --matrix or both --row and --col");
    if (matrix) {
      const std::vector<RankType> all = strata(m);
      std::cout << "Q";
      for (const RankType& col : all) std::cout << ',' << stratum_name(col);
      std::cout << '\n';
      for (const RankType& row : all) {
        std::cout << stratum_name(row);
        for (const RankType& col : all)
          std::cout << ',' << q_number(f, m, row, col).get_str();
        std::cout << '\n';
      }
    } else {
      if (row_text.empty() || col_text.empty())
        fail(errc::range_error, "--row and --col are both required");
      std::cout << q_number(f, m, parse_stratum(row_text),
                            parse_stratum(col_text))
                       .get_str()
                << '\n';
    }
  } else if (weights_cmd->parsed()) {
    if (as_json && as_csv)
      fail(errc::range_error, "--json and --csv are mutually exclusive");
    const WeightTable wt = weight_distribution(f, m, t);
    emit(as_csv ? weight_table_csv(wt) : weight_table_json(wt).dump(2) + "\n",
         out_path);
  } else if (mindist_cmd->parsed()) {
    if (projective) {
      std::cout << min_distance_projective(f, m, t).get_str() << ' '
                << projective_length(f, m, t).get_str() << '\n';
    } else {
      std::cout << min_distance(f, m, t).get_str() << '\n';
    }
  } else if (ptrace_cmd->parsed()) {
    std::cout << partial_trace_count(f, m, t, k, f.element(delta_enc),
                                     f.element(alpha_enc))
                     .get_str()
              << '\n';
  } else if (genmat_cmd->parsed()) {
    const GeneratorMatrix gm = projective
                                   ? projective_generator(f, m, t, guard)
                                   : build_generator(f, m, t, guard);
    write_generator(f, gm, out_path, !no_labels);
  } else if (verify_cmd->parsed()) {
    VerifyReport rep;
    rep.json = as_json;
    const BruteMode mode = (mode_text == "full") ? BruteMode::full
                                                 : BruteMode::representative;
    verify_census(f, m, guard, rep);
    verify_qnum(f, m, guard, rep);
    if (m >= 2) verify_kraw(f, m, guard, rep);
    if (t_given_verify) {
      verify_weights(f, m, t, mode, guard, rep);
    } else {
      for (int tt = 1; tt <= m; ++tt)
        verify_weights(f, m, tt, mode, guard, rep);
    }
    if (rep.json) {
      nlohmann::ordered_json j;
      j["checks"] = rep.checks;
      j["failures"] = rep.failures;
      std::cout << j.dump(2) << '\n';
    }
    return rep.failures == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const symdet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
