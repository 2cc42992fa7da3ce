#include <fstream>
#include <functional>
#include <list>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blockdeg/block_census.hpp"
#include "blockdeg/degree_expr.hpp"
#include "blockdeg/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace blockdeg;

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Output {
  std::string path;
  std::string format = "json";

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text;
  }
};

ordered_json strings(const std::vector<Partition>& v) {
  auto arr = ordered_json::array();
  for (const auto& p : v) arr.push_back(p.str());
  return arr;
}

ordered_json strings(const std::vector<BigInt>& v) {
  auto arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

Bindings parse_bindings(const std::vector<std::string>& items) {
  Bindings env;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("binding must look like name=value: " + item);
    env[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
  }
  return env;
}

ordered_json factorization_json(const CycloFactorization& f) {
  ordered_json phi = ordered_json::object();
  for (auto [m, e] : f.factors) phi[std::to_string(m)] = e;
  return {{"scalar", to_string(f.scalar)}, {"q_power", f.q_power}, {"phi", phi}, {"text", f.str()}};
}

// One verify subcommand: its grid flags with the acceptance defaults, and the
// driver that turns them into a report.
struct VerifyFlags {
  int max_n = 0;
  std::vector<int> primes;
  int n_max = 10;
  int a_n_max = 12;
  int q_max = 27;
  int p_max = 31;
  int m_max = 60;
  std::vector<int> qs{2, 3, 4, 5, 7, 8, 9};
  std::vector<std::string> types{"A", "2A", "B", "C", "D", "2D"};
  unsigned jobs = default_jobs();
};

LieGrid lie_grid(const VerifyFlags& f) {
  LieGrid g;
  g.types.clear();
  for (const auto& t : f.types) g.types.push_back(parse_lie_type(t));
  g.n_max = f.n_max;
  g.a_n_max = f.a_n_max;
  g.q_max = f.q_max;
  g.p_max = f.p_max;
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of partition, block and generic-degree combinatorics."};
  app.require_subcommand(1);
  Output out;
  app.add_option("--out", out.path, "write the result to this file instead of stdout");

  std::function<int()> action;

  // core
  std::string partition_text;
  int p = 0;
  auto* core_cmd = app.add_subcommand("core", "q-core of a partition");
  core_cmd->add_option("--partition", partition_text, "parts, e.g. 6,3,1")->required();
  core_cmd->add_option("--p", p, "hook length q to strip")->required()->check(CLI::PositiveNumber);
  core_cmd->callback([&] {
    action = [&] {
      const Partition lambda = Partition::parse(partition_text);
      const Partition core = p_core(lambda, p);
      ordered_json j{{"partition", lambda.str()}, {"q", p}, {"core", core.str()},
                     {"weight", (lambda.size() - core.size()) / p}};
      out.write(j.dump(2) + "\n");
      return 0;
    };
  });

  // degree
  auto* degree_cmd = app.add_subcommand("degree", "character degree of S_n by the hook length formula");
  degree_cmd->add_option("--partition", partition_text, "parts, e.g. 6,3,1")->required();
  degree_cmd->callback([&] {
    action = [&] {
      const Partition lambda = Partition::parse(partition_text);
      ordered_json j{{"partition", lambda.str()}, {"n", lambda.size()}, {"degree", degree(lambda).str()}};
      out.write(j.dump(2) + "\n");
      return 0;
    };
  });

  // pprime
  auto* pprime_cmd = app.add_subcommand("pprime", "whether the degree of a partition is prime to p");
  pprime_cmd->add_option("--partition", partition_text, "parts, e.g. 6,3,1")->required();
  pprime_cmd->add_option("--p", p, "prime")->required();
  pprime_cmd->callback([&] {
    action = [&] {
      const Partition lambda = Partition::parse(partition_text);
      if (!is_prime(p)) throw std::invalid_argument("--p must be prime");
      const int v = p_valuation_of_degree(lambda, p);
      const bool fast = is_p_prime_macdonald(lambda, p);
      if (fast != (v == 0)) throw InternalConsistencyError("Macdonald test disagrees with the valuation");
      ordered_json j{{"partition", lambda.str()}, {"p", p}, {"p_valuation", v}, {"pprime", fast}};
      out.write(j.dump(2) + "\n");
      return 0;
    };
  });

  // census
  int n = 0;
  std::optional<std::string> core_text;
  std::string group = "an";
  auto* census_cmd = app.add_subcommand("census", "p'-degrees of a p-block of S_n or A_n");
  census_cmd->add_option("--n", n, "degree of the symmetric group")->required()->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--p", p, "prime")->required();
  census_cmd->add_option("--core", core_text, "p-core labelling the block (default: principal)");
  census_cmd->add_option("--group", group, "an or sn")->check(CLI::IsMember({"an", "sn"}));
  census_cmd->callback([&] {
    action = [&] {
      const Partition gamma = core_text ? Partition::parse(*core_text) : principal_core(n, p);
      const CensusRecord rec = census(n, p, gamma, group == "sn" ? GroupKind::Sym : GroupKind::Alt);
      ordered_json j{{"n", rec.n},
                     {"p", rec.p},
                     {"group", to_string(rec.label.group)},
                     {"core", rec.label.core.str()},
                     {"pprime_partitions", strings(rec.pprime_partitions)},
                     {"extendable_partitions", strings(rec.extendable_partitions)},
                     {"degrees", strings(rec.degrees)},
                     {"ext_degrees", strings(rec.ext_degrees)}};
      out.write(j.dump(2) + "\n");
      return 0;
    };
  });

  // omega
  auto* omega_cmd = app.add_subcommand("omega", "star-shaped p'-characters of a block and the lower bound");
  omega_cmd->add_option("--n", n, "degree of the symmetric group")->required()->check(CLI::NonNegativeNumber);
  omega_cmd->add_option("--p", p, "prime")->required();
  omega_cmd->add_option("--core", core_text, "core of n mod p cells (default: the row)");
  omega_cmd->callback([&] {
    action = [&] {
      if (!is_prime(p)) throw std::invalid_argument("--p must be prime");
      const Partition gamma = core_text ? Partition::parse(*core_text) : principal_core(n, p);
      const OmegaReport rep = omega_sets(n, p, gamma);
      ordered_json j{{"n", rep.n},
                     {"p", rep.p},
                     {"core", rep.gamma.str()},
                     {"bound", rep.bound},
                     {"H", strings(rep.H)},
                     {"Omega", strings(rep.Omega)},
                     {"omega_degrees", strings(rep.omega_degrees)}};
      out.write(j.dump(2) + "\n");
      return 0;
    };
  });

  // cyclo factor
  std::string expr_text;
  std::optional<int> q0;
  std::optional<int> p_opt;
  std::vector<std::string> binds;
  auto* cyclo_cmd = app.add_subcommand("cyclo", "cyclotomic algebra of degree expressions");
  cyclo_cmd->require_subcommand(1);
  auto* factor_cmd = cyclo_cmd->add_subcommand("factor", "factor a degree expression into q^k and Phi_m");
  factor_cmd->add_option("--expr", expr_text, "degree expression")->required();
  factor_cmd->add_option("--q", q0, "evaluate at this prime power");
  factor_cmd->add_option("--p", p_opt, "report the p-valuation (needs --q)");
  factor_cmd->add_option("--bind", binds, "integer variables, e.g. n=5,e=2,eps=-1")->delimiter(',');
  factor_cmd->callback([&] {
    action = [&] {
      const DegreeExpr e = parse_degree_expr(expr_text);
      const Bindings env = parse_bindings(binds);
      const CycloFactorization f = factorize(e, env);
      ordered_json j{{"expr", print(e)}, {"factors", factorization_json(f)}};
      if (q0) {
        const Rational v = evaluate(e, env, Rational(*q0));
        if (v != f.evaluate(Rational(*q0))) throw InternalConsistencyError("factorization does not evaluate back");
        j["value"] = to_string(v);
      }
      if (p_opt) {
        if (!q0) throw std::invalid_argument("--p needs --q");
        const Rational v = f.evaluate(Rational(*q0));
        if (v == 0) throw std::invalid_argument("expression vanishes at q");
        const int numeric = valuation(v, *p_opt);
        if (*p_opt >= 5 && *q0 % *p_opt != 0 && numeric != symbolic_p_valuation(f, order_data(*q0, *p_opt)))
          throw InternalConsistencyError("symbolic and numeric p-valuations differ");
        j["p_valuation"] = numeric;
      }
      out.write(j.dump(2) + "\n");
      return 0;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verifier over a grid");
  verify_cmd->require_subcommand(1);
  verify_cmd->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  std::list<VerifyFlags> all_flags;  // one per subcommand, stable addresses

  auto add_verify = [&](const std::string& name, const std::string& help, auto configure, auto run) {
    auto* cmd = verify_cmd->add_subcommand(name, help);
    VerifyFlags& flags = all_flags.emplace_back();
    cmd->add_option("--jobs", flags.jobs, "worker threads (default BLOCKDEG_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out.path, "write the report to this file");
    configure(cmd, flags);
    cmd->callback([&, run] {
      action = [&, run] {
        const VerificationReport rep = run(flags);
        out.write(out.format == "csv" ? to_csv(rep) : to_json(rep).dump(2) + "\n");
        return rep.ok() ? 0 : kExitViolations;
      };
    });
  };

  auto sym_flags = [](int max_n, std::vector<int> primes) {
    return [max_n, primes](CLI::App* cmd, VerifyFlags& f) {
      f.max_n = max_n;
      f.primes = primes;
      cmd->add_option("--max-n", f.max_n, "largest n");
      cmd->add_option("--primes", f.primes, "comma separated primes")->delimiter(',');
    };
  };
  auto lie_flags = [](int q_max, bool with_types) {
    return [q_max, with_types](CLI::App* cmd, VerifyFlags& f) {
      f.q_max = q_max;
      if (with_types) {
        cmd->add_option("--types", f.types, "A,2A,B,C,D,2D")->delimiter(',');
        cmd->add_option("--n-max", f.n_max, "largest rank for B, C, D, 2D");
        cmd->add_option("--a-n-max", f.a_n_max, "largest n for A and 2A");
      }
      cmd->add_option("--q-max", f.q_max, "largest prime power q");
      cmd->add_option("--p-max", f.p_max, "largest prime p");
    };
  };

  add_verify("macdonald", "Macdonald's p'-test against the degree valuation", sym_flags(25, {2, 3, 5, 7, 11}),
             [](const VerifyFlags& f) { return verify_macdonald_grid(f.max_n, f.primes, f.jobs); });
  add_verify("lemma-3-2", "degree order of neighbouring star shapes", sym_flags(45, {5, 7, 11}),
             [](const VerifyFlags& f) { return verify_star_comparison_grid(f.max_n, f.primes, f.jobs); });
  add_verify("omega-bound", "|cd(Omega)| = |Omega| and the digit bound", sym_flags(35, {5, 7, 11, 13}),
             [](const VerifyFlags& f) { return verify_omega_bound_grid(f.max_n, f.primes, f.jobs); });
  add_verify("prop-3-5", "extendable p'-degrees of every A_n block against the bound",
             sym_flags(35, {5, 7, 11, 13}),
             [](const VerifyFlags& f) { return verify_alt_block_bound_grid(f.max_n, f.primes, f.jobs); });
  add_verify("prop-3-6", "three extendable p'-degrees in the principal block of A_n",
             sym_flags(40, primes_in(5, 37)),
             [](const VerifyFlags& f) { return verify_principal_alt_grid(f.max_n, f.primes, f.jobs); });
  add_verify(
      "cyclo", "p | Phi_m(q) exactly for m = d p^i",
      [&](CLI::App* cmd, VerifyFlags& f) {
        cmd->add_option("--m-max", f.m_max, "largest m");
        lie_flags(16, false)(cmd, f);
      },
      [](const VerifyFlags& f) { return verify_cyclotomic_grid(f.m_max, f.q_max, f.p_max, f.jobs); });
  add_verify("tables", "every applicable unipotent row: label, block and p'-degree", lie_flags(27, true),
             [](const VerifyFlags& f) { return verify_tables_grid(lie_grid(f), f.jobs); });
  add_verify("coverage", "two p'-characters of the principal block with distinct q'-parts", lie_flags(27, true),
             [](const VerifyFlags& f) { return verify_coverage_grid(lie_grid(f), f.jobs); });
  add_verify(
      "typeA", "type A rows against the q-analogue hook formula",
      [](CLI::App* cmd, VerifyFlags& f) {
        f.n_max = 8;
        cmd->add_option("--n-max", f.n_max, "largest n");
        cmd->add_option("--qs", f.qs, "prime powers q")->delimiter(',');
        cmd->add_option("--p-max", f.p_max, "largest prime p");
      },
      [](const VerifyFlags& f) { return verify_typeA_grid(f.n_max, f.qs, f.p_max, f.jobs); });
  add_verify("d4", "D_4(q): chi1(1) > 2 chi2(1), both p'", lie_flags(128, false),
             [](const VerifyFlags& f) { return verify_d4_grid(f.q_max, f.p_max, f.jobs); });
  add_verify("exceptions", "small and exceptional families", lie_flags(128, false),
             [](const VerifyFlags& f) { return verify_exceptions_grid(f.q_max, f.p_max, f.jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }
}
