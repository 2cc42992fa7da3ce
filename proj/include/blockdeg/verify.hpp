#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "blockdeg/block_census.hpp"
#include "blockdeg/cyclo.hpp"
#include "blockdeg/lie_tables.hpp"
#include "blockdeg/parallel.hpp"
#include "blockdeg/partition.hpp"
#include "blockdeg/report.hpp"
#include "blockdeg/sym_degrees.hpp"

// Grid drivers: each enumerates its cells in a fixed order, checks them on a
// worker pool and merges the findings in that same order.

namespace blockdeg {

struct CellResult {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  std::vector<Violation> ambiguous;
};

namespace detail {

template <class Cell, class F>
VerificationReport run_grid(std::string command, nlohmann::ordered_json grid, const std::vector<Cell>& cells, F check,
                            unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.command = std::move(command);
  rep.grid = std::move(grid);
  rep.grid_size = cells.size();
  for (auto& r : ordered_map(cells, check, jobs)) rep.absorb(r.checked, std::move(r.violations), std::move(r.ambiguous));
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::string cell_name(int n, int p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

inline std::string cell_name(int n, int p, const Partition& gamma) {
  return cell_name(n, p) + " core=(" + gamma.str() + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Symmetric and alternating groups.

/// Macdonald's last-layer test against the Legendre valuation of the degree.
inline VerificationReport verify_macdonald_grid(int max_n, const std::vector<int>& primes, unsigned jobs) {
  std::vector<std::pair<int, int>> cells;
  for (int p : primes)
    for (int n = 0; n <= max_n; ++n) cells.emplace_back(n, p);
  auto check = [](const std::pair<int, int>& cell) {
    const auto [n, p] = cell;
    CellResult out;
    for_each_partition(n, [&](const Partition& lambda) {
      ++out.checked;
      const bool fast = is_p_prime_macdonald(lambda, p);
      const bool slow = p_valuation_of_degree(lambda, p) == 0;
      if (fast != slow)
        out.violations.push_back({detail::cell_name(n, p), "macdonald-mismatch", "(" + lambda.str() + ")"});
    });
    return out;
  };
  return detail::run_grid("verify macdonald", {{"max_n", max_n}, {"primes", primes}}, cells, check, jobs);
}

struct StarCell {
  int p;
  Partition gamma;
  int max_n;
};

/// Degree comparison of neighbouring star shapes over every core gamma with
/// |gamma| < p and |gamma| + p w <= max_n.
inline VerificationReport verify_star_comparison_grid(int max_n, const std::vector<int>& primes, unsigned jobs) {
  std::vector<StarCell> cells;
  for (int p : primes)
    for (int m = 0; m < p && m <= max_n; ++m)
      for (const Partition& gamma : partitions_of(m)) cells.push_back({p, gamma, max_n});
  auto check = [](const StarCell& cell) {
    CellResult out;
    const int m = cell.gamma.size();
    for (int w = 1; m + cell.p * w <= cell.max_n; ++w)
      for (int a = (w + 1) / 2 + 1; a <= w; ++a) {
        ++out.checked;
        const StarComparison s = verify_lemma_alt1(cell.p, cell.gamma, w, a);
        if (!s.holds)
          out.violations.push_back({"p=" + std::to_string(cell.p) + " core=(" + cell.gamma.str() +
                                        ") w=" + std::to_string(w) + " a=" + std::to_string(a),
                                    "degree-order", to_string(s.degree_lambda) + " >= " + to_string(s.degree_mu)});
      }
    return out;
  };
  return detail::run_grid("verify lemma-3-2", {{"max_n", max_n}, {"primes", primes}}, cells, check, jobs);
}

struct CoreCell {
  int n;
  int p;
  Partition gamma;
};

/// Every (n, p, gamma) with p <= n <= max_n and gamma a partition of n mod p.
inline std::vector<CoreCell> residue_core_cells(int max_n, const std::vector<int>& primes) {
  std::vector<CoreCell> cells;
  for (int p : primes)
    for (int n = p; n <= max_n; ++n)
      for (const Partition& gamma : partitions_of(n % p)) cells.push_back({n, p, gamma});
  return cells;
}

inline VerificationReport verify_omega_bound_grid(int max_n, const std::vector<int>& primes, unsigned jobs) {
  auto check = [](const CoreCell& c) {
    CellResult out;
    out.checked = 1;
    const OmegaBoundVerdict v = verify_omega_bound(c.n, c.p, c.gamma);
    if (!v.holds)
      out.violations.push_back({detail::cell_name(c.n, c.p, c.gamma), "omega-bound",
                                "|Omega|=" + std::to_string(v.report.Omega.size()) +
                                    " distinct=" + std::to_string(v.distinct_degrees) +
                                    " bound=" + std::to_string(v.report.bound)});
    return out;
  };
  return detail::run_grid("verify omega-bound", {{"max_n", max_n}, {"primes", primes}},
                          residue_core_cells(max_n, primes), check, jobs);
}

inline VerificationReport verify_alt_block_bound_grid(int max_n, const std::vector<int>& primes, unsigned jobs) {
  auto check = [](const CoreCell& c) {
    CellResult out;
    out.checked = 1;
    const AltBlockBoundVerdict v = verify_alt_block_bound(c.n, c.p, c.gamma);
    if (!v.holds)
      out.violations.push_back({detail::cell_name(c.n, c.p, c.gamma), "alt-block-bound",
                                "ext_degrees=" + std::to_string(v.census.ext_degrees.size()) +
                                    " bound=" + std::to_string(v.omega.bound) +
                                    (v.omega_inside_extendable ? "" : " (Omega not inside census)")});
    return out;
  };
  return detail::run_grid("verify prop-3-5", {{"max_n", max_n}, {"primes", primes}}, residue_core_cells(max_n, primes),
                          check, jobs);
}

/// Principal-block statement for 7 <= n <= max_n and every listed p <= n.
inline VerificationReport verify_principal_alt_grid(int max_n, const std::vector<int>& primes, unsigned jobs) {
  std::vector<std::pair<int, int>> cells;
  for (int p : primes)
    for (int n = std::max(7, p); n <= max_n; ++n) cells.emplace_back(n, p);
  auto check = [](const std::pair<int, int>& cell) {
    CellResult out;
    out.checked = 1;
    const PrincipalAltVerdict v = verify_prop_alt(cell.first, cell.second);
    if (!v.census_ok)
      out.violations.push_back({detail::cell_name(cell.first, cell.second), "too-few-degrees",
                                std::to_string(v.census.ext_degrees.size()) + " extendable p'-degrees"});
    if (!v.witnesses_ok)
      out.violations.push_back({detail::cell_name(cell.first, cell.second), "witness", "hook witnesses fail"});
    return out;
  };
  return detail::run_grid("verify prop-3-6", {{"max_n", max_n}, {"primes", primes}}, cells, check, jobs);
}

// ---------------------------------------------------------------------------
// Cyclotomic criterion.

/// p | Phi_m(q) iff m = d p^i, and p^2 | Phi_m(q) only for m = d.
inline VerificationReport verify_cyclotomic_grid(int m_max, int q_max, int p_max, unsigned jobs) {
  std::vector<std::pair<int, int>> cells;
  for (int q : prime_powers_in(2, q_max))
    for (int p : primes_in(5, p_max))
      if (q % p != 0) cells.emplace_back(q, p);
  auto check = [m_max](const std::pair<int, int>& cell) {
    const auto [q, p] = cell;
    const OrderData ord = order_data(q, p);
    CellResult out;
    for (int m = 1; m <= m_max; ++m) {
      ++out.checked;
      const int v = valuation(cyclotomic_value(m, Rational(q)), p);
      const std::string name = "q=" + std::to_string(q) + " p=" + std::to_string(p) + " m=" + std::to_string(m);
      if ((v > 0) != p_divides_phi(m, ord))
        out.violations.push_back({name, "divisibility", "v_p=" + std::to_string(v) + " d=" + std::to_string(ord.d)});
      if (v >= 2 && m != ord.d)
        out.violations.push_back({name, "high-valuation", "v_p=" + std::to_string(v) + " d=" + std::to_string(ord.d)});
    }
    return out;
  };
  return detail::run_grid("verify cyclo", {{"m_max", m_max}, {"q_max", q_max}, {"p_max", p_max}}, cells, check, jobs);
}

// ---------------------------------------------------------------------------
// Groups of Lie type.

struct LieGrid {
  std::vector<LieType> types{LieType::A, LieType::A2, LieType::B, LieType::C, LieType::D, LieType::D2};
  int n_max = 10;
  int q_max = 27;
  int p_max = 31;
  int a_n_max = 12;  // types A and 2A run to this size instead of n_max
};

inline int grid_n_min(LieType t) {
  switch (family_of(t)) {
    case TableFamily::A: return 3;
    case TableFamily::BC: return 2;
    case TableFamily::D: return 4;
    case TableFamily::D2: return 4;
  }
  return 1;
}

/// Cells (type, n, q, p) where p divides the order of a simple group and the
/// tables speak: PSL_3 with p | q + eps belongs to the exceptional families.
inline std::vector<GroupContext> lie_grid_cells(const LieGrid& g) {
  std::vector<GroupContext> cells;
  for (LieType t : g.types) {
    const int hi = family_of(t) == TableFamily::A ? g.a_n_max : g.n_max;
    for (int n = grid_n_min(t); n <= hi; ++n)
      for (int q : prime_powers_in(2, g.q_max))
        for (int p : primes_in(5, g.p_max)) {
          if (q % p == 0) continue;
          const GroupContext c = make_context(t, n, q, p);
          if (!simple_group_case(c) || !divides_group_order(c) || excluded_from_coverage(c)) continue;
          cells.push_back(c);
        }
  }
  return cells;
}

inline nlohmann::ordered_json grid_json(const LieGrid& g) {
  std::vector<std::string> types;
  for (LieType t : g.types) types.push_back(to_string(t));
  return {{"types", types}, {"n_max", g.n_max}, {"a_n_max", g.a_n_max}, {"q_max", g.q_max}, {"p_max", g.p_max}};
}

namespace detail {

inline void row_violations(const GroupContext& c, const std::vector<RowVerdict>& rows, CellResult& out) {
  for (const auto& r : rows)
    if (!r.pass()) out.violations.push_back({c.str(), "row", r.row_id + " " + r.label + ": " + r.failure});
}

inline void trivial_core_violations(const GroupContext& c, CellResult& out) {
  const TrivialLabel t = trivial_label(c);
  Label core;
  Label cocore;
  if (const auto* lambda = std::get_if<Partition>(&t.label)) {
    core = cocore = p_core(*lambda, c.e);
  } else {
    core = e_core(std::get<Symbol>(t.label), c.e);
    cocore = e_cocore(std::get<Symbol>(t.label), c.e);
  }
  if (core != t.core || cocore != t.cocore)
    out.violations.push_back({c.str(), "trivial-core",
                              "computed " + to_string(core) + "/" + to_string(cocore) + ", closed form " +
                                  to_string(t.core) + "/" + to_string(t.cocore)});
}

}  // namespace detail

/// Every applicable row at every cell: label, block and p'-degree checks,
/// plus the closed-form cores of the trivial character.
inline VerificationReport verify_tables_grid(const LieGrid& g, unsigned jobs) {
  auto check = [](const GroupContext& c) {
    CellResult out;
    const CoverageVerdict v = coverage_and_distinctness(c);
    out.checked = v.slot1.size() + v.slot2.size();
    detail::row_violations(c, v.slot1, out);
    detail::row_violations(c, v.slot2, out);
    detail::trivial_core_violations(c, out);
    return out;
  };
  return detail::run_grid("verify tables", grid_json(g), lie_grid_cells(g), check, jobs);
}

/// Two verified characters per cell with different q'-parts.
inline VerificationReport verify_coverage_grid(const LieGrid& g, unsigned jobs) {
  auto check = [](const GroupContext& c) {
    CellResult out;
    out.checked = 1;
    const CoverageVerdict v = coverage_and_distinctness(c);
    detail::row_violations(c, v.slot1, out);
    detail::row_violations(c, v.slot2, out);
    if (!v.pick1 || !v.pick2) {
      auto any_pass = [](const std::vector<RowVerdict>& rows) {
        return std::any_of(rows.begin(), rows.end(), [](const RowVerdict& r) { return r.pass(); });
      };
      std::vector<std::string> missing;
      if (!any_pass(v.slot1)) missing.push_back("first");
      if (!any_pass(v.slot2)) missing.push_back("second");
      std::string detail = "no verified ";
      for (std::size_t i = 0; i < missing.size(); ++i) detail += (i ? " or " : "") + missing[i];
      out.violations.push_back({c.str(), "uncovered", detail + " character"});
      return out;
    }
    const RowVerdict& a = v.slot1[*v.pick1];
    const RowVerdict& b = v.slot2[*v.pick2];
    const std::string detail = a.row_id + " " + a.label + " q'=" + to_string(a.qprime) + " vs " + b.row_id + " " +
                               b.label + " q'=" + to_string(b.qprime);
    if (v.distinctness == Distinctness::Collision) out.violations.push_back({c.str(), "collision", detail});
    if (v.distinctness == Distinctness::HalfAmbiguous) out.ambiguous.push_back({c.str(), "half-factor-ambiguous", detail});
    return out;
  };
  return detail::run_grid("verify coverage", grid_json(g), lie_grid_cells(g), check, jobs);
}

/// Type A table rows against the q-analogue hook formula, for q drawn from `qs`.
/// Every partition of n must also give an integral q-analogue degree.
inline VerificationReport verify_typeA_grid(int n_max, const std::vector<int>& qs, int p_max, unsigned jobs) {
  std::vector<GroupContext> cells;
  for (LieType t : {LieType::A, LieType::A2})
    for (int n = 3; n <= n_max; ++n)
      for (int q : qs)
        for (int p : primes_in(5, p_max)) {
          if (q % p == 0) continue;
          const GroupContext c = make_context(t, n, q, p);
          if (!divides_group_order(c) || excluded_from_coverage(c) || !within_main_guards(c)) continue;
          cells.push_back(c);
        }
  auto check = [](const GroupContext& c) {
    CellResult out;
    for (const auto& mt : typeA_crosscheck(c)) {
      ++out.checked;
      if (!mt.agrees)
        out.violations.push_back({c.str(), "typeA-mismatch",
                                  mt.row_id + " " + mt.label + ": table q'=" + to_string(strip_prime(mt.table_value, c.ell)) +
                                      " hook q'=" + to_string(mt.hook_value)});
    }
    for_each_partition(c.n, [&](const Partition& lambda) {
      const Rational v = unipotent_degree_typeA(lambda, c.eps, Rational(c.q));
      if (denominator(v) != 1)
        out.violations.push_back({c.str(), "non-integral", "(" + lambda.str() + ") " + to_string(v)});
    });
    return out;
  };
  nlohmann::ordered_json grid{{"n_max", n_max}, {"q", qs}, {"p_max", p_max}};
  return detail::run_grid("verify typeA", std::move(grid), cells, check, jobs);
}

inline VerificationReport verify_d4_grid(int q_max, int p_max, unsigned jobs) {
  std::vector<std::pair<int, int>> cells;
  for (int q : prime_powers_in(2, q_max))
    for (int p : primes_in(5, p_max))
      if (q % p != 0) cells.emplace_back(q, p);
  auto check = [](const std::pair<int, int>& cell) {
    CellResult out;
    const D4Verdict v = verify_d4(cell.first, cell.second);
    if (!v.applicable) return out;
    out.checked = 1;
    if (!v.holds())
      out.violations.push_back({"D n=4 q=" + std::to_string(cell.first) + " p=" + std::to_string(cell.second), "d4",
                                "chi1=" + to_string(v.chi1) + " chi2=" + to_string(v.chi2) +
                                    (v.chi1_pprime && v.chi2_pprime ? "" : " (not p')")});
    return out;
  };
  return detail::run_grid("verify d4", {{"q_max", q_max}, {"p_max", p_max}}, cells, check, jobs);
}

inline VerificationReport verify_exceptions_grid(int q_max, int p_max, unsigned jobs) {
  struct Cell {
    ExceptionFamily family;
    int q;
    int p;
  };
  std::vector<Cell> cells;
  for (auto f : {ExceptionFamily::PSL2, ExceptionFamily::PSL3eps, ExceptionFamily::SmallA3, ExceptionFamily::Sp4evenQ,
                 ExceptionFamily::D4special})
    for (int q : prime_powers_in(2, q_max))
      for (int p : primes_in(5, p_max))
        if (q % p != 0) cells.push_back({f, q, p});
  auto check = [](const Cell& cell) {
    CellResult out;
    for (const auto& v : verify_exceptions(cell.family, cell.q, cell.p)) {
      ++out.checked;
      if (!v.holds)
        out.violations.push_back({to_string(cell.family) + " q=" + std::to_string(cell.q) + " p=" +
                                      std::to_string(cell.p) + " sign=" + std::to_string(v.sign),
                                  "exception", v.detail});
    }
    return out;
  };
  return detail::run_grid("verify exceptions", {{"q_max", q_max}, {"p_max", p_max}}, cells, check, jobs);
}

}  // namespace blockdeg
