#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "blockdeg/cyclo.hpp"
#include "blockdeg/degree_expr.hpp"
#include "blockdeg/numeric.hpp"
#include "blockdeg/partition.hpp"
#include "blockdeg/symbol.hpp"
#include "blockdeg/table_data.hpp"

namespace blockdeg {

class UnsupportedType : public std::invalid_argument {
 public:
  explicit UnsupportedType(const std::string& name)
      : std::invalid_argument("unsupported group type '" + name + "' (supported: A, 2A, B, C, D, 2D)") {}
};

enum class LieType { A, A2, B, C, D, D2 };

inline std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::A2: return "2A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::D2: return "2D";
  }
  return "?";
}

inline LieType parse_lie_type(std::string_view name) {
  if (name == "A") return LieType::A;
  if (name == "2A") return LieType::A2;
  if (name == "B") return LieType::B;
  if (name == "C") return LieType::C;
  if (name == "D") return LieType::D;
  if (name == "2D") return LieType::D2;
  throw UnsupportedType(std::string(name));
}

/// Row families of the data: type A rows serve A and 2A, one set serves B and C.
enum class TableFamily { A, BC, D, D2 };

inline TableFamily family_of(LieType t) {
  switch (t) {
    case LieType::A:
    case LieType::A2: return TableFamily::A;
    case LieType::B:
    case LieType::C: return TableFamily::BC;
    case LieType::D: return TableFamily::D;
    case LieType::D2: return TableFamily::D2;
  }
  throw std::logic_error("unknown type");
}

inline TableFamily parse_table_family(std::string_view s) {
  if (s == "A") return TableFamily::A;
  if (s == "BC") return TableFamily::BC;
  if (s == "D") return TableFamily::D;
  if (s == "2D") return TableFamily::D2;
  throw std::invalid_argument("unknown table family '" + std::string(s) + "'");
}

enum class ExceptionFamily { PSL2, PSL3eps, SmallA3, Sp4evenQ, D4special };

inline std::string to_string(ExceptionFamily f) {
  switch (f) {
    case ExceptionFamily::PSL2: return "PSL2";
    case ExceptionFamily::PSL3eps: return "PSL3eps";
    case ExceptionFamily::SmallA3: return "SmallA3";
    case ExceptionFamily::Sp4evenQ: return "Sp4evenQ";
    case ExceptionFamily::D4special: return "D4special";
  }
  return "?";
}

inline ExceptionFamily parse_exception_family(std::string_view s) {
  for (auto f : {ExceptionFamily::PSL2, ExceptionFamily::PSL3eps, ExceptionFamily::SmallA3, ExceptionFamily::Sp4evenQ,
                 ExceptionFamily::D4special})
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown exception family '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Group context.

/// A classical group of rank n over F_q viewed at the prime p. For types A
/// and 2A, n is the size of the partitions (the group is SL_n or SU_n).
struct GroupContext {
  LieType type = LieType::A;
  int n = 1;
  int q = 2;
  int p = 5;
  int ell = 2;   // characteristic
  int eps = 1;   // +1 for A, -1 for 2A, +1 otherwise
  int e = 1;     // order of eps*q (A, 2A) or of q^2 (B, C, D, 2D) modulo p
  int r = 0;
  int m = 0;
  int side = 1;  // p | q^e - side; meaningful for B, C, D, 2D

  [[nodiscard]] std::string str() const {
    return to_string(type) + " n=" + std::to_string(n) + " q=" + std::to_string(q) + " p=" + std::to_string(p);
  }
};

inline GroupContext make_context(LieType type, int n, int q, int p) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5");
  const OrderData ord = order_data(q, p);
  GroupContext c;
  c.type = type;
  c.n = n;
  c.q = q;
  c.p = p;
  c.ell = static_cast<int>(prime_power_base(q));
  if (family_of(type) == TableFamily::A) {
    c.eps = type == LieType::A2 ? -1 : 1;
    c.e = ord.e_a(c.eps);
    c.side = 1;
  } else {
    c.e = ord.e_bcd;
    c.side = ord.side;
  }
  c.r = n % c.e;
  c.m = n / c.e;
  return c;
}

inline bool is_odd_power_of_two(int q) {
  if (q < 2 || (q & (q - 1)) != 0) return false;
  int k = 0;
  while (q > 1) {
    q >>= 1;
    ++k;
  }
  return k % 2 == 1;
}

/// p divides the order of the simple group, read off the q'-part of the order.
inline bool divides_group_order(const GroupContext& c) {
  const std::int64_t p = c.p;
  auto term = [&](std::int64_t k, std::int64_t sign) {  // q^k - sign mod p
    return ((pow_mod(c.q, k, p) - sign) % p + p) % p;
  };
  std::int64_t acc = 1;
  switch (c.type) {
    case LieType::A:
    case LieType::A2:
      for (int i = 2; i <= c.n; ++i) acc = acc * term(i, (c.eps == -1 && i % 2) ? -1 : 1) % p;
      break;
    case LieType::B:
    case LieType::C:
      for (int i = 1; i <= c.n; ++i) acc = acc * term(2 * i, 1) % p;
      break;
    case LieType::D:
    case LieType::D2:
      acc = term(c.n, c.type == LieType::D ? 1 : -1);
      for (int i = 1; i < c.n; ++i) acc = acc * term(2 * i, 1) % p;
      break;
  }
  return acc == 0;
}

/// False for the few parameter sets whose group is not simple:
/// PSL_2(2), PSL_2(3), PSU_3(2) and Sp_4(2) = S_6.
inline bool simple_group_case(const GroupContext& c) {
  switch (c.type) {
    case LieType::A: return !(c.n == 2 && c.q <= 3) && c.n >= 2;
    case LieType::A2: return !(c.n == 3 && c.q == 2) && c.n >= 3;
    case LieType::B:
    case LieType::C: return !(c.n == 2 && c.q == 2);
    case LieType::D: return c.n >= 4;
    case LieType::D2: return c.n >= 4;
  }
  return false;
}

/// Whether the main rows of the type's table are stated for this context.
inline bool within_main_guards(const GroupContext& c) {
  switch (c.type) {
    case LieType::A:
    case LieType::A2:
      return c.n >= 4 || (c.n == 3 && (c.q + c.eps) % c.p != 0);
    case LieType::B:
    case LieType::C:
      return c.n >= 2 && !(c.n == 2 && is_odd_power_of_two(c.q));
    case LieType::D:
      return c.n >= 5;
    case LieType::D2:
      return c.n >= 4;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Conditions.

enum class Atom {
  EIsOne, ENotOne, EIsRPlus1, ENotRPlus1, EIsRPlus2, ENotRPlus2, RBelow2, RAtLeast2, MIsOne, MAtLeast2,
  EDividesN, ENotDividesN, EDividesNMinus1, MEven, MOdd, PDividesMMinus1, PNotDividesMMinus1,
  PNotDividesMMinus2, PDividesNMinus1, PNotDividesNMinus1, SidePlus, SideMinus
};

inline constexpr std::array<std::pair<std::string_view, Atom>, 22> kAtomNames{{
    {"e=1", Atom::EIsOne},
    {"e!=1", Atom::ENotOne},
    {"e=r+1", Atom::EIsRPlus1},
    {"e!=r+1", Atom::ENotRPlus1},
    {"e=r+2", Atom::EIsRPlus2},
    {"e!=r+2", Atom::ENotRPlus2},
    {"r<2", Atom::RBelow2},
    {"r>=2", Atom::RAtLeast2},
    {"m=1", Atom::MIsOne},
    {"m>=2", Atom::MAtLeast2},
    {"e|n", Atom::EDividesN},
    {"e!|n", Atom::ENotDividesN},
    {"e|(n-1)", Atom::EDividesNMinus1},
    {"m even", Atom::MEven},
    {"m odd", Atom::MOdd},
    {"p|(m-1)", Atom::PDividesMMinus1},
    {"p!|(m-1)", Atom::PNotDividesMMinus1},
    {"p!|(m-2)", Atom::PNotDividesMMinus2},
    {"p|(n-1)", Atom::PDividesNMinus1},
    {"p!|(n-1)", Atom::PNotDividesNMinus1},
    {"side=+1", Atom::SidePlus},
    {"side=-1", Atom::SideMinus},
}};

inline Atom parse_atom(std::string_view s) {
  for (auto [name, atom] : kAtomNames)
    if (name == s) return atom;
  throw std::invalid_argument("unknown condition atom '" + std::string(s) + "'");
}

inline std::string_view atom_name(Atom a) {
  for (auto [name, atom] : kAtomNames)
    if (atom == a) return name;
  return "?";
}

inline bool holds(Atom a, const GroupContext& c) {
  auto divides = [](int d, int x) { return x % d == 0; };
  switch (a) {
    case Atom::EIsOne: return c.e == 1;
    case Atom::ENotOne: return c.e != 1;
    case Atom::EIsRPlus1: return c.e == c.r + 1;
    case Atom::ENotRPlus1: return c.e != c.r + 1;
    case Atom::EIsRPlus2: return c.e == c.r + 2;
    case Atom::ENotRPlus2: return c.e != c.r + 2;
    case Atom::RBelow2: return c.r < 2;
    case Atom::RAtLeast2: return c.r >= 2;
    case Atom::MIsOne: return c.m == 1;
    case Atom::MAtLeast2: return c.m >= 2;
    case Atom::EDividesN: return divides(c.e, c.n);
    case Atom::ENotDividesN: return !divides(c.e, c.n);
    case Atom::EDividesNMinus1: return divides(c.e, c.n - 1);
    case Atom::MEven: return c.m % 2 == 0;
    case Atom::MOdd: return c.m % 2 != 0;
    case Atom::PDividesMMinus1: return divides(c.p, c.m - 1);
    case Atom::PNotDividesMMinus1: return !divides(c.p, c.m - 1);
    case Atom::PNotDividesMMinus2: return !divides(c.p, c.m - 2);
    case Atom::PDividesNMinus1: return divides(c.p, c.n - 1);
    case Atom::PNotDividesNMinus1: return !divides(c.p, c.n - 1);
    case Atom::SidePlus: return c.side == 1;
    case Atom::SideMinus: return c.side == -1;
  }
  return false;
}

/// Disjunction of conjunctions; an empty clause is true, an empty list false.
using Condition = std::vector<std::vector<Atom>>;

inline bool holds(const Condition& cond, const GroupContext& c) {
  return std::any_of(cond.begin(), cond.end(), [&](const std::vector<Atom>& clause) {
    return std::all_of(clause.begin(), clause.end(), [&](Atom a) { return holds(a, c); });
  });
}

inline std::string to_string(const Condition& cond) {
  std::string out;
  for (std::size_t i = 0; i < cond.size(); ++i) {
    if (i) out += " or ";
    out += '[';
    for (std::size_t j = 0; j < cond[i].size(); ++j) {
      if (j) out += ", ";
      out += atom_name(cond[i][j]);
    }
    out += ']';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Label templates.

struct LabelEntry {
  enum class Kind { Single, Repeat, Range };
  Kind kind = Kind::Single;
  IntExprPtr a;  // value, repeated value, or range start
  IntExprPtr b;  // repeat count or range end
};

struct LabelTemplate {
  bool is_symbol = false;
  std::vector<LabelEntry> rows[2];
};

using Label = std::variant<Partition, Symbol>;

inline std::string to_string(const Label& l) {
  if (const auto* p = std::get_if<Partition>(&l)) return "(" + p->str() + ")";
  return "(" + std::get<Symbol>(l).str() + ")";
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(' ');
  return std::string(s.substr(b, e - b + 1));
}

/// Position of `needle` outside parentheses, or npos.
inline std::size_t find_top_level(std::string_view s, std::string_view needle) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s.substr(i, needle.size()) == needle) return i;
  }
  return std::string_view::npos;
}

inline std::vector<LabelEntry> parse_label_row(std::string_view text) {
  std::vector<LabelEntry> out;
  const std::string row = trim(text);
  if (row.empty()) return out;
  std::size_t start = 0;
  while (start <= row.size()) {
    std::size_t comma = row.find(',', start);
    if (comma == std::string::npos) comma = row.size();
    const std::string tok = trim(std::string_view(row).substr(start, comma - start));
    if (tok.empty()) throw std::invalid_argument("empty entry in label template '" + row + "'");
    LabelEntry entry;
    if (auto pos = find_top_level(tok, ".."); pos != std::string::npos) {
      entry.kind = LabelEntry::Kind::Range;
      entry.a = parse_int_expr(tok.substr(0, pos));
      entry.b = parse_int_expr(tok.substr(pos + 2));
    } else if (auto pos2 = find_top_level(tok, "^"); pos2 != std::string::npos) {
      entry.kind = LabelEntry::Kind::Repeat;
      entry.a = parse_int_expr(tok.substr(0, pos2));
      entry.b = parse_int_expr(tok.substr(pos2 + 1));
    } else {
      entry.a = parse_int_expr(tok);
    }
    out.push_back(std::move(entry));
    start = comma + 1;
  }
  return out;
}

inline std::vector<int> expand_row(const std::vector<LabelEntry>& row, const Bindings& env) {
  std::vector<int> out;
  for (const auto& entry : row) {
    const auto a = evaluate(*entry.a, env);
    switch (entry.kind) {
      case LabelEntry::Kind::Single:
        out.push_back(static_cast<int>(a));
        break;
      case LabelEntry::Kind::Repeat: {
        const auto k = evaluate(*entry.b, env);
        if (k < 0) throw std::invalid_argument("negative repetition count in label");
        out.insert(out.end(), static_cast<std::size_t>(k), static_cast<int>(a));
        break;
      }
      case LabelEntry::Kind::Range: {
        const auto b = evaluate(*entry.b, env);
        for (auto v = a; v <= b; ++v) out.push_back(static_cast<int>(v));
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

inline LabelTemplate parse_label_template(std::string_view text) {
  LabelTemplate t;
  if (auto bar = text.find('|'); bar != std::string_view::npos) {
    t.is_symbol = true;
    t.rows[0] = detail::parse_label_row(text.substr(0, bar));
    t.rows[1] = detail::parse_label_row(text.substr(bar + 1));
  } else {
    t.rows[0] = detail::parse_label_row(text);
  }
  return t;
}

/// Partition entries must be positive (order is normalized); symbol rows are
/// sorted and must hold distinct non-negative entries.
inline Label bind_label(const LabelTemplate& t, const Bindings& env) {
  if (t.is_symbol)
    return Symbol::from_sets(detail::expand_row(t.rows[0], env), detail::expand_row(t.rows[1], env));
  std::vector<int> parts = detail::expand_row(t.rows[0], env);
  for (int v : parts)
    if (v <= 0) throw std::invalid_argument("partition label has a non-positive part");
  return Partition::normalized(std::move(parts));
}

// ---------------------------------------------------------------------------
// Table data.

struct RowSpec {
  std::string id;
  int slot = 1;
  Condition conditions;
  std::string label_text;
  std::optional<LabelTemplate> label;  // absent when the row has no label
  std::string degree_text;
  DegreeExpr degree;
};

struct TableRow : RowSpec {
  TableFamily family = TableFamily::A;
};

struct ExceptionRow : RowSpec {
  ExceptionFamily family = ExceptionFamily::PSL2;
};

struct TableData {
  std::string schema;
  std::vector<TableRow> rows;
  std::vector<ExceptionRow> exceptions;

  [[nodiscard]] std::vector<const TableRow*> rows_for(TableFamily f, int slot) const {
    std::vector<const TableRow*> out;
    for (const auto& r : rows)
      if (r.family == f && r.slot == slot) out.push_back(&r);
    return out;
  }
  [[nodiscard]] std::vector<const ExceptionRow*> exceptions_for(ExceptionFamily f, int slot = 0) const {
    std::vector<const ExceptionRow*> out;
    for (const auto& r : exceptions)
      if (r.family == f && (slot == 0 || r.slot == slot)) out.push_back(&r);
    return out;
  }
};

namespace detail {

inline void read_row_spec(const nlohmann::json& j, RowSpec& row) {
  row.id = j.at("id").get<std::string>();
  row.slot = j.at("slot").get<int>();
  if (row.slot != 1 && row.slot != 2) throw std::invalid_argument(row.id + ": slot must be 1 or 2");
  for (const auto& clause : j.at("conditions")) {
    std::vector<Atom> atoms;
    for (const auto& a : clause) atoms.push_back(parse_atom(a.get<std::string>()));
    row.conditions.push_back(std::move(atoms));
  }
  row.label_text = j.at("label").get<std::string>();
  if (!trim(row.label_text).empty()) row.label = parse_label_template(row.label_text);
  row.degree_text = j.at("degree").get<std::string>();
  row.degree = parse_degree_expr(row.degree_text);
}

}  // namespace detail

inline TableData load_table_data(std::string_view json_text) {
  const auto j = nlohmann::json::parse(json_text);
  TableData data;
  data.schema = j.at("schema").get<std::string>();
  for (const auto& rj : j.at("rows")) {
    TableRow row;
    detail::read_row_spec(rj, row);
    row.family = parse_table_family(rj.at("type").get<std::string>());
    data.rows.push_back(std::move(row));
  }
  for (const auto& rj : j.at("exceptions")) {
    ExceptionRow row;
    detail::read_row_spec(rj, row);
    row.family = parse_exception_family(rj.at("family").get<std::string>());
    data.exceptions.push_back(std::move(row));
  }
  return data;
}

/// The embedded tables, parsed once.
inline const TableData& table_data() {
  static const TableData data = load_table_data(kUnipotentTableJson);
  return data;
}

// ---------------------------------------------------------------------------
// Labels, blocks and the trivial character.

inline Bindings bindings_of(const GroupContext& c) {
  return {{"n", c.n}, {"m", c.m}, {"e", c.e}, {"r", c.r}, {"eps", c.eps}};
}

inline Partition single_row(int k) { return k == 0 ? Partition{} : Partition{k}; }

inline Symbol row_symbol(std::vector<int> top, std::vector<int> bottom) {
  return Symbol::from_sets(std::move(top), std::move(bottom));
}

/// Label of the trivial character with the closed-form e-core and e-cocore
/// (for type A the cocore slot repeats the core).
struct TrivialLabel {
  Label label;
  Label core;
  Label cocore;
};

inline TrivialLabel trivial_label(const GroupContext& c) {
  const bool divides = c.n % c.e == 0;
  const bool m_even = c.m % 2 == 0;
  switch (c.type) {
    case LieType::A:
    case LieType::A2:
      return {Partition{c.n}, single_row(c.r), single_row(c.r)};
    case LieType::B:
    case LieType::C: {
      Symbol core = normalize(row_symbol({c.r}, {}));
      return {row_symbol({c.n}, {}), core, core};
    }
    case LieType::D: {
      Symbol core = divides ? Symbol{} : normalize(row_symbol({c.r}, {0}));
      Symbol cocore;
      if (!divides)
        cocore = m_even ? normalize(row_symbol({c.r}, {0})) : normalize(row_symbol({0, c.r}, {}));
      else
        cocore = m_even ? Symbol{} : normalize(row_symbol({c.e}, {0}));
      return {row_symbol({c.n}, {0}), core, cocore};
    }
    case LieType::D2: {
      Symbol core = divides ? normalize(row_symbol({0, c.e}, {})) : normalize(row_symbol({0, c.r}, {}));
      Symbol cocore;
      if (!divides)
        cocore = m_even ? normalize(row_symbol({0, c.r}, {})) : normalize(row_symbol({c.r}, {0}));
      else
        cocore = m_even ? normalize(row_symbol({c.e}, {0})) : Symbol{};
      return {row_symbol({0, c.n}, {}), core, cocore};
    }
  }
  throw std::logic_error("unknown type");
}

/// The e-core (side +1, and always for type A) or e-cocore (side -1) that
/// labels the unipotent block of the character.
inline Label block_key(const Label& l, const GroupContext& c) {
  if (const auto* p = std::get_if<Partition>(&l)) return p_core(*p, c.e);
  const auto& s = std::get<Symbol>(l);
  return c.side == 1 ? e_core(s, c.e) : e_cocore(s, c.e);
}

/// Rank n and the type's defect class: odd (B, C), 0 mod 4 (D), 2 mod 4 (2D).
inline bool label_valid(const Label& l, const GroupContext& c) {
  if (const auto* p = std::get_if<Partition>(&l)) return family_of(c.type) == TableFamily::A && p->size() == c.n;
  if (family_of(c.type) == TableFamily::A) return false;
  const RankDefect rd = rank_defect(std::get<Symbol>(l));
  if (rd.rank != c.n) return false;
  switch (family_of(c.type)) {
    case TableFamily::BC: return rd.defect % 2 == 1;
    case TableFamily::D: return rd.defect % 4 == 0;
    case TableFamily::D2: return rd.defect % 4 == 2;
    case TableFamily::A: break;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Row verification.

inline bool row_applicable(const RowSpec& row, const GroupContext& c) { return holds(row.conditions, c); }

struct RowVerdict {
  std::string row_id;
  std::string label;          // bound label, or empty if binding failed
  bool label_ok = false;      // rank and defect class
  bool block_ok = false;      // same e-core / e-cocore as the trivial character
  bool degree_ok = false;     // evaluated degree nonzero and prime to p
  bool symbolic_ok = false;   // cyclotomic p-valuation agrees with the numeric one
  Rational degree = 0;
  Rational qprime = 0;        // |degree| with every factor of the characteristic removed
  int p_valuation = 0;
  std::string failure;        // first failed check, empty on success

  [[nodiscard]] bool pass() const { return failure.empty(); }
};

namespace detail {

inline void check_degree(const RowSpec& row, const GroupContext& c, RowVerdict& v) {
  const Bindings env = bindings_of(c);
  try {
    v.degree = evaluate(row.degree, env, Rational(c.q));
  } catch (const ZeroDenominator& ex) {
    v.failure = std::string("zero-denominator: ") + ex.what();
    return;
  }
  if (v.degree == 0) {
    v.failure = "degree evaluates to 0";
    return;
  }
  v.qprime = strip_prime(v.degree, c.ell);
  v.p_valuation = valuation(v.degree, c.p);
  v.degree_ok = v.p_valuation == 0;
  try {
    const OrderData ord = order_data(c.q, c.p);
    v.symbolic_ok = symbolic_p_valuation(factorize(row.degree, env), ord) == v.p_valuation;
  } catch (const ZeroDenominator&) {
    v.symbolic_ok = false;
  }
  if (!v.degree_ok)
    v.failure = "degree " + to_string(v.degree) + " has p-valuation " + std::to_string(v.p_valuation);
  else if (!v.symbolic_ok)
    v.failure = "cyclotomic p-valuation disagrees with the evaluated degree";
}

}  // namespace detail

/// Binds the row at the context and checks label, block and p'-degree.
/// Failures are reported in the verdict, never thrown.
inline RowVerdict verify_row(const RowSpec& row, const GroupContext& c) {
  RowVerdict v;
  v.row_id = row.id;
  if (!row.label) {
    detail::check_degree(row, c, v);
    v.label_ok = v.block_ok = true;
    return v;
  }
  Label label;
  try {
    label = bind_label(*row.label, bindings_of(c));
  } catch (const std::invalid_argument& ex) {
    v.failure = std::string("label does not bind: ") + ex.what();
    return v;
  }
  v.label = to_string(label);
  v.label_ok = label_valid(label, c);
  v.block_ok = v.label_ok && block_key(label, c) == block_key(trivial_label(c).label, c);
  detail::check_degree(row, c, v);
  if (!v.label_ok)
    v.failure = "label " + v.label + " has the wrong rank or defect class";
  else if (!v.block_ok)
    v.failure = "label " + v.label + " lies outside the principal block";
  return v;
}

// ---------------------------------------------------------------------------
// Coverage and distinctness.

enum class Distinctness { Distinct, Collision, HalfAmbiguous, Undecided };

inline std::string to_string(Distinctness d) {
  switch (d) {
    case Distinctness::Distinct: return "distinct";
    case Distinctness::Collision: return "collision";
    case Distinctness::HalfAmbiguous: return "half-factor-ambiguous";
    case Distinctness::Undecided: return "undecided";
  }
  return "?";
}

/// A ratio of exactly 2 is inconclusive only where the table may have
/// dropped factors of 1/2 (types B, C, D, 2D); type A degrees are complete.
inline Distinctness compare_qprime(const Rational& a, const Rational& b, bool halves_dropped = true) {
  if (a == b) return Distinctness::Collision;
  if (halves_dropped && (a == 2 * b || b == 2 * a)) return Distinctness::HalfAmbiguous;
  return Distinctness::Distinct;
}

struct CoverageVerdict {
  GroupContext context;
  std::string source;  // which rows served: "main", "Sp4evenQ", "D4special"
  std::vector<RowVerdict> slot1;  // applicable rows only
  std::vector<RowVerdict> slot2;
  std::optional<std::size_t> pick1;
  std::optional<std::size_t> pick2;
  Distinctness distinctness = Distinctness::Undecided;

  [[nodiscard]] bool covered() const { return !slot1.empty() && !slot2.empty(); }
  [[nodiscard]] bool rows_pass() const {
    auto ok = [](const std::vector<RowVerdict>& v) {
      return std::all_of(v.begin(), v.end(), [](const RowVerdict& r) { return r.pass(); });
    };
    return ok(slot1) && ok(slot2);
  }
  /// Half-factor ambiguity is reported separately and does not fail the cell.
  [[nodiscard]] bool pass() const {
    return covered() && rows_pass() &&
           (distinctness == Distinctness::Distinct || distinctness == Distinctness::HalfAmbiguous);
  }
};

namespace detail {

template <class Row>
std::vector<RowVerdict> verify_applicable(const std::vector<const Row*>& rows, const GroupContext& c) {
  std::vector<RowVerdict> out;
  for (const Row* row : rows)
    if (row_applicable(*row, c)) out.push_back(verify_row(*row, c));
  return out;
}

}  // namespace detail

/// Whether the context belongs to a family handled outside the main tables
/// or excluded altogether (PSL_2, and PSL_3 with p | q + eps).
inline bool excluded_from_coverage(const GroupContext& c) {
  if (family_of(c.type) != TableFamily::A) return false;
  return c.n == 2 || (c.n == 3 && (c.q + c.eps) % c.p == 0);
}

/// Two non-trivial p'-degree unipotent characters of the principal block
/// with different degrees, read from the rows applicable at the context.
inline CoverageVerdict coverage_and_distinctness(const GroupContext& c) {
  const TableData& data = table_data();
  CoverageVerdict v;
  v.context = c;
  const TableFamily fam = family_of(c.type);
  if (fam == TableFamily::D && c.n == 4) {
    v.source = "D4special";
    v.slot1 = detail::verify_applicable(data.exceptions_for(ExceptionFamily::D4special, 1), c);
    v.slot2 = detail::verify_applicable(data.exceptions_for(ExceptionFamily::D4special, 2), c);
  } else if (fam == TableFamily::BC && c.n == 2 && is_odd_power_of_two(c.q)) {
    v.source = "Sp4evenQ";
    v.slot1 = detail::verify_applicable(data.exceptions_for(ExceptionFamily::Sp4evenQ, 1), c);
    v.slot2 = detail::verify_applicable(data.rows_for(fam, 2), c);
  } else {
    v.source = "main";
    v.slot1 = detail::verify_applicable(data.rows_for(fam, 1), c);
    v.slot2 = detail::verify_applicable(data.rows_for(fam, 2), c);
  }
  // Any verified pair will do; prefer one whose q'-parts differ outright.
  auto rank = [](Distinctness d) { return d == Distinctness::Distinct ? 0 : d == Distinctness::HalfAmbiguous ? 1 : 2; };
  for (std::size_t i = 0; i < v.slot1.size(); ++i) {
    if (!v.slot1[i].pass()) continue;
    for (std::size_t j = 0; j < v.slot2.size(); ++j) {
      if (!v.slot2[j].pass()) continue;
      const Distinctness d = compare_qprime(v.slot1[i].qprime, v.slot2[j].qprime, fam != TableFamily::A);
      if (!v.pick1 || rank(d) < rank(v.distinctness)) {
        v.pick1 = i;
        v.pick2 = j;
        v.distinctness = d;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Type A degrees from the q-analogue of the hook formula.

/// |q0^{n(lambda)} prod_{i<=n} ((eps q0)^i - 1) / prod_cells ((eps q0)^h - 1)|.
inline Rational unipotent_degree_typeA(const Partition& lambda, int eps, const Rational& q0) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
  const Rational x = eps * q0;
  int nl = 0;
  for (int i = 0; i < lambda.length(); ++i) nl += i * lambda[i];
  Rational v = pow(q0, nl);
  for (int i = 1; i <= lambda.size(); ++i) v *= pow(x, i) - 1;
  for (int h : hook_lengths(lambda)) v /= pow(x, h) - 1;
  return v < 0 ? Rational(-v) : v;
}

struct TypeAMatch {
  GroupContext context;
  std::string row_id;
  std::string label;
  Rational table_value;
  Rational hook_value;  // q'-part of the q-analogue degree
  bool agrees = false;
};

/// Compares every applicable, bindable type A row at the context with the
/// q'-part of the q-analogue degree of its label.
inline std::vector<TypeAMatch> typeA_crosscheck(const GroupContext& c) {
  if (family_of(c.type) != TableFamily::A) throw std::invalid_argument("typeA_crosscheck needs type A or 2A");
  std::vector<TypeAMatch> out;
  const Bindings env = bindings_of(c);
  for (int slot : {1, 2})
    for (const TableRow* row : table_data().rows_for(TableFamily::A, slot)) {
      if (!row_applicable(*row, c)) continue;
      TypeAMatch mt;
      mt.context = c;
      mt.row_id = row->id;
      Partition lambda;
      try {
        lambda = std::get<Partition>(bind_label(*row->label, env));
        mt.table_value = evaluate(row->degree, env, Rational(c.q));
      } catch (const std::exception& ex) {
        mt.label = ex.what();
        out.push_back(std::move(mt));
        continue;
      }
      mt.label = to_string(Label(lambda));
      mt.hook_value = strip_prime(unipotent_degree_typeA(lambda, c.eps, Rational(c.q)), c.ell);
      mt.agrees = mt.hook_value == strip_prime(mt.table_value, c.ell);
      out.push_back(std::move(mt));
    }
  return out;
}

// ---------------------------------------------------------------------------
// D4 and the exceptional families.

struct D4Verdict {
  int q = 2;
  int p = 5;
  int e = 1;
  bool applicable = false;  // p divides |D_4(q)|, i.e. e <= 3
  Rational chi1 = 0;
  Rational chi2 = 0;
  std::string chi2_row;
  bool chi1_pprime = false;
  bool chi2_pprime = false;
  bool inequality = false;  // chi1 > 2 chi2
  bool blocks_ok = false;   // informational: both labels in the principal block
  [[nodiscard]] bool holds() const { return !applicable || (chi1_pprime && chi2_pprime && inequality); }
};

inline D4Verdict verify_d4(int q, int p) {
  const GroupContext c = make_context(LieType::D, 4, q, p);
  D4Verdict v;
  v.q = q;
  v.p = p;
  v.e = c.e;
  v.applicable = divides_group_order(c);
  if (!v.applicable) return v;
  const auto& data = table_data();
  auto first_applicable = [&](int slot) -> std::optional<RowVerdict> {
    for (const ExceptionRow* row : data.exceptions_for(ExceptionFamily::D4special, slot))
      if (row_applicable(*row, c)) return verify_row(*row, c);
    return std::nullopt;
  };
  const auto r1 = first_applicable(1);
  const auto r2 = first_applicable(2);
  if (!r1 || !r2) return v;
  v.chi1 = r1->degree;
  v.chi2 = r2->degree;
  v.chi2_row = r2->row_id;
  v.chi1_pprime = r1->degree_ok;
  v.chi2_pprime = r2->degree_ok;
  v.inequality = v.chi1 > 2 * v.chi2;
  v.blocks_ok = r1->block_ok && r2->block_ok;
  return v;
}

struct ExceptionVerdict {
  ExceptionFamily family = ExceptionFamily::PSL2;
  int q = 2;
  int p = 5;
  int sign = 1;             // eta or eps of the case checked
  bool applicable = false;
  Rational degree = 0;
  std::string detail;
  bool holds = false;
};

namespace detail {

/// Degree prime to p, above 1 and prime to q, hence not dividing q^k.
inline void check_semisimple_degree(ExceptionVerdict& v, int steinberg_exponent) {
  const Rational d = v.degree;
  if (boost::multiprecision::denominator(d) != 1 || d <= 1) {
    v.detail = "degree " + to_string(d) + " is not an integer above 1";
    return;
  }
  const BigInt deg = boost::multiprecision::numerator(d);
  const BigInt steinberg = boost::multiprecision::pow(BigInt(v.q), static_cast<unsigned>(steinberg_exponent));
  const bool pprime = deg % v.p != 0;
  const bool coprime_q = boost::multiprecision::gcd(deg, BigInt(v.q)) == 1;
  const bool not_dividing = steinberg % deg != 0;
  v.holds = pprime && coprime_q && not_dividing;
  if (!v.holds) v.detail = "degree " + to_string(d) + " fails the p'-, q'- or Steinberg test";
}

}  // namespace detail

/// Checks one exceptional family at (q, p). Families whose defining condition
/// fails at (q, p) come back with applicable = false.
inline std::vector<ExceptionVerdict> verify_exceptions(ExceptionFamily family, int q, int p) {
  (void)order_data(q, p);
  if (p < 5) throw std::invalid_argument("p must be at least 5");
  const auto& data = table_data();
  std::vector<ExceptionVerdict> out;
  auto base = [&](int sign) {
    ExceptionVerdict v;
    v.family = family;
    v.q = q;
    v.p = p;
    v.sign = sign;
    return v;
  };
  switch (family) {
    case ExceptionFamily::PSL2:
    case ExceptionFamily::PSL3eps: {
      const bool psl2 = family == ExceptionFamily::PSL2;
      for (int sign : {1, -1}) {
        if ((q + sign) % p != 0) continue;
        ExceptionVerdict v = base(sign);
        v.applicable = true;
        const ExceptionRow& row = *data.exceptions_for(family).front();
        v.degree = evaluate(row.degree, Bindings{{"eps", sign}}, Rational(q));
        detail::check_semisimple_degree(v, psl2 ? 1 : 3);
        out.push_back(std::move(v));
      }
      break;
    }
    case ExceptionFamily::SmallA3: {
      for (int sign : {1, -1}) {
        const GroupContext c = make_context(sign == 1 ? LieType::A : LieType::A2, 3, q, p);
        if ((q + sign) % p == 0 || !divides_group_order(c)) continue;
        ExceptionVerdict v = base(sign);
        v.applicable = true;
        const RowVerdict rv = verify_row(*data.exceptions_for(family).front(), c);
        v.degree = rv.degree;
        const Rational hook = unipotent_degree_typeA(Partition{2, 1}, sign, Rational(q));
        v.holds = rv.pass() && v.degree > 1 && v.degree == hook;
        if (!v.holds) v.detail = rv.failure.empty() ? "degree disagrees with the q-hook formula" : rv.failure;
        out.push_back(std::move(v));
      }
      break;
    }
    case ExceptionFamily::Sp4evenQ: {
      if (!is_odd_power_of_two(q)) break;
      const GroupContext c = make_context(LieType::B, 2, q, p);
      if (!divides_group_order(c) || !simple_group_case(c)) break;
      ExceptionVerdict v = base(c.side);
      v.applicable = true;
      std::vector<RowVerdict> rows;
      for (const ExceptionRow* row : data.exceptions_for(family))
        if (row_applicable(*row, c)) rows.push_back(verify_row(*row, c));
      v.holds = rows.size() == 1 && rows.front().pass() && rows.front().degree > 1;
      if (!rows.empty()) v.degree = rows.front().degree;
      if (!v.holds) v.detail = rows.size() != 1 ? "expected exactly one applicable row" : rows.front().failure;
      out.push_back(std::move(v));
      break;
    }
    case ExceptionFamily::D4special: {
      const D4Verdict d = verify_d4(q, p);
      if (!d.applicable) break;
      ExceptionVerdict v = base(1);
      v.applicable = true;
      v.degree = d.chi2;
      v.holds = d.holds();
      if (!v.holds) v.detail = "Steinberg degree does not exceed twice " + d.chi2_row;
      out.push_back(std::move(v));
      break;
    }
  }
  return out;
}

}  // namespace blockdeg
