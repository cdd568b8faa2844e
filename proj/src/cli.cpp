#include "tangentia/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "tangentia/census.hpp"
#include "tangentia/cover.hpp"
#include "tangentia/graphs.hpp"
#include "tangentia/gw.hpp"
#include "tangentia/lattice.hpp"
#include "tangentia/torsion.hpp"
#include "tangentia/verify.hpp"

namespace tangentia {

using nlohmann::ordered_json;

namespace {

struct CommandInfo {
  Command command;
  const char* name;
  std::set<std::string> keys;
  bool csv;
};

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table{
      {Command::MCover, "mcover", {"w", "d"}, true},
      {Command::Instantons, "instantons", {"w", "dmax"}, true},
      {Command::Integrality, "integrality", {"wmax", "dmax"}, true},
      {Command::Torsion, "torsion", {"strata", "solve", "class", "m", "points"}, true},
      {Command::Classes, "classes", {"degree"}, true},
      {Command::Census, "census", {"degree", "stratum", "aggregate"}, false},
      {Command::CheckGw, "check-gw", {"degree"}, false},
      {Command::Graphs, "graphs", {"n", "r", "weights"}, false},
      {Command::VerifyAll, "verify-all", {}, false},
  };
  return table;
}

const CommandInfo& info(Command c) {
  for (const auto& i : commands())
    if (i.command == c) return i;
  throw std::logic_error("unregistered command");
}

// Thrown for anything that should end in a usage message and exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Params {
public:
  explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

  bool has(const std::string& k) const { return p_.contains(k); }

  const std::string& str(const std::string& k) const {
    const auto it = p_.find(k);
    if (it == p_.end()) throw UsageError("missing --" + k);
    return it->second;
  }

  long integer(const std::string& k) const { return parse_long(k, str(k)); }

  long integer_or(const std::string& k, long fallback) const { return has(k) ? integer(k) : fallback; }

  std::vector<long> list(const std::string& k) const {
    std::vector<long> out;
    std::stringstream ss(str(k));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_long(k, item));
    return out;
  }

private:
  static long parse_long(const std::string& k, const std::string& v) {
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v.size()) throw UsageError("--" + k + " expects an integer, got '" + v + "'");
    return x;
  }

  const std::map<std::string, std::string>& p_;
};

ordered_json point_json(const TorsionPoint& p) {
  return {{"x", p.x().str()}, {"y", p.y().str()}, {"order", p.order()}};
}

// ---------------------------------------------------------------- covers

int cmd_mcover(const Params& p, Format f, std::ostream& out) {
  const long w = p.integer("w"), d = p.integer("d");
  if (w < 1 || d < 1) throw UsageError("--w and --d must be >= 1");
  const Rat v = multiple_cover(w, d);
  if (f == Format::Json)
    out << ordered_json{{"w", w}, {"d", d}, {"value", v.str()}}.dump() << "\n";
  else if (f == Format::Csv)
    out << "w,d,value\n" << w << "," << d << "," << v << "\n";
  else
    out << "M_" << w << "[" << d << "] = " << v << "\n";
  return kExitOk;
}

int cmd_instantons(const Params& p, Format f, std::ostream& out) {
  const long w = p.integer("w"), d_max = p.integer("dmax");
  if (w < 1 || d_max < 1) throw UsageError("--w and --dmax must be >= 1");
  const auto m = instanton_numbers(w, d_max);
  if (f == Format::Json) {
    ordered_json values = ordered_json::array();
    for (const auto& v : m) values.push_back(v.str());
    out << ordered_json{{"w", w}, {"dmax", d_max}, {"values", values}}.dump() << "\n";
  } else if (f == Format::Csv) {
    out << "w,d,value\n";
    for (long d = 1; d <= d_max; ++d) out << w << "," << d << "," << m[static_cast<std::size_t>(d - 1)] << "\n";
  } else {
    for (long d = 1; d <= d_max; ++d) out << "m_" << w << "[" << d << "] = " << m[static_cast<std::size_t>(d - 1)] << "\n";
  }
  return kExitOk;
}

int cmd_integrality(const Params& p, Format f, std::ostream& out) {
  const long w_max = p.integer("wmax"), d_max = p.integer("dmax");
  if (w_max < 1 || d_max < 1) throw UsageError("--wmax and --dmax must be >= 1");
  const auto report = integrality_report(w_max, d_max);
  if (f == Format::Json) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries)
      entries.push_back({{"w", e.w},
                         {"d", e.d},
                         {"value", e.value.str()},
                         {"integer", e.integer},
                         {"positive", e.positive},
                         {"in_observed_range", e.in_observed_range},
                         {"pass", e.pass}});
    out << ordered_json{{"w_max", w_max}, {"d_max", d_max}, {"all_pass", report.all_pass()}, {"entries", entries}}.dump()
        << "\n";
  } else if (f == Format::Csv) {
    out << "w,d,value,integer,positive,in_observed_range,pass\n";
    for (const auto& e : report.entries)
      out << e.w << "," << e.d << "," << e.value << "," << e.integer << "," << e.positive << "," << e.in_observed_range
          << "," << e.pass << "\n";
  } else {
    for (const auto& e : report.entries) {
      out << "m_" << e.w << "[" << e.d << "] = " << e.value << "  " << (e.pass ? "PASS" : "FAIL");
      if (!e.in_observed_range) out << " (w < 3: outside observed range)";
      out << "\n";
    }
    out << (report.all_pass() ? "all pass" : "some entries FAIL") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- torsion

int cmd_torsion(const Params& p, Format f, std::ostream& out) {
  const int modes = int(p.has("strata")) + int(p.has("solve")) + int(p.has("points"));
  if (modes != 1) throw UsageError("torsion needs exactly one of --strata, --solve, --points");

  if (p.has("strata")) {
    const auto s = stratum_sizes();
    if (f == Format::Json)
      out << ordered_json{{"T1", s.t1}, {"T2", s.t2}, {"T3", s.t3}}.dump() << "\n";
    else if (f == Format::Csv)
      out << "stratum,size\nT1," << s.t1 << "\nT2," << s.t2 << "\nT3," << s.t3 << "\n";
    else
      out << "T1 " << s.t1 << "\nT2 " << s.t2 << "\nT3 " << s.t3 << "\n";
    return kExitOk;
  }

  if (p.has("points")) {
    const long n = p.integer("points");
    if (n < 1) throw UsageError("--points must be >= 1");
    const auto pts = torsion_points(n);
    if (f == Format::Json) {
      ordered_json arr = ordered_json::array();
      for (const auto& pt : pts) arr.push_back(point_json(pt));
      out << arr.dump() << "\n";
    } else {
      if (f == Format::Csv) out << "x,y,order\n";
      for (const auto& pt : pts)
        out << pt.x() << (f == Format::Csv ? "," : " ") << pt.y() << (f == Format::Csv ? "," : " ") << pt.order() << "\n";
    }
    return kExitOk;
  }

  DivisorClass cls;
  try {
    cls = DivisorClass::parse(p.str("class"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const long m = p.integer_or("m", 4);
  if (m < 1) throw UsageError("--m must be >= 1");
  const TorsionPoint c = restriction_class(cls);
  const auto sols = solve_division(c, m);
  std::map<std::string, long> split{{"T1", 0}, {"T2", 0}, {"T3", 0}, {"none", 0}};
  for (const auto& s : sols) ++split[to_string(stratify(s))];

  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : sols) {
      auto j = point_json(s);
      j["stratum"] = to_string(stratify(s));
      arr.push_back(j);
    }
    ordered_json jsplit;
    for (const auto& k : {"T1", "T2", "T3", "none"}) jsplit[k] = split[k];
    out << ordered_json{{"class", cls.str()},
                        {"restriction", point_json(c)},
                        {"m", m},
                        {"solutions", arr},
                        {"split", jsplit}}
               .dump()
        << "\n";
  } else if (f == Format::Csv) {
    out << "x,y,order,stratum\n";
    for (const auto& s : sols) out << s.x() << "," << s.y() << "," << s.order() << "," << to_string(stratify(s)) << "\n";
  } else {
    out << "class " << cls.str() << " restricts to " << c.str() << "; solutions of " << m << "P = c:\n";
    for (const auto& s : sols) out << "  " << s.str() << " order " << s.order() << " " << to_string(stratify(s)) << "\n";
    out << "split T1=" << split["T1"] << " T2=" << split["T2"] << " T3=" << split["T3"] << " none=" << split["none"]
        << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- classes

int cmd_classes(const Params& p, Format f, std::ostream& out) {
  const long degree = p.integer_or("degree", 4);
  if (degree < 1) throw UsageError("--degree must be >= 1");
  const auto table = enumerate_classes(degree);
  if (f == Format::Csv) {
    out << "e,a1,a2,a3,a4,a5,a6,pa,count\n";
    for (const auto& r : table.rows) {
      out << r.e;
      for (long a : r.a_multiset) out << "," << a;
      out << "," << r.p_a << "," << r.ordered_count << "\n";
    }
  } else if (f == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows)
      rows.push_back({{"e", r.e}, {"a", r.a_multiset}, {"pa", r.p_a}, {"count", r.ordered_count}});
    out << ordered_json{{"degree", degree},
                        {"validated", table.validated},
                        {"rows", rows},
                        {"totals", {{"pa0", table.ordered_total(0)}, {"pa1", table.ordered_total(1)}}}}
               .dump()
        << "\n";
  } else {
    if (!table.validated) out << "# degree " << degree << ": unvalidated search bounds\n";
    out << " e  [a]            p_a  #\n";
    for (const auto& r : table.rows) {
      std::string a = "[";
      for (std::size_t i = 0; i < r.a_multiset.size(); ++i) a += (i ? "," : "") + std::to_string(r.a_multiset[i]);
      a += "]";
      out << std::setw(2) << r.e << "  " << std::left << std::setw(15) << a << std::right << std::setw(3) << r.p_a
          << "  " << r.ordered_count << "\n";
    }
    out << "totals: p_a=0 " << table.ordered_total(0) << ", p_a=1 " << table.ordered_total(1) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- census

ordered_json component_json(const CensusComponent& c) {
  ordered_json j;
  if (const auto* i = std::get_if<ImmersedCurve>(&c.kind)) {
    j = {{"kind", "immersed"}, {"degree", i->degree}};
  } else if (const auto* m = std::get_if<MultipleCover>(&c.kind)) {
    j = {{"kind", "multiple_cover"}, {"base_degree", m->base_degree}, {"multiplicity", m->multiplicity}};
  } else if (const auto* r = std::get_if<ReduciblePair>(&c.kind)) {
    j = {{"kind", "reducible_pair"}, {"d1", r->d1}, {"d2", r->d2}};
  }
  j["count"] = c.count;
  return j;
}

int cmd_census(const Params& p, Format f, bool special, std::ostream& out) {
  if (p.has("aggregate")) {
    if (p.has("degree") || p.has("stratum")) throw UsageError("--aggregate takes no other parameters");
    const auto n = aggregate_N();
    const long m1 = count_M4(Stratum::T1), m2 = count_M4(Stratum::T2), m3 = count_M4(Stratum::T3);
    const auto s = stratum_sizes();
    if (f == Format::Json) {
      out << ordered_json{{"N", {n.n1, n.n2, n.n3}},
                          {"strata", {{"T1", s.t1}, {"T2", s.t2}, {"T3", s.t3}}},
                          {"M4", {{"T1", m1}, {"T2", m2}, {"T3", m3}}}}
                 .dump()
          << "\n";
    } else {
      out << "N = (" << n.n1 << ", " << n.n2 << ", " << n.n3 << ")\n";
      out << "#M_4,P = " << m1 << " (T1), " << m2 << " (T2), " << m3 << " (T3)\n";
    }
    return kExitOk;
  }
  const long degree = p.integer("degree");
  CensusStratum stratum;
  CensusEntry entry;
  try {
    stratum = parse_census_stratum(p.str("stratum"));
    entry = boundary_census(degree, stratum, special);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f == Format::Json) {
    ordered_json comps = ordered_json::array();
    for (const auto& c : entry.components) comps.push_back(component_json(c));
    out << ordered_json{{"degree", degree},
                        {"stratum", to_string(stratum)},
                        {"special_cubic", special},
                        {"components", comps}}
               .dump()
        << "\n";
  } else {
    out << "degree " << degree << " at " << to_string(stratum) << (special ? " (special cubic)" : "") << ":\n";
    for (const auto& c : entry.components) out << "  " << c.count << " x " << describe(c.kind) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- gw

int cmd_check_gw(const Params& p, Format f, bool special, std::ostream& out) {
  const long d = p.integer("degree");
  GwLedger ledger;
  try {
    ledger = build_ledger(d, special);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const bool ok = ledger.matches() && ledger.recompute_total() == ledger.total;
  if (f == Format::Json) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : ledger.lines)
      lines.push_back({{"stratum", l.stratum},
                       {"multiplicity", l.multiplicity},
                       {"contribution", l.contribution.str()},
                       {"provenance", l.provenance}});
    out << ordered_json{{"degree", d},
                        {"lines", lines},
                        {"total", ledger.total.str()},
                        {"reference", ledger.reference.str()},
                        {"notes", ledger.notes},
                        {"status", ok ? "PASS" : "FAIL"}}
               .dump()
        << "\n";
  } else {
    out << "I_" << d << " ledger\n";
    for (const auto& l : ledger.lines)
      out << "  " << l.stratum << ": " << l.multiplicity << " x " << l.contribution << "    [" << l.provenance << "]\n";
    for (const auto& n : ledger.notes) out << "note: " << n << "\n";
    out << "reference " << ledger.reference << "\n";
    out << "total " << ledger.total << " " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- graphs

int cmd_graphs(const Params& p, Format f, std::ostream& out) {
  const long n = p.integer("n"), r = p.integer("r");
  if (n < 0 || n > kMaxLevels || r < 1 || r > kMaxRoots)
    throw UsageError("graphs needs 0 <= n <= " + std::to_string(kMaxLevels) + " and 1 <= r <= " +
                     std::to_string(kMaxRoots));
  std::vector<long> weights;
  if (p.has("weights")) {
    weights = p.list("weights");
    if (static_cast<long>(weights.size()) != r) throw UsageError("--weights needs exactly r entries");
    if (std::any_of(weights.begin(), weights.end(), [](long w) { return w < 1; }))
      throw UsageError("--weights entries must be positive");
  }
  const auto types = enumerate_types(static_cast<int>(n), static_cast<int>(r));
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : types) {
      ordered_json edges = ordered_json::array();
      for (int v = 0; v < t.vertex_count(); ++v)
        if (t.parent[static_cast<std::size_t>(v)] >= 0) edges.push_back({v, t.parent[static_cast<std::size_t>(v)]});
      ordered_json j{{"layers", t.layers}, {"parent", t.parent}, {"leaf_order", t.leaf_order}, {"edges", edges}};
      if (!weights.empty()) j["mu"] = propagate_weights(t, weights).mu;
      arr.push_back(j);
    }
    out << ordered_json{{"n", n}, {"r", r}, {"count", types.size()}, {"types", arr}}.dump() << "\n";
  } else {
    out << "G_{" << n << "," << r << "}: " << types.size() << " type(s)\n";
    for (std::size_t i = 0; i < types.size(); ++i) {
      out << "type " << i + 1 << ":\n";
      const auto mu = weights.empty() ? std::vector<long>{} : propagate_weights(types[i], weights).mu;
      std::istringstream tree(render_tree(types[i], mu));
      for (std::string line; std::getline(tree, line);) out << "  " << line << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify_all(Format f, std::ostream& out) {
  const auto results = verify_all();
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results)
      arr.push_back(
          {{"id", r.id}, {"name", r.name}, {"anchor", r.anchor}, {"status", r.passed ? "PASS" : "FAIL"}, {"detail", r.detail}});
    out << ordered_json{{"checks", arr}, {"status", ok ? "PASS" : "FAIL"}}.dump() << "\n";
  } else {
    for (const auto& r : results)
      out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << " " << r.name << " [" << r.anchor << "] "
          << r.detail << "\n";
    out << (ok ? "all checks PASS" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& i : commands())
    if (name == i.name) return i.command;
  return std::nullopt;
}

std::string to_string(Command c) { return info(c).name; }

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err, const char* env_format) {
  const CommandInfo& ci = info(config.command);
  try {
    for (const auto& [key, value] : config.params)
      if (!ci.keys.contains(key)) throw UsageError("unknown parameter --" + key + " for " + ci.name);

    Format format = Format::Text;
    if (config.format) {
      format = *config.format;
      if (format == Format::Csv && !ci.csv) throw UsageError(std::string(ci.name) + " has no CSV output");
    } else if (env_format && *env_format) {
      const auto f = parse_format(env_format);
      if (!f) throw UsageError(std::string("TANGENTIA_FORMAT must be text, json or csv, got '") + env_format + "'");
      format = (*f == Format::Csv && !ci.csv) ? Format::Text : *f;
    }

    const Params p(config.params);
    switch (config.command) {
      case Command::MCover: return cmd_mcover(p, format, out);
      case Command::Instantons: return cmd_instantons(p, format, out);
      case Command::Integrality: return cmd_integrality(p, format, out);
      case Command::Torsion: return cmd_torsion(p, format, out);
      case Command::Classes: return cmd_classes(p, format, out);
      case Command::Census: return cmd_census(p, format, config.special_cubic, out);
      case Command::CheckGw: return cmd_check_gw(p, format, config.special_cubic, out);
      case Command::Graphs: return cmd_graphs(p, format, out);
      case Command::VerifyAll: return cmd_verify_all(format, out);
    }
  } catch (const UsageError& e) {
    err << "tangentia " << ci.name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "tangentia " << ci.name << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tangentia
