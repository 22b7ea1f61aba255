#include "dcb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "dcb/canonical.hpp"
#include "dcb/criteria.hpp"
#include "dcb/errors.hpp"
#include "dcb/verify.hpp"

namespace dcb {
namespace {

using nlohmann::json;

// Thrown for inputs that parse but cannot be served (size cap, cache mismatch).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- Input grammars ---------------------------------------------------------

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + " '" + text + "' is not an integer");
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
  if (out.empty() || text.back() == ',') throw ParseError(what + " '" + text + "' is malformed");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw ParseError("range '" + text + "' is not of the form lo:hi");
  const int lo = parse_int(text.substr(0, colon), "range bound");
  const int hi = parse_int(text.substr(colon + 1), "range bound");
  if (lo > hi) throw ParseError("range '" + text + "' is empty");
  return {lo, hi};
}

// --- JSON helpers -----------------------------------------------------------

json coef_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      terms.push_back({e, c.convert_to<long long>()});
    else
      terms.push_back({e, c.str()});
  }
  return terms;
}

LaurentPoly coef_from_json(const json& terms) {
  std::vector<std::pair<int, BigInt>> out;
  for (const auto& t : terms) {
    const int e = t.at(0).get<int>();
    const auto& c = t.at(1);
    out.emplace_back(e, c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>()));
  }
  return LaurentPoly::from_terms(std::move(out));
}

json expansion_json(const AlgebraElement& x) {
  json arr = json::array();
  for (const auto& p : x.ordered_labels())
    arr.push_back({{"label", p.to_string()}, {"coef", coef_json(x.coefficient(p))}});
  return arr;
}

std::string int_list_text(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

// --- Size guard and cache ---------------------------------------------------

void guard_size(const Weight& w, std::size_t cap) {
  const std::size_t n = count_by_weight(w, cap);
  if (n > cap)
    throw UsageError("weight class " + w.to_string() + " has more than " + std::to_string(cap) +
                     " multisegments; raise --max-size to compute it anyway");
}

std::filesystem::path cache_file(const std::string& dir, const Weight& w) {
  std::string name = "weight";
  for (const auto& [pos, cnt] : w.counts())
    name += "_" + (pos < 0 ? "m" + std::to_string(-pos) : std::to_string(pos)) + "x" +
            std::to_string(cnt);
  return std::filesystem::path(dir) / (name + ".json");
}

json table_json(const DcbTable& table) {
  json basis = json::array();
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    basis.push_back({{"label", table.labels[i].to_string()},
                     {"expansion", expansion_json(table.expansions[i])}});
  return basis;
}

void load_cache(const std::filesystem::path& file, const Weight& w) {
  std::ifstream in(file);
  json doc;
  try {
    in >> doc;
    if (doc.at("weight").get<std::string>() != w.to_string())
      throw UsageError("cache file " + file.string() + " belongs to another weight");
    for (const auto& entry : doc.at("basis")) {
      AlgebraElement g;
      for (const auto& t : entry.at("expansion"))
        g.add_term(parse_multisegment(t.at("label").get<std::string>()), coef_from_json(t.at("coef")));
      default_basis().preload(parse_multisegment(entry.at("label").get<std::string>()), std::move(g));
    }
  } catch (const json::exception& e) {
    throw UsageError("cache file " + file.string() + " is unreadable: " + e.what());
  }
}

// --- Commands ---------------------------------------------------------------

struct Common {
  bool json = false;
  std::size_t max_size = 5000;
};

int cmd_dcb(const std::string& weight_text, const std::string& cache_dir, const Common& c,
            std::ostream& out) {
  const Weight w = parse_weight(weight_text);
  guard_size(w, c.max_size);
  std::filesystem::path file;
  if (!cache_dir.empty()) {
    file = cache_file(cache_dir, w);
    if (std::filesystem::exists(file)) load_cache(file, w);
  }
  const DcbTable table = dcb_table(w);
  if (!file.empty() && !std::filesystem::exists(file)) {
    std::filesystem::create_directories(cache_dir);
    std::ofstream(file) << json{{"weight", w.to_string()}, {"basis", table_json(table)}}.dump()
                        << "\n";
  }
  if (c.json) {
    out << json{{"weight", w.to_string()}, {"basis", table_json(table)}}.dump() << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    out << "G*(" << table.labels[i].to_string() << ") = " << table.expansions[i].to_string() << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& m_text, const std::string& n_text, const Common& c,
                  std::ostream& out) {
  const Multisegment m = parse_multisegment(m_text);
  const Multisegment n = parse_multisegment(n_text);
  guard_size(m.weight() += n.weight(), c.max_size);
  const AlgebraElement product = multiply(dual_canonical(m), dual_canonical(n));
  AlgebraElement coeffs;
  for (const auto& [p, k] : expand_in_dcb(product)) coeffs.add_term(p, k);
  const bool simple = membership_up_to_power(product).has_value();
  const auto labels = coeffs.ordered_labels();

  if (c.json) {
    json factors = json::array();
    for (const auto& p : labels) {
      const LaurentPoly k = coeffs.coefficient(p);
      factors.push_back({{"label", p.to_string()},
                         {"coef", coef_json(k)},
                         {"multiplicity", k.at_one().convert_to<long long>()}});
    }
    out << json{{"m", m.to_string()}, {"n", n.to_string()}, {"factors", factors},
                {"simple", simple}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "G*(" << m.to_string() << ") G*(" << n.to_string() << ") =\n";
  std::size_t width = 0;
  for (const auto& p : labels) width = std::max(width, coeffs.coefficient(p).to_string().size());
  for (const auto& p : labels) {
    const LaurentPoly k = coeffs.coefficient(p);
    out << "  " << std::left << std::setw(static_cast<int>(width)) << k.to_string() << "  G*("
        << p.to_string() << ")  multiplicity " << k.at_one() << "\n";
  }
  out << (simple ? "SIMPLE" : "NOT SIMPLE") << "\n";
  return kExitOk;
}

std::string witness_text(const std::vector<int>& w) {
  static const char* names[] = {"i", "j", "k", "l"};
  std::string lhs, rhs;
  for (std::size_t t = 0; t < w.size(); ++t) {
    lhs += (t ? " < " : "") + std::string(names[t]);
    rhs += (t ? " < " : "") + std::to_string(w[t]);
  }
  return lhs + ": " + rhs;
}

int cmd_irred(const std::string& alpha_text, int a, const std::string& beta_text, int b,
              bool verify, const Common& c, std::ostream& out) {
  const Partition alpha = parse_partition(alpha_text);
  const Partition beta = parse_partition(beta_text);
  const bool irreducible = irreducible_pair(alpha, a, beta, b);
  const auto witness = reducibility_witness(alpha, a, beta, b);
  const CoFiniteSet si = evaluation_set(alpha, a);
  const CoFiniteSet sj = evaluation_set(beta, b);
  bool agrees = true;
  if (verify) agrees = algebraic_irreducible({{alpha, a}, {beta, b}}) == irreducible;

  if (c.json) {
    json doc{{"alpha", alpha.to_string()}, {"a", a},          {"beta", beta.to_string()},
             {"b", b},                     {"I", si.to_string()}, {"J", sj.to_string()},
             {"irreducible", irreducible}, {"witness", witness ? json(*witness) : json(nullptr)}};
    if (verify) doc["oracle_agrees"] = agrees;
    out << doc.dump() << "\n";
  } else {
    out << (irreducible ? "IRREDUCIBLE" : "REDUCIBLE") << "\n";
    out << "I = " << si.to_string() << "\nJ = " << sj.to_string() << "\n";
    if (witness) out << "witness " << witness_text(*witness) << "\n";
    if (verify) out << (agrees ? "oracle agrees" : "ORACLE DISAGREES") << "\n";
  }
  return agrees ? kExitOk : kExitPropertyFailure;
}

int cmd_scan(const std::string& alpha_text, const std::string& beta_text,
             const std::string& range_text, bool verify, const Common& c, std::ostream& out) {
  const Partition alpha = parse_partition(alpha_text);
  const Partition beta = parse_partition(beta_text);
  const auto [lo, hi] = parse_range(range_text);
  std::vector<int> reducible;
  json rows = json::array();
  bool all_agree = true;
  std::ostringstream text;
  for (int d = lo; d <= hi; ++d) {
    const bool irr = irreducible_pair(alpha, 0, beta, d);
    if (!irr) reducible.push_back(d);
    std::string line = (d >= 0 ? " " : "") + std::to_string(d) + "  " +
                       (irr ? "irreducible" : "reducible");
    json row{{"shift", d}, {"irreducible", irr}};
    if (verify) {
      const bool agrees = algebraic_irreducible({{alpha, 0}, {beta, d}}) == irr;
      all_agree = all_agree && agrees;
      line += agrees ? "  (oracle agrees)" : "  ORACLE DISAGREES";
      row["oracle_agrees"] = agrees;
    }
    text << line << "\n";
    rows.push_back(row);
  }
  if (c.json) {
    json doc{{"alpha", alpha.to_string()}, {"beta", beta.to_string()}, {"range", {lo, hi}},
             {"scan", rows},               {"reducible", reducible}};
    if (verify) doc["oracle_agrees"] = all_agree;
    out << doc.dump() << "\n";
  } else {
    out << "alpha = " << alpha.to_string() << ", beta = " << beta.to_string()
        << ", shift = b - a\n"
        << text.str() << "reducible at: ";
    for (std::size_t i = 0; i < reducible.size(); ++i) out << (i ? "," : "") << reducible[i];
    out << "\n";
    if (verify) out << (all_agree ? "oracle agrees on every shift" : "ORACLE DISAGREES") << "\n";
  }
  return all_agree ? kExitOk : kExitPropertyFailure;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, const Common& c,
               std::ostream& out) {
  const SuiteReport r = run_suite(suite, bounds);
  if (c.json) {
    out << json{{"suite", r.suite},
                {"passed", r.passed()},
                {"checks", r.checks},
                {"failures", r.failures}}
               .dump()
        << "\n";
  } else {
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks
        << " checks, " << r.failures.size() << " failures)\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
  return r.passed() ? kExitOk : kExitPropertyFailure;
}

int cmd_minor(const std::string& rows_text, const std::string& cols_text, const Common& c,
              std::ostream& out) {
  const auto rows = parse_int_list(rows_text, "row index");
  const auto cols = parse_int_list(cols_text, "column index");
  const AlgebraElement delta = quantum_minor(rows, cols);
  const auto label = minor_label(rows, cols);
  bool confirmed = true;
  if (label) confirmed = dual_canonical(*label) == delta;

  if (c.json) {
    json doc{{"rows", rows}, {"cols", cols}, {"expansion", expansion_json(delta)}};
    doc["label"] = label ? json(label->to_string()) : json(nullptr);
    if (label) doc["confirmed"] = confirmed;
    out << doc.dump() << "\n";
  } else {
    out << "Delta(" << int_list_text(rows) << ", " << int_list_text(cols)
        << ") = " << delta.to_string() << "\n";
    if (label)
      out << "label " << label->to_string() << ": "
          << (confirmed ? "equals G*(" + label->to_string() + ")" : "DIFFERS FROM G*") << "\n";
  }
  return confirmed ? kExitOk : kExitPropertyFailure;
}

// CLI11 reads "-8:8" as an option name; glue such values onto their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (i + 1 < args.size() && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos) {
      const std::string& next = args[i + 1];
      if (next.size() >= 2 && next[0] == '-' && std::isdigit(static_cast<unsigned char>(next[1]))) {
        out.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual canonical basis and irreducibility calculator", "bzcalc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Print JSON instead of text");
    sub->add_option("--max-size", common.max_size,
                    "Refuse weight classes with more multisegments than this")
        ->capture_default_str();
  };

  std::string weight, cache_dir;
  auto* dcb = app.add_subcommand("dcb", "Dual canonical basis of one weight class on {E*}");
  dcb->add_option("--weight", weight, "Weight as pos:count,... e.g. 0:1,1:2,2:1")->required();
  dcb->add_option("--cache-dir", cache_dir, "Directory of cached weight-class tables");
  add_common(dcb);

  std::string m_text, n_text;
  auto* dec = app.add_subcommand("decompose", "Expand G*(m) G*(n) on the dual canonical basis");
  dec->add_option("--m", m_text, "Multisegment, e.g. \"[1]+[2,3]\"")->required();
  dec->add_option("--n", n_text, "Multisegment")->required();
  add_common(dec);

  std::string alpha, beta, range;
  int a = 0, b = 0;
  bool verify_flag = false;
  auto* irred = app.add_subcommand("irred", "Irreducibility of S_alpha(t^a) ⊙ S_beta(t^b)");
  irred->add_option("--alpha", alpha, "Partition, e.g. 4,2")->required();
  irred->add_option("--a", a, "Shift of the first module")->required();
  irred->add_option("--beta", beta, "Partition")->required();
  irred->add_option("--b", b, "Shift of the second module")->required();
  irred->add_flag("--verify", verify_flag, "Re-derive the verdict algebraically");
  add_common(irred);

  auto* scan = app.add_subcommand("scan", "Irreducibility verdicts over a range of b - a");
  scan->add_option("--alpha", alpha, "Partition")->required();
  scan->add_option("--beta", beta, "Partition")->required();
  scan->add_option("--range", range, "Closed range lo:hi of b - a")->required();
  scan->add_flag("--verify", verify_flag, "Re-derive every verdict algebraically");
  add_common(scan);

  std::string suite, shift_range, index_range;
  int max_n = 0;
  VerifyBounds bounds;
  auto* ver = app.add_subcommand("verify", "Run one property suite");
  ver->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-degree", bounds.max_degree, "eqrei/positivity/triangular: degree bound")
      ->capture_default_str();
  ver->add_option("--max-part-sum", bounds.max_part_sum, "oracle: partition size bound")
      ->capture_default_str();
  ver->add_option("--shift-range", shift_range, "oracle: range lo:hi of b - a (default -5:5)");
  ver->add_option("--triples", bounds.triples, "oracle: random triples")->capture_default_str();
  ver->add_option("--max-n", max_n, "minors: indices and sizes within [1,N]");
  ver->add_option("--index-range", index_range, "minors: index window lo:hi");
  ver->add_option("--max-cols", bounds.max_cols, "minors: largest minor size")
      ->capture_default_str();
  ver->add_option("--max-entry", bounds.max_entry, "frank: sets inside [1,N]")
      ->capture_default_str();
  ver->add_option("--families", bounds.families, "frank: random families")->capture_default_str();
  ver->add_option("--seed", bounds.seed, "Random seed")->capture_default_str();
  add_common(ver);

  std::string rows_text, cols_text;
  auto* minor = app.add_subcommand("minor", "Quantum minor Delta(I,J) and its label");
  minor->add_option("--rows", rows_text, "Increasing row indices, e.g. 1,2")->required();
  minor->add_option("--cols", cols_text, "Increasing column indices")->required();
  add_common(minor);

  std::vector<std::string> args = glue_negative_values(raw);
  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dcb) return cmd_dcb(weight, cache_dir, common, out);
    if (*dec) return cmd_decompose(m_text, n_text, common, out);
    if (*irred) return cmd_irred(alpha, a, beta, b, verify_flag, common, out);
    if (*scan) return cmd_scan(alpha, beta, range, verify_flag, common, out);
    if (*ver) {
      if (!shift_range.empty()) std::tie(bounds.shift_lo, bounds.shift_hi) = parse_range(shift_range);
      if (max_n > 0) {
        bounds.index_lo = 1;
        bounds.index_hi = max_n;
        bounds.max_cols = max_n;
      }
      if (!index_range.empty()) std::tie(bounds.index_lo, bounds.index_hi) = parse_range(index_range);
      return cmd_verify(suite, bounds, common, out);
    }
    if (*minor) return cmd_minor(rows_text, cols_text, common, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace dcb
