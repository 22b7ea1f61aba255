// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Time limits are wall clock for the whole criterion, including first-time
// computation of every G* involved.

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "dcb/canonical.hpp"
#include "dcb/cli.hpp"
#include "dcb/criteria.hpp"
#include "dcb/verify.hpp"

using namespace dcb;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s,
               const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || s < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line << id << " " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << std::fixed
       << std::setprecision(3) << s << " s";
  if (limit_s > 0) line << ", limit " << std::setprecision(0) << limit_s << " s";
  line << "]";
  if (!o.detail.empty()) line << "  " << o.detail;
  if (!in_time) line << "  (over time limit)";
  std::cout << line.str() << std::endl;
}

std::string cli(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "bzcalc");
  std::ostringstream out, err;
  const int c = run_cli(args, out, err);
  if (code) *code = c;
  return out.str();
}

Multisegment ms(const char* text) { return parse_multisegment(text); }
LaurentPoly vp(int k) { return LaurentPoly::monomial(k); }

Outcome from_report(const SuiteReport& r) {
  std::string detail = std::to_string(r.checks) + " checks, " +
                       std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) detail += "; first: " + r.failures.front();
  return {r.passed() && r.checks > 0, detail};
}

const Multisegment m1 = ms("[0]+2[1]+[2]");
const Multisegment m2 = ms("[0]+[1]+[1,2]");
const Multisegment m3 = ms("[0,1]+[1]+[2]");
const Multisegment m4 = ms("[0,1]+[1,2]");
const Multisegment m5 = ms("[1]+[0,2]");

}  // namespace

int main() {
  criterion("AC1", "golden basis for weight 0:1,1:2,2:1", 1.0, [] {
    int code = -1;
    const std::string out = cli({"dcb", "--weight", "0:1,1:2,2:1"}, &code);
    const std::string golden =
        "G*([0]+2[1]+[2]) = E*([0]+2[1]+[2]) - v^2 E*([0]+[1]+[1,2]) - v^2 E*([0,1]+[1]+[2]) + "
        "(v^3 - v) E*([0,1]+[1,2]) + v^2 E*([1]+[0,2])\n"
        "G*([0]+[1]+[1,2]) = E*([0]+[1]+[1,2]) - v E*([0,1]+[1,2])\n"
        "G*([0,1]+[1]+[2]) = E*([0,1]+[1]+[2]) - v E*([0,1]+[1,2])\n"
        "G*([0,1]+[1,2]) = E*([0,1]+[1,2]) - v E*([1]+[0,2])\n"
        "G*([1]+[0,2]) = E*([1]+[0,2])\n";
    return Outcome{code == 0 && out == golden, "5 expansions"};
  });

  criterion("AC2", "auxiliary vectors V(m1..m5)", 0, [] {
    const auto E = [](const Multisegment& m) { return dual_pbw(m); };
    const std::vector<std::pair<Multisegment, AlgebraElement>> expected = {
        {m1, E(m1) + (LaurentPoly(1) + vp(-2)) * E(m2) - vp(2) * E(m3) - vp(1) * E(m4) - E(m5)},
        {m2, E(m2) - vp(1) * E(m4)},
        {m3, E(m3) + vp(-1) * E(m4) + vp(-2) * E(m5)},
        {m4, E(m4) + vp(-1) * E(m5)},
        {m5, E(m5)},
    };
    int bad = 0;
    for (const auto& [m, v] : expected) bad += aux_vector(m) == v ? 0 : 1;
    return Outcome{bad == 0, std::to_string(5 - bad) + "/5 match"};
  });

  criterion("AC3", "decompose [1]+[2,3] by [2]+[3,4]", 5.0, [] {
    int code = -1;
    const auto doc = nlohmann::json::parse(
        cli({"decompose", "--m", "[1]+[2,3]", "--n", "[2]+[3,4]", "--json"}, &code));
    const std::map<std::string, LaurentPoly> expected = {
        {"[1]+[2]+[2,3]+[3,4]", vp(-1)}, {"[1]+[2]+[3]+[2,4]", 1}, {"[1,2]+[2,3]+[3,4]", 1},
        {"[1,2]+[3]+[2,4]", vp(1)},      {"[1,3]+[2,4]", 1}};
    std::map<std::string, LaurentPoly> got;
    for (const auto& f : doc["factors"]) {
      LaurentPoly c;
      for (const auto& t : f["coef"]) c += LaurentPoly::monomial(t[0].get<int>(), t[1].get<long long>());
      got[f["label"].get<std::string>()] = c;
    }
    return Outcome{code == 0 && got == expected && doc["simple"] == false,
                   std::to_string(got.size()) + " factors"};
  });

  criterion("AC4", "KL matrix of weight 0:1,1:2,2:1 at v = 1", 0, [] {
    const auto k = kl_matrix(Weight({{0, 1}, {1, 2}, {2, 1}}));
    const std::vector<std::vector<int>> expected = {
        {1, 1, 1, 2, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
    bool ok = k.size() == 5;
    for (std::size_t i = 0; ok && i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) ok = ok && k[i][j].at_one() == expected[i][j];
    return Outcome{ok, ""};
  });

  criterion("AC5", "scan (4,2) against (2,2,1) over -8..8", 1.0, [] {
    int code = -1;
    const auto doc = nlohmann::json::parse(
        cli({"scan", "--alpha", "4,2", "--beta", "2,2,1", "--range", "-8:8", "--json"}, &code));
    const auto expected = nlohmann::json::parse("[-3,-2,-1,1,3,4,6]");
    return Outcome{code == 0 && doc["reducible"] == expected, "reducible at " + doc["reducible"].dump()};
  });

  criterion("AC6", "separation vs membership, |alpha|,|beta| <= 3, c in [-5,5]", 600.0, [] {
    VerifyBounds b;
    b.max_part_sum = 3;
    b.shift_lo = -5;
    b.shift_hi = 5;
    b.triples = 0;
    return from_report(verify_oracle(b));
  });

  criterion("AC7", "minors in [-2,4] with <= 3 columns equal G*", 120.0, [] {
    VerifyBounds b;
    b.index_lo = -2;
    b.index_hi = 4;
    b.max_cols = 3;
    return from_report(verify_minors(b));
  });

  criterion("AC8", "identity suites at degree <= 5", 0, [] {
    VerifyBounds b;
    b.max_degree = 5;
    std::string detail;
    bool ok = true;
    for (const char* name : {"eqrei", "triangular", "positivity"}) {
      const Outcome o = from_report(run_suite(name, b));
      ok = ok && o.ok;
      detail += std::string(detail.empty() ? "" : "; ") + name + ": " + o.detail;
    }
    return Outcome{ok, detail};
  });

  criterion("AC9", "hook criterion, n <= 6, |shift| <= 12", 0, [] {
    VerifyBounds b;
    b.hook_max_n = 6;
    b.hook_max_shift = 12;
    return from_report(verify_hooks(b));
  });

  criterion("AC10", "frank products and 50 strongly separated triples, entries <= 6", 0, [] {
    VerifyBounds b;
    b.max_entry = 6;
    b.families = 50;
    return from_report(verify_frank(b));
  });

  criterion("AC11", "100 random triples, |alpha| <= 3, shifts in [-4,4] (partial evidence)", 0, [] {
    std::mt19937_64 rng(VerifyBounds{}.seed + 11);
    int agree = 0, reducible = 0;
    for (int t = 0; t < 100; ++t) {
      const auto family = random_family(rng, 3, 3, 4);
      const bool pairwise = irreducible_family(family);
      agree += pairwise == algebraic_irreducible(family) ? 1 : 0;
      reducible += pairwise ? 0 : 1;
    }
    return Outcome{agree == 100, std::to_string(agree) + "/100 agree (" +
                                     std::to_string(reducible) + " reducible)"};
  });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
