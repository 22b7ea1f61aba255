#include "dcb/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "dcb/canonical.hpp"
#include "dcb/errors.hpp"
#include "dcb/tableaux.hpp"

namespace dcb {

void SuiteReport::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eqrei", "positivity", "triangular", "oracle",
                                              "minors", "frank",      "hooks"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyBounds& bounds) {
  if (name == "eqrei") return verify_eqrei(bounds);
  if (name == "positivity") return verify_positivity(bounds);
  if (name == "triangular") return verify_triangular(bounds);
  if (name == "oracle") return verify_oracle(bounds);
  if (name == "minors") return verify_minors(bounds);
  if (name == "frank") return verify_frank(bounds);
  if (name == "hooks") return verify_hooks(bounds);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

// --- Small test universes ---------------------------------------------------

std::vector<Multisegment> small_multisegments(int max_degree) {
  std::vector<Segment> segs;
  for (int i = 0; i < max_degree; ++i)
    for (int j = i; j < max_degree; ++j) segs.emplace_back(i, j);
  std::vector<Multisegment> out;
  std::vector<Segment> cur;
  std::function<void(std::size_t, int)> go = [&](std::size_t from, int left) {
    if (!cur.empty()) out.emplace_back(cur);
    for (std::size_t k = from; k < segs.size(); ++k) {
      if (segs[k].length() > left) continue;
      cur.push_back(segs[k]);
      go(k, left - segs[k].length());
      cur.pop_back();
    }
  };
  go(0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Multisegment, Multisegment>> small_pairs(int max_degree) {
  const auto all = small_multisegments(max_degree);
  std::vector<std::pair<Multisegment, Multisegment>> out;
  auto low = [](const Multisegment& m) {
    int lo = m.segments().front().start;
    for (const auto& s : m.segments()) lo = std::min(lo, s.start);
    return lo;
  };
  for (const auto& m : all)
    for (const auto& n : all)
      if (m.degree() + n.degree() <= max_degree && std::min(low(m), low(n)) == 0)
        out.emplace_back(m, n);
  return out;
}

namespace {

std::string pair_text(const Multisegment& m, const Multisegment& n) {
  return "m = " + m.to_string() + ", n = " + n.to_string();
}

LaurentPoly lookup(const std::map<Multisegment, LaurentPoly>& c, const Multisegment& p) {
  auto it = c.find(p);
  return it == c.end() ? LaurentPoly() : it->second;
}

std::string family_text(const std::vector<std::pair<Partition, int>>& family) {
  std::string s;
  for (const auto& [alpha, a] : family) {
    if (!s.empty()) s += "; ";
    s += "(" + alpha.to_string() + ")@" + std::to_string(a);
  }
  return s;
}

std::string sets_text(const std::vector<std::vector<int>>& sets) {
  std::string s;
  for (const auto& set : sets) {
    s += "{";
    for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i]);
    s += "}";
  }
  return s;
}

AlgebraElement flag_product(const std::vector<std::vector<int>>& sets) {
  AlgebraElement pi = AlgebraElement::unit();
  for (const auto& s : sets) pi = multiply(pi, flag_minor(flag_set(s)));
  return pi;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

bool algebraic_irreducible(const std::vector<std::pair<Partition, int>>& family) {
  AlgebraElement x = AlgebraElement::unit();
  for (const auto& [alpha, a] : family)
    x = multiply(x, dual_canonical(evaluation_multisegment(alpha, a)));
  return membership_up_to_power(x).has_value();
}

// --- Suites -----------------------------------------------------------------

SuiteReport verify_eqrei(const VerifyBounds& bounds) {
  SuiteReport r{"eqrei", 0, {}};
  for (const auto& [m, n] : small_pairs(bounds.max_degree)) {
    const auto mn = structure_constants(m, n);
    const auto nm = structure_constants(n, m);
    const int k = cartan(m.weight(), n.weight());
    std::set<Multisegment> labels;
    for (const auto& [p, c] : mn) labels.insert(p);
    for (const auto& [p, c] : nm) labels.insert(p);
    for (const auto& p : labels) {
      const LaurentPoly lhs = lookup(nm, p);
      const LaurentPoly rhs = lookup(mn, p).bar().shifted(-k);
      r.check(lhs == rhs, "twist symmetry fails at " + pair_text(m, n) + ", p = " +
                              p.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
  }
  return r;
}

SuiteReport verify_positivity(const VerifyBounds& bounds) {
  SuiteReport r{"positivity", 0, {}};
  for (const auto& [m, n] : small_pairs(bounds.max_degree)) {
    const auto mn = structure_constants(m, n);
    const Multisegment sum = m + n;
    for (const auto& [p, c] : mn) {
      r.check(c.has_nonnegative_coefficients(), "negative structure constant at " +
                                                    pair_text(m, n) + ", p = " + p.to_string() +
                                                    ": " + c.to_string());
      r.check(dominates(sum, p), "support label " + p.to_string() + " not above m + n at " +
                                     pair_text(m, n));
    }
    const LaurentPoly lead = lookup(mn, sum);
    const LaurentPoly want = LaurentPoly::monomial(-b_form(m, n));
    r.check(lead == want, "leading coefficient at " + pair_text(m, n) + " is " +
                              lead.to_string() + ", expected " + want.to_string());
  }
  return r;
}

SuiteReport verify_triangular(const VerifyBounds& bounds) {
  SuiteReport r{"triangular", 0, {}};
  CanonicalBasis alt(CorrectionOrder::Enumeration);
  for (const auto& m : small_multisegments(bounds.max_degree)) {
    const AlgebraElement& g = dual_canonical(m);
    for (const auto& [n, c] : g.support()) {
      if (n == m) {
        r.check(c == LaurentPoly(1), "G*(" + m.to_string() + ") has diagonal " + c.to_string());
      } else {
        r.check(c.in_positive_part(), "G*(" + m.to_string() + ") has coefficient " +
                                          c.to_string() + " on " + n.to_string());
        r.check(dominates(m, n), "G*(" + m.to_string() + ") involves " + n.to_string() +
                                     " which is not above it");
      }
    }
    r.check(g.coefficient(m) == LaurentPoly(1), "G*(" + m.to_string() + ") misses E*(m)");

    for (const auto& [p, c] : expand_in_dcb(aux_vector(m))) {
      r.check(c.is_bar_symmetric(), "V(" + m.to_string() + ") has coefficient " + c.to_string() +
                                        " on G*(" + p.to_string() + ")");
      r.check(p == m ? c == LaurentPoly(1) : dominates(m, p),
              "V(" + m.to_string() + ") is not unitriangular at " + p.to_string());
    }

    r.check(alt.dual_canonical(m) == g,
            "G*(" + m.to_string() + ") depends on the correction order");
  }

  for (const auto& [m, n] : small_pairs(bounds.max_degree)) {
    const auto beta = expand_in_dcb(default_basis().u_vector(m, n));
    const Multisegment sum = m + n;
    r.check(lookup(beta, sum) == LaurentPoly(1),
            "U(m,n) leading coefficient is not 1 at " + pair_text(m, n));
    for (const auto& [p, c] : beta) {
      r.check(c.is_bar_symmetric(), "U(m,n) coefficient " + c.to_string() + " on " +
                                        p.to_string() + " not bar-symmetric at " + pair_text(m, n));
      r.check(dominates(sum, p), "U(m,n) involves " + p.to_string() + " at " + pair_text(m, n));
    }
  }
  return r;
}

SuiteReport verify_oracle(const VerifyBounds& bounds) {
  SuiteReport r{"oracle", 0, {}};
  const auto parts = partitions_up_to(bounds.max_part_sum);
  for (const auto& alpha : parts) {
    for (const auto& beta : parts) {
      for (int c = bounds.shift_lo; c <= bounds.shift_hi; ++c) {
        const Multisegment m = evaluation_multisegment(alpha, 0);
        const Multisegment n = evaluation_multisegment(beta, c);
        const bool sep = irreducible_pair(alpha, 0, beta, c);
        const auto member = membership_up_to_power(multiply(dual_canonical(m), dual_canonical(n)));
        const std::string what = "alpha = " + alpha.to_string() + ", beta = " + beta.to_string() +
                                 ", b - a = " + std::to_string(c);
        r.check(sep == member.has_value(),
                "separation says " + std::string(sep ? "irreducible" : "reducible") +
                    " but the product " + (member ? "is" : "is not") +
                    " a dual canonical vector up to a power: " + what);
        if (member)
          r.check(member->label == m + n && member->exponent == b_form(m, n),
                  "irreducible product is not v^{-b} G*(m+n): " + what);
        r.check(main1_pattern(alpha, 0, beta, c) == !sep, "pattern test disagrees: " + what);
      }
    }
  }

  for (const auto& alpha : parts) {
    for (int a = -2; a <= 2; ++a) {
      r.check(flag_minor(evaluation_set(alpha, a)) ==
                  dual_canonical(evaluation_multisegment(alpha, a)),
              "flag minor of (" + alpha.to_string() + ")@" + std::to_string(a) +
                  " differs from G*(m(alpha,a))");
    }
  }

  std::mt19937_64 rng(bounds.seed);
  for (int t = 0; t < bounds.triples; ++t) {
    const auto family = random_family(rng, 3, bounds.max_part_sum, bounds.triple_shift);
    const bool pairwise = irreducible_family(family);
    const bool direct = algebraic_irreducible(family);
    r.check(pairwise == direct, "pairwise criterion says " +
                                    std::string(pairwise ? "irreducible" : "reducible") +
                                    " for " + family_text(family));
  }
  return r;
}

SuiteReport verify_minors(const VerifyBounds& bounds) {
  SuiteReport r{"minors", 0, {}};
  std::vector<int> window;
  for (int x = bounds.index_lo; x <= bounds.index_hi; ++x) window.push_back(x);
  const int n = static_cast<int>(window.size());

  auto subsets = [&](int k) {
    std::vector<std::vector<int>> out;
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask[static_cast<std::size_t>(i)]) s.push_back(window[static_cast<std::size_t>(i)]);
      out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
  };
  auto text = [](const std::vector<int>& rows, const std::vector<int>& cols) {
    return "Delta(" + sets_text({rows}) + ", " + sets_text({cols}) + ")";
  };

  for (int k = 1; k <= std::min(bounds.max_cols, n); ++k) {
    const auto all = subsets(k);
    for (const auto& rows : all) {
      for (const auto& cols : all) {
        const AlgebraElement delta = quantum_minor(rows, cols);
        const auto label = minor_label(rows, cols);
        if (!label) {
          r.check(delta.is_zero(), text(rows, cols) + " should vanish");
          continue;
        }
        r.check(delta == dual_canonical(*label),
                text(rows, cols) + " differs from G*(" + label->to_string() + ")");
        for (std::size_t p = 0; p < rows.size(); ++p) {
          if (rows[p] != cols[p]) continue;
          const std::vector<int> r1(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(p));
          const std::vector<int> c1(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(p));
          const std::vector<int> r2(rows.begin() + static_cast<std::ptrdiff_t>(p) + 1, rows.end());
          const std::vector<int> c2(cols.begin() + static_cast<std::ptrdiff_t>(p) + 1, cols.end());
          const AlgebraElement left = r1.empty() ? AlgebraElement::unit() : quantum_minor(r1, c1);
          const AlgebraElement right = r2.empty() ? AlgebraElement::unit() : quantum_minor(r2, c2);
          r.check(multiply(left, right) == delta,
                  text(rows, cols) + " does not factor at a common index");
        }
      }
    }
  }
  return r;
}

SuiteReport verify_frank(const VerifyBounds& bounds) {
  SuiteReport r{"frank", 0, {}};

  {
    const std::vector<std::vector<int>> sets{{2, 3, 5}, {1, 4}};
    const Multisegment leading = parse_multisegment("[1]+[2]+[3]+[2,4]");
    const Multisegment other = parse_multisegment("[1]+[2]+[2,3]+[3,4]");
    r.check(product_word(sets) == std::vector<int>{4, 1, 5, 3, 2}, "w_pi of the worked example");
    const Tableau p = rs_p_tableau(product_word(sets));
    r.check(p == Tableau({{1, 2}, {3, 5}, {4}}), "P(w_pi) of the worked example");
    r.check(frank_condition(sets), "worked example is frank");
    r.check(n_pi(sets) == leading, "n_pi of the worked example");
    r.check(tableau_multisegment(p, 5) == leading, "m(P(w_pi)) of the worked example");
    AlgebraElement pi = flag_product(sets);
    pi *= LaurentPoly::monomial(1);
    const auto e = expand_in_dcb(pi);
    const std::map<Multisegment, LaurentPoly> want{{leading, 1}, {other, LaurentPoly::monomial(1)}};
    r.check(e == want, "v pi of the worked example");
  }

  for (int x = 1; x < (1 << bounds.max_entry); ++x) {
    std::vector<int> s;
    for (int i = 0; i < bounds.max_entry; ++i)
      if (x >> i & 1) s.push_back(i + 1);
    r.check(frank_condition({s}), "single set " + sets_text({s}) + " is not frank");
    r.check(n_pi({s}) == flag_multisegment(s), "single set " + sets_text({s}) + " n_pi");
    r.check(flag_minor(flag_set(s)) == dual_canonical(flag_multisegment(s)),
            "flag minor " + sets_text({s}) + " differs from its G*");
  }

  std::mt19937_64 rng(bounds.seed);
  for (int t = 0; t < bounds.families; ++t) {
    const auto sets = random_strongly_separated(rng, 3, bounds.max_entry);
    const Multisegment m_pi = product_multisegment(sets);
    const auto ordered = separation_order(sets);
    r.check(ordered.has_value(), sets_text(sets) + " admits no separating order");
    if (ordered) {
      r.check(frank_condition(*ordered), sets_text(*ordered) + " is not frank");
      r.check(n_pi(*ordered) == m_pi, sets_text(*ordered) + ": n_pi differs from m_pi");
    }
    const auto member = membership_up_to_power(flag_product(sets));
    r.check(member && member->label == m_pi && member->exponent == product_b(sets),
            sets_text(sets) + ": v^{b_pi} pi is not G*(m_pi)");
  }

  // General frank products: some power v^d makes v^d pi = G*(n_pi) mod v L*.
  std::uniform_int_distribution<int> arity(2, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < bounds.families; ++t) {
    std::vector<std::vector<int>> sets;
    const int k = arity(rng);
    while (static_cast<int>(sets.size()) < k) {
      std::vector<int> s;
      for (int x = 1; x <= bounds.max_entry; ++x)
        if (coin(rng)) s.push_back(x);
      if (!s.empty()) sets.push_back(s);
    }
    if (!frank_condition(sets)) continue;
    const auto e = expand_in_dcb(flag_product(sets));
    const Multisegment lead = n_pi(sets);
    const LaurentPoly c = lookup(e, lead);
    const bool monomial = c.is_monomial() && c.terms().front().second == 1;
    r.check(monomial, sets_text(sets) + ": coefficient of G*(n_pi) is " + c.to_string());
    if (!monomial) continue;
    const int d = -c.min_exponent();
    for (const auto& [p, cp] : e)
      if (p != lead)
        r.check(cp.shifted(d).in_positive_part(),
                sets_text(sets) + ": coefficient " + cp.to_string() + " on " + p.to_string());
  }
  return r;
}

SuiteReport verify_hooks(const VerifyBounds& bounds) {
  SuiteReport r{"hooks", 0, {}};
  for (int n = 1; n <= bounds.hook_max_n; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      for (int s = -bounds.hook_max_shift; s <= bounds.hook_max_shift; ++s) {
        r.check(hook_irreducible(alpha, s) == irreducible_pair(alpha, 0, alpha, s),
                "hook criterion disagrees for " + alpha.to_string() + ", shift " +
                    std::to_string(s));
      }
    }
  }

  const auto parts = partitions_up_to(bounds.pattern_max_n);
  for (const auto& alpha : parts) {
    for (const auto& beta : parts) {
      for (int c = -bounds.pattern_max_shift; c <= bounds.pattern_max_shift; ++c) {
        const std::string what = alpha.to_string() + " / " + beta.to_string() + " at " +
                                 std::to_string(c);
        const CoFiniteSet i = evaluation_set(alpha, 0);
        const CoFiniteSet j = evaluation_set(beta, c);
        const bool sep = separated(i, j);
        r.check(main1_pattern(alpha, 0, beta, c) == !sep, "pattern test disagrees: " + what);
        r.check(sep == separated(j, i), "separation is not symmetric: " + what);
        r.check(!strongly_separated(i, j) || sep, "strongly separated but not separated: " + what);
        const auto ij = set_difference(i, j);
        const auto ji = set_difference(j, i);
        r.check(static_cast<int>(ij.size()) == static_cast<int>(ji.size()) - c,
                "cardinality law fails: " + what);
        r.check(irreducible_pair(alpha, 5, beta, c + 5) == sep,
                "translation changes the verdict: " + what);
      }
    }
  }
  return r;
}

}  // namespace dcb
