#include <doctest.h>

#include <algorithm>
#include <random>

#include "dcb/canonical.hpp"
#include "dcb/errors.hpp"
#include "dcb/tableaux.hpp"
#include "dcb/verify.hpp"

using dcb::Multisegment;
using dcb::Tableau;
using Sets = std::vector<std::vector<int>>;

namespace {

Multisegment ms(const char* text) { return dcb::parse_multisegment(text); }

// Longest subsequence with `ok(prev, next)` between consecutive letters.
template <class Ok>
int longest_chain(const std::vector<int>& w, Ok ok) {
  std::vector<int> best(w.size(), 1);
  int top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (ok(w[j], w[i])) best[i] = std::max(best[i], best[j] + 1);
    top = std::max(top, best[i]);
  }
  return top;
}

}  // namespace

TEST_CASE("tableau validation and text") {
  const Tableau t({{1, 2}, {3, 5}, {4}});
  CHECK(t.to_string() == "1 2\n3 5\n4\n");
  CHECK(t.shape() == dcb::Partition({2, 2, 1}));
  CHECK(t.max_entry() == 5);
  CHECK(t.columns() == Sets{{1, 3, 4}, {2, 5}});
  CHECK(Tableau::from_columns({{4, 3, 1}, {2, 5}}) == t);
  CHECK_THROWS_AS(Tableau({{2, 1}}), dcb::DomainError);
  CHECK_THROWS_AS(Tableau({{1, 2}, {1}}), dcb::DomainError);
  CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), dcb::DomainError);
  CHECK_THROWS_AS(Tableau(Sets{{0}}), dcb::DomainError);
}

TEST_CASE("row insertion") {
  CHECK(dcb::rs_p_tableau({4, 1, 5, 3, 2}).rows() == Sets{{1, 2}, {3, 5}, {4}});
  CHECK(dcb::rs_p_tableau({1, 2, 3}).rows() == Sets{{1, 2, 3}});
  CHECK(dcb::rs_p_tableau({3, 2, 1}).rows() == Sets{{1}, {2}, {3}});
  CHECK(dcb::rs_p_tableau({2, 2, 1}).rows() == Sets{{1, 2}, {2}});
  CHECK(dcb::rs_p_tableau({}).empty());
}

TEST_CASE("row insertion against Schensted's theorem") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> w(std::uniform_int_distribution<int>(1, 9)(rng));
    for (int& x : w) x = std::uniform_int_distribution<int>(1, 6)(rng);
    const Tableau p = dcb::rs_p_tableau(w);
    CAPTURE(p.to_string());
    CHECK(p.shape().size() == static_cast<int>(w.size()));
    CHECK(p.shape()[0] == longest_chain(w, [](int a, int b) { return a <= b; }));
    CHECK(p.shape().length() == longest_chain(w, [](int a, int b) { return a > b; }));
    std::vector<int> content;
    for (const auto& row : p.rows()) content.insert(content.end(), row.begin(), row.end());
    std::sort(content.begin(), content.end());
    std::sort(w.begin(), w.end());
    CHECK(content == w);
  }
}

TEST_CASE("product words and frankness") {
  CHECK(dcb::product_word({{2, 3, 5}, {1, 4}}) == std::vector<int>{4, 1, 5, 3, 2});
  CHECK(dcb::product_word({{1, 2}}) == std::vector<int>{2, 1});
  CHECK(dcb::product_word({{1}, {1}}) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(dcb::product_word({{}}), dcb::DomainError);
  CHECK_THROWS_AS(dcb::product_word({{1, 1}}), dcb::DomainError);

  CHECK(dcb::frank_condition({{2, 3, 5}, {1, 4}}));
  CHECK(dcb::n_pi({{2, 3, 5}, {1, 4}}) == ms("[1]+[2]+[3]+[2,4]"));
  CHECK_FALSE(dcb::frank_condition({{1}, {2}}));
  CHECK(dcb::frank_condition({{2}, {1}}));
  CHECK(dcb::frank_condition({{1, 3}}));
  CHECK(dcb::n_pi({{1, 3}}) == ms("[2]"));
}

TEST_CASE("flag multisegments") {
  CHECK(dcb::flag_multisegment({1, 3}) == ms("[2]"));
  CHECK(dcb::flag_multisegment({2, 3, 5}) == ms("[1]+[2]+[3,4]"));
  CHECK(dcb::flag_multisegment({1, 2}).empty());
  CHECK(dcb::product_multisegment({{2, 3, 5}, {1, 4}}) == ms("[1]+[2]+[3,4]+[2,3]"));
  for (const auto& s : Sets{{1, 3}, {2, 3, 5}, {4}, {1, 2, 6}})
    CHECK(dcb::flag_multisegment(s) == dcb::flag_minor_label(dcb::flag_set(s)));
}

TEST_CASE("tableau multisegments") {
  CHECK(dcb::tableau_multisegment(Tableau::from_columns({{3, 4, 5, 6}}), 7) == ms("[3,6]"));
  CHECK_THROWS_AS(dcb::tableau_multisegment(Tableau::from_columns({{3, 8}}), 7), dcb::DomainError);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<int> low, high;
      for (int x = 1; x <= k; ++x) low.push_back(x);
      for (int x = n - k + 1; x <= n; ++x) high.push_back(x);
      std::vector<dcb::Segment> segs;
      for (int i = 1; i <= n - k; ++i) segs.emplace_back(i, k + i - 1);
      CHECK(dcb::tableau_multisegment(Tableau::from_columns({low}), n) == Multisegment(segs));
      CHECK(dcb::tableau_multisegment(Tableau::from_columns({high}), n).empty());
    }
  const Tableau p = dcb::rs_p_tableau({4, 1, 5, 3, 2});
  CHECK(dcb::tableau_multisegment(p, 5) == ms("[1]+[2]+[3]+[2,4]"));
}

TEST_CASE("the 2,3,5 / 1,4 product") {
  const Sets sets = {{2, 3, 5}, {1, 4}};
  const dcb::AlgebraElement pi =
      dcb::flag_minor(dcb::flag_set(sets[0])) * dcb::flag_minor(dcb::flag_set(sets[1]));
  const auto c = dcb::expand_in_dcb(dcb::LaurentPoly::monomial(1) * pi);
  const std::map<Multisegment, dcb::LaurentPoly> expected = {
      {ms("[1]+[2]+[3]+[2,4]"), 1}, {ms("[1]+[2]+[2,3]+[3,4]"), dcb::LaurentPoly::monomial(1)}};
  CHECK(c == expected);
}

TEST_CASE("strongly separated families") {
  CHECK_FALSE(dcb::separation_order({{1, 3}, {2}}).has_value());
  const auto order = dcb::separation_order({{1}, {2}});
  REQUIRE(order.has_value());
  CHECK(*order == Sets{{2}, {1}});

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Sets sets = dcb::random_strongly_separated(rng, 3, 6);
    for (std::size_t k = 0; k < sets.size(); ++k)
      for (std::size_t l = 0; l < sets.size(); ++l)
        CHECK(dcb::strongly_separated(dcb::flag_set(sets[k]), dcb::flag_set(sets[l])));
    const auto ordered = dcb::separation_order(sets);
    REQUIRE(ordered.has_value());
    CHECK(dcb::frank_condition(*ordered));
    CHECK(dcb::n_pi(*ordered) == dcb::product_multisegment(sets));

    dcb::AlgebraElement pi = dcb::AlgebraElement::unit();
    for (const auto& s : sets) pi = pi * dcb::flag_minor(dcb::flag_set(s));
    const auto hit = dcb::membership_up_to_power(pi);
    REQUIRE(hit.has_value());
    CHECK(hit->exponent == dcb::product_b(sets));
    CHECK(hit->label == dcb::product_multisegment(sets));
  }
}
