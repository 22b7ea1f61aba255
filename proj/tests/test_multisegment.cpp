#include <doctest.h>

#include <functional>
#include <set>

#include "dcb/errors.hpp"
#include "dcb/multisegment.hpp"
#include "generators.hpp"

using dcb::Multisegment;
using dcb::Segment;
using dcb::Weight;

namespace {

Multisegment ms(const char* text) { return dcb::parse_multisegment(text); }

// All multisegments of weight w by brute force: pick segments starting at the
// leftmost uncovered position, every possible length.
std::set<Multisegment> brute_class(const Weight& w) {
  std::set<Multisegment> out;
  std::function<void(std::map<int, int>, std::vector<Segment>)> go =
      [&](std::map<int, int> left, std::vector<Segment> acc) {
        while (!left.empty() && left.begin()->second == 0) left.erase(left.begin());
        if (left.empty()) {
          out.insert(Multisegment(acc));
          return;
        }
        const int s = left.begin()->first;
        for (int e = s;; ++e) {
          auto it = left.find(e);
          if (it == left.end() || it->second == 0) break;
          auto next = left;
          for (int k = s; k <= e; ++k) --next[k];
          auto more = acc;
          more.emplace_back(s, e);
          go(next, more);
        }
      };
  go(w.counts(), {});
  return out;
}

// b(m,n) straight from its defining double sum.
int b_oracle(const Multisegment& m, const Multisegment& n) {
  int b = 0;
  for (const auto& [sp, mp] : m.entries())
    for (const auto& [s, ns] : n.entries()) {
      if (s < sp) b += mp * ns * dcb::cartan(s, sp);
      if (s == sp) b += mp * ns;
    }
  return b;
}

}  // namespace

TEST_CASE("segment order and linkage") {
  CHECK(Segment(1, 2) < Segment(1, 3));
  CHECK(Segment(1, 3) < Segment(2, 3));
  CHECK(Segment(0, 5) == Segment(0, 5));
  CHECK_THROWS_AS(Segment(3, 1), dcb::DomainError);
  CHECK(dcb::linked(Segment(0, 0), Segment(1, 1)));
  CHECK_FALSE(dcb::linked(Segment(0, 3), Segment(1, 2)));
  CHECK_FALSE(dcb::linked(Segment(0, 1), Segment(3, 4)));
  CHECK(dcb::linked(Segment(0, 2), Segment(1, 4)));
  CHECK(*dcb::segment_union(Segment(0, 2), Segment(3, 4)) == Segment(0, 4));
  CHECK_FALSE(dcb::segment_intersection(Segment(0, 2), Segment(3, 4)).has_value());
}

TEST_CASE("weights, degree, cartan form") {
  CHECK(ms("[0]+2[1]+[2]").weight() == Weight({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(ms("[0,2]").weight() == Weight({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(dcb::degree(ms("[1]+[2,3]")) == 3);
  CHECK(dcb::cartan(dcb::parse_weight("1:1"), dcb::parse_weight("1:1")) == 2);
  CHECK(dcb::cartan(dcb::parse_weight("1:1"), dcb::parse_weight("2:1")) == -1);
  CHECK(dcb::cartan(dcb::parse_weight("0:1"), dcb::parse_weight("5:1")) == 0);
  CHECK(dcb::parse_weight("0:1,1:2,2:1").to_string() == "0:1,1:2,2:1");
  CHECK_THROWS_AS(dcb::parse_weight("0:1,1"), dcb::ParseError);
}

TEST_CASE("b form") {
  CHECK(dcb::b_form(ms("[0]+2[1]"), ms("[2]")) == 0);
  CHECK(dcb::b_form(ms("[1]"), ms("[1]")) == 1);
  gen::Rng rng(3);
  for (int i = 0; i < 400; ++i) {
    const Multisegment m = gen::multisegment(rng, 3, -2, 3);
    const Multisegment n = gen::multisegment(rng, 3, -2, 3);
    CHECK(dcb::b_form(m, n) == b_oracle(m, n));
    // b(m,n) + b(n,m) = (wt m, wt n)
    CHECK(dcb::b_form(m, n) + dcb::b_form(n, m) == dcb::cartan(m.weight(), n.weight()));
  }
}

TEST_CASE("text form") {
  CHECK(ms("[0]+[1]+[1]+[2]").to_string() == "[0]+2[1]+[2]");
  CHECK(ms("2*[1,1]").to_string() == "2[1]");
  CHECK(ms("0").empty());
  CHECK(ms("").empty());
  CHECK(ms("[0,2]+[1]").to_string() == "[1]+[0,2]");
  CHECK_THROWS_AS(ms("[2,1]"), dcb::ParseError);
  CHECK_THROWS_AS(ms("[1"), dcb::ParseError);
  CHECK_THROWS_AS(ms("[a]"), dcb::ParseError);
}

TEST_CASE("elementary moves and dominance") {
  const Multisegment m1 = ms("[0]+2[1]+[2]"), m4 = ms("[0,1]+[1,2]"), m5 = ms("[1]+[0,2]");
  CHECK(dcb::elementary_moves(m1) ==
        std::vector<Multisegment>{ms("[0]+[1]+[1,2]"), ms("[0,1]+[1]+[2]")});
  CHECK(dcb::elementary_moves(m4) == std::vector<Multisegment>{m5});
  CHECK(dcb::elementary_moves(ms("[0,2]")).empty());
  CHECK(dcb::dominates(m1, m4));
  CHECK_FALSE(dcb::dominates(m5, m4));
  CHECK(dcb::dominates(m4, m4));
}

TEST_CASE("weight classes") {
  CHECK(dcb::enumerate_by_weight(Weight({{0, 1}, {1, 2}, {2, 1}})).size() == 5);
  CHECK(dcb::enumerate_by_weight(dcb::parse_weight("0:1")) == std::vector<Multisegment>{ms("[0]")});
  CHECK(dcb::enumerate_by_weight(Weight({{0, 1}, {1, 1}})) ==
        std::vector<Multisegment>{ms("[0]+[1]"), ms("[0,1]")});
  CHECK(dcb::count_by_weight(Weight({{0, 3}, {1, 3}, {2, 3}, {3, 3}}), 10) > 10);
}

TEST_CASE("weight classes against brute force, order properties") {
  const std::vector<Weight> weights = {
      Weight({{0, 1}, {1, 2}, {2, 1}}),         Weight({{0, 2}, {1, 2}}),
      Weight({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), Weight({{0, 1}, {1, 2}, {2, 2}}),
      Weight({{-1, 1}, {0, 2}, {1, 2}, {2, 1}}), Weight({{0, 3}, {1, 2}, {2, 1}}),
      Weight({{0, 1}, {2, 1}, {3, 2}}),
  };
  for (const Weight& w : weights) {
    CAPTURE(w.to_string());
    const auto& cls = dcb::enumerate_by_weight(w);
    const auto brute = brute_class(w);
    CHECK(std::set<Multisegment>(cls.begin(), cls.end()) == brute);
    CHECK(cls.size() == brute.size());
    CHECK(dcb::count_by_weight(w, 100000) == brute.size());

    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (const auto& n : dcb::elementary_moves(cls[i])) {
        CHECK(n.weight() == w);
        CHECK(n.square_length_sum() > cls[i].square_length_sum());
      }
      for (std::size_t j = 0; j < cls.size(); ++j) {
        const bool ij = dcb::dominates(cls[i], cls[j]);
        const bool ji = dcb::dominates(cls[j], cls[i]);
        if (i == j) CHECK(ij);
        if (i != j) CHECK_FALSE((ij && ji));
        if (ij && i != j) {
          CHECK(i < j);
          CHECK(dcb::extension_less(cls[i], cls[j]));
        }
        for (std::size_t k = 0; k < cls.size() && ij; ++k)
          if (dcb::dominates(cls[j], cls[k])) CHECK(dcb::dominates(cls[i], cls[k]));
      }
    }
  }
}

TEST_CASE("translation and arithmetic") {
  gen::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Multisegment m = gen::multisegment(rng, 4, -3, 3);
    const Multisegment n = gen::multisegment(rng, 4, -3, 3);
    CHECK(dcb::parse_multisegment(m.to_string()) == m);
    CHECK(m.translated(2).translated(-2) == m);
    CHECK((m + n).degree() == m.degree() + n.degree());
    CHECK((m + n).weight() == m.weight() + n.weight());
    CHECK(dcb::b_form(m.translated(3), n.translated(3)) == dcb::b_form(m, n));
    CHECK(m.with(m.largest()).without_one(m.largest()) == m);
  }
}
