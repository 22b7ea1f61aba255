#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dcb {

/// Integer interval [start, end] with start <= end.
struct Segment {
  int start = 0;
  int end = 0;

  Segment() = default;
  Segment(int s, int e);  // DomainError when s > e

  int length() const { return end - start + 1; }
  bool contains(int k) const { return start <= k && k <= end; }

  friend bool operator==(const Segment&, const Segment&) = default;
  // Root order of the quiver: compare ends first, then starts.
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
    if (auto c = a.end <=> b.end; c != 0) return c;
    return a.start <=> b.start;
  }

  std::string to_string() const;
};

std::strong_ordering compare_segments(const Segment& a, const Segment& b);

/// True iff the union of the two intervals is an interval distinct from both.
bool linked(const Segment& a, const Segment& b);
/// Union of two segments when it is an interval.
std::optional<Segment> segment_union(const Segment& a, const Segment& b);
/// Intersection; empty optional for the empty segment.
std::optional<Segment> segment_intersection(const Segment& a, const Segment& b);

/// Grading by the positive root lattice: position -> multiplicity d_k > 0.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::map<int, int> counts);  // zero entries dropped, negatives rejected

  static Weight of(const Segment& s);

  const std::map<int, int>& counts() const { return counts_; }
  int at(int k) const;
  int total() const;
  bool empty() const { return counts_.empty(); }

  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.counts_ <=> b.counts_; }

  /// `0:1,1:2,2:1`
  std::string to_string() const;

 private:
  std::map<int, int> counts_;
};

/// `pos:count,...`, e.g. `0:1,1:2,2:1`.
Weight parse_weight(std::string_view text);

/// Bilinear extension of (a_i,a_i)=2, (a_i,a_{i+-1})=-1.
int cartan(const Weight& a, const Weight& b);
int cartan(const Segment& a, const Segment& b);

/// Finite multiset of segments, stored sorted under the segment order.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segs);
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t size() const { return segs_.size(); }
  bool empty() const { return segs_.empty(); }

  /// (segment, multiplicity) in increasing segment order.
  std::vector<std::pair<Segment, int>> entries() const;
  int multiplicity(const Segment& s) const;
  int degree() const;
  Weight weight() const;
  /// Sum of squared segment lengths; strictly increases along every move.
  long long square_length_sum() const;
  /// Sum over segments of C(multiplicity, 2): the E*/T rescaling exponent.
  int pair_count() const;

  const Segment& largest() const { return segs_.back(); }
  Multisegment without_one(const Segment& s) const;
  Multisegment with(const Segment& s) const;
  Multisegment translated(int n) const;

  Multisegment& operator+=(const Multisegment& o);
  friend Multisegment operator+(Multisegment a, const Multisegment& b) { return a += b; }

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  // Lexicographic on the sorted segment lists.
  friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b) {
    return std::lexicographical_compare_three_way(a.segs_.begin(), a.segs_.end(),
                                                  b.segs_.begin(), b.segs_.end());
  }

  std::size_t hash() const;

  /// Canonical text form, e.g. `[0]+2[1]+[1,2]`; the empty multisegment renders as `0`.
  std::string to_string() const;

 private:
  std::vector<Segment> segs_;
};

struct MultisegmentHash {
  std::size_t operator()(const Multisegment& m) const { return m.hash(); }
};

/// Grammar: term ('+' term)*, term := [mult '*'?] '[' int (',' int)? ']'.
/// `0` or the empty string parse to the empty multisegment.
Multisegment parse_multisegment(std::string_view text);

int degree(const Multisegment& m);
Weight weight(const Multisegment& m);

/// b(m,n) = sum_{s'>s} m_{s'} n_s (wt s, wt s') + sum_s m_s n_s. Not symmetric.
int b_form(const Multisegment& m, const Multisegment& n);

/// Every n with m -> n, deduplicated and sorted.
std::vector<Multisegment> elementary_moves(const Multisegment& m);

/// m ⊴ n: n reachable from m by zero or more elementary moves.
bool dominates(const Multisegment& m, const Multisegment& n);

/// All n with m ⊴ n (m included). Memoized; safe to call concurrently.
std::shared_ptr<const std::unordered_set<Multisegment, MultisegmentHash>> upper_set(
    const Multisegment& m);

/// All multisegments of weight w, in the topological order of the move DAG with
/// lexicographic tie-break. Memoized.
const std::vector<Multisegment>& enumerate_by_weight(const Weight& w);

/// Size of the weight class, or some value above `limit` once it exceeds it.
std::size_t count_by_weight(const Weight& w, std::size_t limit);

/// Order key used by the triangular solvers: a linear extension of ⊴ that needs
/// no weight-class enumeration.
bool extension_less(const Multisegment& a, const Multisegment& b);

}  // namespace dcb

template <>
struct std::hash<dcb::Multisegment> {
  std::size_t operator()(const dcb::Multisegment& m) const { return m.hash(); }
};
