#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcb/algebra.hpp"
#include "dcb/multisegment.hpp"

namespace dcb {

/// Z_{<=a} ∪ J with J a finite set above a. Kept canonical: a+1 is never an
/// extra, contiguous extras are absorbed into the threshold.
class CoFiniteSet {
 public:
  CoFiniteSet() = default;
  /// extras must be strictly increasing and > threshold.
  CoFiniteSet(int threshold, std::vector<int> extras);

  int threshold() const { return threshold_; }
  const std::vector<int>& extras() const { return extras_; }
  bool contains(int x) const;
  /// Largest element.
  int top() const { return extras_.empty() ? threshold_ : extras_.back(); }

  friend bool operator==(const CoFiniteSet&, const CoFiniteSet&) = default;

  /// `Z<=-2 u {1,4}`
  std::string to_string() const;

 private:
  int threshold_ = 0;
  std::vector<int> extras_;
};

/// Finite set I \ J, increasing.
std::vector<int> set_difference(const CoFiniteSet& i, const CoFiniteSet& j);

class Partition {
 public:
  Partition() = default;
  /// Parts weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// `4,2`
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// `4,2,1`; empty text or non-decreasing parts are a ParseError.
Partition parse_partition(std::string_view text);

/// Every partition of n, largest first lexicographically.
std::vector<Partition> partitions_of(int n);

/// Z_{<=a-r} ∪ {a-r+1+alpha_r, ..., a+alpha_1}.
CoFiniteSet evaluation_set(const Partition& alpha, int a);

/// sum_i [a-i+1, a-i+alpha_i].
Multisegment evaluation_multisegment(const Partition& alpha, int a);

/// A ≺ B: every element of A below every element of B (vacuous if either is empty).
bool precedes(const std::vector<int>& a, const std::vector<int>& b);

/// A ⋈ B for disjoint finite sets; DomainError if they meet.
bool join_related(const std::vector<int>& a, const std::vector<int>& b);

bool separated(const CoFiniteSet& i, const CoFiniteSet& j);
bool strongly_separated(const CoFiniteSet& i, const CoFiniteSet& j);

/// S_alpha(t^a) ⊙ S_beta(t^b) is irreducible.
bool irreducible_pair(const Partition& alpha, int a, const Partition& beta, int b);

/// Reducibility by the three-point / four-point patterns of I \ J and J \ I
/// with c = a - b. Returns the witnessing points (i,j,k) or (i,j,k,l) when the
/// product is not simple.
std::optional<std::vector<int>> reducibility_witness(const Partition& alpha, int a,
                                                     const Partition& beta, int b);
bool main1_pattern(const Partition& alpha, int a, const Partition& beta, int b);

/// Hook lengths row by row.
std::vector<int> hook_lengths(const Partition& alpha);
bool hook_irreducible(const Partition& alpha, int shift);

/// Pairwise test over a nonempty family of evaluation data.
bool irreducible_family(const std::vector<std::pair<Partition, int>>& family);

/// <Z_{<=a} ∪ J> = Delta([a+1, a+k], J).
std::pair<std::vector<int>, std::vector<int>> flag_minor_indices(const CoFiniteSet& s);
AlgebraElement flag_minor(const CoFiniteSet& s);
/// sum_r [a+r, j_r - 1].
Multisegment flag_minor_label(const CoFiniteSet& s);

}  // namespace dcb
