#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcb/algebra.hpp"

namespace dcb {

/// Linear extension of ⊴ used when the triangular solvers walk a support.
enum class CorrectionOrder {
  LengthMeasure,  // sum of squared lengths, then lexicographic; needs no enumeration
  Enumeration,    // rank in enumerate_by_weight
};

/// Dual canonical basis {G*(m)} on the dual PBW basis, computed lazily label by
/// label and memoized. Each instance owns its memo; the free functions below use
/// a process-wide instance.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(CorrectionOrder order = CorrectionOrder::LengthMeasure);
  CanonicalBasis(const CanonicalBasis&) = delete;
  CanonicalBasis& operator=(const CanonicalBasis&) = delete;

  CorrectionOrder order() const { return order_; }

  /// U(m,n) = (v^{b(m,n)+1} G*(m)G*(n) - v^{b(n,m)-1} G*(n)G*(m)) / (v - v^-1).
  AlgebraElement u_vector(const Multisegment& m, const Multisegment& n);
  /// V(m) = U(m - s, s) with s one copy of the largest segment; E*(m) for a
  /// single segment (and the unit for the empty multisegment).
  AlgebraElement aux_vector(const Multisegment& m);
  const AlgebraElement& dual_canonical(const Multisegment& m);

  /// Coefficients c_p with x = sum c_p G*(p). DomainError if x is not homogeneous.
  std::map<Multisegment, LaurentPoly> expand(const AlgebraElement& x);

  /// Seeds the memo (used when loading cached tables). The caller vouches for it.
  void preload(const Multisegment& m, AlgebraElement g);

 private:
  bool before(const Multisegment& a, const Multisegment& b);
  std::size_t rank(const Multisegment& m);

  CorrectionOrder order_;
  std::shared_mutex mu_;
  std::unordered_map<Multisegment, std::unique_ptr<const AlgebraElement>, MultisegmentHash> memo_;
  std::unordered_map<Multisegment, std::size_t, MultisegmentHash> ranks_;
};

CanonicalBasis& default_basis();

AlgebraElement aux_vector(const Multisegment& m);
const AlgebraElement& dual_canonical(const Multisegment& m);
std::map<Multisegment, LaurentPoly> expand_in_dcb(const AlgebraElement& x);

/// alpha_{mn}^p: expansion of G*(m) G*(n) on the dual canonical basis.
std::map<Multisegment, LaurentPoly> structure_constants(const Multisegment& m,
                                                        const Multisegment& n);

/// One weight class: labels in enumeration order and G* of each on {E*}.
struct DcbTable {
  Weight weight;
  std::vector<Multisegment> labels;
  std::vector<AlgebraElement> expansions;
};
DcbTable dcb_table(const Weight& w);

/// K_{mn}(v) with E*(m) = sum_n K_{mn} G*(n), rows/columns in enumeration order.
std::vector<std::vector<LaurentPoly>> kl_matrix(const Weight& w);

struct Membership {
  int exponent;  // x = v^{-exponent} G*(label)
  Multisegment label;
  friend bool operator==(const Membership&, const Membership&) = default;
};
/// Present iff x = v^{-k} G*(q) for a single label q.
std::optional<Membership> membership_up_to_power(const AlgebraElement& x);

}  // namespace dcb
