#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcb/laurent.hpp"
#include "dcb/multisegment.hpp"

namespace dcb {

/// Element of the quantum algebra A_v written on the dual PBW basis {E*(m)}.
///
/// The support is a finite map label -> nonzero Laurent coefficient. Labels are
/// kept in lexicographic order so iteration is deterministic.
class AlgebraElement {
 public:
  using Support = std::map<Multisegment, LaurentPoly>;

  AlgebraElement() = default;
  static AlgebraElement unit() { return basis(Multisegment{}); }
  static AlgebraElement basis(const Multisegment& m, LaurentPoly coef = 1);

  const Support& support() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const Multisegment& m) const;

  /// All support labels share one weight (vacuously true for zero).
  bool is_homogeneous() const;
  std::optional<Weight> weight() const;

  void add_term(const Multisegment& m, const LaurentPoly& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const LaurentPoly& scalar);
  /// this -= scalar * o
  void subtract_scaled(const AlgebraElement& o, const LaurentPoly& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const LaurentPoly& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// Labels sorted by the weight-class enumeration order (homogeneous elements)
  /// or lexicographically otherwise.
  std::vector<Multisegment> ordered_labels() const;

  /// `E*([0]+[1]) - v E*([0,1])`; `0` for the zero element.
  std::string to_string() const;

 private:
  Support terms_;
};

AlgebraElement dual_pbw(const Multisegment& m);

/// Product in the E* normal form, by straightening ordered T-words.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

/// Normal form of the T-word T_{s_1} ... T_{s_k} on the {E*} basis.
AlgebraElement straighten_word(std::span<const Segment> word);

/// Delta(I,J) = sum_sigma (-v)^{l(sigma)} T_{i_1 j_sigma(1)} ... T_{i_k j_sigma(k)},
/// with T_ij = 0 for i > j and T_ii = 1. I, J strictly increasing, equal length.
AlgebraElement quantum_minor(std::span<const int> rows, std::span<const int> cols);

/// m(I,J) = sum_r [i_r, j_r - 1] (terms with i_r = j_r omitted); empty when
/// some i_r > j_r makes the minor vanish.
std::optional<Multisegment> minor_label(std::span<const int> rows, std::span<const int> cols);

/// Counters exposed for tests: rewrite steps applied and memo sizes.
struct StraighteningStats {
  std::size_t swap_steps = 0;
  std::size_t linked_steps = 0;
  std::size_t memo_entries = 0;
};
StraighteningStats straightening_stats();

}  // namespace dcb
