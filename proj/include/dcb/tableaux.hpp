#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcb/criteria.hpp"
#include "dcb/multisegment.hpp"

namespace dcb {

/// Semistandard tableau in French orientation: rows()[0] is the bottom row
/// (row 1), each row weakly increasing, columns strictly increasing upwards.
class Tableau {
 public:
  Tableau() = default;
  /// DomainError unless the rows form a semistandard tableau with positive entries.
  explicit Tableau(std::vector<std::vector<int>> rows);
  /// Columns listed left to right, each read bottom-up (any order is sorted).
  static Tableau from_columns(std::vector<std::vector<int>> columns);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>> columns() const;
  Partition shape() const;
  int max_entry() const;
  bool empty() const { return rows_.empty(); }

  friend bool operator==(const Tableau&, const Tableau&) = default;

  /// One row per line, bottom row first, entries space-separated.
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Insertion tableau P(w) by row bumping.
Tableau rs_p_tableau(const std::vector<int>& word);

/// Reads I_r, ..., I_1 in turn, each in decreasing order.
std::vector<int> product_word(const std::vector<std::vector<int>>& sets);

/// Conjugate of the shape of P(w_pi) equals the sizes |I_k| reordered.
bool frank_condition(const std::vector<std::vector<int>>& sets);

/// Each entry l on row i with l > i contributes [i, l-1].
Multisegment row_multisegment(const Tableau& t);

/// n_pi: row_multisegment of P(w_pi).
Multisegment n_pi(const std::vector<std::vector<int>>& sets);

/// m([1,n], I) = sum_j [j, i_j - 1]: the label of the flag minor <Z_{<=0} ∪ I>.
Multisegment flag_multisegment(const std::vector<int>& set);

/// m_pi = sum_k m([1,n_k], I_k).
Multisegment product_multisegment(const std::vector<std::vector<int>>& sets);

/// b_pi = sum_{k<l} b(m_k, m_l).
int product_b(const std::vector<std::vector<int>>& sets);

/// Z_{<=0} ∪ I.
CoFiniteSet flag_set(const std::vector<int>& set);

/// Reorders pairwise strongly separated sets so that I_l \ I_k ≺ I_k \ I_l for
/// k < l; nullopt when no order works.
std::optional<std::vector<std::vector<int>>> separation_order(
    const std::vector<std::vector<int>>& sets);

/// m(t): row_multisegment of the tableau with columns [1,N] \ C_{m+1-i}.
Multisegment tableau_multisegment(const Tableau& t, int n);

}  // namespace dcb
