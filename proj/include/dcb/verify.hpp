#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcb/criteria.hpp"
#include "dcb/multisegment.hpp"

namespace dcb {

/// Size limits for the property suites. Defaults match the CLI defaults.
struct VerifyBounds {
  int max_degree = 5;         // eqrei, positivity, triangular
  int max_part_sum = 3;       // oracle: |alpha|, |beta| <= this
  int shift_lo = -5;          // oracle: b - a range
  int shift_hi = 5;
  int triples = 100;          // oracle: random triples for the pairwise family test
  int triple_shift = 4;       // oracle: triple shifts in [-triple_shift, triple_shift]
  int index_lo = 1;           // minors: row/column indices window
  int index_hi = 5;
  int max_cols = 5;           // minors: largest minor size
  int max_entry = 6;          // frank: sets inside [1, max_entry]
  int families = 50;          // frank: random strongly separated triples
  int hook_max_n = 6;         // hooks: partitions of n <= this
  int hook_max_shift = 12;    // hooks: |shift| <= this
  int pattern_max_n = 4;      // hooks: pattern vs separation cross-check sizes
  int pattern_max_shift = 8;
  std::uint64_t seed = 20260101;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void check(bool ok, const std::string& what);
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. DomainError for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyBounds& bounds);

SuiteReport verify_eqrei(const VerifyBounds& bounds);
SuiteReport verify_positivity(const VerifyBounds& bounds);
SuiteReport verify_triangular(const VerifyBounds& bounds);
SuiteReport verify_oracle(const VerifyBounds& bounds);
SuiteReport verify_minors(const VerifyBounds& bounds);
SuiteReport verify_frank(const VerifyBounds& bounds);
SuiteReport verify_hooks(const VerifyBounds& bounds);

/// Nonempty multisegments supported in [0, max_degree - 1] of degree <= max_degree.
std::vector<Multisegment> small_multisegments(int max_degree);

/// Pairs (m, n) of the above with deg m + deg n <= max_degree whose joint
/// support starts at 0 (one representative per translation class).
std::vector<std::pair<Multisegment, Multisegment>> small_pairs(int max_degree);

/// Verdict of the algebraic route: the product of the G*(m(alpha_k, a_k)) is a
/// dual canonical vector up to a power of v.
bool algebraic_irreducible(const std::vector<std::pair<Partition, int>>& family);

/// Random nonempty subsets of [1, max_entry], r of them, pairwise strongly separated
/// as flag sets Z_{<=0} ∪ I.
template <class Rng>
std::vector<std::vector<int>> random_strongly_separated(Rng& rng, int r, int max_entry);

/// Random evaluation data with |alpha| <= max_size and shifts in [-max_shift, max_shift].
template <class Rng>
std::vector<std::pair<Partition, int>> random_family(Rng& rng, int r, int max_size, int max_shift);

}  // namespace dcb

#include "dcb/verify_random.hpp"
