#pragma once

#include <random>

#include "dcb/tableaux.hpp"

namespace dcb {

template <class Rng>
std::vector<std::vector<int>> random_strongly_separated(Rng& rng, int r, int max_entry) {
  std::uniform_int_distribution<int> coin(0, 1);
  auto draw = [&] {
    std::vector<int> s;
    while (s.empty())
      for (int x = 1; x <= max_entry; ++x)
        if (coin(rng)) s.push_back(x);
    return s;
  };
  for (;;) {
    std::vector<std::vector<int>> sets;
    for (int k = 0; k < r; ++k) sets.push_back(draw());
    bool ok = true;
    for (int k = 0; k < r && ok; ++k)
      for (int l = k + 1; l < r && ok; ++l)
        ok = strongly_separated(flag_set(sets[k]), flag_set(sets[l]));
    if (ok) return sets;
  }
}

template <class Rng>
std::vector<std::pair<Partition, int>> random_family(Rng& rng, int r, int max_size,
                                                     int max_shift) {
  std::vector<Partition> pool;
  for (int n = 1; n <= max_size; ++n)
    for (auto& p : partitions_of(n)) pool.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> shift(-max_shift, max_shift);
  std::vector<std::pair<Partition, int>> out;
  for (int k = 0; k < r; ++k) out.emplace_back(pool[pick(rng)], shift(rng));
  return out;
}

}  // namespace dcb
