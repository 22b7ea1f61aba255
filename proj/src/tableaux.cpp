#include "dcb/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dcb/errors.hpp"

namespace dcb {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (row.empty()) throw DomainError("tableau has an empty row below a nonempty one");
    if (i > 0 && row.size() > rows_[i - 1].size())
      throw DomainError("tableau row lengths must weakly decrease upwards");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] <= 0) throw DomainError("tableau entries must be positive");
      if (j > 0 && row[j] < row[j - 1]) throw DomainError("tableau rows must weakly increase");
      if (i > 0 && row[j] <= rows_[i - 1][j])
        throw DomainError("tableau columns must strictly increase");
    }
  }
}

Tableau Tableau::from_columns(std::vector<std::vector<int>> columns) {
  std::vector<std::vector<int>> rows;
  for (auto& col : columns) {
    std::sort(col.begin(), col.end());
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (rows.size() <= i) rows.emplace_back();
      rows[i].push_back(col[i]);
    }
  }
  return Tableau(std::move(rows));
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
  for (const auto& row : rows_)
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  return cols;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_) m = std::max(m, row.back());
  return m;
}

std::string Tableau::to_string() const {
  std::string s;
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(row[j]);
    }
    s += '\n';
  }
  return s;
}

Tableau rs_p_tableau(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    if (x <= 0) throw DomainError("insertion letters must be positive");
    for (std::size_t i = 0;; ++i) {
      if (i == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto& row = rows[i];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return Tableau(std::move(rows));
}

namespace {

void check_sets(const std::vector<std::vector<int>>& sets) {
  for (const auto& s : sets) {
    if (s.empty()) throw DomainError("flag minor sets must be nonempty");
    std::set<int> seen;
    for (int x : s) {
      if (x <= 0) throw DomainError("flag minor sets must lie in the positive integers");
      if (!seen.insert(x).second) throw DomainError("flag minor sets must not repeat entries");
    }
  }
}

std::vector<int> sorted(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<int> product_word(const std::vector<std::vector<int>>& sets) {
  check_sets(sets);
  std::vector<int> w;
  for (auto k = sets.rbegin(); k != sets.rend(); ++k) {
    auto s = sorted(*k);
    w.insert(w.end(), s.rbegin(), s.rend());
  }
  return w;
}

bool frank_condition(const std::vector<std::vector<int>>& sets) {
  const Tableau p = rs_p_tableau(product_word(sets));
  std::vector<int> sizes;
  for (const auto& s : sets) sizes.push_back(static_cast<int>(s.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return p.shape().conjugate().parts() == sizes;
}

Multisegment row_multisegment(const Tableau& t) {
  std::vector<Segment> segs;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    for (int l : t.rows()[r])
      if (l > i) segs.emplace_back(i, l - 1);
  }
  return Multisegment(std::move(segs));
}

Multisegment n_pi(const std::vector<std::vector<int>>& sets) {
  return row_multisegment(rs_p_tableau(product_word(sets)));
}

Multisegment flag_multisegment(const std::vector<int>& set) {
  check_sets({set});
  const auto s = sorted(set);
  std::vector<Segment> segs;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const int row = static_cast<int>(j) + 1;
    if (s[j] > row) segs.emplace_back(row, s[j] - 1);
  }
  return Multisegment(std::move(segs));
}

Multisegment product_multisegment(const std::vector<std::vector<int>>& sets) {
  Multisegment m;
  for (const auto& s : sets) m += flag_multisegment(s);
  return m;
}

int product_b(const std::vector<std::vector<int>>& sets) {
  int b = 0;
  for (std::size_t k = 0; k < sets.size(); ++k)
    for (std::size_t l = k + 1; l < sets.size(); ++l)
      b += b_form(flag_multisegment(sets[k]), flag_multisegment(sets[l]));
  return b;
}

CoFiniteSet flag_set(const std::vector<int>& set) {
  check_sets({set});
  return CoFiniteSet(0, sorted(set));
}

std::optional<std::vector<std::vector<int>>> separation_order(
    const std::vector<std::vector<int>>& sets) {
  std::vector<std::size_t> idx(sets.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  do {
    bool ok = true;
    for (std::size_t k = 0; k < idx.size() && ok; ++k)
      for (std::size_t l = k + 1; l < idx.size() && ok; ++l) {
        const CoFiniteSet ik = flag_set(sets[idx[k]]);
        const CoFiniteSet il = flag_set(sets[idx[l]]);
        ok = precedes(set_difference(il, ik), set_difference(ik, il));
      }
    if (ok) {
      std::vector<std::vector<int>> out;
      for (std::size_t i : idx) out.push_back(sets[i]);
      return out;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return std::nullopt;
}

Multisegment tableau_multisegment(const Tableau& t, int n) {
  if (n <= 0) throw DomainError("N must be positive");
  if (t.max_entry() > n)
    throw DomainError("tableau entry " + std::to_string(t.max_entry()) + " exceeds N = " +
                      std::to_string(n));
  const auto cols = t.columns();
  std::vector<std::vector<int>> dual;
  for (auto c = cols.rbegin(); c != cols.rend(); ++c) {
    std::vector<int> d;
    for (int x = 1; x <= n; ++x)
      if (!std::binary_search(c->begin(), c->end(), x)) d.push_back(x);
    if (!d.empty()) dual.push_back(std::move(d));
  }
  return row_multisegment(Tableau::from_columns(std::move(dual)));
}

}  // namespace dcb
