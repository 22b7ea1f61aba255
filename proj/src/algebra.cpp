#include "dcb/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "dcb/errors.hpp"

namespace dcb {

// --- AlgebraElement ---------------------------------------------------------

AlgebraElement AlgebraElement::basis(const Multisegment& m, LaurentPoly coef) {
  AlgebraElement x;
  if (!coef.is_zero()) x.terms_.emplace(m, std::move(coef));
  return x;
}

LaurentPoly AlgebraElement::coefficient(const Multisegment& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Weight w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return kv.first.weight() == w; });
}

std::optional<Weight> AlgebraElement::weight() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.weight();
}

void AlgebraElement::add_term(const Multisegment& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c = c * scalar;
  return *this;
}

void AlgebraElement::subtract_scaled(const AlgebraElement& o, const LaurentPoly& scalar) {
  if (scalar.is_zero()) return;
  for (const auto& [m, c] : o.terms_) add_term(m, -(scalar * c));
}

std::vector<Multisegment> AlgebraElement::ordered_labels() const {
  std::vector<Multisegment> labels;
  labels.reserve(terms_.size());
  for (const auto& [m, c] : terms_) labels.push_back(m);
  if (auto w = weight()) {
    const auto& cls = enumerate_by_weight(*w);
    std::unordered_map<Multisegment, std::size_t, MultisegmentHash> rank;
    for (std::size_t i = 0; i < cls.size(); ++i) rank.emplace(cls[i], i);
    std::sort(labels.begin(), labels.end(),
              [&](const Multisegment& a, const Multisegment& b) { return rank.at(a) < rank.at(b); });
  }
  return labels;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : ordered_labels()) {
    const LaurentPoly& c = terms_.at(m);
    std::string coef;
    bool negative = false;
    if (c.is_monomial()) {
      negative = c.terms().front().second < 0;
      const LaurentPoly mag = negative ? -c : c;
      if (mag != LaurentPoly(1)) coef = mag.to_string() + " ";
    } else {
      coef = "(" + c.to_string() + ") ";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef + "E*(" + m.to_string() + ")";
  }
  return out;
}

AlgebraElement dual_pbw(const Multisegment& m) { return AlgebraElement::basis(m); }

// --- Straightening ----------------------------------------------------------

namespace {

using Combination = std::vector<std::pair<Multisegment, LaurentPoly>>;
using CombinationPtr = std::shared_ptr<const Combination>;

struct InsertKey {
  Multisegment word;
  Segment letter;
  friend bool operator==(const InsertKey&, const InsertKey&) = default;
};

struct InsertKeyHash {
  std::size_t operator()(const InsertKey& k) const {
    std::size_t h = k.word.hash();
    h ^= (static_cast<std::size_t>(static_cast<unsigned>(k.letter.start)) * 0x9e3779b97f4a7c15ULL) +
         (h << 6) + (h >> 2);
    h ^= (static_cast<std::size_t>(static_cast<unsigned>(k.letter.end)) * 0xc2b2ae3d27d4eb4fULL) +
         (h << 6) + (h >> 2);
    return h;
  }
};

struct PairKey {
  Multisegment left;
  Multisegment right;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::size_t h = k.left.hash();
    h ^= k.right.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct StraighteningMemo {
  std::shared_mutex mu;
  std::unordered_map<InsertKey, CombinationPtr, InsertKeyHash> inserts;
  std::unordered_map<PairKey, CombinationPtr, PairKeyHash> products;
  std::atomic<std::size_t> swap_steps{0};
  std::atomic<std::size_t> linked_steps{0};
};

StraighteningMemo& memo() {
  static StraighteningMemo m;
  return m;
}

using Accumulator = std::unordered_map<Multisegment, LaurentPoly, MultisegmentHash>;

void accumulate(Accumulator& acc, const Multisegment& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

CombinationPtr finish(Accumulator& acc) {
  auto out = std::make_shared<Combination>();
  out->reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out->emplace_back(m, std::move(c));
  return out;
}

const LaurentPoly& vinv_minus_v() {
  static const LaurentPoly p{{-1, 1}, {1, -1}};
  return p;
}

// T_word * T_letter on the ordered-monomial basis {T_m}; `word` is sorted.
CombinationPtr insert_letter(const Multisegment& word, const Segment& letter) {
  if (word.empty() || !(letter < word.largest())) {
    return std::make_shared<Combination>(Combination{{word.with(letter), LaurentPoly(1)}});
  }
  auto& mm = memo();
  InsertKey key{word, letter};
  {
    std::shared_lock lock(mm.mu);
    if (auto it = mm.inserts.find(key); it != mm.inserts.end()) return it->second;
  }

  // T_w' T_l T_s with l > s:  T_l T_s = v^{-(l,s)} (T_s T_l + (v^-1 - v) T_t' T_t).
  const Segment top = word.largest();
  const Multisegment rest = word.without_one(top);
  const LaurentPoly scale = LaurentPoly::monomial(-cartan(top, letter));
  Accumulator acc;

  ++mm.swap_steps;
  const CombinationPtr swapped = insert_letter(rest, letter);
  for (const auto& [u, a] : *swapped) {
    const LaurentPoly ca = scale * a;
    const CombinationPtr moved = insert_letter(u, top);
    for (const auto& [p, b] : *moved) accumulate(acc, p, ca * b);
  }

  if (linked(top, letter)) {
    ++mm.linked_steps;
    const Segment uni = *segment_union(top, letter);
    const auto inter = segment_intersection(top, letter);
    Multisegment replaced = rest.with(uni);
    if (inter) replaced = replaced.with(*inter);
    const Multisegment before = word.with(letter);
    if (replaced.weight() != before.weight() ||
        replaced.square_length_sum() <= before.square_length_sum())
      throw InternalError("straightening step did not advance the move order");

    const LaurentPoly cl = scale * vinv_minus_v();
    CombinationPtr base = inter ? insert_letter(rest, *inter)
                                : std::make_shared<Combination>(Combination{{rest, LaurentPoly(1)}});
    for (const auto& [u, a] : *base) {
      const LaurentPoly ca = cl * a;
      const CombinationPtr merged = insert_letter(u, uni);
      for (const auto& [p, b] : *merged) accumulate(acc, p, ca * b);
    }
  }

  CombinationPtr result = finish(acc);
  std::unique_lock lock(mm.mu);
  return mm.inserts.emplace(std::move(key), std::move(result)).first->second;
}

// T_left * T_right on the {T_m} basis.
CombinationPtr multiply_ordered(const Multisegment& left, const Multisegment& right) {
  if (right.empty())
    return std::make_shared<Combination>(Combination{{left, LaurentPoly(1)}});
  if (left.empty() || !(right.segments().front() < left.largest()))
    return std::make_shared<Combination>(Combination{{left + right, LaurentPoly(1)}});
  auto& mm = memo();
  PairKey key{left, right};
  {
    std::shared_lock lock(mm.mu);
    if (auto it = mm.products.find(key); it != mm.products.end()) return it->second;
  }
  Combination cur{{left, LaurentPoly(1)}};
  for (const Segment& s : right.segments()) {
    Accumulator acc;
    for (const auto& [u, a] : cur) {
      const CombinationPtr inserted = insert_letter(u, s);
      for (const auto& [p, b] : *inserted) accumulate(acc, p, a * b);
    }
    cur.clear();
    for (auto& [m, c] : acc)
      if (!c.is_zero()) cur.emplace_back(m, std::move(c));
  }
  auto result = std::make_shared<const Combination>(std::move(cur));
  std::unique_lock lock(mm.mu);
  return mm.products.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  Accumulator acc;
  for (const auto& [a, ca] : x.support()) {
    for (const auto& [b, cb] : y.support()) {
      // E*(m) = v^{sum C(m_s,2)} T_m on both sides of the product.
      const LaurentPoly cab = ca * cb;
      const int lift = a.pair_count() + b.pair_count();
      const CombinationPtr product = multiply_ordered(a, b);
      for (const auto& [p, c] : *product)
        accumulate(acc, p, (cab * c).shifted(lift - p.pair_count()));
    }
  }
  AlgebraElement out;
  for (const auto& [p, c] : acc) out.add_term(p, c);
  return out;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

AlgebraElement straighten_word(std::span<const Segment> word) {
  Combination cur{{Multisegment{}, LaurentPoly(1)}};
  for (const Segment& s : word) {
    Accumulator acc;
    for (const auto& [u, a] : cur) {
      const CombinationPtr inserted = insert_letter(u, s);
      for (const auto& [p, b] : *inserted) accumulate(acc, p, a * b);
    }
    cur.clear();
    for (auto& [m, c] : acc)
      if (!c.is_zero()) cur.emplace_back(m, std::move(c));
  }
  AlgebraElement out;
  for (const auto& [p, c] : cur) out.add_term(p, c.shifted(-p.pair_count()));
  return out;
}

namespace {

void check_index_lists(std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size())
    throw DomainError("quantum minor needs index lists of equal length");
  auto increasing = [](std::span<const int> xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
  };
  if (!increasing(rows) || !increasing(cols))
    throw DomainError("quantum minor index lists must be strictly increasing");
}

}  // namespace

AlgebraElement quantum_minor(std::span<const int> rows, std::span<const int> cols) {
  check_index_lists(rows, cols);
  const std::size_t k = rows.size();
  if (k > 8) throw DomainError("quantum minors are supported up to size 8");
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  AlgebraElement total;
  do {
    std::vector<Segment> word;
    bool vanishes = false;
    for (std::size_t r = 0; r < k && !vanishes; ++r) {
      const int i = rows[r];
      const int j = cols[sigma[r]];
      if (i > j) vanishes = true;
      else if (i < j) word.emplace_back(i, j - 1);
    }
    if (vanishes) continue;
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (sigma[a] > sigma[b]) ++inversions;
    const LaurentPoly sign = LaurentPoly::monomial(inversions, inversions % 2 ? -1 : 1);
    AlgebraElement term = straighten_word(word);
    term *= sign;
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::optional<Multisegment> minor_label(std::span<const int> rows, std::span<const int> cols) {
  check_index_lists(rows, cols);
  std::vector<Segment> segs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] > cols[r]) return std::nullopt;
    if (rows[r] < cols[r]) segs.emplace_back(rows[r], cols[r] - 1);
  }
  return Multisegment(std::move(segs));
}

StraighteningStats straightening_stats() {
  auto& mm = memo();
  std::shared_lock lock(mm.mu);
  return {mm.swap_steps.load(), mm.linked_steps.load(), mm.inserts.size() + mm.products.size()};
}

}  // namespace dcb
