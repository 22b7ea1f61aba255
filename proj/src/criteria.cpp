#include "dcb/criteria.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "dcb/errors.hpp"

namespace dcb {

// --- CoFiniteSet ------------------------------------------------------------

CoFiniteSet::CoFiniteSet(int threshold, std::vector<int> extras)
    : threshold_(threshold), extras_(std::move(extras)) {
  for (std::size_t i = 0; i < extras_.size(); ++i) {
    if (extras_[i] <= threshold_)
      throw DomainError("extra " + std::to_string(extras_[i]) + " is not above the threshold " +
                        std::to_string(threshold_));
    if (i > 0 && extras_[i] <= extras_[i - 1])
      throw DomainError("extras must be strictly increasing");
  }
  std::size_t absorbed = 0;
  while (absorbed < extras_.size() && extras_[absorbed] == threshold_ + 1) {
    ++threshold_;
    ++absorbed;
  }
  extras_.erase(extras_.begin(), extras_.begin() + static_cast<std::ptrdiff_t>(absorbed));
}

bool CoFiniteSet::contains(int x) const {
  return x <= threshold_ || std::binary_search(extras_.begin(), extras_.end(), x);
}

std::string CoFiniteSet::to_string() const {
  std::string s = "Z<=" + std::to_string(threshold_);
  if (extras_.empty()) return s;
  s += " u {";
  for (std::size_t i = 0; i < extras_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(extras_[i]);
  }
  return s + "}";
}

std::vector<int> set_difference(const CoFiniteSet& i, const CoFiniteSet& j) {
  // Below both thresholds the sets agree; above the larger top both are empty.
  std::vector<int> out;
  const int lo = std::min(i.threshold(), j.threshold()) + 1;
  const int hi = std::max(i.top(), j.top());
  for (int x = lo; x <= hi; ++x)
    if (i.contains(x) && !j.contains(x)) out.push_back(x);
  return out;
}

// --- Partition --------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> d;
  if (parts_.empty()) return Partition{};
  for (int j = 1; j <= parts_.front(); ++j) {
    int c = 0;
    for (int p : parts_)
      if (p >= j) ++c;
    d.push_back(c);
  }
  return Partition(std::move(d));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty partition");
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
      throw ParseError("partition part '" + item + "' is not an integer");
    parts.push_back(value);
  }
  if (s.back() == ',') throw ParseError("trailing comma in partition '" + s + "'");
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + s + "'");
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      go(left - p, p);
      cur.pop_back();
    }
  };
  if (n > 0) go(n, n);
  return out;
}

// --- Evaluation modules -----------------------------------------------------

CoFiniteSet evaluation_set(const Partition& alpha, int a) {
  const int r = alpha.length();
  std::vector<int> extras;
  for (int i = r; i >= 1; --i) extras.push_back(a - i + 1 + alpha[i - 1]);
  return CoFiniteSet(a - r, std::move(extras));
}

Multisegment evaluation_multisegment(const Partition& alpha, int a) {
  std::vector<Segment> segs;
  for (int i = 1; i <= alpha.length(); ++i) segs.emplace_back(a - i + 1, a - i + alpha[i - 1]);
  return Multisegment(std::move(segs));
}

// --- Separation -------------------------------------------------------------

bool precedes(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) return true;
  return *std::max_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
}

namespace {

// Whether `outer` splits as A' ≺ inner ≺ A''.
bool wraps(const std::vector<int>& outer, const std::vector<int>& inner) {
  if (inner.empty()) return true;
  const auto [lo, hi] = std::minmax_element(inner.begin(), inner.end());
  return std::none_of(outer.begin(), outer.end(), [&](int x) { return *lo < x && x < *hi; });
}

}  // namespace

bool join_related(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      throw DomainError("join relation needs disjoint sets; both contain " + std::to_string(x));
  if (a.size() <= b.size() && wraps(a, b)) return true;
  if (b.size() <= a.size() && wraps(b, a)) return true;
  return false;
}

bool separated(const CoFiniteSet& i, const CoFiniteSet& j) {
  return join_related(set_difference(i, j), set_difference(j, i));
}

bool strongly_separated(const CoFiniteSet& i, const CoFiniteSet& j) {
  const auto ij = set_difference(i, j);
  const auto ji = set_difference(j, i);
  return precedes(ij, ji) || precedes(ji, ij);
}

bool irreducible_pair(const Partition& alpha, int a, const Partition& beta, int b) {
  return separated(evaluation_set(alpha, a), evaluation_set(beta, b));
}

std::optional<std::vector<int>> reducibility_witness(const Partition& alpha, int a,
                                                     const Partition& beta, int b) {
  const CoFiniteSet si = evaluation_set(alpha, a);
  const CoFiniteSet sj = evaluation_set(beta, b);
  const auto x = set_difference(si, sj);
  const auto y = set_difference(sj, si);
  const int c = a - b;

  // i,k from `outer`, j from `inner`, i < j < k.
  auto three = [](const std::vector<int>& outer,
                  const std::vector<int>& inner) -> std::optional<std::vector<int>> {
    if (outer.size() < 2) return std::nullopt;
    for (int j : inner)
      if (outer.front() < j && j < outer.back()) return std::vector<int>{outer.front(), j, outer.back()};
    return std::nullopt;
  };
  if (c > 0) return three(x, y);
  if (c < 0) return three(y, x);

  for (int i : x)
    for (int k : x)
      for (int j : y)
        for (int l : y) {
          if ((i < j && j < k && k < l) || (j < i && i < l && l < k))
            return std::vector<int>{i, j, k, l};
        }
  return std::nullopt;
}

bool main1_pattern(const Partition& alpha, int a, const Partition& beta, int b) {
  return reducibility_witness(alpha, a, beta, b).has_value();
}

std::vector<int> hook_lengths(const Partition& alpha) {
  const Partition d = alpha.conjugate();
  std::vector<int> h;
  for (int i = 1; i <= alpha.length(); ++i)
    for (int j = 1; j <= alpha[i - 1]; ++j) h.push_back(alpha[i - 1] + d[j - 1] - i - j + 1);
  return h;
}

bool hook_irreducible(const Partition& alpha, int shift) {
  const auto h = hook_lengths(alpha);
  const int s = shift < 0 ? -shift : shift;
  return std::find(h.begin(), h.end(), s) == h.end();
}

bool irreducible_family(const std::vector<std::pair<Partition, int>>& family) {
  if (family.empty()) throw DomainError("irreducible_family needs at least one module");
  for (std::size_t k = 0; k < family.size(); ++k)
    for (std::size_t l = k + 1; l < family.size(); ++l)
      if (!irreducible_pair(family[k].first, family[k].second, family[l].first,
                            family[l].second))
        return false;
  return true;
}

// --- Flag minors ------------------------------------------------------------

std::pair<std::vector<int>, std::vector<int>> flag_minor_indices(const CoFiniteSet& s) {
  std::vector<int> rows;
  const int k = static_cast<int>(s.extras().size());
  for (int r = 1; r <= k; ++r) rows.push_back(s.threshold() + r);
  return {rows, s.extras()};
}

AlgebraElement flag_minor(const CoFiniteSet& s) {
  const auto [rows, cols] = flag_minor_indices(s);
  return quantum_minor(rows, cols);
}

Multisegment flag_minor_label(const CoFiniteSet& s) {
  const auto [rows, cols] = flag_minor_indices(s);
  return *minor_label(rows, cols);
}

}  // namespace dcb
