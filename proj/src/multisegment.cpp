#include "dcb/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <queue>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "dcb/errors.hpp"

namespace dcb {

Segment::Segment(int s, int e) : start(s), end(e) {
  if (s > e)
    throw DomainError("segment [" + std::to_string(s) + "," + std::to_string(e) +
                      "] has start > end");
}

std::string Segment::to_string() const {
  if (start == end) return "[" + std::to_string(start) + "]";
  return "[" + std::to_string(start) + "," + std::to_string(end) + "]";
}

std::strong_ordering compare_segments(const Segment& a, const Segment& b) { return a <=> b; }

std::optional<Segment> segment_union(const Segment& a, const Segment& b) {
  // Adjacent intervals also unite: [0,1] u [2,3] = [0,3].
  if (a.end + 1 < b.start || b.end + 1 < a.start) return std::nullopt;
  return Segment(std::min(a.start, b.start), std::max(a.end, b.end));
}

std::optional<Segment> segment_intersection(const Segment& a, const Segment& b) {
  const int s = std::max(a.start, b.start);
  const int e = std::min(a.end, b.end);
  if (s > e) return std::nullopt;
  return Segment(s, e);
}

bool linked(const Segment& a, const Segment& b) {
  auto u = segment_union(a, b);
  return u && *u != a && *u != b;
}

// --- Weight -----------------------------------------------------------------

Weight::Weight(std::map<int, int> counts) {
  for (const auto& [k, d] : counts) {
    if (d < 0) throw DomainError("weight has negative entry at position " + std::to_string(k));
    if (d > 0) counts_.emplace(k, d);
  }
}

Weight Weight::of(const Segment& s) {
  Weight w;
  for (int k = s.start; k <= s.end; ++k) w.counts_[k] = 1;
  return w;
}

int Weight::at(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

int Weight::total() const {
  int t = 0;
  for (const auto& [k, d] : counts_) t += d;
  return t;
}

Weight& Weight::operator+=(const Weight& o) {
  for (const auto& [k, d] : o.counts_) counts_[k] += d;
  return *this;
}

std::string Weight::to_string() const {
  std::string out;
  for (const auto& [k, d] : counts_) {
    if (!out.empty()) out += ',';
    out += std::to_string(k) + ":" + std::to_string(d);
  }
  return out;
}

Weight parse_weight(std::string_view text) {
  std::map<int, int> counts;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty weight");
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("weight entry '" + item + "' is not of the form pos:count");
    try {
      std::size_t used_a = 0, used_b = 0;
      const std::string pos_text = item.substr(0, colon);
      const std::string cnt_text = item.substr(colon + 1);
      int pos = std::stoi(pos_text, &used_a);
      int cnt = std::stoi(cnt_text, &used_b);
      if (used_a != pos_text.size() || used_b != cnt_text.size()) throw std::invalid_argument("");
      if (cnt <= 0) throw ParseError("weight count must be positive in '" + item + "'");
      if (counts.count(pos)) throw ParseError("duplicate position in weight '" + item + "'");
      counts[pos] = cnt;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("weight entry '" + item + "' is not of the form pos:count");
    }
  }
  return Weight(std::move(counts));
}

int cartan(const Weight& a, const Weight& b) {
  int s = 0;
  for (const auto& [k, d] : a.counts()) {
    s += 2 * d * b.at(k);
    s -= d * b.at(k - 1);
    s -= d * b.at(k + 1);
  }
  return s;
}

int cartan(const Segment& a, const Segment& b) {
  // (alpha_[i,j], alpha_[k,l]) only depends on overlap and adjacency.
  int overlap = 0;
  if (auto in = segment_intersection(a, b)) overlap = in->length();
  int adjacent = 0;
  for (int k = a.start; k <= a.end; ++k) {
    if (b.contains(k - 1)) ++adjacent;
    if (b.contains(k + 1)) ++adjacent;
  }
  return 2 * overlap - adjacent;
}

// --- Multisegment -----------------------------------------------------------

Multisegment::Multisegment(std::initializer_list<Segment> segs) : segs_(segs) {
  std::sort(segs_.begin(), segs_.end());
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end());
}

std::vector<std::pair<Segment, int>> Multisegment::entries() const {
  std::vector<std::pair<Segment, int>> out;
  for (const auto& s : segs_) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.emplace_back(s, 1);
    }
  }
  return out;
}

int Multisegment::multiplicity(const Segment& s) const {
  auto [lo, hi] = std::equal_range(segs_.begin(), segs_.end(), s);
  return static_cast<int>(hi - lo);
}

int Multisegment::degree() const {
  int d = 0;
  for (const auto& s : segs_) d += s.length();
  return d;
}

Weight Multisegment::weight() const {
  std::map<int, int> counts;
  for (const auto& s : segs_)
    for (int k = s.start; k <= s.end; ++k) ++counts[k];
  return Weight(std::move(counts));
}

long long Multisegment::square_length_sum() const {
  long long t = 0;
  for (const auto& s : segs_) t += static_cast<long long>(s.length()) * s.length();
  return t;
}

int Multisegment::pair_count() const {
  int c = 0;
  for (const auto& [s, k] : entries()) c += k * (k - 1) / 2;
  return c;
}

Multisegment Multisegment::without_one(const Segment& s) const {
  Multisegment r = *this;
  auto it = std::lower_bound(r.segs_.begin(), r.segs_.end(), s);
  if (it == r.segs_.end() || *it != s)
    throw DomainError("segment " + s.to_string() + " not in " + to_string());
  r.segs_.erase(it);
  return r;
}

Multisegment Multisegment::with(const Segment& s) const {
  Multisegment r = *this;
  r.segs_.insert(std::upper_bound(r.segs_.begin(), r.segs_.end(), s), s);
  return r;
}

Multisegment Multisegment::translated(int n) const {
  Multisegment r = *this;
  for (auto& s : r.segs_) {
    s.start += n;
    s.end += n;
  }
  return r;
}

Multisegment& Multisegment::operator+=(const Multisegment& o) {
  std::vector<Segment> merged;
  merged.reserve(segs_.size() + o.segs_.size());
  std::merge(segs_.begin(), segs_.end(), o.segs_.begin(), o.segs_.end(),
             std::back_inserter(merged));
  segs_ = std::move(merged);
  return *this;
}

std::size_t Multisegment::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& s : segs_) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(s.start));
    h *= 1099511628211ULL;
    h ^= static_cast<std::size_t>(static_cast<unsigned>(s.end)) << 1;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Multisegment::to_string() const {
  if (segs_.empty()) return "0";
  std::string out;
  for (const auto& [s, k] : entries()) {
    if (!out.empty()) out += '+';
    if (k != 1) out += std::to_string(k);
    out += s.to_string();
  }
  return out;
}

Multisegment parse_multisegment(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty() || s == "0") return {};

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("bad multisegment '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() -> long long {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos || pos - digits > 9) fail("expected integer at offset " + std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  };

  std::vector<Segment> segs;
  while (true) {
    long long mult = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mult = read_int();
      if (pos < s.size() && s[pos] == '*') ++pos;
      if (mult <= 0) fail("multiplicity must be positive");
    }
    expect('[');
    long long a = read_int();
    long long b = a;
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      b = read_int();
    }
    expect(']');
    if (a > b) fail("segment start exceeds end");
    for (long long k = 0; k < mult; ++k)
      segs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    if (pos == s.size()) break;
    expect('+');
  }
  return Multisegment(std::move(segs));
}

int degree(const Multisegment& m) { return m.degree(); }
Weight weight(const Multisegment& m) { return m.weight(); }

int b_form(const Multisegment& m, const Multisegment& n) {
  int total = 0;
  const auto me = m.entries();
  const auto ne = n.entries();
  for (const auto& [sp, mk] : me) {
    for (const auto& [s, nk] : ne) {
      if (sp > s) total += mk * nk * cartan(s, sp);
      if (sp == s) total += mk * nk;
    }
  }
  return total;
}

std::vector<Multisegment> elementary_moves(const Multisegment& m) {
  const auto ent = m.entries();
  std::set<Multisegment> out;
  for (std::size_t i = 0; i < ent.size(); ++i) {
    for (std::size_t j = i + 1; j < ent.size(); ++j) {
      const Segment& a = ent[i].first;
      const Segment& b = ent[j].first;
      if (!linked(a, b)) continue;
      Multisegment n = m.without_one(a).without_one(b).with(*segment_union(a, b));
      if (auto in = segment_intersection(a, b)) n = n.with(*in);
      out.insert(std::move(n));
    }
  }
  return {out.begin(), out.end()};
}

bool extension_less(const Multisegment& a, const Multisegment& b) {
  const auto ka = a.square_length_sum();
  const auto kb = b.square_length_sum();
  if (ka != kb) return ka < kb;
  return a < b;
}

namespace {

using UpperSet = std::unordered_set<Multisegment, MultisegmentHash>;

struct UpperSetCache {
  std::shared_mutex mu;
  std::unordered_map<Multisegment, std::shared_ptr<const UpperSet>, MultisegmentHash> sets;
};

UpperSetCache& upper_cache() {
  static UpperSetCache cache;
  return cache;
}

struct EnumerationCache {
  std::shared_mutex mu;
  std::map<Weight, std::unique_ptr<const std::vector<Multisegment>>> classes;
};

EnumerationCache& enumeration_cache() {
  static EnumerationCache cache;
  return cache;
}

// Leftmost uncovered position must be the start of some segment; choose its end,
// forcing nondecreasing ends among segments that share a start.
void generate(std::map<int, int>& remaining, int min_end_same_start, int last_start,
              std::vector<Segment>& current, std::vector<Multisegment>& out) {
  auto it = remaining.begin();
  while (it != remaining.end() && it->second == 0) ++it;
  if (it == remaining.end()) {
    out.emplace_back(current);
    return;
  }
  const int start = it->first;
  const int lower = start == last_start ? min_end_same_start : start;
  for (int end = start;; ++end) {
    auto jt = remaining.find(end);
    if (jt == remaining.end() || jt->second == 0) break;
    if (end < lower) continue;
    for (int k = start; k <= end; ++k) --remaining[k];
    current.emplace_back(start, end);
    generate(remaining, end, start, current, out);
    current.pop_back();
    for (int k = start; k <= end; ++k) ++remaining[k];
  }
}

// Same recursion as generate(), counting only; stops once the count passes limit.
void count_classes(std::map<int, int>& remaining, int min_end_same_start, int last_start,
                   std::size_t limit, std::size_t& count) {
  if (count > limit) return;
  auto it = remaining.begin();
  while (it != remaining.end() && it->second == 0) ++it;
  if (it == remaining.end()) {
    ++count;
    return;
  }
  const int start = it->first;
  const int lower = start == last_start ? min_end_same_start : start;
  for (int end = start;; ++end) {
    auto jt = remaining.find(end);
    if (jt == remaining.end() || jt->second == 0) break;
    if (end < lower) continue;
    for (int k = start; k <= end; ++k) --remaining[k];
    count_classes(remaining, end, start, limit, count);
    for (int k = start; k <= end; ++k) ++remaining[k];
  }
}

std::vector<Multisegment> topological_order(std::vector<Multisegment> cls) {
  std::sort(cls.begin(), cls.end());
  std::unordered_map<Multisegment, std::size_t, MultisegmentHash> index;
  for (std::size_t i = 0; i < cls.size(); ++i) index.emplace(cls[i], i);
  std::vector<std::vector<std::size_t>> succ(cls.size());
  std::vector<int> indeg(cls.size(), 0);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (const auto& n : elementary_moves(cls[i])) {
      const std::size_t j = index.at(n);
      succ[i].push_back(j);
      ++indeg[j];
    }
  }
  // cls is lexicographically sorted, so the smallest index is the tie-break.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<Multisegment> order;
  order.reserve(cls.size());
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    order.push_back(cls[i]);
    for (std::size_t j : succ[i])
      if (--indeg[j] == 0) ready.push(j);
  }
  if (order.size() != cls.size()) throw InternalError("move graph has a cycle");
  return order;
}

}  // namespace

std::shared_ptr<const UpperSet> upper_set(const Multisegment& m) {
  auto& cache = upper_cache();
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.sets.find(m); it != cache.sets.end()) return it->second;
  }
  auto result = std::make_shared<UpperSet>();
  std::deque<Multisegment> frontier{m};
  result->insert(m);
  while (!frontier.empty()) {
    Multisegment cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& n : elementary_moves(cur)) {
      if (n.square_length_sum() <= cur.square_length_sum())
        throw InternalError("elementary move did not increase the length measure");
      if (result->insert(n).second) frontier.push_back(std::move(n));
    }
  }
  std::unique_lock lock(cache.mu);
  return cache.sets.emplace(m, std::move(result)).first->second;
}

bool dominates(const Multisegment& m, const Multisegment& n) {
  if (m == n) return true;
  if (m.square_length_sum() >= n.square_length_sum()) return false;
  if (m.weight() != n.weight()) return false;
  return upper_set(m)->count(n) > 0;
}

const std::vector<Multisegment>& enumerate_by_weight(const Weight& w) {
  auto& cache = enumeration_cache();
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.classes.find(w); it != cache.classes.end()) return *it->second;
  }
  std::map<int, int> remaining = w.counts();
  std::vector<Segment> current;
  std::vector<Multisegment> cls;
  if (!remaining.empty()) {
    generate(remaining, 0, remaining.begin()->first - 1, current, cls);
  } else {
    cls.emplace_back();
  }
  auto ordered = std::make_unique<const std::vector<Multisegment>>(topological_order(std::move(cls)));
  std::unique_lock lock(cache.mu);
  return *cache.classes.emplace(w, std::move(ordered)).first->second;
}

std::size_t count_by_weight(const Weight& w, std::size_t limit) {
  std::map<int, int> remaining = w.counts();
  if (remaining.empty()) return 1;
  std::size_t count = 0;
  count_classes(remaining, 0, remaining.begin()->first - 1, limit, count);
  return count;
}

}  // namespace dcb
