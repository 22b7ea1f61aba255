#include "dcb/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "dcb/errors.hpp"

namespace dcb {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long long>> terms) {
  for (const auto& [e, c] : terms) terms_.emplace_back(e, BigInt(c));
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace_back(exponent, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

bool LaurentPoly::is_bar_symmetric() const {
  const std::size_t n = terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = terms_[i];
    const auto& b = terms_[n - 1 - i];
    if (a.first != -b.first || a.second != b.second) return false;
  }
  return true;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second > 0; });
}

bool LaurentPoly::in_positive_part() const {
  return terms_.empty() || terms_.front().first >= 1;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

namespace {

// Merge two sorted term lists with a sign on the second operand.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate_b ? BigInt(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigInt c = negate_b ? BigInt(a[i].second - b[j].second)
                          : BigInt(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  if (a.is_monomial() || b.is_monomial()) {
    const auto& mono = a.is_monomial() ? a : b;
    const auto& other = a.is_monomial() ? b : a;
    const auto& [me, mc] = mono.terms_.front();
    r.terms_.reserve(other.terms_.size());
    for (const auto& [e, c] : other.terms_) r.terms_.emplace_back(e + me, c * mc);
    return r;
  }
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) r.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const LaurentPoly& scale) {
  *this += scale * o;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::divided_by_v_minus_vinv() const {
  if (is_zero()) return {};
  // q(v)(v - v^-1) = p  <=>  q_{e-1} - q_{e+1} = p_e; solve from the top.
  const int hi = max_exponent();
  const int lo = min_exponent();
  std::map<int, BigInt> q;
  for (int k = hi - 1; k >= lo + 1; --k) {
    BigInt c = coefficient(k + 1);
    if (auto it = q.find(k + 2); it != q.end()) c += it->second;
    if (c != 0) q.emplace(k, std::move(c));
  }
  std::vector<Term> terms(q.begin(), q.end());
  LaurentPoly quotient = from_terms(std::move(terms));
  if (quotient * LaurentPoly{{1, 1}, {-1, -1}} != *this)
    throw InternalError("Laurent polynomial " + to_string() +
                        " is not divisible by v - v^-1");
  return quotient;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<int>{}(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(c.str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty Laurent polynomial");

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad Laurent polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](bool allow_sign) -> BigInt {
    std::size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos) fail("expected integer at offset " + std::to_string(start));
    return BigInt(s.substr(start, pos - start));
  };

  std::vector<LaurentPoly::Term> terms;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    BigInt coef = 1;
    bool have_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = read_int(false);
      have_coef = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'v') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = static_cast<int>(read_int(true));
      }
    } else if (!have_coef) {
      fail("expected coefficient or 'v' at offset " + std::to_string(pos));
    }
    terms.emplace_back(exponent, sign * coef);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_integer(int a) {
  if (a == 0) return {};
  if (a < 0) return -quantum_integer(-a);
  std::vector<LaurentPoly::Term> terms;
  for (int e = a - 1; e >= 1 - a; e -= 2) terms.emplace_back(e, BigInt(1));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int a) {
  if (a < 0) throw DomainError("quantum_factorial of negative integer " + std::to_string(a));
  LaurentPoly r = 1;
  for (int k = 2; k <= a; ++k) r *= quantum_integer(k);
  return r;
}

LaurentPoly symmetric_part(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e > 0) break;
    terms.emplace_back(e, c);
    if (e < 0) terms.emplace_back(-e, c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace dcb
