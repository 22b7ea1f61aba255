#include "dcb/canonical.hpp"

#include <mutex>
#include <set>

#include "dcb/errors.hpp"

namespace dcb {

CanonicalBasis::CanonicalBasis(CorrectionOrder order) : order_(order) {}

CanonicalBasis& default_basis() {
  static CanonicalBasis basis;
  return basis;
}

std::size_t CanonicalBasis::rank(const Multisegment& m) {
  {
    std::shared_lock lock(mu_);
    if (auto it = ranks_.find(m); it != ranks_.end()) return it->second;
  }
  const auto& cls = enumerate_by_weight(m.weight());
  std::unique_lock lock(mu_);
  for (std::size_t i = 0; i < cls.size(); ++i) ranks_.emplace(cls[i], i);
  return ranks_.at(m);
}

bool CanonicalBasis::before(const Multisegment& a, const Multisegment& b) {
  if (order_ == CorrectionOrder::LengthMeasure) return extension_less(a, b);
  return rank(a) < rank(b);
}

AlgebraElement CanonicalBasis::u_vector(const Multisegment& m, const Multisegment& n) {
  const AlgebraElement& gm = dual_canonical(m);
  const AlgebraElement& gn = dual_canonical(n);
  AlgebraElement left = multiply(gm, gn);
  left *= LaurentPoly::monomial(b_form(m, n) + 1);
  AlgebraElement right = multiply(gn, gm);
  right *= LaurentPoly::monomial(b_form(n, m) - 1);
  left -= right;
  AlgebraElement out;
  for (const auto& [p, c] : left.support()) out.add_term(p, c.divided_by_v_minus_vinv());
  return out;
}

AlgebraElement CanonicalBasis::aux_vector(const Multisegment& m) {
  if (m.size() <= 1) return dual_pbw(m);
  const Segment top = m.largest();
  return u_vector(m.without_one(top), Multisegment{top});
}

const AlgebraElement& CanonicalBasis::dual_canonical(const Multisegment& m) {
  {
    std::shared_lock lock(mu_);
    if (auto it = memo_.find(m); it != memo_.end()) return *it->second;
  }

  AlgebraElement x = aux_vector(m);
  if (x.coefficient(m) != LaurentPoly(1))
    throw InternalError("V(" + m.to_string() + ") is not unitriangular");

  // Labels are corrected from the bottom up: subtracting gamma G*(n) only
  // touches labels strictly above n.
  auto cmp = [this](const Multisegment& a, const Multisegment& b) { return before(a, b); };
  std::set<Multisegment, decltype(cmp)> pending(cmp);
  for (const auto& [n, c] : x.support())
    if (n != m) pending.insert(n);
  while (!pending.empty()) {
    const Multisegment n = *pending.begin();
    pending.erase(pending.begin());
    const LaurentPoly gamma = symmetric_part(x.coefficient(n));
    if (gamma.is_zero()) continue;
    const AlgebraElement& gn = dual_canonical(n);
    x.subtract_scaled(gn, gamma);
    for (const auto& [p, c] : gn.support())
      if (p != n) pending.insert(p);
  }

  for (const auto& [n, c] : x.support()) {
    if (n == m ? c != LaurentPoly(1) : !c.in_positive_part())
      throw InternalError("correction of G*(" + m.to_string() + ") left coefficient " +
                          c.to_string() + " on E*(" + n.to_string() + ")");
  }

  auto stored = std::make_unique<const AlgebraElement>(std::move(x));
  std::unique_lock lock(mu_);
  return *memo_.emplace(m, std::move(stored)).first->second;
}

void CanonicalBasis::preload(const Multisegment& m, AlgebraElement g) {
  std::unique_lock lock(mu_);
  memo_.emplace(m, std::make_unique<const AlgebraElement>(std::move(g)));
}

std::map<Multisegment, LaurentPoly> CanonicalBasis::expand(const AlgebraElement& x) {
  if (!x.is_homogeneous()) throw DomainError("expand_in_dcb needs a homogeneous element");
  AlgebraElement rest = x;
  std::map<Multisegment, LaurentPoly> out;
  auto cmp = [this](const Multisegment& a, const Multisegment& b) { return before(a, b); };
  std::set<Multisegment, decltype(cmp)> pending(cmp);
  for (const auto& [n, c] : rest.support()) pending.insert(n);
  while (!pending.empty()) {
    const Multisegment p = *pending.begin();
    pending.erase(pending.begin());
    const LaurentPoly c = rest.coefficient(p);
    if (c.is_zero()) continue;
    const AlgebraElement& gp = dual_canonical(p);
    rest.subtract_scaled(gp, c);
    out.emplace(p, c);
    for (const auto& [q, cq] : gp.support())
      if (q != p) pending.insert(q);
  }
  if (!rest.is_zero()) throw InternalError("triangular expansion did not terminate at zero");
  return out;
}

AlgebraElement aux_vector(const Multisegment& m) { return default_basis().aux_vector(m); }

const AlgebraElement& dual_canonical(const Multisegment& m) {
  return default_basis().dual_canonical(m);
}

std::map<Multisegment, LaurentPoly> expand_in_dcb(const AlgebraElement& x) {
  return default_basis().expand(x);
}

std::map<Multisegment, LaurentPoly> structure_constants(const Multisegment& m,
                                                        const Multisegment& n) {
  return expand_in_dcb(multiply(dual_canonical(m), dual_canonical(n)));
}

DcbTable dcb_table(const Weight& w) {
  DcbTable table{w, enumerate_by_weight(w), {}};
  table.expansions.reserve(table.labels.size());
  for (const auto& m : table.labels) table.expansions.push_back(dual_canonical(m));
  return table;
}

std::vector<std::vector<LaurentPoly>> kl_matrix(const Weight& w) {
  const auto& labels = enumerate_by_weight(w);
  std::vector<std::vector<LaurentPoly>> k(labels.size(), std::vector<LaurentPoly>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto row = expand_in_dcb(dual_pbw(labels[i]));
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (auto it = row.find(labels[j]); it != row.end()) k[i][j] = it->second;
  }
  return k;
}

std::optional<Membership> membership_up_to_power(const AlgebraElement& x) {
  if (x.is_zero()) throw DomainError("membership test of the zero element");
  const auto expansion = expand_in_dcb(x);
  if (expansion.size() != 1) return std::nullopt;
  const auto& [label, coef] = *expansion.begin();
  if (!coef.is_monomial() || coef.terms().front().second != 1) return std::nullopt;
  return Membership{-coef.min_exponent(), label};
}

}  // namespace dcb
