#include "twistbrack/koszul_resolution.hpp"

#include <algorithm>
#include <numeric>

#include "twistbrack/error.hpp"

namespace twistbrack {

KoszulResolution::KoszulResolution(const SkewGroupAlgebra& algebra, std::vector<int> contraction_order)
    : algebra_(&algebra), order_(std::move(contraction_order)) {
  const int n = algebra.num_variables();
  if (order_.empty()) order_ = natural_order(n);
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != natural_order(n)) {
    throw Error(ErrorCode::ValidationError, "contraction order must be a permutation of the variables");
  }
}

KoszulResolution::~KoszulResolution() = default;

std::vector<int> KoszulResolution::natural_order(int num_variables) {
  std::vector<int> order(static_cast<std::size_t>(num_variables));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> KoszulResolution::reversed_order(int num_variables) {
  std::vector<int> order = natural_order(num_variables);
  std::reverse(order.begin(), order.end());
  return order;
}

ChainD KoszulResolution::boundary(const KoszulTensor& t) const {
  ChainD out;
  int position = 0;
  for (int i : t.wedge.indices()) {
    const Fp sign = field().sign(position++);
    const Wedge rest = t.wedge.without(i);
    const Monomial xi = Monomial::variable(i);
    out.add(KoszulTensor{t.left * xi, rest, t.right}, sign);
    out.add(KoszulTensor{t.left, rest, t.right * xi}, -sign);
  }
  return out;
}

ChainD KoszulResolution::boundary(const ChainD& d) const {
  ChainD out;
  for (const auto& [t, c] : d) out.add(boundary(t), c);
  return out;
}

ChainD KoszulResolution::differential(const KoszulTensor& t) const {
  if (t.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "Koszul differential needs degree >= 1");
  return boundary(t);
}

ChainD KoszulResolution::differential(const ChainD& d) const {
  ChainD out;
  for (const auto& [t, c] : d) out.add(differential(t), c);
  return out;
}

Monomial KoszulResolution::augmentation(const KoszulTensor& t) const {
  if (t.degree() != 0) throw Error(ErrorCode::WrongDegree, "Koszul augmentation is defined on degree 0");
  return t.left * t.right;
}

Poly KoszulResolution::augmentation(const ChainD& d) const {
  Poly out;
  for (const auto& [t, c] : d) out.add(augmentation(t), c);
  return out;
}

std::vector<SignedPair<KoszulTensor>> KoszulResolution::diagonal(const KoszulTensor& t) const {
  std::vector<SignedPair<KoszulTensor>> out;
  const std::uint32_t all = t.wedge.bits();
  // Enumerate subsets in increasing size, then lexicographically, for a stable order.
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = all;; s = (s - 1) & all) {
    subsets.push_back(s);
    if (s == 0) break;
  }
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return Wedge::from_bits(a).indices() < Wedge::from_bits(b).indices();
  });
  for (std::uint32_t s : subsets) {
    const Wedge first = Wedge::from_bits(s);
    const Wedge second = Wedge::from_bits(all & ~s);
    out.push_back({shuffle_sign(first, second), KoszulTensor{t.left, first, Monomial()},
                   KoszulTensor{Monomial(), second, t.right}});
  }
  return out;
}

ChainD KoszulResolution::act(GroupIndex g, const KoszulTensor& t) const {
  ChainD out;
  const Poly left = algebra_->act(g, t.left);
  const Poly right = algebra_->act(g, t.right);
  const LinearCombination<Wedge> wedges = algebra_->act(g, t.wedge);
  for (const auto& [l, cl] : left)
    for (const auto& [w, cw] : wedges)
      for (const auto& [r, cr] : right) out.add(KoszulTensor{l, w, r}, cl * cw * cr);
  return out;
}

ChainD KoszulResolution::act(GroupIndex g, const ChainD& d) const {
  if (g == algebra_->group().identity()) return d;
  ChainD out;
  for (const auto& [t, c] : d) out.add(act(g, t), c);
  return out;
}

ChainD KoszulResolution::multiply(const Monomial& left, const KoszulTensor& t, const Monomial& right) const {
  ChainD out;
  out.add(KoszulTensor{left * t.left, t.wedge, t.right * right}, field().one());
  return out;
}

ChainD KoszulResolution::multiply(const Poly& left, const ChainD& d, const Poly& right) const {
  ChainD out;
  for (const auto& [t, c] : d)
    for (const auto& [l, cl] : left)
      for (const auto& [r, cr] : right) out.add(KoszulTensor{l * t.left, t.wedge, t.right * r}, c * cl * cr);
  return out;
}

ChainD KoszulResolution::contraction(const KoszulTensor& t) const {
  ChainD out;
  Monomial left = t.left;
  Monomial right = t.right;
  for (int i : order_) {
    if (t.wedge.contains(i)) break;
    const int a = t.left.exponent(i);
    const int b = t.right.exponent(i);
    if (a > 0) {
      const Fp sign = field().sign(t.wedge.count_below(i));
      const Wedge wedge = t.wedge.with(i);
      for (int s = 0; s < a; ++s) {
        Monomial l = left;
        Monomial r = right;
        l.set_exponent(i, s);
        r.set_exponent(i, a + b - 1 - s);
        out.add(KoszulTensor{l, wedge, r}, sign);
      }
    }
    // Earlier variables are projected onto the right factor.
    left.set_exponent(i, 0);
    right.set_exponent(i, a + b);
  }
  return out;
}

ChainD KoszulResolution::contraction(const ChainD& d) const {
  ChainD out;
  for (const auto& [t, c] : d) out.add(contraction(t), c);
  return out;
}

ChainD KoszulResolution::contraction(const Poly& s) const {
  ChainD out;
  for (const auto& [m, c] : s) out.add(KoszulTensor{Monomial(), Wedge(), m}, c);
  return out;
}

const ChainD& KoszulResolution::homotopy_on_generator(const PairGenerator& e) const {
  std::lock_guard lock(memo_mutex_);
  if (auto it = memo_.find(e); it != memo_.end()) return *it->second;

  // (mu (x) 1 - 1 (x) mu)(e) - phi(d e), then lift through h.
  ChainD target;
  if (e.left.empty()) target.add(KoszulTensor{e.middle, e.right, Monomial()}, field().one());
  if (e.right.empty()) target.add(KoszulTensor{Monomial(), e.left, e.middle}, -field().one());

  const KoszulTensor left{Monomial(), e.left, e.middle};
  const KoszulTensor right{Monomial(), e.right, Monomial()};
  for (const auto& [t, c] : boundary(left)) target.add(homotopy(t, right), -c);
  const Fp sign = field().sign(left.degree());
  for (const auto& [t, c] : boundary(right)) target.add(homotopy(left, t), -(sign * c));

  auto value = std::make_unique<ChainD>(contraction(target));
  return *memo_.emplace(e, std::move(value)).first->second;
}

ChainD KoszulResolution::homotopy(const KoszulTensor& left, const KoszulTensor& right) const {
  const PairGenerator e{left.wedge, left.right * right.left, right.wedge};
  const ChainD& value = homotopy_on_generator(e);
  if (left.left.is_one() && right.right.is_one()) return value;
  ChainD out;
  for (const auto& [t, c] : value) out.add(KoszulTensor{left.left * t.left, t.wedge, t.right * right.right}, c);
  return out;
}

}  // namespace twistbrack
