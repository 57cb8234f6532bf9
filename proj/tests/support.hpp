#pragma once

#include <initializer_list>
#include <vector>

#include "twistbrack/context.hpp"
#include "twistbrack/transvection.hpp"

namespace twistbrack::testing {

/// Shorthand builders over a context.
struct Builder {
  const Context& ctx;

  const SkewGroupAlgebra& a() const { return ctx.algebra(); }
  Fp k(std::int64_t c) const { return ctx.field()(c); }
  /// g^i for the first generator.
  GroupIndex g(std::int64_t i = 1) const { return a().group().power(a().group().generator(0), i); }
  GroupIndex e() const { return a().group().identity(); }

  Monomial mono(std::initializer_list<int> exps) const { return Monomial::from_exponents(exps); }
  Poly poly(std::initializer_list<int> exps, std::int64_t c = 1) const { return monomial_poly(mono(exps), k(c)); }
  Poly x(int i, std::int64_t c = 1) const { return variable_poly(i, k(c)); }
  Poly one() const { return constant_poly(k(1)); }
  SkewElement elem(const Poly& s, GroupIndex h) const { return SkewElement(h, s); }
  SkewElement group_elem(GroupIndex h) const { return SkewElement(h, one()); }

  BarTensor bar(std::vector<GroupIndex> entries) const { return BarTensor{std::move(entries)}; }
  BarTensor bar_gen(std::vector<GroupIndex> middle) const { return ctx.bar().generator(middle); }
  KoszulTensor kos(std::initializer_list<int> wedge, Monomial left = {}, Monomial right = {}) const {
    return KoszulTensor{left, Wedge::of(wedge), right};
  }
  XTensor xt(BarTensor c, KoszulTensor d) const { return XTensor{std::move(c), d}; }
  /// (1 (x) bar (x) 1) (x) (1 (x) wedge (x) 1)
  XTensor xgen(std::vector<GroupIndex> middle, std::initializer_list<int> wedge) const {
    return XTensor{bar_gen(std::move(middle)), kos(wedge)};
  }
  Generator gen(std::vector<GroupIndex> middle, std::initializer_list<int> wedge) const {
    return Generator{std::move(middle), Wedge::of(wedge)};
  }
};

/// Partial derivative d/dx_i of a polynomial.
inline Poly derivative(const Poly& s, int i) {
  Poly out;
  for (const auto& [m, c] : s) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    Monomial d = m;
    d.set_exponent(i, e - 1);
    out.add(d, c * Fp(c.modulus(), e));
  }
  return out;
}

}  // namespace twistbrack::testing
