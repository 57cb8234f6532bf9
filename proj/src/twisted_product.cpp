#include "twistbrack/twisted_product.hpp"

#include <algorithm>

#include "twistbrack/error.hpp"

namespace twistbrack {

namespace {

void enumerate_bar_words(const FiniteMatrixGroup& group, int length, std::vector<GroupIndex>& prefix,
                         std::vector<std::vector<GroupIndex>>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  for (GroupIndex g = 0; g < group.size(); ++g) {
    if (g == group.identity()) continue;
    prefix.push_back(g);
    enumerate_bar_words(group, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TwistedProductResolution::TwistedProductResolution(const SkewGroupAlgebra& algebra, const BarResolution& bar,
                                                   const KoszulResolution& koszul)
    : algebra_(&algebra), bar_(&bar), koszul_(&koszul) {}

XTensor TwistedProductResolution::tensor_of(const Generator& e) const {
  return XTensor{bar_->generator(e.bar), koszul_->generator(e.wedge)};
}

ChainX TwistedProductResolution::chain_of(const Generator& e) const {
  ChainX out;
  out.add(tensor_of(e), field().one());
  return out;
}

std::vector<Generator> TwistedProductResolution::generators(int degree) const {
  std::vector<Generator> out;
  const int n = algebra_->num_variables();
  for (int i = 0; i <= degree; ++i) {
    const int j = degree - i;
    if (j > n) continue;
    std::vector<std::vector<GroupIndex>> words;
    std::vector<GroupIndex> prefix;
    enumerate_bar_words(algebra_->group(), i, prefix, words);
    const auto wedges = wedges_of_size(n, j);
    for (const auto& word : words)
      for (Wedge w : wedges) out.push_back(Generator{word, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChainX TwistedProductResolution::combine(const ChainC& c, const ChainD& d) const {
  ChainX out;
  for (const auto& [ct, cc] : c)
    for (const auto& [dt, dc] : d) out.add(XTensor{ct, dt}, cc * dc);
  return out;
}

ChainX TwistedProductResolution::boundary(const XTensor& t) const {
  ChainX out;
  if (vanishes(t)) return out;
  for (const auto& [c, k] : bar_->boundary(t.c)) out.add(XTensor{c, t.d}, k);
  const Fp sign = field().sign(t.c.degree());
  for (const auto& [d, k] : koszul_->boundary(t.d)) out.add(XTensor{t.c, d}, sign * k);
  return out;
}

ChainX TwistedProductResolution::boundary(const ChainX& x) const {
  ChainX out;
  for (const auto& [t, c] : x) out.add(boundary(t), c);
  return out;
}

ChainX TwistedProductResolution::differential(const XTensor& t) const {
  if (t.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "differential of X needs degree >= 1");
  return boundary(t);
}

ChainX TwistedProductResolution::differential(const ChainX& x) const {
  ChainX out;
  for (const auto& [t, c] : x) out.add(differential(t), c);
  return out;
}

ChainX TwistedProductResolution::act(const SkewElement& left, const XTensor& t, const SkewElement& right) const {
  ChainX out;
  if (vanishes(t)) return out;
  const FiniteMatrixGroup& group = algebra_->group();
  for (const auto& [gr, sr] : right) {
    // g^{-1} . (d s)
    ChainD ds;
    for (const auto& [m, c] : sr) ds.add(KoszulTensor{t.d.left, t.d.wedge, t.d.right * m}, c);
    const ChainD moved = koszul_->act(group.inverse(gr), ds);
    for (const auto& [gl, sl] : left) {
      const BarTensor c = bar_->translate(gl, t.c, gr);
      const Poly prefix = algebra_->act(group.inverse(bar_->grade(c)), sl);
      const ChainD d = koszul_->multiply(prefix, moved, constant_poly(field().one()));
      for (const auto& [dt, k] : d) out.add(XTensor{c, dt}, k);
    }
  }
  return out;
}

ChainX TwistedProductResolution::act(const SkewElement& left, const ChainX& x, const SkewElement& right) const {
  ChainX out;
  for (const auto& [t, c] : x) out.add(act(left, t, right), c);
  return out;
}

std::vector<GeneratorTerm> TwistedProductResolution::decompose(const XTensor& t) const {
  std::vector<GeneratorTerm> out;
  if (vanishes(t)) return out;
  const GroupIndex first = t.c.entries.front();
  const GroupIndex last = t.c.entries.back();
  const GroupIndex full = bar_->grade(t.c);
  const SkewElement left(first, algebra_->act(full, t.d.left));
  const SkewElement right(last, algebra_->act(last, t.d.right));
  const auto middle = t.c.middle();
  for (const auto& [w, c] : algebra_->act(last, t.d.wedge)) {
    out.push_back({left, Generator{std::vector<GroupIndex>(middle.begin(), middle.end()), w}, right, c});
  }
  return out;
}

SkewElement TwistedProductResolution::augmentation(const XTensor& t) const {
  if (t.degree() != 0) throw Error(ErrorCode::WrongDegree, "augmentation of X is defined on degree 0");
  SkewElement out;
  for (const auto& term : decompose(t)) out.add(algebra_->multiply(term.left, term.right), term.coeff);
  return out;
}

SkewElement TwistedProductResolution::augmentation(const ChainX& x) const {
  SkewElement out;
  for (const auto& [t, c] : x) out.add(augmentation(t), c);
  return out;
}

ChainD TwistedProductResolution::tau(const BarTensor& c, const KoszulTensor& d) const {
  return koszul_->act(bar_->grade(c), ChainD(d, field().sign(c.degree() * d.degree())));
}

std::vector<PreImage> TwistedProductResolution::tau_inverse(const XTensor& u, const XTensor& w) const {
  std::vector<PreImage> out;
  if (vanishes(u) || vanishes(w)) return out;
  const Fp sign = field().sign(u.d.degree() * w.c.degree());
  const GroupIndex g = algebra_->group().inverse(bar_->grade(w.c));
  for (const auto& [d, k] : koszul_->act(g, u.d)) out.push_back({sign * k, u.c, w.c, d, w.d});
  return out;
}

std::vector<XPair> TwistedProductResolution::twist(const PreImage& pre) const {
  std::vector<XPair> out;
  const Fp sign = pre.coeff * field().sign(pre.c2.degree() * pre.d.degree());
  for (const auto& [d, k] : koszul_->act(bar_->grade(pre.c2), pre.d)) {
    out.push_back({sign * k, XTensor{pre.c, d}, XTensor{pre.c2, pre.d2}});
  }
  return out;
}

std::vector<XPair> TwistedProductResolution::diagonal(const XTensor& t) const {
  std::vector<XPair> out;
  if (vanishes(t)) return out;
  const auto dd = koszul_->diagonal(t.d);
  for (const auto& bc : bar_->diagonal(t.c)) {
    for (const auto& kd : dd) {
      const Fp coeff = field()(bc.sign * kd.sign);
      for (XPair& pair : twist(PreImage{coeff, bc.left, bc.right, kd.left, kd.right})) out.push_back(std::move(pair));
    }
  }
  return out;
}

std::vector<XTriple> TwistedProductResolution::diagonal2(const XTensor& t) const {
  std::vector<XTriple> out;
  for (const auto& outer : diagonal(t))
    for (const auto& inner : diagonal(outer.left))
      out.push_back({outer.coeff * inner.coeff, inner.left, inner.right, outer.right});
  return out;
}

std::vector<XTriple> TwistedProductResolution::diagonal2_right(const XTensor& t) const {
  std::vector<XTriple> out;
  for (const auto& outer : diagonal(t))
    for (const auto& inner : diagonal(outer.right))
      out.push_back({outer.coeff * inner.coeff, outer.left, inner.left, inner.right});
  return out;
}

ChainX TwistedProductResolution::homotopy(const XPair& pair) const {
  ChainX out;
  const GroupIndex one = algebra_->group().identity();
  for (const PreImage& pre : tau_inverse(pair.left, pair.right)) {
    const Fp coeff = pair.coeff * pre.coeff;
    if (pre.d.degree() == 0) {
      const Monomial m = koszul_->augmentation(pre.d);
      const KoszulTensor d{m * pre.d2.left, pre.d2.wedge, pre.d2.right};
      for (const auto& [c, k] : bar_->homotopy(pre.c, pre.c2)) out.add(XTensor{c, d}, coeff * k);
    }
    if (pre.c2.degree() == 0) {
      const BarTensor c = bar_->translate(one, pre.c, bar_->augmentation(pre.c2));
      const Fp sign = coeff * field().sign(pre.c.degree());
      for (const auto& [d, k] : koszul_->homotopy(pre.d, pre.d2)) out.add(XTensor{c, d}, sign * k);
    }
  }
  return out;
}

ChainX TwistedProductResolution::homotopy(std::span<const XPair> pairs) const {
  ChainX out;
  for (const auto& pair : pairs) out += homotopy(pair);
  return out;
}

std::vector<XPair> TwistedProductResolution::pair_boundary(const XPair& pair) const {
  std::vector<XPair> out;
  for (const auto& [u, k] : boundary(pair.left)) out.push_back({pair.coeff * k, u, pair.right});
  const Fp sign = pair.coeff * field().sign(pair.left.degree());
  for (const auto& [w, k] : boundary(pair.right)) out.push_back({sign * k, pair.left, w});
  return out;
}

ChainX TwistedProductResolution::augment_left(const XPair& pair) const {
  if (pair.left.degree() != 0) return {};
  return act(augmentation(pair.left), pair.right, algebra_->one()).scaled(pair.coeff);
}

ChainX TwistedProductResolution::augment_right(const XPair& pair) const {
  if (pair.right.degree() != 0) return {};
  return act(algebra_->one(), pair.left, augmentation(pair.right)).scaled(pair.coeff);
}

ChainX TwistedProductResolution::interpolated_augmentation(const PreImage& pre) const {
  ChainX out;
  const GroupIndex one = algebra_->group().identity();
  if (pre.c.degree() == 0 && pre.d.degree() == 0) {
    const BarTensor c = bar_->translate(bar_->augmentation(pre.c), pre.c2, one);
    const Monomial m = koszul_->augmentation(pre.d);
    out.add(XTensor{c, KoszulTensor{m * pre.d2.left, pre.d2.wedge, pre.d2.right}}, pre.coeff);
  }
  if (pre.c2.degree() == 0 && pre.d2.degree() == 0) {
    const BarTensor c = bar_->translate(one, pre.c, bar_->augmentation(pre.c2));
    const Monomial m = koszul_->augmentation(pre.d2);
    out.add(XTensor{c, KoszulTensor{pre.d.left, pre.d.wedge, pre.d.right * m}}, -pre.coeff);
  }
  return out;
}

NormalForm TwistedProductResolution::normal_form(std::span<const XTensor> factors, Fp coeff) const {
  struct State {
    Fp coeff;
    std::vector<AlgebraBasis> coefficients;
    std::vector<Generator> generators;
    SkewElement carry;
  };
  std::vector<State> states{{coeff, {}, {}, algebra_->one()}};
  for (const XTensor& t : factors) {
    const auto terms = decompose(t);
    std::vector<State> next;
    for (const State& s : states) {
      for (const GeneratorTerm& term : terms) {
        const SkewElement product = algebra_->multiply(s.carry, term.left);
        for (const auto& [g, poly] : product) {
          for (const auto& [m, k] : poly) {
            State n{s.coeff * term.coeff * k, s.coefficients, s.generators, term.right};
            n.coefficients.push_back({g, m});
            n.generators.push_back(term.generator);
            next.push_back(std::move(n));
          }
        }
      }
    }
    states = std::move(next);
  }
  NormalForm out;
  for (State& s : states) {
    for (const auto& [g, poly] : s.carry) {
      for (const auto& [m, k] : poly) {
        NormalKey key{s.coefficients, s.generators};
        key.coefficients.push_back({g, m});
        out.add(key, s.coeff * k);
      }
    }
  }
  return out;
}

NormalForm TwistedProductResolution::normal_form(std::span<const XPair> pairs) const {
  NormalForm out;
  for (const auto& p : pairs) {
    const XTensor f[2] = {p.left, p.right};
    out += normal_form(f, p.coeff);
  }
  return out;
}

NormalForm TwistedProductResolution::normal_form(std::span<const XTriple> triples) const {
  NormalForm out;
  for (const auto& t : triples) {
    const XTensor f[3] = {t.first, t.second, t.third};
    out += normal_form(f, t.coeff);
  }
  return out;
}

NormalForm TwistedProductResolution::normal_form(const ChainX& x) const {
  NormalForm out;
  for (const auto& [t, c] : x) {
    const XTensor f[1] = {t};
    out += normal_form(f, c);
  }
  return out;
}

}  // namespace twistbrack
