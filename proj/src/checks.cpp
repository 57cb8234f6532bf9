#include "twistbrack/checks.hpp"

#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "twistbrack/format.hpp"
#include "twistbrack/gfp_linear.hpp"

namespace twistbrack::checks {

namespace {

class Tracker {
 public:
  explicit Tracker(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }
  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<std::vector<GroupIndex>> bar_words(const FiniteMatrixGroup& group, int length) {
  std::vector<std::vector<GroupIndex>> words{{}};
  for (int k = 0; k < length; ++k) {
    std::vector<std::vector<GroupIndex>> next;
    for (const auto& w : words) {
      for (GroupIndex g = 0; g < group.size(); ++g) {
        if (g == group.identity()) continue;
        next.push_back(w);
        next.back().push_back(g);
      }
    }
    words = std::move(next);
  }
  return words;
}

std::vector<BarTensor> bar_basis_with(const FiniteMatrixGroup& group, int degree, bool free_first, bool free_last) {
  std::vector<BarTensor> out;
  const auto n = static_cast<GroupIndex>(group.size());
  for (GroupIndex first = 0; first < (free_first ? n : 1); ++first)
    for (const auto& word : bar_words(group, degree))
      for (GroupIndex last = 0; last < (free_last ? n : 1); ++last) {
        BarTensor t;
        t.entries.push_back(first);
        t.entries.insert(t.entries.end(), word.begin(), word.end());
        t.entries.push_back(last);
        out.push_back(std::move(t));
      }
  return out;
}

std::vector<Monomial> monomials_up_to(int num_variables, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const Monomial& m : monomials_of_degree(num_variables, d)) out.push_back(m);
  return out;
}

/// (x^a, I, 1) with |a| + |I| <= max_internal, or with free right factor.
std::vector<KoszulTensor> koszul_basis_with(int num_variables, int degree, int max_internal, bool free_left,
                                            bool free_right) {
  std::vector<KoszulTensor> out;
  const int room = max_internal - degree;
  if (room < 0 || degree > num_variables) return out;
  const auto monomials = monomials_up_to(num_variables, room);
  const std::vector<Monomial> unit{Monomial()};
  for (Wedge w : wedges_of_size(num_variables, degree))
    for (const Monomial& a : free_left ? monomials : unit)
      for (const Monomial& b : free_right ? monomials : unit)
        if (a.degree() + b.degree() <= room) out.push_back({a, w, b});
  return out;
}

SkewElement random_element(const SkewGroupAlgebra& algebra, std::mt19937_64& rng, int max_terms, int max_degree) {
  const auto n = algebra.num_variables();
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<GroupIndex> group(0, static_cast<GroupIndex>(algebra.group().size() - 1));
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(1, algebra.field().characteristic() - 1);
  SkewElement out;
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    const auto monomials = monomials_of_degree(n, degree(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    out.add(group(rng), monomial_poly(monomials[pick(rng)], algebra.field()(coeff(rng))));
  }
  return out;
}

template <class T>
const T& pick_from(const std::vector<T>& items, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
  return items[pick(rng)];
}

ChainC as_chain(const BarTensor& t, Fp one) { return ChainC(t, one); }

ChainX sum_augment(const TwistedProductResolution& x, const std::vector<XPair>& pairs) {
  ChainX out;
  for (const auto& pair : pairs) {
    out += x.augment_left(pair);
    out -= x.augment_right(pair);
  }
  return out;
}

std::vector<XPair> diagonal_of(const TwistedProductResolution& x, const ChainX& chain) {
  std::vector<XPair> out;
  for (const auto& [t, c] : chain)
    for (XPair pair : x.diagonal(t)) {
      pair.coeff = pair.coeff * c;
      out.push_back(std::move(pair));
    }
  return out;
}

}  // namespace

std::vector<BarTensor> bar_basis(const BarResolution& bar, int degree) {
  return bar_basis_with(bar.group(), degree, true, true);
}

std::vector<KoszulTensor> koszul_basis(int num_variables, int degree, int max_internal) {
  return koszul_basis_with(num_variables, degree, max_internal, true, true);
}

std::vector<XTensor> x_basis(const Context& ctx, int degree, int max_internal) {
  std::vector<XTensor> out;
  const int n = ctx.algebra().num_variables();
  for (int i = 0; i <= degree; ++i) {
    const int j = degree - i;
    if (j > n) continue;
    const auto cs = bar_basis(ctx.bar(), i);
    const auto ds = koszul_basis(n, j, max_internal);
    for (const auto& c : cs)
      for (const auto& d : ds) out.push_back({c, d});
  }
  return out;
}

std::vector<PreImage> preimage_basis(const Context& ctx, Bounds bounds) {
  std::vector<PreImage> out;
  const int n = ctx.algebra().num_variables();
  const Fp one = ctx.field().one();
  const auto& group = ctx.algebra().group();
  for (int i = 0; i <= bounds.homological; ++i)
    for (int k = 0; i + k <= bounds.homological; ++k) {
      const auto cs = bar_basis_with(group, i, true, false);
      const auto c2s = bar_basis_with(group, k, true, true);
      for (int j = 0; i + k + j <= bounds.homological && j <= n; ++j)
        for (int l = 0; i + k + j + l <= bounds.homological && l <= n; ++l) {
          const auto ds = koszul_basis_with(n, j, bounds.internal - l, true, false);
          const auto d2s = koszul_basis_with(n, l, bounds.internal, true, true);
          for (const auto& d : ds)
            for (const auto& d2 : d2s) {
              if (d.internal_degree() + d2.internal_degree() > bounds.internal) continue;
              for (const auto& c : cs)
                for (const auto& c2 : c2s) out.push_back({one, c, c2, d, d2});
            }
        }
    }
  return out;
}

CheckResult bar_differential_squared(const Context& ctx, Bounds bounds) {
  Tracker tr("bar differential squares to zero");
  const auto& bar = ctx.bar();
  for (int i = 2; i <= bounds.homological + 1; ++i)
    for (const auto& t : bar_basis(bar, i)) {
      ChainC dd;
      for (const auto& [s, c] : bar.differential(t)) dd.add(bar.boundary(s), c);
      tr.check(dd.is_zero(), [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult koszul_differential_squared(const Context& ctx, Bounds bounds) {
  Tracker tr("Koszul differential squares to zero");
  const auto& k = ctx.koszul();
  for (int j = 2; j <= ctx.algebra().num_variables(); ++j)
    for (const auto& t : koszul_basis(k.num_variables(), j, bounds.internal + 1)) {
      tr.check(k.boundary(k.differential(t)).is_zero(), [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult bar_counit(const Context& ctx, Bounds bounds) {
  Tracker tr("bar diagonal is counital");
  const auto& bar = ctx.bar();
  const Fp one = ctx.field().one();
  const GroupIndex e = bar.group().identity();
  for (int i = 0; i <= bounds.homological; ++i)
    for (const auto& t : bar_basis(bar, i)) {
      ChainC left, right;
      for (const auto& pair : bar.diagonal(t)) {
        const Fp s = ctx.field()(pair.sign);
        if (pair.left.degree() == 0) left.add(bar.translate(bar.augmentation(pair.left), pair.right, e), s);
        if (pair.right.degree() == 0) right.add(bar.translate(e, pair.left, bar.augmentation(pair.right)), s);
      }
      tr.check(left == as_chain(t, one) && right == as_chain(t, one), [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult koszul_counit(const Context& ctx, Bounds bounds) {
  Tracker tr("Koszul diagonal is counital");
  const auto& k = ctx.koszul();
  const Fp one = ctx.field().one();
  for (int j = 0; j <= k.num_variables(); ++j)
    for (const auto& t : koszul_basis(k.num_variables(), j, bounds.internal)) {
      ChainD left, right;
      for (const auto& pair : k.diagonal(t)) {
        const Fp s = ctx.field()(pair.sign);
        if (pair.left.degree() == 0) {
          left.add({k.augmentation(pair.left) * pair.right.left, pair.right.wedge, pair.right.right}, s);
        }
        if (pair.right.degree() == 0) {
          right.add({pair.left.left, pair.left.wedge, pair.left.right * k.augmentation(pair.right)}, s);
        }
      }
      tr.check(left == ChainD(t, one) && right == ChainD(t, one), [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult bar_coassociativity(const Context& ctx, Bounds bounds) {
  Tracker tr("bar diagonal is coassociative");
  const auto& bar = ctx.bar();
  using Key = std::tuple<BarTensor, BarTensor, BarTensor>;
  for (int i = 0; i <= bounds.homological; ++i)
    for (const auto& t : bar_basis(bar, i)) {
      LinearCombination<Key> lhs, rhs;
      for (const auto& outer : bar.diagonal(t)) {
        for (const auto& inner : bar.diagonal(outer.left))
          lhs.add({inner.left, inner.right, outer.right}, ctx.field()(outer.sign * inner.sign));
        for (const auto& inner : bar.diagonal(outer.right))
          rhs.add({outer.left, inner.left, inner.right}, ctx.field()(outer.sign * inner.sign));
      }
      tr.check(lhs == rhs, [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult koszul_coassociativity(const Context& ctx, Bounds bounds) {
  Tracker tr("Koszul diagonal is coassociative");
  const auto& k = ctx.koszul();
  using Key = std::tuple<KoszulTensor, KoszulTensor, KoszulTensor>;
  for (int j = 0; j <= k.num_variables(); ++j)
    for (const auto& t : koszul_basis(k.num_variables(), j, bounds.internal)) {
      LinearCombination<Key> lhs, rhs;
      for (const auto& outer : k.diagonal(t)) {
        for (const auto& inner : k.diagonal(outer.left))
          lhs.add({inner.left, inner.right, outer.right}, ctx.field()(outer.sign * inner.sign));
        for (const auto& inner : k.diagonal(outer.right))
          rhs.add({outer.left, inner.left, inner.right}, ctx.field()(outer.sign * inner.sign));
      }
      tr.check(lhs == rhs, [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult bar_grading(const Context& ctx, Bounds bounds) {
  Tracker tr("bar grading is compatible with translation");
  const auto& bar = ctx.bar();
  const auto& group = bar.group();
  for (int i = 0; i <= bounds.homological; ++i)
    for (const auto& t : bar_basis(bar, i))
      for (GroupIndex a = 0; a < group.size(); ++a)
        for (GroupIndex b = 0; b < group.size(); ++b) {
          const GroupIndex expected = group.multiply(group.multiply(a, bar.grade(t)), b);
          tr.check(bar.grade(bar.translate(a, t, b)) == expected, [&] { return format(ctx.algebra(), t); });
        }
  return tr.finish();
}

CheckResult koszul_group_compatibility(const Context& ctx, Bounds bounds) {
  Tracker tr("group action on D commutes with differential, augmentation, diagonal");
  const auto& k = ctx.koszul();
  const auto& algebra = ctx.algebra();
  const Fp one = ctx.field().one();
  using Key = std::pair<KoszulTensor, KoszulTensor>;
  for (GroupIndex g = 0; g < algebra.group().size(); ++g)
    for (int j = 0; j <= k.num_variables(); ++j)
      for (const auto& t : koszul_basis(k.num_variables(), j, bounds.internal)) {
        const ChainD gt = k.act(g, t);
        const auto where = [&] { return "g=" + algebra.group_word_string(g) + " on " + format(algebra, t); };
        if (j > 0) tr.check(k.act(g, k.differential(t)) == k.differential(gt), where);
        if (j == 0) tr.check(algebra.act(g, k.augmentation(ChainD(t, one))) == k.augmentation(gt), where);
        LinearCombination<Key> lhs, rhs;
        for (const auto& pair : k.diagonal(t)) {
          const ChainD l = k.act(g, pair.left), r = k.act(g, pair.right);
          for (const auto& [a, ca] : l)
            for (const auto& [b, cb] : r) lhs.add({a, b}, ca * cb * ctx.field()(pair.sign));
        }
        for (const auto& [s, c] : gt)
          for (const auto& pair : k.diagonal(s)) rhs.add({pair.left, pair.right}, c * ctx.field()(pair.sign));
        tr.check(lhs == rhs, where);
        for (int i = 0; i < k.num_variables(); ++i) {
          const Poly xi = variable_poly(i, one);
          const ChainD lhs2 = k.act(g, k.multiply(xi, ChainD(t, one), constant_poly(one)));
          const ChainD rhs2 = k.multiply(algebra.act(g, xi), gt, constant_poly(one));
          tr.check(lhs2 == rhs2, where);
        }
      }
  return tr.finish();
}

CheckResult contraction_identity(const Context& ctx, Bounds bounds) {
  Tracker tr("Koszul contraction is a contracting homotopy");
  const auto& k = ctx.koszul();
  const Fp one = ctx.field().one();
  for (int j = 0; j <= k.num_variables(); ++j)
    for (const auto& t : koszul_basis(k.num_variables(), j, bounds.internal + 1)) {
      ChainD lhs = k.boundary(k.contraction(t));
      if (j == 0) {
        lhs += k.contraction(k.augmentation(ChainD(t, one)));
      } else {
        lhs += k.contraction(k.differential(t));
      }
      tr.check(lhs == ChainD(t, one), [&] { return format(ctx.algebra(), t); });
    }
  for (const Monomial& m : monomials_up_to(k.num_variables(), bounds.internal + 1)) {
    const Poly s = monomial_poly(m, one);
    tr.check(k.augmentation(k.contraction(s)) == s, [&] { return ctx.algebra().to_string(s); });
  }
  return tr.finish();
}

CheckResult bar_homotopy_identity(const Context& ctx, Bounds bounds) {
  Tracker tr("bar homotopy identity");
  const auto& bar = ctx.bar();
  const auto& group = bar.group();
  const GroupIndex e = group.identity();
  const Fp one = ctx.field().one();
  for (int p = 0; p <= bounds.homological; ++p)
    for (int q = 0; p + q <= bounds.homological; ++q)
      for (const auto& x : bar_basis_with(group, p, true, false))
        for (const auto& y : bar_basis_with(group, q, true, true)) {
          ChainC lhs;
          for (const auto& [t, c] : bar.homotopy(x, y)) lhs.add(bar.boundary(t), c);
          for (const auto& [t, c] : bar.boundary(x)) lhs.add(bar.homotopy(t, y), c);
          const Fp sign = ctx.field().sign(p);
          for (const auto& [t, c] : bar.boundary(y)) lhs.add(bar.homotopy(x, t), sign * c);
          ChainC rhs;
          if (p == 0) rhs.add(bar.translate(bar.augmentation(x), y, e), one);
          if (q == 0) rhs.add(bar.translate(e, x, bar.augmentation(y)), -one);
          tr.check(lhs == rhs, [&] { return format(ctx.algebra(), x) + " (x) " + format(ctx.algebra(), y); });
        }
  return tr.finish();
}

CheckResult koszul_homotopy_identity(const Context& ctx, Bounds bounds) {
  Tracker tr("Koszul homotopy identity");
  const auto& k = ctx.koszul();
  const int n = k.num_variables();
  const Fp one = ctx.field().one();
  for (int p = 0; p <= std::min(n, bounds.homological); ++p)
    for (int q = 0; q <= n && p + q <= bounds.homological; ++q)
      for (const auto& x : koszul_basis_with(n, p, bounds.internal, true, false))
        for (const auto& y : koszul_basis_with(n, q, bounds.internal - x.internal_degree(), true, true)) {
          ChainD lhs = k.boundary(k.homotopy(x, y));
          for (const auto& [t, c] : k.boundary(x)) lhs.add(k.homotopy(t, y), c);
          const Fp sign = ctx.field().sign(p);
          for (const auto& [t, c] : k.boundary(y)) lhs.add(k.homotopy(x, t), sign * c);
          ChainD rhs;
          if (p == 0) rhs.add({k.augmentation(x) * y.left, y.wedge, y.right}, one);
          if (q == 0) rhs.add({x.left, x.wedge, x.right * k.augmentation(y)}, -one);
          tr.check(lhs == rhs, [&] { return format(ctx.algebra(), x) + " (x) " + format(ctx.algebra(), y); });
        }
  return tr.finish();
}

CheckResult koszul_homotopy_determinism(const Context& ctx, Bounds bounds) {
  Tracker tr("Koszul homotopy is independent of evaluation order");
  const int n = ctx.algebra().num_variables();
  std::vector<std::pair<KoszulTensor, KoszulTensor>> inputs;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n && p + q <= bounds.homological; ++q)
      for (const auto& x : koszul_basis_with(n, p, bounds.internal, true, false))
        for (const auto& y : koszul_basis_with(n, q, bounds.internal - x.internal_degree(), true, false))
          inputs.emplace_back(x, y);
  KoszulResolution forward(ctx.algebra(), ctx.koszul().contraction_order());
  KoszulResolution backward(ctx.algebra(), ctx.koszul().contraction_order());
  std::vector<ChainD> first;
  for (const auto& [x, y] : inputs) first.push_back(forward.homotopy(x, y));
  for (std::size_t i = inputs.size(); i-- > 0;) {
    const auto& [x, y] = inputs[i];
    tr.check(backward.homotopy(x, y) == first[i],
             [&] { return format(ctx.algebra(), x) + " (x) " + format(ctx.algebra(), y); });
  }
  return tr.finish();
}

CheckResult x_differential_squared(const Context& ctx, Bounds bounds) {
  Tracker tr("differential of X squares to zero");
  const auto& x = ctx.resolution();
  for (int n = 2; n <= bounds.homological; ++n)
    for (const auto& t : x_basis(ctx, n, bounds.internal)) {
      tr.check(x.boundary(x.differential(t)).is_zero(), [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult x_action_associativity(const Context& ctx, int trials, std::uint64_t seed) {
  Tracker tr("bimodule action on X is associative");
  const auto& x = ctx.resolution();
  const auto& algebra = ctx.algebra();
  std::mt19937_64 rng(seed);
  std::vector<XTensor> pool;
  for (int n = 0; n <= 2; ++n)
    for (auto& t : x_basis(ctx, n, 2)) pool.push_back(std::move(t));
  for (int trial = 0; trial < trials; ++trial) {
    const XTensor& t = pick_from(pool, rng);
    const SkewElement a = random_element(algebra, rng, 2, 1), b = random_element(algebra, rng, 2, 1);
    const SkewElement c = random_element(algebra, rng, 2, 1), d = random_element(algebra, rng, 2, 1);
    const ChainX lhs = x.act(a, x.act(b, t, c), d);
    const ChainX rhs = x.act(algebra.multiply(a, b), t, algebra.multiply(c, d));
    tr.check(lhs == rhs, [&] { return format(algebra, t); });
    tr.check(x.act(algebra.one(), t, algebra.one()) == ChainX(t, ctx.field().one()),
             [&] { return "unit on " + format(algebra, t); });
  }
  return tr.finish();
}

CheckResult x_decompose_round_trip(const Context& ctx, Bounds bounds) {
  Tracker tr("generator decomposition reproduces X tensors");
  const auto& x = ctx.resolution();
  for (int n = 0; n <= bounds.homological; ++n)
    for (const auto& t : x_basis(ctx, n, bounds.internal)) {
      ChainX sum;
      for (const auto& term : x.decompose(t))
        sum.add(x.act(term.left, x.tensor_of(term.generator), term.right), term.coeff);
      tr.check(sum == ChainX(t, ctx.field().one()), [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult x_differential_bimodule(const Context& ctx, int trials, std::uint64_t seed) {
  Tracker tr("differential of X is a bimodule map");
  const auto& x = ctx.resolution();
  const auto& algebra = ctx.algebra();
  std::mt19937_64 rng(seed);
  std::vector<XTensor> pool;
  for (int n = 1; n <= 3; ++n)
    for (auto& t : x_basis(ctx, n, 2)) pool.push_back(std::move(t));
  for (int trial = 0; trial < trials; ++trial) {
    const XTensor& t = pick_from(pool, rng);
    const SkewElement a = random_element(algebra, rng, 2, 1), b = random_element(algebra, rng, 2, 1);
    tr.check(x.differential(x.act(a, t, b)) == x.act(a, x.differential(t), b),
             [&] { return format(algebra, t); });
  }
  return tr.finish();
}

CheckResult x_diagonal_counit(const Context& ctx, Bounds bounds) {
  Tracker tr("diagonal of X is counital");
  const auto& x = ctx.resolution();
  for (int n = 0; n <= bounds.homological; ++n)
    for (const auto& t : x_basis(ctx, n, bounds.internal)) {
      ChainX left, right;
      for (const auto& pair : x.diagonal(t)) {
        left += x.augment_left(pair);
        right += x.augment_right(pair);
      }
      const ChainX expected(t, ctx.field().one());
      tr.check(left == expected && right == expected, [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult x_diagonal_coassociativity(const Context& ctx, Bounds bounds) {
  Tracker tr("diagonal of X is coassociative");
  const auto& x = ctx.resolution();
  for (int n = 0; n <= bounds.homological; ++n)
    for (const auto& t : x_basis(ctx, n, bounds.internal)) {
      tr.check(x.normal_form(x.diagonal2(t)) == x.normal_form(x.diagonal2_right(t)),
               [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult x_diagonal_chain_map(const Context& ctx, Bounds bounds) {
  Tracker tr("diagonal of X is a chain map");
  const auto& x = ctx.resolution();
  for (int n = 1; n <= bounds.homological; ++n)
    for (const auto& t : x_basis(ctx, n, bounds.internal)) {
      const auto lhs = diagonal_of(x, x.differential(t));
      std::vector<XPair> rhs;
      for (const auto& pair : x.diagonal(t))
        for (auto& b : x.pair_boundary(pair)) rhs.push_back(std::move(b));
      tr.check(x.normal_form(lhs) == x.normal_form(rhs), [&] { return format(ctx.algebra(), t); });
    }
  return tr.finish();
}

CheckResult x_homotopy_identity(const Context& ctx, Bounds bounds) {
  Tracker tr("homotopy identity on X (x)_A X");
  const auto& x = ctx.resolution();
  for (const PreImage& pre : preimage_basis(ctx, bounds)) {
    const auto pairs = x.twist(pre);
    ChainX lhs = x.boundary(x.homotopy(pairs));
    for (const auto& pair : pairs) {
      const auto db = x.pair_boundary(pair);
      lhs += x.homotopy(db);
    }
    tr.check(lhs == sum_augment(x, pairs), [&] {
      return format(ctx.algebra(), pre.c) + " (x) " + format(ctx.algebra(), pre.c2) + " (x) " +
             format(ctx.algebra(), pre.d) + " (x) " + format(ctx.algebra(), pre.d2);
    });
  }
  return tr.finish();
}

CheckResult x_augmentation_interpolation(const Context& ctx, Bounds bounds) {
  Tracker tr("augmentations of X are interpolated through the twisting map");
  const auto& x = ctx.resolution();
  for (const PreImage& pre : preimage_basis(ctx, bounds)) {
    const auto pairs = x.twist(pre);
    ChainX rhs;
    NormalForm back;
    for (const auto& pair : pairs)
      for (PreImage p : x.tau_inverse(pair.left, pair.right)) {
        p.coeff = p.coeff * pair.coeff;
        rhs += x.interpolated_augmentation(p);
      }
    // The twisting map and its inverse are mutually inverse on pure tensors.
    std::vector<XPair> again;
    for (const auto& pair : pairs)
      for (PreImage p : x.tau_inverse(pair.left, pair.right)) {
        p.coeff = p.coeff * pair.coeff;
        for (auto& q : x.twist(p)) again.push_back(std::move(q));
      }
    const auto describe = [&] {
      return format(ctx.algebra(), pre.c) + " (x) " + format(ctx.algebra(), pre.c2) + " (x) " +
             format(ctx.algebra(), pre.d) + " (x) " + format(ctx.algebra(), pre.d2);
    };
    tr.check(sum_augment(x, pairs) == rhs, describe);
    tr.check(x.normal_form(again) == x.normal_form(pairs), describe);
  }
  return tr.finish();
}

CheckResult x_exactness(const Context& ctx, Bounds bounds) {
  Tracker tr("X is exact in positive degrees");
  const auto& x = ctx.resolution();
  const int n = ctx.algebra().num_variables();
  // Blocks preserved by the differential: degree, group grade, multidegree.
  using Block = std::tuple<int, GroupIndex, std::vector<int>>;
  const auto block_of = [&](int degree, const XTensor& t) {
    std::vector<int> multi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      multi[static_cast<std::size_t>(i)] =
          t.d.left.exponent(i) + t.d.right.exponent(i) + (t.d.wedge.contains(i) ? 1 : 0);
    }
    return Block{degree, ctx.bar().grade(t.c), std::move(multi)};
  };
  std::map<Block, std::size_t> dims;
  std::map<Block, SparseEchelon<XTensor>> images;  // image of the differential out of this block
  for (int degree = 0; degree <= bounds.homological + 1; ++degree) {
    for (const auto& t : x_basis(ctx, degree, bounds.internal)) {
      const Block b = block_of(degree, t);
      ++dims[b];
      if (degree == 0) continue;
      auto it = images.try_emplace(b, false).first;
      it->second.insert(x.boundary(t), 0);
    }
  }
  const auto rank_of = [&](const Block& b) -> std::size_t {
    auto it = images.find(b);
    return it == images.end() ? 0 : it->second.rank();
  };
  for (const auto& [block, dim] : dims) {
    const auto& [degree, grade, multi] = block;
    if (degree > bounds.homological) continue;
    Block above{degree + 1, grade, multi};
    const std::size_t kernel = dim - rank_of(block);
    const std::size_t boundaries = rank_of(above);
    const auto describe = [&] {
      std::string m;
      for (int e : multi) m += std::to_string(e) + ",";
      return "degree " + std::to_string(degree) + " grade " + ctx.algebra().group_word_string(grade) +
             " multidegree (" + m + "): kernel " + std::to_string(kernel) + ", boundaries " +
             std::to_string(boundaries);
    };
    if (degree >= 1) {
      tr.check(kernel == boundaries, describe);
    } else {
      // H_0 is A: one copy of each monomial*group basis element.
      tr.check(kernel - boundaries == 1, describe);
    }
  }
  return tr.finish();
}

CheckResult cochain_bimodule_linearity(const Context& ctx, int trials, std::uint64_t seed) {
  Tracker tr("cochains extend as bimodule maps");
  const auto& engine = ctx.engine();
  const auto& x = ctx.resolution();
  const auto& algebra = ctx.algebra();
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int degree = 1 + trial % 2;
    const int internal = trial % 3 - 1;
    const Cochain f = engine.random_cochain(degree, internal, rng);
    const auto pool = x_basis(ctx, degree, 2);
    const XTensor& t = pick_from(pool, rng);
    const SkewElement a = random_element(algebra, rng, 2, 1), b = random_element(algebra, rng, 2, 1);
    const SkewElement lhs = engine.evaluate(f, x.act(a, t, b));
    const SkewElement rhs = algebra.multiply(algebra.multiply(a, engine.evaluate(f, t)), b);
    tr.check(lhs == rhs, [&] { return format(algebra, t); });
  }
  return tr.finish();
}

CheckResult coboundary_squared(const Context& ctx, int trials, std::uint64_t seed) {
  Tracker tr("coboundary squares to zero");
  const auto& engine = ctx.engine();
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int degree = trial % 3;
    const int internal = trial % 5 - 2;
    const Cochain f = engine.random_cochain(degree, internal, rng);
    tr.check(engine.coboundary(engine.coboundary(f)).is_zero(), [&] {
      return "degree " + std::to_string(degree) + " internal " + std::to_string(internal) + ": " +
             format(ctx.algebra(), f);
    });
  }
  return tr.finish();
}

CheckResult bracket_antisymmetry(const Context& ctx, const std::vector<NamedCochain>& cochains) {
  Tracker tr("bracket is graded antisymmetric");
  const auto& engine = ctx.engine();
  for (const auto& [na, a] : cochains)
    for (const auto& [nb, b] : cochains) {
      if (a.degree() + b.degree() < 1) continue;
      const Fp sign = ctx.field().sign((a.degree() - 1) * (b.degree() - 1));
      const Cochain sum = engine.bracket(a, b) + engine.bracket(b, a).scaled(sign);
      tr.check(sum.is_zero(), [&] { return "[" + na + "," + nb + "]"; });
    }
  return tr.finish();
}

CheckResult bracket_of_cocycles_is_cocycle(const Context& ctx, const std::vector<NamedCochain>& cochains) {
  Tracker tr("bracket of cocycles is a cocycle");
  const auto& engine = ctx.engine();
  for (const auto& [na, a] : cochains) {
    if (!engine.is_cocycle(a)) continue;
    for (const auto& [nb, b] : cochains) {
      if (a.degree() + b.degree() < 1 || !engine.is_cocycle(b)) continue;
      tr.check(engine.is_cocycle(engine.bracket(a, b)), [&] { return "[" + na + "," + nb + "]"; });
    }
  }
  return tr.finish();
}

CheckResult bracket_internal_degree(const Context& ctx, const std::vector<NamedCochain>& cochains) {
  Tracker tr("bracket adds internal degrees");
  const auto& engine = ctx.engine();
  for (const auto& [na, a] : cochains)
    for (const auto& [nb, b] : cochains) {
      const auto da = internal_degree(a), db = internal_degree(b);
      if (!da || !db || a.degree() + b.degree() < 1) continue;
      const auto degrees = internal_degrees(engine.bracket(a, b));
      tr.check(degrees.empty() || (degrees.size() == 1 && *degrees.begin() == *da + *db),
               [&] { return "[" + na + "," + nb + "]"; });
    }
  return tr.finish();
}

CheckResult homotopy_robustness(const Context& ctx, const std::vector<NamedCochain>& cochains) {
  Tracker tr("bracket classes do not depend on the contraction order");
  auto reversed = ctx.with_contraction_order(KoszulResolution::reversed_order(ctx.algebra().num_variables()));
  const auto& engine = ctx.engine();
  for (const auto& [na, a] : cochains) {
    if (!engine.is_cocycle(a)) continue;
    for (const auto& [nb, b] : cochains) {
      if (a.degree() + b.degree() < 1 || !engine.is_cocycle(b)) continue;
      const Cochain first = engine.bracket(a, b);
      const Cochain second = reversed->engine().bracket(a, b);
      tr.check(engine.class_equal(first, second).equal, [&] { return "[" + na + "," + nb + "]"; });
    }
  }
  return tr.finish();
}

std::vector<CheckResult> run_all(const Context& ctx, const std::vector<NamedCochain>& cochains, Bounds bounds,
                                 int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(bar_differential_squared(ctx, bounds));
  out.push_back(koszul_differential_squared(ctx, bounds));
  out.push_back(bar_counit(ctx, bounds));
  out.push_back(koszul_counit(ctx, bounds));
  out.push_back(bar_coassociativity(ctx, bounds));
  out.push_back(koszul_coassociativity(ctx, bounds));
  out.push_back(bar_grading(ctx, bounds));
  out.push_back(koszul_group_compatibility(ctx, bounds));
  out.push_back(contraction_identity(ctx, bounds));
  out.push_back(bar_homotopy_identity(ctx, bounds));
  out.push_back(koszul_homotopy_identity(ctx, bounds));
  out.push_back(koszul_homotopy_determinism(ctx, bounds));
  out.push_back(x_differential_squared(ctx, {bounds.homological + 1, bounds.internal}));
  out.push_back(x_action_associativity(ctx, trials, seed));
  out.push_back(x_decompose_round_trip(ctx, bounds));
  out.push_back(x_differential_bimodule(ctx, trials, seed + 1));
  out.push_back(x_diagonal_counit(ctx, bounds));
  out.push_back(x_diagonal_coassociativity(ctx, bounds));
  out.push_back(x_diagonal_chain_map(ctx, bounds));
  out.push_back(x_homotopy_identity(ctx, bounds));
  out.push_back(x_augmentation_interpolation(ctx, bounds));
  out.push_back(x_exactness(ctx, bounds));
  out.push_back(cochain_bimodule_linearity(ctx, trials, seed + 2));
  out.push_back(coboundary_squared(ctx, trials, seed + 3));
  out.push_back(bracket_antisymmetry(ctx, cochains));
  out.push_back(bracket_of_cocycles_is_cocycle(ctx, cochains));
  out.push_back(bracket_internal_degree(ctx, cochains));
  out.push_back(homotopy_robustness(ctx, cochains));
  return out;
}

}  // namespace twistbrack::checks
