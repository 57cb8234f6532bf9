#include "twistbrack/bar_resolution.hpp"

#include <algorithm>

#include "twistbrack/error.hpp"

namespace twistbrack {

BarTensor BarResolution::generator(std::span<const GroupIndex> middle) const {
  BarTensor t;
  t.entries.reserve(middle.size() + 2);
  t.entries.push_back(group().identity());
  t.entries.insert(t.entries.end(), middle.begin(), middle.end());
  t.entries.push_back(group().identity());
  return t;
}

bool BarResolution::vanishes(const BarTensor& t) const {
  auto mid = t.middle();
  return std::find(mid.begin(), mid.end(), group().identity()) != mid.end();
}

GroupIndex BarResolution::grade(const BarTensor& t) const {
  GroupIndex g = group().identity();
  for (GroupIndex e : t.entries) g = group().multiply(g, e);
  return g;
}

BarTensor BarResolution::translate(GroupIndex left, const BarTensor& t, GroupIndex right) const {
  BarTensor out = t;
  out.entries.front() = group().multiply(left, out.entries.front());
  out.entries.back() = group().multiply(out.entries.back(), right);
  return out;
}

ChainC BarResolution::boundary(const BarTensor& t) const {
  ChainC out;
  const int i = t.degree();
  if (i <= 0 || vanishes(t)) return out;
  for (int l = 0; l <= i; ++l) {
    BarTensor merged;
    merged.entries.reserve(t.entries.size() - 1);
    for (int k = 0; k < static_cast<int>(t.entries.size()); ++k) {
      if (k == l) {
        merged.entries.push_back(group().multiply(t.entries[static_cast<std::size_t>(k)],
                                                  t.entries[static_cast<std::size_t>(k + 1)]));
        ++k;
      } else {
        merged.entries.push_back(t.entries[static_cast<std::size_t>(k)]);
      }
    }
    if (vanishes(merged)) continue;
    out.add(merged, field().sign(l));
  }
  return out;
}

ChainC BarResolution::differential(const BarTensor& t) const {
  if (t.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "bar differential needs degree >= 1");
  return boundary(t);
}

ChainC BarResolution::differential(const ChainC& c) const {
  ChainC out;
  for (const auto& [t, coeff] : c) out.add(differential(t), coeff);
  return out;
}

GroupIndex BarResolution::augmentation(const BarTensor& t) const {
  if (t.degree() != 0) throw Error(ErrorCode::WrongDegree, "bar augmentation is defined on degree 0");
  return group().multiply(t.entries[0], t.entries[1]);
}

SkewElement BarResolution::augmentation(const ChainC& c) const {
  SkewElement out;
  for (const auto& [t, coeff] : c) out.add(augmentation(t), constant_poly(coeff));
  return out;
}

std::vector<SignedPair<BarTensor>> BarResolution::diagonal(const BarTensor& t) const {
  std::vector<SignedPair<BarTensor>> out;
  if (vanishes(t)) return out;
  const int i = t.degree();
  const GroupIndex one = group().identity();
  for (int j = 0; j <= i; ++j) {
    BarTensor left, right;
    left.entries.assign(t.entries.begin(), t.entries.begin() + j + 1);
    left.entries.push_back(one);
    right.entries.push_back(one);
    right.entries.insert(right.entries.end(), t.entries.begin() + j + 1, t.entries.end());
    out.push_back({1, std::move(left), std::move(right)});
  }
  return out;
}

ChainC BarResolution::homotopy(const BarTensor& left, const BarTensor& right) const {
  ChainC out;
  if (vanishes(left) || vanishes(right)) return out;
  BarTensor merged;
  merged.entries.assign(left.entries.begin(), left.entries.end() - 1);
  merged.entries.push_back(group().multiply(left.entries.back(), right.entries.front()));
  merged.entries.insert(merged.entries.end(), right.entries.begin() + 1, right.entries.end());
  if (vanishes(merged)) return out;
  out.add(merged, field().sign(left.degree()));
  return out;
}

}  // namespace twistbrack
