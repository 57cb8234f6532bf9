#include "twistbrack/skew_algebra.hpp"

#include <mutex>
#include <shared_mutex>
#include <utility>

#include "twistbrack/error.hpp"

namespace twistbrack {

void SkewElement::add(GroupIndex g, const Poly& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SkewElement::add(const SkewElement& other, Fp scale) {
  for (const auto& [g, s] : other.terms_) add(g, s.scaled(scale));
}

SkewElement& SkewElement::operator+=(const SkewElement& other) {
  for (const auto& [g, s] : other.terms_) add(g, s);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& other) {
  for (const auto& [g, s] : other.terms_) {
    Poly neg;
    neg -= s;
    add(g, neg);
  }
  return *this;
}

SkewElement SkewElement::scaled(Fp c) const {
  SkewElement out;
  for (const auto& [g, s] : terms_) out.add(g, s.scaled(c));
  return out;
}

const Poly* SkewElement::component(GroupIndex g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? nullptr : &it->second;
}

struct SkewGroupAlgebra::Cache {
  std::shared_mutex mutex;
  std::map<std::pair<GroupIndex, Monomial>, Poly> monomials;
  std::map<std::pair<GroupIndex, Wedge>, LinearCombination<Wedge>> wedges;
};

SkewGroupAlgebra::SkewGroupAlgebra(PrimeField field, int num_variables, FiniteMatrixGroup group,
                                   std::vector<std::string> variable_names)
    : field_(field),
      num_variables_(num_variables),
      group_(std::move(group)),
      names_(std::move(variable_names)),
      cache_(std::make_unique<Cache>()) {
  if (num_variables < 0 || num_variables > kMaxVariables) {
    throw Error(ErrorCode::ValidationError, "number of variables must lie in [0, " + std::to_string(kMaxVariables) + "]");
  }
  if (group_.dimension() != num_variables) {
    throw Error(ErrorCode::ValidationError, "group dimension does not match number of variables");
  }
  if (names_.empty()) {
    for (int i = 0; i < num_variables; ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  if (static_cast<int>(names_.size()) != num_variables) {
    throw Error(ErrorCode::ValidationError, "variable name count does not match number of variables");
  }
  variable_images_.resize(group_.size());
  for (GroupIndex g = 0; g < group_.size(); ++g) {
    const Matrix& m = group_.matrix(g);
    for (int i = 0; i < num_variables; ++i) {
      Poly image;
      for (int j = 0; j < num_variables; ++j) image.add(Monomial::variable(j), m.at(j, i));
      variable_images_[g].push_back(std::move(image));
    }
  }
}

SkewGroupAlgebra::~SkewGroupAlgebra() = default;
SkewGroupAlgebra::SkewGroupAlgebra(SkewGroupAlgebra&&) noexcept = default;
SkewGroupAlgebra& SkewGroupAlgebra::operator=(SkewGroupAlgebra&&) noexcept = default;

Poly SkewGroupAlgebra::act(GroupIndex g, const Monomial& m) const {
  if (g == group_.identity()) return monomial_poly(m, field_.one());
  auto key = std::make_pair(g, m);
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->monomials.find(key);
    if (it != cache_->monomials.end()) return it->second;
  }
  Poly result = constant_poly(field_.one());
  for (int i = 0; i < num_variables_; ++i) {
    for (int e = 0; e < m.exponent(i); ++e) result = result * variable_images_[g][static_cast<std::size_t>(i)];
  }
  std::unique_lock lock(cache_->mutex);
  cache_->monomials.emplace(key, result);
  return result;
}

Poly SkewGroupAlgebra::act(GroupIndex g, const Poly& s) const {
  if (g == group_.identity()) return s;
  Poly out;
  for (const auto& [m, c] : s) out.add(act(g, m), c);
  return out;
}

LinearCombination<Wedge> SkewGroupAlgebra::act(GroupIndex g, Wedge w) const {
  if (g == group_.identity()) return LinearCombination<Wedge>(w, field_.one());
  auto key = std::make_pair(g, w);
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->wedges.find(key);
    if (it != cache_->wedges.end()) return it->second;
  }
  const Matrix& m = group_.matrix(g);
  LinearCombination<Wedge> current(Wedge{}, field_.one());
  for (int i : w.indices()) {
    LinearCombination<Wedge> next;
    for (const auto& [partial, c] : current) {
      for (int j = 0; j < num_variables_; ++j) {
        Fp entry = m.at(j, i);
        if (entry.is_zero() || partial.contains(j)) continue;
        // Appending x_j on the right moves it past every member above j.
        int passes = partial.size() - partial.count_below(j);
        next.add(partial.with(j), c * entry * field_.sign(passes));
      }
    }
    current = std::move(next);
  }
  std::unique_lock lock(cache_->mutex);
  cache_->wedges.emplace(key, current);
  return current;
}

SkewElement SkewGroupAlgebra::multiply(const SkewElement& a, const SkewElement& b) const {
  SkewElement out;
  for (const auto& [g, s] : a) {
    for (const auto& [h, t] : b) out.add(group_.multiply(g, h), s * act(g, t));
  }
  return out;
}

std::string SkewGroupAlgebra::group_word_string(GroupIndex g) const {
  const auto& word = group_.word(g);
  if (word.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += "*";
    out += "g" + std::to_string(word[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string SkewGroupAlgebra::to_string(const SkewElement& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [g, s] : a) {
    if (!out.empty()) out += " + ";
    std::string poly = twistbrack::to_string(s, names_);
    if (g == group_.identity()) {
      out += "(" + poly + ")";
    } else {
      out += "(" + poly + ")*" + group_word_string(g);
    }
  }
  return out;
}

}  // namespace twistbrack
