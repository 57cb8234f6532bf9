#include "twistbrack/cochain.hpp"

#include "twistbrack/error.hpp"

namespace twistbrack {

void Cochain::check_degree(const Generator& e) const {
  if (e.degree() != degree_) {
    throw Error(ErrorCode::WrongDegree, "generator of degree " + std::to_string(e.degree()) +
                                            " does not belong to a cochain of degree " + std::to_string(degree_));
  }
}

void Cochain::set(const Generator& e, SkewElement value) {
  check_degree(e);
  if (value.is_zero()) {
    values_.erase(e);
  } else {
    values_.insert_or_assign(e, std::move(value));
  }
}

void Cochain::add(const Generator& e, const SkewElement& value, Fp scale) {
  check_degree(e);
  auto [it, inserted] = values_.try_emplace(e);
  it->second.add(value, scale);
  if (it->second.is_zero()) values_.erase(it);
}

SkewElement Cochain::value(const Generator& e) const {
  auto it = values_.find(e);
  return it == values_.end() ? SkewElement() : it->second;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (other.degree_ != degree_) throw Error(ErrorCode::DegreeMismatch, "cochain degrees differ");
  for (const auto& [e, v] : other.values_) {
    auto [it, inserted] = values_.try_emplace(e);
    it->second += v;
    if (it->second.is_zero()) values_.erase(it);
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (other.degree_ != degree_) throw Error(ErrorCode::DegreeMismatch, "cochain degrees differ");
  for (const auto& [e, v] : other.values_) {
    auto [it, inserted] = values_.try_emplace(e);
    it->second -= v;
    if (it->second.is_zero()) values_.erase(it);
  }
  return *this;
}

Cochain Cochain::scaled(Fp c) const {
  Cochain out(degree_);
  for (const auto& [e, v] : values_) out.set(e, v.scaled(c));
  return out;
}

std::set<int> internal_degrees(const Cochain& f) {
  std::set<int> out;
  for (const auto& [e, v] : f)
    for (const auto& [g, s] : v)
      for (const auto& [m, c] : s) out.insert(m.degree() - e.wedge.size());
  return out;
}

std::optional<int> internal_degree(const Cochain& f) {
  const auto degrees = internal_degrees(f);
  if (degrees.size() != 1) return std::nullopt;
  return *degrees.begin();
}

Cochain homogeneous_component(const Cochain& f, int internal_degree) {
  Cochain out(f.degree());
  for (const auto& [e, v] : f) {
    SkewElement part;
    for (const auto& [g, s] : v) {
      Poly piece;
      for (const auto& [m, c] : s)
        if (m.degree() - e.wedge.size() == internal_degree) piece.add(m, c);
      part.add(g, piece);
    }
    out.set(e, std::move(part));
  }
  return out;
}

}  // namespace twistbrack
