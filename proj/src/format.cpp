#include "twistbrack/format.hpp"

namespace twistbrack {

namespace {

template <class Chain, class Fn>
std::string format_combination(const Chain& chain, Fn&& item) {
  if (chain.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : chain) {
    const std::int64_t b = c.balanced();
    if (out.empty()) {
      if (b < 0) out += "-";
    } else {
      out += b < 0 ? " - " : " + ";
    }
    const std::int64_t mag = b < 0 ? -b : b;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += item(key);
  }
  return out;
}

}  // namespace

std::string format_monomial(const SkewGroupAlgebra& a, const Monomial& m) {
  return a.to_string(monomial_poly(m, a.field().one()));
}

std::string format_wedge(const SkewGroupAlgebra& a, Wedge w) {
  if (w.empty()) return "1";
  std::string out;
  for (int i : w.indices()) {
    if (!out.empty()) out += "^";
    out += a.variable_names()[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string format(const SkewGroupAlgebra& a, const BarTensor& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    if (k) out += "|";
    out += a.group_word_string(t.entries[k]);
  }
  return out + ")";
}

std::string format(const SkewGroupAlgebra& a, const KoszulTensor& t) {
  return "(" + format_monomial(a, t.left) + "|" + format_wedge(a, t.wedge) + "|" + format_monomial(a, t.right) + ")";
}

std::string format(const SkewGroupAlgebra& a, const XTensor& t) { return format(a, t.c) + "x" + format(a, t.d); }

std::string format(const SkewGroupAlgebra& a, const Generator& e) {
  std::string out = "[";
  for (std::size_t k = 0; k < e.bar.size(); ++k) {
    if (k) out += ",";
    out += a.group_word_string(e.bar[k]);
  }
  return out + " | " + format_wedge(a, e.wedge) + "]";
}

std::string format(const SkewGroupAlgebra& a, const ChainX& x) {
  return format_combination(x, [&](const XTensor& t) { return format(a, t); });
}

std::string format(const SkewGroupAlgebra& a, const ChainD& d) {
  return format_combination(d, [&](const KoszulTensor& t) { return format(a, t); });
}

std::string format(const SkewGroupAlgebra& a, const Cochain& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : f) {
    if (!out.empty()) out += "; ";
    out += format(a, e) + " -> " + a.to_string(v);
  }
  return out;
}

}  // namespace twistbrack
