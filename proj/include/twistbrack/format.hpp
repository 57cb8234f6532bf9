#pragma once

#include <string>

#include "twistbrack/cochain.hpp"
#include "twistbrack/twisted_product.hpp"

namespace twistbrack {

/// Human-readable renderings, e.g. "(1|g0|1)", "(v|v^w|1)", "[g0 | v^w]".
std::string format_monomial(const SkewGroupAlgebra& a, const Monomial& m);
std::string format_wedge(const SkewGroupAlgebra& a, Wedge w);
std::string format(const SkewGroupAlgebra& a, const BarTensor& t);
std::string format(const SkewGroupAlgebra& a, const KoszulTensor& t);
std::string format(const SkewGroupAlgebra& a, const XTensor& t);
std::string format(const SkewGroupAlgebra& a, const Generator& e);
std::string format(const SkewGroupAlgebra& a, const ChainX& x);
std::string format(const SkewGroupAlgebra& a, const ChainD& d);
std::string format(const SkewGroupAlgebra& a, const Cochain& f);

}  // namespace twistbrack
