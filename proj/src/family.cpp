#include "hspecht/family.hpp"

#include <stdexcept>

#include "hspecht/monomial.hpp"

namespace hspecht {

std::string family_name(Family f) {
  switch (f) {
    case Family::Rn: return "Rn";
    case Family::Rnk: return "Rnk";
    case Family::Rnks: return "Rnks";
    case Family::Rmu: return "Rmu";
    case Family::Rnkmu: return "Rnkmu";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "Rn") return Family::Rn;
  if (text == "Rnk") return Family::Rnk;
  if (text == "Rnks") return Family::Rnks;
  if (text == "Rmu") return Family::Rmu;
  if (text == "Rnkmu") return Family::Rnkmu;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

FamilyParams normalize_params(Family f, FamilyParams p) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (f) {
    case Family::Rn:
      need(p.n >= 1 && p.n <= kMaxVars, "Rn: need 1 <= n <= 8");
      p.k = p.s = p.n;
      p.mu = Partition();
      break;
    case Family::Rnk:
      need(p.n >= 1 && p.n <= kMaxVars, "Rnk: need 1 <= n <= 8");
      need(p.k >= 1 && p.k <= p.n, "Rnk: need 1 <= k <= n");
      p.s = p.k;
      p.mu = Partition();
      break;
    case Family::Rnks:
      need(p.n >= 1 && p.n <= kMaxVars, "Rnks: need 1 <= n <= 8");
      need(p.k >= 1 && p.k <= p.n, "Rnks: need 1 <= k <= n");
      need(p.s >= 0 && p.s <= p.k, "Rnks: need 0 <= s <= k");
      p.mu = Partition();
      break;
    case Family::Rmu:
      need(p.mu.size() >= 1 && p.mu.size() <= kMaxVars, "Rmu: need 1 <= |mu| <= 8");
      p.n = p.mu.size();
      p.k = p.s = 0;
      break;
    case Family::Rnkmu:
      need(p.n >= 1 && p.n <= kMaxVars, "Rnkmu: need 1 <= n <= 8");
      need(p.mu.size() <= p.n, "Rnkmu: need |mu| <= n");
      need(p.k >= 1 && p.k >= p.mu.length(), "Rnkmu: need k >= max(1, length of mu)");
      p.s = 0;
      break;
  }
  return p;
}

}  // namespace hspecht
