#pragma once

#include <string>
#include <string_view>

#include "hspecht/tableaux.hpp"

namespace hspecht {

/// The quotient ring families handled by the library.
enum class Family { Rn, Rnk, Rnks, Rmu, Rnkmu };

std::string family_name(Family f);
/// Accepts "Rn", "Rnk", "Rnks", "Rmu", "Rnkmu".
Family parse_family(std::string_view text);

struct FamilyParams {
  int n = 0;
  int k = 0;
  int s = 0;
  Partition mu;
};

/// Checks parameter ranges and fills the implied ones (k = s = n for Rn,
/// s = k for Rnk, n = |mu| for Rmu). Throws std::invalid_argument.
FamilyParams normalize_params(Family f, FamilyParams p);

}  // namespace hspecht
