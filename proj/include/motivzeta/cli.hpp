#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "motivzeta/brieskorn.hpp"
#include "motivzeta/poly.hpp"

namespace motivzeta::cli {

inline constexpr const char* kSchemaVersion = "motivzeta/1";
inline constexpr int kDefaultOrder = 30;

// A parsed polynomial, tagged when it has Brieskorn shape.
struct PolyExpr {
  Poly poly;
  std::optional<BrieskornSpec> brieskorn;
};
PolyExpr parse_polynomial(const std::string& src);

// Series order used when --order is absent: MOTIVZETA_ORDER or 30.
int default_order();

// Runs one command line (without the program name). Returns 0 on success, 1 on
// library errors and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivzeta::cli
