#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivzeta/zeta.hpp"

namespace motivzeta {

struct Divisor {
  std::string id;
  std::int64_t N = 1;   // multiplicity of f along the divisor
  std::int64_t nu = 1;  // nu - 1 is the multiplicity of the Jacobian
};

struct Stratum {
  std::vector<std::string> I;
  std::string class_text;           // as written in the input
  MotClass cls;
  std::optional<std::string> e_circ_text;  // optional [E_I°], for the forget check
  std::optional<ASClass> e_circ;
};

struct ResolutionData {
  std::vector<Divisor> divisors;
  std::vector<Stratum> strata;

  const Divisor& divisor(const std::string& id) const;
};

// Throws SchemaError on malformed input; ValidationFailure when a supplied [E_I°]
// is inconsistent with the stratum class.
ResolutionData parse_resolution(const std::string& json_text);
ResolutionData load_resolution(const std::string& path);
std::string serialize(const ResolutionData& data);

RationalZeta evaluate_rationality(const ResolutionData& data);
MilnorFiber milnor_fiber_resolution(const ResolutionData& data);

struct RealizedEntry {
  std::string name;  // e.g. "beta", "beta,+", "chi_c,>"
  Invariant inv;
  Functor functor;
  std::optional<RealizedRational> value;
  std::string error;  // set when the realization is unavailable
};

// Z^beta, Z^{beta,+-}, Z^{chi_c} and Z^{chi_c,><}, each realized term by term.
std::vector<RealizedEntry> realized_zetas(const RationalZeta& z);
std::vector<RealizedEntry> realized_zetas(const ResolutionData& data);

}  // namespace motivzeta
