#pragma once

#include <string>

#include "motivzeta/motive.hpp"

namespace motivzeta {

class TokenStream;

// Text form of classes, shared by the CLI, resolution input and JSON output.
// The grammar is documented in docs/class_grammar.md; to_string and parse_class
// round-trip exactly.
std::string to_string(const MotClass& x);
MotClass parse_class(const std::string& src);
MotClass parse_class(TokenStream& ts);  // stops before the first unparsed token

}  // namespace motivzeta
