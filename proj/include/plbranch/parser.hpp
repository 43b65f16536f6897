#pragma once

#include <string_view>

#include "plbranch/polyring.hpp"

namespace plbranch {

// Grammar (whitespace is insignificant):
//
//   expr    := [+|-] term { (+|-) term }
//   term    := power { [*] power }          juxtaposition multiplies
//   power   := primary [ ^ exponent ]
//   primary := integer | variable | ( expr )
//
// Integer literals are reduced modulo p as they are read. Errors are reported
// as InputError with a 1-based column.

/// Polynomial in the single variable t.
UnivarPoly parse_univar(std::string_view text, const PrimeField& field);

/// Polynomial in x and y.
BivarPoly parse_bivar(std::string_view text, const PrimeField& field);

}  // namespace plbranch
