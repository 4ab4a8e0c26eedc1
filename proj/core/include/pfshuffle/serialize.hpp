#pragma once

// JSON forms of the polynomial types. Big integers are written as decimal
// strings; output is byte-for-byte deterministic (no whitespace, QTPoly terms
// sorted by (q-degree, t-degree)).
//
//   QPoly     {"var":"q","coeffs":["1","0","2"]}
//   QLaurent  {"var":"q","offset":-2,"coeffs":["1"]}
//   QTPoly    {"vars":["q","t"],"terms":[[0,1,"1"],[1,0,"1"]]}

#include <string>
#include <string_view>

#include "pfshuffle/qalg.hpp"

namespace pfshuffle {

std::string to_json(const QPoly& p);
std::string to_json(const QLaurent& p);
std::string to_json(const QTPoly& p);

/// Inverse of to_json; throws ParseError on malformed input.
QPoly qpoly_from_json(std::string_view text);
QLaurent qlaurent_from_json(std::string_view text);
QTPoly qtpoly_from_json(std::string_view text);

/// Space-separated decimal coefficients c0 c1 ...; empty for zero.
std::string to_coeff_list(const QPoly& p);

/// Human-readable form such as "1 + 2q + q^3"; "0" for zero.
std::string to_string(const QPoly& p);
std::string to_string(const QTPoly& p);

}  // namespace pfshuffle
