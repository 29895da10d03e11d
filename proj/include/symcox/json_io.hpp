// JSON encodings of the library types. Arrays keep the canonical sorted
// orders so output is byte-deterministic.
#ifndef SYMCOX_JSON_IO_HPP
#define SYMCOX_JSON_IO_HPP

#include <json.hpp>

#include "symcox/counting.hpp"
#include "symcox/stratum.hpp"

namespace symcox {

using Json = nlohmann::ordered_json;

// RatPoly <-> array of coefficient strings "num/den" from exponent 0 upward
Json poly_to_json(const RatPoly& p);
RatPoly poly_from_json(const Json& j);

// Symbol <-> {"X":[...],"Y":[...]} (always reduced)
Json symbol_to_json(const Symbol& s);
Symbol symbol_from_json(const Json& j);

// SymbolMultiset <-> [{"symbol":{...},"mult":n}, ...] sorted by (X, Y)
Json multiset_to_json(const SymbolMultiset& ms);
SymbolMultiset multiset_from_json(const Json& j);

// GradedRep <-> [{"degree":k,"cells":[{"eigenvalue":"+q^i","symbols":[...]}]}]
Json graded_to_json(const GradedRep& g);

Json page_to_json(const SpectralPage& page);
Json bounds_to_json(const BoundsReport& report);
Json rz_page_to_json(const CaseSpec& c, const std::vector<RZPageTerm>& grid);

}  // namespace symcox

#endif
