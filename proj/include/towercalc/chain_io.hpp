#pragma once

#include <string>

#include <json.hpp>

#include "towercalc/chains.hpp"

namespace towercalc::io {

// Structured text format (JSON).
//
//   complex := { "ranks":      { "<degree>": <count>, ... },
//                "boundaries": { "<degree>": <matrix>, ... } }
//   map     := { "source": complex, "target": complex,
//                "components": { "<degree>": <matrix>, ... } }
//   matrix  := [ [<int>, ...], ... ]        row-major, rows = rank(d-1)
//
// Degrees are decimal strings (JSON object keys). Entries are JSON integers,
// or decimal strings when they do not fit in int64. Degrees absent from
// "ranks" have rank 0; absent boundaries/components are zero maps. For a
// matrix with zero rows the column count cannot be carried by the nested
// array, so such matrices may be omitted (they are zero by necessity).
//
// The serializer writes the canonical form: every degree of the support in
// "ranks" and every nonempty matrix. parse(serialize(x)) == x and
// serialize(parse(s)) == s for canonical s.

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols,
                        const std::string& field);

nlohmann::json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChainMap& f);
ChainMap map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HomologyGroup& g);
nlohmann::json to_json(const HomologySummary& h);

nlohmann::json to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j, const std::string& field);

std::string serialize(const ChainComplex& c);
std::string serialize(const ChainMap& f);
ChainComplex parse_complex(const std::string& text);
ChainMap parse_map(const std::string& text);

ChainComplex load_complex(const std::string& path);
ChainMap load_map(const std::string& path);

}  // namespace towercalc::io
