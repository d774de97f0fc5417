#include "towercalc/chain_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace towercalc::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

Degree parse_degree(const std::string& key, const std::string& field) {
  try {
    std::size_t used = 0;
    const long v = std::stol(key, &used);
    if (used != key.size()) fail(field, "degree key '" + key + "' is not an integer");
    if (v < std::numeric_limits<Degree>::min() || v > std::numeric_limits<Degree>::max())
      fail(field, "degree key '" + key + "' out of range");
    return static_cast<Degree>(v);
  } catch (const std::logic_error&) {
    fail(field, "degree key '" + key + "' is not an integer");
  }
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::map<Degree, Matrix> matrices_from(const json& obj, const std::string& field,
                                       const ChainComplex& rows_from,
                                       const ChainComplex& cols_from, int row_offset) {
  if (!obj.is_object()) fail(field, "expected an object keyed by degree");
  std::map<Degree, Matrix> out;
  for (const auto& [key, value] : obj.items()) {
    const Degree d = parse_degree(key, field);
    const std::string where = field + "[" + key + "]";
    out[d] = matrix_from_json(value, rows_from.rank(d + row_offset), cols_from.rank(d), where);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

BigInt bigint_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      fail(field, "'" + s + "' is not a decimal integer");
    return BigInt(s);
  }
  fail(field, "expected an integer");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                        const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of rows");
  if (j.size() != rows)
    fail(field, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      fail(field, "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = bigint_from_json(row[c], field + "[" + std::to_string(r) + "][" +
                                             std::to_string(c) + "]");
  }
  return m;
}

json to_json(const ChainComplex& c) {
  json ranks = json::object();
  json bds = json::object();
  for (Degree d = c.min_degree(); d <= c.max_degree(); ++d) {
    ranks[std::to_string(d)] = c.rank(d);
    const Matrix b = c.boundary(d);
    if (b.rows() > 0 && b.cols() > 0) bds[std::to_string(d)] = to_json(b);
  }
  return json{{"ranks", ranks}, {"boundaries", bds}};
}

ChainComplex complex_from_json(const json& j) {
  const json& ranks = member(j, "ranks", "complex");
  if (!ranks.is_object()) fail("ranks", "expected an object keyed by degree");
  std::map<Degree, std::size_t> r;
  for (const auto& [key, value] : ranks.items()) {
    const Degree d = parse_degree(key, "ranks");
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
      fail("ranks[" + key + "]", "expected a nonnegative integer");
    r[d] = value.get<std::size_t>();
  }
  const ChainComplex shape = ChainComplex::free_on(r);
  std::map<Degree, Matrix> bds;
  if (auto it = j.find("boundaries"); it != j.end())
    bds = matrices_from(*it, "boundaries", shape, shape, -1);
  return ChainComplex(shape.min_degree(),
                      [&] {
                        std::vector<std::size_t> v;
                        for (Degree d = shape.min_degree(); d <= shape.max_degree(); ++d)
                          v.push_back(shape.rank(d));
                        return v;
                      }(),
                      std::move(bds));
}

json to_json(const ChainMap& f) {
  json comps = json::object();
  const auto& s = f.source();
  for (Degree d = s.min_degree(); d <= s.max_degree(); ++d) {
    const Matrix m = f.component(d);
    if (m.rows() > 0 && m.cols() > 0) comps[std::to_string(d)] = to_json(m);
  }
  return json{{"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"components", comps}};
}

ChainMap map_from_json(const json& j) {
  ChainComplex source = complex_from_json(member(j, "source", "map"));
  ChainComplex target = complex_from_json(member(j, "target", "map"));
  std::map<Degree, Matrix> comps;
  if (auto it = j.find("components"); it != j.end())
    comps = matrices_from(*it, "components", target, source, 0);
  return ChainMap(std::move(source), std::move(target), std::move(comps));
}

json to_json(const HomologyGroup& g) {
  json t = json::array();
  for (const auto& x : g.torsion) t.push_back(to_json(x));
  return json{{"betti", g.betti}, {"torsion", t}};
}

json to_json(const HomologySummary& h) {
  json out = json::object();
  for (const auto& [d, g] : h.groups) out[std::to_string(d)] = to_json(g);
  return out;
}

std::string serialize(const ChainComplex& c) { return to_json(c).dump(); }
std::string serialize(const ChainMap& f) { return to_json(f).dump(); }

ChainComplex parse_complex(const std::string& text) {
  return complex_from_json(parse_text(text));
}

ChainMap parse_map(const std::string& text) { return map_from_json(parse_text(text)); }

ChainComplex load_complex(const std::string& path) { return parse_complex(read_file(path)); }
ChainMap load_map(const std::string& path) { return parse_map(read_file(path)); }

}  // namespace towercalc::io
