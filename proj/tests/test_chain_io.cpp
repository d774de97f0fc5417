#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "towercalc/chain_io.hpp"
#include "towercalc/error.hpp"

using namespace towercalc;

namespace {

std::string fixture(const std::string& name) { return std::string(TOWERCALC_FIXTURES) + "/" + name; }

std::string parse_error_message(const std::string& text) {
  try {
    io::parse_complex(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("parse succeeded: " << text);
  return {};
}

}  // namespace

TEST_CASE("complex round trip on fixtures") {
  for (const auto& c : {fixtures::point(), fixtures::sphere(3), fixtures::rp2(),
                        fixtures::two_circles(), fixtures::cylinder_pair().cylinder,
                        fixtures::disk_pair(4).thom, ChainComplex()}) {
    const std::string s = io::serialize(c);
    CHECK(io::parse_complex(s) == c);
    CHECK(io::serialize(io::parse_complex(s)) == s);
  }
}

TEST_CASE("random complexes and maps round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = fixtures::random_complex(rng);
    const std::string s = io::serialize(c);
    CHECK(io::parse_complex(s) == c);
    CHECK(io::serialize(io::parse_complex(s)) == s);

    const auto f = fixtures::random_pair(rng);
    const std::string fs = io::serialize(f);
    CHECK(io::parse_map(fs) == f);
    CHECK(io::serialize(io::parse_map(fs)) == fs);
  }
}

TEST_CASE("entries beyond int64 are strings") {
  const BigInt huge = BigInt(1) << 80;
  ChainComplex c(0, {1, 1}, {{1, Matrix{{huge}}}});
  const auto j = io::to_json(c);
  CHECK(j["boundaries"]["1"][0][0].is_string());
  CHECK(io::complex_from_json(j) == c);
  CHECK(io::bigint_from_json(nlohmann::json("-123456789012345678901234567890"), "x") ==
        BigInt("-123456789012345678901234567890"));
  CHECK(io::bigint_from_json(nlohmann::json(-5), "x") == -5);
}

TEST_CASE("missing boundaries are zero and negative degrees work") {
  const auto c = io::parse_complex(R"({"ranks": {"-1": 1, "0": 2}})");
  CHECK(c.min_degree() == -1);
  CHECK(c.rank(0) == 2);
  CHECK(c.boundary(0) == Matrix(1, 2));
}

TEST_CASE("parse errors name the field") {
  CHECK(parse_error_message("not json").find("JSON") != std::string::npos);
  CHECK(parse_error_message(R"({"boundaries": {}})").find("ranks") != std::string::npos);
  CHECK(parse_error_message(R"({"ranks": {"x": 1}})").find("'x'") != std::string::npos);
  CHECK(parse_error_message(R"({"ranks": {"0": -1}})").find("ranks[0]") != std::string::npos);
  CHECK(parse_error_message(R"({"ranks": {"0": 1, "1": 1}, "boundaries": {"1": [[1, 2]]}})")
            .find("boundaries[1]") != std::string::npos);
  CHECK(parse_error_message(R"({"ranks": {"0": 1, "1": 1}, "boundaries": {"1": [["z"]]}})")
            .find("boundaries[1]") != std::string::npos);
}

TEST_CASE("invalid complexes from files keep their error codes") {
  try {
    io::parse_complex(R"({"ranks": {"0": 1, "1": 1, "2": 1}, "boundaries": {"1": [[1]], "2": [[1]]}})");
    FAIL("accepted d∘d != 0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }
  try {
    io::load_complex(fixture("does-not-exist.json"));
    FAIL("loaded a missing file");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("fixture files equal the in-code fixtures") {
  const auto disk = fixtures::disk_pair(4);
  CHECK(io::load_complex(fixture("disk4.json")) == disk.disk);
  CHECK(io::load_map(fixture("disk4_boundary.json")) == disk.inclusion);
  CHECK(io::load_map(fixture("disk4_section.json")) == disk.section);
  CHECK(io::load_map(fixture("disk4_alpha1.json")) == fixtures::sphere_to_thom(disk, 1));
  CHECK(io::load_map(fixture("disk4_alpha2.json")) == fixtures::sphere_to_thom(disk, 2));

  const auto cyl = fixtures::cylinder_pair();
  CHECK(io::load_complex(fixture("cylinder.json")) == cyl.cylinder);
  CHECK(io::load_map(fixture("cylinder_boundary.json")) == cyl.inclusion);
  CHECK(io::load_map(fixture("cylinder_section.json")) == cyl.section);
  CHECK(io::load_map(fixture("cylinder_bad_section.json")) == cyl.bad_section);
  CHECK(io::load_complex(fixture("rp2.json")) == fixtures::rp2());
}
