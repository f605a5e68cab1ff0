#include "doctest.h"
#include "json.hpp"
#include "rotaplex/verify.hpp"

using namespace rotaplex;

TEST_CASE("claim registry") {
  auto claims = known_claims();
  CHECK(claims.size() == 10);
  CHECK(default_n("tsp-local") == 5);
  CHECK(default_n("birkhoff") == 3);
  CHECK_THROWS_AS(verify_claim("no-such-claim", {}), std::invalid_argument);
  VerifyParams p;
  p.n = 3;
  CHECK_THROWS_AS(verify_claim("tsp-global", p), std::invalid_argument);
}

TEST_CASE("a fast claim and its report") {
  VerifyParams p;
  VerificationReport r = verify_claim("pi-injective", p);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.params.n == 3);
  CHECK(r.witness.empty());

  auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j.at("claim") == "pi-injective");
  CHECK(j.at("verdict") == "VERIFIED");
  CHECK(j.at("params").at("seed") == 7);
  CHECK(j.at("tool_version") == tool_version());
  CHECK(j.at("version_hash").get<std::string>().size() == 16);
  CHECK(j.contains("timing_ms"));

  // reports are deterministic apart from the timing
  VerificationReport r2 = verify_claim("pi-injective", p);
  r.timing_ms = r2.timing_ms = 0;
  CHECK(report_to_json(r) == report_to_json(r2));
}

TEST_CASE("permutahedron claim") {
  VerificationReport r = verify_claim("permutahedron", {});
  CHECK_MESSAGE(r.verdict == Verdict::Verified, r.witness);
  CHECK(r.details.at("diagram") == "true");
}

TEST_CASE("carrier helpers") {
  Polyhedron sq = dd_convert(Polyhedron::from_vertices(
      2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}}));
  auto lat = face_lattice(sq);
  auto f = carrier_face(lat, sq, {ratio(1, 2), Rational(0)});
  REQUIRE(f);
  CHECK(lat.face(*f).dim == 1);
  auto g = carrier_face(lat, sq, {ratio(1, 2), ratio(1, 2)});
  REQUIRE(g);
  CHECK(lat.face(*g).dim == 2);
  CHECK_FALSE(carrier_face(lat, sq, {Rational(2), Rational(0)}));
  CHECK(full_simplices(sq).size() == 4);
}
