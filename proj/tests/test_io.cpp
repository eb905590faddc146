#include <fstream>

#include "doctest.h"
#include "mtckit/io.hpp"

using namespace mtc;
using io::json;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::zeta(n, k); }

}  // namespace

TEST_CASE("cyclotomic JSON") {
  const Cyclotomic phi = Cyclotomic(1) + z(5) + z(5, 4);
  const json j = io::to_json(phi);
  CHECK(j["conductor"] == 5);
  CHECK(j["coeffs"].size() == 5);
  CHECK(io::cyclotomic_from_json(j) == phi);
  // non-canonical input is accepted: 1 + z + z^2 + z^3 + z^4 = 0 at conductor 5
  json zero = {{"conductor", 5}, {"coeffs", {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}}};
  CHECK(io::cyclotomic_from_json(zero).is_zero());
  CHECK(io::to_json(io::cyclotomic_from_json(zero)) == io::to_json(Cyclotomic(0)));
  // output is canonical: rescaled input serializes identically
  CHECK(io::to_json(phi.rescaled(20)).dump() == j.dump());
  json bad = {{"conductor", 5}, {"coeffs", {{1, 1}}}};
  CHECK_THROWS_WITH_AS(io::cyclotomic_from_json(bad), doctest::Contains("ParseError"), MtcError);
  json zden = {{"conductor", 1}, {"coeffs", {{1, 0}}}};
  CHECK_THROWS_AS(io::cyclotomic_from_json(zden), MtcError);
  const Cyclotomic big = Cyclotomic(Rational(mpz_class("123456789012345678901234567890"), mpz_class(7)));
  CHECK(io::cyclotomic_from_json(io::to_json(big)) == big);
}

TEST_CASE("modular data round trip") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const AnyonTheory t = get(n);
    const json j = io::to_json(t.symbol());
    const io::ModularDataInput in = io::modular_data_from_json(j);
    CHECK(in.labels == t.fusion.labels());
    CHECK((in.stilde.matrix() == t.stilde.matrix()));
    CHECK(in.twists == t.twists);
    CHECK(in.s00_sign == t.s00_sign);
    CHECK(io::to_json(make_symbol(in.stilde, in.twists, in.s00_sign)).dump() == j.dump());
  }
}

TEST_CASE("modular data errors") {
  CHECK_THROWS_AS(io::modular_data_from_json(json::object()), MtcError);
  json j = io::to_json(get("semion").symbol());
  j["twists"].erase(1);
  CHECK_THROWS_AS(io::modular_data_from_json(j), MtcError);
  j = io::to_json(get("semion").symbol());
  j["s00_sign"] = 3;
  CHECK_THROWS_AS(io::modular_data_from_json(j), MtcError);
  CHECK_THROWS_WITH_AS(io::read_modular_data(MTCKIT_TEST_DATA "/truncated.json"), doctest::Contains("ParseError"),
                       MtcError);
  CHECK_THROWS_AS(io::read_modular_data(MTCKIT_TEST_DATA "/does-not-exist.json"), MtcError);
  const io::ModularDataInput fib = io::read_modular_data(MTCKIT_TEST_DATA "/fibonacci.json");
  CHECK(fib.names == std::vector<std::string>{"1", "tau"});
  CHECK(make_symbol(fib.stilde, fib.twists).fusion == get("fibonacci").fusion);
}

TEST_CASE("theory JSON") {
  const json j = io::to_json(get("ising"));
  CHECK(j["name"] == "ising");
  CHECK(j["labels"]["names"] == json({"1", "sigma", "psi"}));
  CHECK(io::cyclotomic_from_json(j["twists"][1]) == z(16));
  CHECK(j["central_charge"] == "1/2");
  CHECK(io::cyclotomic_from_json(j["D"]) == Cyclotomic(2));
  CHECK(j["fusion"][1][1] == json({1, 0, 1}));
  CHECK(j["F"]["precision_bits"] == 128);
  CHECK(j["R"].size() == get("ising").R.size());
  CHECK(io::to_json(get("a1k5half"))["F"].is_null());
  CHECK(io::to_json(get("ising")).dump() == j.dump());
}

TEST_CASE("classification JSON is deterministic") {
  const std::string a = io::to_json(classify_rank(2)).dump();
  const std::string b = io::to_json(classify_rank(2)).dump();
  CHECK(a == b);
  const json j = json::parse(a);
  CHECK(j["symbol_count"] == 4);
  CHECK(j["families"] == json({"z2", "fibonacci"}));
}

TEST_CASE("quantum group metadata") {
  const auto& t = io::quantum_group_table();
  CHECK(t.size() == 23);
  CHECK(t.front().family.rfind("(A_r,1)", 0) == 0);
}
