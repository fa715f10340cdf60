#include <doctest.h>

#include "biheyt/error.hpp"
#include "biheyt/free_algebra.hpp"
#include "biheyt/io.hpp"
#include "fixtures.hpp"

using namespace biheyt;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("posets round-trip") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) CHECK(poset_from_json(poset_to_json(p)) == p);
  const Json j = poset_to_json(chain_poset(2));
  CHECK(j.at("size") == 2);
  CHECK(j.at("leq") == Json::parse("[[true,true],[false,true]]"));
}

TEST_CASE("algebras round-trip") {
  for (const auto& a : fixture::zoo()) {
    const auto b = algebra_from_json(algebra_to_json(a));
    CHECK(b.size() == a.size());
    CHECK(b.bot() == a.bot());
    CHECK(b.top() == a.top());
    CHECK(b.labels() == a.labels());
    for (Operation op : kOperations) CHECK(b.table(op) == a.table(op));
  }
}

TEST_CASE("free algebra output lists generators") {
  const std::vector<BiHeytingAlgebra> g{fixture::three()};
  const auto f = free_algebra(g, 1);
  const Json j = free_algebra_to_json(f);
  CHECK(j.at("size") == 12);
  CHECK(j.at("generators") == Json(f.generators));
  CHECK(algebra_from_json(j).size() == 12);
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { (void)poset_from_json(Json::parse(R"({"size":2})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)poset_from_json(Json::parse(R"({"size":2,"leq":[[true]]})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)poset_from_json(Json::parse(R"({"size":1,"leq":[[2]]})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          (void)algebra_from_json(Json::parse(R"({"size":2,"leq":[[true,true],[false,true]],"bot":0,"top":5})"));
        }) == ErrorKind::Parse);
  // A valid shape that is not a lattice order surfaces the order error.
  CHECK(kind_of([] {
          (void)algebra_from_json(Json::parse(R"({"size":2,"leq":[[true,false],[false,true]],"bot":0,"top":1})"));
        }) != ErrorKind::Parse);
}

TEST_CASE("terms and rules") {
  const Rule r = middle_element_rule();
  const Json j = rule_to_json(r);
  CHECK(j.at("arity") == 1);
  CHECK(j.at("premises").size() == 2);
  CHECK(j.at("premises")[0].at("left") == Json::parse(R"({"op":"!","args":[{"var":1}]})"));
  CHECK(j.at("conclusion").at("right") == Json::parse(R"({"const":1})"));
  CHECK(rule_from_json(j) == r);
  CHECK(rule_from_text(j.dump()) == r);
  CHECK(rule_from_text("  " + to_string(r)) == r);
  const Term t = parse_term("(x1 -< x2) -> ~x1 | 0");
  CHECK(term_from_json(term_to_json(t)) == t);
  CHECK(kind_of([] { (void)term_from_json(Json::parse(R"({"op":"&","args":[{"var":1}]})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)term_from_json(Json::parse(R"({"var":0})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)rule_from_text("{not json"); }) == ErrorKind::Parse);
}

TEST_CASE("congruences and dot") {
  CHECK(congruence_to_json(Congruence({0, 0, 1})) == Json::parse("[[0,1],[2]]"));
  const std::string dot = hasse_dot(chain_poset(3), "c3");
  CHECK(dot.find("digraph c3") == 0);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n1 -> n2") != std::string::npos);
  CHECK(dot.find("n0 -> n2") == std::string::npos);
}

}
