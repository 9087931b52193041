#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpkit/tables.hpp"

using namespace helpkit;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(HELPKIT_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const TableBundle& mcl() {
  static const TableBundle b = load_bundle(std::string(HELPKIT_DATA_DIR) +
                                           "/mcl.json");
  return b;
}

bool has_finding(const std::vector<std::string>& f, const std::string& s) {
  for (const auto& x : f)
    if (x.find(s) != std::string::npos)
      return true;
  return false;
}

}  // namespace

TEST_CASE("trivial group bundle") {
  TableBundle b = parse_bundle(read_file("trivial.json"));
  CHECK(b.classes.size() == 1);
  CHECK(b.ordinary.characters.size() == 1);
  CHECK(validate_bundle(b).empty());
  CHECK(prime_set(b).empty());
}

TEST_CASE("McL class list") {
  const std::vector<std::string> expect = {
      "1a",  "2a",  "3a",  "3b",  "4a",  "5a",  "5b",  "6a",
      "6b",  "7a",  "7b",  "8a",  "9a",  "9b",  "10a", "11a",
      "11b", "12a", "14a", "14b", "15a", "15b", "30a", "30b"};
  std::vector<std::string> names;
  for (const auto& c : mcl().classes)
    names.push_back(c.name);
  CHECK(names == expect);
  CHECK(mcl().group_order == Integer("898128000"));
  // 2^7 * 3^6 * 5^3 * 7 * 11 and 2^3 * 3^2 * 5 * 7 * 11
  CHECK(mcl().group_order == Integer(128 * 729) * 125 * 7 * 11);
  CHECK(mcl().exponent == 8 * 9 * 5 * 7 * 11);
}

TEST_CASE("McL validates") {
  CHECK(validate_bundle(mcl()).empty());
  CHECK(mcl().ordinary.degree(1) == 22);
  CHECK(mcl().brauer_table(3) != nullptr);
  CHECK(mcl().brauer_table(5) != nullptr);
}

TEST_CASE("Brauer tables contain only p-regular classes") {
  for (const auto& t : mcl().brauer)
    for (const auto& name : t.class_names)
      CHECK(mcl().class_info(name).element_order % t.prime != 0);
}

TEST_CASE("p-singular class in a Brauer table is a schema error") {
  std::string doc = R"({"group":"C3","order":"3","exponent":3,
    "classes":[{"name":"1a","order":1,"size":"1"},{"name":"3a","order":3,"size":"1"},
               {"name":"3b","order":3,"size":"1"}],
    "tables":[{"kind":"ordinary","characters":[
        {"name":"a","values":[1,1,1]},
        {"name":"b","values":[1,{"conductor":3,"terms":[[1,1]]},{"conductor":3,"terms":[[2,1]]}]},
        {"name":"c","values":[1,{"conductor":3,"terms":[[2,1]]},{"conductor":3,"terms":[[1,1]]}]}]},
      {"kind":"brauer","prime":3,"classes":["1a","3a"],"characters":[{"name":"a","values":[1,1]}]}]})";
  CHECK_THROWS_AS(parse_bundle(doc), SchemaError);
}

TEST_CASE("parse errors") {
  std::string doc = read_file("cyclic3.json");
  std::string truncated = doc.substr(0, doc.size() / 2);
  try {
    parse_bundle(truncated);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.byte_offset > 0);
    CHECK(e.byte_offset <= truncated.size() + 1);
  }
  CHECK_THROWS_AS(parse_bundle(R"({"group":"x"})"), SchemaError);
  CHECK_THROWS_AS(parse_bundle(R"({"group":1,"order":"1","exponent":1,"classes":[],"tables":[]})"),
                  SchemaError);

  std::string bad = doc;
  bad.replace(bad.find("\"conductor\": 3"), 14, "\"conductor\": 0");
  CHECK_THROWS_AS(parse_bundle(bad), ValueError);
  bad = doc;
  bad.replace(bad.find("[[1, 1]]"), 8, "[[3, 1]]");
  CHECK_THROWS_AS(parse_bundle(bad), ValueError);
  bad = doc;
  bad.replace(bad.find("[[1, 1]]"), 8, "[[1, \"1/0\"]]");
  CHECK_THROWS_AS(parse_bundle(bad), ValueError);
}

TEST_CASE("perturbed class size is reported") {
  TableBundle b = mcl();
  b.classes[5].size += 1;
  auto f = validate_bundle(b);
  CHECK(has_finding(f, "class sizes sum"));
  // the weighted orthogonality sums shift too
  CHECK(has_finding(f, "orthogonality"));
}

TEST_CASE("broken character values are reported") {
  TableBundle b = mcl();
  b.ordinary.characters[3].values[4] = Cyclotomic(Rational(1, 2));
  auto f = validate_bundle(b);
  CHECK(has_finding(f, "algebraic integer"));
  CHECK(has_finding(f, "orthogonality"));

  TableBundle c = mcl();
  c.brauer[0].class_names.pop_back();
  for (auto& ch : c.brauer[0].characters)
    ch.values.pop_back();
  CHECK(has_finding(validate_bundle(c), "p-regular"));
}

TEST_CASE("cyclic groups") {
  TableBundle c3 = parse_bundle(read_file("cyclic3.json"));
  CHECK(validate_bundle(c3).empty());
  CHECK(prime_set(c3) == std::vector<long>{3});
  TableBundle c6 = load_bundle(std::string(HELPKIT_DATA_DIR) + "/cyclic6.json");
  CHECK(validate_bundle(c6).empty());
  CHECK(prime_set(c6) == std::vector<long>{2, 3});
  CHECK(prime_set(mcl()) == std::vector<long>{2, 3, 5, 7, 11});
}

TEST_CASE("value_of") {
  const CharacterTable& t = mcl().ordinary;
  for (const auto& c : mcl().classes)
    CHECK(value_of(t, "chi_1", c.name) == Cyclotomic(1));

  // The order-3 form mu_0(u, chi_2) = (-2 t_1 + 22)/3 with
  // t_1 = 5 nu_3a - 4 nu_3b has nu_3a coefficient -2*5.  That coefficient is
  // Tr_{Q(zeta_3)/Q}(chi_2(3a)) = 2 chi_2(3a) for a rational value.
  CHECK(value_of(t, "chi_2", "3a") == Cyclotomic(Rational(-2 * 5, 2)));
  CHECK(value_of(t, "chi_2", "3b") == Cyclotomic(Rational(-2 * -4, 2)));
  // Order 5: mu_0 = (-4 t_1 + 22)/5, t_1 = 3 nu_5a - 2 nu_5b, phi(5) = 4.
  CHECK(value_of(t, "chi_2", "5b") == Cyclotomic(Rational(-4 * -2, 4)));
  CHECK(value_of(t, "chi_2", "5a") == Cyclotomic(Rational(-4 * 3, 4)));

  CHECK_THROWS_AS(value_of(t, "chi_99", "1a"), UnknownName);
  CHECK_THROWS_AS(value_of(t, "chi_2", "13a"), UnknownName);
}

TEST_CASE("serialization round-trips") {
  for (const char* name : {"mcl.json", "cyclic3.json", "cyclic30.json",
                           "trivial.json"}) {
    TableBundle b = parse_bundle(read_file(name));
    std::string once = serialize_bundle(b);
    TableBundle again = parse_bundle(once);
    CHECK(again == b);
    CHECK(serialize_bundle(again) == once);
  }
}
