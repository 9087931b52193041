#include "helpkit/tables.hpp"

#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace helpkit {

using nlohmann::json;

std::string CharacterTable::label() const {
  return kind == TableKind::ordinary ? "ordinary"
                                     : "brauer" + std::to_string(prime);
}

std::size_t CharacterTable::class_index(std::string_view name) const {
  for (std::size_t i = 0; i < class_names.size(); ++i)
    if (class_names[i] == name)
      return i;
  throw UnknownName("no class '" + std::string(name) + "' in " + label() +
                    " table");
}

std::size_t CharacterTable::character_index(std::string_view name) const {
  for (std::size_t i = 0; i < characters.size(); ++i)
    if (characters[i].name == name)
      return i;
  throw UnknownName("no character '" + std::string(name) + "' in " +
                    label() + " table");
}

const Cyclotomic& CharacterTable::value(std::string_view character,
                                        std::string_view class_name) const {
  return characters[character_index(character)]
      .values[class_index(class_name)];
}

Integer CharacterTable::degree(std::size_t character) const {
  auto q = characters.at(character).values.at(0).rational();
  if (!q || q->get_den() != 1)
    throw ValueError("character degree is not a rational integer");
  return q->get_num();
}

std::optional<std::size_t> TableBundle::find_class(std::string_view name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name)
      return i;
  return std::nullopt;
}

const ClassInfo& TableBundle::class_info(std::string_view name) const {
  if (auto i = find_class(name))
    return classes[*i];
  throw UnknownName("no class '" + std::string(name) + "' in bundle " +
                    group_name);
}

const CharacterTable* TableBundle::brauer_table(long p) const {
  for (const auto& t : brauer)
    if (t.prime == p)
      return &t;
  return nullptr;
}

// ---------------------------------------------------------------------------
// decoding

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object())
    throw SchemaError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string())
    throw SchemaError(where + ": expected a string");
  return v.get<std::string>();
}

long get_long(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw SchemaError(where + ": expected an integer");
  return v.get<long>();
}

// Integers may be written as JSON numbers or as decimal strings.
Integer get_big(const json& v, const std::string& where) {
  if (v.is_number_integer())
    return Integer(v.get<long>());
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) != 0)
      throw ValueError(where + ": not a decimal integer: " +
                       v.get<std::string>());
    return z;
  }
  throw SchemaError(where + ": expected an integer or decimal string");
}

Rational get_rational(const json& v, const std::string& where) {
  if (v.is_number_integer())
    return Rational(Integer(v.get<long>()));
  if (!v.is_string())
    throw SchemaError(where + ": expected an integer or \"a/b\" string");
  std::string s = v.get<std::string>();
  auto slash = s.find('/');
  Integer num, den = 1;
  if (num.set_str(s.substr(0, slash), 10) != 0 ||
      (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0))
    throw ValueError(where + ": malformed rational '" + s + "'");
  if (den <= 0)
    throw ValueError(where + ": denominator must be positive in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Cyclotomic decode_value(const json& v, const std::string& where) {
  if (!v.is_object())
    return Cyclotomic(get_rational(v, where));
  const json& cj = field(v, "conductor", where);
  if (!cj.is_number_integer())
    throw SchemaError(where + ": conductor must be an integer");
  long n = cj.get<long>();
  if (n < 1)
    throw ValueError(where + ": conductor must be positive, got " +
                     std::to_string(n));
  const json& tj = field(v, "terms", where);
  if (!tj.is_array())
    throw SchemaError(where + ": terms must be an array");
  std::vector<Rational> dense(n);
  std::vector<bool> seen(n, false);
  for (const auto& term : tj) {
    if (!term.is_array() || term.size() != 2)
      throw SchemaError(where + ": each term must be [exponent, coefficient]");
    long e = get_long(term[0], where);
    if (e < 0 || e >= n)
      throw ValueError(where + ": exponent " + std::to_string(e) +
                       " outside [0, " + std::to_string(n) + ")");
    if (seen[e])
      throw ValueError(where + ": repeated exponent " + std::to_string(e));
    seen[e] = true;
    dense[e] = get_rational(term[1], where);
  }
  return Cyclotomic::from_power_basis(n, std::move(dense));
}

std::vector<Character> decode_characters(const json& t, std::size_t width,
                                         const std::string& where) {
  const json& cj = field(t, "characters", where);
  if (!cj.is_array())
    throw SchemaError(where + ": characters must be an array");
  std::vector<Character> out;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    std::string w = where + " character " + std::to_string(i + 1);
    Character c;
    c.name = get_string(field(cj[i], "name", w), w);
    const json& vals = field(cj[i], "values", w);
    if (!vals.is_array() || vals.size() != width)
      throw SchemaError(w + ": expected " + std::to_string(width) + " values");
    for (std::size_t j = 0; j < vals.size(); ++j)
      c.values.push_back(decode_value(vals[j], w + " value " +
                                                   std::to_string(j + 1)));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TableBundle parse_bundle(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  TableBundle b;
  b.group_name = get_string(field(doc, "group", "bundle"), "group");
  b.group_order = get_big(field(doc, "order", "bundle"), "order");
  b.exponent = get_long(field(doc, "exponent", "bundle"), "exponent");
  if (b.group_order < 1 || b.exponent < 1)
    throw ValueError("group order and exponent must be positive");

  const json& cls = field(doc, "classes", "bundle");
  if (!cls.is_array() || cls.empty())
    throw SchemaError("classes must be a non-empty array");
  for (std::size_t i = 0; i < cls.size(); ++i) {
    std::string w = "class " + std::to_string(i + 1);
    ClassInfo c;
    c.name = get_string(field(cls[i], "name", w), w);
    c.element_order = get_long(field(cls[i], "order", w), w);
    c.size = get_big(field(cls[i], "size", w), w);
    if (c.element_order < 1 || c.size < 1)
      throw ValueError(w + ": element order and size must be positive");
    b.classes.push_back(std::move(c));
  }

  const json& tables = field(doc, "tables", "bundle");
  if (!tables.is_array())
    throw SchemaError("tables must be an array");
  bool have_ordinary = false;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    std::string w = "table " + std::to_string(i + 1);
    std::string kind = get_string(field(tables[i], "kind", w), w);
    CharacterTable t;
    if (kind == "ordinary") {
      if (have_ordinary)
        throw SchemaError("more than one ordinary table");
      have_ordinary = true;
      t.kind = TableKind::ordinary;
      for (const auto& c : b.classes)
        t.class_names.push_back(c.name);
    } else if (kind == "brauer") {
      t.kind = TableKind::brauer;
      t.prime = get_long(field(tables[i], "prime", w), w);
      if (t.prime < 2 || prime_divisors(t.prime).front() != t.prime)
        throw SchemaError(w + ": prime " + std::to_string(t.prime) +
                          " is not a prime");
      if (b.brauer_table(t.prime))
        throw SchemaError(w + ": duplicate Brauer table for p = " +
                          std::to_string(t.prime));
      const json& names = field(tables[i], "classes", w);
      if (!names.is_array())
        throw SchemaError(w + ": classes must be an array");
      for (const auto& n : names) {
        std::string name = get_string(n, w);
        auto idx = b.find_class(name);
        if (!idx)
          throw SchemaError(w + ": unknown class '" + name + "'");
        if (b.classes[*idx].element_order % t.prime == 0)
          throw SchemaError(w + ": class '" + name + "' is " +
                            std::to_string(t.prime) + "-singular");
        t.class_names.push_back(name);
      }
    } else {
      throw SchemaError(w + ": unknown table kind '" + kind + "'");
    }
    t.characters = decode_characters(tables[i], t.class_names.size(), w);
    if (t.kind == TableKind::ordinary)
      b.ordinary = std::move(t);
    else
      b.brauer.push_back(std::move(t));
  }
  if (!have_ordinary)
    throw SchemaError("bundle has no ordinary table");
  return b;
}

TableBundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str());
}

// ---------------------------------------------------------------------------
// encoding

namespace {

json encode_rational(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return q.get_num().get_si();
  return q.get_str();
}

json encode_value(const Cyclotomic& c) {
  if (auto q = c.rational())
    return encode_rational(*q);
  json terms = json::array();
  for (const auto& [e, v] : c.terms())
    terms.push_back(json::array({e, encode_rational(v)}));
  return json{{"conductor", c.conductor()}, {"terms", terms}};
}

json encode_characters(const CharacterTable& t) {
  json out = json::array();
  for (const auto& ch : t.characters) {
    json vals = json::array();
    for (const auto& v : ch.values)
      vals.push_back(encode_value(v));
    out.push_back(json{{"name", ch.name}, {"values", vals}});
  }
  return out;
}

}  // namespace

std::string serialize_bundle(const TableBundle& b) {
  json doc;
  doc["group"] = b.group_name;
  doc["order"] = b.group_order.get_str();
  doc["exponent"] = b.exponent;
  json cls = json::array();
  for (const auto& c : b.classes)
    cls.push_back(json{{"name", c.name},
                       {"order", c.element_order},
                       {"size", c.size.get_str()}});
  doc["classes"] = cls;
  json tables = json::array();
  tables.push_back(
      json{{"kind", "ordinary"}, {"characters", encode_characters(b.ordinary)}});
  for (const auto& t : b.brauer)
    tables.push_back(json{{"kind", "brauer"},
                          {"prime", t.prime},
                          {"classes", t.class_names},
                          {"characters", encode_characters(t)}});
  doc["tables"] = tables;
  return doc.dump(1) + "\n";
}

// ---------------------------------------------------------------------------
// validation

std::vector<long> prime_set(const TableBundle& b) {
  std::vector<long> out;
  for (long p : prime_divisors(b.exponent))
    if (mpz_divisible_ui_p(b.group_order.get_mpz_t(), p))
      out.push_back(p);
  return out;
}

namespace {

void check_character_values(const CharacterTable& t,
                            std::vector<std::string>& findings) {
  std::set<std::string> names;
  for (const auto& ch : t.characters) {
    if (!names.insert(ch.name).second)
      findings.push_back(t.label() + ": duplicate character name " + ch.name);
    auto deg = ch.values.empty() ? std::nullopt : ch.values[0].rational();
    if (!deg || deg->get_den() != 1 || *deg <= 0)
      findings.push_back(t.label() + ": degree of " + ch.name +
                         " is not a positive integer");
    for (std::size_t j = 0; j < ch.values.size(); ++j)
      if (!ch.values[j].is_integral())
        findings.push_back(t.label() + ": " + ch.name + " at " +
                           t.class_names[j] + " is not an algebraic integer");
  }
}

}  // namespace

std::vector<std::string> validate_bundle(const TableBundle& b) {
  std::vector<std::string> findings;

  std::set<std::string> names;
  Integer total = 0;
  long lcm = 1;
  for (const auto& c : b.classes) {
    if (!names.insert(c.name).second)
      findings.push_back("duplicate class name " + c.name);
    if (!mpz_divisible_ui_p(b.group_order.get_mpz_t(), c.element_order))
      findings.push_back("element order of " + c.name +
                         " does not divide the group order");
    total += c.size;
    lcm = std::lcm(lcm, c.element_order);
  }
  if (total != b.group_order)
    findings.push_back("class sizes sum to " + total.get_str() +
                       ", not the group order " + b.group_order.get_str());
  if (lcm != b.exponent)
    findings.push_back("exponent " + std::to_string(b.exponent) +
                       " differs from the lcm of element orders " +
                       std::to_string(lcm));
  {
    Integer rest = b.group_order;
    for (long p : prime_set(b))
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p))
        rest /= p;
    if (rest != 1)
      findings.push_back("group order has prime divisors that are not "
                         "element orders");
  }
  if (b.classes.empty() || b.classes[0].element_order != 1 ||
      b.classes[0].size != 1)
    findings.push_back("first class must be the identity class");

  const CharacterTable& ord = b.ordinary;
  check_character_values(ord, findings);
  if (ord.characters.size() != b.classes.size())
    findings.push_back("ordinary table has " +
                       std::to_string(ord.characters.size()) +
                       " characters for " + std::to_string(b.classes.size()) +
                       " classes");

  // First orthogonality relation.
  std::vector<std::vector<Cyclotomic>> weighted;  // size(C) * conj(psi(C))
  for (const auto& ch : ord.characters) {
    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < ch.values.size(); ++j)
      row.push_back(conj(ch.values[j]) * Cyclotomic(Rational(b.classes[j].size)));
    weighted.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < ord.characters.size(); ++a) {
    for (std::size_t c = a; c < ord.characters.size(); ++c) {
      Cyclotomic s;
      for (std::size_t j = 0; j < b.classes.size(); ++j)
        s += ord.characters[a].values[j] * weighted[c][j];
      Cyclotomic expect = a == c ? Cyclotomic(Rational(b.group_order))
                                 : Cyclotomic();
      if (s != expect)
        findings.push_back("orthogonality fails for " +
                           ord.characters[a].name + ", " +
                           ord.characters[c].name);
    }
  }

  for (const auto& t : b.brauer) {
    check_character_values(t, findings);
    if (!mpz_divisible_ui_p(b.group_order.get_mpz_t(), t.prime))
      findings.push_back(t.label() + ": prime does not divide the group order");
    std::vector<std::string> regular;
    for (const auto& c : b.classes)
      if (c.element_order % t.prime != 0)
        regular.push_back(c.name);
    std::vector<std::string> have = t.class_names;
    std::sort(have.begin(), have.end());
    std::sort(regular.begin(), regular.end());
    if (have != regular)
      findings.push_back(t.label() +
                         ": class list is not the set of p-regular classes");
  }
  return findings;
}

}  // namespace helpkit
