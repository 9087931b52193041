// Conjugacy-class metadata and ordinary / p-Brauer character tables.

#ifndef HELPKIT_TABLES_HPP_
#define HELPKIT_TABLES_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"

namespace helpkit {

/// Malformed document syntax; byte_offset points into the input.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), byte_offset(offset) {}
  std::size_t byte_offset;
};

/// Well-formed JSON that does not match the bundle schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value that cannot be decoded as a cyclotomic number.
struct ValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownName : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ClassInfo {
  std::string name;
  long element_order = 1;
  Integer size;
  bool operator==(const ClassInfo&) const = default;
};

enum class TableKind { ordinary, brauer };

struct Character {
  std::string name;
  std::vector<Cyclotomic> values;
  bool operator==(const Character&) const = default;
};

class CharacterTable {
public:
  TableKind kind = TableKind::ordinary;
  long prime = 0;  // 0 for the ordinary table
  std::vector<std::string> class_names;
  std::vector<Character> characters;

  /// "ordinary" or "brauer<p>".
  std::string label() const;

  std::size_t class_index(std::string_view name) const;
  std::size_t character_index(std::string_view name) const;
  const Cyclotomic& value(std::string_view character,
                          std::string_view class_name) const;
  /// Degree chi(1), read at the identity class.
  Integer degree(std::size_t character) const;

  bool operator==(const CharacterTable&) const = default;
};

struct TableBundle {
  std::string group_name;
  Integer group_order;
  long exponent = 1;
  std::vector<ClassInfo> classes;
  CharacterTable ordinary;
  std::vector<CharacterTable> brauer;

  std::optional<std::size_t> find_class(std::string_view name) const;
  const ClassInfo& class_info(std::string_view name) const;
  const CharacterTable* brauer_table(long p) const;

  bool operator==(const TableBundle&) const = default;
};

TableBundle parse_bundle(std::string_view document);
TableBundle load_bundle(const std::filesystem::path& path);
std::string serialize_bundle(const TableBundle& bundle);

/// Data-consistency findings; empty iff the bundle passes every check.
std::vector<std::string> validate_bundle(const TableBundle& bundle);

/// Primes dividing the group order, ascending.
std::vector<long> prime_set(const TableBundle& bundle);

inline const Cyclotomic& value_of(const CharacterTable& t,
                                  std::string_view character,
                                  std::string_view class_name) {
  return t.value(character, class_name);
}

}  // namespace helpkit

#endif  // HELPKIT_TABLES_HPP_
