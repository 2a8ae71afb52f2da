#ifndef TGLAB_ATTR_HPP_
#define TGLAB_ATTR_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tglab {

// A discrete attribute symbol. Symbols are either the distinguished Null
// (meaning "absent at this step"), a single integer, a short string, or a
// tuple of integers. Equality is exact: the integer 1 and the tuple [1] are
// different symbols.
class AttrValue {
 public:
  using Tuple = std::vector<std::int64_t>;

  AttrValue() : value_(std::monostate{}) {}
  AttrValue(std::int64_t v) : value_(v) {}            // NOLINT(runtime/explicit)
  AttrValue(int v) : value_(std::int64_t{v}) {}       // NOLINT(runtime/explicit)
  AttrValue(std::string v) : value_(std::move(v)) {}  // NOLINT(runtime/explicit)
  AttrValue(const char* v) : value_(std::string(v)) {}  // NOLINT(runtime/explicit)
  AttrValue(Tuple v) : value_(std::move(v)) {}        // NOLINT(runtime/explicit)

  static AttrValue null() { return AttrValue(); }

  bool is_null() const { return std::holds_alternative<std::monostate>(value_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_string() const { return std::holds_alternative<std::string>(value_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(value_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
  const std::string& as_string() const { return std::get<std::string>(value_); }
  const Tuple& as_tuple() const { return std::get<Tuple>(value_); }

  friend bool operator==(const AttrValue& a, const AttrValue& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const AttrValue& a, const AttrValue& b) { return !(a == b); }
  friend bool operator<(const AttrValue& a, const AttrValue& b) {
    return a.value_ < b.value_;
  }

  // Unambiguous byte encoding, used for color signatures and canonical forms.
  // Every token starts with a tag byte and is self-delimiting.
  void encode(std::string* out) const;

  // Human-readable rendering for error messages ("null", "3", "\"ab\"", "[1,2]").
  std::string to_display() const;

 private:
  std::variant<std::monostate, std::int64_t, std::string, Tuple> value_;
};

using AttrSeq = std::vector<AttrValue>;

}  // namespace tglab

#endif  // TGLAB_ATTR_HPP_
