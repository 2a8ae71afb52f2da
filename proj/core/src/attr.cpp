#include "tglab/attr.hpp"

#include <cstring>

namespace tglab {
namespace {

void append_u32(std::string* out, std::uint32_t v) {
  char buf[4];
  buf[0] = static_cast<char>(v & 0xff);
  buf[1] = static_cast<char>((v >> 8) & 0xff);
  buf[2] = static_cast<char>((v >> 16) & 0xff);
  buf[3] = static_cast<char>((v >> 24) & 0xff);
  out->append(buf, 4);
}

void append_i64(std::string* out, std::int64_t v) {
  auto u = static_cast<std::uint64_t>(v);
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((u >> (8 * i)) & 0xff);
  out->append(buf, 8);
}

}  // namespace

void AttrValue::encode(std::string* out) const {
  if (is_null()) {
    out->push_back('N');
  } else if (is_int()) {
    out->push_back('i');
    append_i64(out, as_int());
  } else if (is_string()) {
    const std::string& s = as_string();
    out->push_back('s');
    append_u32(out, static_cast<std::uint32_t>(s.size()));
    out->append(s);
  } else {
    const Tuple& t = as_tuple();
    out->push_back('T');
    append_u32(out, static_cast<std::uint32_t>(t.size()));
    for (std::int64_t v : t) append_i64(out, v);
  }
}

std::string AttrValue::to_display() const {
  if (is_null()) return "null";
  if (is_int()) return std::to_string(as_int());
  if (is_string()) return "\"" + as_string() + "\"";
  std::string out = "[";
  const Tuple& t = as_tuple();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(t[i]);
  }
  return out + "]";
}

}  // namespace tglab
