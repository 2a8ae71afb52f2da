#include "tglab/interner.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "tglab/errors.hpp"

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

}  // namespace

Sig& Sig::role(Role r, std::uint32_t layer) {
  bytes_.push_back('R');
  bytes_.push_back(static_cast<char>(r));
  append_u32(&bytes_, layer);
  return *this;
}

Sig& Sig::color(ColorId c) {
  bytes_.push_back('c');
  append_u32(&bytes_, c);
  return *this;
}

Sig& Sig::symbol(const AttrValue& v) {
  v.encode(&bytes_);
  return *this;
}

Sig& Sig::seq(const AttrSeq& s) {
  bytes_.push_back('Q');
  append_u32(&bytes_, static_cast<std::uint32_t>(s.size()));
  for (const AttrValue& v : s) v.encode(&bytes_);
  return *this;
}

Sig& Sig::multiset(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  bytes_.push_back('M');
  append_u32(&bytes_, static_cast<std::uint32_t>(parts.size()));
  for (const std::string& p : parts) {
    append_u32(&bytes_, static_cast<std::uint32_t>(p.size()));
    bytes_.append(p);
  }
  return *this;
}

std::string Sig::color_pair(ColorId a, ColorId b) {
  std::string out;
  out.push_back('c');
  append_u32(&out, a);
  out.push_back('c');
  append_u32(&out, b);
  return out;
}

ColorId Interner::intern_bytes(const std::string& bytes) {
  auto [it, inserted] = ids_.try_emplace(bytes, static_cast<ColorId>(ids_.size()));
  if (inserted && ids_.size() > std::numeric_limits<ColorId>::max()) {
    throw UnsupportedError("interner exhausted the color id space");
  }
  return it->second;
}

Session::Session() {
  static std::atomic<std::uint64_t> counter{0};
  id = counter.fetch_add(1);
}

}  // namespace tglab
