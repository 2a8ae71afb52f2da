#ifndef TGLAB_INTERNER_HPP_
#define TGLAB_INTERNER_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tglab/attr.hpp"

namespace tglab {

// Dense color identifier. Ids are only meaningful within the Session that
// produced them; comparing ids from different sessions compares nothing.
using ColorId = std::uint32_t;

// Namespace tag for a color signature, keeping the colors produced by
// different update rules apart even when their payloads coincide.
enum class Role : std::uint8_t {
  kStart = 0,      // shared initial state color
  kAttr = 1,       // a single attribute symbol
  kNodeSeq = 2,    // a node's full attribute sequence
  kEdgeSeq = 3,    // an edge's full attribute sequence
  kSeqEncode = 4,  // standalone sequence encoder
  kGnnIn = 5,      // per-step refinement of input colors
  kGnnRec = 6,     // per-step refinement of carried state
  kGnnStatic = 7,  // refinement round over a static view, plain or aggregated
  kRnnCell = 8,    // merge of input and carried state at a step boundary
};

// Canonical byte encoding of one color signature. Every token is
// self-delimiting, so distinct token sequences encode to distinct bytes and
// interning is injective.
class Sig {
 public:
  Sig& role(Role r, std::uint32_t layer = 0);
  Sig& color(ColorId c);
  Sig& symbol(const AttrValue& v);
  Sig& seq(const AttrSeq& s);
  // Appends the parts as an order-insensitive collection (sorted internally).
  Sig& multiset(std::vector<std::string> parts);

  const std::string& bytes() const { return bytes_; }

  // Encoding of a (color, color) pair, for use as a multiset part.
  static std::string color_pair(ColorId a, ColorId b);

 private:
  std::string bytes_;
};

// Injective map from signatures to dense ColorIds, assigned in first-seen
// order. One Interner is one comparison session.
class Interner {
 public:
  ColorId intern(const Sig& sig) { return intern_bytes(sig.bytes()); }
  ColorId intern_bytes(const std::string& bytes);
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, ColorId> ids_;
};

// An interner plus a process-unique id stamped onto the colorings it
// produces, so that accidental cross-session color comparisons are detectable.
struct Session {
  Session();
  std::uint64_t id;
  Interner interner;
};

}  // namespace tglab

#endif  // TGLAB_INTERNER_HPP_
