#ifndef TGLAB_SRC_JSON_UTIL_HPP_
#define TGLAB_SRC_JSON_UTIL_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "tglab/attr.hpp"
#include "tglab/errors.hpp"

namespace tglab {

inline nlohmann::ordered_json attr_to_json(const AttrValue& v) {
  if (v.is_null()) return nullptr;
  if (v.is_int()) return v.as_int();
  if (v.is_string()) return v.as_string();
  return v.as_tuple();
}

inline AttrValue attr_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_null()) return AttrValue::null();
  if (j.is_number_integer()) return AttrValue(j.get<std::int64_t>());
  if (j.is_string()) return AttrValue(j.get<std::string>());
  if (j.is_array()) {
    AttrValue::Tuple tuple;
    tuple.reserve(j.size());
    for (const auto& item : j) {
      if (!item.is_number_integer()) {
        throw InvalidInputError(where + ": tuple symbols may only contain integers");
      }
      tuple.push_back(item.get<std::int64_t>());
    }
    return AttrValue(std::move(tuple));
  }
  throw InvalidInputError(where + ": symbols must be null, an integer, a string, "
                                  "or an array of integers");
}

}  // namespace tglab

#endif  // TGLAB_SRC_JSON_UTIL_HPP_
