#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace m0n {

// Minimal JSON value with insertion-ordered objects. All CLI and report
// output goes through this so identical inputs serialize byte-identically.
class Json {
 public:
  enum class Kind { Object, Array, String, Integer, Boolean, Null };

  Json() : kind_(Kind::Null) {}
  Json(long long v) : kind_(Kind::Integer), int_(v) {}            // NOLINT
  Json(int v) : Json(static_cast<long long>(v)) {}                // NOLINT
  Json(bool v) : kind_(Kind::Boolean), bool_(v) {}                // NOLINT
  Json(std::string v) : kind_(Kind::String), str_(std::move(v)) {}  // NOLINT
  Json(const char* v) : Json(std::string(v)) {}                   // NOLINT

  static Json object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
  }
  static Json array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
  }
  template <typename T>
  static Json array_of(const std::vector<T>& xs) {
    Json j = array();
    for (const auto& x : xs) j.push_back(Json(x));
    return j;
  }

  Json& set(const std::string& key, Json value) {
    members_.emplace_back(key, std::move(value));
    return *this;
  }
  Json& push_back(Json value) {
    items_.push_back(std::move(value));
    return *this;
  }

  Kind kind() const { return kind_; }
  void dump(std::ostream& out) const;
  std::string dump() const;

 private:
  Kind kind_;
  long long int_ = 0;
  bool bool_ = false;
  std::string str_;
  std::vector<std::pair<std::string, Json>> members_;
  std::vector<Json> items_;
};

std::string json_escape(const std::string& s);

}  // namespace m0n
