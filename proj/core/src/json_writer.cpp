#include "m0n/json_writer.hpp"

#include <sstream>

namespace m0n {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void Json::dump(std::ostream& out) const {
  switch (kind_) {
    case Kind::Null: out << "null"; break;
    case Kind::Integer: out << int_; break;
    case Kind::Boolean: out << (bool_ ? "true" : "false"); break;
    case Kind::String: out << '"' << json_escape(str_) << '"'; break;
    case Kind::Array: {
      out << '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out << ',';
        items_[i].dump(out);
      }
      out << ']';
      break;
    }
    case Kind::Object: {
      out << '{';
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out << ',';
        out << '"' << json_escape(members_[i].first) << "\":";
        members_[i].second.dump(out);
      }
      out << '}';
      break;
    }
  }
}

std::string Json::dump() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

}  // namespace m0n
