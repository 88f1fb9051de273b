#include "wqmc/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace wqmc {

JsonValue JsonValue::boolean(bool b) {
    JsonValue v;
    v.kind_ = Kind::Bool;
    v.bool_ = b;
    return v;
}

JsonValue JsonValue::integer(std::int64_t x) {
    JsonValue v;
    v.kind_ = Kind::Int;
    v.int_ = x;
    return v;
}

JsonValue JsonValue::uinteger(std::uint64_t x) {
    JsonValue v;
    v.kind_ = Kind::UInt;
    v.uint_ = x;
    return v;
}

JsonValue JsonValue::real(double x) {
    JsonValue v;
    v.kind_ = Kind::Double;
    v.double_ = x;
    return v;
}

JsonValue JsonValue::str(std::string s) {
    JsonValue v;
    v.kind_ = Kind::String;
    v.string_ = std::move(s);
    return v;
}

JsonValue JsonValue::array() {
    JsonValue v;
    v.kind_ = Kind::Array;
    return v;
}

JsonValue JsonValue::object() {
    JsonValue v;
    v.kind_ = Kind::Object;
    return v;
}

JsonValue& JsonValue::field(const std::string& key) {
    if (kind_ == Kind::Null) kind_ = Kind::Object;
    if (kind_ != Kind::Object) throw std::logic_error("JsonValue: not an object");
    return fields_[key];
}

void JsonValue::push_back(JsonValue v) {
    if (kind_ == Kind::Null) kind_ = Kind::Array;
    if (kind_ != Kind::Array) throw std::logic_error("JsonValue: not an array");
    items_.push_back(std::move(v));
}

std::string json_double(double v) {
    if (!std::isfinite(v)) return "null"; // JSON has no inf/nan tokens
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (std::strpbrk(buf, ".eE") == nullptr) {
        std::strcat(buf, ".0");
    }
    return buf;
}

namespace {

void write_escaped(const std::string& s, std::string& out) {
    out.push_back('"');
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
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

} // namespace

void JsonValue::write(std::string& out) const {
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::Int: out += std::to_string(int_); break;
        case Kind::UInt: out += std::to_string(uint_); break;
        case Kind::Double: out += json_double(double_); break;
        case Kind::String: write_escaped(string_, out); break;
        case Kind::Array: {
            out.push_back('[');
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i) out.push_back(',');
                items_[i].write(out);
            }
            out.push_back(']');
            break;
        }
        case Kind::Object: {
            out.push_back('{');
            bool first = true;
            for (const auto& [key, value] : fields_) { // std::map: keys sorted
                if (!first) out.push_back(',');
                first = false;
                write_escaped(key, out);
                out.push_back(':');
                value.write(out);
            }
            out.push_back('}');
            break;
        }
    }
}

std::string JsonValue::dump() const {
    std::string out;
    write(out);
    return out;
}

} // namespace wqmc
