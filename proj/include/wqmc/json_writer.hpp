#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace wqmc {

// Minimal JSON document builder with deterministic output: object keys are
// emitted in sorted order and doubles are printed with 17 significant digits,
// so identical inputs always serialize to identical bytes. Used for every
// machine-readable report the tools emit (nlohmann/json is used for parsing
// only, where output formatting does not matter).
class JsonValue {
public:
    JsonValue() : kind_(Kind::Null) {}

    static JsonValue boolean(bool b);
    static JsonValue integer(std::int64_t v);
    static JsonValue uinteger(std::uint64_t v);
    static JsonValue real(double v);
    static JsonValue str(std::string s);
    static JsonValue array();
    static JsonValue object();

    bool is_object() const { return kind_ == Kind::Object; }
    bool is_array() const { return kind_ == Kind::Array; }

    // Object field access; creates the field (and makes this an object if it
    // was null).
    JsonValue& field(const std::string& key);
    void push_back(JsonValue v);

    std::string dump() const;

private:
    enum class Kind { Null, Bool, Int, UInt, Double, String, Array, Object };

    void write(std::string& out) const;

    Kind kind_;
    bool bool_ = false;
    std::int64_t int_ = 0;
    std::uint64_t uint_ = 0;
    double double_ = 0.0;
    std::string string_;
    std::vector<JsonValue> items_;
    std::map<std::string, JsonValue> fields_;
};

// Formats one double the way JsonValue does ("%.17g", with ".0" appended to
// integral values so the token stays a float).
std::string json_double(double v);

} // namespace wqmc
