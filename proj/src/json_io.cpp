#include "sandpile/json_io.hpp"

#include <json.hpp>

namespace sandpile {

namespace {

using nlohmann::json;

Value integer(const json& j, const char* field) {
    if (j.is_number_unsigned()) {
        auto v = j.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(INT64_MAX))
            throw OverflowError(std::string("field '") + field + "' exceeds the 64-bit range");
        return static_cast<Value>(v);
    }
    if (j.is_number_integer()) return j.get<Value>();
    if (j.is_number_float()) throw OverflowError(std::string("field '") + field + "' is not a 64-bit integer");
    throw InputError(std::string("field '") + field + "' must be an integer");
}

std::vector<Value> integers(const json& doc, const char* field) {
    if (!doc.contains(field)) throw InputError(std::string("missing field '") + field + "'");
    const json& j = doc.at(field);
    if (!j.is_array()) throw InputError(std::string("field '") + field + "' must be an array");
    std::vector<Value> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(integer(e, field));
    return out;
}

}  // namespace

Configuration config_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("configuration must be a JSON object");
    for (const char* f : {"m", "n"})
        if (!doc.contains(f)) throw InputError(std::string("missing field '") + f + "'");
    Value m = integer(doc.at("m"), "m"), n = integer(doc.at("n"), "n");
    std::vector<Value> a = integers(doc, "a"), b = integers(doc, "b");
    std::optional<Value> sink;
    if (doc.contains("sink") && !doc.at("sink").is_null()) sink = integer(doc.at("sink"), "sink");
    try {
        return Configuration(GraphShape(m, n), std::move(a), sink, std::move(b));
    } catch (const OverflowError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

std::string config_to_json(const Configuration& u) {
    nlohmann::ordered_json doc;
    doc["m"] = u.shape.m;
    doc["n"] = u.shape.n;
    doc["a"] = u.a;
    doc["sink"] = u.sink ? nlohmann::ordered_json(*u.sink) : nlohmann::ordered_json(nullptr);
    doc["b"] = u.b;
    return doc.dump();
}

}  // namespace sandpile
