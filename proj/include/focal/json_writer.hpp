#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace focal {

/// Minimal JSON document builder with insertion-ordered object keys and
/// floats rendered at 12 significant digits, so identical inputs produce
/// byte-identical output.
class Json {
public:
    static Json object() {
        Json j;
        j.value_ = Object{};
        return j;
    }
    static Json array() {
        Json j;
        j.value_ = Array{};
        return j;
    }
    static Json str(std::string s) {
        Json j;
        j.value_ = std::move(s);
        return j;
    }
    static Json integer(std::int64_t v) {
        Json j;
        j.value_ = v;
        return j;
    }
    static Json number(double v) {
        Json j;
        j.value_ = v;
        return j;
    }
    static Json boolean(bool v) {
        Json j;
        j.value_ = v;
        return j;
    }

    Json& set(const std::string& key, Json v) {
        std::get<Object>(value_).emplace_back(key, std::move(v));
        return *this;
    }
    Json& push(Json v) {
        std::get<Array>(value_).push_back(std::move(v));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    struct Object;
    struct Array;
    using Value = std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Object, Array>;
    struct Object : std::vector<std::pair<std::string, Json>> {};
    struct Array : std::vector<Json> {};

    Value value_ = nullptr;

    static void escape(const std::string& s, std::string& out) {
        out += '"';
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
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        if (std::holds_alternative<std::nullptr_t>(value_)) {
            out += "null";
        } else if (std::holds_alternative<bool>(value_)) {
            out += std::get<bool>(value_) ? "true" : "false";
        } else if (std::holds_alternative<std::int64_t>(value_)) {
            out += std::to_string(std::get<std::int64_t>(value_));
        } else if (std::holds_alternative<double>(value_)) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(value_));
            out += buf;
        } else if (std::holds_alternative<std::string>(value_)) {
            escape(std::get<std::string>(value_), out);
        } else if (std::holds_alternative<Object>(value_)) {
            out += '{';
            const auto& obj = std::get<Object>(value_);
            for (std::size_t i = 0; i < obj.size(); ++i) {
                if (i) out += ',';
                escape(obj[i].first, out);
                out += ':';
                obj[i].second.write(out);
            }
            out += '}';
        } else {
            out += '[';
            const auto& arr = std::get<Array>(value_);
            for (std::size_t i = 0; i < arr.size(); ++i) {
                if (i) out += ',';
                arr[i].write(out);
            }
            out += ']';
        }
    }
};

} // namespace focal
