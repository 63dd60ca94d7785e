#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "focal/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = focal::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json load_schema() {
    std::ifstream f(std::string(FOCAL_SOURCE_DIR) + "/docs/cli-schema.json");
    REQUIRE(f.good());
    return json::parse(f);
}

/// Validator for the schema subset used in docs/cli-schema.json:
/// type, enum, required, properties, additionalProperties, items, pattern, $ref.
bool validate(const json& schema, const json& value, const json& root, std::string& why) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"];
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        return validate(root["definitions"][ref.substr(prefix.size())], value, root, why);
    }
    if (schema.contains("enum")) {
        for (const auto& candidate : schema["enum"])
            if (candidate == value) return true;
        why = "value not in enum: " + value.dump();
        return false;
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "number" && value.is_number());
        if (!ok) {
            why = "expected " + t + ", got " + value.dump();
            return false;
        }
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re)) {
            why = "pattern mismatch: " + value.dump();
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    why = "missing key " + key.get<std::string>();
                    return false;
                }
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validate(props[it.key()], it.value(), root, why)) return false;
            } else if (schema.value("additionalProperties", json(true)) == json(false)) {
                why = "unexpected key " + it.key();
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validate(schema["items"], item, root, why)) return false;
    return true;
}

void check_against_schema(const std::string& definition, const std::string& text) {
    json root = load_schema();
    json value = json::parse(text);
    std::string why;
    bool ok = validate(root["definitions"][definition], value, root, why);
    INFO("definition ", definition, ": ", why);
    CHECK(ok);
}

} // namespace

TEST_CASE("cdelta subcommand") {
    CliResult r = run_cli({"cdelta", "--type", "F4"});
    CHECK(r.code == 0);
    CHECK(r.out == "28\n");

    CliResult j = run_cli({"cdelta", "--type", "F4", "--json"});
    CHECK(j.code == 0);
    check_against_schema("cdelta", j.out);
    CHECK(json::parse(j.out)["c_delta"] == 28);

    CliResult bad = run_cli({"cdelta", "--type", "H3"});
    CHECK(bad.code == 2);
    CHECK(!bad.err.empty());
    CHECK(run_cli({"cdelta", "--type", "C2"}).code == 2);
    CHECK(run_cli({"cdelta"}).code == 2);
}

TEST_CASE("table1 subcommand") {
    CliResult j = run_cli({"table1", "--json"});
    CHECK(j.code == 0);
    check_against_schema("table1", j.out);
    json v = json::parse(j.out);
    CHECK(v["entries"].size() == 9);
    CHECK(v["entries"][8]["c_squared"] == 112);
}

TEST_CASE("phi subcommand") {
    CliResult j = run_cli({"phi", "--type", "A3", "--json"});
    CHECK(j.code == 0);
    check_against_schema("phi", j.out);
    CHECK(json::parse(j.out)["count"] == 4);
    CliResult empty = run_cli({"phi", "--type", "A1", "--json"});
    CHECK(json::parse(empty.out)["count"] == 0);
}

TEST_CASE("bound subcommand") {
    CliResult j = run_cli({"bound", "--factors", "E8", "--real", "--json"});
    CHECK(j.code == 0);
    check_against_schema("bound", j.out);
    json v = json::parse(j.out);
    CHECK(v["c_squared"] == 112);
    CHECK(v["real"] == true);
    CHECK(std::abs(v["radians"].get<double>() - std::atan(1.0 / (4.0 * std::sqrt(14.0)))) <
          1e-11);

    CliResult torus = run_cli({"bound", "--factors", "", "--json"});
    CHECK(torus.code == 0);
    CHECK(torus.err.find("warning") != std::string::npos);
    CHECK(json::parse(torus.out)["c_squared"] == 2);
}

TEST_CASE("verify subcommands") {
    CliResult mab = run_cli({"verify", "mab", "--type", "B2", "--weight", "1,2", "--json"});
    CHECK(mab.code == 0);
    check_against_schema("verify_mab", mab.out);
    CHECK(json::parse(mab.out)["pass"] == true);

    CliResult wrong = run_cli({"verify", "mab", "--type", "B2", "--weight", "1,2,3"});
    CHECK(wrong.code == 2);
    CliResult zero = run_cli({"verify", "mab", "--type", "B2", "--weight", "0,0"});
    CHECK(zero.code == 2);

    CliResult cls = run_cli({"verify", "classical", "--type", "A3", "--samples", "200",
                             "--seed", "9", "--json"});
    CHECK(cls.code == 0);
    check_against_schema("verify_classical", cls.out);

    CliResult notcls = run_cli({"verify", "classical", "--type", "G2"});
    CHECK(notcls.code == 2);

    CliResult jac = run_cli({"verify", "jacobi", "--type", "A2", "--json"});
    CHECK(jac.code == 0);
    check_against_schema("verify_jacobi", jac.out);
    CHECK(json::parse(jac.out)["mode"] == "exhaustive");
}

TEST_CASE("maximize subcommand") {
    CliResult j = run_cli({"maximize", "--type", "A1", "--weight", "2", "--starts", "8",
                           "--seed", "3", "--json"});
    CHECK(j.code == 0);
    check_against_schema("maximize", j.out);
    json v = json::parse(j.out);
    CHECK(std::abs(v["best_value_sq"].get<double>() - 1.0) < 1e-6);
    CHECK(v["within_bound"] == true);
}

TEST_CASE("isopar subcommand") {
    CliResult j = run_cli({"isopar", "--type", "E8", "--json"});
    CHECK(j.code == 0);
    check_against_schema("isopar", j.out);
    json v = json::parse(j.out);
    CHECK(v["max_ratio_sq"] == "4/1");
    CHECK(v["bound_ok"] == true);
}

TEST_CASE("identical seeds give byte-identical JSON") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"maximize", "--type", "B2", "--weight", "1,1", "--starts", "6", "--seed", "42",
              "--json"},
             {"verify", "classical", "--type", "B3", "--samples", "150", "--seed", "7",
              "--json"},
             {"cdelta", "--type", "E7", "--json"}}) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json flag position is flexible") {
    CliResult before = run_cli({"--json", "cdelta", "--type", "G2"});
    CliResult after = run_cli({"cdelta", "--type", "G2", "--json"});
    CHECK(before.code == 0);
    CHECK(before.out == after.out);
}
