// End-to-end tests that drive the braidorder binary through a shell and
// freeze its observable behavior: exact bytes on stdout, exit codes, and
// JSON shapes checked against the shipped schemas.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

RunResult run(const std::string& args) {
    return run_cmd(std::string("\"") + BRAIDORDER_BINARY + "\" " + args + " 2>/dev/null");
}

RunResult run_env(const std::string& env, const std::string& args) {
    return run_cmd(env + " \"" + BRAIDORDER_BINARY + "\" " + args + " 2>/dev/null");
}

nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(BRAIDORDER_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

// Enough of draft-07 to pin our own outputs: type, enum, required,
// properties, items.
bool validate(const nlohmann::json& schema, const nlohmann::json& v, std::string& err) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                  (t == "string" && v.is_string()) ||
                  (t == "integer" && v.is_number_integer()) ||
                  (t == "boolean" && v.is_boolean());
        if (!ok) {
            err = "expected " + t + ", got " + v.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& cand : schema["enum"])
            if (cand == v) hit = true;
        if (!hit) {
            err = "value " + v.dump() + " not allowed";
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& req : schema["required"])
            if (!v.contains(req.get<std::string>())) {
                err = "missing field " + req.get<std::string>();
                return false;
            }
    if (schema.contains("properties") && v.is_object())
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
            if (v.contains(it.key()) && !validate(it.value(), v.at(it.key()), err)) {
                err = it.key() + ": " + err;
                return false;
            }
    if (schema.contains("items") && v.is_array())
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!validate(schema["items"], v[k], err)) {
                err = "[" + std::to_string(k) + "]: " + err;
                return false;
            }
    return true;
}

void check_schema(const std::string& schema_name, const std::string& text) {
    std::string err;
    bool ok = validate(load_schema(schema_name), nlohmann::json::parse(text), err);
    INFO(schema_name, ": ", err);
    CHECK(ok);
}

}  // namespace

TEST_CASE("query text output") {
    CHECK(run("query nf --n 3 abab").out == "aba\xc2\xb7""b\n");
    CHECK(run("query nf --n 3 abab").status == 0);
    CHECK(run("query compare --n 3 ba ab").out == "less\n");
    CHECK(run("query compare --n 3 ab ba").out == "greater\n");
    CHECK(run("query compare --n 3 aba bab").out == "equal\n");
    CHECK(run("query gcd --n 3 abab baab").out == "ba\n");
    CHECK(run("query lcm --n 3 ab ba").out == "aba\n");
    CHECK(run("query height --n 4 --d 3 --r 2").out == "492\n");
    CHECK(run("query complexity --n 3 --d 2").out == "6\n");
    CHECK(run("query count --n 3 --d 4 a").out == "15\n");
    CHECK(run("query count --n 3 --d 3 \"\"").out == "19\n");
}

TEST_CASE("query json output") {
    RunResult nf = run("query nf --n 3 --format json abab");
    CHECK(nf.status == 0);
    CHECK(nf.out ==
          "{\n"
          "  \"op\": \"nf\",\n"
          "  \"n\": 3,\n"
          "  \"word\": \"abab\",\n"
          "  \"result\": \"aba\xc2\xb7""b\"\n"
          "}\n");
    check_schema("query.schema.json", nf.out);

    RunResult h = run("query height --n 4 --d 3 --r 2 --format json");
    CHECK(h.out ==
          "{\n"
          "  \"op\": \"height\",\n"
          "  \"n\": 4,\n"
          "  \"d\": 3,\n"
          "  \"r\": 2,\n"
          "  \"result\": \"492\"\n"
          "}\n");
    check_schema("query.schema.json", h.out);

    for (const char* args : {"query compare --n 3 --format json ba ab",
                             "query gcd --n 3 --format json abab baab",
                             "query lcm --n 3 --format json ab ba",
                             "query complexity --n 3 --d 2 --format json",
                             "query count --n 3 --d 4 --format json a"}) {
        RunResult r = run(args);
        CHECK(r.status == 0);
        check_schema("query.schema.json", r.out);
    }
}

TEST_CASE("enumerate text output") {
    CHECK(run("enumerate delta --n 3 --d 1").out ==
          "1\n"
          "<_1 a\n"
          "<_2 b\n"
          "<_1 ba\n"
          "<_2 ab\n"
          "<_1 aba\n");
    CHECK(run("enumerate delta --n 3 --d 1 --quotients").out ==
          "1\n"
          "<_1 a  a\n"
          "<_2 b  Ab\n"
          "<_1 ba  a\n"
          "<_2 ab  bA\n"
          "<_1 aba  a\n");
    CHECK(run("enumerate delta --n 1 --d 5").out == "1\n");
    CHECK(run("enumerate aba --n 3").out == run("enumerate delta --n 3 --d 1").out);
}

TEST_CASE("enumerate dot output") {
    RunResult r = run("enumerate delta --n 3 --d 1 --format dot");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "digraph divisors {\n"
          "  v0 [label=\"1\"];\n"
          "  v1 [label=\"a\"];\n"
          "  v2 [label=\"b\"];\n"
          "  v3 [label=\"ab\"];\n"
          "  v4 [label=\"ba\"];\n"
          "  v5 [label=\"aba\"];\n"
          "  v0 -> v1 [label=\"1\"];\n"
          "  v0 -> v2 [label=\"2\"];\n"
          "  v1 -> v3 [label=\"2\"];\n"
          "  v2 -> v4 [label=\"1\"];\n"
          "  v3 -> v5 [label=\"1\"];\n"
          "  v4 -> v5 [label=\"2\"];\n"
          "}\n");
}

TEST_CASE("enumerate json output") {
    RunResult plain = run("enumerate delta --n 3 --d 1 --format json");
    CHECK(plain.status == 0);
    check_schema("enumeration.schema.json", plain.out);
    nlohmann::json j = nlohmann::json::parse(plain.out);
    CHECK(j["base"] == "aba");
    CHECK(j["n"] == 3);
    CHECK(j["entries"] == nlohmann::json({"1", "a", "b", "ba", "ab", "aba"}));
    CHECK(j["jumps"] == nlohmann::json({1, 2, 1, 2, 1}));
    CHECK(!j.contains("quotients"));

    RunResult with = run("enumerate delta --n 3 --d 1 --quotients --format json");
    check_schema("enumeration.schema.json", with.out);
    nlohmann::json jq = nlohmann::json::parse(with.out);
    CHECK(jq["quotients"] == nlohmann::json({"a", "Ab", "a", "bA", "a"}));
}

TEST_CASE("pascal3 emit output") {
    CHECK(run("pascal3 emit --d 0").out == "1\tdelta[q=0] e=0\n");
    CHECK(run("pascal3 emit --d 1").out ==
          "1\tdelta[q=0] e=0\n"
          "a\tdelta[q=0] e=1\n"
          "b\tdelta[q=1] e=0\n"
          "ba\tdelta[q=1] e=1\n"
          "ab\tdelta[q=2] e=0\n"
          "aba\tdelta[q=2] e=1\n");

    RunResult j = run("pascal3 emit --d 2 --format json");
    CHECK(j.status == 0);
    check_schema("pascal3_emit.schema.json", j.out);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["n"] == 3);
    CHECK(parsed["d"] == 2);
    REQUIRE(parsed["entries"].size() == 19);
    CHECK(parsed["entries"][6]["word"] == "bb");
    CHECK(parsed["entries"][6]["provenance"] == "S[p=2] / delta[q=1] e=0");
}

TEST_CASE("pascal3 verify output") {
    RunResult r = run("pascal3 verify --d 2");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "PASS (a) all 19 entries divide the base\n"
          "PASS (b) count 19, recurrence 19\n"
          "PASS (c) all quotients telescope\n"
          "PASS (d) all quotients are drawn and sigma-positive\n"
          "PASS (e) matches the sorted enumeration\n"
          "PASS (f) all splice boundaries agree\n"
          "PASS (g) all splits reassemble the base\n"
          "PASS (h) generator shift agrees with the parity\n");

    RunResult j = run("pascal3 verify --d 2 --format json");
    CHECK(j.status == 0);
    check_schema("pascal3_verify.schema.json", j.out);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["d"] == 2);
    CHECK(parsed["all_pass"] == true);
}

TEST_CASE("verify suites") {
    RunResult t = run("verify table1 --nmax 3 --dmax 4");
    CHECK(t.status == 0);
    CHECK(t.out ==
          "PASS table1 h_1(Delta_2^d)\n"
          "PASS table1 h_1(Delta_3^d)\n"
          "PASS table1 h_2(Delta_3^d)\n"
          "table1: 3/3 rows match\n");

    RunResult p = run("verify pascal3 --dmax 2");
    CHECK(p.status == 0);
    CHECK(p.out ==
          "PASS pascal3 d=0\n"
          "PASS pascal3 d=1\n"
          "PASS pascal3 d=2\n"
          "pascal3: 3/3 degrees pass\n");

    RunResult c = run("verify crosscheck --n 3 --dmax 2");
    CHECK(c.status == 0);
    CHECK(c.out ==
          "PASS crosscheck n=3 d=0\n"
          "PASS crosscheck n=3 d=1\n"
          "PASS crosscheck n=3 d=2\n"
          "crosscheck n=3: 3/3 degrees agree\n");
}

TEST_CASE("table output") {
    RunResult csv = run("table --nmax 3 --dmax 2 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out ==
          "r\\d,0,1,2\n"
          "h_1(Delta_2^d),1,2,3\n"
          "h_1(Delta_3^d),1,6,19\n"
          "h_2(Delta_3^d),1,3,7\n");

    RunResult text = run("table --nmax 3 --dmax 2 --format text");
    CHECK(text.status == 0);
    CHECK(text.out ==
          "h_r(\xce\x94_n^d)  0  1   2\n"
          "h_1(\xce\x94_2^d)  1  2   3\n"
          "h_1(\xce\x94_3^d)  1  6  19\n"
          "h_2(\xce\x94_3^d)  1  3   7\n");
}

TEST_CASE("output is deterministic") {
    std::string a = run("enumerate delta --n 3 --d 2 --quotients").out;
    std::string b = run("enumerate delta --n 3 --d 2 --quotients").out;
    CHECK(a == b);
    CHECK(!a.empty());
    CHECK(run("pascal3 emit --d 3").out == run("pascal3 emit --d 3").out);
}

TEST_CASE("exit codes") {
    CHECK(run("query nf --n 3 abz").status == 2);
    CHECK(run("query nf --n 3 abc").status == 2);
    CHECK(run("query nf --n 3 abA").status == 2);
    CHECK(run("query nf --n 3 ab --format yaml").status == 2);
    CHECK(run("query nf ab").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("verify table1 --nmax 9").status == 2);
    CHECK(run("query height --n 6 --d 1 --r 1 --matrix-nmax 5").status == 3);
    CHECK(run("--divisor-cap 5 enumerate delta --n 3 --d 2").status == 3);
    CHECK(run("pascal3 verify --d 9").status == 3);
    CHECK(run_env("BRAIDORDER_MATRIX_NMAX=5", "query height --n 6 --d 1 --r 1").status == 3);
    CHECK(run_env("BRAIDORDER_MATRIX_NMAX=5",
                  "query height --n 6 --d 1 --r 1 --matrix-nmax 6")
              .out == "720\n");
    CHECK(run("--help").status == 0);
    CHECK(run("query --help").status == 0);
    CHECK(run("query height --n 6 --d 1 --r 1").out == "720\n");
}
