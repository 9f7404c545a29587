#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cgl/cli.hpp"
#include "cgl/error.hpp"
#include "cgl/presets.hpp"

using namespace cgl;

namespace {

std::filesystem::path scratch(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "cgl_tests";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    std::ofstream(p) << content;
    return p;
}

JobSpec job(const std::string& command, const std::string& space) {
    JobSpec j;
    j.command = command;
    j.space = space;
    return j;
}

}  // namespace

TEST_CASE("presets") {
    const auto s = preset("super(1|1)");
    CHECK(s->group() == GradingGroup{0, 1});
    REQUIRE(s->components().size() == 2);
    CHECK(s->components()[0].degree.coords() == std::vector<std::int64_t>{0});
    CHECK(s->components()[1].degree.coords() == std::vector<std::int64_t>{1});
    const auto q = preset("glq(1|1)");
    CHECK(q->factor().sign_form() == std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 1}});
    CHECK(q->factor().exp_form() == std::vector<std::vector<std::int64_t>>{{0, 1}, {-1, 0}});
    const auto z = preset("z2z2(1,1,1,1)");
    CHECK(z->factor().sign_form()[0][1] == 1);
    CHECK(z->factor().sign_form()[1][0] == 1);
    CHECK(z->m_plus() == 4);
    CHECK(preset("green(3)")->m_minus() == 3);
    CHECK_THROWS_AS(preset("sl(2)"), ParseError);
    CHECK_FALSE(builtin_spaces().empty());
}

TEST_CASE("distinguished order puts even components first") {
    const CommutativeFactor f({0, 1}, {{1}}, {{0}});
    const GradingGroup g{0, 1};
    const auto v = make_space(f, {{Degree(g, {1}), 2}, {Degree(g, {0}), 1}});
    CHECK(v->m_plus() == 1);
    CHECK(v->is_even(0));
    CHECK(v->degree(1) == Degree(g, {1}));
}

TEST_CASE("space JSON round trip") {
    for (const auto& name : {"super(2|1)", "glq(1|2)", "z2z2(1,0,2,1)", "green(2)"}) {
        const auto v = preset(name);
        const auto back = space_from_json(space_to_json(*v));
        CHECK(*back == *v);
        const auto p = scratch("space.json", space_to_json(*v).dump());
        CHECK(*load_space(p.string()) == *v);
    }
}

TEST_CASE("weights and gl elements as text") {
    const Weight w = parse_weight("1, 1/2,-3");
    CHECK(w == Weight({Rational(1), Rational(1, 2), Rational(-3)}));
    CHECK(parse_weight(weight_text(w)) == w);
    CHECK_THROWS_AS(parse_weight("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_weight("1/0"), ParseError);
    const auto v = preset("glq(1|1)");
    GlElement x(v);
    x.add(0, 1, Scalar::q_power(2) - 1);
    x.add(1, 1, Scalar(Rational(1, 3)));
    CHECK(gl_from_json(v, gl_to_json(x)) == x);
}

TEST_CASE("malformed JSON names the offset") {
    const auto p = scratch("bad.json", "{\"components\": [1, 2,,]}");
    try {
        read_json_file(p.string());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
    CHECK_THROWS_AS(read_json_file((std::filesystem::temp_directory_path() / "cgl_tests" / "missing.json").string()),
                    ParseError);
}

TEST_CASE("job specs round trip through reports") {
    JobSpec j = job("howe-sweep", "super(2|1)");
    j.copies = 2;
    j.max_degree = 4;
    j.seed = 99;
    j.space2 = "super(1|1)";
    CHECK(job_from_json(job_to_json(j)) == j);
    const RunResult r = run_job(j);
    CHECK(r.status == exit_ok);
    CHECK(job_from_json(r.report["job"]) == j);
    CHECK(r.report["kind"] == "howe-sweep");
    for (const auto& row : r.report["result"]["rows"]) CHECK(row["ok"] == true);
    CHECK(r.report["result"]["glvv_rows"].size() == 5);
}

TEST_CASE("reports are deterministic") {
    for (const auto& name : {"verify", "schur-weyl", "fft-check", "tableaux"}) {
        JobSpec j = job(name, "super(1|1)");
        j.power = 3;
        CHECK(run_job(j).report.dump() == run_job(j).report.dump());
    }
}

TEST_CASE("schur-weyl report") {
    JobSpec j = job("schur-weyl", "super(1|1)");
    j.power = 2;
    const RunResult r = run_job(j);
    CHECK(r.status == exit_ok);
    const Json& rows = r.report["result"]["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["sharp_text"] == "(2;0)");
    CHECK(rows[1]["sharp_text"] == "(1;1)");
    CHECK(r.report["result"]["checksum"] == 4);
}

TEST_CASE("verify on a space file") {
    const auto p = scratch("gl11.json", space_to_json(*preset("super(1|1)")).dump());
    JobSpec j = job("verify", p.string());
    j.level = "full";
    const RunResult r = run_job(j);
    CHECK(r.status == exit_ok);
    for (const auto& s : r.report["result"]["suites"]) CHECK(s["passed"] == true);
}

TEST_CASE("classification commands") {
    JobSpec j = job("unitarisable", "super(1|1)");
    j.weight = "1,0";
    j.star_type = "II";
    RunResult r = run_job(j);
    CHECK(r.status == exit_ok);
    CHECK(r.report["result"]["unitarisable"] == false);
    CHECK(r.report["result"]["dual_weight"] == Json::array({"0", "-1"}));
    j = job("gram", "super(2|1)");
    j.weight = "1,0,0";
    r = run_job(j);
    CHECK(r.status == exit_ok);
    CHECK(r.report["result"]["classification_agrees"] == true);
    j = job("typicality", "super(1|1)");
    j.weight = "1/2,-1/2";
    r = run_job(j);
    CHECK(r.report["result"]["typical"] == false);
    CHECK(r.report["result"]["chi"] == "0");
    j = job("casimir", "super(1|1)");
    j.weight = "1,0";
    r = run_job(j);
    CHECK(r.report["result"]["eigenvalue"] == "0");
    CHECK(r.report["result"]["defect"] == 0);
}

TEST_CASE("input errors exit with status 2") {
    JobSpec j = job("kac-dim", "super(2|0)");
    j.weight = "0,1";
    RunResult r = run_job(j);
    CHECK(r.status == exit_input);
    CHECK(r.report["kind"] == "error");
    CHECK(r.report["error"]["type"] == "domain");

    j = job("gram", "glq(1|1)");
    j.weight = "1,0";
    r = run_job(j);
    CHECK(r.status == exit_input);
    CHECK(r.report["error"]["type"] == "unsupported");

    j = job("schur-weyl", "super(2|2)");
    j.power = 8;
    j.max_words = 1000;
    CHECK(run_job(j).report["error"]["type"] == "resource");

    const auto p = scratch("broken.json", "{\"factor\": ");
    CHECK(run_job(job("verify", p.string())).status == exit_input);
    CHECK(run_job(job("no-such-command", "super(1|1)")).status == exit_input);
    CHECK(run_job(job("typicality", "super(1|1)")).status == exit_input);
}

TEST_CASE("TSV output") {
    JobSpec j = job("tableaux", "super(1|1)");
    j.power = 2;
    const std::string t = report_tsv(run_job(j).report);
    CHECK(t.rfind("f\tk\tlambda\tsharp\n", 0) == 0);
    CHECK(std::count(t.begin(), t.end(), '\n') == 3);
}
