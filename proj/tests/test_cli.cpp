#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bkwasym/cli.hpp"

using namespace bkwasym;
namespace cli = bkwasym::cli;

namespace {

const SieveCostModel& shared_model() {
    static SieveCostModel model = SieveCostModel::build(1024);
    return model;
}

double value_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + " = ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 3));
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep)) out.push_back(field);
    return out;
}

}  // namespace

TEST_CASE("parse helpers accept the documented names only") {
    CHECK(cli::parse_algorithm("plain").tag == AlgorithmKind::Tag::plain_bkw);
    CHECK(cli::parse_algorithm("sieve-arith").schedule.kind == GammaSchedule::Kind::arithmetic);
    CHECK_THROWS_AS(cli::parse_algorithm("bkw2"), InvalidParams);
    CHECK(cli::parse_compute("quantum") == ComputeModel::quantum);
    CHECK_THROWS_AS(cli::parse_compute("Quantum"), InvalidParams);
    CHECK(cli::parse_samples("polynomial") == SampleRegime::polynomial);
    CHECK_THROWS_AS(cli::parse_samples("poly"), InvalidParams);
}

TEST_CASE("exponent command prints the optimized exponent") {
    cli::ExponentOptions opts;
    opts.cq = 2.0;
    opts.cs = 1.5;
    opts.algorithm = "plain";
    opts.samples = "polynomial";
    std::ostringstream out, err;
    CHECK(cli::run_exponent(opts, shared_model(), out, err) == cli::kOk);
    CHECK(out.str().find("c = 2.000000") != std::string::npos);
}

TEST_CASE("exponent command rejects invalid parameters with exit 2") {
    cli::ExponentOptions opts;
    opts.cq = 1.0;
    opts.cs = 1.5;
    std::ostringstream out, err;
    CHECK(cli::run_exponent(opts, shared_model(), out, err) == cli::kUsageError);
    CHECK(err.str().find("cq > cs") != std::string::npos);
}

TEST_CASE("json and human output carry the same values") {
    cli::ExponentOptions opts;
    opts.cq = 2.0;
    opts.cs = 1.5;
    opts.algorithm = "sieve-g1";
    std::ostringstream human, err;
    REQUIRE(cli::run_exponent(opts, shared_model(), human, err) == cli::kOk);
    opts.json = true;
    std::ostringstream json;
    REQUIRE(cli::run_exponent(opts, shared_model(), json, err) == cli::kOk);

    const double c_human = value_after(human.str(), "c");
    const double alpha_human = value_after(human.str(), "alpha");
    const std::string j = json.str();
    auto json_field = [&](const std::string& key) {
        const auto pos = j.find('"' + key + "\": \"");
        REQUIRE(pos != std::string::npos);
        return std::stod(j.substr(pos + key.size() + 5));
    };
    CHECK(json_field("exponent") == c_human);
    CHECK(json_field("alpha") == alpha_human);
}

TEST_CASE("lambda command") {
    std::ostringstream out, err;
    cli::LambdaOptions opts;
    opts.gamma = 1.0;
    CHECK(cli::run_lambda(opts, shared_model(), out, err) == cli::kOk);
    CHECK(value_after(out.str(), "lambda") == doctest::Approx(0.2925).epsilon(1e-3));

    std::ostringstream out2, err2;
    opts.gamma = 2.5;
    CHECK(cli::run_lambda(opts, shared_model(), out2, err2) == cli::kUsageError);
}

TEST_CASE("table1 runs and is byte-stable") {
    std::ostringstream a, b, err;
    REQUIRE(cli::run_table1(shared_model(), a, err) == cli::kOk);
    REQUIRE(cli::run_table1(shared_model(), b, err) == cli::kOk);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("0.89") != std::string::npos);
}

TEST_CASE("sweep emits the exact header, ordered deterministic rows") {
    const auto path = std::filesystem::temp_directory_path() / "bkwasym_sweep_test.csv";
    cli::SweepOptions opts;
    opts.cq_min = 1.8;
    opts.cq_max = 2.2;
    opts.cq_steps = 2;
    opts.cs_min = 1.3;
    opts.cs_max = 1.9;  // includes an invalid point (cq=1.8, cs=1.9)
    opts.cs_steps = 2;
    opts.out_path = path.string();
    opts.threads = 2;
    std::ostringstream out, err;
    REQUIRE(cli::run_sweep(opts, shared_model(), out, err) == cli::kOk);

    std::ifstream file(path);
    std::string header;
    REQUIRE(std::getline(file, header));
    CHECK(header == "cq,cs,compute,samples,algorithm,exponent,alpha,gamma_s,gamma_f,status");
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) lines.push_back(line);
    CHECK(lines.size() == 12);  // 4 grid points x 3 rows

    bool saw_skipped = false;
    for (const auto& line : lines) {
        auto fields = split(line, ',');
        REQUIRE(fields.size() == 10);
        if (fields[9] == "skipped") saw_skipped = true;
        // improvement rows: exponent = c_const - c_arith >= -1e-6 when ok
        if (fields[4] == "improvement" && fields[9] == "ok")
            CHECK(std::stod(fields[5]) >= -1e-6);
    }
    CHECK(saw_skipped);  // the cq=1.8, cs=1.9 corner violates cq > cs

    // Round-trip: the printed const/arith exponents differ by the improvement.
    for (std::size_t i = 0; i + 2 < lines.size(); i += 3) {
        auto c = split(lines[i], ',');
        auto a = split(lines[i + 1], ',');
        auto d = split(lines[i + 2], ',');
        if (d[9] != "ok") continue;
        CHECK(std::stod(c[5]) - std::stod(a[5]) ==
              doctest::Approx(std::stod(d[5])).scale(1.0).epsilon(2e-6));
    }

    // Determinism: a second run with a different thread count is byte-identical.
    const auto path2 = std::filesystem::temp_directory_path() / "bkwasym_sweep_test2.csv";
    opts.out_path = path2.string();
    opts.threads = 1;
    std::ostringstream out2, err2;
    REQUIRE(cli::run_sweep(opts, shared_model(), out2, err2) == cli::kOk);
    std::ifstream f1(path), f2(path2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    std::filesystem::remove(path);
    std::filesystem::remove(path2);
}

TEST_CASE("oracle command reports a small gap at log2n = 256") {
    cli::OracleOptions opts;
    opts.algorithm = "sieve-const";
    opts.log2n = 256.0;
    std::ostringstream out, err;
    REQUIRE(cli::run_oracle(opts, shared_model(), out, err) == cli::kOk);
    CHECK(value_after(out.str(), "relative_gap") < 0.02);
}

TEST_CASE("oracle alpha override 0 reproduces the plain exponent exactly") {
    cli::OracleOptions opts;
    opts.algorithm = "sieve-arith";
    opts.alpha_override = 0.0;
    std::ostringstream out, err;
    REQUIRE(cli::run_oracle(opts, shared_model(), out, err) == cli::kOk);
    CHECK(value_after(out.str(), "relative_gap") == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
}

TEST_CASE("oracle rejects non-sieve algorithms") {
    cli::OracleOptions opts;
    opts.algorithm = "plain";
    std::ostringstream out, err;
    CHECK(cli::run_oracle(opts, shared_model(), out, err) == cli::kUsageError);
}

TEST_CASE("model cache file round-trips through obtain_model") {
    const auto path = std::filesystem::temp_directory_path() / "bkwasym_cache_test.csv";
    std::filesystem::remove(path);
    SieveCostModel built = cli::obtain_model(path.string(), 128);
    REQUIRE(std::filesystem::exists(path));
    SieveCostModel loaded = cli::obtain_model(path.string(), 128);
    // The cache stores 12 significant digits, so agreement is near-exact
    // but not bitwise.
    for (double g : {0.3, 0.8, 1.2})
        CHECK(loaded.lambda(g, ComputeModel::classical) ==
              doctest::Approx(built.lambda(g, ComputeModel::classical)).epsilon(1e-10));
    std::filesystem::remove(path);
}
