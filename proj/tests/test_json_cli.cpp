#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ela/json_io.hpp"
#include "test_helpers.hpp"

using namespace ela;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("json_cli");

TEST_CASE("elasticity json round trips in both representations") {
    Rng rng(701);
    const ElasticityTensor e = ElasticityTensor::random(rng);

    const Json jv = voigt_json(e);
    CHECK((elasticity_from_json(jv) - e).norm() == 0.0);

    Json jc;
    Json comps = Json::array();
    for (std::size_t m = 0; m < 81; ++m) comps.push_back(e.as_tensor()[m]);
    jc["components"] = comps;
    CHECK((elasticity_from_json(jc) - e).norm() < 1e-15 * e.norm());

    CHECK_THROWS_AS(elasticity_from_json(nlohmann::json{{"foo", 1}}), FormatError);
    nlohmann::json bad = {{"voigt", {1, 2, 3}}};
    CHECK_THROWS_AS(elasticity_from_json(bad), FormatError);
}

TEST_CASE("invariant vector serialization is an ordered name/value/degree array") {
    Rng rng(702);
    const auto v = separating21(ElasticityTensor::random(rng));
    const Json j = to_json(v);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 21);
    CHECK(j[0]["name"] == "lambda");
    CHECK(j[0]["degree"] == 1);
    CHECK(j[2]["name"] == "I2");
    CHECK(j[20]["name"] == "V11");
    for (const auto& entry : j) {
        auto it = entry.begin();
        CHECK(it.key() == "name");
        ++it;
        CHECK(it.key() == "value");
        ++it;
        CHECK(it.key() == "degree");
    }
}

TEST_CASE("binary form serialization") {
    const BinaryForm f = BinaryForm::from_coefficients({Cplx(1, 2), Cplx(0, -1), Cplx(3, 0)});
    const Json j = to_json(f);
    CHECK(j["degree"] == 2);
    CHECK(j["coefficients"].size() == 3);
    const BinaryForm back = binary_form_from_json(j);
    CHECK((back - f).norm() == 0.0);
}

TEST_CASE("tensor files: json and plain-text 6x6") {
    Rng rng(703);
    const ElasticityTensor e = ElasticityTensor::random(rng);
    const fs::path dir = fs::temp_directory_path() / "elainv_test_io";
    fs::create_directories(dir);

    const fs::path jpath = dir / "tensor.json";
    std::ofstream(jpath) << voigt_json(e).dump(2);
    CHECK((read_elasticity_file(jpath.string()) - e).norm() < 1e-12 * e.norm());

    const fs::path tpath = dir / "tensor.txt";
    {
        std::ofstream out(tpath);
        const Voigt6 c = e.to_voigt();
        out.precision(17);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) out << c(i, j) << " ";
            out << "\n";
        }
    }
    CHECK((read_elasticity_file(tpath.string()) - e).norm() < 1e-12 * e.norm());

    const fs::path bad = dir / "bad.txt";
    std::ofstream(bad) << "1 2 3";
    CHECK_THROWS_AS(read_elasticity_file(bad.string()), FormatError);
    CHECK_THROWS_AS(read_elasticity_file((dir / "missing.json").string()), FormatError);
}

#ifdef ELAINV_CLI_PATH

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "elainv_cli_out.txt";
    const std::string cmd =
        std::string(ELAINV_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult res;
#ifdef _WIN32
    res.exit_code = status;
#else
    res.exit_code = WEXITSTATUS(status);
#endif
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    res.output = buf.str();
    return res;
}

}  // namespace

TEST_CASE("cli: generation is deterministic and kinds behave") {
    const fs::path dir = fs::temp_directory_path() / "elainv_test_cli";
    fs::create_directories(dir);
    const std::string f1 = (dir / "a.json").string();
    const std::string f2 = (dir / "b.json").string();

    CHECK(run_cli("--seed 42 gen generic -o " + f1).exit_code == 0);
    CHECK(run_cli("--seed 42 gen generic -o " + f2).exit_code == 0);
    std::ifstream a(f1), b(f2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());  // identical bytes per seed

    const std::string iso = (dir / "iso.json").string();
    CHECK(run_cli("--seed 7 gen isotropic -o " + iso).exit_code == 0);
    const auto dec = run_cli("decompose " + iso);
    CHECK(dec.exit_code == 0);
    const auto j = nlohmann::json::parse(dec.output);
    CHECK(j["norms"]["h"].get<double>() < 1e-12);
    CHECK(j["norms"]["d_prime"].get<double>() < 1e-12);

    const auto rt = run_cli("decompose --roundtrip " + f1);
    CHECK(rt.exit_code == 0);
    CHECK(nlohmann::json::parse(rt.output)["roundtrip_residual"].get<double>() < 1e-12);

    // genericity: random tensors pass (across seeds), isotropic does not
    for (int seed = 100; seed < 110; ++seed) {
        const std::string f = (dir / ("sweep" + std::to_string(seed) + ".json")).string();
        REQUIRE(run_cli("--seed " + std::to_string(seed) + " gen generic -o " + f).exit_code == 0);
        CHECK(run_cli("genericity " + f).exit_code == 0);
    }
    CHECK(run_cli("genericity " + iso).exit_code == 3);
}

TEST_CASE("cli: compare exit codes") {
    const fs::path dir = fs::temp_directory_path() / "elainv_test_cli";
    fs::create_directories(dir);
    const std::string e1 = (dir / "e1.json").string();
    const std::string rot = (dir / "rot.json").string();
    const std::string other = (dir / "other.json").string();
    const std::string iso = (dir / "iso2.json").string();

    REQUIRE(run_cli("--seed 11 gen generic -o " + e1).exit_code == 0);
    REQUIRE(run_cli("--seed 12 gen rotated-copy --of " + e1 + " -o " + rot).exit_code == 0);
    REQUIRE(run_cli("--seed 13 gen generic -o " + other).exit_code == 0);
    REQUIRE(run_cli("--seed 14 gen isotropic -o " + iso).exit_code == 0);

    const auto eq = run_cli("compare --recover-rotation " + e1 + " " + rot);
    CHECK(eq.exit_code == 0);
    const auto jeq = nlohmann::json::parse(eq.output);
    CHECK(jeq["decision"] == "equivalent");
    CHECK(jeq.contains("rotation"));
    CHECK_FALSE(jeq["rotation"].is_null());

    CHECK(run_cli("compare " + e1 + " " + other).exit_code == 1);
    CHECK(run_cli("compare " + iso + " " + iso).exit_code == 3);
    CHECK(run_cli("--set s19 compare " + e1 + " " + rot).exit_code == 0);
    CHECK(run_cli("--set s18 compare " + e1 + " " + other).exit_code == 1);
}

TEST_CASE("cli: invariants and parse failures") {
    const fs::path dir = fs::temp_directory_path() / "elainv_test_cli";
    fs::create_directories(dir);
    const std::string e1 = (dir / "inv.json").string();
    REQUIRE(run_cli("--seed 21 gen generic -o " + e1).exit_code == 0);

    const auto inv = run_cli("invariants " + e1);
    CHECK(inv.exit_code == 0);
    const auto j = nlohmann::json::parse(inv.output);
    CHECK(j["set"] == "s21");
    CHECK(j["invariants"].size() == 21);

    const std::string iso = (dir / "inv_iso.json").string();
    REQUIRE(run_cli("--seed 22 gen isotropic -o " + iso).exit_code == 0);
    const auto non_generic = run_cli("--set s18 invariants " + iso);
    CHECK(non_generic.exit_code == 3);
    CHECK(nlohmann::json::parse(non_generic.output)["error"] == "non_generic");

    // deterministic values across runs
    const auto again = run_cli("invariants " + e1);
    CHECK(again.output == inv.output);

    const std::string garbage = (dir / "garbage.json").string();
    std::ofstream(garbage) << "{ not json";
    CHECK(run_cli("decompose " + garbage).exit_code == 64);
    CHECK(run_cli("bogus-subcommand").exit_code == 64);
    CHECK(run_cli("--format text decompose " + e1).exit_code == 0);
}

TEST_CASE("cli: selfcheck fault injection fails the named check") {
    const auto res = run_cli("selfcheck --inject-fault=i_from_j");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("[FAIL] i_from_j") != std::string::npos);
    CHECK(res.output.find("failing check: i_from_j") != std::string::npos);
}

#endif  // ELAINV_CLI_PATH

TEST_SUITE_END();
