#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ivhs/io.hpp"

namespace fs = std::filesystem;
using namespace ivhs;

namespace {

const std::string cli = IVHS_CLI_PATH;

int run(const std::string& args, const std::string& log = "/dev/null") {
    std::string cmd = cli + " " + args + " > " + log + " 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    fs::path p = fs::path("cli_test_out") / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("bounds command writes artifacts and a manifest", "[cli]") {
    fs::path out = fresh_dir("bounds25");
    REQUIRE(run("bounds --m 2 --d 5 --out " + out.string()) == 0);
    json j = json::parse(read_file((out / "bounds.json").string()));
    REQUIRE(j["a"] == 4);
    REQUIRE(j["b"] == 44);
    REQUIRE(j["r"] == 40);
    REQUIRE(j["smax0"] == 1);
    REQUIRE(j["smax_check"] == 2);
    json manifest = json::parse(read_file((out / "manifest.json").string()));
    REQUIRE(manifest["command"] == "bounds");
    REQUIRE(manifest["artifacts"].contains("bounds.json"));
    REQUIRE(manifest["artifacts"].contains("bounds.csv"));
    // hashes match the bytes on disk
    for (auto& [name, hash] : manifest["artifacts"].items())
        REQUIRE(hash == sha256_hex(read_file((out / name).string())));
}

TEST_CASE("bounds at (4,3) reports the degenerate-square counts", "[cli]") {
    fs::path out = fresh_dir("bounds43");
    REQUIRE(run("bounds --m 4 --d 3 --out " + out.string()) == 0);
    json j = json::parse(read_file((out / "bounds.json").string()));
    REQUIRE(j["a"] == 1);
    REQUIRE(j["b"] == 20);
    REQUIRE(j["r"] == 20);
}

TEST_CASE("hypothesis violations exit nonzero", "[cli]") {
    REQUIRE(run("bounds --m 2 --d 3") == 1);
    REQUIRE(run("matrix --m 1 --d 5") == 1);
    REQUIRE(run("no-such-subcommand") != 0);
}

TEST_CASE("matrix command exports the worked matrix", "[cli]") {
    fs::path out = fresh_dir("matrix25");
    REQUIRE(run("matrix --m 2 --d 5 --kind M --out " + out.string()) == 0);
    json j = json::parse(read_file((out / "matrix.json").string()));
    REQUIRE(j["kind"] == "M");
    REQUIRE(j["rows"].size() == 4);
    REQUIRE(j["cols"].size() == 40);

    fs::path outn = fresh_dir("matrixN");
    REQUIRE(run("matrix --m 2 --d 5 --kind N --j 3,1,1,0 --alpha 2,1,1,1 --out " +
                outn.string()) == 0);
    json jn = json::parse(read_file((outn / "matrix.json").string()));
    REQUIRE(jn["kind"] == "N");
    REQUIRE(run("matrix --m 2 --d 5 --kind N --out " + outn.string()) == 1);  // missing flags
}

TEST_CASE("ideal command writes the export and its manifest hash", "[cli]") {
    fs::path out = fresh_dir("ideal240");
    REQUIRE(run("ideal --m 2 --d 4 --s 0 --variant I0 --out " + out.string()) == 0);
    std::string text = read_file((out / "ideal.txt").string());
    json j = json::parse(read_file((out / "ideal.json").string()));
    REQUIRE(j["generator_count"] == 19);
    REQUIRE(j["sha256"] == sha256_hex(text));
    ParsedIdeal parsed = parse_ideal(text);
    REQUIRE(parsed.generators.size() == 19);
}

TEST_CASE("certify command verifies and exits zero", "[cli]") {
    fs::path out = fresh_dir("cert25");
    REQUIRE(run("certify-smax0 --m 2 --d 5 --out " + out.string()) == 0);
    EliminationCertificate cert =
        certificate_from_json(json::parse(read_file((out / "certificate.json").string())));
    REQUIRE(verify_certificate(cert).ok);
    std::string log = read_file((out / "verify.log").string());
    REQUIRE(log.find("verified") != std::string::npos);

    REQUIRE(run("verify-certificate " + (out / "certificate.json").string()) == 0);
}

TEST_CASE("probe runs are byte-for-byte reproducible", "[cli]") {
    fs::path a = fresh_dir("probeA"), b = fresh_dir("probeB");
    REQUIRE(run("probe --m 2 --d 5 --trials 200 --seed 7 --out " + a.string()) == 0);
    REQUIRE(run("probe --m 2 --d 5 --trials 200 --seed 7 --out " + b.string()) == 0);
    REQUIRE(read_file((a / "probe.json").string()) == read_file((b / "probe.json").string()));
    json j = json::parse(read_file((a / "probe.json").string()));
    REQUIRE(j["max_rank"] == 4);
}

TEST_CASE("witness command produces a self-verifying file", "[cli]") {
    fs::path out = fresh_dir("witness25");
    REQUIRE(run("witness --m 2 --d 5 --out " + out.string()) == 0);
    json j = json::parse(read_file((out / "witness.json").string()));
    REQUIRE(j["rank"] == 2);
    REQUIRE(run("verify-witness " + (out / "witness.json").string()) == 0);

    // tamper and expect rejection
    j["rank"] = 3;
    write_file((out / "tampered.json").string(), j.dump());
    REQUIRE(run("verify-witness " + (out / "tampered.json").string()) == 1);
}

TEST_CASE("search exits 0 when resolved and 2 when honest gaps remain", "[cli]") {
    fs::path out24 = fresh_dir("search24");
    std::string log24 = (fs::path("cli_test_out") / "search24.log").string();
    REQUIRE(run("search-smax1 --m 2 --d 4 --time-cap 30 --out " + out24.string(), log24) == 0);
    json j24 = json::parse(read_file((out24 / "search.json").string()));
    REQUIRE(j24["resolved"] == true);
    REQUIRE(j24["certified_lower"] == 0);
    std::string stdout24 = read_file(log24);
    REQUIRE(stdout24.find("first-order correction matrices vanish") != std::string::npos);

    fs::path out25 = fresh_dir("search25");
    REQUIRE(run("search-smax1 --m 2 --d 5 --variant I1 --time-cap 15 --out " +
                out25.string()) == 2);
    json j25 = json::parse(read_file((out25 / "search.json").string()));
    REQUIRE(j25["resolved"] == false);
    REQUIRE(j25["certified_lower"] == 1);
}

TEST_CASE("identical configs give byte-identical search artifacts", "[cli]") {
    fs::path a = fresh_dir("searchA"), b = fresh_dir("searchB");
    REQUIRE(run("search-smax1 --m 2 --d 4 --variant I0 --time-cap 30 --out " + a.string()) == 0);
    REQUIRE(run("search-smax1 --m 2 --d 4 --variant I0 --time-cap 30 --out " + b.string()) == 0);
    REQUIRE(read_file((a / "search.json").string()) == read_file((b / "search.json").string()));
}
