#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "jcm/jcm.h"

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const char* env = std::getenv("JCM_TEST_TMP");
    fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "jcm_test_capi";
    fs::path dir = root / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct Config {
    jcm_config* ptr = nullptr;
    Config() { REQUIRE(jcm_config_create(&ptr) == JCM_OK); }
    ~Config() { jcm_config_destroy(ptr); }
    Config(const Config&) = delete;
    Config& operator=(const Config&) = delete;
};

}  // namespace

TEST_CASE("capi: status codes and error messages")
{
    Config cfg;
    CHECK(jcm_config_validate(cfg.ptr) == JCM_OK);
    CHECK(std::string(jcm_last_error()).empty());

    CHECK(jcm_config_set(cfg.ptr, "lambda1", "-2") == JCM_OK);
    CHECK(jcm_config_validate(cfg.ptr) == JCM_ERR_INVALID_CONFIG);
    CHECK(std::string(jcm_last_error()).find("lambda1") != std::string::npos);

    CHECK(jcm_config_set(cfg.ptr, "nope", "1") == JCM_ERR_INVALID_CONFIG);
    CHECK(jcm_config_set(nullptr, "lambda1", "1") == JCM_ERR_INVALID_CONFIG);
    CHECK(jcm_config_set(cfg.ptr, nullptr, "1") == JCM_ERR_INVALID_CONFIG);
    CHECK(jcm_config_load_json(cfg.ptr, "/nonexistent/config.json") == JCM_ERR_IO);

    int nmax = 0;
    CHECK(jcm_config_set(cfg.ptr, "lambda1", "0.3") == JCM_OK);
    CHECK(jcm_config_effective_nmax(cfg.ptr, &nmax) == JCM_OK);
    CHECK(nmax >= 40);
    CHECK(std::string(jcm_version()).size() > 0);
}

TEST_CASE("capi: simulation handle")
{
    Config cfg;
    jcm_simulation* sim = nullptr;
    REQUIRE(jcm_simulation_create(cfg.ptr, &sim) == JCM_OK);

    jcm_record r{};
    REQUIRE(jcm_simulation_record(sim, 0.0, &r) == JCM_OK);
    CHECK(r.entropy == 0.0);
    CHECK(r.concurrence == 0.0);
    CHECK(std::abs(r.inversion + 1.0) < 1e-12);
    CHECK(std::abs(r.g2 - 1.0) < 1e-9);
    CHECK(std::abs(r.norm - 1.0) < 1e-12);
    CHECK(std::abs(r.excitation - 9.0) < 1e-9);

    REQUIRE(jcm_simulation_record(sim, 25.0, &r) == JCM_OK);
    CHECK(r.tau == 25.0);
    CHECK(std::abs(r.norm - 1.0) < 1e-10);
    CHECK(r.entropy > 0.0);
    CHECK(jcm_simulation_record(sim, -1.0, &r) == JCM_ERR_INVALID_CONFIG);

    size_t sectors = 0, dim = 0;
    CHECK(jcm_simulation_dimensions(sim, &sectors, &dim) == JCM_OK);
    CHECK(dim == 4 * sectors - 1);
    jcm_simulation_destroy(sim);

    // Vacuum in truncated-ansatz mode is rejected as a configuration error.
    Config truncated;
    jcm_config_set(truncated.ptr, "sectors", "truncated");
    jcm_config_set(truncated.ptr, "alpha", "0");
    CHECK(jcm_simulation_create(truncated.ptr, &sim) == JCM_ERR_INVALID_CONFIG);

    // No photons anywhere: g2 is undefined, reported as a numerical error.
    Config vacuum;
    jcm_config_set(vacuum.ptr, "alpha", "0");
    jcm_config_set(vacuum.ptr, "lambda1", "0");
    REQUIRE(jcm_simulation_create(vacuum.ptr, &sim) == JCM_OK);
    CHECK(jcm_simulation_record(sim, 1.0, &r) == JCM_ERR_NUMERICAL);
    CHECK(std::string(jcm_last_error()).find("g2") != std::string::npos);
    jcm_simulation_destroy(sim);
}

TEST_CASE("capi: run, sweep and render")
{
    const fs::path dir = scratch("run");
    Config cfg;
    REQUIRE(jcm_config_set(cfg.ptr, "out_dir", dir.c_str()) == JCM_OK);
    REQUIRE(jcm_config_set(cfg.ptr, "tmax", "10") == JCM_OK);
    REQUIRE(jcm_config_set(cfg.ptr, "plot", "true") == JCM_OK);
    REQUIRE(jcm_run(cfg.ptr) == JCM_OK);
    CHECK(fs::exists(dir / "series.csv"));
    CHECK(fs::exists(dir / "series_W.svg"));

    const fs::path svg = dir / "custom.svg";
    CHECK(jcm_render((dir / "series.csv").c_str(), "C", svg.c_str(), nullptr) == JCM_OK);
    CHECK(fs::exists(svg));
    CHECK(jcm_render((dir / "series.csv").c_str(), "nope", svg.c_str(), nullptr) ==
          JCM_ERR_INVALID_CONFIG);
    CHECK(jcm_render((dir / "missing.csv").c_str(), "C", svg.c_str(), nullptr) == JCM_ERR_IO);

    const fs::path sweep_dir = scratch("sweep");
    REQUIRE(jcm_config_set(cfg.ptr, "out_dir", sweep_dir.c_str()) == JCM_OK);
    REQUIRE(jcm_config_set(cfg.ptr, "plot", "false") == JCM_OK);
    CHECK(jcm_sweep(cfg.ptr, "lambda2=0.2:0.8:3") == JCM_OK);
    CHECK(fs::exists(sweep_dir / "manifest.json"));
    CHECK(fs::exists(sweep_dir / "lambda2_0.5.csv"));
    CHECK(jcm_sweep(cfg.ptr, "mass=1") == JCM_ERR_INVALID_CONFIG);
}

TEST_CASE("capi: config file, then explicit settings on top")
{
    const fs::path dir = scratch("config");
    const fs::path file = dir / "cfg.json";
    std::ofstream(file) << R"({"lambda1": 0.8, "tmax": 2, "out_dir": ")" << dir.string()
                        << R"(", "format": "json"})";
    Config cfg;
    REQUIRE(jcm_config_load_json(cfg.ptr, file.c_str()) == JCM_OK);
    REQUIRE(jcm_config_set(cfg.ptr, "lambda1", "0.2") == JCM_OK);
    REQUIRE(jcm_run(cfg.ptr) == JCM_OK);
    std::ifstream in(dir / "series.json");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("\"lambda1\":0.2") != std::string::npos);

    std::ofstream(dir / "broken.json") << "{\"tmax\": ";
    CHECK(jcm_config_load_json(cfg.ptr, (dir / "broken.json").c_str()) == JCM_ERR_INVALID_CONFIG);
}
