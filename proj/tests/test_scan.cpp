#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade/errors.hpp"
#include "cascade/scan.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using cascade::NonlinearitySpec;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

TEST_CASE("preset registry") {
    const auto gp = cascade::load_preset("gp");
    CHECK(gp.field.f.kind() == NonlinearitySpec::Kind::GilmorePerelomov);
    CHECK(gp.field.f.kappa() == 1.5);
    CHECK(gp.coupling.g.kind() == NonlinearitySpec::Kind::GilmorePerelomov);
    CHECK(gp.coupling.g.kappa() == 1.5);
    CHECK(gp.field.alpha_mag == 0.9);
    CHECK(gp.coupling.beta == 0.01);
    CHECK(gp.phi == doctest::Approx(std::numbers::pi / 2));

    const auto bg = cascade::load_preset("bg-1");
    CHECK(bg.field.f.kind() == NonlinearitySpec::Kind::BarutGirardello);
    CHECK(bg.field.f.kappa() == 0.5);
    CHECK(bg.coupling.g.eval(9) == doctest::Approx(3.0));
    CHECK(bg.coupling.beta == 0.1);
    CHECK(cascade::load_preset("bg-01").coupling.beta == 0.01);

    CHECK(cascade::find_preset("canonical").assumptions.size() >= 1);
    CHECK(cascade::find_preset("gp").assumptions.empty());
    CHECK(cascade::load_preset("cs-gp-coupling").field.f.kind() == NonlinearitySpec::Kind::Unit);

    std::vector<std::string> names;
    for (const auto& p : cascade::preset_registry()) {
        for (const auto& seen : names) CHECK(seen != p.name);
        names.push_back(p.name);
        CHECK_NOTHROW(cascade::validate(p.config));
    }
    CHECK(names.size() == 5);
}

TEST_CASE("unknown preset lists the available names") {
    try {
        (void)cascade::load_preset("nope");
        FAIL("expected UnknownPreset");
    } catch (const cascade::UnknownPreset& e) {
        const std::string msg = e.what();
        CHECK(msg.find("canonical") != std::string::npos);
        CHECK(msg.find("cs-gp-coupling") != std::string::npos);
    }
}

TEST_CASE("config validation") {
    auto c = cascade::load_preset("gp");
    c.tau_steps = 1;
    CHECK_THROWS_AS(cascade::run_scan(c), cascade::InvalidSpec);
    c = cascade::load_preset("gp");
    c.tau_max = 0.0;
    CHECK_THROWS_AS(cascade::run_scan(c), cascade::InvalidSpec);
    c = cascade::load_preset("gp");
    c.field.alpha_mag = 1.2;
    CHECK_THROWS_AS(cascade::run_scan(c), cascade::InvalidSpec);
    c = cascade::load_preset("gp");
    c.coupling.beta = -1.0;
    CHECK_THROWS_AS(cascade::run_scan(c), cascade::InvalidSpec);
}

TEST_CASE("grid and verification rows") {
    auto c = cascade::load_preset("canonical");
    c.tau_max = 10.0;
    c.tau_steps = 5;
    const auto grid = cascade::tau_grid(c);
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 10.0);
    CHECK(grid[2] == 5.0);

    const auto rows = cascade::verification_rows(1001);
    CHECK(rows.size() == cascade::kVerifyPoints);
    CHECK(rows.front() == 0);
    CHECK(rows.back() == 1000);
    CHECK(cascade::verification_rows(2) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("canonical preset with two steps") {
    auto c = cascade::load_preset("canonical");
    c.tau_steps = 2;
    const auto result = cascade::run_scan(c);
    REQUIRE(result.samples.size() == 2);
    CHECK(result.samples[0].tau == 0.0);
    CHECK(result.samples[0].s_z == 0.0);
    CHECK(std::abs(*result.samples[0].mandel_q) < 1e-10);

    std::ostringstream out;
    cascade::write_csv(out, result);
    const auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "tau,mean_n,s_z,mandel_q,s1,s2,norm_residual");
    const auto row0 = split_fields(lines[1]);
    REQUIRE(row0.size() == 7);
    CHECK(row0[0] == "0");
    CHECK(row0[2] == "0");
}

TEST_CASE("undefined Q is an empty CSV field") {
    cascade::RunConfig c;
    c.field = {0.0, 0.0, NonlinearitySpec::unit()};
    c.coupling = {NonlinearitySpec::unit(), 0.3};
    c.tau_max = 1.0;
    c.tau_steps = 3;
    const auto result = cascade::run_scan(c);
    CHECK_FALSE(result.samples[0].mandel_q.has_value());
    std::ostringstream out;
    cascade::write_csv(out, result);
    const auto fields = split_fields(split_lines(out.str())[1]);
    REQUIRE(fields.size() == 7);
    CHECK(fields[3].empty());
}

TEST_CASE("gp preset verifies against the oracle") {
    auto c = cascade::load_preset("gp");
    c.tau_steps = 301;
    c.verify = true;
    const auto result = cascade::run_scan(c);
    CHECK(result.verified);
    CHECK(result.verification_passed());
    CHECK(result.max_deviation() < cascade::kVerifyTolerance);
    std::size_t checked = 0;
    for (const auto& d : result.deviations) checked += d.has_value();
    CHECK(checked == cascade::kVerifyPoints);

    std::ostringstream out;
    cascade::write_csv(out, result);
    const auto lines = split_lines(out.str());
    CHECK(split_fields(lines[0]).size() == 12);
    CHECK(split_fields(lines[1]).size() == 12);
    CHECK(split_fields(lines[2]).size() == 12);
}

TEST_CASE("gp preset inversion stays non-negative up to tau = 50") {
    auto c = cascade::load_preset("gp");
    c.tau_max = 50.0;
    c.tau_steps = 2001;
    for (const auto& s : cascade::run_scan(c).samples) {
        CHECK(s.s_z >= -1e-10);
    }
}

TEST_CASE("rerunning a config is bit-identical, independent of thread count") {
    auto c = cascade::load_preset("bg-1");
    c.tau_steps = 257;
    std::ostringstream serial;
    std::ostringstream parallel;
    std::ostringstream again;
    cascade::write_csv(serial, cascade::run_scan(c, 1));
    cascade::write_csv(parallel, cascade::run_scan(c, 4));
    cascade::write_csv(again, cascade::run_scan(c, 3));
    CHECK(serial.str() == parallel.str());
    CHECK(serial.str() == again.str());
}

TEST_CASE("phi differing from the state phase still verifies") {
    auto c = cascade::load_preset("bg-1");
    c.tau_steps = 61;
    c.phi = 0.8;
    c.verify = true;
    CHECK(cascade::run_scan(c).verification_passed());
}
