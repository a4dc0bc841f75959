#include <doctest.h>

#include <string>

#include "cdspectra/cli.hpp"
#include "cdspectra/errors.hpp"
#include "cdspectra/report.hpp"

using namespace cdspectra;

TEST_CASE("table command emits the signed products") {
    const CommandResult level1 = cmd_table(1);
    CHECK(level1.exit_code == kExitOk);
    const auto& rows1 = level1.report["results"]["table"];
    CHECK(rows1[1][1] == "-e0");  // i^2 = -1

    const CommandResult level2 = cmd_table(2);
    const auto& rows2 = level2.report["results"]["table"];
    CHECK(rows2[1][2] == "e3");
    CHECK(rows2[2][1] == "-e3");

    const CommandResult level3 = cmd_table(3);
    for (const auto& check : level3.report["checks"]) CHECK(check["pass"] == true);

    CHECK_THROWS_AS(cmd_table(5), InputError);
}

TEST_CASE("report envelope carries the frozen fields") {
    const CommandResult r = cmd_dimension(16, 7);
    CHECK(r.report.contains("command"));
    CHECK(r.report.contains("tool_version"));
    CHECK(r.report.contains("parameters"));
    CHECK(r.report.contains("results"));
    CHECK(r.report.contains("checks"));
    CHECK(r.report["command"] == "dimension");
    CHECK(r.report["tool_version"] == std::string(kToolVersion));
    CHECK(r.report["results"]["dimension"]["match"] == true);
}

TEST_CASE("props command applies the ladder expectations") {
    CHECK(cmd_props(2, 50, 11).exit_code == kExitOk);
    CHECK(cmd_props(4, 50, 11).exit_code == kExitOk);
}

TEST_CASE("spectrum command: generic and alternative modes") {
    const CommandResult gen = cmd_spectrum(3, 5, EntryMode::Generic);
    CHECK(gen.exit_code == kExitOk);
    CHECK(gen.report["results"]["spectrum"]["clusters"].size() == 1);

    const CommandResult alt = cmd_spectrum(5, 5, EntryMode::Alternative);
    CHECK(alt.exit_code == kExitOk);
    CHECK(alt.report["results"]["profile"]["distinct_nonneg"] == 4);
    CHECK(alt.report["results"].contains("theta_fit"));

    CHECK_THROWS_AS(cmd_spectrum(2, 5, EntryMode::Alternative), InputError);
}

TEST_CASE("inclusion command exit semantics") {
    CHECK(cmd_inclusion(4, EntryMode::Generic, 5, 21).exit_code == kExitOk);
    CHECK(cmd_inclusion(5, EntryMode::Alternative, 5, 21).exit_code == kExitOk);
}

TEST_CASE("mass command verdict expectations and errors") {
    const CommandResult all = cmd_mass(CDSPECTRA_DATA_FILE, "all");
    CHECK(all.exit_code == kExitOk);
    CHECK(all.report["results"].contains("formula16"));
    CHECK(all.report["results"].contains("gmo"));
    CHECK(all.report["results"].contains("burakovsky"));
    CHECK(all.report["results"].contains("vector"));
    CHECK(all.report["results"].contains("delta_m_rho_note"));

    const CommandResult one = cmd_mass(CDSPECTRA_DATA_FILE, "formula16");
    CHECK(one.exit_code == kExitOk);
    CHECK(one.report["results"]["formula16"]["verdict"] == "consistent");

    CHECK_THROWS_AS(cmd_mass(CDSPECTRA_DATA_FILE, "nonsense"), InputError);
    CHECK_THROWS_AS(cmd_mass("/no/such/file.csv", "all"), InputError);
}

TEST_CASE("identical invocations render byte-identical reports") {
    const std::string a = render_report(cmd_spectrum(5, 99, EntryMode::Alternative).report);
    const std::string b = render_report(cmd_spectrum(5, 99, EntryMode::Alternative).report);
    CHECK(a == b);

    const std::string c = render_report(cmd_props(3, 40, 1234).report);
    const std::string d = render_report(cmd_props(3, 40, 1234).report);
    CHECK(c == d);

    const std::string e = render_report(cmd_mass(CDSPECTRA_DATA_FILE, "all").report);
    const std::string f = render_report(cmd_mass(CDSPECTRA_DATA_FILE, "all").report);
    CHECK(e == f);
}
