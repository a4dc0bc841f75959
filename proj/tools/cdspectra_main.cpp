#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cdspectra/cli.hpp"
#include "cdspectra/errors.hpp"
#include "cdspectra/report.hpp"
#include "cdspectra/spectral.hpp"

namespace {

int emit(const cdspectra::CommandResult& result, const std::string& json_out) {
    const std::string rendered = cdspectra::render_report(result.report);
    std::cout << rendered;
    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw cdspectra::InputError("cannot write JSON report to '" + json_out + "'");
        out << rendered;
    }
    std::cerr << result.summary << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley-Dickson spectra and meson mass relations"};
    app.require_subcommand(1);
    // common flags live on the parent; let them appear after the subcommand too
    app.fallthrough();

    std::string json_out;
    app.add_option("--json-out", json_out, "also write the JSON report to this path");

    int level = 0;
    int trials = 100;
    int plet_size = 16;
    std::uint64_t seed = 0;
    double tol = cdspectra::kDefaultClusterTol;
    double z = 2.0;
    std::string mode = "generic";
    std::string which = "all";
    std::string data_path = "data/mesons.csv";

    auto* table_cmd = app.add_subcommand("table", "signed basis multiplication table");
    table_cmd->add_option("--level", level, "algebra level (0..4)")->required();

    auto* props_cmd = app.add_subcommand("props", "identity ladder on random samples");
    props_cmd->add_option("--level", level, "algebra level (0..8)")->required();
    props_cmd->add_option("--trials", trials, "random samples");
    props_cmd->add_option("--seed", seed, "random seed")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "shifted spectrum of one element");
    spectrum_cmd->add_option("--level", level, "algebra level (0..8)")->required();
    spectrum_cmd->add_option("--seed", seed, "random seed")->required();
    spectrum_cmd->add_option("--mode", mode, "generic | alternative")
        ->check(CLI::IsMember({"generic", "alternative"}));
    spectrum_cmd->add_option("--tol", tol, "relative clustering tolerance");

    auto* inclusion_cmd = app.add_subcommand("inclusion", "entry-spectrum inclusion trials");
    inclusion_cmd->add_option("--level", level, "algebra level")->required();
    inclusion_cmd->add_option("--mode", mode, "generic | alternative")
        ->check(CLI::IsMember({"generic", "alternative"}));
    inclusion_cmd->add_option("--trials", trials, "trial count");
    inclusion_cmd->add_option("--seed", seed, "random seed")->required();
    inclusion_cmd->add_option("--tol", tol, "relative value-match tolerance");

    auto* dimension_cmd = app.add_subcommand("dimension", "multiplet size vs value classes");
    dimension_cmd->add_option("--plet", plet_size, "multiplet size")->required();
    dimension_cmd->add_option("--level", level, "algebra level")->required();

    auto* mass_cmd = app.add_subcommand("mass", "meson mass relations");
    mass_cmd->add_option("--data", data_path, "meson data file (name,mass,sigma,source)");
    mass_cmd->add_option("--which", which, "formula16 | gmo | burakovsky | vector | all");
    mass_cmd->add_option("--z", z, "consistency threshold in propagated sigmas");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cdspectra::kExitInputError;
    }

    try {
        using namespace cdspectra;
        const EntryMode entry_mode =
            mode == "alternative" ? EntryMode::Alternative : EntryMode::Generic;
        if (table_cmd->parsed()) return emit(cmd_table(level), json_out);
        if (props_cmd->parsed()) return emit(cmd_props(level, trials, seed), json_out);
        if (spectrum_cmd->parsed())
            return emit(cmd_spectrum(level, seed, entry_mode, tol), json_out);
        if (inclusion_cmd->parsed())
            return emit(cmd_inclusion(level, entry_mode, trials, seed, tol), json_out);
        if (dimension_cmd->parsed()) return emit(cmd_dimension(plet_size, level), json_out);
        if (mass_cmd->parsed()) return emit(cmd_mass(data_path, which, z), json_out);
        std::cerr << "no subcommand\n";
        return cdspectra::kExitInputError;
    } catch (const cdspectra::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cdspectra::kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return cdspectra::kExitInternalError;
    }
}
