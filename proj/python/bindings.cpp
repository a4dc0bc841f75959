#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdspectra/cli.hpp"
#include "cdspectra/element.hpp"
#include "cdspectra/errors.hpp"
#include "cdspectra/operators.hpp"
#include "cdspectra/physics.hpp"
#include "cdspectra/properties.hpp"
#include "cdspectra/report.hpp"
#include "cdspectra/spectral.hpp"
#include "cdspectra/structure.hpp"

namespace py = pybind11;
using namespace cdspectra;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    namespace nl = nlohmann;
    switch (j.type()) {
        case nl::json::value_t::null: return py::none();
        case nl::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nl::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nl::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nl::json::value_t::number_float: return py::float_(j.get<double>());
        case nl::json::value_t::string: return py::str(j.get<std::string>());
        case nl::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nl::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

std::vector<std::pair<double, std::size_t>> clusters_of(const SpectrumMultiset& s) {
    std::vector<std::pair<double, std::size_t>> out;
    for (const auto& c : s.clusters) out.emplace_back(c.value, c.multiplicity);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cayley-Dickson algebras, shifted multiplication spectra and meson "
              "mass relations";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<CdElement>(m, "CdElement")
        .def(py::init([](int level, std::vector<double> coords) {
                 return make_element(level, std::move(coords));
             }),
             py::arg("level"), py::arg("coords"))
        .def_readonly("level", &CdElement::level)
        .def_readonly("coords", &CdElement::coords)
        .def("__len__", &CdElement::dim)
        .def("__repr__", [](const CdElement& x) {
            return "<CdElement level=" + std::to_string(x.level) + ">";
        });

    m.def("make_element", [](int level, std::vector<double> coords) {
        return make_element(level, std::move(coords));
    });
    m.def("zero_element", &zero_element);
    m.def("basis_element", &basis_element);
    m.def("random_element", &random_element);
    m.def("conjugate", &conjugate);
    m.def("multiply", &multiply);
    m.def("add", &add);
    m.def("subtract", &subtract);
    m.def("scale", &scale);
    m.def("norm_sq", &norm_sq);
    m.def("inner", &inner);
    m.def("imaginary_part", &imaginary_part);
    m.def("commutator", &commutator);
    m.def("associator", &associator);
    m.def("is_alternative", &is_alternative, py::arg("a"), py::arg("tol") = 1e-10);

    m.def("left_mult_matrix", [](const CdElement& x) {
        return left_mult_matrix(x).entries;
    });
    m.def("right_mult_matrix", [](const CdElement& x) {
        return right_mult_matrix(x).entries;
    });
    m.def("n_operator_matrix", [](const CdElement& x) {
        return n_operator_matrix(x).mat.entries;
    });

    m.def(
        "shifted_spectrum",
        [](const CdElement& x, double cluster_tol) {
            return clusters_of(shifted_spectrum(x, cluster_tol));
        },
        py::arg("x"), py::arg("cluster_tol") = kDefaultClusterTol,
        "clustered shifted eigenvalues as (value, multiplicity) pairs");

    m.def("delta", &delta);
    m.def("make_alternative_entry_element", &make_alternative_entry_element,
          py::arg("level"), py::arg("seed"), py::arg("predicate_tol") = 1e-10);
    m.def(
        "degeneracy_profile",
        [](const CdElement& x, double cluster_tol) {
            const auto p = degeneracy_profile(x, cluster_tol);
            py::dict out;
            out["level"] = p.level;
            out["is_even_spectrum"] = p.is_even_spectrum;
            out["quadruple_count"] = p.quadruple_count;
            out["distinct_nonneg"] = p.distinct_nonneg;
            out["max_pairing_residual"] = p.max_pairing_residual;
            return out;
        },
        py::arg("x"), py::arg("cluster_tol") = kDefaultClusterTol);

    m.def(
        "property_report",
        [](int level, int trials, std::uint64_t seed) {
            return json_to_py(to_json(property_report(level, trials, seed)));
        },
        py::arg("level"), py::arg("trials"), py::arg("seed"));

    m.def("eta_doublet", &eta_doublet);
    m.def("propagate_ratio_uncertainty", [](double a, double sa, double b, double sb) {
        const auto r = propagate_ratio_uncertainty(a, sa, b, sb);
        return py::make_tuple(r.ratio, r.sigma);
    });
    m.def(
        "mass_formula_16",
        [](const std::string& data_path, double z) {
            return json_to_py(to_json(mass_formula_16(load_meson_data(data_path), z)));
        },
        py::arg("data_path"), py::arg("z") = kDefaultZ);

    m.def(
        "run_command",
        [](const std::string& name, const py::kwargs& kw) {
            auto geti = [&](const char* key, int dflt) {
                return kw.contains(key) ? kw[key].cast<int>() : dflt;
            };
            auto getu = [&](const char* key) {
                return kw.contains(key) ? kw[key].cast<std::uint64_t>() : 0ULL;
            };
            auto gets = [&](const char* key, const char* dflt) {
                return kw.contains(key) ? kw[key].cast<std::string>() : std::string(dflt);
            };
            const EntryMode mode = gets("mode", "generic") == "alternative"
                                       ? EntryMode::Alternative
                                       : EntryMode::Generic;
            CommandResult r;
            if (name == "table") r = cmd_table(geti("level", 2));
            else if (name == "props")
                r = cmd_props(geti("level", 3), geti("trials", 100), getu("seed"));
            else if (name == "spectrum")
                r = cmd_spectrum(geti("level", 4), getu("seed"), mode);
            else if (name == "inclusion")
                r = cmd_inclusion(geti("level", 5), mode, geti("trials", 10), getu("seed"));
            else if (name == "dimension")
                r = cmd_dimension(geti("plet", 16), geti("level", 7));
            else if (name == "mass")
                r = cmd_mass(gets("data", "data/mesons.csv"), gets("which", "all"),
                             kw.contains("z") ? kw["z"].cast<double>() : kDefaultZ);
            else
                throw InputError("run_command: unknown command '" + name + "'");
            py::dict out;
            out["report"] = json_to_py(r.report);
            out["exit_code"] = r.exit_code;
            out["summary"] = r.summary;
            return out;
        },
        py::arg("name"),
        "run a CLI command in-process; returns {report, exit_code, summary}");

    m.attr("__version__") = kToolVersion;
    m.attr("MAX_LEVEL") = kMaxLevel;
    m.attr("DOUBLET_COEFFICIENT") = kDoubletCoefficient;
}
