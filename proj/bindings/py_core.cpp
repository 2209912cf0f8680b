#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "json.hpp"

#include "condinf/conditional.hpp"
#include "condinf/generators.hpp"
#include "condinf/martingale.hpp"
#include "condinf/recovery.hpp"
#include "condinf/scenario.hpp"
#include "condinf/simulate.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace condinf;

namespace {

// The python surface mirrors the CLI: JSON strings in, JSON strings out.
// The package wrapper turns these into dict-level helpers.

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw py::value_error(std::string(what) + ": " + e.what());
    }
}

FiniteFilteredSpace space_from_json(const json& spec) {
    json scenario{{"lattice", {{"lattice", "extended_real"}}}, {"space", spec}};
    // reuse the scenario parser for one consistent schema
    RunResult probe = run_verify(scenario, {"validate"});
    if (probe.exit_code == 2)
        throw py::value_error(probe.report.value("error", "bad space spec"));
    FiniteFilteredSpace space;
    if (spec.contains("generator")) {
        const json& gen = spec["generator"];
        const std::string kind = gen.at("kind").get<std::string>();
        if (kind == "random") {
            return gen_space(gen.at("seed").get<std::uint64_t>(), gen.at("outcomes").get<int>(),
                             gen.at("horizon").get<int>());
        }
        if (kind == "tree") {
            return gen_tree_space(gen.at("seed").get<std::uint64_t>(), gen.at("depth").get<int>(),
                                  gen.value("branching", 2));
        }
        throw py::value_error("python space specs support generator kinds random/tree; "
                              "walks run through run_scenario");
    }
    for (const auto& p : spec.at("probs")) {
        auto r = Rational::parse(p.get<std::string>());
        if (!r) throw py::value_error("bad probability " + p.dump());
        space.probs.push_back(*r);
    }
    for (const auto& level : spec.at("partitions")) {
        Atoms atoms;
        for (const auto& atom : level) {
            atoms.emplace_back();
            for (const auto& w : atom) atoms.back().push_back(w.get<int>());
        }
        space.partitions.push_back(std::move(atoms));
    }
    space.finalize();
    return space;
}

RandomElement<Rational> reals_from_json(const json& arr) {
    RandomElement<Rational> out;
    for (const auto& item : arr) {
        auto r = Rational::parse(item.is_string() ? item.get<std::string>()
                                                  : item.dump());
        if (!r) throw py::value_error("bad rational " + item.dump());
        out.push_back(*r);
    }
    return out;
}

json reals_to_json(const RandomElement<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

Grid<Rational> real_grid_from_json(const json& rows) {
    Grid<Rational> grid;
    for (const auto& row : rows) grid.push_back(reals_from_json(row));
    return grid;
}

json real_grid_to_json(const Grid<Rational>& grid) {
    json rows = json::array();
    for (const auto& row : grid) rows.push_back(reals_to_json(row));
    return rows;
}

PolytopeLattice poly_lattice;

Polytope2 polytope_from_json(const std::string& text) {
    return value_from_json(poly_lattice, parse(text, "polytope"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "conditional infima on complete lattices, recovery checks, and the "
              "running-maximum Monte Carlo experiments";

    // scenario-level entry points (same schemas as the CLI)
    m.def(
        "run_scenario",
        [](const std::string& scenario, const std::vector<std::string>& checks) {
            RunResult result = run_verify(parse(scenario, "scenario"), checks);
            json out = result.report;
            out["exit_code"] = result.exit_code;
            return out.dump();
        },
        py::arg("scenario"), py::arg("checks") = std::vector<std::string>{});
    m.def(
        "run_fuzz",
        [](const std::string& suite, const std::string& lattice, std::uint64_t seed,
           long cases) {
            RunResult result = run_fuzz(suite, lattice, seed, cases);
            json out = result.report;
            out["exit_code"] = result.exit_code;
            return out.dump();
        },
        py::arg("suite"), py::arg("lattice") = "all", py::arg("seed") = 1,
        py::arg("cases") = 100);
    m.def(
        "run_simulate",
        [](std::int64_t paths, std::uint64_t seed, double step,
           const std::vector<double>& ely, const std::vector<std::string>& ny, bool jumpy) {
            SimulateOptions options;
            options.ensemble.paths = paths;
            options.ensemble.seed = seed;
            options.ensemble.step = step;
            options.ensemble.jumpy = jumpy;
            options.ely_thresholds = ely;
            options.ny_fspecs = ny;
            RunResult result = run_simulate(options);
            json out = result.report;
            out["exit_code"] = result.exit_code;
            return out.dump();
        },
        py::arg("paths") = 100000, py::arg("seed") = 42, py::arg("step") = 0.025,
        py::arg("ely") = std::vector<double>{2.0}, py::arg("ny") = std::vector<std::string>{},
        py::arg("jumpy") = false);

    // direct operations on real-valued random elements
    m.def("gen_space_json", [](std::uint64_t seed, int outcomes, int horizon) {
        FiniteFilteredSpace space = gen_space(seed, outcomes, horizon);
        json partitions = json::array();
        for (const auto& level : space.partitions) partitions.push_back(level);
        json probs = json::array();
        for (const auto& p : space.probs) probs.push_back(p.str());
        return json{{"probs", probs}, {"partitions", partitions}}.dump();
    });
    m.def("cond_inf_real", [](const std::string& space_spec, const std::string& values, int t) {
        FiniteFilteredSpace space = space_from_json(parse(space_spec, "space"));
        auto x = reals_from_json(parse(values, "values"));
        ExtendedRealLattice lat;
        RandomElement<ExtReal> wrapped;
        for (const auto& v : x) wrapped.push_back(ExtReal::of(v));
        auto ci = cond_inf(lat, wrapped, space.partitions.at(t));
        json out = json::array();
        for (const auto& v : ci) out.push_back(v.str());
        return out.dump();
    });
    m.def("cond_expectation_real",
          [](const std::string& space_spec, const std::string& values, int t) {
              FiniteFilteredSpace space = space_from_json(parse(space_spec, "space"));
              auto x = reals_from_json(parse(values, "values"));
              return reals_to_json(cond_expectation(x, space.partitions.at(t), space.probs))
                  .dump();
          });
    m.def("is_martingale", [](const std::string& space_spec, const std::string& grid) {
        FiniteFilteredSpace space = space_from_json(parse(space_spec, "space"));
        return is_martingale(space, real_grid_from_json(parse(grid, "grid")));
    });
    m.def("gen_martingale_json", [](std::uint64_t seed, int depth, int branching) {
        FiniteFilteredSpace space = gen_tree_space(seed, depth, branching);
        return real_grid_to_json(gen_martingale(seed, space)).dump();
    });

    // exact planar convex lattice
    m.def("hull", [](const std::string& points) {
        return value_to_json(poly_lattice, polytope_from_json(points)).dump();
    });
    m.def("poly_meet", [](const std::string& a, const std::string& b) {
        return value_to_json(poly_lattice,
                             condinf::poly_meet(polytope_from_json(a), polytope_from_json(b)))
            .dump();
    });
    m.def("poly_join", [](const std::string& a, const std::string& b) {
        return value_to_json(poly_lattice,
                             condinf::poly_join(polytope_from_json(a), polytope_from_json(b)))
            .dump();
    });
    m.def("poly_contains", [](const std::string& a, const std::string& b) {
        return condinf::poly_contains(polytope_from_json(a), polytope_from_json(b));
    });
    m.def("phi_convex",
          [](const std::string& a) { return condinf::phi_convex(polytope_from_json(a)); });

    // NY identity closed form
    m.def("ny_rhs", [](const std::string& fspec, double m_value, double mbar) {
        try {
            return condinf::ny_rhs(FSpec::parse(fspec), m_value, mbar);
        } catch (const std::invalid_argument& e) {
            throw py::value_error(e.what());
        }
    });

    m.attr("__version__") = "1.0.0";
}
