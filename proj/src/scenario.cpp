#include "condinf/scenario.hpp"

#include <chrono>
#include <optional>
#include <sstream>
#include <variant>

#include "condinf/conditional.hpp"
#include "condinf/generators.hpp"
#include "condinf/martingale.hpp"
#include "condinf/properties.hpp"
#include "condinf/recovery.hpp"

namespace condinf {

using nlohmann::json;

nlohmann::json value_to_json(const ExtendedRealLattice&, const ExtReal& v) { return v.str(); }

nlohmann::json value_to_json(const PowerSetLattice& lat, const SetValue& v) {
    return lat.names_of(v);
}

nlohmann::json value_to_json(const PolytopeLattice&, const Polytope2& v) {
    if (v.is_plane()) return "plane";
    json arr = json::array();
    for (const auto& p : v.vertices()) arr.push_back(json::array({p.x.str(), p.y.str()}));
    return arr;
}

namespace {

Rational parse_rational(const json& j, const char* what) {
    std::optional<Rational> r;
    if (j.is_string()) {
        r = Rational::parse(j.get<std::string>());
    } else if (j.is_number_integer()) {
        r = Rational(j.get<std::int64_t>());
    }
    if (!r) throw ScenarioError(std::string("expected rational for ") + what);
    return *r;
}

}  // namespace

ExtReal value_from_json(const ExtendedRealLattice&, const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "-inf") return ExtReal::ninf();
        if (s == "inf" || s == "+inf") return ExtReal::pinf();
    }
    return ExtReal::of(parse_rational(j, "extended_real value"));
}

SetValue value_from_json(const PowerSetLattice& lat, const json& j) {
    if (!j.is_array()) throw ScenarioError("power_set value must be an array of site names");
    std::vector<std::string> names;
    for (const auto& item : j) names.push_back(item.get<std::string>());
    return lat.from_names(names);
}

Polytope2 value_from_json(const PolytopeLattice&, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "plane") return Polytope2::plane();
        throw ScenarioError("polytope value must be \"plane\" or a vertex array");
    }
    if (!j.is_array()) throw ScenarioError("polytope value must be a vertex array");
    std::vector<Pt2> pts;
    for (const auto& vertex : j) {
        if (!vertex.is_array() || vertex.size() != 2)
            throw ScenarioError("polytope vertex must be [x, y]");
        pts.push_back({parse_rational(vertex[0], "vertex x"), parse_rational(vertex[1], "vertex y")});
    }
    return Polytope2::hull(pts);
}

namespace {

// ----------------------------------------------------------------- scenario

struct ParsedScenario {
    std::variant<ExtendedRealLattice, PowerSetLattice, PolytopeLattice> lattice;
    FiniteFilteredSpace space;
    // base processes provided by walk generators
    std::optional<Grid<Rational>> base_1d;
    std::optional<Grid<Pt2>> base_2d;
    std::string base_metric = "abs";
    // the scenario's process, in the declared lattice
    std::optional<Grid<ExtReal>> process_real;
    std::optional<Grid<SetValue>> process_set;
    std::optional<Grid<Polytope2>> process_poly;
    std::vector<std::string> checks;
    json witness;  // optional witness payload to re-validate
};

PiecewiseLinear parse_piecewise(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ScenarioError("f spec must have a kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "identity") return PiecewiseLinear::identity();
    if (kind == "abs") return PiecewiseLinear::absolute();
    if (kind == "square_capped") {
        // min(x^2, 1): exact piecewise-linear only at integer walk sites, so
        // build it as the exact map on a generous integer window
        PiecewiseLinear f;
        f.points.push_back({Rational(-1000), Rational(1)});
        f.points.push_back({Rational(-1), Rational(1)});
        f.points.push_back({Rational(0), Rational(0)});
        f.points.push_back({Rational(1), Rational(1)});
        f.points.push_back({Rational(1000), Rational(1)});
        return f;
    }
    if (kind == "piecewise") {
        PiecewiseLinear f;
        for (const auto& pt : j.at("points")) {
            if (!pt.is_array() || pt.size() != 2) throw ScenarioError("piecewise point [x,y]");
            f.points.push_back(
                {parse_rational(pt[0], "breakpoint x"), parse_rational(pt[1], "breakpoint y")});
        }
        if (f.points.empty()) throw ScenarioError("piecewise f needs points");
        for (std::size_t i = 1; i < f.points.size(); ++i) {
            if (!(f.points[i - 1].x < f.points[i].x))
                throw ScenarioError("piecewise breakpoints must increase");
        }
        return f;
    }
    throw ScenarioError("unknown f kind \"" + kind + "\"");
}

void parse_space(const json& spec, ParsedScenario& out) {
    if (!spec.is_object()) throw ScenarioError("space spec must be an object");
    if (spec.contains("generator")) {
        const json& gen = spec["generator"];
        const std::string kind = gen.at("kind").get<std::string>();
        if (kind == "random") {
            out.space = gen_space(gen.at("seed").get<std::uint64_t>(),
                                  gen.at("outcomes").get<int>(), gen.at("horizon").get<int>());
            return;
        }
        if (kind == "tree") {
            out.space = gen_tree_space(gen.at("seed").get<std::uint64_t>(),
                                       gen.at("depth").get<int>(),
                                       gen.value("branching", 2));
            return;
        }
        if (kind == "lazy_walk_1d" || kind == "forced_walk_1d") {
            const int depth = gen.at("depth").get<int>();
            const Rational start =
                gen.contains("start") ? parse_rational(gen["start"], "start") : Rational(0);
            Walk1D walk;
            if (kind == "lazy_walk_1d") {
                std::optional<int> clamp;
                if (gen.contains("clamp")) clamp = gen["clamp"].get<int>();
                walk = lazy_tree_walk_1d(parse_rational(gen.at("p_stay"), "p_stay"), depth, start,
                                         clamp);
            } else {
                walk = forced_tree_walk_1d(depth, start);
            }
            out.space = std::move(walk.space);
            out.base_1d = std::move(walk.position);
            return;
        }
        if (kind == "lazy_walk_2d") {
            Pt2 start{Rational(0), Rational(0)};
            if (gen.contains("start")) {
                start = {parse_rational(gen["start"][0], "start x"),
                         parse_rational(gen["start"][1], "start y")};
            }
            Walk2D walk = lazy_tree_walk_2d(parse_rational(gen.at("p_stay"), "p_stay"),
                                            gen.at("depth").get<int>(), start);
            out.space = std::move(walk.space);
            out.base_2d = std::move(walk.position);
            out.base_metric = "euclid";
            return;
        }
        throw ScenarioError("unknown space generator \"" + kind + "\"");
    }
    if (!spec.contains("probs") || !spec.contains("partitions"))
        throw ScenarioError("explicit space needs probs and partitions");
    for (const auto& p : spec["probs"]) out.space.probs.push_back(parse_rational(p, "prob"));
    if (spec.contains("labels")) {
        for (const auto& l : spec["labels"]) out.space.labels.push_back(l.get<std::string>());
    }
    for (const auto& level : spec["partitions"]) {
        Atoms atoms;
        for (const auto& atom : level) {
            std::vector<int> ids;
            for (const auto& w : atom) ids.push_back(w.get<int>());
            atoms.push_back(std::move(ids));
        }
        out.space.partitions.push_back(std::move(atoms));
    }
    try {
        out.space.finalize();
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("space: ") + e.what());
    }
}

Grid<ExtReal> real_grid(const Grid<Rational>& g) {
    Grid<ExtReal> out(g.size());
    for (std::size_t t = 0; t < g.size(); ++t) {
        out[t].reserve(g[t].size());
        for (const auto& v : g[t]) out[t].push_back(ExtReal::of(v));
    }
    return out;
}

template <class L, class V>
Grid<V> parse_grid(const L& lat, const json& rows, const FiniteFilteredSpace& space) {
    Grid<V> grid;
    if (!rows.is_array()) throw ScenarioError("process grid must be an array of time rows");
    for (const auto& row : rows) {
        std::vector<V> values;
        for (const auto& item : row) values.push_back(value_from_json(lat, item));
        grid.push_back(std::move(values));
    }
    if (static_cast<int>(grid.size()) != space.horizon() + 1)
        throw ScenarioError("process grid must have horizon+1 rows");
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != space.outcomes())
            throw ScenarioError("process grid row width must equal the outcome count");
    }
    return grid;
}

void parse_process(const json& spec, ParsedScenario& out) {
    if (!spec.is_object()) throw ScenarioError("process spec must be an object");
    if (spec.contains("grid")) {
        std::visit(
            [&](const auto& lat) {
                using L = std::decay_t<decltype(lat)>;
                auto grid = parse_grid<L, typename L::Value>(lat, spec["grid"], out.space);
                if constexpr (std::is_same_v<L, ExtendedRealLattice>) {
                    out.process_real = std::move(grid);
                } else if constexpr (std::is_same_v<L, PowerSetLattice>) {
                    out.process_set = std::move(grid);
                } else {
                    out.process_poly = std::move(grid);
                }
            },
            out.lattice);
        return;
    }
    if (!spec.contains("builder")) throw ScenarioError("process needs a grid or a builder");
    const std::string builder = spec["builder"].get<std::string>();

    auto need_1d = [&]() -> const Grid<Rational>& {
        if (!out.base_1d) throw ScenarioError(builder + " needs a 1-d walk space generator");
        return *out.base_1d;
    };

    if (builder == "walk") {
        out.process_real = real_grid(need_1d());
        return;
    }
    if (builder == "running_max") {
        PiecewiseLinear f = spec.contains("f") ? parse_piecewise(spec["f"])
                                               : PiecewiseLinear::identity();
        // the base is the walk by default; "of" chains a generated
        // (super)martingale instead
        const Grid<Rational>* base = nullptr;
        Grid<Rational> generated;
        if (spec.contains("of")) {
            const json& of = spec["of"];
            const std::string inner = of.at("builder").get<std::string>();
            if (inner != "gen_martingale" && inner != "gen_supermartingale")
                throw ScenarioError("running_max.of supports gen_martingale or "
                                    "gen_supermartingale");
            const std::uint64_t seed = of.at("seed").get<std::uint64_t>();
            generated = inner == "gen_martingale" ? gen_martingale(seed, out.space)
                                                  : gen_supermartingale(seed, out.space);
            base = &generated;
        } else {
            base = &need_1d();
        }
        out.process_real =
            real_grid(running_max(*base, [&](const Rational& v) { return f(v); }));
        return;
    }
    if (builder == "visit_functional") {
        std::vector<Rational> sites;
        for (const auto& s : spec.at("sites")) sites.push_back(parse_rational(s, "site"));
        const auto& base = need_1d();
        std::vector<Rational> increments(base.size(), Rational(1));
        if (spec.contains("increments") && spec["increments"].is_array()) {
            increments.clear();
            for (const auto& i : spec["increments"])
                increments.push_back(parse_rational(i, "increment"));
        }
        out.process_real = real_grid(visit_functional(base, sites, increments));
        return;
    }
    if (builder == "integral_functional") {
        PiecewiseLinear f = parse_piecewise(spec.at("f"));
        Rational dt = spec.contains("dt") ? parse_rational(spec["dt"], "dt") : Rational(1);
        out.process_real = real_grid(
            integral_functional(need_1d(), [&](const Rational& v) { return f(v); }, dt));
        return;
    }
    if (builder == "convex_hull") {
        if (!out.base_2d) throw ScenarioError("convex_hull needs a 2-d walk space generator");
        if (!std::holds_alternative<PolytopeLattice>(out.lattice))
            throw ScenarioError("convex_hull builder requires the polytope2 lattice");
        out.process_poly = convex_hull_process(*out.base_2d);
        return;
    }
    if (builder == "visited_sites") {
        if (!std::holds_alternative<PowerSetLattice>(out.lattice))
            throw ScenarioError("visited_sites builder requires the power_set lattice");
        const auto& lat = std::get<PowerSetLattice>(out.lattice);
        const auto& base = need_1d();
        Grid<int> site_index(base.size(), std::vector<int>(base[0].size(), -1));
        for (std::size_t t = 0; t < base.size(); ++t) {
            for (std::size_t w = 0; w < base[t].size(); ++w) {
                const std::string name = base[t][w].str();
                const auto& ground = lat.ground();
                auto it = std::find(ground.begin(), ground.end(), name);
                if (it == ground.end())
                    throw ScenarioError("walk visits site " + name + " outside the ground set");
                site_index[t][w] = static_cast<int>(it - ground.begin());
            }
        }
        out.process_set = visited_sites_process(lat, site_index);
        out.base_metric = "discrete";
        return;
    }
    if (builder == "inf_process") {
        std::visit(
            [&](const auto& lat) {
                using L = std::decay_t<decltype(lat)>;
                RandomElement<typename L::Value> terminal;
                for (const auto& item : spec.at("terminal"))
                    terminal.push_back(value_from_json(lat, item));
                if (static_cast<int>(terminal.size()) != out.space.outcomes())
                    throw ScenarioError("terminal element must cover all outcomes");
                auto grid = inf_process(lat, out.space, terminal);
                if constexpr (std::is_same_v<L, ExtendedRealLattice>) {
                    out.process_real = std::move(grid);
                } else if constexpr (std::is_same_v<L, PowerSetLattice>) {
                    out.process_set = std::move(grid);
                } else {
                    out.process_poly = std::move(grid);
                }
            },
            out.lattice);
        return;
    }
    if (builder == "gen_martingale" || builder == "gen_supermartingale") {
        const std::uint64_t seed = spec.at("seed").get<std::uint64_t>();
        out.process_real = real_grid(builder == "gen_martingale"
                                         ? gen_martingale(seed, out.space)
                                         : gen_supermartingale(seed, out.space));
        return;
    }
    throw ScenarioError("unknown builder \"" + builder + "\"");
}

ParsedScenario parse_scenario(const json& scenario) {
    if (!scenario.is_object()) throw ScenarioError("scenario must be a JSON object");
    ParsedScenario out;

    const json& lat_spec = scenario.contains("lattice") ? scenario["lattice"] : json::object();
    const std::string lattice_name =
        lat_spec.is_object() ? lat_spec.value("lattice", "extended_real") : "extended_real";
    if (lattice_name == "extended_real") {
        out.lattice = ExtendedRealLattice{};
    } else if (lattice_name == "power_set") {
        std::vector<std::string> ground;
        for (const auto& g : lat_spec.at("ground")) ground.push_back(g.get<std::string>());
        if (lat_spec.contains("weights")) {
            std::vector<Rational> weights;
            for (const auto& w : lat_spec["weights"])
                weights.push_back(parse_rational(w, "weight"));
            try {
                out.lattice = PowerSetLattice(std::move(ground), std::move(weights));
            } catch (const std::invalid_argument& e) {
                throw ScenarioError(std::string("lattice: ") + e.what());
            }
        } else {
            out.lattice = PowerSetLattice::dyadic(std::move(ground));
        }
    } else if (lattice_name == "polytope2") {
        out.lattice = PolytopeLattice{};
    } else {
        throw ScenarioError("unknown lattice \"" + lattice_name + "\"");
    }

    if (!scenario.contains("space")) throw ScenarioError("scenario needs a space");
    parse_space(scenario["space"], out);

    if (scenario.contains("process")) parse_process(scenario["process"], out);

    if (scenario.contains("checks")) {
        for (const auto& c : scenario["checks"]) out.checks.push_back(c.get<std::string>());
    }
    if (scenario.contains("witness")) out.witness = scenario["witness"];
    return out;
}

// ------------------------------------------------------------------- checks

class Stopwatch {
public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

template <class L>
json witness_json(const L& lat, const FiniteFilteredSpace& space,
                  const ConditionWitness<L>& wit) {
    json j{{"t", wit.t},
           {"atom", wit.atom},
           {"atom_outcomes", space.partitions[wit.t][wit.atom]},
           {"process_value", value_to_json(lat, wit.process_value)},
           {"conditional_inf", value_to_json(lat, wit.bound_value)}};
    if (!wit.tau.tau.empty()) {
        json tau = json::array();
        for (int v : wit.tau.tau) tau.push_back(v == StoppingTime::never ? -1 : v);
        j["tau"] = tau;
        json y = json::array();
        for (const auto& v : wit.y) y.push_back(value_to_json(lat, v));
        j["y"] = y;
    }
    return j;
}

template <class L>
void run_ncr_checks(const L& lat, const FiniteFilteredSpace& space,
                    const Grid<typename L::Value>& u, VerificationReport& report) {
    Stopwatch watch;
    auto verdict = check_recovery(lat, space, u);
    report.add("ncr.condition_i", verdict.cond_i.pass,
               verdict.cond_i.pass ? json::object()
                                   : witness_json(lat, space, *verdict.cond_i.witness));
    report.checks.back().ms = watch.lap();
    report.add("ncr.condition_ii", verdict.cond_ii.pass,
               verdict.cond_ii.pass ? json::object()
                                    : witness_json(lat, space, *verdict.cond_ii.witness));
    report.checks.back().ms = watch.lap();
    report.add("ncr.condition_iii", verdict.cond_iii.pass,
               verdict.cond_iii.pass ? json::object()
                                     : witness_json(lat, space, *verdict.cond_iii.witness));
    report.checks.back().ms = watch.lap();
    report.add("ncr.equivalence", verdict.agree());
    if (!verdict.cond_ii.pass) {
        report.add("ncr.witness_ii_revalidates",
                   revalidate_witness_ii(lat, space, u, *verdict.cond_ii.witness));
    }
    if (!verdict.cond_iii.pass) {
        report.add("ncr.witness_iii_revalidates",
                   revalidate_witness_iii(lat, space, u, *verdict.cond_iii.witness));
    }
}

template <class L>
void run_witness_check(const L& lat, const FiniteFilteredSpace& space,
                       const Grid<typename L::Value>& u, const json& witness,
                       VerificationReport& report) {
    if (!witness.is_object() || !witness.contains("condition") || !witness.contains("tau") ||
        !witness.contains("y"))
        throw ScenarioError("witness payload needs condition, tau and y");
    ConditionWitness<L> wit;
    for (const auto& t : witness["tau"]) {
        const int v = t.get<int>();
        wit.tau.tau.push_back(v < 0 ? StoppingTime::never : v);
    }
    for (const auto& y : witness["y"]) wit.y.push_back(value_from_json(lat, y));
    if (static_cast<int>(wit.tau.tau.size()) != space.outcomes() ||
        static_cast<int>(wit.y.size()) != space.outcomes())
        throw ScenarioError("witness tau and y must cover all outcomes");
    const std::string condition = witness["condition"].get<std::string>();
    if (condition == "ii") {
        report.add("witness.revalidates_ii", revalidate_witness_ii(lat, space, u, wit));
    } else if (condition == "iii") {
        report.add("witness.revalidates_iii", revalidate_witness_iii(lat, space, u, wit));
    } else {
        throw ScenarioError("witness condition must be \"ii\" or \"iii\"");
    }
}

Grid<Rational> rational_grid(const Grid<ExtReal>& grid) {
    Grid<Rational> out(grid.size());
    for (std::size_t t = 0; t < grid.size(); ++t) {
        out[t].reserve(grid[t].size());
        for (const auto& v : grid[t]) {
            if (!v.is_finite())
                throw ScenarioError("this check needs a finite real-valued process");
            out[t].push_back(v.finite_value());
        }
    }
    return out;
}

void run_checks(ParsedScenario& sc, VerificationReport& report) {
    for (const std::string& check : sc.checks) {
        Stopwatch watch;
        if (check == "validate") {
            auto space_report = validate_space(sc.space);
            report.merge(space_report);
            std::visit(
                [&](const auto& lat) {
                    using L = std::decay_t<decltype(lat)>;
                    if constexpr (std::is_same_v<L, ExtendedRealLattice>) {
                        if (sc.process_real)
                            report.merge(validate_adapted(lat, sc.space, *sc.process_real));
                    } else if constexpr (std::is_same_v<L, PowerSetLattice>) {
                        if (sc.process_set)
                            report.merge(validate_adapted(lat, sc.space, *sc.process_set));
                    } else {
                        if (sc.process_poly)
                            report.merge(validate_adapted(lat, sc.space, *sc.process_poly));
                    }
                },
                sc.lattice);
            continue;
        }
        if (check == "ncr" || check == "witness") {
            std::visit(
                [&](const auto& lat) {
                    using L = std::decay_t<decltype(lat)>;
                    const auto* grid = [&]() -> const Grid<typename L::Value>* {
                        if constexpr (std::is_same_v<L, ExtendedRealLattice>) {
                            return sc.process_real ? &*sc.process_real : nullptr;
                        } else if constexpr (std::is_same_v<L, PowerSetLattice>) {
                            return sc.process_set ? &*sc.process_set : nullptr;
                        } else {
                            return sc.process_poly ? &*sc.process_poly : nullptr;
                        }
                    }();
                    if (grid == nullptr)
                        throw ScenarioError(check + " needs a process in the declared lattice");
                    try {
                        if (check == "ncr") {
                            run_ncr_checks(lat, sc.space, *grid, report);
                        } else {
                            run_witness_check(lat, sc.space, *grid, sc.witness, report);
                        }
                    } catch (const std::invalid_argument& e) {
                        throw ScenarioError(e.what());
                    }
                },
                sc.lattice);
            continue;
        }
        if (check == "sticky") {
            StickyResult result;
            if (sc.base_2d) {
                result = check_sticky(sc.space, *sc.base_2d, metric_euclid_sq);
            } else if (sc.base_1d && sc.base_metric == "discrete") {
                result = check_sticky(sc.space, *sc.base_1d, metric_discrete);
            } else if (sc.base_1d) {
                result = check_sticky(sc.space, *sc.base_1d, metric_abs);
            } else if (sc.process_real) {
                result = check_sticky(sc.space, rational_grid(*sc.process_real), metric_abs);
            } else {
                throw ScenarioError("sticky needs a walk generator or a real-valued process");
            }
            json witness = json::object();
            if (!result.sticky) {
                witness = {{"t", result.witness->t},
                           {"atom", result.witness->atom},
                           {"epsilon", result.witness->epsilon.str()},
                           {"metric", sc.base_2d ? "euclid_sq" : sc.base_metric}};
            }
            report.add("sticky", result.sticky, witness);
            report.checks.back().ms = watch.lap();
            continue;
        }
        if (check == "sticky_monotone") {
            if (!sc.process_real) throw ScenarioError("sticky_monotone needs a real process");
            auto result = check_sticky_monotone(sc.space, rational_grid(*sc.process_real));
            json witness = json::object();
            if (!result.sticky) {
                witness = {{"t", result.witness->t},
                           {"atom", result.witness->atom},
                           {"epsilon", result.witness->epsilon.str()}};
            }
            report.add("sticky_monotone", result.sticky, witness);
            report.checks.back().ms = watch.lap();
            continue;
        }
        if (check == "martingale" || check == "supermartingale") {
            if (!sc.process_real) throw ScenarioError(check + " needs a real process");
            auto grid = rational_grid(*sc.process_real);
            const bool ok = check == "martingale" ? is_martingale(sc.space, grid)
                                                  : is_supermartingale(sc.space, grid);
            report.add(check, ok);
            report.checks.back().ms = watch.lap();
            continue;
        }
        if (check == "running_max_recovery") {
            if (!sc.process_real)
                throw ScenarioError("running_max_recovery needs a real process");
            auto result = verify_running_max_recovery(sc.space, rational_grid(*sc.process_real));
            report.merge(result.report);
            continue;
        }
        throw ScenarioError("unknown check \"" + check + "\"");
    }
}

json make_report(const char* mode, const VerificationReport& report) {
    int failures = 0;
    for (const auto& c : report.checks) failures += c.pass ? 0 : 1;
    return json{{"schema", "condinf/report/v1"},
                {"mode", mode},
                {"checks", report.to_json()},
                {"summary",
                 {{"total", report.checks.size()}, {"failures", failures}}}};
}

}  // namespace

RunResult run_verify(const nlohmann::json& scenario,
                     const std::vector<std::string>& checks_override) {
    try {
        ParsedScenario sc = parse_scenario(scenario);
        if (!checks_override.empty()) sc.checks = checks_override;
        if (sc.checks.empty()) sc.checks = {"validate"};
        VerificationReport report;
        run_checks(sc, report);
        json out = make_report("verify", report);
        return {out, report.all_pass() ? 0 : 1};
    } catch (const ScenarioError& e) {
        return {json{{"schema", "condinf/report/v1"},
                     {"mode", "verify"},
                     {"error", e.what()}},
                2};
    }
}

RunResult run_fuzz(const std::string& suite, const std::string& lattice, std::uint64_t seed,
                   long cases) {
    const std::vector<std::string> all{"extended_real", "power_set", "polytope2"};
    std::vector<std::string> lattices;
    if (lattice == "all") {
        lattices = all;
    } else {
        lattices = {lattice};
    }
    try {
        json campaigns = json::array();
        bool clean = true;
        auto record = [&](const std::string& name, const std::string& lat,
                          const PropertyOutcome& outcome) {
            json j = outcome.to_json();
            j["suite"] = name;
            if (!lat.empty()) j["lattice"] = lat;
            campaigns.push_back(std::move(j));
            clean = clean && outcome.clean();
        };
        if (suite == "lattice_axioms") {
            for (const auto& lat : lattices)
                record(suite, lat, run_lattice_axioms(lat, seed, cases));
        } else if (suite == "pci") {
            for (const auto& lat : lattices) record(suite, lat, run_pci(lat, seed, cases));
        } else if (suite == "ncr_equiv") {
            for (const auto& lat : lattices)
                record(suite, lat, run_ncr_equivalence(lat, seed, cases));
        } else if (suite == "sticky_implications") {
            record(suite, "", run_sticky_implications(seed, cases));
        } else if (suite == "reconstruction") {
            record(suite, "", run_reconstruction(seed, cases));
        } else {
            throw ScenarioError("unknown suite \"" + suite + "\"");
        }
        json report{{"schema", "condinf/report/v1"},
                    {"mode", "fuzz"},
                    {"seed", seed},
                    {"cases", cases},
                    {"campaigns", campaigns}};
        return {report, clean ? 0 : 1};
    } catch (const ScenarioError& e) {
        return {json{{"schema", "condinf/report/v1"}, {"mode", "fuzz"}, {"error", e.what()}}, 2};
    } catch (const std::invalid_argument& e) {
        return {json{{"schema", "condinf/report/v1"}, {"mode", "fuzz"}, {"error", e.what()}}, 2};
    }
}

RunResult run_simulate(const SimulateOptions& options) {
    try {
        if (options.model != "exp_martingale")
            throw ScenarioError("unknown model \"" + options.model + "\"");
        EnsembleSpec spec = options.ensemble;
        // ny checks bin on checkpoint states; always include t = 0
        if (!options.ny_fspecs.empty() &&
            std::find(spec.checkpoints.begin(), spec.checkpoints.end(), 0) ==
                spec.checkpoints.end()) {
            spec.checkpoints.insert(spec.checkpoints.begin(), 0);
        }
        std::vector<FSpec> fspecs;
        for (const auto& text : options.ny_fspecs) {
            try {
                fspecs.push_back(FSpec::parse(text));
            } catch (const std::invalid_argument& e) {
                throw ScenarioError(e.what());
            }
        }

        PathStats stats = simulate_exp_martingale(spec);

        bool all_pass = true;
        json ely = json::array();
        for (double n : options.ely_thresholds) {
            ElyEstimate est = ely_estimate(stats, n);
            const double tol = n <= 4.0 ? options.ely_tol_small : options.ely_tol_large;
            // the oracle comes from the NY identity at time zero with the
            // indicator of [n, inf): n * (1/n) = 1
            const double oracle = n * ny_rhs(FSpec::parse("indicator:" + std::to_string(n)),
                                             1.0, 1.0);
            const bool pass = std::abs(est.estimate - oracle) <= tol;
            all_pass = all_pass && pass && !est.cap_warning;
            ely.push_back(json{{"n", n},
                               {"estimate", est.estimate},
                               {"std_error", est.std_error},
                               {"oracle", oracle},
                               {"tolerance", tol},
                               {"overshoot_factor", est.overshoot_factor},
                               {"corrected", est.corrected},
                               {"cap_warning", est.cap_warning},
                               {"verdict", pass ? "pass" : "fail"}});
        }

        json ny = json::array();
        for (std::size_t i = 0; i < fspecs.size(); ++i) {
            NyReport rep = ny_check(stats, fspecs[i]);
            json checkpoints = json::array();
            bool pass = true;
            for (const auto& cp : rep.checkpoints) {
                json bins = json::array();
                for (const auto& bin : cp.bins) {
                    bins.push_back(json{{"s", bin.s},
                                        {"max", bin.max},
                                        {"paths", bin.paths},
                                        {"estimate", bin.estimate},
                                        {"rhs", bin.rhs},
                                        {"std_error", bin.std_error}});
                }
                checkpoints.push_back(json{{"step", cp.step},
                                           {"max_abs_deviation", cp.max_abs_deviation},
                                           {"skipped_bins", cp.skipped_bins},
                                           {"skipped_paths", cp.skipped_paths},
                                           {"bins", bins}});
                pass = pass && cp.max_abs_deviation <= options.ny_tol;
            }
            all_pass = all_pass && pass;
            ny.push_back(json{{"f", options.ny_fspecs[i]},
                              {"tolerance", options.ny_tol},
                              {"max_abs_deviation", rep.max_abs_deviation},
                              {"checkpoints", checkpoints},
                              {"verdict", pass ? "pass" : "fail"}});
        }

        json report{{"schema", "condinf/report/v1"},
                    {"mode", "simulate"},
                    {"model", options.model},
                    {"paths", spec.paths},
                    {"seed", spec.seed},
                    {"step", spec.step},
                    {"ruin", spec.ruin},
                    {"step_cap", spec.step_cap},
                    {"jumpy", spec.jumpy},
                    {"capped_paths", stats.capped_paths}};
        if (!ely.empty()) report["ely"] = ely;
        if (!ny.empty()) report["ny"] = ny;
        return {report, all_pass ? 0 : 1};
    } catch (const ScenarioError& e) {
        return {json{{"schema", "condinf/report/v1"}, {"mode", "simulate"}, {"error", e.what()}},
                2};
    } catch (const std::invalid_argument& e) {
        return {json{{"schema", "condinf/report/v1"}, {"mode", "simulate"}, {"error", e.what()}},
                2};
    }
}

std::string simulate_report_csv(const nlohmann::json& report) {
    std::ostringstream out;
    out << "check,param,estimate,std_error,oracle,verdict\n";
    if (report.contains("ely")) {
        for (const auto& row : report["ely"]) {
            out << "ely," << row["n"].get<double>() << ',' << row["estimate"].get<double>() << ','
                << row["std_error"].get<double>() << ',' << row["oracle"].get<double>() << ','
                << row["verdict"].get<std::string>() << '\n';
        }
    }
    if (report.contains("ny")) {
        for (const auto& block : report["ny"]) {
            for (const auto& cp : block["checkpoints"]) {
                for (const auto& bin : cp["bins"]) {
                    out << "ny," << block["f"].get<std::string>() << "@t"
                        << cp["step"].get<std::int64_t>() << ',' << bin["estimate"].get<double>()
                        << ',' << bin["std_error"].get<double>() << ','
                        << bin["rhs"].get<double>() << ',' << block["verdict"].get<std::string>()
                        << '\n';
                }
            }
        }
    }
    return out.str();
}

}  // namespace condinf
