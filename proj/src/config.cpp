#include "blendsim/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "blendsim/presets.hpp"

namespace blendsim {

using nlohmann::json;

namespace {

/// Issue collector with dotted-path addressing. Readers report problems and
/// fall back to defaults so one pass surfaces every diagnostic.
struct Reader {
    std::vector<std::string>& issues;

    void issue(const std::string& path, const std::string& msg) {
        issues.push_back(path + ": " + msg);
    }

    bool require_object(const json& j, const std::string& path) {
        if (!j.is_object()) {
            issue(path, "must be an object");
            return false;
        }
        return true;
    }

    void check_keys(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
        if (!j.is_object()) return;
        for (const auto& [key, value] : j.items()) {
            bool known = false;
            for (const char* a : allowed) {
                if (key == a) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                issue(path.empty() ? key : path + "." + key, "unknown field");
            }
        }
    }

    double number(const json& j, const std::string& path, const char* key, double fallback) {
        if (!j.is_object() || !j.contains(key)) return fallback;
        const auto& v = j.at(key);
        if (!v.is_number()) {
            issue(path + "." + key, "must be a number");
            return fallback;
        }
        return v.get<double>();
    }

    double bounded(const json& j, const std::string& path, const char* key, double fallback,
                   double lo, double hi) {
        const double v = number(j, path, key, fallback);
        if (v < lo || v > hi) {
            std::ostringstream os;
            os << "value " << v << " outside [" << lo << ", " << hi << "]";
            issue(path + "." + key, os.str());
            return fallback;
        }
        return v;
    }

    int integer(const json& j, const std::string& path, const char* key, int fallback) {
        if (!j.is_object() || !j.contains(key)) return fallback;
        const auto& v = j.at(key);
        if (!v.is_number_integer()) {
            issue(path + "." + key, "must be an integer");
            return fallback;
        }
        return v.get<int>();
    }

    bool boolean(const json& j, const std::string& path, const char* key, bool fallback) {
        if (!j.is_object() || !j.contains(key)) return fallback;
        const auto& v = j.at(key);
        if (!v.is_boolean()) {
            issue(path + "." + key, "must be a boolean");
            return fallback;
        }
        return v.get<bool>();
    }

    std::string text(const json& j, const std::string& path, const char* key,
                     const std::string& fallback) {
        if (!j.is_object() || !j.contains(key)) return fallback;
        const auto& v = j.at(key);
        if (!v.is_string()) {
            issue(path + "." + key, "must be a string");
            return fallback;
        }
        return v.get<std::string>();
    }
};

void parse_horizon(Reader& r, const json& j, Scenario& s) {
    if (!j.contains("horizon")) return;
    const auto& h = j.at("horizon");
    if (!r.require_object(h, "horizon")) return;
    r.check_keys(h, "horizon", {"start_year", "end_year"});
    s.start_year = r.integer(h, "horizon", "start_year", s.start_year);
    s.end_year = r.integer(h, "horizon", "end_year", s.end_year);
}

void parse_demand(Reader& r, const json& j, Scenario& s,
                  const std::filesystem::path& base_dir) {
    if (!j.contains("demand")) return;
    const auto& d = j.at("demand");
    if (!r.require_object(d, "demand")) return;
    r.check_keys(d, "demand", {"kind", "constant_mgal", "forecast"});
    const auto kind = r.text(d, "demand", "kind", "constant");
    if (kind == "constant") {
        s.demand.kind = DemandSpec::Kind::constant;
    } else if (kind == "forecast") {
        s.demand.kind = DemandSpec::Kind::forecast;
    } else {
        r.issue("demand.kind", "must be 'constant' or 'forecast'");
    }
    s.demand.constant_mgal = r.number(d, "demand", "constant_mgal", s.demand.constant_mgal);
    if (d.contains("forecast")) {
        const auto& f = d.at("forecast");
        if (!r.require_object(f, "demand.forecast")) return;
        r.check_keys(f, "demand.forecast", {"csv", "unit", "order", "seasonal"});
        const auto csv = r.text(f, "demand.forecast", "csv", "");
        if (!csv.empty()) {
            std::filesystem::path p(csv);
            s.demand.csv_path = p.is_absolute() ? p.string() : (base_dir / p).string();
        }
        const auto unit = r.text(f, "demand.forecast", "unit", "billion_gallons");
        try {
            s.demand.csv_unit = parse_unit(unit);
        } catch (const Error& e) {
            r.issue("demand.forecast.unit", e.what());
        }
        if (f.contains("order")) {
            const auto& o = f.at("order");
            r.check_keys(o, "demand.forecast.order", {"p", "d", "q"});
            s.demand.order.p = r.integer(o, "demand.forecast.order", "p", s.demand.order.p);
            s.demand.order.d = r.integer(o, "demand.forecast.order", "d", s.demand.order.d);
            s.demand.order.q = r.integer(o, "demand.forecast.order", "q", s.demand.order.q);
        }
        if (f.contains("seasonal")) {
            const auto& o = f.at("seasonal");
            r.check_keys(o, "demand.forecast.seasonal", {"P", "D", "Q", "s"});
            s.demand.seasonal.P = r.integer(o, "demand.forecast.seasonal", "P", 0);
            s.demand.seasonal.D = r.integer(o, "demand.forecast.seasonal", "D", 0);
            s.demand.seasonal.Q = r.integer(o, "demand.forecast.seasonal", "Q", 0);
            s.demand.seasonal.s = r.integer(o, "demand.forecast.seasonal", "s", 1);
        }
    }
}

void parse_adoption(Reader& r, const json& j, Scenario& s) {
    if (!j.contains("adoption")) return;
    const auto& a = j.at("adoption");
    if (!r.require_object(a, "adoption")) return;
    r.check_keys(a, "adoption", {"mode", "remainder", "share_floor", "curves"});
    const auto mode = r.text(a, "adoption", "mode", "rescale");
    if (mode == "rescale") {
        s.adoption.mode = ShareMode::rescale;
    } else if (mode == "strict") {
        s.adoption.mode = ShareMode::strict;
    } else {
        r.issue("adoption.mode", "must be 'rescale' or 'strict'");
    }
    const auto remainder = r.text(a, "adoption", "remainder", "E10");
    try {
        s.adoption.remainder = parse_pathway(remainder);
    } catch (const Error& e) {
        r.issue("adoption.remainder", e.what());
    }
    s.adoption.share_floor = r.bounded(a, "adoption", "share_floor", s.adoption.share_floor,
                                       1e-9, 0.5);
    if (!a.contains("curves")) return;
    const auto& curves = a.at("curves");
    if (!r.require_object(curves, "adoption.curves")) return;
    for (const auto& [name, spec] : curves.items()) {
        const std::string path = "adoption.curves." + name;
        PathwayId id;
        try {
            id = parse_pathway(name);
        } catch (const Error& e) {
            r.issue(path, e.what());
            continue;
        }
        if (!r.require_object(spec, path)) continue;
        r.check_keys(spec, path, {"anchors", "ceiling", "params"});
        AdoptionCurveSpec curve;
        if (spec.contains("params")) {
            const auto& p = spec.at("params");
            r.check_keys(p, path + ".params", {"L", "k", "t0"});
            LogisticParams lp;
            lp.ceiling = r.bounded(p, path + ".params", "L", 0.5, 1e-12, 1.0);
            lp.rate = r.number(p, path + ".params", "k", 0.3);
            lp.midpoint_year = r.number(p, path + ".params", "t0", 2030.0);
            curve.params = lp;
        }
        if (spec.contains("anchors")) {
            const auto& anchors = spec.at("anchors");
            if (!anchors.is_array()) {
                r.issue(path + ".anchors", "must be an array of [year, share] pairs");
            } else {
                for (const auto& pair : anchors) {
                    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                        !pair[1].is_number()) {
                        r.issue(path + ".anchors", "each anchor must be [year, share]");
                        continue;
                    }
                    curve.anchors.emplace_back(pair[0].get<double>(), pair[1].get<double>());
                }
            }
        }
        if (spec.contains("ceiling")) {
            curve.ceiling = r.bounded(spec, path, "ceiling", 0.5, 1e-12, 1.0);
        }
        s.adoption.curves[id] = std::move(curve);
    }
}

void parse_carbon(Reader& r, const json& j, Scenario& s) {
    if (!j.contains("carbon")) {
        s.carbon.decay.lambda =
            fit_decay({s.carbon.decay.t0, s.carbon.decay.ci0}, {2035.0, 45.0},
                      s.carbon.decay.ci_inf);
        return;
    }
    const auto& c = j.at("carbon");
    if (!r.require_object(c, "carbon")) return;
    r.check_keys(c, "carbon",
                 {"mode", "ci_gasoline", "ci_ethanol_corn", "lhv_gasoline", "lhv_ethanol",
                  "decay", "lookup"});
    const auto mode = r.text(c, "carbon", "mode", "replication");
    if (mode == "replication") {
        s.carbon_mode = CarbonMode::replication;
    } else if (mode == "formula") {
        s.carbon_mode = CarbonMode::formula;
    } else {
        r.issue("carbon.mode", "must be 'replication' or 'formula'");
    }
    s.carbon.ci_gasoline = r.number(c, "carbon", "ci_gasoline", s.carbon.ci_gasoline);
    s.carbon.ci_ethanol_corn = r.number(c, "carbon", "ci_ethanol_corn", s.carbon.ci_ethanol_corn);
    s.carbon.lhv_gasoline = r.number(c, "carbon", "lhv_gasoline", s.carbon.lhv_gasoline);
    s.carbon.lhv_ethanol = r.number(c, "carbon", "lhv_ethanol", s.carbon.lhv_ethanol);

    bool lambda_set = false;
    if (c.contains("decay")) {
        const auto& d = c.at("decay");
        if (r.require_object(d, "carbon.decay")) {
            r.check_keys(d, "carbon.decay", {"ci0", "ci_inf", "t0", "lambda", "anchor"});
            s.carbon.decay.ci0 = r.number(d, "carbon.decay", "ci0", s.carbon.decay.ci0);
            s.carbon.decay.ci_inf = r.number(d, "carbon.decay", "ci_inf", s.carbon.decay.ci_inf);
            s.carbon.decay.t0 = r.integer(d, "carbon.decay", "t0", s.carbon.decay.t0);
            if (d.contains("lambda")) {
                s.carbon.decay.lambda = r.number(d, "carbon.decay", "lambda", 0.1);
                lambda_set = true;
            }
            if (d.contains("anchor")) {
                const auto& a = d.at("anchor");
                if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
                    r.issue("carbon.decay.anchor", "must be [year, ci]");
                } else if (lambda_set) {
                    r.issue("carbon.decay", "give either lambda or anchor, not both");
                } else {
                    try {
                        s.carbon.decay.lambda = fit_decay(
                            {static_cast<double>(s.carbon.decay.t0), s.carbon.decay.ci0},
                            {a[0].get<double>(), a[1].get<double>()}, s.carbon.decay.ci_inf);
                        lambda_set = true;
                    } catch (const Error& e) {
                        r.issue("carbon.decay.anchor", e.what());
                    }
                }
            }
        }
    }
    if (!lambda_set && !(s.carbon.decay.lambda > 0.0)) {
        try {
            s.carbon.decay.lambda =
                fit_decay({static_cast<double>(s.carbon.decay.t0), s.carbon.decay.ci0},
                          {2035.0, 45.0}, s.carbon.decay.ci_inf);
        } catch (const Error& e) {
            r.issue("carbon.decay", e.what());
        }
    }

    if (c.contains("lookup")) {
        const auto& lookup = c.at("lookup");
        if (r.require_object(lookup, "carbon.lookup")) {
            for (const auto& [feed_name, blends] : lookup.items()) {
                Feedstock f;
                try {
                    f = parse_feedstock(feed_name);
                } catch (const Error& e) {
                    r.issue("carbon.lookup." + feed_name, e.what());
                    continue;
                }
                if (!blends.is_object()) {
                    r.issue("carbon.lookup." + feed_name, "must map blends to CI values");
                    continue;
                }
                for (const auto& [blend_name, ci] : blends.items()) {
                    try {
                        const auto id = parse_pathway(blend_name);
                        if (!ci.is_number()) {
                            throw UnitRangeError("CI must be a number");
                        }
                        s.ci_lookup.set(id, f, ci.get<double>());
                    } catch (const Error& e) {
                        r.issue("carbon.lookup." + feed_name + "." + blend_name, e.what());
                    }
                }
            }
        }
    }
}

void parse_feedstock_section(Reader& r, const json& j, Scenario& s) {
    if (!j.contains("feedstock")) return;
    const auto& f = j.at("feedstock");
    if (!r.require_object(f, "feedstock")) return;
    r.check_keys(f, "feedstock",
                 {"profile", "moisture_factor", "yield_point", "capacity"});
    if (f.contains("profile")) {
        const auto& p = f.at("profile");
        if (p.is_string()) {
            const auto name = p.get<std::string>();
            if (is_builtin_msw_profile(name)) {
                s.feedstock.profile = builtin_msw_profile(name);
            } else {
                r.issue("feedstock.profile", "unknown built-in profile '" + name + "'");
            }
        } else if (p.is_object()) {
            r.check_keys(p, "feedstock.profile", {"total_tons_per_year", "components"});
            MswProfile profile;
            profile.total_tons_per_year =
                r.number(p, "feedstock.profile", "total_tons_per_year", 0.0);
            if (p.contains("components") && p.at("components").is_array()) {
                int i = 0;
                for (const auto& comp : p.at("components")) {
                    std::ostringstream pathos;
                    pathos << "feedstock.profile.components[" << i++ << "]";
                    const auto path = pathos.str();
                    r.check_keys(comp, path,
                                 {"name", "fraction", "yield_lo", "yield_hi", "suitability"});
                    MswComponent mc;
                    mc.name = r.text(comp, path, "name", "");
                    mc.fraction = r.number(comp, path, "fraction", 0.0);
                    mc.yield_lo = r.number(comp, path, "yield_lo", 0.0);
                    mc.yield_hi = r.number(comp, path, "yield_hi", 0.0);
                    try {
                        mc.suitability =
                            parse_suitability(r.text(comp, path, "suitability", "moderate"));
                    } catch (const Error& e) {
                        r.issue(path + ".suitability", e.what());
                    }
                    profile.components.push_back(std::move(mc));
                }
            } else {
                r.issue("feedstock.profile.components", "must be an array");
            }
            s.feedstock.profile = std::move(profile);
        } else {
            r.issue("feedstock.profile", "must be a profile name or an inline object");
        }
    }
    s.feedstock.profile.moisture_factor =
        r.bounded(f, "feedstock", "moisture_factor", s.feedstock.profile.moisture_factor, 0.0,
                  1.0);
    s.feedstock.yield_point =
        r.bounded(f, "feedstock", "yield_point", s.feedstock.yield_point, 0.0, 1.0);
    if (f.contains("capacity")) {
        const auto& c = f.at("capacity");
        if (r.require_object(c, "feedstock.capacity")) {
            r.check_keys(c, "feedstock.capacity",
                         {"start_year", "start_capacity_mgal", "end_year", "end_capacity_mgal"});
            s.feedstock.capacity.start_year =
                r.integer(c, "feedstock.capacity", "start_year", 2028);
            s.feedstock.capacity.start_capacity_mgal =
                r.number(c, "feedstock.capacity", "start_capacity_mgal", 200.0);
            s.feedstock.capacity.end_year = r.integer(c, "feedstock.capacity", "end_year", 2035);
            s.feedstock.capacity.end_capacity_mgal =
                r.number(c, "feedstock.capacity", "end_capacity_mgal", 300.0);
        }
    }
}

void parse_incentives(Reader& r, const json& j, Scenario& s) {
    if (!j.contains("incentives")) return;
    const auto& inc = j.at("incentives");
    if (!r.require_object(inc, "incentives")) return;
    r.check_keys(inc, "incentives",
                 {"d6_usd_per_gal", "d5_usd_per_gal", "cfpc45v_usd_per_gal", "ci_band_45v",
                  "enforce_ci_band", "local_start_year", "rin_mode"});
    s.incentives.d6_usd_per_gal =
        r.number(inc, "incentives", "d6_usd_per_gal", s.incentives.d6_usd_per_gal);
    s.incentives.d5_usd_per_gal =
        r.number(inc, "incentives", "d5_usd_per_gal", s.incentives.d5_usd_per_gal);
    s.incentives.cfpc45v_usd_per_gal =
        r.number(inc, "incentives", "cfpc45v_usd_per_gal", s.incentives.cfpc45v_usd_per_gal);
    if (inc.contains("ci_band_45v")) {
        const auto& band = inc.at("ci_band_45v");
        if (!band.is_array() || band.size() != 2 || !band[0].is_number() ||
            !band[1].is_number()) {
            r.issue("incentives.ci_band_45v", "must be [lo, hi]");
        } else {
            s.incentives.ci_band_45v_lo = band[0].get<double>();
            s.incentives.ci_band_45v_hi = band[1].get<double>();
        }
    }
    s.incentives.enforce_ci_band =
        r.boolean(inc, "incentives", "enforce_ci_band", s.incentives.enforce_ci_band);
    s.incentives.local_start_year =
        r.integer(inc, "incentives", "local_start_year", s.incentives.local_start_year);
    const auto rin = r.text(inc, "incentives", "rin_mode", "replication");
    if (rin == "replication") {
        s.incentives.rin_mode = RinMode::replication;
    } else if (rin == "strict") {
        s.incentives.rin_mode = RinMode::strict;
    } else {
        r.issue("incentives.rin_mode", "must be 'replication' or 'strict'");
    }
}

void parse_economics(Reader& r, const json& j, Scenario& s) {
    if (!j.contains("economics")) return;
    const auto& e = j.at("economics");
    if (!r.require_object(e, "economics")) return;
    r.check_keys(e, "economics",
                 {"jobs_per_million_gal", "indirect_usd_per_gal", "prices"});
    s.econ.jobs_per_million_gal =
        r.number(e, "economics", "jobs_per_million_gal", s.econ.jobs_per_million_gal);
    s.econ.indirect_usd_per_gal =
        r.number(e, "economics", "indirect_usd_per_gal", s.econ.indirect_usd_per_gal);
    if (e.contains("prices")) {
        const auto& prices = e.at("prices");
        if (r.require_object(prices, "economics.prices")) {
            for (const auto& [name, value] : prices.items()) {
                try {
                    const auto id = parse_pathway(name);
                    if (!value.is_number()) {
                        throw UnitRangeError("price must be a number");
                    }
                    s.prices.set(id, value.get<double>());
                } catch (const Error& err) {
                    r.issue("economics.prices." + name, err.what());
                }
            }
        }
    }
}

void parse_mc(Reader& r, const json& j, Scenario& s) {
    if (!j.contains("mc")) return;
    const auto& m = j.at("mc");
    if (!r.require_object(m, "mc")) return;
    r.check_keys(m, "mc", {"n_runs", "seed", "percentiles", "distributions"});
    McSpec spec;
    spec.n_runs = r.integer(m, "mc", "n_runs", spec.n_runs);
    if (m.contains("seed")) {
        const auto& seed = m.at("seed");
        if (seed.is_number_unsigned()) {
            spec.seed = seed.get<std::uint64_t>();
        } else if (seed.is_number_integer() && seed.get<long long>() >= 0) {
            spec.seed = static_cast<std::uint64_t>(seed.get<long long>());
        } else {
            r.issue("mc.seed", "must be a non-negative integer");
        }
    }
    if (m.contains("percentiles")) {
        const auto& ps = m.at("percentiles");
        if (!ps.is_array()) {
            r.issue("mc.percentiles", "must be an array");
        } else {
            spec.percentiles.clear();
            for (const auto& p : ps) {
                if (!p.is_number()) {
                    r.issue("mc.percentiles", "entries must be numbers");
                    continue;
                }
                spec.percentiles.push_back(p.get<double>());
            }
        }
    }
    if (m.contains("distributions")) {
        const auto& dists = m.at("distributions");
        if (!dists.is_array()) {
            r.issue("mc.distributions", "must be an array");
        } else {
            int i = 0;
            for (const auto& d : dists) {
                std::ostringstream pathos;
                pathos << "mc.distributions[" << i++ << "]";
                const auto path = pathos.str();
                r.check_keys(d, path, {"target", "kind", "spread"});
                DistSpec dist;
                dist.target = r.text(d, path, "target", "");
                if (dist.target.empty()) {
                    r.issue(path + ".target", "is required");
                }
                const auto kind = r.text(d, path, "kind", "uniform_rel");
                if (kind == "uniform_rel") {
                    dist.kind = DistSpec::Kind::uniform_rel;
                } else if (kind == "uniform_abs") {
                    dist.kind = DistSpec::Kind::uniform_abs;
                } else if (kind == "normal") {
                    dist.kind = DistSpec::Kind::normal;
                } else {
                    r.issue(path + ".kind", "must be uniform_rel, uniform_abs or normal");
                }
                dist.spread = r.number(d, path, "spread", 0.0);
                spec.distributions.push_back(std::move(dist));
            }
        }
    }
    s.mc = std::move(spec);
}

}  // namespace

ConfigLoad load_config_text(const std::string& text, const std::filesystem::path& base_dir) {
    ConfigLoad out;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        out.issues.push_back(std::string("config: not valid JSON: ") + e.what());
        return out;
    }
    out.canonical = j.dump();
    out.hash_hex = fnv1a64_hex(out.canonical);

    Reader r{out.issues};
    if (!j.is_object()) {
        r.issue("config", "top level must be an object");
        return out;
    }
    r.check_keys(j, "",
                 {"horizon", "demand", "adoption", "carbon", "feedstock", "incentives",
                  "economics", "mc", "pathways"});

    Scenario s;
    parse_carbon(r, j, s);
    s.pathways = default_pathways(s.carbon);
    if (j.contains("pathways")) {
        const auto& ps = j.at("pathways");
        if (!ps.is_array()) {
            r.issue("pathways", "must be an array");
        } else {
            std::vector<PathwaySpec> pathways;
            int i = 0;
            for (const auto& p : ps) {
                std::ostringstream pathos;
                pathos << "pathways[" << i++ << "]";
                const auto path = pathos.str();
                r.check_keys(p, path, {"id", "ethanol_vol_frac", "lhv_mj_per_gal", "liquid"});
                PathwaySpec spec;
                try {
                    spec.id = parse_pathway(r.text(p, path, "id", ""));
                } catch (const Error& e) {
                    r.issue(path + ".id", e.what());
                    continue;
                }
                spec.ethanol_vol_frac = r.bounded(p, path, "ethanol_vol_frac", 0.0, 0.0, 1.0);
                spec.is_liquid = r.boolean(p, path, "liquid", true);
                const double derived = blend_lhv(spec.ethanol_vol_frac, s.carbon.lhv_gasoline,
                                                 s.carbon.lhv_ethanol);
                spec.lhv_mj_per_gal =
                    r.number(p, path, "lhv_mj_per_gal", spec.is_liquid ? derived : 0.0);
                pathways.push_back(spec);
            }
            if (!pathways.empty()) {
                s.pathways = std::move(pathways);
            }
        }
    }
    parse_horizon(r, j, s);
    parse_demand(r, j, s, base_dir);
    parse_adoption(r, j, s);
    parse_feedstock_section(r, j, s);
    parse_incentives(r, j, s);
    parse_economics(r, j, s);
    parse_mc(r, j, s);

    for (const auto& issue : s.validate()) {
        out.issues.push_back(issue);
    }
    out.scenario = std::move(s);
    return out;
}

ConfigLoad load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        ConfigLoad out;
        out.issues.push_back("config: cannot open file: " + path.string());
        return out;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config_text(buffer.str(), path.parent_path());
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[hash & 0xF];
        hash >>= 4;
    }
    return hex;
}

}  // namespace blendsim
