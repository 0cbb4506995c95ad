#include "hardy/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hardy/error.hpp"

namespace hardy::io {

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::string law_name(CuspLaw law) {
    switch (law) {
        case CuspLaw::Constant: return "constant";
        case CuspLaw::Quadratic: return "quadratic";
        case CuspLaw::Calibrated: return "calibrated";
    }
    return "constant";
}

json collar_json(const CollarReport& c) {
    return {{"inner", c.inner}, {"outer", c.outer}, {"total", c.total}, {"escape", c.escape}};
}

}  // namespace

DomainSpec domain_from_json(const json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const double R = get_or(j, "R", 1.0);
        const json params = j.contains("params") ? j.at("params") : json::object();
        if (kind == "Ball") return DomainSpec::ball(R);
        if (kind == "BallWithCoreCutoff") return DomainSpec::core_cutoff(params.at("c").get<double>(), R);
        if (kind == "HalfDisk") return DomainSpec::half_disk(R);
        if (kind == "AngularProfile") {
            std::vector<AngularBand> bands;
            for (const auto& b : params.at("bands")) {
                AngularBand band{b.at("r_lo").get<double>(), b.at("r_hi").get<double>(), {}};
                for (const auto& a : b.at("arcs")) band.arcs.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
                bands.push_back(std::move(band));
            }
            return DomainSpec::angular(std::move(bands), R);
        }
        if (kind == "CuspDomain") {
            const std::string law = get_or<std::string>(params, "law", "calibrated");
            if (law == "quadratic") return DomainSpec::cusp_domain(CuspProfile::quadratic());
            const double a = params.at("a").get<double>();
            if (law == "constant") return DomainSpec::cusp_domain(CuspProfile::constant(a));
            if (law == "calibrated") return DomainSpec::cusp_domain(CuspProfile::calibrated(a, get_or(params, "nodes", 64)));
            throw ConstructionError("domain JSON: unknown cusp law '" + law + "'");
        }
        throw ConstructionError("domain JSON: unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ConstructionError(std::string("domain JSON: ") + e.what());
    }
}

json domain_to_json(const DomainSpec& dom) {
    json params = json::object();
    switch (dom.kind) {
        case DomainKind::Ball: break;
        case DomainKind::BallWithCoreCutoff: params["c"] = dom.core_fraction; break;
        case DomainKind::AngularProfile: {
            json bands = json::array();
            for (const auto& b : dom.bands) {
                json arcs = json::array();
                for (const auto& a : b.arcs) arcs.push_back({a.lo, a.hi});
                bands.push_back({{"r_lo", b.r_lo}, {"r_hi", b.r_hi}, {"arcs", arcs}});
            }
            params["bands"] = bands;
            break;
        }
        case DomainKind::CuspDomain:
            params["law"] = law_name(dom.cusp->law);
            if (dom.cusp->law != CuspLaw::Quadratic) params["a"] = dom.cusp->a;
            if (dom.cusp->law == CuspLaw::Calibrated) params["nodes"] = dom.cusp->rho.size();
            break;
    }
    return {{"kind", to_string(dom.kind)}, {"R", dom.R}, {"params", params}};
}

RadialFunction radial_from_json(const json& j) {
    try {
        RadialFunction u;
        u.grid = j.at("grid").get<std::vector<double>>();
        u.values = j.at("values").get<std::vector<double>>();
        u.N = get_or(j, "N", 2);
        u.boundary_zero = get_or(j, "boundary_zero", true);
        return u;
    } catch (const json::exception& e) {
        throw ConstructionError(std::string("radial function JSON: ") + e.what());
    }
}

PolarGridFunction polar_from_json(const json& j) {
    try {
        PolarGridFunction u;
        u.r = j.at("r").get<std::vector<double>>();
        u.theta = j.at("theta").get<std::vector<double>>();
        u.values = j.at("values").get<std::vector<double>>();
        u.periodic = get_or(j, "periodic", false);
        u.validate();
        return u;
    } catch (const json::exception& e) {
        throw ConstructionError(std::string("polar function JSON: ") + e.what());
    }
}

json polar_to_json(const PolarGridFunction& u) {
    return {{"type", "polar"}, {"r", u.r}, {"theta", u.theta}, {"values", u.values}, {"periodic", u.periodic}};
}

json to_json(const GeometryClassification& g) {
    auto num = [](double v) { return std::isfinite(v) ? json(v) : json("inf"); };
    return {{"m0", num(g.m0)}, {"mR", num(g.mR)}, {"regime", to_string(g.regime)}};
}

json to_json(const QuotientReport& q) {
    return {{"dirichlet_energy", q.dirichlet_energy}, {"weighted_mass", q.weighted_mass},
            {"ratio", q.ratio},                       {"quad_error_estimate", q.quad_error_estimate},
            {"radial_energy", q.radial_energy},       {"angular_energy", q.angular_energy}};
}

json to_json(const PolyaSzegoReport& r) {
    return {{"energy", r.energy},           {"energy_star", r.energy_star}, {"margin", r.margin},
            {"ratio", r.ratio},             {"ratio_star", r.ratio_star},   {"lumped_mass", r.lumped_mass},
            {"lumped_mass_star", r.lumped_mass_star}};
}

json to_json(const HardyLittlewoodReport& r) { return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.lhs <= r.rhs}}; }

json to_json(const RearrangedDomain& r) {
    return {{"r", r.r}, {"half_width", r.half_width}, {"source", domain_to_json(r.source)}};
}

json to_json(const ConstantEstimate& e) {
    json rows = json::array();
    for (const auto& row : e.rows)
        rows.push_back({{"n", row.n},
                        {"d_n", row.d_n},
                        {"window_length", row.window_length},
                        {"vertices", row.vertices},
                        {"triangles", row.triangles},
                        {"iterations", row.iterations},
                        {"residual", row.residual},
                        {"min_angle_deg", row.min_angle_deg},
                        {"collar", collar_json(row.collar)}});
    return {{"per_n", rows},
            {"estimate", e.estimate},
            {"fit", {{"K", e.fit_K}, {"b", e.fit_b}, {"rms", e.fit_rms}}},
            {"aitken", e.aitken},
            {"monotone", e.monotone},
            {"collar_report", e.rows.empty() ? json(nullptr) : collar_json(e.rows.back().collar)},
            {"warnings", e.warnings}};
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

json meta_block(const json& config, std::uint64_t seed) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(config.dump())));
    return {{"tool", "hardy"}, {"version", HARDY_VERSION}, {"config_hash", hex}, {"seed", seed}};
}

json read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConstructionError("cannot open " + path);
    try {
        return json::parse(is);
    } catch (const json::exception& e) {
        throw ConstructionError(path + ": " + e.what());
    }
}

}  // namespace hardy::io
