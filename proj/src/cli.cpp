#include "hardy/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "hardy/acceptance.hpp"
#include "hardy/error.hpp"
#include "hardy/fem2d.hpp"
#include "hardy/json_io.hpp"
#include "hardy/oned.hpp"
#include "hardy/testfn.hpp"
#include "hardy/weight.hpp"

namespace hardy::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void apply_thread_cap() {
    if (const char* env = std::getenv("HARDY_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1) throw UsageError("HARDY_THREADS must be a positive integer");
        omp_set_num_threads(static_cast<int>(n));
    }
}

std::string config_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + config_value(v[i]);
        return s;
    }
    return v.dump();
}

// Splices options from a JSON config file into the argument list.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> rest;
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return rest;
    const json cfg = io::read_file(path);
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
    std::vector<std::string> out;
    bool has_command = false;
    for (const auto& a : rest)
        if (!a.empty() && a[0] != '-') has_command = true;
    if (!has_command && cfg.contains("command")) {
        std::istringstream words(cfg.at("command").get<std::string>());
        for (std::string w; words >> w;) out.push_back(w);
    }
    out.insert(out.end(), rest.begin(), rest.end());
    if (cfg.contains("options")) {
        for (const auto& [key, value] : cfg.at("options").items()) {
            const std::string flag = "--" + key;
            bool given = false;
            for (const auto& a : rest) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
            if (given) continue;
            if (value.is_boolean()) {
                if (value.get<bool>()) out.push_back(flag);
            } else {
                out.push_back(flag);
                out.push_back(config_value(value));
            }
        }
    }
    return out;
}

void emit(std::ostream& out, json body, const json& config, std::uint64_t seed = 0) {
    json doc;
    doc["meta"] = io::meta_block(config, seed);
    for (auto& [k, v] : body.items()) doc[k] = v;
    out << doc.dump(2) << '\n';
}

void csv_header(std::ostream& out, const json& config, const std::string& columns) {
    const json meta = io::meta_block(config);
    out << "# tool=" << meta["tool"].get<std::string>() << " version=" << meta["version"].get<std::string>()
        << " config_hash=" << meta["config_hash"].get<std::string>() << '\n'
        << columns << '\n';
    out << std::setprecision(17);
}

struct State {
    // domain classify
    std::string domain_path;
    // weight sweep
    double R = 1.0, x_from = 0.5, x_to = 1.0 - 1e-6;
    int points = 50;
    // quotient eval
    std::string input_path;
    // upperbound
    std::string family = "phi_alpha";
    std::vector<double> schedule_values;
    int N = 2;
    // ea
    double a = 0.5;
    int M = 2048;
    double a_from = 0.05, a_to = 1.5;
    // rearrange
    std::string fn_path;
    // constant
    std::vector<int> schedule{4, 8, 16, 32};
    double h = 0.02;
    std::string vtk_path;
    // verify-all
    bool quick = false;
    std::uint64_t seed = acceptance::Options{}.seed;
};

int cmd_classify(const State& s, std::ostream& out) {
    const json dj = io::read_file(s.domain_path);
    const auto dom = io::domain_from_json(dj);
    const json config{{"command", "domain classify"}, {"domain", io::domain_to_json(dom)}};
    emit(out, {{"domain", io::domain_to_json(dom)}, {"classification", io::to_json(classify(dom))}}, config);
    return 0;
}

int cmd_weight_sweep(const State& s, std::ostream& out) {
    if (!(s.x_from > 0 && s.x_from < s.x_to && s.x_to < s.R)) throw UsageError("weight sweep: need 0 < from < to < R");
    if (s.points < 2) throw UsageError("weight sweep: --points must be at least 2");
    const json config{{"command", "weight sweep"}, {"R", s.R}, {"from", s.x_from}, {"to", s.x_to}, {"points", s.points}};
    csv_header(out, config, "x_norm,W,taylor_gap");
    const WeightParams p{s.R, 2};
    // Geometric in the distance to R so that the approach to the boundary is resolved.
    const double d0 = s.R - s.x_from, d1 = s.R - s.x_to;
    for (int i = 0; i < s.points; ++i) {
        const double x = s.R - d0 * std::pow(d1 / d0, static_cast<double>(i) / (s.points - 1));
        out << x << ',' << weight_eval(p, x) << ',' << boundary_taylor_gap(p, x) << '\n';
    }
    return 0;
}

int cmd_quotient(const State& s, std::ostream& out) {
    const json fj = io::read_file(s.input_path);
    const std::string type = fj.value("type", "radial");
    const WeightParams p{s.R, 2};
    QuotientReport q;
    json config{{"command", "quotient eval"}, {"R", s.R}, {"input", fj}};
    if (type == "radial") {
        const auto u = io::radial_from_json(fj);
        q = quotient_radial(u, {s.R, u.N});
    } else if (type == "polar") {
        auto u = io::polar_from_json(fj);
        if (!s.domain_path.empty()) {
            const auto dom = io::domain_from_json(io::read_file(s.domain_path));
            u = PolarGridFunction::on_domain(u.r, u.theta, u.values, dom, u.periodic);
            config["domain"] = io::domain_to_json(dom);
        }
        q = quotient_polar(u, p);
    } else {
        throw UsageError("quotient eval: unknown function type '" + type + "'");
    }
    emit(out, {{"report", io::to_json(q)}}, config);
    return 0;
}

int cmd_upperbound(const State& s, std::ostream& out) {
    std::vector<double> sched = s.schedule_values;
    const bool ks = s.family == "phi_alpha" || s.family == "psi_beta" || s.family == "cusp";
    if (sched.empty()) {
        if (s.family == "halfspace")
            sched = {2, 4, 16, 64, 256};
        else
            for (int k = 3; k <= 10; ++k) sched.push_back(k);
    }
    if (!ks && s.family != "halfspace") throw UsageError("upperbound: unknown family '" + s.family + "'");
    const json config{{"command", "upperbound"}, {"family", s.family}, {"schedule", sched}, {"N", s.N}};
    const std::size_t m = sched.size();
    std::vector<double> param(m), ratio(m), err(m);
    std::vector<std::string> failure(m);
    const DomainSpec cusp_dom =
        s.family == "cusp" ? DomainSpec::cusp_domain(CuspProfile::calibrated(0.9)) : DomainSpec::ball();
    const double crit = (s.N - 1.0) / s.N;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(m); ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            if (s.family == "phi_alpha") {
                param[k] = crit - std::ldexp(1.0, -static_cast<int>(sched[k]));
                const auto r = phi_alpha_quotient({param[k], 0.5, 1.0, s.N});
                ratio[k] = r.q.ratio;
                err[k] = r.q.quad_error_estimate;
            } else if (s.family == "psi_beta") {
                param[k] = crit + std::ldexp(1.0, -static_cast<int>(sched[k]));
                const auto r = psi_beta_quotient({param[k], 1.0, s.N});
                ratio[k] = r.ratio;
                err[k] = r.quad_error_estimate;
            } else if (s.family == "halfspace") {
                param[k] = sched[k];
                const auto r = halfspace_quotient({static_cast<int>(sched[k])}, DomainSpec::ball());
                ratio[k] = r.q.ratio;
                err[k] = r.q.quad_error_estimate;
            } else {
                const auto base = cusp_upper_bound({}, cusp_dom);
                param[k] = std::ldexp(base.delta, -static_cast<int>(sched[k]));
                const auto r = cusp_upper_bound({0.95, param[k], 0.0, 1024}, cusp_dom);
                ratio[k] = r.q.ratio;
                err[k] = r.q.quad_error_estimate;
            }
        } catch (const std::exception& e) {
            failure[k] = e.what();
        }
    }
    for (const auto& f : failure)
        if (!f.empty()) throw NumericalError("upperbound: " + f);
    csv_header(out, config, "param,ratio,error_estimate");
    for (std::size_t k = 0; k < m; ++k) out << param[k] << ',' << ratio[k] << ',' << err[k] << '\n';
    return 0;
}

int cmd_ea(const State& s, std::ostream& out) {
    const auto r = solve_Ea({s.a, s.M});
    const json config{{"command", "ea"}, {"a", s.a}, {"M", s.M}};
    emit(out, {{"a", s.a}, {"E", r.value}, {"residual", r.residual}, {"coarse", r.coarse}, {"fine", r.fine}}, config);
    return 0;
}

int cmd_ea_sweep(const State& s, std::ostream& out) {
    if (s.points < 2) throw UsageError("ea sweep: --points must be at least 2");
    const json config{{"command", "ea sweep"}, {"from", s.a_from}, {"to", s.a_to}, {"points", s.points}, {"M", s.M}};
    std::vector<AngularEigenResult> rows(static_cast<std::size_t>(s.points));
    std::vector<std::string> failure(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < s.points; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = solve_Ea({s.a_from + (s.a_to - s.a_from) * i / (s.points - 1), s.M});
        } catch (const std::exception& e) {
            failure[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (const auto& f : failure)
        if (!f.empty()) throw NumericalError("ea sweep: " + f);
    csv_header(out, config, "a,E,residual");
    for (int i = 0; i < s.points; ++i)
        out << s.a_from + (s.a_to - s.a_from) * i / (s.points - 1) << ',' << rows[static_cast<std::size_t>(i)].value << ','
            << rows[static_cast<std::size_t>(i)].residual << '\n';
    return 0;
}

int cmd_radial(const State& s, std::ostream& out) {
    const auto r = radial_reduction_constant(s.N);
    const json config{{"command", "radial"}, {"N", s.N}};
    emit(out,
         {{"N", s.N},
          {"infimum", r.infimum},
          {"target", std::pow((s.N - 1.0) / s.N, s.N)},
          {"best_alpha", r.best_alpha},
          {"alphas", r.alphas},
          {"quotients", r.quotients}},
         config);
    return 0;
}

int cmd_rearrange(const State& s, std::ostream& out) {
    const auto dom = io::domain_from_json(io::read_file(s.domain_path));
    const json fj = io::read_file(s.fn_path);
    const auto raw = io::polar_from_json(fj);
    const auto u = PolarGridFunction::on_domain(raw.r, raw.theta, raw.values, dom, raw.periodic);
    const WeightParams p{dom.R, 2};
    const auto star = rearrange_function(u);
    const json config{{"command", "rearrange"}, {"domain", io::domain_to_json(dom)}, {"fn", fj}};
    emit(out,
         {{"rearranged_domain", io::to_json(rearrange_domain(dom, u.r))},
          {"rearranged_function", io::polar_to_json(star)},
          {"polya_szego", io::to_json(polya_szego_check(u, p))},
          {"hardy_littlewood_self", io::to_json(hardy_littlewood_check(u, u))}},
         config);
    return 0;
}

int cmd_constant(const State& s, std::ostream& out) {
    const auto dom = io::domain_from_json(io::read_file(s.domain_path));
    ExtrapolationOptions opt;
    opt.h = s.h;
    const auto est = extrapolate_constant(s.schedule, dom, opt);
    if (!s.vtk_path.empty()) write_vtk(s.vtk_path, est.final_mesh, est.final_vector);
    const json config{{"command", "constant"}, {"domain", io::domain_to_json(dom)}, {"schedule", s.schedule}, {"h", s.h}};
    emit(out, io::to_json(est), config);
    return 0;
}

int cmd_verify(const State& s, std::ostream& out, std::ostream& err) {
    acceptance::Options opt;
    opt.quick = s.quick;
    opt.seed = s.seed;
    json rows = json::array();
    bool all = true;
    for (int id = 1; id <= 9; ++id) {
        const auto c = acceptance::run(id, opt);
        err << "[hardy] criterion " << id << ": " << (c.pass ? "PASS" : "FAIL") << " (" << std::fixed
            << std::setprecision(2) << c.seconds << " s)\n";
        all = all && c.pass;
        rows.push_back(acceptance::to_json(c));
    }
    const json config{{"command", "verify-all"}, {"quick", s.quick}, {"seed", s.seed}};
    emit(out, {{"all_pass", all}, {"matrix", rows}}, config, s.seed);
    return all ? 0 : 1;
}

json diagnostic(const std::string& kind, const std::string& what, double residual = NAN) {
    json d{{"error", kind}, {"message", what}};
    if (std::isfinite(residual)) d["residual"] = residual;
    return d;
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    State s;
    CLI::App app{"Numerical toolkit for the critical Hardy inequality on planar domains", "hardy"};
    app.set_version_flag("--version", HARDY_VERSION);
    app.set_help_flag("--help", "Print this help message and exit");  // -h is taken by --h
    app.require_subcommand(1);

    auto* domain = app.add_subcommand("domain", "Domain utilities");
    domain->require_subcommand(1);
    auto* classify_cmd = domain->add_subcommand("classify", "Classify a domain by its boundary densities");
    classify_cmd->add_option("--domain", s.domain_path, "Domain JSON file")->required();

    auto* weight = app.add_subcommand("weight", "Weight utilities");
    weight->require_subcommand(1);
    auto* sweep_w = weight->add_subcommand("sweep", "CSV of W and the boundary Taylor gap");
    sweep_w->add_option("--R", s.R, "Ball radius")->capture_default_str();
    sweep_w->add_option("--from", s.x_from, "First |x|")->capture_default_str();
    sweep_w->add_option("--to", s.x_to, "Last |x|")->capture_default_str();
    sweep_w->add_option("--points", s.points, "Number of rows")->capture_default_str();

    auto* quotient = app.add_subcommand("quotient", "Hardy quotient of sampled functions");
    quotient->require_subcommand(1);
    auto* qeval = quotient->add_subcommand("eval", "Evaluate the quotient of a function file");
    qeval->add_option("--input", s.input_path, "Function JSON file")->required();
    qeval->add_option("--domain", s.domain_path, "Optional domain JSON; samples outside are zeroed");
    qeval->add_option("--R", s.R, "Ball radius of the weight")->capture_default_str();

    auto* upper = app.add_subcommand("upperbound", "Test-function families");
    upper->add_option("--family", s.family, "phi_alpha | psi_beta | halfspace | cusp")
        ->check(CLI::IsMember({"phi_alpha", "psi_beta", "halfspace", "cusp"}))
        ->capture_default_str();
    upper->add_option("--schedule", s.schedule_values, "k values (l values for halfspace)")->delimiter(',');
    upper->add_option("--N", s.N, "Dimension for phi_alpha / psi_beta")->check(CLI::Range(2, 64))->capture_default_str();

    auto* ea = app.add_subcommand("ea", "Angular eigenvalue E(a)");
    ea->add_option("--a", s.a, "Half-opening defect in (0, pi/2)")->capture_default_str();
    ea->add_option("--M", s.M, "Coarse grid intervals")->capture_default_str();
    auto* ea_sweep = ea->add_subcommand("sweep", "CSV of E(a) on a uniform grid in a");
    ea_sweep->add_option("--from", s.a_from)->capture_default_str();
    ea_sweep->add_option("--to", s.a_to)->capture_default_str();
    ea_sweep->add_option("--points", s.points)->capture_default_str();
    ea_sweep->add_option("--M", s.M)->capture_default_str();

    auto* radial = app.add_subcommand("radial", "Radial reduction constant in dimension N");
    radial->add_option("--N", s.N)->check(CLI::Range(2, 64))->capture_default_str();

    auto* rearr = app.add_subcommand("rearrange", "Spherical rearrangement of a polar grid function");
    rearr->add_option("--domain", s.domain_path)->required();
    rearr->add_option("--fn", s.fn_path, "Polar function JSON file")->required();

    auto* constant = app.add_subcommand("constant", "FEM estimate of the best constant");
    constant->add_option("--domain", s.domain_path)->required();
    constant->add_option("--schedule", s.schedule, "Truncation parameters n")->delimiter(',')->capture_default_str();
    constant->add_option("--h", s.h, "Target element size")->capture_default_str();
    constant->add_option("--emit-vtk", s.vtk_path, "Write the last eigenvector as ASCII VTK");

    auto* verify = app.add_subcommand("verify-all", "Run the acceptance matrix");
    verify->add_flag("--quick", s.quick, "Smaller schedules and case counts");
    verify->add_option("--seed", s.seed)->capture_default_str();

    const auto t0 = std::chrono::steady_clock::now();
    std::string label;
    try {
        apply_thread_cap();
        auto args = expand_config(args_in);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::CallForVersion&) {
            out << HARDY_VERSION << '\n';
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "usage error: " << e.what() << "\nrun with --help for usage\n";
            return 2;
        }
        int status = 0;
        if (*classify_cmd) label = "domain classify", status = cmd_classify(s, out);
        else if (*sweep_w) label = "weight sweep", status = cmd_weight_sweep(s, out);
        else if (*qeval) label = "quotient eval", status = cmd_quotient(s, out);
        else if (*upper) label = "upperbound", status = cmd_upperbound(s, out);
        else if (*ea_sweep) label = "ea sweep", status = cmd_ea_sweep(s, out);
        else if (*ea) label = "ea", status = cmd_ea(s, out);
        else if (*radial) label = "radial", status = cmd_radial(s, out);
        else if (*rearr) label = "rearrange", status = cmd_rearrange(s, out);
        else if (*constant) label = "constant", status = cmd_constant(s, out);
        else if (*verify) label = "verify-all", status = cmd_verify(s, out, err);
        err << "[hardy] " << label << ": " << std::fixed << std::setprecision(2)
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        out << diagnostic("NumericalError", e.what(), e.residual()).dump(2) << '\n';
        return 1;
    } catch (const DomainRangeError& e) {
        out << diagnostic("DomainRangeError", e.what()).dump(2) << '\n';
        return 2;
    } catch (const DegenerateInputError& e) {
        out << diagnostic("DegenerateInputError", e.what()).dump(2) << '\n';
        return 2;
    } catch (const ConstructionError& e) {
        out << diagnostic("ConstructionError", e.what()).dump(2) << '\n';
        return 2;
    } catch (const ContractViolation& e) {
        out << diagnostic("ContractViolation", e.what()).dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        out << diagnostic("InternalError", e.what()).dump(2) << '\n';
        return 1;
    }
}

}  // namespace hardy::cli
