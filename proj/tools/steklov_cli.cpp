// Command-line front end: point evaluations, radius and curvature scans,
// transition location, bound verification and fuzzing. Output is JSON (or
// CSV for scans) with a fixed field order and %.12e floats, so identical
// invocations produce byte-identical results.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steklov/steklov.hpp"

namespace {

std::string fnum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_num(const std::optional<double>& v) { return v ? fnum(*v) : "null"; }

steklov::Problem parse_problem(const std::string& name) {
    if (name == "sigma") return steklov::Problem::sigma;
    if (name == "xi") return steklov::Problem::xi;
    if (name == "eta") return steklov::Problem::eta;
    throw steklov::domain_error("problem: unknown name '" + name + "'");
}

steklov::MethodChoice parse_method(const std::string& name) {
    if (name == "auto") return steklov::MethodChoice::automatic;
    if (name == "ode") return steklov::MethodChoice::ode;
    if (name == "closed") return steklov::MethodChoice::closed_form;
    if (name == "coupled") return steklov::MethodChoice::coupled;
    throw steklov::domain_error("method: unknown name '" + name + "'");
}

steklov::Geometry parse_geometry(const std::string& name) {
    if (name == "sphere") return steklov::Geometry::sphere;
    if (name == "hyperbolic") return steklov::Geometry::hyperbolic;
    throw steklov::domain_error("geometry: unknown name '" + name + "'");
}

std::string report_json(const steklov::MonotonicityReport& rep) {
    std::string out = "{\"verdict\":" + jstr(steklov::to_string(rep.verdict)) +
                      ",\"samples\":" + std::to_string(rep.samples) +
                      ",\"min_gap\":" + fnum(rep.min_gap) + ",\"transition\":";
    if (rep.transition) {
        const steklov::TransitionPoint& t = *rep.transition;
        out += "{\"location\":" + fnum(t.location) + ",\"bracket_lo\":" + fnum(t.bracket_lo) +
               ",\"bracket_hi\":" + fnum(t.bracket_hi) + ",\"kind\":" +
               jstr(t.kind == steklov::TransitionKind::radius ? "radius" : "curvature") +
               ",\"residual\":" + fnum(t.residual) + "}";
    } else {
        out += "null";
    }
    return out + "}";
}

std::string bounds_report_json(const steklov::BoundsReport& rep) {
    const steklov::HypothesisReport& h = rep.hypotheses;
    const auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out = "{\"check\":" + jstr(steklov::to_string(rep.check)) +
                      ",\"m\":" + std::to_string(rep.m) + ",\"applicable\":" + b(rep.applicable) +
                      ",\"lower\":" + opt_num(rep.lower) + ",\"value\":" + fnum(rep.value) +
                      ",\"upper\":" + opt_num(rep.upper) +
                      ",\"lower_slack\":" + opt_num(rep.lower_slack) +
                      ",\"upper_slack\":" + opt_num(rep.upper_slack) +
                      ",\"equality\":" + b(rep.equality_flag) + ",\"hypotheses\":{\"ricci_nonneg\":" +
                      b(h.ricci_nonneg) + ",\"ricci_nonpos\":" + b(h.ricci_nonpos) +
                      ",\"convex_boundary\":" + b(h.convex_boundary) +
                      ",\"lemma1_holds\":" + b(h.lemma1_holds) +
                      ",\"worst_margin\":" + fnum(h.worst_margin) + "}";
    return out + ",\"warp\":" + jstr(steklov::to_string(rep.manifold.warp)) +
           ",\"R\":" + fnum(rep.manifold.R) + "}";
}

std::string curve_json(const std::vector<steklov::CurvePoint>& curve, const char* xname) {
    std::string out = "[";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (i) out += ',';
        out += "{\"" + std::string(xname) + "\":" + fnum(curve[i].x);
        if (curve[i].ok)
            out += ",\"value\":" + fnum(curve[i].value) + ",\"est_error\":" + fnum(curve[i].est_error);
        else
            out += ",\"value\":null,\"est_error\":null";
        out += '}';
    }
    return out + "]";
}

void print_curve_csv(const std::vector<steklov::CurvePoint>& curve, const char* xname) {
    std::printf("%s,value,est_error\n", xname);
    for (const steklov::CurvePoint& pt : curve) {
        if (pt.ok)
            std::printf("%s,%s,%s\n", fnum(pt.x).c_str(), fnum(pt.value).c_str(),
                        fnum(pt.est_error).c_str());
        else
            std::printf("%s,,\n", fnum(pt.x).c_str());
    }
}

struct EigArgs {
    std::string warp, problem, method = "auto";
    int n = 2, m = 0;
    double R = 1.0, rtol = 1e-10;
};

struct ScanArgs {
    std::string geometry, problem, normalizer, out = "json";
    int n = 2, m = 0, power = 0;  // power 0: pick 3 for xi, 1 otherwise
    double r_min = 0.05, r_max = 3.0, rtol = 1e-10, margin = -1.0;
    std::size_t samples = 256;
};

struct CriticalArgs {
    std::string geometry, problem, normalizer;
    int n = 2, m = 0, power = 0;
    double lo = 0.1, hi = 3.0, tol = 1e-6, rtol = 1e-10;
};

struct CurvatureArgs {
    std::string constraint, problem, out = "json";
    int m = 0;
    double A = 1.0, rho = 1.0, k_min = -5.0, k_max = 0.0, margin = -1.0;  // k_max 0: 99% of bound
    std::size_t samples = 128;
};

struct BoundsArgs {
    std::string warp;
    int n = 2, m = 1;
    double R = 1.0, rtol = 1e-10;
};

struct FuzzArgs {
    int n = 3, m_max = 2, trials = 100;
    std::uint64_t seed = 1;
    double rtol = 1e-10;
};

int run_eig(const EigArgs& a) {
    const steklov::ManifoldSpec man(a.n, a.R, steklov::parse_warp(a.warp));
    const steklov::EigenResult res =
        steklov::eigenvalue(man, parse_problem(a.problem), a.m, parse_method(a.method), a.rtol);
    std::string out = "{\"value\":" + fnum(res.value) + ",\"est_error\":" + fnum(res.est_error) +
                      ",\"method\":" + jstr(steklov::to_string(res.method)) +
                      ",\"config_echo\":{\"command\":\"eig\",\"warp\":" +
                      jstr(steklov::to_string(man.warp)) + ",\"n\":" + std::to_string(a.n) +
                      ",\"R\":" + fnum(a.R) + ",\"problem\":" + jstr(a.problem) +
                      ",\"m\":" + std::to_string(a.m) + ",\"method\":" + jstr(a.method) +
                      ",\"rtol\":" + fnum(a.rtol) + "}}";
    std::printf("%s\n", out.c_str());
    return 0;
}

int run_scan(const ScanArgs& a) {
    const steklov::Geometry g = parse_geometry(a.geometry);
    const steklov::Problem p = parse_problem(a.problem);
    const steklov::Normalizer norm{steklov::parse_normalizer(a.normalizer),
                                   a.power != 0 ? a.power : (p == steklov::Problem::xi ? 3 : 1)};
    const std::vector<double> grid = steklov::uniform_grid(a.r_min, a.r_max, a.samples);
    const std::vector<steklov::CurvePoint> curve =
        steklov::normalized_curve(g, a.n, p, a.m, norm, grid, a.rtol);
    const steklov::MonotonicityReport rep = steklov::monotonicity_report(curve, a.margin);
    if (a.out == "csv") {
        print_curve_csv(curve, "R");
        std::fprintf(stderr, "%s\n", report_json(rep).c_str());
        return 0;
    }
    std::string echo = "{\"command\":\"scan\",\"geometry\":" + jstr(a.geometry) + ",\"n\":" +
                       std::to_string(a.n) + ",\"problem\":" + jstr(a.problem) + ",\"m\":" +
                       std::to_string(a.m) + ",\"normalizer\":" + jstr(a.normalizer) +
                       ",\"power\":" + std::to_string(norm.power) + ",\"r_min\":" + fnum(a.r_min) +
                       ",\"r_max\":" + fnum(a.r_max) + ",\"samples\":" + std::to_string(a.samples) +
                       ",\"rtol\":" + fnum(a.rtol) + "}";
    std::printf("{\"curve\":%s,\"report\":%s,\"config_echo\":%s}\n", curve_json(curve, "R").c_str(),
                report_json(rep).c_str(), echo.c_str());
    return 0;
}

int run_critical(const CriticalArgs& a) {
    const steklov::Problem p = parse_problem(a.problem);
    const steklov::Normalizer norm{steklov::parse_normalizer(a.normalizer),
                                   a.power != 0 ? a.power : (p == steklov::Problem::xi ? 3 : 1)};
    const steklov::TransitionPoint t = steklov::find_transition(
        parse_geometry(a.geometry), a.n, p, a.m, norm, a.lo, a.hi, a.tol, a.rtol);
    std::string out = "{\"transition\":{\"location\":" + fnum(t.location) +
                      ",\"bracket_lo\":" + fnum(t.bracket_lo) + ",\"bracket_hi\":" +
                      fnum(t.bracket_hi) + ",\"kind\":\"radius\",\"residual\":" + fnum(t.residual) +
                      "},\"config_echo\":{\"command\":\"critical\",\"geometry\":" +
                      jstr(a.geometry) + ",\"n\":" + std::to_string(a.n) + ",\"problem\":" +
                      jstr(a.problem) + ",\"m\":" + std::to_string(a.m) + ",\"normalizer\":" +
                      jstr(a.normalizer) + ",\"power\":" + std::to_string(norm.power) +
                      ",\"bracket_lo\":" + fnum(a.lo) + ",\"bracket_hi\":" + fnum(a.hi) +
                      ",\"tol\":" + fnum(a.tol) + "}}";
    std::printf("%s\n", out.c_str());
    return 0;
}

int run_curvature(const CurvatureArgs& a) {
    if (a.constraint != "area" && a.constraint != "radius")
        throw steklov::domain_error("constraint: expected area or radius");
    const steklov::CurvatureFamily fam(a.constraint == "area"
                                           ? steklov::ConstraintKind::fixed_area
                                           : steklov::ConstraintKind::fixed_radius,
                                       a.constraint == "area" ? a.A : a.rho);
    const double k_hi = a.k_max != 0.0 ? a.k_max : 0.99 * fam.K_max();
    const steklov::Problem p = parse_problem(a.problem);
    const std::vector<double> grid = steklov::uniform_grid(a.k_min, k_hi, a.samples);
    const std::vector<steklov::CurvePoint> curve = steklov::curvature_curve(fam, p, a.m, grid);
    const steklov::MonotonicityReport rep =
        steklov::monotonicity_report(curve, a.margin, steklov::TransitionKind::curvature);
    if (a.out == "csv") {
        print_curve_csv(curve, "K");
        std::fprintf(stderr, "%s\n", report_json(rep).c_str());
        return 0;
    }
    std::string echo = "{\"command\":\"curvature\",\"constraint\":" + jstr(a.constraint) +
                       ",\"constraint_value\":" + fnum(fam.value) + ",\"problem\":" +
                       jstr(a.problem) + ",\"m\":" + std::to_string(a.m) + ",\"k_min\":" +
                       fnum(a.k_min) + ",\"k_max\":" + fnum(k_hi) + ",\"samples\":" +
                       std::to_string(a.samples) + "}";
    std::printf("{\"curve\":%s,\"report\":%s,\"config_echo\":%s}\n", curve_json(curve, "K").c_str(),
                report_json(rep).c_str(), echo.c_str());
    return 0;
}

int run_bounds(const BoundsArgs& a) {
    const steklov::ManifoldSpec man(a.n, a.R, steklov::parse_warp(a.warp));
    std::string reports = "[" + bounds_report_json(steklov::verify_xi_bounds(man, std::max(a.m, 1), a.rtol)) +
                          "," + bounds_report_json(steklov::verify_eta_bounds(man, a.m, a.rtol)) + "," +
                          bounds_report_json(steklov::verify_eta_ratio(man, a.m, a.rtol)) + "]";
    std::string echo = "{\"command\":\"bounds\",\"warp\":" + jstr(steklov::to_string(man.warp)) +
                       ",\"n\":" + std::to_string(a.n) + ",\"R\":" + fnum(a.R) + ",\"m\":" +
                       std::to_string(a.m) + ",\"rtol\":" + fnum(a.rtol) + "}";
    std::printf("{\"reports\":%s,\"config_echo\":%s}\n", reports.c_str(), echo.c_str());
    return 0;
}

int run_fuzz(const FuzzArgs& a) {
    const std::vector<steklov::BoundsReport> reports =
        steklov::fuzz_bounds(a.n, a.m_max, a.trials, a.seed, a.rtol);
    double min_rel = std::numeric_limits<double>::infinity();
    int violations = 0;
    std::string body = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) body += ',';
        body += bounds_report_json(reports[i]);
        const steklov::BoundsReport& r = reports[i];
        const double scale = std::max(std::abs(r.value), 1e-300);
        double rel = std::numeric_limits<double>::infinity();
        if (r.lower_slack) rel = std::min(rel, *r.lower_slack / scale);
        if (r.upper_slack) rel = std::min(rel, *r.upper_slack / scale);
        min_rel = std::min(min_rel, rel);
        if (rel < -1e-8) ++violations;
    }
    body += "]";
    std::string echo = "{\"command\":\"fuzz\",\"n\":" + std::to_string(a.n) + ",\"m_max\":" +
                       std::to_string(a.m_max) + ",\"trials\":" + std::to_string(a.trials) +
                       ",\"seed\":" + std::to_string(a.seed) + ",\"rtol\":" + fnum(a.rtol) + "}";
    std::printf("{\"trials\":%d,\"summary\":{\"min_relative_slack\":%s,\"violations\":%d},"
                "\"reports\":%s,\"config_echo\":%s}\n",
                a.trials, (reports.empty() ? std::string("null") : fnum(min_rel)).c_str(),
                violations, body.c_str(), echo.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steklov spectra of warped-product balls"};
    app.require_subcommand(1);

    EigArgs eig;
    CLI::App* eig_cmd = app.add_subcommand("eig", "evaluate one eigenvalue");
    eig_cmd->add_option("--warp", eig.warp, "warp spec")->required();
    eig_cmd->add_option("--n", eig.n, "dimension")->required();
    eig_cmd->add_option("--R", eig.R, "ball radius")->required();
    eig_cmd->add_option("--problem", eig.problem, "sigma|xi|eta")->required();
    eig_cmd->add_option("--m", eig.m, "band index")->required();
    eig_cmd->add_option("--method", eig.method, "auto|ode|closed|coupled");
    eig_cmd->add_option("--rtol", eig.rtol, "ODE relative tolerance");

    ScanArgs scan;
    CLI::App* scan_cmd = app.add_subcommand("scan", "normalized curve over a radius grid");
    scan_cmd->add_option("--geometry", scan.geometry, "sphere|hyperbolic")->required();
    scan_cmd->add_option("--n", scan.n, "dimension")->required();
    scan_cmd->add_option("--problem", scan.problem, "sigma|xi|eta")->required();
    scan_cmd->add_option("--m", scan.m, "band index")->required();
    scan_cmd->add_option("--normalizer", scan.normalizer, "R|sinR|tanHalf|sinHalf")->required();
    scan_cmd->add_option("--power", scan.power, "normalizer power (default 3 for xi, else 1)");
    scan_cmd->add_option("--r-min", scan.r_min, "grid start");
    scan_cmd->add_option("--r-max", scan.r_max, "grid end");
    scan_cmd->add_option("--samples", scan.samples, "grid size");
    scan_cmd->add_option("--margin", scan.margin, "difference margin (default 1e-9 * max)");
    scan_cmd->add_option("--rtol", scan.rtol, "ODE relative tolerance");
    scan_cmd->add_option("--out", scan.out, "json|csv");

    CriticalArgs crit;
    CLI::App* crit_cmd = app.add_subcommand("critical", "bisect the slope sign change");
    crit_cmd->add_option("--geometry", crit.geometry, "sphere|hyperbolic")->required();
    crit_cmd->add_option("--n", crit.n, "dimension")->required();
    crit_cmd->add_option("--problem", crit.problem, "sigma|xi|eta")->required();
    crit_cmd->add_option("--m", crit.m, "band index")->required();
    crit_cmd->add_option("--normalizer", crit.normalizer, "R|sinR|tanHalf|sinHalf")->required();
    crit_cmd->add_option("--power", crit.power, "normalizer power");
    crit_cmd->add_option("--bracket-lo", crit.lo, "bracket start")->required();
    crit_cmd->add_option("--bracket-hi", crit.hi, "bracket end")->required();
    crit_cmd->add_option("--tol", crit.tol, "bracket width target");
    crit_cmd->add_option("--rtol", crit.rtol, "ODE relative tolerance");

    CurvatureArgs curv;
    CLI::App* curv_cmd = app.add_subcommand("curvature", "spectrum along a curvature family");
    curv_cmd->add_option("--constraint", curv.constraint, "area|radius")->required();
    curv_cmd->add_option("--A", curv.A, "fixed area");
    curv_cmd->add_option("--rho", curv.rho, "fixed radius");
    curv_cmd->add_option("--problem", curv.problem, "sigma|xi|eta")->required();
    curv_cmd->add_option("--m", curv.m, "band index")->required();
    curv_cmd->add_option("--k-min", curv.k_min, "curvature grid start");
    curv_cmd->add_option("--k-max", curv.k_max, "grid end (default 99% of the bound)");
    curv_cmd->add_option("--samples", curv.samples, "grid size");
    curv_cmd->add_option("--margin", curv.margin, "difference margin");
    curv_cmd->add_option("--out", curv.out, "json|csv");

    BoundsArgs bnd;
    CLI::App* bnd_cmd = app.add_subcommand("bounds", "verify sharp bounds at one manifold");
    bnd_cmd->add_option("--warp", bnd.warp, "warp spec")->required();
    bnd_cmd->add_option("--n", bnd.n, "dimension")->required();
    bnd_cmd->add_option("--R", bnd.R, "ball radius")->required();
    bnd_cmd->add_option("--m", bnd.m, "band index")->required();
    bnd_cmd->add_option("--rtol", bnd.rtol, "ODE relative tolerance");

    FuzzArgs fuzz;
    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "randomized bound verification");
    fuzz_cmd->add_option("--n", fuzz.n, "dimension")->required();
    fuzz_cmd->add_option("--m-max", fuzz.m_max, "largest band index");
    fuzz_cmd->add_option("--trials", fuzz.trials, "number of sampled warps")->required();
    fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed")->required();
    fuzz_cmd->add_option("--rtol", fuzz.rtol, "ODE relative tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }

    try {
        if (eig_cmd->parsed()) return run_eig(eig);
        if (scan_cmd->parsed()) return run_scan(scan);
        if (crit_cmd->parsed()) return run_critical(crit);
        if (curv_cmd->parsed()) return run_curvature(curv);
        if (bnd_cmd->parsed()) return run_bounds(bnd);
        if (fuzz_cmd->parsed()) return run_fuzz(fuzz);
    } catch (const std::exception& e) {
        const char* kind = "internal";
        if (dynamic_cast<const steklov::domain_error*>(&e)) kind = "domain";
        else if (dynamic_cast<const steklov::solver_error*>(&e)) kind = "solver";
        else if (dynamic_cast<const steklov::numeric_error*>(&e)) kind = "numeric";
        else if (dynamic_cast<const steklov::bracket_error*>(&e)) kind = "bracket";
        else if (dynamic_cast<const steklov::sampling_error*>(&e)) kind = "sampling";
        std::fprintf(stderr, "{\"error\":{\"kind\":%s,\"message\":%s}}\n", jstr(kind).c_str(),
                     jstr(e.what()).c_str());
        return 3;
    }
    return 2;
}
