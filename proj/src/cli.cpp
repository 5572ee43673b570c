#include "slgal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "slgal/asymptotics.hpp"
#include "slgal/config.hpp"
#include "slgal/eigenfunction.hpp"
#include "slgal/frobenius.hpp"
#include "slgal/kimura.hpp"
#include "slgal/monodromy.hpp"
#include "slgal/oracle.hpp"
#include "slgal/spectra_report.hpp"

namespace slgal::cli {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw UsageError("not a number: \"" + std::string(s) + "\"");
    }
    return v;
}

std::vector<double> parse_list(const std::string& text, char sep) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(parse_double(std::string_view(text).substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto v = parse_list(text, ':');
    if (v.size() != 2 || !(v[0] < v[1])) throw UsageError("range must be lo:hi with lo < hi, got \"" + text + "\"");
    return {v[0], v[1]};
}

ordered cjson(Complex z) { return ordered{{"re", z.real()}, {"im", z.imag()}}; }

ordered mjson(const Matrix2C& m) {
    return ordered::array({ordered::array({cjson(m.a11), cjson(m.a12)}), ordered::array({cjson(m.a21), cjson(m.a22)})});
}

std::array<Complex, 2> eigenvalues_of(const Matrix2C& m) {
    const Complex half = 0.5 * m.trace();
    const Complex disc = std::sqrt(half * half - m.det());
    return order_descending({half + disc, half - disc});
}

struct Options {
    std::string family, params, problem_file, lambda = "0", range, x = "-10:10:0.1", out_path, format, method = "closed";
    std::string re = "-1.2:0.2", im = "-1:1";
    int grid = 0;
    double tol = 0.0;
    bool psymbol = false, cross_check = false, normalize = false, no_verify = false;
};

SLProblem load_problem(const Options& o) {
    const bool inline_src = !o.family.empty(), file_src = !o.problem_file.empty();
    if (inline_src == file_src) throw UsageError("give exactly one problem source: --family/--params or --problem");
    if (file_src) {
        std::ifstream in(o.problem_file);
        if (!in) throw UsageError("cannot read problem file \"" + o.problem_file + "\"");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_problem(ss.str());
    }
    if (o.params.empty()) throw UsageError("--family needs --params");
    const auto v = parse_list(o.params, ',');
    if (o.family == "hulthen") {
        if (v.size() != 3) throw UsageError("hulthen takes three parameters a1,a2,a3");
        return make_hulthen(v[0], v[1], v[2]);
    }
    if (o.family == "allen_cahn") {
        if (v.size() != 1) throw UsageError("allen_cahn takes one parameter alpha");
        return make_allen_cahn(v[0]);
    }
    throw UsageError("unknown family \"" + o.family + "\" (custom problems use --problem)");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    if (o.format.empty()) return;
    for (const char* a : allowed) {
        if (o.format == a) return;
    }
    throw UsageError("format \"" + o.format + "\" is not available for this command");
}

ordered candidate_json(const SLProblem& p, const CandidateEigenvalue& c, bool verified) {
    const double lam = c.lambda.real();
    ordered j;
    j["lambda"] = lam;
    j["sqrt_lambda"] = lam >= 0 ? json(std::sqrt(lam)) : json(nullptr);
    j["k"] = c.k;
    j["sign_pattern"] = c.sign_pattern;
    j["kimura_distance"] = c.kimura_distance;
    j["verified"] = verified ? verify(p, c.lambda).eigenvalue_confirmed : false;
    return j;
}

ordered sides_json(const SpectrumClass& sc, const AsymptoticData& d, Complex lambda) {
    ordered out;
    for (const auto& [name, side, rep] :
         {std::tuple{"minus", Side::Minus, &sc.minus}, std::tuple{"plus", Side::Plus, &sc.plus}}) {
        out[name] = ordered{{"kappa", ordered::array({cjson(rep->kappa[0]), cjson(rep->kappa[1])})},
                            {"decay", rep->decay_ok},
                            {"printed_condition", printed_condition(d, lambda, side)}};
    }
    return out;
}

ordered point_json(const SingularPoint& s) {
    ordered j;
    j["location"] = s.at_infinity ? json("inf") : json(cjson(s.location));
    j["kind"] = to_string(s.kind);
    j["source"] = to_string(s.source);
    j["order_p"] = s.order_p;
    j["order_q"] = s.order_q;
    return j;
}

void cmd_analyze(const Options& o, std::ostream& out) {
    require_format(o, {"json"});
    const SLProblem p = load_problem(o);
    const Complex lambda = parse_complex(o.lambda);
    const AsymptoticData d = endpoint_data(p);
    const SpectrumClass sc = classify_lambda(d, lambda);
    ordered j;
    j["family"] = p.family_name();
    j["lambda"] = cjson(lambda);
    j["endpoint"] = ordered{{"mu_minus", d.mu_minus}, {"mu_plus", d.mu_plus}, {"nu_minus", d.nu_minus},
                            {"nu_plus", d.nu_plus},   {"a_minus", d.a_minus}, {"a_plus", d.a_plus}};
    j["sup_nu"] = sup_nu(p);
    j["theorem2_case"] = std::string(to_string(theorem2_case(d)));
    j["class"] = std::string(to_string(sc.tag));
    j["boundary"] = sc.boundary;
    j["sides"] = sides_json(sc, d, lambda);
    ordered sing = ordered::array();
    for (const auto& s : singularities(p)) sing.push_back(point_json(s));
    j["singularities"] = sing;
    try {
        j["spectrum_class"] = std::string(to_string(classify_spectrum(p, lambda).tag));
        const KimuraReport kr = is_triangularizable(p, lambda);
        ordered sums = ordered::array();
        for (const auto& s : kr.sums) sums.push_back(cjson(s));
        j["kimura"] = ordered{{"sums", sums},
                              {"best_index", kr.best_index},
                              {"nearest_odd", kr.nearest_odd},
                              {"distance", kr.distance},
                              {"triangularizable", kr.triangularizable}};
        if (o.psymbol) {
            const PSymbol ps = p_symbol(p, lambda);
            ordered cols = ordered::array();
            for (int c = 0; c < 3; ++c) {
                cols.push_back(ordered{{"point", ps.points[c].at_infinity ? json("inf") : json(cjson(ps.points[c].location))},
                                       {"rho_plus", cjson(ps.exponents[c][0])},
                                       {"rho_minus", cjson(ps.exponents[c][1])},
                                       {"equal_exponents", ps.equal_exponents[c]},
                                       {"integer_difference", ps.integer_difference[c]}});
            }
            j["psymbol"] = ordered{{"columns", cols}, {"fuchs_sum", cjson(ps.fuchs_sum())}};
        }
    } catch (const Error& e) {
        j["psymbol_error"] = ordered{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    out << j.dump(2) << '\n';
}

void cmd_eigenvalues(const Options& o, std::ostream& out) {
    require_format(o, {"json", "csv"});
    const SLProblem p = load_problem(o);
    auto [lo, hi] = o.range.empty() ? default_window(p) : parse_range(o.range);
    std::vector<CandidateEigenvalue> ev;
    if (!(lo <= hi)) {
        ev = {};
    } else if (o.method == "closed") {
        ev = candidate_eigenvalues(p, lo, hi);
    } else if (o.method == "scan") {
        ev = scan_eigenvalues(p, lo, hi, o.grid > 0 ? o.grid : defaults::scan_grid);
    } else {
        throw UsageError("method must be closed or scan");
    }
    if (o.format == "csv") {
        out << "lambda,k,kimura_distance\n";
        for (const auto& c : ev) out << format_double(c.lambda.real()) << ',' << c.k << ',' << format_double(c.kimura_distance) << '\n';
        return;
    }
    ordered list = ordered::array();
    for (const auto& c : ev) list.push_back(candidate_json(p, c, true));
    if (!o.cross_check) {
        out << list.dump(2) << '\n';
        return;
    }
    const auto found = find_real_eigenvalues(p, lo, hi, defaults::oracle_steps);
    bool agree = found.size() == ev.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
        list[i]["miss"] = std::abs(shoot(p, ev[i].lambda).miss);
        if (agree) agree = std::abs(found[i] - ev[i].lambda.real()) < 1e-6;
    }
    ordered j;
    j["eigenvalues"] = list;
    j["oracle"] = found;
    j["agree"] = agree;
    out << j.dump(2) << '\n';
}

void cmd_eigenfunction(const Options& o, std::ostream& out) {
    require_format(o, {"csv"});
    const SLProblem p = load_problem(o);
    const Complex lambda = parse_complex(o.lambda);
    const auto ef = build_eigenfunction(p, lambda);
    if (!ef) throw Error(ErrorKind::Precondition, "no decaying terminating solution at this lambda");
    const auto g = parse_list(o.x, ':');
    if (g.size() != 3 || !(g[2] > 0) || !(g[0] <= g[1])) throw UsageError("--x must be lo:hi:step with step > 0");
    const long n = std::lround(std::floor((g[1] - g[0]) / g[2] + 1e-9)) + 1;
    std::vector<std::pair<double, Complex>> rows;
    double peak = 0.0;
    for (long i = 0; i < n; ++i) {
        double x = g[0] + static_cast<double>(i) * g[2];
        if (std::abs(x) < 1e-12 * std::max(1.0, g[2])) x = 0.0;
        const Complex v = eval_eigenfunction(*ef, p, x);
        peak = std::max(peak, std::abs(v));
        rows.emplace_back(x, v);
    }
    out << "x,psi_re,psi_im\n";
    for (auto [x, v] : rows) {
        if (o.normalize && peak > 0) v /= peak;
        out << format_double(x) << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
}

void cmd_monodromy(const Options& o, std::ostream& out) {
    require_format(o, {"json"});
    const SLProblem p = load_problem(o);
    const Complex lambda = parse_complex(o.lambda);
    const double tol = o.tol > 0 ? o.tol : defaults::eigenvector_angle_tol;
    const MonodromyResult r = compute_monodromy(p, lambda, tol);
    const PSymbol ps = p_symbol(p, lambda);
    ordered j;
    j["lambda"] = cjson(lambda);
    j["base"] = cjson(r.base);
    const std::array<const Matrix2C*, 3> ms{&r.m_minus, &r.m_plus, &r.m_third};
    const std::array<const char*, 3> names{"minus", "plus", "third"};
    const Complex i2pi(0.0, 2.0 * std::numbers::pi);
    for (int c = 0; c < 3; ++c) {
        const auto ev = eigenvalues_of(*ms[c]);
        ordered e;
        e["point"] = ps.points[c].at_infinity ? json("inf") : json(cjson(ps.points[c].location));
        e["matrix"] = mjson(*ms[c]);
        e["eigenvalues"] = ordered::array({cjson(ev[0]), cjson(ev[1])});
        e["expected"] = ordered::array({cjson(std::exp(i2pi * ps.exponents[c][0])), cjson(std::exp(i2pi * ps.exponents[c][1]))});
        e["eigen_check"] = monodromy_eigen_check(p, lambda, ps.points[c], tol);
        j[names[c]] = e;
    }
    j["angle"] = r.angle;
    j["triangularizable"] = r.triangularizable;
    j["common_eigenvector"] = r.common_eigenvector
                                  ? json(ordered::array({cjson(r.common_eigenvector->x), cjson(r.common_eigenvector->y)}))
                                  : json(nullptr);
    j["cycle_residual"] = r.cycle_residual;
    out << j.dump(2) << '\n';
}

void cmd_verify(const Options& o, std::ostream& out) {
    require_format(o, {"json"});
    const SLProblem p = load_problem(o);
    const Complex lambda = parse_complex(o.lambda);
    const VerificationReport r = verify(p, lambda, o.tol > 0 ? o.tol : defaults::verify_tol);
    ordered j;
    j["lambda"] = cjson(r.lambda);
    j["class"] = std::string(to_string(r.classification));
    j["discrete_checks_run"] = r.discrete_checks_run;
    if (r.discrete_checks_run) {
        j["kimura"] = ordered{{"triangularizable", r.kimura_triangularizable}, {"distance", r.kimura_distance}};
        j["eigenfunction_found"] = r.eigenfunction_found;
        j["residual"] = ordered{{"value", r.residual}, {"ok", r.residual_ok}};
        j["shoot"] = ordered{{"miss", r.miss}, {"ok", r.shoot_ok}};
        j["monodromy"] = ordered{{"angle", r.monodromy_angle}, {"triangularizable", r.monodromy_triangularizable}};
    }
    j["eigenvalue_confirmed"] = r.eigenvalue_confirmed;
    j["consistent"] = r.consistent;
    j["notes"] = r.notes;
    out << j.dump(2) << '\n';
}

void cmd_sweep(const Options& o, std::ostream& out) {
    require_format(o, {"csv"});
    if (!o.problem_file.empty()) throw UsageError("sweep takes --family, not --problem");
    const int n = o.grid > 0 ? o.grid : defaults::sweep_points;
    SweepTable t;
    if (o.family == "hulthen") {
        const auto v = o.params.empty() ? std::vector<double>{1.0, 10.0} : parse_list(o.params, ',');
        if (v.size() != 2) throw UsageError("hulthen sweep takes --params a1,a3");
        const auto [lo, hi] = o.range.empty() ? std::pair{0.0, 4.0} : parse_range(o.range);
        t = sweep_hulthen(v[0], v[1], lo, hi, n, !o.no_verify);
    } else if (o.family == "allen_cahn") {
        if (!o.params.empty()) throw UsageError("allen_cahn sweep takes no --params");
        const auto [lo, hi] = o.range.empty() ? std::pair{0.05, 0.95} : parse_range(o.range);
        t = sweep_allen_cahn(lo, hi, n, !o.no_verify);
    } else {
        throw UsageError("sweep needs --family hulthen or allen_cahn");
    }
    write_sweep_csv(t, out);
}

void cmd_region(const Options& o, std::ostream& out) {
    require_format(o, {"csv"});
    const SLProblem p = load_problem(o);
    const auto [rlo, rhi] = parse_range(o.re);
    const auto [ilo, ihi] = parse_range(o.im);
    write_region_csv(region_grid(p, rlo, rhi, ilo, ihi, o.grid > 0 ? o.grid : defaults::region_resolution), out);
}

void add_problem(CLI::App* c, Options& o) {
    c->add_option("--family", o.family, "hulthen or allen_cahn");
    c->add_option("--params", o.params, "comma-separated family parameters");
    c->add_option("--problem", o.problem_file, "JSON problem file");
    c->add_option("--out", o.out_path, "write output to this file");
    c->add_option("--format", o.format, "json or csv");
}

ordered error_json(const std::string& kind, const std::string& message) {
    return ordered{{"error", kind}, {"message", message}};
}

}  // namespace

Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw) {
        if (c != ' ') s.push_back(c);
    }
    if (s.empty()) throw UsageError("empty complex number");
    if (s.back() != 'i') return parse_double(s);
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_part = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double(t);
    };
    if (split == std::string::npos) return {0.0, imag_part(s)};
    return {parse_double(s.substr(0, split)), imag_part(s.substr(split))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sturm-Liouville spectra on the line via monodromy of the complexified equation", "slgal"};
    app.require_subcommand(1);
    Options o;

    auto* analyze = app.add_subcommand("analyze", "asymptotic classification and singularity census");
    auto* eigen = app.add_subcommand("eigenvalues", "discrete eigenvalues from the Kimura criterion");
    auto* efun = app.add_subcommand("eigenfunction", "sample the explicit eigenfunction as CSV");
    auto* mono = app.add_subcommand("monodromy", "numerical monodromy matrices");
    auto* ver = app.add_subcommand("verify", "cross-check one lambda with every method");
    auto* sweep = app.add_subcommand("sweep", "eigenvalue branches over a parameter");
    auto* region = app.add_subcommand("region", "spectrum classification raster");
    for (auto* c : {analyze, eigen, efun, mono, ver, sweep, region}) add_problem(c, o);
    for (auto* c : {analyze, efun, mono, ver}) c->add_option("--lambda", o.lambda, "spectral parameter a+bi");
    analyze->add_flag("--psymbol", o.psymbol, "include the Riemann P-symbol");
    eigen->add_option("--range", o.range, "lo:hi");
    eigen->add_option("--method", o.method, "closed or scan");
    eigen->add_option("--grid", o.grid, "scan grid size");
    eigen->add_flag("--cross-check", o.cross_check, "compare with the shooting oracle");
    efun->add_option("--x", o.x, "lo:hi:step");
    efun->add_flag("--normalize", o.normalize, "scale to max |psi| = 1");
    mono->add_option("--tol", o.tol, "eigenvector angle tolerance");
    ver->add_option("--tol", o.tol, "verification tolerance");
    sweep->add_option("--range", o.range, "parameter range lo:hi");
    sweep->add_option("--grid", o.grid, "number of sweep points");
    sweep->add_flag("--no-verify", o.no_verify, "skip per-eigenvalue verification");
    region->add_option("--re", o.re, "real range lo:hi");
    region->add_option("--im", o.im, "imaginary range lo:hi");
    region->add_option("--grid", o.grid, "cells per axis");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    std::ostringstream buffer;
    try {
        if (analyze->parsed()) cmd_analyze(o, buffer);
        else if (eigen->parsed()) cmd_eigenvalues(o, buffer);
        else if (efun->parsed()) cmd_eigenfunction(o, buffer);
        else if (mono->parsed()) cmd_monodromy(o, buffer);
        else if (ver->parsed()) cmd_verify(o, buffer);
        else if (sweep->parsed()) cmd_sweep(o, buffer);
        else if (region->parsed()) cmd_region(o, buffer);
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << error_json(std::string(to_string(e.kind())), e.what()).dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()).dump() << '\n';
        return 1;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(o.out_path);
        if (!f) {
            err << error_json("io", "cannot write " + o.out_path).dump() << '\n';
            return 1;
        }
        f << buffer.str();
    }
    return 0;
}

}  // namespace slgal::cli
