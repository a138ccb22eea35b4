#include "lagcal/equations.hpp"
#include "lagcal/identities.hpp"
#include "lagcal/residual.hpp"
#include "lagcal/specfun.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

double parse_double(const std::string& text) {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size())
        throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

std::pair<double, double> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected 'x,y' but got '" + text + "'");
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

struct PolicyFlags {
    lagcal::SeriesEvalPolicy policy;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-terms", policy.max_terms, "Series term cap")
            ->capture_default_str();
        cmd->add_option("--rel-stop", policy.rel_stop, "Relative stopping threshold")
            ->capture_default_str();
        cmd->add_option("--arg-bound", policy.arg_bound, "Largest accepted |argument|")
            ->capture_default_str();
    }
};

struct GridFlags {
    double x_min = 0.0, x_max = 1.0;
    int nx = 201;
    double t_min = 0.0, t_max = 1.0;
    int nt = 401;

    void attach(CLI::App* cmd) {
        cmd->add_option("--x-min", x_min, "Spatial grid start")->capture_default_str();
        cmd->add_option("--x-max", x_max, "Spatial grid stop")->capture_default_str();
        cmd->add_option("--nx", nx, "Spatial node count")->capture_default_str();
        cmd->add_option("--t-min", t_min, "Temporal grid start")->capture_default_str();
        cmd->add_option("--t-max", t_max, "Temporal grid stop")->capture_default_str();
        cmd->add_option("--nt", nt, "Temporal node count")->capture_default_str();
    }

    lagcal::Grid1D grid_x() const { return {x_min, x_max, nx}; }
    lagcal::Grid1D grid_t() const { return {t_min, t_max, nt}; }
};

struct EquationFlags {
    std::string eq;
    double alpha = 0.5;
    double beta = 0.5;
    double nu = 1.0;
    int power_n = 2;
    std::string parse_mode = "literal";
    std::string profile = "tricomi";

    void attach(CLI::App* cmd) {
        cmd->add_option("--eq", eq, "Equation family name")->required();
        cmd->add_option("--alpha", alpha, "Fractional order alpha")->capture_default_str();
        cmd->add_option("--beta", beta, "Fractional order beta")->capture_default_str();
        cmd->add_option("--nu", nu, "Operator weight nu")->capture_default_str();
        cmd->add_option("--n", power_n, "Nonlinearity power n")->capture_default_str();
        cmd->add_option("--parse-mode", parse_mode,
                        "Power-n nonlinearity reading: literal | paper-condition")
            ->capture_default_str();
        cmd->add_option("--profile", profile,
                        "Temporal profile for the selectable-operator families: "
                        "exponential | tricomi | mlf | hbw")
            ->capture_default_str();
    }

    lagcal::EquationSpec make(double k) const {
        lagcal::EquationSpec spec;
        spec.family = lagcal::family_from_name(eq);
        spec.alpha = alpha;
        spec.beta = beta;
        spec.nu = nu;
        spec.power_n = power_n;
        if (parse_mode == "literal")
            spec.parse_mode = lagcal::PowerParseMode::Literal;
        else if (parse_mode == "paper-condition")
            spec.parse_mode = lagcal::PowerParseMode::PaperCondition;
        else
            throw std::invalid_argument("unknown parse mode: '" + parse_mode + "'");
        spec.ot_profile = lagcal::profile_from_name(profile);
        spec.coef_k = k;
        spec.validate();
        return spec;
    }
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int run_eval(const std::string& fn, const std::vector<std::string>& at, int n,
             const EquationFlags& params, const PolicyFlags& pol, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    if (fn == "laguerre_poly") {
        out << "x,y,value\n";
        for (const auto& point : at) {
            auto [x, y] = parse_pair(point);
            out << num(x) << ',' << num(y) << ',' << num(lagcal::laguerre_poly(n, x, y))
                << '\n';
        }
        return 0;
    }
    out << "arg,value\n";
    for (const auto& point : at) {
        double v = parse_double(point);
        double value = 0.0;
        if (fn == "c0")
            value = lagcal::tricomi_c0(v, pol.policy);
        else if (fn == "mlf")
            value = lagcal::mittag_leffler(params.alpha, v, pol.policy);
        else if (fn == "hbw")
            value = lagcal::hyper_bessel_w(params.alpha, params.beta, params.nu, v, pol.policy);
        else if (fn == "lower_l")
            value = lagcal::lower_l(n, v);
        else
            throw std::invalid_argument("unknown function: '" + fn + "'");
        out << num(v) << ',' << num(value) << '\n';
    }
    return 0;
}

/// Rebuilds the ansatz at a forced rate: the variable-coefficient families
/// absorb the rate into the equation itself, everything else keeps the
/// equation and re-pairs the profile.
lagcal::SolutionAnsatz make_ansatz(lagcal::EquationSpec& eq, double R, double k,
                                   bool forced, double forced_r) {
    using lagcal::Family;
    if (forced &&
        (eq.family == Family::VarCoefBurgers || eq.family == Family::VarCoefGeneralOt))
        eq.coef_r = forced_r;
    lagcal::SolutionAnsatz ansatz = lagcal::build_solution(eq, R, k);
    if (forced) ansatz.profile = lagcal::profile_for(eq, forced_r);
    return ansatz;
}

int run_verify(EquationFlags& eqf, double R, double k, bool forced, double forced_r,
               const GridFlags& grid, const std::string& mode_str, double tol, bool tol_set,
               const PolicyFlags& pol) {
    lagcal::EquationSpec eq = eqf.make(k);
    lagcal::SolutionAnsatz ansatz = make_ansatz(eq, R, k, forced, forced_r);
    lagcal::ResidualMode mode = lagcal::mode_from_name(mode_str);
    if (!tol_set) tol = mode == lagcal::ResidualMode::Fd ? 1e-2 : 1e-6;
    lagcal::ResidualReport report =
        lagcal::verify(eq, ansatz, grid.grid_x(), grid.grid_t(), tol, mode, pol.policy);
    std::cout << lagcal::report_to_json(report) << '\n';
    return report.pass ? 0 : 1;
}

int run_dispersion(const EquationFlags& eqf, double k) {
    if (k == 0.0) throw std::invalid_argument("dispersion requires k != 0");
    lagcal::EquationSpec eq = eqf.make(k);
    json j;
    j["equation"] = lagcal::family_name(eq.family);
    j["k"] = k;
    auto agree = [](double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    using lagcal::Family;
    if (eq.family == Family::BurgersPowerN) {
        j["n"] = eq.power_n;
        lagcal::EquationSpec literal = eq;
        literal.parse_mode = lagcal::PowerParseMode::Literal;
        double numeric = lagcal::solve_dispersion_numeric(literal, k);
        double cf_literal = lagcal::dispersion(literal, k);
        lagcal::EquationSpec stated = eq;
        stated.parse_mode = lagcal::PowerParseMode::PaperCondition;
        double cf_stated = lagcal::dispersion(stated, k);
        j["literal"] = {{"closed_form", cf_literal},
                        {"numeric", numeric},
                        {"agree", agree(cf_literal, numeric)}};
        j["paper_condition"] = {
            {"closed_form", cf_stated},
            {"numeric", numeric},
            {"agree", agree(cf_stated, numeric)},
            {"note", "numeric root solved from the literal reading of the nonlinearity"}};
    } else if (eq.family == Family::VarCoefBurgers || eq.family == Family::VarCoefGeneralOt) {
        j["closed_form"] = lagcal::dispersion(eq, k);
        j["numeric"] = nullptr;
        j["agree"] = nullptr;
        j["note"] = "every rate balances this family; the residual does not constrain r";
    } else {
        double cf = lagcal::dispersion(eq, k);
        double numeric = lagcal::solve_dispersion_numeric(eq, k);
        j["closed_form"] = cf;
        j["numeric"] = numeric;
        j["agree"] = agree(cf, numeric);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_identities(const std::string& dump_dir) {
    auto results = lagcal::run_identities();
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("[%s] %-24s max deviation %11.4e  (tol %.0e)\n",
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_deviation,
                    r.tolerance);
        if (!r.warning.empty()) std::printf("       note: %s\n", r.warning.c_str());
        all_passed = all_passed && r.passed;
    }
    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (const auto& [name, series] : lagcal::golden_series()) {
            std::string path = dump_dir + "/" + name + ".txt";
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f << lagcal::serialize_series(series);
        }
    }
    return all_passed ? 0 : 1;
}

int run_table(EquationFlags& eqf, double R, double k, bool forced, double forced_r,
              const GridFlags& grid, const std::string& mode_str, const std::string& out_path,
              const PolicyFlags& pol) {
    lagcal::EquationSpec eq = eqf.make(k);
    lagcal::SolutionAnsatz ansatz = make_ansatz(eq, R, k, forced, forced_r);
    lagcal::ResidualMode mode = lagcal::mode_from_name(mode_str);
    lagcal::Grid1D gx = grid.grid_x();
    lagcal::Grid1D gt = grid.grid_t();
    lagcal::ResidualField field = lagcal::residual(eq, ansatz, gx, gt, mode, pol.policy);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "x,t,u,residual\n";
    for (int i = 0; i < gx.count; ++i) {
        for (int j = 0; j < gt.count; ++j) {
            double x = gx.node(i);
            double t = gt.node(j);
            double u = ansatz.value(x, t, pol.policy);
            double res = field.values[static_cast<std::size_t>(i) * gt.count + j];
            out << num(x) << ',' << num(t) << ',' << num(u) << ',';
            if (std::isfinite(res)) out << num(res);
            out << '\n';
        }
    }
    if (!out_path.empty() && !file)
        throw std::runtime_error("write failed: " + out_path);
    return 0;
}

/// Registers --config on the subcommand and lets later occurrences of a
/// scalar flag override earlier ones, so command-line flags win over the
/// expanded config file.
void attach_config(CLI::App* cmd) {
    cmd->add_option("--config", "Flat key=value file mirroring the flags "
                                "(flags override the file)");
    for (CLI::Option* opt : cmd->get_options())
        if (opt->get_expected_max() == 1)
            opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Expands `<sub> ... --config FILE ...` by splicing the file's key=value
/// lines in as --key value tokens right after the subcommand, before the
/// explicit flags.  Unknown keys then fail parsing like unknown flags.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() < 2) return args;
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config file: " + path);
    std::vector<std::string> spliced{args[0]};
    std::string line;
    while (std::getline(f, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line is not key=value: " + line);
        const std::string key = trimmed(line.substr(0, eq));
        if (key.empty() || key == "config")
            throw std::runtime_error("bad config key in line: " + line);
        spliced.push_back("--" + key);
        spliced.push_back(trimmed(line.substr(eq + 1)));
    }
    spliced.insert(spliced.end(), args.begin() + 1, args.end());
    return spliced;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre-calculus special functions and separable-solution verification"};
    app.require_subcommand(1);
    int rc = 0;

    // --- eval ---------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "Evaluate a special function at points");
    std::string eval_fn;
    std::vector<std::string> eval_at;
    int eval_n = 0;
    std::string eval_out;
    EquationFlags eval_params; // reuses alpha/beta/nu flags
    PolicyFlags eval_pol;
    eval->add_option("--fn", eval_fn, "c0 | mlf | hbw | laguerre_poly | lower_l")->required();
    eval->add_option("--at", eval_at, "Evaluation points (repeatable; x,y pairs for laguerre_poly)")
        ->required()
        ->expected(-1);
    eval->add_option("--alpha", eval_params.alpha, "Order alpha (mlf, hbw)")
        ->capture_default_str();
    eval->add_option("--beta", eval_params.beta, "Order beta (hbw)")->capture_default_str();
    eval->add_option("--nu", eval_params.nu, "Weight nu (hbw)")->capture_default_str();
    eval->add_option("--n", eval_n, "Degree n (laguerre_poly, lower_l)")->capture_default_str();
    eval->add_option("--out", eval_out, "Output path (default: standard output)");
    eval_pol.attach(eval);
    attach_config(eval);
    eval->callback([&] { rc = run_eval(eval_fn, eval_at, eval_n, eval_params, eval_pol, eval_out); });

    // --- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Check a separable solution against its equation");
    EquationFlags verify_eq;
    GridFlags verify_grid;
    PolicyFlags verify_pol;
    double verify_R = 1.0, verify_k = 1.0, verify_tol = 1e-6, verify_force_r = 0.0;
    std::string verify_mode = "exact-time";
    verify_eq.attach(verify);
    verify->add_option("--R", verify_R, "Amplitude")->capture_default_str();
    verify->add_option("--k", verify_k, "Wave number")->capture_default_str();
    auto* verify_force = verify->add_option("--force-r", verify_force_r,
                                            "Override the rate instead of the dispersion value");
    verify->add_option("--mode", verify_mode, "exact-time | fd")->capture_default_str();
    auto* verify_tol_opt =
        verify->add_option("--tol", verify_tol, "Pass threshold on the normalized residual "
                                                "(default 1e-6 exact-time, 1e-2 fd)");
    verify_grid.attach(verify);
    verify_pol.attach(verify);
    attach_config(verify);
    verify->callback([&] {
        rc = run_verify(verify_eq, verify_R, verify_k, verify_force->count() > 0, verify_force_r,
                        verify_grid, verify_mode, verify_tol, verify_tol_opt->count() > 0,
                        verify_pol);
    });

    // --- dispersion ----------------------------------------------------
    auto* disp = app.add_subcommand("dispersion", "Closed-form and numeric rate for a wave number");
    EquationFlags disp_eq;
    double disp_k = 1.0;
    disp_eq.attach(disp);
    disp->add_option("--k", disp_k, "Wave number (nonzero)")->capture_default_str();
    attach_config(disp);
    disp->callback([&] { rc = run_dispersion(disp_eq, disp_k); });

    // --- identities ----------------------------------------------------
    auto* ident = app.add_subcommand("identities", "Run the operator identity suite");
    std::string ident_dump;
    ident->add_option("--dump-golden", ident_dump,
                      "Directory for serialized reference series (must exist)");
    attach_config(ident);
    ident->callback([&] { rc = run_identities(ident_dump); });

    // --- table ----------------------------------------------------------
    auto* table = app.add_subcommand("table", "Export x,t,u,residual rows for plotting");
    EquationFlags table_eq;
    GridFlags table_grid;
    PolicyFlags table_pol;
    double table_R = 1.0, table_k = 1.0, table_force_r = 0.0;
    std::string table_mode = "exact-time", table_out;
    table_eq.attach(table);
    table->add_option("--R", table_R, "Amplitude")->capture_default_str();
    table->add_option("--k", table_k, "Wave number")->capture_default_str();
    auto* table_force = table->add_option("--force-r", table_force_r,
                                          "Override the rate instead of the dispersion value");
    table->add_option("--mode", table_mode, "exact-time | fd")->capture_default_str();
    table->add_option("--out", table_out, "Output CSV path")->required();
    table_grid.attach(table);
    table_pol.attach(table);
    attach_config(table);
    table->callback([&] {
        rc = run_table(table_eq, table_R, table_k, table_force->count() > 0, table_force_r,
                       table_grid, table_mode, table_out, table_pol);
    });

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
