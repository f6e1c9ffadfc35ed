#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "halfstat/engine.hpp"
#include "halfstat/random.hpp"
#include "report.hpp"

namespace halfstat::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("--circuit",
                                        "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct UnitarySource {
    std::optional<std::string> circuit_path;
    std::optional<double> theta;
    std::string model = "a";

    void add_options(CLI::App* cmd, bool model_choice = true) {
        auto* c = cmd->add_option("--circuit", circuit_path,
                                  "circuit DSL file");
        auto* t = cmd->add_option("--theta", theta,
                                  "mixing angle in radians for the built-in "
                                  "fixtures");
        c->excludes(t);
        if (model_choice)
            cmd->add_option("--model", model,
                            "built-in fixture used with --theta: a (single "
                            "BS, d=2) or b (two BS, d=3)")
                ->check(CLI::IsMember({"a", "b"}));
    }

    Multiport resolve() const {
        if (circuit_path) return compose(parse_circuit(read_file(*circuit_path)));
        if (theta) return model == "b" ? model_b(*theta) : model_a(*theta);
        throw CLI::RequiredError("--circuit or --theta");
    }

    std::map<std::string, std::string> describe() const {
        std::map<std::string, std::string> p;
        if (circuit_path) p["circuit"] = *circuit_path;
        if (theta) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", *theta);
            p["theta"] = buf;
            p["model"] = model;
        }
        return p;
    }
};

std::pair<int, int> parse_input_modes(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--input", "expected '<i>,<j>'");
    try {
        return {std::stoi(text.substr(0, comma)),
                std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--input", "expected '<i>,<j>'");
    }
}

void emit(std::ostream& out, const Report& report, const std::string& format) {
    out << render_report(report, parse_format(format));
}

int run_validate(const std::string& path, double tol, std::ostream& out) {
    const auto spec = parse_circuit(read_file(path));
    const auto mp = compose(spec);
    // compose already enforces unitarity at the default tolerance; report
    // the actual deviation against the requested one
    const double dev = unitarity_deviation(mp.matrix());
    if (dev > tol)
        throw ValidationError("composed matrix exceeds tolerance", dev);
    out << "ok: dim " << spec.dim << ", " << spec.stages.size()
        << " stage(s), unitarity deviation " << dev << "\n";
    return 0;
}

int run_show(const UnitarySource& src, const std::string& format,
             std::ostream& out) {
    const auto mp = src.resolve();
    const auto& m = mp.matrix();
    if (format == "csv") {
        out << "row,col,re,im\n";
        char buf[160];
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", i + 1,
                              j + 1, m(i, j).real(), m(i, j).imag());
                out << buf;
            }
        return 0;
    }
    if (format == "json") {
        out << "{\n  \"command\": \"show\",\n  \"dim\": " << mp.dim()
            << ",\n  \"matrix\": [\n";
        char buf[96];
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out << "    [";
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::snprintf(buf, sizeof buf, "[%.17g, %.17g]",
                              m(i, j).real(), m(i, j).imag());
                out << buf << (j + 1 < m.cols() ? ", " : "");
            }
            out << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
        return 0;
    }
    char buf[96];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "  %+.6f%+.6fi", m(i, j).real(),
                          m(i, j).imag());
            out << buf;
        }
        out << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"two-particle multiport statistics"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format/--tol after the subcommand

    std::string format = "pretty";
    double tol = 1e-10;
    app.add_option("--format", format, "pretty, json or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--tol", tol, "numerical tolerance")
        ->capture_default_str();

    // validate
    auto* validate = app.add_subcommand("validate",
                                        "parse a circuit file and check "
                                        "unitarity");
    std::string validate_path;
    validate->add_option("--circuit", validate_path, "circuit DSL file")
        ->required();

    // show
    auto* show = app.add_subcommand("show", "print the composed unitary");
    UnitarySource show_src;
    show_src.add_options(show);

    // expect
    auto* expect = app.add_subcommand("expect",
                                      "expectation value of an observable");
    UnitarySource expect_src;
    expect_src.add_options(expect);
    std::string expect_input, expect_obs, expect_stats = "all";
    expect->add_option("--input", expect_input, "input modes '<i>,<j>'")
        ->required();
    expect->add_option("--observable", expect_obs,
                       "n:<k>, P:<k>,<l> or corr:<k>,<l>")
        ->required();
    expect->add_option("--stats", expect_stats,
                       "classical, boson, fermion or all")
        ->check(CLI::IsMember({"classical", "boson", "fermion", "all"}))
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify",
                                      "check classical == (boson+fermion)/2");
    UnitarySource verify_src;
    verify_src.add_options(verify);
    std::string verify_input, verify_obs;
    int trials = 0, trials_dim = 4;
    unsigned long long seed = 1;
    verify->add_option("--input", verify_input, "input modes '<i>,<j>'");
    verify->add_option("--observable", verify_obs,
                       "n:<k>, P:<k>,<l> or corr:<k>,<l>");
    verify->add_option("--random-trials", trials,
                       "run this many randomized trials instead of a single "
                       "case");
    verify->add_option("--dim", trials_dim, "mode count for random trials")
        ->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();

    // tables and scan
    auto* t1 = app.add_subcommand("table1",
                                  "single-BS mean/variance/correlation table");
    double t1_theta = M_PI / 4;
    t1->add_option("--theta", t1_theta, "mixing angle")->required();
    auto* t2 = app.add_subcommand("table2",
                                  "two-BS pair-probability table");
    double t2_theta = M_PI / 4;
    t2->add_option("--theta", t2_theta, "mixing angle")->required();

    auto* scan = app.add_subcommand("hom-scan",
                                    "coincidence probability versus theta");
    double from = 0.0, to = M_PI / 2;
    int points = 50;
    scan->add_option("--from", from, "first angle")->capture_default_str();
    scan->add_option("--to", to, "last angle")->capture_default_str();
    scan->add_option("--points", points, "number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return run_validate(validate_path, tol, out);
        if (show->parsed()) return run_show(show_src, format, out);

        if (expect->parsed()) {
            const auto mp = expect_src.resolve();
            const auto [i, j] = parse_input_modes(expect_input);
            const auto obs = parse_observable(expect_obs);
            auto params = expect_src.describe();
            params["stats"] = expect_stats;
            ExpectationReport rep;
            rep.observable = obs.label();
            rep.input_i = i;
            rep.input_j = j;
            rep.value_classical = rep.value_boson = rep.value_fermion =
                std::nan("");
            rep.identity_residual = std::nan("");
            const bool all = expect_stats == "all";
            if (all || expect_stats == "classical")
                rep.value_classical =
                    expectation(mp, {i, j, Statistics::Classical}, obs);
            if (all || expect_stats == "boson")
                rep.value_boson =
                    expectation(mp, {i, j, Statistics::Boson}, obs);
            if (all || expect_stats == "fermion") {
                if (i == j && !all)
                    throw ExclusionError(
                        "impossible to prepare two identical fermions "
                        "simultaneously in the same mode");
                if (i != j)
                    rep.value_fermion =
                        expectation(mp, {i, j, Statistics::Fermion}, obs);
            }
            if (all && i != j)
                rep.identity_residual = std::abs(
                    rep.value_classical -
                    0.5 * (rep.value_boson + rep.value_fermion));
            emit(out, from_expectation("expect", rep, params), format);
            return 0;
        }

        if (verify->parsed()) {
            if (trials > 0) {
                std::mt19937_64 rng(seed);
                std::uniform_int_distribution<int> mode(1, trials_dim);
                double worst = 0.0;
                for (int n = 0; n < trials; ++n) {
                    const auto u = random_unitary(trials_dim, rng);
                    const auto obs = ObservableSpec::custom_op(
                        random_invariant_hermitian(trials_dim, rng));
                    int i = mode(rng), j = mode(rng);
                    while (j == i) j = mode(rng);
                    const auto rep = verify_half_identity(u, i, j, obs, tol);
                    worst = std::max(worst, rep.identity_residual);
                }
                out << "ok: " << trials << " randomized trials at d="
                    << trials_dim << ", worst residual " << worst << "\n";
                return 0;
            }
            if (verify_input.empty() || verify_obs.empty())
                throw CLI::RequiredError("--input and --observable");
            const auto mp = verify_src.resolve();
            const auto [i, j] = parse_input_modes(verify_input);
            const auto obs = parse_observable(verify_obs);
            auto params = verify_src.describe();
            const auto rep = (i == j) ? same_mode_check(mp, i, obs, tol)
                                      : verify_half_identity(mp, i, j, obs,
                                                             tol);
            emit(out, from_expectation("verify", rep, params), format);
            return 0;
        }

        if (t1->parsed()) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", t1_theta);
            emit(out, from_table("table1", table1(t1_theta),
                                 {{"theta", buf}}),
                 format);
            return 0;
        }
        if (t2->parsed()) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", t2_theta);
            emit(out, from_table("table2", table2(t2_theta),
                                 {{"theta", buf}}),
                 format);
            return 0;
        }
        if (scan->parsed()) {
            std::vector<double> thetas;
            if (points == 1) {
                thetas.push_back(from);
            } else {
                for (int n = 0; n < points; ++n)
                    thetas.push_back(from + (to - from) * n / (points - 1));
            }
            emit(out, from_hom_scan(hom_scan(thetas), {}), format);
            return 0;
        }
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ExclusionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // ParseError, ValidationError, InvarianceError, ExclusionError
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace halfstat::cli
