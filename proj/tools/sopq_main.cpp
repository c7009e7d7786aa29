// Command-line surface for the library: homotopy queries with derivation
// traces, membership and decomposition checks, and the randomized
// verification harness. JSON is the canonical machine format; text output
// is a projection of it. Exit codes: 0 success / check passed, 1 a
// mathematical check failed, 2 malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sopq/cartan_polar.hpp"
#include "sopq/homotopy_engine.hpp"
#include "sopq/json_io.hpp"
#include "sopq/transitivity.hpp"
#include "sopq/verify_suites.hpp"
#include "sopq/wedge_cover.hpp"

namespace {

struct CliConfig {
    double tol = 1e-9;
    std::uint64_t seed = 42;
    int samples = 1000;
    std::string output = "text";
    bool trace = false;
    bool verbose = false;
};

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--tol", cfg.tol, "numerical tolerance")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    cmd->add_option("--samples", cfg.samples, "sample count for randomized checks")
        ->capture_default_str();
    cmd->add_option("--output", cfg.output, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_flag("--trace", cfg.trace, "include the derivation trace");
    cmd->add_flag("--verbose", cfg.verbose, "print the effective configuration to stderr");
}

void print_config(const CliConfig& cfg) {
    if (!cfg.verbose) return;
    sopq::Json j{{"tol", cfg.tol},
                 {"seed", cfg.seed},
                 {"samples", cfg.samples},
                 {"output", cfg.output},
                 {"trace", cfg.trace}};
    std::cerr << "config " << j.dump() << "\n";
}

sopq::Signature parse_sig(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw sopq::DimensionError("--sig expects the form p,q");
    try {
        const int p = std::stoi(s.substr(0, comma));
        const int q = std::stoi(s.substr(comma + 1));
        return sopq::Signature(p, q);
    } catch (const std::logic_error&) {
        throw sopq::DimensionError("--sig expects integers p,q");
    }
}

Eigen::VectorXd parse_vector(const std::string& s) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vals.push_back(std::stod(item));
        } catch (const std::logic_error&) {
            throw sopq::DimensionError("vector entries must be numbers: got \"" + item + "\"");
        }
    }
    Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = vals[static_cast<std::size_t>(i)];
    return v;
}

sopq::Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sopq::DimensionError("cannot open file: " + path);
    try {
        return sopq::Json::parse(in);
    } catch (const sopq::Json::parse_error& e) {
        throw sopq::DimensionError("invalid JSON in " + path + ": " + e.what());
    }
}

void emit(const CliConfig& cfg, const sopq::Json& j, const std::string& text) {
    if (cfg.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_pi1(const CliConfig& cfg, int p, int q) {
    print_config(cfg);
    sopq::DerivationEngine engine;
    sopq::Derivation d = engine.pi1_so_plus(p, q);

    sopq::Json j = cfg.trace ? sopq::to_json(d) : sopq::to_json(d.group);
    std::ostringstream text;
    text << d.group.render() << "\n";
    if (cfg.trace)
        for (const auto& st : d.trace)
            text << "  [" << st.rule << "] " << (st.seq.empty() ? "" : st.seq + "  ")
                 << st.conclusion << "\n";
    emit(cfg, j, text.str());
    return 0;
}

int run_pi_table(const CliConfig& cfg, int pmax, int qmax) {
    print_config(cfg);
    sopq::DerivationEngine engine;
    sopq::Json rows = sopq::Json::array();
    std::ostringstream text;
    for (int p = 0; p <= pmax; ++p) {
        for (int q = 0; q <= qmax; ++q) {
            const sopq::FgAbelianGroup g = engine.pi1_so_plus(p, q).group;
            rows.push_back(sopq::Json{{"p", p}, {"q", q}, {"group", g.render()}});
            text << "pi1(SO+(" << p << "," << q << ")) = " << g.render() << "\n";
        }
    }
    emit(cfg, sopq::Json{{"schema", "1"}, {"table", rows}}, text.str());
    return 0;
}

int run_member(const CliConfig& cfg, const std::string& sig_str, const std::string& path) {
    print_config(cfg);
    const sopq::Signature sig = parse_sig(sig_str);
    const sopq::Json doc = load_json_file(path);
    const Eigen::MatrixXd m =
        doc.is_object() && doc.contains("rows") ? sopq::matrix_from_json(doc["rows"])
                                                : sopq::matrix_from_json(doc);
    const sopq::MembershipReport r = sopq::is_member(sig, m, cfg.tol);
    std::ostringstream text;
    text << "in_O=" << (r.in_O ? "true" : "false") << " in_SO=" << (r.in_SO ? "true" : "false")
         << " form_residual=" << r.form_residual << " det_residual=" << r.det_residual << "\n";
    emit(cfg, sopq::to_json(r), text.str());
    return r.in_SO ? 0 : 1;
}

int run_complete(const CliConfig& cfg, const std::string& sig_str, const std::string& point) {
    print_config(cfg);
    const sopq::Signature sig = parse_sig(sig_str);
    const sopq::QuasiSpherePoint pt =
        sopq::on_sphere(sig, 1, parse_vector(point), cfg.tol);
    sopq::GramSchmidtOptions opts;
    opts.seed = cfg.seed;
    const sopq::CompletionResult res = sopq::complete_to_group(sig, pt, cfg.tol, opts);
    std::ostringstream text;
    text << "column_residual=" << res.column_residual
         << " membership_residual=" << res.element.membership_residual()
         << " swaps_applied=" << res.swaps_applied << "\n";
    emit(cfg, sopq::to_json(res), text.str());
    return 0;
}

int run_polar(const CliConfig& cfg, const std::string& sig_str, const std::string& path) {
    print_config(cfg);
    const sopq::Signature sig = parse_sig(sig_str);
    const sopq::Json doc = load_json_file(path);
    const Eigen::MatrixXd m =
        doc.is_object() && doc.contains("rows") ? sopq::matrix_from_json(doc["rows"])
                                                : sopq::matrix_from_json(doc);
    const sopq::GroupElement a = sopq::GroupElement::make(sig, m, cfg.tol);
    const sopq::PolarResult res = sopq::polar_decompose(a);
    std::ostringstream text;
    text << "reconstruction_residual=" << res.reconstruction_residual << "\n";
    emit(cfg, sopq::to_json(res), text.str());
    return 0;
}

int run_chart(const CliConfig& cfg, const std::string& sig_str, const std::string& x_str,
              const std::string& y_str, const std::string& point_str) {
    print_config(cfg);
    const sopq::Signature sig = parse_sig(sig_str);
    if (!point_str.empty()) {
        const sopq::QuasiSpherePoint pt =
            sopq::on_sphere(sig, 1, parse_vector(point_str), cfg.tol);
        const sopq::ChartCoords c = sopq::unchart(pt);
        sopq::Json j{{"schema", "1"},
                     {"x", sopq::vector_to_json(c.x)},
                     {"y", sopq::vector_to_json(c.y)}};
        std::ostringstream text;
        text << "x=" << sopq::vector_to_json(c.x).dump()
             << " y=" << sopq::vector_to_json(c.y).dump() << "\n";
        emit(cfg, j, text.str());
        return 0;
    }
    if (x_str.empty() && y_str.empty())
        throw sopq::DimensionError("chart needs either --point or both --x and --y");
    const sopq::QuasiSpherePoint pt =
        sopq::chart(sig, parse_vector(x_str), parse_vector(y_str), cfg.tol);
    std::ostringstream text;
    text << sopq::vector_to_json(pt.coords()).dump() << "\n";
    emit(cfg, sopq::to_json(pt), text.str());
    return 0;
}

int run_cover(const CliConfig& cfg, bool tol_given) {
    print_config(cfg);
    const double tol = tol_given ? cfg.tol : 1e-8;
    const sopq::CoverReport r = sopq::verify_cover(cfg.samples, cfg.seed, tol);
    std::ostringstream text;
    text << "cover " << (r.pass ? "pass" : "FAIL") << " samples=" << r.samples
         << " worst_form_residual=" << r.worst_form_residual
         << " worst_mult_residual=" << r.worst_mult_residual << "\n";
    emit(cfg, sopq::to_json(r), text.str());
    return r.pass ? 0 : 1;
}

int run_verify(const CliConfig& cfg, const std::string& suite, const std::string& sig_str) {
    print_config(cfg);
    sopq::SuiteConfig sc;
    sc.tol = cfg.tol;
    sc.seed = cfg.seed;
    sc.samples = cfg.samples;
    if (!sig_str.empty()) sc.sig = parse_sig(sig_str);

    std::vector<sopq::SuiteReport> reports;
    if (suite == "fibration")
        reports.push_back(sopq::run_fibration_suite(sc));
    else if (suite == "polar")
        reports.push_back(sopq::run_polar_suite(sc));
    else if (suite == "homeo")
        reports.push_back(sopq::run_homeo_suite(sc));
    else if (suite == "abelian")
        reports.push_back(sopq::run_abelian_suite(sc));
    else
        reports = sopq::run_all_suites(sc);

    sopq::Json j = sopq::Json::array();
    std::ostringstream text;
    bool pass = true;
    for (const auto& r : reports) {
        j.push_back(sopq::to_json(r));
        pass = pass && r.pass;
        for (const auto& c : r.checks)
            text << r.suite << " | " << c.name << ": "
                 << (c.failures == 0 ? "pass" : "FAIL") << " (" << c.failures << "/"
                 << c.samples << " failures, worst " << c.worst_residual << ")\n";
    }
    text << (pass ? "all checks passed" : "some checks FAILED") << "\n";
    emit(cfg, j, text.str());
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"indefinite special orthogonal groups, quasi-spheres and pi_1 derivations"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* pi1 = app.add_subcommand("pi1", "fundamental group of SO+(p,q)");
    int p = 0, q = 0;
    pi1->add_option("p", p, "positive count")->required()->check(CLI::NonNegativeNumber);
    pi1->add_option("q", q, "negative count")->required()->check(CLI::NonNegativeNumber);
    add_common_options(pi1, cfg);

    auto* table = app.add_subcommand("pi-table", "grid of fundamental groups");
    int pmax = 0, qmax = 0;
    table->add_option("P", pmax, "max p")->required()->check(CLI::NonNegativeNumber);
    table->add_option("Q", qmax, "max q")->required()->check(CLI::NonNegativeNumber);
    add_common_options(table, cfg);

    auto* member = app.add_subcommand("member", "membership check for O/SO(p,q)");
    std::string sig_str, matrix_path;
    member->add_option("--sig", sig_str, "signature p,q")->required();
    member->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    add_common_options(member, cfg);

    auto* complete = app.add_subcommand("complete", "complete a point of X+ to a group element");
    std::string point_str;
    complete->add_option("--sig", sig_str, "signature p,q")->required();
    complete->add_option("--point", point_str, "comma-separated coordinates")->required();
    add_common_options(complete, cfg);

    auto* polar = app.add_subcommand("polar", "polar decomposition onto SO(p) x SO(q)");
    polar->add_option("--sig", sig_str, "signature p,q")->required();
    polar->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    add_common_options(polar, cfg);

    auto* chart = app.add_subcommand("chart", "chart R^q x S^(p-1) <-> X+(p,q)");
    std::string x_str, y_str;
    chart->add_option("--sig", sig_str, "signature p,q")->required();
    chart->add_option("--x", x_str, "base coordinates in R^q");
    chart->add_option("--y", y_str, "unit vector in R^p");
    chart->add_option("--point", point_str, "invert: point on X+ to (x, y)");
    add_common_options(chart, cfg);

    auto* cover = app.add_subcommand("cover", "wedge-square cover of SO+(3,3)");
    bool cover_verify = false;
    cover->add_flag("--verify", cover_verify, "run the randomized cover checks");
    auto* cover_tol = cover->add_option("--tol", cfg.tol, "numerical tolerance");
    cover->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    cover->add_option("--samples", cfg.samples, "sample count")->capture_default_str();
    cover->add_option("--output", cfg.output, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cover->add_flag("--verbose", cfg.verbose, "print configuration");

    auto* verify = app.add_subcommand("verify", "randomized property suites");
    std::string suite;
    verify->add_option("suite", suite, "fibration | polar | homeo | abelian | all")
        ->required()
        ->check(CLI::IsMember({"fibration", "polar", "homeo", "abelian", "all"}));
    std::string verify_sig;
    verify->add_option("--sig", verify_sig, "restrict to one signature p,q");
    add_common_options(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (pi1->parsed()) return run_pi1(cfg, p, q);
        if (table->parsed()) return run_pi_table(cfg, pmax, qmax);
        if (member->parsed()) return run_member(cfg, sig_str, matrix_path);
        if (complete->parsed()) return run_complete(cfg, sig_str, point_str);
        if (polar->parsed()) return run_polar(cfg, sig_str, matrix_path);
        if (chart->parsed()) return run_chart(cfg, sig_str, x_str, y_str, point_str);
        if (cover->parsed()) return run_cover(cfg, cover_tol->count() > 0);
        if (verify->parsed()) return run_verify(cfg, suite, verify_sig);
    } catch (const sopq::OffSurfaceError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const sopq::MembershipError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const sopq::ComponentError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const sopq::DegeneracyError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const sopq::SpectralError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const sopq::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
