// symdisc: membership, kernel, map, path, sample and scan commands over the
// symmetrized polydisc library. All structured output is JSON; scans are
// deterministic in (config, seed) regardless of the thread count.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "json_io.hpp"
#include "symdisc/bergman.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/geometry.hpp"
#include "symdisc/maps.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/spectral.hpp"
#include "symdisc/sympoly.hpp"

namespace {

using namespace symdisc;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // boundary/exterior verdicts, failed scans
constexpr int kExitError = 2;  // parse, config, numerical errors

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json parse_inline(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw CliError(std::string("bad JSON: ") + e.what());
    }
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("SYMDISC_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return seed;
}

void emit(const json& report, const std::string& output, const std::string& format) {
    std::string text;
    if (format == "csv") {
        // flat summary: scalar fields only
        for (auto it = report.begin(); it != report.end(); ++it) {
            if (it->is_object() || it->is_array()) continue;
            text += it.key() + "," + it->dump() + "\n";
        }
    } else {
        text = report.dump(2) + "\n";
    }
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw CliError("cannot write " + output);
        out << text;
    }
}

// ---- member ----------------------------------------------------------------

int cmd_member(const std::string& z_text, const std::string& matrix_file, int n, double margin) {
    geometry::MembershipVerdict v;
    if (!z_text.empty()) {
        SymPoint z(io::tuple_from_json(parse_inline(z_text)));
        if (n > 0 && int(z.n()) != n) throw CliError("--n disagrees with the point dimension");
        v = geometry::classify(z, margin);
    } else if (!matrix_file.empty()) {
        v = spectral::in_spectral_ball(io::matrix_from_json(io::load_json_file(matrix_file)),
                                       margin);
    } else {
        throw CliError("need --z or --matrix");
    }
    std::cout << io::verdict_to_json(v).dump(2) << "\n";
    if (v.region == geometry::Region::Interior) return kExitOk;
    if (v.region == geometry::Region::Indeterminate) return kExitError;
    return kExitFail;
}

// ---- kernel ----------------------------------------------------------------

int cmd_kernel(const std::string& z_text, const std::string& w_text,
               const std::string& lam_text, const std::string& mu_text, double margin) {
    RootTuple lam, mu;
    if (!lam_text.empty() && !mu_text.empty()) {
        lam = RootTuple(io::tuple_from_json(parse_inline(lam_text)));
        mu = RootTuple(io::tuple_from_json(parse_inline(mu_text)));
    } else if (!z_text.empty() && !w_text.empty()) {
        lam = sympoly::roots_of(SymPoint(io::tuple_from_json(parse_inline(z_text))));
        mu = sympoly::roots_of(SymPoint(io::tuple_from_json(parse_inline(w_text))));
    } else {
        throw CliError("need --z/--w or --lambda/--mu");
    }
    if (lam.n() != mu.n()) throw CliError("argument dimensions differ");

    for (const RootTuple* t : {&lam, &mu}) {
        geometry::MembershipVerdict v = geometry::classify(sympoly::symmetrize(*t), margin);
        if (v.region == geometry::Region::Exterior) {
            std::cerr << "input lies outside the closed domain\n";
            return kExitError;
        }
    }

    bergman::KernelValue k;
    if (bergman::is_confluent(lam) || bergman::is_confluent(mu)) {
        k = bergman::kernel_confluent(lam, mu);
    } else if (lam.n() == 2) {
        k = bergman::kernel_closed2_roots(lam, mu);
    } else {
        k = bergman::kernel_general(lam, mu);
    }
    json out{{"value", io::complex_to_json(k.value)},
             {"condition_estimate", k.condition_estimate},
             {"path", bergman::kernel_path_name(k.path)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// ---- map / path / sample -----------------------------------------------------

int cmd_map(const std::string& psi_name, const std::string& map_file, const std::string& z_text) {
    SymPoint z(io::tuple_from_json(parse_inline(z_text)));
    const int n = int(z.n());
    maps::LiftedMap f;
    if (!map_file.empty()) {
        f = io::lifted_map_from_json(io::load_json_file(map_file), n);
    } else if (psi_name == "identity") {
        maps::BlaschkeProduct id;
        id.zeros = {Complex(0.0, 0.0)};
        f = maps::LiftedMap{id, n};
    } else {
        throw CliError("unknown symbol '" + psi_name + "'; use --map-file for general maps");
    }
    std::cout << io::tuple_to_json(maps::lift_apply(f, z).coords).dump() << "\n";
    return kExitOk;
}

int cmd_path(const std::string& matrix_file, double t_re, double t_im) {
    spectral::Matrix w = io::matrix_from_json(io::load_json_file(matrix_file));
    spectral::SpectrumPath p = spectral::constant_spectrum_path(w);
    std::cout << io::matrix_to_json(spectral::path_eval(p, Complex(t_re, t_im))).dump() << "\n";
    return kExitOk;
}

int cmd_sample(const std::string& region, int n, int count, std::uint64_t seed, double eps,
               const std::string& output) {
    geometry::SampleRegion r;
    if (region == "interior") {
        r = geometry::SampleRegion::Interior;
    } else if (region == "shilov") {
        r = geometry::SampleRegion::Shilov;
    } else if (region == "nearboundary") {
        r = geometry::SampleRegion::NearBoundary;
    } else {
        throw CliError("region must be interior, shilov or nearboundary");
    }
    std::string text;
    for (const SymPoint& z : geometry::sample(r, n, count, effective_seed(seed), eps)) {
        json line{{"n", n},
                  {"z", io::tuple_to_json(z.coords)},
                  {"region", geometry::sample_region_name(r)}};
        text += line.dump() + "\n";
    }
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw CliError("cannot write " + output);
        out << text;
    }
    return kExitOk;
}

// ---- scan ------------------------------------------------------------------

struct ScanConfig {
    int n = 2;
    long count = 1000;
    std::uint64_t seed = 1;
    double margin = 1e-9;
    int threads = int(std::thread::hardware_concurrency());
    std::string output;
    std::string format = "json";
    std::vector<double> eps_grid{1e-1, 1e-2, 1e-3, 1e-4};
    std::string blaschke_file;
    std::string poly_text;
    int functions = 20;

    void validate() const {
        if (count < 1) throw CliError("count must be >= 1");
        if (n < 1 || n > 8) throw CliError("n must lie in [1, 8]");
        if (margin < 0.0 || margin > 0.1) throw CliError("margin must lie in [0, 0.1]");
        if (format != "json" && format != "csv") throw CliError("format must be json or csv");
        if (threads < 1) throw CliError("threads must be >= 1");
    }
};

json scan_luqikeng(const ScanConfig& c) {
    if (c.n != 2) throw CliError("the zero-free scan is defined for n = 2 only");
    bergman::LuQiKengReport r = bergman::luqikeng_scan(c.count, c.seed, c.threads);
    return json{{"scan", "luqikeng"},
                {"count", r.count},
                {"min_abs_K", r.min_abs},
                {"argmin",
                 json{{"z", io::tuple_to_json(r.argmin_z.coords)},
                      {"w", io::tuple_to_json(r.argmin_w.coords)}}},
                {"failures", r.failures},
                {"pass", r.pass}};
}

json scan_properness(const ScanConfig& c) {
    if (c.blaschke_file.empty()) throw CliError("properness scan needs --blaschke FILE");
    maps::BlaschkeProduct b = io::blaschke_from_json(io::load_json_file(c.blaschke_file));
    maps::PropernessReport r = maps::properness_scan(b, c.n, c.eps_grid, int(c.count), c.seed);
    return json{{"scan", "properness"},
                {"blaschke", io::map_to_json(b)},
                {"n", c.n},
                {"count", c.count},
                {"eps_grid", r.eps_grid},
                {"max_boundary_distance", r.max_boundary_distance},
                {"interior_violations", r.interior_violations},
                {"decay_ok", r.decay_ok},
                {"pass", r.pass}};
}

json scan_oracle_equivalence(const ScanConfig& c) {
    long poly_checked = 0, poly_skipped = 0, poly_mismatch = 0;
    json poly_witness;
    for (long i = 0; i < c.count; ++i) {
        std::mt19937_64 rng = make_stream(c.seed, std::uint64_t(i), 0x6f726163ULL);
        int deg = 1 + int(uniform01(rng) * double(std::min(c.n, 6)) * 0.999);
        RootTuple t;
        double maxmod = 0.0;
        for (int j = 0; j < deg; ++j) {
            Complex l = 1.4 * disc_point(rng);
            maxmod = std::max(maxmod, std::abs(l));
            t.entries.push_back(l);
        }
        if (std::abs(maxmod - 1.0) <= 1e-6) {
            ++poly_skipped;
            continue;
        }
        ++poly_checked;
        sympoly::StabilityVerdict v =
            sympoly::schur_stable(sympoly::from_sympoint(sympoly::symmetrize(t)));
        bool inside_by_roots = maxmod < 1.0;
        bool inside_by_schur = v == sympoly::StabilityVerdict::Inside;
        if (inside_by_roots != inside_by_schur && poly_mismatch++ == 0) {
            poly_witness = io::tuple_to_json(t.entries);
        }
    }

    double psi_max = 0.0;
    long ball_checked = 0, ball_skipped = 0, ball_mismatch = 0;
    json ball_witness;
    for (long i = 0; i < c.count; ++i) {
        int dim = 1 + int(i % c.n);
        spectral::Matrix w = spectral::random_matrix(dim, c.seed, std::uint64_t(i));
        SymPoint a = spectral::psi(w);
        SymPoint b = sympoly::symmetrize(RootTuple(spectral::eigenvalues(w)));
        for (int k = 0; k < dim; ++k) {
            psi_max = std::max(psi_max, std::abs(a.coords[k] - b.coords[k]));
        }
        double r = spectral::spectral_radius(w);
        if (std::abs(r - 1.0) <= 1e-6) {
            ++ball_skipped;
            continue;
        }
        ++ball_checked;
        bool inside =
            spectral::in_spectral_ball(w, c.margin).region == geometry::Region::Interior;
        if (inside != (r < 1.0) && ball_mismatch++ == 0) {
            ball_witness = io::matrix_to_json(w);
        }
    }

    bool pass = poly_mismatch == 0 && ball_mismatch == 0 && psi_max <= 1e-8;
    json out{{"scan", "oracle-equivalence"},
             {"n", c.n},
             {"count", c.count},
             {"stability", json{{"checked", poly_checked},
                                {"skipped_fuzz_band", poly_skipped},
                                {"mismatches", poly_mismatch}}},
             {"psi_vs_eigenvalues", json{{"max_residual", psi_max}, {"tolerance", 1e-8}}},
             {"spectral_ball", json{{"checked", ball_checked},
                                    {"skipped_fuzz_band", ball_skipped},
                                    {"mismatches", ball_mismatch}}},
             {"pass", pass}};
    if (!poly_witness.is_null()) out["stability"]["witness_roots"] = poly_witness;
    if (!ball_witness.is_null()) out["spectral_ball"]["witness_matrix"] = ball_witness;
    return out;
}

json scan_transformation(const ScanConfig& c) {
    double worst = 0.0;
    json witness;
    for (long i = 0; i < c.count; ++i) {
        std::mt19937_64 rng = make_stream(c.seed, std::uint64_t(i), 0x7472616eULL);
        maps::MoebiusMap h;
        h.alpha = 0.8 * disc_point(rng);
        h.factor = circle_point(rng);
        auto draw = [&]() {
            RootTuple t;
            while (int(t.n()) < c.n) {
                Complex l = 0.9 * disc_point(rng);
                bool ok = true;
                for (const Complex& e : t.entries) ok = ok && std::abs(e - l) >= 0.05;
                if (ok) t.entries.push_back(l);
            }
            return t;
        };
        RootTuple lam = draw(), mu = draw();
        double r = bergman::transformation_check(h, lam, mu);
        if (r > worst) {
            worst = r;
            witness = json{{"alpha", io::complex_to_json(h.alpha)},
                           {"factor", io::complex_to_json(h.factor)},
                           {"lambda", io::tuple_to_json(lam.entries)},
                           {"mu", io::tuple_to_json(mu.entries)}};
        }
    }
    return json{{"scan", "transformation"},
                {"n", c.n},
                {"count", c.count},
                {"max_residual", worst},
                {"tolerance", 1e-8},
                {"worst_case", witness},
                {"pass", worst <= 1e-8}};
}

spectral::MatrixPolynomial poly_from_config(const ScanConfig& c) {
    spectral::MatrixPolynomial f;
    if (c.poly_text.empty()) {
        f.coeffs = {Complex(0.0, 0.0), Complex(0.3, 0.0), Complex(0.4, 0.0)};
    } else {
        f.coeffs = io::tuple_from_json(parse_inline(c.poly_text));
    }
    return f;
}

json scan_descent(const ScanConfig& c) {
    spectral::MatrixPolynomial f = poly_from_config(c);
    spectral::DescentReport r = spectral::descent_check(f, c.n, int(c.count), c.seed);
    return json{{"scan", "descent"},
                {"n", c.n},
                {"count", c.count},
                {"poly", io::tuple_to_json(f.coeffs)},
                {"max_residual", r.max_residual},
                {"p50", r.p50},
                {"p90", r.p90},
                {"p99", r.p99},
                {"range_violations", r.range_violations},
                {"worst_case",
                 json{{"index", r.worst_index},
                      {"matrix", io::matrix_to_json(spectral::sample_spectral_ball(
                                     c.n, c.seed, std::uint64_t(r.worst_index)))}}},
                {"tolerance", 1e-7},
                {"pass", r.pass}};
}

json scan_spectrum_action(const ScanConfig& c) {
    spectral::MatrixPolynomial f = poly_from_config(c);
    std::optional<maps::BlaschkeProduct> expected;
    if (!c.blaschke_file.empty()) {
        expected = io::blaschke_from_json(io::load_json_file(c.blaschke_file));
    }
    spectral::SpectrumActionReport r =
        spectral::spectrum_action_check(f, expected, c.n, int(c.count), c.seed);
    json out{{"scan", "spectrum-action"},
             {"n", c.n},
             {"count", c.count},
             {"poly", io::tuple_to_json(f.coeffs)},
             {"max_mismatch", r.max_mismatch},
             {"worst_case",
              json{{"index", r.worst_index},
                   {"matrix", io::matrix_to_json(spectral::sample_spectral_ball(
                                  c.n, c.seed, std::uint64_t(r.worst_index)))}}},
             {"tolerance", 1e-7},
             {"pass", r.pass}};
    if (expected) out["expected"] = io::map_to_json(*expected);
    return out;
}

json scan_max_modulus(const ScanConfig& c) {
    json runs = json::array();
    bool pass = true;
    for (int k = 0; k < c.functions; ++k) {
        geometry::MultiPoly f = geometry::random_multipoly(c.n, 3, c.seed + std::uint64_t(k));
        geometry::MaxModulusReport r =
            geometry::max_modulus_check(f, c.n, int(c.count), c.seed + std::uint64_t(k));
        pass = pass && r.pass;
        runs.push_back(json{{"function_seed", c.seed + std::uint64_t(k)},
                            {"interior_max", r.interior_max},
                            {"shilov_max", r.shilov_max},
                            {"pass", r.pass}});
    }
    return json{{"scan", "max-modulus"},
                {"n", c.n},
                {"count", c.count},
                {"functions", c.functions},
                {"runs", runs},
                {"pass", pass}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometry of the symmetrized polydisc: membership, Bergman kernel, "
                 "proper maps, spectral ball"};
    app.require_subcommand(1);

    // member
    std::string m_z, m_matrix;
    int m_n = 0;
    double m_margin = 1e-9;
    CLI::App* member = app.add_subcommand("member", "classify a point or a matrix");
    member->add_option("--z", m_z, "point as [[re,im],...]");
    member->add_option("--matrix", m_matrix, "matrix file (JSON nested arrays)");
    member->add_option("--n", m_n, "expected dimension");
    member->add_option("--margin", m_margin, "boundary fuzz band");

    // kernel
    std::string k_z, k_w, k_lam, k_mu;
    double k_margin = 1e-9;
    CLI::App* kernel = app.add_subcommand("kernel", "evaluate the Bergman kernel");
    kernel->add_option("--z", k_z, "first point in symmetrized coordinates");
    kernel->add_option("--w", k_w, "second point in symmetrized coordinates");
    kernel->add_option("--lambda", k_lam, "first point as a fiber tuple");
    kernel->add_option("--mu", k_mu, "second point as a fiber tuple");
    kernel->add_option("--margin", k_margin, "membership fuzz band");

    // map
    std::string mp_psi = "identity", mp_file, mp_z;
    CLI::App* map = app.add_subcommand("map", "apply a lifted self-map");
    map->add_option("--psi", mp_psi, "named symbol (identity)");
    map->add_option("--map-file", mp_file, "map description file");
    map->add_option("--z", mp_z, "point as [[re,im],...]")->required();

    // path
    std::string p_matrix;
    double p_t = 0.0, p_timag = 0.0;
    CLI::App* path = app.add_subcommand("path", "evaluate the constant-spectrum path");
    path->add_option("--matrix", p_matrix, "matrix file")->required();
    path->add_option("--t", p_t, "path parameter (real part)");
    path->add_option("--timag", p_timag, "path parameter (imaginary part)");

    // sample
    std::string s_region, s_output;
    int s_n = 2, s_count = 1;
    std::uint64_t s_seed = 1;
    double s_eps = 1e-3;
    CLI::App* sample = app.add_subcommand("sample", "draw reproducible sample points");
    sample->add_option("region", s_region, "interior | shilov | nearboundary")->required();
    sample->add_option("--n", s_n, "dimension");
    sample->add_option("--count", s_count, "number of samples");
    sample->add_option("--seed", s_seed, "RNG seed");
    sample->add_option("--eps", s_eps, "near-boundary collar width");
    sample->add_option("--output", s_output, "write JSON lines here instead of stdout");

    // scan
    ScanConfig sc;
    std::string sc_config;
    CLI::App* scan = app.add_subcommand("scan", "run a verification campaign");
    scan->require_subcommand(1);
    std::vector<CLI::App*> scan_subs;
    for (const char* name : {"luqikeng", "properness", "oracle-equivalence", "transformation",
                             "descent", "spectrum-action", "max-modulus"}) {
        CLI::App* sub = scan->add_subcommand(name);
        sub->add_option("--n", sc.n, "dimension");
        sub->add_option("--count", sc.count, "samples per check");
        sub->add_option("--seed", sc.seed, "RNG seed");
        sub->add_option("--margin", sc.margin, "membership fuzz band");
        sub->add_option("--threads", sc.threads, "worker threads");
        sub->add_option("--output", sc.output, "report file");
        sub->add_option("--format", sc.format, "json | csv");
        sub->add_option("--eps-grid", sc.eps_grid, "boundary collar widths");
        sub->add_option("--blaschke", sc.blaschke_file, "Blaschke product file");
        sub->add_option("--poly", sc.poly_text, "matrix polynomial coefficients [[re,im],...]");
        sub->add_option("--functions", sc.functions, "number of random test functions");
        sub->add_option("--config", sc_config, "JSON config file (flags take precedence)");
        scan_subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (member->parsed()) return cmd_member(m_z, m_matrix, m_n, m_margin);
        if (kernel->parsed()) return cmd_kernel(k_z, k_w, k_lam, k_mu, k_margin);
        if (map->parsed()) return cmd_map(mp_psi, mp_file, mp_z);
        if (path->parsed()) return cmd_path(p_matrix, p_t, p_timag);
        if (sample->parsed()) return cmd_sample(s_region, s_n, s_count, s_seed, s_eps, s_output);

        CLI::App* active = nullptr;
        for (CLI::App* sub : scan_subs) {
            if (sub->parsed()) active = sub;
        }
        if (active == nullptr) return kExitError;

        if (!sc_config.empty()) {
            json cfg = io::load_json_file(sc_config);
            auto take = [&](const char* flag, auto& var) {
                using T = std::decay_t<decltype(var)>;
                if (cfg.contains(flag) && active->count(std::string("--") + flag) == 0) {
                    var = cfg[flag].get<T>();
                }
            };
            take("n", sc.n);
            take("count", sc.count);
            take("seed", sc.seed);
            take("margin", sc.margin);
            take("threads", sc.threads);
            take("output", sc.output);
            take("format", sc.format);
            take("eps-grid", sc.eps_grid);
            take("blaschke", sc.blaschke_file);
            take("poly", sc.poly_text);
            take("functions", sc.functions);
        }
        sc.seed = effective_seed(sc.seed);
        sc.validate();

        json report;
        const std::string name = active->get_name();
        if (name == "luqikeng") report = scan_luqikeng(sc);
        else if (name == "properness") report = scan_properness(sc);
        else if (name == "oracle-equivalence") report = scan_oracle_equivalence(sc);
        else if (name == "transformation") report = scan_transformation(sc);
        else if (name == "descent") report = scan_descent(sc);
        else if (name == "spectrum-action") report = scan_spectrum_action(sc);
        else if (name == "max-modulus") report = scan_max_modulus(sc);
        emit(report, sc.output, sc.format);
        return report.value("pass", false) ? kExitOk : kExitFail;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
