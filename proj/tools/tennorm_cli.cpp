// Command-line front end: tensor I/O, norms, contraction products, powers,
// Gelfand traces, certified nuclear bounds, the property-verification
// harness and the worked-example reproduction report.
//
// Exit codes: 0 success, 1 property violation, 2 usage or input error.

#include <chrono>
#include <ctime>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <tennorm/io.hpp>
#include <tennorm/nuclear.hpp>
#include <tennorm/power.hpp>
#include <tennorm/repro.hpp>
#include <tennorm/spectral.hpp>
#include <tennorm/verify.hpp>

namespace {

using namespace tennorm;

struct RunConfig {
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::size_t restarts = 32;
    std::size_t max_m = 31;
    bool no_timestamp = false;
};

void echo_config(const RunConfig& cfg, const std::string& command) {
    std::cout << "# command: " << command << "  seed=" << cfg.seed << " tol=" << cfg.tol
              << " restarts=" << cfg.restarts << "\n";
    if (!cfg.no_timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&now));
        std::cout << "# time: " << buf << "Z\n";
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"tensor norms, contraction products and Gelfand limits"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--tol", cfg.tol, "convergence tolerance");
    app.add_option("--restarts", cfg.restarts, "power-method restarts");
    app.add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp line");

    // --- norm -----------------------------------------------------------
    auto* norm_cmd = app.add_subcommand("norm", "elementwise / spectral / nuclear norms");
    std::string norm_kinds = "one,fro,inf";
    std::string norm_file;
    bool norm_witness = false;
    norm_cmd->add_option("--kinds", norm_kinds, "comma list: one,fro,inf,spectral,nuclear");
    norm_cmd->add_option("file", norm_file, "tensor file")->required();
    norm_cmd->add_flag("--witness", norm_witness, "print nuclear interval witnesses");

    // --- product --------------------------------------------------------
    auto* prod_cmd = app.add_subcommand("product", "contraction product of two tensors");
    std::string prod_a, prod_b, prod_out;
    std::size_t pk = 1, pp = 1, pq = 0;
    bool prod_verify = false;
    prod_cmd->add_option("a", prod_a, "left tensor file")->required();
    prod_cmd->add_option("b", prod_b, "right tensor file")->required();
    prod_cmd->add_option("--k", pk, "surviving leading modes of a")->required();
    prod_cmd->add_option("--p", pp, "contracted modes")->required();
    prod_cmd->add_option("--q", pq, "surviving trailing modes of b")->required();
    prod_cmd->add_option("-o,--output", prod_out, "output tensor file");
    prod_cmd->add_flag("--verify", prod_verify, "also check the product inequalities");

    // --- gelfand --------------------------------------------------------
    auto* gel_cmd = app.add_subcommand("gelfand", "scaled Gelfand-limit iteration");
    std::string gel_file, gel_norms = "one,fro,inf", gel_out, gel_variant;
    gel_cmd->add_option("file", gel_file, "tensor file")->required();
    gel_cmd->add_option("--norms", gel_norms, "comma list: one,fro,inf,nuclear");
    gel_cmd->add_option("--max-m", cfg.max_m, "iteration cap");
    gel_cmd->add_option("--variant", gel_variant, "quintic variant A or B (order 5)");
    gel_cmd->add_option("-o,--output", gel_out, "trace output file (CSV)");

    // --- power ----------------------------------------------------------
    auto* pow_cmd = app.add_subcommand("power", "single cubic or quintic power");
    std::string pow_file, pow_out, pow_variant;
    pow_cmd->add_option("file", pow_file, "tensor file")->required();
    pow_cmd->add_option("--variant", pow_variant, "quintic variant A or B (order 5)");
    pow_cmd->add_option("-o,--output", pow_out, "output tensor file");

    // --- bounds ---------------------------------------------------------
    auto* bnd_cmd = app.add_subcommand("bounds", "nuclear interval and contraction bounds");
    std::string bnd_file;
    bnd_cmd->add_option("file", bnd_file, "tensor file")->required();

    // --- gen ------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "random tensor to file");
    std::string gen_shape, gen_out, gen_dist = "normal";
    gen_cmd->add_option("--shape", gen_shape, "comma list of dimensions")->required();
    gen_cmd->add_option("--dist", gen_dist, "normal or uniform");
    gen_cmd->add_option("-o,--output", gen_out, "output tensor file")->required();

    // --- verify ---------------------------------------------------------
    auto* ver_cmd = app.add_subcommand("verify", "run a property suite");
    std::string ver_suite;
    std::size_t ver_trials = 100;
    ver_cmd->add_option("--suite", ver_suite, "suite name (or 'all')")->required();
    ver_cmd->add_option("--trials", ver_trials, "seeded random trials");

    // --- repro ----------------------------------------------------------
    auto* rep_cmd = app.add_subcommand("repro", "worked-example reproduction report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (norm_cmd->parsed()) {
        echo_config(cfg, "norm");
        Tensor t = read_tensor_file(norm_file);
        std::cout << std::setprecision(15);
        for (const auto& kind : split_csv(norm_kinds)) {
            if (kind == "one") {
                std::cout << "one: " << norm_one(t) << "\n";
            } else if (kind == "fro") {
                std::cout << "fro: " << norm_fro(t) << "\n";
            } else if (kind == "inf") {
                std::cout << "inf: " << norm_inf(t) << "\n";
            } else if (kind == "spectral") {
                auto cert = hopm(t, cfg.restarts, 500, 1e-13, cfg.seed);
                std::cout << "spectral: " << cert.value
                          << (cert.converged ? "" : " (unconverged lower bound)") << "\n";
            } else if (kind == "nuclear") {
                NuclearInterval iv = nuclear_interval(t, 100, 1e-8, cfg.seed);
                std::cout << "nuclear: [" << iv.lower << ", " << iv.upper << "]\n";
                if (norm_witness) {
                    std::cout << "  upper terms: " << iv.upper_witness.size()
                              << ", residual: " << iv.residual_norm << "\n";
                    for (const auto& w : iv.lower_witness) {
                        std::cout << "  lower witness " << w.rows() << "x" << w.cols() << ":";
                        for (double v : w.data()) std::cout << " " << v;
                        std::cout << "\n";
                    }
                }
            } else {
                std::cerr << "unknown norm kind: " << kind << "\n";
                return 2;
            }
        }
        return 0;
    }

    if (prod_cmd->parsed()) {
        echo_config(cfg, "product");
        Tensor a = read_tensor_file(prod_a);
        Tensor b = read_tensor_file(prod_b);
        ContractionPlan plan{pk, pp, pq};
        Tensor c = contract_product(a, b, plan);
        if (!prod_out.empty()) write_tensor_file(prod_out, c);
        std::cout << std::setprecision(15) << "shape:";
        for (auto d : c.shape()) std::cout << " " << d;
        std::cout << "\none: " << norm_one(c) << "  fro: " << norm_fro(c) << "\n";
        if (prod_verify) {
            bool ok = true;
            double c1 = norm_one(c), a1 = norm_one(a), b1 = norm_one(b);
            double cf = norm_fro(c), af = norm_fro(a), bf = norm_fro(b);
            std::cout << "1-norm submultiplicative:    " << c1 << " <= " << a1 * b1
                      << (c1 <= a1 * b1 * (1 + 1e-12) ? "  ok" : "  VIOLATED") << "\n";
            std::cout << "Frobenius submultiplicative: " << cf << " <= " << af * bf
                      << (cf <= af * bf * (1 + 1e-12) ? "  ok" : "  VIOLATED") << "\n";
            ok = c1 <= a1 * b1 * (1 + 1e-12) && cf <= af * bf * (1 + 1e-12);
            double sc = c.order() == 1 ? norm_fro(c) : hopm(c, cfg.restarts, 500, 1e-13, cfg.seed).value;
            double sa = hopm(a, cfg.restarts, 500, 1e-13, cfg.seed).value;
            double ub = b.order() <= 2
                            ? (b.order() == 1 ? norm_fro(b) : nuclear_norm(Matrix::from_tensor(b)))
                            : nuclear_upper_greedy(b, 100, 1e-8, cfg.seed).upper;
            std::cout << "spectral vs spectral*nuclear: " << sc << " <= " << sa * ub
                      << (sc <= sa * ub + 1e-8 ? "  ok" : "  VIOLATED") << "\n";
            ok = ok && sc <= sa * ub + 1e-8;
            if (!ok) return 1;
        }
        return 0;
    }

    if (gel_cmd->parsed()) {
        echo_config(cfg, "gelfand");
        Tensor t = read_tensor_file(gel_file);
        std::optional<QuinticVariant> variant;
        if (!gel_variant.empty())
            variant = gel_variant == "A" ? QuinticVariant::A : QuinticVariant::B;
        std::vector<TensorNormKind> norms;
        for (const auto& kind : split_csv(gel_norms)) {
            if (kind == "one") norms.push_back(TensorNormKind::One);
            else if (kind == "fro") norms.push_back(TensorNormKind::Frobenius);
            else if (kind == "inf") norms.push_back(TensorNormKind::Infinity);
            else if (kind == "nuclear") norms.push_back(TensorNormKind::NuclearUpper);
            else { std::cerr << "unknown norm kind: " << kind << "\n"; return 2; }
        }
        GelfandTrace tr = gelfand_iterate(t, norms, cfg.max_m, cfg.tol, variant);
        if (!gel_out.empty()) {
            std::ofstream out(gel_out);
            write_trace(out, tr, norms);
        } else {
            write_trace(std::cout, tr, norms);
        }
        std::cout << std::setprecision(16) << "rho: " << tr.rho_estimate << "  status: "
                  << (tr.classification == GelfandStatus::Converged ? "converged"
                      : tr.classification == GelfandStatus::NilpotentDetected
                          ? "nilpotent_detected"
                          : "iteration_cap")
                  << "\n";
        return 0;
    }

    if (pow_cmd->parsed()) {
        echo_config(cfg, "power");
        Tensor t = read_tensor_file(pow_file);
        Tensor result = [&] {
            if (t.order() == 3) return cubic_power(t);
            if (t.order() == 5) {
                if (pow_variant.empty())
                    throw std::invalid_argument("order-5 power requires --variant A or B");
                return quintic_power(t, pow_variant == "A" ? QuinticVariant::A
                                                           : QuinticVariant::B);
            }
            throw std::invalid_argument("power needs an order-3 or order-5 tensor");
        }();
        if (!pow_out.empty()) write_tensor_file(pow_out, result);
        std::cout << std::setprecision(15) << "fro: " << norm_fro(result) << "\n";
        return 0;
    }

    if (bnd_cmd->parsed()) {
        echo_config(cfg, "bounds");
        Tensor t = read_tensor_file(bnd_file);
        NuclearInterval iv = nuclear_interval(t, 100, 1e-8, cfg.seed);
        std::cout << std::setprecision(15) << "nuclear interval: [" << iv.lower << ", "
                  << iv.upper << "]\n";
        if (t.order() >= 2)
            for (std::size_t j = 0; j < t.order(); ++j) {
                auto r = prop51_check(t, j, cfg.seed);
                std::cout << "mode " << j + 1 << ": rho(A^(j)) = " << r.rho
                          << " <= " << r.product_upper << (r.holds ? "  ok" : "  VIOLATED")
                          << "\n";
                if (!r.holds) return 1;
            }
        return 0;
    }

    if (gen_cmd->parsed()) {
        echo_config(cfg, "gen");
        std::vector<std::size_t> shape;
        std::string normalized = gen_shape;
        for (char& ch : normalized)
            if (ch == 'x' || ch == 'X') ch = ',';
        for (const auto& s : split_csv(normalized)) {
            std::size_t pos = 0;
            unsigned long d = 0;
            try {
                d = std::stoul(s, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != s.size() || d == 0)
                throw std::invalid_argument("bad shape component: " + s);
            shape.push_back(d);
        }
        Distribution dist = gen_dist == "uniform" ? Distribution::UniformSym
                                                  : Distribution::StandardNormal;
        write_tensor_file(gen_out, random_tensor(shape, cfg.seed, dist));
        std::cout << "wrote " << gen_out << "\n";
        return 0;
    }

    if (ver_cmd->parsed()) {
        echo_config(cfg, "verify");
        std::vector<std::string> suites =
            ver_suite == "all" ? suite_names() : std::vector<std::string>{ver_suite};
        bool all_ok = true;
        for (const auto& name : suites) {
            SuiteReport rep = run_suite(name, ver_trials, cfg.seed);
            std::cout << rep.name << ": " << (rep.passed() ? "PASS" : "FAIL") << " ("
                      << rep.trials << " trials, " << rep.failures << " failures)\n";
            for (const auto& d : rep.details) std::cout << "  " << d << "\n";
            all_ok = all_ok && rep.passed();
        }
        return all_ok ? 0 : 1;
    }

    if (rep_cmd->parsed()) {
        echo_config(cfg, "repro");
        print_repro(std::cout, run_repro(cfg.seed));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tennorm::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
