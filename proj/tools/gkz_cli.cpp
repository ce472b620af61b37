// Command-line experiment harness: every library module exposed as a
// subcommand with a reproducible flat-JSON config. All output goes to
// stdout (JSON or CSV); diagnostics go to stderr.
//
// Exit codes: 0 = pass, 2 = falsified / hypothesis violation,
//             1 = runtime error, 64 = usage or malformed spec.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkz/io.hpp"

using namespace gkz;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFalsified = 2;
constexpr int kExitUsage = 64;

struct SessionConfig {
    unsigned precision_bits = 113;
    std::size_t truncation_k = 512;
    std::size_t weight_truncation_n = 2048;
    std::uint64_t seed = 0;
    std::string output_dir;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SessionConfig load_config(const std::string& path) {
    SessionConfig cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed config JSON: ") + e.what());
    }
    if (j.contains("precisionBits")) cfg.precision_bits = j["precisionBits"].get<unsigned>();
    if (j.contains("truncationK")) cfg.truncation_k = j["truncationK"].get<std::size_t>();
    if (j.contains("weightTruncationN")) cfg.weight_truncation_n = j["weightTruncationN"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("outputDir")) cfg.output_dir = j["outputDir"].get<std::string>();
    return cfg;
}

/// "re" or "re:im"
Complex parse_complex(const std::string& text) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) return Complex(Real(text));
        return Complex(Real(text.substr(0, colon)), Real(text.substr(colon + 1)));
    } catch (const std::exception&) {
        throw UsageError("malformed complex value: " + text);
    }
}

/// "w@p,w@p,..." with p a complex value as above
std::vector<std::pair<Real, Complex>> parse_mixture(const std::string& text) {
    std::vector<std::pair<Real, Complex>> atoms;
    std::stringstream ss(text);
    std::string atom;
    while (std::getline(ss, atom, ',')) {
        auto at = atom.find('@');
        if (at == std::string::npos)
            throw UsageError("malformed mixture atom (expected weight@point): " + atom);
        try {
            atoms.emplace_back(Real(atom.substr(0, at)), parse_complex(atom.substr(at + 1)));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("malformed mixture atom: " + atom);
        }
    }
    if (atoms.empty())
        throw UsageError("empty mixture spec");
    return atoms;
}

struct FunctionalSpec {
    std::string point;
    std::string mixture;
    std::string moments_file;

    MomentFunctional build(std::size_t truncation) const {
        int given = !point.empty() + !mixture.empty() + !moments_file.empty();
        if (given != 1)
            throw UsageError("specify exactly one of --point, --mixture, --moments");
        try {
            if (!point.empty())
                return MomentFunctional::point_evaluation(parse_complex(point), truncation);
            if (!mixture.empty())
                return MomentFunctional::mixture(parse_mixture(mixture), truncation);
            return moments_from_file(moments_file);
        } catch (const std::domain_error& e) {
            throw UsageError(std::string("invalid functional spec: ") + e.what());
        }
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--point", point, "point evaluation functional, m_k = w^k (value: re or re:im)");
        cmd->add_option("--mixture", mixture, "convex mixture of point evaluations, w@p,w@p,...");
        cmd->add_option("--moments", moments_file, "JSON file with moments as [re,im] pairs, m_0 first");
    }
};

std::vector<std::size_t> parse_nlist(const std::string& text) {
    std::vector<std::size_t> ns;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            ns.push_back(std::stoul(tok));
        } catch (const std::exception&) {
            throw UsageError("malformed n list entry: " + tok);
        }
    }
    if (ns.empty())
        throw UsageError("empty n list");
    return ns;
}

void emit(const SessionConfig& cfg, const std::string& name, const std::string& payload) {
    std::cout << payload;
    if (!cfg.output_dir.empty()) {
        std::ofstream out(cfg.output_dir + "/" + name, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write to output dir: " + cfg.output_dir);
        out << payload;
    }
}

json with_header(const SessionConfig& cfg, json body) {
    body["seed"] = cfg.seed;
    body["precisionBits"] = cfg.precision_bits;
    return body;
}

int cmd_gkz_scan(const SessionConfig& cfg, const FunctionalSpec& spec, double r, std::size_t nmax) {
    auto F = spec.build(std::max<std::size_t>(cfg.truncation_k, nmax));
    WitnessReport rep = hypothesis_scan(F, Real(r), nmax);
    json j = with_header(cfg, to_json(rep));
    emit(cfg, "gkz-scan.json", j.dump(2) + "\n");
    return rep.scan_passed ? kExitPass : kExitFalsified;
}

int cmd_defect_table(const SessionConfig& cfg, const FunctionalSpec& spec, std::size_t k,
                     const std::string& nlist, const std::string& rmode, double r) {
    auto ns = parse_nlist(nlist);
    std::size_t biggest = *std::max_element(ns.begin(), ns.end());
    auto F = spec.build(std::max(cfg.truncation_k, biggest));
    RadiusMode mode;
    if (rmode == "fixed")
        mode = RadiusMode::Fixed;
    else if (rmode == "per-n")
        mode = RadiusMode::PerNRootBound;
    else
        throw UsageError("--rmode must be 'fixed' or 'per-n'");
    auto rows = convergence_table(F, k, ns, mode, Real(r));
    emit(cfg, "defect-table.csv", convergence_table_csv(rows));
    return kExitPass;
}

int cmd_vieta_check(const SessionConfig& cfg, const FunctionalSpec& spec, std::size_t n, std::size_t kmax) {
    auto F = spec.build(std::max(cfg.truncation_k, n));
    auto residuals = vieta_check(F, n, kmax);
    json arr = json::array();
    for (const auto& v : residuals) arr.push_back(static_cast<double>(v));
    json j = with_header(cfg, json{{"n", n}, {"kMax", kmax}, {"residuals", arr}});
    emit(cfg, "vieta-check.json", j.dump(2) + "\n");
    return kExitPass;
}

int cmd_hardy_info(const SessionConfig& cfg, bool classical, const std::string& donoghue,
                   const std::string& weights_file) {
    int given = classical + !donoghue.empty() + !weights_file.empty();
    if (given != 1)
        throw UsageError("specify exactly one of --classical, --donoghue, --weights");
    std::optional<WeightSequence> beta;
    if (classical) {
        beta = WeightSequence::classical(cfg.weight_truncation_n);
    } else if (!donoghue.empty()) {
        if (donoghue == "reciprocal") {
            beta = WeightSequence::reciprocal(cfg.weight_truncation_n);
        } else if (donoghue.rfind("geometric:", 0) == 0) {
            beta = WeightSequence::geometric(Real(donoghue.substr(10)), cfg.weight_truncation_n);
        } else {
            throw UsageError("--donoghue takes 'reciprocal' or 'geometric:q'");
        }
    } else {
        beta = weights_from_file(weights_file);
    }
    json j = with_header(cfg, to_json(shift_diagnostics(*beta)));
    emit(cfg, "hardy-info.json", j.dump(2) + "\n");
    return kExitPass;
}

SampledLinearMap builtin_map(const std::string& name) {
    auto grid = SampleGrid::default_polar();
    if (name == "identity")
        return SampledLinearMap::identity(std::move(grid));
    if (name == "halfshift") {
        std::vector<Complex> psi, phi;
        for (const auto& z : grid.points) {
            psi.push_back(Complex(Real(1)) + z / Complex(Real(2)));
            phi.push_back(z / Complex(Real(2)));
        }
        return SampledLinearMap::from_symbols(std::move(grid), psi, phi,
                                              SampledLinearMap::default_degree_cap);
    }
    if (name == "eval0") {
        std::vector<Complex> psi(grid.size(), Complex(Real(1)));
        std::vector<Complex> phi(grid.size());
        return SampledLinearMap::from_symbols(std::move(grid), psi, phi,
                                              SampledLinearMap::default_degree_cap);
    }
    throw UsageError("--builtin takes identity, halfshift or eval0");
}

int cmd_wcomp_verify(const SessionConfig& cfg, const std::string& builtin,
                     const std::string& map_file, double r) {
    if (builtin.empty() == map_file.empty())
        throw UsageError("specify exactly one of --builtin, --map");
    SampledLinearMap T = builtin.empty() ? [&] {
        std::ifstream in(map_file);
        if (!in)
            throw UsageError("cannot open map file: " + map_file);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed map JSON: ") + e.what());
        }
        return sampled_map_from_json(j);
    }() : builtin_map(builtin);

    SymbolPair symbols = detect_symbols(T, Real(r)); // HypothesisViolation -> exit 2
    // residual over a deterministic seeded batch of polynomials
    gkz::Real worst(0);
    std::mt19937_64 gen(cfg.seed);
    auto uniform = [&] { return static_cast<double>(gen() >> 11) * 0x1p-53; };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> c;
        std::size_t deg = 1 + static_cast<std::size_t>(uniform() * double(T.degree_cap));
        if (deg > T.degree_cap) deg = T.degree_cap;
        for (std::size_t j = 0; j <= deg; ++j)
            c.push_back(Complex(Real(2.0 * uniform() - 1.0), Real(2.0 * uniform() - 1.0)));
        Real res = verify_factorization(T, symbols, Polynomial(std::move(c)));
        if (res > worst) worst = res;
    }
    json j = with_header(cfg, json{{"symbols", to_json(symbols)},
                                   {"maxResidual", static_cast<double>(worst)},
                                   {"trials", 50}});
    emit(cfg, "wcomp-verify.json", j.dump(2) + "\n");
    return kExitPass;
}

int cmd_donoghue_demo(const SessionConfig& cfg) {
    auto beta = WeightSequence::reciprocal(cfg.weight_truncation_n);
    auto diag = shift_diagnostics(beta);
    json first_weights = json::array();
    for (std::size_t n = 0; n <= 8; ++n) first_weights.push_back(static_cast<double>(beta[n]));
    auto k_origin = kernel_norm_at(beta, Complex());
    auto k_off = kernel_norm_at(beta, Complex(Real("0.1")));
    json j = with_header(cfg, json{
        {"weights", "reciprocal (w_n = 1/(n+1), beta_n = 1/n!)"},
        {"betaPrefix", first_weights},
        {"diagnostics", to_json(diag)},
        {"kernelNormAtOrigin", {{"value", static_cast<double>(k_origin.value)},
                                {"converged", k_origin.converged}}},
        {"kernelNormAt0.1", {{"value", static_cast<double>(k_off.value)},
                             {"converged", k_off.converged}}},
        {"note", "strictly cyclic shift with spectral radius estimate ~0; "
                 "point evaluation is unbounded at every w != 0"}});
    emit(cfg, "donoghue-demo.json", j.dump(2) + "\n");
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gleason-Kahane-Zelazko toolkit for polynomials and weighted Hardy spaces"};
    app.require_subcommand(1);

    std::string config_path;
    SessionConfig flag_cfg;
    bool has_precision = false, has_trunc = false, has_wtrunc = false, has_seed = false, has_outdir = false;
    app.add_option("--config", config_path, "flat JSON config (flags override file values)");
    auto* po = app.add_option("--precision-bits", flag_cfg.precision_bits, "working precision (>= 53)");
    auto* to = app.add_option("--truncation-k", flag_cfg.truncation_k, "moment truncation order K");
    auto* wo = app.add_option("--weight-truncation", flag_cfg.weight_truncation_n, "weight sequence truncation N");
    auto* so = app.add_option("--seed", flag_cfg.seed, "seed for randomized suites");
    auto* oo = app.add_option("--output-dir", flag_cfg.output_dir, "also write artifacts into this directory");

    // gkz-scan
    auto* scan = app.add_subcommand("gkz-scan", "scan GKZ polynomial roots for hypothesis falsifiers");
    FunctionalSpec scan_spec;
    scan_spec.attach(scan);
    double scan_r = 1.0;
    std::size_t scan_nmax = 10;
    scan->add_option("--r", scan_r, "hypothesis radius")->required();
    scan->add_option("--nmax", scan_nmax, "largest tested power n")->required();

    // defect-table
    auto* table = app.add_subcommand("defect-table", "normalized defect/bound table (CSV)");
    FunctionalSpec table_spec;
    table_spec.attach(table);
    std::size_t table_k = 2;
    std::string table_nlist, table_rmode = "fixed";
    double table_r = 1.0;
    table->add_option("--k", table_k, "moment power k")->required();
    table->add_option("--nlist", table_nlist, "comma-separated n values")->required();
    table->add_option("--rmode", table_rmode, "radius mode: fixed | per-n");
    table->add_option("--r", table_r, "radius for --rmode fixed");

    // vieta-check
    auto* vieta = app.add_subcommand("vieta-check", "Vieta residuals of the GKZ polynomial roots");
    FunctionalSpec vieta_spec;
    vieta_spec.attach(vieta);
    std::size_t vieta_n = 8, vieta_kmax = 4;
    vieta->add_option("--n", vieta_n, "GKZ polynomial degree")->required();
    vieta->add_option("--kmax", vieta_kmax, "largest tested k (< n)")->required();

    // hardy-info
    auto* hardy = app.add_subcommand("hardy-info", "weighted shift diagnostics (JSON)");
    bool hardy_classical = false;
    std::string hardy_donoghue, hardy_weights;
    hardy->add_flag("--classical", hardy_classical, "classical Hardy space, beta_n = 1");
    hardy->add_option("--donoghue", hardy_donoghue, "Donoghue-type weights: reciprocal | geometric:q");
    hardy->add_option("--weights", hardy_weights, "weight file, one positive decimal per line");

    // wcomp-verify
    auto* wcomp = app.add_subcommand("wcomp-verify", "recover and verify weighted-composition symbols");
    std::string wcomp_builtin, wcomp_map;
    double wcomp_r = 1.0;
    wcomp->add_option("--builtin", wcomp_builtin, "built-in map: identity | halfshift | eval0");
    wcomp->add_option("--map", wcomp_map, "sampled map JSON file");
    wcomp->add_option("--r", wcomp_r, "symbol range radius");

    // donoghue-demo
    auto* demo = app.add_subcommand("donoghue-demo", "reciprocal-weight shift walkthrough (JSON)");

    for (auto* sub : {scan, table, vieta, hardy, wcomp, demo})
        sub->fallthrough(); // session flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }
    has_precision = po->count() > 0;
    has_trunc = to->count() > 0;
    has_wtrunc = wo->count() > 0;
    has_seed = so->count() > 0;
    has_outdir = oo->count() > 0;

    try {
        SessionConfig cfg = load_config(config_path);
        if (has_precision) cfg.precision_bits = flag_cfg.precision_bits;
        if (has_trunc) cfg.truncation_k = flag_cfg.truncation_k;
        if (has_wtrunc) cfg.weight_truncation_n = flag_cfg.weight_truncation_n;
        if (has_seed) cfg.seed = flag_cfg.seed;
        if (has_outdir) cfg.output_dir = flag_cfg.output_dir;
        if (cfg.truncation_k < 2)
            throw UsageError("truncationK must be at least 2");
        set_precision_bits(cfg.precision_bits); // throws below 53 bits

        if (scan->parsed()) return cmd_gkz_scan(cfg, scan_spec, scan_r, scan_nmax);
        if (table->parsed()) return cmd_defect_table(cfg, table_spec, table_k, table_nlist, table_rmode, table_r);
        if (vieta->parsed()) return cmd_vieta_check(cfg, vieta_spec, vieta_n, vieta_kmax);
        if (hardy->parsed()) return cmd_hardy_info(cfg, hardy_classical, hardy_donoghue, hardy_weights);
        if (wcomp->parsed()) return cmd_wcomp_verify(cfg, wcomp_builtin, wcomp_map, wcomp_r);
        if (demo->parsed()) return cmd_donoghue_demo(cfg);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
