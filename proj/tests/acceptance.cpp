// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// Exit status 0 iff every criterion passes. argv[1] must be the path to
// the gkz-tool executable (used by the CLI-level criteria).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "gkz/composition.hpp"
#include "gkz/gkz.hpp"
#include "gkz/hardy.hpp"
#include "gkz/io.hpp"
#include "test_util.hpp"

using namespace gkz;
using nlohmann::json;

namespace {

std::string g_tool;

struct ToolResult {
    int exit_code = -1;
    std::string out;
};

ToolResult run_tool(const std::string& args) {
    ToolResult r;
    std::string cmd = g_tool + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::cout << "criterion " << idx << " [" << name << "]: " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
    if (!pass) ++g_failures;
}

// 1. Witness completeness: for seeded w with |w| <= 0.9 and moments w^k,
//    `gkz-scan --r 1 --nmax 50` passes and the reported witness recovers w
//    to 1e-10. Whole batch of 100 within 60 s.
void criterion1() {
    gkz_test::Rng rng(101);
    auto t0 = std::chrono::steady_clock::now();
    int ok = 0;
    std::string first_fail;
    for (int trial = 0; trial < 100; ++trial) {
        Complex w = rng.disc(0.9);
        double wre = static_cast<double>(w.re), wim = static_cast<double>(w.im);
        ToolResult r = run_tool("gkz-scan --point " + fmt(wre) + ":" + fmt(wim) +
                                " --r 1 --nmax 50 --truncation-k 64");
        bool good = r.exit_code == 0;
        if (good) {
            json j = json::parse(r.out, nullptr, false);
            good = !j.is_discarded() && j["scanPassed"].get<bool>() &&
                   std::abs(j["witness"][0].get<double>() - wre) <= 1e-10 &&
                   std::abs(j["witness"][1].get<double>() - wim) <= 1e-10;
        }
        if (good)
            ++ok;
        else if (first_fail.empty())
            first_fail = "trial " + std::to_string(trial) + " w=" + fmt(wre) + ":" + fmt(wim);
        if (seconds_since(t0) > 90.0) break; // give up well past budget
    }
    double dt = seconds_since(t0);
    bool pass = ok == 100 && dt <= 60.0;
    std::ostringstream d;
    d << ok << "/100 scans, " << dt << " s";
    if (!first_fail.empty()) d << ", first failure: " << first_fail;
    report(1, "witness completeness, CLI scan", pass, d.str());
}

// 2. Core inequality: seeded convex mixtures of <= 5 point evaluations in
//    the disc of radius 0.5; every n in {10,20,50,100,200}, k in 1..4 at
//    the per-n observed root radius satisfies defect <= bound. Within 120 s.
void criterion2() {
    gkz_test::Rng rng(202);
    auto t0 = std::chrono::steady_clock::now();
    int violations = 0, cases = 0;
    std::string first_fail;
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t atoms = 1 + rng.gen() % 5;
        std::vector<std::pair<Real, Complex>> mix;
        Real total(0);
        for (std::size_t a = 0; a < atoms; ++a) {
            Real weight(rng.uniform() + 0.1);
            total += weight;
            mix.emplace_back(weight, rng.disc(0.5));
        }
        for (auto& m : mix) m.first /= total;
        auto F = MomentFunctional::mixture(mix, 200);
        for (std::size_t n : {10u, 20u, 50u, 100u, 200u}) {
            GkzReport rep = make_gkz_report(F, n, 4);
            for (const auto& row : rep.defect_rows) {
                ++cases;
                if (!row.holds) {
                    ++violations;
                    if (first_fail.empty())
                        first_fail = "trial " + std::to_string(trial) + " n=" + std::to_string(n) +
                                     " k=" + std::to_string(row.k);
                }
            }
        }
    }
    double dt = seconds_since(t0);
    bool pass = violations == 0 && cases == 20 * 5 * 4 && dt <= 120.0;
    std::ostringstream d;
    d << cases << " cases, " << violations << " violations, " << dt << " s";
    if (!first_fail.empty()) d << ", first: " << first_fail;
    report(2, "defect <= bound over mixtures", pass, d.str());
}

// 3. Convergence of the normalized defect for m_k = 0.5^k at k = 2:
//    the n = 10 row equals 0.025 to 1e-12, and the n = 200 value is at most
//    half the n = 20 value.
void criterion3() {
    auto F = MomentFunctional::point_evaluation(Complex(Real("0.5")), 200);
    auto rows = convergence_table(F, 2, {10, 20, 200}, RadiusMode::PerNRootBound);
    Real row10 = rows[0].defect_over_nk;
    Real row20 = rows[1].defect_over_nk;
    Real row200 = rows[2].defect_over_nk;
    bool exact = abs(row10 - Real("0.025")) <= Real(1e-12);
    bool halved = row200 <= row20 / Real(2);
    std::ostringstream d;
    d << "n=10: " << static_cast<double>(row10) << ", n=20: " << static_cast<double>(row20)
      << ", n=200: " << static_cast<double>(row200);
    report(3, "defect/n^k convergence", exact && halved, d.str());
}

// 4. Falsification: F = (delta_0 + delta_{1/2})/2 produces, for each
//    r in {1,2,4}, a certified root of modulus >= r at some n <= ceil(4 pi r)
//    with re-verified |F((z - lambda)^n)| <= 1e-6.
void criterion4() {
    auto F = MomentFunctional::mixture({{Real("0.5"), Complex()}, {Real("0.5"), Complex(Real("0.5"))}}, 64);
    bool pass = true;
    std::ostringstream d;
    for (double r : {1.0, 2.0, 4.0}) {
        std::size_t cap = static_cast<std::size_t>(std::ceil(4.0 * 3.14159265358979323846 * r));
        WitnessReport rep = hypothesis_scan(F, Real(r), cap);
        bool found = false;
        std::size_t at_n = 0;
        for (const auto& f : rep.falsifiers)
            if (abs(f.alpha) >= Real(r) && f.residual <= Real(1e-6)) {
                found = true;
                at_n = f.n;
                break;
            }
        pass = pass && found;
        d << "r=" << r << (found ? " n=" + std::to_string(at_n) : " none") << " ";
    }
    report(4, "hypothesis falsification", pass, d.str());
}

// 5. Vieta identities: residuals |e_k(lambda) - C(n,k) m_k| <= 1e-8 over
//    100 seeded normalized functionals, n <= 30, k <= 5.
void criterion5() {
    gkz_test::Rng rng(505);
    Real worst(0);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 6 + rng.gen() % 25; // 6..30
        std::vector<Complex> m(n + 1);
        m[0] = Complex(Real(1));
        for (std::size_t k = 1; k <= n; ++k) m[k] = rng.disc(1.0);
        auto F = MomentFunctional::from_moments(std::move(m));
        for (const Real& res : vieta_check(F, n, 5)) {
            if (res > worst) worst = res;
            if (res > Real(1e-8)) ++bad;
        }
    }
    std::ostringstream d;
    d << "worst residual " << static_cast<double>(worst) << ", " << bad << " over tolerance";
    report(5, "Vieta residuals <= 1e-8", bad == 0, d.str());
}

// 6. Multinomial identity: brute-force expansion of (sum lambda_i)^k matches
//    the direct power to 1e-20 * max(1, |lhs|), n <= 6, k <= 4, 100 seeds.
void criterion6() {
    gkz_test::Rng rng(606);
    int bad = 0;
    Real worst_ratio(0);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.gen() % 6;
        unsigned long k = 1 + rng.gen() % 4;
        RootSet rs;
        for (std::size_t i = 0; i < n; ++i) rs.roots.push_back(rng.disc(2.0));
        MultinomialCheck chk = multinomial_power_check(rs, k);
        Real scale = std::max(Real(1), abs(chk.lhs));
        Real ratio = chk.residual / scale;
        if (ratio > worst_ratio) worst_ratio = ratio;
        if (chk.residual > Real(1e-20) * scale) ++bad;
    }
    std::ostringstream d;
    d << "worst scaled residual " << static_cast<double>(worst_ratio) << ", " << bad
      << " over tolerance";
    report(6, "multinomial power identity", bad == 0, d.str());
}

// 7. Combinatorial counts: count_monomial_terms equals brute-force
//    enumeration for all n <= 8, k <= 6.
void criterion7() {
    int mismatches = 0;
    for (unsigned long n = 1; n <= 8; ++n)
        for (unsigned long k = 0; k <= 6; ++k) {
            // weak compositions of k into n parts, one part at a time
            std::vector<BigInt> ways(k + 1, BigInt(0));
            ways[0] = 1;
            for (unsigned long part = 0; part < n; ++part) {
                std::vector<BigInt> next(k + 1, BigInt(0));
                for (unsigned long used = 0; used <= k; ++used)
                    for (unsigned long add = 0; add + used <= k; ++add)
                        next[used + add] += ways[used];
                ways = std::move(next);
            }
            // k-subsets of n by Pascal recursion
            std::vector<BigInt> sub(k + 1, BigInt(0));
            sub[0] = 1;
            for (unsigned long row = 1; row <= n; ++row)
                for (unsigned long col = std::min<unsigned long>(k, row); col >= 1; --col)
                    sub[col] += sub[col - 1];
            MonomialTermCounts counts = count_monomial_terms(n, k);
            if (counts.a_count != ways[k] || counts.b_count != sub[k]) ++mismatches;
        }
    report(7, "monomial term counts vs enumeration", mismatches == 0,
           std::to_string(mismatches) + " mismatches over n <= 8, k <= 6");
}

// 8. Hardy diagnostics: classical weights give (norm, r0, spectral radius)
//    = (1,1,1) exactly; reciprocal weights at N = 400, k = 200 give spectral
//    radius estimate <= 0.02 with the strict-cyclicity test positive;
//    classical kernel norm at 0.6 equals 1.25 to 1e-6.
void criterion8() {
    auto classical = WeightSequence::classical(400);
    ShiftDiagnostics cd = shift_diagnostics(classical);
    bool classical_ok = cd.shift_norm == Real(1) && cd.r0_estimate == Real(1) &&
                        cd.spectral_radius_estimate == Real(1);

    ShiftDiagnostics rd = shift_diagnostics(WeightSequence::reciprocal(400), 0, 200);
    bool reciprocal_ok = rd.spectral_k == 200 && rd.spectral_radius_estimate <= Real("0.02") &&
                         rd.strict_cyclicity.sufficient;

    KernelNorm kn = kernel_norm_at(classical, Complex(Real("0.6")));
    bool kernel_ok = kn.converged && abs(kn.value - Real("1.25")) <= Real(1e-6);

    std::ostringstream d;
    d << "classical " << (classical_ok ? "exact" : "off") << ", reciprocal spectral "
      << static_cast<double>(rd.spectral_radius_estimate) << ", kernel "
      << static_cast<double>(kn.value);
    report(8, "Hardy shift diagnostics", classical_ok && reciprocal_ok && kernel_ok, d.str());
}

// 9. Weighted-composition round-trip for psi = 1 + zeta/2, phi = zeta/2 on
//    the 64-point grid at degree cap 24: symbols recovered to 1e-10
//    relative, factorization residual <= 1e-10 over 50 seeded polynomials,
//    and each per-point functional's scan witness matches phi to 1e-8.
void criterion9() {
    auto grid = SampleGrid::default_polar();
    std::vector<Complex> psi, phi;
    for (const auto& z : grid.points) {
        psi.push_back(Complex(Real(1)) + z / Complex(Real(2)));
        phi.push_back(z / Complex(Real(2)));
    }
    auto T = SampledLinearMap::from_symbols(grid, psi, phi, 24);
    SymbolPair s = detect_symbols(T, Real(1));

    Real worst_sym(0);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        Real e1 = abs(s.psi_samples[j] - psi[j]) / abs(psi[j]);
        Real e2 = abs(s.phi_samples[j] - phi[j]) / std::max(Real(1), abs(phi[j]));
        worst_sym = std::max({worst_sym, e1, e2});
    }

    gkz_test::Rng rng(909);
    Real worst_fact(0);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t deg = 1 + rng.gen() % 24;
        std::vector<Complex> c;
        for (std::size_t j = 0; j <= deg; ++j) c.push_back(rng.disc(1.0));
        worst_fact = std::max(worst_fact, verify_factorization(T, s, Polynomial(std::move(c))));
    }

    Real worst_witness(0);
    bool scans_ok = true;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        auto F = per_point_functional(T, j);
        WitnessReport rep = hypothesis_scan(F, Real(1), 24);
        scans_ok = scans_ok && rep.scan_passed;
        worst_witness = std::max(worst_witness, abs(rep.witness - s.phi_samples[j]));
    }

    bool pass = worst_sym <= Real(1e-10) && worst_fact <= Real(1e-10) && scans_ok &&
                worst_witness <= Real(1e-8);
    std::ostringstream d;
    d << "symbols " << static_cast<double>(worst_sym) << ", factorization "
      << static_cast<double>(worst_fact) << ", witness " << static_cast<double>(worst_witness);
    report(9, "weighted-composition round-trip", pass, d.str());
}

// 10. Determinism: two CLI runs of every subcommand with the same seed
//     produce byte-identical artifacts.
void criterion10() {
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "gkz-acceptance";
    fs::remove_all(base);
    const std::vector<std::pair<std::string, std::string>> jobs = {
        {"gkz-scan.json", "gkz-scan --point 0.4:0.3 --r 1 --nmax 20"},
        {"defect-table.csv", "defect-table --point 0.5 --k 2 --nlist 10,20,50 --rmode per-n"},
        {"vieta-check.json", "vieta-check --mixture 0.5@0,0.5@0.5 --n 12 --kmax 4"},
        {"hardy-info.json", "hardy-info --donoghue reciprocal --weight-truncation 400"},
        {"wcomp-verify.json", "wcomp-verify --builtin halfshift --r 1"},
        {"donoghue-demo.json", "donoghue-demo --weight-truncation 400"},
    };
    bool pass = true;
    std::string detail;
    for (const char* run : {"a", "b"}) {
        fs::path dir = base / run;
        fs::create_directories(dir);
        for (const auto& [artifact, args] : jobs) {
            ToolResult r = run_tool(args + " --seed 777 --output-dir " + dir.string());
            if (r.exit_code != 0) {
                pass = false;
                if (detail.empty()) detail = "nonzero exit for " + artifact;
            }
        }
    }
    int identical = 0;
    for (const auto& [artifact, args] : jobs) {
        std::ifstream fa(base / "a" / artifact, std::ios::binary);
        std::ifstream fb(base / "b" / artifact, std::ios::binary);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (fa && fb && !sa.str().empty() && sa.str() == sb.str())
            ++identical;
        else if (detail.empty())
            detail = "mismatch in " + artifact;
    }
    pass = pass && identical == static_cast<int>(jobs.size());
    if (detail.empty())
        detail = std::to_string(identical) + "/" + std::to_string(jobs.size()) +
                 " artifacts byte-identical";
    report(10, "deterministic artifacts", pass, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-gkz-tool>\n";
        return 2;
    }
    g_tool = argv[1];

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << (10 - g_failures) << "/10)\n";
    return g_failures == 0 ? 0 : 1;
}
