#ifndef GKZ_IO_HPP
#define GKZ_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkz/composition.hpp"
#include "gkz/gkz.hpp"
#include "gkz/hardy.hpp"

namespace gkz {

using nlohmann::json;

namespace io_detail {
/// Fixed shortest-roundtrip double formatting; locale-independent.
inline double to_d(const Real& v) { return static_cast<double>(v); }
} // namespace io_detail

inline json to_json(const Complex& z) {
    return json::array({io_detail::to_d(z.re), io_detail::to_d(z.im)});
}

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::domain_error("expected a [re, im] pair");
    return Complex(Real(j[0].get<double>()), Real(j[1].get<double>()));
}

inline json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

inline Polynomial polynomial_from_json(const json& j) {
    std::vector<Complex> c;
    for (const auto& e : j) c.push_back(complex_from_json(e));
    return Polynomial(std::move(c));
}

inline json to_json(const RootSet& rs) {
    json roots = json::array(), residuals = json::array(), radii = json::array();
    for (const auto& r : rs.roots) roots.push_back(to_json(r));
    for (const auto& r : rs.residuals) residuals.push_back(io_detail::to_d(r));
    for (const auto& r : rs.error_radii) radii.push_back(io_detail::to_d(r));
    return json{{"roots", roots},
                {"residuals", residuals},
                {"errorRadii", radii},
                {"maxModulus", io_detail::to_d(rs.max_modulus)},
                {"conditionFactor", io_detail::to_d(rs.condition_factor)}};
}

inline json to_json(const WitnessReport& w) {
    json falsifiers = json::array();
    for (const auto& f : w.falsifiers)
        falsifiers.push_back(json{{"n", f.n},
                                  {"alpha", to_json(f.alpha)},
                                  {"residual", io_detail::to_d(f.residual)}});
    return json{{"witness", to_json(w.witness)},
                {"radius", io_detail::to_d(w.radius)},
                {"maxDefect", io_detail::to_d(w.max_defect)},
                {"scanPassed", w.scan_passed},
                {"falsifiers", falsifiers}};
}

inline json to_json(const GkzReport& g) {
    json vieta = json::array();
    for (const auto& v : g.vieta_residuals) vieta.push_back(io_detail::to_d(v));
    json rows = json::array();
    for (const auto& row : g.defect_rows)
        rows.push_back(json{{"k", row.k},
                            {"defect", io_detail::to_d(row.defect)},
                            {"bound", io_detail::to_d(row.bound)},
                            {"holds", row.holds}});
    return json{{"n", g.n},
                {"gkzPoly", to_json(g.gkz_poly)},
                {"roots", to_json(g.roots)},
                {"maxRootModulus", io_detail::to_d(g.max_root_modulus)},
                {"vietaResiduals", vieta},
                {"defectRows", rows}};
}

inline json to_json(const ShiftDiagnostics& d) {
    return json{{"shiftNorm", io_detail::to_d(d.shift_norm)},
                {"r0Estimate", io_detail::to_d(d.r0_estimate)},
                {"r0Window", d.r0_window},
                {"spectralRadiusEstimate", io_detail::to_d(d.spectral_radius_estimate)},
                {"spectralK", d.spectral_k},
                {"strictlyCyclicSufficient", d.strict_cyclicity.sufficient},
                {"shiftWeightsNonIncreasing", d.strict_cyclicity.non_increasing},
                {"shiftWeightsSquareSummable", d.strict_cyclicity.square_summable},
                {"squareSumTailRatio", io_detail::to_d(d.strict_cyclicity.tail_ratio)},
                {"kernelRadius", d.kernel_radius}};
}

inline json to_json(const SymbolPair& s) {
    json psi = json::array(), phi = json::array();
    for (const auto& v : s.psi_samples) psi.push_back(to_json(v));
    for (const auto& v : s.phi_samples) phi.push_back(to_json(v));
    return json{{"psiSamples", psi},
                {"phiSamples", phi},
                {"domainRadius", io_detail::to_d(s.domain_radius)}};
}

/// {grid: [[re,im],...], degree: D, matrix: [[[re,im],...],...]}
inline SampledLinearMap sampled_map_from_json(const json& j) {
    SampledLinearMap T;
    std::vector<Complex> pts;
    for (const auto& e : j.at("grid")) pts.push_back(complex_from_json(e));
    T.grid = SampleGrid::validated(std::move(pts));
    T.degree_cap = j.at("degree").get<std::size_t>();
    for (const auto& row : j.at("matrix")) {
        std::vector<Complex> r;
        for (const auto& e : row) r.push_back(complex_from_json(e));
        if (r.size() != T.degree_cap + 1)
            throw std::domain_error("matrix row length must be degree + 1");
        T.matrix.push_back(std::move(r));
    }
    if (T.matrix.size() != T.grid.size())
        throw std::domain_error("matrix row count must match the grid size");
    return T;
}

inline json to_json(const SampledLinearMap& T) {
    json grid = json::array();
    for (const auto& p : T.grid.points) grid.push_back(to_json(p));
    json matrix = json::array();
    for (const auto& row : T.matrix) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        matrix.push_back(std::move(r));
    }
    return json{{"grid", grid}, {"degree", T.degree_cap}, {"matrix", matrix}};
}

/// One positive decimal per line; line 0 is beta_0 and must equal 1.
/// Blank lines and '#' comments are skipped.
inline WeightSequence weights_from_stream(std::istream& in) {
    std::vector<Real> beta;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        beta.emplace_back(line.substr(a, b - a + 1));
    }
    return WeightSequence::from_list(std::move(beta));
}

inline WeightSequence weights_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open weight file: " + path);
    return weights_from_stream(in);
}

/// Moment file: JSON array of [re, im] pairs, m_0 first.
inline MomentFunctional moments_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open moment file: " + path);
    json j;
    in >> j;
    std::vector<Complex> m;
    for (const auto& e : j) m.push_back(complex_from_json(e));
    return MomentFunctional::from_moments(std::move(m));
}

/// Deterministic CSV value formatting: shortest round-trip decimal,
/// '.' separator, no locale dependence.
inline std::string csv_number(const Real& v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, io_detail::to_d(v));
    return std::string(buf, res.ptr);
}

/// CSV with header "n,defect_over_nk,bound_over_nk".
inline std::string convergence_table_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out << "n,defect_over_nk,bound_over_nk\n";
    for (const auto& row : rows)
        out << row.n << ',' << csv_number(row.defect_over_nk) << ','
            << csv_number(row.bound_over_nk) << '\n';
    return out.str();
}

} // namespace gkz

#endif
