#pragma once

// JSON and TSV rendering of the library's report types. All numbers that can
// outgrow doubles are emitted as decimal strings; polynomials are arrays of
// coefficient strings in ascending degree. Key order is fixed so repeated
// runs produce identical bytes.

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "circulant/factorization.hpp"
#include "circulant/galois.hpp"
#include "circulant/graph.hpp"
#include "circulant/numeric.hpp"
#include "circulant/symmetry.hpp"
#include "circulant/transfer.hpp"
#include "circulant/verification.hpp"

namespace circulant {

using Json = nlohmann::ordered_json;

inline Json poly_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const BigInt& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

inline Json spec_json(const CirculantSpec& spec) {
    Json j;
    j["n"] = spec.n;
    j["connection"] = spec.connection_list();
    return j;
}

inline Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string state_string(uint64_t mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int j = 0; j < n; ++j)
        if (mask >> j & 1) {
            if (!first) s += ",";
            s += std::to_string(j);
            first = false;
        }
    return s + "}";
}

inline Json orbit_json(const OrbitDecomposition& dec) {
    Json arr = Json::array();
    for (size_t i = 0; i < dec.orbits.size(); ++i) {
        const DihedralOrbit& o = dec.orbits[i];
        Json j;
        j["orbit"] = i;
        j["representative"] = state_string(o.representative, dec.n);
        j["weight"] = o.weight;
        j["size"] = o.size;
        j["rotation_orbit_size"] = o.rotation_orbit_size;
        j["reflection_closed"] = o.reflection_closed;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline Json indpoly_json(const IndependencePolynomial& ip) {
    Json j;
    j["n"] = ip.spec.n;
    j["d"] = ip.d;
    j["boundary"] = boundary_name(ip.boundary);
    j["coefficients"] = poly_json(ip.poly);
    j["total"] = to_string(ip.total());
    j["independence_number"] = ip.independence_number();
    return j;
}

inline Json sieve_json(const SieveReport& rep) {
    Json j;
    j["input"] = poly_json(rep.input);
    j["scale"] = to_string(rep.scale);
    j["verdict"] = sieve_verdict_name(rep.verdict);
    Json pieces = Json::array();
    for (const SievePiece& p : rep.pieces) {
        Json pj;
        pj["poly"] = poly_json(p.poly);
        pj["pretty"] = to_pretty_string(p.poly);
        pj["multiplicity"] = p.multiplicity;
        pj["proven_irreducible"] = p.proven_irreducible;
        pj["method"] = p.method;
        if (!p.primes.empty()) pj["primes"] = p.primes;
        if (!p.patterns.empty()) pj["patterns"] = p.patterns;
        if (!p.surviving_degrees.empty()) pj["surviving_degrees"] = p.surviving_degrees;
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

inline Json factorization_json(const FactorizationReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["states"] = rep.states;
    j["nu"] = rep.nu;
    j["orbit_kernel_dim"] = rep.orbit_kernel_dim;
    j["anomalous"] = poly_json(rep.anomalous);
    j["anomalous_pretty"] = to_pretty_string(rep.anomalous);
    j["cyclotomic"] = poly_json(rep.cyclotomic);
    j["cyclotomic_pretty"] = to_pretty_string(rep.cyclotomic);
    j["mode_degrees"] = rep.mode_degrees;
    Json modes = Json::array();
    for (const ModeSummary& m : rep.modes) {
        Json mj;
        mj["k"] = m.k;
        mj["dimension"] = m.dimension;
        mj["kernel_dim"] = m.kernel_dim;
        mj["factor_degree"] = m.factor.degree();
        modes.push_back(std::move(mj));
    }
    j["modes"] = std::move(modes);
    j["chi_transfer"] = poly_json(rep.chi_transfer);
    j["chi_orbit"] = poly_json(rep.chi_orbit);
    return j;
}

inline Json mod_table_json(const std::vector<ModReduction>& table) {
    Json arr = Json::array();
    for (const ModReduction& row : table) {
        Json j;
        j["p"] = row.p;
        j["good"] = row.good;
        j["pattern"] = row.pattern;
        j["roots"] = row.roots;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline Json galois_json(const GaloisReport& rep) {
    Json j;
    j["quartic"] = poly_json(rep.quartic);
    j["quartic_pretty"] = to_pretty_string(rep.quartic);
    j["irreducible"] = rep.irreducible;
    j["group"] = quartic_group_name(rep.group);
    j["disc"] = to_string(rep.disc);
    j["disc_square"] = rep.disc_square;
    j["resolvent"] = poly_json(rep.resolvent);
    Json rroots = Json::array();
    for (const BigInt& r : rep.resolvent_roots) rroots.push_back(to_string(r));
    j["resolvent_roots"] = std::move(rroots);
    if (!rep.rational_factors.empty()) {
        Json fs = Json::array();
        for (const IntPoly& f : rep.rational_factors) fs.push_back(to_pretty_string(f));
        j["rational_factors"] = std::move(fs);
    }
    return j;
}

inline Json multiplicity_json(const MultiplicityReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["trivial"] = to_string(rep.trivial);
    j["sign"] = to_string(rep.sign);
    Json td = Json::array();
    for (const BigInt& v : rep.two_dim) td.push_back(to_string(v));
    j["two_dim"] = std::move(td);
    return j;
}

inline Json spectral_json(const SpectralReport& rep) {
    Json j;
    j["rho"] = rep.rho;
    j["rho_orbit"] = rep.rho_orbit;
    j["capacity"] = rep.capacity;
    j["perron_min"] = rep.perron_min;
    j["power_converged"] = rep.power_converged;
    j["power_iterations"] = rep.power_iterations;
    Json growth = Json::array();
    for (const GrowthSample& g : rep.growth) {
        Json gj;
        gj["d"] = g.d;
        gj["count"] = to_string(g.count);
        gj["root"] = g.root;
        growth.push_back(std::move(gj));
    }
    j["growth"] = std::move(growth);
    j["ratios"] = rep.ratios;
    Json roots = Json::array();
    for (const std::complex<double>& z : rep.orbit_roots) {
        Json zj = Json::array();
        zj.push_back(z.real());
        zj.push_back(z.imag());
        roots.push_back(std::move(zj));
    }
    j["orbit_roots"] = std::move(roots);
    j["roots_converged"] = rep.roots_converged;
    return j;
}

inline const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "pass";
        case CheckStatus::failed: return "fail";
        default: return "skip";
    }
}

inline Json verification_json(const VerificationReport& rep) {
    Json j;
    j["spec"] = spec_json(rep.spec);
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["status"] = check_status_name(c.status);
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["passed"] = rep.count(CheckStatus::passed);
    j["failed"] = rep.count(CheckStatus::failed);
    j["skipped"] = rep.count(CheckStatus::skipped);
    j["all_passed"] = rep.all_passed();
    return j;
}

// TSV renderings. Columns follow the summary tables the JSON mirrors, so the
// two formats stay diffable against each other.

inline std::string tsv_escape(const std::string& s) {
    std::string out;
    for (char c : s) out += (c == '\t' || c == '\n') ? ' ' : c;
    return out;
}

inline std::string indpoly_tsv(const IndependencePolynomial& ip) {
    std::ostringstream os;
    os << "degree\tcoefficient\n";
    for (int i = 0; i <= ip.poly.degree(); ++i) os << i << "\t" << ip.poly.coeff(i) << "\n";
    return os.str();
}

inline std::string orbit_tsv(const OrbitDecomposition& dec) {
    std::ostringstream os;
    os << "orbit\trepresentative\tweight\tsize\treflection_closed\n";
    for (size_t i = 0; i < dec.orbits.size(); ++i) {
        const DihedralOrbit& o = dec.orbits[i];
        os << i << "\t" << state_string(o.representative, dec.n) << "\t" << o.weight << "\t" << o.size
           << "\t" << (o.reflection_closed ? 1 : 0) << "\n";
    }
    return os.str();
}

inline std::string factorization_tsv(const FactorizationReport& rep, const SieveReport& sieve) {
    std::ostringstream os;
    os << "n\tnu\tf_anom\tdeg_f_cyc\tmode_degrees\tsieve\n";
    os << rep.n << "\t" << rep.nu << "\t";
    bool first = true;
    for (const SievePiece& p : sieve.pieces) {
        for (int m = 0; m < p.multiplicity; ++m) {
            if (!first) os << " * ";
            os << "(" << tsv_escape(to_pretty_string(p.poly)) << ")";
            first = false;
        }
    }
    os << "\t" << rep.cyclotomic.degree() << "\t[";
    for (size_t i = 0; i < rep.mode_degrees.size(); ++i)
        os << (i ? "," : "") << rep.mode_degrees[i];
    os << "]\t" << sieve_verdict_name(sieve.verdict) << "\n";
    return os.str();
}

inline std::string mod_table_tsv(const std::vector<ModReduction>& table) {
    std::ostringstream os;
    os << "p\tgood\tpattern\troots\n";
    for (const ModReduction& row : table) {
        os << row.p << "\t" << (row.good ? 1 : 0) << "\t";
        for (size_t i = 0; i < row.pattern.size(); ++i) os << (i ? "," : "") << row.pattern[i];
        os << "\t";
        for (size_t i = 0; i < row.roots.size(); ++i) os << (i ? "," : "") << row.roots[i];
        os << "\n";
    }
    return os.str();
}

inline std::string verification_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const CheckResult& c : rep.checks) {
        const char* tag = c.status == CheckStatus::passed ? "PASS"
                          : c.status == CheckStatus::failed ? "FAIL"
                                                            : "SKIP";
        os << "[" << tag << "] " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << rep.count(CheckStatus::passed) << " passed, " << rep.count(CheckStatus::failed) << " failed, "
       << rep.count(CheckStatus::skipped) << " skipped\n";
    return os.str();
}

} // namespace circulant
