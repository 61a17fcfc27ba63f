#include "chowkit/format.hpp"

#include <sstream>

namespace chowkit {

namespace {

std::string monomial(int k) {
    if (k == 0) return "";
    if (k == 1) return "h";
    return "h^" + std::to_string(k);
}

} // namespace

std::string format_tuple(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_decimal(v[i]);
    }
    return out + ")";
}

std::string format_kclass(const KClass& k) { return format_tuple(k.coeffs); }

std::string format_poly(const TruncPoly& p) {
    std::string out;
    for (int k = 0; k <= p.n; ++k) {
        const Int& c = p.coeffs[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Int a = abs_int(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (a != 1 || k == 0) out += to_decimal(a);
        out += monomial(k);
    }
    return out.empty() ? "0" : out;
}

std::string format_matrix(const IntMatrix& m) {
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i * m.cols() + j] = to_decimal(m(i, j));
            width[j] = std::max(width[j], cells[i * m.cols() + j].size());
        }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += '\n';
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& c = cells[i * m.cols() + j];
            out += ' ';
            out.append(width[j] - c.size(), ' ');
            out += c;
        }
        out += " ]";
    }
    if (m.rows() == 0)
        out = "[ ] (" + std::to_string(m.rows()) + "x" +
              std::to_string(m.cols()) + ")";
    return out;
}

std::string format_factors(const InvariantFactors& f) {
    std::string out;
    if (f.free_rank == 1)
        out = "Z";
    else if (f.free_rank > 1)
        out = "Z^" + std::to_string(f.free_rank);
    for (const Int& d : f.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + to_decimal(d);
    }
    return out.empty() ? "0" : out;
}

std::string format_smith(const SmithForm& f) {
    return "invariant factors: " + format_tuple(f.diagonal());
}

std::string format_verdict(const MembershipVerdict& v) {
    if (v.member)
        return "Member: coefficients " + format_tuple(*v.coefficients);
    std::string out = "NonMember";
    if (v.certificate)
        out += ": certificate functional " + format_tuple(v.certificate->functional) +
               " mod " + to_decimal(v.certificate->modulus);
    return out;
}

std::string format_f2class(const F2Class& x, const F2GradedAlg& a) {
    std::string out;
    if (!x.coords.empty()) {
        const auto& labels = a.basis(x.degree);
        for (std::size_t i = 0; i < x.coords.size(); ++i) {
            if (!x.coords[i]) continue;
            if (!out.empty()) out += " + ";
            out += labels.at(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string format_realization(const RealizationResult& r) {
    if (r.realized())
        return "realized: class " + format_kclass(*r.cls) + ", total Chern " +
               format_poly(total_chern(*r.cls));
    return "obstructed: odd discrepancy " + to_decimal(*r.discrepancy);
}

std::string format_report(const StableTrivialityReport& r) {
    std::ostringstream out;
    out << "stable-triviality report, delta = " << to_decimal(r.delta) << '\n';
    out << "verdict: " << format_verdict(r.verdict) << '\n';
    out << "interpretation: " << r.interpretation << '\n';
    out << "hypotheses:";
    for (const HypothesisFlag& f : r.hypothesis_flags)
        out << ' ' << f.name << '=' << (f.satisfied ? "yes" : "no");
    out << '\n';
    out << "target: " << format_kclass(r.target) << '\n';
    out << "generators:";
    for (const KClass& g : r.generators) out << ' ' << format_kclass(g);
    out << '\n';
    out << "chern residues " << format_tuple(r.chern_summary.residues)
        << " against moduli " << format_tuple(r.chern_summary.moduli)
        << " (raw " << format_tuple(r.chern_summary.raw) << ")\n";
    out << "notes:";
    for (const std::string& n : r.provenance_notes) out << "\n  - " << n;
    return out.str();
}

std::string format_report(const PullbackExampleReport& r) {
    std::ostringstream out;
    out << "fibre-product example \"" << r.name << "\"\n";
    out << r.description << '\n';
    out << "left " << format_factors(r.left_source) << ", right "
        << format_factors(r.right_source) << ", base " << format_factors(r.base)
        << '\n';
    out << "pullback: " << format_factors(r.result);
    for (const std::string& n : r.provenance_notes) out << "\n  - " << n;
    return out.str();
}

std::string format_report(const Phi3Report& r) {
    std::ostringstream out;
    out << "degree-3 consistency: " << (r.consistent ? "consistent" : "inconsistent")
        << '\n';
    out << "input " << format_factors(r.input_factors) << ", torsion "
        << format_factors(r.torsion_factors) << " (dimension "
        << r.torsion_dimension << ", prescribed " << r.h3_dim << ")\n";
    out << r.criterion;
    return out.str();
}

} // namespace chowkit
