#include "chowkit/json_io.hpp"

#include <fstream>

namespace chowkit {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object())
        throw input_error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(where + ": missing key \"" + key + "\"");
    return *it;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw input_error(where + ": expected a nonnegative JSON number");
    return j.get<std::size_t>();
}

int degree_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0 ||
        j.get<long long>() > 1000)
        throw input_error(where + ": expected a small nonnegative JSON number");
    return j.get<int>();
}

bool bool_from_json(const Json& j, const std::string& where) {
    if (!j.is_boolean())
        throw input_error(where + ": expected true or false");
    return j.get<bool>();
}

std::string string_from_json(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw input_error(where + ": expected a string");
    return j.get<std::string>();
}

std::vector<std::string> strings_from_json(const Json& j,
                                           const std::string& where) {
    if (!j.is_array())
        throw input_error(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const Json& e : j) out.push_back(string_from_json(e, where));
    return out;
}

void check_report_header(const Json& j, const char* kind,
                         const std::string& where) {
    if (string_from_json(need(j, "schema", where), where + ".schema") !=
        report_schema)
        throw input_error(where + ": unsupported schema (want \"" +
                          std::string(report_schema) + "\")");
    if (string_from_json(need(j, "kind", where), where + ".kind") != kind)
        throw input_error(where + ": wrong report kind (want \"" +
                          std::string(kind) + "\")");
}

} // namespace

Json to_json(const Int& x) { return Json(to_decimal(x)); }

Json to_json(const IntVec& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(to_json(x));
    return j;
}

Json to_json(const IntMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(to_json(m(i, k)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const SmithForm& f) {
    return Json{{"u", to_json(f.u)},
                {"s", to_json(f.s)},
                {"v", to_json(f.v)},
                {"invariant_factors", to_json(f.diagonal())}};
}

Json to_json(const MembershipCertificate& c) {
    return Json{{"functional", to_json(c.functional)},
                {"modulus", to_json(c.modulus)}};
}

Json to_json(const MembershipVerdict& v) {
    Json j{{"member", v.member}};
    j["coefficients"] = v.coefficients ? to_json(*v.coefficients) : Json();
    j["certificate"] = v.certificate ? to_json(*v.certificate) : Json();
    return j;
}

Json to_json(const FpAbGroup& g) {
    return Json{{"gens", g.n_gens()}, {"relations", to_json(g.relations())}};
}

Json to_json(const InvariantFactors& f) {
    return Json{{"free_rank", f.free_rank}, {"torsion", to_json(f.torsion)}};
}

Json to_json(const AbHom& h) {
    return Json{{"source", to_json(h.source())},
                {"target", to_json(h.target())},
                {"matrix", to_json(h.matrix())}};
}

Json to_json(const KClass& k) {
    return Json{{"n", k.n}, {"coeffs", to_json(k.coeffs)}};
}

Json to_json(const TruncPoly& p) {
    return Json{{"n", p.n}, {"coeffs", to_json(p.coeffs)}};
}

Json to_json(const F2GradedAlg& a) {
    Json basis = Json::object();
    for (int d = 1; d <= a.max_degree(); ++d)
        basis[std::to_string(d)] = a.basis(d);
    Json cup = Json::array();
    for (const F2CupEntry& e : a.cup_entries())
        cup.push_back(
            Json{{"left", e.left}, {"right", e.right}, {"value", e.value}});
    Json sq1 = Json::array();
    for (const F2SqEntry& e : a.sq_entries())
        sq1.push_back(Json{{"on", e.on}, {"value", e.value}});
    return Json{{"max_degree", a.max_degree()},
                {"basis", basis},
                {"cup", cup},
                {"sq1", sq1}};
}

Json to_json(const F2Class& x, const F2GradedAlg& a) {
    Json terms = Json::array();
    // The virtual zero one degree past the top has no basis to consult.
    if (!x.coords.empty()) {
        const auto& labels = a.basis(x.degree);
        for (std::size_t i = 0; i < x.coords.size(); ++i)
            if (x.coords[i]) terms.push_back(labels.at(i));
    }
    return Json{{"degree", x.degree}, {"terms", terms}};
}

Json to_json(const RealizationResult& r) {
    Json j;
    j["outcome"] = r.realized() ? "realized" : "obstructed";
    j["class"] = r.cls ? to_json(*r.cls) : Json();
    j["chern_check"] = r.cls ? to_json(total_chern(*r.cls)) : Json();
    j["discrepancy"] = r.discrepancy ? to_json(*r.discrepancy) : Json();
    return j;
}

Json to_json(const StableTrivialityReport& r) {
    Json flags = Json::array();
    for (const HypothesisFlag& f : r.hypothesis_flags)
        flags.push_back(Json{{"name", f.name}, {"satisfied", f.satisfied}});
    Json gens = Json::array();
    for (const KClass& g : r.generators) gens.push_back(to_json(g));
    return Json{{"schema", report_schema},
                {"kind", "stable-triviality"},
                {"delta", to_json(r.delta)},
                {"hypothesis_flags", flags},
                {"generators", gens},
                {"target", to_json(r.target)},
                {"verdict", to_json(r.verdict)},
                {"chern_summary",
                 Json{{"raw", to_json(r.chern_summary.raw)},
                      {"moduli", to_json(r.chern_summary.moduli)},
                      {"residues", to_json(r.chern_summary.residues)},
                      {"moduli_note", r.chern_summary.moduli_note}}},
                {"provenance_notes", r.provenance_notes},
                {"interpretation", r.interpretation}};
}

Json to_json(const PullbackExampleReport& r) {
    return Json{{"schema", report_schema},
                {"kind", "chowwitt-example"},
                {"name", r.name},
                {"description", r.description},
                {"left_source", to_json(r.left_source)},
                {"right_source", to_json(r.right_source)},
                {"base", to_json(r.base)},
                {"result", to_json(r.result)},
                {"provenance_notes", r.provenance_notes}};
}

Json to_json(const Phi3Report& r) {
    return Json{{"schema", report_schema},
                {"kind", "phi3-check"},
                {"input_factors", to_json(r.input_factors)},
                {"torsion_factors", to_json(r.torsion_factors)},
                {"torsion_is_f2_space", r.torsion_is_f2_space},
                {"torsion_dimension", r.torsion_dimension},
                {"h3_dim", r.h3_dim},
                {"consistent", r.consistent},
                {"criterion", r.criterion}};
}

Int int_from_json(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw input_error(where +
                          ": integers must be decimal strings, e.g. \"-12\"");
    try {
        return parse_decimal(j.get<std::string>());
    } catch (const error& e) {
        throw input_error(where + ": " + e.what());
    }
}

IntVec intvec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array())
        throw input_error(where + ": expected an array of decimal strings");
    IntVec out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

IntMatrix matrix_from_json(const Json& j) {
    const std::string where = "matrix";
    const std::size_t rows = size_from_json(need(j, "rows", where), "matrix.rows");
    const std::size_t cols = size_from_json(need(j, "cols", where), "matrix.cols");
    const Json& entries = need(j, "entries", where);
    if (!entries.is_array() || entries.size() != rows)
        throw input_error("matrix.entries: expected " + std::to_string(rows) +
                          " rows");
    std::vector<IntVec> data;
    for (std::size_t i = 0; i < rows; ++i) {
        IntVec row = intvec_from_json(entries[i],
                                      "matrix.entries[" + std::to_string(i) + "]");
        if (row.size() != cols)
            throw input_error("matrix.entries[" + std::to_string(i) +
                              "]: expected " + std::to_string(cols) + " entries");
        data.push_back(std::move(row));
    }
    if (rows == 0) return IntMatrix(0, cols);
    return IntMatrix::from_rows(data);
}

FpAbGroup group_from_json(const Json& j) {
    const std::size_t gens = size_from_json(need(j, "gens", "group"), "group.gens");
    IntMatrix rel = matrix_from_json(need(j, "relations", "group"));
    if (rel.rows() > 0 && rel.cols() != gens)
        throw input_error("group.relations: rows must have length gens = " +
                          std::to_string(gens));
    if (rel.rows() == 0) rel = IntMatrix(0, gens);
    return FpAbGroup(gens, std::move(rel));
}

InvariantFactors factors_from_json(const Json& j) {
    InvariantFactors f;
    f.free_rank = size_from_json(need(j, "free_rank", "factors"), "factors.free_rank");
    f.torsion = intvec_from_json(need(j, "torsion", "factors"), "factors.torsion");
    return f;
}

AbHom hom_from_json(const Json& j) {
    return AbHom(group_from_json(need(j, "source", "hom")),
                 group_from_json(need(j, "target", "hom")),
                 matrix_from_json(need(j, "matrix", "hom")));
}

KClass kclass_from_json(const Json& j) {
    const int n = degree_from_json(need(j, "n", "kclass"), "kclass.n");
    IntVec coeffs = intvec_from_json(need(j, "coeffs", "kclass"), "kclass.coeffs");
    if (coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw input_error("kclass.coeffs: expected length n + 1 = " +
                          std::to_string(n + 1));
    return KClass(n, std::move(coeffs));
}

TruncPoly truncpoly_from_json(const Json& j) {
    const int n = degree_from_json(need(j, "n", "poly"), "poly.n");
    IntVec coeffs = intvec_from_json(need(j, "coeffs", "poly"), "poly.coeffs");
    if (coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw input_error("poly.coeffs: expected length n + 1 = " +
                          std::to_string(n + 1));
    return TruncPoly(n, std::move(coeffs));
}

F2GradedAlg algebra_from_json(const Json& j) {
    const int maxd =
        degree_from_json(need(j, "max_degree", "algebra"), "algebra.max_degree");
    const Json& basis_obj = need(j, "basis", "algebra");
    if (!basis_obj.is_object())
        throw input_error("algebra.basis: expected an object keyed by degree");
    std::vector<std::vector<std::string>> basis(maxd);
    for (auto it = basis_obj.begin(); it != basis_obj.end(); ++it) {
        int d = 0;
        try {
            std::size_t pos = 0;
            d = std::stoi(it.key(), &pos);
            if (pos != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw input_error("algebra.basis: key \"" + it.key() +
                              "\" is not a degree");
        }
        if (d < 1 || d > maxd)
            throw input_error("algebra.basis: degree " + it.key() +
                              " outside [1, max_degree]");
        basis[d - 1] =
            strings_from_json(it.value(), "algebra.basis[" + it.key() + "]");
    }
    std::vector<F2CupEntry> cup;
    const Json& cup_arr = need(j, "cup", "algebra");
    if (!cup_arr.is_array())
        throw input_error("algebra.cup: expected an array");
    for (const Json& e : cup_arr)
        cup.push_back(
            F2CupEntry{string_from_json(need(e, "left", "cup entry"), "cup.left"),
                       string_from_json(need(e, "right", "cup entry"), "cup.right"),
                       strings_from_json(need(e, "value", "cup entry"), "cup.value")});
    std::vector<F2SqEntry> sq;
    const Json& sq_arr = need(j, "sq1", "algebra");
    if (!sq_arr.is_array())
        throw input_error("algebra.sq1: expected an array");
    for (const Json& e : sq_arr)
        sq.push_back(
            F2SqEntry{string_from_json(need(e, "on", "sq1 entry"), "sq1.on"),
                      strings_from_json(need(e, "value", "sq1 entry"), "sq1.value")});
    return F2GradedAlg(maxd, std::move(basis), std::move(cup), std::move(sq));
}

F2Class f2class_from_json(const Json& j, const F2GradedAlg& a) {
    const int d = degree_from_json(need(j, "degree", "class"), "class.degree");
    return a.class_from_labels(
        d, strings_from_json(need(j, "terms", "class"), "class.terms"));
}

MembershipVerdict verdict_from_json(const Json& j) {
    MembershipVerdict v;
    v.member = bool_from_json(need(j, "member", "verdict"), "verdict.member");
    const Json& coef = need(j, "coefficients", "verdict");
    if (!coef.is_null())
        v.coefficients = intvec_from_json(coef, "verdict.coefficients");
    const Json& cert = need(j, "certificate", "verdict");
    if (!cert.is_null()) {
        MembershipCertificate c;
        c.functional = intvec_from_json(need(cert, "functional", "certificate"),
                                        "certificate.functional");
        c.modulus = int_from_json(need(cert, "modulus", "certificate"),
                                  "certificate.modulus");
        v.certificate = std::move(c);
    }
    return v;
}

StableTrivialityReport stable_report_from_json(const Json& j) {
    const std::string where = "report";
    check_report_header(j, "stable-triviality", where);
    StableTrivialityReport r;
    r.delta = int_from_json(need(j, "delta", where), "report.delta");
    const Json& flags = need(j, "hypothesis_flags", where);
    if (!flags.is_array())
        throw input_error("report.hypothesis_flags: expected an array");
    for (const Json& f : flags)
        r.hypothesis_flags.push_back(HypothesisFlag{
            string_from_json(need(f, "name", "flag"), "flag.name"),
            bool_from_json(need(f, "satisfied", "flag"), "flag.satisfied")});
    const Json& gens = need(j, "generators", where);
    if (!gens.is_array())
        throw input_error("report.generators: expected an array");
    for (const Json& g : gens) r.generators.push_back(kclass_from_json(g));
    r.target = kclass_from_json(need(j, "target", where));
    r.verdict = verdict_from_json(need(j, "verdict", where));
    const Json& cs = need(j, "chern_summary", where);
    r.chern_summary.raw = intvec_from_json(need(cs, "raw", "chern_summary"),
                                           "chern_summary.raw");
    r.chern_summary.moduli = intvec_from_json(need(cs, "moduli", "chern_summary"),
                                              "chern_summary.moduli");
    r.chern_summary.residues = intvec_from_json(
        need(cs, "residues", "chern_summary"), "chern_summary.residues");
    r.chern_summary.moduli_note = string_from_json(
        need(cs, "moduli_note", "chern_summary"), "chern_summary.moduli_note");
    r.provenance_notes = strings_from_json(need(j, "provenance_notes", where),
                                           "report.provenance_notes");
    r.interpretation = string_from_json(need(j, "interpretation", where),
                                        "report.interpretation");
    return r;
}

PullbackExampleReport pullback_report_from_json(const Json& j) {
    const std::string where = "report";
    check_report_header(j, "chowwitt-example", where);
    PullbackExampleReport r;
    r.name = string_from_json(need(j, "name", where), "report.name");
    r.description =
        string_from_json(need(j, "description", where), "report.description");
    r.left_source = factors_from_json(need(j, "left_source", where));
    r.right_source = factors_from_json(need(j, "right_source", where));
    r.base = factors_from_json(need(j, "base", where));
    r.result = factors_from_json(need(j, "result", where));
    r.provenance_notes = strings_from_json(need(j, "provenance_notes", where),
                                           "report.provenance_notes");
    return r;
}

Phi3Report phi3_report_from_json(const Json& j) {
    const std::string where = "report";
    check_report_header(j, "phi3-check", where);
    Phi3Report r;
    r.input_factors = factors_from_json(need(j, "input_factors", where));
    r.torsion_factors = factors_from_json(need(j, "torsion_factors", where));
    r.torsion_is_f2_space =
        bool_from_json(need(j, "torsion_is_f2_space", where),
                       "report.torsion_is_f2_space");
    r.torsion_dimension = size_from_json(need(j, "torsion_dimension", where),
                                         "report.torsion_dimension");
    r.h3_dim = size_from_json(need(j, "h3_dim", where), "report.h3_dim");
    r.consistent =
        bool_from_json(need(j, "consistent", where), "report.consistent");
    r.criterion =
        string_from_json(need(j, "criterion", where), "report.criterion");
    return r;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out)
        throw input_error("failed writing file: " + path);
}

IntVec parse_tuple(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')')
            throw input_error("tuple: unbalanced parentheses in \"" + s + "\"");
        t = t.substr(1, t.size() - 2);
    }
    IntVec out;
    if (t.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = t.find(',', start);
        const std::string tok = t.substr(start, comma - start);
        try {
            out.push_back(parse_decimal(tok));
        } catch (const error&) {
            throw input_error("tuple: \"" + tok + "\" is not an integer");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace chowkit
