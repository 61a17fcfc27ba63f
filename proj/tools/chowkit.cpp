#include "chowkit/format.hpp"
#include "chowkit/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace chowkit;

namespace {

struct Output {
    std::string format = "pretty";
    std::string out_path; // empty: stdout
};

// CHOWKIT_FORMAT, when set, wins over --format.
std::string resolve_format(const std::string& flag_value) {
    const char* env = std::getenv("CHOWKIT_FORMAT");
    const std::string fmt = env ? std::string(env) : flag_value;
    if (fmt != "json" && fmt != "pretty")
        throw input_error("format must be \"json\" or \"pretty\", got \"" + fmt +
                          "\"");
    return fmt;
}

void emit(const Output& out, const Json& j, const std::string& pretty) {
    const std::string body =
        resolve_format(out.format) == "json" ? j.dump(2) : pretty;
    if (out.out_path.empty()) {
        std::cout << body << '\n';
        return;
    }
    std::ofstream f(out.out_path);
    if (!f)
        throw input_error("cannot open file for writing: " + out.out_path);
    f << body << '\n';
}

Int parse_int_arg(const std::string& s, const std::string& flag) {
    try {
        return parse_decimal(s);
    } catch (const error&) {
        throw input_error(flag + ": \"" + s + "\" is not an integer");
    }
}

KClass kclass_arg(const std::string& s, const std::string& flag) {
    const IntVec v = parse_tuple(s);
    if (v.empty())
        throw input_error(flag + ": expected a tuple like \"(0,5,-4,1)\"");
    return KClass(static_cast<int>(v.size()) - 1, v);
}

TruncPoly poly_arg(const std::string& s, const std::string& flag) {
    const IntVec v = parse_tuple(s);
    if (v.empty())
        throw input_error(flag + ": expected a tuple like \"(1,-1,0,0)\"");
    return TruncPoly(static_cast<int>(v.size()) - 1, v);
}

// Label sums for mod-2 classes: "x+y" or "x,y"; "" and "0" mean zero.
std::vector<std::string> parse_labels(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty() && cur != "0") out.push_back(cur);
        cur.clear();
    };
    for (char c : s) {
        if (c == '+' || c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur.push_back(c);
    }
    flush();
    return out;
}

// Degree is read off the first label; an empty (zero) class falls back to
// `fallback_degree`.
F2Class f2_arg(const F2GradedAlg& a, const std::string& s, int fallback_degree,
               const std::string& flag) {
    const auto labels = parse_labels(s);
    if (labels.empty()) {
        if (fallback_degree < 1)
            throw input_error(flag + ": zero class needs an explicit degree");
        return a.zero_class(fallback_degree);
    }
    const int d = a.basis_class(labels.front()).degree;
    return a.class_from_labels(d, labels);
}

void run_realize_pair(const std::string& c1, const std::string& c2,
                      const Output& out) {
    RealizationResult r;
    r.cls = realize_pair_surface(parse_int_arg(c1, "--c1"),
                                 parse_int_arg(c2, "--c2"));
    emit(out, to_json(r), format_realization(r));
}

void run_realize_triple(const std::string& c1, const std::string& c2,
                        const std::string& c3, const Output& out) {
    const RealizationResult r = realize_triple_threefold(
        parse_int_arg(c1, "--c1"), parse_int_arg(c2, "--c2"),
        parse_int_arg(c3, "--c3"));
    emit(out, to_json(r), format_realization(r));
}

int run(int argc, char** argv) {
    CLI::App app{"chowkit: exact arithmetic for characteristic-class computations"};
    app.name("chowkit");
    app.require_subcommand(0, 1);

    Output out;
    app.add_option("--format", out.format, "Output format: json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--out", out.out_path, "Write output to this file");

    // ---- kzero ----------------------------------------------------------
    auto* kz = app.add_subcommand("kzero", "Grothendieck-ring arithmetic");
    kz->fallthrough();
    kz->require_subcommand(1);

    std::string kz_m, kz_a, kz_b;
    int kz_n = 3;
    auto* kz_lb = kz->add_subcommand("line-bundle", "Class of the line bundle O(m)");
    kz_lb->fallthrough();
    kz_lb->add_option("-m", kz_m, "Twist")->required();
    kz_lb->add_option("-n", kz_n, "Ambient projective dimension")->required();
    kz_lb->callback([&] {
        const KClass k = line_bundle_class(parse_int_arg(kz_m, "-m"), kz_n);
        emit(out, to_json(k), format_kclass(k));
    });

    auto* kz_mul = kz->add_subcommand("mul", "Product of two classes");
    kz_mul->fallthrough();
    kz_mul->add_option("--a", kz_a, "First class, tuple syntax")->required();
    kz_mul->add_option("--b", kz_b, "Second class, tuple syntax")->required();
    kz_mul->callback([&] {
        const KClass k =
            mul(kclass_arg(kz_a, "--a"), kclass_arg(kz_b, "--b"));
        emit(out, to_json(k), format_kclass(k));
    });

    auto* kz_rank = kz->add_subcommand("rank", "Virtual rank of a class");
    kz_rank->fallthrough();
    kz_rank->add_option("--a", kz_a, "Class, tuple syntax")->required();
    kz_rank->callback([&] {
        const Int r = rank(kclass_arg(kz_a, "--a"));
        emit(out, Json{{"rank", to_json(r)}}, to_decimal(r));
    });

    std::string kz_delta = "6";
    auto* kz_pg = kz->add_subcommand(
        "pushforward-gens",
        "Generators of the pushforward lattice for a degree-delta hypersurface");
    kz_pg->fallthrough();
    kz_pg->add_option("--delta", kz_delta, "Hypersurface degree")->required();
    kz_pg->callback([&] {
        const auto gens =
            hypersurface_pushforward_generators(parse_int_arg(kz_delta, "--delta"));
        Json arr = Json::array();
        std::string pretty;
        for (const KClass& g : gens) {
            arr.push_back(to_json(g));
            if (!pretty.empty()) pretty += '\n';
            pretty += format_kclass(g);
        }
        emit(out, Json{{"generators", arr}}, pretty);
    });

    auto* kz_aux = kz->add_subcommand(
        "aux-class", "The auxiliary rank-2 class with Chern classes (0, 1)");
    kz_aux->fallthrough();
    kz_aux->callback([&] {
        const KClass k = aux_rank2_class();
        emit(out, to_json(k), format_kclass(k));
    });

    auto* kz_tgt = kz->add_subcommand(
        "stable-target",
        "Restricted-bundle class minus the trivial rank-2 class");
    kz_tgt->fallthrough();
    kz_tgt->add_option("--delta", kz_delta, "Hypersurface degree")->required();
    kz_tgt->callback([&] {
        const Int d = parse_int_arg(kz_delta, "--delta");
        const KClass k = restricted_bundle_class(d) - Int(2) * KClass::unit(3);
        emit(out, to_json(k), format_kclass(k));
    });

    // ---- chow -----------------------------------------------------------
    auto* ch = app.add_subcommand("chow", "Chern classes in the truncated ring");
    ch->fallthrough();
    ch->require_subcommand(1);

    std::string ch_a;
    int ch_i = 1;
    auto* ch_tc = ch->add_subcommand("total-chern", "Total Chern class");
    ch_tc->fallthrough();
    ch_tc->add_option("--a", ch_a, "Class, tuple syntax")->required();
    ch_tc->callback([&] {
        const TruncPoly p = total_chern(kclass_arg(ch_a, "--a"));
        emit(out, to_json(p), format_poly(p));
    });

    auto* ch_c = ch->add_subcommand("component", "Single Chern component");
    ch_c->fallthrough();
    ch_c->add_option("--i", ch_i, "Component degree")->required();
    ch_c->add_option("--a", ch_a, "Class, tuple syntax")->required();
    ch_c->callback([&] {
        const Int v = chern_component(ch_i, kclass_arg(ch_a, "--a"));
        emit(out, Json{{"i", ch_i}, {"value", to_json(v)}}, to_decimal(v));
    });

    std::string ch_p, ch_scalar = "1", ch_moduli;
    int ch_n = 3;
    auto* ch_inv = ch->add_subcommand("inverse", "Multiplicative series inverse");
    ch_inv->fallthrough();
    ch_inv->add_option("--p", ch_p, "Polynomial coefficients, constant first")
        ->required();
    ch_inv->callback([&] {
        const TruncPoly p = series_inverse(poly_arg(ch_p, "--p"));
        emit(out, to_json(p), format_poly(p));
    });

    auto* ch_pi = ch->add_subcommand(
        "pi", "Coniveau map: the class of a codimension-i cycle of weight a");
    ch_pi->fallthrough();
    ch_pi->add_option("--i", ch_i, "Codimension")->required();
    ch_pi->add_option("--a", ch_scalar, "Cycle weight");
    ch_pi->add_option("-n", ch_n, "Ambient projective dimension");
    ch_pi->callback([&] {
        const KClass k = pi_map(ch_i, parse_int_arg(ch_scalar, "--a"), ch_n);
        emit(out, to_json(k), format_kclass(k));
    });

    auto* ch_q = ch->add_subcommand(
        "quotient", "Chern components reduced in a quotient model");
    ch_q->fallthrough();
    ch_q->add_option("--a", ch_a, "Class, tuple syntax")->required();
    ch_q->add_option("--moduli", ch_moduli,
                     "Per-degree moduli, tuple syntax; 0 leaves a degree unreduced")
        ->required();
    ch_q->callback([&] {
        const KClass a = kclass_arg(ch_a, "--a");
        const IntVec moduli = parse_tuple(ch_moduli);
        if (moduli.size() != static_cast<std::size_t>(a.n))
            throw input_error("--moduli: expected one modulus per degree 1.." +
                              std::to_string(a.n));
        const ChowQuotientModel model(a.n, moduli, "moduli supplied on the command line");
        const IntVec residues = chern_in_quotient(total_chern(a), model);
        emit(out,
             Json{{"residues", to_json(residues)}, {"moduli", to_json(moduli)}},
             format_tuple(residues));
    });

    // ---- steenrod -------------------------------------------------------
    auto* st = app.add_subcommand("steenrod", "Mod-2 cohomology operations");
    st->fallthrough();
    st->require_subcommand(1);

    std::string st_in, st_a1, st_a2, st_a3;
    auto* st_val = st->add_subcommand("validate", "Check the algebra laws");
    st_val->fallthrough();
    st_val->add_option("--in", st_in, "Algebra JSON file")->required();
    st_val->callback([&] {
        const F2GradedAlg a = algebra_from_json(load_json_file(st_in));
        const auto violations = a.validate();
        Json vj = Json::array();
        std::string pretty;
        for (const F2Violation& v : violations) {
            vj.push_back(Json{{"rule", v.rule}, {"detail", v.detail}});
            pretty += v.rule + ": " + v.detail + "\n";
        }
        pretty += violations.empty()
                      ? "valid"
                      : "invalid (" + std::to_string(violations.size()) +
                            (violations.size() == 1 ? " violation)" : " violations)");
        emit(out, Json{{"valid", violations.empty()}, {"violations", vj}},
             pretty);
    });

    auto* st_ob = st->add_subcommand(
        "obstruction", "Rank-3 realization obstruction a3 + a1 a2 + Sq(a2)");
    st_ob->fallthrough();
    st_ob->add_option("--in", st_in, "Algebra JSON file")->required();
    st_ob->add_option("--a1", st_a1, "Degree-1 class as labels, e.g. \"x\"");
    st_ob->add_option("--a2", st_a2, "Degree-2 class as labels");
    st_ob->add_option("--a3", st_a3, "Degree-3 class as labels");
    st_ob->callback([&] {
        const F2GradedAlg a = algebra_from_json(load_json_file(st_in));
        const F2Class r = a.rank3_obstruction(
            a.class_from_labels(1, parse_labels(st_a1)),
            a.class_from_labels(2, parse_labels(st_a2)),
            a.class_from_labels(3, parse_labels(st_a3)));
        Json j = to_json(r, a);
        j["vanishes"] = r.is_zero();
        emit(out, j, format_f2class(r, a));
    });

    auto* st_r2 = st->add_subcommand(
        "rank2", "Rank-2 reduction criterion Sq(a2) + a1 a2");
    st_r2->fallthrough();
    st_r2->add_option("--in", st_in, "Algebra JSON file")->required();
    st_r2->add_option("--a1", st_a1, "Degree-1 class as labels");
    st_r2->add_option("--a2", st_a2, "Degree-2 class as labels");
    st_r2->callback([&] {
        const F2GradedAlg a = algebra_from_json(load_json_file(st_in));
        const F2Class r =
            a.rank2_criterion(a.class_from_labels(1, parse_labels(st_a1)),
                              a.class_from_labels(2, parse_labels(st_a2)));
        Json j = to_json(r, a);
        j["vanishes"] = r.is_zero();
        emit(out, j, format_f2class(r, a));
    });

    std::string st_x, st_y, st_w;
    int st_deg = 1;
    auto* st_cup = st->add_subcommand("cup", "Cup product of two classes");
    st_cup->fallthrough();
    st_cup->add_option("--in", st_in, "Algebra JSON file")->required();
    st_cup->add_option("--x", st_x, "Left class as labels")->required();
    st_cup->add_option("--y", st_y, "Right class as labels")->required();
    st_cup->callback([&] {
        const F2GradedAlg a = algebra_from_json(load_json_file(st_in));
        const F2Class r =
            a.cup(f2_arg(a, st_x, -1, "--x"), f2_arg(a, st_y, -1, "--y"));
        emit(out, to_json(r, a), format_f2class(r, a));
    });

    auto* st_sq = st->add_subcommand("sq", "First Steenrod square");
    st_sq->fallthrough();
    st_sq->add_option("--in", st_in, "Algebra JSON file")->required();
    st_sq->add_option("--x", st_x, "Class as labels; \"0\" for zero")->required();
    st_sq->add_option("--degree", st_deg, "Degree of x when x is zero");
    st_sq->callback([&] {
        const F2GradedAlg a = algebra_from_json(load_json_file(st_in));
        const F2Class r = a.sq(f2_arg(a, st_x, st_deg, "--x"));
        emit(out, to_json(r, a), format_f2class(r, a));
    });

    auto* st_tw = st->add_subcommand(
        "twisted", "Square twisted by a degree-1 class: Sq(x) + w cup x");
    st_tw->fallthrough();
    st_tw->add_option("--in", st_in, "Algebra JSON file")->required();
    st_tw->add_option("--w", st_w, "Degree-1 twist as labels; \"0\" allowed");
    st_tw->add_option("--x", st_x, "Class as labels")->required();
    st_tw->add_option("--degree", st_deg, "Degree of x when x is zero");
    st_tw->callback([&] {
        const F2GradedAlg a = algebra_from_json(load_json_file(st_in));
        const F2Class r = a.twisted_sq(f2_arg(a, st_w, 1, "--w"),
                                       f2_arg(a, st_x, st_deg, "--x"));
        emit(out, to_json(r, a), format_f2class(r, a));
    });

    // ---- intlat ---------------------------------------------------------
    auto* il = app.add_subcommand("intlat", "Integer matrices and lattices");
    il->fallthrough();
    il->require_subcommand(1);

    std::string il_in, il_b, il_target;
    auto* il_snf = il->add_subcommand("snf", "Smith normal form");
    il_snf->fallthrough();
    il_snf->add_option("--in", il_in, "Matrix JSON file")->required();
    il_snf->callback([&] {
        const SmithForm f = smith_normal_form(matrix_from_json(load_json_file(il_in)));
        emit(out, to_json(f), format_smith(f));
    });

    auto* il_solve = il->add_subcommand("solve", "Integer solution of A x = b");
    il_solve->fallthrough();
    il_solve->add_option("--in", il_in, "Matrix JSON file")->required();
    il_solve->add_option("--b", il_b, "Right-hand side, tuple syntax")->required();
    il_solve->callback([&] {
        const IntMatrix a = matrix_from_json(load_json_file(il_in));
        const auto x = solve_integer(a, parse_tuple(il_b));
        Json j{{"solvable", x.has_value()}};
        j["solution"] = x ? to_json(*x) : Json();
        emit(out, j,
             x ? "solution: " + format_tuple(*x) : std::string("no integer solution"));
    });

    auto* il_mem = il->add_subcommand(
        "member", "Lattice membership with certificate on failure");
    il_mem->fallthrough();
    il_mem->add_option("--in", il_in, "Generator matrix JSON file (rows generate)")
        ->required();
    il_mem->add_option("--target", il_target, "Target vector, tuple syntax")
        ->required();
    il_mem->callback([&] {
        const IntMatrix g = matrix_from_json(load_json_file(il_in));
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < g.rows(); ++i) gens.push_back(g.row(i));
        const MembershipVerdict v = lattice_membership(gens, parse_tuple(il_target));
        emit(out, to_json(v), format_verdict(v));
    });

    // ---- abgroup --------------------------------------------------------
    auto* ab = app.add_subcommand("abgroup", "Finitely presented abelian groups");
    ab->fallthrough();
    ab->require_subcommand(1);

    std::string ab_in;
    auto* ab_f = ab->add_subcommand("factors", "Invariant factors");
    ab_f->fallthrough();
    ab_f->add_option("--in", ab_in, "Group JSON file")->required();
    ab_f->callback([&] {
        const InvariantFactors f =
            invariant_factors(group_from_json(load_json_file(ab_in)));
        emit(out, to_json(f), format_factors(f));
    });

    auto* ab_p = ab->add_subcommand(
        "pullback", "Fibre product of two homs with a common target");
    ab_p->fallthrough();
    ab_p->add_option("--in", ab_in, "JSON file with keys \"f\" and \"g\"")
        ->required();
    ab_p->callback([&] {
        const Json j = load_json_file(ab_in);
        if (!j.is_object() || !j.contains("f") || !j.contains("g"))
            throw input_error("pullback input needs hom keys \"f\" and \"g\"");
        const PullbackResult r =
            pullback(hom_from_json(j.at("f")), hom_from_json(j.at("g")));
        const InvariantFactors f = invariant_factors(r.group);
        emit(out,
             Json{{"group", to_json(r.group)},
                  {"factors", to_json(f)},
                  {"to_left", to_json(r.to_left)},
                  {"to_right", to_json(r.to_right)}},
             "pullback: " + format_factors(f));
    });

    auto* ab_t = ab->add_subcommand("torsion", "Torsion subgroup");
    ab_t->fallthrough();
    ab_t->add_option("--in", ab_in, "Group JSON file")->required();
    ab_t->callback([&] {
        const SubgroupResult r =
            torsion_subgroup(group_from_json(load_json_file(ab_in)));
        const InvariantFactors f = invariant_factors(r.group);
        emit(out,
             Json{{"group", to_json(r.group)},
                  {"factors", to_json(f)},
                  {"inclusion", to_json(r.inclusion)}},
             "torsion: " + format_factors(f));
    });

    auto* ab_k = ab->add_subcommand("kernel", "Kernel of a homomorphism");
    ab_k->fallthrough();
    ab_k->add_option("--in", ab_in, "Hom JSON file")->required();
    ab_k->callback([&] {
        const KernelResult r = kernel(hom_from_json(load_json_file(ab_in)));
        const InvariantFactors f = invariant_factors(r.group);
        emit(out,
             Json{{"group", to_json(r.group)},
                  {"factors", to_json(f)},
                  {"inclusion", to_json(r.inclusion)}},
             "kernel: " + format_factors(f));
    });

    auto* ab_c = ab->add_subcommand("cokernel", "Cokernel of a homomorphism");
    ab_c->fallthrough();
    ab_c->add_option("--in", ab_in, "Hom JSON file")->required();
    ab_c->callback([&] {
        const FpAbGroup g = cokernel(hom_from_json(load_json_file(ab_in)));
        const InvariantFactors f = invariant_factors(g);
        emit(out, Json{{"group", to_json(g)}, {"factors", to_json(f)}},
             "cokernel: " + format_factors(f));
    });

    auto* ab_m = ab->add_subcommand("mod2", "Reduction mod 2 as an F2 space");
    ab_m->fallthrough();
    ab_m->add_option("--in", ab_in, "Group JSON file")->required();
    ab_m->callback([&] {
        const Mod2Reduction r =
            mod2_reduction(group_from_json(load_json_file(ab_in)));
        emit(out,
             Json{{"group", to_json(r.group)}, {"dimension", r.dimension}},
             "dimension " + std::to_string(r.dimension) + " over F2");
    });

    // ---- realize --------------------------------------------------------
    auto* re = app.add_subcommand(
        "realize", "Build classes with prescribed Chern coefficients");
    re->fallthrough();

    std::string re_c1 = "0", re_c2 = "0", re_c3 = "0";
    int re_rank = 0;
    re->add_option("--rank", re_rank, "2 (surface pair) or 3 (threefold triple)");
    re->add_option("--c1", re_c1, "First Chern coefficient");
    re->add_option("--c2", re_c2, "Second Chern coefficient");
    re->add_option("--c3", re_c3, "Third Chern coefficient (rank 3)");

    auto* re_pair = re->add_subcommand("pair", "Rank-2 class on the surface");
    re_pair->fallthrough();
    re_pair->add_option("--c1", re_c1, "First Chern coefficient");
    re_pair->add_option("--c2", re_c2, "Second Chern coefficient");
    re_pair->callback([&] { run_realize_pair(re_c1, re_c2, out); });

    auto* re_triple = re->add_subcommand("triple", "Rank-3 class on the threefold");
    re_triple->fallthrough();
    re_triple->add_option("--c1", re_c1, "First Chern coefficient");
    re_triple->add_option("--c2", re_c2, "Second Chern coefficient");
    re_triple->add_option("--c3", re_c3, "Third Chern coefficient");
    re_triple->callback([&] { run_realize_triple(re_c1, re_c2, re_c3, out); });

    int re_bound = 2;
    auto* re_par = re->add_subcommand(
        "parity-oracle", "Attainable mod-2 Chern triples by brute enumeration");
    re_par->fallthrough();
    re_par->add_option("--bound", re_bound, "Coefficient bound, 1..4");
    re_par->callback([&] {
        const auto triples = attainable_parity_oracle(re_bound);
        Json arr = Json::array();
        std::string pretty;
        for (const auto& t : triples) {
            arr.push_back(Json::array({t[0], t[1], t[2]}));
            if (!pretty.empty()) pretty += ' ';
            pretty += "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                      "," + std::to_string(t[2]) + ")";
        }
        emit(out, Json{{"bound", re_bound}, {"triples", arr}}, pretty);
    });

    re->callback([&] {
        if (re_pair->parsed() || re_triple->parsed() || re_par->parsed()) return;
        if (re_rank == 2)
            run_realize_pair(re_c1, re_c2, out);
        else if (re_rank == 3)
            run_realize_triple(re_c1, re_c2, re_c3, out);
        else
            throw input_error(
                "realize: use subcommand pair/triple or --rank 2|3");
    });

    // ---- scenario -------------------------------------------------------
    auto* sc = app.add_subcommand("scenario", "End-to-end worked reports");
    sc->fallthrough();
    sc->require_subcommand(1);

    std::string sc_delta = "6", sc_name, sc_in;
    std::size_t sc_h3 = 0;
    auto* sc_st = sc->add_subcommand(
        "stable-triviality", "Decide stable triviality of the restricted class");
    sc_st->fallthrough();
    sc_st->add_option("--delta", sc_delta, "Hypersurface degree")->required();
    sc_st->callback([&] {
        const StableTrivialityReport r =
            stable_triviality_report(parse_int_arg(sc_delta, "--delta"));
        emit(out, to_json(r), format_report(r));
    });

    auto* sc_cw = sc->add_subcommand("chowwitt-example",
                                     "Worked fibre-product example");
    sc_cw->fallthrough();
    sc_cw->add_option("--name", sc_name, "One of: s2-times-a1, right-leg-iso, custom")
        ->required();
    sc_cw->callback([&] {
        const PullbackExampleReport r = chowwitt_pullback_example(sc_name);
        emit(out, to_json(r), format_report(r));
    });

    auto* sc_p3 = sc->add_subcommand(
        "phi3-check", "Degree-3 torsion versus prescribed mod-2 dimension");
    sc_p3->fallthrough();
    sc_p3->add_option("--in", sc_in, "Group JSON file")->required();
    sc_p3->add_option("--h3-dim", sc_h3, "Prescribed mod-2 dimension")->required();
    sc_p3->callback([&] {
        const Phi3Report r =
            phi3_consistency_check(group_from_json(load_json_file(sc_in)), sc_h3);
        emit(out, to_json(r), format_report(r));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chowkit::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
