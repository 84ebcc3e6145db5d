#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "kd/json_io.hpp"

namespace {

using namespace kd;

struct Options {
    int genus = 3;
    std::string variant = "cc-dd";
    int orientation = 1;
    int bound = 0; // 0: staged elimination, >0: run the enumeration oracle
    bool trace = false;
    std::string format = "json";
    std::string a_file, y_file;

    SurfaceSpec spec() const { return SurfaceSpec(genus, parse_variant(variant)); }
    bool text() const { return format == "text"; }
};

Int enum_limit_from_env()
{
    const char* env = std::getenv("KD_MAX_ENUM");
    if (!env) return Int(10'000'000);
    try {
        Int v = parse_integer(env);
        if (v < 1) throw parse_error("");
        return v;
    } catch (const parse_error&) {
        throw domain_error("KD_MAX_ENUM must be a positive integer");
    }
}

void print_matrix_block(const std::string& name, const IntMat& m)
{
    std::cout << name << ":\n" << m.str() << "\n";
}

int run_double(const Options& opt)
{
    CoveringData cd = complex_double(opt.spec());
    if (!opt.text()) {
        std::cout << covering_report(cd).dump(2) << "\n";
        return 0;
    }
    std::cout << "genus " << opt.genus << " (" << to_string(cd.spec.variant) << ")\n";
    std::cout << "base relator: " << cd.base.relators[0].str() << "\n";
    std::cout << "sheet relators: " << cd.relator_sheet1.str() << "  |  "
              << cd.relator_sheet2.str() << "\n";
    std::cout << "glued by eliminating " << cd.eliminated.str() << " = "
              << cd.eliminated_solution.str() << "\n";
    std::cout << "cover generators:\n";
    for (size_t j = 0; j < cd.x_words.size(); ++j) {
        std::cout << "  x" << j + 1 << " = " << cd.x_words[j].str() << "\n";
        std::cout << "  y" << j + 1 << " = " << cd.y_words[j].str() << "\n";
    }
    std::cout << "symmetry images:\n";
    for (const auto& [g, w] : cd.sigma_words)
        std::cout << "  " << g.str() << " -> " << w.str() << "\n";
    std::cout << "basis order:";
    for (const auto& g : cd.basisBc) std::cout << " " << g.str();
    std::cout << "\n";
    print_matrix_block("projection", cd.projection_matrix);
    print_matrix_block("symmetry", cd.symmetry_matrix);
    print_matrix_block("intersection", cd.intersection);
    return 0;
}

int run_torelli(const Options& opt)
{
    auto sys = build_lift_constraints(opt.spec(), opt.orientation);
    LiftClassification cls;
    if (opt.bound > 0)
        cls = enumerate_lifts_oracle(sys, opt.bound, enum_limit_from_env());
    else
        cls = classify_lifts(sys, opt.trace, 2, enum_limit_from_env());

    if (!opt.text()) {
        std::cout << torelli_report(cls, sys, opt.trace).dump(2) << "\n";
        return 0;
    }
    std::cout << "genus " << opt.genus << ", orientation " << (opt.orientation > 0 ? "+1" : "-1")
              << ", method " << to_string(cls.method) << "\n";
    if (opt.trace)
        for (const auto& line : cls.trace) std::cout << line << "\n";
    std::cout << cls.solutions.size() << " solution(s)\n";
    for (const auto& m : cls.solutions) std::cout << m.str() << "\n";
    return 0;
}

int run_jacobian(const Options& opt)
{
    std::optional<IntMat> A;
    std::optional<RatMat> Y;
    if (!opt.a_file.empty()) A = read_int_matrix_file(opt.a_file);
    if (!opt.y_file.empty()) Y = read_rat_matrix_file(opt.y_file);
    JacobianReport r = build_jacobian_report(opt.spec(), A ? &*A : nullptr, Y ? &*Y : nullptr);

    if (!opt.text()) {
        std::cout << to_json(r).dump(2) << "\n";
        return 0;
    }
    std::cout << "genus " << opt.genus << "\n";
    print_matrix_block("A", r.A);
    std::cout << "components: " << kd::to_string(r.components.component_count) << "\n";
    for (const auto& rep : r.components.representatives) {
        std::cout << "  n = (";
        for (size_t i = 0; i < rep.size(); ++i) std::cout << (i ? "," : "") << rep[i];
        std::cout << ")\n";
    }
    std::cout << "klein lattice (canonical):\n" << r.klein.lattice.canonical_basis().str() << "\n";
    std::cout << "isomorphism holds: " << (r.isomorphism.holds ? "yes" : "no") << "\n";
    return 0;
}

int run_verify(const Options& opt)
{
    SurfaceSpec spec = opt.spec();
    const int s = spec.homology_rank();
    std::vector<std::pair<std::string, bool>> checks;
    auto check = [&](const std::string& name, bool ok) { checks.emplace_back(name, ok); };

    auto hb = homology_invariants(standard_presentation(spec));
    check("base-homology", hb == HomologyInvariants{s, {2}});
    if (!spec.odd()) {
        auto other = spec.variant == PresentationVariant::cc_dd ? PresentationVariant::gamma_delta
                                                                : PresentationVariant::cc_dd;
        check("variant-equivalence",
              homology_invariants(standard_presentation(SurfaceSpec(spec.genus, other))) == hb);
    }

    CoveringData cd = complex_double(spec);
    bool consistent = true;
    try {
        cd.verify();
    } catch (const error&) {
        consistent = false;
    }
    check("cover-consistency", consistent);
    check("symmetry-involution", cd.symmetry_matrix * cd.symmetry_matrix == IntMat::identity(2 * s));
    check("symmetry-antisymplectic",
          cd.symmetry_matrix.transpose() * cd.intersection * cd.symmetry_matrix ==
              -cd.intersection);
    {
        IntMat ps = cd.projection_matrix * cd.symmetry_matrix;
        for (int j = 0; j < ps.cols(); ++j) {
            Int v = ps(cd.torsion_row, j) % 2;
            ps(cd.torsion_row, j) = v < 0 ? v + 2 : v;
        }
        check("projection-absorbs-symmetry", ps == cd.projection_matrix);
    }

    AdaptedBasis ab = adapt_basis(cd.symmetry_matrix, cd.intersection);
    check("adapted-symplectic",
          ab.C.transpose() * cd.intersection * ab.C == standard_symplectic_form(s));
    check("adapted-A-symmetric", ab.A.is_symmetric());
    {
        IntMat conj = inverse_unimodular(ab.C) * cd.symmetry_matrix * ab.C;
        IntMat want(2 * s, 2 * s);
        for (int i = 0; i < s; ++i) {
            want(i, i) = 1;
            want(s + i, s + i) = -1;
            for (int j = 0; j < s; ++j) want(i, s + j) = ab.A(i, j);
        }
        check("adapted-normal-form", conj == want);
    }

    auto sys_p = build_lift_constraints(cd, 1);
    auto sys_m = build_lift_constraints(cd, -1);
    check("identity-lift", sys_p.satisfied_by(IntMat::identity(2 * s)));
    check("symmetry-lift-reversing", sys_m.satisfied_by(cd.symmetry_matrix));
    check("symmetry-not-preserving", !sys_p.satisfied_by(cd.symmetry_matrix));

    JacobianReport jr = build_jacobian_report(spec);
    check("component-count", jr.components.component_count == (spec.odd() ? 1 : 2));
    check("klein-lattice-canonical",
          lattice_equal(jr.klein.lattice, Lattice::scaled_standard(s, Rat(1, 2))));
    check("component-isomorphism", jr.isomorphism.holds);

    bool all = true;
    for (const auto& [name, ok] : checks) all = all && ok;

    if (!opt.text()) {
        json jchecks = json::array();
        for (const auto& [name, ok] : checks) jchecks.push_back(json{{"name", name}, {"pass", ok}});
        std::cout << json{{"genus", spec.genus},
                          {"variant", to_string(spec.variant)},
                          {"checks", jchecks},
                          {"all_pass", all}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& [name, ok] : checks)
            std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact homology of non-orientable surfaces and their complex doubles"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--genus", opt.genus, "surface genus (>= 3)")->required();
        cmd->add_option("--variant", opt.variant, "even-genus presentation: cc-dd or gamma-delta")
            ->check(CLI::IsMember({"cc-dd", "gamma-delta"}));
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* cmd_double = app.add_subcommand("double", "covering, symmetry and intersection data");
    add_common(cmd_double);

    auto* cmd_torelli = app.add_subcommand("torelli", "classify homology-trivial lifts");
    add_common(cmd_torelli);
    cmd_torelli->add_option("--orientation", opt.orientation, "+1 preserving, -1 reversing")
        ->check(CLI::IsMember({1, -1}));
    cmd_torelli->add_option("--bound", opt.bound, "run the enumeration oracle with this bound")
        ->check(CLI::PositiveNumber);
    cmd_torelli->add_flag("--trace", opt.trace, "emit the elimination trace");

    auto* cmd_jacobian = app.add_subcommand("jacobian", "real locus components and Klein Jacobian");
    add_common(cmd_jacobian);
    cmd_jacobian->add_option("--A", opt.a_file, "integer symmetric matrix file overriding A");
    cmd_jacobian->add_option("--Y", opt.y_file, "rational symmetric positive definite matrix file");

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite for one genus");
    add_common(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_double)) return run_double(opt);
        if (app.got_subcommand(cmd_torelli)) return run_torelli(opt);
        if (app.got_subcommand(cmd_jacobian)) return run_jacobian(opt);
        if (app.got_subcommand(cmd_verify)) return run_verify(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
