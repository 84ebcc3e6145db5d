#include "kd/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kd {

json to_json(const IntMat& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(kd::to_string(m(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const RatMat& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(kd::to_string(m(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const Word& w)
{
    json out = json::array();
    for (const auto& l : w.letters()) out.push_back(json{{"gen", l.gen.str()}, {"exp", l.exp}});
    return out;
}

json to_json(const Presentation& p)
{
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back(g.str());
    json rels = json::array();
    for (const auto& r : p.relators) rels.push_back(to_json(r));
    return json{{"generators", gens}, {"relators", rels}};
}

IntMat int_matrix_from_json(const json& j)
{
    IntMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& entries = j.at("entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c)
            m(i, c) = parse_integer(entries.at(i).at(c).get<std::string>());
    return m;
}

RatMat rat_matrix_from_json(const json& j)
{
    RatMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& entries = j.at("entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c)
            m(i, c) = parse_rational(entries.at(i).at(c).get<std::string>());
    return m;
}

Word word_from_json(const json& j, const Presentation& context)
{
    Word w;
    for (const auto& item : j) {
        GeneratorSymbol g = GeneratorSymbol::parse(item.at("gen").get<std::string>());
        if (!context.has(g)) throw parse_error("unknown generator '" + g.str() + "' in word");
        int exp = item.at("exp").get<int>();
        if (exp != 1 && exp != -1) throw parse_error("word letter exponent must be +-1");
        w = w * Word::letter(g, exp);
    }
    return w;
}

namespace {

std::vector<std::vector<std::string>> read_token_rows(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) rows.push_back(tokens);
    }
    if (rows.empty()) throw parse_error("matrix file '" + path + "' is empty");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw parse_error("matrix file '" + path + "' has ragged rows");
    return rows;
}

} // namespace

IntMat read_int_matrix_file(const std::string& path)
{
    auto rows = read_token_rows(path);
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = parse_integer(rows[i][j]);
    return m;
}

RatMat read_rat_matrix_file(const std::string& path)
{
    auto rows = read_token_rows(path);
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = parse_rational(rows[i][j]);
    return m;
}

json covering_report(const CoveringData& cd)
{
    json labels_bc = json::array();
    for (const auto& g : cd.basisBc) labels_bc.push_back(g.str());
    json labels_b = json::array();
    for (const auto& g : cd.basisB) labels_b.push_back(g.str());
    json row_labels = json::array();
    for (const auto& g : cd.base.generators) row_labels.push_back(g.str());

    json gen_words = json::object();
    for (size_t j = 0; j < cd.x_words.size(); ++j) {
        gen_words["x" + std::to_string(j + 1)] = to_json(cd.x_words[j]);
        gen_words["y" + std::to_string(j + 1)] = to_json(cd.y_words[j]);
    }
    json sigma = json::object();
    for (const auto& [g, w] : cd.sigma_words) sigma[g.str()] = to_json(w);

    json proj = to_json(cd.projection_matrix);
    proj["row_labels"] = row_labels;
    proj["col_labels"] = labels_bc;
    proj["torsion_row"] = cd.torsion_row;

    json sym = to_json(cd.symmetry_matrix);
    sym["col_labels"] = labels_bc;
    json inter = to_json(cd.intersection);
    inter["col_labels"] = labels_bc;

    return json{{"genus", cd.spec.genus},
                {"variant", to_string(cd.spec.variant)},
                {"base", to_json(cd.base)},
                {"double", to_json(cd.double_cover)},
                {"generator_words", gen_words},
                {"sigma_words", sigma},
                {"eliminated", cd.eliminated.str()},
                {"eliminated_word", to_json(cd.eliminated_solution)},
                {"tree_edge", cd.tree_edge.str()},
                {"basis_b", labels_b},
                {"basis_bc", labels_bc},
                {"projection", proj},
                {"symmetry", sym},
                {"intersection", inter}};
}

json torelli_report(const LiftClassification& c, const LiftConstraintSystem& sys,
                    bool include_trace)
{
    json sols = json::array();
    for (const auto& m : c.solutions) sols.push_back(to_json(m));
    json out{{"genus", sys.spec.genus},
             {"variant", to_string(sys.spec.variant)},
             {"orientation", sys.orientation},
             {"method", to_string(c.method)},
             {"solutions", sols}};
    if (include_trace) out["trace"] = c.trace;
    return out;
}

JacobianReport build_jacobian_report(const SurfaceSpec& spec, const IntMat* A_override,
                                     const RatMat* Y_override)
{
    JacobianReport r;
    r.spec = spec;
    const int s = spec.homology_rank();

    if (A_override) {
        if (A_override->rows() != s || A_override->cols() != s)
            throw domain_error("A must be " + std::to_string(s) + " x " + std::to_string(s) +
                               " for genus " + std::to_string(spec.genus));
        r.A = *A_override;
    } else {
        CoveringData cover = complex_double(spec);
        r.A = adapt_basis(cover.symmetry_matrix, cover.intersection).A;
    }

    RatMat Y = Y_override ? *Y_override : RatMat::identity(s);
    make_symmetric_period(r.A, Y); // validation only; components depend on A alone

    r.components = real_part_components(r.A);
    r.klein = klein_jacobian(spec);
    r.isomorphism = check_component_isomorphism(r.klein, r.components);
    return r;
}

json to_json(const JacobianReport& r)
{
    json reps = json::array();
    for (const auto& rep : r.components.representatives) {
        json bits = json::array();
        for (int b : rep) bits.push_back(b);
        json offset = json::array();
        for (const auto& q : r.components.alpha_offset(rep)) offset.push_back(kd::to_string(q));
        reps.push_back(json{{"bits", bits}, {"alpha_offset", offset}});
    }

    json labels = json::array();
    for (const auto& g : r.klein.basis_labels) labels.push_back(g.str());

    json klein{{"basis_labels", labels},
               {"period_table", to_json(r.klein.period_table)},
               {"lattice_canonical", to_json(r.klein.lattice.canonical_basis())}};

    return json{{"genus", r.spec.genus},
                {"variant", to_string(r.spec.variant)},
                {"A", to_json(r.A)},
                {"component_count", kd::to_string(r.components.component_count)},
                {"component_rank", r.components.component_rank},
                {"representatives", reps},
                {"klein_jacobian", klein},
                {"isomorphism",
                 json{{"holds", r.isomorphism.holds}, {"scaling", to_json(r.isomorphism.scaling)}}}};
}

} // namespace kd
