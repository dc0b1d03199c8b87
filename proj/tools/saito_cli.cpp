// Command line front end: analyses numbered resolution trees (text format on
// stdin or in a file) and emits tables, JSON reports or DOT graphs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "saito/analysis.hpp"
#include "saito/curves.hpp"
#include "saito/errors.hpp"
#include "saito/io.hpp"
#include "saito/moduli.hpp"

namespace {

using namespace saito;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw SaitoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void print_vertex_table(std::ostream& out, const ResolutionTree& tree, const Numbering& n,
                        const SaitoSolution& sol) {
    const auto rho = multiplicities(tree);
    const auto nu = valuations(tree, n);
    out << "id  parents      n   rho  nu   delta  eps\n";
    for (VertexId v = 0; v < tree.size(); ++v) {
        std::string parents = "-";
        if (!tree.parents(v).empty()) {
            parents.clear();
            for (std::size_t i = 0; i < tree.parents(v).size(); ++i) {
                if (i) parents += ",";
                parents += std::to_string(tree.parents(v)[i]);
            }
        }
        out << v << "   " << parents;
        for (std::size_t pad = parents.size(); pad < 11; ++pad) out << ' ';
        out << n[v] << "   " << rho[v] << "    " << nu[v] << "    " << int(sol.delta[v]) << "      "
            << sol.epsilon[v] << "\n";
    }
}

int run_report(const std::string& input, const std::string& format, const std::string& mode,
               i64 modularity, unsigned seed) {
    const NumberedTree doc = parse_tree(read_input(input));
    const ResolutionTree& tree = doc.tree;
    const Numbering& n = doc.numbering;

    if (format == "json") {
        nlohmann::json j;
        if (mode == "dicriticity")
            j = analysis_json(tree, n);
        else if (mode == "saito-number" || mode == "profile")
            j = profile_json(tree, n);
        else if (mode == "gluing")
            j = gluing_json(tree, n, seed);
        else if (mode == "moduli")
            j = moduli_json(tree, n);
        else
            j = tjurina_json(tree, n, modularity);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    const SaitoSolution sol = saito_inductive(tree, n);
    std::cout << "vertices: " << tree.size() << "  edges: " << tree.edge_count() << "\n";
    print_vertex_table(std::cout, tree, n, sol);
    if (mode == "dicriticity") return 0;

    const SaitoProfile profile = saito_valuation_profile(tree, n);
    std::cout << "saito number: " << profile.saito_number << "\n";
    if (mode == "saito-number") return 0;

    if (mode == "profile" || mode == "gluing") {
        std::cout << "saito valuations:";
        for (i64 v : profile.per_vertex) std::cout << " " << v;
        std::cout << "\nupper bound floor(nu/2): " << (check_upper_bound(tree, n, profile.saito_number) ? "holds" : "VIOLATED")
                  << "\n";
    }
    if (mode == "gluing") {
        const GluingData data = gluing_data(tree, n, seed);
        for (VertexId v = 0; v < tree.size(); ++v) {
            const VertexModel& m = data.models[v];
            std::cout << "vertex " << v << ": ";
            if (m.dicritical) {
                std::cout << "dicritical model, self-intersection " << -m.self_int_magnitude
                          << ", tangencies " << m.tangency_count << "\n";
            } else {
                std::cout << "non-dicritical model, self-intersection " << -m.self_int_magnitude
                          << ", weights";
                for (const Rational& w : m.free_weights) std::cout << " " << rational_string(w);
                for (const auto& [to, w] : m.edge_weights)
                    std::cout << " [edge " << v << "-" << to << ": " << rational_string(w) << "]";
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (mode == "moduli" || mode == "tjurina") {
        const ModuliReport report = generic_moduli_dimension(tree, n);
        for (const auto& level : report.levels) {
            std::cout << "level " << level.level_index << ": contribution " << level.value << "  (n =";
            for (i64 x : level.numbering) std::cout << " " << x;
            std::cout << ")\n";
        }
        std::cout << "generic moduli dimension: " << report.total << "\n";
        if (mode == "tjurina") {
            const MilnorResult milnor = milnor_number(tree, n);
            std::cout << "milnor number: " << milnor.mu << "\n";
            std::cout << "modularity (input): " << modularity << "\n";
            std::cout << "generic tjurina number: " << generic_tjurina(milnor.mu, modularity, report.total)
                      << "\n";
        }
    }
    return 0;
}

int run_selftest() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    const NumberedTree ex1 = builtin_family("example1", {});
    check("example1 multiplicities (1,1,1,2)", multiplicities(ex1.tree) == std::vector<i64>({1, 1, 1, 2}));
    check("example1 valuations (7,2,3,2)",
          valuations(ex1.tree, ex1.numbering) == std::vector<i64>({7, 2, 3, 2}));
    const SaitoSolution ex1_sol = saito_inductive(ex1.tree, ex1.numbering);
    check("example1 saito dicriticity (1,0,1,0)", ex1_sol.delta == Dicriticity({1, 0, 1, 0}));
    check("example1 configuration (1,1,2,0)", ex1_sol.epsilon == Configuration({1, 1, 2, 0}));

    const NumberedTree cusp = builtin_family("cusp", {});
    const SaitoSolution cusp_sol = saito_bruteforce(cusp.tree, cusp.numbering);
    check("cusp saito dicriticity (1,1,0)", cusp_sol.delta == Dicriticity({1, 1, 0}));
    check("cusp saito number 1", saito_number(cusp.tree, cusp.numbering) == 1);

    const NumberedTree dc = builtin_family("double_cusp", {});
    const SaitoSolution dc_sol = saito_inductive(dc.tree, dc.numbering);
    check("double cusp configuration (1,1,1,0,0)", dc_sol.epsilon == Configuration({1, 1, 1, 0, 0}));
    check("double cusp saito number 2", saito_number(dc.tree, dc.numbering) == 2);
    check("double cusp root white", dc_sol.delta[0] == 1);

    bool rc_ok = true;
    for (i64 r = 2; r <= 10; r += 2) {
        const NumberedTree fam = builtin_family("r_cusps", {r});
        rc_ok = rc_ok && generic_moduli_dimension(fam.tree, fam.numbering).total == ((r - 1) * (3 * r - 5) + 1) / 2;
    }
    check("r-cusps dimensions r=2..10", rc_ok);

    const NumberedTree peraire = tree_from_char_exponents(9, {12, 17});
    check("peraire valuations = multiplicity sequence",
          valuations(peraire.tree, peraire.numbering) == std::vector<i64>({9, 3, 3, 3, 3, 2, 1, 1}));
    check("peraire milnor number 98", milnor_number(peraire.tree, peraire.numbering).mu == 98);
    const i64 dim = generic_moduli_dimension(peraire.tree, peraire.numbering).total;
    check("peraire moduli dimension 11", dim == 11);
    check("peraire tjurina 80", generic_tjurina(98, 29, dim) == 80);

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saito dicriticities, configurations and moduli dimensions of numbered resolution trees"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "table";
    i64 modularity = 0;
    unsigned seed = 0;

    auto add_input = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("input", input, "tree document file, or - for stdin")->required();
        if (with_format) cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
    };

    auto* cmd_dicr = app.add_subcommand("dicriticity", "Saito dicriticity and configuration");
    add_input(cmd_dicr);
    auto* cmd_sn = app.add_subcommand("saito-number", "Saito number of the numbered tree");
    add_input(cmd_sn);
    auto* cmd_profile = app.add_subcommand("profile", "per-vertex Saito valuations");
    add_input(cmd_profile);
    auto* cmd_gluing = app.add_subcommand("gluing", "exact rational Camacho-Sad gluing data");
    add_input(cmd_gluing);
    cmd_gluing->add_option("--seed", seed, "perturbation seed for retries");
    auto* cmd_moduli = app.add_subcommand("moduli", "generic dimension of the moduli space");
    add_input(cmd_moduli);
    auto* cmd_tjurina = app.add_subcommand("tjurina", "generic Tjurina number");
    add_input(cmd_tjurina);
    cmd_tjurina->add_option("--modularity", modularity, "modularity invariant (external input)")->required();

    std::vector<i64> charexp;
    auto* cmd_charexp = app.add_subcommand("from-charexp", "tree document of an irreducible curve");
    cmd_charexp->add_option("exponents", charexp, "characteristic exponents b0 b1 ...")->required()->expected(-2);

    std::string family_name;
    std::vector<i64> family_params;
    auto* cmd_family = app.add_subcommand("family", "tree document of a built-in family");
    cmd_family->add_option("name", family_name, "cusp | r_cusps | double_cusp | example1")->required();
    cmd_family->add_option("params", family_params, "family parameters");

    auto* cmd_dot = app.add_subcommand("dot", "DOT export of the colored numbered tree");
    add_input(cmd_dot, false);

    app.add_subcommand("selftest", "run the built-in verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_charexp->parsed()) {
            const NumberedTree doc = tree_from_char_exponents(charexp[0], {charexp.begin() + 1, charexp.end()});
            std::cout << serialize_tree(doc.tree, doc.numbering);
            return 0;
        }
        if (cmd_family->parsed()) {
            const NumberedTree doc = builtin_family(family_name, family_params);
            std::cout << serialize_tree(doc.tree, doc.numbering);
            return 0;
        }
        if (cmd_dot->parsed()) {
            const NumberedTree doc = parse_tree(read_input(input));
            const SaitoSolution sol = saito_inductive(doc.tree, doc.numbering);
            std::cout << emit_dot(doc.tree, doc.numbering, sol.delta, sol.epsilon);
            return 0;
        }
        if (app.get_subcommand("selftest")->parsed()) return run_selftest();

        std::string mode;
        for (const char* name : {"dicriticity", "saito-number", "profile", "gluing", "moduli", "tjurina"})
            if (app.get_subcommand(name)->parsed()) mode = name;
        return run_report(input, format, mode, modularity, seed);
    } catch (const SaitoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
