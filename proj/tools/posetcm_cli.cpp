// Command-line front end: analyze posets and permutation graphs for
// Cohen-Macaulayness, print shelling certificates and homology tables, run
// exhaustive cross-validation sweeps, and export edge ideals.
//
// Exit codes: 0 success (and sweep agreement), 1 input error, 2 internal
// assertion failure or sweep disagreement.

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "posetcm/posetcm.hpp"

namespace {

using namespace posetcm;

Poset load_poset(const std::string& path) {
    return parse_input_file(path).build();
}

FieldDescriptor field_from_flag(const std::string& flag) {
    return FieldDescriptor::parse(flag);
}

int cmd_analyze(const std::string& path, const std::string& field_flag, bool oracle, bool json) {
    const Poset p = load_poset(path);
    const FieldDescriptor field = field_from_flag(field_flag);
    const Report report = analyze(p, field, oracle);
    revalidate_report(report, p);
    if (json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << render_report_text(report);
    if (report.cm && report.reisner && *report.cm != *report.reisner) {
        std::cerr << "internal error: criterion and homology oracle disagree\n";
        return 2;
    }
    return 0;
}

int cmd_sweep(int n, const std::vector<std::string>& field_flags) {
    if (n < 1 || n > 7) {
        std::cerr << "error: sweep supports 1 <= n <= 7\n";
        return 1;
    }
    SweepOptions opt;
    opt.n = n;
    if (!field_flags.empty()) {
        opt.fields.clear();
        for (const auto& f : field_flags)
            opt.fields.push_back(field_from_flag(f));
    }
    const SweepSummary summary = sweep_permutations(opt);
    std::cout << "n = " << n << ": " << summary.total << " posets, " << summary.cm
              << " cohen-macaulay, " << summary.non_cm << " not\n";
    std::cout << "fields:";
    for (const auto& f : opt.fields)
        std::cout << " " << f.name();
    std::cout << "\n";
    if (!summary.ok()) {
        for (const auto& m : summary.mismatches) {
            std::cout << "DISAGREEMENT at [";
            for (std::size_t i = 0; i < m.pi.size(); ++i)
                std::cout << (i ? " " : "") << m.pi[i];
            std::cout << "]: " << m.detail() << "\n";
        }
        return 2;
    }
    std::cout << "all verdicts agree\n";
    return 0;
}

int cmd_homology(const std::string& path, const std::string& field_flag, const std::string& link_flag) {
    const Poset p = load_poset(path);
    const FieldDescriptor field = field_from_flag(field_flag);
    SimplicialComplex complex = order_complex(p);
    if (!link_flag.empty()) {
        Face s;
        std::istringstream iss(link_flag);
        std::string tok;
        while (std::getline(iss, tok, ','))
            s.push_back(std::stoi(tok));
        complex = link(complex, s);
        std::cout << "link at {" << link_flag << "}, facets:";
        for (const auto& f : complex.facets())
            std::cout << " " << render_chain(f);
        std::cout << "\n";
    }
    const HomologyProfile h = reduced_betti(complex, field);
    std::cout << "field: " << field.name() << ", dimension: " << complex.dimension() << "\n";
    for (int deg = -1; deg <= h.top_degree(); ++deg)
        std::cout << "betti[" << deg << "] = " << h.betti(deg) << "\n";
    return 0;
}

int cmd_shelling(const std::string& path) {
    const Poset p = load_poset(path);
    const CmVerdict verdict = decide_cm(p);
    if (verdict.shelling) {
        std::cout << "shelling order (" << verdict.shelling->chains.size() << " chains, "
                  << (verdict.shelling->verified ? "verified" : "UNVERIFIED") << "):\n";
        for (const auto& c : verdict.shelling->chains)
            std::cout << "  " << render_chain(c) << "\n";
        return verdict.shelling->verified ? 0 : 2;
    }
    if (verdict.dimension == DimensionClass::AtLeastThree)
        std::cout << "no certificate: dimension >= 3, the layer criterion does not decide\n";
    else if (verdict.failing_layer)
        std::cout << "not shellable: layers " << *verdict.failing_layer << "/"
                  << *verdict.failing_layer + 1 << " disconnected\n";
    else
        std::cout << "not shellable: poset is not pure\n";
    return 0;
}

int cmd_export_ideal(const std::string& path, const std::string& format_flag) {
    const Poset p = load_poset(path);
    std::cout << render_edge_ideal(cocomparability_graph(p), ideal_format_from_name(format_flag)) << "\n";
    return 0;
}

int cmd_graph(const std::string& path) {
    const Poset p = load_poset(path);
    for (const auto& [a, b] : cocomparability_graph(p).edges)
        std::cout << a << " " << b << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulayness of dimension-two posets and permutation graphs"};
    app.require_subcommand(1);

    std::string file, field = "gf2", link_spec, format;
    std::vector<std::string> sweep_fields;
    bool oracle = false, json = false;
    int sweep_n = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "full verdict with certificates");
    analyze_cmd->add_option("file", file, "input file")->required();
    analyze_cmd->add_option("--field", field, "coefficient field: gf<p> or rat");
    analyze_cmd->add_flag("--oracle", oracle, "also run the homology oracle");
    analyze_cmd->add_flag("--json", json, "machine-readable report");

    auto* sweep_cmd = app.add_subcommand("sweep", "cross-validate all permutations of {1..n}");
    sweep_cmd->add_option("--n", sweep_n, "word length (1..7)")->required();
    sweep_cmd->add_option("--field", sweep_fields, "coefficient field(s), repeatable");

    auto* homology_cmd = app.add_subcommand("homology", "reduced Betti numbers of the order complex");
    homology_cmd->add_option("file", file, "input file")->required();
    homology_cmd->add_option("--link", link_spec, "take the link at a face first, e.g. 2 or 1,3");
    homology_cmd->add_option("--field", field, "coefficient field: gf<p> or rat");

    auto* shelling_cmd = app.add_subcommand("shelling", "print the constructed shelling order");
    shelling_cmd->add_option("file", file, "input file")->required();

    auto* export_cmd = app.add_subcommand("export-ideal", "edge ideal of the co-comparability graph");
    export_cmd->add_option("file", file, "input file")->required();
    export_cmd->add_option("--format", format, "macaulay2 | singular | plain")->required();

    auto* graph_cmd = app.add_subcommand("graph", "co-comparability edge list");
    graph_cmd->add_option("file", file, "input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze_cmd->parsed())
            return cmd_analyze(file, field, oracle, json);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_n, sweep_fields);
        if (homology_cmd->parsed())
            return cmd_homology(file, field, link_spec);
        if (shelling_cmd->parsed())
            return cmd_shelling(file);
        if (export_cmd->parsed())
            return cmd_export_ideal(file, format);
        if (graph_cmd->parsed())
            return cmd_graph(file);
    } catch (const posetcm::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
