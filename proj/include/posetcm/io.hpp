#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "posetcm/cm.hpp"
#include "posetcm/field.hpp"
#include "posetcm/topology.hpp"

namespace posetcm {

/// Input error with the 1-based line it was found on (0 when global).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parsed input: either a list of permutation lines or a cover list.
/// A single permutation line is paired with the identity.
struct InputSpec {
    std::vector<Permutation> perms;
    int cover_n = 0;
    std::vector<std::pair<int, int>> covers;

    bool is_perm_form() const { return !perms.empty(); }

    Poset build() const {
        if (is_perm_form()) {
            if (perms.size() == 1)
                return Poset::from_linear_orders({Permutation::identity(perms.front().size()), perms.front()});
            return Poset::from_linear_orders(perms);
        }
        return Poset::from_covers(cover_n, covers);
    }
};

/// Line-oriented input: '#' starts a comment; blank lines are skipped.
/// Either one or more "perm v1 v2 ... vn" lines, or "n <int>" followed by
/// "cover a b" lines. The two forms cannot be mixed.
inline InputSpec parse_input(std::istream& in) {
    InputSpec spec;
    bool saw_n = false;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::istringstream line(raw);
        std::string keyword;
        if (!(line >> keyword))
            continue;

        if (keyword == "perm") {
            if (saw_n)
                throw ParseError(lineno, "cannot mix 'perm' lines with a cover list");
            std::vector<int> word;
            int v;
            while (line >> v)
                word.push_back(v);
            if (word.empty())
                throw ParseError(lineno, "'perm' needs at least one value");
            try {
                spec.perms.emplace_back(std::move(word));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
            if (spec.perms.size() > 1 && spec.perms.back().size() != spec.perms.front().size())
                throw ParseError(lineno, "permutation sizes differ");
        } else if (keyword == "n") {
            if (!spec.perms.empty())
                throw ParseError(lineno, "cannot mix a cover list with 'perm' lines");
            if (saw_n)
                throw ParseError(lineno, "duplicate 'n' line");
            if (!(line >> spec.cover_n) || spec.cover_n < 1)
                throw ParseError(lineno, "'n' needs a positive integer");
            saw_n = true;
        } else if (keyword == "cover") {
            if (!saw_n)
                throw ParseError(lineno, "'cover' before 'n'");
            int a, b;
            if (!(line >> a >> b))
                throw ParseError(lineno, "'cover' needs two labels");
            if (a < 1 || a > spec.cover_n || b < 1 || b > spec.cover_n)
                throw ParseError(lineno, "cover label out of range");
            spec.covers.emplace_back(a, b);
        } else {
            throw ParseError(lineno, "unknown keyword '" + keyword + "'");
        }

        std::string trailing;
        if (line >> trailing)
            throw ParseError(lineno, "trailing token '" + trailing + "'");
    }
    if (spec.perms.empty() && !saw_n)
        throw ParseError(0, "empty input: expected 'perm' lines or an 'n'/'cover' list");
    return spec;
}

inline InputSpec parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    return parse_input(in);
}

inline std::string dimension_class_name(DimensionClass d) {
    switch (d) {
        case DimensionClass::AtMostOne: return "dim<=1";
        case DimensionClass::Two: return "dim=2";
        case DimensionClass::AtLeastThree: return "dim>=3";
    }
    return "?";
}

inline DimensionClass dimension_class_from_name(const std::string& s) {
    if (s == "dim<=1")
        return DimensionClass::AtMostOne;
    if (s == "dim=2")
        return DimensionClass::Two;
    if (s == "dim>=3")
        return DimensionClass::AtLeastThree;
    throw std::invalid_argument("unknown dimension class '" + s + "'");
}

/// Full analysis report; the machine form is a stable JSON document.
struct Report {
    int n = 0;
    std::string field;
    DimensionClass dimension_class = DimensionClass::AtLeastThree;
    bool condition4 = false;
    std::optional<int> failing_layer;
    bool pure = false;
    bool strongly_connected = false;
    std::optional<bool> cm;
    std::optional<std::vector<Chain>> shelling;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> realizer;
    std::optional<bool> reisner;
    std::optional<Face> reisner_witness;
};

inline Report analyze(const Poset& p, const FieldDescriptor& field, bool run_oracle) {
    Report r;
    r.n = p.size();
    r.field = field.name();
    const CmVerdict verdict = decide_cm(p);
    r.dimension_class = verdict.dimension;
    r.condition4 = verdict.criterion;
    r.failing_layer = verdict.failing_layer;
    r.pure = verdict.pure;
    r.cm = verdict.cohen_macaulay;
    if (verdict.shelling)
        r.shelling = verdict.shelling->chains;
    if (verdict.realizer)
        r.realizer = std::make_pair(verdict.realizer->first.word(), verdict.realizer->second.word());

    const SimplicialComplex complex = order_complex(p);
    r.strongly_connected = is_strongly_connected(complex);
    if (run_oracle) {
        const ReisnerResult res = is_cohen_macaulay(complex, field);
        r.reisner = res.cohen_macaulay;
        r.reisner_witness = res.witness;
    }
    return r;
}

inline nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["field"] = r.field;
    j["dimension_class"] = dimension_class_name(r.dimension_class);
    j["condition4"] = r.condition4;
    j["failing_layer"] = r.failing_layer ? nlohmann::json(*r.failing_layer) : nlohmann::json();
    j["pure"] = r.pure;
    j["strongly_connected"] = r.strongly_connected;
    j["cm"] = r.cm ? nlohmann::json(*r.cm) : nlohmann::json();
    j["shelling"] = r.shelling ? nlohmann::json(*r.shelling) : nlohmann::json();
    if (r.realizer)
        j["realizer"] = nlohmann::json::array({r.realizer->first, r.realizer->second});
    else
        j["realizer"] = nullptr;
    j["reisner"] = r.reisner ? nlohmann::json(*r.reisner) : nlohmann::json();
    j["reisner_witness"] = r.reisner_witness ? nlohmann::json(*r.reisner_witness) : nlohmann::json();
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.n = j.at("n").get<int>();
    r.field = j.at("field").get<std::string>();
    r.dimension_class = dimension_class_from_name(j.at("dimension_class").get<std::string>());
    r.condition4 = j.at("condition4").get<bool>();
    if (!j.at("failing_layer").is_null())
        r.failing_layer = j.at("failing_layer").get<int>();
    r.pure = j.at("pure").get<bool>();
    r.strongly_connected = j.at("strongly_connected").get<bool>();
    if (!j.at("cm").is_null())
        r.cm = j.at("cm").get<bool>();
    if (!j.at("shelling").is_null())
        r.shelling = j.at("shelling").get<std::vector<Chain>>();
    if (!j.at("realizer").is_null()) {
        const auto& arr = j.at("realizer");
        r.realizer = std::make_pair(arr.at(0).get<std::vector<int>>(), arr.at(1).get<std::vector<int>>());
    }
    if (!j.at("reisner").is_null())
        r.reisner = j.at("reisner").get<bool>();
    if (!j.at("reisner_witness").is_null())
        r.reisner_witness = j.at("reisner_witness").get<Face>();
    return r;
}

inline std::string render_chain(const Chain& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        out += (i ? " " : "") + std::to_string(c[i]);
    return out + ")";
}

inline std::string render_report_text(const Report& r) {
    std::ostringstream out;
    out << "elements: " << r.n << "\n";
    out << "dimension: " << dimension_class_name(r.dimension_class) << "\n";
    if (r.realizer) {
        out << "realizer:";
        for (const auto& word : {r.realizer->first, r.realizer->second}) {
            out << " [";
            for (std::size_t i = 0; i < word.size(); ++i)
                out << (i ? " " : "") << word[i];
            out << "]";
        }
        out << "\n";
    }
    out << "layer criterion: " << (r.condition4 ? "satisfied" : "violated");
    if (!r.condition4) {
        if (r.failing_layer)
            out << " (layers " << *r.failing_layer << "/" << *r.failing_layer + 1 << " disconnected)";
        else if (!r.pure)
            out << " (not pure)";
    }
    out << "\n";
    out << "strongly connected: " << (r.strongly_connected ? "yes" : "no") << "\n";
    if (r.cm)
        out << "cohen-macaulay: " << (*r.cm ? "yes (over any field)" : "no (over any field)") << "\n";
    else
        out << "cohen-macaulay: undecided by the dimension-two criterion (run with --oracle)\n";
    if (r.dimension_class == DimensionClass::AtMostOne)
        out << "edge ideal: trivial (a total order has no incomparable pairs)\n";
    if (r.shelling) {
        out << "shelling order (" << r.shelling->size() << " chains):";
        for (const auto& c : *r.shelling)
            out << " " << render_chain(c);
        out << "\n";
    }
    if (r.reisner) {
        out << "homology oracle [" << r.field << "]: " << (*r.reisner ? "cohen-macaulay" : "not cohen-macaulay");
        if (r.reisner_witness) {
            out << ", failing link at {";
            for (std::size_t i = 0; i < r.reisner_witness->size(); ++i)
                out << (i ? "," : "") << (*r.reisner_witness)[i];
            out << "}";
        }
        if (r.cm)
            out << (*r.reisner == *r.cm ? " (agrees)" : " (DISAGREES)");
        out << "\n";
    }
    return out.str();
}

enum class IdealFormat { Macaulay2, Singular, Plain };

inline IdealFormat ideal_format_from_name(const std::string& s) {
    if (s == "macaulay2" || s == "m2")
        return IdealFormat::Macaulay2;
    if (s == "singular")
        return IdealFormat::Singular;
    if (s == "plain")
        return IdealFormat::Plain;
    throw std::invalid_argument("unknown ideal format '" + s + "'");
}

/// Renders the edge ideal of a graph in computer-algebra syntax. Generators
/// are x_i*x_j per edge, i < j, lexicographic.
inline std::string render_edge_ideal(const Graph& g, IdealFormat format) {
    const auto gens = edge_ideal_generators(g);
    std::ostringstream out;
    switch (format) {
        case IdealFormat::Macaulay2: {
            out << "R = QQ[x_1..x_" << g.n << "]; I = ideal(";
            if (gens.empty())
                out << "0_R";
            for (std::size_t i = 0; i < gens.size(); ++i)
                out << (i ? ", " : "") << "x_" << gens[i].first << "*x_" << gens[i].second;
            out << ");";
            break;
        }
        case IdealFormat::Singular: {
            out << "ring R = 0, (x(1.." << g.n << ")), dp; ideal I = ";
            if (gens.empty())
                out << "0";
            for (std::size_t i = 0; i < gens.size(); ++i)
                out << (i ? ", " : "") << "x(" << gens[i].first << ")*x(" << gens[i].second << ")";
            out << ";";
            break;
        }
        case IdealFormat::Plain: {
            if (gens.empty()) {
                out << "<trivial ideal>";
            } else {
                for (std::size_t i = 0; i < gens.size(); ++i)
                    out << (i ? ", " : "") << "x" << gens[i].first << "*x" << gens[i].second;
            }
            break;
        }
    }
    return out.str();
}

/// Re-checks everything the report claims before it is printed: the shelling
/// certificate, the realizer's re-intersection, and the failure witnesses.
inline void revalidate_report(const Report& r, const Poset& p) {
    if (r.shelling) {
        std::vector<Face> facets;
        for (auto chain : *r.shelling) {
            std::sort(chain.begin(), chain.end());
            facets.push_back(std::move(chain));
        }
        if (!verify_shelling(facets).first)
            throw std::logic_error("report: shelling certificate failed re-verification");
    }
    if (r.realizer) {
        if (Poset::from_linear_orders({Permutation(r.realizer->first), Permutation(r.realizer->second)}) != p)
            throw std::logic_error("report: realizer failed re-intersection");
    }
    if (r.failing_layer) {
        if (connected_components(layer_subposet(p, *r.failing_layer).poset).size() < 2)
            throw std::logic_error("report: failing layer is connected after all");
    }
    if (r.reisner_witness) {
        const SimplicialComplex lk = link(order_complex(p), *r.reisner_witness);
        const HomologyProfile h = reduced_betti(lk, FieldDescriptor::parse(r.field));
        bool fails = false;
        for (int deg = -1; deg < lk.dimension() && !fails; ++deg)
            fails = h.betti(deg) != 0;
        if (!fails)
            throw std::logic_error("report: homology witness does not reproduce the failure");
    }
}

}  // namespace posetcm
