#include "facetforest/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "facetforest/betti_oracle.hpp"
#include "facetforest/betti_recursive.hpp"
#include "facetforest/betti_table.hpp"
#include "facetforest/complex.hpp"
#include "facetforest/generator.hpp"
#include "facetforest/good_leaf_order.hpp"
#include "facetforest/splitting.hpp"
#include "facetforest/structure.hpp"

namespace facetforest {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string ideal;  // positional; "-" reads stdin
    std::string file;
    std::string vars_csv;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("ideal", o.ideal, "Ideal text (e.g. \"xyz, yzv, yu\"), or '-' to read stdin");
    cmd->add_option("--file", o.file, "Read the input from this path; a .json suffix selects structured input");
    cmd->add_option("--vars", o.vars_csv, "Comma-separated vertex names; facets are then written x1*x2*...");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

ParseResult parse_structured(const std::string& text, const ParseOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("structured input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
        throw std::invalid_argument("structured input must be an object with a \"facets\" array");

    std::vector<std::string> names = opts.vars;
    std::vector<std::vector<std::string>> raw;
    for (const json& fj : doc["facets"]) {
        if (!fj.is_array() || fj.empty()) throw std::invalid_argument("each facet must be a nonempty array of names");
        std::vector<std::string> facet;
        for (const json& vj : fj) {
            if (!vj.is_string()) throw std::invalid_argument("vertex names must be strings");
            std::string n = vj.get<std::string>();
            if (std::find(facet.begin(), facet.end(), n) != facet.end())
                throw std::invalid_argument("repeated vertex '" + n + "' in facet (generators must be squarefree)");
            if (opts.vars.empty() && std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
            facet.push_back(std::move(n));
        }
        raw.push_back(std::move(facet));
    }
    UniversePtr u = Universe::make(names);
    std::vector<VertexSet> sets;
    for (const auto& facet : raw) sets.push_back(VertexSet::of(u, facet));
    std::vector<VertexSet> minimal = keep_inclusion_minimal(sets);
    ParseResult res;
    res.minimalized = minimal.size() != sets.size();
    std::vector<Facet> facets;
    for (VertexSet& s : minimal) facets.emplace_back(std::move(s));
    res.complex = Complex(std::move(u), std::move(facets));
    return res;
}

ParseResult load_input(const CommonOpts& o, std::istream& in, std::ostream& err) {
    bool has_inline = !o.ideal.empty();
    bool has_file = !o.file.empty();
    if (has_inline == has_file)
        throw std::invalid_argument("provide exactly one input: an ideal argument (or '-') or --file");
    ParseOptions popts;
    popts.vars = o.vars_csv.empty() ? std::vector<std::string>{} : split_list(o.vars_csv, ',');

    std::string text;
    bool structured = false;
    if (has_file) {
        std::ifstream f(o.file);
        if (!f) throw std::invalid_argument("cannot open file '" + o.file + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
        structured = o.file.size() >= 5 && o.file.substr(o.file.size() - 5) == ".json";
    } else if (o.ideal == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        auto first = text.find_first_not_of(" \t\r\n");
        structured = first != std::string::npos && text[first] == '{';
    } else {
        text = o.ideal;
    }

    ParseResult res = structured ? parse_structured(text, popts) : parse_ideal(text, popts);
    if (res.minimalized) err << "warning: comparable generators dropped, input was minimalized\n";
    return res;
}

json facets_json(const Complex& c) {
    json arr = json::array();
    for (const Facet& f : c.facets()) arr.push_back(f.vertices().names());
    return arr;
}

json table_json(const BettiTable& t) {
    json arr = json::array();
    for (const auto& [ij, v] : t.entries()) arr.push_back({{"i", ij.first}, {"j", ij.second}, {"value", v}});
    return arr;
}

void emit_json(std::ostream& out, const std::string& command, const Complex& input, json result) {
    json doc;
    doc["input"] = {{"facets", facets_json(input)}};
    doc["command"] = command;
    doc["result"] = std::move(result);
    out << doc.dump(2) << "\n";
}

std::string fjoin(const std::vector<int>& idx) {
    std::string s;
    for (int i : idx) s += (s.empty() ? "F" : " F") + std::to_string(i);
    return s;
}

std::string braces(const VertexSet& v) {
    std::string s = "{";
    bool first = true;
    for (const std::string& n : v.names()) {
        if (!first) s += ",";
        s += n;
        first = false;
    }
    return s + "}";
}

int parse_facet_index(const std::string& text) {
    std::string t = text;
    if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) t = t.substr(1);
    try {
        std::size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("'" + text + "' is not a facet index (use e.g. 2 or F2)");
    }
}

int default_good_leaf(const Complex& c) {
    std::vector<int> gl = good_leaves(c);
    if (gl.empty()) throw std::invalid_argument("complex has no good leaf");
    return gl.front();
}

// ---- check ----------------------------------------------------------------

int do_check(const Complex& c, bool minimalized, const std::string& format, std::ostream& out) {
    ForestCertificate forest = is_forest(c);
    bool connected = is_connected(c);
    bool tree = forest.verdict && connected && c.facet_count() > 0;
    std::vector<int> gl = good_leaves(c);
    std::vector<LeafCertificate> leaves;
    std::vector<int> non_leaves;
    for (int i = 0; i < c.facet_count(); ++i) {
        if (auto cert = leaf_certificate(c, i))
            leaves.push_back(*cert);
        else
            non_leaves.push_back(i);
    }

    if (format == "json") {
        json leaves_json = json::array();
        for (const LeafCertificate& lc : leaves)
            leaves_json.push_back(
                {{"facet", lc.leaf}, {"joints", lc.joints}, {"free_vertices", lc.free_vertices.names()}});
        json result{{"forest", forest.verdict}, {"connected", connected},       {"tree", tree},
                    {"good_leaves", gl},        {"leaves", leaves_json},        {"minimalized", minimalized}};
        if (forest.verdict)
            result["peel_order"] = forest.peel_order;
        else
            result["witness"] = forest.witness;
        emit_json(out, "check", c, std::move(result));
    } else {
        out << "facets: " << c.facet_count() << "\n";
        for (int i = 0; i < c.facet_count(); ++i) out << "  F" << i << " = " << c.facet(i).to_string() << "\n";
        out << "connected: " << (connected ? "yes" : "no") << "\n";
        out << "forest: " << (forest.verdict ? "yes" : "no") << "\n";
        out << "tree: " << (tree ? "yes" : "no") << "\n";
        if (forest.verdict)
            out << "peel order: " << fjoin(forest.peel_order) << "\n";
        else
            out << "leafless subcollection: " << fjoin(forest.witness) << "\n";
        out << "good leaves: " << (gl.empty() ? "(none)" : fjoin(gl)) << "\n";
        for (const LeafCertificate& lc : leaves) {
            out << "  leaf F" << lc.leaf << ": joints " << (lc.joints.empty() ? "(none)" : fjoin(lc.joints))
                << ", free " << braces(lc.free_vertices) << "\n";
        }
        if (!non_leaves.empty()) out << "not leaves: " << fjoin(non_leaves) << "\n";
    }
    return forest.verdict ? 0 : 1;
}

// ---- glo -------------------------------------------------------------------

int do_glo(const Complex& c, const std::string& leaf_text, const std::string& format, std::ostream& out) {
    int leaf = leaf_text.empty() ? default_good_leaf(c) : parse_facet_index(leaf_text);
    GoodLeafOrder glo = good_leaf_order(c, leaf);
    OrderReport rep = verify_good_leaf_order(c, glo.order);

    if (format == "json") {
        json chain = json::array();
        for (std::size_t k = 1; k < glo.chain.size(); ++k) chain.push_back(glo.chain[k].names());
        auto prop = [](const PropertyCheck& p) { return json{{"pass", p.pass}, {"position", p.position}}; };
        emit_json(out, "glo", c,
                  json{{"leaf", leaf},
                       {"order", glo.order},
                       {"chain", chain},
                       {"joints", glo.joints},
                       {"strict", glo.strict},
                       {"properties",
                        {{"chain_descending", prop(rep.chain_descending)},
                         {"leaf_of_prefix", prop(rep.leaf_of_prefix)},
                         {"joint_continuity", prop(rep.joint_continuity)},
                         {"prefix_connected", prop(rep.prefix_connected)}}}});
    } else {
        out << "good leaf: F" << leaf << "\n";
        out << "order: " << fjoin(glo.order) << "\n";
        out << "chain:";
        for (std::size_t k = 1; k < glo.chain.size(); ++k) out << " " << braces(glo.chain[k]);
        out << "\n";
        out << "joints:";
        for (std::size_t k = 1; k < glo.joints.size(); ++k)
            out << " F" << glo.order[k] << ":" << (glo.joints[k] >= 0 ? "F" + std::to_string(glo.joints[k]) : "-");
        out << "\n";
        out << "strict: " << (glo.strict ? "yes" : "no") << "\n";
        out << "properties: chain=" << (rep.chain_descending.pass ? "pass" : "FAIL")
            << " leaf=" << (rep.leaf_of_prefix.pass ? "pass" : "FAIL")
            << " joint=" << (rep.joint_continuity.pass ? "pass" : "FAIL")
            << " connected=" << (rep.prefix_connected.pass ? "pass" : "FAIL") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

// ---- split -----------------------------------------------------------------

int do_split(const Complex& c, const std::string& leaf_text, int subset_cap, int random_checks, int max_vertices,
             const std::string& format, std::ostream& out) {
    int leaf = leaf_text.empty() ? default_good_leaf(c) : parse_facet_index(leaf_text);
    GoodLeafOrder glo = good_leaf_order(c, leaf);
    SplitResult split = split_by_good_leaf(c, glo);
    SplittingCheck check = verify_splitting(c, split, subset_cap, random_checks);

    OracleOptions oopts;
    oopts.max_vertices = max_vertices;
    BettiTable whole = betti_oracle(c, oopts);
    BettiTable tj = betti_oracle(c.subcollection(split.j_facets), oopts);
    BettiTable tk = betti_oracle(c.subcollection(split.k_facets), oopts);
    std::vector<Facet> meet_gens = split.gens;
    BettiTable tm = betti_oracle(Complex(c.universe(), std::move(meet_gens)), oopts);
    IdentityReport identity = ek_betti_identity_check(whole, tj, tk, tm);

    if (format == "json") {
        json gens = json::array();
        for (std::size_t w = 0; w < split.gens.size(); ++w)
            gens.push_back({{"monomial", split.gens[w].vertices().names()}, {"phi", split.phi[w]}, {"psi", split.psi[w]}});
        json mism = json::array();
        for (const auto& row : identity.mismatches)
            mism.push_back({{"i", row.i}, {"j", row.j}, {"lhs", row.lhs}, {"rhs", row.rhs}});
        emit_json(out, "split", c,
                  json{{"t", split.t},
                       {"J", split.j_facets},
                       {"K", split.k_facets},
                       {"generators", gens},
                       {"check", {{"ok", check.ok}, {"clause", check.clause}, {"witness", check.witness}}},
                       {"identity", {{"ok", identity.ok}, {"checked", identity.checked}, {"mismatches", mism}}}});
    } else {
        out << "t: " << split.t << "\n";
        out << "J: " << fjoin(split.j_facets) << "  (" << c.subcollection(split.j_facets).to_string() << ")\n";
        out << "K: " << fjoin(split.k_facets) << "  (" << c.subcollection(split.k_facets).to_string() << ")\n";
        out << "intersection generators: " << split.gens.size() << "\n";
        for (std::size_t w = 0; w < split.gens.size(); ++w)
            out << "  " << split.gens[w].to_string() << " = lcm(F" << split.phi[w] << ", F" << split.psi[w] << ")\n";
        if (check.ok) {
            out << "splitting check: ok (subsets up to " << subset_cap << " exhaustive, " << random_checks
                << " random)\n";
        } else {
            out << "splitting check: FAIL [" << check.clause << "]";
            if (!check.witness.empty()) {
                out << " witness subset {";
                for (std::size_t w = 0; w < check.witness.size(); ++w)
                    out << (w ? ", " : "") << split.gens.at(check.witness[w]).to_string();
                out << "}";
            }
            out << "\n";
        }
        if (identity.ok)
            out << "betti identity: ok (" << identity.checked << " spots)\n";
        else {
            out << "betti identity: FAIL\n";
            for (const auto& row : identity.mismatches)
                out << "  beta(" << row.i << "," << row.j << "): " << row.lhs << " != " << row.rhs << "\n";
        }
    }
    return check.ok && identity.ok ? 0 : 1;
}

// ---- betti -----------------------------------------------------------------

BettiTable compute_table(const Complex& c, const std::string& method, const std::string& leaf_text, int max_vertices) {
    if (method == "oracle") {
        OracleOptions o;
        o.max_vertices = max_vertices;
        return betti_oracle(c, o);
    }
    if (method == "recursive") return betti_hv(c);
    int leaf = leaf_text.empty() ? default_good_leaf(c) : parse_facet_index(leaf_text);
    GoodLeafOrder glo = good_leaf_order(c, leaf);
    if (method == "glo") return betti_glo(c, glo);
    // delta: the two closed-form rows
    BettiTable t;
    for (const auto& [j, v] : beta0_formula(c)) t.add(0, j, v);
    for (const auto& [j, v] : beta1_formula(c, glo)) t.add(1, j, v);
    return t;
}

BettiTable restrict_rows(const BettiTable& t, int max_row) {
    BettiTable out;
    for (const auto& [ij, v] : t.entries())
        if (ij.first <= max_row) out.add(ij.first, ij.second, v);
    return out;
}

int do_betti(const Complex& c, const std::string& method, const std::string& compare, const std::string& leaf_text,
             const std::string& rows, int max_vertices, const std::string& format, std::ostream& out) {
    BettiTable table = compute_table(c, method, leaf_text, max_vertices);
    bool partial = method == "delta";

    bool compared_equal = true;
    BettiTable other;
    bool have_other = !compare.empty();
    if (have_other) {
        other = compute_table(c, compare, leaf_text, max_vertices);
        if (partial || compare == "delta") {
            compared_equal = restrict_rows(table, 1) == restrict_rows(other, 1);
        } else {
            compared_equal = table == other;
        }
    }

    if (format == "json") {
        json result{{"method", method}, {"entries", table_json(table)}, {"diagram", betti_diagram(table, rows == "literal")}};
        if (partial) {
            result["partial"] = true;
        } else if (!table.is_zero_ideal()) {
            result["projdim"] = table.projdim();
            result["reg_diagram"] = table.reg_diagram();
            result["reg_literal"] = table.reg_literal();
        }
        if (have_other) result["compare"] = {{"method", compare}, {"identical", compared_equal}};
        emit_json(out, "betti", c, std::move(result));
    } else {
        out << "method: " << method << (partial ? " (rows 0..1 only)" : "") << "\n";
        for (const auto& [ij, v] : table.entries())
            out << "  beta(" << ij.first << "," << ij.second << ") = " << v << "\n";
        out << "diagram:\n" << betti_diagram(table, rows == "literal");
        if (!partial && !table.is_zero_ideal()) {
            out << "projdim: " << table.projdim() << "\n";
            out << "reg: " << table.reg_diagram() << " (literal: " << table.reg_literal() << ")\n";
        }
        if (have_other)
            out << "compare vs " << compare << ": " << (compared_equal ? "identical" : "DIFFERENT") << "\n";
    }
    return compared_equal ? 0 : 1;
}

// ---- bounds ----------------------------------------------------------------

int do_bounds(const Complex& c, const std::string& partition_text, const std::string& method, int max_vertices,
              const std::string& format, std::ostream& out) {
    std::vector<std::vector<int>> parts;
    for (const std::string& part : split_list(partition_text, ';')) {
        std::vector<int> ix;
        for (const std::string& tok : split_list(part, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty facet index in --partition");
            ix.push_back(parse_facet_index(tok));
        }
        parts.push_back(std::move(ix));
    }
    TableEngine engine;
    if (method == "oracle") {
        OracleOptions o;
        o.max_vertices = max_vertices;
        engine = [o](const Complex& x) { return betti_oracle(x, o); };
    } else {
        engine = [](const Complex& x) { return betti_hv(x); };
    }
    BoundsReport rep = partition_bounds(c, parts, engine);
    if (!rep.hypotheses_ok) throw std::invalid_argument("partition hypotheses violated: " + rep.hypothesis_error);

    if (format == "json") {
        json entries = json::array();
        for (const auto& e : rep.entries)
            entries.push_back({{"i", e.i}, {"j", e.j}, {"whole", e.whole}, {"parts", e.parts}, {"ok", e.ok}});
        emit_json(out, "bounds", c,
                  json{{"hypotheses_ok", true},
                       {"entries", entries},
                       {"entries_ok", rep.entries_ok},
                       {"projdim", {{"whole", rep.projdim_whole}, {"parts", rep.projdim_parts}, {"ok", rep.projdim_ok}}},
                       {"reg", {{"whole", rep.reg_whole}, {"parts", rep.reg_parts}, {"ok", rep.reg_ok}}},
                       {"ok", rep.ok()}});
    } else {
        out << "hypotheses: ok\n";
        out << "projdim: " << rep.projdim_whole << " >= " << rep.projdim_parts << "  " << (rep.projdim_ok ? "ok" : "FAIL")
            << "\n";
        out << "reg: " << rep.reg_whole << " >= " << rep.reg_parts << "  " << (rep.reg_ok ? "ok" : "FAIL") << "\n";
        int bad = 0;
        for (const auto& e : rep.entries)
            if (!e.ok) ++bad;
        out << "entries: " << rep.entries.size() << " checked, " << (bad ? std::to_string(bad) + " FAILED" : "all hold")
            << "\n";
        for (const auto& e : rep.entries)
            if (!e.ok) out << "  beta(" << e.i << "," << e.j << "): " << e.whole << " < " << e.parts << "\n";
    }
    return rep.ok() ? 0 : 1;
}

// ---- random ----------------------------------------------------------------

int do_random(std::uint64_t seed, int count, const std::string& kind, const GenOptions& gopts,
              const std::string& format, std::ostream& out) {
    std::mt19937_64 rng(seed);
    std::vector<Complex> made;
    for (int k = 0; k < count; ++k) {
        if (kind == "tree")
            made.push_back(random_tree(rng, gopts));
        else if (kind == "maybe")
            made.push_back(random_maybe_forest(rng, gopts));
        else
            made.push_back(random_forest(rng, gopts));
    }
    if (format == "text") {
        for (const Complex& c : made) out << render_ideal(c) << "\n";
    } else {
        json arr = json::array();
        for (const Complex& c : made) arr.push_back({{"facets", facets_json(c)}});
        json doc{{"command", "random"}, {"seed", seed}, {"kind", kind}, {"count", count}, {"complexes", arr}};
        out << doc.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream* in) {
    CLI::App app{"facet complexes of squarefree monomial ideals: forests, good leaf orders, splittings, Betti tables"};
    app.name("facet-forest");
    app.require_subcommand(1);

    CommonOpts check_o, glo_o, split_o, betti_o, bounds_o;
    std::string glo_leaf, split_leaf, betti_leaf;
    int split_cap = 6, split_random = 1000;
    std::string betti_method = "oracle", betti_compare, betti_rows = "shifted";
    int betti_maxv = 20, split_maxv = 20, bounds_maxv = 20;
    std::string bounds_partition, bounds_method = "oracle";

    CLI::App* check = app.add_subcommand("check", "Classify a complex: forest/tree verdicts, leaves, good leaves");
    add_common(check, check_o);

    CLI::App* glo = app.add_subcommand("glo", "Construct and verify a good leaf order");
    add_common(glo, glo_o);
    glo->add_option("--leaf", glo_leaf, "Good leaf to start from (default: lowest-index good leaf)");

    CLI::App* split = app.add_subcommand("split", "Split the ideal along a good leaf order and verify it");
    add_common(split, split_o);
    split->add_option("--leaf", split_leaf, "Good leaf to split along (default: lowest-index good leaf)");
    split->add_option("--subset-cap", split_cap, "Exhaustive subset size for the splitting check")->capture_default_str();
    split->add_option("--random-checks", split_random, "Random larger subsets to try")->capture_default_str();
    split->add_option("--max-vertices", split_maxv, "Vertex cap for the identity-check tables")->capture_default_str();

    CLI::App* betti = app.add_subcommand("betti", "Betti table, diagram, projdim and regularity");
    add_common(betti, betti_o);
    betti->add_option("--method", betti_method, "oracle | recursive | glo | delta")
        ->check(CLI::IsMember({"oracle", "recursive", "glo", "delta"}))
        ->capture_default_str();
    betti->add_option("--compare", betti_compare, "Second method; exit 1 when the tables differ")
        ->check(CLI::IsMember({"oracle", "recursive", "glo", "delta"}));
    betti->add_option("--leaf", betti_leaf, "Good leaf for glo/delta (default: lowest-index good leaf)");
    betti->add_option("--rows", betti_rows, "Diagram row labels: shifted (j-i-1) or literal (j-i)")
        ->check(CLI::IsMember({"shifted", "literal"}))
        ->capture_default_str();
    betti->add_option("--max-vertices", betti_maxv, "Vertex cap for the oracle")->capture_default_str();

    CLI::App* bounds = app.add_subcommand("bounds", "Check the facet-interval partition inequalities");
    add_common(bounds, bounds_o);
    bounds->add_option("--partition", bounds_partition, "Facet intervals, e.g. \"0,1,2;3,4\"")->required();
    bounds->add_option("--method", bounds_method, "Table engine: oracle | recursive")
        ->check(CLI::IsMember({"oracle", "recursive"}))
        ->capture_default_str();
    bounds->add_option("--max-vertices", bounds_maxv, "Vertex cap for the oracle")->capture_default_str();

    CLI::App* random = app.add_subcommand("random", "Generate random forests/trees as structured data");
    std::uint64_t seed = 12345;
    int count = 1;
    std::string kind = "forest";
    GenOptions gopts;
    std::string random_format = "json";
    random->add_option("--seed", seed, "RNG seed; the FACET_FOREST_SEED environment variable overrides this")
        ->capture_default_str();
    random->add_option("--count", count, "How many to generate")->capture_default_str();
    random->add_option("--kind", kind, "forest | tree | maybe (maybe = spoiled, possibly not a forest)")
        ->check(CLI::IsMember({"forest", "tree", "maybe"}))
        ->capture_default_str();
    random->add_option("--max-facets", gopts.max_facets, "Facet cap")->capture_default_str();
    random->add_option("--max-vertices", gopts.max_vertices, "Vertex cap")->capture_default_str();
    random->add_option("--max-facet-size", gopts.max_facet_size, "Facet size cap")->capture_default_str();
    random->add_option("--format", random_format, "Output format")->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("facet-forest");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::istream& input = in ? *in : std::cin;
    try {
        if (*check) {
            ParseResult p = load_input(check_o, input, err);
            return do_check(p.complex, p.minimalized, check_o.format, out);
        }
        if (*glo) {
            ParseResult p = load_input(glo_o, input, err);
            return do_glo(p.complex, glo_leaf, glo_o.format, out);
        }
        if (*split) {
            ParseResult p = load_input(split_o, input, err);
            return do_split(p.complex, split_leaf, split_cap, split_random, split_maxv, split_o.format, out);
        }
        if (*betti) {
            ParseResult p = load_input(betti_o, input, err);
            return do_betti(p.complex, betti_method, betti_compare, betti_leaf, betti_rows, betti_maxv, betti_o.format,
                            out);
        }
        if (*bounds) {
            ParseResult p = load_input(bounds_o, input, err);
            return do_bounds(p.complex, bounds_partition, bounds_method, bounds_maxv, bounds_o.format, out);
        }
        if (*random) {
            if (const char* env = std::getenv("FACET_FOREST_SEED")) {
                try {
                    seed = std::stoull(env);
                } catch (...) {
                    throw std::invalid_argument("FACET_FOREST_SEED is not a number: " + std::string(env));
                }
            }
            return do_random(seed, count, kind, gopts, random_format, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}

}  // namespace facetforest
