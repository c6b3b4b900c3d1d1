// Command-line front end: families, construct, detect, tile, solve, verify.
// Machine-readable output goes to stdout (same argv and seed give byte-equal
// output); timings and progress notes go to stderr. Exit code 0 means an
// answer was produced (including "NONE" and INVALID); nonzero means an error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/families.hpp"
#include "ramsey/graph_alg.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/procedures.hpp"
#include "ramsey/solver.hpp"

namespace {

using namespace ramsey;
using nlohmann::json;

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

bool file_exists(const std::string& path)
{
    std::ifstream in(path);
    return bool(in);
}

// A pattern argument is either a path to a graph6 file or a literal graph6
// string.
SmallGraph load_pattern(const std::string& spec)
{
    if (file_exists(spec)) {
        std::istringstream in(slurp(spec));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                return from_graph6(line);
        throw Error("pattern file is empty: " + spec);
    }
    return from_graph6(spec);
}

GraphFamily load_family(const std::string& spec)
{
    GraphFamily f;
    if (file_exists(spec)) {
        std::istringstream in(slurp(spec));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                f.insert(from_graph6(line));
    } else {
        f.insert(from_graph6(spec));
    }
    if (f.empty())
        throw Error("no graphs in family spec: " + spec);
    return f;
}

// "<n>x<pattern-or-family-file>" or plain "<pattern-or-family-file>".
// graph6 never starts with a digit, so the prefix is unambiguous.
Target parse_target(const std::string& spec)
{
    std::size_t i = 0;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i])))
        ++i;
    int copies = 1;
    std::string rest = spec;
    if (i > 0 && i < spec.size() && spec[i] == 'x') {
        copies = std::stoi(spec.substr(0, i));
        rest = spec.substr(i + 1);
    }
    return Target{load_family(rest), copies};
}

TwoColouring load_colouring(const std::string& path)
{
    std::string text = slurp(path);
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        return ch == '{' ? read_colouring_json(text) : read_colouring(text);
    }
    throw Error("empty colouring file: " + path);
}

BitGraph load_host(const std::string& path)
{
    std::istringstream in(slurp(path));
    std::string first;
    while (std::getline(in, first) && first.empty()) {
    }
    if (first.rfind("N ", 0) == 0) {
        // edge list: "N <n>" then "e <u> <v>" lines
        int n = std::stoi(first.substr(2));
        BitGraph g(n);
        std::string line;
        int line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty())
                continue;
            std::istringstream ls(line);
            std::string tag;
            int u, v;
            if (!(ls >> tag >> u >> v) || tag != "e")
                throw Error("host file, line " + std::to_string(line_no)
                            + ": expected 'e <u> <v>'");
            g.add_edge(u, v);
        }
        return g;
    }
    return BitGraph::from_small(from_graph6(first));
}

VertexSet parse_vertex_list(const std::string& csv, int universe)
{
    VertexSet s(universe);
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        int v = std::stoi(item);
        if (v < 0 || v >= universe)
            throw Error("vertex " + item + " out of range");
        s.set(v);
    }
    return s;
}

void emit_construction(const ConstructionReport& rep, const std::string& out_path, bool as_json)
{
    spit(out_path, as_json ? write_colouring_json(rep.colouring) : write_colouring(rep.colouring));
    spit(out_path + ".partition.json", partition_to_json(rep.partition).dump() + "\n");
    json j;
    j["order"] = rep.colouring.order();
    j["colouring_file"] = out_path;
    j["partition_file"] = out_path + ".partition.json";
    auto blocks = json::object();
    for (const auto& [name, s] : rep.partition.blocks)
        blocks[name] = s.count();
    j["block_sizes"] = blocks;
    std::cout << j.dump() << "\n";
}

TilingParams params_from_json(const std::string& spec)
{
    TilingParams p;
    if (spec.empty())
        return p;
    std::string text = file_exists(spec) ? slurp(spec) : spec;
    json j = json::parse(text);
    if (j.contains("ell"))
        p.ell = j["ell"].get<int>();
    if (j.contains("matchings"))
        p.matchings = j["matchings"].get<int>();
    if (j.contains("auto_scale"))
        p.auto_scale = j["auto_scale"].get<bool>();
    if (j.contains("greedy_retries"))
        p.greedy_retries = j["greedy_retries"].get<int>();
    if (j.contains("absorber_fraction"))
        p.absorber_fraction = j["absorber_fraction"].get<double>();
    if (j.contains("force_absorb"))
        p.force_absorb = j["force_absorb"].get<bool>();
    if (j.contains("resilience_cap"))
        p.resilience_cap = j["resilience_cap"].get<int>();
    return p;
}

int run(int argc, char** argv)
{
    CLI::App app{"exact small-scale Ramsey toolkit: derived families, extremal colourings, "
                 "packing/tie/join detection, absorption tiling, arrowing solver"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "cap on internal fan-out (the search is sequential)");

    // families ---------------------------------------------------------
    auto* fam = app.add_subcommand("families", "derived graph families as graph6 lines");
    std::string fam_graph, fam_kind = "d";
    fam->add_option("--graph", fam_graph, "graph (graph6 string or file)")->required();
    fam->add_option("--kind", fam_kind, "d | dprime | dc | dcprime | components")
        ->check(CLI::IsMember({"d", "dprime", "dc", "dcprime", "components"}));

    // construct --------------------------------------------------------
    auto* con = app.add_subcommand("construct", "extremal colouring constructions");
    con->require_subcommand(1);
    std::string con_h, con_g, con_ecol, con_out = "construction.col";
    int con_n = 1, con_r = 0, con_b = 0;
    std::string con_join = "red";
    bool con_json = false, con_auto_e = false;

    auto* bes = con->add_subcommand("bes-lower", "two-block lower-bound colouring");
    bes->set_help_flag("--help", "print help");
    bes->add_option("--h", con_h, "pattern H (graph6 string or file)")->required();
    bes->add_option("--n", con_n, "number of copies")->required();
    bes->add_option("-o,--out", con_out, "output colouring file");
    bes->add_flag("--json", con_json, "write the colouring as JSON");

    auto* asym = con->add_subcommand("asym-lower", "asymmetric lower-bound colouring");
    asym->set_help_flag("--help", "print help");
    asym->add_option("--g", con_g, "pattern G")->required();
    asym->add_option("--h", con_h, "pattern H (connected)")->required();
    asym->add_option("--n", con_n, "number of copies")->required();
    asym->add_option("--e-col", con_ecol, "exceptional block colouring file");
    asym->add_flag("--auto-e", con_auto_e, "derive a maximum exceptional block with the solver");
    asym->add_option("-o,--out", con_out, "output colouring file");
    asym->add_flag("--json", con_json, "write the colouring as JSON");

    auto* est = con->add_subcommand("estimate-lower", "three-block lower-bound colouring");
    est->set_help_flag("--help", "print help");
    est->add_option("--h", con_h, "pattern H (connected, no isolated vertices)")->required();
    est->add_option("--n", con_n, "number of copies")->required();
    est->add_option("--e-col", con_ecol, "exceptional block colouring file");
    est->add_flag("--auto-e", con_auto_e, "derive a maximum exceptional block with the solver");
    est->add_option("-o,--out", con_out, "output colouring file");
    est->add_flag("--json", con_json, "write the colouring as JSON");

    auto* crit = con->add_subcommand("critical-template", "generic R/B/E template colouring");
    crit->add_option("--r-size", con_r, "size of R")->required();
    crit->add_option("--b-size", con_b, "size of B")->required();
    crit->add_option("--join-colour", con_join, "colour between R and B")
        ->check(CLI::IsMember({"red", "blue"}));
    crit->add_option("--e-col", con_ecol, "exceptional block colouring file");
    crit->add_option("-o,--out", con_out, "output colouring file");
    crit->add_flag("--json", con_json, "write the colouring as JSON");

    // detect -----------------------------------------------------------
    auto* det = app.add_subcommand("detect", "find a copy, packing, tie or join");
    std::string det_col, det_pattern, det_colour = "red", det_mode = "copy";
    std::string det_rcand, det_bcand, det_out;
    int det_n = 1, det_k = 1, det_l = 1;
    det->add_option("--colouring", det_col, "colouring file")->required();
    det->add_option("--mode", det_mode, "copy | pack | tie | join")
        ->check(CLI::IsMember({"copy", "pack", "tie", "join"}));
    det->add_option("--pattern", det_pattern, "pattern H (graph6 string or file)");
    det->add_option("--colour", det_colour, "red | blue")->check(CLI::IsMember({"red", "blue"}));
    det->add_option("--n", det_n, "copies for pack mode");
    det->add_option("--r-cand", det_rcand, "join mode: candidate red side, comma-separated");
    det->add_option("--b-cand", det_bcand, "join mode: candidate blue side, comma-separated");
    det->add_option("--k", det_k, "join mode: red part size");
    det->add_option("--l", det_l, "join mode: blue part size");
    det->add_option("-o,--out", det_out, "also write the certificate JSON to a file");

    // tile --------------------------------------------------------------
    auto* tile = app.add_subcommand("tile", "absorption clique tiling");
    std::string tile_host, tile_params, tile_out;
    int tile_k = 2;
    std::uint64_t tile_seed = 0;
    tile->add_option("--host", tile_host, "host graph (graph6 or 'N n'+'e u v' edge list file)")
        ->required();
    tile->add_option("--k", tile_k, "clique size")->required();
    auto* seed_opt =
        tile->add_option("--seed", tile_seed, "random seed (required; no wall-clock default)");
    tile->add_option("--params", tile_params, "params JSON (file or literal)");
    tile->add_option("-o,--out", tile_out, "also write the certificate JSON to a file");

    // solve --------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "exact Ramsey numbers with witness provenance");
    std::string solve_red, solve_blue, solve_range, solve_witness = "witness.col";
    std::string solve_cbracket;
    int solve_cap = 10;
    solve->add_option("--red", solve_red, "red target: '<n>x<pattern>' or family file");
    solve->add_option("--blue", solve_blue, "blue target");
    solve->add_option("--n-range", solve_range, "scan range 'a..b'");
    solve->add_option("--max-n", solve_cap, "open-search order cap");
    solve->add_option("--witness-out", solve_witness, "witness colouring output file");
    solve->add_option("--c-bracket", solve_cbracket,
                      "instead: bracket the additive constant for this connected H");

    // verify --------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "check a certificate against a colouring or host");
    std::string ver_kind, ver_col, ver_host, ver_cert, ver_pattern, ver_partition;
    ver->add_option("--kind", ver_kind, "copy | packing | tie | join | tiling | critical")
        ->required()
        ->check(CLI::IsMember({"copy", "packing", "tie", "join", "tiling", "critical"}));
    ver->add_option("--colouring", ver_col, "colouring file (copy/packing/tie/join/critical)");
    ver->add_option("--host", ver_host, "host graph file (tiling)");
    ver->add_option("--cert", ver_cert, "certificate JSON file");
    ver->add_option("--pattern", ver_pattern, "pattern H (critical)");
    ver->add_option("--partition", ver_partition, "partition JSON file (critical)");

    CLI11_PARSE(app, argc, argv);
    (void)threads;

    if (*fam) {
        SmallGraph g = load_pattern(fam_graph);
        GraphFamily f;
        if (fam_kind == "d")
            f = d_family(g);
        else if (fam_kind == "dprime")
            f = d_prime_family(g);
        else if (fam_kind == "dc")
            f = d_c_family(g);
        else if (fam_kind == "dcprime")
            f = d_c_prime_family(g);
        else
            f = components_family(g);
        for (const auto& m : f.members())
            std::cout << to_graph6(m) << "\n";
        return 0;
    }

    if (*con) {
        SolverOptions sopts;
        ConstructionReport rep;
        if (*bes) {
            rep = bes_lower(load_pattern(con_h), con_n);
        } else if (*asym) {
            SmallGraph g = load_pattern(con_g), h = load_pattern(con_h);
            TwoColouring e(0);
            if (con_auto_e)
                e = extremal_e_colouring(d_family(g), GraphFamily::single(h), sopts);
            else if (!con_ecol.empty())
                e = load_colouring(con_ecol);
            rep = asym_lower(g, h, con_n, e);
        } else if (*est) {
            SmallGraph h = load_pattern(con_h);
            TwoColouring e(0);
            if (con_auto_e)
                e = extremal_e_colouring(d_c_family(h), d_family(h), sopts);
            else if (!con_ecol.empty())
                e = load_colouring(con_ecol);
            rep = estimate_lower(h, con_n, e);
        } else {
            TwoColouring e(0);
            if (!con_ecol.empty())
                e = load_colouring(con_ecol);
            rep = critical_template(con_r, con_b, colour_from_name(con_join), e);
        }
        emit_construction(rep, con_out, con_json);
        return 0;
    }

    if (*det) {
        TwoColouring c = load_colouring(det_col);
        Colour colour = colour_from_name(det_colour);
        json cert;
        bool found = false;
        if (det_mode == "copy") {
            if (auto e = find_mono_copy(c, load_pattern(det_pattern), colour)) {
                cert = to_json(*e);
                found = true;
            }
        } else if (det_mode == "pack") {
            if (auto p = find_disjoint_copies(c, load_pattern(det_pattern), colour, det_n)) {
                cert = to_json(*p);
                found = true;
            }
        } else if (det_mode == "tie") {
            if (auto t = find_h_tie(c, load_pattern(det_pattern))) {
                cert = to_json(*t, c.order());
                found = true;
            }
        } else {
            VertexSet r = parse_vertex_list(det_rcand, c.order());
            VertexSet b = parse_vertex_list(det_bcand, c.order());
            if (auto j = find_join(c, r, b, det_k, det_l)) {
                cert = to_json(*j);
                found = true;
            }
        }
        if (!found) {
            std::cout << "NONE\n";
            return 0;
        }
        std::cout << cert.dump() << "\n";
        if (!det_out.empty())
            spit(det_out, cert.dump() + "\n");
        return 0;
    }

    if (*tile) {
        if (seed_opt->count() == 0)
            throw Error("tile: --seed is required (runs must be reproducible)");
        BitGraph host = load_host(tile_host);
        TilingParams params = params_from_json(tile_params);
        TilingCertificate cert = absorption_tiling(host, tile_k, params, tile_seed);
        json j = to_json(cert);
        std::cout << j.dump() << "\n";
        if (!tile_out.empty())
            spit(tile_out, j.dump() + "\n");
        return 0;
    }

    if (*solve) {
        SolverOptions sopts;
        sopts.cap = solve_cap;
        sopts.threads = threads;
        if (!solve_cbracket.empty()) {
            ConstantBracket br = c_constant_bracket(load_pattern(solve_cbracket), sopts);
            json j;
            j["c_lo"] = br.lo;
            j["c_hi"] = br.hi;
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (solve_red.empty() || solve_blue.empty())
            throw Error("solve: --red and --blue are required (or use --c-bracket)");
        Target red = parse_target(solve_red);
        Target blue = parse_target(solve_blue);
        int lo = 1;
        std::optional<int> hi;
        if (!solve_range.empty()) {
            auto dots = solve_range.find("..");
            if (dots == std::string::npos)
                throw Error("solve: --n-range must look like 'a..b'");
            lo = std::stoi(solve_range.substr(0, dots));
            hi = std::stoi(solve_range.substr(dots + 2));
        }
        RamseyResult res = ramsey_number(red, blue, lo, hi, sopts);
        std::string witness_path;
        if (res.witness) {
            witness_path = solve_witness;
            spit(witness_path, write_colouring(*res.witness));
        }
        std::cout << to_json(res, witness_path).dump() << "\n";
        std::cerr << "elapsed_ms " << res.record.elapsed_ms << "\n";
        return 0;
    }

    if (*ver) {
        bool valid = false;
        if (ver_kind == "tiling") {
            BitGraph host = load_host(ver_host);
            TilingCertificate cert = tiling_from_json(json::parse(slurp(ver_cert)), host.order());
            valid = verify_tiling(host, cert);
        } else if (ver_kind == "critical") {
            TwoColouring c = load_colouring(ver_col);
            PartitionSpec p = partition_from_json(json::parse(slurp(ver_partition)), c.order());
            p.validate(c.order());
            StructureCheck chk = check_critical_structure(c, p, load_pattern(ver_pattern));
            valid = chk.ok;
            for (const auto& viol : chk.violations)
                std::cerr << "property " << viol.property << ": " << viol.description << "\n";
        } else {
            TwoColouring c = load_colouring(ver_col);
            json j = json::parse(slurp(ver_cert));
            if (ver_kind == "copy")
                valid = verify_embedding(c, embedding_from_json(j));
            else if (ver_kind == "packing")
                valid = verify_packing(c, packing_from_json(j));
            else if (ver_kind == "tie")
                valid = verify_tie(c, tie_from_json(j, c.order()));
            else
                valid = verify_join(c, join_from_json(j, c.order()));
        }
        std::cout << (valid ? "VALID" : "INVALID") << "\n";
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ramsey::PreconditionError& e) {
        std::cerr << "error: " << e.what();
        if (!e.witness().empty()) {
            std::cerr << " [witness:";
            for (int v : e.witness())
                std::cerr << " " << v;
            std::cerr << "]";
        }
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
