#include "ncs/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncs/bbc.hpp"
#include "ncs/fixtures.hpp"
#include "ncs/io.hpp"
#include "ncs/ncp.hpp"
#include "ncs/surfaces.hpp"
#include "ncs/verify.hpp"

namespace ncs {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

Encoding encoding_from_string(const std::string& name) {
    if (name == "auto") return Encoding::Auto;
    if (name == "vertices") return Encoding::Vertices;
    if (name == "complement") return Encoding::Complement;
    if (name == "sign") return Encoding::Sign;
    throw CLI::ValidationError("--encoding", "unknown encoding: " + name);
}

// --seq cyclic:d,n | altshuler | <file>
BBCSequence load_sequence(const std::string& spec, const ParseOptions& options) {
    if (spec.rfind("cyclic:", 0) == 0) {
        int d = 0, n = 0;
        char comma = 0;
        std::istringstream is(spec.substr(7));
        if (!(is >> d >> comma >> n) || comma != ',')
            throw Error("bad cyclic spec, expected cyclic:d,n");
        return bbc_from_cyclic(d, n);
    }
    if (spec == "altshuler") return altshuler_sequence();
    if (spec == "pentagon") return pentagon_sequence();
    std::string text = read_file(spec);
    // infer d from the first block, then reparse the whole chain
    ParseOptions probe = options;
    probe.n_vertices = 0;
    std::size_t cut = text.find("\n\n");
    SimplicialComplex first =
        parse_simplicial(cut == std::string::npos ? text : text.substr(0, cut), probe);
    int d = popcount64(first.facets().front());
    auto balls = parse_bbc_balls(text, d, options);
    return BBCSequence::validate(std::move(balls), d, d + static_cast<int>(balls.size()));
}

int cmd_bbc_build(const std::string& seq_spec, const std::string& mode, bool fvector,
                  const ParseOptions& parse_options, const std::string& out_path,
                  const std::string& export_format, std::ostream& out) {
    BBCSequence seq = load_sequence(seq_spec, parse_options);
    std::optional<CubicalComplex> direct, inductive;
    if (mode == "direct" || mode == "both") direct = build_direct(seq);
    if (mode == "inductive" || mode == "both") inductive = build_inductive(seq);
    const CubicalComplex& sphere = direct ? *direct : *inductive;

    out << "facets: " << sphere.facets().size() << '\n';
    bool agree = true;
    if (mode == "both") {
        agree = direct->facets() == inductive->facets();
        out << "paths agree: " << (agree ? "true" : "false") << '\n';
    }
    auto counts = facet_type_counts(sphere, seq.d());
    for (std::size_t t = 0; t < counts.size(); ++t)
        out << "type " << t << ": " << counts[t] << '\n';
    if (fvector)
        out << "f-vector: " << f_vector_cubical(sphere).to_string() << '\n';
    if (!out_path.empty()) {
        if (export_format == "json") write_file(out_path, cubical_to_json(sphere));
        else write_file(out_path, serialize_cubical(sphere));
        out << "facets written to " << out_path << '\n';
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

int cmd_ncp_facets(int n, int d, bool count_only, const std::string& out_path,
                   std::ostream& out) {
    if (count_only && d % 2 == 1) {
        out << "facets: " << ncp_facet_count(n, d) << '\n';
        return kExitOk;
    }
    CubicalComplex complex = cge_facets({n, d});
    out << "facets: " << complex.facets().size() << '\n';
    if (!out_path.empty()) {
        write_file(out_path, serialize_cubical(complex));
        out << "facets written to " << out_path << '\n';
    }
    return kExitOk;
}

int cmd_phi(const std::string& in_path, std::ostream& out) {
    CubicalComplex complex = parse_cubical(read_file(in_path));
    for (const auto& f : complex.facets()) out << phi_map(f).to_string() << '\n';
    return kExitOk;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json checks;
    checks["pure"] = report.is_pure;
    checks["closed_pseudomanifold"] = report.is_closed_pseudomanifold;
    checks["strongly_connected"] = report.is_strongly_connected;
    checks["neighborliness"] = report.neighborliness;
    if (report.betti_z2) checks["betti_z2"] = *report.betti_z2;
    if (!report.notes.empty()) checks["notes"] = report.notes;
    return checks;
}

void print_report(const VerificationReport& report, std::ostream& out) {
    out << "f-vector: " << report.f_vector.to_string() << '\n';
    out << "euler: " << report.euler << '\n';
    out << "pure: " << (report.is_pure ? "true" : "false") << '\n';
    out << "closed pseudomanifold: "
        << (report.is_closed_pseudomanifold ? "true" : "false") << '\n';
    out << "strongly connected: "
        << (report.is_strongly_connected ? "true" : "false") << '\n';
    out << "neighborliness: " << report.neighborliness << '\n';
    if (report.betti_z2) {
        out << "betti (Z/2):";
        for (auto b : *report.betti_z2) out << ' ' << b;
        out << '\n';
    }
    for (const auto& note : report.notes) out << "note: " << note << '\n';
}

int cmd_verify(const std::string& in_path, const std::string& kind, bool homology,
               bool links, const std::string& report_format, std::size_t cap,
               const ParseOptions& parse_options, std::ostream& out) {
    std::string text = read_file(in_path);
    bool cubical = (kind == "cubical") ||
                   (kind == "auto" && looks_like_sign_vectors(text));
    VerificationReport report;
    std::string link_note;
    bool failed = false;

    if (cubical) {
        CubicalComplex complex = parse_cubical(text);
        report = verify_complex(complex, homology, cap);
        if (links) {
            auto vertices = k_faces_cubical(complex, 0);
            std::size_t bad = 0;
            for (const auto& v : vertices) {
                SimplicialComplex link = vertex_link(complex, v);
                auto pm = closed_pseudomanifold_check(link);
                int dim = *complex.pure_dim();
                std::int64_t want_euler = (dim - 1) % 2 == 0 ? 2 : 0;
                if (!pm.closed || !pm.strongly_connected ||
                    f_vector_simplicial(link).euler() != want_euler)
                    ++bad;
            }
            link_note = "links: " + std::to_string(vertices.size() - bad) + "/" +
                        std::to_string(vertices.size()) + " pass";
            if (bad) failed = true;
        }
    } else {
        SimplicialComplex complex = parse_simplicial(text, parse_options);
        report = verify_complex(complex, homology, cap);
        if (links) link_note = "links: only available for cubical complexes";
    }
    if (!report.notes.empty()) failed = true;

    if (report_format == "json") {
        nlohmann::json j;
        j["command"] = "verify";
        j["params"] = {{"in", in_path}, {"kind", cubical ? "cubical" : "simplicial"},
                       {"homology", homology}, {"links", links}};
        j["f_vector"] = report.f_vector.counts();
        j["euler"] = report.euler;
        j["checks"] = report_to_json(report);
        if (!link_note.empty()) j["checks"]["links"] = link_note;
        j["facets_path"] = in_path;
        out << j.dump(2) << '\n';
    } else {
        out << "kind: " << (cubical ? "cubical" : "simplicial") << '\n';
        print_report(report, out);
        if (!link_note.empty()) out << link_note << '\n';
    }
    return failed ? kExitVerificationFailure : kExitOk;
}

int cmd_surface(int q, bool genus_only, const std::string& export_format,
                bool export_requested, const std::string& out_path, std::ostream& out) {
    if (genus_only) {
        // closed form, validated against the Euler route for small q
        out << "genus: " << genus_closed_form(q) << '\n';
        return kExitOk;
    }
    QuadSurface surface = equivelar_m4q(q);
    FVector fv = f_vector_cubical(surface.underlying());
    std::int64_t genus = genus_from_euler(fv.euler());
    out << "q: " << q << '\n';
    out << "f-vector: " << fv.to_string() << '\n';
    out << "euler: " << fv.euler() << '\n';
    out << "genus: " << genus << '\n';
    if (q >= 4 && genus != genus_closed_form(q)) {
        out << "genus mismatch against closed form\n";
        return kExitVerificationFailure;
    }
    out << "orientable: " << (orientability(surface) ? "true" : "false") << '\n';
    if (export_requested || !out_path.empty()) {
        std::string payload;
        if (export_format == "json") payload = cubical_to_json(surface.underlying());
        else if (export_format == "text") payload = serialize_cubical(surface.underlying());
        else payload = off_export(surface);
        if (out_path.empty()) out << payload;
        else {
            write_file(out_path, payload);
            out << "surface written to " << out_path << '\n';
        }
    }
    return kExitOk;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, std::uint64_t budget,
            const ParseOptions& parse_options, std::ostream& out) {
    SimplicialComplex a = parse_simplicial(read_file(a_path), parse_options);
    SimplicialComplex b = parse_simplicial(read_file(b_path), parse_options);
    IsoOptions options;
    options.node_budget = budget;
    bool iso = complexes_isomorphic(a, b, options);
    out << "isomorphic: " << (iso ? "true" : "false") << '\n';
    return iso ? kExitOk : kExitVerificationFailure;
}

int cmd_fixtures(const std::string& dump_name, std::ostream& out) {
    if (!dump_name.empty()) {
        out << fixture_by_name(dump_name).payload;
        return kExitOk;
    }
    for (const auto& f : builtin_fixtures())
        out << f.name << " (" << f.kind << ", index base " << f.index_base << ")\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cubical spheres from chains of simplicial balls"};
    app.require_subcommand(1);

    std::string encoding_name = "auto";
    int index_base = 0;
    app.add_option("--encoding", encoding_name,
                   "facet encoding: auto|vertices|complement|sign");
    app.add_option("--index-base", index_base, "vertex labels start at 0 or 1")
        ->check(CLI::IsMember({0, 1}));

    // bbc build
    auto* bbc = app.add_subcommand("bbc", "build cubical spheres from ball chains");
    auto* bbc_build = bbc->add_subcommand("build", "construct the sphere");
    std::string seq_spec, mode = "both", out_path, export_format = "text";
    bool fvector = false;
    bbc_build->add_option("--seq", seq_spec, "cyclic:d,n | altshuler | pentagon | file")
        ->required();
    bbc_build->add_option("--mode", mode, "inductive|direct|both")
        ->check(CLI::IsMember({"inductive", "direct", "both"}));
    bbc_build->add_flag("--fvector", fvector, "print the f-vector");
    bbc_build->add_option("--out", out_path, "write the facet list to a file");
    bbc_build->add_option("--export", export_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // ncp
    auto* ncp = app.add_subcommand("ncp", "neighborly cubical polytope boundaries");
    auto* ncp_facets_cmd = ncp->add_subcommand("facets", "facets by Gale evenness");
    int ncp_n = 0, ncp_d = 0;
    bool count_only = false;
    std::string ncp_out;
    ncp_facets_cmd->add_option("--n", ncp_n, "ambient cube dimension")->required();
    ncp_facets_cmd->add_option("--d", ncp_d, "facet dimension")->required();
    ncp_facets_cmd->add_flag("--count-only", count_only, "closed-form count only");
    ncp_facets_cmd->add_option("--out", ncp_out, "write the facet list to a file");
    auto* ncp_phi = ncp->add_subcommand("phi", "apply the order-reversing isomorphism");
    std::string phi_in;
    ncp_phi->add_option("--in", phi_in, "sign-vector file")->required();

    // top-level phi alias
    auto* phi_cmd = app.add_subcommand("phi", "apply the order-reversing isomorphism");
    std::string phi_in2;
    phi_cmd->add_option("--in", phi_in2, "sign-vector file")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "combinatorial checks on a complex");
    std::string verify_in, verify_kind = "auto", report_format = "text";
    bool homology = false, links = false;
    std::size_t homology_cap = kDefaultHomologyCap;
    verify_cmd->add_option("--in", verify_in, "facet-list file")->required();
    verify_cmd->add_option("--kind", verify_kind, "auto|simplicial|cubical")
        ->check(CLI::IsMember({"auto", "simplicial", "cubical"}));
    verify_cmd->add_flag("--homology", homology, "compute Z/2 Betti numbers");
    verify_cmd->add_flag("--links", links, "check every vertex link");
    verify_cmd->add_option("--report", report_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--homology-cap", homology_cap, "face-count cap");

    // surface
    auto* surface_cmd = app.add_subcommand("surface", "equivelar quad surfaces");
    int surface_q = 0;
    bool genus_only = false;
    std::string surface_export = "off", surface_out;
    surface_cmd->add_option("--q", surface_q, "vertex degree")->required();
    surface_cmd->add_flag("--genus", genus_only, "print the genus only");
    surface_cmd->add_option("--export", surface_export, "off|json|text")
        ->check(CLI::IsMember({"off", "json", "text"}));
    surface_cmd->add_option("--out", surface_out, "write the export to a file");

    // iso
    auto* iso_cmd = app.add_subcommand("iso", "simplicial complex isomorphism");
    std::string iso_a, iso_b;
    std::uint64_t iso_budget = IsoOptions{}.node_budget;
    iso_cmd->add_option("--a", iso_a, "first facet-list file")->required();
    iso_cmd->add_option("--b", iso_b, "second facet-list file")->required();
    iso_cmd->add_option("--budget", iso_budget, "backtracking node budget");

    // fixtures
    auto* fixtures_cmd = app.add_subcommand("fixtures", "embedded data sets");
    std::string dump_name;
    fixtures_cmd->add_option("--dump", dump_name, "print a fixture payload verbatim");

    std::vector<const char*> argv;
    argv.push_back("ncs");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    ParseOptions parse_options;
    parse_options.index_base = index_base;
    try {
        parse_options.encoding = encoding_from_string(encoding_name);
        if (bbc_build->parsed())
            return cmd_bbc_build(seq_spec, mode, fvector, parse_options, out_path,
                                 export_format, out);
        if (ncp_facets_cmd->parsed())
            return cmd_ncp_facets(ncp_n, ncp_d, count_only, ncp_out, out);
        if (ncp_phi->parsed()) return cmd_phi(phi_in, out);
        if (phi_cmd->parsed()) return cmd_phi(phi_in2, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify_in, verify_kind, homology, links, report_format,
                              homology_cap, parse_options, out);
        if (surface_cmd->parsed())
            return cmd_surface(surface_q, genus_only, surface_export,
                               surface_cmd->count("--export") > 0, surface_out, out);
        if (iso_cmd->parsed())
            return cmd_iso(iso_a, iso_b, iso_budget, parse_options, out);
        if (fixtures_cmd->parsed()) return cmd_fixtures(dump_name, out);
        err << "no subcommand given\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
}

}  // namespace ncs
