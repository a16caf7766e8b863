#pragma once

// The `udg` command line. Exit codes: 0 success, 1 a checked property
// fails, 2 invalid input or usage, 3 search budget exhausted.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udg/udg.hpp"

namespace udg::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kInvalid = 2, kBudget = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    if (!o) throw ParseError("cannot write " + path);
    o << text;
    if (!o) throw ParseError("write failed: " + path);
}

inline std::vector<LatticeVector> parse_dirs(const std::string& text) {
    std::vector<LatticeVector> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw ParseError("direction '" + item + "' is not of the form a,b");
        try {
            std::size_t p1 = 0, p2 = 0;
            const std::string a = item.substr(0, comma), b = item.substr(comma + 1);
            const long long dx = std::stoll(a, &p1), dy = std::stoll(b, &p2);
            if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing characters");
            out.push_back({dx, dy});
        } catch (const std::logic_error&) {
            throw ParseError("direction '" + item + "' is not of the form a,b");
        }
    }
    if (out.empty()) throw ParseError("--dirs lists no directions");
    return out;
}

inline void print_certificate(std::ostream& out, const Construction& c) {
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    CsvWriter csv(out);
    csv.row("construction", "n", "edges", "claimed_edges", "max_crossings_per_edge", "max_pairwise_crossing",
            "edge_lower_bound");
    csv.row(c.certificate.name, c.drawing.n(), c.drawing.e(), c.certificate.claimed_edges,
            opt(c.certificate.max_crossings_per_edge), opt(c.certificate.max_pairwise_crossing),
            opt(c.certificate.edge_lower_bound));
}

inline void print_defects(std::ostream& err, const CrossingReport& rep) {
    err << "drawing has " << rep.defects.size() << " defects\n";
    for (const auto& d : rep.defects) {
        if (d.kind == DefectKind::vertex_in_interior)
            err << "  vertex " << d.a << " lies inside edge " << d.b << "\n";
        else
            err << "  edges " << d.a << " and " << d.b << ": " << to_string(d.kind) << "\n";
    }
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unit distance graph workbench", "udg"};
    app.require_subcommand(1);
    std::function<int()> action;

    // gen -------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a drawing");
    gen->require_subcommand(1);
    std::string out_path;
    auto emit = [&](const Construction& c) {
        for (const auto& w : c.certificate.warnings) err << "warning: " << w << "\n";
        if (out_path.empty()) {
            out << serialize_drawing(c.drawing);
        } else {
            detail::write_file(out_path, serialize_drawing(c.drawing));
            detail::print_certificate(out, c);
        }
        return kOk;
    };

    std::int64_t n = 0;
    auto* g_spiral = gen->add_subcommand("spiral", "Greedy spiral on the triangular lattice");
    g_spiral->add_option("--n", n, "Number of points")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
    g_spiral->add_option("-o,--output", out_path, "Output file");
    g_spiral->callback([&] {
        action = [&] { return emit(triangular_spiral_construction(static_cast<std::size_t>(n))); };
    });

    std::int64_t width = 0, r = 0;
    auto* g_erdos = gen->add_subcommand("erdos", "Integer grid with all sum-of-two-squares edges");
    g_erdos->add_option("--width", width, "Grid width")->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{2000}));
    g_erdos->add_option("--r", r, "Squared edge length")->required()->check(CLI::PositiveNumber);
    g_erdos->add_option("-o,--output", out_path, "Output file");
    g_erdos->callback([&] { action = [&] { return emit(erdos_grid(width, r)); }; });

    std::string dirs_text;
    auto* g_dirs = gen->add_subcommand("directions", "Integer grid restricted to chosen direction classes");
    g_dirs->add_option("--width", width, "Grid width")->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{2000}));
    g_dirs->add_option("--r", r, "Squared edge length")->required()->check(CLI::PositiveNumber);
    g_dirs->add_option("--dirs", dirs_text, "Directions as \"a,b;c,d\"")->required();
    g_dirs->add_option("-o,--output", out_path, "Output file");
    g_dirs->callback([&] {
        action = [&] { return emit(direction_restricted_grid(width, r, detail::parse_dirs(dirs_text))); };
    });

    std::int64_t rows = 0, cols = 0;
    auto* g_shift = gen->add_subcommand("shifted", "Triangular parallelogram plus a unit-shifted copy");
    g_shift->add_option("--rows", rows, "Rows")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1000}));
    g_shift->add_option("--cols", cols, "Columns")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1000}));
    g_shift->add_option("-o,--output", out_path, "Output file");
    g_shift->callback([&] { action = [&] { return emit(shifted_triangular(rows, cols)); }; });

    // analysis ----------------------------------------------------------------
    std::string in_path;
    unsigned jobs = 1;
    bool no_bucketing = false;
    std::uint64_t budget = kDefaultCliqueBudget;
    auto scan_options = [&] { return ScanOptions{jobs, !no_bucketing}; };
    auto load = [&] { return parse_drawing(detail::read_file(in_path), ParseMode::strict); };
    auto report_of = [&](const Drawing& dr) {
        CrossingReport rep = crossing_report(dr, scan_options());
        if (!rep.defect_free()) {
            detail::print_defects(err, rep);
            throw ValidationError("drawing is not admissible");
        }
        return rep;
    };
    auto add_common = [&](CLI::App* sc) {
        sc->add_option("drawing", in_path, "Drawing file")->required();
        sc->add_option("--jobs", jobs, "Worker threads for pair classification")->check(CLI::Range(1u, 256u));
        sc->add_flag("--no-bucketing", no_bucketing, "Test every edge pair");
    };

    std::optional<std::int64_t> k_opt;
    std::string pairs_csv, per_edge_csv;
    auto* c_check = app.add_subcommand("check", "Validate a drawing and measure k-planarity");
    add_common(c_check);
    c_check->add_option("--k", k_opt, "Verdict: every edge has at most K crossings")->check(CLI::NonNegativeNumber);
    c_check->add_option("--pairs-csv", pairs_csv, "Write crossing pairs as CSV");
    c_check->add_option("--per-edge-csv", per_edge_csv, "Write per-edge crossing counts as CSV");
    c_check->callback([&] {
        action = [&] {
            const Drawing dr = load();
            const CrossingReport rep = report_of(dr);
            const std::size_t kp = planarity_number(rep);
            if (!pairs_csv.empty()) {
                std::ostringstream s;
                write_crossing_pairs_csv(s, rep);
                detail::write_file(pairs_csv, s.str());
            }
            if (!per_edge_csv.empty()) {
                std::ostringstream s;
                write_per_edge_csv(s, dr, rep);
                detail::write_file(per_edge_csv, s.str());
            }
            CsvWriter csv(out);
            csv.row("n", "edges", "crossing_pairs", "planarity_number", "k", "verdict");
            const bool holds = !k_opt || static_cast<std::int64_t>(kp) <= *k_opt;
            csv.row(dr.n(), dr.e(), rep.crossing_pairs.size(), kp, k_opt ? std::to_string(*k_opt) : "",
                    k_opt ? (holds ? "pass" : "fail") : "");
            if (!holds) err << "planarity number " << kp << " exceeds " << *k_opt << "\n";
            return holds ? kOk : kViolated;
        };
    });

    std::optional<std::int64_t> max_k;
    auto* c_quasi = app.add_subcommand("quasi", "Largest set of pairwise crossing edges");
    add_common(c_quasi);
    c_quasi->add_option("--max-k", max_k, "Verdict: no K pairwise crossing edges")->check(CLI::PositiveNumber);
    c_quasi->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
    c_quasi->callback([&] {
        action = [&] {
            const Drawing dr = load();
            const CliqueResult res = max_pairwise_crossing(report_of(dr), budget);
            std::string witness;
            for (auto e : res.witness.edges) witness += (witness.empty() ? "" : ";") + std::to_string(e);
            CsvWriter csv(out);
            csv.row("n", "edges", "max_pairwise_crossing", "exact", "nodes", "witness");
            csv.row(dr.n(), dr.e(), res.witness.size, res.exact ? 1 : 0, res.nodes, witness);
            const auto size = static_cast<std::int64_t>(res.witness.size);
            if (max_k && size >= *max_k) {
                err << res.witness.size << " pairwise crossing edges found, limit is fewer than " << *max_k << "\n";
                return kViolated;
            }
            if (!res.exact) {
                err << "budget exceeded after " << res.nodes << " nodes; " << res.witness.size << " is a lower bound\n";
                return kBudget;
            }
            return kOk;
        };
    });

    auto plane_structure = [&](const Drawing& dr) {
        PlaneStructure ps = flip_reduce(planarize(dr, report_of(dr)));
        return ps;
    };

    auto* c_faces = app.add_subcommand("faces", "Face census of the plane subgraph after edge flips");
    add_common(c_faces);
    c_faces->callback([&] {
        action = [&] {
            const PlaneStructure ps = plane_structure(load());
            const Census c = halfedge_census(face_structure(ps));
            write_census_csv(out, c);
            err << "n=" << c.n << " e0=" << c.e0 << " e1=" << c.e1 << " faces=" << c.rows.size()
                << " components=" << c.components << " flips=" << ps.flips << " f3=" << c.f3 << " f4=" << c.f4
                << " F>=5=" << c.f_ge5 << "\n";
            bool ok = true;
            auto verdict = [&](const char* name, bool v) {
                err << name << ": " << (v ? "pass" : "fail") << "\n";
                ok = ok && v;
            };
            verdict("triangles without isolated vertices hold no halfedge", c.triangles_clean());
            verdict("per-face halfedge bound", c.weight_bounds_hold());
            verdict("s <= |face|/2", c.half_bounds_hold());
            verdict("sum of s equals |E1|", c.weight_identity());
            verdict("e0 + sum of t equals 3n - 6", c.triangulation_identity());
            verdict("Euler formula", c.euler_identity());
            return ok ? kOk : kViolated;
        };
    });

    auto* c_chains = app.add_subcommand("chains", "Rhombus chains of the plane subgraph");
    add_common(c_chains);
    c_chains->callback([&] {
        action = [&] {
            const PlaneStructure ps = plane_structure(load());
            const FaceStructure fs = face_structure(ps);
            const ChainSet cs = rhombus_chains(ps, fs);
            write_chains_csv(out, cs);
            err << "rhombi=" << cs.rhombi.size() << " chains=" << cs.chains.size()
                << " nonempty_intersections=" << cs.nonempty_intersections << " cycles=" << cs.cycles.size() << "\n";
            if (cs.enough_chains) err << "chain count against sqrt(n/2): " << (*cs.enough_chains ? "pass" : "fail") << "\n";
            bool ok = cs.every_rhombus_in_two() && cs.violations.empty() && cs.cycles.empty() && cs.ends_leave_rhombi &&
                      cs.enough_chains.value_or(true);
            for (const auto& [a, b] : cs.violations) err << "chains " << a << " and " << b << " meet in a non-chain\n";
            if (!cs.cycles.empty()) err << "same-weight cycle among rhombi\n";
            return ok ? kOk : kViolated;
        };
    });

    auto* c_blocks = app.add_subcommand("blocks", "Block decomposition of the positive-slope edges");
    add_common(c_blocks);
    c_blocks->add_option("--budget", budget, "Search node budget for the crossing clique")->check(CLI::PositiveNumber);
    c_blocks->callback([&] {
        action = [&] {
            const Drawing dr = load();
            const CliqueResult cl = max_pairwise_crossing(report_of(dr), budget);
            const BlockSet bs = block_decomposition(dr, cl.witness.size);
            write_blocks_csv(out, bs);
            const auto& v = bs.verdicts;
            err << "blocks=" << bs.blocks.size() << " positive_edges=" << bs.positive.size() << "/" << dr.e()
                << " max_length=" << v.max_length << " clique=" << cl.witness.size << (cl.exact ? "" : " (lower bound)")
                << "\n";
            if (2 * bs.positive.size() < dr.e()) err << "fewer than half of the edges have positive slope\n";
            const bool structural = v.simple_paths && v.slopes_increase && v.nesting && v.odd_edges_cross &&
                                    v.partition && v.block_count;
            if (!structural) return kViolated;
            if (!v.length_bound.value_or(true)) return cl.exact ? kViolated : kBudget;
            return kOk;
        };
    });

    // bounds ------------------------------------------------------------------
    std::int64_t from = 1, to = 1;
    std::optional<std::string> c_text;
    bool degrees = false;
    std::string measure_path;
    auto* c_bounds = app.add_subcommand("bounds", "Edge bound table");
    c_bounds->add_option("--from", from, "First n")->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
    c_bounds->add_option("--to", to, "Last n")->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
    c_bounds->add_option("--k", k_opt, "k for the k-planar and quasiplanar columns")->check(CLI::PositiveNumber);
    c_bounds->add_option("--c", c_text, "Constant of the k-planar upper bound");
    c_bounds->add_option("--measure", measure_path, "Drawing whose edge count fills the measured column");
    c_bounds->add_flag("--degrees", degrees, "Print |vectors(pick_r(m))| for m = 10 .. 10^6 instead");
    c_bounds->callback([&] {
        action = [&] {
            CsvWriter csv(out);
            if (degrees) {
                csv.row("m", "r", "vectors");
                for (std::int64_t m = 10; m <= 1000000; m *= 10) {
                    const std::int64_t rr = pick_r(m);
                    csv.row(m, rr, two_square_vectors(rr).vectors.size());
                }
                return kOk;
            }
            if (to < from) throw ParseError("--to is smaller than --from");
            std::optional<Decimal50> c;
            if (c_text) {
                try {
                    c = Decimal50(*c_text);
                } catch (const std::exception&) {
                    throw ParseError("--c is not a number: " + *c_text);
                }
            }
            std::optional<Drawing> measured;
            if (!measure_path.empty()) measured = parse_drawing(detail::read_file(measure_path));
            auto rows_out = bound_table(from, to, k_opt, c);
            csv.row("n", "k", "u0", "t1_upper", "t3_upper", "t5_upper", "t5_lower_shape", "measured");
            for (auto& row : rows_out) {
                if (measured && static_cast<std::int64_t>(measured->n()) == row.n)
                    row.measured = static_cast<std::int64_t>(measured->e());
                auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
                csv.row(row.n, opt(row.k), row.u0, row.t1_upper.to_string(),
                        row.t3_upper ? decimal_text(*row.t3_upper) : "", opt(row.t5_upper), opt(row.t5_lower_shape),
                        opt(row.measured));
            }
            return kOk;
        };
    });

    // svg ---------------------------------------------------------------------
    auto* c_svg = app.add_subcommand("svg", "Render a drawing as SVG");
    c_svg->add_option("drawing", in_path, "Drawing file")->required();
    c_svg->add_option("-o,--output", out_path, "Output file")->required();
    c_svg->callback([&] {
        action = [&] {
            const Drawing dr = load();
            detail::write_file(out_path, render_svg(dr, crossing_report(dr)));
            return kOk;
        };
    });

    std::vector<const char*> argv{"udg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInvalid;
    }
    if (!action) {
        err << app.help();
        return kInvalid;
    }
    try {
        return action();
    } catch (const ParseError& e) {
        err << "invalid input: " << e.what() << "\n";
    } catch (const ValidationError& e) {
        err << "invalid drawing: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        err << "unsupported input: " << e.what() << "\n";
    } catch (const DiscriminantMismatch& e) {
        err << "invalid input: " << e.what() << "\n";
    }
    return kInvalid;
}

inline int run(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

}  // namespace udg::cli
