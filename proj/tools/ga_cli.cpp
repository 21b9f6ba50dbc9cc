#include "ga/dual.hpp"
#include "ga/exprparse.hpp"
#include "ga/jsonio.hpp"
#include "ga/offexport.hpp"
#include "ga/slice.hpp"
#include "ga/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace ga;

GoldenQuaternion parse_axis(const std::string& text) {
    if (text == "1") return GoldenQuaternion::one();
    if (text == "e1") return GoldenQuaternion::e1();
    if (text == "e2") return GoldenQuaternion::e2();
    if (text == "e3") return GoldenQuaternion::e3();
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4)
        throw CLI::ValidationError("--axis", "expected 1|e1|e2|e3 or four golden expressions");
    GoldenQuaternion q{parse_golden_expr(parts[0]), parse_golden_expr(parts[1]),
                       parse_golden_expr(parts[2]), parse_golden_expr(parts[3])};
    if (q.norm_sq() != GoldenNumber(1))
        throw CLI::ValidationError("--axis", "axis must be a unit quaternion");
    return q;
}

GoldenQuaternion parse_functional(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4)
        throw CLI::ValidationError("--seed-functional", "expected four golden expressions");
    return {parse_golden_expr(parts[0]), parse_golden_expr(parts[1]),
            parse_golden_expr(parts[2]), parse_golden_expr(parts[3])};
}

Json slice_to_json(const Slice& s) {
    Json j;
    j["level"] = golden_to_json_with_value(s.level);
    j["count"] = s.points.size();
    j["shape"] = s.shape_tag;
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(quat_to_json_with_value(p));
    j["points"] = std::move(pts);
    return j;
}

int run_build(bool as_json, int threads) {
    auto icosians = IcosianGroup::build();
    auto groups = build_standard_groups(icosians);
    auto ga = ga_vertices();
    auto facets = enumerate_facets(ga.vertices, threads);
    std::size_t tets = 0, antiprisms = 0;
    for (const auto& f : facets) {
        if (f.type == CellType::Tetrahedron) ++tets;
        if (f.type == CellType::PentagonalAntiprism) ++antiprisms;
    }
    if (as_json) {
        Json j;
        j["schema_version"] = 1;
        j["group_orders"] = {{"icosian", icosians.size()},
                             {"w_h2", groups.w_h2.size()},
                             {"w_h2_prime", groups.w_h2_prime.size()},
                             {"w_h2_product", groups.w_h2_product.size()},
                             {"c4", groups.c4.size()},
                             {"aut_h2_h2", groups.aut.size()},
                             {"w_h3", groups.w_h3.size()},
                             {"w_h4", groups.w_h4.size()}};
        j["grand_antiprism"] = {{"vertices", ga.vertices.size()},
                                {"facets", facets.size()},
                                {"tetrahedra", tets},
                                {"pentagonal_antiprisms", antiprisms}};
        Json classes = Json::array();
        for (const auto& cls : classify_conjugacy(icosians).classes) {
            Json cj;
            cj["label"] = cls.label;
            cj["size"] = cls.members.size();
            cj["element_order"] = cls.element_order;
            cj["real_part"] = golden_to_json_with_value(cls.real_part);
            Json members = Json::array();
            for (int idx : cls.members)
                members.push_back(quat_to_json(icosians.elements()[idx]));
            cj["members"] = std::move(members);
            classes.push_back(std::move(cj));
        }
        j["conjugacy_classes"] = std::move(classes);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "binary icosahedral group: " << icosians.size() << " elements\n"
                  << "W(H2) = " << groups.w_h2.size()
                  << ", W(H2') = " << groups.w_h2_prime.size()
                  << ", W(H2)xW(H2') = " << groups.w_h2_product.size()
                  << ", C4 = " << groups.c4.size() << "\n"
                  << "Aut(H2+H2') = " << groups.aut.size()
                  << ", W(H3) = " << groups.w_h3.size() << ", W(H4) = " << groups.w_h4.size()
                  << "\n"
                  << "grand antiprism: " << ga.vertices.size() << " vertices, "
                  << facets.size() << " cells (" << tets << " tetrahedra, " << antiprisms
                  << " pentagonal antiprisms)\n";
    }
    return 0;
}

int run_cells(bool as_json, bool full, int threads) {
    auto ga = ga_vertices();
    auto facets = enumerate_facets(ga.vertices, threads);
    CellCensus census = cell_census(facets, ga);
    if (as_json) {
        Json j;
        j["schema_version"] = 1;
        j["tetrahedra"] = census.tetra_22 + census.tetra_31 + census.tetra_13;
        j["antiprisms"] = census.antiprisms;
        j["tetra_22"] = census.tetra_22;
        j["tetra_31"] = census.tetra_31;
        j["tetra_13"] = census.tetra_13;
        j["per_vertex_ok"] = census.per_vertex_ok;
        if (full) {
            Json fl = Json::array();
            for (const auto& f : facets) {
                Json nf;
                nf["vertices"] = f.vertices;
                nf["type"] = f.type == CellType::Tetrahedron ? "tetrahedron"
                             : f.type == CellType::PentagonalAntiprism ? "pentagonal_antiprism"
                                                                       : "other";
                nf["normal"] = quat_to_json(f.plane.normal);
                nf["offset"] = golden_to_json(f.plane.offset);
                fl.push_back(std::move(nf));
            }
            j["facets"] = std::move(fl);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "320 cells: " << census.tetra_22 + census.tetra_31 + census.tetra_13
                  << " tetrahedra (" << census.tetra_22 << " with 2+2, " << census.tetra_31
                  << " with 3+1, " << census.tetra_13 << " with 1+3 ring vertices), "
                  << census.antiprisms << " pentagonal antiprisms\n"
                  << "per-vertex incidence (12 tetrahedra, 2 antiprisms): "
                  << (census.per_vertex_ok ? "ok" : "BROKEN") << "\n";
    }
    return 0;
}

int run_dual(bool as_json, int threads) {
    auto ga = ga_vertices();
    auto facets = enumerate_facets(ga.vertices, threads);
    auto duals = dual_vertices(facets, ga);
    auto aut = build_aut_group();
    auto decomposition = dual_orbit_decomposition(duals, aut);
    auto rep = cross_check_120cell(duals, aut);

    if (as_json) {
        Json j;
        j["schema_version"] = 1;
        Json verts = Json::array();
        for (const auto& dv : duals) {
            Json v;
            v["position"] = quat_to_json(dv.position);
            v["shell"] = dv.shell == Shell::Inner ? "inner" : "outer";
            v["source_facet"] = dv.source_facet;
            verts.push_back(std::move(v));
        }
        j["vertices"] = std::move(verts);
        Json cells = Json::array();
        for (const auto& v : ga.vertices) {
            DualCell cell = dual_cell_of(v, duals, facets, ga);
            Json cj;
            cj["ga_vertex"] = quat_to_json(v);
            cj["dual_ids"] = cell.dual_ids;
            Json faces = Json::array();
            for (const auto& f : cell.faces) {
                Json fj;
                fj["cycle"] = f.cycle;
                fj["class"] = f.cls == FaceClass::Pentagon ? "pentagon"
                              : f.cls == FaceClass::Kite   ? "kite"
                                                           : "isosceles_trapezoid";
                faces.push_back(std::move(fj));
            }
            cj["faces"] = std::move(faces);
            cells.push_back(std::move(cj));
        }
        j["cells"] = std::move(cells);
        j["orbit_sizes"] = decomposition;
        j["inner_shell_matches_120cell"] = rep.inner_matches;
        std::cout << j.dump(2) << "\n";
    } else {
        std::size_t inner = 0, outer = 0;
        for (const auto& dv : duals) (dv.shell == Shell::Inner ? inner : outer)++;
        std::cout << "dual grand antiprism (scaled by sqrt2): " << duals.size()
                  << " vertices, " << inner << " inner (|x|^2 = 2), " << outer
                  << " outer (|x|^2 = tau^2)\n"
                  << "orbit sizes under the order-400 group:";
        for (auto s : decomposition) std::cout << " " << s;
        std::cout << "\n100 cells, each 4 pentagons + 4 kites + 2 trapezoids\n"
                  << "inner shell equals the two 120-cell orbits: "
                  << (rep.inner_matches ? "yes" : "NO") << "\n";
    }
    return 0;
}

int run_slice(bool as_json, const std::string& axis_text,
              const std::optional<std::string>& level_text) {
    GoldenQuaternion axis = parse_axis(axis_text);
    auto ga = ga_vertices();
    auto slices = slice_ga(ga, axis);
    std::optional<GoldenNumber> level;
    if (level_text) level = parse_golden_expr(*level_text);

    Json out = Json::array();
    bool found = false;
    for (const auto& s : slices) {
        if (level && s.level != *level) continue;
        found = true;
        if (as_json)
            out.push_back(slice_to_json(s));
        else
            std::cout << "level " << s.level.str() << " (" << s.level.to_double() << "): "
                      << s.points.size() << " points, " << s.shape_tag << "\n";
    }
    if (level && !found) {
        std::cerr << "no vertices at level " << level->str() << "\n";
        return 2;
    }
    if (as_json) {
        Json j;
        j["schema_version"] = 1;
        j["axis"] = quat_to_json(axis);
        j["slices"] = std::move(out);
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int run_orbits(bool as_json, bool appendix, int threads, const GoldenQuaternion& functional) {
    auto icosians = IcosianGroup::build();
    auto rs = build_root_system(icosians, functional);
    Json j;
    j["schema_version"] = 1;
    Json sr = Json::array();
    for (const auto& r : rs.simple_roots) sr.push_back(quat_to_json(r));
    j["simple_roots"] = std::move(sr);
    Json cartan = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 4; ++k) row.push_back(golden_to_json_with_value(rs.cartan[i][k]));
        cartan.push_back(std::move(row));
    }
    j["cartan"] = std::move(cartan);
    Json w = Json::array();
    for (const auto& wt : rs.weights) w.push_back(quat_to_json(wt));
    j["weights"] = std::move(w);

    if (appendix) {
        auto aut = build_aut_group();
        auto lines = orbit_decomposition_table(rs, aut, threads);
        if (!as_json) {
            for (const auto& line : lines) {
                std::cout << line.orbit_size << " = ";
                bool first = true;
                for (const auto& [size, mult] : line.decomposition) {
                    if (!first) std::cout << " + ";
                    first = false;
                    if (mult == 1)
                        std::cout << size;
                    else
                        std::cout << mult << "(" << size << ")";
                }
                std::cout << "   [weights";
                for (int i : line.subset) std::cout << " " << i;
                std::cout << "]\n";
            }
            return 0;
        }
        Json lj = Json::array();
        for (const auto& line : lines) {
            Json one;
            one["subset"] = line.subset;
            one["orbit_size"] = line.orbit_size;
            Json dec = Json::object();
            for (const auto& [size, mult] : line.decomposition)
                dec[std::to_string(size)] = mult;
            one["decomposition"] = std::move(dec);
            lj.push_back(std::move(one));
        }
        j["orbits"] = std::move(lj);
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "simple roots:";
        for (const auto& r : rs.simple_roots) std::cout << " " << r.str();
        std::cout << "\n(use --appendix for the 15 orbit decompositions)\n";
    }
    return 0;
}

int run_export(const std::string& what, const std::string& format, const std::string& out,
               const std::string& axis_text, const std::optional<std::string>& level_text,
               int vertex_index, int threads) {
    MeshDocument mesh;
    auto ga = ga_vertices();

    auto quat_rows = [](const std::vector<GoldenQuaternion>& pts) {
        std::vector<std::vector<GoldenNumber>> rows;
        for (const auto& q : pts) rows.push_back({q[0], q[1], q[2], q[3]});
        return rows;
    };
    auto hull_faces = [](const std::vector<Point3>& pts) {
        std::vector<std::vector<int>> faces;
        for (const auto& f : convex_hull_faces_3d(pts)) faces.push_back(f.cycle);
        return faces;
    };
    auto point3_rows = [](const std::vector<Point3>& pts) {
        std::vector<std::vector<GoldenNumber>> rows;
        for (const auto& p : pts) rows.push_back({p[0], p[1], p[2]});
        return rows;
    };

    if (what == "ga") {
        mesh.vertices = quat_rows(ga.vertices);
    } else if (what == "600cell") {
        mesh.vertices = quat_rows(IcosianGroup::build().elements());
    } else if (what == "vertex-figure") {
        auto aut = build_aut_group();
        const GoldenQuaternion& v =
            vertex_index < 0 ? icosian_constants().c : ga.vertices.at(vertex_index);
        VertexFigure fig = vertex_figure(v, ga, aut);
        std::vector<Point3> pts;
        GoldenNumber h{Rational(1, 2)};
        for (const auto& row : fig.coords) pts.push_back({h * row[0], h * row[1], h * row[2]});
        mesh.vertices = point3_rows(pts);
        mesh.faces = hull_faces(pts);
    } else if (what == "dual-cell") {
        auto facets = enumerate_facets(ga.vertices, threads);
        auto duals = dual_vertices(facets, ga);
        const GoldenQuaternion& v =
            vertex_index < 0 ? icosian_constants().c : ga.vertices.at(vertex_index);
        DualCell cell = dual_cell_of(v, duals, facets, ga);
        mesh.vertices = point3_rows(cell.coords3d);
        for (const auto& f : cell.faces) mesh.faces.push_back(f.cycle);
    } else if (what == "slice") {
        GoldenQuaternion axis = parse_axis(axis_text);
        if (!level_text) throw CLI::ValidationError("--level", "slice export needs a level");
        GoldenNumber level = parse_golden_expr(*level_text);
        auto slices = slice_ga(ga, axis);
        const Slice* chosen = nullptr;
        for (const auto& s : slices)
            if (s.level == level) chosen = &s;
        if (!chosen) {
            std::cerr << "no vertices at level " << level.str() << "\n";
            return 2;
        }
        OrthonormalBasis basis = OrthonormalBasis::from_unit(axis);
        std::vector<Point3> pts;
        for (const auto& q : chosen->points) {
            auto coords = coords_in_basis(q, basis);
            pts.push_back({coords[1], coords[2], coords[3]});
        }
        mesh.vertices = point3_rows(pts);
        if (pts.size() >= 4) {
            try {
                mesh.faces = hull_faces(pts);
            } catch (const DegenerateInputError&) {
                // flat slice: keep the point cloud
            }
        }
    } else {
        throw CLI::ValidationError("--what", "unknown export target " + what);
    }

    if (format == "off") {
        write_off(mesh, out);
    } else if (format == "json") {
        Json j;
        j["schema_version"] = 1;
        Json verts = Json::array();
        for (const auto& v : mesh.vertices) {
            Json row = Json::array();
            for (const auto& x : v) row.push_back(golden_to_json(x));
            verts.push_back(std::move(row));
        }
        j["vertices"] = std::move(verts);
        j["faces"] = mesh.faces;
        std::ofstream file(out);
        if (!file) throw std::runtime_error("cannot open " + out);
        file << j.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "expected off or json");
    }
    std::cout << "wrote " << mesh.vertices.size() << " vertices, " << mesh.faces.size()
              << " faces to " << out << "\n";
    return 0;
}

int run_verify(bool as_json, int threads, const GoldenQuaternion& functional) {
    VerifyOptions opt;
    opt.threads = threads;
    opt.functional = functional;
    auto results = run_verification(opt);

    std::size_t total = 0, failed = 0;
    for (const auto& cr : results)
        for (const auto& c : cr.checks) {
            ++total;
            if (!c.pass) ++failed;
        }

    if (as_json) {
        Json j;
        j["schema_version"] = 1;
        Json arr = Json::array();
        for (const auto& cr : results) {
            Json cj;
            cj["criterion"] = cr.id;
            cj["title"] = cr.title;
            cj["pass"] = cr.pass();
            Json checks = Json::array();
            for (const auto& c : cr.checks) {
                Json one;
                one["name"] = c.name;
                one["pass"] = c.pass;
                if (!c.detail.empty()) one["detail"] = c.detail;
                checks.push_back(std::move(one));
            }
            cj["checks"] = std::move(checks);
            arr.push_back(std::move(cj));
        }
        j["criteria"] = std::move(arr);
        j["checks_total"] = total;
        j["checks_failed"] = failed;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& cr : results) {
            for (const auto& c : cr.checks) {
                std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << cr.id << " " << cr.title
                          << "] " << c.name;
                if (!c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << "\n";
            }
        }
        if (failed == 0)
            std::cout << "all " << total << " checks passed\n";
        else
            std::cout << failed << " of " << total << " checks FAILED\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction of the grand antiprism, its order-400 symmetry group,"
                 " cells, dual and slices over Q(sqrt5)"};
    app.require_subcommand(1);

    bool as_json = false;
    int threads = 1;
    std::string functional_text;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--threads", threads, "worker threads for facet enumeration and orbits")
        ->check(CLI::Range(1, 64));
    app.add_option("--seed-functional", functional_text,
                   "four golden expressions a,b,c,d for the root-ordering functional");

    auto* build = app.add_subcommand("build", "construct the groups and the vertex sets");
    auto* cells = app.add_subcommand("cells", "cell census of the grand antiprism");
    bool cells_full = false;
    cells->add_flag("--full", cells_full, "include the full facet list (JSON)");
    auto* dual = app.add_subcommand("dual", "dual polytope report");
    auto* slice = app.add_subcommand("slice", "hyperplane slices of the vertex set");
    std::string axis_text = "1";
    std::string level_text;
    slice->add_option("--axis", axis_text, "1|e1|e2|e3 or x,y,z,w golden expressions");
    slice->add_option("--level", level_text, "golden expression; all levels when omitted");
    auto* orbits = app.add_subcommand("orbits", "root system data and orbit decompositions");
    bool appendix = false;
    orbits->add_flag("--appendix", appendix, "emit all 15 orbit decomposition lines");
    auto* exp = app.add_subcommand("export", "write OFF or exact JSON meshes");
    std::string what, format = "off", out_path;
    int vertex_index = -1;
    exp->add_option("--what", what, "ga|600cell|vertex-figure|dual-cell|slice")->required();
    exp->add_option("--format", format, "off|json");
    exp->add_option("--out", out_path, "output path")->required();
    exp->add_option("--axis", axis_text, "slice axis");
    exp->add_option("--level", level_text, "slice level (golden expression)");
    exp->add_option("--vertex", vertex_index, "grand antiprism vertex index for figures");
    auto* verify = app.add_subcommand("verify", "run the full invariant suite");

    // allow the global flags to appear after the subcommand as well
    for (CLI::App* sub : {build, cells, dual, slice, orbits, exp, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        GoldenQuaternion functional = functional_text.empty()
                                          ? default_root_functional()
                                          : parse_functional(functional_text);
        std::optional<std::string> level =
            level_text.empty() ? std::nullopt : std::optional<std::string>(level_text);
        if (*build) return run_build(as_json, threads);
        if (*cells) return run_cells(as_json, cells_full, threads);
        if (*dual) return run_dual(as_json, threads);
        if (*slice) return run_slice(as_json, axis_text, level);
        if (*orbits) return run_orbits(as_json, appendix, threads, functional);
        if (*exp) return run_export(what, format, out_path, axis_text, level, vertex_index,
                                    threads);
        if (*verify) return run_verify(as_json, threads, functional);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
