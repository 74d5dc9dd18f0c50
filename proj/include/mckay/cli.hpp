#pragma once

#include <CLI11.hpp>
#include <iostream>

#include "mckay/json_io.hpp"
#include "mckay/render.hpp"
#include "mckay/scan.hpp"

namespace mckay {

inline constexpr const char* kVersion = "0.1.0";

namespace cli_detail {

inline std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) out.push_back(std::stoll(part));
    return out;
}

inline Quiver named_quiver(const std::string& name) {
    if (name == "A2") return line_quiver(2);
    if (name == "A3") return line_quiver(3);
    if (name == "kronecker") return kronecker_quiver();
    throw domain_error("unknown quiver '" + name + "' (want A2, A3 or kronecker)");
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open " + path + " for writing");
    f << content;
}

inline std::string image_line(const SheafImage& img) {
    std::string s = "chi_" + std::to_string(img.character) + ": " + sheaf_case_name(img.kind) +
                    " degree " + std::to_string(img.degree);
    if (!img.twist_endpoints.empty()) {
        s += " endpoints {";
        for (size_t i = 0; i < img.twist_endpoints.size(); ++i)
            s += (i ? "," : "") + img.twist_endpoints[i];
        s += "}";
    }
    if (img.kind == SheafCase::NoEdgeDivisor) {
        s += " support unresolved";
    } else {
        s += " support {";
        for (size_t i = 0; i < img.support.size(); ++i) s += (i ? "," : "") + img.support[i];
        s += "}";
    }
    if (!img.meeting_divisor.empty()) s += " meeting " + img.meeting_divisor;
    return s;
}

} // namespace cli_detail

// Command-line driver, callable from tests.  Exit codes: 0 success,
// 1 usage, 2 domain/invariant error, 3 internal assertion.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"toric McKay correspondence toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // --- hj
    long long hj_r = 0, hj_a = 0;
    auto* hj_cmd = app.add_subcommand("hj", "Hirzebruch-Jung sequence of r/a");
    hj_cmd->add_option("r", hj_r)->required();
    hj_cmd->add_option("a", hj_a)->required();

    // --- triangulate
    std::string tri_group, tri_json, tri_svg;
    auto* tri_cmd = app.add_subcommand("triangulate", "junior-simplex triangulation of a group");
    tri_cmd->add_option("group", tri_group)->required();
    tri_cmd->add_option("--json", tri_json);
    tri_cmd->add_option("--svg", tri_svg);

    // --- mark
    std::string mark_group, mark_json, mark_svg;
    auto* mark_cmd = app.add_subcommand("mark", "edge marking of the triangulation");
    mark_cmd->add_option("group", mark_group)->required();
    mark_cmd->add_option("--json", mark_json);
    mark_cmd->add_option("--svg", mark_svg);

    // --- classify
    std::string cls_group, cls_json;
    bool cls_check = false;
    auto* cls_cmd = app.add_subcommand("classify", "skyscraper-image classification per character");
    cls_cmd->add_option("group", cls_group)->required();
    cls_cmd->add_option("--json", cls_json);
    cls_cmd->add_flag("--check-theorem", cls_check);

    // --- quiver
    std::string qv_group, qv_dot;
    auto* qv_cmd = app.add_subcommand("quiver", "McKay quiver of a group");
    qv_cmd->add_option("group", qv_group)->required();
    qv_cmd->add_option("--dot", qv_dot);

    // --- subquiver
    std::string sq_group, sq_type, sq_vertices, sq_dot;
    bool sq_find = false, sq_theorem = false;
    long long sq_n = 0, sq_alpha = 0, sq_limit = 50;
    auto* sq_cmd = app.add_subcommand("subquiver", "affine subquiver verification/search");
    sq_cmd->add_option("group", sq_group)->required();
    sq_cmd->add_option("--type", sq_type)->required();
    sq_cmd->add_option("--vertices", sq_vertices);
    sq_cmd->add_flag("--find", sq_find);
    sq_cmd->add_flag("--theorem", sq_theorem);
    sq_cmd->add_option("--n", sq_n);
    sq_cmd->add_option("--alpha", sq_alpha);
    sq_cmd->add_option("--limit", sq_limit);
    sq_cmd->add_option("--dot", sq_dot);

    // --- hall
    std::string hall_quiver = "A2", hall_mode = "ringel";
    long long hall_q = 2;
    auto* hall_cmd = app.add_subcommand("hall", "Ringel-Hall computations over F_q");
    hall_cmd->add_option("--quiver", hall_quiver);
    hall_cmd->add_option("--q", hall_q);
    hall_cmd->add_option("--mode", hall_mode)->check(CLI::IsMember({"ringel", "paper"}));
    hall_cmd->require_subcommand(1);
    std::vector<std::string> prod_classes;
    auto* prod_cmd = hall_cmd->add_subcommand("product", "product of basis classes");
    prod_cmd->add_option("classes", prod_classes)->required()->expected(-1);
    long long serre_i = 0, serre_j = 0;
    auto* serre_cmd = hall_cmd->add_subcommand("serre", "quantum Serre relation check");
    serre_cmd->add_option("i", serre_i)->required();
    serre_cmd->add_option("j", serre_j)->required();
    std::string gd_degree;
    auto* gd_cmd = hall_cmd->add_subcommand("gradeddim", "graded dimension vs Kostant count");
    gd_cmd->add_option("degree", gd_degree)->required();
    std::string ip_a, ip_b, ip_c;
    auto* ip_cmd = hall_cmd->add_subcommand("interpolate", "Hall polynomial g^C_{A,B}(q)");
    ip_cmd->add_option("A", ip_a)->required();
    ip_cmd->add_option("B", ip_b)->required();
    ip_cmd->add_option("C", ip_c)->required();
    auto* audit_cmd = hall_cmd->add_subcommand("audit", "associativity audit of the chosen mode");
    long long audit_bound = 4;
    audit_cmd->add_option("--bound", audit_bound);

    // --- scan
    long long scan_k = 0;
    std::string scan_slist, scan_csv_path;
    auto* scan_cmd = app.add_subcommand("scan", "family scan of H^0 statistics");
    scan_cmd->add_option("--k", scan_k)->required();
    scan_cmd->add_option("--s-list", scan_slist)->required();
    scan_cmd->add_option("--csv", scan_csv_path);

    std::vector<const char*> argv;
    std::string prog = "mckay";
    argv.push_back(prog.c_str());
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*hj_cmd) {
            auto seq = hj_expand(hj_r, hj_a);
            std::string s = "[";
            for (size_t i = 0; i < seq.size(); ++i) s += (i ? ", " : "") + std::to_string(seq[i]);
            out << s << "]\n";
            return 0;
        }
        if (*tri_cmd) {
            auto g = parse_group(tri_group);
            auto T = build_triangulation(g);
            auto bad = validate_triangulation(g, T);
            out << g.str() << ": " << T.vertices.size() << " vertices, " << T.edges.size()
                << " edges, " << T.triangles.size() << " triangles"
                << (bad.empty() ? " (valid)" : " (INVALID)") << "\n";
            for (auto& b : bad) err << "violation: " << b << "\n";
            if (!tri_json.empty()) cli_detail::write_file(tri_json, dump_json(to_json(T)));
            if (!tri_svg.empty()) cli_detail::write_file(tri_svg, render_svg(T));
            return bad.empty() ? 0 : 2;
        }
        if (*mark_cmd) {
            auto g = parse_group(mark_group);
            auto T = build_triangulation(g);
            auto marking = mark_all(g, T);
            out << g.str() << ": " << marking.size() << " internal edges marked\n";
            for (auto& [e, rec] : marking)
                out << "  (" << e.first << "," << e.second << ") -> chi_" << rec.character << "\n";
            if (!mark_json.empty()) cli_detail::write_file(mark_json, dump_json(to_json(marking)));
            if (!mark_svg.empty()) cli_detail::write_file(mark_svg, render_svg(T, &marking));
            return 0;
        }
        if (*cls_cmd) {
            auto g = parse_group(cls_group);
            auto T = build_triangulation(g);
            auto marking = mark_all(g, T);
            auto res = classify_all(g, marking);
            for (auto& img : res.images) out << cli_detail::image_line(img) << "\n";
            for (auto& [c, msg] : res.errors)
                err << "chi_" << c << ": classification error: " << msg << "\n";
            if (!cls_json.empty()) {
                ordered_json arr = ordered_json::array();
                for (auto& img : res.images) arr.push_back(to_json(img));
                cli_detail::write_file(cls_json, dump_json(arr));
            }
            int rc = res.errors.empty() ? 0 : 2;
            if (cls_check) {
                if (!res.errors.empty())
                    throw domain_error("cannot check the theorem: classification had errors");
                auto fp = family_params(g);
                if (!fp) throw domain_error("group is not in the 1/r(1,k,s) family");
                auto predicted = predicted_table(*fp);
                bool ok = true;
                for (auto& p : predicted) {
                    const SheafImage& got = res.images[(size_t)p.character - 1];
                    bool same = got == p;
                    ok = ok && same;
                    out << "theorem chi_" << p.character << ": " << (same ? "match" : "MISMATCH")
                        << "\n";
                }
                auto cond = character_condition_check(marking, *fp);
                out << "character condition: " << (cond.ok ? "pass" : "FAIL") << "\n";
                auto st = h0_stats(g, marking, *fp);
                out << "h0_count " << st.h0_count << " lower_bound " << st.lower_bound.str()
                    << " bound_holds " << (st.bound_holds ? "true" : "false") << "\n";
                ok = ok && cond.ok && st.bound_holds;
                if (!ok) rc = 2;
            }
            return rc;
        }
        if (*qv_cmd) {
            auto g = parse_group(qv_group);
            auto q = build_mckay_quiver(g);
            out << g.str() << ": " << q.num_vertices() << " vertices, " << q.arrows.size()
                << " arrows\n";
            if (!qv_dot.empty()) cli_detail::write_file(qv_dot, render_dot(q));
            return 0;
        }
        if (*sq_cmd) {
            auto g = parse_group(sq_group);
            auto q = build_mckay_quiver(g);
            auto shape = parse_affine_type(sq_type);
            int modes = (sq_vertices.empty() ? 0 : 1) + (sq_find ? 1 : 0) + (sq_theorem ? 1 : 0);
            if (modes != 1)
                throw domain_error("choose exactly one of --vertices, --find, --theorem");
            if (sq_find) {
                auto found = find_subquivers(q, shape, (size_t)sq_limit);
                out << found.size() << " subquiver(s) of type " << affine_name(shape) << "\n";
                for (auto& vs : found) {
                    out << "  {";
                    for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
                    out << "}\n";
                }
                return 0;
            }
            std::vector<long long> vs;
            if (sq_theorem) {
                auto fp = family_params(g);
                if (!fp) throw domain_error("group is not in the 1/r(1,k,s) family");
                DTildeChoice dc;
                dc.n = sq_n;
                dc.alpha = sq_alpha;
                vs = theorem_vertices(*fp, shape, dc);
            } else {
                vs = cli_detail::parse_ll_list(sq_vertices);
            }
            auto sub = extract_subquiver(q, vs);
            if (!sq_dot.empty()) cli_detail::write_file(sq_dot, render_dot(sub, "subquiver"));
            auto rep = verify_affine_subquiver(sub, shape);
            out << "vertices {";
            for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
            out << "}\n";
            out << "graph_match " << (rep.graph_match ? "true" : "false") << "\n";
            out << "acyclic " << (rep.acyclic ? "true" : "false") << "\n";
            out << "relation_free " << (rep.relation_free ? "true" : "false") << "\n";
            if (!rep.detail.empty()) out << "detail: " << rep.detail << "\n";
            return rep.all() ? 0 : 2;
        }
        if (*hall_cmd) {
            auto quiver = cli_detail::named_quiver(hall_quiver);
            HallMode mode = hall_mode == "paper" ? HallMode::Paper : HallMode::Ringel;
            if (*ip_cmd) {
                auto hp = hall_polynomial_interpolate(quiver, ip_a, ip_b, ip_c);
                out << "g^{" << ip_c << "}_{" << ip_a << "," << ip_b << "}(q) = " << hp.str()
                    << "\n";
                out << "value at q=1: " << hp.at(Rational(1)).str() << "\n";
                return 0;
            }
            HallContext ctx(quiver, (int)hall_q);
            if (*prod_cmd) {
                HallElement acc = hall_basis(ctx, "0");
                for (auto& k : prod_classes)
                    acc = hall_product(ctx, acc, hall_basis(ctx, k), mode);
                out << dump_json(to_json(acc));
                return 0;
            }
            if (*serre_cmd) {
                auto rep = serre_check(ctx, serre_i, serre_j, mode);
                out << "relation degree " << rep.relation_degree << ": "
                    << (rep.holds ? "holds" : "FAILS") << "\n";
                if (!rep.holds) out << "residual: " << dump_json(to_json(rep.residual));
                return rep.holds ? 0 : 2;
            }
            if (*gd_cmd) {
                auto deg64 = cli_detail::parse_ll_list(gd_degree);
                std::vector<int> deg(deg64.begin(), deg64.end());
                auto rep = graded_dimension_check(ctx, deg);
                out << "hall_dim " << rep.hall_dim << " kostant_count " << rep.kostant_count << " "
                    << (rep.equal ? "equal" : "DIFFER") << "\n";
                return rep.equal ? 0 : 2;
            }
            if (*audit_cmd) {
                auto rep = associativity_audit(ctx, (int)audit_bound, mode);
                out << "mode " << hall_mode << " q " << hall_q << ": " << rep.failures << "/"
                    << rep.triples_checked << " associativity failures\n";
                if (!rep.example_failure.empty()) out << "example: " << rep.example_failure << "\n";
                return 0;
            }
        }
        if (*scan_cmd) {
            auto rows = scan_rows(scan_k, cli_detail::parse_ll_list(scan_slist));
            std::string csv = scan_csv(rows);
            out << csv;
            if (!scan_csv_path.empty()) cli_detail::write_file(scan_csv_path, csv);
            return 0;
        }
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace mckay
