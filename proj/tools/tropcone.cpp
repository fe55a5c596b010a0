#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tropcone/io.hpp"

#ifdef TROPCONE_HAVE_OPENMP
#include <omp.h>
#endif

namespace tc = tropcone;
using tc::Json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Inputs {
    std::vector<std::string> digests;

    Json load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw tc::ParseError("cannot open file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        digests.push_back(tc::fnv1a_digest(text));
        try {
            return Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw tc::ParseError(path + ": " + e.what());
        }
    }

    Json load_inline(const std::string& text) {
        digests.push_back(tc::fnv1a_digest(text));
        try {
            return Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw tc::ParseError(std::string("inline JSON: ") + e.what());
        }
    }
};

Json make_meta(const std::string& command, const Inputs& in, unsigned long seed) {
    tc::RunManifest m;
    m.command = command;
    m.input_digests = in.digests;
    m.seed = seed;
    m.version = kVersion;
    return tc::manifest_to_json(m);
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        tc::write_json_file(out_path, j);
}

tc::PolarOptions polar_options(int jobs) {
    tc::PolarOptions opts = tc::default_polar_options();
    opts.parallel = jobs > 1;
#ifdef TROPCONE_HAVE_OPENMP
    if (jobs > 1) omp_set_num_threads(jobs);
#endif
    return opts;
}

std::vector<int> scan_order_for_seed(int m, unsigned long seed) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937 rng(static_cast<std::uint32_t>(seed));
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

Json halfspace_entry_with_provenance(const tc::InitialHalfSpace& ih) {
    Json e = tc::halfspace_to_json(ih.halfspace);
    Json prov;
    prov["j"] = ih.j + 1;
    prov["u"] = tc::point_to_json(ih.u);
    e["provenance"] = prov;
    return e;
}

// ---- represent ----

int cmd_represent(const std::string& cone_path, const std::string& out_path,
                  int jobs) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    auto initial = tc::initial_representation(c, polar_options(jobs));
    Json out;
    out["meta"] = make_meta("represent", in, 0);
    out["dim"] = c.dim();
    Json hs = Json::array();
    for (const auto& ih : initial) hs.push_back(halfspace_entry_with_provenance(ih));
    out["halfspaces"] = hs;
    emit(out, out_path);
    return 0;
}

// ---- minimize ----

int cmd_minimize(const std::string& cone_path, const std::string& hs_path,
                 unsigned long seed, const std::string& out_path, int jobs) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    std::optional<tc::Representation> rep;
    if (!hs_path.empty()) {
        Json list = in.load(hs_path);
        for (const auto& e : list.value("halfspaces", Json::array()))
            if (tc::json_is_general_halfspace(e))
                throw tc::PreconditionError(
                    "minimize expects apex-form half-spaces with apices in the cone; "
                    "run `tropcone saturate` on general half-spaces first");
        std::vector<tc::HalfSpace> hs = tc::halfspace_list_from_json(list);
        rep.emplace(c, std::move(hs), tc::Provenance::UserSupplied);
    } else {
        rep.emplace(tc::Representation::from_initial(
            c, tc::initial_representation(c, polar_options(jobs))));
    }
    auto order = scan_order_for_seed(static_cast<int>(rep->halfspaces().size()), seed);
    tc::Representation min = tc::minimize(*rep, order);
    tc::ApexStructure s = tc::canonical_structure(min);
    bool verified = tc::verify_theorem_main(min, s);
    Json out;
    out["meta"] = make_meta("minimize", in, seed);
    out["dim"] = c.dim();
    Json hs = Json::array();
    for (const auto& h : min.halfspaces()) hs.push_back(tc::halfspace_to_json(h));
    out["halfspaces"] = hs;
    out["canonical"] = tc::canonical_structure_to_json(s);
    out["verified"] = verified;
    emit(out, out_path);
    return verified ? 0 : 2;
}

// ---- saturate ----

int cmd_saturate(const std::string& cone_path, const std::string& hs_path,
                 const std::string& out_path) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    Json hj = in.load(hs_path);
    tc::GeneralHalfSpace g = tc::json_is_general_halfspace(hj)
                                 ? tc::general_halfspace_from_json(hj, c.dim())
                                 : tc::halfspace_from_json(hj).general();
    tc::SaturationResult r = tc::saturate(g, c);
    Json out;
    out["meta"] = make_meta("saturate", in, 0);
    out["halfspace"] = tc::halfspace_to_json(r.halfspace);
    out["raw_apex"] = tc::point_to_json(r.raw_apex);
    Json lam = Json::array();
    for (const auto& l : r.lambda) lam.push_back(tc::format_rational(l));
    out["lambda"] = lam;
    emit(out, out_path);
    return 0;
}

// ---- redundant ----

int cmd_redundant(const std::string& list_path, const std::string& target_path,
                  const std::string& out_path) {
    Inputs in;
    std::vector<tc::GeneralHalfSpace> gamma = tc::general_list_from_json(in.load(list_path));
    tc::HalfSpace h = tc::halfspace_from_json(in.load(target_path));
    bool redundant = tc::is_redundant(h, gamma);
    Json out;
    out["meta"] = make_meta("redundant", in, 0);
    out["target"] = tc::halfspace_to_json(h);
    out["redundant"] = redundant;
    tc::TangentHypergraph g = tc::tangent_hypergraph(gamma, h.apex());
    out["trace"] = tc::tangent_hypergraph_to_json(g);
    out["reachable"] = tc::indexset_to_json(tc::reachable_set(g.graph, h.sectors()));
    if (!redundant)
        out["witness"] = tc::point_to_json(tc::witness_point(h, gamma));
    emit(out, out_path);
    return 0;
}

// ---- type / classify / member ----

int cmd_type(const std::string& cone_path, const std::string& point_text,
             const std::string& out_path) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    tc::Point x = tc::point_from_json(in.load_inline(point_text));
    tc::TypeVector t = c.type_of(x);
    Json out;
    out["meta"] = make_meta("type", in, 0);
    out["point"] = tc::point_to_json(x.normalized());
    Json type = Json::array();
    for (const auto& sec : t.sectors) {
        Json s = Json::array();
        for (int r : sec) s.push_back(r + 1);
        type.push_back(s);
    }
    out["type"] = type;
    out["cell_dimension"] = c.cell_dimension(x);
    emit(out, out_path);
    return 0;
}

int cmd_classify(const std::string& cone_path, const std::string& point_text,
                 const std::string& out_path) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    tc::Point a = tc::point_from_json(in.load_inline(point_text));
    tc::VertexClassification vc = tc::classify_vertex(c, a);
    Json out;
    out["meta"] = make_meta("classify", in, 0);
    out.update(tc::classification_to_json(vc));
    emit(out, out_path);
    return 0;
}

int cmd_member(const std::string& cone_path, const std::string& point_text,
               const std::string& out_path) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    tc::Point x = tc::point_from_json(in.load_inline(point_text));
    tc::Projection pr = c.project(x);
    Json out;
    out["meta"] = make_meta("member", in, 0);
    out["point"] = tc::point_to_json(x.normalized());
    out["member"] = pr.point.proj_equal(x);
    out["projection"] = tc::point_to_json(pr.point.normalized());
    Json lam = Json::array();
    for (const auto& l : pr.lambda) lam.push_back(tc::format_rational(l));
    out["lambda"] = lam;
    emit(out, out_path);
    return 0;
}

// ---- perturb / polar ----

int cmd_perturb(const std::string& cone_path, const std::string& eps_text,
                const std::string& out_path) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    tc::Rat eps = tc::parse_rational(eps_text);
    tc::Cone ce = tc::perturb_generic(c, eps);
    Json out = tc::cone_to_json(ce);
    Json full;
    full["meta"] = make_meta("perturb", in, 0);
    full.update(out);
    emit(full, out_path);
    return 0;
}

int cmd_polar(const std::string& cone_path, int j1, const std::string& out_path,
              int jobs) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    if (j1 < 1 || j1 > c.dim())
        throw tc::PreconditionError("polar: --j out of range 1.." +
                                    std::to_string(c.dim()));
    auto ext = tc::enumerate_polar_extremes(c, j1 - 1, polar_options(jobs));
    Json out;
    out["meta"] = make_meta("polar", in, 0);
    out["j"] = j1;
    Json arr = Json::array();
    for (const auto& pv : ext) arr.push_back(tc::point_to_json(pv.u));
    out["extremes"] = arr;
    emit(out, out_path);
    return 0;
}

// ---- plot2d ----

Json plot_coord(const tc::Point& p) {
    Json out = Json::array();
    out.push_back(tc::format_rational(p[1].value() - p[0].value()));
    out.push_back(tc::format_rational(p[2].value() - p[0].value()));
    return out;
}

// vertices of the tropical segment from x to y: z(t) = x max (t + y) at the
// breakpoint parameters t = x_i - y_i
Json tropical_segment(const tc::Point& x, const tc::Point& y) {
    std::vector<tc::Rat> ts;
    for (int i = 0; i < x.dim(); ++i) ts.push_back(x[i].value() - y[i].value());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    Json poly = Json::array();
    for (const auto& t : ts) {
        std::vector<tc::Scalar> coords;
        for (int i = 0; i < x.dim(); ++i) {
            tc::Rat zy = t + y[i].value();
            coords.emplace_back(tc::Scalar(x[i].value() >= zy ? x[i].value() : zy));
        }
        poly.push_back(plot_coord(tc::Point(std::move(coords))));
    }
    return poly;
}

int cmd_plot2d(const std::string& cone_path, const std::string& hs_path,
               const std::string& out_path) {
    Inputs in;
    tc::Cone c = tc::cone_from_json(in.load(cone_path));
    if (c.dim() != 3)
        throw tc::PreconditionError("plot2d requires dimension 3");
    std::vector<tc::HalfSpace> hs;
    if (!hs_path.empty()) hs = tc::halfspace_list_from_json(in.load(hs_path));

    Json out;
    out["meta"] = make_meta("plot2d", in, 0);
    Json layers;
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(plot_coord(g));
    layers["generators"] = gens;
    Json segs = Json::array();
    std::vector<tc::Point> ext = c.extreme_generators();
    for (size_t a = 0; a < ext.size(); ++a)
        for (size_t b = a + 1; b < ext.size(); ++b)
            segs.push_back(tropical_segment(ext[a], ext[b]));
    layers["segments"] = segs;
    Json apices = Json::array();
    Json rays = Json::array();
    for (const auto& h : hs) {
        apices.push_back(plot_coord(h.apex()));
        Json r;
        r["apex"] = plot_coord(h.apex());
        r["sectors"] = tc::indexset_to_json(h.sectors());
        // the three rays of the apex hyperplane in (x2-x1, x3-x1) coordinates
        r["directions"] = Json::array({Json::array({0, -1}), Json::array({-1, 0}),
                                       Json::array({1, 1})});
        rays.push_back(r);
    }
    layers["apices"] = apices;
    layers["halfspace_rays"] = rays;
    out["layers"] = layers;
    emit(out, out_path);
    return 0;
}

// ---- verify ----

bool verify_report(const Json& report, const std::string& cone_path,
                   const std::string& hs_path, const std::string& target_path,
                   Inputs& in) {
    std::string cmd = report.at("meta").at("command").get<std::string>();
    if (cmd == "member") {
        tc::Cone c = tc::cone_from_json(in.load(cone_path));
        tc::Point x = tc::point_from_json(report.at("point"));
        tc::Projection pr = c.project(x);
        if (report.at("member").get<bool>() != pr.point.proj_equal(x)) return false;
        return pr.point.normalized().proj_equal(
            tc::point_from_json(report.at("projection")));
    }
    if (cmd == "type") {
        tc::Cone c = tc::cone_from_json(in.load(cone_path));
        tc::Point x = tc::point_from_json(report.at("point"));
        tc::TypeVector t = c.type_of(x);
        Json type = Json::array();
        for (const auto& sec : t.sectors) {
            Json s = Json::array();
            for (int r : sec) s.push_back(r + 1);
            type.push_back(s);
        }
        return report.at("type") == type &&
               report.at("cell_dimension").get<int>() == c.cell_dimension(x);
    }
    if (cmd == "classify") {
        tc::Cone c = tc::cone_from_json(in.load(cone_path));
        tc::Point a = tc::point_from_json(report.at("point"));
        Json fresh = tc::classification_to_json(tc::classify_vertex(c, a));
        return report.at("is_vertex") == fresh.at("is_vertex") &&
               report.at("witnesses") == fresh.at("witnesses");
    }
    if (cmd == "saturate") {
        tc::Cone c = tc::cone_from_json(in.load(cone_path));
        Json hj = in.load(target_path);
        tc::GeneralHalfSpace g = tc::json_is_general_halfspace(hj)
                                     ? tc::general_halfspace_from_json(hj, c.dim())
                                     : tc::halfspace_from_json(hj).general();
        tc::SaturationResult r = tc::saturate(g, c);
        return tc::halfspace_to_json(r.halfspace) == report.at("halfspace");
    }
    if (cmd == "redundant") {
        std::vector<tc::GeneralHalfSpace> gamma =
            tc::general_list_from_json(in.load(hs_path));
        tc::HalfSpace h = tc::halfspace_from_json(report.at("target"));
        bool redundant = report.at("redundant").get<bool>();
        if (redundant != tc::is_redundant(h, gamma)) return false;
        if (!redundant) {
            // the witness must lie in every member of gamma and outside h
            tc::Point w = tc::point_from_json(report.at("witness"));
            for (const auto& g : gamma)
                if (!g.member(w)) return false;
            return !h.member(w);
        }
        return true;
    }
    if (cmd == "minimize") {
        tc::Cone c = tc::cone_from_json(in.load(cone_path));
        std::vector<tc::HalfSpace> hs = tc::halfspace_list_from_json(report);
        tc::Representation rep(c, hs, tc::Provenance::UserSupplied,
                               report.at("meta").at("seed").get<unsigned long>() + 1);
        for (size_t k = 0; k < hs.size(); ++k) {
            std::vector<tc::HalfSpace> rest;
            for (size_t l = 0; l < hs.size(); ++l)
                if (l != k) rest.push_back(hs[l]);
            if (!rest.empty() && tc::is_redundant(hs[k], rest)) return false;
        }
        tc::ApexStructure s = tc::canonical_structure(rep);
        return tc::verify_theorem_main(rep, s) &&
               tc::canonical_structure_to_json(s) == report.at("canonical");
    }
    throw tc::ParseError("verify: no verifier for command \"" + cmd + "\"");
}

int cmd_verify(const std::string& report_path, const std::string& cone_path,
               const std::string& hs_path, const std::string& target_path,
               const std::string& out_path) {
    Inputs in;
    Json report = in.load(report_path);
    bool ok = verify_report(report, cone_path, hs_path, target_path, in);
    Json out;
    out["meta"] = make_meta("verify", in, 0);
    out["verified"] = ok;
    emit(out, out_path);
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropcone: external representations of tropical polyhedral cones"};
    app.require_subcommand(1);

    std::string cone_path, hs_path, target_path, report_path, point_text, eps_text,
        out_path;
    unsigned long seed = 0;
    int jobs = 1, polar_j = 1;

    auto add_out = [&](CLI::App* sub) {
        sub->add_option("-o,--output", out_path, "write the JSON report here");
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", jobs, "worker threads for polar enumeration");
    };

    auto* represent = app.add_subcommand("represent", "initial external representation");
    represent->add_option("cone", cone_path, "cone file")->required();
    add_out(represent);
    add_jobs(represent);

    auto* minimize = app.add_subcommand("minimize", "canonical minimal representation");
    minimize->add_option("cone", cone_path, "cone file")->required();
    minimize->add_option("halfspaces", hs_path, "half-space list file (apex form)");
    minimize->add_option("--seed", seed, "scan-order seed (0 = input order)");
    add_out(minimize);
    add_jobs(minimize);

    auto* saturate = app.add_subcommand("saturate", "saturate a containing half-space");
    saturate->add_option("cone", cone_path, "cone file")->required();
    saturate->add_option("halfspace", hs_path, "half-space file")->required();
    add_out(saturate);

    auto* redundant = app.add_subcommand("redundant", "redundancy with certificate");
    redundant->add_option("halfspaces", hs_path, "half-space list file")->required();
    redundant->add_option("target", target_path, "half-space file (apex form)")->required();
    add_out(redundant);

    auto* type = app.add_subcommand("type", "type vector and cell dimension");
    type->add_option("cone", cone_path, "cone file")->required();
    type->add_option("--point", point_text, "point as a JSON array")->required();
    add_out(type);

    auto* classify = app.add_subcommand("classify", "(I,j)-vertex classification");
    classify->add_option("cone", cone_path, "cone file")->required();
    classify->add_option("--point", point_text, "point as a JSON array")->required();
    add_out(classify);

    auto* perturb = app.add_subcommand("perturb", "generic perturbation of the generators");
    perturb->add_option("cone", cone_path, "cone file")->required();
    perturb->add_option("--eps", eps_text, "positive rational radius")->required();
    add_out(perturb);

    auto* member = app.add_subcommand("member", "membership with projection certificate");
    member->add_option("cone", cone_path, "cone file")->required();
    member->add_option("--point", point_text, "point as a JSON array")->required();
    add_out(member);

    auto* polar = app.add_subcommand("polar", "extreme vectors of the j-th polar");
    polar->add_option("cone", cone_path, "cone file")->required();
    polar->add_option("--j", polar_j, "polar index (1-based)")->required();
    add_out(polar);
    add_jobs(polar);

    auto* plot2d = app.add_subcommand("plot2d", "plot data for 3-dimensional cones");
    plot2d->add_option("cone", cone_path, "cone file")->required();
    plot2d->add_option("halfspaces", hs_path, "half-space list file");
    add_out(plot2d);

    auto* verify = app.add_subcommand("verify", "re-validate a report's certificates");
    verify->add_option("report", report_path, "report file")->required();
    verify->add_option("--cone", cone_path, "cone file");
    verify->add_option("--halfspaces", hs_path, "half-space list file");
    verify->add_option("--target", target_path, "half-space file");
    add_out(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (represent->parsed()) return cmd_represent(cone_path, out_path, jobs);
        if (minimize->parsed())
            return cmd_minimize(cone_path, hs_path, seed, out_path, jobs);
        if (saturate->parsed()) return cmd_saturate(cone_path, hs_path, out_path);
        if (redundant->parsed())
            return cmd_redundant(hs_path, target_path, out_path);
        if (type->parsed()) return cmd_type(cone_path, point_text, out_path);
        if (classify->parsed()) return cmd_classify(cone_path, point_text, out_path);
        if (perturb->parsed()) return cmd_perturb(cone_path, eps_text, out_path);
        if (member->parsed()) return cmd_member(cone_path, point_text, out_path);
        if (polar->parsed()) return cmd_polar(cone_path, polar_j, out_path, jobs);
        if (plot2d->parsed()) return cmd_plot2d(cone_path, hs_path, out_path);
        if (verify->parsed())
            return cmd_verify(report_path, cone_path, hs_path, target_path, out_path);
    } catch (const tc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const tc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const tc::CandidateCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tc::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
