#include "logtorelli/cli.hpp"

#include "logtorelli/invariants.hpp"
#include "logtorelli/pencil.hpp"
#include "logtorelli/torelli.hpp"
#include "logtorelli/unstable.hpp"

#include <random>
#include <stdexcept>

namespace logtorelli {

namespace {

void apply_options(const CliOptions& opt) {
    if (opt.tolerance) {
        if (*opt.tolerance <= 0 || *opt.tolerance >= 1e-2)
            throw std::invalid_argument("--tolerance must be in (0, 1e-2)");
        Tolerances& t = tolerances();
        t.root_eval = *opt.tolerance;
        t.on_quadric = *opt.tolerance;
        t.residual = *opt.tolerance * 10;
        t.triple_low = *opt.tolerance;
        t.triple_high = *opt.tolerance * 1000;
        t.genericity = *opt.tolerance * 10;
    }
}

Json report_header(const std::string& command) {
    Json j;
    j["schema_version"] = "1";
    j["command"] = command;
    return j;
}

std::string shape_tag(const Arrangement& arr) {
    int lines = 0, quads = 0, other = 0;
    for (const auto& m : arr.members()) {
        if (m.degree == 1) ++lines;
        else if (m.degree == 2) ++quads;
        else ++other;
    }
    const int l = arr.size();
    if (other == 0 && quads == 1 && lines == 0 && l == 1) return "single-quadric";
    if (other == 0 && quads == 2 && lines == 0 && l == 2) return "pair-of-quadrics";
    if (other == 0 && quads == 1 && lines == 1 && l == 2) return "hyperplane+quadric";
    if (other == 0 && quads == 1 && lines == 2 && l == 3 && arr.ambient_dim() == 2) return "conic+two-lines";
    return "unsupported";
}

NormalCrossingsReport nc_dispatch(const Arrangement& arr, std::string& note) {
    if (arr.all_degree(1)) return check_nc_hyperplanes(arr);
    if (arr.size() == 2 && arr.all_degree(2)) return check_nc_quadric_pair(arr);
    if (arr.size() == 1) {
        NormalCrossingsReport rep;
        if (arr.member(0).degree == 2) {
            rep.method = "smoothness";
            rep.status = arr.quadric(0).smooth() ? NCStatus::Holds : NCStatus::Fails;
            return rep;
        }
        rep.method = "none-needed";
        rep.status = NCStatus::Holds;
        return rep;
    }
    if (arr.ambient_dim() == 2) {
        bool planar_curves = true;
        for (const auto& m : arr.members()) planar_curves &= (m.degree <= 2);
        if (planar_curves) return check_nc_plane_curves(arr);
    }
    note = "no crossing criterion implemented for this shape";
    NormalCrossingsReport rep;
    rep.method = "unavailable";
    return rep;
}

std::vector<Rational> random_rational_point(std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> dist(-97, 97);
    while (true) {
        std::vector<Rational> p(len);
        bool nonzero = false;
        for (auto& x : p) {
            x = dist(rng);
            nonzero |= (x != 0);
        }
        if (nonzero) return p;
    }
}

}  // namespace

Json cmd_analyze(const std::string& file, const CliOptions& opt) {
    apply_options(opt);
    Arrangement arr = load_arrangement(file);
    Json j = report_header("analyze");
    j["input"] = serialize_arrangement(arr);

    std::string note;
    NormalCrossingsReport nc = nc_dispatch(arr, note);
    j["normal_crossings"] = json_nc_report(nc);
    Json notes = Json::array();
    if (!note.empty()) notes.push_back(note);

    GradedResolution res = build_ancona(arr);
    j["resolution"] = json_resolution(res);
    j["resolution"]["provenance"] = "exact";

    std::mt19937_64 rng(opt.seed);
    RatMatrix sample = res.matrix.evaluate(random_rational_point(rng, arr.ambient_dim() + 1));
    j["resolution"]["generic_injectivity"] = (rank(sample) == res.matrix.cols());

    const int n = arr.ambient_dim();
    ChernData cd = chern_from_resolution(res, n);
    Json jc;
    jc["rank"] = cd.rank;
    Json poly = Json::array();
    for (const auto& c : cd.chern_poly) poly.push_back(c.str());
    jc["polynomial"] = std::move(poly);
    for (int i = 1; i <= n; ++i) jc["c" + std::to_string(i)] = cd.chern_class(i).str();
    jc["slope"] = rational_to_string(cd.slope);
    jc["provenance"] = "exact";
    j["chern"] = std::move(jc);

    StabilityVerdict sv = bohnhorst_spindler(res, n);
    Json js;
    js["stable"] = sv.stable;
    js["semistable"] = sv.semistable;
    js["b1"] = rational_to_string(sv.b1);
    js["mu"] = rational_to_string(sv.mu);
    js["reason"] = sv.reason;
    js["provenance"] = "exact";
    j["stability"] = std::move(js);

    if (arr.size() == 1 && arr.member(0).degree == 2 && arr.quadric(0).smooth())
        notes.push_back("log bundle isomorphic to TP^" + std::to_string(n) + "(-2)");
    j["notes"] = std::move(notes);
    return j;
}

namespace {

Json json_verdict(const TorelliVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["case"] = v.case_tag;
    if (std::holds_alternative<PoleWitness>(v.witness)) {
        const auto& w = std::get<PoleWitness>(v.witness);
        j["witness"]["kind"] = "pole";
        j["witness"]["pole_a"] = json_rational_vector(w.pole_a.coords);
        j["witness"]["pole_b"] = json_rational_vector(w.pole_b.coords);
        j["witness"]["provenance"] = "exact";
    } else if (std::holds_alternative<DualPencilWitness>(v.witness)) {
        const auto& w = std::get<DualPencilWitness>(v.witness);
        j["witness"]["kind"] = "dual-pencil-span";
        j["witness"]["adjugate_a"] = json_matrix(w.adj_a);
        j["witness"]["adjugate_b"] = json_matrix(w.adj_b);
        j["witness"]["adjugate_c"] = json_matrix(w.adj_c);
        j["witness"]["adjugate_d"] = json_matrix(w.adj_d);
        j["witness"]["stacked_rank"] = w.stacked_rank;
        j["witness"]["provenance"] = "exact";
    } else if (std::holds_alternative<PointPairWitness>(v.witness)) {
        const auto& w = std::get<PointPairWitness>(v.witness);
        j["witness"]["kind"] = "jumping-line-point-pair";
        j["witness"]["line_a"] = json_rational_vector(w.jump_line_a.coeffs);
        j["witness"]["line_b"] = json_rational_vector(w.jump_line_b.coeffs);
        j["witness"]["pair_a"] = json_rational_vector({w.pair_a.coeffs[0], w.pair_a.coeffs[1], w.pair_a.coeffs[2]});
        j["witness"]["pair_b"] = json_rational_vector({w.pair_b.coeffs[0], w.pair_b.coeffs[1], w.pair_b.coeffs[2]});
        j["witness"]["provenance"] = "exact";
    }
    j["caveats"] = v.caveats;
    return j;
}

}  // namespace

Json cmd_torelli(const std::string& file_a, const std::string& file_b, const CliOptions& opt) {
    apply_options(opt);
    Arrangement a = load_arrangement(file_a);
    Arrangement b = load_arrangement(file_b);
    Json j = report_header("torelli");
    j["input_a"] = serialize_arrangement(a);
    j["input_b"] = serialize_arrangement(b);

    std::string ta = shape_tag(a), tb = shape_tag(b);
    static const char* catalogue =
        "single-quadric | pair-of-quadrics | hyperplane+quadric | conic+two-lines (planar)";
    if (ta == "unsupported" || tb == "unsupported")
        throw std::invalid_argument("unsupported arrangement shape for the equivalence decision; supported: " +
                                    std::string(catalogue));
    if (ta != tb)
        throw std::invalid_argument("arrangements classify to different shapes ('" + ta + "' vs '" + tb +
                                    "'); supported: " + catalogue);

    TorelliVerdict v;
    if (ta == "single-quadric") {
        v = decide_single_quadric(a.quadric(0), b.quadric(0));
    } else if (ta == "pair-of-quadrics") {
        v = decide_pair_quadrics(a.quadric(0), a.quadric(1), b.quadric(0), b.quadric(1));
    } else if (ta == "hyperplane+quadric") {
        auto pick = [](const Arrangement& arr) {
            int li = arr.member(0).degree == 1 ? 0 : 1;
            return std::pair{arr.covector(li), arr.quadric(1 - li)};
        };
        auto [ha, qa] = pick(a);
        auto [hb, qb] = pick(b);
        v = decide_hyperplane_quadric(ha, qa, hb, qb);
    } else {
        auto pick = [](const Arrangement& arr) {
            std::vector<int> lines;
            int conic = -1;
            for (int i = 0; i < arr.size(); ++i)
                (arr.member(i).degree == 1 ? (void)lines.push_back(i) : (void)(conic = i));
            return std::tuple{arr.covector(lines[0]), arr.covector(lines[1]), arr.quadric(conic)};
        };
        auto [r1, r2, ca] = pick(a);
        auto [s1, s2, cb] = pick(b);
        v = decide_conic_two_lines(r1, r2, ca, s1, s2, cb);
    }
    j["verdict"] = json_verdict(v);
    return j;
}

Json cmd_unstable(const std::string& file, const std::optional<std::string>& candidates_file,
                  bool scan_self, const CliOptions& opt) {
    apply_options(opt);
    Arrangement arr = load_arrangement(file);
    Json j = report_header("unstable");
    j["input"] = serialize_arrangement(arr);

    const int n = arr.ambient_dim();
    const int l = arr.size();
    int degree = arr.member(0).degree;
    if (!arr.all_degree(degree)) throw std::invalid_argument("unstable scan needs members of one common degree");

    std::vector<std::pair<std::string, HomPoly>> candidates;
    if (scan_self || !candidates_file) {
        for (int i = 0; i < l; ++i) {
            std::string label = arr.member(i).label.empty() ? "member-" + std::to_string(i) : arr.member(i).label;
            candidates.push_back({label, arr.member(i).f});
        }
    }
    if (candidates_file) {
        Arrangement cand = load_arrangement(*candidates_file);
        if (cand.ambient_dim() != n || !cand.all_degree(degree))
            throw std::invalid_argument("candidate file must match the arrangement's dimension and degree");
        for (int i = 0; i < cand.size(); ++i) {
            std::string label =
                cand.member(i).label.empty() ? "candidate-" + std::to_string(i) : cand.member(i).label;
            candidates.push_back({label, cand.member(i).f});
        }
    }

    Json results = Json::array();
    Json caveats = Json::array();
    if (degree == 1) {
        if (l < n + 2) throw std::invalid_argument("hyperplane scan needs at least n+2 members");
        if (!check_nc_hyperplanes(arr).holds())
            throw std::domain_error("arrangement does not cross normally; scan aborted");
        SteinerData sd = build_steiner(arr);
        for (const auto& [label, f] : candidates) {
            auto [unstable, kdim] = is_unstable_hyperplane(sd, HyperplaneCovec(f.coefficient_vector()));
            Json r;
            r["candidate"] = label;
            r["unstable"] = unstable;
            r["kernel_dim"] = kdim;
            results.push_back(std::move(r));
        }
        caveats.push_back("recovery is complete only when the arrangement does not osculate a rational "
                          "normal curve; that hypothesis is not checked");
    } else {
        for (const auto& [label, f] : candidates) {
            auto [unstable, kdim] = is_unstable_hypersurface(arr, degree, f);
            Json r;
            r["candidate"] = label;
            r["unstable"] = unstable;
            r["kernel_dim"] = kdim;
            results.push_back(std::move(r));
        }
        caveats.push_back("recovery is complete only when the lifted hyperplanes do not osculate a rational "
                          "normal curve; that hypothesis is not checked");
    }
    j["results"] = std::move(results);
    j["provenance"] = "exact";
    j["caveats"] = std::move(caveats);
    return j;
}

Json cmd_pencil(const std::string& file, const CliOptions& opt) {
    apply_options(opt);
    Arrangement arr = load_arrangement(file);
    if (arr.size() != 2 || !arr.all_degree(2))
        throw std::invalid_argument("pencil analysis needs exactly two quadrics");
    Json j = report_header("pencil");
    j["input"] = serialize_arrangement(arr);

    PencilReport rep = analyze_pencil(arr.quadric(0), arr.quadric(1));
    Json p;
    p["char_poly"] = json_rational_vector(rep.char_poly.coeffs());
    p["discriminant"] = rational_to_string(rep.disc);
    p["distinct"] = rep.distinct;
    p["normal_crossings"] = rep.distinct;
    p["exact"] = Json::array({"char_poly", "discriminant", "distinct", "normal_crossings"});
    p["roots"] = json_complex_vector(rep.roots);
    p["eigenvalues"] = json_complex_vector(rep.eigenvalues);
    if (rep.distinct) {
        Json verts = Json::array();
        for (const auto& v : rep.vertices) verts.push_back(json_complex_vector(v.coords));
        p["vertices"] = std::move(verts);
        Json basis = Json::array();
        for (const auto& row : rep.diag_basis) basis.push_back(json_complex_vector(row));
        p["diag_basis"] = std::move(basis);
        p["diag_values"] = json_complex_vector(rep.diag_values);
        p["residual"] = rep.residual;
        if (arr.ambient_dim() == 2) {
            Json base = Json::array();
            for (const auto& v : base_points_conics(arr.quadric(0), arr.quadric(1)))
                base.push_back(json_complex_vector(v.coords));
            p["base_points"] = std::move(base);
        }
    }
    p["numeric"] = true;
    p["tolerance"] = tolerances().residual;
    j["pencil"] = std::move(p);
    return j;
}

Json cmd_jumping(const std::string& file, const std::optional<std::string>& candidates_file,
                 const CliOptions& opt) {
    apply_options(opt);
    Arrangement arr = load_arrangement(file);
    if (arr.size() != 2 || !arr.all_degree(2) || arr.ambient_dim() != 2)
        throw std::invalid_argument("jumping-line analysis needs exactly two conics in the plane");
    QuadricForm a = arr.quadric(0), b = arr.quadric(1);
    if (!has_normal_crossings_pair(a, b)) throw std::domain_error("the pair does not cross normally");

    Json j = report_header("jumping");
    j["input"] = serialize_arrangement(arr);

    auto vertices = section_zero_locus(a, b);
    Json verts = Json::array();
    for (const auto& v : vertices) verts.push_back(json_complex_vector(v.coords));
    j["section_zero_locus"] = std::move(verts);
    j["section_zero_locus_numeric"] = true;

    Json joins = Json::array();
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k) {
            const auto& u = vertices[i].coords;
            const auto& w = vertices[k].coords;
            ComplexVec line{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
            joins.push_back(json_complex_vector(line));
        }
    j["vertex_join_lines"] = std::move(joins);
    j["vertex_join_lines_numeric"] = true;

    if (candidates_file) {
        Arrangement cand = load_arrangement(*candidates_file);
        if (!cand.all_degree(1) || cand.ambient_dim() != 2)
            throw std::invalid_argument("candidate file must contain lines of the plane");
        Json results = Json::array();
        for (int i = 0; i < cand.size(); ++i) {
            HyperplaneCovec line = cand.covector(i);
            RatMatrix m = jumping_line_matrix(a, b, line);
            Json r;
            r["candidate"] = cand.member(i).label.empty() ? "line-" + std::to_string(i) : cand.member(i).label;
            r["jumping"] = rank(m) <= 5;
            r["section_matrix_rank"] = rank(m);
            r["provenance"] = "exact";
            results.push_back(std::move(r));
        }
        j["candidates"] = std::move(results);
    }
    return j;
}

Json cmd_cubic_lift(const std::string& file, const CliOptions& opt) {
    apply_options(opt);
    Arrangement arr = load_arrangement(file);
    Json j = report_header("cubic-lift");
    j["input"] = serialize_arrangement(arr);

    auto [lift, frame] = lift_three_lines_conic(arr);
    Json r;
    r["system_rank"] = lift.system_rank;
    r["solution"] = json_rational_vector(lift.solution);
    Json cubic = Json::object();
    for (const auto& [e, c] : lift.g.terms()) {
        std::string key;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(e[i]);
        }
        cubic[key] = rational_to_string(c);
    }
    r["cubic"] = std::move(cubic);
    r["span_certified"] = lift.span_certified;
    r["frame"] = json_matrix(frame.matrix());
    r["provenance"] = "exact";
    r["note"] = "cubic expressed in the standardized frame where the lines are the coordinate triangle";
    j["cubic_lift"] = std::move(r);
    return j;
}

}  // namespace logtorelli
