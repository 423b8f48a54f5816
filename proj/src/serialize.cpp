#include "lscat/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace lscat {

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const QVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Json to_json(const QMat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Json to_json(const QuatMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const CliffordElement& g) {
    Json terms = Json::array();
    for (const auto& [blade, coeff] : g.terms()) {
        Json idx = Json::array();
        for (std::size_t i = 0; i < CliffordElement::kMaxDim; ++i)
            if ((blade >> i) & 1U) idx.push_back(i + 1);
        terms.push_back({{"indices", idx}, {"coeff", coeff.str()}});
    }
    return {{"dim", g.dim()}, {"element", to_string(g)}, {"terms", terms}};
}

Json to_json(const AffineIsometry& w) { return {{"linear", to_json(w.linear)}, {"translation", to_json(w.translation)}}; }

Json to_json(const OrbitIdentification& id) {
    Json out{{"kind", to_string(id.kind)}, {"label", id.label()}};
    if (const auto d = id.manifold_dim()) out["manifold_dim"] = *d;
    else out["manifold_dim"] = nullptr;
    if (id.kind == OrbitKind::QuaternionicGrassmannian || id.kind == OrbitKind::OrientedRealGrassmannian) {
        out["plane_dim"] = id.plane_dim;
        out["space_dim"] = id.space_dim;
    }
    return out;
}

Json to_json(const CategoryValue& c) {
    Json out{{"status", to_string(c.kind)}};
    out["value"] = c.value ? Json(*c.value) : Json(nullptr);
    return out;
}

Json to_json(const VertexOrbit& o) {
    return {{"k", o.k},
            {"vertex", to_json(o.vertex)},
            {"subsystem_size", o.subsystem.size()},
            {"stabilizer", dynkin_label(o.stabilizer_components)},
            {"central", o.is_central},
            {"orbit_dim", o.orbit_dim},
            {"identification", to_json(o.identification)},
            {"rel_cat", to_json(o.rel_cat)}};
}

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const BoundReport& b) {
    Json orbits = Json::array();
    for (const auto& o : b.orbits) orbits.push_back(to_json(o));
    Json out{{"lie_type", b.lie_type.name()},
             {"orbits", orbits},
             {"upper_bound", optional_int(b.upper_bound)},
             {"upper_bound_status", b.upper_bound ? "Known" : "Unknown"},
             {"conjectural_bound", optional_int(b.conjectural_bound)},
             {"assumptions", b.assumptions},
             {"known_lower_bound", optional_int(b.known_lower_bound)},
             {"known_value", optional_int(b.known_value)}};
    if (!b.lower_bound_note.empty()) out["lower_bound_note"] = b.lower_bound_note;
    if (!b.known_value_note.empty()) out["known_value_note"] = b.known_value_note;
    return out;
}

Json to_json(const Counterexample& c) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(to_json(p));
    Json out{{"check", to_string(c.check)}, {"k", c.k}, {"variant", c.variant}, {"detail", c.detail}, {"points", pts}};
    if (c.element) out["element"] = to_json(*c.element);
    if (c.s) out["s"] = c.s->str();
    if (c.matrix.rows() > 0) {
        out["matrix"] = to_json(c.matrix);
        out["n"] = c.n;
        out["plane_dim"] = c.plane_dim;
        out["j"] = c.j;
    }
    return out;
}

Json to_json(const VerifyReport& r, bool with_timing) {
    Json checks = Json::array();
    for (const auto& c : r.results) {
        Json item{{"check", to_string(c.check)},
                  {"passed", c.passed},
                  {"instances", c.instances},
                  {"sampled", c.sampled},
                  {"counterexample", c.counterexample ? to_json(*c.counterexample) : Json(nullptr)}};
        if (with_timing) item["seconds"] = c.seconds;
        checks.push_back(std::move(item));
    }
    Json names = Json::array();
    for (Check c : r.plan.checks) names.push_back(to_string(c));
    return {{"lie_type", r.plan.lie_type.name()},
            {"plan",
             {{"checks", names},
              {"seed", r.plan.seed},
              {"samples", r.plan.samples},
              {"word_length_bound", r.plan.word_length_bound},
              {"grid_denominator", r.plan.grid_denominator}}},
            {"passed", r.passed()},
            {"results", checks}};
}

Json root_data_json(const RootSystem& rs) {
    Json simple = Json::array();
    for (const auto& a : rs.simple_roots) simple.push_back(to_json(a));
    Json positive = Json::array();
    for (const auto& a : rs.positive_roots) positive.push_back(to_json(a));
    return {{"lie_type", rs.type.name()},
            {"rank", rs.rank()},
            {"ambient_dim", rs.ambient_dim},
            {"root_count", rs.roots.size()},
            {"positive_root_count", rs.positive_roots.size()},
            {"simple_roots", simple},
            {"positive_roots", positive},
            {"highest_root", to_json(rs.highest_root)},
            {"cartan", rs.cartan},
            {"marks", rs.marks}};
}

Json marks_json(const RootSystem& rs) { return {{"lie_type", rs.type.name()}, {"marks", rs.marks}}; }

Json alcove_json(const FundamentalAlcove& alcove, std::size_t group_cap) {
    const RootSystem& rs = alcove.roots();
    Json verts = Json::array();
    for (std::size_t k = 0; k <= alcove.rank(); ++k) {
        const auto stab = alcove.stabilizer(k, group_cap);
        verts.push_back({{"k", k},
                         {"vertex", to_json(alcove.vertex(k))},
                         {"mark", k == 0 ? 1 : rs.marks[k - 1]},
                         {"stabilizer_order", stab.order()},
                         {"alcoves_at_vertex", stab.order()}});
    }
    Json faces = Json::array();
    for (std::size_t k = 0; k <= alcove.rank(); ++k)
        faces.push_back({{"k", k},
                         {"equation", k == 0 ? std::string("alpha_0(H) = 1") : "alpha_" + std::to_string(k) + "(H) = 0"},
                         {"root", to_json(k == 0 ? rs.highest_root : rs.simple_roots[k - 1])},
                         {"barycenter", to_json(alcove.face_barycenter(k))}});
    return {{"lie_type", rs.type.name()}, {"vertices", verts}, {"faces", faces}, {"barycenter", to_json(alcove.barycenter())}};
}

Json orbits_json(const RootSystem& rs) {
    Json out = Json::array();
    for (const auto& o : analyze_orbits(rs)) out.push_back(to_json(o));
    return {{"lie_type", rs.type.name()}, {"orbits", out}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

std::string ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "Unknown"; }

}  // namespace

std::string root_data_text(const RootSystem& rs) {
    std::ostringstream os;
    os << "type " << rs.type.name() << ", rank " << rs.rank() << ", " << rs.roots.size() << " roots ("
       << rs.positive_roots.size() << " positive)\n";
    os << "highest root alpha_0 = " << to_string(rs.highest_root) << '\n';
    os << "marks " << ints(rs.marks) << '\n';
    std::vector<std::vector<std::string>> rows{{"simple root", "coordinates"}};
    for (std::size_t i = 0; i < rs.rank(); ++i) rows.push_back({"alpha_" + std::to_string(i + 1), to_string(rs.simple_roots[i])});
    os << table(rows);
    os << "Cartan matrix (row i: alpha_j(h_i))\n";
    for (const auto& row : rs.cartan) os << "  " << ints(row) << '\n';
    return os.str();
}

std::string marks_text(const RootSystem& rs) { return rs.type.name() + " marks: " + ints(rs.marks) + "\n"; }

std::string alcove_text(const FundamentalAlcove& alcove, std::size_t group_cap) {
    const RootSystem& rs = alcove.roots();
    std::vector<std::vector<std::string>> rows{{"k", "vertex v_k", "mark", "|W_k|", "face F_k"}};
    for (std::size_t k = 0; k <= alcove.rank(); ++k)
        rows.push_back({std::to_string(k), to_string(alcove.vertex(k)), std::to_string(k == 0 ? 1 : rs.marks[k - 1]),
                        std::to_string(alcove.stabilizer(k, group_cap).order()),
                        k == 0 ? "alpha_0 = 1" : "alpha_" + std::to_string(k) + " = 0"});
    return "fundamental alcove of " + rs.type.name() + "\n" + table(rows);
}

std::string orbits_text(const RootSystem& rs) {
    std::vector<std::vector<std::string>> rows{{"k", "stabilizer", "central", "dim", "orbit", "rel-cat"}};
    for (const auto& o : analyze_orbits(rs)) {
        std::string cat = to_string(o.rel_cat.kind);
        if (o.rel_cat.value) cat += "(" + std::to_string(*o.rel_cat.value) + ")";
        rows.push_back({std::to_string(o.k), dynkin_label(o.stabilizer_components), o.is_central ? "yes" : "no",
                        std::to_string(o.orbit_dim), o.identification.label(), cat});
    }
    return "conjugacy classes of exp v_k in " + rs.type.name() + "\n" + table(rows);
}

std::string bound_text(const BoundReport& b) {
    std::ostringstream os;
    std::vector<std::vector<std::string>> rows{{"k", "orbit", "rel-cat"}};
    for (const auto& o : b.orbits) {
        std::string cat = to_string(o.rel_cat.kind);
        if (o.rel_cat.value) cat += "(" + std::to_string(*o.rel_cat.value) + ")";
        rows.push_back({std::to_string(o.k), o.identification.label(), cat});
    }
    os << b.lie_type.name() << '\n' << table(rows);
    os << "upper bound: " << opt(b.upper_bound) << '\n';
    if (b.conjectural_bound) os << "conjectural bound: " << *b.conjectural_bound << '\n';
    for (const auto& a : b.assumptions) os << "assumption: " << a << '\n';
    if (b.known_value) os << "known value: " << *b.known_value << " (" << b.known_value_note << ")\n";
    if (b.known_lower_bound) os << "known lower bound: " << *b.known_lower_bound << " (" << b.lower_bound_note << ")\n";
    return os.str();
}

std::string verify_text(const VerifyReport& r, bool with_timing) {
    std::vector<std::vector<std::string>> rows{{"check", "result", "instances", "sampled"}};
    if (with_timing) rows.front().push_back("seconds");
    for (const auto& c : r.results) {
        rows.push_back({to_string(c.check), c.passed ? "pass" : "FAIL", std::to_string(c.instances), std::to_string(c.sampled)});
        if (with_timing) {
            std::ostringstream t;
            t << std::fixed << std::setprecision(3) << c.seconds;
            rows.back().push_back(t.str());
        }
    }
    std::ostringstream os;
    os << "verification of " << r.plan.lie_type.name() << " (seed " << r.plan.seed << ")\n" << table(rows);
    for (const auto& c : r.results)
        if (c.counterexample) {
            os << to_string(c.check) << " counterexample (k = " << c.counterexample->k << "): " << c.counterexample->detail
               << '\n';
            for (const auto& p : c.counterexample->points) os << "  point " << to_string(p) << '\n';
        }
    os << (r.passed() ? "all checks passed" : "verification FAILED") << '\n';
    return os.str();
}

std::string matrix_text(const QMat& m) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.emplace_back();
        for (std::size_t j = 0; j < m.cols(); ++j) rows.back().push_back(m(i, j).str());
    }
    return table(rows);
}

std::string matrix_text(const QuatMatrix& m) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.emplace_back();
        for (std::size_t j = 0; j < m.cols(); ++j) rows.back().push_back(to_string(m(i, j)));
    }
    return table(rows);
}

}  // namespace lscat
