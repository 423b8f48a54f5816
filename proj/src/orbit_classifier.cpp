#include "lscat/orbit_classifier.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace lscat {

std::string to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::CenterPoint: return "CenterPoint";
        case OrbitKind::QuaternionicGrassmannian: return "QuaternionicGrassmannian";
        case OrbitKind::OrientedRealGrassmannian: return "OrientedRealGrassmannian";
        case OrbitKind::Generic: return "Generic";
    }
    return "Generic";
}

std::string to_string(CategoryValue::Kind kind) {
    switch (kind) {
        case CategoryValue::Kind::Known: return "Known";
        case CategoryValue::Kind::Conjectured: return "Conjectured";
        case CategoryValue::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string OrbitIdentification::label() const {
    switch (kind) {
        case OrbitKind::CenterPoint: return "point";
        case OrbitKind::QuaternionicGrassmannian:
            return "Gr_" + std::to_string(plane_dim) + "(H^" + std::to_string(space_dim) + ")";
        case OrbitKind::OrientedRealGrassmannian:
            return "Gr~_" + std::to_string(plane_dim) + "(R^" + std::to_string(space_dim) + ")";
        case OrbitKind::Generic: return "generic";
    }
    return "generic";
}

std::optional<int> OrbitIdentification::manifold_dim() const {
    switch (kind) {
        case OrbitKind::CenterPoint: return 0;
        case OrbitKind::QuaternionicGrassmannian: return 4 * plane_dim * (space_dim - plane_dim);
        case OrbitKind::OrientedRealGrassmannian: return plane_dim * (space_dim - plane_dim);
        case OrbitKind::Generic: return std::nullopt;
    }
    return std::nullopt;
}

std::vector<QVec> vertex_subsystem(const RootSystem& rs, std::size_t k) {
    const FundamentalAlcove alcove(rs);
    const TorusPoint& v = alcove.vertex(k);
    std::vector<QVec> out;
    for (const auto& a : rs.roots)
        if (RootSystem::eval(a, v).is_integer()) out.push_back(a);
    return out;
}

namespace {

// One connected piece of a subsystem: indices into rs.roots of its simple
// roots and of the subsystem's positive roots attached to it.
struct Component {
    std::vector<std::size_t> simple;
    std::vector<std::size_t> positive;
};

struct CoordsHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t seed = v.size();
        for (int x : v) hash_combine(seed, std::hash<int>{}(x));
        return seed;
    }
};

// All pairings below use the integer data 6 B(., .) on simple-root coordinates.
long pair6(const RootSystem& rs, std::size_t a, std::size_t b) {
    return rs.scaled_inner(rs.root_coords[a], rs.root_coords[b]);
}

LieType identify_component(const RootSystem& rs, const Component& c) {
    const int r = static_cast<int>(c.simple.size());
    if (r == 1) return LieType::make(Family::A, 1);
    // a_ij a_ji = 4 B(a_i, a_j)^2 / (B(a_i, a_i) B(a_j, a_j)).
    long lacing = 1;
    for (std::size_t i = 0; i < c.simple.size(); ++i)
        for (std::size_t j = i + 1; j < c.simple.size(); ++j) {
            const long g = pair6(rs, c.simple[i], c.simple[j]);
            lacing = std::max(lacing, 4 * g * g / (pair6(rs, c.simple[i], c.simple[i]) * pair6(rs, c.simple[j], c.simple[j])));
        }
    const std::size_t count = 2 * c.positive.size();
    const auto ur = static_cast<std::size_t>(r);

    if (lacing == 3) return LieType::make(Family::G, 2);
    if (lacing == 2) {
        if (r == 2) return LieType::make(Family::B, 2);
        if (r == 4 && count == 48) return LieType::make(Family::F, 4);
        std::vector<long> lengths;
        for (std::size_t a : c.positive) lengths.push_back(pair6(rs, a, a));
        const long longest = *std::max_element(lengths.begin(), lengths.end());
        std::size_t short_count = 0;
        for (long l : lengths)
            if (l < longest) short_count += 2;
        if (short_count == 2 * ur) return LieType::make(Family::B, r);
        if (short_count == 2 * ur * (ur - 1)) return LieType::make(Family::C, r);
        throw std::logic_error("classify_subsystem: unrecognised double-laced component");
    }
    if (count == ur * (ur + 1)) return LieType::make(Family::A, r);
    if (r >= 4 && count == 2 * ur * (ur - 1)) return LieType::make(Family::D, r);
    if (r == 6 && count == 72) return LieType::make(Family::E, 6);
    if (r == 7 && count == 126) return LieType::make(Family::E, 7);
    if (r == 8 && count == 240) return LieType::make(Family::E, 8);
    throw std::logic_error("classify_subsystem: unrecognised simply laced component");
}

// Indices of the subsystem's positive roots, in height order.
std::vector<std::size_t> positive_indices(const RootSystem& rs, const std::vector<QVec>& subsystem) {
    std::vector<std::size_t> positive;
    for (const auto& a : subsystem)
        if (const std::size_t i = rs.root_index(a); i < rs.positive_roots.size()) positive.push_back(i);
    std::sort(positive.begin(), positive.end());
    return positive;
}

// Positive roots are ordered by height, and a decomposable one is a simple
// root plus a lower positive root; that simple root pairs positively with it.
std::vector<std::size_t> simple_indices(const RootSystem& rs, const std::vector<std::size_t>& positive) {
    std::unordered_set<std::vector<int>, CoordsHash> member;
    for (std::size_t i : positive) member.insert(rs.root_coords[i]);
    std::vector<std::size_t> simple;
    std::vector<int> rest;
    for (std::size_t i : positive) {
        const auto& a = rs.root_coords[i];
        bool decomposable = false;
        for (std::size_t j : simple) {
            if (pair6(rs, i, j) <= 0) continue;
            rest = a;
            for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= rs.root_coords[j][t];
            if (member.contains(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(i);
    }
    return simple;
}

}  // namespace

std::vector<QVec> subsystem_simple_roots(const RootSystem& rs, const std::vector<QVec>& subsystem) {
    std::vector<QVec> out;
    for (std::size_t i : simple_indices(rs, positive_indices(rs, subsystem))) out.push_back(rs.roots[i]);
    return out;
}

namespace {

std::vector<LieType> classify_positive(const RootSystem& rs, const std::vector<std::size_t>& positive) {
    const std::vector<std::size_t> simple = simple_indices(rs, positive);
    const std::size_t m = simple.size();

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pair6(rs, simple[i], simple[j]) != 0) parent[find(i)] = find(j);

    std::map<std::size_t, Component> groups;
    for (std::size_t i = 0; i < m; ++i) groups[find(i)].simple.push_back(simple[i]);
    // A nonzero root pairs nontrivially with some simple root of its own
    // component and trivially with every other component.
    for (std::size_t a : positive)
        for (std::size_t i = 0; i < m; ++i)
            if (pair6(rs, a, simple[i]) != 0) {
                groups[find(i)].positive.push_back(a);
                break;
            }
    std::vector<LieType> out;
    for (const auto& [root, c] : groups) out.push_back(identify_component(rs, c));
    std::sort(out.begin(), out.end(), [](const LieType& a, const LieType& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.rank > b.rank;
    });
    return out;
}

}  // namespace

std::vector<LieType> classify_subsystem(const RootSystem& rs, const std::vector<QVec>& subsystem) {
    return classify_positive(rs, positive_indices(rs, subsystem));
}

std::string dynkin_label(const std::vector<LieType>& components) {
    if (components.empty()) return "1";
    std::string s;
    for (const auto& t : components) {
        if (!s.empty()) s += "x";
        s += t.name();
    }
    return s;
}

unsigned long long weyl_group_order(const std::vector<LieType>& components) {
    unsigned long long order = 1;
    for (const auto& t : components) order *= weyl_group_order(t);
    return order;
}

namespace {

OrbitIdentification identify(const RootSystem& rs, std::size_t k, bool central) {
    const int n = rs.type.rank;
    const int ki = static_cast<int>(k);
    if (central) return {OrbitKind::CenterPoint, 0, 0};
    switch (rs.type.family) {
        case Family::C:
            if (ki > 0 && ki < n) return {OrbitKind::QuaternionicGrassmannian, std::min(ki, n - ki), n};
            break;
        case Family::B:
            if (ki >= 2 && ki <= n) return {OrbitKind::OrientedRealGrassmannian, 2 * ki, 2 * n + 1};
            break;
        case Family::D: return {OrbitKind::OrientedRealGrassmannian, 2 * ki, 2 * n};
        default: break;
    }
    return {OrbitKind::Generic, 0, 0};
}

}  // namespace

OrbitIdentification identify_orbit(const RootSystem& rs, std::size_t k) {
    return identify(rs, k, vertex_subsystem(rs, k).size() == rs.roots.size());
}

CategoryValue relative_category(const OrbitIdentification& id) {
    switch (id.kind) {
        case OrbitKind::CenterPoint: return CategoryValue::known(0);
        case OrbitKind::QuaternionicGrassmannian: return CategoryValue::conjectured(id.plane_dim);
        default: return CategoryValue::unknown();
    }
}

VertexOrbit analyze_vertex(const FundamentalAlcove& alcove, std::size_t k) {
    const RootSystem& rs = alcove.roots();
    VertexOrbit o;
    o.k = k;
    o.vertex = alcove.vertex(k);
    // alpha_j(v_k) = delta_jk / m_k, so alpha(v_k) is integral exactly when
    // m_k divides the k-th simple coordinate of alpha.
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        if (k == 0 || rs.root_coords[i][k - 1] % rs.marks[k - 1] == 0) {
            o.subsystem.push_back(i);
            if (i < rs.positive_roots.size()) positive.push_back(i);
        }
    o.stabilizer_components = classify_positive(rs, positive);
    o.is_central = o.subsystem.size() == rs.roots.size();
    o.orbit_dim = static_cast<int>(rs.roots.size() - o.subsystem.size());
    o.identification = identify(rs, k, o.is_central);
    o.rel_cat = relative_category(o.identification);
    return o;
}

std::vector<VertexOrbit> analyze_orbits(const RootSystem& rs) {
    const FundamentalAlcove alcove(rs);
    std::vector<VertexOrbit> out;
    for (std::size_t k = 0; k <= alcove.rank(); ++k) out.push_back(analyze_vertex(alcove, k));
    return out;
}

namespace {

void attach_literature(BoundReport& r) {
    const int n = r.lie_type.rank;
    switch (r.lie_type.family) {
        case Family::A:
            r.known_value = n;
            r.known_value_note = "cat(SU(n+1)) = n";
            break;
        case Family::C:
            if (n <= 3) {
                r.known_value = std::array{1, 3, 5}[static_cast<std::size_t>(n - 1)];
                r.known_value_note = "cat(Sp(n)) = 1, 3, 5 for n = 1, 2, 3";
            }
            if (n >= 3) {
                r.known_lower_bound = n + 2;
                r.lower_bound_note = "cat(Sp(n)) >= n + 2 for n >= 3";
            }
            break;
        case Family::B:
            if (n <= 4) {
                r.known_value = std::array{3, 5, 8}[static_cast<std::size_t>(n - 2)];
                r.known_value_note = "cat(Spin(2n+1)) = 3, 5, 8 for n = 2, 3, 4";
            }
            break;
        default: break;
    }
}

}  // namespace

BoundReport ls_bound(const RootSystem& rs, const BoundOptions& options) {
    BoundReport r;
    r.lie_type = rs.type;
    r.orbits = analyze_orbits(rs);
    for (const auto& [k, v] : options.overrides) {
        if (k >= r.orbits.size())
            throw std::invalid_argument("override index " + std::to_string(k) + " out of range for " + rs.type.name());
        if (v < 0) throw std::invalid_argument("override value must be nonnegative");
    }

    bool unknown = false;
    bool unassumed_conjecture = false;
    bool conjecture_used = false;
    int assured = 0;
    int conjectural = 0;
    for (auto& o : r.orbits) {
        if (auto it = options.overrides.find(o.k); it != options.overrides.end()) {
            o.rel_cat = CategoryValue::known(it->second);
            r.assumptions.push_back("cat_G(O_" + std::to_string(o.k) + ") = " + std::to_string(it->second) +
                                    " (override)");
        }
        switch (o.rel_cat.kind) {
            case CategoryValue::Kind::Known:
                assured += *o.rel_cat.value + 1;
                conjectural += *o.rel_cat.value + 1;
                break;
            case CategoryValue::Kind::Conjectured:
                conjectural += *o.rel_cat.value + 1;
                if (options.assume_conjecture) {
                    assured += *o.rel_cat.value + 1;
                    conjecture_used = true;
                } else {
                    unassumed_conjecture = true;
                }
                break;
            case CategoryValue::Kind::Unknown: unknown = true; break;
        }
    }
    if (conjecture_used) r.assumptions.insert(r.assumptions.begin(), "Sp conjecture assumed");
    if (!unknown) {
        if (unassumed_conjecture)
            r.conjectural_bound = conjectural - 1;
        else
            r.upper_bound = assured - 1;
    }
    attach_literature(r);
    return r;
}

}  // namespace lscat
