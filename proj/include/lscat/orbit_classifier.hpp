#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lscat/affine_alcove.hpp"

namespace lscat {

enum class OrbitKind { CenterPoint, QuaternionicGrassmannian, OrientedRealGrassmannian, Generic };

std::string to_string(OrbitKind kind);

/// What the conjugacy class of exp v_k is diffeomorphic to. For the
/// Grassmannians, `plane_dim`-planes in a space of dimension `space_dim`
/// (over H for the quaternionic case, over R for the oriented real case).
struct OrbitIdentification {
    OrbitKind kind = OrbitKind::Generic;
    int plane_dim = 0;
    int space_dim = 0;

    /// "point", "Gr_1(H^3)", "Gr~_4(R^7)" or "generic".
    [[nodiscard]] std::string label() const;
    /// Real dimension of the model manifold; nullopt for Generic.
    [[nodiscard]] std::optional<int> manifold_dim() const;

    friend bool operator==(const OrbitIdentification&, const OrbitIdentification&) = default;
};

struct CategoryValue {
    enum class Kind { Known, Conjectured, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<int> value;

    static CategoryValue known(int v) { return {Kind::Known, v}; }
    static CategoryValue conjectured(int v) { return {Kind::Conjectured, v}; }
    static CategoryValue unknown() { return {Kind::Unknown, std::nullopt}; }

    friend bool operator==(const CategoryValue&, const CategoryValue&) = default;
};

std::string to_string(CategoryValue::Kind kind);

struct VertexOrbit {
    std::size_t k = 0;
    TorusPoint vertex;
    std::vector<std::size_t> subsystem;       // indices into rs.roots of the alpha with alpha(v_k) integral
    std::vector<LieType> stabilizer_components;
    bool is_central = false;
    int orbit_dim = 0;                        // |roots| - |subsystem|
    OrbitIdentification identification;
    CategoryValue rel_cat;
};

/// Roots with alpha(v_k) in Z, in the order of rs.roots.
std::vector<QVec> vertex_subsystem(const RootSystem& rs, std::size_t k);

/// Irreducible components of a closed, symmetric subsystem, sorted by
/// family letter then rank. Degenerate pieces never occur: rank-one
/// components are A1, the rank-two double-laced one is B2 and the rank-three
/// simply laced one with 12 roots is A3.
std::vector<LieType> classify_subsystem(const RootSystem& rs, const std::vector<QVec>& subsystem);

/// Simple roots of the subsystem: its positive roots (positive in rs) that
/// are not a sum of two of them.
std::vector<QVec> subsystem_simple_roots(const RootSystem& rs, const std::vector<QVec>& subsystem);

/// "A1xA1", "C3", or "1" for the empty product.
std::string dynkin_label(const std::vector<LieType>& components);

unsigned long long weyl_group_order(const std::vector<LieType>& components);

OrbitIdentification identify_orbit(const RootSystem& rs, std::size_t k);
CategoryValue relative_category(const OrbitIdentification& id);

VertexOrbit analyze_vertex(const FundamentalAlcove& alcove, std::size_t k);
std::vector<VertexOrbit> analyze_orbits(const RootSystem& rs);

struct BoundOptions {
    bool assume_conjecture = false;
    std::map<std::size_t, int> overrides;  // k -> assumed cat_G(O_k)
};

struct BoundReport {
    LieType lie_type;
    std::vector<VertexOrbit> orbits;       // rel_cat as used by the bound (overrides applied)
    std::optional<int> upper_bound;        // nullopt means Unknown
    /// The bound every Conjectured value would give, when that is the only
    /// thing missing and the conjecture was not assumed.
    std::optional<int> conjectural_bound;
    std::vector<std::string> assumptions;
    std::optional<int> known_lower_bound;
    std::string lower_bound_note;
    std::optional<int> known_value;        // cat(G) where it is known for small rank
    std::string known_value_note;
};

/// Throws std::invalid_argument for an override index outside 0..n or a
/// negative override value.
BoundReport ls_bound(const RootSystem& rs, const BoundOptions& options = {});

}  // namespace lscat
