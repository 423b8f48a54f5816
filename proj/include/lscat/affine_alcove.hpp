#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lscat/root_system.hpp"

namespace lscat {

/// A point H of the torus Lie algebra, in units where the alcove condition
/// reads 0 < alpha(H) < 1 and the exponential kernel is the coroot lattice.
using TorusPoint = QVec;

/// x -> linear * x + translation, an element of the affine Weyl group.
struct AffineIsometry {
    QMat linear;
    QVec translation;

    static AffineIsometry identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return translation.size(); }
    [[nodiscard]] TorusPoint apply(const TorusPoint& x) const;
    /// (*this) o rhs: (w1, t1) o (w2, t2) = (w1 w2, w1 t2 + t1).
    [[nodiscard]] AffineIsometry compose(const AffineIsometry& rhs) const;
    [[nodiscard]] AffineIsometry inverse() const;
    [[nodiscard]] bool is_identity() const;

    friend bool operator==(const AffineIsometry&, const AffineIsometry&) = default;
};

struct AffineIsometryHash {
    std::size_t operator()(const AffineIsometry& g) const noexcept {
        std::size_t seed = QMatHash{}(g.linear);
        hash_combine(seed, QVecHash{}(g.translation));
        return seed;
    }
};

/// An alcove, identified with the unique affine Weyl element mapping the
/// fundamental alcove onto it.
struct Alcove {
    AffineIsometry rep;
    friend bool operator==(const Alcove&, const Alcove&) = default;
};

struct VertexSet {
    std::vector<TorusPoint> vertices;  // v_0 .. v_n
};

/// Finite subgroup of the affine Weyl group, listed in BFS order from the
/// identity over `generators` (indices of wall reflections).
struct StabilizerGroup {
    std::vector<AffineIsometry> elements;
    std::vector<std::size_t> generators;

    [[nodiscard]] std::size_t order() const { return elements.size(); }
    [[nodiscard]] bool contains(const AffineIsometry& g) const;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// BFS closure of a set of involutions (or any generators of a finite group).
/// Throws std::length_error once more than `cap` elements are found.
std::vector<AffineIsometry> group_closure(const std::vector<AffineIsometry>& generators, std::size_t dim,
                                          std::size_t cap = kDefaultGroupCap);

struct Reduction {
    TorusPoint point;   // the unique representative in the closed fundamental alcove
    AffineIsometry w;   // w(point) == input
    std::size_t steps = 0;
};

/// Geometry of the closed fundamental alcove of one root system: vertices,
/// faces F_0..F_n, wall reflections r_0..r_n, and the cells C_k.
///
/// Face F_0 lies on alpha_0 = 1 and F_k (k >= 1) on alpha_k = 0; F_k is the
/// face opposite v_k. Membership tests are exact.
class FundamentalAlcove {
public:
    explicit FundamentalAlcove(RootSystem rs);

    [[nodiscard]] const RootSystem& roots() const { return rs_; }
    [[nodiscard]] std::size_t rank() const { return rs_.rank(); }
    [[nodiscard]] std::size_t dim() const { return rs_.ambient_dim; }
    [[nodiscard]] const std::vector<TorusPoint>& vertices() const { return vertices_; }
    [[nodiscard]] const TorusPoint& vertex(std::size_t k) const { return vertices_.at(k); }
    [[nodiscard]] const AffineIsometry& wall_reflection(std::size_t k) const { return walls_.at(k); }
    [[nodiscard]] const std::vector<AffineIsometry>& wall_reflections() const { return walls_; }
    [[nodiscard]] TorusPoint barycenter() const;
    /// Barycenter of the face F_k.
    [[nodiscard]] TorusPoint face_barycenter(std::size_t k) const;

    /// Affine functional of wall k: 1 - alpha_0(H) for k = 0, alpha_k(H) otherwise.
    /// The closed alcove is where every wall value is >= 0.
    [[nodiscard]] Rat wall_value(std::size_t k, const TorusPoint& h) const;
    [[nodiscard]] bool in_closure(const TorusPoint& h) const;
    [[nodiscard]] bool on_face(const TorusPoint& h, std::size_t k) const;
    /// True when h lies in the trace-zero hyperplane for type A (always true otherwise).
    [[nodiscard]] bool in_torus(const TorusPoint& h) const;

    /// Reflect across the lowest-index violated wall until the point lies in
    /// the closed alcove.
    [[nodiscard]] Reduction reduce(const TorusPoint& u) const;

    [[nodiscard]] StabilizerGroup stabilizer(std::size_t k, std::size_t cap = kDefaultGroupCap) const;
    /// Throws std::invalid_argument if p is outside the closed alcove.
    [[nodiscard]] StabilizerGroup point_stabilizer(const TorusPoint& p, std::size_t cap = kDefaultGroupCap) const;
    [[nodiscard]] std::vector<Alcove> alcoves_at_vertex(std::size_t k, std::size_t cap = kDefaultGroupCap) const;
    /// True when alcove.rep(closure of A_0) contains p.
    [[nodiscard]] bool alcove_contains(const Alcove& a, const TorusPoint& p) const;

    /// Membership of u in C_k = union over w in W_k of w(closure(A_0) minus F_k).
    [[nodiscard]] bool in_cell(std::size_t k, const TorusPoint& u) const;
    /// (1 - s) u + s v_k. Throws std::invalid_argument unless u is in C_k and 0 <= s <= 1.
    [[nodiscard]] TorusPoint retract(std::size_t k, const TorusPoint& u, const Rat& s) const;

    /// Affine Weyl elements of word length <= max_length in the wall
    /// reflections, in BFS order, paired with their lengths.
    [[nodiscard]] std::vector<std::pair<AffineIsometry, std::size_t>> elements_up_to_length(
        std::size_t max_length, std::size_t cap = kDefaultGroupCap) const;

private:
    void check_index(std::size_t k) const;

    RootSystem rs_;
    std::vector<TorusPoint> vertices_;
    std::vector<AffineIsometry> walls_;
};

VertexSet vertices(const RootSystem& rs);
AffineIsometry wall_reflection(const RootSystem& rs, std::size_t k);
Reduction reduce_to_alcove(const RootSystem& rs, const TorusPoint& u);
StabilizerGroup stabilizer(const RootSystem& rs, std::size_t k);
std::vector<Alcove> alcoves_at_vertex(const RootSystem& rs, std::size_t k);
StabilizerGroup point_stabilizer(const RootSystem& rs, const TorusPoint& p);
bool in_cell(const RootSystem& rs, std::size_t k, const TorusPoint& u);
TorusPoint retract_torus(const RootSystem& rs, std::size_t k, const TorusPoint& u, const Rat& s);

}  // namespace lscat
