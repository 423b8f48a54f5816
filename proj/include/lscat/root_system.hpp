#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lscat/exact/matrix.hpp"

namespace lscat {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(std::string_view s);

/// Cartan type of a simple Lie algebra. Construct through make() so the rank
/// constraints (A1+, B2+, C1+, D3+, E6-8, F4, G2) are enforced.
struct LieType {
    Family family = Family::A;
    int rank = 1;

    static LieType make(Family family, int rank);
    /// "C2", "E8", ...
    static LieType parse(std::string_view s);
    [[nodiscard]] std::string name() const;
    [[nodiscard]] bool is_classical() const { return family <= Family::D; }

    friend bool operator==(const LieType&, const LieType&) = default;
};

/// Root datum of one simple type.
///
/// Roots live in an ambient coordinate space (epsilon coordinates for the
/// classical families, simple-root coordinates for the exceptional ones).
/// Torus points H use the dual coordinates, so alpha(H) is the plain dot
/// product. `form` is the invariant inner product on the root space, scaled
/// so long roots have squared length 2.
struct RootSystem {
    LieType type;
    std::size_t ambient_dim = 0;
    std::vector<QVec> simple_roots;
    std::vector<QVec> roots;           // positive roots first, ordered by height
    std::vector<QVec> positive_roots;
    QVec highest_root;
    QMat form;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = alpha_j(h_{alpha_i})
    std::vector<int> marks;
    std::vector<QVec> coroot_basis;    // simple coroots h_{alpha_1..n}
    std::vector<std::vector<int>> root_coords;  // simple-root coordinates of roots[i]
    std::vector<std::vector<long>> scaled_gram; // 6 B(alpha_i, alpha_j), integral for every type

    /// 6 B(x, y) for vectors given in simple-root coordinates.
    [[nodiscard]] long scaled_inner(const std::vector<int>& x, const std::vector<int>& y) const;

    [[nodiscard]] std::size_t rank() const { return simple_roots.size(); }
    [[nodiscard]] bool is_root(const QVec& v) const { return index_.contains(v); }
    /// Index of a root in `roots`; throws std::invalid_argument if not a root.
    [[nodiscard]] std::size_t root_index(const QVec& v) const;
    /// alpha(H).
    [[nodiscard]] static Rat eval(const QVec& alpha, const QVec& h) { return dot(alpha, h); }
    /// B(x, y) on the root space.
    [[nodiscard]] Rat inner(const QVec& x, const QVec& y) const;
    /// Coefficients of a root-space vector in the simple-root basis.
    [[nodiscard]] QVec simple_coordinates(const QVec& v) const;
    [[nodiscard]] bool is_long(const QVec& alpha) const { return inner(alpha, alpha) == Rat(2); }

    void rebuild_index();

private:
    std::unordered_map<QVec, std::size_t, QVecHash> index_;
};

RootSystem build(const LieType& t);

/// Coefficients m_j with alpha_0 = sum_j m_j alpha_j, solved exactly.
std::vector<int> marks(const RootSystem& rs);

/// h_alpha = 2 u_alpha / B(u_alpha, u_alpha). Throws if alpha is not a root.
QVec coroot(const RootSystem& rs, const QVec& alpha);

/// Coroot computed against an arbitrary (positive definite) form.
QVec coroot_for_form(const QMat& form, const QVec& alpha);

/// Matrix of s_alpha acting on torus points: H -> H - alpha(H) h_alpha.
QMat weyl_reflection(const RootSystem& rs, const QVec& alpha);

/// Matrix of s_alpha acting on the root space: beta -> beta - beta(h_alpha) alpha.
QMat root_reflection(const RootSystem& rs, const QVec& alpha);

/// Closure of a set of simple roots under their own reflections, with the
/// root-space action induced by `form`. Sorted lexicographically.
std::vector<QVec> reflection_closure(const std::vector<QVec>& simple, const QMat& form);

/// Classical root count: A_n n(n+1), B_n/C_n 2n^2, D_n 2n(n-1), E6 72, E7 126,
/// E8 240, F4 48, G2 12.
std::size_t expected_root_count(const LieType& t);

/// Order of the finite Weyl group of an irreducible type (product formula).
unsigned long long weyl_group_order(const LieType& t);

}  // namespace lscat
