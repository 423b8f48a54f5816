#include "lscat/affine_alcove.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace lscat {

AffineIsometry AffineIsometry::identity(std::size_t dim) { return {QMat::identity(dim), QVec(dim, Rat(0))}; }

TorusPoint AffineIsometry::apply(const TorusPoint& x) const { return linear * x + translation; }

AffineIsometry AffineIsometry::compose(const AffineIsometry& rhs) const {
    return {linear * rhs.linear, linear * rhs.translation + translation};
}

AffineIsometry AffineIsometry::inverse() const {
    auto inv = lscat::inverse(linear);
    if (!inv) throw std::logic_error("AffineIsometry: singular linear part");
    return {*inv, -(*inv * translation)};
}

bool AffineIsometry::is_identity() const { return linear.is_identity() && is_zero_vec(translation); }

bool StabilizerGroup::contains(const AffineIsometry& g) const {
    for (const auto& e : elements)
        if (e == g) return true;
    return false;
}

std::vector<AffineIsometry> group_closure(const std::vector<AffineIsometry>& generators, std::size_t dim,
                                          std::size_t cap) {
    std::vector<AffineIsometry> out{AffineIsometry::identity(dim)};
    std::unordered_set<AffineIsometry, AffineIsometryHash> seen{out.front()};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : generators) {
            AffineIsometry next = out[head].compose(g);
            if (seen.contains(next)) continue;
            if (out.size() >= cap)
                throw std::length_error("group_closure: more than " + std::to_string(cap) + " elements");
            seen.insert(next);
            out.push_back(std::move(next));
        }
    }
    return out;
}

FundamentalAlcove::FundamentalAlcove(RootSystem rs) : rs_(std::move(rs)) {
    const std::size_t n = rs_.rank();
    const std::size_t dim = rs_.ambient_dim;

    // v_k = sum_i c_i h_i with alpha_j(v_k) = delta_jk / m_k, which also
    // satisfies alpha_0(v_k) = 1 and keeps v_k inside the torus hyperplane.
    QMat system(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) system(j, i) = RootSystem::eval(rs_.simple_roots[j], rs_.coroot_basis[i]);
    vertices_.push_back(QVec(dim, Rat(0)));
    for (std::size_t k = 0; k < n; ++k) {
        QVec rhs(n, Rat(0));
        rhs[k] = Rat(1, rs_.marks[k]);
        auto c = solve_linear(system, rhs);
        if (!c) throw std::logic_error("FundamentalAlcove: vertex system is singular");
        QVec v(dim, Rat(0));
        for (std::size_t i = 0; i < n; ++i) v = v + (*c)[i] * rs_.coroot_basis[i];
        vertices_.push_back(std::move(v));
    }

    const QVec h0 = coroot(rs_, rs_.highest_root);
    walls_.push_back({weyl_reflection(rs_, rs_.highest_root), h0});
    for (std::size_t k = 0; k < n; ++k)
        walls_.push_back({weyl_reflection(rs_, rs_.simple_roots[k]), QVec(dim, Rat(0))});
}

void FundamentalAlcove::check_index(std::size_t k) const {
    if (k > rank()) throw std::out_of_range("vertex/face index " + std::to_string(k) + " out of range");
}

TorusPoint FundamentalAlcove::barycenter() const {
    QVec b(dim(), Rat(0));
    for (const auto& v : vertices_) b = b + v;
    return Rat(1, static_cast<long>(vertices_.size())) * b;
}

TorusPoint FundamentalAlcove::face_barycenter(std::size_t k) const {
    check_index(k);
    QVec b(dim(), Rat(0));
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != k) b = b + vertices_[j];
    return Rat(1, static_cast<long>(rank())) * b;
}

Rat FundamentalAlcove::wall_value(std::size_t k, const TorusPoint& h) const {
    check_index(k);
    if (k == 0) return Rat(1) - RootSystem::eval(rs_.highest_root, h);
    return RootSystem::eval(rs_.simple_roots[k - 1], h);
}

bool FundamentalAlcove::in_closure(const TorusPoint& h) const {
    for (std::size_t k = 0; k <= rank(); ++k)
        if (wall_value(k, h).sign() < 0) return false;
    return true;
}

bool FundamentalAlcove::on_face(const TorusPoint& h, std::size_t k) const {
    return in_closure(h) && wall_value(k, h).is_zero();
}

bool FundamentalAlcove::in_torus(const TorusPoint& h) const {
    if (h.size() != dim()) return false;
    if (rs_.type.family != Family::A) return true;
    Rat s;
    for (const auto& x : h) s += x;
    return s.is_zero();
}

Reduction FundamentalAlcove::reduce(const TorusPoint& u) const {
    if (u.size() != dim()) throw std::invalid_argument("reduce: point has wrong dimension");
    Reduction r{u, AffineIsometry::identity(dim()), 0};
    constexpr std::size_t kMaxSteps = 1'000'000;
    for (;;) {
        std::size_t violated = rank() + 1;
        for (std::size_t k = 0; k <= rank(); ++k)
            if (wall_value(k, r.point).sign() < 0) {
                violated = k;
                break;
            }
        if (violated > rank()) return r;
        r.point = walls_[violated].apply(r.point);
        r.w = r.w.compose(walls_[violated]);
        if (++r.steps > kMaxSteps) throw std::runtime_error("reduce: no convergence");
    }
}

StabilizerGroup FundamentalAlcove::stabilizer(std::size_t k, std::size_t cap) const {
    check_index(k);
    StabilizerGroup g;
    std::vector<AffineIsometry> gens;
    for (std::size_t j = 0; j <= rank(); ++j)
        if (j != k) {
            g.generators.push_back(j);
            gens.push_back(walls_[j]);
        }
    g.elements = group_closure(gens, dim(), cap);
    return g;
}

StabilizerGroup FundamentalAlcove::point_stabilizer(const TorusPoint& p, std::size_t cap) const {
    if (!in_closure(p)) throw std::invalid_argument("point_stabilizer: point outside the closed alcove");
    StabilizerGroup g;
    std::vector<AffineIsometry> gens;
    for (std::size_t j = 0; j <= rank(); ++j)
        if (wall_value(j, p).is_zero()) {
            g.generators.push_back(j);
            gens.push_back(walls_[j]);
        }
    g.elements = group_closure(gens, dim(), cap);
    return g;
}

std::vector<Alcove> FundamentalAlcove::alcoves_at_vertex(std::size_t k, std::size_t cap) const {
    std::vector<Alcove> out;
    for (auto& w : stabilizer(k, cap).elements) out.push_back({std::move(w)});
    return out;
}

bool FundamentalAlcove::alcove_contains(const Alcove& a, const TorusPoint& p) const {
    return in_closure(a.rep.inverse().apply(p));
}

bool FundamentalAlcove::in_cell(std::size_t k, const TorusPoint& u) const {
    check_index(k);
    const Reduction r = reduce(u);
    if (wall_value(k, r.point).is_zero()) return false;
    // Any w' with w'^{-1} u in the closed alcove lies in r.w * Stab(point).
    const TorusPoint target = r.w.inverse().apply(vertices_[k]);
    for (const auto& s : point_stabilizer(r.point).elements)
        if (s.apply(vertices_[k]) == target) return true;
    return false;
}

TorusPoint FundamentalAlcove::retract(std::size_t k, const TorusPoint& u, const Rat& s) const {
    if (s.sign() < 0 || s > Rat(1)) throw std::invalid_argument("retract: s must lie in [0, 1]");
    if (!in_cell(k, u)) throw std::invalid_argument("retract: point is not in the cell C_" + std::to_string(k));
    return (Rat(1) - s) * u + s * vertices_[k];
}

std::vector<std::pair<AffineIsometry, std::size_t>> FundamentalAlcove::elements_up_to_length(std::size_t max_length,
                                                                                             std::size_t cap) const {
    std::vector<std::pair<AffineIsometry, std::size_t>> out{{AffineIsometry::identity(dim()), 0}};
    std::unordered_set<AffineIsometry, AffineIsometryHash> seen{out.front().first};
    for (std::size_t head = 0; head < out.size(); ++head) {
        const std::size_t len = out[head].second;
        if (len == max_length) continue;
        for (const auto& r : walls_) {
            AffineIsometry next = out[head].first.compose(r);
            if (seen.contains(next)) continue;
            if (out.size() >= cap)
                throw std::length_error("elements_up_to_length: more than " + std::to_string(cap) + " elements");
            seen.insert(next);
            out.emplace_back(std::move(next), len + 1);
        }
    }
    return out;
}

VertexSet vertices(const RootSystem& rs) { return {FundamentalAlcove(rs).vertices()}; }

AffineIsometry wall_reflection(const RootSystem& rs, std::size_t k) { return FundamentalAlcove(rs).wall_reflection(k); }

Reduction reduce_to_alcove(const RootSystem& rs, const TorusPoint& u) { return FundamentalAlcove(rs).reduce(u); }

StabilizerGroup stabilizer(const RootSystem& rs, std::size_t k) { return FundamentalAlcove(rs).stabilizer(k); }

std::vector<Alcove> alcoves_at_vertex(const RootSystem& rs, std::size_t k) {
    return FundamentalAlcove(rs).alcoves_at_vertex(k);
}

StabilizerGroup point_stabilizer(const RootSystem& rs, const TorusPoint& p) {
    return FundamentalAlcove(rs).point_stabilizer(p);
}

bool in_cell(const RootSystem& rs, std::size_t k, const TorusPoint& u) { return FundamentalAlcove(rs).in_cell(k, u); }

TorusPoint retract_torus(const RootSystem& rs, std::size_t k, const TorusPoint& u, const Rat& s) {
    return FundamentalAlcove(rs).retract(k, u, s);
}

}  // namespace lscat
