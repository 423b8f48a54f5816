#include "lscat/cover_verifier.hpp"

#include <chrono>
#include <future>
#include <set>
#include <stdexcept>

#include "lscat/orbit_classifier.hpp"
#include "lscat/realizations/clifford.hpp"
#include "lscat/realizations/grassmannian.hpp"

namespace lscat {

namespace {

struct CheckName {
    Check check;
    const char* name;
};

constexpr CheckName kNames[] = {
    {Check::VertexAlcoves, "vertex_alcoves"},
    {Check::CellWalls, "cell_walls"},
    {Check::CellTransport, "cell_transport"},
    {Check::CellCover, "cell_cover"},
    {Check::RetractionWelldef, "retraction_welldef"},
    {Check::GrassCover, "grass_cover"},
    {Check::SpinDoubleCover, "spin_double_cover"},
    {Check::DimIdentity, "dim_identity"},
};

}  // namespace

std::string to_string(Check c) {
    for (const auto& n : kNames)
        if (n.check == c) return n.name;
    throw std::invalid_argument("to_string: unknown check");
}

Check parse_check(const std::string& name) {
    for (const auto& n : kNames)
        if (name == n.name) return n.check;
    throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<Check> all_checks() {
    std::vector<Check> out;
    for (const auto& n : kNames) out.push_back(n.check);
    return out;
}

bool is_supported(Check c, const LieType& t) {
    switch (c) {
        case Check::GrassCover: return t.family == Family::C && t.rank >= 2;
        case Check::SpinDoubleCover: return t.family == Family::B || t.family == Family::D;
        case Check::DimIdentity: return t.is_classical();
        default: return true;
    }
}

std::vector<Check> supported_checks(const LieType& t) {
    std::vector<Check> out;
    for (Check c : all_checks())
        if (is_supported(c, t)) out.push_back(c);
    return out;
}

void VerifyPlan::validate() const {
    if (samples == 0) throw std::invalid_argument("verify: samples must be positive");
    if (word_length_bound == 0) throw std::invalid_argument("verify: word length bound must be at least 1");
    if (grid_denominator < 1) throw std::invalid_argument("verify: grid denominator must be at least 1");
    if (checks.empty()) throw std::invalid_argument("verify: no checks requested");
    std::set<Check> seen;
    for (Check c : checks) {
        if (!seen.insert(c).second) throw std::invalid_argument("verify: check listed twice: " + to_string(c));
        if (!is_supported(c, lie_type))
            throw std::invalid_argument("verify: check " + to_string(c) + " is not supported for " + lie_type.name());
    }
}

bool VerifyReport::passed() const {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// splitmix64 of the plan seed and an FNV-1a hash of the check name, so each
// check has a stable stream of its own.
std::uint64_t check_seed(std::uint64_t seed, Check c) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char ch : to_string(c)) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

bool is_boundary_draw(std::mt19937_64& rng) { return rng() % 4 == 0; }

Counterexample make_cex(Check c, std::size_t k, std::string detail) {
    Counterexample cex;
    cex.check = c;
    cex.k = k;
    cex.detail = std::move(detail);
    return cex;
}

void fail(CheckResult& r, Counterexample cex) {
    if (!r.passed) return;
    r.passed = false;
    r.counterexample = std::move(cex);
}

// A point of C_k: half the time the image of a point of the closed alcove
// off F_k under an element of the stabiliser of v_k, otherwise a grid point
// near v_k that may or may not lie in C_k.
TorusPoint cell_candidate(const FundamentalAlcove& alcove, const StabilizerGroup& stab, std::size_t k, long den,
                          std::mt19937_64& rng) {
    if (rng() % 2 == 0) {
        TorusPoint p;
        do {
            p = sample_alcove_point(alcove, den, is_boundary_draw(rng), rng);
        } while (alcove.wall_value(k, p).is_zero());
        const auto& w = stab.elements[rng() % stab.elements.size()];
        return w.apply(p);
    }
    TorusPoint u = alcove.vertex(k);
    for (const auto& h : alcove.roots().coroot_basis) u = u + Rat(draw(rng, -den / 2, den / 2), den) * h;
    return u;
}

struct Context {
    FundamentalAlcove alcove;
    std::vector<StabilizerGroup> stabilizers;
    std::vector<AffineIsometry> elements;

    // Stabilizers and the element list are built only for the checks that use them.
    Context(const LieType& t, std::size_t word_length_bound, Check check) : alcove(build(t)) {
        if (check == Check::CellCover || check == Check::DimIdentity) return;
        for (std::size_t k = 0; k <= alcove.rank(); ++k) stabilizers.push_back(alcove.stabilizer(k));
        if (check == Check::CellWalls) return;
        for (auto& [w, len] : alcove.elements_up_to_length(word_length_bound)) elements.push_back(std::move(w));
    }
};

bool vertex_alcoves_element_fails(const FundamentalAlcove& alcove, std::size_t k, const AffineIsometry& w) {
    const bool contains = alcove.alcove_contains(Alcove{w}, alcove.vertex(k));
    const bool fixes = w.apply(alcove.vertex(k)) == alcove.vertex(k);
    return contains != fixes;
}

void run_vertex_alcoves(const Context& ctx, CheckResult& r) {
    const auto& alcove = ctx.alcove;
    for (std::size_t k = 0; k <= alcove.rank(); ++k) {
        const StabilizerGroup& stab = ctx.stabilizers[k];
        const auto expected = weyl_group_order(classify_subsystem(alcove.roots(), vertex_subsystem(alcove.roots(), k)));
        ++r.sampled;
        ++r.instances;
        if (stab.order() != expected) {
            auto cex = make_cex(Check::VertexAlcoves, k, "stabilizer order " + std::to_string(stab.order()) +
                                                       " differs from the Weyl order " + std::to_string(expected));
            cex.variant = 1;
            fail(r, std::move(cex));
        }
        const auto alcoves = alcove.alcoves_at_vertex(k);
        if (alcoves.size() != stab.order()) {
            auto cex = make_cex(Check::VertexAlcoves, k, "alcove count differs from the stabilizer order");
            cex.variant = 2;
            fail(r, std::move(cex));
        }
        for (const auto& a : alcoves)
            if (!alcove.alcove_contains(a, alcove.vertex(k))) {
                auto cex = make_cex(Check::VertexAlcoves, k, "alcove at v_k does not contain v_k");
                cex.element = a.rep;
                cex.variant = 3;
                fail(r, std::move(cex));
            }
        for (const auto& w : ctx.elements) {
            ++r.sampled;
            ++r.instances;
            if (vertex_alcoves_element_fails(alcove, k, w)) {
                auto cex = make_cex(Check::VertexAlcoves, k, "v_k in w(A_0) disagrees with w(v_k) = v_k");
                cex.element = w;
                fail(r, std::move(cex));
            }
        }
    }
}

std::optional<QVec> cell_walls_bad_root(const FundamentalAlcove& alcove, std::size_t k, const TorusPoint& u) {
    for (const auto& a : alcove.roots().positive_roots) {
        const Rat value = RootSystem::eval(a, u);
        if (value.is_integer() && RootSystem::eval(a, alcove.vertex(k)) != value) return a;
    }
    return std::nullopt;
}

void run_cell_walls(const Context& ctx, const VerifyPlan& plan, std::mt19937_64& rng, CheckResult& r) {
    const auto& alcove = ctx.alcove;
    for (std::size_t t = 0; t < plan.samples; ++t) {
        const std::size_t k = t % (alcove.rank() + 1);
        const TorusPoint u = cell_candidate(alcove, ctx.stabilizers[k], k, plan.grid_denominator, rng);
        ++r.sampled;
        if (!alcove.in_cell(k, u)) continue;
        ++r.instances;
        if (const auto bad = cell_walls_bad_root(alcove, k, u)) {
            auto cex = make_cex(Check::CellWalls, k, "wall through a point of C_k misses v_k: root " + to_string(*bad));
            cex.points = {u};
            fail(r, std::move(cex));
        }
    }
}

bool cell_transport_fails(const FundamentalAlcove& alcove, std::size_t k, const TorusPoint& u, const AffineIsometry& w) {
    return alcove.in_cell(k, u) && alcove.in_cell(k, w.apply(u)) && w.apply(alcove.vertex(k)) != alcove.vertex(k);
}

void run_cell_transport(const Context& ctx, const VerifyPlan& plan, std::mt19937_64& rng, CheckResult& r) {
    const auto& alcove = ctx.alcove;
    for (std::size_t t = 0; t < plan.samples; ++t) {
        const std::size_t k = t % (alcove.rank() + 1);
        const TorusPoint u = cell_candidate(alcove, ctx.stabilizers[k], k, plan.grid_denominator, rng);
        if (!alcove.in_cell(k, u)) {
            ++r.sampled;
            continue;
        }
        const TorusPoint& v = alcove.vertex(k);
        for (const auto& w : ctx.elements) {
            ++r.sampled;
            if (!alcove.in_cell(k, w.apply(u))) continue;
            ++r.instances;
            if (w.apply(v) != v) {
                auto cex = make_cex(Check::CellTransport, k, "w maps a point of C_k into C_k but moves v_k");
                cex.points = {u};
                cex.element = w;
                fail(r, std::move(cex));
            }
        }
    }
}

bool cell_cover_fails(const FundamentalAlcove& alcove, const TorusPoint& p) {
    if (!alcove.in_closure(p)) return false;
    for (std::size_t k = 0; k <= alcove.rank(); ++k)
        if (alcove.in_cell(k, p)) return false;
    return true;
}

void run_cell_cover(const Context& ctx, const VerifyPlan& plan, std::mt19937_64& rng, CheckResult& r) {
    const auto& alcove = ctx.alcove;
    std::vector<TorusPoint> points(alcove.vertices().begin(), alcove.vertices().end());
    points.push_back(alcove.barycenter());
    for (std::size_t k = 0; k <= alcove.rank(); ++k) points.push_back(alcove.face_barycenter(k));
    for (std::size_t t = 0; t < plan.samples; ++t)
        points.push_back(sample_alcove_point(alcove, plan.grid_denominator, is_boundary_draw(rng), rng));
    for (const auto& p : points) {
        ++r.sampled;
        ++r.instances;
        if (cell_cover_fails(alcove, p)) {
            auto cex = make_cex(Check::CellCover, 0, "point of the closed alcove lies in no cell");
            cex.points = {p};
            fail(r, std::move(cex));
        }
    }
}

const Rat kSegmentParams[] = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};

// Non-empty when the retraction segments from u and w(u) fail to match at s.
std::optional<std::string> retraction_failure(const FundamentalAlcove& alcove, std::size_t k, const TorusPoint& u,
                                              const AffineIsometry& w, const Rat& s) {
    const TorusPoint& v = alcove.vertex(k);
    if (w.apply(v) != v) return "w(v_k) != v_k";
    const TorusPoint lhs = w.apply(alcove.retract(k, u, s));
    const TorusPoint rhs = alcove.retract(k, w.apply(u), s);
    if (lhs != rhs) return "w((1-s)u + s v_k) != (1-s)w(u) + s v_k";
    return std::nullopt;
}

void retraction_trials(const FundamentalAlcove& alcove, const StabilizerGroup& stab,
                       const std::vector<AffineIsometry>& elements, std::size_t k, std::size_t trials, long den,
                       std::mt19937_64& rng, CheckResult& r) {
    for (std::size_t t = 0; t < trials; ++t) {
        const TorusPoint u = cell_candidate(alcove, stab, k, den, rng);
        ++r.sampled;
        if (!alcove.in_cell(k, u)) continue;
        std::vector<const AffineIsometry*> admissible;
        for (const auto& w : elements)
            if (alcove.in_cell(k, w.apply(u))) admissible.push_back(&w);
        const AffineIsometry& w = *admissible[rng() % admissible.size()];
        ++r.instances;
        for (const Rat& s : kSegmentParams) {
            std::optional<std::string> why;
            try {
                why = retraction_failure(alcove, k, u, w, s);
            } catch (const std::invalid_argument& e) {
                why = e.what();
            }
            if (why) {
                auto cex = make_cex(Check::RetractionWelldef, k, *why);
                cex.points = {u};
                cex.element = w;
                cex.s = s;
                fail(r, std::move(cex));
                break;
            }
        }
    }
}

void run_retraction(const Context& ctx, const VerifyPlan& plan, std::mt19937_64& rng, CheckResult& r) {
    const std::size_t ks = ctx.alcove.rank() + 1;
    for (std::size_t k = 0; k < ks; ++k) {
        const std::size_t trials = plan.samples / ks + (k < plan.samples % ks ? 1 : 0);
        retraction_trials(ctx.alcove, ctx.stabilizers[k], ctx.elements, k, trials, plan.grid_denominator, rng, r);
    }
}

// --- Grassmannian cover -----------------------------------------------------

QuatMatrix embed_fixing(const QuatMatrix& h, std::size_t j) {
    const std::size_t n = h.rows() + 1;
    QuatMatrix out(n, n);
    out(j - 1, j - 1) = QuatRat(Rat(1));
    for (std::size_t a = 0, ha = 0; a < n; ++a) {
        if (a == j - 1) continue;
        for (std::size_t b = 0, hb = 0; b < n; ++b)
            if (b != j - 1) out(a, b) = h(ha, hb++);
        ++ha;
    }
    return out;
}

// Random plane of Gr_k(H^n). A quarter of the draws contain a standard basis
// vector, so they lie in some X_{j,k}.
QuatMatrix grass_sample(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    QuatMatrix rep = random_full_rank(n, k, rng, rng() % 2 == 0 ? 1 : 3);
    if (is_boundary_draw(rng)) {
        const auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(std::min(n, k + 1)) - 1));
        for (std::size_t i = 0; i < n; ++i) rep(i, 0) = QuatRat(Rat(i == j ? 1 : 0));
        if (quat_rank(rep) < k) return grass_sample(n, k, rng);
    }
    return rep;
}

// 0: cover fails; 1: retraction leaves x at s = 0 moved; 2: rank drops; 3: s = 1 misses Y.
std::optional<int> grass_failure(const GrassPoint& x, std::size_t j, const std::optional<Rat>& s) {
    const std::size_t k = x.k();
    if (!s) {
        for (std::size_t i = 1; i <= k + 1 && i <= x.n(); ++i)
            if (!in_X(i, k, x)) return std::nullopt;
        return 0;
    }
    const GrassPoint y = grass_retract(j, k, x, *s);
    if (s->is_zero() && !(y == x)) return 1;
    if (quat_rank(y.rep()) != k) return 2;
    if (*s == Rat(1) && !in_Y(j, k, y)) return 3;
    return std::nullopt;
}

void run_grass_cover(const VerifyPlan& plan, std::mt19937_64& rng, CheckResult& r) {
    const auto n = static_cast<std::size_t>(plan.lie_type.rank);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t t = 0; t < plan.samples; ++t) {
            const GrassPoint x(grass_sample(n, k, rng));
            ++r.sampled;
            ++r.instances;
            auto report = [&](int variant, std::size_t j, std::optional<Rat> s) {
                auto cex = make_cex(Check::GrassCover, k, "Grassmannian cover clause " + std::to_string(variant));
                cex.variant = variant;
                cex.n = n;
                cex.plane_dim = k;
                cex.j = j;
                cex.s = std::move(s);
                cex.matrix = x.rep();
                fail(r, std::move(cex));
            };
            if (auto v = grass_failure(x, 0, std::nullopt)) {
                report(*v, 0, std::nullopt);
                continue;
            }
            for (std::size_t j = 1; j <= k + 1; ++j) {
                if (in_X(j, k, x)) continue;
                for (const Rat& s : kSegmentParams)
                    if (auto v = grass_failure(x, j, s)) report(*v, j, s);
            }
        }
        // Block form of tau_k^{-1}(Y_{j,k}) on witnesses conjugated by Sp(n-1) fixing e_j.
        const std::size_t witnesses = std::max<std::size_t>(1, plan.samples / 50);
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t t = 0; t < witnesses; ++t) {
                const QuatMatrix h = embed_fixing(random_symplectic(n - 1, rng), j);
                const QuatMatrix x = orbit_element(h, k);
                const GrassPoint plane = orbit_tau(x, k);
                ++r.sampled;
                if (!in_Y(j, plane.k(), plane)) continue;
                ++r.instances;
                if (!block_structure_check(x, j, k)) {
                    auto cex = make_cex(Check::GrassCover, k, "orbit element over Y_{j,k} lacks the block form");
                    cex.variant = 4;
                    cex.n = n;
                    cex.j = j;
                    cex.matrix = x;
                    fail(r, std::move(cex));
                }
            }
    }
}

// --- Spin double cover --------------------------------------------------------

QMat expected_vertex_action(Family family, std::size_t n, std::size_t m, std::size_t k) {
    QMat d = QMat::identity(m);
    std::size_t minus = k == 1 ? 0 : 2 * k;
    if (family == Family::D && n >= 3 && k + 1 >= n) minus = m;
    for (std::size_t i = 0; i < minus; ++i) d(i, i) = Rat(-1);
    return d;
}

std::optional<std::string> spin_vertex_failure(Family family, std::size_t n, std::size_t k) {
    const std::size_t m = spin_ambient_dim(family, static_cast<int>(n));
    const CliffordElement g = spin_vertex_element(family, static_cast<int>(n), k);
    if (!is_spin(g)) return "exp v_k is not in Spin(m)";
    if (vector_action(g) != expected_vertex_action(family, n, m, k)) return "A(exp v_k) has the wrong block form";
    return std::nullopt;
}

std::optional<std::string> spin_fiber_failure(Family family, std::size_t n, std::size_t k) {
    const auto fib = double_point_fiber(family, static_cast<int>(n), k);
    if (fib.moved_element != -fib.element) return "exp w(v_k) != -exp v_k";
    if (fib.element == -fib.element) return "exp v_k = -exp v_k";
    if (vector_action(fib.element) != vector_action(fib.moved_element)) return "A separates the fibre";
    return std::nullopt;
}

void run_spin(const VerifyPlan& plan, std::mt19937_64& rng, CheckResult& r) {
    const Family family = plan.lie_type.family;
    const auto n = static_cast<std::size_t>(plan.lie_type.rank);
    const std::size_t m = spin_ambient_dim(family, plan.lie_type.rank);
    auto report = [&](int variant, std::size_t k, const std::string& why, std::optional<Rat> s = std::nullopt) {
        auto cex = make_cex(Check::SpinDoubleCover, k, why);
        cex.variant = variant;
        cex.n = n;
        cex.s = std::move(s);
        fail(r, std::move(cex));
    };
    for (std::size_t k = 0; k <= n; ++k) {
        ++r.sampled;
        ++r.instances;
        if (auto why = spin_vertex_failure(family, n, k)) report(0, k, *why);
    }
    // exp_SO = A o exp where the half-angle is a quarter turn (exact).
    for (std::size_t k = 1; 2 * k <= m; ++k)
        for (long halves = -4; halves <= 4; ++halves) {
            const Rat t(halves, 2);
            TorusPoint h(k, Rat(0));
            h[k - 1] = t;
            ++r.sampled;
            ++r.instances;
            if (vector_action(spin_exp_E(t, k, m)) != so_exp_torus(h, m)) report(1, k, "exp_SO != A o exp", t);
        }
    // The same relation at rational points of the circle.
    for (std::size_t t = 0; t < plan.samples; ++t) {
        const auto [c, s] = random_circle_point(rng);
        const auto k = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(m / 2)));
        ++r.sampled;
        ++r.instances;
        if (vector_action(spin_rotor(c, s, k, m)) != so_block_rotation(m, k, c * c - s * s, Rat(2) * c * s)) {
            auto cex = make_cex(Check::SpinDoubleCover, k, "rotor does not cover its block rotation");
            cex.variant = 2;
            cex.n = n;
            cex.points = {{c, s}};
            fail(r, std::move(cex));
        }
    }
    const std::size_t top = family == Family::B ? n : n - 2;
    for (std::size_t k = 2; k <= top; ++k) {
        ++r.sampled;
        ++r.instances;
        if (auto why = spin_fiber_failure(family, n, k)) report(3, k, *why);
    }
}

// --- dimension identities -----------------------------------------------------

std::size_t nonintegral_roots(const FundamentalAlcove& alcove, std::size_t k) {
    std::size_t count = 0;
    for (const auto& a : alcove.roots().roots)
        if (!RootSystem::eval(a, alcove.vertex(k)).is_integer()) ++count;
    return count;
}

std::size_t expected_orbit_dim(const LieType& t, std::size_t k) {
    const auto n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case Family::C: return (k == 0 || k == n) ? 0 : 4 * k * (n - k);
        case Family::B: return k <= 1 ? 0 : 2 * k * (2 * n + 1 - 2 * k);
        case Family::D: return (k <= 1 || k + 1 >= n) ? 0 : 2 * k * (2 * n - 2 * k);
        default: return 0;
    }
}

std::optional<std::string> dim_failure(const FundamentalAlcove& alcove, std::size_t k) {
    const LieType& t = alcove.roots().type;
    const std::size_t count = nonintegral_roots(alcove, k);
    const std::size_t expected = expected_orbit_dim(t, k);
    if (count != expected)
        return "|roots| - |Sigma| = " + std::to_string(count) + ", expected " + std::to_string(expected);
    const auto model = identify_orbit(alcove.roots(), k).manifold_dim();
    if (model && static_cast<std::size_t>(*model) != count)
        return "identified model has dimension " + std::to_string(*model);
    return std::nullopt;
}

void run_dim(const Context& ctx, CheckResult& r) {
    for (std::size_t k = 0; k <= ctx.alcove.rank(); ++k) {
        ++r.sampled;
        ++r.instances;
        if (auto why = dim_failure(ctx.alcove, k)) fail(r, make_cex(Check::DimIdentity, k, *why));
    }
}

bool needs_context(Check c) { return c != Check::GrassCover && c != Check::SpinDoubleCover; }

}  // namespace

TorusPoint sample_alcove_point(const FundamentalAlcove& alcove, long denominator, bool on_boundary,
                               std::mt19937_64& rng) {
    const std::size_t parts = alcove.rank() + 1;
    std::vector<long> weight(parts, 0);
    const std::size_t skip = on_boundary ? rng() % parts : parts;
    for (long unit = 0; unit < denominator; ++unit) {
        std::size_t slot = rng() % parts;
        if (slot == skip) slot = (slot + 1) % parts;
        ++weight[slot];
    }
    if (on_boundary && parts == 1) weight[0] = denominator;
    TorusPoint p(alcove.dim(), Rat(0));
    for (std::size_t j = 0; j < parts; ++j)
        if (weight[j] != 0) p = p + Rat(weight[j], denominator) * alcove.vertex(j);
    return p;
}

CheckResult run_check(const VerifyPlan& plan, Check check) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.check = check;
    std::mt19937_64 rng(check_seed(plan.seed, check));
    std::optional<Context> ctx;
    if (needs_context(check)) ctx.emplace(plan.lie_type, plan.word_length_bound, check);
    switch (check) {
        case Check::VertexAlcoves: run_vertex_alcoves(*ctx, r); break;
        case Check::CellWalls: run_cell_walls(*ctx, plan, rng, r); break;
        case Check::CellTransport: run_cell_transport(*ctx, plan, rng, r); break;
        case Check::CellCover: run_cell_cover(*ctx, plan, rng, r); break;
        case Check::RetractionWelldef: run_retraction(*ctx, plan, rng, r); break;
        case Check::GrassCover: run_grass_cover(plan, rng, r); break;
        case Check::SpinDoubleCover: run_spin(plan, rng, r); break;
        case Check::DimIdentity: run_dim(*ctx, r); break;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerifyReport run(const VerifyPlan& plan) {
    plan.validate();
    std::vector<std::future<CheckResult>> jobs;
    jobs.reserve(plan.checks.size());
    for (Check c : plan.checks) jobs.push_back(std::async(std::launch::async, [&plan, c] { return run_check(plan, c); }));
    VerifyReport report{plan, {}};
    for (auto& j : jobs) report.results.push_back(j.get());
    return report;
}

CheckResult retraction_welldef_check(const RootSystem& rs, std::size_t k, std::size_t trials, std::uint64_t seed,
                                std::size_t word_length_bound, long grid_denominator) {
    if (word_length_bound == 0 || grid_denominator < 1)
        throw std::invalid_argument("retraction_welldef_check: bad sampling parameters");
    const auto start = std::chrono::steady_clock::now();
    const FundamentalAlcove alcove(rs);
    if (k > alcove.rank()) throw std::out_of_range("retraction_welldef_check: k out of range");
    std::vector<AffineIsometry> elements;
    for (auto& [w, len] : alcove.elements_up_to_length(word_length_bound)) elements.push_back(std::move(w));
    CheckResult r;
    r.check = Check::RetractionWelldef;
    std::mt19937_64 rng(check_seed(seed, Check::RetractionWelldef) + k);
    retraction_trials(alcove, alcove.stabilizer(k), elements, k, trials, grid_denominator, rng, r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool reproduce(const LieType& t, const Counterexample& c) {
    try {
        switch (c.check) {
            case Check::VertexAlcoves: {
                const FundamentalAlcove alcove(build(t));
                if (c.variant == 0) return c.element && vertex_alcoves_element_fails(alcove, c.k, *c.element);
                if (c.variant == 3) return c.element && !alcove.alcove_contains(Alcove{*c.element}, alcove.vertex(c.k));
                const auto order = alcove.stabilizer(c.k).order();
                if (c.variant == 1)
                    return order != weyl_group_order(classify_subsystem(alcove.roots(), vertex_subsystem(alcove.roots(), c.k)));
                return alcove.alcoves_at_vertex(c.k).size() != order;
            }
            case Check::CellWalls: {
                const FundamentalAlcove alcove(build(t));
                return c.points.size() == 1 && alcove.in_cell(c.k, c.points[0]) &&
                       cell_walls_bad_root(alcove, c.k, c.points[0]).has_value();
            }
            case Check::CellTransport: {
                const FundamentalAlcove alcove(build(t));
                return c.points.size() == 1 && c.element && cell_transport_fails(alcove, c.k, c.points[0], *c.element);
            }
            case Check::CellCover: {
                const FundamentalAlcove alcove(build(t));
                return c.points.size() == 1 && cell_cover_fails(alcove, c.points[0]);
            }
            case Check::RetractionWelldef: {
                const FundamentalAlcove alcove(build(t));
                if (c.points.size() != 1 || !c.element || !c.s) return false;
                const TorusPoint& u = c.points[0];
                if (!alcove.in_cell(c.k, u) || !alcove.in_cell(c.k, c.element->apply(u))) return false;
                try {
                    return retraction_failure(alcove, c.k, u, *c.element, *c.s).has_value();
                } catch (const std::invalid_argument&) {
                    return true;
                }
            }
            case Check::GrassCover: {
                if (c.variant == 4) return in_Y(c.j, orbit_tau(c.matrix, c.k).k(), orbit_tau(c.matrix, c.k)) &&
                                           !block_structure_check(c.matrix, c.j, c.k);
                const GrassPoint x(c.matrix);
                if (c.variant == 0) return grass_failure(x, 0, std::nullopt).has_value();
                if (!c.s || in_X(c.j, x.k(), x)) return false;
                return grass_failure(x, c.j, c.s) == c.variant;
            }
            case Check::SpinDoubleCover: {
                const Family f = t.family;
                const std::size_t m = spin_ambient_dim(f, t.rank);
                const auto n = static_cast<std::size_t>(t.rank);
                if (c.variant == 0) return spin_vertex_failure(f, n, c.k).has_value();
                if (c.variant == 3) return spin_fiber_failure(f, n, c.k).has_value();
                if (c.variant == 1) {
                    if (!c.s) return false;
                    TorusPoint h(c.k, Rat(0));
                    h[c.k - 1] = *c.s;
                    return vector_action(spin_exp_E(*c.s, c.k, m)) != so_exp_torus(h, m);
                }
                if (c.points.size() != 1 || c.points[0].size() != 2) return false;
                const Rat& cs = c.points[0][0];
                const Rat& sn = c.points[0][1];
                return vector_action(spin_rotor(cs, sn, c.k, m)) != so_block_rotation(m, c.k, cs * cs - sn * sn, Rat(2) * cs * sn);
            }
            case Check::DimIdentity: return dim_failure(FundamentalAlcove(build(t)), c.k).has_value();
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

}  // namespace lscat
