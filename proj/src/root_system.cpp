#include "lscat/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lscat {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

Family parse_family(std::string_view s) {
    if (s.size() != 1) throw std::invalid_argument("unknown Lie family '" + std::string(s) + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') throw std::invalid_argument("unknown Lie family '" + std::string(s) + "'");
    return static_cast<Family>(c - 'A');
}

LieType LieType::make(Family family, int rank) {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 1; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                                    family_letter(family));
    return LieType{family, rank};
}

LieType LieType::parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("malformed Lie type '" + std::string(s) + "'");
    const Family f = parse_family(s.substr(0, 1));
    int r = 0;
    for (char c : s.substr(1)) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed Lie type '" + std::string(s) + "'");
        r = r * 10 + (c - '0');
    }
    return make(f, r);
}

std::string LieType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

std::size_t RootSystem::root_index(const QVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("not a root: " + to_string(v));
    return it->second;
}

Rat RootSystem::inner(const QVec& x, const QVec& y) const {
    Rat s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero() && !form(i, j).is_zero()) s += x[i] * form(i, j) * y[j];
    }
    return s;
}

long RootSystem::scaled_inner(const std::vector<int>& x, const std::vector<int>& y) const {
    long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) s += static_cast<long>(x[i]) * scaled_gram[i][j] * y[j];
    }
    return s;
}

QVec RootSystem::simple_coordinates(const QVec& v) const {
    QMat basis(ambient_dim, rank());
    for (std::size_t j = 0; j < rank(); ++j)
        for (std::size_t i = 0; i < ambient_dim; ++i) basis(i, j) = simple_roots[j][i];
    auto x = solve_linear(basis, v);
    if (!x) throw std::invalid_argument("vector not in the span of the simple roots: " + to_string(v));
    return *x;
}

void RootSystem::rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) index_.emplace(roots[i], i);
}

QVec coroot_for_form(const QMat& form, const QVec& alpha) {
    const QVec u = form * alpha;
    const Rat len2 = dot(alpha, u);
    if (len2.sign() <= 0) throw std::invalid_argument("coroot: vector has non-positive length");
    return (Rat(2) / len2) * u;
}

QVec coroot(const RootSystem& rs, const QVec& alpha) {
    if (!rs.is_root(alpha)) throw std::invalid_argument("coroot: not a root: " + to_string(alpha));
    return coroot_for_form(rs.form, alpha);
}

QMat weyl_reflection(const RootSystem& rs, const QVec& alpha) {
    const QVec h = coroot(rs, alpha);
    QMat s = QMat::identity(rs.ambient_dim);
    for (std::size_t i = 0; i < rs.ambient_dim; ++i)
        for (std::size_t j = 0; j < rs.ambient_dim; ++j) s(i, j) -= h[i] * alpha[j];
    return s;
}

QMat root_reflection(const RootSystem& rs, const QVec& alpha) { return weyl_reflection(rs, alpha).transpose(); }

std::vector<QVec> reflection_closure(const std::vector<QVec>& simple, const QMat& form) {
    std::vector<QVec> coroots;
    coroots.reserve(simple.size());
    for (const auto& a : simple) coroots.push_back(coroot_for_form(form, a));

    std::unordered_set<QVec, QVecHash> seen(simple.begin(), simple.end());
    std::deque<QVec> queue(simple.begin(), simple.end());
    while (!queue.empty()) {
        QVec beta = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < simple.size(); ++i) {
            QVec img = beta - dot(beta, coroots[i]) * simple[i];
            if (seen.insert(img).second) queue.push_back(std::move(img));
        }
    }
    std::vector<QVec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t expected_root_count(const LieType& t) {
    const auto n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return 0;
}

unsigned long long weyl_group_order(const LieType& t) {
    auto fact = [](int n) {
        unsigned long long f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
        return f;
    };
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return fact(n + 1);
        case Family::B:
        case Family::C: return (1ULL << n) * fact(n);
        case Family::D: return (1ULL << (n - 1)) * fact(n);
        case Family::E: return n == 6 ? 51840ULL : (n == 7 ? 2903040ULL : 696729600ULL);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

namespace {

QVec eps(std::size_t dim, std::size_t i) { return unit_vector(dim, i); }

struct Classical {
    std::size_t dim;
    std::vector<QVec> simple;
    std::vector<QVec> roots;
    QVec highest;
    Rat scale;  // form = scale * identity
};

Classical classical_data(const LieType& t) {
    const auto n = static_cast<std::size_t>(t.rank);
    Classical c;
    c.scale = Rat(1);
    auto pm_pairs = [&](std::size_t dim, bool with_plus) {
        std::vector<QVec> out;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                if (i == j) continue;
                out.push_back(eps(dim, i) - eps(dim, j));
                if (with_plus && i < j) {
                    out.push_back(eps(dim, i) + eps(dim, j));
                    out.push_back(-(eps(dim, i) + eps(dim, j)));
                }
            }
        return out;
    };
    switch (t.family) {
        case Family::A:
            c.dim = n + 1;
            for (std::size_t i = 0; i < n; ++i) c.simple.push_back(eps(c.dim, i) - eps(c.dim, i + 1));
            c.roots = pm_pairs(c.dim, false);
            c.highest = eps(c.dim, 0) - eps(c.dim, n);
            break;
        case Family::B:
            c.dim = n;
            for (std::size_t i = 0; i + 1 < n; ++i) c.simple.push_back(eps(n, i) - eps(n, i + 1));
            c.simple.push_back(eps(n, n - 1));
            c.roots = pm_pairs(n, true);
            for (std::size_t i = 0; i < n; ++i) {
                c.roots.push_back(eps(n, i));
                c.roots.push_back(-eps(n, i));
            }
            c.highest = eps(n, 0) + eps(n, 1);
            break;
        case Family::C:
            c.dim = n;
            c.scale = Rat(1, 2);
            for (std::size_t i = 0; i + 1 < n; ++i) c.simple.push_back(eps(n, i) - eps(n, i + 1));
            c.simple.push_back(Rat(2) * eps(n, n - 1));
            c.roots = pm_pairs(n, true);
            for (std::size_t i = 0; i < n; ++i) {
                c.roots.push_back(Rat(2) * eps(n, i));
                c.roots.push_back(Rat(-2) * eps(n, i));
            }
            c.highest = Rat(2) * eps(n, 0);
            break;
        case Family::D:
            c.dim = n;
            for (std::size_t i = 0; i + 1 < n; ++i) c.simple.push_back(eps(n, i) - eps(n, i + 1));
            c.simple.push_back(eps(n, n - 2) + eps(n, n - 1));
            c.roots = pm_pairs(n, true);
            c.highest = eps(n, 0) + eps(n, 1);
            break;
        default:
            throw std::logic_error("classical_data: exceptional family");
    }
    return c;
}

// Cartan matrices in the convention a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
// Bourbaki numbering.
std::vector<std::vector<int>> exceptional_cartan(const LieType& t) {
    const auto n = static_cast<std::size_t>(t.rank);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto bond = [&](std::size_t i, std::size_t j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    switch (t.family) {
        case Family::E:
            bond(1, 3);
            bond(3, 4);
            bond(4, 5);
            bond(5, 6);
            bond(2, 4);
            if (n >= 7) bond(6, 7);
            if (n >= 8) bond(7, 8);
            break;
        case Family::F:
            bond(1, 2);
            bond(3, 4);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case Family::G:
            a[0][1] = -3;
            a[1][0] = -1;
            break;
        default:
            throw std::logic_error("exceptional_cartan: classical family");
    }
    return a;
}

// Symmetrized form S_ij = (alpha_i, alpha_j) with long roots of length 2.
QMat form_from_cartan(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    std::vector<Rat> d(n, Rat(0));
    d[0] = Rat(1);
    std::deque<std::size_t> queue{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || a[i][j] == 0 || seen[j]) continue;
            // a_ij d_i = a_ji d_j
            d[j] = Rat(a[i][j]) * d[i] / Rat(a[j][i]);
            seen[j] = true;
            queue.push_back(j);
        }
    }
    const Rat longest = *std::max_element(d.begin(), d.end());
    const Rat scale = Rat(2) / longest;
    QMat s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = Rat(a[i][j]) * d[i] * scale / Rat(2);
    return s;
}

QVec climb_to_highest(const RootSystem& rs) {
    QVec cur = rs.simple_roots.front();
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& s : rs.simple_roots) {
            QVec next = cur + s;
            if (rs.is_root(next)) {
                cur = std::move(next);
                grew = true;
                break;
            }
        }
    }
    return cur;
}

}  // namespace

RootSystem build(const LieType& t) {
    const LieType checked = LieType::make(t.family, t.rank);
    RootSystem rs;
    rs.type = checked;
    QVec table_highest;

    if (checked.is_classical()) {
        Classical c = classical_data(checked);
        rs.ambient_dim = c.dim;
        rs.simple_roots = c.simple;
        rs.roots = c.roots;
        rs.form = c.scale * QMat::identity(c.dim);
        table_highest = c.highest;
    } else {
        const auto cart = exceptional_cartan(checked);
        const auto n = static_cast<std::size_t>(checked.rank);
        rs.ambient_dim = n;
        for (std::size_t i = 0; i < n; ++i) rs.simple_roots.push_back(unit_vector(n, i));
        rs.form = form_from_cartan(cart);
        rs.roots = reflection_closure(rs.simple_roots, rs.form);
    }
    if (rs.roots.size() != expected_root_count(checked))
        throw std::logic_error("build: root count mismatch for " + checked.name());

    // Order: positive roots by height, then their negatives in the same order.
    std::vector<std::pair<QVec, QVec>> pos;  // (simple coords, root)
    rs.rebuild_index();
    // w_j with alpha_i . w_j = delta_ij read off simple coordinates by dot products.
    const std::size_t rank = rs.simple_roots.size();
    QMat rows(rank, rs.ambient_dim);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rs.ambient_dim; ++j) rows(i, j) = rs.simple_roots[i][j];
    std::vector<QVec> functionals;
    for (std::size_t j = 0; j < rank; ++j) {
        auto w = solve_linear(rows, unit_vector(rank, j));
        if (!w) throw std::logic_error("build: simple roots are dependent");
        functionals.push_back(std::move(*w));
    }
    for (const auto& r : rs.roots) {
        QVec coords(rank);
        for (std::size_t j = 0; j < rank; ++j) coords[j] = dot(r, functionals[j]);
        bool nonneg = std::all_of(coords.begin(), coords.end(), [](const Rat& x) { return x.sign() >= 0; });
        if (nonneg) pos.emplace_back(std::move(coords), r);
    }
    // Integer coordinates, sorted by height then reverse lexicographically.
    std::vector<std::pair<std::vector<int>, QVec>> keyed;
    keyed.reserve(pos.size());
    for (auto& [coords, r] : pos) {
        std::vector<int> c(rank + 1, 0);
        for (std::size_t j = 0; j < rank; ++j) {
            if (!coords[j].is_integer()) throw std::logic_error("build: non-integral simple coordinates");
            c[j + 1] = static_cast<int>(coords[j].to_long());
            c[0] += c[j + 1];
        }
        keyed.emplace_back(std::move(c), std::move(r));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first[0] != y.first[0]) return x.first[0] < y.first[0];
        return x.first > y.first;
    });
    rs.positive_roots.clear();
    rs.root_coords.clear();
    for (auto& [c, r] : keyed) {
        rs.positive_roots.push_back(std::move(r));
        rs.root_coords.emplace_back(c.begin() + 1, c.end());
    }
    if (rs.positive_roots.size() * 2 != rs.roots.size())
        throw std::logic_error("build: positive system is not half of the roots");
    rs.roots = rs.positive_roots;
    for (const auto& p : rs.positive_roots) rs.roots.push_back(-p);
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        std::vector<int> neg = rs.root_coords[i];
        for (int& x : neg) x = -x;
        rs.root_coords.push_back(std::move(neg));
    }
    rs.rebuild_index();
    rs.scaled_gram.assign(rank, std::vector<long>(rank, 0));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            const Rat g = Rat(6) * rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
            if (!g.is_integer()) throw std::logic_error("build: form is not in (1/6)Z on simple roots");
            rs.scaled_gram[i][j] = g.to_long();
        }

    for (const auto& s : rs.simple_roots) rs.coroot_basis.push_back(coroot(rs, s));
    const std::size_t n = rs.rank();
    rs.cartan.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rs.cartan[i][j] = static_cast<int>(RootSystem::eval(rs.simple_roots[j], rs.coroot_basis[i]).to_long());

    rs.highest_root = climb_to_highest(rs);
    if (checked.is_classical() && rs.highest_root != table_highest)
        throw std::logic_error("build: highest root disagrees with the classical table for " + checked.name());
    rs.marks = marks(rs);
    return rs;
}

std::vector<int> marks(const RootSystem& rs) {
    const QVec coords = rs.simple_coordinates(rs.highest_root);
    std::vector<int> m;
    m.reserve(coords.size());
    for (const auto& x : coords) {
        const long v = x.to_long();
        if (v <= 0) throw std::logic_error("marks: non-positive coefficient");
        m.push_back(static_cast<int>(v));
    }
    return m;
}

}  // namespace lscat
