#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "lscat/root_system.hpp"

using namespace lscat;

namespace {

// Independent oracle: reflection closure using s_a(b) = b - 2 (a,b)/(a,a) a.
std::set<QVec> closure_oracle(const RootSystem& rs) {
    auto ip = [&](const QVec& x, const QVec& y) {
        Rat s;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * rs.form(i, j) * y[j];
        return s;
    };
    std::set<QVec> seen(rs.simple_roots.begin(), rs.simple_roots.end());
    std::deque<QVec> q(rs.simple_roots.begin(), rs.simple_roots.end());
    while (!q.empty()) {
        QVec b = q.front();
        q.pop_front();
        for (const auto& a : rs.simple_roots) {
            const Rat c = Rat(2) * ip(a, b) / ip(a, a);
            QVec img = b;
            for (std::size_t i = 0; i < img.size(); ++i) img[i] -= c * a[i];
            if (seen.insert(img).second) q.push_back(img);
        }
    }
    return seen;
}

// Independent oracle: BFS closure of the simple reflection matrices.
std::size_t weyl_order_oracle(const RootSystem& rs) {
    std::vector<QMat> gens;
    for (const auto& a : rs.simple_roots) gens.push_back(weyl_reflection(rs, a));
    std::set<std::vector<Rat>> seen;
    std::deque<QMat> q{QMat::identity(rs.ambient_dim)};
    seen.insert(q.front().data());
    while (!q.empty()) {
        QMat w = q.front();
        q.pop_front();
        for (const auto& s : gens) {
            QMat ws = w * s;
            if (seen.insert(ws.data()).second) q.push_back(ws);
        }
    }
    return seen.size();
}

std::vector<LieType> all_types_up_to(int max_rank) {
    std::vector<LieType> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back(LieType::make(Family::A, n));
        if (n >= 2) out.push_back(LieType::make(Family::B, n));
        out.push_back(LieType::make(Family::C, n));
        if (n >= 3) out.push_back(LieType::make(Family::D, n));
    }
    for (int n : {6, 7, 8})
        if (n <= max_rank) out.push_back(LieType::make(Family::E, n));
    if (max_rank >= 4) out.push_back(LieType::make(Family::F, 4));
    if (max_rank >= 2) out.push_back(LieType::make(Family::G, 2));
    return out;
}

QVec e(std::size_t dim, std::size_t i) { return unit_vector(dim, i); }

}  // namespace

TEST_CASE("LieType validation") {
    CHECK_THROWS_AS(LieType::make(Family::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(LieType::make(Family::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(LieType::make(Family::E, 9), std::invalid_argument);
    CHECK_THROWS_AS(LieType::make(Family::F, 3), std::invalid_argument);
    CHECK_THROWS_AS(LieType::make(Family::A, 0), std::invalid_argument);
    CHECK(LieType::parse("e8").name() == "E8");
    CHECK(LieType::make(Family::C, 1).name() == "C1");
    CHECK_THROWS_AS(LieType::parse("Q3"), std::invalid_argument);
}

TEST_CASE("C2 root datum") {
    const RootSystem rs = build(LieType::make(Family::C, 2));
    CHECK(rs.highest_root == QVec{2, 0});
    REQUIRE(rs.simple_roots.size() == 2);
    CHECK(rs.simple_roots[0] == QVec{1, -1});
    CHECK(rs.simple_roots[1] == QVec{0, 2});
    CHECK(rs.roots.size() == 8);
    CHECK(closure_oracle(rs).size() == 8);
    CHECK(rs.marks == std::vector<int>{2, 1});
    CHECK(rs.cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
}

TEST_CASE("A1 root datum") {
    const RootSystem rs = build(LieType::make(Family::A, 1));
    CHECK(rs.roots.size() == 2);
    CHECK(rs.is_root(QVec{1, -1}));
    CHECK(rs.is_root(QVec{-1, 1}));
    CHECK(rs.marks == std::vector<int>{1});
}

TEST_CASE("every root system equals the reflection closure of its simple roots") {
    for (const auto& t : all_types_up_to(8)) {
        CAPTURE(t.name());
        const RootSystem rs = build(t);
        const std::set<QVec> built(rs.roots.begin(), rs.roots.end());
        CHECK(built == closure_oracle(rs));
        CHECK(rs.roots.size() == expected_root_count(t));
        CHECK(rs.positive_roots.size() * 2 == rs.roots.size());
    }
}

TEST_CASE("marks") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(build(LieType::make(Family::A, n)).marks == std::vector<int>(static_cast<std::size_t>(n), 1));
        std::vector<int> c(static_cast<std::size_t>(n), 2);
        c.back() = 1;
        CHECK(build(LieType::make(Family::C, n)).marks == c);
    }
    CHECK(build(LieType::make(Family::B, 4)).marks == std::vector<int>{1, 2, 2, 2});
    CHECK(build(LieType::make(Family::D, 5)).marks == std::vector<int>{1, 2, 2, 1, 1});
    CHECK(build(LieType::make(Family::E, 6)).marks == std::vector<int>{1, 2, 2, 3, 2, 1});
    CHECK(build(LieType::make(Family::E, 7)).marks == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
    const auto e8 = build(LieType::make(Family::E, 8)).marks;
    CHECK(e8 == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(*std::max_element(e8.begin(), e8.end()) == 6);
    CHECK(build(LieType::make(Family::F, 4)).marks == std::vector<int>{2, 3, 4, 2});
    CHECK(build(LieType::make(Family::G, 2)).marks == std::vector<int>{3, 2});

    for (const auto& t : all_types_up_to(8)) {
        const RootSystem rs = build(t);
        QVec sum(rs.ambient_dim, Rat(0));
        for (std::size_t j = 0; j < rs.rank(); ++j) sum = sum + Rat(rs.marks[j]) * rs.simple_roots[j];
        CHECK(sum == rs.highest_root);
        if (t.is_classical())
            for (int m : rs.marks) CHECK((m == 1 || m == 2));
    }
}

TEST_CASE("highest root is dominant and maximal") {
    for (const auto& t : all_types_up_to(8)) {
        CAPTURE(t.name());
        const RootSystem rs = build(t);
        for (const auto& a : rs.simple_roots) {
            CHECK(rs.inner(rs.highest_root, a) >= Rat(0));
            CHECK_FALSE(rs.is_root(rs.highest_root + a));
        }
        CHECK(rs.is_long(rs.highest_root));
    }
}

TEST_CASE("coroots") {
    const RootSystem c2 = build(LieType::make(Family::C, 2));
    CHECK(coroot(c2, QVec{2, 0}) == QVec{1, 0});
    CHECK(coroot(c2, QVec{1, -1}) == QVec{1, -1});
    CHECK_THROWS_AS(coroot(c2, QVec{1, 0}), std::invalid_argument);

    for (const auto& t : all_types_up_to(6)) {
        CAPTURE(t.name());
        const RootSystem rs = build(t);
        QMat basis(rs.ambient_dim, rs.rank());
        for (std::size_t j = 0; j < rs.rank(); ++j)
            for (std::size_t i = 0; i < rs.ambient_dim; ++i) basis(i, j) = rs.coroot_basis[j][i];
        const QMat scaled = Rat(7, 3) * rs.form;
        for (const auto& a : rs.roots) {
            const QVec h = coroot(rs, a);
            CHECK(RootSystem::eval(a, h) == Rat(2));
            // length-2 roots are self-dual through the form
            if (rs.inner(a, a) == Rat(2)) CHECK(h == rs.form * a);
            CHECK(coroot_for_form(scaled, a) == h);
            auto coeffs = solve_linear(basis, h);
            REQUIRE(coeffs);
            for (const auto& c : *coeffs) CHECK(c.is_integer());
        }
    }
}

TEST_CASE("weyl reflections") {
    const RootSystem a2 = build(LieType::make(Family::A, 2));
    const QMat s = weyl_reflection(a2, QVec{1, -1, 0});
    CHECK(s * e(3, 0) == e(3, 1));
    CHECK(s * e(3, 1) == e(3, 0));
    CHECK(s * e(3, 2) == e(3, 2));
    CHECK_THROWS_AS(weyl_reflection(a2, QVec{1, 1, 0}), std::invalid_argument);

    const RootSystem c2 = build(LieType::make(Family::C, 2));
    const QMat cox = weyl_reflection(c2, c2.simple_roots[0]) * weyl_reflection(c2, c2.simple_roots[1]);
    QMat p = cox;
    int order = 1;
    while (!p.is_identity()) {
        p = p * cox;
        ++order;
    }
    CHECK(order == 4);

    for (const auto& t : all_types_up_to(5)) {
        CAPTURE(t.name());
        const RootSystem rs = build(t);
        for (const auto& a : rs.positive_roots) {
            const QMat w = weyl_reflection(rs, a);
            CHECK((w * w).is_identity());
            const QVec h = coroot(rs, a);
            CHECK(w * h == -h);
            const QMat r = root_reflection(rs, a);
            CHECK(r * a == -a);
            for (const auto& b : rs.roots) CHECK(rs.is_root(r * b));
        }
    }
}

TEST_CASE("weyl group orders by BFS") {
    CHECK(weyl_order_oracle(build(LieType::make(Family::A, 2))) == 6);
    CHECK(weyl_order_oracle(build(LieType::make(Family::C, 2))) == 8);
    CHECK(weyl_order_oracle(build(LieType::make(Family::G, 2))) == 12);
    CHECK(weyl_order_oracle(build(LieType::make(Family::B, 3))) == weyl_group_order(LieType::make(Family::B, 3)));
    CHECK(weyl_order_oracle(build(LieType::make(Family::D, 4))) == weyl_group_order(LieType::make(Family::D, 4)));
}
