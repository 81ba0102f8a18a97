#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfc/core.hpp"

using namespace sfc;

namespace {

const char* kFig4 =
    "[3,2,1} 1 [3,1,2} 2 {3,1,-2] -1 [-2,-1,3} 3 {-2,-1,-3] 1 [-3,1,-2} -2 "
    "{-3,1,2] -1 {2,-3,1]";

SignedPerm perm3(int a, int b, int c) {
    SignedPerm p;
    p.d = 3;
    p.map = {static_cast<int8_t>(a), static_cast<int8_t>(b), static_cast<int8_t>(c), 4};
    return p;
}

CurveDescription random_description(std::mt19937& rng, int d) {
    // Random valid description: random Gray-code-like walk for the cells plus
    // random transforms. Continuity is not required here.
    size_t n = size_t{1} << d;
    std::vector<SignedPerm> perms = all_signed_perms(d);
    CurveDescription desc;
    desc.d = d;
    // random Hamiltonian walk on the hypercube graph by brute force
    std::vector<int> cells;
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int cur) {
        cells.push_back(cur);
        used[cur] = true;
        if (cells.size() == n) return true;
        std::vector<int> nbrs;
        for (int j = 0; j < d; ++j) nbrs.push_back(cur ^ (1 << j));
        std::shuffle(nbrs.begin(), nbrs.end(), rng);
        for (int nb : nbrs) {
            if (used[nb]) continue;
            if (extend(nb)) return true;
        }
        used[cur] = false;
        cells.pop_back();
        return false;
    };
    extend(static_cast<int>(rng() % n));
    for (size_t i = 0; i < n; ++i) {
        OctantTransform t;
        t.perm = perms[rng() % perms.size()];
        t.reversed = rng() % 2;
        desc.transforms.push_back(t);
        if (i + 1 < n) {
            Move mv;
            int diff = cells[i] ^ cells[i + 1];
            for (int j = 0; j < d; ++j)
                if (diff & (1 << j))
                    mv.axes.push_back(static_cast<int8_t>((cells[i + 1] & (1 << j)) ? j + 1 : -(j + 1)));
            desc.moves.push_back(mv);
        }
    }
    return desc;
}

}  // namespace

TEST_CASE("signed permutation algebra") {
    SignedPerm a = perm3(1, 2, -3);
    CHECK(compose(a, a).is_identity());
    SignedPerm s = perm3(2, -1, 3);
    SignedPerm ss = compose(s, s);
    CHECK(ss == perm3(-1, -2, 3));
    CHECK_FALSE(ss.is_identity());
    CHECK(a.det() == -1);
    CHECK(s.det() == 1);
    std::vector<SignedPerm> all = all_signed_perms(3);
    CHECK(all.size() == 48);
    for (const SignedPerm& p : all) {
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(p.det() * p.inverse().det() == 1);
    }
}

TEST_CASE("parse and format round-trip") {
    CurveDescription desc = parse_description(kFig4);
    CHECK(desc.d == 3);
    CHECK(desc.transforms.size() == 8);
    CHECK(desc.moves.size() == 7);
    CHECK(desc.transforms[0].perm == perm3(3, 2, 1));
    CHECK_FALSE(desc.transforms[0].reversed);
    CHECK(desc.transforms[2].reversed);
    CHECK(format_description(desc) == kFig4);
    CHECK(parse_description(format_description(desc)) == desc);

    CurveDescription one = parse_description("[1} 1 [1}");
    CHECK(one.d == 1);
    CHECK(format_description(one) == "[1} 1 [1}");

    CHECK_THROWS_AS(parse_description("[1,2} 1 [1,2}"), NotationError);        // wrong counts
    CHECK_THROWS_AS(parse_description("[1,1} 1 [1,2} 2 [1,2} -1 [1,2}"), NotationError);
    CHECK_THROWS_AS(parse_description("[3,2,1} 1 [3,2"), NotationError);
    CHECK_THROWS_AS(parse_description("[5} 1 [1}"), NotationError);
}

TEST_CASE("parse/format round-trip on random descriptions") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 1000; ++iter) {
        int d = 1 + static_cast<int>(rng() % 4);
        CurveDescription desc = random_description(rng, d);
        std::string text = format_description(desc);
        CHECK(parse_description(text) == desc);
        CHECK(format_description(parse_description(text)) == text);
    }
}

TEST_CASE("base cells of the Figure-4 description") {
    CurveDescription desc = parse_description(kFig4);
    std::vector<Oct> cells = base_cells(desc);
    std::vector<Oct> expected = {
        {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
        {-1, 1, 1},   {1, 1, 1},   {1, -1, 1}, {-1, -1, 1},
    };
    CHECK(cells == expected);

    CurveDescription one = parse_description("[1} 1 [1}");
    std::vector<Oct> c1 = base_cells(one);
    CHECK(c1[0][0] == -1);
    CHECK(c1[1][0] == 1);
}

TEST_CASE("empty move rejected by base_cells but accepted by parser") {
    CurveDescription desc = parse_description("[1,2} . [1,2} 2 [1,2} 1 [1,2}");
    CHECK(desc.moves[0].axes.empty());
    CHECK_THROWS_AS(base_cells(desc), NotationError);
}

TEST_CASE("traversal order matches the recursive oracle") {
    std::mt19937 rng(999);
    CurveDescription fig4 = parse_description(kFig4);
    CHECK(traversal_order(fig4, 2) == traversal_order_reference(fig4, 2));
    CHECK(traversal_order(fig4, 3) == traversal_order_reference(fig4, 3));
    for (int iter = 0; iter < 20; ++iter) {
        int d = 1 + static_cast<int>(rng() % 4);
        CurveDescription desc = random_description(rng, d);
        for (int k = 0; k <= 3; ++k)
            CHECK(traversal_order(desc, k) == traversal_order_reference(desc, k));
    }
}

TEST_CASE("refinement consistency") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 50; ++iter) {
        int d = 1 + static_cast<int>(rng() % 3);
        CurveDescription desc = random_description(rng, d);
        TraversalOrder lo = traversal_order(desc, 2);
        TraversalOrder hi = traversal_order(desc, 3);
        // collapse level-3 cells to level-2 blocks in first-visit order
        std::vector<PackedCell> collapsed;
        std::vector<bool> seen(1 << (8 * 3), false);
        for (PackedCell c : hi.cells) {
            PackedCell parent = 0;
            Vec v = unpack_cell(c, d);
            for (int j = 0; j < d; ++j) parent |= static_cast<PackedCell>(v[j] >> 1) << (8 * j);
            if (!seen[parent]) {
                seen[parent] = true;
                collapsed.push_back(parent);
            }
        }
        CHECK(collapsed == lo.cells);
    }
}

TEST_CASE("1D curve traversal and gates") {
    CurveDescription one = parse_description("[1} 1 [1}");
    TraversalOrder t2 = traversal_order(one, 2);
    for (int i = 0; i < 4; ++i) CHECK(unpack_cell(t2.cells[i], 1)[0] == i);
    CHECK(is_continuous(one));
    CurveGates g = curve_gates(one);
    CHECK(g.entrance[0] == Rational(-3));
    CHECK(g.exit[0] == Rational(3));
}

TEST_CASE("gates of the Figure-4 curve") {
    CurveDescription desc = parse_description(kFig4);
    CurveGates g = curve_gates(desc);
    CHECK(g.entrance[0] == Rational(-3));
    CHECK(g.entrance[1] == Rational(-3));
    CHECK(g.entrance[2] == Rational(-3));
    CHECK(g.exit[0] == Rational(-3));
    CHECK(g.exit[1] == Rational(-3));
    CHECK(g.exit[2] == Rational(3));
    CHECK(is_continuous(desc));
}

TEST_CASE("a Z-order style description is discontinuous") {
    // identity transforms, N-pattern-ish jumps (diagonal moves)
    CurveDescription z = parse_description(
        "[1,2,3} 1 [1,2,3} -1,2 [1,2,3} 1 [1,2,3} -1,-2,3 [1,2,3} 1 [1,2,3} -1,2 "
        "[1,2,3} 1 [1,2,3}");
    CHECK_FALSE(is_continuous(z));
}

TEST_CASE("gate consistency at deeper levels") {
    // The level-k cell containing rank boundary i*8^{k-1} must contain g_i.
    CurveDescription desc = parse_description(kFig4);
    CurveGates g = curve_gates(desc);
    for (int k = 1; k <= 4; ++k) {
        TraversalOrder ord = traversal_order(desc, k);
        uint64_t z = uint64_t{1} << (3 * (k - 1));
        for (int i = 1; i < 8; ++i) {
            // cells on both sides of the boundary must contain the gate point
            for (uint64_t rank : {i * z - 1, i * z}) {
                Vec c = unpack_cell(ord.cells[rank], 3);
                const RatPoint& p = g.octant_in[i];  // the junction gate g_i
                for (int j = 0; j < 3; ++j) {
                    // cell j spans [6c/2^k - 3, 6(c+1)/2^k - 3]
                    Rational lo = Rational(6 * c[j], 1 << k) - Rational(3);
                    Rational hi = Rational(6 * (c[j] + 1), 1 << k) - Rational(3);
                    Rational x = p[j];
                    CHECK((x.num * lo.den >= lo.num * x.den));
                    CHECK((x.num * hi.den <= hi.num * x.den));
                }
            }
        }
    }
}

TEST_CASE("order file round trip and transform_order") {
    CurveDescription desc = parse_description(kFig4);
    TraversalOrder ord = traversal_order(desc, 2);
    TraversalOrder back = read_order(write_order(ord));
    CHECK(back == ord);

    CHECK(transform_order(ord, CubeIsometry::identity(3)) == ord);
    CubeIsometry rev{SignedPerm::identity(3), true};
    TraversalOrder r = transform_order(ord, rev);
    CHECK(r.cells.front() == ord.cells.back());
    CHECK(transform_order(r, rev) == ord);

    std::string corrupt = write_order(ord);
    corrupt.replace(corrupt.find('\n') + 1, 5, "0 0 0");
    corrupt.replace(corrupt.rfind("\n", corrupt.size() - 2) + 1, 5, "0 0 0");
    CHECK_THROWS_AS(read_order(corrupt), NotationError);
}

TEST_CASE("isometry action is a group action on descriptions") {
    std::mt19937 rng(777);
    std::vector<SignedPerm> perms = all_signed_perms(3);
    CurveDescription desc = parse_description(kFig4);
    for (int iter = 0; iter < 200; ++iter) {
        CubeIsometry a{perms[rng() % perms.size()], rng() % 2 == 0};
        CubeIsometry b{perms[rng() % perms.size()], rng() % 2 == 0};
        CHECK(apply(a, apply(b, desc)) == apply(compose(a, b), desc));
        CHECK(apply(invert(a), apply(a, desc)) == desc);
        // action commutes with taking traversal orders
        TraversalOrder direct = traversal_order(apply(a, desc), 2);
        TraversalOrder via = transform_order(traversal_order(desc, 2), a);
        CHECK(direct == via);
    }
}

TEST_CASE("canonicalization is orbit-invariant and idempotent") {
    std::mt19937 rng(31337);
    std::vector<SignedPerm> perms = all_signed_perms(3);
    CurveDescription desc = parse_description(kFig4);
    auto canon = canonicalize_class(desc);
    CHECK(canonicalize_class(canon.second).second == canon.second);
    for (int iter = 0; iter < 1000; ++iter) {
        CubeIsometry g{perms[rng() % perms.size()], rng() % 2 == 0};
        CHECK(canonicalize_class(apply(g, desc)).second == canon.second);
    }
    // Figure 4a vs 4b: moving the open dot in the last octant flips its
    // direction flag while keeping the same second-order approximating curve.
    // The result is a genuinely different class (they differ at level 3).
    TraversalOrder o2 = traversal_order(desc, 2);
    bool found = false;
    for (const SignedPerm& p : perms) {
        CurveDescription fig4b = desc;
        fig4b.transforms.back() = {p, false};
        if (!is_continuous(fig4b)) continue;
        if (!(traversal_order(fig4b, 2) == o2)) continue;
        found = true;
        CHECK_FALSE(traversal_order(fig4b, 3) == traversal_order(desc, 3));
        CHECK_FALSE(canonicalize_class(fig4b).second == canon.second);
    }
    CHECK(found);
}

TEST_CASE("approximating curve") {
    CurveDescription desc = parse_description(kFig4);
    std::vector<Vec> a1 = approximating_curve(desc, 1);
    CHECK(a1.size() == 8);
    CHECK(a1[0] == Vec{-3, -3, -3, 0});
    CHECK(a1[1] == Vec{3, -3, -3, 0});
    std::vector<Vec> a2 = approximating_curve(desc, 2);
    CHECK(a2.size() == 64);
    // first cell center at level 2: cell (0,0,0) -> coordinate -9 (scaled by 4)
    CHECK(a2[0] == Vec{-9, -9, -9, 0});
}
