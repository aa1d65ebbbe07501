#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "molp/projective.hpp"

using namespace molp;

namespace {

Vec rv(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

HPoint hp(std::initializer_list<long> xs) { return HPoint(rv(xs)); }
HHalfspace hs(std::initializer_list<long> xs) { return HHalfspace(rv(xs)); }

// deterministic random rationals with small numerators/denominators
struct RatGen {
    std::mt19937 rng{20240817};
    Rat rat(long lo = -6, long hi = 6) {
        std::uniform_int_distribution<long> num(lo, hi);
        std::uniform_int_distribution<long> den(1, 5);
        Rat q(num(rng), den(rng));
        q.canonicalize();
        return q;
    }
    Rat positive() {
        std::uniform_int_distribution<long> num(1, 9);
        std::uniform_int_distribution<long> den(1, 5);
        Rat q(num(rng), den(rng));
        q.canonicalize();
        return q;
    }
    Vec vec(std::size_t d) {
        Vec v;
        for (std::size_t i = 0; i < d; ++i) v.push_back(rat());
        return v;
    }
};

}  // namespace

TEST_CASE("canonicalize scales to coprime integers") {
    CHECK(canonicalize(rv({4, 6, 2})) == hp({2, 3, 1}));
    CHECK(canonicalize({Rat(1), Rat(3, 2), Rat(1, 2)}) == hp({2, 3, 1}));
    CHECK(canonicalize(rv({-2, -3, -1})) == hp({-2, -3, -1}));
    CHECK(canonicalize(rv({-2, -3, -1})) != hp({2, 3, 1}));
    CHECK_THROWS_AS(canonicalize(rv({0, 0, 0})), InvalidCoordinates);
}

TEST_CASE("canonical form quotients exactly the positive scalings") {
    RatGen gen;
    for (int trial = 0; trial < 200; ++trial) {
        Vec x = gen.vec(4);
        bool all_zero = true;
        for (const Rat& q : x)
            if (q != 0) all_zero = false;
        if (all_zero) continue;
        Rat lambda = gen.positive();
        Vec scaled = x;
        for (Rat& q : scaled) q *= lambda;
        CHECK(canonicalize(scaled) == canonicalize(x));
        for (Rat& q : scaled) q = -q;
        CHECK(canonicalize(scaled) == opposite(canonicalize(x)));
    }
}

TEST_CASE("classification by sign of last coordinate") {
    CHECK(classify(hp({2, 3, 1})) == PointClass::Visible);
    CHECK(classify(hp({-1, 0, 0})) == PointClass::Infinite);
    CHECK(classify(hp({-2, -3, -1})) == PointClass::Invisible);
}

TEST_CASE("lift and project are mutually inverse on visible points") {
    CHECK(lift(rv({2, 3})) == hp({2, 3, 1}));
    CHECK(project(hp({4, 6, 2})) == rv({2, 3}));
    CHECK_THROWS_AS(project(hp({1, 0, 0})), NotVisible);

    RatGen gen;
    for (int trial = 0; trial < 100; ++trial) {
        Vec e = gen.vec(3);
        CHECK(project(lift(e)) == e);
    }
}

TEST_CASE("opposite is an involution and preserves infinity") {
    CHECK(opposite(hp({2, 3, 1})) == hp({-2, -3, -1}));
    CHECK(classify(opposite(hp({1, -2, 0}))) == PointClass::Infinite);
    RatGen gen;
    for (int trial = 0; trial < 50; ++trial) {
        HPoint p = canonicalize(gen.vec(4));
        CHECK(opposite(opposite(p)) == p);
    }
}

TEST_CASE("side tests") {
    HHalfspace visible = hs({0, 0, 1});
    CHECK(side(visible, hp({2, 3, 1})) == 1);
    CHECK(side(visible, hp({1, 0, 0})) == 0);
    CHECK(side(hs({-1, -1, 1}), hp({1, 1, 1})) == -1);
    CHECK_THROWS_AS(side(hs({1, 0}), hp({1, 0, 0})), DimensionError);
}

TEST_CASE("side is invariant under positive rescaling of either argument") {
    RatGen gen;
    for (int trial = 0; trial < 100; ++trial) {
        Vec h = gen.vec(3), x = gen.vec(3);
        bool hz = true, xz = true;
        for (const Rat& q : h)
            if (q != 0) hz = false;
        for (const Rat& q : x)
            if (q != 0) xz = false;
        if (hz || xz) continue;
        Rat lh = gen.positive(), lx = gen.positive();
        Vec hh = h, xx = x;
        for (Rat& q : hh) q *= lh;
        for (Rat& q : xx) q *= lx;
        CHECK(side(HHalfspace(h), HPoint(x)) ==
              side(HHalfspace(hh), HPoint(xx)));
    }
}

TEST_CASE("combine") {
    CHECK(combine(hp({0, 0, 1}), hp({2, 0, 1}), 1, 1) == hp({1, 0, 1}));
    CHECK(combine(hp({2, 3, 1}), hp({2, 3, 1}), 1, 2) == hp({2, 3, 1}));
    // visible + infinite endpoint parameterises a Euclidean ray
    HPoint q = combine(hp({0, 0, 1}), hp({1, 0, 0}), 1, 5);
    CHECK(q == hp({5, 0, 1}));
    CHECK(project(q) == rv({5, 0}));

    CHECK_THROWS_AS(combine(hp({1, 0, 1}), hp({0, 1, 1}), 0, 0),
                    InvalidCombination);
    CHECK_THROWS_AS(combine(hp({2, 3, 1}), hp({-2, -3, -1}), 1, 1),
                    OppositePoints);
}

TEST_CASE("visible combinations stay on the Euclidean segment") {
    RatGen gen;
    for (int trial = 0; trial < 100; ++trial) {
        Vec a = gen.vec(2), b = gen.vec(2);
        Rat alpha = gen.positive(), beta = gen.positive();
        HPoint u = lift(a), v = lift(b);
        Vec mid = project(combine(u, v, alpha, beta));
        // weights act on canonical coordinates, whose scale relative to the
        // affine representative is the last (homogenising) coordinate
        Rat wu = alpha * u.coords().back(), wv = beta * v.coords().back();
        Rat t = wu / (wu + wv);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(mid[i] == t * a[i] + (1 - t) * b[i]);
    }
}
