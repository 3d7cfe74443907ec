#include <gtest/gtest.h>

#include <random>

#include "omega/domains.hpp"
#include "omega/zariski.hpp"
#include "support.hpp"

using namespace omega;

namespace {

PointSet pts(const FiniteOmegaGroup& h, std::size_t n, const std::string& text) { return parse_points(text, h.size(), n); }

PointSet axes(std::size_t size) {
    PointSet a(size, 2);
    for (Element c = 0; c < size; ++c) {
        a.insert({c, 0});
        a.insert({0, c});
    }
    return a;
}

ZariskiOptions variant(bool memoize, bool bounds) {
    ZariskiOptions o;
    o.memoize = memoize;
    o.ideal_bounds = bounds;
    return o;
}

const std::vector<std::string> kSmall{"Z2-ring", "Z3-ring", "Z4-ring",  "Z2-group", "Z3-group",
                                      "Z4-group", "Klein",  "F4",      "F2[x]/(x^2)", "null-ring-Z2xZ2",
                                      "abelian-lie-2"};

}  // namespace

TEST(PointSet, IndexingAndText) {
    PointSet s(3, 2);
    s.insert({2, 1});
    s.insert({0, 2});
    EXPECT_EQ(s.index_of({2, 1}), 7U);
    EXPECT_EQ(s.point_at(7), (Point{2, 1}));
    EXPECT_EQ(s.to_string(), "0,2;2,1");
    EXPECT_EQ(parse_points("0,2 ; 2,1", 3, 2), s);
    EXPECT_TRUE(parse_points("  ", 3, 2).empty());
    for (const char* bad : {"0", "0,3", "0,1;", "a,b", "0,1,2", "0,1 1,0"}) {
        try {
            parse_points(bad, 3, 2);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
        }
    }
    EXPECT_THROW(PointSet(10, 7), Error);
}

TEST(Solve, Examples) {
    const auto z3 = oracle::catalog_algebra("Z3-ring");
    const auto xy = solve_system(z3, {2, {parse_term("mul(x1,x2)")}});
    EXPECT_EQ(xy.to_string(), "0,0;0,1;0,2;1,0;2,0");
    EXPECT_EQ(xy, axes(3));
    for (const auto& name : kSmall) {
        const auto h = oracle::catalog_algebra(name);
        const auto v = solve_system(h, {2, {Term::var(1)}});
        PointSet expected(h.size(), 2);
        for (Element c = 0; c < h.size(); ++c) expected.insert({0, c});
        EXPECT_EQ(v, expected) << name;
        EXPECT_EQ(solve_system(h, {2, {}}), PointSet::all(h.size(), 2)) << name;
    }
    EXPECT_THROW(solve_system(z3, {1, {Term::var(2)}}), Error);
    EXPECT_THROW(solve_system(z3, {13, {}}), Error);
}

TEST(Closure, Examples) {
    const auto z4 = oracle::catalog_algebra("Z4-ring");
    const PointSet closure = zariski_closure(z4, axes(4));
    PointSet expected = axes(4);
    expected.insert({2, 2});
    EXPECT_EQ(closure, expected);
    EXPECT_EQ(closure.size(), 8U);
    for (const auto& name : kSmall) {
        const auto h = oracle::catalog_algebra(name);
        EXPECT_EQ(zariski_closure(h, PointSet::all(h.size(), 2)), PointSet::all(h.size(), 2)) << name;
        EXPECT_EQ(zariski_closure(h, PointSet(h.size(), 2)), pts(h, 2, "0,0")) << name;
    }
}

TEST(Closure, IsAlgebraicExamples) {
    EXPECT_TRUE(is_algebraic(oracle::catalog_algebra("Z3-ring"), axes(3)));
    EXPECT_FALSE(is_algebraic(oracle::catalog_algebra("Z4-ring"), axes(4)));
    for (const auto& name : kSmall) {
        const auto h = oracle::catalog_algebra(name);
        EXPECT_TRUE(is_algebraic(h, pts(h, 2, "0,0"))) << name;
        EXPECT_TRUE(is_algebraic(h, pts(h, 1, "0"))) << name;
    }
}

TEST(Closure, ExactOracleOnTinyInstances) {
    std::mt19937_64 rng(5);
    for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
             {"Z2-ring", 2}, {"Z2-group", 2}, {"Z3-ring", 1}, {"Z4-ring", 1}, {"Z4-group", 1}, {"Klein", 1},
             {"F4", 1}, {"F2[x]/(x^2)", 1}, {"S3", 1}, {"Z5-ring", 1}, {"Z2-ring", 3}}) {
        const auto h = oracle::catalog_algebra(name);
        for (int i = 0; i < 15; ++i) {
            const PointSet a = oracle::random_points(rng, h.size(), n);
            EXPECT_EQ(zariski_closure(h, a), oracle::zariski_closure(h, a)) << name << " {" << a.to_string() << "}";
        }
    }
}

TEST(Closure, ComputationPathsAgree) {
    std::mt19937_64 rng(17);
    for (const auto& name : std::vector<std::string>{"Z3-ring", "Z4-ring", "Klein", "F4", "S3", "Q8", "heisenberg"}) {
        const auto h = oracle::catalog_algebra(name);
        const std::size_t n = h.size() <= 4 ? 2 : 1;
        for (int i = 0; i < 12; ++i) {
            const PointSet a = oracle::random_points(rng, h.size(), n);
            const PointSet reference = zariski_closure(h, a, variant(true, false));
            EXPECT_EQ(zariski_closure(h, a, variant(true, true)), reference) << name;
            EXPECT_EQ(zariski_closure(h, a, variant(false, true)), reference) << name;
            EXPECT_EQ(zariski_closure(h, a, variant(false, false)), reference) << name;
        }
    }
}

TEST(Closure, SubalgebraGuard) {
    ZariskiOptions tight = variant(true, false);
    tight.max_subalgebra = 10;
    try {
        zariski_closure(oracle::catalog_algebra("Z4-ring"), axes(4), tight);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(GaloisLaws, ClosureOperatorAndClosedSolutionSets) {
    std::mt19937_64 rng(31);
    for (const auto& name : kSmall) {
        const auto h = oracle::catalog_algebra(name);
        for (int i = 0; i < 20; ++i) {
            const PointSet a = oracle::random_points(rng, h.size(), 2);
            const PointSet b = a | oracle::random_points(rng, h.size(), 2);
            const PointSet ca = zariski_closure(h, a);
            EXPECT_TRUE(a.is_subset_of(ca)) << name;
            EXPECT_TRUE(ca.contains({0, 0})) << name;
            EXPECT_EQ(zariski_closure(h, ca), ca) << name;
            EXPECT_TRUE(ca.is_subset_of(zariski_closure(h, b))) << name;
            const Term t = random_term(rng(), h.signature(), 2, 3);
            const PointSet v = solve_system(h, {2, {t}});
            EXPECT_TRUE(is_algebraic(h, v)) << name << " " << t.to_string();
            EXPECT_TRUE(is_algebraic(h, ca & zariski_closure(h, b & ca))) << name;
        }
    }
}

TEST(EquationalDomain, Examples) {
    EXPECT_TRUE(equational_domain_check(oracle::catalog_algebra("Z3-ring")).verdict);
    const auto z4 = equational_domain_check(oracle::catalog_algebra("Z4-ring"));
    EXPECT_FALSE(z4.verdict);
    EXPECT_EQ(z4.witness_tuple(), "(2,2)");
    EXPECT_FALSE(equational_domain_check(oracle::catalog_algebra("Z2-group")).verdict);
}

TEST(EquationalDomain, SufficiencyMechanism) {
    // A zero-divisor pair lies in the closure of the axes.
    for (const auto& e : build_catalog()) {
        const auto h = e.construct();
        if (h.size() == 1 || h.size() > 8) continue;
        const auto zd = zero_divisor_witness(h);
        if (!zd.verdict) continue;
        const Point p{zd.witness[0].second, zd.witness[1].second};
        const PointSet closure = zariski_closure(h, axes(h.size()));
        EXPECT_TRUE(closure.contains(p)) << e.name;
        EXPECT_FALSE(axes(h.size()).contains(p)) << e.name;
    }
}

TEST(EquationalDomain, NecessityMechanismOnRandomSystems) {
    for (const char* name : {"Z2-ring", "Z3-ring", "Z5-ring", "F4"}) {
        const auto h = oracle::catalog_algebra(name);
        ASSERT_TRUE(is_domain(h));
        for (std::size_t n : {2U, 3U}) {
            if (n == 3 && h.size() > 3) continue;
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const PointSet v1 = solve_system(h, {n, {random_term(3 * seed, h.signature(), n, 3)}});
                const PointSet v2 = solve_system(h, {n, {random_term(3 * seed + 1, h.signature(), n, 3),
                                                         random_term(3 * seed + 2, h.signature(), n, 3)}});
                EXPECT_TRUE(is_algebraic(h, v1 | v2)) << name << " n=" << n << " seed=" << seed;
            }
        }
    }
}

TEST(EquationalDomain, SimpleMatrixRingIsADomainButNotAnEquationalDomain) {
    // M2(F2): every nonzero ideal is the whole ring, yet E11 and E22 annihilate
    // each other, so (E11,E22) = (1,8) lies in the closure of the axes.
    const auto m2 = oracle::catalog_algebra("M2(F2)");
    EXPECT_TRUE(is_domain(m2));
    const auto ed = equational_domain_check(m2);
    EXPECT_FALSE(ed.verdict);
    EXPECT_EQ(ed.witness_tuple(), "(1,8)");
}

TEST(Lattice, Z3RingUnary) {
    const auto lattice = enumerate_algebraic_sets(oracle::catalog_algebra("Z3-ring"), 1);
    ASSERT_EQ(lattice.sets.size(), 4U);
    for (const auto& s : lattice.sets) EXPECT_TRUE(s.contains({0}));
    EXPECT_TRUE(lattice.join_is_union);
    EXPECT_TRUE(lattice.meet_is_intersection);
    EXPECT_TRUE(lattice.distributive);
}

TEST(Lattice, Z4RingUnaryFamily) {
    // Unary term functions vanishing at 0 contain 2x, x^2 - x, x^2 + x and
    // x^3 - x, which separate every point from every set: all 8 subsets
    // containing 0 are algebraic.
    const auto z4 = oracle::catalog_algebra("Z4-ring");
    const auto lattice = enumerate_algebraic_sets(z4, 1);
    EXPECT_EQ(lattice.sets.size(), 8U);
    const auto has = [&](const std::string& text) {
        const PointSet s = parse_points(text, 4, 1);
        return std::find(lattice.sets.begin(), lattice.sets.end(), s) != lattice.sets.end();
    };
    EXPECT_TRUE(has("0") && has("0;2") && has("0;1;3") && has("0;1;2;3"));
    EXPECT_EQ(solve_system(z4, {1, {parse_term("mul(x1,mul(x1,x1)) = x1")}}).to_string(), "0;1;3");
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        PointSet s(4, 1);
        s.insert_index(0);
        for (std::size_t i = 0; i < 3; ++i)
            if ((bits >> i) & 1U) s.insert_index(i + 1);
        EXPECT_EQ(oracle::zariski_closure(z4, s), s) << s.to_string();
    }
    // Union failures need two variables.
    const auto lattice2 = enumerate_algebraic_sets(oracle::catalog_algebra("Z2-ring"), 2);
    EXPECT_TRUE(lattice2.join_is_union);
}

TEST(Lattice, Guards) {
    EXPECT_THROW(enumerate_algebraic_sets(oracle::catalog_algebra("Z4-ring"), 2), Error);
    EXPECT_THROW(enumerate_algebraic_sets(oracle::catalog_algebra("M2(F2)"), 1), Error);
}

TEST(Lattice, EquationalDomainsHaveUnionJoins) {
    for (const auto& e : build_catalog()) {
        const auto h = e.construct();
        if (h.size() == 1 || h.size() > 8) continue;
        const auto lattice = enumerate_algebraic_sets(h, 1);
        EXPECT_TRUE(lattice.meet_is_intersection) << e.name;
        for (const auto& a : lattice.sets)
            for (const auto& b : lattice.sets) EXPECT_TRUE(is_algebraic(h, a & b)) << e.name;
        if (equational_domain_check(h).verdict) {
            EXPECT_TRUE(lattice.join_is_union) << e.name;
            EXPECT_TRUE(lattice.distributive) << e.name;
        }
    }
}

TEST(BoundedDepthOracle, ConvergesFromAbove) {
    const auto z4 = oracle::catalog_algebra("Z4-ring");
    const PointSet exact = zariski_closure(z4, axes(4));
    PointSet previous = PointSet::all(4, 2);
    for (std::size_t depth = 0; depth <= 4; ++depth) {
        const PointSet approx = bounded_depth_ideal_oracle(z4, axes(4), depth);
        EXPECT_TRUE(exact.is_subset_of(approx)) << depth;
        EXPECT_TRUE(approx.is_subset_of(previous)) << depth;
        previous = approx;
    }
    EXPECT_EQ(previous, exact);
    EXPECT_EQ(bounded_depth_ideal_oracle(z4, PointSet::all(4, 2), 3), PointSet::all(4, 2));
    EXPECT_THROW(bounded_depth_ideal_oracle(z4, axes(4), 5), Error);
    EXPECT_THROW(bounded_depth_ideal_oracle(oracle::catalog_algebra("Z5-ring"), PointSet(5, 1), 2), Error);
}
