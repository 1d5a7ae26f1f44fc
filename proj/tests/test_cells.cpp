#include "support.hpp"

#include "hilbcells/errors.hpp"

#include <doctest.h>

using namespace hilbcells;

namespace {

const PointP1 x0 = make_point(1, 0);

std::vector<Partition> partitions_up_to(int nmax)
{
    std::vector<Partition> out;
    for (int n = 1; n <= nmax; ++n)
        for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

CellParams zero_params(const Partition& p)
{
    CellParams cp{p, {}};
    for (auto& s : pair_set_S(MonomialIdeal{p}))
        cp.values[s] = 0;
    return cp;
}

} // namespace

TEST_SUITE("cells") {

TEST_CASE("monomials")
{
    CHECK(Monomial{0, 1} < Monomial{1, 0});
    CHECK(Monomial{1, 0} < Monomial{0, 2});
    CHECK(Monomial{1, 1} < Monomial{2, 0});
    CHECK(to_string(Monomial{3, 1}) == "x^3 y^1");
    CHECK(parse_monomial("x^3 y^1") == Monomial{3, 1});
    MonomialIdeal e{{5, 2, 1, 1}};
    CHECK(e.contains(Monomial{0, 4}));
    CHECK_FALSE(e.contains(Monomial{4, 0}));
    CHECK(e.cobasis().size() == 9);
}

TEST_CASE("parameter pairs")
{
    CHECK(pair_set_S(MonomialIdeal{{2, 2}}) == std::vector<MonomialPair>{{Monomial{0, 2}, Monomial{1, 1}}});
    auto s = pair_set_S(MonomialIdeal{{6, 4, 3, 1, 1}});
    auto has = [&](MonomialPair q) { return std::find(s.begin(), s.end(), q) != s.end(); };
    CHECK(has({Monomial{1, 3}, Monomial{2, 2}}));
    CHECK(has({Monomial{1, 3}, Monomial{3, 1}}));
    CHECK(pair_set_S(MonomialIdeal{{1}}).empty());
    for (auto& p : partitions_up_to(10))
        CHECK(pair_set_S(MonomialIdeal{p}) == oracle::naive_S(p));
}

TEST_CASE("w sets")
{
    CHECK(pair_set_W(MonomialIdeal{{1}}).w == 0);
    CHECK(pair_set_W(MonomialIdeal{{2, 2}}).w == 0);
    for (auto& p : enumerate_with_diagonal_lengths(HilbertFunction{{1, 2, 3, 2, 1}}))
        CHECK(pair_set_W(MonomialIdeal{p}).w == 2);
}

TEST_CASE("cell dimensions")
{
    auto a = dims(MonomialIdeal{{5, 2, 1, 1}});
    CHECK(a.dim_V == 2);
    CHECK(a.codim_V == 2);
    CHECK(dims(MonomialIdeal{{3, 1}}).dim_V == 2);
    CHECK(big_cell(HilbertFunction{{1, 2, 3, 2, 1}}).partition == Partition{5, 3, 1});
    CHECK(big_cell(HilbertFunction{{1, 2, 1}}).partition == Partition{3, 1});
    CHECK(big_cell(HilbertFunction{{1}}).partition == Partition{1});
    for (auto& T : admissible_up_to(10)) {
        auto e0 = big_cell(T);
        CHECK(dims(e0).dim_V == t_invariants(T).dim_GT);
        for (auto& p : enumerate_with_diagonal_lengths(T)) {
            auto d = dims(MonomialIdeal{p});
            CHECK(d.dim_V + d.codim_V == t_invariants(T).dim_GT);
        }
    }
}

TEST_CASE("pair counts of dual ideals per degree")
{
    for (auto& T : admissible_up_to(10))
        for (auto& p : enumerate_with_diagonal_lengths(T)) {
            MonomialIdeal e{p};
            for (int i = 0; i <= T.j() + 2; ++i) {
                int s = static_cast<int>(pair_set_S(e, i).size());
                int sd = static_cast<int>(pair_set_S(e.dual(), i).size());
                CHECK(sd == (T.delta(i) + 1) * T.delta(i + 1) - s);
            }
        }
}

TEST_CASE("building ideals from parameters")
{
    Q c(3, 2);
    MonomialIdeal e{{2, 2}};
    CellParams cp{e.partition, {{pair_set_S(e)[0], c}}};
    auto I = build_ideal(cp);
    CHECK(I.T.t == std::vector<int>{1, 2, 1});
    CHECK(I.piece(2) == make_space(2, {{1, 0, 0}, {0, -c, 1}}));
    CHECK(initial_ideal(I) == e);

    for (auto& p : partitions_up_to(7)) {
        auto J = build_ideal(zero_params(p));
        for (auto& g : J.generators) {
            int nz = 0;
            for (auto& q : g.coeffs)
                nz += sgn(q) != 0;
            CHECK(nz == 1);
        }
        CHECK(initial_ideal(J) == MonomialIdeal{p});
    }
    CellParams bad{{2, 2}, {}};
    CHECK_THROWS_AS(build_ideal(bad), Error);
}

TEST_CASE("worked example in degree four")
{
    Partition p{5, 2, 1, 1};
    CellParams cp{p, {}};
    for (auto& s : pair_set_S(MonomialIdeal{p}))
        cp.values[s] = s.mu.x == 0 ? Q(-7) : Q(-5);
    auto I = build_ideal(cp);
    std::vector<std::string> gens;
    for (auto& g : I.generators)
        gens.push_back(to_string(g));
    auto has = [&](const BinaryForm& f) {
        for (auto& g : I.generators)
            if (oracle::proportional(g, f))
                return true;
        return false;
    };
    CHECK(has(BinaryForm{4, {7, 0, 0, 0, 1}}));
    CHECK(has(BinaryForm{4, {5, 1, 0, 0, 0}}));

    // (y^4 + a x^4, x^2 y, x y^2)
    Q a = 3;
    auto J = make_ideal({BinaryForm{4, {a, 0, 0, 0, 1}}, BinaryForm{3, {0, 1, 0, 0}}, BinaryForm{3, {0, 0, 1, 0}}});
    CHECK(initial_ideal(J, x0).partition == Partition{5, 2, 1, 1});
    // at y = 0 the result is read in coordinates where y plays the role of x;
    // back in x, y it is (x^4, x y^2, x^2 y)
    auto at_y = initial_ideal(J, make_point(0, 1));
    CHECK(at_y.partition == Partition{5, 2, 1, 1});
    CHECK(at_y.dual().partition == Partition{4, 2, 1, 1, 1});
}

TEST_CASE("roundtrip through random parameters")
{
    support::Rng rng(101);
    for (auto& p : partitions_up_to(8))
        for (int t = 0; t < 3; ++t) {
            auto I = build_ideal(support::random_params(rng, p));
            CHECK(I.T == diagonal_lengths(p));
            CHECK(initial_ideal(I).partition == p);
        }
}

TEST_CASE("ideal ramification equals that of its initial ideal")
{
    support::Rng rng(17);
    for (auto& p : partitions_up_to(8)) {
        auto I = build_ideal(support::random_params(rng, p));
        std::vector<PointP1> pts{x0};
        for (int k = 0; k < 3; ++k)
            pts.push_back(make_point(rng.rational(), 1));
        for (auto& q : pts)
            CHECK(qram_ideal(I, q) == qram_monomial_ideal(initial_ideal(I, q)));
    }
    // (x^2, y^2 - c xy) at x = 0: I_2 has degree sequence (0, 2)
    auto I = make_ideal({BinaryForm{2, {1, 0, 0}}, BinaryForm{2, {0, -2, 1}}});
    CHECK(I.T.t == std::vector<int>{1, 2, 1});
    CHECK(qram_ideal(I, x0) == std::vector<Partition>{{1, 0}});
}

TEST_CASE("initial ideal rejects non-ideals")
{
    GradedIdeal I = build_ideal(zero_params({3, 1}));
    I.pieces[3] = make_space(3, {{0, 0, 0, 1}}); // x * xy falls outside
    CHECK_THROWS_AS(initial_ideal(I), Error);
}

TEST_CASE("small grassmannian coordinates carry the parameters")
{
    auto e3 = MonomialIdeal{{3, 1}};
    auto s = pair_set_S(e3);
    auto sg = small_grass_coords(build_ideal(CellParams{{3, 1}, {{s[0], 2}, {s[1], 3}}}));
    REQUIRE(sg.size() == 1);
    CHECK(sg[0].columns == std::vector<Monomial>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(sg[0].matrix == Matrix{{2, 3, 1}});

    support::Rng rng(3);
    for (auto& T : admissible_up_to(9)) {
        auto e0 = big_cell(T);
        CellParams cp = support::random_params(rng, e0.partition);
        auto coords = small_grass_coords(build_ideal(cp));
        for (auto& g : coords) {
            CHECK(static_cast<int>(g.matrix.size()) == T.delta(g.degree + 1));
            for (std::size_t r = 0; r < g.rows.size(); ++r)
                for (std::size_t c = 0; c < g.columns.size(); ++c) {
                    const Monomial& nu = g.rows[r];
                    const Monomial& mu = g.columns[c];
                    Q want = 0;
                    if (mu == nu)
                        want = 1;
                    else if (auto it = cp.values.find({mu, nu}); it != cp.values.end())
                        want = it->second;
                    CHECK(g.matrix[r][c] == want);
                }
        }
        if (enumerate_with_diagonal_lengths(T).size() > 1) {
            for (auto& p : enumerate_with_diagonal_lengths(T))
                if (!(p == e0.partition))
                    CHECK_THROWS_AS(small_grass_coords(build_ideal(zero_params(p))), Error);
        }
    }
}

}
