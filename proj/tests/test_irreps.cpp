#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "casimir/irreps.hpp"
#include "casimir/pbw.hpp"
#include "casimir/ringmat.hpp"
#include "test_util.hpp"

using namespace casimir;
using testutil::Lcg;
using testutil::random_element;

namespace {

void check_brackets(const Representation& rep) {
    for (int i = 1; i <= rep.n; ++i)
        for (int j = 1; j <= rep.n; ++j)
            for (int k = 1; k <= rep.n; ++k)
                for (int l = 1; l <= rep.n; ++l) {
                    RatMat lhs = rep.gen(i, j) * rep.gen(k, l) - rep.gen(k, l) * rep.gen(i, j);
                    RatMat rhs(rep.dim, rep.dim);
                    if (j == k) rhs = rhs + rep.gen(i, l);
                    if (l == i) rhs = rhs - rep.gen(k, j);
                    CHECK(lhs == rhs);
                }
}

void check_weights(const Representation& rep) {
    REQUIRE(static_cast<int>(rep.basis_weights.size()) == rep.dim);
    for (int i = 1; i <= rep.n; ++i) {
        const RatMat& e = rep.gen(i, i);
        for (int r = 0; r < rep.dim; ++r)
            for (int c = 0; c < rep.dim; ++c)
                CHECK(e.at(r, c) == (r == c ? Rat(rep.basis_weights[r][i - 1]) : Rat(0)));
    }
    // total charge is constant on an irreducible
    long total = rep.weight.total();
    RatMat charge(rep.dim, rep.dim);
    for (int i = 1; i <= rep.n; ++i) charge = charge + rep.gen(i, i);
    CHECK(charge == RatMat::identity(rep.dim).scale(Rat(total)));
}

long rank_of_op(const SparseOp<Rat>& op) { return rank_of(to_ratmat(op)); }

}  // namespace

TEST_CASE("dominant weight validation and accessors") {
    DominantWeight w({3, 1, 0});
    CHECK(w.n() == 3);
    CHECK(w[0] == 3);
    CHECK(w.spread() == 3);
    CHECK(w.total() == 4);
    CHECK(w.is_partition());
    CHECK(w.to_string() == "3,1,0");
    CHECK(!DominantWeight({0, -2}).is_partition());
    CHECK_THROWS_AS(DominantWeight({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(DominantWeight({}), std::invalid_argument);
}

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dim(DominantWeight({0, 0})) == 1);
    CHECK(weyl_dim(DominantWeight({4, 1})) == 4);
    CHECK(weyl_dim(DominantWeight({1, 0, 0})) == 3);
    CHECK(weyl_dim(DominantWeight({1, 1, 0})) == 3);
    CHECK(weyl_dim(DominantWeight({2, 0, 0})) == 6);
    CHECK(weyl_dim(DominantWeight({1, 1, 1})) == 1);
    CHECK(weyl_dim(DominantWeight({2, 1, 0})) == 8);
    CHECK(weyl_dim(DominantWeight({2, 2, 0})) == 6);
    CHECK(weyl_dim(DominantWeight({3, 0, 0})) == 10);
    CHECK(weyl_dim(DominantWeight({2, 1, 1})) == 3);
    CHECK(weyl_dim(DominantWeight({1, 0, 0, 0})) == 4);
    CHECK(weyl_dim(DominantWeight({1, 1, 0, 0})) == 6);
    CHECK(weyl_dim(DominantWeight({2, 0, 0, 0})) == 10);
    CHECK(weyl_dim(DominantWeight({1, 1, 1, 0})) == 4);
    CHECK(weyl_dim(DominantWeight({2, 1, 0, 0})) == 20);
    // shifting by the determinant character preserves dimension
    CHECK(weyl_dim(DominantWeight({1, 0, -1})) == weyl_dim(DominantWeight({2, 1, 0})));
}

TEST_CASE("tableau contents in filling order") {
    CHECK(tableau_contents({2, 1}) == std::vector<long>{0, 1, -1});
    CHECK(tableau_contents({3}) == std::vector<long>{0, 1, 2});
    CHECK(tableau_contents({1, 1, 1}) == std::vector<long>{0, -1, -2});
    CHECK(tableau_contents({2, 2}) == std::vector<long>{0, 1, -1, 0});
    CHECK(tableau_contents({2, 1, 0}) == std::vector<long>{0, 1, -1});
}

TEST_CASE("permutation enumeration covers the group with correct signs") {
    int count = 0;
    int sign_sum = 0;
    bool saw_identity_plus = false;
    for_each_permutation(3, [&](const std::vector<int>& sigma, int sign) {
        ++count;
        sign_sum += sign;
        if (sigma == std::vector<int>{0, 1, 2}) saw_identity_plus = sign == 1;
        // sign is multiplicative against inversion parity by construction;
        // spot-check one transposition
        if (sigma == std::vector<int>{1, 0, 2}) CHECK(sign == -1);
    });
    CHECK(count == 6);
    CHECK(sign_sum == 0);
    CHECK(saw_identity_plus);
}

TEST_CASE("antisymmetrizer is the exterior-power projector") {
    for (auto [s, n, rank] : std::vector<std::tuple<int, int, long>>{
             {1, 2, 2}, {2, 2, 1}, {2, 3, 3}, {3, 3, 1}, {2, 4, 6}, {3, 4, 4}, {4, 4, 1}, {3, 2, 0}}) {
        SparseOp<Rat> a = antisymmetrizer(s, n);
        CHECK(a * a == a);
        CHECK(rank_of_op(a) == rank);
        if (s == 1) CHECK(a == SparseOp<Rat>::identity_op(n, 1));
    }
    // transpositions act by -1 on the image
    SparseOp<Rat> a = antisymmetrizer(3, 3);
    SparseOp<Rat> p = SparseOp<Rat>::leg_permutation(3, {1, 0, 2});
    CHECK(p * a == a.scale(Rat(-1)));
    CHECK(a * p == a.scale(Rat(-1)));
}

TEST_CASE("Young symmetrizer: idempotent of the right rank") {
    for (auto [shape, n, rank] : std::vector<std::tuple<std::vector<long>, int, long>>{
             {{2}, 2, 3},
             {{1, 1}, 2, 1},
             {{2, 1}, 2, 2},
             {{2, 1}, 3, 8},
             {{3}, 2, 4},
             {{2, 2}, 2, 1},
             {{2, 2}, 3, 6},
             {{1, 1, 1}, 3, 1},
             {{2, 1, 1}, 3, 3}}) {
        SparseOp<Rat> f = young_symmetrizer(shape, n);
        CHECK(f * f == f);
        CHECK(rank_of_op(f) == rank);
        std::vector<long> padded = shape;
        padded.resize(n, 0);
        CHECK(rank == weyl_dim(DominantWeight(padded)));
    }
    CHECK(young_symmetrizer({1, 1, 1}, 2).is_zero());
    // single-row and single-column shapes reduce to the classical projectors
    CHECK(young_symmetrizer({1, 1}, 2) == antisymmetrizer(2, 2));
    SparseOp<Rat> sym = SparseOp<Rat>::identity_op(2, 2) + SparseOp<Rat>::leg_permutation(2, {1, 0});
    CHECK(young_symmetrizer({2}, 2) == sym.scale(Rat(1, 2)));
}

TEST_CASE("Young symmetrizer commutes with the diagonal action") {
    for (auto [shape, n] :
         std::vector<std::pair<std::vector<long>, int>>{{{2, 1}, 2}, {{2, 1}, 3}, {{2, 2}, 2}}) {
        SparseOp<Rat> f = young_symmetrizer(shape, n);
        int legs = f.leg_count();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                SparseOp<Rat> d = diagonal_generator(n, legs, i, j);
                CHECK(f * d == d * f);
            }
    }
}

TEST_CASE("diagonal generator on one leg is the unit matrix") {
    SparseOp<Rat> e12 = diagonal_generator(3, 1, 1, 2);
    RatMat m = to_ratmat(e12);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(m.at(r, c) == (r == 0 && c == 1 ? Rat(1) : Rat(0)));
    // coproduct on two legs: e12 x 1 + 1 x e12
    SparseOp<Rat> two = diagonal_generator(2, 2, 2, 1);
    SparseOp<Rat> one = diagonal_generator(2, 1, 2, 1);
    CHECK(two == tensor(one, SparseOp<Rat>::identity_op(2, 1)) +
                     tensor(SparseOp<Rat>::identity_op(2, 1), one));
}

TEST_CASE("vector representation is the unit-matrix action") {
    for (int n : {2, 3, 4}) {
        std::vector<long> comps(n, 0);
        comps[0] = 1;
        Representation rep = build_rep(DominantWeight(comps), n);
        CHECK(rep.dim == n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        CHECK(rep.gen(i, j).at(r, c) == (r == i - 1 && c == j - 1 ? Rat(1) : Rat(0)));
        check_weights(rep);
    }
}

TEST_CASE("determinant representation and twists") {
    Representation det2 = build_rep(DominantWeight({1, 1}), 2);
    CHECK(det2.dim == 1);
    CHECK(det2.gen(1, 1).at(0, 0) == 1);
    CHECK(det2.gen(2, 2).at(0, 0) == 1);
    CHECK(det2.gen(1, 2).at(0, 0) == 0);
    CHECK(det2.gen(2, 1).at(0, 0) == 0);

    Representation inv = build_rep(DominantWeight({-1, -1}), 2);
    CHECK(inv.dim == 1);
    CHECK(inv.gen(1, 1).at(0, 0) == -1);

    Representation triv = build_rep(DominantWeight({0, 0, 0}), 3);
    CHECK(triv.dim == 1);
    CHECK(triv.gen(1, 1).is_zero());

    // (1,-1) = adjoint-like twist of (2,0)
    Representation tw = build_rep(DominantWeight({1, -1}), 2);
    CHECK(tw.dim == 3);
    CHECK(tw.gen(1, 1).at(0, 0) == 1);
    CHECK(tw.gen(1, 1).at(1, 1) == 0);
    CHECK(tw.gen(1, 1).at(2, 2) == -1);
    check_brackets(tw);
    check_weights(tw);

    Representation dual_vec = build_rep(DominantWeight({0, 0, -1}), 3);
    CHECK(dual_vec.dim == 3);
    check_brackets(dual_vec);
    check_weights(dual_vec);
}

TEST_CASE("built representations satisfy the commutation relations") {
    for (auto [comps, n] : std::vector<std::pair<std::vector<long>, int>>{
             {{1, 0}, 2},
             {{2, 0}, 2},
             {{2, 1}, 2},
             {{3, 0}, 2},
             {{1, 0, 0}, 3},
             {{1, 1, 0}, 3},
             {{2, 0, 0}, 3},
             {{1, 1, 1}, 3},
             {{2, 1, 0}, 3},
             {{1, 0, 0, 0}, 4},
             {{1, 1, 0, 0}, 4}}) {
        DominantWeight w(comps);
        Representation rep = build_rep(w, n);
        CHECK(rep.dim == weyl_dim(w));
        check_brackets(rep);
        check_weights(rep);
        CHECK(std::is_sorted(rep.basis_weights.begin(), rep.basis_weights.end(),
                             [](const auto& a, const auto& b) { return a > b; }));
        CHECK(rep.basis_weights.front() == comps);
    }
}

TEST_CASE("closed-form rank-2 representation") {
    Representation r = gl2_rep(DominantWeight({2, 0}));
    CHECK(r.dim == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(r.gen(1, 1).at(k, k) == Rat(2 - k));
        CHECK(r.gen(2, 2).at(k, k) == Rat(k));
    }
    CHECK(r.gen(1, 2).at(0, 1) == 2);
    CHECK(r.gen(1, 2).at(1, 2) == 1);
    CHECK(r.gen(2, 1).at(1, 0) == 1);
    CHECK(r.gen(2, 1).at(2, 1) == 2);
    check_brackets(r);
    check_weights(r);

    Representation one = gl2_rep(DominantWeight({0, 0}));
    CHECK(one.dim == 1);
    CHECK(one.gen(1, 1).is_zero());

    Representation neg = gl2_rep(DominantWeight({1, -2}));
    CHECK(neg.dim == 4);
    check_brackets(neg);
    check_weights(neg);
}

TEST_CASE("dual representation: negated transposed-index action") {
    Representation src = build_rep(DominantWeight({2, 1, 0}), 3);
    Representation d = dual_star(src);
    CHECK(d.weight == DominantWeight({0, -1, -2}));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(d.gen(i, j) == src.gen(j, i).scale(Rat(-1)));
    check_brackets(d);
    for (std::size_t k = 0; k < d.basis_weights.size(); ++k)
        for (int i = 0; i < 3; ++i) CHECK(d.basis_weights[k][i] == -src.basis_weights[k][i]);

    Representation dd = dual_star(d);
    CHECK(dd.weight == src.weight);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(dd.gen(i, j) == src.gen(i, j));
}

TEST_CASE("algebra elements act through the representation") {
    Representation rep = build_rep(DominantWeight({2, 0}), 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(rep_apply(rep, UEAElement::generator(2, i, j)) == rep.gen(i, j));

    Lcg rng(2026);
    for (int trial = 0; trial < 20; ++trial) {
        UEAElement x = random_element(rng, 2, 3, 2);
        UEAElement y = random_element(rng, 2, 3, 2);
        CHECK(rep_apply(rep, x * y) == rep_apply(rep, x) * rep_apply(rep, y));
        CHECK(rep_apply(rep, x + y) == rep_apply(rep, x) + rep_apply(rep, y));
    }
}

TEST_CASE("central elements act as the expected scalars") {
    // quadratic invariant sum E_ij E_ji acts by sum lambda_i (lambda_i + n + 1 - 2i)
    for (auto [comps, n, value] : std::vector<std::tuple<std::vector<long>, int, long>>{
             {{1, 0}, 2, 2},
             {{2, 0}, 2, 6},
             {{2, 1}, 2, 6},
             {{1, 0, 0}, 3, 3},
             {{1, 1, 0}, 3, 4},
             {{2, 1, 0}, 3, 9}}) {
        Representation rep = build_rep(DominantWeight(comps), n);
        CHECK(rep_apply(rep, UEAElement::casimir_t(n)) ==
              RatMat::identity(rep.dim).scale(Rat(value)));
    }
    // rank-2 determinant-like invariant (E11-1)E22 - E12 E21 acts by l1 (l2 - 1)
    for (auto [comps, value] :
         std::vector<std::pair<std::vector<long>, long>>{{{1, 0}, -1}, {{2, 0}, -2}, {{2, 1}, 0}, {{3, 1}, 0}, {{2, 2}, 2}}) {
        Representation rep = gl2_rep(DominantWeight(comps));
        CHECK(rep_apply(rep, UEAElement::delta2()) ==
              RatMat::identity(rep.dim).scale(Rat(value)));
        CHECK(rep_apply(rep, UEAElement::delta1(2)) ==
              RatMat::identity(rep.dim).scale(Rat(comps[0] + comps[1])));
    }
}

TEST_CASE("intertwiner between the two rank-2 constructions") {
    for (long m = 1; m <= 3; ++m) {
        Representation a = build_rep(DominantWeight({m, 0}), 2);
        Representation b = gl2_rep(DominantWeight({m, 0}));
        auto h = solve_intertwiner(a, b);
        REQUIRE(h);
        CHECK(rank_of(*h) == a.dim);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) CHECK(*h * a.gen(i, j) == b.gen(i, j) * *h);
    }
    // same dimension, different central character: no intertwiner
    CHECK(!solve_intertwiner(gl2_rep(DominantWeight({2, 0})), gl2_rep(DominantWeight({3, 1}))));
    // dual of the vector representation realizes the twist construction
    Representation via_twist = build_rep(DominantWeight({0, -1}), 2);
    Representation via_dual = dual_star(build_rep(DominantWeight({1, 0}), 2));
    auto h = solve_intertwiner(via_dual, via_twist);
    REQUIRE(h);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(*h * via_dual.gen(i, j) == via_twist.gen(i, j) * *h);
}

TEST_CASE("compression onto an invariant subspace") {
    // full space: compression is the matrix itself
    SparseOp<Rat> op = diagonal_generator(2, 2, 1, 2);
    RatMat full = RatMat::identity(4);
    auto c = compress_to_basis(op, full);
    REQUIRE(c);
    CHECK(*c == to_ratmat(op));

    // antisymmetric line inside C^2 x C^2
    RatMat line(4, 1);
    line.at(1, 0) = 1;
    line.at(2, 0) = -1;
    auto on_line = compress_to_basis(op, line);
    REQUIRE(on_line);
    CHECK(on_line->at(0, 0) == 0);
    auto diag = compress_to_basis(diagonal_generator(2, 2, 1, 1), line);
    REQUIRE(diag);
    CHECK(diag->at(0, 0) == 1);

    // highest-weight line is not invariant under the lowering coproduct
    RatMat top(4, 1);
    top.at(0, 0) = 1;
    CHECK(!compress_to_basis(diagonal_generator(2, 2, 2, 1), top));
}

TEST_CASE("left inverse of a full-column-rank basis") {
    Lcg rng(7);
    RatMat b(5, 3);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 3; ++c) b.at(r, c) = rng.rat();
    while (rank_of(b) < 3)
        for (int r = 0; r < 5; ++r) b.at(r, 2) = rng.rat();
    RatMat l = left_inverse(b);
    CHECK(l * b == RatMat::identity(3));

    RatMat bad(4, 2);
    bad.at(0, 0) = 1;
    bad.at(0, 1) = 2;  // second column is twice the first
    bad.at(1, 0) = 3;
    bad.at(1, 1) = 6;
    CHECK_THROWS_AS(left_inverse(bad), std::invalid_argument);
}
