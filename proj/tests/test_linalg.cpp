#include "doctest.h"
#include "hc/linalg.hpp"
#include "hc/random.hpp"
#include "hc/oracles.hpp"
#include "support.hpp"

using namespace hc;
using test::mat;
using test::q;

TEST_CASE("rationals print in lowest terms and parse back") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2")) == "-2");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational("/3"));
    CHECK_THROWS(parse_rational("3/-4"));
}

TEST_CASE("kernel and image of small matrices") {
    const Mat m = mat(2, 2, {1, 0, 0, 0});
    CHECK(kernel_basis(m) == Subspace::span(mat(2, 1, {0, 1})));
    CHECK(image_basis(m) == Subspace::span(mat(2, 1, {1, 0})));
    CHECK(kernel_basis(identity(3)).dim() == 0);
    CHECK(image_basis(zeros(3, 2)).dim() == 0);
    CHECK(kernel_basis(zeros(0, 3)).dim() == 3);
    CHECK(image_basis(zeros(0, 0)).ambient() == 0);
}

TEST_CASE("canonical bases make equal subspaces identical") {
    const Subspace a = Subspace::span(mat(3, 2, {1, 2, 1, 0, 0, 5}));
    const Subspace b = Subspace::span(mat(3, 2, {3, 1, 1, 1, 5, 0}));
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
}

TEST_CASE("meet and join") {
    const Subspace e1 = Subspace::span(mat(2, 1, {1, 0}));
    const Subspace diag = Subspace::span(mat(2, 1, {1, 1}));
    auto mj = meet_join(e1, diag);
    CHECK(mj.meet.dim() == 0);
    CHECK(mj.join.is_full());
    auto same = meet_join(diag, diag);
    CHECK(same.meet == diag);
    CHECK(same.join == diag);
    CHECK_THROWS_AS(meet(e1, Subspace::full(3)), ValidationError);
}

TEST_CASE("orthogonal complements and projectors") {
    auto o = orth(Subspace::span(mat(2, 1, {1, 1})), identity(2));
    CHECK(o.complement == Subspace::span(mat(2, 1, {1, -1})));
    auto o2 = orth(Subspace::span(mat(2, 1, {1, 0})), mat(2, 2, {1, 0, 0, 2}));
    CHECK(o2.complement == Subspace::span(mat(2, 1, {0, 1})));
    CHECK_THROWS_AS(orth(Subspace::full(2), mat(2, 2, {1, 0, 0, -1})), ValidationError);
    CHECK_THROWS_AS(orth(Subspace::full(2), mat(2, 2, {1, 1, 0, 1})), ValidationError);
}

TEST_CASE("congruence signature of small forms") {
    CHECK(congruence_signature(mat(3, 3, {2, 0, 0, 0, -3, 0, 0, 0, 0})) == Inertia{1, 1, 1});
    CHECK(congruence_signature(mat(2, 2, {0, 1, 1, 0})) == Inertia{1, 1, 0});
    CHECK(congruence_signature(zeros(0, 0)) == Inertia{0, 0, 0});
    CHECK(congruence_signature(mat(3, 3, {0, 0, 1, 0, 0, 0, 1, 0, 0})) == Inertia{1, 1, 1});
    CHECK_THROWS_AS(congruence_signature(mat(2, 2, {0, 1, 2, 0})), ValidationError);
}

TEST_CASE("sturm oracle agrees on hand cases") {
    CHECK(oracle::sturm_inertia(mat(3, 3, {2, 0, 0, 0, -3, 0, 0, 0, 0})) == Inertia{1, 1, 1});
    CHECK(oracle::sturm_inertia(mat(2, 2, {1, 0, 0, 1})) == Inertia{2, 0, 0});
}

TEST_CASE("property: rank-nullity, modular law, projectors, inertia") {
    Generator gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Index r = gen.uniform(0, 6), c = gen.uniform(0, 7);
        const Mat m = gen.matrix_of_rank(r, c, gen.uniform(0, 6));
        const Subspace k = kernel_basis(m);
        const Subspace im = image_basis(m);
        const Index rk = oracle::rank(m);
        CHECK(k.dim() == c - rk);
        CHECK(im.dim() == rk);
        CHECK(is_zero_matrix(Mat(m * k.basis())));
        CHECK(oracle::rank(k.basis()) == k.dim());

        const Index n = gen.uniform(0, 6);
        const Subspace a = gen.subspace(n, gen.uniform(0, static_cast<int>(n)));
        const Subspace b = gen.subspace(n, gen.uniform(0, static_cast<int>(n)));
        const auto mj = meet_join(a, b);
        CHECK(a.dim() + b.dim() == mj.meet.dim() + mj.join.dim());
        // Brute-force meet dimension: kernel of [A, -B].
        Mat stacked(n, a.dim() + b.dim());
        stacked << a.basis(), -b.basis();
        CHECK(mj.meet.dim() == a.dim() + b.dim() - oracle::rank(stacked));
        CHECK(a.contains(mj.meet));
        CHECK(b.contains(mj.meet));
        CHECK(mj.join.contains(a));
        CHECK(mj.join.contains(b));

        const Mat g = gen.spd(n);
        const auto o = orth(a, g);
        const Mat& p = o.projector;
        CHECK(Mat(p * p) == p);
        CHECK(Mat(g * p) == Mat(p.transpose() * g));
        CHECK(image_basis(p) == a);
        CHECK(kernel_basis(p) == o.complement);
        CHECK(is_zero_matrix(Mat(a.basis().transpose() * g * o.complement.basis())));

        Mat s = gen.matrix(n, n);
        s = s + Mat(s.transpose());
        const Inertia in = congruence_signature(s);
        CHECK(in == oracle::sturm_inertia(s));
        CHECK(in.pos + in.neg + in.zero == n);
        const Mat change = gen.invertible(n);
        CHECK(congruence_signature(Mat(change.transpose() * s * change)) == in);
    }
}

TEST_CASE("positive definiteness via LDLT pivots") {
    CHECK(is_positive_definite(mat(2, 2, {2, 1, 1, 2})));
    CHECK_FALSE(is_positive_definite(mat(2, 2, {1, 2, 2, 1})));
    CHECK_FALSE(is_positive_definite(mat(2, 2, {0, 0, 0, 1})));
    CHECK(is_positive_definite(zeros(0, 0)));
    CHECK(ldlt_pivots(mat(2, 2, {2, 1, 1, 2})) == std::vector<Rational>{q(2), q(3, 2)});
}
