#include "doctest.h"
#include "hc/complex.hpp"
#include "hc/oracles.hpp"
#include "hc/random.hpp"
#include "support.hpp"

using namespace hc;
using test::mat;
using test::q;

namespace {

FiniteComplex circle() {
    return FiniteComplex::with_standard_grams({3, 3}, {mat(3, 3, {-1, 1, 0, -1, 0, 1, 0, -1, 1})});
}

FiniteComplex point() { return FiniteComplex::with_standard_grams({1}, {}); }

std::vector<Index> dims_of(const CohomologyReport& r) {
    std::vector<Index> out;
    for (const auto& d : r.degrees) out.push_back(d.dim);
    return out;
}

bool orthogonal(const Subspace& a, const Subspace& b, const Mat& g) {
    return is_zero_matrix(Mat(a.basis().transpose() * g * b.basis()));
}

}  // namespace

TEST_CASE("validate accepts a complex and names the failing degree") {
    auto c = FiniteComplex::with_standard_grams({1, 2, 1}, {mat(2, 1, {1, 0}), mat(1, 2, {0, 1})});
    CHECK_FALSE(validate(c).has_value());

    c.diffs[1] = mat(1, 2, {1, 0});
    const auto v = validate(c);
    REQUIRE(v.has_value());
    CHECK(v->degree == 0);
    CHECK_THROWS_AS(require_valid(c), ValidationError);
}

TEST_CASE("a differential leaving the next domain is a violation") {
    auto c = FiniteComplex::with_standard_grams({2, 2}, {mat(2, 2, {1, 0, 0, 1})});
    c.domains[1] = Subspace::span(mat(2, 1, {0, 1}));
    c.domains[0] = Subspace::span(mat(2, 1, {1, 0}));
    CHECK(validate(c).has_value());
    c.domains[0] = Subspace::span(mat(2, 1, {0, 1}));
    CHECK_FALSE(validate(c).has_value());
}

TEST_CASE("non positive definite gram is rejected") {
    auto c = point();
    c.grams[0] = mat(1, 1, {0});
    CHECK(validate(c).has_value());
}

TEST_CASE("adjoint examples") {
    auto c = FiniteComplex::with_standard_grams({2, 1}, {mat(1, 2, {1, 0})});
    CHECK(adjoint(c, 0) == mat(2, 1, {1, 0}));

    c.grams[0] = mat(2, 2, {1, 0, 0, 2});
    CHECK(adjoint(c, 0) == mat(2, 1, {1, 0}));

    c.grams[0] = identity(2);
    c.domains[0] = Subspace::span(mat(2, 1, {1, 0}));
    CHECK(adjoint(c, 0) == mat(2, 1, {1, 0}));

    // On span{(1,1)} with D(x, y) = x: <D v, t> = a t for v = a(1,1), so D* t = (t/2, t/2).
    c.domains[0] = Subspace::span(mat(2, 1, {1, 1}));
    CHECK(adjoint(c, 0) == mat(2, 1, {q(1, 2), q(1, 2)}));
    CHECK_THROWS(adjoint(c, 1));
}

TEST_CASE("circle and point cohomology") {
    const auto r = cohomology(circle());
    CHECK(dims_of(r) == std::vector<Index>{1, 1});
    CHECK(r.degrees[0].kodaira_exact);
    CHECK(r.degrees[1].kodaira_exact);
    CHECK(r.degrees[0].harmonic == Subspace::span(mat(3, 1, {1, 1, 1})));
    CHECK(r.euler() == 0);

    CHECK(dims_of(cohomology(point())) == std::vector<Index>{1});
}

TEST_CASE("laplacian kernels") {
    const auto lap = laplacian(circle(), 0);
    CHECK(lap.kernel == Subspace::span(mat(3, 1, {1, 1, 1})));
    CHECK(lap.matrix == mat(3, 3, {2, -1, -1, -1, 2, -1, -1, -1, 2}));

    const auto flat = FiniteComplex::with_standard_grams({2, 3}, {zeros(3, 2)});
    CHECK(is_zero_matrix(laplacian(flat, 1).matrix));
    CHECK(laplacian(flat, 1).kernel.is_full());

    auto sub = circle();
    sub.domains[0] = Subspace::span(mat(3, 1, {1, 1, 1}));
    CHECK_THROWS_AS(laplacian(sub, 0), ValidationError);
    CHECK_THROWS_AS(dual_complex(sub), ValidationError);
}

TEST_CASE("dual complex mirrors dimensions") {
    const auto d = dual_complex(circle());
    CHECK(dims_of(cohomology(d)) == std::vector<Index>{1, 1});
    CHECK(dual_complex(point()) == point());
    CHECK(dual_complex(d) == circle());
}

TEST_CASE("random full-domain complexes: Kodaira, Laplacian, duality, Euler") {
    Generator gen(11);
    for (int t = 0; t < 150; ++t) {
        const auto c = gen.full_complex(gen.uniform(0, 4), 5, gen.coin(1, 2));
        const auto r = cohomology(c);
        const auto oracle_dims = oracle::cohomology_dims(c);
        const auto dual = cohomology(dual_complex(c));
        long chi_spaces = 0;
        for (int i = 0; i <= c.length(); ++i) {
            const auto& d = r.degrees[static_cast<size_t>(i)];
            const Mat& g = c.gram(i);
            CHECK(d.dim == oracle_dims[static_cast<size_t>(i)]);
            CHECK(d.dim == d.harmonic.dim());
            CHECK(d.kodaira_exact);
            CHECK(is_direct_sum({d.harmonic, d.incoming, d.adjoint_range}, Subspace::full(c.dim(i))));
            CHECK(orthogonal(d.harmonic, d.incoming, g));
            CHECK(orthogonal(d.harmonic, d.adjoint_range, g));
            CHECK(orthogonal(d.incoming, d.adjoint_range, g));
            CHECK(laplacian(c, i).kernel == d.harmonic);
            CHECK(dual.degrees[static_cast<size_t>(c.length() - i)].harmonic.dim() == d.harmonic.dim());
            if (i < c.length()) {
                // Ker D_i^* is the gram-orthogonal complement of ran D_i.
                const Subspace ran = apply(c.diff(i), Subspace::full(c.dim(i)));
                CHECK(kernel_basis(adjoint(c, i)) == complement_within(ran, Subspace::full(c.dim(i + 1)), c.gram(i + 1)));
            }
            chi_spaces += (i % 2 ? -1 : 1) * static_cast<long>(c.dim(i));
        }
        CHECK(r.euler() == chi_spaces);
        CHECK(dual_complex(dual_complex(c)) == c);
    }
}

TEST_CASE("random complexes with proper domains agree with the rank oracle") {
    Generator gen(12);
    for (int t = 0; t < 150; ++t) {
        const auto p = gen.pair(gen.uniform(1, 4), 5, true);
        const auto c = p.small();
        REQUIRE_FALSE(validate(c).has_value());
        const auto r = cohomology(c);
        const auto dims = oracle::cohomology_dims(c);
        for (int i = 0; i <= c.length(); ++i) {
            const auto& d = r.degrees[static_cast<size_t>(i)];
            CHECK(d.dim == dims[static_cast<size_t>(i)]);
            CHECK(d.harmonic.dim() == d.dim);
            CHECK(c.domain(i).contains(d.harmonic));
        }
    }
}
