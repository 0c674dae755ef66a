#include "hc/random.hpp"

namespace hc {

int Generator::uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
}

bool Generator::coin(int numerator, int denominator) {
    return uniform(0, denominator - 1) < numerator;
}

Rational Generator::entry() {
    const int k = uniform(0, 9);
    if (k < 3) return Rational(0);
    if (k < 8) return Rational(uniform(-2, 2));
    const Rational num(uniform(-3, 3));
    return num / Rational(uniform(2, 3));
}

Mat Generator::matrix(Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = entry();
    return m;
}

Mat Generator::matrix_of_rank(Index rows, Index cols, Index r) {
    r = std::min({r, rows, cols});
    for (;;) {
        const Mat left = matrix(rows, r);
        const Mat m = left * matrix(r, cols);
        if (rank(m) == r) return m;
    }
}

Mat Generator::invertible(Index n) {
    for (;;) {
        Mat m = matrix(n, n);
        if (rank(m) == n) return m;
    }
}

Mat Generator::spd(Index n) {
    const Mat a = matrix(n, n);
    Mat g = a.transpose() * a;
    for (Index i = 0; i < n; ++i) g(i, i) += Rational(uniform(1, 3));
    return g;
}

Mat Generator::antisymmetric(Index n) {
    Mat s = zeros(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            s(i, j) = entry();
            s(j, i) = -s(i, j);
        }
    return s;
}

Mat Generator::cayley_orthogonal(Index n) {
    const Mat s = antisymmetric(n);
    const Mat id = identity(n);
    return Mat(id - s) * inverse(Mat(id + s));
}

Subspace Generator::subspace(Index ambient, Index dim) {
    return Subspace::span(matrix_of_rank(ambient, dim, dim));
}

Subspace Generator::superspace(const Subspace& u, Index dim) {
    const Index target = std::clamp(dim, u.dim(), u.ambient());
    Subspace s = u;
    while (s.dim() < target) s = join(s, Subspace::span(matrix(u.ambient(), target - s.dim())));
    return s;
}

FiniteComplex Generator::full_complex(const std::vector<Index>& dims, bool random_grams) {
    FiniteComplex c;
    const int n = static_cast<int>(dims.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        const Index d = dims[static_cast<size_t>(i)];
        c.grams.push_back(random_grams && coin(2, 3) ? spd(d) : identity(d));
        c.domains.push_back(Subspace::full(d));
    }
    Subspace previous_image = Subspace::zero(dims[0]);
    for (int i = 0; i < n; ++i) {
        const Mat ann = previous_image.annihilator();
        const Index target = dims[static_cast<size_t>(i) + 1];
        const Index r = uniform(0, static_cast<int>(std::min(target, ann.rows())));
        Mat li = matrix_of_rank(target, ann.rows(), r) * ann;
        previous_image = image_basis(li);
        c.diffs.push_back(std::move(li));
    }
    return c;
}

FiniteComplex Generator::full_complex(int n, Index max_dim, bool random_grams) {
    std::vector<Index> dims;
    for (int i = 0; i <= n; ++i) dims.push_back(coin(1, 8) ? 0 : uniform(1, static_cast<int>(max_dim)));
    return full_complex(dims, random_grams);
}

ComplexPair Generator::pair(int n, Index max_dim, bool random_grams) {
    ComplexPair p;
    p.big = full_complex(n, max_dim, random_grams);
    Subspace forced = Subspace::zero(p.big.dim(0));
    for (int i = 0; i <= n; ++i) {
        const Index d = p.big.dim(i);
        Subspace v;
        switch (uniform(0, 3)) {
            case 0: v = forced; break;
            case 1: v = Subspace::full(d); break;
            default: v = superspace(forced, uniform(static_cast<int>(forced.dim()), static_cast<int>(d)));
        }
        if (i < n) forced = apply(p.big.diff(i), v);
        p.domains.push_back(std::move(v));
    }
    return p;
}

std::vector<Subspace> Generator::between(const ComplexPair& p) {
    std::vector<Subspace> u;
    Subspace forced = Subspace::zero(p.big.dim(0));
    for (int i = 0; i <= p.length(); ++i) {
        const Subspace base = join(forced, p.domains[static_cast<size_t>(i)]);
        Subspace ui = superspace(base, uniform(static_cast<int>(base.dim()), static_cast<int>(base.ambient())));
        if (i < p.length()) forced = apply(p.big.diff(i), ui);
        u.push_back(std::move(ui));
    }
    return u;
}

}  // namespace hc
