#include "hc/complex.hpp"

namespace hc {

bool FiniteComplex::full_domains() const {
    for (const auto& v : domains)
        if (!v.is_full()) return false;
    return true;
}

bool same_matrix(const Mat& a, const Mat& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

bool operator==(const FiniteComplex& a, const FiniteComplex& b) {
    auto same_list = [](const std::vector<Mat>& x, const std::vector<Mat>& y) {
        if (x.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (!same_matrix(x[i], y[i])) return false;
        return true;
    };
    return same_list(a.grams, b.grams) && same_list(a.diffs, b.diffs) && a.domains == b.domains;
}

FiniteComplex FiniteComplex::with_standard_grams(const std::vector<Index>& dims, std::vector<Mat> diffs) {
    FiniteComplex c;
    for (Index d : dims) {
        c.grams.push_back(identity(d));
        c.domains.push_back(Subspace::full(d));
    }
    c.diffs = std::move(diffs);
    check_shapes(c);
    return c;
}

void check_shapes(const FiniteComplex& c) {
    if (c.grams.empty()) throw ValidationError("complex has no spaces");
    const int n = c.length();
    if (static_cast<int>(c.diffs.size()) != n)
        throw ValidationError("complex of length " + std::to_string(n) + " needs " + std::to_string(n) +
                              " differentials, got " + std::to_string(c.diffs.size()));
    if (static_cast<int>(c.domains.size()) != n + 1) throw ValidationError("complex needs one domain per degree");
    for (int i = 0; i <= n; ++i) {
        if (c.gram(i).rows() != c.gram(i).cols())
            throw ValidationError("gram " + std::to_string(i) + " is not square");
        if (c.domain(i).ambient() != c.dim(i))
            throw ValidationError("domain " + std::to_string(i) + " has the wrong ambient dimension");
    }
    for (int i = 0; i < n; ++i)
        if (c.diff(i).rows() != c.dim(i + 1) || c.diff(i).cols() != c.dim(i))
            throw ValidationError("differential " + std::to_string(i) + " has shape " +
                                  std::to_string(c.diff(i).rows()) + "x" + std::to_string(c.diff(i).cols()) +
                                  ", expected " + std::to_string(c.dim(i + 1)) + "x" + std::to_string(c.dim(i)));
}

std::optional<Violation> validate(const FiniteComplex& c) {
    try {
        check_shapes(c);
    } catch (const ValidationError& e) {
        return Violation{-1, e.what()};
    }
    const int n = c.length();
    for (int i = 0; i <= n; ++i)
        if (!is_positive_definite(c.gram(i))) return Violation{i, "gram is not symmetric positive definite"};
    for (int i = 0; i < n; ++i) {
        const Mat image = c.domain(i).is_full() ? c.diff(i) : mul(c.diff(i), c.domain(i).basis());
        if (!c.domain(i + 1).contains(image_basis(image)))
            return Violation{i, "differential does not map its domain into the next domain"};
        if (i + 1 < n && !is_zero_matrix(mul(c.diff(i + 1), image)))
            return Violation{i, "composition of consecutive differentials is nonzero"};
    }
    return std::nullopt;
}

void require_valid(const FiniteComplex& c) {
    if (auto v = validate(c)) {
        const std::string where = v->degree < 0 ? std::string("shape") : "degree " + std::to_string(v->degree);
        throw ValidationError("invalid complex (" + where + "): " + v->what);
    }
}

Mat adjoint(const FiniteComplex& c, int i) {
    if (i < 0 || i >= c.length()) throw ValidationError("adjoint: degree " + std::to_string(i) + " out of range");
    const Subspace& v = c.domain(i);
    if (v.dim() == 0) return zeros(c.dim(i), c.dim(i + 1));
    const Mat dtg = mul(Mat(c.diff(i).transpose()), c.gram(i + 1));
    if (v.is_full()) return solve(c.gram(i), dtg);
    const Mat& b = v.basis();
    const Mat bt = b.transpose();
    return mul(b, solve(mul(mul(bt, c.gram(i)), b), mul(bt, dtg)));
}

Subspace kernel(const FiniteComplex& c, int i) {
    if (i == c.length()) return c.domain(i);
    return kernel_on(c.diff(i), c.domain(i));
}

Subspace incoming_range(const FiniteComplex& c, int i) {
    if (i == 0) return Subspace::zero(c.dim(0));
    return apply(c.diff(i - 1), c.domain(i - 1));
}

long CohomologyReport::euler() const {
    long chi = 0;
    for (size_t i = 0; i < degrees.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(degrees[i].dim);
    return chi;
}

CohomologyReport cohomology(const FiniteComplex& c) {
    require_valid(c);
    const int n = c.length();
    CohomologyReport report;
    for (int i = 0; i <= n; ++i) {
        DegreeCohomology d;
        const Subspace ker = kernel(c, i);
        d.incoming = incoming_range(c, i);
        d.dim = ker.dim() - d.incoming.dim();
        d.harmonic = i == 0 ? ker : meet(ker, kernel_basis(adjoint(c, i - 1)));
        d.adjoint_range = i == n ? Subspace::zero(c.dim(i)) : image_basis(adjoint(c, i));
        d.kodaira_exact = is_direct_sum({d.harmonic, d.incoming, d.adjoint_range}, Subspace::full(c.dim(i)));
        report.degrees.push_back(std::move(d));
    }
    return report;
}

namespace {

void require_full_domains(const FiniteComplex& c, const char* op) {
    if (!c.full_domains())
        throw ValidationError(std::string(op) + " needs full domains; this complex has proper subdomains");
}

}  // namespace

LaplacianReport laplacian(const FiniteComplex& c, int i) {
    require_valid(c);
    require_full_domains(c, "laplacian");
    if (i < 0 || i > c.length()) throw ValidationError("laplacian: degree out of range");
    Mat delta = zeros(c.dim(i), c.dim(i));
    if (i < c.length()) delta += mul(adjoint(c, i), c.diff(i));
    if (i > 0) delta += mul(c.diff(i - 1), adjoint(c, i - 1));
    Subspace k = kernel_basis(delta);
    return {std::move(delta), std::move(k)};
}

FiniteComplex dual_complex(const FiniteComplex& c) {
    require_valid(c);
    require_full_domains(c, "dual_complex");
    const int n = c.length();
    FiniteComplex d;
    for (int i = 0; i <= n; ++i) {
        d.grams.push_back(c.gram(n - i));
        d.domains.push_back(Subspace::full(c.dim(n - i)));
    }
    for (int i = 0; i < n; ++i) d.diffs.push_back(adjoint(c, n - i - 1));
    return d;
}

}  // namespace hc
