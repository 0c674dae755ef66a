#include "hc/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

using mpz_int = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

namespace {

std::vector<std::vector<mpz_int>> integer_rows(const Mat& m) {
    std::vector<std::vector<mpz_int>> rows(static_cast<size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        mpz_int l = 1;
        for (Index j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
        for (Index j = 0; j < m.cols(); ++j) rows[static_cast<size_t>(i)].push_back(numerator(m(i, j)) * (l / denominator(m(i, j))));
    }
    return rows;
}

// Plain Gauss-Jordan nullspace, written separately from the library's elimination.
std::vector<std::vector<Rational>> nullspace(const Mat& m) {
    std::vector<std::vector<Rational>> a(static_cast<size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) a[static_cast<size_t>(i)].push_back(m(i, j));
    const size_t cols = static_cast<size_t>(m.cols());
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> out;
    for (size_t f = 0; f < cols; ++f) {
        if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][f];
        out.push_back(std::move(v));
    }
    return out;
}

Mat hcat(const Mat& a, const Mat& b) {
    Mat out(std::max(a.rows(), b.rows()), a.cols() + b.cols());
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    out << a, b;
    return out;
}

using Poly = std::vector<Rational>;   // low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
    trim(d);
    return d;
}

// Returns (quotient, remainder).
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        const size_t shift = a.size() - b.size();
        const Rational f = a.back() / b.back();
        q[shift] = f;
        for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        trim(a);
    }
    return {q, a};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign(const Rational& x) {
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Distinct roots of p in (0, inf) and (-inf, 0); p(0) != 0 required.
std::pair<int, int> distinct_sign_roots(const Poly& p) {
    std::vector<Poly> seq{p, derivative(p)};
    while (!seq.back().empty()) {
        Poly r = divide(seq[seq.size() - 2], seq.back()).second;
        for (auto& x : r) x = -x;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    std::vector<int> at_zero, at_pos, at_neg;
    for (const auto& q : seq) {
        if (q.empty()) continue;
        at_zero.push_back(sign(q[0]));
        at_pos.push_back(sign(q.back()));
        at_neg.push_back(sign(q.back()) * ((q.size() - 1) % 2 == 0 ? 1 : -1));
    }
    return {sign_changes(at_zero) - sign_changes(at_pos), sign_changes(at_neg) - sign_changes(at_zero)};
}

std::set<std::vector<int>> all_faces(const std::vector<std::vector<int>>& tops) {
    std::set<std::vector<int>> faces;
    for (auto t : tops) {
        std::sort(t.begin(), t.end());
        const size_t k = t.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> f;
            for (size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) f.push_back(t[b]);
            faces.insert(f);
        }
    }
    return faces;
}

struct Chains {
    std::vector<std::vector<std::vector<int>>> by_dim;
    std::vector<std::map<std::vector<int>, Index>> index;
};

Chains chains_of(const std::set<std::vector<int>>& faces, const std::set<std::vector<int>>& excluded) {
    Chains c;
    for (const auto& f : faces) {
        if (excluded.count(f)) continue;
        const size_t d = f.size() - 1;
        if (c.by_dim.size() <= d) {
            c.by_dim.resize(d + 1);
            c.index.resize(d + 1);
        }
        c.index[d][f] = static_cast<Index>(c.by_dim[d].size());
        c.by_dim[d].push_back(f);
    }
    return c;
}

// Boundary C_k -> C_{k-1} of the quotient chain complex, faces outside the complex dropped.
Mat boundary(const Chains& c, size_t k) {
    const Index rows = k == 0 || k - 1 >= c.by_dim.size() ? 0 : static_cast<Index>(c.by_dim[k - 1].size());
    const Index cols = k >= c.by_dim.size() ? 0 : static_cast<Index>(c.by_dim[k].size());
    Mat m = Mat::Zero(rows, cols);
    if (k == 0) return m;
    for (Index j = 0; j < cols; ++j) {
        const auto& s = c.by_dim[k][static_cast<size_t>(j)];
        for (size_t r = 0; r < s.size(); ++r) {
            auto f = s;
            f.erase(f.begin() + static_cast<long>(r));
            auto it = c.index[k - 1].find(f);
            if (it != c.index[k - 1].end()) m(it->second, j) = (r % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

std::vector<Index> betti_of(const Chains& c, size_t top) {
    std::vector<Index> out;
    for (size_t k = 0; k <= top; ++k) {
        const Index n = k < c.by_dim.size() ? static_cast<Index>(c.by_dim[k].size()) : 0;
        out.push_back(n - rank(boundary(c, k)) - rank(boundary(c, k + 1)));
    }
    return out;
}

}  // namespace

Index rank(const Mat& m) {
    auto a = integer_rows(m);
    const size_t rows = a.size(), cols = static_cast<size_t>(m.cols());
    size_t r = 0;
    mpz_int prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<Index>(r);
}

std::vector<Rational> characteristic_polynomial(const Mat& a) {
    const Index n = a.rows();
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[static_cast<size_t>(n)] = 1;
    Mat m = Mat::Zero(n, n);
    for (Index k = 1; k <= n; ++k) {
        m = a * m;
        for (Index i = 0; i < n; ++i) m(i, i) += c[static_cast<size_t>(n - k + 1)];
        const Mat am = a * m;
        Rational tr = 0;
        for (Index i = 0; i < n; ++i) tr += am(i, i);
        c[static_cast<size_t>(n - k)] = -tr / Rational(k);
    }
    return c;
}

hc::Inertia sturm_inertia(const Mat& s) {
    Poly p = characteristic_polynomial(s);
    hc::Inertia out;
    size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    out.zero = static_cast<Index>(z);
    p.erase(p.begin(), p.begin() + static_cast<long>(z));
    // Roots with multiplicity = sum over the chain p, gcd(p, p'), ... of distinct roots.
    Poly cur = p;
    while (cur.size() > 1) {
        auto [pos, neg] = distinct_sign_roots(cur);
        out.pos += pos;
        out.neg += neg;
        cur = gcd(cur, derivative(cur));
    }
    return out;
}

std::vector<Index> cohomology_dims(const hc::FiniteComplex& c) {
    const int n = c.length();
    std::vector<Index> out;
    for (int i = 0; i <= n; ++i) {
        const Mat& b = c.domain(i).basis();
        const Index dim_v = rank(b);
        const Index out_rank = i < n ? rank(Mat(c.diff(i) * b)) : 0;
        const Index in_rank = i > 0 ? rank(Mat(c.diff(i - 1) * c.domain(i - 1).basis())) : 0;
        out.push_back(dim_v - out_rank - in_rank);
    }
    return out;
}

std::vector<Index> image_dims(const hc::ComplexPair& p) {
    const int n = p.length();
    std::vector<Index> out;
    for (int j = 0; j <= n; ++j) {
        const Mat& b = p.domains[static_cast<size_t>(j)].basis();
        const Index dim_v = rank(b);
        const Index ker_d = dim_v - (j < n ? rank(Mat(p.big.diff(j) * b)) : 0);
        Index meet = 0;
        if (j > 0) {
            const Mat& l = p.big.diff(j - 1);
            meet = rank(l) + dim_v - rank(hcat(l, b));
        }
        out.push_back(ker_d - meet);
    }
    return out;
}

std::vector<Index> betti(const std::vector<std::vector<int>>& tops) {
    const auto faces = all_faces(tops);
    size_t top = 0;
    for (const auto& f : faces) top = std::max(top, f.size() - 1);
    return betti_of(chains_of(faces, {}), top);
}

std::vector<Index> relative_betti(const std::vector<std::vector<int>>& tops,
                                  const std::vector<std::vector<int>>& sub_tops) {
    const auto faces = all_faces(tops);
    size_t top = 0;
    for (const auto& f : faces) top = std::max(top, f.size() - 1);
    return betti_of(chains_of(faces, all_faces(sub_tops)), top);
}

std::vector<Index> relative_to_absolute_image(const std::vector<std::vector<int>>& tops,
                                              const std::vector<std::vector<int>>& sub_tops) {
    const auto faces = all_faces(tops);
    const auto sub = all_faces(sub_tops);
    const Chains abs = chains_of(faces, {});
    size_t top = abs.by_dim.size() - 1;
    std::vector<Index> out;
    for (size_t j = 0; j <= top; ++j) {
        // Coboundary delta_j = boundary_{j+1}^T on absolute cochains.
        const Mat delta = boundary(abs, j + 1).transpose();
        const Index nj = static_cast<Index>(abs.by_dim[j].size());
        // Relative cochains: those vanishing on simplices of the subcomplex.
        std::vector<Index> rel_idx;
        for (Index s = 0; s < nj; ++s)
            if (!sub.count(abs.by_dim[j][static_cast<size_t>(s)])) rel_idx.push_back(s);
        Mat restricted = Mat::Zero(delta.rows(), static_cast<Index>(rel_idx.size()));
        for (size_t k = 0; k < rel_idx.size(); ++k) restricted.col(static_cast<Index>(k)) = delta.col(rel_idx[k]);
        const auto z = nullspace(restricted);
        Mat zrel = Mat::Zero(nj, static_cast<Index>(z.size()));
        for (size_t k = 0; k < z.size(); ++k)
            for (size_t e = 0; e < rel_idx.size(); ++e) zrel(rel_idx[e], static_cast<Index>(k)) = z[k][e];
        const Mat b_abs = j == 0 ? Mat(Mat::Zero(nj, 0)) : Mat(boundary(abs, j).transpose());
        out.push_back(rank(hcat(zrel, b_abs)) - rank(b_abs));
    }
    return out;
}

std::vector<Index> suspension_ih(const std::vector<Index>& b, int p) {
    const int m = static_cast<int>(b.size()) - 1;
    std::vector<Index> out;
    for (int i = 0; i <= m + 1; ++i) {
        if (i < m - p) out.push_back(b[static_cast<size_t>(i)]);
        else if (i == m - p) out.push_back(0);
        else out.push_back(b[static_cast<size_t>(i) - 1]);
    }
    return out;
}

}  // namespace oracle
