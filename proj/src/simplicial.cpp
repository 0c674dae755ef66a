#include "hc/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hc {

Simplex sorted(Simplex s) {
    std::sort(s.begin(), s.end());
    return s;
}

int permutation_sign(const Simplex& s) {
    int sign = 1;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) sign = -sign;
    return sign;
}

std::vector<Simplex> codim_one_faces(const Simplex& s) {
    std::vector<Simplex> out;
    for (size_t r = 0; r < s.size(); ++r) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(r));
        out.push_back(std::move(f));
    }
    return out;
}

SimplicialComplex SimplicialComplex::generated_by(const std::vector<Simplex>& tops) {
    std::set<Simplex> all;
    for (const auto& t0 : tops) {
        const Simplex t = sorted(t0);
        const size_t k = t.size();
        for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
            Simplex f;
            for (size_t b = 0; b < k; ++b)
                if (mask & (1ul << b)) f.push_back(t[b]);
            all.insert(std::move(f));
        }
    }
    SimplicialComplex sc;
    for (const auto& f : all) {
        const size_t d = f.size() - 1;
        if (sc.faces.size() <= d) {
            sc.faces.resize(d + 1);
            sc.index.resize(d + 1);
        }
        sc.faces[d].push_back(f);
    }
    for (size_t d = 0; d < sc.faces.size(); ++d) {
        std::sort(sc.faces[d].begin(), sc.faces[d].end());
        for (size_t i = 0; i < sc.faces[d].size(); ++i) sc.index[d][sc.faces[d][i]] = static_cast<Index>(i);
    }
    return sc;
}

Index SimplicialComplex::count(int k) const {
    if (k < 0 || k > dim()) return 0;
    return static_cast<Index>(faces[static_cast<size_t>(k)].size());
}

Index SimplicialComplex::find(const Simplex& s) const {
    if (s.empty() || s.size() > faces.size()) return -1;
    const auto& idx = index[s.size() - 1];
    auto it = idx.find(s);
    return it == idx.end() ? -1 : it->second;
}

namespace {

std::vector<Index> kept_positions(Index total, const std::vector<bool>& keep) {
    std::vector<Index> pos(static_cast<size_t>(total), -1);
    Index next = 0;
    for (Index i = 0; i < total; ++i)
        if (keep.empty() || keep[static_cast<size_t>(i)]) pos[static_cast<size_t>(i)] = next++;
    return pos;
}

Index kept_count(Index total, const std::vector<bool>& keep) {
    if (keep.empty()) return total;
    return static_cast<Index>(std::count(keep.begin(), keep.end(), true));
}

}  // namespace

Mat boundary_matrix(const SimplicialComplex& sc, int k, const std::vector<bool>& keep_rows,
                    const std::vector<bool>& keep_cols) {
    const Index nrows = kept_count(sc.count(k - 1), keep_rows);
    const Index ncols = kept_count(sc.count(k), keep_cols);
    Mat m = zeros(nrows, ncols);
    if (k <= 0 || k > sc.dim()) return m;
    const auto row_pos = kept_positions(sc.count(k - 1), keep_rows);
    const auto col_pos = kept_positions(sc.count(k), keep_cols);
    const auto& simplices = sc.faces[static_cast<size_t>(k)];
    for (size_t j = 0; j < simplices.size(); ++j) {
        const Index c = col_pos[j];
        if (c < 0) continue;
        const auto faces = codim_one_faces(simplices[j]);
        for (size_t r = 0; r < faces.size(); ++r) {
            const Index row = row_pos[static_cast<size_t>(sc.find(faces[r]))];
            if (row >= 0) m(row, c) = (r % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

std::vector<Index> betti_numbers(const SimplicialComplex& sc) {
    std::vector<Index> ranks(static_cast<size_t>(sc.dim()) + 2, 0);
    for (int k = 1; k <= sc.dim(); ++k) ranks[static_cast<size_t>(k)] = rank(boundary_matrix(sc, k));
    std::vector<Index> b;
    for (int k = 0; k <= sc.dim(); ++k)
        b.push_back(sc.count(k) - ranks[static_cast<size_t>(k)] - ranks[static_cast<size_t>(k) + 1]);
    return b;
}

std::optional<std::vector<int>> coherent_orientation(const std::vector<Simplex>& tops, const std::vector<int>& given,
                                                     const std::vector<bool>& shared_face_allowed,
                                                     const SimplicialComplex& sc) {
    if (tops.empty()) return std::vector<int>{};
    const int n = static_cast<int>(tops.front().size()) - 1;
    // For each allowed (n-1)-face: incident tops with their incidence numbers.
    std::vector<std::vector<std::pair<size_t, int>>> incident(static_cast<size_t>(sc.count(n - 1)));
    for (size_t t = 0; t < tops.size(); ++t) {
        const auto faces = codim_one_faces(tops[t]);
        for (size_t r = 0; r < faces.size(); ++r) {
            const Index f = sc.find(faces[r]);
            if (f < 0 || (!shared_face_allowed.empty() && !shared_face_allowed[static_cast<size_t>(f)])) continue;
            incident[static_cast<size_t>(f)].push_back({t, (r % 2 == 0) ? 1 : -1});
        }
    }
    std::vector<std::vector<std::pair<size_t, int>>> adjacent(tops.size());   // (neighbour, relative sign)
    for (const auto& inc : incident) {
        if (inc.size() != 2) continue;
        const int rel = -inc[0].second * inc[1].second;
        adjacent[inc[0].first].push_back({inc[1].first, rel});
        adjacent[inc[1].first].push_back({inc[0].first, rel});
    }
    std::vector<int> sign(tops.size(), 0);
    for (size_t start = 0; start < tops.size(); ++start) {
        if (sign[start] != 0) continue;
        sign[start] = given.empty() ? 1 : given[start];
        std::deque<size_t> queue{start};
        while (!queue.empty()) {
            const size_t t = queue.front();
            queue.pop_front();
            for (auto [u, rel] : adjacent[t]) {
                const int want = sign[t] * rel;
                if (sign[u] == 0) {
                    sign[u] = want;
                    queue.push_back(u);
                } else if (sign[u] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
}

}  // namespace hc
