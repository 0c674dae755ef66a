#include "hc/triangulations.hpp"

#include <algorithm>
#include <map>

namespace hc::tri {

std::vector<Simplex> simplex_boundary(int k) {
    std::vector<Simplex> out;
    for (int skip = 0; skip <= k; ++skip) {
        Simplex s;
        for (int v = 0; v <= k; ++v)
            if (v != skip) s.push_back(v);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> torus7() {
    std::vector<Simplex> out;
    for (int i = 0; i < 7; ++i) {
        out.push_back(sorted({i, (i + 1) % 7, (i + 3) % 7}));
        out.push_back(sorted({i, (i + 2) % 7, (i + 3) % 7}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> cone(const std::vector<Simplex>& x, int apex) {
    std::vector<Simplex> out;
    for (auto s : x) {
        s.push_back(apex);
        out.push_back(sorted(s));
    }
    return out;
}

std::vector<Simplex> suspension(const std::vector<Simplex>& x, int a, int b) {
    auto out = cone(x, a);
    auto lower = cone(x, b);
    out.insert(out.end(), lower.begin(), lower.end());
    return out;
}

namespace {

// Monotone lattice paths from (0,0) to (p,q) as sequences of (i, j).
void staircases(int p, int q, std::vector<std::pair<int, int>>& path,
                std::vector<std::vector<std::pair<int, int>>>& out) {
    const auto [i, j] = path.back();
    if (i == p && j == q) {
        out.push_back(path);
        return;
    }
    if (i < p) {
        path.push_back({i + 1, j});
        staircases(p, q, path, out);
        path.pop_back();
    }
    if (j < q) {
        path.push_back({i, j + 1});
        staircases(p, q, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Simplex> product(const std::vector<Simplex>& x, const std::vector<Simplex>& y, int y_vertices) {
    std::vector<Simplex> out;
    for (const auto& s0 : x) {
        for (const auto& t0 : y) {
            const Simplex s = sorted(s0), t = sorted(t0);
            std::vector<std::vector<std::pair<int, int>>> paths;
            std::vector<std::pair<int, int>> path{{0, 0}};
            staircases(static_cast<int>(s.size()) - 1, static_cast<int>(t.size()) - 1, path, paths);
            for (const auto& p : paths) {
                Simplex f;
                for (auto [i, j] : p) f.push_back(s[static_cast<size_t>(i)] * y_vertices + t[static_cast<size_t>(j)]);
                out.push_back(sorted(f));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> cp2() {
    return {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 8}, {0, 1, 2, 5, 6}, {0, 1, 2, 6, 7}, {0, 1, 2, 7, 8},
            {0, 1, 3, 4, 6}, {0, 1, 3, 5, 6}, {0, 1, 4, 6, 7}, {0, 1, 4, 7, 8}, {0, 2, 3, 4, 5}, {0, 2, 4, 5, 8},
            {0, 2, 5, 6, 8}, {0, 2, 6, 7, 8}, {0, 3, 4, 5, 7}, {0, 3, 4, 6, 7}, {0, 3, 5, 6, 8}, {0, 3, 5, 7, 8},
            {0, 3, 6, 7, 8}, {0, 4, 5, 7, 8}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 7, 8}, {1, 2, 5, 6, 7},
            {1, 3, 4, 6, 8}, {1, 3, 5, 6, 8}, {1, 3, 5, 7, 8}, {1, 4, 5, 6, 7}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8},
            {2, 3, 4, 5, 7}, {2, 3, 4, 6, 7}, {2, 3, 4, 6, 8}, {2, 3, 6, 7, 8}, {2, 4, 5, 6, 7}, {2, 4, 5, 6, 8}};
}

std::vector<Simplex> remove_star(const std::vector<Simplex>& x, int v) {
    std::vector<Simplex> out;
    for (const auto& s : x)
        if (std::find(s.begin(), s.end(), v) == s.end()) out.push_back(s);
    return out;
}

std::vector<Simplex> boundary_faces(const std::vector<Simplex>& x) {
    std::map<Simplex, int> count;
    for (const auto& s : x)
        for (const auto& f : codim_one_faces(sorted(s))) ++count[f];
    std::vector<Simplex> out;
    for (const auto& [f, c] : count)
        if (c == 1) out.push_back(f);
    return out;
}

std::vector<Simplex> mobius_band() {
    std::vector<Simplex> out;
    for (int i = 0; i < 5; ++i) out.push_back(sorted({i, (i + 1) % 5, (i + 2) % 5}));
    return out;
}

std::vector<Simplex> cylinder() {
    return {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}};
}

std::vector<Simplex> disk() { return cone(simplex_boundary(2), 3); }

std::vector<Simplex> torus_minus_disk() { return remove_star(torus7(), 0); }

std::vector<Simplex> genus2_minus_disk() {
    const std::map<int, int> glue{{7, 0}, {8, 1}, {10, 3}};
    std::vector<Simplex> out;
    for (const auto& s : torus7())
        if (s != Simplex{0, 1, 3}) out.push_back(s);
    for (const auto& s : torus7()) {
        if (s == Simplex{0, 1, 3}) continue;
        Simplex t;
        for (int v : s) {
            const auto it = glue.find(v + 7);
            t.push_back(it == glue.end() ? v + 7 : it->second);
        }
        out.push_back(sorted(t));
    }
    return remove_star(out, 2);
}

}  // namespace hc::tri
