#pragma once

// Dimension tables for the graph corpus used across the test suites.

#include <string>
#include <vector>

#include <qsl2/modulated_graph.hpp>
#include <qsl2/rational.hpp>

namespace fixtures {

using Dims = std::vector<std::vector<unsigned>>;

inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
    return v;
}

inline Dims empty_dims(std::size_t n) { return Dims(n, std::vector<unsigned>(n, 0)); }

inline Dims path(std::size_t n) {
    Dims d = empty_dims(n);
    for (std::size_t i = 0; i + 1 < n; ++i) d[i][i + 1] = d[i + 1][i] = 1;
    return d;
}

/// Tadpole T(n): path with one loop at vertex 0.
inline Dims tadpole(std::size_t n) {
    Dims d = path(n);
    d[0][0] = 1;
    return d;
}

/// Dynkin D(n), n >= 4: path on n-1 vertices with an extra leaf at the fork.
inline Dims dynkin_d(std::size_t n) {
    Dims d = path(n - 1);
    for (auto& row : d) row.push_back(0);
    d.push_back(std::vector<unsigned>(n, 0));
    d[n - 1][n - 3] = d[n - 3][n - 1] = 1;  // leaf attached next to the end
    return d;
}

/// E6/E7/E8: path on n-1 vertices with a leaf attached to vertex 2.
inline Dims dynkin_e(std::size_t n) {
    Dims d = path(n - 1);
    for (auto& row : d) row.push_back(0);
    d.push_back(std::vector<unsigned>(n, 0));
    d[n - 1][2] = d[2][n - 1] = 1;
    return d;
}

/// Affine A~_n: cycle on n+1 >= 3 vertices. (A~_1 is the double edge below.)
inline Dims cycle(std::size_t vertices) {
    Dims d = path(vertices);
    d[0][vertices - 1] = d[vertices - 1][0] = 1;
    return d;
}

inline Dims double_edge() {
    Dims d = empty_dims(2);
    d[0][1] = d[1][0] = 2;
    return d;
}

/// Affine D~_n: n+1 vertices, two leaves at each end of a central path.
inline Dims affine_d(std::size_t n) {
    const std::size_t total = n + 1;
    Dims d = empty_dims(total);
    // central path: vertices 2 .. n-2
    for (std::size_t i = 2; i + 1 <= n - 2; ++i) d[i][i + 1] = d[i + 1][i] = 1;
    d[0][2] = d[2][0] = 1;
    d[1][2] = d[2][1] = 1;
    d[n - 1][n - 2] = d[n - 2][n - 1] = 1;
    d[n][n - 2] = d[n - 2][n] = 1;
    return d;
}

inline Dims complete(std::size_t n) {
    Dims d = empty_dims(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) d[i][j] = 1;
    return d;
}

/// Star with `leaves` leaves: vertex 0 is the center.
inline Dims star(std::size_t leaves) {
    Dims d = empty_dims(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) d[0][i] = d[i][0] = 1;
    return d;
}

inline qsl2::ModulatedGraph<qsl2::Rational> bare(const Dims& d) {
    return qsl2::ModulatedGraph<qsl2::Rational>::bare(names(d.size()), d);
}

}  // namespace fixtures
