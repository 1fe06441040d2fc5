#pragma once

/**
 * @file random_forms.hpp
 * @brief Seeded random nondegenerate form draws, by rejection sampling of
 *        uniform small-integer entries.
 */

#include <random>

#include "matrix.hpp"
#include "modulated_graph.hpp"

namespace qsl2 {

/// Uniform small-integer entry, lifted into the field of `sample`.
template <class K>
K random_small_entry(std::mt19937_64& rng, const K& sample, long lo = -4, long hi = 4) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return sample.from_int(dist(rng));
}

template <class K>
Matrix<K> random_invertible_matrix(std::mt19937_64& rng, std::size_t n, const K& sample) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix<K> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_small_entry(rng, sample);
        if (m.rank() == n) return m;
    }
    throw std::runtime_error("rejection sampling failed to produce an invertible matrix");
}

/// A modulated graph over the field of `sample` with the given symmetric
/// dimension table and freshly drawn nondegenerate forms.
template <class K>
ModulatedGraph<K> with_random_forms(const std::vector<std::string>& names,
                                    const std::vector<std::vector<unsigned>>& dims,
                                    const K& sample, std::mt19937_64& rng) {
    typename ModulatedGraph<K>::FormMap forms;
    const std::size_t n = names.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dims[i][j] > 0)
                forms.emplace(std::make_pair(i, j),
                              random_invertible_matrix(rng, dims[i][j], sample));
    return ModulatedGraph<K>(names, dims, std::move(forms), sample);
}

}  // namespace qsl2
