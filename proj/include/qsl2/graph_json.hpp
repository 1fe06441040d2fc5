#pragma once

/**
 * @file graph_json.hpp
 * @brief JSON graph specification:
 *   {"field": "...", "vertices": ["v1", ...],
 *    "dims": [[i, j, d], ...],          // once per unordered pair, loops allowed
 *    "forms": [[i, j, [[entries]]], ...]}   // per ordered pair, optional
 * Entries are scalar literals (strings) or plain integers.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "matrix.hpp"
#include "modulated_graph.hpp"
#include "scalar_parse.hpp"

namespace qsl2 {

template <class K>
Matrix<K> matrix_from_json(const nlohmann::json& j, const K& sample) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a nonempty array of rows", 0);
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix<K> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError("matrix rows have inconsistent lengths", r);
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& cell = j[r][c];
            if (cell.is_number_integer())
                m(r, c) = sample.from_int(cell.get<long>());
            else if (cell.is_string())
                m(r, c) = parse_scalar(cell.get<std::string>(), sample);
            else
                throw ParseError("matrix entries must be integers or scalar strings", c);
        }
    }
    return m;
}

template <class K>
nlohmann::ordered_json matrix_to_json(const Matrix<K>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::ordered_json matrix_to_json(const Matrix<Integer>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
ModulatedGraph<K> graph_from_json(const nlohmann::json& j, const K& sample) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph needs a 'vertices' array", 0);
    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) names.push_back(v.get<std::string>());
    const std::size_t nv = names.size();

    std::vector<std::vector<unsigned>> dims(nv, std::vector<unsigned>(nv, 0));
    if (j.contains("dims")) {
        for (const auto& entry : j["dims"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("dims entries are [i, j, d] triples", 0);
            const std::size_t a = entry[0].get<std::size_t>();
            const std::size_t b = entry[1].get<std::size_t>();
            if (a >= nv || b >= nv) throw ParseError("dims entry references a bad vertex", 0);
            const unsigned d = entry[2].get<unsigned>();
            dims[a][b] = d;
            dims[b][a] = d;  // given once per unordered pair
        }
    }

    typename ModulatedGraph<K>::FormMap forms;
    if (j.contains("forms")) {
        for (const auto& entry : j["forms"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("forms entries are [i, j, matrix] triples", 0);
            const std::size_t a = entry[0].get<std::size_t>();
            const std::size_t b = entry[1].get<std::size_t>();
            if (a >= nv || b >= nv) throw ParseError("form entry references a bad vertex", 0);
            forms.emplace(std::make_pair(a, b), matrix_from_json(entry[2], sample));
        }
    }
    return ModulatedGraph<K>(std::move(names), std::move(dims), std::move(forms), sample);
}

template <class K>
nlohmann::ordered_json graph_to_json(const ModulatedGraph<K>& g, const std::string& field) {
    nlohmann::ordered_json j;
    j["field"] = field;
    j["vertices"] = g.vertex_names();
    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t k = i; k < g.vertex_count(); ++k)
            if (g.dim(i, k) > 0)
                dims.push_back({i, k, g.dim(i, k)});
    j["dims"] = std::move(dims);
    if (g.has_forms()) {
        nlohmann::ordered_json forms = nlohmann::ordered_json::array();
        for (const auto& [key, form] : g.forms())
            forms.push_back({key.first, key.second, matrix_to_json(form)});
        j["forms"] = std::move(forms);
    }
    return j;
}

}  // namespace qsl2
