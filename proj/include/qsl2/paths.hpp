#pragma once

/**
 * @file paths.hpp
 * @brief Path bases for tensor powers of the I x I-graded space V.
 *
 * A path of length L is a vertex sequence v_0 .. v_L together with arrow
 * indices x_k in [0, dim V_{v_{k-1} v_k}). Paths of length L from i to j
 * form the basis of the (i,j) block of V^{(x)L}; length 0 gives the unit
 * object (one basis element per vertex, blocks (i,i)).
 */

#include <map>
#include <vector>

#include "errors.hpp"

namespace qsl2 {

struct Path {
    std::vector<std::size_t> vertices;  // L + 1 entries
    std::vector<unsigned> arrows;       // L entries

    std::size_t length() const { return arrows.size(); }
    std::size_t start() const { return vertices.front(); }
    std::size_t end() const { return vertices.back(); }

    bool operator==(const Path& o) const {
        return vertices == o.vertices && arrows == o.arrows;
    }
    bool operator<(const Path& o) const {
        if (vertices != o.vertices) return vertices < o.vertices;
        return arrows < o.arrows;
    }
};

using BlockKey = std::pair<std::size_t, std::size_t>;

/// Paths of one length, grouped into (start, end) blocks with index lookup.
class PathLayer {
  public:
    PathLayer() = default;

    void insert(Path p) {
        auto& block = blocks_[{p.start(), p.end()}];
        block.index.emplace(p, block.paths.size());
        block.paths.push_back(std::move(p));
    }

    const std::vector<Path>& paths(std::size_t i, std::size_t j) const {
        static const std::vector<Path> empty;
        auto it = blocks_.find({i, j});
        return it == blocks_.end() ? empty : it->second.paths;
    }

    std::size_t block_dim(std::size_t i, std::size_t j) const { return paths(i, j).size(); }

    /// Index of p within its block; -1 if absent.
    long index_of(const Path& p) const {
        auto it = blocks_.find({p.start(), p.end()});
        if (it == blocks_.end()) return -1;
        auto jt = it->second.index.find(p);
        return jt == it->second.index.end() ? -1 : static_cast<long>(jt->second);
    }

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (const auto& [k, b] : blocks_) t += b.paths.size();
        return t;
    }

    std::vector<BlockKey> block_keys() const {
        std::vector<BlockKey> keys;
        for (const auto& [k, b] : blocks_)
            if (!b.paths.empty()) keys.push_back(k);
        return keys;
    }

  private:
    struct Block {
        std::vector<Path> paths;
        std::map<Path, std::size_t> index;
    };
    std::map<BlockKey, Block> blocks_;
};

/// Path layers for lengths 0..max_len over a fixed dimension table.
class PathTable {
  public:
    PathTable(const std::vector<std::vector<unsigned>>& dims, std::size_t max_len,
              std::size_t budget = 500000)
        : dims_(dims) {
        const std::size_t n = dims.size();
        layers_.resize(max_len + 1);
        std::size_t produced = 0;
        for (std::size_t v = 0; v < n; ++v) {
            layers_[0].insert(Path{{v}, {}});
            ++produced;
        }
        std::vector<Path> frontier;
        for (std::size_t v = 0; v < n; ++v) frontier.push_back(Path{{v}, {}});
        for (std::size_t len = 1; len <= max_len; ++len) {
            std::vector<Path> next;
            for (const Path& p : frontier) {
                const std::size_t tail = p.end();
                for (std::size_t w = 0; w < n; ++w) {
                    for (unsigned a = 0; a < dims[tail][w]; ++a) {
                        Path q = p;
                        q.vertices.push_back(w);
                        q.arrows.push_back(a);
                        if (++produced > budget)
                            throw BudgetExceeded("path count exceeds the configured budget");
                        layers_[len].insert(q);
                        next.push_back(std::move(q));
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    const PathLayer& layer(std::size_t len) const { return layers_.at(len); }
    std::size_t max_length() const { return layers_.size() - 1; }
    const std::vector<std::vector<unsigned>>& dims() const { return dims_; }

  private:
    std::vector<std::vector<unsigned>> dims_;
    std::vector<PathLayer> layers_;
};

}  // namespace qsl2
