#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include <qsl2/modulated_graph.hpp>
#include <qsl2/rational_function.hpp>

#include "graph_fixtures.hpp"

using namespace qsl2;
using fixtures::bare;

namespace {

/// Relabel the vertices of a dimension table by a permutation.
fixtures::Dims permuted(const fixtures::Dims& d, const std::vector<std::size_t>& perm) {
    const std::size_t n = d.size();
    fixtures::Dims out(n, std::vector<unsigned>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[perm[i]][perm[j]] = d[i][j];
    return out;
}

GraphType classify_whole(const fixtures::Dims& d) {
    const auto g = bare(d);
    const auto comps = g.components();
    REQUIRE(comps.size() == 1);
    return g.classify_component(comps[0]);
}

}  // namespace

TEST_CASE("adjacency examples") {
    REQUIRE(bare(fixtures::empty_dims(1)).adjacency() == Matrix<Integer>{{Integer(0)}});

    const auto dbl = bare(fixtures::double_edge()).adjacency();
    REQUIRE(dbl == Matrix<Integer>{{Integer(0), Integer(2)}, {Integer(2), Integer(0)}});

    const auto a3 = bare(fixtures::path(3)).adjacency();
    REQUIRE(a3 == Matrix<Integer>{{Integer(0), Integer(1), Integer(0)},
                                  {Integer(1), Integer(0), Integer(1)},
                                  {Integer(0), Integer(1), Integer(0)}});
    REQUIRE(a3 == a3.transpose());
}

TEST_CASE("asymmetric dims are rejected by adjacency") {
    fixtures::Dims d = fixtures::empty_dims(2);
    d[0][1] = 1;  // d[1][0] left at 0
    REQUIRE_THROWS_AS(bare(d).adjacency(), AsymmetricDims);
}

TEST_CASE("components examples") {
    REQUIRE(bare(fixtures::empty_dims(3)).components().size() == 3);
    REQUIRE(bare(fixtures::path(3)).components().size() == 1);

    // disjoint union of A_2 and a loop vertex
    fixtures::Dims d = fixtures::empty_dims(3);
    d[0][1] = d[1][0] = 1;
    d[2][2] = 1;
    const auto comps = bare(d).components();
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0] == std::vector<std::size_t>{0, 1});
    REQUIRE(comps[1] == std::vector<std::size_t>{2});
}

TEST_CASE("classification examples") {
    REQUIRE(classify_whole(fixtures::path(3)) == GraphType{GraphFamily::A, 3});
    REQUIRE(classify_whole(fixtures::double_edge()) == GraphType{GraphFamily::NonADET, 0});
    REQUIRE(classify_whole(fixtures::tadpole(1)) == GraphType{GraphFamily::T, 1});
    REQUIRE(classify_whole(fixtures::tadpole(4)) == GraphType{GraphFamily::T, 4});
    REQUIRE(classify_whole(fixtures::dynkin_d(4)) == GraphType{GraphFamily::D, 4});
    REQUIRE(classify_whole(fixtures::dynkin_d(7)) == GraphType{GraphFamily::D, 7});
    REQUIRE(classify_whole(fixtures::dynkin_e(6)) == GraphType{GraphFamily::E6, 0});
    REQUIRE(classify_whole(fixtures::dynkin_e(7)) == GraphType{GraphFamily::E7, 0});
    REQUIRE(classify_whole(fixtures::dynkin_e(8)) == GraphType{GraphFamily::E8, 0});
    REQUIRE(classify_whole(fixtures::cycle(3)) == GraphType{GraphFamily::NonADET, 0});
    REQUIRE(classify_whole(fixtures::affine_d(4)) == GraphType{GraphFamily::NonADET, 0});
    REQUIRE(classify_whole(fixtures::complete(4)) == GraphType{GraphFamily::NonADET, 0});
    // star with 4 leaves is affine D~_4, not Dynkin
    REQUIRE(classify_whole(fixtures::star(4)) == GraphType{GraphFamily::NonADET, 0});
}

TEST_CASE("coxeter numbers with vanishing certification") {
    REQUIRE(coxeter_number(GraphType{GraphFamily::A, 2}) == 3);
    REQUIRE(coxeter_number(GraphType{GraphFamily::D, 4}) == 6);
    REQUIRE(coxeter_number(GraphType{GraphFamily::E6, 0}) == 12);
    REQUIRE(coxeter_number(GraphType{GraphFamily::E7, 0}) == 18);
    REQUIRE(coxeter_number(GraphType{GraphFamily::E8, 0}) == 30);
    REQUIRE(coxeter_number(GraphType{GraphFamily::T, 1}) == 3);
    REQUIRE_THROWS_AS(coxeter_number(GraphType{GraphFamily::NonADET, 0}), NotADET);

    // P_{h-1}(A) = 0 and no smaller h' of matching parity vanishes
    auto certify = [](const fixtures::Dims& d, const GraphType& t) {
        const auto a = bare(d).adjacency();
        const unsigned h = coxeter_number(t);
        REQUIRE(cheb_p_annihilates(a, h - 1));
        for (unsigned hp = h % 2 == 0 ? 2u : 3u; hp < h; hp += 2)
            REQUIRE_FALSE(cheb_p_annihilates(a, hp - 1));
    };
    for (unsigned n = 1; n <= 12; ++n) certify(fixtures::path(n), GraphType{GraphFamily::A, n});
    for (unsigned n = 4; n <= 12; ++n) certify(fixtures::dynkin_d(n), GraphType{GraphFamily::D, n});
    for (unsigned n = 1; n <= 12; ++n) certify(fixtures::tadpole(n), GraphType{GraphFamily::T, n});
    certify(fixtures::dynkin_e(6), GraphType{GraphFamily::E6, 0});
    certify(fixtures::dynkin_e(7), GraphType{GraphFamily::E7, 0});
    certify(fixtures::dynkin_e(8), GraphType{GraphFamily::E8, 0});
    // T(1): adjacency [[1]], P_2(1) = 0
    REQUIRE(eval_at_matrix(cheb_p(2), Matrix<Integer>{{Integer(1)}}).is_zero());
}

TEST_CASE("non-ADET graphs: no Chebyshev vanishing up to degree 50") {
    std::vector<fixtures::Dims> corpus;
    for (std::size_t v = 3; v <= 9; ++v) corpus.push_back(fixtures::cycle(v));  // A~_2..A~_8
    for (std::size_t n = 4; n <= 8; ++n) corpus.push_back(fixtures::affine_d(n));
    corpus.push_back(fixtures::double_edge());
    corpus.push_back(fixtures::complete(3));
    corpus.push_back(fixtures::complete(4));
    for (const auto& d : corpus) {
        const auto a = bare(d).adjacency();
        Matrix<Integer> prev = Matrix<Integer>::identity(a.rows());
        Matrix<Integer> cur = a;
        for (unsigned m = 1; m <= 50; ++m) {
            REQUIRE_FALSE(cur.is_zero());  // P_m(A) != 0
            const Matrix<Integer> next = a * cur - prev;
            prev = cur;
            cur = next;
        }
    }
}

TEST_CASE("classification is invariant under relabeling") {
    std::mt19937_64 rng(99);
    const std::vector<fixtures::Dims> corpus{
        fixtures::path(5),      fixtures::dynkin_d(6), fixtures::dynkin_e(7),
        fixtures::tadpole(3),   fixtures::cycle(4),    fixtures::complete(4),
        fixtures::affine_d(5)};
    for (const auto& d : corpus) {
        const GraphType base = classify_whole(d);
        std::vector<std::size_t> perm(d.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int t = 0; t < 10; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            REQUIRE(classify_whole(permuted(d, perm)) == base);
        }
    }
}

TEST_CASE("degenerate forms are rejected at construction") {
    fixtures::Dims d = fixtures::empty_dims(1);
    d[0][0] = 2;
    ModulatedGraph<Rational>::FormMap forms;
    forms.emplace(std::make_pair(0, 0),
                  Matrix<Rational>{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
    REQUIRE_THROWS_AS(
        ModulatedGraph<Rational>(fixtures::names(1), d, std::move(forms)), DegenerateForm);
}

TEST_CASE("bare graphs allow combinatorial operations only") {
    const auto g = bare(fixtures::path(3));
    REQUIRE_FALSE(g.has_forms());
    REQUIRE_THROWS(g.form(0, 1));
}
