#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "wlab/error.hpp"
#include "wlab/geometry.hpp"
#include "wlab/params.hpp"

namespace wlab {
namespace {

const WeierstrassParams kHalfThree = make_params(0.5, 3);

TEST(Params, DerivedConstants) {
  EXPECT_NEAR(kHalfThree.d_w, 1.36907024642854256, 1e-13);
  // 2 pi^2 2^{2-D_W} (20/7 + 6/43.75), evaluated term by term.
  const double by_hand = 2.0 * std::numbers::pi * std::numbers::pi *
                         std::pow(2.0, std::log(2.0) / std::log(3.0)) * (20.0 / 7.0 + 6.0 / 43.75);
  EXPECT_NEAR(kHalfThree.eta, by_hand, 1e-10);
  EXPECT_NEAR(kHalfThree.eta, 91.527533764609347, 1e-9);
  EXPECT_NEAR(lower_bound_constant(0.5, 3), 4.0 + std::numbers::pi / 3.0, 1e-12);
}

TEST(Params, Rejections) {
  try {
    make_params(0.2, 3);
    FAIL() << "expected constraint error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::constraint);
    EXPECT_STREQ(e.what(), "lambda*nb <= 1");
  }
  EXPECT_THROW(make_params(0.0, 3), Error);
  EXPECT_THROW(make_params(1.0, 3), Error);
  EXPECT_THROW(make_params(0.5, 1), Error);
  EXPECT_NO_THROW(make_params(0.25, 3, /*strict=*/false));
  // eta needs lambda nb^2 > 1 even in relaxed mode.
  EXPECT_THROW(make_params(0.1, 3, false), Error);
}

TEST(Contraction, FormulaAndCoincidence) {
  const Point2 p0 = fixed_point(kHalfThree, 0);
  EXPECT_EQ(contraction(kHalfThree, 0, p0), p0);
  const Point2 a = contraction(kHalfThree, 1, {0.0, 2.0});
  EXPECT_NEAR(a.x, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(a.y, 1.0 + std::cos(2.0 * std::numbers::pi / 3.0), 1e-15);
  EXPECT_NEAR(a.y, 0.5, 1e-15);
  const Point2 b = contraction(kHalfThree, 0, {1.0, 2.0});
  EXPECT_NEAR(b.x, a.x, 1e-15);
  EXPECT_NEAR(b.y, a.y, 1e-15);
  EXPECT_THROW(contraction(kHalfThree, 3, p0), Error);
  EXPECT_THROW(contraction(kHalfThree, -1, p0), Error);
}

TEST(FixedPoint, Values) {
  const Point2 expected[] = {{0.0, 2.0}, {0.5, -2.0}, {1.0, 2.0}};
  for (int i = 0; i < 3; ++i) {
    const Point2 p = fixed_point(kHalfThree, i);
    EXPECT_NEAR(p.x, expected[i].x, 1e-15);
    EXPECT_NEAR(p.y, expected[i].y, 1e-14);
    const Point2 q = contraction(kHalfThree, i, p);
    EXPECT_NEAR(q.x, p.x, 1e-12);
    EXPECT_NEAR(q.y, p.y, 1e-12);
  }
}

TEST(ApplyWord, CompositionOrder) {
  EXPECT_EQ(apply_word(kHalfThree, {}, {0.3, 1.1}), (Point2{0.3, 1.1}));
  for (int i = 0; i < 3; ++i) {
    const Point2 p = fixed_point(kHalfThree, i);
    const Point2 q = apply_word(kHalfThree, Word{std::vector<int>(7, i)}, p);
    EXPECT_NEAR(q.x, p.x, 1e-12);
    EXPECT_NEAR(q.y, p.y, 1e-12);
  }
  // T_1(P_2) coincides with T_2(P_0).
  const Point2 lhs = apply_word(kHalfThree, Word{{1}}, fixed_point(kHalfThree, 2));
  const Point2 rhs = contraction(kHalfThree, 2, fixed_point(kHalfThree, 0));
  EXPECT_NEAR(lhs.x, rhs.x, 1e-12);
  EXPECT_NEAR(lhs.y, rhs.y, 1e-12);
  // Outermost letter first: (1, 0) means T_1(T_0(p)).
  const Point2 p{0.2, 0.7};
  const Point2 composed = apply_word(kHalfThree, Word{{1, 0}}, p);
  const Point2 manual = contraction(kHalfThree, 1, contraction(kHalfThree, 0, p));
  EXPECT_EQ(composed, manual);
  EXPECT_THROW(apply_word(kHalfThree, Word{{0, 4}}, p), Error);
}

TEST(Word, IndexDigits) {
  EXPECT_EQ(word_of_index(3, 3, 0).letters, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(word_of_index(3, 3, 5).letters, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(word_of_index(3, 2, 8).letters, (std::vector<int>{2, 2}));
  EXPECT_THROW(word_of_index(3, 2, 9), Error);
}

TEST(VertexChain, CountsForThree) {
  EXPECT_EQ(vertex_chain(kHalfThree, 0).size(), 3u);
  EXPECT_EQ(vertex_chain(kHalfThree, 1).size(), 7u);
  const LevelGraph g2 = vertex_chain(kHalfThree, 2);
  EXPECT_EQ(g2.size(), 19u);
  EXPECT_EQ(g2.size() - g2.boundary_indices.size(), 16u);
  for (int m = 0; m <= 6; ++m) {
    EXPECT_EQ(vertex_chain(kHalfThree, m).size(), quoted_vertex_count(3, m)) << m;
  }
}

TEST(VertexChain, LevelOneDedupFindsTwoPairs) {
  // nb^{m+1} = 9 raw images collapse to 7: exactly two coincident pairs.
  std::set<std::pair<long long, long long>> keys;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Point2 p = contraction(kHalfThree, i, fixed_point(kHalfThree, j));
      keys.insert({std::llround(p.x * 1e9), std::llround(p.y * 1e9)});
    }
  }
  EXPECT_EQ(9 - keys.size(), 2u);
}

TEST(VertexChain, GeneralBaseCount) {
  // Deduplication leaves (nb-1) nb^m + 1 vertices; the quoted closed form only
  // matches it for nb = 3 or m = 0.
  for (int nb : {2, 3, 4, 5}) {
    const WeierstrassParams p = make_params(0.8, nb);
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(vertex_chain(p, m).size(), chain_vertex_count(nb, m)) << nb << " " << m;
    }
  }
  EXPECT_EQ(quoted_vertex_count(4, 1), 10u);
  EXPECT_EQ(chain_vertex_count(4, 1), 13u);
}

TEST(VertexChain, StructureInvariants) {
  for (int nb : {3, 4}) {
    const WeierstrassParams p = make_params(0.6, nb);
    for (int m = 0; m <= 4; ++m) {
      const LevelGraph g = vertex_chain(p, m);
      const double width = column_width(nb, m);
      for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        EXPECT_LT(g.vertices[k].x, g.vertices[k + 1].x);
        EXPECT_NEAR(g.vertices[k + 1].x - g.vertices[k].x, width, 1e-12);
      }
      ASSERT_EQ(g.boundary_indices.size(), static_cast<std::size_t>(nb));
      const std::size_t stride = static_cast<std::size_t>(std::pow(nb, m));
      for (int i = 0; i < nb; ++i) EXPECT_EQ(g.boundary_indices[i], i * stride);
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (!g.is_boundary(k)) EXPECT_EQ(g.neighbours(k).size(), 2u);
      }
      EXPECT_EQ(g.edges().size(), g.size() - 1);
    }
  }
}

TEST(VertexChain, CoincidenceIdentities) {
  for (int nb : {3, 4, 5}) {
    const WeierstrassParams p = make_params(0.7, nb);
    for (int i = 0; i + 1 < nb; ++i) {
      const Point2 a = contraction(p, i, fixed_point(p, nb - 1));
      const Point2 b = contraction(p, i + 1, fixed_point(p, 0));
      EXPECT_NEAR(a.x, b.x, 1e-12);
      EXPECT_NEAR(a.y, b.y, 1e-12);
    }
  }
}

TEST(VertexChain, BudgetEnforced) {
  Budget tiny;
  tiny.max_vertices = 100;
  try {
    vertex_chain(kHalfThree, 4, tiny);
    FAIL() << "expected size limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_limit);
  }
}

TEST(Polygons, CountsAndVertices) {
  const auto level0 = polygons(kHalfThree, 0);
  ASSERT_EQ(level0.size(), 1u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(level0[0].vertices[i], fixed_point(kHalfThree, i));
  EXPECT_EQ(polygons(kHalfThree, 1).size(), 3u);

  const auto level2 = polygons(kHalfThree, 2);
  ASSERT_EQ(level2.size(), 9u);
  const LevelGraph chain = vertex_chain(kHalfThree, 2);
  for (const Polygon& poly : level2) {
    const Word w = word_of_index(3, 2, poly.index);
    for (int k = 0; k < 3; ++k) {
      const Point2 direct = apply_word(kHalfThree, w, fixed_point(kHalfThree, k));
      EXPECT_NEAR(poly.vertices[k].x, direct.x, 1e-12);
      EXPECT_NEAR(poly.vertices[k].y, direct.y, 1e-12);
      const Point2 on_chain = chain.vertices[polygon_vertex_index(3, poly.index, k)];
      EXPECT_NEAR(poly.vertices[k].x, on_chain.x, 1e-9);
      EXPECT_NEAR(poly.vertices[k].y, on_chain.y, 1e-9);
    }
  }
  // Consecutive polygons share exactly one vertex: last of j, first of j+1.
  for (std::size_t j = 0; j + 1 < level2.size(); ++j) {
    EXPECT_NEAR(level2[j].vertices.back().x, level2[j + 1].vertices.front().x, 1e-12);
    EXPECT_NEAR(level2[j].vertices.back().y, level2[j + 1].vertices.front().y, 1e-9);
    EXPECT_LT(level2[j].vertices[1].x, level2[j + 1].vertices[1].x);
  }
}

TEST(EdgeHeights, LevelZeroAndBounds) {
  const auto level0 = edge_heights(kHalfThree, 0);
  ASSERT_EQ(level0.size(), 2u);
  EXPECT_NEAR(level0[0].height, 4.0, 1e-12);
  EXPECT_NEAR(level0[0].lower_bound, 4.0 + std::numbers::pi / 3.0, 1e-12);
  for (int m = 0; m <= 6; ++m) {
    for (const EdgeHeight& e : edge_heights(kHalfThree, m)) {
      EXPECT_LE(e.height, e.upper_bound);
      EXPECT_LE(e.height, e.sampled_extent + 1e-12);
      EXPECT_NEAR(e.upper_bound,
                  kHalfThree.eta * std::pow(column_width(3, m), 2.0 - kHalfThree.d_w), 1e-12);
    }
  }
}

TEST(BoxCount, SingleSquarePerColumnAtLeast) {
  for (int m = 0; m <= 3; ++m) {
    const BoxCount c = box_count(kHalfThree, m, 1);
    EXPECT_EQ(c.columns, 2u * static_cast<std::size_t>(std::pow(3, m)));
    EXPECT_GE(c.squares, c.columns);
  }
}

TEST(BoxCount, BelowCoverBound) {
  const BoxCount c = box_count(kHalfThree, 3, 27);
  EXPECT_LE(static_cast<double>(c.squares), c.bound);
  EXPECT_NEAR(c.side, column_width(3, 3) / 27.0, 1e-18);
}

TEST(BoxCount, Errors) {
  EXPECT_THROW(box_count(kHalfThree, 2, 0), Error);
  EXPECT_THROW(box_count(kHalfThree, 2, 1, -1), Error);
}

TEST(LeastSquares, ExactLine) {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{1, 3, 5, 7};
  const LineFit fit = least_squares(x, y);
  EXPECT_NEAR(fit.slope, 2.0, 1e-14);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-14);
  EXPECT_THROW(least_squares(std::vector<double>{1.0}, std::vector<double>{1.0}), Error);
}

TEST(BoxDimension, SlopeNearExponent) {
  const BoxDimensionEstimate est = box_dimension(kHalfThree, 2, 7);
  EXPECT_NEAR(est.fit.slope, kHalfThree.d_w, 0.05);
}

}  // namespace
}  // namespace wlab
