#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qtoric/intlat.hpp"

using namespace qtoric;

namespace {

// Leibniz expansion.
Int leibniz(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    Int term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
Int minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(m.size(), k, 0, cur, rows);
  subsets(m[0].size(), k, 0, cur, cols);
  Int g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      IntMatrix sub;
      for (auto i : r) {
        IntVec row;
        for (auto j : c) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      g = gcd(g, boost::multiprecision::abs(leibniz(sub)));
    }
  return g;
}

// Invariant factors from determinantal divisors.
std::vector<Int> smith_oracle(const IntMatrix& m) {
  std::vector<Int> out;
  Int prev = 1;
  const std::size_t kmax = std::min(m.size(), m[0].size());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int d = minor_gcd(m, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int b) {
  std::uniform_int_distribution<int> dist(-b, b);
  IntMatrix m(r, IntVec(c));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

std::vector<SignVec> rows_of(const IntMatrix& m) {
  std::vector<SignVec> out;
  for (const auto& r : m) out.emplace_back(r);
  return out;
}

}  // namespace

TEST(SignVec, NormalizesFirstNonzeroEntry) {
  SignVec a{-1, 2, 0};
  EXPECT_EQ(a.rep(), (IntVec{1, -2, 0}));
  EXPECT_EQ(SignVec({0, -3}), SignVec({0, 3}));
  EXPECT_NE(SignVec({1, 1}), SignVec({1, -1}));
  EXPECT_TRUE(SignVec({2, 3}).primitive());
  EXPECT_FALSE(SignVec({2, 4}).primitive());
}

TEST(Det2, Examples) {
  EXPECT_EQ(det2(SignVec{1, 0}, SignVec{0, 1}), 1);
  EXPECT_EQ(det2(SignVec{1, 0}, SignVec{1, 1}), 1);
  EXPECT_EQ(det2(SignVec{1, 0}, SignVec{1, 2}), 2);
  EXPECT_EQ(det2(SignVec{-1, 0}, SignVec{0, -1}), 1);
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto m = random_matrix(rng, n, n, 6);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Determinant, HandlesZeroPivots) {
  IntMatrix m{{0, 1, 2}, {0, 3, 4}, {5, 6, 7}};
  EXPECT_EQ(determinant(m), leibniz(m));
  IntMatrix z{{0, 0}, {0, 1}};
  EXPECT_EQ(determinant(z), 0);
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    auto m = random_matrix(rng, r, c, 5);
    EXPECT_EQ(smith_invariants(m), smith_oracle(m)) << "trial " << trial;
  }
}

TEST(Smith, KnownForms) {
  EXPECT_EQ(smith_invariants({{2, 0}, {0, 1}}), (std::vector<Int>{1, 2}));
  EXPECT_EQ(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<Int>{2, 6, 12}));
}

TEST(IsBasis, Examples) {
  std::vector<SignVec> a{{1, 0}, {0, 1}}, b{{1, 1}, {1, -1}}, c{{1, 0}};
  EXPECT_TRUE(is_basis(a, 2));
  EXPECT_FALSE(is_basis(b, 2));
  EXPECT_FALSE(is_basis(c, 2));
}

TEST(IsDirectSummand, Examples) {
  std::vector<SignVec> a{{1, 0, 0}, {0, 1, 0}}, b{{2, 0}, {0, 1}}, c{{1, 1, 0}, {0, 1, 1}};
  EXPECT_TRUE(is_direct_summand(a, 3));
  EXPECT_FALSE(is_direct_summand(b, 2));
  EXPECT_TRUE(is_direct_summand(c, 3));
}

TEST(IsDirectSummand, MatchesMaximalMinorGcd) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const std::size_t k = 1 + trial % d;
    auto m = random_matrix(rng, k, d, 3);
    bool zero_row = std::any_of(m.begin(), m.end(), [](const IntVec& r) {
      return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
    });
    if (zero_row) continue;
    const bool oracle = minor_gcd(m, k) == 1;
    EXPECT_EQ(is_direct_summand(rows_of(m), d), oracle) << "trial " << trial;
    if (k == d) EXPECT_EQ(is_basis(rows_of(m), d), oracle);
  }
}

TEST(Triangle, RejectsNonUnimodularNeighbours) {
  EXPECT_THROW(TriangleData(SignVec{1, 0}, SignVec{1, 2}, SignVec{0, 1}), std::invalid_argument);
}

TEST(OrientationSigma, Examples) {
  EXPECT_EQ(orientation_sigma({SignVec{1, 0}, SignVec{0, 1}, SignVec{1, 1}}), 1);
  EXPECT_EQ(orientation_sigma({SignVec{0, 1}, SignVec{1, 0}, SignVec{1, 1}}), -1);
  EXPECT_EQ(orientation_sigma({SignVec{1, 0}, SignVec{0, 1}, SignVec{1, -1}}), -1);
}

TEST(OrientationSigma, RepresentativeAndRotationInvariant) {
  const IntVec a{1, 0}, b{0, 1}, c{1, 1};
  const int base = orientation_sigma({SignVec{a}, SignVec{b}, SignVec{c}});
  for (int mask = 0; mask < 8; ++mask) {
    auto flip = [&](IntVec v, int bit) {
      if (mask & (1 << bit))
        for (auto& x : v) x = -x;
      return SignVec(v);
    };
    TriangleData t(flip(a, 0), flip(b, 1), flip(c, 2));
    for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(orientation_sigma(t.rotated(r)), base);
    EXPECT_EQ(orientation_sigma(t.reflected()), -base);
  }
}

TEST(CanonicalClass, Examples) {
  const TriangleClass id{{1, 0}, {0, 1}};
  EXPECT_EQ(canonical_triangle_class({SignVec{1, 0}, SignVec{0, 1}, SignVec{1, 1}}), (SignedClass{id, 1}));
  EXPECT_EQ(canonical_triangle_class({SignVec{0, 1}, SignVec{1, 0}, SignVec{1, 1}}), (SignedClass{id, -1}));
  auto g = canonical_triangle_class({SignVec{0, 1}, SignVec{-1, 1}, SignVec{1, -2}});
  auto j = canonical_triangle_class({SignVec{0, 1}, SignVec{1, 0}, SignVec{-1, 1}});
  EXPECT_NE(g.cls, j.cls);
}

// Every unimodular triangle with entries bounded by 4: rotations keep the
// class and sign, reflection keeps the class and flips the sign, and the
// class matrix has det +1 with rows among the triangle's vectors.
TEST(CanonicalClass, ExhaustiveInvariance) {
  std::vector<SignVec> prim;
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y) {
      if (!x && !y) continue;
      SignVec v{x, y};
      if (v.primitive() && v.rep() == IntVec{x, y}) prim.push_back(v);
    }
  int checked = 0;
  for (const auto& a : prim)
    for (const auto& b : prim) {
      if (boost::multiprecision::abs(det2(a, b)) != 1) continue;
      for (int s : {1, -1}) {
        IntVec cv{a[0] + s * b[0], a[1] + s * b[1]};
        TriangleData t(a, b, SignVec(cv));
        const auto sc = canonical_triangle_class(t);
        EXPECT_EQ(sc.sign, orientation_sigma(t));
        for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(canonical_triangle_class(t.rotated(r)), sc);
        auto refl = canonical_triangle_class(t.reflected());
        EXPECT_EQ(refl.cls, sc.cls);
        EXPECT_EQ(refl.sign, -sc.sign);
        EXPECT_EQ(sc.cls.row0[0] * sc.cls.row1[1] - sc.cls.row0[1] * sc.cls.row1[0], 1);
        const SignVec r0(sc.cls.row0), r1(sc.cls.row1);
        const auto& cyc = t.cyclic();
        EXPECT_TRUE(std::find(cyc.begin(), cyc.end(), r0) != cyc.end());
        EXPECT_TRUE(std::find(cyc.begin(), cyc.end(), r1) != cyc.end());
        ++checked;
      }
    }
  EXPECT_GT(checked, 100);
}

TEST(Mat2, ActsOnRowVectors) {
  Mat2 a{1, 1, 0, 1};
  EXPECT_EQ(a.apply(IntVec{1, 1}), (IntVec{1, 2}));
  EXPECT_EQ(a.apply(IntVec{1, 0}), (IntVec{1, 1}));
  EXPECT_EQ(*a.inverse() * a, Mat2::identity());
  EXPECT_FALSE((Mat2{2, 0, 0, 1}.inverse()));
}

TEST(SolveGl2, Examples) {
  std::vector<std::pair<SignVec, SignVec>> id{{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
  EXPECT_EQ(*solve_gl2(id), Mat2::identity());
  std::vector<std::pair<SignVec, SignVec>> swap{{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
  auto s = *solve_gl2(swap);
  EXPECT_EQ(s.apply(SignVec{1, 0}), (SignVec{0, 1}));
  EXPECT_EQ(s.apply(SignVec{0, 1}), (SignVec{1, 0}));
  std::vector<std::pair<SignVec, SignVec>> shear{{{1, 0}, {1, 1}}, {{0, 1}, {0, 1}}, {{1, 1}, {1, 2}}};
  EXPECT_EQ(*solve_gl2(shear), (Mat2{1, 1, 0, 1}));
}

TEST(SolveGl2, ParallelSourcesAreUnderdetermined) {
  std::vector<std::pair<SignVec, SignVec>> par{{{1, 0}, {1, 0}}, {{-1, 0}, {0, 1}}};
  try {
    (void)solve_gl2(par);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Underdetermined);
  }
}

TEST(SolveGl2, RecoversRandomUnimodularMaps) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-3, 3);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Mat2 a{dist(rng), dist(rng), dist(rng), dist(rng)};
    if (boost::multiprecision::abs(a.det()) != 1) continue;
    std::vector<std::pair<SignVec, SignVec>> pairs;
    for (int k = 0; k < 4; ++k) {
      IntVec u{dist(rng), dist(rng)};
      if (u[0] == 0 && u[1] == 0) continue;
      pairs.emplace_back(SignVec(u), a.apply(SignVec(u)));
    }
    if (pairs.size() < 2 || det2(pairs[0].first, pairs[1].first) == 0) continue;
    auto found = solve_gl2(pairs);
    ASSERT_TRUE(found);
    EXPECT_EQ(boost::multiprecision::abs(found->det()), 1);
    for (const auto& [u, v] : pairs) EXPECT_EQ(found->apply(u), v);
    ++solved;
  }
  EXPECT_GT(solved, 20);
}

TEST(SolveGl2, NoSolutionForNonUnimodularTargets) {
  std::vector<std::pair<SignVec, SignVec>> p{{{1, 0}, {1, 0}}, {{0, 1}, {1, 2}}};
  EXPECT_FALSE(solve_gl2(p));
}
