#pragma once

// Exact integer lattice algebra: sign classes of integer vectors, determinants,
// basis and direct-summand tests, and canonical forms of triangle data.

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtoric/error.hpp"

namespace qtoric {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// A nonzero integer vector taken modulo global sign.
///
/// The stored representative is normalized so that its first nonzero entry
/// is positive; two SignVecs compare equal iff their representatives do.
class SignVec {
 public:
  SignVec() = default;
  explicit SignVec(IntVec entries);
  SignVec(std::initializer_list<long long> entries);

  const IntVec& rep() const { return rep_; }
  std::size_t dim() const { return rep_.size(); }
  const Int& operator[](std::size_t i) const { return rep_[i]; }

  /// gcd of the entries is 1.
  bool primitive() const;

  friend bool operator==(const SignVec&, const SignVec&) = default;
  friend std::strong_ordering operator<=>(const SignVec& a, const SignVec& b);

  std::string str() const;

 private:
  IntVec rep_;
};

std::ostream& operator<<(std::ostream& os, const SignVec& v);

/// Flips `v` so that its first nonzero entry is positive. Zero stays zero.
IntVec normalize_sign(IntVec v);

/// Row-major square or rectangular integer matrix.
using IntMatrix = std::vector<IntVec>;

Int det2(const IntVec& u, const IntVec& v);
/// Determinant on the normalized representatives.
Int det2(const SignVec& u, const SignVec& v);

/// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(IntMatrix m);

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
std::vector<Int> smith_invariants(IntMatrix m);

bool is_basis(std::span<const SignVec> vs, std::size_t d);
bool is_direct_summand(std::span<const SignVec> vs, std::size_t d);

/// Three pairwise unimodular classes in Z^2 read as a cycle.
class TriangleData {
 public:
  TriangleData(SignVec a, SignVec b, SignVec c);

  const std::array<SignVec, 3>& cyclic() const { return v_; }
  const SignVec& operator[](std::size_t i) const { return v_[i]; }

  TriangleData rotated(std::size_t by = 1) const;
  /// Swaps the second and third entries.
  TriangleData reflected() const;

  friend bool operator==(const TriangleData&, const TriangleData&) = default;

 private:
  std::array<SignVec, 3> v_;
};

/// A 2x2 integer matrix of determinant +1, stored as rows.
struct TriangleClass {
  IntVec row0;
  IntVec row1;

  friend bool operator==(const TriangleClass&, const TriangleClass&) = default;
  std::string str() const;
};

/// Order used for class bookkeeping: L1 size of the matrix, then the
/// matrix modulo global sign compared row-major.
bool operator<(const TriangleClass& a, const TriangleClass& b);

int orientation_sigma(const TriangleData& t);

struct SignedClass {
  TriangleClass cls;
  int sign = 1;
  friend bool operator==(const SignedClass&, const SignedClass&) = default;
};

/// Canonical representative of a triangle's class together with its sign.
///
/// A triangle of sign -1 is first reflected; then every rotation (v1, v2, v3)
/// and representative choice with det(v1, v2) = +1 and v3 = [v1 + v2] is a
/// candidate, and the least candidate matrix (v1; v2) is returned.
SignedClass canonical_triangle_class(const TriangleData& t);

/// 2x2 integer matrix acting on row vectors from the right: u -> u * A.
struct Mat2 {
  Int a, b, c, d;  // rows (a b) and (c d)

  Int det() const { return a * d - b * c; }
  IntVec apply(const IntVec& u) const;
  SignVec apply(const SignVec& u) const;
  std::optional<Mat2> inverse() const;  // only for |det| = 1

  friend bool operator==(const Mat2&, const Mat2&) = default;
  static Mat2 identity() { return {1, 0, 0, 1}; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Finds A with |det A| = 1 and u_i * A = v_i modulo sign for every pair.
/// Throws Error(Underdetermined) when all sources are parallel.
std::optional<Mat2> solve_gl2(std::span<const std::pair<SignVec, SignVec>> pairs);

}  // namespace qtoric
