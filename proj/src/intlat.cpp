#include "qtoric/intlat.hpp"

#include <algorithm>
#include <sstream>

namespace qtoric {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::Underdetermined: return "underdetermined input";
    case ErrorKind::ImpossibleForm: return "impossible form";
    case ErrorKind::Inconsistent: return "inconsistent polytope";
    case ErrorKind::NotSimple: return "not simple";
    case ErrorKind::NotEdgeSimple: return "not edge-simple";
    case ErrorKind::InvalidMap: return "invalid map";
    case ErrorKind::DegenerateFunctional: return "degenerate functional";
    case ErrorKind::NotBlowDownable: return "not blow-downable";
    case ErrorKind::Unclassifiable: return "unclassifiable";
    case ErrorKind::PatternNotMatched: return "pattern not matched";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

IntVec normalize_sign(IntVec v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

SignVec::SignVec(IntVec entries) : rep_(normalize_sign(std::move(entries))) {
  if (rep_.empty())
    throw Error(ErrorKind::DimensionMismatch, "sign vector must have positive dimension");
  if (std::all_of(rep_.begin(), rep_.end(), [](const Int& x) { return x == 0; }))
    throw std::invalid_argument("sign vector must be nonzero");
}

SignVec::SignVec(std::initializer_list<long long> entries)
    : SignVec(IntVec(entries.begin(), entries.end())) {}

bool SignVec::primitive() const {
  Int g = 0;
  for (const auto& x : rep_) g = boost::multiprecision::gcd(g, x);
  return abs(g) == 1;
}

std::strong_ordering operator<=>(const SignVec& a, const SignVec& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.rep_[i] < b.rep_[i]) return std::strong_ordering::less;
    if (b.rep_[i] < a.rep_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string SignVec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (i) os << ',';
    os << rep_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SignVec& v) { return os << v.str(); }

Int det2(const IntVec& u, const IntVec& v) {
  if (u.size() != 2 || v.size() != 2)
    throw Error(ErrorKind::DimensionMismatch, "det2 needs vectors of dimension 2");
  return u[0] * v[1] - u[1] * v[0];
}

Int det2(const SignVec& u, const SignVec& v) { return det2(u.rep(), v.rep()); }

Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Int> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");

  std::vector<Int> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot on the smallest nonzero entry of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return out;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            divides = false;
            break;
          }
      if (!divides) continue;
      out.push_back(abs(m[t][t]));
      break;
    }
  }
  return out;
}

namespace {

IntMatrix reps_matrix(std::span<const SignVec> vs, std::size_t d) {
  IntMatrix m;
  m.reserve(vs.size());
  for (const auto& v : vs) {
    if (v.dim() != d) throw Error(ErrorKind::DimensionMismatch, "vector dimension differs from lattice rank");
    m.push_back(v.rep());
  }
  return m;
}

}  // namespace

bool is_basis(std::span<const SignVec> vs, std::size_t d) {
  if (vs.size() != d) return false;
  for (const auto& v : vs)
    if (v.dim() != d) return false;
  return abs(determinant(reps_matrix(vs, d))) == 1;
}

bool is_direct_summand(std::span<const SignVec> vs, std::size_t d) {
  if (vs.empty()) return true;
  if (vs.size() > d) return false;
  auto inv = smith_invariants(reps_matrix(vs, d));
  if (inv.size() != vs.size()) return false;
  return std::all_of(inv.begin(), inv.end(), [](const Int& x) { return x == 1; });
}

// ---------------------------------------------------------------------------
// Triangles

TriangleData::TriangleData(SignVec a, SignVec b, SignVec c) : v_{std::move(a), std::move(b), std::move(c)} {
  for (const auto& v : v_)
    if (v.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "triangle data lives in Z^2");
  for (std::size_t i = 0; i < 3; ++i)
    if (abs(det2(v_[i], v_[(i + 1) % 3])) != 1)
      throw std::invalid_argument("triangle data: adjacent vectors " + v_[i].str() + ", " +
                                  v_[(i + 1) % 3].str() + " are not unimodular");
}

TriangleData TriangleData::rotated(std::size_t by) const {
  by %= 3;
  return TriangleData(v_[by], v_[(by + 1) % 3], v_[(by + 2) % 3]);
}

TriangleData TriangleData::reflected() const { return TriangleData(v_[0], v_[2], v_[1]); }

int orientation_sigma(const TriangleData& t) {
  int s = 1;
  for (std::size_t i = 0; i < 3; ++i)
    if (det2(t[i], t[(i + 1) % 3]) < 0) s = -s;
  return s;
}

std::string TriangleClass::str() const {
  std::ostringstream os;
  os << "[(" << row0[0] << ',' << row0[1] << ");(" << row1[0] << ',' << row1[1] << ")]";
  return os.str();
}

namespace {

std::array<Int, 4> flat(const TriangleClass& c) { return {c.row0[0], c.row0[1], c.row1[0], c.row1[1]}; }

Int l1(const TriangleClass& c) {
  Int s = 0;
  for (const auto& x : flat(c)) s += abs(x);
  return s;
}

// Representative of the matrix modulo global sign.
TriangleClass normalized(TriangleClass c) {
  auto f = flat(c);
  auto it = std::find_if(f.begin(), f.end(), [](const Int& x) { return x != 0; });
  if (it != f.end() && *it < 0) {
    for (auto& x : c.row0) x = -x;
    for (auto& x : c.row1) x = -x;
  }
  return c;
}

IntVec neg(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVec add(const IntVec& a, const IntVec& b) { return {a[0] + b[0], a[1] + b[1]}; }

}  // namespace

bool operator<(const TriangleClass& a, const TriangleClass& b) {
  Int la = l1(a), lb = l1(b);
  if (la != lb) return la < lb;
  return flat(normalized(a)) < flat(normalized(b));
}

SignedClass canonical_triangle_class(const TriangleData& t) {
  const int sign = orientation_sigma(t);
  const TriangleData base = sign < 0 ? t.reflected() : t;

  std::optional<TriangleClass> best;
  for (std::size_t r = 0; r < 3; ++r) {
    const TriangleData rot = base.rotated(r);
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        IntVec a = s1 > 0 ? rot[0].rep() : neg(rot[0].rep());
        IntVec b = s2 > 0 ? rot[1].rep() : neg(rot[1].rep());
        if (det2(a, b) != 1) continue;
        if (normalize_sign(add(a, b)) != rot[2].rep()) continue;
        TriangleClass cand = normalized(TriangleClass{a, b});
        if (!best || cand < *best) best = cand;
      }
    }
  }
  if (!best) throw Error(ErrorKind::ImpossibleForm, "no rotation of the triangle has the (v1, v2, v1+v2) form");
  return {*best, sign};
}

// ---------------------------------------------------------------------------
// GL(2, Z)

IntVec Mat2::apply(const IntVec& u) const {
  if (u.size() != 2) throw Error(ErrorKind::DimensionMismatch, "Mat2 acts on Z^2");
  return {u[0] * a + u[1] * c, u[0] * b + u[1] * d};
}

SignVec Mat2::apply(const SignVec& u) const { return SignVec(apply(u.rep())); }

std::optional<Mat2> Mat2::inverse() const {
  Int dt = det();
  if (abs(dt) != 1) return std::nullopt;
  return Mat2{d * dt, -b * dt, -c * dt, a * dt};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[(" << m.a << ',' << m.b << ");(" << m.c << ',' << m.d << ")]";
}

std::optional<Mat2> solve_gl2(std::span<const std::pair<SignVec, SignVec>> pairs) {
  for (const auto& [u, v] : pairs)
    if (u.dim() != 2 || v.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "solve_gl2 works in Z^2");

  std::size_t i0 = pairs.size(), j0 = pairs.size();
  for (std::size_t i = 0; i < pairs.size() && i0 == pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (det2(pairs[i].first, pairs[j].first) != 0) {
        i0 = i;
        j0 = j;
        break;
      }
  if (i0 == pairs.size()) throw Error(ErrorKind::Underdetermined, "all source vectors are parallel");

  const IntVec& u = pairs[i0].first.rep();
  const IntVec& w = pairs[j0].first.rep();
  const Int du = det2(u, w);
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      IntVec x = pairs[i0].second.rep();
      IntVec y = pairs[j0].second.rep();
      if (s1 < 0) x = neg(x);
      if (s2 < 0) y = neg(y);
      // Rows: u*A = x, w*A = y, so A = U^{-1} [x; y] with U^{-1} = adj(U) / det(U).
      Int na = w[1] * x[0] - u[1] * y[0];
      Int nb = w[1] * x[1] - u[1] * y[1];
      Int nc = -w[0] * x[0] + u[0] * y[0];
      Int nd = -w[0] * x[1] + u[0] * y[1];
      if (na % du != 0 || nb % du != 0 || nc % du != 0 || nd % du != 0) continue;
      Mat2 a{na / du, nb / du, nc / du, nd / du};
      if (abs(a.det()) != 1) continue;
      bool all = std::all_of(pairs.begin(), pairs.end(),
                             [&](const auto& p) { return a.apply(p.first) == p.second; });
      if (all) return a;
    }
  }
  return std::nullopt;
}

}  // namespace qtoric
