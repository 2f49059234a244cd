#include "qtoric/cobord4.hpp"

#include <algorithm>
#include <sstream>

namespace qtoric {

namespace {

Int abs_det(const SignVec& a, const SignVec& b) { return boost::multiprecision::abs(det2(a, b)); }

IntVec scaled_sum(const SignVec& a, int s1, const SignVec& b, int s2) {
  IntVec out(2);
  for (std::size_t k = 0; k < 2; ++k) out[k] = s1 * a[k] + s2 * b[k];
  return out;
}

}  // namespace

Polygon4::Polygon4(std::vector<SignVec> vecs) : vecs_(std::move(vecs)) {
  if (vecs_.size() < 3) throw Error(ErrorKind::DimensionMismatch, "a polygon needs at least 3 facets");
  for (const auto& v : vecs_)
    if (v.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "polygon labels live in Z^2");
}

const SignVec& Polygon4::at(long long i) const {
  const long long m = static_cast<long long>(vecs_.size());
  return vecs_[((i % m) + m) % m];
}

Polygon4 Polygon4::rotated(std::size_t by) const {
  std::vector<SignVec> out;
  for (std::size_t i = 0; i < m(); ++i) out.push_back(at(static_cast<long long>(i + by)));
  return Polygon4(std::move(out));
}

Polygon4 Polygon4::reflected() const {
  std::vector<SignVec> out;
  for (std::size_t i = 0; i < m(); ++i) out.push_back(at(-static_cast<long long>(i)));
  return Polygon4(std::move(out));
}

std::string Polygon4::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m(); ++i) s += (i ? "," : "") + vecs_[i].str();
  return s + ")";
}

ValidationReport validate_polygon(const Polygon4& p) {
  ValidationReport r;
  for (std::size_t i = 0; i < p.m(); ++i) {
    const auto& a = p.at(i);
    const auto& b = p.at(i + 1);
    if (abs_det(a, b) != 1)
      r.fail("facets " + std::to_string(i) + "," + std::to_string((i + 1) % p.m()) + ": |det" + a.str() + b.str() +
             "| = " + abs_det(a, b).str());
  }
  return r;
}

std::vector<int> blow_down_indices(const Polygon4& p) {
  std::vector<int> out;
  if (p.m() < 4) return out;
  for (std::size_t i = 0; i < p.m(); ++i) {
    const long long j = static_cast<long long>(i);
    if (abs_det(p.at(j - 1), p.at(j + 1)) == 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

BlowDown blow_down(const Polygon4& p, int i) {
  if (p.m() < 4) throw Error(ErrorKind::NotBlowDownable, "a triangle cannot be blown down");
  if (i < 0 || i >= static_cast<int>(p.m())) throw Error(ErrorKind::NotBlowDownable, "position out of range");
  const auto& prev = p.at(i - 1);
  const auto& mid = p.at(i);
  const auto& next = p.at(i + 1);
  if (abs_det(prev, next) != 1)
    throw Error(ErrorKind::NotBlowDownable, "|det" + prev.str() + next.str() + "| != 1 at position " + std::to_string(i));
  bool sum_ok = false;
  for (int s : {1, -1})
    if (SignVec(scaled_sum(prev, 1, next, s)) == mid) sum_ok = true;
  if (!sum_ok) throw Error(ErrorKind::InvalidMap, "middle vector is not +-v_{i-1} +- v_{i+1}; polygon invalid");
  std::vector<SignVec> rest;
  for (std::size_t k = 0; k < p.m(); ++k)
    if (static_cast<int>(k) != i) rest.push_back(p.vecs()[k]);
  return {Polygon4(std::move(rest)), TriangleData(prev, mid, next)};
}

std::vector<int> hirzebruch_split_indices(const Polygon4& p) {
  std::vector<int> out;
  if (p.m() < 5) return out;
  for (std::size_t i = 0; i < p.m(); ++i) {
    const long long j = static_cast<long long>(i);
    if (p.at(j - 1) == p.at(j + 1)) out.push_back(static_cast<int>(i));
  }
  return out;
}

HirzebruchSplit split_hirzebruch(const Polygon4& p, int i) {
  if (p.m() < 5) throw Error(ErrorKind::NotBlowDownable, "splitting needs at least five sides");
  if (i < 0 || i >= static_cast<int>(p.m())) throw Error(ErrorKind::NotBlowDownable, "position out of range");
  if (p.at(i - 1) != p.at(i + 1))
    throw Error(ErrorKind::NotBlowDownable, "v_{i-1} != v_{i+1} at position " + std::to_string(i));
  const std::size_t drop2 = (static_cast<std::size_t>(i) + 1) % p.m();
  std::vector<SignVec> rest;
  for (std::size_t k = 0; k < p.m(); ++k)
    if (static_cast<int>(k) != i && k != drop2) rest.push_back(p.vecs()[k]);
  return {Polygon4(std::move(rest)), Polygon4({p.at(i - 1), p.at(i), p.at(i + 1), p.at(i + 2)})};
}

std::optional<Int> is_hirzebruch(const Polygon4& p) {
  if (p.m() != 4) return std::nullopt;
  const auto& v = p.vecs();
  if (v[0] == v[2]) return abs_det(v[1], v[3]);
  if (v[1] == v[3]) return abs_det(v[0], v[2]);
  return std::nullopt;
}

void CobClass::add(const TriangleClass& c, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CobClass CobClass::negated() const {
  CobClass out;
  for (const auto& [c, k] : terms_) out.terms_.emplace(c, -k);
  return out;
}

CobClass operator+(CobClass a, const CobClass& b) {
  for (const auto& [c, k] : b.terms_) a.add(c, k);
  return a;
}

std::string CobClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (k > 0 ? "+" : "") << k << '*' << c.str();
  }
  return os.str();
}

Classification cobordism_class(const Polygon4& p, const BlowDownChooser& choose) {
  if (auto rep = validate_polygon(p); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());
  CobClass cls;
  std::vector<DecompStep> steps;
  Polygon4 cur = p;
  while (cur.m() > 3) {
    const auto adm = blow_down_indices(cur);
    if (adm.empty()) {
      const auto splits = hirzebruch_split_indices(cur);
      if (splits.empty()) break;
      auto sp = split_hirzebruch(cur, splits.front());
      DecompStep st;
      st.kind = DecompStep::Kind::HirzebruchSplit;
      st.removed = splits.front();
      st.square = std::move(sp.square);
      steps.push_back(std::move(st));
      cur = std::move(sp.polygon);
      continue;
    }
    const int i = choose ? choose(cur, adm) : adm.front();
    if (std::find(adm.begin(), adm.end(), i) == adm.end())
      throw Error(ErrorKind::NotBlowDownable, "chooser returned an inadmissible position");
    auto bd = blow_down(cur, i);
    auto sc = canonical_triangle_class(bd.summand);
    cls.add(sc);
    steps.push_back({DecompStep::Kind::BlowDown, i, bd.summand, sc, std::nullopt});
    cur = std::move(bd.polygon);
  }
  DecompTrace trace{p, std::move(steps), cur, Terminal::Triangle, std::nullopt, std::nullopt};
  if (cur.m() == 3) {
    auto sc = canonical_triangle_class(TriangleData(cur.at(0), cur.at(1), cur.at(2)));
    cls.add(sc);
    trace.terminal_class = sc;
  } else if (cur.m() == 4) {
    auto k = is_hirzebruch(cur);
    if (!k) throw Error(ErrorKind::Unclassifiable, "square " + cur.str() + " has no blow-down and is not Hirzebruch");
    trace.hirzebruch_k = *k;
    trace.terminal = *k == 0 ? Terminal::Product : Terminal::Hirzebruch;
  } else {
    throw Error(ErrorKind::Unclassifiable, std::to_string(cur.m()) + "-gon " + cur.str() + " admits no blow-down or Hirzebruch split");
  }
  return {std::move(cls), std::move(trace)};
}

Polygon4 inverse_blow_up(const Polygon4& p, int i, int s1, int s2) {
  if (i < 0 || i >= static_cast<int>(p.m())) throw Error(ErrorKind::DimensionMismatch, "position out of range");
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) throw Error(ErrorKind::DimensionMismatch, "signs must be +-1");
  std::vector<SignVec> out;
  for (std::size_t k = 0; k < p.m(); ++k) {
    out.push_back(p.vecs()[k]);
    if (static_cast<int>(k) == i) out.emplace_back(scaled_sum(p.at(i), s1, p.at(i + 1), s2));
  }
  return Polygon4(std::move(out));
}

bool equivariantly_equal(const Polygon4& p, const Polygon4& q, EqualityMode mode) {
  if (p.m() != q.m()) return false;
  if (mode == EqualityMode::Strict) return p == q;
  for (const Polygon4& base : {q, q.reflected()})
    for (std::size_t r = 0; r < q.m(); ++r)
      if (p == base.rotated(r)) return true;
  return false;
}

std::optional<Mat2> delta_equivalent(const Polygon4& p, const Polygon4& q) {
  if (p.m() != q.m()) return std::nullopt;
  std::vector<std::pair<SignVec, SignVec>> pairs;
  for (std::size_t i = 0; i < p.m(); ++i) pairs.emplace_back(p.vecs()[i], q.vecs()[i]);
  try {
    return solve_gl2(pairs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Underdetermined) return std::nullopt;
    throw;
  }
}

}  // namespace qtoric
