#pragma once

// Characteristic pairs over polygons and their T^2-cobordism classes.
//
// Facet positions are 0-based throughout; neighbours are taken cyclically.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/charmap.hpp"
#include "qtoric/intlat.hpp"

namespace qtoric {

/// Cyclic sequence of m >= 3 classes in Z^2 / {+-1}.
class Polygon4 {
 public:
  explicit Polygon4(std::vector<SignVec> vecs);

  std::size_t m() const { return vecs_.size(); }
  const std::vector<SignVec>& vecs() const { return vecs_; }
  /// Cyclic access; any integer index is reduced mod m.
  const SignVec& at(long long i) const;

  Polygon4 rotated(std::size_t by = 1) const;
  /// Reverses the cyclic order (v0, v_{m-1}, ..., v1).
  Polygon4 reflected() const;

  friend bool operator==(const Polygon4&, const Polygon4&) = default;
  std::string str() const;

 private:
  std::vector<SignVec> vecs_;
};

ValidationReport validate_polygon(const Polygon4& p);

struct BlowDown {
  Polygon4 polygon;
  TriangleData summand;  // (v_{i-1}, v_i, v_{i+1})
};

/// Positions i with |det(v_{i-1}, v_{i+1})| = 1, ascending. Empty for m = 3.
std::vector<int> blow_down_indices(const Polygon4& p);
/// Throws Error(NotBlowDownable) if i is not admissible.
BlowDown blow_down(const Polygon4& p, int i);

struct HirzebruchSplit {
  Polygon4 polygon;  // v_i and v_{i+1} removed
  Polygon4 square;   // (v_{i-1}, v_i, v_{i+1}, v_{i+2}), a Hirzebruch square
};

/// Positions i with v_{i-1} = v_{i+1}, ascending. Empty for m < 5.
std::vector<int> hirzebruch_split_indices(const Polygon4& p);
/// Splits off a Hirzebruch summand at i. Throws Error(NotBlowDownable) if
/// v_{i-1} != v_{i+1}.
HirzebruchSplit split_hirzebruch(const Polygon4& p, int i);

/// For m = 4: k when one diagonal pair is equal, k = |det| of the other pair.
std::optional<Int> is_hirzebruch(const Polygon4& p);

/// Formal integer combination of canonical triangle classes.
class CobClass {
 public:
  void add(const TriangleClass& c, const Int& coeff);
  void add(const SignedClass& s) { add(s.cls, s.sign); }

  const std::map<TriangleClass, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CobClass negated() const;

  friend bool operator==(const CobClass&, const CobClass&) = default;
  friend CobClass operator+(CobClass a, const CobClass& b);
  /// "0" or "+1*[[a,b],[c,d]] -1*[...]".
  std::string str() const;

 private:
  std::map<TriangleClass, Int> terms_;
};

enum class Terminal { Triangle, Hirzebruch, Product };

struct DecompStep {
  enum class Kind { BlowDown, HirzebruchSplit };
  Kind kind = Kind::BlowDown;
  int removed = 0;  // position in the polygon before this step
  std::optional<TriangleData> summand;  // blow-downs
  std::optional<SignedClass> cls;       // blow-downs
  std::optional<Polygon4> square;       // splits: (v_{i-1}, v_i, v_{i+1}, v_{i+2})
};

struct DecompTrace {
  Polygon4 input;
  std::vector<DecompStep> steps;
  Polygon4 terminal_polygon;
  Terminal terminal = Terminal::Triangle;
  std::optional<SignedClass> terminal_class;  // triangles only
  std::optional<Int> hirzebruch_k;            // squares only
};

struct Classification {
  CobClass cls;
  DecompTrace trace;
};

/// Chooses one of the admissible blow-down positions (never empty).
using BlowDownChooser = std::function<int(const Polygon4&, const std::vector<int>& admissible)>;

/// Recursive blow-down, lowest admissible position first unless `choose` is
/// given. An m >= 5 polygon without blow-downs splits off a Hirzebruch summand
/// at the lowest position with v_{i-1} = v_{i+1}; such summands contribute
/// zero. Throws Error(InvalidMap) on invalid input and Error(Unclassifiable)
/// when neither reduction applies.
Classification cobordism_class(const Polygon4& p, const BlowDownChooser& choose = {});

/// Inserts [s1 * v_i + s2 * v_{i+1}] between positions i and i+1.
Polygon4 inverse_blow_up(const Polygon4& p, int i, int s1 = 1, int s2 = 1);

enum class EqualityMode { Strict, Dihedral };
bool equivariantly_equal(const Polygon4& p, const Polygon4& q, EqualityMode mode);

/// A with |det A| = 1 and p_i * A = q_i modulo sign for every i.
std::optional<Mat2> delta_equivalent(const Polygon4& p, const Polygon4& q);

}  // namespace qtoric
