#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

using ElementIndex = int;

/// Configurable resource bounds.
struct Limits {
  int max_order = 4096;
  long long max_ideals = 1000000;
  int oracle_max_order = 16;
  long long oracle_max_pairs = 1LL << 16;
};

class FiniteRing;

/// Recorded when a ring is built as a direct product; the factor rings and
/// the coordinate projections (element -> factor element index).
struct ProductStructure {
  std::vector<FiniteRing> factors;
  std::vector<std::vector<int>> projections;
};

/// Unital ring of order n >= 2 given by full addition and multiplication
/// tables over element indices 0..n-1.  Element 0 is the zero.  Instances
/// are immutable and always satisfy the ring axioms: construction validates
/// them (exhaustively up to order 64, by deterministic sampling above).
class FiniteRing {
 public:
  static FiniteRing from_tables(std::string label, int order, int one,
                                const std::vector<int>& add,
                                const std::vector<int>& mul);

  int order() const { return n_; }
  int zero() const { return 0; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_[std::size_t(a) * n_ + b]; }
  int mul(int a, int b) const { return mul_[std::size_t(a) * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  const std::string& label() const { return label_; }
  FiniteRing with_label(std::string label) const;

  /// Table-level equality, ignoring labels and provenance.
  bool same_tables(const FiniteRing& other) const;

  const std::shared_ptr<const ProductStructure>& product_structure() const {
    return product_;
  }

 private:
  friend struct RingBuilder;
  FiniteRing() = default;

  int n_ = 0;
  int one_ = 1;
  std::vector<std::uint16_t> add_, mul_, neg_;
  std::string label_;
  std::shared_ptr<const ProductStructure> product_;
};

/// Inline ring tables, as read from a table file.
struct TableData {
  int order = 0;
  int one = 1;
  std::vector<int> add, mul;  // row-major order*order
};

/// Construction tree for rings.
struct RingExpr {
  enum class Kind { zmod, matrix, triangular, product, quotient, table, catalog };

  Kind kind = Kind::zmod;
  int n = 0;                    // zmod modulus, or matrix/triangular size
  std::vector<RingExpr> children;
  std::vector<int> generators;  // quotient: ideal generators in the child ring
  TableData table;
  std::string name;             // catalog entry

  static RingExpr zmod(int n);
  static RingExpr matrix(int k, RingExpr base);
  static RingExpr triangular(int k, RingExpr base);
  static RingExpr product(std::vector<RingExpr> factors);
  static RingExpr quotient(RingExpr base, std::vector<int> generators);
  static RingExpr table_ring(TableData data);
  static RingExpr catalog(std::string name);
};

/// Maps a catalog name to its construction; supplied by the io layer.
using CatalogResolver = std::function<RingExpr(const std::string&)>;

FiniteRing construct(const RingExpr& expr, const Limits& limits = {},
                     const CatalogResolver* resolver = nullptr);

/// {u : uv = vu = 1 for some v}.  For a finite ring this coincides with the
/// left-regular and the right-regular elements; the coincidence is asserted.
Subset units(const FiniteRing& R);
Subset left_regular_elements(const FiniteRing& R);
Subset right_regular_elements(const FiniteRing& R);
/// Index of u's two-sided inverse, or -1 when u is not a unit.
int unit_inverse(const FiniteRing& R, int u);

bool is_nilpotent(const FiniteRing& R, int a);
Subset nilpotent_elements(const FiniteRing& R);

/// {r : 1 - xr is a unit for every x}; verified to be an ideal.
Subset jacobson_radical(const FiniteRing& R);

/// The largest nil ideal, generated by the elements whose principal
/// two-sided ideal is nil.  Asserted nil, an ideal, and to contain every
/// enumerated ideal consisting of nilpotents.
Subset nil_radical(const FiniteRing& R, const Limits& limits = {});

bool is_ideal(const FiniteRing& R, const Subset& s);
Subset additive_closure(const FiniteRing& R, Subset s);
Subset ideal_generated_by(const FiniteRing& R, const Subset& gens);

/// All two-sided ideals: the closure of the principal ideals under pairwise
/// sum, plus {0}; sorted by (cardinality, bitmask value).
std::vector<Subset> enumerate_ideals(const FiniteRing& R, const Limits& limits = {});

struct QuotientRing {
  FiniteRing ring;
  std::vector<int> projection;  // element -> coset index
};

/// Coset ring with canonical representatives (the smallest index per coset);
/// the projection is verified to be a surjective ring homomorphism.
QuotientRing quotient_ring(const FiniteRing& R, const Subset& ideal);

struct ProductRing {
  FiniteRing ring;
  std::vector<std::vector<int>> projections;
};

/// Componentwise tables over the mixed-radix index, factor 1 most
/// significant; the coordinate projections are verified ring surjections.
ProductRing product_ring(const std::vector<FiniteRing>& factors,
                         const Limits& limits = {});

/// True iff the non-units form an ideal.
bool is_local(const FiniteRing& R);

struct Decomposition {
  std::vector<int> idempotents;               // primitive central, ascending
  std::vector<FiniteRing> factors;            // corner rings e_i R e_i
  std::vector<std::vector<int>> projections;  // element -> index within factor i
};

/// The complete set of primitive central idempotents and the corner rings
/// they cut out.  A single factor means the ring is indecomposable.
Decomposition central_idempotent_decomposition(const FiniteRing& R);

}  // namespace ringlab
