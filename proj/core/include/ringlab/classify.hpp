#pragma once

#include "ringlab/localization.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Predicate result carrying the least-index witness when false.
struct Witnessed {
  bool value = false;
  int witness = -1;
  explicit operator bool() const { return value; }
};

/// Every element is localizable or nilpotent.  Asserts that the localizable
/// and nilpotent elements are disjoint.
Witnessed is_weakly_left_localizable(const FiniteRing& R, const Limits& limits = {});

/// Every nonzero element is localizable.
Witnessed is_left_localizable_ring(const FiniteRing& R, const Limits& limits = {});

/// Finite form: the only localizable ideal is {0}.
bool is_left_localization_maximal(const FiniteRing& R, const Limits& limits = {});

/// True iff the image of A in R/B consists of nilpotent elements.
bool nil_modulo_check(const FiniteRing& R, const Subset& a, const Subset& b);

struct Report {
  std::string label;
  int order = 0;
  int units_count = 0;
  Subset nilpotents;
  Subset nil_rad;
  Subset jacobson;
  long long ideal_count = 0;
  bool local = false;
  bool semilocal = true;  // every finite ring is semilocal; recorded as such

  std::vector<int> idempotents;
  std::vector<int> factor_orders;
  std::vector<bool> factor_local;

  int maxden_count = 0;
  std::vector<int> ass_sizes;
  std::vector<int> core_sizes;
  int ll_size = 0;
  int localizable_size = 0;
  int completely_localizable_size = 0;

  bool left_localizable = false;
  bool weakly_left_localizable = false;
  bool localization_maximal = false;
};

/// Fully populated report; deterministic.  Consistency between the fields is
/// asserted (disjointness of localizable and nilpotent elements, and the
/// counting characterisation of weak localizability).
Report classification_report(const FiniteRing& R, const Limits& limits = {});

}  // namespace ringlab
