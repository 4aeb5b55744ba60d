#pragma once

#include "ringlab/ring.hpp"

namespace ringlab {

/// Dossier for one denominator set.  The localization of a finite ring at S
/// is realised as the quotient R/ass(S): in R/ass(S) the image of S consists
/// of left-regular elements, which in a finite ring are units, so every
/// fraction s^-1 r already lies in the quotient.  The realisation is
/// cross-checked against the fraction construction (fraction_oracle).
struct DenRecord {
  Subset s;
  Subset ass;
  Subset core;
  FiniteRing quotient;
  std::vector<int> projection;
  bool saturated = false;  // s equals the saturation of ass
};

struct LocView {
  FiniteRing source;
  DenRecord den;
};

struct MaxDenProfile {
  std::vector<DenRecord> records;   // sorted by ass bitmask value
  Subset ll_radical;                // intersection of the ass ideals
  Subset localizable;               // union of the S sets
  Subset completely_localizable;    // intersection of the S sets
};

/// Boolean result with a witness pair (r, s) on failure.
struct PairWitness {
  bool ok = true;
  int r = -1;
  int s = -1;
  explicit operator bool() const { return ok; }
};

/// Smallest multiplicatively closed set containing gens and 1.  Throws
/// zero_absorbed with the product chain when 0 enters the closure.
Subset multiplicative_closure(const FiniteRing& R, const Subset& gens);

/// Left Ore condition: Sr meets Rs for every r in R, s in S.
PairWitness is_left_ore(const FiniteRing& R, const Subset& s);

/// {r : sr = 0 for some s in S}.  An ideal whenever S is left Ore (asserted
/// by the callers that rely on it, not here).
Subset ass_set(const FiniteRing& R, const Subset& s);

/// Left Ore plus: rs = 0 with s in S forces r into ass(S).
PairWitness is_left_denominator(const FiniteRing& R, const Subset& s);

/// Preimage of the units of R/I; for a localizable I this is the largest
/// denominator set with ass = I.
Subset saturate(const FiniteRing& R, const Subset& ideal);

/// I arises as ass(S) of some denominator set iff its saturation is a
/// denominator set with ass exactly I.
bool is_localizable_ideal(const FiniteRing& R, const Subset& ideal);

/// Maximal left denominator sets, computed through the localizable ideals:
/// enumerate ideals, keep the localizable ones, take the inclusion-maximal
/// ideals and saturate them.  The ass ideals of maximal denominator sets are
/// exactly the maximal localizable ideals, and each maximal set is the
/// saturation of its ass.  Records sorted by ass bitmask.
MaxDenProfile max_denominator_sets(const FiniteRing& R, const Limits& limits = {});

LocView localize(const FiniteRing& R, const Subset& s);

/// Independent construction of the localization from fraction pairs (s, r)
/// modulo (s,r) ~ (s',r') iff cs = c's' in S and cr = c'r' for some c, c'.
/// Addition goes through common left multiples, multiplication through the
/// Ore condition.  The result is verified to be a ring isomorphic to
/// localize(R, s).quotient via (s,r) -> proj(s)^-1 proj(r); the relation's
/// transitivity and the map's well-definedness, bijectivity, additivity and
/// multiplicativity are all checked pointwise.
FiniteRing fraction_oracle(const FiniteRing& R, const Subset& s,
                           const Limits& limits = {});

/// {s in S : ker(s.) = ass(S)} -- exact kernel equality.
Subset core(const FiniteRing& R, const Subset& s);

/// Intersection of ass over the maximal denominator sets; asserted equal to
/// the kernel of the combined projection into the product of localizations.
Subset ll_radical(const FiniteRing& R, const Limits& limits = {});

/// Multiplicative closure of S and T for denominator sets with
/// ass(S) contained in ass(T); asserted to be a denominator set with
/// ass containing ass(T).  Zero absorption under a satisfied precondition
/// is escalated to an invariant failure.
Subset denominator_join(const FiniteRing& R, const Subset& s, const Subset& t);

/// All left denominator sets, found as multiplicative closures of every
/// generator set containing 1 (closures memoized by bitmask, deduplicated),
/// filtered by is_left_denominator; canonical order.  Only for rings within
/// the oracle order bound.
std::vector<Subset> exhaustive_denominator_sets(const FiniteRing& R,
                                                const Limits& limits = {});

struct PhiEntry {
  int source = -1;         // index into maxden(R).records
  Subset image;            // pi'(S) inside R/ll
  bool image_maximal = false;
  int target = -1;         // matching record in maxden(R/ll), or -1
};

struct PhiMap {
  std::vector<PhiEntry> entries;
  bool injective = false;
  bool surjective = false;
};

/// The map S -> pi'(S) from maximal denominator sets of R to denominator
/// sets of R/ll_radical(R), with maximality and bijectivity reporting.
PhiMap phi_map(const FiniteRing& R, const Limits& limits = {});

}  // namespace ringlab
