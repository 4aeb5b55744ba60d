#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Result of one theorem check on one ring.  Equivalence entries evaluate
/// both sides through independent code paths (one side through the
/// localization machinery, the other through ring-theoretic decomposition)
/// and pass when the sides agree.  Formula entries evaluate a single
/// statement under hypotheses and set lhs = rhs = statement-holds.
/// A check whose hypotheses fail passes vacuously (applicable = false).
struct Verdict {
  std::string id;
  std::string ring_label;
  bool applicable = false;
  bool lhs = false;
  bool rhs = false;
  bool pass = false;
  std::vector<std::pair<std::string, bool>> conditions;
  std::vector<std::pair<std::string, std::string>> witnesses;
};

enum class TheoremKind { equivalence, formula };

struct TheoremInfo {
  std::string id;
  std::string description;
  TheoremKind kind;
  /// Formula entries with hypotheses can be vacuous on some rings;
  /// unconditional ones hold on every ring.
  bool conditional;
};

/// The fixed registry, in fixed order (16 entries).
const std::vector<TheoremInfo>& theorem_registry();

std::vector<std::pair<std::string, std::string>> list_theorems();

Verdict verify_theorem(const FiniteRing& R, const std::string& id,
                       const Limits& limits = {});

std::vector<Verdict> verify_all(const FiniteRing& R, const Limits& limits = {});

}  // namespace ringlab
