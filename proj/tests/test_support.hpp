#pragma once

#include <string>
#include <vector>

#include "ringlab/io.hpp"

namespace ringlab::testing {

inline FiniteRing ring(const std::string& source) { return io::build(source); }

inline std::vector<FiniteRing> catalog_rings() {
  std::vector<FiniteRing> out;
  for (const std::string& name : io::catalog_names()) out.push_back(ring("@" + name));
  return out;
}

// M2(F2) helpers: element index is the row-major bit string a,b,c,d of
// [[a,b],[c,d]] with a most significant.
struct M2 {
  int a, b, c, d;
};
inline M2 m2_decode(int idx) {
  return {idx >> 3 & 1, idx >> 2 & 1, idx >> 1 & 1, idx & 1};
}
inline int m2_det(int idx) {
  M2 m = m2_decode(idx);
  return (m.a * m.d) ^ (m.b * m.c);
}
inline int m2_trace(int idx) {
  M2 m = m2_decode(idx);
  return m.a ^ m.d;
}

}  // namespace ringlab::testing
