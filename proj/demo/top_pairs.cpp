// Builds a top-dimensional GCR pair for each simple type and, where the Weyl
// group is small enough to enumerate, compares its d with the largest d over
// all GCR pairs.

#include <iostream>

#include "flagdeg/flagdeg.hpp"

using namespace flagdeg;

int main() {
  const char* types[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "C3", "C4",
                         "C5", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};
  std::cout << "type  l(v)  l(w)  d  max d over GCR(W)\n";
  int mismatches = 0;
  for (const char* t : types) {
    const WeylGroup g(t);
    const TopPair tp = build_top_pair(g);
    std::cout << t << "  " << tp.v.length() << "  " << tp.w.length() << "  " << tp.d << "  ";
    if (g.root_system().type().weyl_group_order() <= 2000) {
      auto order = std::make_shared<const BruhatOrder>(std::make_shared<const EnumeratedGroup>(g));
      int best = 0;
      for (const auto& p : maximal_pairs(enumerate_gcr(order))) best = std::max(best, p.d);
      std::cout << best << (best == tp.d ? "" : "  MISMATCH") << "\n";
      mismatches += best != tp.d;
    } else {
      std::cout << "-\n";
    }
  }
  return mismatches == 0 ? 0 : 1;
}
