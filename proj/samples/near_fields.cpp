// The Dickson near-field of order 9 and the exceptional near-field of order 25.
#include <iostream>

#include "mjg/mjg.hpp"

int main() {
  using namespace mjg;
  const auto F = build_dickson(3, 2);
  F.verify_axioms_exhaustive();
  std::cout << near_field_json(F).dump() << "\n";
  const auto G = affine_group(F, AffineKind::AGL);
  std::cout << "AGL_1 order " << G.order() << ", sharply 2-transitive: " << is_sharply_two_transitive(G) << "\n";

  const auto E = exceptional_group(exceptional_spec(5));
  std::cout << "exceptional p=5: G0 " << E.spec.structure << " of order " << E.g0_elements.size()
            << ", affine group of order " << E.group.order() << "\n";
}
