// The Petersen graph J(5,2)_{2}: no regular group of automorphisms, but AGL_1(5) is 2-regular.
#include <iostream>

#include "mjg/mjg.hpp"

int main() {
  using namespace mjg;
  const auto J = build_graph(5, 2, index_set({2}));
  std::cout << "automorphisms: " << bruteforce_automorphism_group(J) << "\n";

  std::vector<Point> cyc{0, 1, 2, 3, 4};
  const auto S5 = PermutationGroup::from_generators(
      {Permutation::from_cycles(5, {cyc}), Permutation::from_cycles(5, {{0, 1}})});
  std::cout << report_json(regular_subgroup_nonexistence(induced_subset_action(S5, 2), J, "no regular subgroup"))
            << "\n";

  const auto w = classify_two_regular(5, 2, index_set({2})).witnesses.at(0);
  std::cout << report_json(regular_action_check(build_witness(w, 5, 2).group, J, 2, w.name)) << "\n";
  std::cout << "deficiency: " << cayley_deficiency(5, 2, index_set({2})).value << "\n";
}
