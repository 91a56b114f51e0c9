// Classifies a few merged Johnson graphs and prints the verdicts as JSON lines.
#include <iostream>

#include "mjg/mjg.hpp"

int main() {
  using namespace mjg;
  for (auto [n, k, I] : std::vector<std::tuple<int, int, IndexSet>>{
           {7, 2, index_set({1})}, {5, 2, index_set({2})}, {12, 4, index_set({1, 3})}, {10, 5, index_set({1, 4})}})
    std::cout << verdict_json(classify(n, k, I)).dump(2) << "\n";
}
