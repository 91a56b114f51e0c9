#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>

#include "mjg/suite.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // wall-clock bound; 0 when none is pinned
};

const std::vector<Criterion> kCriteria = {
    {1, "regular witnesses for the Cayley cases", 10},
    {2, "Dickson near-fields of order 9 and 343", 60},
    {3, "exceptional near-fields", 600},
    {4, "PSL_2(8) complement suite", 60},
    {5, "brute-force Aut matches the automorphism theorem", 0},
    {6, "Petersen graph is not Cayley, deficiency 2", 0},
    {7, "orbit lemmas and induced-subgraph classes", 0},
    {8, "census properties up to n = 12 and n = 14", 300},
};

}  // namespace

int main() {
  using namespace mjg;
  const auto claims = verification_claims();
  const unsigned threads = thread_count();
  bool all = true;
  for (const auto& c : kCriteria) {
    std::vector<SuiteClaim> selected;
    for (const auto& s : claims)
      if (s.criterion == c.id) selected.push_back(s);
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_claims(selected, threads);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = !reports.empty();
    std::string failures;
    for (const auto& r : reports)
      if (!r.confirmed) {
        ok = false;
        failures += " [" + r.claim + ": " + r.evidence + "]";
      }
    const bool in_time = c.limit_s == 0 || wall <= c.limit_s;
    if (!in_time) failures += " [runtime exceeds " + std::to_string(c.limit_s) + " s]";
    ok = ok && in_time;
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << reports.size()
              << " claims, " << std::fixed << std::setprecision(2) << wall << " s)" << failures << std::endl;
  }
  return all ? 0 : 1;
}
