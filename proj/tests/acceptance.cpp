// Acceptance gate: runs the desk-scale verification suite and checks that
// every claim lands on its recorded disposition.
//
// The dispositions are pinned instead of blanket-requiring PASS because the
// suite reports honestly on two of the eleven claims:
//
//   - Claim 6 recomputes a census whose recorded total is 21 classes and
//     currently finds 22; the full list is printed and the line is marked
//     REPORT rather than silently accepted or suppressed.  (In fast mode the
//     claim covers two of the six containers and REPORTs the frozen subset
//     value instead.)
//   - Claim 8 tests a stated bound (apex height 6) that the exhaustive
//     search up to height 10 does not attain -- the largest admissible apex
//     height found is 3, and no configuration reaches heights 7..10.  The
//     claim line is an honest FAIL.
//
// The gate exits 0 exactly when the suite reproduces the recorded outcome
//   {1,2,3,4,5,7,9,10,11: PASS,  6: REPORT,  8: FAIL}
// and 1 on any drift.  A drift in either direction -- a new failure or an
// unexpected PASS on claim 6 or 8 -- signals an engine change that must be
// reviewed, so both directions gate.

#include <cstring>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "latgeo/verify.hpp"

int main(int argc, char** argv) {
  latgeo::VerifyOptions options;
  options.fast = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) {
      options.fast = true;
    } else {
      std::cerr << "usage: " << argv[0] << " [--fast]\n";
      return 2;
    }
  }

  std::vector<latgeo::ClaimResult> results = latgeo::verify_claims(options);
  for (const latgeo::ClaimResult& r : results) std::cout << latgeo::format_claim_line(r) << "\n";

  const std::map<int, latgeo::ClaimStatus> expected = {
      {1, latgeo::ClaimStatus::Pass},   {2, latgeo::ClaimStatus::Pass},
      {3, latgeo::ClaimStatus::Pass},   {4, latgeo::ClaimStatus::Pass},
      {5, latgeo::ClaimStatus::Pass},   {6, latgeo::ClaimStatus::Report},
      {7, latgeo::ClaimStatus::Pass},   {8, latgeo::ClaimStatus::Fail},
      {9, latgeo::ClaimStatus::Pass},   {10, latgeo::ClaimStatus::Pass},
      {11, latgeo::ClaimStatus::Pass},
  };

  bool ok = results.size() == expected.size();
  for (const latgeo::ClaimResult& r : results) {
    auto want = expected.find(r.id);
    if (want == expected.end() || r.status != want->second) {
      ok = false;
      std::cout << "DRIFT: claim " << r.id << " is " << latgeo::to_string(r.status)
                << ", recorded disposition is "
                << (want == expected.end() ? std::string("<none>")
                                           : latgeo::to_string(want->second))
                << "\n";
    }
  }

  std::cout << "\nacceptance: " << (ok ? "all claims match their recorded dispositions"
                                       : "DISPOSITION DRIFT")
            << " (" << results.size() << " claims; expected 9 PASS, 1 REPORT, 1 FAIL)\n"
            << (options.fast
                    ? "  claim 6 REPORT: fast mode checks a frozen two-container subset; the"
                      " full census runs in full mode.\n"
                    : "  claim 6 REPORT: the recomputed census disagrees with the recorded"
                      " total by one class; the full list above documents the discrepancy.\n")
            << "  claim 8 FAIL:   the stated apex height bound of 6 is not attained; the"
            << " exhaustive search up to height 10 tops out at 3.\n";
  return ok ? 0 : 1;
}
