#include "coapprox/classify.hpp"

#include "coapprox/norming_set.hpp"

namespace coapprox {

ClassificationReport classify(const SubspaceBasis& basis) {
  ClassificationReport report;
  report.m = basis.dim();

  if (basis.dim() == basis.ambient_dim()) {
    // Every target is its own best coapproximation.
    const auto profile = build_profile(basis);
    report.d = profile.d();
    report.q = report.m;
    report.coproximinal = true;
    report.co_chebyshev = true;
    report.rationale = {"full-space"};
    return report;
  }

  const auto analysis = analyze_norming(basis);
  report.d = analysis.profile.d();
  report.zero_set_size = analysis.profile.zero_set.size();
  report.q = analysis.norming.span_dim;

  if (report.zero_set_size > 0) report.rationale.emplace_back("sigma-reduction");
  report.rationale.emplace_back("norming-set-rank");
  report.coproximinal = report.q == report.m;
  report.rationale.emplace_back(report.coproximinal ? "coproximinal-q-equals-m" : "not-coproximinal-q-exceeds-m");

  if (report.zero_set_size > 0) {
    report.co_chebyshev = false;
    report.rationale.emplace_back("zero-set-never-co-chebyshev");
  } else {
    report.co_chebyshev = report.coproximinal;
    if (report.coproximinal) report.rationale.emplace_back("uniqueness-empty-zero-set");
  }
  return report;
}

}  // namespace coapprox
