#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "conjlat/certify.hpp"
#include "conjlat/detform.hpp"
#include "conjlat/galois.hpp"
#include "conjlat/lattice.hpp"
#include "conjlat/polynomial.hpp"
#include "conjlat/svp.hpp"

namespace conjlat {

struct AnalysisOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
};

// Full pipeline result for one polynomial. Optional sub-reports are absent
// when the corresponding stage was skipped (unsupported class, tier-N
// limitations); `undetermined` aggregates the tri-valued sub-results.
struct AnalysisReport {
  IntPolynomial f;
  Int disc;
  tri irreducible = tri::undetermined;
  tri pisot = tri::undetermined;
  GaloisClass galois;
  RankResult rank;
  unsigned precision_bits = 0;
  std::optional<GramMatrix> gram;
  bool row_sum_ok = false;
  std::optional<MinimalVectorSet> minimal;
  std::optional<LatticeCertificate> certificate;
  std::optional<DeterminantReport> determinants;
  std::optional<PlanarWR> planar;
  std::optional<CubicWR> cubic;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
  bool undetermined = false;
};

// Runs the pipeline, retrying at doubled precision on precision errors.
// Throws std::domain_error for reducible input and unsupported_error for
// Galois classes without a Gram construction.
AnalysisReport analyze(const IntPolynomial& f, const AnalysisOptions& opt = {});

// Schema-versioned deterministic JSON (timing deliberately excluded so
// that identical inputs produce identical bytes).
nlohmann::ordered_json report_json(const AnalysisReport& rep);

std::string report_text(const AnalysisReport& rep);

}  // namespace conjlat
