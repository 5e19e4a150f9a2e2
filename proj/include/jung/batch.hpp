#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jung/tame.hpp"
#include "jung/witness.hpp"

namespace jung {

/// Per-map outcome of decompose + round trip + inverse law + degree divisibility.
struct AuditRecord {
  bool decomposed = false;
  bool round_trip = false;   // recompose(decompose(F)) == F
  bool inverse_law = false;  // F^-1 o F == id and F o F^-1 == id
  bool divisibility = false; // min(deg P, deg Q) | max(deg P, deg Q)
  std::size_t factors = 0;
  std::string error;         // rejection or exception text

  bool ok() const { return decomposed && round_trip && inverse_law && divisibility; }
  friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

AuditRecord audit_one(const PolyMap& f);

// Output order matches input order in both variants.
std::vector<AuditRecord> audit_serial(const std::vector<PolyMap>& maps);
std::vector<AuditRecord> audit_parallel(const std::vector<PolyMap>& maps);

using VerifyOutcome = Result<WitnessReport, RejectionEvidence>;
std::vector<VerifyOutcome> verify_serial(const std::vector<PolyMap>& maps, const WitnessConfig& cfg = {});
std::vector<VerifyOutcome> verify_parallel(const std::vector<PolyMap>& maps, const WitnessConfig& cfg = {});

}  // namespace jung
