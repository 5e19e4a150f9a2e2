#include "jung/batch.hpp"

#include <algorithm>

namespace jung {

AuditRecord audit_one(const PolyMap& f) {
  AuditRecord r;
  try {
    auto d = decompose(f);
    if (!d) {
      r.error = d.error().str();
      return r;
    }
    r.decomposed = true;
    r.factors = d->factors.size();
    r.round_trip = recompose(*d) == f;
    Decomposition inv = inverse(*d);
    PolyMap id = PolyMap::identity(f.field());
    r.inverse_law = apply_factors(inv, f) == id && apply_factors(*d, recompose(inv)) == id;
    int lo = std::min(f.p.degree(), f.q.degree()), hi = std::max(f.p.degree(), f.q.degree());
    r.divisibility = lo >= 1 && hi % lo == 0;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<AuditRecord> audit_serial(const std::vector<PolyMap>& maps) {
  std::vector<AuditRecord> out;
  out.reserve(maps.size());
  for (const auto& f : maps) out.push_back(audit_one(f));
  return out;
}

std::vector<AuditRecord> audit_parallel(const std::vector<PolyMap>& maps) {
  std::vector<AuditRecord> out(maps.size());
  long n = static_cast<long>(maps.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = audit_one(maps[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<VerifyOutcome> verify_serial(const std::vector<PolyMap>& maps, const WitnessConfig& cfg) {
  std::vector<VerifyOutcome> out;
  out.reserve(maps.size());
  for (const auto& f : maps) out.push_back(verify_division(f, cfg));
  return out;
}

std::vector<VerifyOutcome> verify_parallel(const std::vector<PolyMap>& maps, const WitnessConfig& cfg) {
  // verify_division never throws for Keller-checked input; a failure lands in
  // WitnessReport::failure.
  std::vector<std::optional<VerifyOutcome>> slots(maps.size());
  long n = static_cast<long>(maps.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    try {
      slots[k].emplace(verify_division(maps[k], cfg));
    } catch (const std::exception& e) {
      WitnessReport rep{maps[k]};
      rep.failure = e.what();
      slots[k].emplace(std::move(rep));
    }
  }
  std::vector<VerifyOutcome> out;
  out.reserve(maps.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace jung
