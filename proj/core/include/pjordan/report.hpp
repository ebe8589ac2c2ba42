#pragma once

#include <optional>
#include <string>

#include "pjordan/modp.hpp"
#include "pjordan/oracle.hpp"

namespace pjordan {
namespace cli {

/// Identifies one (class, weight, construction) case. The tuple ordering is
/// the deterministic report order of every sweep.
struct CaseKey {
  char family = 'A';
  int rank = 0;
  int p = 0;
  std::vector<int> partition;
  std::vector<int> weight;
  std::string construction;  // empty when prediction-only

  auto tie() const { return std::tie(family, rank, p, partition, weight, construction); }
  bool operator==(const CaseKey& o) const { return tie() == o.tie(); }
  bool operator<(const CaseKey& o) const { return tie() < o.tie(); }
};

struct VerdictReport {
  CaseKey key;
  std::optional<modp::Prediction> prediction;
  std::optional<JordanType> observed;
  modp::Verdict verdict = modp::Verdict::Pass;
  std::string reason;  // set for SKIPPED_* and FAIL
};

/// One JSON Lines object, schema "pjordan/1"; byte-stable for fixed inputs.
std::string to_json_line(const VerdictReport& r);

struct Summary {
  long long total = 0, pass = 0, fail = 0, undetermined = 0, skipped_uncertified = 0,
            skipped_size = 0;
  void add(modp::Verdict v);
};

std::string to_json_line(const Summary& s);

std::string table_header();
std::string to_table_row(const VerdictReport& r);

}  // namespace cli
}  // namespace pjordan
