#include "pjordan/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace pjordan {
namespace cli {

namespace {

nlohmann::ordered_json case_json(const CaseKey& k) {
  nlohmann::ordered_json j;
  j["family"] = std::string(1, k.family);
  j["rank"] = k.rank;
  j["p"] = k.p;
  j["partition"] = k.partition;
  j["weight"] = k.weight;
  if (!k.construction.empty()) j["construction"] = k.construction;
  return j;
}

}  // namespace

std::string to_json_line(const VerdictReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "pjordan/1";
  j["case"] = case_json(r.key);
  if (r.prediction) {
    const auto& p = *r.prediction;
    j["sigma"] = p.sigma;
    j["omega_bar"] = p.omega_bar.fund;
    j["c_x"] = p.c_x;
    j["k_pred"] = p.k_pred;
    j["d_bound"] = p.d_bound;
    j["m"] = p.m;
    j["p_large_for_x"] = p.p_large_for_x;
    j["theorem1_applicable"] = p.rank_applicable;
    j["hypothesis"] = p.theorem1_hypothesis;
  }
  if (r.observed) {
    j["observed"]["blocks"] = r.observed->blocks;
    j["observed"]["max_block"] = r.observed->max_block();
    j["observed"]["size_p_count"] = r.observed->count_of(r.key.p);
  }
  j["verdict"] = modp::verdict_name(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j.dump();
}

void Summary::add(modp::Verdict v) {
  ++total;
  switch (v) {
    case modp::Verdict::Pass: ++pass; break;
    case modp::Verdict::Fail: ++fail; break;
    case modp::Verdict::Undetermined: ++undetermined; break;
    case modp::Verdict::SkippedUncertified: ++skipped_uncertified; break;
    case modp::Verdict::SkippedSize: ++skipped_size; break;
  }
}

std::string to_json_line(const Summary& s) {
  nlohmann::ordered_json j;
  j["schema"] = "pjordan/1";
  j["summary"]["total"] = s.total;
  j["summary"]["pass"] = s.pass;
  j["summary"]["fail"] = s.fail;
  j["summary"]["undetermined"] = s.undetermined;
  j["summary"]["skipped_uncertified"] = s.skipped_uncertified;
  j["summary"]["skipped_size"] = s.skipped_size;
  return j.dump();
}

namespace {

std::string joined(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::string table_header() {
  std::ostringstream os;
  os << std::left << std::setw(30) << "case" << std::setw(14) << "construction" << std::setw(7)
     << "sigma" << std::setw(5) << "c" << std::setw(7) << "k_pred" << std::setw(4) << "d"
     << std::setw(9) << "max_blk" << std::setw(8) << "n_p" << "verdict";
  return os.str();
}

std::string to_table_row(const VerdictReport& r) {
  std::ostringstream os;
  std::string c = std::string(1, r.key.family) + std::to_string(r.key.rank) + " p" +
                  std::to_string(r.key.p) + " [" + joined(r.key.partition) + "] w(" +
                  joined(r.key.weight) + ")";
  os << std::left << std::setw(30) << c << std::setw(14)
     << (r.key.construction.empty() ? "-" : r.key.construction);
  if (r.prediction) {
    os << std::setw(7) << r.prediction->sigma << std::setw(5) << r.prediction->c_x << std::setw(7)
       << r.prediction->k_pred << std::setw(4) << r.prediction->d_bound;
  } else {
    os << std::setw(7) << "-" << std::setw(5) << "-" << std::setw(7) << "-" << std::setw(4) << "-";
  }
  if (r.observed) {
    os << std::setw(9) << r.observed->max_block() << std::setw(8)
       << r.observed->count_of(r.key.p);
  } else {
    os << std::setw(9) << "-" << std::setw(8) << "-";
  }
  os << modp::verdict_name(r.verdict);
  if (!r.reason.empty()) os << "  (" << r.reason << ")";
  return os.str();
}

}  // namespace cli
}  // namespace pjordan
