#include "report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace socs::cli {

namespace {

using nlohmann::json;

json platform_json(const Platform& p) {
  json coords = json::array();
  for (const Rat& c : p.coords()) {
    coords.push_back(c.str());
  }
  return coords;
}

json bound_json(const BoundReport& r) {
  json out;
  out["theorem"] = r.theorem;
  out["applicable"] = r.applicable;
  out["reason"] = r.applicable ? json(nullptr) : json(r.reason);
  out["required_size"] = r.required_size ? json(r.required_size->str()) : json(nullptr);
  out["bound"] = r.bound;
  out["observed"] = r.observed;
  out["satisfied"] = r.satisfied;
  out["sharp"] = r.sharp;
  return out;
}

std::string platform_text(const Platform& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    out += (i ? ", " : "") + p[i].str();
  }
  return out + ")";
}

std::string name_list(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    out += (out.empty() ? "" : ", ") + n;
  }
  return out;
}

}  // namespace

AnalysisReport build_report(const Society& s, std::optional<int> k, std::optional<int> m,
                            const SubsetBudget& budget) {
  AnalysisReport report{s.kind(),
                        s.size(),
                        agreement_number(s),
                        clique_number(agreement_graph(s)),
                        k,
                        m,
                        std::nullopt,
                        {}};
  if (k && m) {
    report.agreeability = is_km_agreeable(s, *k, *m, budget);
    if (report.agreeability->agreeable) {
      report.bounds = verify_all(s, *k, *m, /*assume_agreeable=*/true, budget);
    }
  }
  return report;
}

std::string to_json(const AnalysisReport& report) {
  json out;
  out["schema_version"] = 1;
  out["society"] = {{"kind", to_string(report.kind)}, {"size", report.size}};
  out["agreement"] = {{"number", report.agreement.number},
                      {"witness", platform_json(report.agreement.witness)},
                      {"voters", report.agreement.witness_voters}};
  out["clique"] = {{"number", report.clique.number}, {"witness", report.clique.witness}};
  if (report.k && report.m) {
    json verdict;
    verdict["k"] = *report.k;
    verdict["m"] = *report.m;
    verdict["agreeable"] = report.agreeability->agreeable;
    verdict["counterexample"] = report.agreeability->counterexample
                                    ? json(*report.agreeability->counterexample)
                                    : json(nullptr);
    out["agreeability"] = std::move(verdict);
    json rows = json::array();
    for (const BoundReport& r : report.bounds) {
      rows.push_back(bound_json(r));
    }
    out["bounds"] = std::move(rows);
  }
  return out.dump(2) + "\n";
}

std::string bounds_to_json(const std::vector<BoundReport>& reports) {
  json rows = json::array();
  for (const BoundReport& r : reports) {
    rows.push_back(bound_json(r));
  }
  return rows.dump(2) + "\n";
}

std::string bounds_to_table(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "theorem" << std::setw(12) << "applicable" << std::setw(8)
      << "bound" << std::setw(10) << "observed" << std::setw(11) << "satisfied" << std::setw(7)
      << "sharp" << "note" << "\n";
  for (const BoundReport& r : reports) {
    out << std::left << std::setw(10) << r.theorem << std::setw(12)
        << (r.applicable ? "yes" : "no") << std::setw(8) << r.bound << std::setw(10) << r.observed
        << std::setw(11) << (r.satisfied ? "yes" : "no") << std::setw(7)
        << (r.sharp ? "yes" : "no") << r.reason << "\n";
  }
  return out.str();
}

std::string to_table(const AnalysisReport& report) {
  std::ostringstream out;
  out << "society: " << to_string(report.kind) << ", " << report.size << " voters\n";
  out << "agreement number: " << report.agreement.number << "\n";
  out << "  witness platform: " << platform_text(report.agreement.witness) << "\n";
  out << "  approving voters: " << name_list(report.agreement.witness_voters) << "\n";
  out << "clique number: " << report.clique.number << "\n";
  out << "  clique voters: " << name_list(report.clique.witness) << "\n";
  if (report.k && report.m) {
    out << "(" << *report.k << "," << *report.m << ")-agreeable: "
        << (report.agreeability->agreeable ? "yes" : "no") << "\n";
    if (report.agreeability->counterexample) {
      out << "  violating voters: " << name_list(*report.agreeability->counterexample) << "\n";
    }
    if (!report.bounds.empty()) {
      out << "bounds:\n";
      std::istringstream rows(bounds_to_table(report.bounds));
      std::string line;
      while (std::getline(rows, line)) {
        out << "  " << line << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace socs::cli
