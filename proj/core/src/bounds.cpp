#include "socs/bounds.hpp"

#include <algorithm>
#include <string>

#include "socs/errors.hpp"

namespace socs {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw ValidationError(message);
  }
}

void validate_km_pair(long k, long m, const char* op) {
  require(2 <= k && k <= m, std::string(op) + " requires 2 <= k <= m");
}

void validate_close_pair(long k, long m, long n, const char* op) {
  require(2 <= k && k <= m && m <= 2 * k - 2,
          std::string(op) + " requires 2 <= k <= m <= 2k-2");
  require(n >= m, std::string(op) + " requires n >= m");
}

// Least integer strictly greater than q.
long strict_threshold(const Rat& q) { return q.floor_long() + 1; }

// Least integer >= q.
long weak_threshold(const Rat& q) { return q.ceil_long(); }

}  // namespace

long linear_bound(long k, long m, long n) {
  validate_km_pair(k, m, "linear_bound");
  require(n >= 1, "linear_bound requires n >= 1");
  return weak_threshold(Rat(n) * Rat(k - 1, m - 1));
}

long circular_bound(long k, long m, long n) {
  validate_km_pair(k, m, "circular_bound");
  require(n >= 1, "circular_bound requires n >= 1");
  return strict_threshold(Rat(n) * Rat(k - 1, m));
}

long box2_bound(long k, long m, long n) {
  validate_close_pair(k, m, n, "box2_bound");
  return n - m + k;
}

ProportionBound product_bound(const Rat& alpha, const Rat& beta, long n, long m) {
  require(alpha > Rat(0) && alpha <= Rat(1) && beta > Rat(0) && beta <= Rat(1),
          "product_bound requires proportions in (0, 1]");
  require(m >= 1 && n >= 1, "product_bound requires n, m >= 1");
  const Rat threshold = Rat(m) / std::min(alpha, beta);
  return ProportionBound{Rat(n) >= threshold, alpha * beta};
}

ProductCaseBound product_society_bound(SocietyKind kind, long k, long m, long n) {
  validate_km_pair(k, m, "product_society_bound");
  require(n >= 1, "product_society_bound requires n >= 1");
  switch (kind) {
    case SocietyKind::TwoBox: {
      Rat size(m * (m - 1), k - 1);
      Rat q = Rat((k - 1) * (k - 1), (m - 1) * (m - 1));
      return ProductCaseBound{Rat(n) >= size, size, weak_threshold(Rat(n) * q)};
    }
    case SocietyKind::Cylindrical: {
      Rat size(m * (m - 1), k - 1);
      Rat q = Rat((k - 1) * (k - 1), m * (m - 1));
      return ProductCaseBound{Rat(n) >= size, size, strict_threshold(Rat(n) * q)};
    }
    case SocietyKind::Toroidal: {
      Rat size(m * m, k - 1);
      Rat q = Rat((k - 1) * (k - 1), m * m);
      return ProductCaseBound{Rat(n) >= size, size, strict_threshold(Rat(n) * q)};
    }
    default:
      throw ValidationError("product_society_bound requires a two-axis society kind");
  }
}

long clique_bound(long omega) {
  require(omega >= 1, "clique_bound requires omega >= 1");
  return weak_threshold(Rat(omega + 1, 2));
}

long cylinder_bound(long k, long m, long n) {
  validate_close_pair(k, m, n, "cylinder_bound");
  return weak_threshold(Rat(n - m + k + 1, 2));
}

long torus_bound(long k, long m, long n) {
  validate_close_pair(k, m, n, "torus_bound");
  return weak_threshold(Rat(n - m + k + 2, 4));
}

namespace {

BoundReport make_report(std::string theorem, bool applicable, std::string reason,
                        std::optional<Rat> required_size, long bound, long observed) {
  BoundReport report;
  report.theorem = std::move(theorem);
  report.applicable = applicable;
  report.reason = std::move(reason);
  report.required_size = std::move(required_size);
  report.bound = bound;
  report.observed = observed;
  report.satisfied = observed >= bound;
  report.sharp = observed == bound;
  return report;
}

// Raw formula values, bypassing parameter validation, for informational rows
// whose preconditions fail.
long raw_close_bound(long k, long m, long n, long add, long div) {
  return weak_threshold(Rat(n - m + k + add, div));
}

}  // namespace

std::vector<BoundReport> verify_all(const Society& s, int k, int m, bool assume_agreeable,
                                    const SubsetBudget& budget) {
  const long n = static_cast<long>(s.size());
  require(1 <= k && k <= m && m <= n, "verify_all requires 1 <= k <= m <= |S|");
  if (!assume_agreeable) {
    AgreeabilityResult check = is_km_agreeable(s, k, m, budget);
    if (!check.agreeable) {
      std::string names;
      for (const std::string& v : *check.counterexample) {
        names += (names.empty() ? "" : ", ") + v;
      }
      throw ValidationError("society is not (" + std::to_string(k) + "," + std::to_string(m) +
                            ")-agreeable; violating voters: " + names);
    }
  }

  const long observed = agreement_number(s).number;
  const SocietyKind kind = s.kind();
  const bool k_ok = k >= 2;
  const std::string k_reason = "requires k >= 2";
  const bool close_ok = k_ok && m <= 2 * k - 2;
  const std::string close_reason = k_ok ? "requires m <= 2k-2" : k_reason;

  std::vector<BoundReport> reports;
  switch (kind) {
    case SocietyKind::Linear: {
      long bound = k_ok ? linear_bound(k, m, n) : 0;
      reports.push_back(make_report("linear", k_ok, k_ok ? "" : k_reason, std::nullopt, bound,
                                    observed));
      break;
    }
    case SocietyKind::Circular: {
      long bound = k_ok ? circular_bound(k, m, n) : 1;
      reports.push_back(make_report("circular", k_ok, k_ok ? "" : k_reason, std::nullopt, bound,
                                    observed));
      long omega = clique_number(agreement_graph(s)).number;
      reports.push_back(
          make_report("clique", true, "", std::nullopt, clique_bound(omega), observed));
      break;
    }
    case SocietyKind::TwoBox: {
      long bound = close_ok ? box2_bound(k, m, n) : n - m + k;
      reports.push_back(make_report("box2", close_ok, close_ok ? "" : close_reason, std::nullopt,
                                    bound, observed));
      break;
    }
    case SocietyKind::Cylindrical: {
      long bound = close_ok ? cylinder_bound(k, m, n) : raw_close_bound(k, m, n, 1, 2);
      reports.push_back(make_report("cylinder", close_ok, close_ok ? "" : close_reason,
                                    std::nullopt, bound, observed));
      break;
    }
    case SocietyKind::Toroidal: {
      long bound = close_ok ? torus_bound(k, m, n) : raw_close_bound(k, m, n, 2, 4);
      reports.push_back(make_report("torus", close_ok, close_ok ? "" : close_reason, std::nullopt,
                                    bound, observed));
      break;
    }
  }

  if (s.dimension() == 2 && k_ok) {
    ProductCaseBound pb = product_society_bound(kind, k, m, n);
    std::string reason =
        pb.applicable ? "" : ("requires |S| >= " + pb.required_size.str());
    reports.push_back(make_report("product", pb.applicable, std::move(reason), pb.required_size,
                                  pb.bound, observed));
  } else if (s.dimension() == 2) {
    reports.push_back(make_report("product", false, k_reason, std::nullopt, 0, observed));
  }

  if (kind == SocietyKind::Cylindrical || kind == SocietyKind::Toroidal) {
    // Informational: the circular-society bound does not hold on product
    // spectra; stratified societies can sit strictly below it.
    long bound = k_ok ? circular_bound(k, m, n) : 1;
    reports.push_back(make_report("circular", false,
                                  "spectrum is " + to_string(kind) + ", not circular",
                                  std::nullopt, bound, observed));
  }
  return reports;
}

}  // namespace socs
