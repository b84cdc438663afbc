#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socs/agreement.hpp"
#include "socs/society.hpp"

namespace socs {

/// One theorem's verdict on a concrete society: whether its preconditions
/// hold, the smallest agreement number it guarantees, and how the observed
/// agreement number compares. `satisfied` and `sharp` are raw comparisons
/// against `bound`; they only certify the theorem when `applicable` is true.
struct BoundReport {
  std::string theorem;
  bool applicable;
  std::string reason;  // why not, when applicable is false
  std::optional<Rat> required_size;
  long bound;
  long observed;
  bool satisfied;  // observed >= bound
  bool sharp;      // observed == bound
};

/// Linear societies: a(S)/|S| >= (k-1)/(m-1), so a(S) >= ceil(n(k-1)/(m-1)).
/// Requires 2 <= k <= m, n >= 1.
long linear_bound(long k, long m, long n);

/// Circular societies: a(S)/|S| > (k-1)/m strictly, so
/// a(S) >= floor(n(k-1)/m) + 1 — the strict inequality forces the +1 even
/// when n(k-1)/m is an integer. Requires 2 <= k <= m, n >= 1.
long circular_bound(long k, long m, long n);

/// 2-box societies: a(S) >= n - m + k. Requires 2 <= k <= m <= 2k-2, n >= m.
long box2_bound(long k, long m, long n);

struct ProportionBound {
  bool applicable;  // n >= m / min(alpha, beta)
  Rat bound;        // the proportion alpha * beta
};

/// Product societies with per-factor agreement-proportion lower bounds alpha
/// and beta: when n >= m/min(alpha, beta), a(S)/|S| >= alpha*beta. The caller
/// converts the proportion to an integer threshold, respecting whether each
/// factor bound is strict or weak. Requires 0 < alpha, beta <= 1.
ProportionBound product_bound(const Rat& alpha, const Rat& beta, long n, long m);

struct ProductCaseBound {
  bool applicable;    // n >= required_size
  Rat required_size;  // the size threshold of the matching case
  long bound;         // integer threshold: >= for 2-box, strictly > for the others
};

/// The product theorem specialized per spectrum kind:
///   2-box:       n >= m(m-1)/(k-1)  =>  a/n >= (k-1)^2/(m-1)^2
///   cylindrical: n >= m(m-1)/(k-1)  =>  a/n >  (k-1)^2/(m(m-1))
///   toroidal:    n >= m^2/(k-1)     =>  a/n >  (k-1)^2/m^2
/// Requires 2 <= k <= m and a two-axis kind.
ProductCaseBound product_society_bound(SocietyKind kind, long k, long m, long n);

/// Circular societies: a(S) >= ceil((omega + 1)/2) from the clique number of
/// the agreement graph. Requires omega >= 1.
long clique_bound(long omega);

/// Cylindrical societies: a(S) >= ceil((n-m+k+1)/2).
/// Requires 2 <= k <= m <= 2k-2, n >= m.
long cylinder_bound(long k, long m, long n);

/// Toroidal societies: a(S) >= ceil((n-m+k+2)/4).
/// Requires 2 <= k <= m <= 2k-2, n >= m.
long torus_bound(long k, long m, long n);

/// One BoundReport per theorem relevant to the society's spectrum kind,
/// using the observed agreement number. For cylindrical and toroidal
/// societies an informational row for the circular-society theorem is
/// included, always marked not applicable: its formula does not bound
/// agreement on product spectra.
///
/// Verifies (k, m)-agreeability first unless `assume_agreeable` is set;
/// throws ValidationError when the check fails and propagates budget errors.
std::vector<BoundReport> verify_all(const Society& s, int k, int m,
                                    bool assume_agreeable = false,
                                    const SubsetBudget& budget = {});

}  // namespace socs
