#include "mpconv/via_decision.hpp"

#include <algorithm>
#include <cmath>

#include "mpconv/predicates.hpp"

namespace mpconv {
namespace {

bool ask(const UpperBoundOracle& oracle, const Sequence& a, const Sequence& b,
         const Sequence& c, DecisionStats* stats) {
  if (stats) ++stats->oracle_calls;
  return oracle(a, b, c);
}

std::size_t ceil_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 1 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace

UpperBoundOracle direct_upper_bound_oracle() {
  return [](const Sequence& a, const Sequence& b, const Sequence& c) {
    return check_upper_bound(a, b, c).yes;
  };
}

std::optional<std::size_t> detect_single(const Sequence& a, const Sequence& b,
                                         const Sequence& c,
                                         const UpperBoundOracle& oracle,
                                         DecisionStats* stats) {
  require_equal_lengths(a, b, c, "detect_single");
  if (stats) ++stats->detect_single_calls;
  if (ask(oracle, a, b, c, stats)) return std::nullopt;
  // Smallest prefix length p whose instance fails; the violation sits at
  // k = p - 1 because every constraint of a p-prefix has i + j < p.
  std::size_t lo = 1;
  std::size_t hi = a.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (ask(oracle, a.prefix(mid), b.prefix(mid), c.prefix(mid), stats)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo - 1;
}

ViolationReport detect_violations(const Sequence& a, const Sequence& b,
                                  const Sequence& c,
                                  const UpperBoundOracle& oracle,
                                  DecisionStats* stats) {
  require_equal_lengths(a, b, c, "detect_violations");
  const std::size_t n = a.size();
  const Value w = std::max(a.max_abs(), b.max_abs());
  const Value mask = checked_add(
      checked_mul(checked_mul(2, static_cast<Value>(n)), w), 1);
  const Value c_min = *std::min_element(c.begin(), c.end());
  const Value pad = checked_sub(checked_sub(std::min(c_min, -w), w), 1);

  std::vector<Value> work = c.values();
  ViolationReport report{std::vector<bool>(n, false)};

  const std::size_t m = ceil_sqrt(n);
  const std::size_t s = (n + m - 1) / m;
  const std::size_t window = 2 * s;
  std::size_t single_calls = 0;
  std::size_t marked = 0;

  for (std::size_t x = 0; x * s < n; ++x) {
    const std::size_t xbase = x * s;
    const std::size_t xlen = std::min(s, n - xbase);
    std::vector<Value> la(window, pad);
    std::copy_n(a.begin() + static_cast<std::ptrdiff_t>(xbase), xlen, la.begin());
    const Sequence local_a(std::move(la));

    for (std::size_t y = 0; y * s < n; ++y) {
      const std::size_t ybase = y * s;
      const std::size_t ylen = std::min(s, n - ybase);
      std::vector<Value> lb(window, pad);
      std::copy_n(b.begin() + static_cast<std::ptrdiff_t>(ybase), ylen,
                  lb.begin());
      const Sequence local_b(std::move(lb));
      const std::size_t cbase = xbase + ybase;

      for (;;) {
        std::vector<Value> lc(window, mask);
        for (std::size_t k = 0; k < window && cbase + k < n; ++k) {
          lc[k] = work[cbase + k];
        }
        ++single_calls;
        const auto hit =
            detect_single(local_a, local_b, Sequence(std::move(lc)), oracle, stats);
        if (!hit) break;
        const std::size_t k = cbase + *hit;
        // A correct oracle never reports a masked or out-of-range index;
        // bail out instead of looping forever on a faulty one.
        if (k >= n || report.violated[k]) {
          throw Error("detect_violations: oracle answers are inconsistent");
        }
        work[k] = mask;
        report.violated[k] = true;
        ++marked;
      }
    }
  }
  if (stats && single_calls > stats->max_round_single_calls) {
    stats->max_round_single_calls = single_calls;
    stats->max_round_marked = marked;
  }
  return report;
}

ViolationReport detect_violations(const Sequence& a, const Sequence& b,
                                  const Sequence& c) {
  return detect_violations(a, b, c, direct_upper_bound_oracle());
}

Sequence max_conv_via_upperbound(const Sequence& a, const Sequence& b,
                                 const UpperBoundOracle& oracle,
                                 DecisionStats* stats) {
  if (a.size() != b.size()) {
    throw InvalidInput("max_conv_via_upperbound: sequences must have equal length");
  }
  const std::size_t n = a.size();
  const auto [amin, amax] = std::minmax_element(a.begin(), a.end());
  const auto [bmin, bmax] = std::minmax_element(b.begin(), b.end());
  std::vector<Value> lo(n, checked_add(*amin, *bmin));
  std::vector<Value> hi(n, checked_add(*amax, *bmax));
  std::vector<Value> probe(n);

  for (;;) {
    bool open = false;
    for (std::size_t k = 0; k < n; ++k) {
      probe[k] = lo[k] + (hi[k] - lo[k]) / 2;
      open = open || lo[k] < hi[k];
    }
    if (!open) break;
    if (stats) ++stats->rounds;
    const auto report = detect_violations(a, b, Sequence(probe), oracle, stats);
    for (std::size_t k = 0; k < n; ++k) {
      if (report.violated[k]) {
        lo[k] = probe[k] + 1;
      } else {
        hi[k] = probe[k];
      }
    }
  }
  return Sequence(std::move(lo));
}

Sequence max_conv_via_upperbound(const Sequence& a, const Sequence& b) {
  return max_conv_via_upperbound(a, b, direct_upper_bound_oracle());
}

}  // namespace mpconv
