#pragma once

// Empirical detection of ultimate periodicity in a finite prefix.  A
// candidate (preperiod, period) is accepted only when preperiod + 2*period
// fits inside the observed window, so at least one full repetition has been
// seen.  The period is minimized first, then the preperiod.

#include <optional>
#include <utility>
#include <vector>

namespace hankelmu {

template <class T>
std::optional<std::pair<long, long>> detect_ultimate_period(const std::vector<T>& xs) {
  const long len = static_cast<long>(xs.size());
  for (long p = 1; 2 * p <= len; ++p) {
    long last_bad = -1;
    for (long i = len - p - 1; i >= 0; --i) {
      if (!(xs[static_cast<size_t>(i)] == xs[static_cast<size_t>(i + p)])) {
        last_bad = i;
        break;
      }
    }
    long pre = last_bad + 1;
    if (pre + 2 * p <= len) return std::make_pair(pre, p);
  }
  return std::nullopt;
}

}  // namespace hankelmu
