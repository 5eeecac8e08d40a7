#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace resistnet {

/// Neumaier compensated sum.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(Scalar term) {
    const Scalar t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  Scalar value() const { return sum_ + comp_; }

 private:
  Scalar sum_{0};
  Scalar comp_{0};
};

/// Collects per-mode contributions and adds them largest eigenvalue first,
/// so the sum does not depend on how a caller happens to enumerate modes.
template <typename Scalar>
class ModeAccumulator {
 public:
  void add(Scalar eigenvalue, Scalar term) { terms_.push_back({eigenvalue, term}); }

  Scalar total() const {
    auto sorted = terms_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Term& a, const Term& b) { return a.eigenvalue > b.eigenvalue; });
    CompensatedSum<Scalar> sum;
    for (const auto& t : sorted) sum.add(t.value);
    return sum.value();
  }

 private:
  struct Term {
    Scalar eigenvalue;
    Scalar value;
  };
  std::vector<Term> terms_;
};

}  // namespace resistnet
