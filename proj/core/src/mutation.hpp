#pragma once

// Sign sites that the mutation-test build flips one at a time. A regular build
// defines no PPB_MUTATION and every site returns its argument unchanged.

#ifndef PPB_MUTATION
#define PPB_MUTATION 0
#endif

namespace ppb::detail {

enum class Mutation {
  none = 0,
  ladder_xi_term = 1,          // sign of the xi P term in b^{+-}
  ladder_phase_rate = 2,       // the +- in (1 +- r)
  ladder_derivative_term = 3,  // the -+ in front of i P'
  recurrence_xi_term = 4,      // sign of 2 xi H_n
  recurrence_derivative_term = 5,  // the -+ in front of i H_n'
};

constexpr long mutable_sign(Mutation site, long value) {
  return static_cast<int>(site) == PPB_MUTATION ? -value : value;
}

}  // namespace ppb::detail
