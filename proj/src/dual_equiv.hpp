#pragma once

#include <functional>
#include <stdexcept>

#include "chain.hpp"

namespace gbdq {

enum class PhiRule { Fixed, A, B, C, Untagged };

const char* phi_rule_name(PhiRule r);

struct PhiResult {
  Chain chain;
  PhiRule rule;
};

// Tripwire: a valid chain with exactly one window descent always matches a
// rule, so this firing means the input was corrupt.
struct NoRuleApplies : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The involution phi_i, 2 <= i <= length-1.  Fixed when the label word has
// descents at both of i-1, i or at neither; otherwise rewrites the window of
// transpositions at positions i-2..i (0-based).
PhiResult phi(const Chain& c, int i);

// reverse(phi_i(c)) == phi_{n+1-i}(reverse(c))
bool phi_reversal_check(const Chain& c, int i);

// The axiom engine and graph builder take the involution as a parameter so
// tests can inject a corrupted one.
using PhiProvider = std::function<PhiResult(const Chain&, int)>;

inline PhiProvider default_phi() {
  return [](const Chain& c, int i) { return phi(c, i); };
}

// Negative control: answers phi_i queries with a neighboring color's image,
// so the verifier must flag (ii.b).  Keeps the chain set closed.
PhiProvider corrupted_phi();

}  // namespace gbdq
