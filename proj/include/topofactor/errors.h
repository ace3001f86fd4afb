#pragma once

#include <stdexcept>
#include <string>

namespace topofactor {

// Initial error at or above a protocol's admissibility cap: no number of
// rounds can purify such a state.
class AboveThreshold : public std::runtime_error {
  public:
    AboveThreshold(const std::string& protocol, double eps, double cap)
        : std::runtime_error(protocol + ": initial error " + std::to_string(eps) +
                             " is at or above the distillation cap " + std::to_string(cap)),
          eps_(eps),
          cap_(cap) {}

    double eps() const { return eps_; }
    double cap() const { return cap_; }

  private:
    double eps_;
    double cap_;
};

// Producing even one purified state needs more qubits than the whole budget.
// Both total qubits and total distillation time diverge past this point.
class InfeasibleBudget : public std::runtime_error {
  public:
    InfeasibleBudget(double single_state_qubits, double budget)
        : std::runtime_error("single-state qubit cost " + std::to_string(single_state_qubits) +
                             " exceeds the qubit budget " + std::to_string(budget) +
                             "; qubits and distillation time diverge"),
          single_state_qubits_(single_state_qubits),
          budget_(budget) {}

    double single_state_qubits() const { return single_state_qubits_; }
    double budget() const { return budget_; }

  private:
    double single_state_qubits_;
    double budget_;
};

// The compilation error map fails to contract under the configured constants.
class NonConvergent : public std::runtime_error {
  public:
    explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace topofactor
