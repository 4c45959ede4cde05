#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stone {

enum class ErrorKind {
  not_a_poset,
  not_a_lattice,
  not_a_frame,
  not_monotone,
  shape_mismatch,
  adjunction_failure,
  not_locale_morphism,
  jr_violated,
  mi_violated,
  condition_violated,
  j_not_admissible,
  size_limit,
  invalid_input,
  sweep_failed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when meets of induced elements escape the induced set. The witness
/// is the family of induced elements whose meet is not induced (empty when the
/// top element itself is not induced).
class MIViolated : public Error {
 public:
  MIViolated(std::vector<std::uint32_t> witness, std::uint32_t meet, const std::string& what)
      : Error(ErrorKind::mi_violated, what), witness_(std::move(witness)), meet_(meet) {}
  const std::vector<std::uint32_t>& witness() const { return witness_; }
  std::uint32_t meet() const { return meet_; }

 private:
  std::vector<std::uint32_t> witness_;
  std::uint32_t meet_;
};

class ConditionViolated : public Error {
 public:
  explicit ConditionViolated(std::string condition)
      : Error(ErrorKind::condition_violated, "condition " + condition + " fails"),
        condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// A conformance sweep found a violation; `counterexample` is the serialized
/// (minimized) instance.
class SweepFailed : public Error {
 public:
  SweepFailed(std::string tag, std::string counterexample)
      : Error(ErrorKind::sweep_failed, "sweep " + tag + " found a violation: " + counterexample),
        counterexample_(std::move(counterexample)) {}
  const std::string& counterexample() const { return counterexample_; }

 private:
  std::string counterexample_;
};

}  // namespace stone
