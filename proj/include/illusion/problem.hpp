#pragma once

#include <string>
#include <string_view>

#include "illusion/rational_p.hpp"

namespace illusion {

enum class ProblemKind { MIAE, MIRE, MIE, HalfIA, HalfIR, HalfI, PIA, PIR, PI };

enum class EditDiscipline { AddOnly, RemoveOnly, Both };

class ProblemVariant {
 public:
  ProblemVariant(ProblemKind kind, RationalP p = RationalP{});

  static ProblemVariant miae() { return {ProblemKind::MIAE}; }
  static ProblemVariant mire() { return {ProblemKind::MIRE}; }
  static ProblemVariant mie() { return {ProblemKind::MIE}; }
  static ProblemVariant half_ia() { return {ProblemKind::HalfIA}; }
  static ProblemVariant half_ir() { return {ProblemKind::HalfIR}; }
  static ProblemVariant half_i() { return {ProblemKind::HalfI}; }
  static ProblemVariant pia(RationalP p) { return {ProblemKind::PIA, p}; }
  static ProblemVariant pir(RationalP p) { return {ProblemKind::PIR, p}; }
  static ProblemVariant pi(RationalP p) { return {ProblemKind::PI, p}; }

  // Accepts miae, mire, mie, half-ia, half-ir, half-i, p-ia, p-ir, p-i.
  // The p argument only applies to the p-* names; the others fix p = 1/2
  // and reject anything else. Throws InvalidParameters.
  static ProblemVariant parse(std::string_view name, RationalP p = RationalP{});

  ProblemKind kind() const { return kind_; }
  RationalP p() const { return p_; }
  EditDiscipline discipline() const;
  bool requires_blue_majority() const;
  std::string name() const;

  friend bool operator==(const ProblemVariant&, const ProblemVariant&) = default;

 private:
  ProblemKind kind_;
  RationalP p_;
};

}  // namespace illusion
