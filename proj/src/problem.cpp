#include "illusion/problem.hpp"

#include "illusion/errors.hpp"

namespace illusion {

namespace {

bool has_free_p(ProblemKind k) {
  return k == ProblemKind::PIA || k == ProblemKind::PIR || k == ProblemKind::PI;
}

}  // namespace

ProblemVariant::ProblemVariant(ProblemKind kind, RationalP p) : kind_(kind), p_(p) {
  if (!has_free_p(kind) && !p.is_half()) {
    throw InvalidParameters("problem " + name() + " is defined only for p = 1/2");
  }
}

ProblemVariant ProblemVariant::parse(std::string_view name, RationalP p) {
  struct Entry {
    std::string_view name;
    ProblemKind kind;
  };
  static constexpr Entry kTable[] = {
      {"miae", ProblemKind::MIAE},       {"mire", ProblemKind::MIRE},
      {"mie", ProblemKind::MIE},         {"half-ia", ProblemKind::HalfIA},
      {"half-ir", ProblemKind::HalfIR},  {"half-i", ProblemKind::HalfI},
      {"p-ia", ProblemKind::PIA},        {"p-ir", ProblemKind::PIR},
      {"p-i", ProblemKind::PI},
  };
  for (const auto& e : kTable) {
    if (e.name == name) return ProblemVariant(e.kind, p);
  }
  throw InvalidParameters("unknown problem '" + std::string(name) + "'");
}

EditDiscipline ProblemVariant::discipline() const {
  switch (kind_) {
    case ProblemKind::MIAE:
    case ProblemKind::HalfIA:
    case ProblemKind::PIA:
      return EditDiscipline::AddOnly;
    case ProblemKind::MIRE:
    case ProblemKind::HalfIR:
    case ProblemKind::PIR:
      return EditDiscipline::RemoveOnly;
    default:
      return EditDiscipline::Both;
  }
}

bool ProblemVariant::requires_blue_majority() const {
  return kind_ == ProblemKind::MIAE || kind_ == ProblemKind::MIRE || kind_ == ProblemKind::MIE;
}

std::string ProblemVariant::name() const {
  switch (kind_) {
    case ProblemKind::MIAE: return "miae";
    case ProblemKind::MIRE: return "mire";
    case ProblemKind::MIE: return "mie";
    case ProblemKind::HalfIA: return "half-ia";
    case ProblemKind::HalfIR: return "half-ir";
    case ProblemKind::HalfI: return "half-i";
    case ProblemKind::PIA: return "p-ia";
    case ProblemKind::PIR: return "p-ir";
    case ProblemKind::PI: return "p-i";
  }
  return "?";
}

}  // namespace illusion
