#ifndef MULTICAT_ERROR_HPP
#define MULTICAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mcat {

enum class ErrKind {
  MissingComposite,
  LawViolation,
  DanglingRef,
  DuplicateName,
  UnknownObject,
  UnknownMorphism,
  NotFunctorial,
  SizeCap,
  AmbientMismatch,
  ApexMismatch,
  NotASquare,
  NotLocalRightAdjoint,
  NotMultiAdjoint,
  InternalInconsistency,
  GlidingViolation,
  NotAFactorizationSystem,
  NoTerminal,
  NoTargetColimit,
  NoTargetLimit,
  NotFull,
  CancellationFails,
  NotASubclass,
  NotStable,
  SyntaxError,
};

const char* err_kind_name(ErrKind k);

// All library failures surface as Error; SyntaxError additionally carries a
// source position (1-based line/column, -1 when not applicable).
class Error : public std::runtime_error {
public:
  Error(ErrKind k, std::string msg, int line = -1, int col = -1)
      : std::runtime_error(std::move(msg)), kind(k), line(line), col(col) {}

  ErrKind kind;
  int line;
  int col;
};

} // namespace mcat

#endif
