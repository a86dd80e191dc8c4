#pragma once

#include <stdexcept>
#include <string>

namespace dibrush {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DIBRUSH_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

DIBRUSH_DEFINE_ERROR(InvalidGraph);
DIBRUSH_DEFINE_ERROR(InvalidFamilySpec);
DIBRUSH_DEFINE_ERROR(IndexOutOfRange);
DIBRUSH_DEFINE_ERROR(InvalidPlan);
DIBRUSH_DEFINE_ERROR(IllegalFlow);
DIBRUSH_DEFINE_ERROR(InfeasibleNetwork);
DIBRUSH_DEFINE_ERROR(TooLarge);
DIBRUSH_DEFINE_ERROR(TopoOnlyOnCyclic);
DIBRUSH_DEFINE_ERROR(BadSize);
DIBRUSH_DEFINE_ERROR(NotAnArc);
DIBRUSH_DEFINE_ERROR(NotRootedTree);
DIBRUSH_DEFINE_ERROR(NotAcyclic);
DIBRUSH_DEFINE_ERROR(NotADecomposition);
DIBRUSH_DEFINE_ERROR(IncompleteTrace);
DIBRUSH_DEFINE_ERROR(NotATree);
DIBRUSH_DEFINE_ERROR(MethodNotApplicable);

#undef DIBRUSH_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& detail)
      : Error("ParseError", "line " + std::to_string(line) + ": " + detail),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A vertex could not fire because it held fewer brushes than its threshold.
class InsufficientBrushes : public Error {
 public:
  InsufficientBrushes(int vertex, int have, int need, int step)
      : Error("InsufficientBrushes",
              "(v=" + std::to_string(vertex) + ", have=" + std::to_string(have) +
                  ", need=" + std::to_string(need) + ") at step " +
                  std::to_string(step)),
        vertex_(vertex),
        have_(have),
        need_(need),
        step_(step) {}

  int vertex() const noexcept { return vertex_; }
  int have() const noexcept { return have_; }
  int need() const noexcept { return need_; }
  int step() const noexcept { return step_; }

 private:
  int vertex_, have_, need_, step_;
};

}  // namespace dibrush
