#pragma once

#include <stdexcept>
#include <string>

namespace g31 {

enum class Err {
  Ok = 0,
  Parse,
  NotACode,
  NotBijective,
  ShapeError,
  PinConflict,
  SizeError,
  HypothesisFail,
  NotInSubgroup,
  KappaPresent,
  IndexError,
  CycleError,
  FanoutError,
  ArityError,
  ComparableInput,
  Precondition,
  NotDepthOne,
  ArityMismatch,
  UnsupportedTag,
  NotInGroup,
  Budget,
  Internal,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw Error(c, what); }

}  // namespace g31
