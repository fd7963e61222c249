#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crossrank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("scalars belong to different fields") {}
};

class ZeroEvaluationPoint : public Error {
 public:
  ZeroEvaluationPoint() : Error("Laurent polynomials cannot be evaluated at 0") {}
};

class BadLetter : public Error {
 public:
  BadLetter(int letter, int alphabet)
      : Error("letter " + std::to_string(letter) + " is outside the alphabet {0.." +
              std::to_string(alphabet - 1) + "}") {}
};

class LevelTooSmall : public Error {
 public:
  LevelTooSmall(int level, int radius)
      : Error("level " + std::to_string(level) + " is smaller than the element radius " +
              std::to_string(radius)) {}
};

class LevelMismatch : public Error {
 public:
  explicit LevelMismatch(const std::string& what) : Error("level mismatch: " + what) {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MalformedSegment : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error("syntax error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

}  // namespace crossrank
