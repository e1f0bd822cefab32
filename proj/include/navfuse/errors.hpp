// Copyright 2026 The navfuse Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace navfuse {

// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DegeneratePolyline : public Error {
 public:
  explicit DegeneratePolyline(const std::string& msg) : Error(msg) {}
};

class EmptyRoute : public Error {
 public:
  explicit EmptyRoute(const std::string& msg) : Error(msg) {}
};

class UndefinedGradient : public Error {
 public:
  explicit UndefinedGradient(const std::string& msg) : Error(msg) {}
};

class InsufficientTrack : public Error {
 public:
  explicit InsufficientTrack(const std::string& msg) : Error(msg) {}
};

class NonFiniteActivation : public Error {
 public:
  explicit NonFiniteActivation(const std::string& layer)
      : Error("non-finite activation in layer: " + layer), layer_(layer) {}
  const std::string& layer() const { return layer_; }

 private:
  std::string layer_;
};

class NoValidSteps : public Error {
 public:
  explicit NoValidSteps(const std::string& msg) : Error(msg) {}
};

class DivergedTraining : public Error {
 public:
  DivergedTraining(const std::string& msg, int epoch, int step)
      : Error(msg), epoch_(epoch), step_(step) {}
  int epoch() const { return epoch_; }
  int step() const { return step_; }

 private:
  int epoch_ = 0;
  int step_ = 0;
};

class InfeasibleLayout : public Error {
 public:
  explicit InfeasibleLayout(const std::string& msg) : Error(msg) {}
};

class BadRatios : public Error {
 public:
  explicit BadRatios(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace navfuse
