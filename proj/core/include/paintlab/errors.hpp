// Copyright 2026 The Paintlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAINTLAB_ERRORS_HPP
#define PAINTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paintlab {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument: probability out of range, unknown vertex, bad permutation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A mathematical function evaluated outside its domain (np <= 1, x < 0, C <= 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exact computation was asked to exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked in the wrong game phase.
class StateError : public Error {
 public:
  using Error::Error;
};

// Caller broke a precondition that is a programming mistake rather than bad
// input, e.g. asking for a winning Painter on a paintable position.
class LogicError : public Error {
 public:
  using Error::Error;
};

// Experiment configuration could not be parsed or resolved.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A strategy could not be built for the given graph (e.g. the high-degree
// part of a very sparse graph contains a component with two cycles).
class StrategyError : public Error {
 public:
  using Error::Error;
};

}  // namespace paintlab

#endif  // PAINTLAB_ERRORS_HPP
