/*
 * Copyright 2026 The meshfield authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace meshfield {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- mesh errors ---

class ParseError : public Error {
public:
  using Error::Error;
};

class DegenerateFace : public Error {
public:
  DegenerateFace(const std::string& msg, long face) : Error(msg), face_index(face) {}
  long face_index;
};

class EmptyMesh : public Error {
public:
  using Error::Error;
};

class IsolatedVertex : public Error {
public:
  IsolatedVertex(const std::string& msg, long vertex) : Error(msg), vertex_index(vertex) {}
  long vertex_index;
};

class ConstantField : public Error {
public:
  using Error::Error;
};

// --- spectral errors ---

class NegativeTime : public Error {
public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
public:
  ConvergenceFailure(const std::string& msg, std::vector<double> residuals)
      : Error(msg), achieved_residuals(std::move(residuals)) {}
  std::vector<double> achieved_residuals;
};

// --- autodiff errors ---

class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class NonFinite : public Error {
public:
  using Error::Error;
};

class NonScalarRoot : public Error {
public:
  using Error::Error;
};

// --- model / harness errors ---

class ConfigError : public Error {
public:
  using Error::Error;
};

class LevelOutOfRange : public Error {
public:
  using Error::Error;
};

class ZeroVector : public Error {
public:
  using Error::Error;
};

class EmptySubset : public Error {
public:
  using Error::Error;
};

class CheckpointMismatch : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace meshfield
