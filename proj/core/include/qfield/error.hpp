// Copyright 2026 The qfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFIELD_ERROR_HPP_
#define QFIELD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qfield {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two fields or vectors were attached to different geometries or bases.
class GeometryMismatch : public Error {
 public:
  using Error::Error;
};

/// A photon mode that must satisfy (phi, phi) = 1 does not.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

class InvalidSplitter : public Error {
 public:
  using Error::Error;
};

/// A requested quantity does not fit the truncated mode or Fock space.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Quadrature order below the decomposition policy. Callers may opt out.
class QuadraturePolicyError : public Error {
 public:
  using Error::Error;
};

class NonFiniteSample : public Error {
 public:
  using Error::Error;
};

class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qfield

#endif  // QFIELD_ERROR_HPP_
