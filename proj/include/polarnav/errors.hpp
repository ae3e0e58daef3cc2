/*
 * Copyright (c) 2026, polarnav contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
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

namespace polarnav {

/// Input outside the mathematical domain of an operation (zero-norm vectors,
/// non-monotonic timestamps, out-of-range epochs).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by local-level operations whose formulas contain 1/cos(L) once the
/// latitude gets too close to a pole.
class SingularLatitude : public std::runtime_error {
 public:
  explicit SingularLatitude(double latitude_rad);

  double latitude() const noexcept { return latitude_; }

 private:
  double latitude_;
};

class InsufficientObservations : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The stored vector pairs do not constrain all three rotational degrees of
/// freedom (e.g. every pair collinear).
class DegenerateGeometry : public std::runtime_error {
 public:
  DegenerateGeometry(const std::string& what, double quality)
      : std::runtime_error(what), quality_(quality) {}

  double quality() const noexcept { return quality_; }

 private:
  double quality_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polarnav
