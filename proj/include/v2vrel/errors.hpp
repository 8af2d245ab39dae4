// Copyright 2026 The v2vrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef V2VREL_ERRORS_HPP
#define V2VREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace v2vrel
{

// Argument outside the domain of the model (coincident TX/RX, bad ranges, ...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// A numerical routine failed to reach its tolerance.
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Method-of-moments Beta fit cannot produce positive parameters.
class FitError : public std::runtime_error
{
  public:
    enum class Kind
    {
        Degenerate,        // zero variance, or mean at 0 or 1
        InfeasibleMoments, // variance >= mean * (1 - mean)
    };

    FitError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

// Design target cannot be met even without interference.
class InfeasibleError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or unknown configuration entry.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace v2vrel

#endif
