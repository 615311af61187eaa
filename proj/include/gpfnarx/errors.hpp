/*
 * Copyright 2026 The gpfnarx Authors
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

#ifndef GPFNARX_ERRORS_HPP
#define GPFNARX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpfnarx {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimError : public Error {
public:
    explicit DimError(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

class NonFiniteSample : public Error {
public:
    explicit NonFiniteSample(const std::string& msg) : Error(msg) {}
};

class TooShortForOrder : public Error {
public:
    explicit TooShortForOrder(const std::string& msg) : Error(msg) {}
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

class NumericalNegativeVariance : public Error {
public:
    explicit NumericalNegativeVariance(const std::string& msg) : Error(msg) {}
};

class TooManyInducing : public Error {
public:
    explicit TooManyInducing(const std::string& msg) : Error(msg) {}
};

class InvalidCutoff : public Error {
public:
    explicit InvalidCutoff(const std::string& msg) : Error(msg) {}
};

class InvalidSystem : public Error {
public:
    explicit InvalidSystem(const std::string& msg) : Error(msg) {}
};

class CannotSetSnr : public Error {
public:
    explicit CannotSetSnr(const std::string& msg) : Error(msg) {}
};

class NonPositiveVariance : public Error {
public:
    explicit NonPositiveVariance(const std::string& msg) : Error(msg) {}
};

/// Model file cannot be read by this library version.
class SchemaMismatch : public Error {
public:
    explicit SchemaMismatch(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace gpfnarx

#endif // GPFNARX_ERRORS_HPP
