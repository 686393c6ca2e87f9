/*
   Copyright 2026 The hopfneb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HOPFNEB_ERRORS_HPP
#define HOPFNEB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfneb {

enum class ErrorCode {
    FieldMismatch,
    OwnerMismatch,
    FactorMismatch,
    MissingGeneratorImage,
    InfiniteBasis,
    InvalidTable,
    InvalidGroupTable,
    NoAntipode,
    NotCommutative,
    NoCertifiedInverse,
    BoundTooSmall,
    DegreeExceedsBound,
    UnknownScenario,
    ParseError,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Instance-file parse failure; carries the 1-based line and column and the
/// offending token.
class ParseError : public Error {
   public:
    ParseError(int line, int column, std::string token, const std::string& message)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ", token '" + token +
                                           "': " + message),
          line_(line),
          column_(column),
          token_(std::move(token)) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

   private:
    int line_;
    int column_;
    std::string token_;
};

}  // namespace hopfneb

#endif
