/**************************************************************************
 * Copyright 2026 The kummer-lcp Authors
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
 **************************************************************************/

#include "kummer/error.hpp"

namespace kummer {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DuplicateBranch: return "DuplicateBranch";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::CharDividesM: return "CharDividesM";
    case ErrorCode::InvalidPlace: return "InvalidPlace";
    case ErrorCode::UnsupportedRoot: return "UnsupportedRoot";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::AbstractField: return "AbstractField";
    case ErrorCode::NoRootsOfUnity: return "NoRootsOfUnity";
    case ErrorCode::JOutOfRange: return "JOutOfRange";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::RegimeViolation: return "RegimeViolation";
    case ErrorCode::NkNotPositive: return "NkNotPositive";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BezoutFailure: return "BezoutFailure";
    case ErrorCode::PoleAtEvaluationPlace: return "PoleAtEvaluationPlace";
    case ErrorCode::SupportOverlap: return "SupportOverlap";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::SRangeEmpty: return "SRangeEmpty";
    case ErrorCode::RampPreconditionViolated: return "RampPreconditionViolated";
    case ErrorCode::NotNonSpecial: return "NotNonSpecial";
    case ErrorCode::NoRationalInfinity: return "NoRationalInfinity";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::CongruenceViolated: return "CongruenceViolated";
    case ErrorCode::RootCountMismatch: return "RootCountMismatch";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    }
    return "Unknown";
}

} // namespace kummer
