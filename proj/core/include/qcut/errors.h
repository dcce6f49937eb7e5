// Copyright 2026 The qcut Authors
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

#ifndef QCUT_ERRORS_H
#define QCUT_ERRORS_H

#include <stdexcept>
#include <string>

namespace qcut {

/// Base class of every error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ir
struct SchemaError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct PartitionMissing : Error {
    PartitionMissing() : Error("partition required") {
    }
};

// mcx_decompose
struct NotAnMcx : Error {
    using Error::Error;
};
struct UnsupportedSplit : Error {
    using Error::Error;
};
/// All qubits of the gate already sit on one side of the boundary.
struct NoCutNeeded : UnsupportedSplit {
    using UnsupportedSplit::UnsupportedSplit;
};

// cutter
struct UncuttableCrossing : Error {
    using Error::Error;
};
struct InvalidAssignment : Error {
    using Error::Error;
};

// sim
struct TooManyBranches : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct QubitOutOfRange : Error {
    using Error::Error;
};

// estimate
struct ObservableSpansCut : Error {
    using Error::Error;
};
struct IntractableEnumeration : Error {
    using Error::Error;
};

}  // namespace qcut

#endif
