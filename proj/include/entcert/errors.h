// Copyright 2026 The entcert Authors
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

#ifndef ENTCERT_ERRORS_H
#define ENTCERT_ERRORS_H

#include <stdexcept>

namespace entcert {

// Invalid inputs are reported with std::domain_error. The two subclasses below
// mark conditions callers usually want to tell apart.

/// No correlation vector satisfies the separability constraint.
class InfeasibleConstraintError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Both likelihoods vanish at an outcome, so no posterior exists there.
class UndefinedOutcomeError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace entcert

#endif  // ENTCERT_ERRORS_H
