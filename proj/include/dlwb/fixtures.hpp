// Built-in benchmark theories, shared by the test suites and the CLI
// `examples` command. The same texts are shipped as fixtures/*.dfl.
#ifndef DLWB_FIXTURES_HPP
#define DLWB_FIXTURES_HPP

#include <string>

#include "dlwb/theory.hpp"

namespace dlwb::fixtures {

// Ambiguity demo: p is ambiguous; blocking logics conclude q, propagating
// logics do not.
extern const char kAmbiguityText[];

// Two unopposedly competing rules for p; adding => p separates team defeat
// from the pairwise-competition encoding at the blocking tags.
extern const char kCompetitionText[];
extern const char kCompetitionAdditionText[];

// Two superiority-resolved rule pairs for p; adding => p separates team
// defeat from the pairwise encoding at the propagating tags.
extern const char kTeamsText[];

// Hand-built pairwise-defeat encoding of the competition theory, without the
// strict-truth guard rules; adding => p makes it prove more than the
// original at the blocking tags.
extern const char kPairwiseEncodingText[];

Theory ambiguity();            // kAmbiguityText
Theory competition();          // kCompetitionText
Theory competition_addition(); // kCompetitionAdditionText
Theory teams();                // kTeamsText
Theory pairwise_encoding();    // kPairwiseEncodingText

}  // namespace dlwb::fixtures

#endif  // DLWB_FIXTURES_HPP
