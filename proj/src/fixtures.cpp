#include "dlwb/fixtures.hpp"

#include <stdexcept>

#include "dlwb/text_format.hpp"

namespace dlwb::fixtures {

const char kAmbiguityText[] =
    "# p is ambiguous; ~q depends on resolving it\n"
    "r1: => p.\n"
    "r2: => ~p.\n"
    "r3: ~p => ~q.\n"
    "r4: => q.\n";

const char kCompetitionText[] =
    "r1: => p.\n"
    "r2: => ~p.\n";

const char kCompetitionAdditionText[] = "a1: => p.\n";

const char kTeamsText[] =
    "r1: => p.\n"
    "r2: => ~p.\n"
    "r3: => p.\n"
    "r4: => ~p.\n"
    "r1 > r2.\n"
    "r3 > r4.\n";

const char kPairwiseEncodingText[] =
    "# pairwise-defeat encoding of the two-rule competition theory\n"
    "R1_12: => ~d_r1_r2.\n"
    "R2_12: => d_r1_r2.\n"
    "R1_21: => ~d_r2_r1.\n"
    "R2_21: => d_r2_r1.\n"
    "NF_1: => ~fail_r1.\n"
    "F_1: => fail_r1.\n"
    "NF_2: => ~fail_r2.\n"
    "F_2: => fail_r2.\n"
    "L1: d_r1_r2 => d_r1.\n"
    "L2: fail_r1 => d_r1.\n"
    "L3: d_r2_r1 => d_r2.\n"
    "L4: fail_r2 => d_r2.\n"
    "O1: => one_p.\n"
    "O2: => one_np.\n"
    "S1: one_p, d_r2 => p.\n"
    "S2: one_np, d_r1 => ~p.\n"
    "NF_1 > F_1.\n"
    "NF_2 > F_2.\n";

namespace {
Theory parsed(const char* text) {
  ParseResult result = parse_theory(text);
  if (!result.ok()) throw std::logic_error("fixture text failed to parse");
  return result.theory;
}
}  // namespace

Theory ambiguity() { return parsed(kAmbiguityText); }
Theory competition() { return parsed(kCompetitionText); }
Theory competition_addition() { return parsed(kCompetitionAdditionText); }
Theory teams() { return parsed(kTeamsText); }
Theory pairwise_encoding() { return parsed(kPairwiseEncodingText); }

}  // namespace dlwb::fixtures
