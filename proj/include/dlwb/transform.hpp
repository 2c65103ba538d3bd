// The five simulating transformations between defeasible logic variants.
// Each maps a theory D to a theory T(D) over an extended language; generated
// atoms and labels are rendered "$family(key)" and never collide with user
// names ('$' is reserved by the parser).
#ifndef DLWB_TRANSFORM_HPP
#define DLWB_TRANSFORM_HPP

#include <optional>
#include <string>

#include "dlwb/theory.hpp"

namespace dlwb {

enum class TransformKind {
  BlockForProp,            // individual-defeat propagating -> blocking
  PropForBlock,            // individual-defeat blocking -> propagating
  TeamForIndividualBase,   // pairwise-competition encoding (known unsound)
  TeamForIndividual,       // base plus the one-of guard rules
  IndividualForTeam,       // team defeat encoded for individual-defeat logics
};

std::string transform_kind_name(TransformKind k);
std::optional<TransformKind> transform_kind_from_name(std::string_view name);

/// Renders a generated name. Keys are literals ("p", "~p") or rule labels;
/// two-part keys join with a comma: fresh_name("d", "r1,r2") == "$d(r1,r2)".
/// `prefix` supports re-transformation: names generated from a theory that
/// already contains '$'-names get one more '$', keeping naming injective.
std::string fresh_name(const std::string& family, const std::string& key,
                       const std::string& prefix = "$");

/// "$"-prefix to use for names generated from `d`: one more leading '$' than
/// any name already appearing in d.
std::string fresh_prefix_for(const Theory& d);

Theory t_block_for_prop(const Theory& d);
Theory t_prop_for_block(const Theory& d);
Theory t_team_for_individual_base(const Theory& d);
Theory t_team_for_individual(const Theory& d);
Theory t_individual_for_team(const Theory& d);

Theory apply_transform(TransformKind k, const Theory& d);

}  // namespace dlwb

#endif  // DLWB_TRANSFORM_HPP
