// dlwb: command-line workbench for propositional defeasible logics.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dlwb/engine.hpp"
#include "dlwb/fixtures.hpp"
#include "dlwb/harness.hpp"
#include "dlwb/text_format.hpp"
#include "dlwb/theory.hpp"
#include "dlwb/transform.hpp"

namespace {

using nlohmann::json;
using namespace dlwb;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Theory load_theory(const std::string& path, bool loose) {
  ParseResult result = parse_theory(slurp(path), loose);
  if (!result.ok()) {
    for (const ParseError& e : result.errors) {
      std::cerr << path << ":" << e.span.line << ":" << e.span.column << ": "
                << e.message << "\n";
    }
    throw UsageError("failed to parse '" + path + "'");
  }
  return result.theory;
}

Tag parse_tag_flag(const std::string& name) {
  auto tag = tag_from_name(name);
  if (!tag) throw UsageError("unknown tag '" + name + "'");
  return *tag;
}

std::set<Tag> parse_tags_flag(const std::string& csv) {
  std::set<Tag> tags;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) tags.insert(parse_tag_flag(item));
  }
  if (tags.empty()) throw UsageError("--tags must name at least one tag");
  return tags;
}

TransformKind parse_transform_flag(const std::string& name) {
  if (auto kind = transform_kind_from_name(name)) return *kind;
  throw UsageError("unknown transformation '" + name + "'");
}

int cmd_parse(const std::string& file, bool loose) {
  ParseResult result = parse_theory(slurp(file), loose);
  if (!result.ok()) {
    for (const ParseError& e : result.errors) {
      std::cerr << file << ":" << e.span.line << ":" << e.span.column << ": "
                << e.message << "\n";
    }
    return kExitUsage;
  }
  std::cout << print_theory(result.theory);
  return kExitOk;
}

int cmd_infer(const std::string& file, const std::string& tagsCsv, bool loose,
              bool asJson) {
  Theory d = load_theory(file, loose);
  ConclusionSet fix = least_fixpoint(d, parse_tags_flag(tagsCsv));
  std::vector<std::string> lines;
  json conclusions = json::array();
  for (const SignedConclusion& c : fix.members) {
    lines.push_back(print_conclusion(c));
  }
  std::sort(lines.begin(), lines.end());
  if (asJson) {
    for (const std::string& line : lines) {
      SignedConclusion c = *parse_conclusion(line);
      conclusions.push_back({{"sign", c.sign == Sign::Plus ? "+" : "-"},
                             {"tag", tag_name(c.tag)},
                             {"literal", print_literal(c.literal)}});
    }
    std::cout << json{{"conclusions", conclusions}}.dump(2) << "\n";
  } else {
    for (const std::string& line : lines) std::cout << line << "\n";
  }
  return kExitOk;
}

int cmd_transform(const std::string& file, const std::string& kind,
                  bool loose) {
  Theory d = load_theory(file, loose);
  std::cout << print_theory(apply_transform(parse_transform_flag(kind), d));
  return kExitOk;
}

int cmd_add(const std::string& dFile, const std::string& aFile, bool loose) {
  Theory d = load_theory(dFile, loose);
  Theory a = load_theory(aFile, loose);
  try {
    std::cout << print_theory(add_theories(d, a));
  } catch (const LabelClash& e) {
    std::cerr << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_check_sim(const std::string& file, const std::string& transform,
                  const std::string& source, const std::string& target,
                  const std::string& additions, int trials, uint64_t seed,
                  bool seedSet, const std::string& fixture, bool loose) {
  if (fixture.empty() && !seedSet) {
    throw UsageError("--seed is required when additions are generated");
  }
  Theory d = load_theory(file, loose);
  SimCheckConfig cfg;
  cfg.transform = parse_transform_flag(transform);
  cfg.sourceTag = parse_tag_flag(source);
  cfg.targetTag = parse_tag_flag(target);
  if (additions == "facts") {
    cfg.additions = AdditionKind::Facts;
  } else if (additions == "rules") {
    cfg.additions = AdditionKind::Rules;
  } else {
    throw UsageError("--additions must be 'facts' or 'rules'");
  }
  cfg.trials = trials;
  cfg.seed = seed;
  std::optional<Theory> fixed;
  if (!fixture.empty()) fixed = load_theory(fixture, loose);
  SimReport report;
  try {
    report = check_simulation(d, cfg, fixed);
  } catch (const UnsupportedClaim& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  json mismatches = json::array();
  for (const TrialMismatch& tm : report.mismatches) {
    mismatches.push_back(
        {{"d_file", file},
         {"a_file", fixture.empty() ? "generated(seed=" + std::to_string(seed) +
                                          ",trial=" + std::to_string(tm.trial) +
                                          ")"
                                    : fixture},
         {"literal", print_literal(tm.mismatch.literal)},
         {"sign", tm.mismatch.sign == Sign::Plus ? "+" : "-"},
         {"source", tm.mismatch.inSource},
         {"target", tm.mismatch.inTarget}});
  }
  json out = {
      {"claim", transform_kind_name(cfg.transform) + ": " + source + " -> " +
                    target + " (" + additions + " additions)"},
      {"trials", report.trials},
      {"verdict",
       report.verdict == SimReport::Verdict::AllPass ? "AllPass" : "Mismatch"},
      {"mismatches", mismatches},
      {"seed", seed},
  };
  std::cout << out.dump(2) << "\n";
  return report.verdict == SimReport::Verdict::AllPass ? kExitOk
                                                       : kExitViolation;
}

int report_props(const std::string& name, const Theory& d, bool& anyViolation) {
  for (const PropertyReport& rep :
       {check_inclusion_theorem(d), check_coherence(d)}) {
    for (const std::string& v : rep.violations) {
      std::cout << name << ": " << v << "\n";
      anyViolation = true;
    }
  }
  return kExitOk;
}

int cmd_check_props(const std::string& file, int trials, uint64_t seed,
                    bool seedSet, bool loose) {
  bool anyViolation = false;
  int checked = 0;
  if (!file.empty()) {
    report_props(file, load_theory(file, loose), anyViolation);
    ++checked;
  }
  if (trials > 0) {
    if (!seedSet) throw UsageError("--seed is required with --trials");
    GenConfig gen;
    for (int i = 0; i < trials; ++i) {
      Theory d = gen_theory(gen, seed ^ static_cast<uint64_t>(i));
      report_props("trial " + std::to_string(i), d, anyViolation);
      ++checked;
    }
  }
  if (checked == 0) {
    throw UsageError("give a theory file and/or --trials N --seed S");
  }
  std::cout << (anyViolation ? "Violation" : "AllPass") << " (" << checked
            << " theories)\n";
  return anyViolation ? kExitViolation : kExitOk;
}

int cmd_examples() {
  struct Row {
    std::string name;
    bool pass;
  };
  std::vector<Row> rows;

  // Golden conclusions of the ambiguity demo at the individual-defeat tags.
  {
    Theory d = fixtures::ambiguity();
    ConclusionSet fix = least_fixpoint(
        d, {Tag::BlockingInd, Tag::PropagatingInd, Tag::SupportInd});
    Literal p{"p", true}, np{"p", false}, q{"q", true}, nq{"q", false};
    bool pass = true;
    for (const Literal& l : {p, np, nq}) {
      pass = pass && fix.contains(Sign::Minus, Tag::BlockingInd, l);
    }
    pass = pass && fix.contains(Sign::Plus, Tag::BlockingInd, q);
    for (const Literal& l : {p, np, q, nq}) {
      pass = pass && fix.contains(Sign::Minus, Tag::PropagatingInd, l) &&
             fix.contains(Sign::Plus, Tag::SupportInd, l);
    }
    rows.push_back({"ambiguity demo: blocking proves q, propagating does not",
                    pass});
  }
  // The pairwise-competition encoding overproves under an added competitor;
  // the guarded encoding does not.
  {
    SimCheckConfig cfg{TransformKind::TeamForIndividualBase, Tag::BlockingInd,
                       Tag::Blocking, AdditionKind::Rules, 1, 0};
    SimReport bad = check_simulation(fixtures::competition(), cfg,
                                     fixtures::competition_addition());
    cfg.transform = TransformKind::TeamForIndividual;
    SimReport good = check_simulation(fixtures::competition(), cfg,
                                      fixtures::competition_addition());
    rows.push_back({"competition + (=> p): pairwise encoding mismatches at pd",
                    bad.verdict == SimReport::Verdict::Mismatch});
    rows.push_back({"competition + (=> p): guarded encoding agrees at pd",
                    good.verdict == SimReport::Verdict::AllPass});
  }
  {
    SimCheckConfig cfg{TransformKind::TeamForIndividualBase,
                       Tag::PropagatingInd, Tag::Propagating,
                       AdditionKind::Rules, 1, 0};
    SimReport bad = check_simulation(fixtures::teams(), cfg,
                                     fixtures::competition_addition());
    rows.push_back({"teams + (=> p): pairwise encoding mismatches at d",
                    bad.verdict == SimReport::Verdict::Mismatch});
  }
  // Hand-built pairwise encoding without the strict-truth guards: proves
  // +pd* p where the original refutes p at pd.
  {
    Theory da =
        add_theories(fixtures::competition(), fixtures::competition_addition());
    Theory ta = add_theories(fixtures::pairwise_encoding(),
                             fixtures::competition_addition());
    Literal p{"p", true};
    bool pass =
        least_fixpoint(da, {Tag::Blocking}).contains(Sign::Minus, Tag::Blocking, p) &&
        least_fixpoint(ta, {Tag::BlockingInd})
            .contains(Sign::Plus, Tag::BlockingInd, p);
    rows.push_back(
        {"competition + (=> p): unguarded hand encoding overproves at pd*",
         pass});
  }

  bool all = true;
  for (const Row& row : rows) {
    std::cout << (row.pass ? "PASS" : "FAIL") << "  " << row.name << "\n";
    all = all && row.pass;
  }
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for propositional defeasible logics"};
  app.require_subcommand(1);

  bool loose = false;
  app.add_flag("--loose", loose,
               "accept '$'-prefixed generated names when parsing");

  std::string file, tagsCsv, kind, transform, source, target, fixture;
  std::string additions = "rules";
  std::string addFileA;
  int trials = 100;
  uint64_t seed = 0;
  bool asJson = false;

  auto* parseCmd = app.add_subcommand("parse", "echo the canonical form");
  parseCmd->add_option("file", file)->required();

  auto* inferCmd = app.add_subcommand("infer", "print tagged conclusions");
  inferCmd->add_option("--tags", tagsCsv, "comma-separated tags")->required();
  inferCmd->add_flag("--json", asJson);
  inferCmd->add_option("file", file)->required();

  auto* transformCmd = app.add_subcommand("transform", "apply a transformation");
  transformCmd->add_option("--kind", kind)->required();
  transformCmd->add_option("file", file)->required();

  auto* addCmd = app.add_subcommand("add", "print the union theory D + A");
  addCmd->add_option("d_file", file)->required();
  addCmd->add_option("a_file", addFileA)->required();

  auto* simCmd =
      app.add_subcommand("check-sim", "differentially check a simulation claim");
  simCmd->add_option("--transform", transform)->required();
  simCmd->add_option("--source", source, "tag evaluated on D+A")->required();
  simCmd->add_option("--target", target, "tag evaluated on T(D)+A")->required();
  simCmd->add_option("--additions", additions, "facts|rules");
  simCmd->add_option("--trials", trials);
  auto* seedOpt = simCmd->add_option("--seed", seed);
  simCmd->add_option("--fixture", fixture, "use this addition file instead");
  simCmd->add_option("file", file)->required();

  auto* propsCmd = app.add_subcommand(
      "check-props", "check tag containment and coherence properties");
  propsCmd->add_option("file", file);
  int propTrials = 0;
  propsCmd->add_option("--trials", propTrials);
  auto* propsSeedOpt = propsCmd->add_option("--seed", seed);

  auto* examplesCmd =
      app.add_subcommand("examples", "run the built-in benchmark table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (parseCmd->parsed()) return cmd_parse(file, loose);
    if (inferCmd->parsed()) return cmd_infer(file, tagsCsv, loose, asJson);
    if (transformCmd->parsed()) return cmd_transform(file, kind, loose);
    if (addCmd->parsed()) return cmd_add(file, addFileA, loose);
    if (simCmd->parsed()) {
      return cmd_check_sim(file, transform, source, target, additions, trials,
                           seed, seedOpt->count() > 0, fixture, loose);
    }
    if (propsCmd->parsed()) {
      return cmd_check_props(file, propTrials, seed, propsSeedOpt->count() > 0,
                             loose);
    }
    if (examplesCmd->parsed()) return cmd_examples();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
