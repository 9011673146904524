// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for latkit.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "latkit/cli.hpp"

namespace {

struct Target {
  CLI::App* app;
  std::string command;
};

}  // namespace

int main(int argc, char** argv) {
  using latkit::cli::Format;

  CLI::App app{"Finite poset and lattice toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  latkit::cli::RunConfig config;
  config.limits.subset_cap = latkit::cli::default_cap();
  std::string output;
  std::string subset;
  std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"text", Format::kText}, {"dot", Format::kDot}};

  app.add_option("--cap", config.limits.subset_cap,
                 "Largest poset for subset enumeration (env LATKIT_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--directed-cap", config.limits.directed_cap,
                 "Largest set for directed-subset enumeration")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", config.limits.force,
               "Ignore caps (may be very slow, never unsound)");
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("json|text|dot");
  app.add_option("--output", output, "Write the report to a file");

  const std::map<std::string, std::string> descriptions{
      {"validate", "Validate a poset and report its structure"},
      {"closure-systems", "List every closure system"},
      {"generate", "Closure operator generated by preclosure maps"},
      {"tarski", "Least fixed point of an increasing map"},
      {"nuclei", "List every nucleus"},
      {"heyting", "Heyting implication table of a frame"},
      {"nuclear-core", "Greatest nucleus below a closure operator"},
      {"least-nucleus", "Least nucleus above a closure operator"},
      {"hmj", "Scott-open filters and compact fitted nuclei"},
      {"rules", "Default or nuclear closure rules"},
      {"convexity", "Anti-exchange, CAS and funnel checks"},
      {"sccore", "Scott-continuous core of a closure operator"},
  };
  std::vector<Target> targets;
  for (const auto& name : latkit::cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    if (name == "rules") {
      sub->add_option("kind", config.mode, "default | nuclear")
          ->required()
          ->check(CLI::IsMember({"default", "nuclear"}));
    }
    sub->add_option("poset", config.poset_path, "Poset JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    if (name == "generate" || name == "tarski" || name == "nuclear-core" ||
        name == "least-nucleus" || name == "sccore") {
      sub->add_option("--map", config.map_paths, "Map JSON file (repeatable)")
          ->check(CLI::ExistingFile);
    }
    if (name == "tarski") {
      sub->add_option("--from", config.from, "Start element");
    }
    if (name == "validate") {
      sub->add_option("--subset", subset,
                      "Comma-separated labels to query");
    }
    if (name == "convexity") {
      sub->add_option("--strategy", config.mode, "clsys | dcclsys | rules")
          ->check(CLI::IsMember({"clsys", "dcclsys", "rules"}));
      sub->add_option("--rules", config.rules_path, "Rule JSON file")
          ->check(CLI::ExistingFile);
    }
    targets.push_back({sub, name});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return latkit::cli::kInputError;
  }
  for (const auto& t : targets) {
    if (t.app->parsed()) config.command = t.command;
  }
  if (!subset.empty()) {
    std::vector<std::string> labels;
    std::stringstream in(subset);
    for (std::string l; std::getline(in, l, ',');) labels.push_back(l);
    config.subset = labels;
  }

  const auto result = latkit::cli::run(config);
  if (result.exit_code != latkit::cli::kOk) {
    std::cerr << "latkit: " << result.error << '\n';
    return result.exit_code;
  }
  if (output.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "latkit: cannot write " << output << '\n';
      return latkit::cli::kInputError;
    }
    out << result.output;
  }
  return latkit::cli::kOk;
}
