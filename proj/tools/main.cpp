// Copyright 2026 The entangle Authors
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

#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "entangle/cli/commands.hpp"

namespace {

std::set<std::string> split_what(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && item != "all") out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace entangle::cli;

  CLI::App app{"Local-unitary invariants, concurrence and separability of pure and rank-2 states"};
  app.require_subcommand(1);

  GenOptions gen;
  int n = 0, m = 0;
  std::uint64_t seed = 0;
  std::string in_path, what = "all", format_name = "json";
  int trials = 1000;
  bool with_ppt = false;

  auto* g = app.add_subcommand("gen", "write a named or random state file");
  g->add_option("--kind", gen.kind, "product|max_entangled|bell|ghz|paper_5_6_example|random|random_product")->required();
  auto* n_opt = g->add_option("--n", n, "local dimension N");
  auto* m_opt = g->add_option("--m", m, "number of parties M");
  g->add_option("--seed", gen.seed, "seed for random kinds");
  g->add_option("--out", gen.out_path, "output file (stdout when omitted)");

  auto* a = app.add_subcommand("analyze", "report invariants, concurrence, spectrum, EoF, char-poly coefficients");
  a->add_option("input", in_path, "state file")->required();
  a->add_option("--what", what, "comma-separated subset of invariants,concurrence,schmidt,eof,charpoly");
  a->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));

  auto* s = app.add_subcommand("sepcheck", "rank-2 separability verdict (exit 0 separable, 3 entangled, 4 indeterminate)");
  s->add_option("input", in_path, "rank-2 state file")->required();
  s->add_flag("--with-ppt", with_ppt, "also run the partial-transpose oracle");
  s->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));

  auto* l = app.add_subcommand("lutest", "random local-unitary invariance check (exit 5 on drift)");
  l->add_option("input", in_path, "state file")->required();
  l->add_option("--trials", trials, "number of random local-unitary tuples");
  l->add_option("--seed", seed, "base seed");
  l->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::input_error;
  }

  const Format format = format_name == "text" ? Format::text : Format::json;
  CommandResult result;
  if (g->parsed()) {
    if (*n_opt) gen.n = n;
    if (*m_opt) gen.m = m;
    result = cmd_gen(gen);
    // With --out the file is the product; stdout only gets errors.
    if (!gen.out_path.empty() && result.exit_code == exit_code::ok) result.output.clear();
  } else if (a->parsed()) {
    result = cmd_analyze(in_path, split_what(what), format);
  } else if (s->parsed()) {
    result = cmd_sepcheck(in_path, with_ppt, format);
  } else {
    result = cmd_lutest(in_path, trials, seed, format);
  }
  std::cout << result.output;
  return result.exit_code;
}
