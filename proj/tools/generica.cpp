/*
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <generica/generica.hpp>

namespace {

using namespace generica;

ReportFormat pick_format(bool json, bool csv) {
  if (csv) return ReportFormat::Csv;
  if (json) return ReportFormat::Json;
  return ReportFormat::Text;
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw engine_error("cannot open output file: " + out_path);
  os << text;
}

int exit_code_for(const Report& r) {
  if (r.payload.contains("found") && r.payload["found"].is_boolean() &&
      !r.payload["found"].get<bool>())
    return kExitBudgetExhausted;
  return kExitOk;
}

int cmd_run(const std::string& path, bool json, bool csv, std::uint64_t seed, int budget,
            const std::string& out_path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitEngineError;
  }
  std::stringstream buf;
  buf << is.rdbuf();
  const std::string text = buf.str();
  const std::string hash = sha256_hex(text);

  Session session;
  try {
    session = parse_session(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  RunOptions opt;
  opt.seed = seed;
  opt.budget = budget;
  ReportFormat fmt = pick_format(json, csv);
  std::string out;
  int code = kExitOk;
  for (const auto& c : session.commands) {
    Report r;
    try {
      r = run_command(session, c, hash, opt);
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitParseError;
    } catch (const engine_error& e) {
      std::cerr << "engine error: " << e.what() << "\n";
      return kExitEngineError;
    }
    out += emit_report(r, fmt);
    if (fmt == ReportFormat::Json) out += "\n";
    code = std::max(code, exit_code_for(r));
  }
  write_out(out, out_path);
  return code;
}

int cmd_experiment(const std::string& name, int trials, std::uint64_t seed, int m, int n,
                   std::uint64_t p, bool json, bool csv, const std::string& out_path) {
  ExperimentConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.m = m;
  cfg.n = n;
  cfg.field = p == 0 ? rationals() : gf(p);
  Report r;
  try {
    r = run_experiment(name, cfg);
  } catch (const engine_error& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kExitEngineError;
  }
  std::string out = emit_report(r, pick_format(json, csv));
  if (pick_format(json, csv) == ReportFormat::Json) out += "\n";
  write_out(out, out_path);
  return kExitOk;
}

int cmd_repl(std::uint64_t seed, int budget) {
  Session session;
  RunOptions opt;
  opt.seed = seed;
  opt.budget = budget;
  std::string line;
  std::cout << "generica " << kEngineVersion << " repl; one statement per line, 'quit' to exit\n";
  while (true) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == "quit" || line == "exit") break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.back() != ';') line += ';';
    try {
      // execute by concatenation: state is carried by reprinting the session
      std::size_t before = session.commands.size();
      std::string printed = print_session(session) + line + "\n";
      Session next = parse_session(printed);
      for (std::size_t i = before; i < next.commands.size(); ++i) {
        Report r = run_command(next, next.commands[i], sha256_hex(line), opt);
        std::cout << emit_report(r, ReportFormat::Text);
      }
      next.commands.resize(before);
      session = std::move(next);
    } catch (const ParseError& e) {
      std::cout << "parse error: " << e.what() << "\n";
    } catch (const engine_error& e) {
      std::cout << "engine error: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generica: grade/height/determinantal genericity engine"};
  app.require_subcommand(1);

  std::string file, out_path, ename;
  bool json = false, csv = false;
  std::uint64_t seed = 1, prime = 32003;
  int budget = 200, trials = -1;
  std::vector<int> size = {2, 2};

  auto* run = app.add_subcommand("run", "execute a .gca session file");
  run->add_option("file", file)->required();
  run->add_flag("--json", json);
  run->add_flag("--csv", csv);
  run->add_option("--seed", seed);
  run->add_option("--budget", budget);
  run->add_option("--out", out_path);

  auto* exp = app.add_subcommand("experiment", "run a seeded experiment suite (E1..E6)");
  exp->add_option("name", ename)->required();
  exp->add_option("--trials", trials);
  exp->add_option("--seed", seed);
  exp->add_option("--size", size)->expected(2);
  exp->add_option("--p", prime, "coefficient prime, 0 for QQ");
  exp->add_flag("--json", json);
  exp->add_flag("--csv", csv);
  exp->add_option("--out", out_path);

  auto* repl = app.add_subcommand("repl", "line-at-a-time session");
  repl->add_option("--seed", seed);
  repl->add_option("--budget", budget);

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(file, json, csv, seed, budget, out_path);
  if (exp->parsed())
    return cmd_experiment(ename, trials, seed, size[0], size[1], prime, json, csv, out_path);
  return cmd_repl(seed, budget);
}
