#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "growlang/check.hpp"
#include "growlang/infer.hpp"
#include "growlang/syntax.hpp"
#include "xdt/emitter.hpp"
#include "xdt/parser.hpp"
#include "xdt/validator.hpp"

namespace xdt::cli {
namespace {

struct UsageError {
  std::string message;
};

class Reporter {
 public:
  Reporter(std::ostream& err, bool color) : err_(err), color_(color) {}

  void diagnostic(const Diagnostic& d, const std::string& file) {
    std::string line = format_diagnostic(d, file);
    if (color_) {
      const bool error = d.severity == Severity::Error;
      const std::string word = error ? "error" : "warning";
      if (auto at = line.find(": " + word); at != std::string::npos)
        line.replace(at + 2, word.size(), (error ? "\x1b[31m" : "\x1b[33m") + word + "\x1b[0m");
    }
    err_ << line << '\n';
  }

  void message(const std::string& file, const std::string& where, bool error, const std::string& text) {
    const std::string word = error ? "error" : "warning";
    err_ << file << ':' << where << ": " << (color_ ? (error ? "\x1b[31m" : "\x1b[33m") + word + "\x1b[0m" : word)
         << ": " << text << '\n';
  }

 private:
  std::ostream& err_;
  bool color_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses and validates; reports everything; empty on any error.
std::optional<Program> load_program(const std::string& path, bool partial, Reporter& rep) {
  const auto parsed = parse_program(read_file(path));
  for (const auto& d : parsed.diagnostics) rep.diagnostic(d, path);
  if (!parsed.ok()) return std::nullopt;
  const auto findings = validate_program(*parsed, ValidateOptions{partial});
  for (const auto& d : findings) rep.diagnostic(d, path);
  if (has_errors(findings)) return std::nullopt;
  return *parsed.value;
}

int cmd_check(const std::string& file, bool partial, Reporter& rep) {
  return load_program(file, partial, rep) ? Ok : Diagnostics;
}

int cmd_encode(const std::string& file, const std::string& mode, const std::string& backend, bool partial,
               const std::string& output, std::ostream& out, Reporter& rep) {
  auto program = load_program(file, partial, rep);
  if (!program) return Diagnostics;
  if (partial) {
    std::vector<ExtensionDecl> exts = program->extensions();
    for (auto& e : exts) e.partial = true;
    program = Program(program->extensibles(), std::move(exts));
  }
  RenderConfig cfg;
  cfg.backend = backend == "dsl-echo" ? Backend::DslEcho : Backend::Haskell;
  const std::string text =
      emit_module(*program, mode == "naive" ? EncodingMode::Naive : EncodingMode::Compact, cfg);
  if (output.empty() || output == "-") {
    out << text;
    return Ok;
  }
  std::ofstream f(output, std::ios::binary);
  if (!(f << text)) throw UsageError{"cannot write " + output};
  return Ok;
}

std::optional<growlang::NodePtr> load_exp(const std::string& file, const std::string& source, Reporter& rep) {
  auto parsed = growlang::parse_exp(source);
  for (const auto& e : parsed.errors)
    rep.message(file, std::to_string(e.line) + ":" + std::to_string(e.column), true, e.message);
  if (!parsed.ok()) return std::nullopt;
  return *parsed.value;
}

void report_type_error(const std::string& file, const growlang::TypeError& e, Reporter& rep) {
  rep.message(file, std::to_string(e.line) + ":" + std::to_string(e.column), true, e.message);
}

void report_warnings(const std::string& file, const std::vector<std::string>& ws, Reporter& rep) {
  for (const auto& w : ws) {
    // Warnings arrive as "line:col: text".
    const auto cut = w.find(": ");
    rep.message(file, w.substr(0, cut), false, w.substr(cut + 2));
  }
}

int cmd_demo(const std::string& action, const std::string& file, std::ostream& out, Reporter& rep) {
  const std::string source = read_file(file);
  const auto tree = load_exp(file, source, rep);
  if (!tree) return Diagnostics;
  if (action == "print") {
    out << growlang::print_exp(**tree) << '\n';
    return Ok;
  }

  std::optional<growlang::Ty> goal;
  if (action == "check") {
    bool found = false;
    const std::string header = expected_type_header(source, found);
    if (!found) {
      rep.message(file, "1:1", true, "missing '-- expect: TYPE' header");
      return Diagnostics;
    }
    auto ty = growlang::parse_ty(header);
    if (!ty.ok()) {
      rep.message(file, "1:1", true, "bad expected type: " + ty.errors.front().message);
      return Diagnostics;
    }
    goal = *ty;
  }

  const auto result = growlang::infer_exp(**tree, goal);
  if (const auto* e = std::get_if<growlang::TypeError>(&result)) {
    report_type_error(file, *e, rep);
    return Diagnostics;
  }
  const auto& inferred = std::get<growlang::InferredExp>(result);
  report_warnings(file, inferred.warnings, rep);
  if (action == "infer") {
    out << growlang::dump_tree(*inferred.tree) << "type: " << growlang::print_ty(inferred.type) << '\n';
    return Ok;
  }
  if (!growlang::chk_exp(*inferred.tree, {}, *goal)) {
    rep.message(file, "1:1", true, "checker rejects the program at " + growlang::print_ty(*goal));
    return Diagnostics;
  }
  out << "ok: " << growlang::print_ty(*goal) << '\n';
  return Ok;
}

std::optional<bool> color_choice(bool errIsTerminal) {
  const char* v = std::getenv("XDT_COLOR");
  const std::string mode = v ? v : "auto";
  if (mode == "never") return false;
  if (mode == "auto") return errIsTerminal;
  return std::nullopt;
}

}  // namespace

std::string expected_type_header(const std::string& source, bool& found) {
  found = false;
  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line.compare(start, 2, "--") != 0) break;
    std::string body = line.substr(start + 2);
    const auto b = body.find_first_not_of(" \t");
    if (b == std::string::npos || body.compare(b, 7, "expect:") != 0) continue;
    body = body.substr(b + 7);
    const auto first = body.find_first_not_of(" \t");
    const auto last = body.find_last_not_of(" \t\r");
    found = true;
    return first == std::string::npos ? std::string() : body.substr(first, last - first + 1);
  }
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool errIsTerminal) {
  const auto color = color_choice(errIsTerminal);
  if (!color) {
    err << "xdt: XDT_COLOR must be 'never' or 'auto'\n";
    return Usage;
  }
  Reporter rep(err, *color);

  CLI::App app{"Extensible data type transpiler and lambda-language demo", "xdt"};
  app.set_version_flag("--version", std::string("xdt ") + kVersion);
  app.require_subcommand(1);

  std::string file, mode = "compact", backend = "haskell", output, action;
  bool partial = false;

  auto* check = app.add_subcommand("check", "Validate a .xdt file");
  check->add_option("FILE", file, "Input .xdt file")->required()->check(CLI::ExistingFile);
  check->add_flag("--partial", partial, "Treat every extension as partial");

  auto* encode = app.add_subcommand("encode", "Encode a .xdt file");
  encode->add_option("--mode", mode, "Encoding")->check(CLI::IsMember({"compact", "naive"}));
  encode->add_option("--backend", backend, "Output syntax")->check(CLI::IsMember({"haskell", "dsl-echo"}));
  encode->add_flag("--partial", partial, "Treat every extension as partial");
  encode->add_option("FILE", file, "Input .xdt file")->required()->check(CLI::ExistingFile);
  encode->add_option("-o,--output", output, "Output file (default stdout)");

  auto* demo = app.add_subcommand("demo", "Run the lambda-language pipeline on a .gl file");
  demo->require_subcommand(1);
  for (const char* name : {"print", "infer", "check"}) {
    auto* sub = demo->add_subcommand(name, std::string(name) + " a .gl program");
    sub->add_option("FILE", file, "Input .gl file")->required()->check(CLI::ExistingFile);
    sub->callback([&action, name] { action = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (check->parsed()) return cmd_check(file, partial, rep);
    if (encode->parsed()) return cmd_encode(file, mode, backend, partial, output, out, rep);
    return cmd_demo(action, file, out, rep);
  } catch (const UsageError& e) {
    err << "xdt: " << e.message << '\n';
    return Usage;
  } catch (const InvalidInput& e) {
    err << "xdt: " << e.what() << '\n';
    return Diagnostics;
  }
}

}  // namespace xdt::cli
