#include <fstream>
#include <iostream>
#include <sstream>

#include "hlts/run.hpp"

namespace {

const char* kUsage = R"(usage: hlts [-i FILE] [--format text|json] <command> [args]

  -i, --input FILE   workspace JSON document ("-" for stdin; default: empty)
      --format FMT   report format: text (default) or json

commands:
  check {lts|lie|rep|action|o-op|post-lts|post-lie|morphism} <name> [--kappa p/q]
  build {semidirect|descent|adjacent|post-from-o|lts-from-lie|post-lts-from-post-lie}
        <name> [--kappa p/q] [--name <output-name>]
  cohomology <map> --degree n [--max-degree m]
  deform {check|obstruct|extend} <deformation>
  bridge diagram <post-lie>
  lint complete-skew

exit codes: 0 checks passed / computation done, 1 violations found, 2 input error.
)";

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw hlts::error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string input_path;
  std::string format = "text";
  std::vector<std::string> cmd;

  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-h" || a == "--help") {
      std::cout << kUsage;
      return 0;
    }
    if (a == "-i" || a == "--input") {
      if (i + 1 >= argc) {
        std::cerr << "error: " << a << " needs a value\n";
        return 2;
      }
      input_path = argv[++i];
    } else if (a == "--format") {
      if (i + 1 >= argc) {
        std::cerr << "error: --format needs a value\n";
        return 2;
      }
      format = argv[++i];
    } else {
      cmd.push_back(std::move(a));
    }
  }
  if (format != "text" && format != "json") {
    std::cerr << "error: unknown format '" << format << "'\n";
    return 2;
  }
  if (cmd.empty()) {
    std::cerr << kUsage;
    return 2;
  }

  try {
    hlts::Workspace ws;
    if (!input_path.empty()) ws = hlts::parse_workspace(read_input(input_path));
    hlts::Report report = hlts::run_command(cmd, ws);
    std::cout << (format == "json" ? report.machine : report.text);
    return report.exit_code;
  } catch (const hlts::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
