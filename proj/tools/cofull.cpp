#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cofull/cache.hpp"
#include "cofull/error.hpp"
#include "cofull/session.hpp"
#include "json.hpp"

namespace {

using cofull::Command;
using cofull::Error;
using cofull::RunOptions;
using cofull::Session;
using cofull::Statement;
using json = nlohmann::json;

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) cofull::fail_parse("E_IO", "cannot open input file " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

void configure_cache(const std::string& flag_dir) {
  std::string dir = flag_dir;
  if (dir.empty()) {
    const char* env = std::getenv("COFULL_CACHE_DIR");
    if (env) dir = env;
  }
  cofull::gb_cache().set_dir(dir);
}

void print_human(const std::string& report) {
  json j = json::parse(report);
  std::cout << "== " << j["input_echo"].get<std::string>() << "\n";
  std::cout << "   result: " << j["result"].dump() << "\n";
  for (const auto& w : j["witnesses"])
    std::cout << "   witness: " << w.get<std::string>() << "\n";
  for (const auto& c : j["certifications"])
    std::cout << "   [" << c["status"].get<std::string>() << "] "
              << c["claim"].get<std::string>() << "\n";
}

int emit(const std::vector<std::string>& reports, bool as_json) {
  for (const auto& r : reports) {
    if (as_json)
      std::cout << r << "\n";
    else
      print_human(r);
  }
  return 0;
}

// wraps every plain command of the session in a prime sweep
Session wrap_in_sweep(Session s, const std::vector<std::int64_t>& primes) {
  for (auto& st : s.statements) {
    if (st.kind != Statement::Kind::Cmd) continue;
    if (st.cmd.verb == "sweep")
      cofull::fail_parse("E_NESTED_SWEEP",
                         "input already sweeps; run it with the run subcommand");
    Command wrapped;
    wrapped.verb = "sweep";
    wrapped.primes = primes;
    wrapped.sub = std::make_shared<Command>(std::move(st.cmd));
    st.cmd = std::move(wrapped);
    st.echo = cofull::print_command(st.cmd);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fullness and local cohomology workbench"};
  app.require_subcommand(1);

  std::string file, cache_dir;
  bool as_json = false;
  int e_max = 1, threads = 0;
  std::vector<std::int64_t> primes;

  CLI::App* run = app.add_subcommand("run", "execute a session file");
  run->add_option("file", file, "session file")->required();
  run->add_flag("--json", as_json, "emit one JSON report per command");
  run->add_option("--e-max", e_max, "Frobenius cross-check depth")
      ->check(CLI::Range(1, 8));
  run->add_option("--cache-dir", cache_dir, "Groebner cache directory");
  run->add_option("--threads", threads, "worker thread limit");

  CLI::App* sweep = app.add_subcommand("sweep", "run a session across primes");
  sweep->add_option("file", file, "session file")->required();
  sweep->add_option("--primes", primes, "comma separated primes")
      ->required()
      ->delimiter(',');
  sweep->add_flag("--json", as_json, "emit one JSON report per command");
  sweep->add_option("--e-max", e_max, "Frobenius cross-check depth")
      ->check(CLI::Range(1, 8));
  sweep->add_option("--cache-dir", cache_dir, "Groebner cache directory");
  sweep->add_option("--threads", threads, "worker thread limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    configure_cache(cache_dir);
    RunOptions opt;
    opt.e_max = e_max;
    opt.threads = threads;
    Session s = cofull::parse_session(read_file(file), sweep->parsed());
    if (sweep->parsed()) {
      for (std::int64_t p : primes)
        if (!is_prime_i64(p))
          cofull::fail_parse("E_BAD_PRIME", std::to_string(p) + " is not prime");
      s = wrap_in_sweep(std::move(s), primes);
    }
    return emit(cofull::run_session(s, opt), as_json);
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error [E_UNEXPECTED]: " << e.what() << "\n";
    return 4;
  }
}
