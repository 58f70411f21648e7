#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cofull/ideal.hpp"

namespace cofull {

// Parsed input file. Statements are kept in source order together with
// their raw text so commands can be echoed verbatim and declarations can
// be re-evaluated under a different characteristic by the sweep runner.

struct RingDecl {
  std::string name;
  std::uint64_t characteristic = 0;  // 0 encodes the rationals
  std::vector<std::string> vars;
  OrderKind order = OrderKind::Grevlex;
};

struct IdealExpr;
using IdealExprPtr = std::shared_ptr<const IdealExpr>;

struct IdealExpr {
  enum class Kind {
    Generators,
    Name,
    Sum,
    Product,
    Intersect,
    Colon,
    Power,
    BracketPower,
    StanleyReisner
  };
  Kind kind = Kind::Generators;
  std::vector<std::string> polys;                 // Generators
  std::string name;                               // Name
  IdealExprPtr lhs, rhs;                          // binary nodes, Power uses lhs
  std::int64_t exponent = 0;                      // Power / BracketPower
  std::vector<std::vector<std::string>> facets;   // StanleyReisner, variable names
};

struct IdealDecl {
  std::string name;
  std::string ring_name;
  IdealExprPtr expr;
};

struct Command {
  std::string verb;
  std::vector<std::string> ideal_args;
  std::string poly_arg;                 // surjel element text
  std::vector<std::int64_t> int_args;   // command specific integers
  std::vector<std::int64_t> primes;     // sweep prime list
  std::shared_ptr<const Command> sub;   // sweep body
};

struct Statement {
  enum class Kind { Ring, Ideal, Cmd };
  Kind kind = Kind::Cmd;
  RingDecl ring;
  IdealDecl ideal;
  Command cmd;
  std::string echo;  // trimmed source slice
  int line = 0;
  int col = 0;
};

struct Session {
  std::vector<Statement> statements;
};

// Throws Error(Parse) with line/column and an expected-token hint.
// implicit_sweep relaxes per-command prime requirements for sessions that a
// caller will wrap in a prime sweep before running.
Session parse_session(const std::string& text, bool implicit_sweep = false);

// Prints a session back to DSL text; parse(print(parse(t))) is parse(t).
std::string print_session(const Session& s);
std::string print_command(const Command& c);

struct RunOptions {
  int e_max = 1;
  int threads = 0;                   // 0 keeps the hardware default
  std::uint64_t char_override = 0;   // sweep: replaces ring characteristics
};

// Name bindings produced by executing declarations in order.
struct EvalContext {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, IdealPtr> ideals;
  RingPtr active_ring;
};

// Evaluates one declaration statement into the context.
void eval_declaration(const Statement& st, EvalContext& ctx, const RunOptions& opt);

// Executes one command against the declarations preceding it in the
// session and returns the JSON report text.
std::string run_command(const Session& s, std::size_t stmt_index, const RunOptions& opt);

// Runs every command of the session in order; one JSON report per command.
std::vector<std::string> run_session(const Session& s, const RunOptions& opt = {});

}  // namespace cofull
