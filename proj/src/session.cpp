#include "cofull/session.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cofull/groebner.hpp"
#include "cofull/simplicial.hpp"

namespace cofull {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const char* kVerbs[] = {"gb",       "resolve",  "invariants", "fullness",
                        "fedder",   "fthreshold", "lyubeznik", "kodaira",
                        "qbuchsbaum", "degzero", "surjel",     "gluing",
                        "segre",    "sweep"};

std::string verb_list() {
  std::string out;
  for (const char* v : kVerbs) {
    if (!out.empty()) out += ", ";
    out += v;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text, bool implicit_sweep = false)
      : s_(text), implicit_sweep_(implicit_sweep) {}

  Session parse() {
    Session out;
    for (;;) {
      skip_space();
      if (pos_ >= s_.size()) break;
      Statement st = parse_statement();
      skip_space();
      if (!eat(';'))
        fail_here("E_EXPECTED_SEMICOLON", "expected ';' after statement");
      st.echo = trimmed(stmt_start_, semicolon_pos_);
      out.statements.push_back(std::move(st));
    }
    if (out.statements.empty())
      fail_here("E_EMPTY_SESSION", "input contains no statements");
    return out;
  }

 private:
  const std::string& s_;
  bool implicit_sweep_ = false;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::size_t stmt_start_ = 0, semicolon_pos_ = 0;

  // names declared so far, used for binding checks during the parse
  std::vector<std::string> ring_names_;
  std::vector<std::string> active_vars_;
  std::string active_ring_;
  std::map<std::string, std::string> ideal_ring_;

  [[noreturn]] void fail_here(const std::string& code, const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at line " << line_ << ", column " << col_;
    fail_parse(code, os.str());
  }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    if (c == ';') semicolon_pos_ = pos_;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail_here("E_EXPECTED_TOKEN", std::string("expected ") + what);
  }

  bool at_ident() {
    skip_space();
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_');
  }

  std::string lex_ident() {
    skip_space();
    if (!at_ident()) fail_here("E_EXPECTED_IDENT", "expected an identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      advance();
    return s_.substr(start, pos_ - start);
  }

  std::int64_t lex_int() {
    skip_space();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail_here("E_EXPECTED_INT", "expected an integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) fail_here("E_INT_RANGE", "integer out of range");
      advance();
    }
    return v;
  }

  std::string trimmed(std::size_t from, std::size_t to) const {
    while (from < to && std::isspace(static_cast<unsigned char>(s_[from]))) ++from;
    while (to > from && std::isspace(static_cast<unsigned char>(s_[to - 1]))) --to;
    return s_.substr(from, to - from);
  }

  Statement parse_statement() {
    skip_space();
    stmt_start_ = pos_;
    Statement st;
    st.line = line_;
    st.col = col_;
    std::string head = lex_ident();
    if (head == "ring") {
      st.kind = Statement::Kind::Ring;
      st.ring = parse_ring_decl();
    } else if (head == "ideal") {
      st.kind = Statement::Kind::Ideal;
      st.ideal = parse_ideal_decl();
    } else {
      st.kind = Statement::Kind::Cmd;
      st.cmd = parse_command(head, implicit_sweep_);
    }
    return st;
  }

  RingDecl parse_ring_decl() {
    RingDecl decl;
    decl.name = lex_ident();
    if (std::find(ring_names_.begin(), ring_names_.end(), decl.name) != ring_names_.end())
      fail_here("E_REDECLARED", "ring " + decl.name + " is already declared");
    expect('=', "'='");
    std::string field = lex_ident();
    if (field == "Q") {
      decl.characteristic = 0;
    } else if (field.size() > 1 && field[0] == 'F' &&
               std::all_of(field.begin() + 1, field.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
      decl.characteristic = std::stoull(field.substr(1));
      if (!is_prime_u64(decl.characteristic))
        fail_here("E_BAD_PRIME", "characteristic " + field.substr(1) + " is not prime");
    } else {
      fail_here("E_BAD_FIELD", "expected a field: Q or F<prime>");
    }
    expect('[', "'['");
    for (;;) {
      std::string v = lex_ident();
      if (std::find(decl.vars.begin(), decl.vars.end(), v) != decl.vars.end())
        fail_here("E_DUPLICATE_VARIABLE", "variable " + v + " repeats");
      decl.vars.push_back(std::move(v));
      if (!eat(',')) break;
    }
    expect(']', "']'");
    if (at_ident()) {
      std::string ord = lex_ident();
      if (ord == "grevlex")
        decl.order = OrderKind::Grevlex;
      else if (ord == "lex")
        decl.order = OrderKind::Lex;
      else if (ord == "grlex")
        decl.order = OrderKind::GrLex;
      else
        fail_here("E_BAD_ORDER", "unknown order " + ord +
                                         "; expected one of grevlex, lex, grlex");
    }
    ring_names_.push_back(decl.name);
    active_ring_ = decl.name;
    active_vars_ = decl.vars;
    return decl;
  }

  IdealDecl parse_ideal_decl() {
    IdealDecl decl;
    decl.name = lex_ident();
    if (ideal_ring_.count(decl.name))
      fail_here("E_REDECLARED", "ideal " + decl.name + " is already declared");
    decl.ring_name = active_ring_;
    expect('=', "'='");
    decl.expr = parse_expr();
    ideal_ring_[decl.name] = active_ring_;
    return decl;
  }

  IdealExprPtr parse_expr() {
    IdealExprPtr e = parse_term();
    while (eat('+')) {
      auto node = std::make_shared<IdealExpr>();
      node->kind = IdealExpr::Kind::Sum;
      node->lhs = e;
      node->rhs = parse_term();
      e = node;
    }
    return e;
  }

  IdealExprPtr parse_term() {
    IdealExprPtr e = parse_factor();
    while (eat('*')) {
      auto node = std::make_shared<IdealExpr>();
      node->kind = IdealExpr::Kind::Product;
      node->lhs = e;
      node->rhs = parse_factor();
      e = node;
    }
    return e;
  }

  IdealExprPtr parse_factor() {
    IdealExprPtr e = parse_atom();
    while (peek('^')) {
      advance();  // '^'
      auto node = std::make_shared<IdealExpr>();
      node->lhs = e;
      if (eat('[')) {
        node->kind = IdealExpr::Kind::BracketPower;
        node->exponent = lex_int();
        expect(']', "']'");
      } else {
        node->kind = IdealExpr::Kind::Power;
        node->exponent = lex_int();
      }
      if (node->exponent < 1) fail_here("E_BAD_EXPONENT", "exponent must be positive");
      e = node;
    }
    return e;
  }

  IdealExprPtr parse_atom() {
    skip_space();
    auto node = std::make_shared<IdealExpr>();
    if (eat('(')) {
      node->kind = IdealExpr::Kind::Generators;
      node->polys = parse_polylist();
      expect(')', "')'");
      return node;
    }
    std::string name = lex_ident();
    if (name == "intersect" || name == "colon") {
      node->kind = name == "intersect" ? IdealExpr::Kind::Intersect
                                       : IdealExpr::Kind::Colon;
      expect('(', "'('");
      node->lhs = parse_expr();
      expect(',', "','");
      node->rhs = parse_expr();
      expect(')', "')'");
      return node;
    }
    if (name == "sr") {
      node->kind = IdealExpr::Kind::StanleyReisner;
      expect('(', "'('");
      for (;;) {
        expect('{', "'{'");
        std::vector<std::string> facet;
        if (!peek('}')) {
          for (;;) {
            std::string v = lex_ident();
            var_index_checked(v);
            facet.push_back(std::move(v));
            if (!eat(',')) break;
          }
        }
        expect('}', "'}'");
        node->facets.push_back(std::move(facet));
        if (!eat(',')) break;
      }
      expect(')', "')'");
      return node;
    }
    node->kind = IdealExpr::Kind::Name;
    node->name = name;
    require_ideal_name(name);
    return node;
  }

  int var_index_checked(const std::string& v) {
    auto it = std::find(active_vars_.begin(), active_vars_.end(), v);
    if (it == active_vars_.end())
      fail_here("E_UNKNOWN_VARIABLE", "unknown variable " + v);
    return static_cast<int>(it - active_vars_.begin());
  }

  void require_ideal_name(const std::string& name) {
    auto it = ideal_ring_.find(name);
    if (it == ideal_ring_.end())
      fail_here("E_UNKNOWN_IDEAL", "unknown ideal " + name);
    if (it->second != active_ring_)
      fail_here("E_CHAR_MISMATCH", "ideal " + name + " was declared over ring " +
                                           it->second + ", not over " + active_ring_);
  }

  // raw polynomial text up to a top-level ',' or ')', identifiers checked
  std::string parse_poly_text() {
    skip_space();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      if (c == ';') fail_here("E_EXPECTED_TOKEN", "expected ')' before ';'");
      advance();
    }
    std::string text = trimmed(start, pos_);
    if (text.empty()) fail_here("E_EMPTY_POLY", "expected a polynomial");
    check_poly_vars(text);
    return text;
  }

  std::vector<std::string> parse_polylist() {
    std::vector<std::string> out;
    if (peek(')')) return out;  // empty generator list is the zero ideal
    for (;;) {
      out.push_back(parse_poly_text());
      if (!eat(',')) break;
    }
    return out;
  }

  void check_poly_vars(const std::string& poly) {
    std::size_t i = 0;
    while (i < poly.size()) {
      char c = poly[i];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t st = i;
        while (i < poly.size() && (std::isalnum(static_cast<unsigned char>(poly[i])) ||
                                   poly[i] == '_'))
          ++i;
        std::string name = poly.substr(st, i - st);
        if (std::find(active_vars_.begin(), active_vars_.end(), name) ==
            active_vars_.end())
          fail_here("E_UNKNOWN_VARIABLE", "unknown variable " + name);
      } else {
        ++i;
      }
    }
  }

  Command parse_command(const std::string& verb, bool inside_sweep) {
    Command cmd;
    cmd.verb = verb;
    bool known = false;
    for (const char* v : kVerbs) known = known || verb == v;
    if (!known)
      fail_here("E_UNKNOWN_COMMAND",
                "unknown command " + verb + "; expected one of " + verb_list());

    if (verb == "gb" || verb == "resolve" || verb == "invariants" ||
        verb == "fullness" || verb == "fedder" || verb == "lyubeznik" ||
        verb == "kodaira" || verb == "qbuchsbaum") {
      cmd.ideal_args.push_back(command_ideal());
    } else if (verb == "fthreshold") {
      cmd.ideal_args.push_back(command_ideal());
      cmd.ideal_args.push_back(command_ideal());
      cmd.int_args.push_back(lex_int());
      if (cmd.int_args[0] < 1) fail_here("E_BAD_EXPONENT", "e must be at least 1");
    } else if (verb == "degzero") {
      cmd.ideal_args.push_back(command_ideal());
      cmd.int_args.push_back(lex_int());
    } else if (verb == "surjel") {
      cmd.ideal_args.push_back(command_ideal());
      expect('(', "'('");
      cmd.poly_arg = parse_poly_text();
      expect(')', "')'");
      cmd.int_args.push_back(lex_int());
      if (cmd.int_args[0] < 1) fail_here("E_BAD_NMAX", "n_max must be at least 1");
    } else if (verb == "gluing") {
      cmd.ideal_args.push_back(command_ideal());
      cmd.ideal_args.push_back(command_ideal());
    } else if (verb == "segre") {
      cmd.int_args.push_back(lex_int());
      if (cmd.int_args[0] < 1) fail_here("E_BAD_DEGREE", "d must be at least 1");
      skip_space();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        cmd.int_args.push_back(lex_int());
        if (!is_prime_u64(static_cast<std::uint64_t>(cmd.int_args[1])))
          fail_here("E_BAD_PRIME", "p must be prime");
      } else if (!inside_sweep) {
        fail_here("E_EXPECTED_INT", "segre outside sweep needs an explicit prime");
      }
    } else if (verb == "sweep") {
      if (inside_sweep) fail_here("E_NESTED_SWEEP", "sweep cannot nest");
      std::string kw = lex_ident();
      if (kw != "primes") fail_here("E_EXPECTED_TOKEN", "expected keyword primes");
      expect('[', "'['");
      for (;;) {
        std::int64_t p = lex_int();
        if (!is_prime_u64(static_cast<std::uint64_t>(p)))
          fail_here("E_BAD_PRIME", std::to_string(p) + " is not prime");
        cmd.primes.push_back(p);
        if (!eat(',')) break;
      }
      expect(']', "']'");
      std::string sub_verb = lex_ident();
      cmd.sub = std::make_shared<Command>(parse_command(sub_verb, true));
    }
    return cmd;
  }

  std::string command_ideal() {
    std::string name = lex_ident();
    require_ideal_name(name);
    return name;
  }
};

std::string print_expr(const IdealExpr& e) {
  switch (e.kind) {
    case IdealExpr::Kind::Generators: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.polys.size(); ++i) {
        if (i) out += ", ";
        out += e.polys[i];
      }
      return out + ")";
    }
    case IdealExpr::Kind::Name:
      return e.name;
    case IdealExpr::Kind::Sum:
      return print_expr(*e.lhs) + " + " + print_expr(*e.rhs);
    case IdealExpr::Kind::Product:
      // the grammar has no expression grouping parens, so a product node
      // never holds a sum child and bare printing re-parses identically
      return print_expr(*e.lhs) + " * " + print_expr(*e.rhs);
    case IdealExpr::Kind::Intersect:
      return "intersect(" + print_expr(*e.lhs) + ", " + print_expr(*e.rhs) + ")";
    case IdealExpr::Kind::Colon:
      return "colon(" + print_expr(*e.lhs) + ", " + print_expr(*e.rhs) + ")";
    case IdealExpr::Kind::Power:
      return print_expr(*e.lhs) + "^" + std::to_string(e.exponent);
    case IdealExpr::Kind::BracketPower:
      return print_expr(*e.lhs) + "^[" + std::to_string(e.exponent) + "]";
    case IdealExpr::Kind::StanleyReisner: {
      std::string out = "sr(";
      for (std::size_t i = 0; i < e.facets.size(); ++i) {
        if (i) out += ", ";
        out += "{";
        for (std::size_t j = 0; j < e.facets[i].size(); ++j) {
          if (j) out += ",";
          out += e.facets[i][j];
        }
        out += "}";
      }
      return out + ")";
    }
  }
  return "";
}

}  // namespace

Session parse_session(const std::string& text, bool implicit_sweep) {
  return Parser(text, implicit_sweep).parse();
}

std::string print_command(const Command& c) {
  std::string out = c.verb;
  for (const auto& n : c.ideal_args) out += " " + n;
  if (!c.poly_arg.empty()) out += " (" + c.poly_arg + ")";
  for (std::int64_t v : c.int_args) out += " " + std::to_string(v);
  if (c.verb == "sweep") {
    out += " primes [";
    for (std::size_t i = 0; i < c.primes.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c.primes[i]);
    }
    out += "] " + print_command(*c.sub);
  }
  return out;
}

std::string print_session(const Session& s) {
  std::ostringstream os;
  for (const auto& st : s.statements) {
    switch (st.kind) {
      case Statement::Kind::Ring: {
        os << "ring " << st.ring.name << " = ";
        if (st.ring.characteristic == 0)
          os << "Q";
        else
          os << "F" << st.ring.characteristic;
        os << "[";
        for (std::size_t i = 0; i < st.ring.vars.size(); ++i) {
          if (i) os << ",";
          os << st.ring.vars[i];
        }
        os << "]";
        if (st.ring.order == OrderKind::Lex) os << " lex";
        if (st.ring.order == OrderKind::GrLex) os << " grlex";
        break;
      }
      case Statement::Kind::Ideal:
        os << "ideal " << st.ideal.name << " = " << print_expr(*st.ideal.expr);
        break;
      case Statement::Kind::Cmd:
        os << print_command(st.cmd);
        break;
    }
    os << ";\n";
  }
  return os.str();
}

namespace {

IdealPtr eval_expr(const IdealExpr& e, const RingPtr& ring, const EvalContext& ctx) {
  switch (e.kind) {
    case IdealExpr::Kind::Generators: {
      std::vector<Polynomial> gens;
      gens.reserve(e.polys.size());
      for (const auto& ptxt : e.polys) gens.push_back(parse_polynomial(ring, ptxt));
      return make_ideal(ring, std::move(gens));
    }
    case IdealExpr::Kind::Name:
      return ctx.ideals.at(e.name);
    case IdealExpr::Kind::Sum:
      return ideal_sum(eval_expr(*e.lhs, ring, ctx), eval_expr(*e.rhs, ring, ctx));
    case IdealExpr::Kind::Product:
      return ideal_product(eval_expr(*e.lhs, ring, ctx), eval_expr(*e.rhs, ring, ctx));
    case IdealExpr::Kind::Intersect:
      return make_ideal(ring, ideal_intersect(eval_expr(*e.lhs, ring, ctx)->gens(),
                                              eval_expr(*e.rhs, ring, ctx)->gens()));
    case IdealExpr::Kind::Colon:
      return make_ideal(ring, ideal_colon(eval_expr(*e.lhs, ring, ctx)->gens(),
                                          eval_expr(*e.rhs, ring, ctx)->gens()));
    case IdealExpr::Kind::Power:
      return ordinary_power(eval_expr(*e.lhs, ring, ctx),
                            static_cast<int>(e.exponent));
    case IdealExpr::Kind::BracketPower:
      return frobenius_power(eval_expr(*e.lhs, ring, ctx),
                             static_cast<int>(e.exponent));
    case IdealExpr::Kind::StanleyReisner: {
      std::vector<std::vector<int>> facets;
      facets.reserve(e.facets.size());
      for (const auto& f : e.facets) {
        std::vector<int> facet;
        for (const auto& v : f) facet.push_back(ring->var_index(v));
        std::sort(facet.begin(), facet.end());
        facets.push_back(std::move(facet));
      }
      SimplicialComplex K(static_cast<int>(ring->nvars()), std::move(facets));
      return stanley_reisner(K, ring);
    }
  }
  fail_internal("E_EXPR_KIND", "unhandled ideal expression node");
}

}  // namespace

void eval_declaration(const Statement& st, EvalContext& ctx, const RunOptions& opt) {
  if (st.kind == Statement::Kind::Ring) {
    std::uint64_t c = opt.char_override ? opt.char_override : st.ring.characteristic;
    RingPtr R = make_ring(c, st.ring.vars, st.ring.order);
    ctx.rings[st.ring.name] = R;
    ctx.active_ring = R;
    return;
  }
  if (st.kind == Statement::Kind::Ideal) {
    RingPtr R = ctx.rings.at(st.ideal.ring_name);
    ctx.ideals[st.ideal.name] = eval_expr(*st.ideal.expr, R, ctx);
    return;
  }
  fail_internal("E_NOT_A_DECL", "command statement passed to eval_declaration");
}

}  // namespace cofull
