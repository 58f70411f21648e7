#include <chrono>
#include <string>

#include "cofull/cache.hpp"
#include "cofull/cech.hpp"
#include "cofull/fullness.hpp"
#include "cofull/parallel.hpp"
#include "cofull/session.hpp"
#include "json.hpp"

namespace cofull {

namespace {

using json = nlohmann::json;

constexpr const char* kEngineVersion = "cofull 1.0.0";

json cert(const std::string& claim, const std::string& status) {
  return json{{"claim", claim}, {"status", status}};
}

json strings_of(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json betti_json(const std::map<int, std::map<std::int64_t, int>>& betti) {
  json out = json::object();
  for (const auto& [i, row] : betti) {
    json r = json::object();
    for (const auto& [deg, count] : row) r[std::to_string(deg)] = count;
    out[std::to_string(i)] = std::move(r);
  }
  return out;
}

json a_json(const AInvariants& a) {
  json out = json::object();
  for (const auto& [i, ai] : a.a) out[std::to_string(i)] = ai;
  return out;
}

json cd_json(bool exact, int height, int pd) {
  if (exact) return json{{"kind", "exact"}, {"value", pd}};
  return json{{"kind", "interval"}, {"low", height}, {"high", pd}};
}

json kernel_dims_json(const std::map<std::int64_t, std::int64_t>& dims) {
  json out = json::object();
  for (const auto& [deg, dim] : dims) out[std::to_string(deg)] = dim;
  return out;
}

struct CommandOutput {
  json result = json::object();
  json witnesses = json::array();
  json certifications = json::array();
};

CommandOutput exec_command(const Command& cmd, const EvalContext& ctx,
                           const RunOptions& opt, const Session& session,
                           std::size_t stmt_index);

CommandOutput exec_fullness(const IdealPtr& I, const RunOptions& opt) {
  CommandOutput out;
  FullnessReport rep = is_cohomologically_full(I, opt.e_max);
  out.result["aggregate"] = rep.full;
  out.result["e_max"] = rep.e_max;
  out.result["dim"] = rep.profile.dim;
  out.result["depth"] = rep.profile.depth;
  out.result["pd"] = rep.profile.pd;
  out.result["cd"] = cd_json(rep.full, rep.profile.cd_low, rep.profile.cd_high);
  json rows = json::array();
  for (const auto& v : rep.per_index) {
    json row{{"i", v.i}, {"full", v.full}};
    row["kernel_dims"] = kernel_dims_json(v.kernel_dims);
    rows.push_back(std::move(row));
    if (!v.witness.empty())
      out.witnesses.push_back("H^" + std::to_string(v.i) +
                              " kernel class: " + v.witness);
  }
  out.result["per_index"] = std::move(rows);
  out.certifications.push_back(
      cert("aggregate verdict from the Frobenius comparison", "certified"));
  out.certifications.push_back(cert("per-index kernel dimensions", "computed"));
  return out;
}

CommandOutput exec_invariants(const IdealPtr& I, const RunOptions& opt) {
  CommandOutput out;
  HomologicalProfile pr = homological_profile(I);
  out.result["n"] = pr.n;
  out.result["dim"] = pr.dim;
  out.result["depth"] = pr.depth;
  out.result["pd"] = pr.pd;
  out.result["reg"] = pr.ainv.reg;
  out.result["a_invariants"] = a_json(pr.ainv);
  out.result["betti"] = betti_json(pr.betti);
  out.result["mu"] = I->mu();
  out.result["height"] = I->is_zero_ideal() ? 0 : I->height();
  if (pr.f_m < 0)
    out.result["finiteness_dimension"] = nullptr;
  else
    out.result["finiteness_dimension"] = pr.f_m;
  bool exact = false;
  std::string cd_status = "computed";
  try {
    exact = is_cohomologically_full(I, opt.e_max).full;
    if (exact) cd_status = "certified";
  } catch (const Error& e) {
    if (e.code() != "E_CHAR_ZERO") throw;
  }
  out.result["cd"] = cd_json(exact, pr.cd_low, pr.cd_high);
  out.certifications.push_back(
      cert("depth plus projective dimension equals the variable count",
           "certified"));
  out.certifications.push_back(cert("cohomological dimension", cd_status));
  return out;
}

CommandOutput exec_segre(std::int64_t d, std::uint64_t p) {
  CommandOutput out;
  SegreFullness sf = segre_fullness(static_cast<int>(d), p);
  out.result["d"] = d;
  out.result["p"] = p;
  out.result["full"] = sf.full;
  out.result["frobenius_injective"] = sf.frobenius_injective;
  out.result["degree_one_covered"] = sf.degree_one_covered;
  out.result["matrix"] = sf.matrix;
  json b0 = json::array(), b1 = json::array();
  for (const auto& b : sf.basis0) b0.push_back(b.to_string());
  for (const auto& b : sf.basis1) b1.push_back(b.to_string());
  out.result["basis0"] = std::move(b0);
  out.result["basis1"] = std::move(b1);
  if (d == 3) {
    RingPtr R = make_ring(p, {"x", "y", "z"});
    bool pure = fedder_fpure(make_ideal(R, {parse_polynomial(R, "x^3+y^3+z^3")})).f_pure;
    if (pure != sf.full)
      fail_internal("E_SEGRE_DISAGREE",
                    "slice criterion disagrees with the splitting criterion");
    out.certifications.push_back(
        cert("verdict cross-checked against the splitting criterion", "certified"));
  } else {
    out.certifications.push_back(
        cert("verdict from the degree zero and one slices", "computed"));
  }
  return out;
}

CommandOutput exec_sweep(const Command& cmd, const RunOptions& opt,
                         const Session& session, std::size_t stmt_index) {
  CommandOutput out;
  const std::string main_dir = gb_cache().dir();
  std::vector<json> per(cmd.primes.size());
  parallel_for(cmd.primes.size(), [&](std::size_t k) {
    std::uint64_t p = static_cast<std::uint64_t>(cmd.primes[k]);
    struct TlsGuard {
      bool set = false;
      ~TlsGuard() {
        if (set) GbCache::clear_thread_dir();
      }
    } guard;
    if (!main_dir.empty()) {
      GbCache::set_thread_dir(main_dir + "/sweep-p" + std::to_string(p));
      guard.set = true;
    }
    RunOptions sub_opt = opt;
    sub_opt.char_override = p;
    EvalContext sub_ctx;
    for (std::size_t j = 0; j < stmt_index; ++j)
      if (session.statements[j].kind != Statement::Kind::Cmd)
        eval_declaration(session.statements[j], sub_ctx, sub_opt);
    CommandOutput sub = exec_command(*cmd.sub, sub_ctx, sub_opt, session, stmt_index);
    json r;
    r["command"] = cmd.sub->verb;
    r["input_echo"] = print_command(*cmd.sub);
    r["result"] = std::move(sub.result);
    r["witnesses"] = std::move(sub.witnesses);
    r["certifications"] = std::move(sub.certifications);
    per[k] = std::move(r);
  });
  if (!main_dir.empty())
    for (std::int64_t p : cmd.primes)
      merge_cache_dir(main_dir + "/sweep-p" + std::to_string(p), main_dir);
  json per_prime = json::object();
  for (std::size_t k = 0; k < cmd.primes.size(); ++k)
    per_prime[std::to_string(cmd.primes[k])] = std::move(per[k]);
  out.result["per_prime"] = std::move(per_prime);
  out.certifications.push_back(
      cert("per-prime runs on isolated caches", "computed"));
  return out;
}

CommandOutput exec_command(const Command& cmd, const EvalContext& ctx,
                           const RunOptions& opt, const Session& session,
                           std::size_t stmt_index) {
  CommandOutput out;
  if (cmd.verb == "sweep") return exec_sweep(cmd, opt, session, stmt_index);
  if (cmd.verb == "segre") {
    std::uint64_t p = cmd.int_args.size() > 1
                          ? static_cast<std::uint64_t>(cmd.int_args[1])
                          : opt.char_override;
    if (p == 0) fail_pre("E_NO_PRIME", "segre needs a prime, explicit or from sweep");
    return exec_segre(cmd.int_args[0], p);
  }

  const IdealPtr& I = ctx.ideals.at(cmd.ideal_args[0]);
  if (cmd.verb == "gb") {
    out.result["generators"] = strings_of(I->gens());
    out.result["groebner_basis"] = strings_of(I->gb());
    out.result["size"] = I->gb().size();
    out.certifications.push_back(
        cert("reduced basis is canonical for the declared order", "certified"));
  } else if (cmd.verb == "resolve") {
    FreeResolution F = free_resolution(I);
    out.result["pd"] = F.pd();
    out.result["twists"] = F.twists;
    out.result["minimal"] = F.minimal;
    out.certifications.push_back(cert("graded betti numbers", "computed"));
  } else if (cmd.verb == "invariants") {
    return exec_invariants(I, opt);
  } else if (cmd.verb == "fullness") {
    return exec_fullness(I, opt);
  } else if (cmd.verb == "fedder") {
    FedderResult fr = fedder_fpure(I);
    out.result["f_pure"] = fr.f_pure;
    if (!fr.witness.empty()) out.witnesses.push_back("splitting witness: " + fr.witness);
    out.certifications.push_back(
        cert("membership test on the bracket power colon", "certified"));
  } else if (cmd.verb == "fthreshold") {
    const IdealPtr& J = ctx.ideals.at(cmd.ideal_args[1]);
    FThresholdResult ft = f_threshold_nu(I, J, static_cast<int>(cmd.int_args[0]));
    json table = json::array();
    for (const auto& row : ft.table)
      table.push_back(json{{"e", row.e},
                           {"q", row.q},
                           {"nu", row.nu},
                           {"quotient", row.quotient}});
    out.result["table"] = std::move(table);
    out.result["mu"] = ft.mu_a;
    out.result["same_ideal"] = ft.same_ideal;
    out.certifications.push_back(cert("scaling monotonicity across levels", "certified"));
    if (ft.same_ideal)
      out.certifications.push_back(cert("pigeonhole upper bound", "certified"));
  } else if (cmd.verb == "lyubeznik") {
    std::map<int, std::int64_t> lam = lyubeznik_lambda0(I);
    json l0 = json::object();
    for (const auto& [j, v] : lam) l0[std::to_string(j)] = v;
    out.result["lambda0"] = std::move(l0);
    out.certifications.push_back(
        cert("degree zero pieces of the dual modules", "computed"));
  } else if (cmd.verb == "kodaira") {
    KodairaReport kr = kodaira_check(I);
    out.result["all_pass"] = kr.all_pass;
    json rows = json::array();
    for (const auto& row : kr.per_index) {
      json r{{"i", row.i},
             {"finite_length", row.finite_length},
             {"torsion_positive_vanishes", row.torsion_positive_vanishes},
             {"h_negative_vanishes", row.h_negative_vanishes}};
      r["positive_degrees"] = row.positive_degrees;
      rows.push_back(std::move(r));
    }
    out.result["per_index"] = std::move(rows);
    out.certifications.push_back(cert("positive degree torsion scan", "computed"));
  } else if (cmd.verb == "qbuchsbaum") {
    out.result["quasi_buchsbaum"] = quasi_buchsbaum(I);
    out.certifications.push_back(
        cert("irrelevant ideal annihilates below-top cohomology", "computed"));
  } else if (cmd.verb == "degzero") {
    out.result["index"] = cmd.int_args[0];
    out.result["generated_in_degree_zero"] =
        degree_zero_generates(I, static_cast<int>(cmd.int_args[0]));
    out.certifications.push_back(cert("socle degree support", "computed"));
  } else if (cmd.verb == "surjel") {
    Polynomial x = parse_polynomial(I->ring(), cmd.poly_arg);
    SurjectiveElementReport sr =
        is_surjective_element(I, x, static_cast<int>(cmd.int_args[0]));
    out.result["surjective"] = sr.surjective;
    out.result["n_max"] = sr.n_max;
    out.result["failing_n"] = sr.failing_n;
    out.result["failing_i"] = sr.failing_i;
    if (!sr.witness.empty())
      out.witnesses.push_back("obstructing kernel class: " + sr.witness);
    out.certifications.push_back(
        cert("comparison maps checked for every power and index", "certified"));
  } else if (cmd.verb == "gluing") {
    const IdealPtr& K = ctx.ideals.at(cmd.ideal_args[1]);
    GluingReport gr = gluing_report(I, K);
    out.result["l"] = gr.l;
    out.result["l_prime"] = gr.l_prime;
    out.result["h"] = gr.h;
    out.result["clause1"] = gr.clause1;
    out.result["clause2"] = gr.clause2;
    out.result["clause3"] = gr.clause3;
    out.result["full_J"] = gr.full_J;
    out.result["full_K"] = gr.full_K;
    out.result["full_sum"] = gr.full_sum;
    out.result["full_intersection"] = gr.full_intersection;
    out.result["degenerate"] = gr.degenerate;
    bool any_clause = gr.clause1 || gr.clause2 || gr.clause3;
    out.certifications.push_back(
        any_clause ? cert("clause biconditional validated on the verdicts", "certified")
                   : cert("no clause applies; verdicts reported side by side",
                          "computed"));
  } else {
    fail_internal("E_UNKNOWN_COMMAND", "unhandled verb " + cmd.verb);
  }
  return out;
}

std::string wrap_report(const Command& cmd, const std::string& echo,
                        CommandOutput&& out, double ms) {
  json rep;
  rep["command"] = cmd.verb;
  rep["input_echo"] = echo;
  rep["result"] = std::move(out.result);
  rep["witnesses"] = std::move(out.witnesses);
  rep["certifications"] = std::move(out.certifications);
  rep["timing_ms"] = ms;
  rep["engine_version"] = kEngineVersion;
  return rep.dump();
}

std::string run_at(const Session& s, std::size_t idx, const EvalContext& ctx,
                   const RunOptions& opt) {
  const Statement& st = s.statements[idx];
  auto t0 = std::chrono::steady_clock::now();
  CommandOutput out = exec_command(st.cmd, ctx, opt, s, idx);
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return wrap_report(st.cmd, st.echo, std::move(out), ms);
}

}  // namespace

std::string run_command(const Session& s, std::size_t stmt_index,
                        const RunOptions& opt) {
  if (stmt_index >= s.statements.size() ||
      s.statements[stmt_index].kind != Statement::Kind::Cmd)
    fail_pre("E_NOT_A_COMMAND", "statement index does not name a command");
  if (opt.threads) set_worker_threads(opt.threads);
  EvalContext ctx;
  for (std::size_t j = 0; j < stmt_index; ++j)
    if (s.statements[j].kind != Statement::Kind::Cmd)
      eval_declaration(s.statements[j], ctx, opt);
  return run_at(s, stmt_index, ctx, opt);
}

std::vector<std::string> run_session(const Session& s, const RunOptions& opt) {
  if (opt.threads) set_worker_threads(opt.threads);
  std::vector<std::string> out;
  EvalContext ctx;
  for (std::size_t i = 0; i < s.statements.size(); ++i) {
    const Statement& st = s.statements[i];
    if (st.kind == Statement::Kind::Cmd)
      out.push_back(run_at(s, i, ctx, opt));
    else
      eval_declaration(st, ctx, opt);
  }
  return out;
}

}  // namespace cofull
