#include "fte/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "json.hpp"

namespace fte {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> to_strings(std::span<const Polynomial> seq) {
  std::vector<std::string> out;
  for (const auto& f : seq) out.push_back(f.to_string());
  return out;
}

std::string encode(const Json& j) { return j.dump(); }

IdentityCheck make_check(std::string name, bool ok, const Json& lhs, const Json& rhs, std::string note = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, encode(lhs), encode(rhs), std::move(note)};
}

IdentityCheck skipped(std::string name, std::string note) {
  return {std::move(name), CheckStatus::skipped, "null", "null", std::move(note)};
}

Json optional_length(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json("infinite"); }

/// Runs fn(i) for i in [0, count) on up to jobs threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

int low_hsl_for_sequence(std::span<const Polynomial> seq, const QuotientRing& ring,
                         const CohomologyProfile& profile, int max_e) {
  const LowCohomologyData data{profile.fin_dim, profile.n0};
  if (in_maximal_power(seq, static_cast<std::uint32_t>(2 * profile.n0), ring)) {
    return frobenius_nilpotence(seq, ring, data, max_e).hsl_low;
  }
  const auto e0 = frobenius_exponent_bound(ring.characteristic(), profile.n0);
  std::vector<Polynomial> powered;
  for (const auto& x : seq) powered.push_back(x.frobenius(static_cast<unsigned>(e0)));
  return frobenius_nilpotence(powered, ring, data, max_e).hsl_low;
}

BoundCertificate verify_bound(const QuotientRing& ring, std::span<const Polynomial> seq,
                              const CohomologyProfile& profile, std::optional<int> hsl_top,
                              const BoundOptions& options) {
  const auto start = Clock::now();
  if (static_cast<int>(seq.size()) != profile.fin_dim) {
    throw PreconditionError("verify_bound: sequence length " + std::to_string(seq.size()) +
                            " differs from the finiteness dimension " + std::to_string(profile.fin_dim));
  }
  auto fr = is_filter_regular(seq, ring);
  if (!fr.is_filter_regular) {
    throw PreconditionError("verify_bound: sequence is not filter regular (element " +
                            std::to_string(*fr.first_failure) + ")");
  }
  const bool f_pure = options.f_pure.value_or(fedder_is_f_pure(ring));
  if (!f_pure && !hsl_top) {
    throw MissingHslTop("verify_bound: ring is not F-pure and no hsl_top was declared");
  }
  if (hsl_top && *hsl_top < 0) throw PreconditionError("verify_bound: hsl_top must be non-negative");

  BoundCertificate cert;
  cert.ring_id = options.ring_id;
  cert.sequence = to_strings(seq);
  cert.n0 = profile.n0;
  cert.e0 = frobenius_exponent_bound(ring.characteristic(), profile.n0);
  cert.hsl_low = low_hsl_for_sequence(seq, ring, profile, options.max_e);
  cert.hsl_top = f_pure ? 0 : *hsl_top;
  cert.hsl_used = std::max(cert.hsl_low, cert.hsl_top);
  cert.bound = cert.e0 + cert.hsl_used;

  FrobeniusChain chain(Ideal(ring.ambient(), std::vector<Polynomial>(seq.begin(), seq.end())), ring);
  auto certified = frobenius_closure(chain, cert.bound, std::max(options.max_e, cert.bound));
  cert.certified_stops = certified.certified;
  cert.closure = Ideal(ring.ambient(), certified.closure.basis()).to_string();
  try {
    auto heuristic = frobenius_closure(chain, std::nullopt, options.max_e);
    cert.heuristic_e = heuristic.reached_e;
    cert.heuristic_agrees = equal(heuristic.closure, certified.closure);
  } catch (const ChainBudgetExceeded&) {
    cert.heuristic_agrees = false;
    cert.heuristic_e = -1;
  }
  auto result = fte(chain.ideal(), ring, certified);
  cert.fte = result.fte;
  if (result.witness) cert.witness = result.witness->to_string();
  cert.holds = cert.fte <= cert.bound;
  cert.seconds = seconds_since(start);
  return cert;
}

std::vector<IdentityCheck> verify_identities(const QuotientRing& ring, std::span<const Polynomial> seq,
                                             const CohomologyProfile& profile,
                                             const FrobeniusClosureResult* closure, int max_e) {
  std::vector<IdentityCheck> out;
  const int t = profile.fin_dim;
  const int n0 = profile.n0;
  const auto& p = ring.ambient();
  const bool right_length = static_cast<int>(seq.size()) == t;
  const bool fr = is_filter_regular(seq, ring).is_filter_regular;
  const bool deep = in_maximal_power(seq, static_cast<std::uint32_t>(2 * n0), ring);
  const bool standard = right_length && fr && deep;
  const std::string why_not = !right_length ? "sequence length differs from t"
                              : !fr         ? "sequence is not filter regular"
                                            : "sequence is not inside m^" + std::to_string(2 * n0);

  const auto base = ring.extend(seq);
  std::optional<LimitClosureResult> formula;
  if (standard) formula = limit_closure_standard(seq, ring, Standardness::contained_in_m_2n0);

  if (standard) {
    std::uint64_t rhs = 0;
    for (int i = 0; i < t; ++i) rhs += binomial(t, i) * profile.low_lengths[i];
    out.push_back(make_check("limit_closure_length", formula->quotient_length == rhs,
                             optional_length(formula->quotient_length), rhs));
  } else {
    out.push_back(skipped("limit_closure_length", why_not));
  }

  std::optional<LimitClosureResult> chain;
  if (right_length && fr) chain = limit_closure_chain(seq, ring);
  if (standard) {
    const bool same = chain->stabilized && equal(chain->ideal, formula->ideal);
    out.push_back(make_check("limit_closure_chain_matches_formula", same, optional_length(chain->quotient_length),
                             optional_length(formula->quotient_length),
                             chain->stabilized ? "" : "colon chain did not settle within budget"));
  } else {
    out.push_back(skipped("limit_closure_chain_matches_formula", why_not));
  }

  if (chain && t == profile.dim && is_system_of_parameters(seq, ring)) {
    if (chain->stabilized) {
      std::uint64_t rhs = 0;
      for (int i = 0; i < t; ++i) rhs += binomial(t, i) * profile.low_lengths[i];
      const bool ok = chain->quotient_length && *chain->quotient_length <= rhs;
      out.push_back(make_check("limit_closure_length_bound", ok, optional_length(chain->quotient_length), rhs,
                               "lhs <= rhs"));
    } else {
      out.push_back(skipped("limit_closure_length_bound", "colon chain did not settle within budget"));
    }
  } else {
    out.push_back(skipped("limit_closure_length_bound", "needs a filter regular system of parameters"));
  }

  if (standard) {
    const bool weak = is_weak_sequence(seq, n0, ring);
    out.push_back(make_check("weak_sequence", weak, weak, true, "n = " + std::to_string(n0)));
    auto colon_ideal = colon(base, Ideal::maximal_power(p, static_cast<std::uint32_t>(n0)));
    out.push_back(make_check("limit_closure_in_colon", colon_ideal.contains(formula->ideal),
                             colon_ideal.contains(formula->ideal), true));
  } else {
    out.push_back(skipped("weak_sequence", why_not));
    out.push_back(skipped("limit_closure_in_colon", why_not));
  }

  for (int j = 1; j <= t; ++j) {
    for (int k = 1; k <= n0; ++k) {
      const auto name = "socle_splitting_length[" + std::to_string(j) + "," + std::to_string(k) + "]";
      if (!standard) {
        out.push_back(skipped(name, why_not));
        continue;
      }
      auto prefix = ring.extend(seq.first(static_cast<std::size_t>(j)));
      auto socle = colon(prefix, Ideal::maximal_power(p, static_cast<std::uint32_t>(k)));
      auto lhs = quotient_length(socle, prefix);
      std::uint64_t rhs = 0;
      for (int i = 0; i <= j; ++i) rhs += binomial(j, i) * profile.socle_lengths[i][k - 1];
      out.push_back(make_check(name, lhs == rhs, optional_length(lhs), rhs));
    }
  }

  if (standard && closure) {
    const LowCohomologyData data{t, n0};
    const int spec_route = hsl_low(seq, ring, *closure, data, max_e);
    const int linear_route = frobenius_nilpotence(seq, ring, data, max_e).hsl_low;
    out.push_back(make_check("hsl_low_routes_agree", spec_route == linear_route, spec_route, linear_route));
  } else {
    out.push_back(skipped("hsl_low_routes_agree", closure ? why_not : "no closure supplied"));
  }
  return out;
}

int Report::exit_code() const noexcept {
  if (input_errors > 0) return 2;
  return all_pass() ? 0 : 1;
}

Report run_all(std::span<const Manifest> manifests, const RunOptions& options) {
  const auto start = Clock::now();
  Report report;

  struct Context {
    std::optional<QuotientRing> ring;
  };
  std::vector<Context> contexts(manifests.size());
  struct Job {
    std::size_t ring;
    std::size_t task;
    std::optional<std::vector<Polynomial>> explicit_sequence;
  };
  std::vector<Job> jobs;

  for (std::size_t r = 0; r < manifests.size(); ++r) {
    const auto ring_start = Clock::now();
    const auto& m = manifests[r];
    RingReport rr;
    rr.id = m.id;
    rr.p = m.p;
    rr.vars = m.vars;
    rr.relations = m.relations;
    rr.provenance = m.provenance;
    try {
      auto ring = m.quotient_ring(options.order);
      rr.profile = cohomology_profile(ring);
      rr.f_pure = fedder_is_f_pure(ring);
      if (rr.f_pure) {
        rr.hsl_top = 0;
        rr.hsl_top_source = "f-pure";
      } else if (m.hsl_top) {
        rr.hsl_top = m.hsl_top;
        rr.hsl_top_source = "manifest";
      } else {
        rr.hsl_top_source = "missing";
      }
      rr.e0 = frobenius_exponent_bound(m.p, rr.profile->n0);
      auto sequences = m.parsed_sequences(ring.ambient());
      contexts[r].ring = std::move(ring);
      std::size_t index = 0;
      for (auto& s : sequences) {
        rr.tasks.push_back({});
        rr.tasks.back().index = index;
        rr.tasks.back().source = "explicit";
        jobs.push_back({r, index++, std::move(s)});
      }
      for (std::size_t k = 0; k < m.sampling.count; ++k) {
        rr.tasks.push_back({});
        rr.tasks.back().index = index;
        rr.tasks.back().source = "sampled";
        rr.tasks.back().seed = options.seed.value_or(m.sampling.seed) + k;
        jobs.push_back({r, index++, std::nullopt});
      }
    } catch (const std::exception& e) {
      rr.error = e.what();
      rr.tasks.clear();
      ++report.input_errors;
    }
    rr.seconds = seconds_since(ring_start);
    report.rings.push_back(std::move(rr));
  }

  parallel_for(jobs.size(), options.jobs, [&](std::size_t j) {
    const auto& job = jobs[j];
    const auto task_start = Clock::now();
    const auto& m = manifests[job.ring];
    auto& rr = report.rings[job.ring];
    auto& task = rr.tasks[job.task];
    const auto& ring = *contexts[job.ring].ring;
    try {
      std::vector<Polynomial> seq;
      if (job.explicit_sequence) {
        seq = *job.explicit_sequence;
      } else {
        seq = random_filter_regular_sequence(ring, static_cast<std::size_t>(rr.profile->fin_dim),
                                             m.sampling.degree, *task.seed);
      }
      task.sequence = to_strings(seq);
      BoundOptions bo{options.max_e, rr.f_pure, m.id};
      try {
        task.certificate = verify_bound(ring, seq, *rr.profile, rr.hsl_top, bo);
      } catch (const PreconditionError& e) {
        task.error = e.what();
        task.input_error = true;
      }
      if (task.certificate) {
        FrobeniusChain chain(Ideal(ring.ambient(), seq), ring);
        auto closure = frobenius_closure(chain, task.certificate->bound,
                                         std::max(options.max_e, task.certificate->bound));
        task.identities = verify_identities(ring, seq, *rr.profile, &closure, options.max_e);
      }
    } catch (const std::exception& e) {
      task.error = e.what();
    }
    task.seconds = seconds_since(task_start);
  });

  for (const auto& rr : report.rings) {
    for (const auto& task : rr.tasks) {
      if (task.input_error) ++report.input_errors;
      else if (task.error) ++report.check_failures;
      if (task.certificate) {
        const auto& c = *task.certificate;
        const auto label = rr.id + "#" + std::to_string(task.index);
        if (!c.certified_stops) {
          report.uncertified.push_back(label);
          continue;
        }
        ++report.certificates;
        if (c.holds) ++report.holding;
        if (!c.heuristic_agrees) ++report.check_failures;
      }
      for (const auto& check : task.identities) {
        if (check.status == CheckStatus::fail) ++report.check_failures;
      }
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

std::string report_to_json(const Report& report, bool with_timings) {
  auto timings = [&](double s) { return Json{{"seconds", s}}; };
  Json rings = Json::array();
  for (const auto& rr : report.rings) {
    Json ring;
    ring["id"] = rr.id;
    ring["p"] = rr.p;
    ring["vars"] = rr.vars;
    ring["relations"] = rr.relations;
    if (rr.profile) {
      ring["profile"] = {{"dim", rr.profile->dim},
                         {"fin_dim", rr.profile->fin_dim},
                         {"n0", rr.profile->n0},
                         {"low_lengths", rr.profile->low_lengths},
                         {"socle_lengths", rr.profile->socle_lengths}};
    } else {
      ring["profile"] = nullptr;
    }
    ring["f_pure"] = rr.f_pure;
    ring["hsl_top"] = rr.hsl_top ? Json(*rr.hsl_top) : Json(nullptr);
    ring["hsl_top_source"] = rr.hsl_top_source;
    ring["provenance"] = rr.provenance;
    ring["e0"] = rr.e0;
    std::optional<int> max_fte;
    Json tasks = Json::array();
    for (const auto& task : rr.tasks) {
      Json tj;
      tj["index"] = task.index;
      tj["source"] = task.source;
      tj["seed"] = task.seed ? Json(*task.seed) : Json(nullptr);
      tj["sequence"] = task.sequence;
      if (task.certificate) {
        const auto& c = *task.certificate;
        max_fte = std::max(max_fte.value_or(0), c.fte);
        Json cj;
        cj["ring_id"] = c.ring_id;
        cj["sequence"] = c.sequence;
        cj["fte"] = c.fte;
        cj["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
        cj["n0"] = c.n0;
        cj["e0"] = c.e0;
        cj["hsl_low"] = c.hsl_low;
        cj["hsl_top"] = c.hsl_top;
        cj["hsl_used"] = c.hsl_used;
        cj["bound"] = c.bound;
        cj["holds"] = c.holds;
        cj["certified_stops"] = c.certified_stops;
        cj["heuristic_agrees"] = c.heuristic_agrees;
        cj["heuristic_e"] = c.heuristic_e;
        cj["closure"] = c.closure;
        if (with_timings) cj["timings"] = timings(c.seconds);
        tj["certificate"] = std::move(cj);
      } else {
        tj["certificate"] = nullptr;
      }
      Json checks = Json::array();
      for (const auto& check : task.identities) {
        checks.push_back({{"name", check.name},
                          {"status", to_string(check.status)},
                          {"lhs", Json::parse(check.lhs)},
                          {"rhs", Json::parse(check.rhs)},
                          {"note", check.note}});
      }
      tj["identities"] = std::move(checks);
      tj["error"] = task.error ? Json(*task.error) : Json(nullptr);
      if (with_timings) tj["timings"] = timings(task.seconds);
      tasks.push_back(std::move(tj));
    }
    ring["max_fte"] = max_fte ? Json(*max_fte) : Json(nullptr);
    ring["error"] = rr.error ? Json(*rr.error) : Json(nullptr);
    ring["tasks"] = std::move(tasks);
    if (with_timings) ring["timings"] = timings(rr.seconds);
    rings.push_back(std::move(ring));
  }
  Json out;
  out["schema"] = kReportSchema;
  out["schema_version"] = kReportSchemaVersion;
  out["evidence"] = "sampled evidence: explicit and sampled sequences, not a proof over all parameter ideals";
  out["summary"] = {{"rings", report.rings.size()},
                    {"certificates", report.certificates},
                    {"holding", report.holding},
                    {"check_failures", report.check_failures},
                    {"input_errors", report.input_errors},
                    {"uncertified", report.uncertified},
                    {"all_pass", report.all_pass() && report.input_errors == 0},
                    {"exit_code", report.exit_code()}};
  out["rings"] = std::move(rings);
  if (with_timings) out["timings"] = timings(report.seconds);
  return out.dump(2) + "\n";
}

}  // namespace fte
