#include "fte_cli/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "fte/duality.hpp"
#include "fte/frobenius.hpp"
#include "fte/harness.hpp"
#include "fte/manifest.hpp"
#include "fte/sequences.hpp"

namespace fte::cli {

namespace {

struct Common {
  std::string ring_path;
  std::string order = "grevlex";
  int max_e = kDefaultMaxE;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  std::string out_path;
};

struct Args {
  std::vector<std::string> ideal;
  std::vector<std::string> by;
  std::vector<std::string> seq;
  std::string poly;
  std::optional<int> e_star;
  int max_n = kDefaultLimitChainBudget;
  std::vector<std::string> rings;
};

MonomialOrder order_of(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  return MonomialOrder::grevlex();
}

/// Everything a ring-level command needs.
struct Session {
  Manifest manifest;
  QuotientRing ring;

  Session(const Common& c)
      : manifest(load_manifest(c.ring_path)), ring(manifest.quotient_ring(order_of(c.order))) {}

  std::vector<Polynomial> polys(const std::vector<std::string>& texts) const {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ring.ambient()));
    return out;
  }
  /// (gens) + J.
  Ideal ideal(const std::vector<std::string>& texts) const { return ring.extend(polys(texts)); }
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

std::string dim_string(const Dimension& d) { return d ? std::to_string(*d) : "-inf"; }

std::string length_string(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "infinite"; }

std::string canonical(const Ideal& ideal) { return Ideal(ideal.ring(), ideal.basis()).to_string(); }

void add_common(CLI::App* sub, Common& c, bool needs_ring = true) {
  auto* ring = sub->add_option("--ring", c.ring_path, "Ring manifest (TOML)");
  if (needs_ring) ring->required()->check(CLI::ExistingFile);
  sub->add_option("--order", c.order, "Monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
  sub->add_option("--max-e", c.max_e, "Largest Frobenius exponent to try")->check(CLI::Range(0, 30));
  sub->add_option("--seed", c.seed, "Sampling seed override");
  sub->add_option("--jobs", c.jobs, "Parallel tasks")->check(CLI::Range(1, 256));
  sub->add_option("--out", c.out_path, "Write the JSON report here");
}

CLI::Option* add_list(CLI::App* sub, const std::string& name, std::vector<std::string>& target,
                      const std::string& help) {
  return sub->add_option(name, target, help)->delimiter(',');
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius closures, test exponents and limit closures over F_p", "fte"};
  app.require_subcommand(1);
  Common common;
  Args args;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of (ideal) + J");
  add_common(gb, common);
  add_list(gb, "--ideal", args.ideal, "Comma-separated generators (default: none, i.e. J)");

  auto* nf = app.add_subcommand("nf", "Normal form modulo (ideal) + J");
  add_common(nf, common);
  nf->add_option("--poly", args.poly, "Polynomial")->required();
  add_list(nf, "--ideal", args.ideal, "Comma-separated generators");

  auto* colon_cmd = app.add_subcommand("colon", "((ideal) + J) : (by)");
  add_common(colon_cmd, common);
  add_list(colon_cmd, "--ideal", args.ideal, "Comma-separated generators");
  add_list(colon_cmd, "--by", args.by, "Comma-separated generators of the divisor")->required();

  auto* sat = app.add_subcommand("saturate", "Saturation of (ideal) + J by (by), default m");
  add_common(sat, common);
  add_list(sat, "--ideal", args.ideal, "Comma-separated generators");
  add_list(sat, "--by", args.by, "Comma-separated generators (default: all variables)");

  auto* dim = app.add_subcommand("dim", "Krull dimension of P / ((ideal) + J)");
  add_common(dim, common);
  add_list(dim, "--ideal", args.ideal, "Comma-separated generators");

  auto* fclosure = app.add_subcommand("fclosure", "Frobenius closure of (ideal) in S");
  add_common(fclosure, common);
  add_list(fclosure, "--ideal", args.ideal, "Comma-separated generators")->required();
  fclosure->add_option("--e-star", args.e_star, "Certified stopping exponent")->check(CLI::Range(0, 30));

  auto* fte_cmd = app.add_subcommand("fte", "Frobenius test exponent of (ideal) in S");
  add_common(fte_cmd, common);
  add_list(fte_cmd, "--ideal", args.ideal, "Comma-separated generators")->required();
  fte_cmd->add_option("--e-star", args.e_star, "Certified stopping exponent")->check(CLI::Range(0, 30));

  auto* lim = app.add_subcommand("limclosure", "Limit closure of a sequence in S");
  add_common(lim, common);
  add_list(lim, "--seq", args.seq, "Comma-separated sequence")->required();
  lim->add_option("--max-n", args.max_n, "Colon chain budget")->check(CLI::Range(3, 64));

  auto* fr = app.add_subcommand("frcheck", "Filter regularity report for a sequence");
  add_common(fr, common);
  add_list(fr, "--seq", args.seq, "Comma-separated sequence")->required();

  auto* inv = app.add_subcommand("invariants", "d, t, n0 and local cohomology lengths of S");
  add_common(inv, common);

  auto* fedder = app.add_subcommand("fedder", "F-purity of S by Fedder's criterion");
  add_common(fedder, common);

  auto* verify = app.add_subcommand("verify", "Run the manifest-driven bound and identity checks");
  add_common(verify, common, false);
  verify->add_option("manifests", args.rings, "Further manifests")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fte: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (verify->parsed()) {
      std::vector<std::string> paths = args.rings;
      if (!common.ring_path.empty()) paths.insert(paths.begin(), common.ring_path);
      if (paths.empty()) {
        err << "fte: verify needs --ring or manifest paths\n";
        return kExitInputError;
      }
      std::vector<Manifest> manifests;
      for (const auto& p : paths) manifests.push_back(load_manifest(p));
      RunOptions ro{order_of(common.order), common.max_e, common.jobs, common.seed};
      auto report = run_all(manifests, ro);
      for (const auto& rr : report.rings) {
        out << rr.id << ": ";
        if (rr.error) {
          out << "error: " << *rr.error << "\n";
          continue;
        }
        std::size_t held = 0, total = 0;
        int max_fte = 0;
        for (const auto& t : rr.tasks) {
          if (!t.certificate) continue;
          ++total;
          held += t.certificate->holds ? 1 : 0;
          max_fte = std::max(max_fte, t.certificate->fte);
        }
        out << held << "/" << total << " bounds hold, max fte " << max_fte << "\n";
        for (const auto& t : rr.tasks) {
          if (t.error) out << "  task " << t.index << ": " << *t.error << "\n";
          for (const auto& c : t.identities) {
            if (c.status == CheckStatus::fail) {
              out << "  task " << t.index << ": " << c.name << " failed (" << c.lhs << " vs " << c.rhs << ")\n";
            }
          }
        }
      }
      out << "certificates " << report.holding << "/" << report.certificates << " hold, check failures "
          << report.check_failures << ", input errors " << report.input_errors << "\n";
      if (!common.out_path.empty()) {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file) {
          err << "fte: cannot write " << common.out_path << "\n";
          return kExitInputError;
        }
        file << report_to_json(report);
      }
      return report.exit_code();
    }

    Session s(common);
    if (gb->parsed()) {
      auto ideal = s.ideal(args.ideal);
      for (const auto& g : ideal.basis()) out << g.to_string() << "\n";
    } else if (nf->parsed()) {
      out << s.ideal(args.ideal).reduce(parse_polynomial(args.poly, s.ring.ambient())).to_string() << "\n";
    } else if (colon_cmd->parsed()) {
      auto by = Ideal(s.ring.ambient(), s.polys(args.by));
      out << canonical(colon(s.ideal(args.ideal), by)) << "\n";
    } else if (sat->parsed()) {
      auto by = args.by.empty() ? Ideal::maximal(s.ring.ambient()) : Ideal(s.ring.ambient(), s.polys(args.by));
      auto r = saturate(s.ideal(args.ideal), by);
      out << canonical(r.ideal) << "\nstabilization index: " << r.stabilization_index << "\n";
    } else if (dim->parsed()) {
      out << dim_string(krull_dim(s.ideal(args.ideal))) << "\n";
    } else if (fclosure->parsed() || fte_cmd->parsed()) {
      Ideal ideal(s.ring.ambient(), s.polys(args.ideal));
      auto closure = frobenius_closure(ideal, s.ring, args.e_star, std::max(common.max_e, args.e_star.value_or(0)));
      out << "closure: " << canonical(closure.closure) << "\n";
      out << "reached e: " << closure.reached_e << "\n";
      out << "certified: " << (closure.certified ? "yes" : "no (heuristic stop)") << "\n";
      if (fte_cmd->parsed()) {
        auto r = fte::fte(ideal, s.ring, closure);
        out << "fte: " << r.fte << "\n";
        if (r.witness) out << "witness: " << r.witness->to_string() << "\n";
      }
    } else if (lim->parsed()) {
      auto seq = s.polys(args.seq);
      auto chain = limit_closure_chain(seq, s.ring, args.max_n);
      out << "limit closure: " << canonical(chain.ideal) << "\n";
      out << "chain index: " << (chain.chain_n ? std::to_string(*chain.chain_n) : "-") << "\n";
      out << "stabilized: " << (chain.stabilized ? "yes" : "no (budget exhausted)") << "\n";
      out << "quotient length: " << length_string(chain.quotient_length) << "\n";
    } else if (fr->parsed()) {
      auto seq = s.polys(args.seq);
      auto r = is_filter_regular(seq, s.ring, 4);
      out << "filter regular: " << (r.is_filter_regular ? "yes" : "no") << "\n";
      if (r.first_failure) out << "first failure: " << *r.first_failure << "\n";
      out << "system of parameters: " << (r.is_sop ? "yes" : "no") << "\n";
      out << "in m^k for k = " << (r.in_m_power ? std::to_string(*r.in_m_power) : "any") << "\n";
      out << "weak for n = " << (r.weak_n ? std::to_string(*r.weak_n) : "none up to 4") << "\n";
    } else if (inv->parsed()) {
      auto prof = cohomology_profile(s.ring);
      auto res = free_resolution(s.ring);
      std::vector<std::string> ranks, low, socle;
      for (auto r : res.ranks()) ranks.push_back(std::to_string(r));
      for (auto l : prof.low_lengths) low.push_back(std::to_string(l));
      for (const auto& row : prof.socle_lengths) {
        std::vector<std::string> cells;
        for (auto v : row) cells.push_back(std::to_string(v));
        socle.push_back("[" + join(cells) + "]");
      }
      out << "resolution ranks: " << join(ranks) << "\n";
      out << "dim: " << prof.dim << "\nfin_dim: " << prof.fin_dim << "\nn0: " << prof.n0 << "\n";
      out << "low lengths: " << join(low) << "\n";
      out << "socle lengths: " << join(socle) << "\n";
      out << "e0: " << frobenius_exponent_bound(s.manifest.p, prof.n0) << "\n";
    } else if (fedder->parsed()) {
      out << "F-pure: " << (fedder_is_f_pure(s.ring) ? "yes" : "no") << "\n";
    }
    return kExitOk;
  } catch (const ManifestError& e) {
    err << "fte: manifest: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "fte: parse error at offset " << e.position() << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "fte: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "fte: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace fte::cli
