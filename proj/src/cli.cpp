#include "gk/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gk/catalog.hpp"
#include "gk/json.hpp"
#include "gk/oracle/matrix_group.hpp"
#include "gk/oracle/permutations.hpp"
#include "gk/prime_graph.hpp"
#include "gk/spectra.hpp"
#include "gk/verifier.hpp"

namespace gk::cli {

  namespace {

    template <typename Range>
    std::string join(Range const& values, std::string_view sep) {
      std::ostringstream os;
      bool               first = true;
      for (auto const& v : values) {
        if (!first) {
          os << sep;
        }
        first = false;
        os << v;
      }
      return os.str();
    }

    std::string set_text(NatSet const& mu) {
      return "{" + join(mu, ", ") + "}";
    }

    std::vector<GroupId> table1_groups() {
      return {GroupId::lie(Family::Symplectic, 4, 31, 1),
              GroupId::lie(Family::Unitary, 3, 3, 3),
              GroupId::exceptional(Family::G2, 11),
              GroupId::lie(Family::Unitary, 4, 31, 1)};
    }

    // Error used for argument values CLI11 accepted syntactically.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    GroupId select(std::string const& family, std::string const& param) {
      try {
        GroupId g = GroupId::from_selector(family, param);
        g.validate();
        return g;
      } catch (Error const& e) {
        throw UsageError(e.what());
      }
    }

    oracle::ClosureOptions closure_options() {
      oracle::ClosureOptions opts;
      if (char const* env = std::getenv("GK_SEED")) {
        auto seed = parse_seed(env);
        if (!seed) {
          throw UsageError(std::string("GK_SEED: cannot parse '") + env + "'");
        }
        opts.seed = *seed;
      }
      return opts;
    }

    ////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////

    int cmd_spectrum(GroupId const& g, bool json, std::ostream& out) {
      Spectrum sp = spectrum_of(g);
      if (json) {
        nlohmann::json j = sp;
        j["group"]       = g;
        out << j.dump() << '\n';
      } else {
        out << "mu(" << g << ") = " << set_text(sp.mu) << '\n';
      }
      return kExitOk;
    }

    int cmd_graph(GroupId const& g, bool dot, bool json, std::ostream& out) {
      if (dot) {
        Factorization order = order_of(g);
        out << to_dot(build_gk(order, spectrum_of(g).mu), g.to_string());
        return kExitOk;
      }
      nlohmann::json j = graph_summary(g);
      if (json) {
        out << j.dump() << '\n';
        return kExitOk;
      }
      Factorization order = order_of(g);
      PrimeGraph    graph = build_gk(order, spectrum_of(g).mu);
      auto          comps = components(graph, order);
      out << "group       " << g << '\n';
      out << "order       " << order.to_string() << '\n';
      out << "vertices    " << join(graph.vertices(), " ") << '\n';
      std::vector<std::string> edges;
      for (auto [p, q] : graph.edges()) {
        edges.push_back(std::to_string(p) + "-" + std::to_string(q));
      }
      out << "edges       " << join(edges, " ") << '\n';
      out << "degrees     (" << join(degree_pattern(graph).degrees, ", ") << ")\n";
      for (std::size_t i = 0; i < comps.components.size(); ++i) {
        out << "component " << i + 1 << " {" << join(comps.components[i].primes, ", ")
            << "} m = " << comps.components[i].m.to_string() << '\n';
      }
      auto t = independence(graph);
      out << "s = " << comps.s() << ", t = " << t.size << " {" << join(t.witness, ", ")
          << "}";
      if (graph.contains(2)) {
        auto t2 = independence_at(graph, 2);
        out << ", t(2) = " << t2.size << " {" << join(t2.witness, ", ") << "}";
      }
      out << '\n';
      return kExitOk;
    }

    int cmd_enumerate(std::optional<unsigned> max_prime,
                      std::string const&      caps_file,
                      bool                    show_caps,
                      std::ostream&           out,
                      std::ostream&           err) {
      SearchCaps caps;
      if (!caps_file.empty()) {
        std::ifstream in(caps_file);
        if (!in) {
          throw UsageError("cannot read caps file " + caps_file);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        try {
          caps = SearchCaps::parse(buf.str());
        } catch (Error const& e) {
          throw UsageError(caps_file + ": " + e.what());
        }
      }
      if (max_prime) {
        caps.max_prime = *max_prime;
      }
      if (show_caps) {
        out << caps.to_text();
        if (!max_prime) {
          return kExitOk;
        }
      }
      if (!max_prime) {
        throw UsageError("enumerate: --max-prime is required");
      }
      if (!is_prime_u64(*max_prime)) {
        throw UsageError("enumerate: " + std::to_string(*max_prime) + " is not prime");
      }
      Enumeration e = enumerate_S_p(*max_prime, caps);
      for (auto const& g : e.groups) {
        out << g << '\t' << order_of(g).to_string() << '\n';
      }
      out << e.groups.size() << " groups\n";
      if (*max_prime == 37) {
        auto ref = reference_S37();
        std::sort(ref.begin(), ref.end());
        if (ref != e.groups) {
          std::vector<GroupId> missing, extra;
          std::set_difference(ref.begin(), ref.end(), e.groups.begin(),
                              e.groups.end(), std::back_inserter(missing));
          std::set_difference(e.groups.begin(), e.groups.end(), ref.begin(),
                              ref.end(), std::back_inserter(extra));
          err << "discrepancy against the known list: missing {"
              << join(missing, ", ") << "}, extra {" << join(extra, ", ") << "}\n";
          return kExitFailed;
        }
      }
      return kExitOk;
    }

    int cmd_verify(GroupId const& g, bool json, std::ostream& out) {
      if (!find_case(g)) {
        std::vector<std::string> names;
        for (auto const& c : case_table()) {
          names.push_back(c.group.to_string());
        }
        throw UsageError("verify: no case configured for " + g.to_string()
                         + " (configured: " + join(names, ", ") + ")");
      }
      CaseReport r = verify_case(g);
      if (json) {
        out << nlohmann::json(r).dump() << '\n';
      } else {
        out << "group         " << r.group << '\n';
        out << "pattern       (" << join(r.pattern.degrees, ", ") << ")\n";
        out << "family        " << r.family_size << " graphs, GK(S) "
            << (r.gk_in_family ? "included" : "missing") << '\n';
        if (r.forced.pivot) {
          out << "pivot         " << r.forced.pivot->first << "~"
              << r.forced.pivot->second << ": " << r.forced.members_with_pivot
              << " graph(s), " << (r.forced.forced ? "all equal GK(S)" : "not forced")
              << '\n';
        } else {
          out << "pivot         none\n";
        }
        out << "alternatives  " << r.alternatives.count << " graphs, "
            << (r.alternatives.all_vasiliev_applicable ? "all" : "not all")
            << " with t >= 3 and t(2) >= 2\n";
        out << "filter        m = " << r.filter.m.to_string() << ": {"
            << join(r.filter.divisibility_survivors, ", ") << "} -> {"
            << join(r.filter.survivors, ", ") << "}\n";
        out << "verdict       " << r.verdict() << '\n';
        for (auto const& f : r.assumed_facts) {
          out << "assumed       " << f << '\n';
        }
      }
      return r.verified() ? kExitOk : kExitFailed;
    }

    int cmd_oracle(std::string const& target, bool heavy, std::ostream& out) {
      GroupId g;
      try {
        g = GroupId::parse(target);
        g.validate();
      } catch (Error const& e) {
        throw UsageError(e.what());
      }
      Spectrum formula = spectrum_of(g);
      Spectrum brute;
      if (g.family == Family::Alternating) {
        if (g.dim > 10) {
          throw UsageError("oracle: alternating degree must be at most 10");
        }
        brute = oracle::alternating_spectrum_bruteforce(g.dim);
        out << "permutations  all even permutations of " << g.dim << " points\n";
      } else {
        auto const p = static_cast<std::uint32_t>(g.characteristic);
        auto const k = g.field_exponent;
        // Heavy targets: PSp4(5) keeps ~4.7e6 keys (about 180 MB with the
        // hash table); PSL2(37) is small but kept in the same tier.
        bool const is_heavy = (g.family == Family::Symplectic && g.q() == 5)
                              || (g.family == Family::Linear && g.q() == 37);
        if (is_heavy && !heavy) {
          throw UsageError("oracle: " + g.to_string()
                           + " is a heavy target (up to ~200 MB, minutes); pass --heavy");
        }
        auto opts = closure_options();
        std::optional<oracle::MatrixGroup> grp;
        if (g.family == Family::Linear && g.dim == 2) {
          grp = oracle::special_linear_2(p, k, opts);
        } else if (g.family == Family::Unitary && (g.dim == 3 || g.dim == 4)) {
          opts.projective = true;
          grp             = oracle::special_unitary(g.dim, p, k, opts);
        } else if (g.family == Family::Symplectic && g.dim == 4) {
          opts.projective = true;
          grp             = oracle::symplectic(4, p, k, opts);
        } else {
          throw UsageError("oracle: no matrix oracle for " + g.to_string()
                           + " (supported: L2, U3, U4, S4, A5..A10)");
        }
        out << "closure       " << grp->size() << " elements"
            << (grp->projective() ? " (mod centre)" : "") << ", retries "
            << grp->retries_used() << '\n';
        brute = oracle::spectrum_mod_center(*grp);
      }
      out << "oracle mu     " << set_text(brute.mu) << '\n';
      out << "formula mu    " << set_text(formula.mu) << '\n';
      bool const ok = brute.mu == formula.mu;
      out << (ok ? "match" : "MISMATCH") << '\n';
      return ok ? kExitOk : kExitFailed;
    }
  }  // namespace

  std::optional<std::uint64_t> parse_seed(std::string_view text) {
    int base = 10;
    if (text.starts_with("0x") || text.starts_with("0X")) {
      text.remove_prefix(2);
      base = 16;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
      return std::nullopt;
    }
    return value;
  }

  std::string table1_text() {
    std::ostringstream os;
    os << "S | |S| | mu(S) | D(S)\n";
    for (auto const& g : table1_groups()) {
      Factorization order = order_of(g);
      Spectrum      sp    = spectrum_of(g);
      PrimeGraph    graph = build_gk(order, sp.mu);
      os << g << " | " << order.to_string() << " | " << join(sp.mu, ", ") << " | ("
         << join(degree_pattern(graph).degrees, ", ") << ")\n";
    }
    return os.str();
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime graphs, spectra and degree patterns of finite simple groups",
                 "gk"};
    app.require_subcommand(1);

    auto* table1 = app.add_subcommand("table1", "orders, spectra and degree patterns "
                                                "of S4(31), U3(27), G2(11), U4(31)");

    std::string family, param;
    bool        json = false, dot = false, heavy = false, show_caps = false;

    auto* spectrum = app.add_subcommand("spectrum", "maximal element orders mu(G)");
    spectrum->add_option("family", family, "L2, U3, U4, S4, G2 or A")->required();
    spectrum->add_option("param", param, "q (or n for A)")->required();
    spectrum->add_flag("--json", json);

    auto* graph = app.add_subcommand("graph", "prime graph and its statistics");
    graph->add_option("family", family)->required();
    graph->add_option("param", param)->required();
    auto* dot_flag  = graph->add_flag("--dot", dot, "DOT output");
    auto* json_flag = graph->add_flag("--json", json, "JSON output");
    dot_flag->excludes(json_flag);

    std::optional<unsigned> max_prime;
    std::string             caps_file;
    auto* enumerate = app.add_subcommand("enumerate", "simple groups with largest "
                                                      "order prime P");
    enumerate->add_option("--max-prime", max_prime, "P");
    enumerate->add_option("--caps", caps_file, "caps file (key = value lines)");
    enumerate->add_flag("--show-caps", show_caps, "print the caps in effect");

    auto* verify = app.add_subcommand("verify", "mechanized case analysis");
    verify->add_option("family", family)->required();
    verify->add_option("param", param)->required();
    verify->add_flag("--json", json);

    std::string target;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force spectrum check, "
                                                    "e.g. L2(7), U3(5), A9");
    oracle_cmd->add_option("target", target)->required();
    oracle_cmd->add_flag("--heavy", heavy, "allow PSp4(5) and PSL2(37)");

    std::vector<char const*> argv = {"gk"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    try {
      if (*table1) {
        out << table1_text();
        return kExitOk;
      }
      if (*spectrum) {
        return cmd_spectrum(select(family, param), json, out);
      }
      if (*graph) {
        return cmd_graph(select(family, param), dot, json, out);
      }
      if (*enumerate) {
        return cmd_enumerate(max_prime, caps_file, show_caps, out, err);
      }
      if (*verify) {
        return cmd_verify(select(family, param), json, out);
      }
      if (*oracle_cmd) {
        return cmd_oracle(target, heavy, out);
      }
    } catch (UsageError const& e) {
      err << "gk: " << e.what() << '\n';
      return kExitUsage;
    } catch (NotImplementedError const& e) {
      err << "gk: " << e.what() << '\n';
      return kExitUsage;
    } catch (Error const& e) {
      err << "gk: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitUsage;
  }

}  // namespace gk::cli
