#include "monocurve/cli.hpp"

#include "monocurve/serialize.hpp"
#include "monocurve/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace monocurve::cli {

Range Range::parse(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  const auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad range '" + text + "'");
    return static_cast<std::int64_t>(v);
  };
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = to_int(text);
      return r;
    }
    r.lo = to_int(text.substr(0, dots));
    const std::string hi = text.substr(dots + 2);
    if (hi == "p") {
      r.hi_is_p = true;
    } else {
      r.hi = to_int(hi);
      if (r.hi < r.lo) throw std::invalid_argument("empty range '" + text + "'");
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "' (expected N or LO..HI)");
  }
  return r;
}

namespace {

VerifyOptions options_for(const RunConfig& config) {
  VerifyOptions o;
  o.bound = config.bound;
  o.samples = config.samples;
  o.seed = config.seed;
  o.syzygies = config.syzygies;
  o.minimality_closure = config.closure;
  return o;
}

std::string triple_text(std::int64_t x, std::int64_t y, std::int64_t z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
}

void print_report_text(const VerificationReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "  [pass] " : "  [FAIL] ") << c.check;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (!c.passed && !c.witness.is_null()) out << "         witness: " << c.witness.dump() << "\n";
  }
}

int cmd_info(const CurveParams& params, const RunConfig& config, std::ostream& out) {
  const auto mp = min_multiple_of_mp(params);
  const auto m0 = min_multiple_of_m0(params);
  const std::int64_t a = params.a(), d = params.d();
  const int p = params.p(), b = params.b();
  if (config.format == Format::Json) {
    json j = {{"params", to_json(params)},
              {"min_multiple_of_mp",
               {{"search", {{"m", mp.m}, {"n", mp.n}, {"i", mp.i}}},
                {"closed_form", {{"m", a + 1}, {"n", a + d}, {"i", p - b}}}}},
              {"min_multiple_of_m0",
               {{"search", {{"n", m0.n}, {"m", m0.m}, {"i", m0.i}}},
                {"stated_form", {{"n", a + d}, {"m", a}, {"i", b}}}}}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "curve parameters: " << params.to_string() << "\n";
  out << "smallest m*m_p = n*m_0 + m_i:  search (m,n,i) = " << triple_text(mp.m, mp.n, mp.i)
      << ", closed form (a+1, a+d, p-b) = " << triple_text(a + 1, a + d, p - b) << "\n";
  out << "smallest n*m_0 = m*m_p + m_i:  search (n,m,i) = " << triple_text(m0.n, m0.m, m0.i)
      << ", stated form (a+d, a, b) = " << triple_text(a + d, a, b)
      << (m0 == MultipleRelation{a, a + d, b} ? "" : "  [differs]") << "\n";
  return kExitOk;
}

int cmd_generators(const CurveParams& params, const RunConfig& config, std::ostream& out) {
  const json dump = generators_to_json(params);
  if (config.format == Format::Json) {
    out << dump.dump(2) << "\n";
    return kExitOk;
  }
  out << "curve parameters: " << params.to_string() << "\n";
  out << "G' (" << dump["G_prime"].size() << " members):\n";
  for (const auto& g : dump["G_prime"]) {
    out << "  " << std::left << std::setw(10) << g["label"].get<std::string>() << " "
        << g["text"].get<std::string>() << "    LT = " << g["leading"].get<std::string>() << "\n";
  }
  out << "G (" << dump["G"].size() << " members):\n";
  for (const auto& g : dump["G"]) {
    out << "  " << std::left << std::setw(10) << g["label"].get<std::string>() << " "
        << g["text"].get<std::string>() << "    LT = " << g["leading"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_syzygies(const CurveParams& params, const RunConfig& config, std::ostream& out) {
  const json dump = syzygies_to_json(params);
  if (config.format == Format::Json) {
    out << dump.dump(2) << "\n";
    return kExitOk;
  }
  const auto& counts = dump["counts"];
  out << "curve parameters: " << params.to_string() << "\n";
  out << "syzygies: |A|=" << counts["A"] << " |B|=" << counts["B"] << " |L|=" << counts["L"]
      << " total " << counts["total"] << "\n";
  for (const auto& s : dump["members"]) {
    out << "  " << std::left << std::setw(10) << s["label"].get<std::string>() << " "
        << s["text"].get<std::string>() << "    LT = " << s["leading"].get<std::string>() << "\n";
  }
  return kExitOk;
}

json counts_json(const CurveParams& params) {
  const auto g_hat = build_G_hat(params);
  return {{"G_prime", build_G_prime(params).members.size()},
          {"G", build_G_patil(params).size()},
          {"A", g_hat.A.size()},
          {"B", g_hat.B.size()},
          {"L", g_hat.L.size()},
          {"G_hat", g_hat.size()}};
}

int cmd_verify(const CurveParams& params, const RunConfig& config, std::ostream& out) {
  const VerificationReport report = verify_all(params, options_for(config));
  if (config.format == Format::Json) {
    json j = to_json(report);
    j["counts"] = counts_json(params);
    j["syzygy_members"] = j["counts"]["G_hat"];
    out << j.dump(2) << "\n";
  } else {
    out << "curve parameters: " << params.to_string() << "\n";
    print_report_text(report, out);
    out << (report.passed() ? "all " + std::to_string(report.checks.size()) + " checks passed"
                            : std::to_string(report.failures()) + " of " +
                                  std::to_string(report.checks.size()) + " checks failed")
        << "\n";
  }
  return report.passed() ? kExitOk : kExitFailure;
}

struct SweepEntry {
  std::int64_t m0, d;
  int p;
  std::int64_t a;
  int b;
  std::string skip_reason;  // non-empty: invalid parameters
  std::optional<VerificationReport> report;
};

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  std::vector<SweepEntry> entries;
  for (auto p = config.p_range.lo; p <= config.p_range.upper(0); ++p) {
    for (auto a = config.a_range.lo; a <= config.a_range.upper(static_cast<int>(p)); ++a) {
      for (auto b = config.b_range.lo; b <= config.b_range.upper(static_cast<int>(p)); ++b) {
        for (auto d = config.d_range.lo; d <= config.d_range.upper(static_cast<int>(p)); ++d) {
          entries.push_back({a * p + b, d, static_cast<int>(p), a, static_cast<int>(b), {}, {}});
        }
      }
    }
  }

  const VerifyOptions options = options_for(config);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < entries.size(); k = next++) {
      auto& e = entries[k];
      if (e.b < 1 || e.b > e.p) {
        e.skip_reason = "b outside [1,p]";
        continue;
      }
      try {
        const CurveParams params = make_params(e.m0, e.d, e.p);
        e.report = verify_all(params, options);
      } catch (const ParamError& ex) {
        e.skip_reason = ex.what();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(entries.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& e : entries) {
    if (!e.report) ++skipped;
    else if (e.report->passed()) ++passed;
    else ++failed;
  }

  if (config.format == Format::Json) {
    json list = json::array();
    for (const auto& e : entries) {
      json item = {{"m0", e.m0}, {"d", e.d}, {"p", e.p}, {"a", e.a}, {"b", e.b}};
      if (!e.report) {
        item["status"] = "skipped";
        item["reason"] = e.skip_reason;
      } else {
        item["status"] = e.report->passed() ? "pass" : "fail";
        item["checks"] = to_json(*e.report)["checks"];
      }
      list.push_back(std::move(item));
    }
    out << json{{"entries", std::move(list)},
                {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& e : entries) {
      out << (e.report ? (e.report->passed() ? "PASS " : "FAIL ") : "SKIP ") << "p=" << e.p
          << " a=" << e.a << " b=" << e.b << " d=" << e.d << " (m0=" << e.m0 << ")";
      if (!e.report) {
        out << "  " << e.skip_reason << "\n";
        continue;
      }
      out << "  " << e.report->checks.size() - e.report->failures() << "/"
          << e.report->checks.size() << " checks\n";
      if (!e.report->passed()) print_report_text(*e.report, out);
    }
    out << "\n"
        << std::left << std::setw(10) << "passed" << passed << "\n"
        << std::setw(10) << "failed" << failed << "\n"
        << std::setw(10) << "skipped" << skipped << "\n"
        << std::setw(10) << "total" << entries.size() << "\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output) {
    file.open(*config.output);
    if (!file) {
      err << "error: cannot open output file '" << *config.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (config.bound < 2) {
    err << "error: --bound must be at least 2\n";
    return kExitUsage;
  }
  if (config.samples < 1) {
    err << "error: --samples must be positive\n";
    return kExitUsage;
  }

  if (config.command == Command::Sweep) return cmd_sweep(config, *sink);

  CurveParams params;
  try {
    params = make_params(config.m0, config.d, config.p);
  } catch (const ParamError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  switch (config.command) {
    case Command::Info: return cmd_info(params, config, *sink);
    case Command::Generators: return cmd_generators(params, config, *sink);
    case Command::Syzygies: return cmd_syzygies(params, config, *sink);
    case Command::Verify: return cmd_verify(params, config, *sink);
    case Command::Sweep: break;
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form Groebner bases for arithmetic-sequence monomial curves and their "
               "first syzygy modules, with independent verification."};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  std::string output;
  std::string p_range = "2..5", a_range = "1..3", b_range = "1..p", d_range = "1..4";

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", output, "Write output to this file");
  };
  const auto triple = [&](CLI::App* sub) {
    sub->add_option("--m0", config.m0, "Smallest generator m0")->required();
    sub->add_option("--d", config.d, "Common difference d")->required();
    sub->add_option("--p", config.p, "Number of steps p")->required();
  };
  const auto checks = [&](CLI::App* sub) {
    sub->add_option("--bound", config.bound, "Exponent cap for the bounded enumerations");
    sub->add_option("--samples", config.samples, "Random single-term samples per parameter set");
    sub->add_option("--seed", config.seed, "Seed for randomized checks");
    sub->add_flag("!--no-syzygies", config.syzygies, "Skip the syzygy-module checks");
    sub->add_flag("!--no-closure", config.closure,
                  "Skip the Buchberger-closure redundancy test in the minimality check");
  };

  auto* info = app.add_subcommand("info", "Validate parameters and show the multiple relations");
  triple(info);
  common(info);
  auto* gens = app.add_subcommand("generators", "Dump G' and G with leading terms");
  triple(gens);
  common(gens);
  auto* syz = app.add_subcommand("syzygies", "Dump the closed-form syzygies with leading terms");
  triple(syz);
  common(syz);
  auto* verify = app.add_subcommand("verify", "Run every check for one parameter set");
  triple(verify);
  common(verify);
  checks(verify);
  auto* sweep = app.add_subcommand("sweep", "Run every check over a Cartesian parameter range");
  sweep->add_option("--p", p_range, "Range of p, e.g. 2..5");
  sweep->add_option("--a", a_range, "Range of a");
  sweep->add_option("--b", b_range, "Range of b; upper end may be 'p'");
  sweep->add_option("--d", d_range, "Range of d");
  sweep->add_option("--threads", config.threads, "Worker threads (0: all cores)");
  common(sweep);
  checks(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*info) config.command = Command::Info;
  if (*gens) config.command = Command::Generators;
  if (*syz) config.command = Command::Syzygies;
  if (*verify) config.command = Command::Verify;
  if (*sweep) {
    config.command = Command::Sweep;
    try {
      config.p_range = Range::parse(p_range);
      config.a_range = Range::parse(a_range);
      config.b_range = Range::parse(b_range);
      config.d_range = Range::parse(d_range);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (config.p_range.hi_is_p || config.a_range.hi_is_p || config.d_range.hi_is_p) {
      err << "error: only the b-range may end at 'p'\n";
      return kExitUsage;
    }
  }
  config.format = format == "json" ? Format::Json : Format::Text;
  if (!output.empty()) config.output = output;
  return run(config, out, err);
}

}  // namespace monocurve::cli
