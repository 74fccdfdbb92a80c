#include "pshua/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pshua/audits.hpp"
#include "pshua/circle.hpp"
#include "pshua/config.hpp"
#include "pshua/constraints.hpp"
#include "pshua/counting.hpp"
#include "pshua/errors.hpp"
#include "pshua/expsums.hpp"
#include "pshua/integer.hpp"
#include "pshua/psprimes.hpp"
#include "pshua/singular.hpp"

namespace pshua {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string format_complex(std::complex<double> z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return format_double(z.real()) + (std::signbit(im) ? "-" : "+") + format_double(std::fabs(im)) + "i";
}

namespace {

struct Globals {
  std::string config_path;
  std::string format;
  std::string cache;
  std::uint64_t sieve_limit = 0;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

struct Context {
  RunConfig config;
  std::optional<std::filesystem::path> cache_flag;
  std::ostream& out;

  bool json_out() const { return config.output_format == OutputFormat::json; }

  PrimeSieve sieve(std::uint64_t needed) const {
    needed = std::max<std::uint64_t>(needed, 2);
    if (needed > config.sieve_limit) {
      throw CapacityError("computation needs primes up to " + std::to_string(needed) + " but sieve_limit is " +
                          std::to_string(config.sieve_limit));
    }
    const auto path = resolve_cache_path(cache_flag, config, config.sieve_limit);
    if (!path.empty()) return PrimeSieve::load_or_build(config.sieve_limit, path, config.threads);
    return PrimeSieve(needed, config.threads);
  }

  void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

std::uint64_t sum_range(const SumSpec& s, std::uint64_t N) {
  return (s.kind == SumKind::S3 || s.kind == SumKind::T3) ? icbrt(N) : N;
}

std::string slot_str(const std::optional<GammaParam>& g) { return g ? g->str() : "1"; }

std::optional<GammaParam> slot_from(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return GammaParam::parse(text);
}

// -- subcommand bodies ------------------------------------------------------

struct SieveArgs {
  std::uint64_t limit = 0;
};

int run_sieve(const Context& c, const SieveArgs& a) {
  Context local = c;
  if (a.limit) local.config.sieve_limit = a.limit;
  const auto path = resolve_cache_path(c.cache_flag, local.config, local.config.sieve_limit);
  const PrimeSieve s = path.empty() ? PrimeSieve(local.config.sieve_limit, local.config.threads)
                                    : PrimeSieve::load_or_build(local.config.sieve_limit, path, local.config.threads);
  const std::string source = s.source() == PrimeSieve::Source::fresh ? "fresh" : "cache";
  if (c.json_out()) {
    c.emit(json{{"limit", s.limit()}, {"pi", s.primes().size()}, {"source", source}, {"cache", path.string()}});
  } else {
    c.out << "limit,pi,source\n" << s.limit() << ',' << s.primes().size() << ',' << source << '\n';
  }
  return exit_ok;
}

struct PsArgs {
  std::uint64_t x = 0;
  std::string gamma = "1";
  bool curve = false;
};

int run_ps_list(const Context& c, const PsArgs& a) {
  const GammaParam g = GammaParam::parse(a.gamma);
  const PrimeSieve s = c.sieve(a.x);
  const auto primes = ps_primes_up_to(a.x, g, s);
  if (c.json_out()) {
    c.emit(json{{"x", a.x}, {"gamma", g.str()}, {"primes", primes}});
  } else {
    for (auto p : primes) c.out << p << '\n';
  }
  return exit_ok;
}

int run_ps_count(const Context& c, const PsArgs& a) {
  const GammaParam g = GammaParam::parse(a.gamma);
  const PrimeSieve s = c.sieve(a.x);
  if (!a.curve) {
    const PsCount r = ps_count(a.x, g, s);
    if (c.json_out()) {
      c.emit(json{{"x", a.x}, {"gamma", g.str()}, {"count", r.count}, {"density_ratio", r.density_ratio}});
    } else {
      c.out << "x,gamma,count,density_ratio\n"
            << a.x << ',' << g.str() << ',' << r.count << ',' << format_double(r.density_ratio) << '\n';
    }
    return exit_ok;
  }
  if (a.x < 3) throw DomainError("ps-count: x must be at least 3");
  const auto primes = ps_primes_up_to(a.x, g, s);
  std::vector<std::uint64_t> xs;
  for (std::uint64_t decade = 100; decade <= a.x; decade *= 10) {
    for (std::uint64_t m : {1, 2, 5}) {
      if (decade * m <= a.x) xs.push_back(decade * m);
    }
    if (decade > a.x / 10) break;
  }
  if (xs.empty() || xs.back() != a.x) xs.push_back(a.x);
  json rows = json::array();
  if (!c.json_out()) c.out << "x,density_ratio\n";
  for (auto x : xs) {
    const auto count = static_cast<double>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
    const double xd = static_cast<double>(x);
    const double ratio = count / (std::pow(xd, g.value()) / std::log(xd));
    if (c.json_out()) {
      rows.push_back(json{{"x", x}, {"density_ratio", ratio}});
    } else {
      c.out << x << ',' << format_double(ratio) << '\n';
    }
  }
  if (c.json_out()) c.emit(json{{"gamma", g.str()}, {"curve", rows}});
  return exit_ok;
}

struct ExpsumArgs {
  std::string kind = "S1";
  std::uint64_t N = 0;
  std::string alpha = "0/1";
  std::string gamma;
};

int run_expsum(const Context& c, const ExpsumArgs& a) {
  const SumSpec spec = parse_sum_spec(a.gamma.empty() ? a.kind : a.kind + ":" + a.gamma);
  const PhaseAccurateAlpha alpha = PhaseAccurateAlpha::parse(a.alpha);
  const PrimeSieve s = c.sieve(sum_range(spec, a.N));
  const ComplexAccumulator acc = eval_sum(spec, a.N, alpha, s);
  if (c.json_out()) {
    c.emit(json{{"sum", to_string(spec)},
                {"N", a.N},
                {"alpha", alpha.str()},
                {"re", acc.re()},
                {"im", acc.im()},
                {"abs", std::abs(acc.value())},
                {"terms", acc.terms()},
                {"error_budget", acc.error_budget()}});
  } else {
    c.out << format_complex(acc.value()) << '\n';
  }
  return exit_ok;
}

struct SingularArgs {
  std::uint64_t N = 0;
  unsigned k = 3;
  std::uint64_t cutoff = 0;
  bool vinogradov = false;
};

int run_singular(const Context& c, const SingularArgs& a) {
  const std::uint64_t cutoff = a.cutoff ? a.cutoff : c.config.singular_cutoff;
  if (a.vinogradov) {
    const double v = singular_series_vinogradov(a.N, cutoff);
    if (c.json_out()) {
      c.emit(json{{"N", a.N}, {"cutoff", cutoff}, {"series", "vinogradov"}, {"value", v}});
    } else {
      c.out << format_double(v) << '\n';
    }
    return exit_ok;
  }
  const EulerProductEstimate e = singular_series_hua(a.N, a.k, cutoff);
  if (c.json_out()) {
    c.emit(json{{"N", a.N},
                {"k", a.k},
                {"cutoff", cutoff},
                {"value", e.value},
                {"last_prime", e.last_prime},
                {"last_factor_delta", e.last_factor_delta},
                {"vanishes", e.vanishes},
                {"vanishing_prime", e.vanishing_prime}});
  } else {
    c.out << format_double(e.value) << '\n';
  }
  return exit_ok;
}

struct CountArgs {
  std::uint64_t N = 0;
  unsigned k = 3;
  std::string g1, g2, g3;
  bool weighted = false;
};

int run_count(const Context& c, const CountArgs& a) {
  RepQuery q;
  q.N = a.N;
  q.k = a.k;
  q.slots = {slot_from(a.g1), slot_from(a.g2), slot_from(a.g3)};
  q.weighted = a.weighted;
  const PrimeSieve s = c.sieve(a.N);
  const RepCount r = count_hua(q, s);
  if (c.json_out()) {
    json j{{"N", a.N},
           {"k", a.k},
           {"gamma1", slot_str(q.slots[0])},
           {"gamma2", slot_str(q.slots[1])},
           {"gamma3", slot_str(q.slots[2])},
           {"count", r.count}};
    if (a.weighted) j["weighted"] = r.weighted;
    c.emit(j);
  } else if (a.weighted) {
    c.out << "N,k,gamma1,gamma2,gamma3,count,weighted\n"
          << a.N << ',' << a.k << ',' << slot_str(q.slots[0]) << ',' << slot_str(q.slots[1]) << ','
          << slot_str(q.slots[2]) << ',' << r.count << ',' << format_double(r.weighted) << '\n';
  } else {
    c.out << r.count << '\n';
  }
  return exit_ok;
}

struct IntegralArgs {
  std::uint64_t N = 0;
  std::vector<std::string> factors;
  std::string domain = "full";
  std::string sigma;
  std::size_t samples = 0;
  double tolerance = 1e-8;
};

int run_integral(const Context& c, const IntegralArgs& a) {
  std::vector<std::string> names = a.factors.empty() ? std::vector<std::string>{"S1", "S1", "S3"} : a.factors;
  std::vector<SumSpec> specs;
  std::uint64_t need = 2;
  for (const auto& n : names) {
    specs.push_back(parse_sum_spec(n));
    need = std::max(need, sum_range(specs.back(), a.N));
  }
  IntegralDomain domain;
  if (a.domain == "full") {
    domain = IntegralDomain::full;
  } else if (a.domain == "major") {
    domain = IntegralDomain::major;
  } else if (a.domain == "minor") {
    domain = IntegralDomain::minor;
  } else {
    throw DomainError("domain must be full, major or minor");
  }
  const mpq_class sigma = a.sigma.empty() ? c.config.sigma : parse_fraction(a.sigma);
  const PrimeSieve s = c.sieve(need);
  std::optional<ArcDissection> d;
  if (domain != IntegralDomain::full) d = ArcDissection::from_sigma(a.N, sigma);
  IntegralOptions opt;
  opt.samples = a.samples;
  opt.tolerance = a.tolerance;
  const IntegralResult r = circle_integral(a.N, specs, s, domain, d ? &*d : nullptr, opt);
  std::string joined;
  for (const auto& sp : specs) joined += (joined.empty() ? "" : "*") + to_string(sp);
  if (c.json_out()) {
    json j{{"N", a.N},
           {"factors", joined},
           {"domain", a.domain},
           {"re", r.value.real()},
           {"im", r.value.imag()},
           {"error_estimate", r.error_estimate},
           {"exact", r.exact},
           {"samples", r.samples},
           {"bandwidth", r.bandwidth},
           {"cap_reached", r.cap_reached}};
    if (d) {
      j["sigma"] = to_string(sigma);
      j["Q"] = d->Q();
      j["tau"] = d->tau();
    }
    c.emit(j);
  } else {
    c.out << "N,factors,domain,re,im,error_estimate,samples\n"
          << a.N << ',' << joined << ',' << a.domain << ',' << format_double(r.value.real()) << ','
          << format_double(r.value.imag()) << ',' << format_double(r.error_estimate) << ',' << r.samples << '\n';
  }
  return exit_ok;
}

struct AdmissibleArgs {
  std::string scenario;
  std::string variant = "as-proved";
  std::string tuple;
  bool type_one = false;
  std::string gamma, delta;
};

std::vector<mpq_class> split_fractions(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_fraction(item));
  return out;
}

int run_admissible(const Context& c, const AdmissibleArgs& a) {
  const int modes = !a.scenario.empty() + !a.tuple.empty() + a.type_one;
  if (modes != 1) throw DomainError("admissible: give exactly one of --scenario, --tuple, --type-I");
  if (!a.scenario.empty()) {
    const Scenario sc = parse_scenario(a.scenario);
    std::vector<Variant> variants;
    if (a.variant == "both") {
      variants = {Variant::as_proved, Variant::as_stated};
    } else {
      variants = {parse_variant(a.variant)};
    }
    json rows = json::array();
    if (!c.json_out() && variants.size() > 1) c.out << "scenario,variant,gamma_lower,one_minus_bound,binding\n";
    for (Variant v : variants) {
      const GammaThreshold t = solve_gamma_threshold(sc, v);
      const mpq_class headline = sc == Scenario::gamma3_free ? t.one_minus_bound : t.gamma_lower;
      if (c.json_out()) {
        json j{{"scenario", to_string(sc)},
               {"variant", to_string(v)},
               {"gamma_lower", to_string(t.gamma_lower)},
               {"one_minus_bound", to_string(t.one_minus_bound)},
               {"binding", t.binding}};
        if (sc == Scenario::gamma3_free) {
          j["statement_reading_gamma3_lower"] = to_string(t.one_minus_bound);
          j["derived_gamma3_lower"] = to_string(t.gamma_lower);
        }
        rows.push_back(j);
      } else if (variants.size() > 1) {
        c.out << to_string(sc) << ',' << to_string(v) << ',' << to_string(t.gamma_lower) << ','
              << to_string(t.one_minus_bound) << ',' << t.binding << '\n';
      } else {
        c.out << to_string(headline) << '\n';
      }
    }
    if (c.json_out()) c.emit(rows.size() == 1 ? rows[0] : rows);
    return exit_ok;
  }
  if (!a.tuple.empty()) {
    const auto v = split_fractions(a.tuple);
    if (v.size() != 5) throw DomainError("--tuple expects gamma1,gamma2,gamma3,delta1,delta3");
    const ParamTuple t(v[0], v[1], v[2], v[3], v[4]);
    const Variant var = parse_variant(a.variant);
    const ConstraintReport r = check_theorem_constraints(t, var);
    if (c.json_out()) {
      json cons = json::array();
      for (const auto& s : r.constraints) cons.push_back(json{{"name", s.name}, {"slack", to_string(s.slack)}});
      c.emit(json{{"tuple", a.tuple}, {"variant", to_string(var)}, {"admissible", r.admissible}, {"constraints", cons}});
    } else {
      c.out << "constraint,slack\n";
      for (const auto& s : r.constraints) c.out << s.name << ',' << to_string(s.slack) << '\n';
      c.out << (r.admissible ? "admissible" : "inadmissible") << '\n';
    }
    return exit_ok;
  }
  const ExponentTable t = type_I_exponents(parse_fraction(a.gamma.empty() ? "1" : a.gamma),
                                           parse_fraction(a.delta.empty() ? "0" : a.delta));
  if (c.json_out()) {
    json ai = json::array();
    for (const auto& x : t.a_i) ai.push_back(to_string(x));
    c.emit(json{{"gamma", to_string(t.gamma)},
                {"delta", to_string(t.delta)},
                {"a_i", ai},
                {"a", to_string(t.a)},
                {"b", to_string(t.b)},
                {"c", to_string(t.c)},
                {"precondition", t.precondition},
                {"b_below_two_thirds", t.b_below_two_thirds},
                {"b_below_a", t.b_below_a},
                {"window_nonempty", t.window_nonempty}});
  } else {
    c.out << "name,value\n";
    for (std::size_t i = 0; i < t.a_i.size(); ++i) c.out << 'a' << i + 1 << ',' << to_string(t.a_i[i]) << '\n';
    c.out << "a," << to_string(t.a) << "\nb," << to_string(t.b) << "\nc," << to_string(t.c) << '\n'
          << "precondition," << t.precondition << "\nb_below_two_thirds," << t.b_below_two_thirds
          << "\nb_below_a," << t.b_below_a << "\nwindow_nonempty," << t.window_nonempty << '\n';
  }
  return exit_ok;
}

struct AuditArgs {
  std::vector<std::string> lemmas;
  unsigned steps = 3;
  double slack = 0.5;
  std::uint64_t N = 100000;
  std::string gamma = "9/10";
  std::string delta1 = "1/100";
  std::uint64_t n_max = 3000;
};

int run_audit(const Context& c, const AuditArgs& a) {
  std::vector<std::string> lemmas = a.lemmas;
  if (lemmas.empty() || (lemmas.size() == 1 && lemmas[0] == "all")) {
    lemmas = audit_names();
    lemmas.push_back("heath-brown");
  }
  AuditSettings settings;
  settings.seed = c.config.seed;
  settings.slack = a.slack;
  settings.epsilon = c.config.audit_epsilon;
  settings.threads = c.config.threads;
  settings.steps = a.steps;

  bool all_pass = true;
  json reports = json::array();
  std::optional<PrimeSieve> sieve;
  auto need_sieve = [&](std::uint64_t n) -> const PrimeSieve& {
    if (!sieve || sieve->limit() < n) sieve.emplace(c.sieve(n));
    return *sieve;
  };
  if (!c.json_out()) c.out << "lemma,scale,max_ratio,fitted_constant,pass,argmax\n";
  for (const auto& name : lemmas) {
    if (name == "heath-brown") {
      std::uint64_t failures = 0, first_failure = 0;
      for (std::uint64_t n = 1; n <= a.n_max; ++n) {
        const double z = std::max(1.0, std::ceil(std::cbrt(static_cast<double>(n) / 2.0)));
        if (!heath_brown_identity_check(n, z, 3).holds) {
          if (failures++ == 0) first_failure = n;
        }
      }
      all_pass = all_pass && failures == 0;
      if (c.json_out()) {
        reports.push_back(json{{"lemma", name}, {"n_max", a.n_max}, {"k", 3}, {"failures", failures},
                               {"pass", failures == 0}});
      } else {
        c.out << name << ',' << a.n_max << ',' << failures << ",0," << (failures == 0) << ','
              << (failures ? "n=" + std::to_string(first_failure) : "") << '\n';
      }
      continue;
    }
    if (name == "t1-gap") {
      const GammaParam g = GammaParam::parse(a.gamma);
      const T1GapReport r = audit_t1_gap(a.N, g, parse_fraction(a.delta1), make_alpha_grid(50, 1000, settings.seed),
                                         need_sieve(a.N), settings.threads);
      if (c.json_out()) {
        reports.push_back(json{{"lemma", name},
                               {"N", a.N},
                               {"gamma", g.str()},
                               {"delta1", a.delta1},
                               {"applicable", r.applicable},
                               {"max_gap_ratio", r.max_gap_ratio},
                               {"argmax", r.argmax},
                               {"mean_square", r.mean_square},
                               {"weight_square_sum", r.weight_square_sum},
                               {"mean_ratio", r.mean_ratio},
                               {"samples", r.samples}});
      } else {
        c.out << name << ',' << a.N << ',' << format_double(r.max_gap_ratio) << ','
              << format_double(r.mean_ratio) << ',' << (r.applicable ? "1" : "not-applicable") << ','
              << r.argmax << '\n';
      }
      continue;
    }
    std::uint64_t need = 2;
    if (name == "vaughan" || name == "harman") need = audit_sieve_requirement(settings);
    const BoundAuditReport r = run_calibrated_audit(name, settings, need_sieve(need));
    all_pass = all_pass && r.pass;
    if (c.json_out()) {
      json rows = json::array();
      for (const auto& row : r.rows) {
        rows.push_back(json{{"scale", row.scale}, {"max_ratio", row.max_ratio}, {"argmax", row.argmax}});
      }
      reports.push_back(json{{"lemma", r.lemma},
                             {"grid", r.grid},
                             {"rows", rows},
                             {"slack", r.slack},
                             {"fitted_constant", r.fitted_constant},
                             {"max_ratio", r.max_ratio},
                             {"pass", r.pass}});
    } else {
      for (const auto& row : r.rows) {
        c.out << r.lemma << ',' << format_double(row.scale) << ',' << format_double(row.max_ratio) << ','
              << format_double(r.fitted_constant) << ',' << r.pass << ',' << row.argmax << '\n';
      }
    }
  }
  if (c.json_out()) c.emit(json{{"seed", settings.seed}, {"reports", reports}, {"pass", all_pass}});
  return all_pass ? exit_ok : exit_audit_failure;
}

struct CompareArgs {
  std::uint64_t from = 0, to = 0, step = 2;
  unsigned k = 3;
  std::uint64_t cutoff = 0;
};

int run_compare(const Context& c, const CompareArgs& a) {
  if (a.from < 3 || a.to < a.from || a.step == 0) throw DomainError("compare: need 3 <= from <= to and step >= 1");
  const std::uint64_t cutoff = a.cutoff ? a.cutoff : c.config.singular_cutoff;
  const PrimeSieve s = c.sieve(a.to);
  json rows = json::array();
  if (!c.json_out()) c.out << "N,k,cutoff,exact_count,singular_series,coefficient,main_term,ratio\n";
  for (std::uint64_t N = a.from; N <= a.to; N += a.step) {
    const AsymptoticRow r = main_term(N, a.k, cutoff, s);
    if (c.json_out()) {
      rows.push_back(json{{"N", r.N},
                          {"k", r.k},
                          {"cutoff", r.cutoff},
                          {"exact_count", r.exact_count},
                          {"singular_series", r.singular_series},
                          {"coefficient", r.coefficient},
                          {"main_term", r.main_term},
                          {"ratio", r.ratio}});
    } else {
      c.out << r.N << ',' << r.k << ',' << r.cutoff << ',' << r.exact_count << ',' << format_double(r.singular_series)
            << ',' << format_double(r.coefficient) << ',' << format_double(r.main_term) << ','
            << format_double(r.ratio) << '\n';
    }
  }
  if (c.json_out()) c.emit(rows);
  return exit_ok;
}

}  // namespace

int command_suite(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, exponential sums and bound audits for Piatetski-Shapiro primes", "pshua"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--cache", g.cache, "sieve cache file");
  app.add_option("--sieve-limit", g.sieve_limit, "largest integer the sieve may cover");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.seed, "seed for random audit grids")->each([&](const std::string&) { g.seed_set = true; });

  SieveArgs sieve_args;
  auto* sieve_cmd = app.add_subcommand("sieve", "build (and cache) the prime sieve");
  sieve_cmd->add_option("--limit", sieve_args.limit, "sieve limit (default: config sieve_limit)");

  PsArgs ps_list_args;
  auto* ps_list_cmd = app.add_subcommand("ps-list", "list Piatetski-Shapiro primes up to x");
  ps_list_cmd->add_option("--x", ps_list_args.x)->required();
  ps_list_cmd->add_option("--gamma", ps_list_args.gamma, "gamma as a/b");

  PsArgs ps_count_args;
  auto* ps_count_cmd = app.add_subcommand("ps-count", "count Piatetski-Shapiro primes up to x");
  ps_count_cmd->add_option("--x", ps_count_args.x)->required();
  ps_count_cmd->add_option("--gamma", ps_count_args.gamma, "gamma as a/b");
  ps_count_cmd->add_flag("--curve", ps_count_args.curve, "two-column density curve up to x");

  ExpsumArgs expsum_args;
  auto* expsum_cmd = app.add_subcommand("expsum", "evaluate S1, S3, T1 or T3");
  expsum_cmd->add_option("--kind", expsum_args.kind)->check(CLI::IsMember({"S1", "S3", "T1", "T3"}));
  expsum_cmd->add_option("--N", expsum_args.N)->required();
  expsum_cmd->add_option("--alpha", expsum_args.alpha, "a/q or a/q+lambda");
  expsum_cmd->add_option("--gamma", expsum_args.gamma, "gamma as a/b (T sums)");

  SingularArgs singular_args;
  auto* singular_cmd = app.add_subcommand("singular", "truncated singular series");
  singular_cmd->add_option("--N", singular_args.N)->required();
  singular_cmd->add_option("--k", singular_args.k)->check(CLI::Range(1u, 3u));
  singular_cmd->add_option("--cutoff", singular_args.cutoff);
  singular_cmd->add_flag("--vinogradov", singular_args.vinogradov, "ternary Goldbach series (odd N)");

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "exact count of N = p1 + p2 + p3^k");
  count_cmd->add_option("--N", count_args.N)->required();
  count_cmd->add_option("--k", count_args.k)->check(CLI::Range(1u, 3u));
  count_cmd->add_option("--gamma1", count_args.g1);
  count_cmd->add_option("--gamma2", count_args.g2);
  count_cmd->add_option("--gamma3", count_args.g3);
  count_cmd->add_flag("--weighted", count_args.weighted);

  IntegralArgs integral_args;
  auto* integral_cmd = app.add_subcommand("integral", "circle integral of a product of sums");
  integral_cmd->add_option("--N", integral_args.N)->required();
  integral_cmd->add_option("--factor", integral_args.factors, "S1, S3, T1:a/b, T3:a/b (repeat)");
  integral_cmd->add_option("--domain", integral_args.domain)->check(CLI::IsMember({"full", "major", "minor"}));
  integral_cmd->add_option("--sigma", integral_args.sigma, "arc parameter in (0, 1/6]");
  integral_cmd->add_option("--samples", integral_args.samples);
  integral_cmd->add_option("--tolerance", integral_args.tolerance);

  AdmissibleArgs adm_args;
  auto* adm_cmd = app.add_subcommand("admissible", "constraint check, threshold solve, exponent table");
  adm_cmd->add_option("--scenario", adm_args.scenario)
      ->check(CLI::IsMember({"equal-gammas", "unit-linear-gammas", "gamma3-free"}));
  adm_cmd->add_option("--variant", adm_args.variant)->check(CLI::IsMember({"as-proved", "as-stated", "both"}));
  adm_cmd->add_option("--tuple", adm_args.tuple, "gamma1,gamma2,gamma3,delta1,delta3");
  adm_cmd->add_flag("--type-I", adm_args.type_one, "exponent table for --gamma, --delta");
  adm_cmd->add_option("--gamma", adm_args.gamma);
  adm_cmd->add_option("--delta", adm_args.delta);

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "bound audits with calibrated constants");
  std::vector<std::string> lemma_choices = audit_names();
  lemma_choices.insert(lemma_choices.end(), {"heath-brown", "t1-gap", "all"});
  audit_cmd->add_option("--lemma", audit_args.lemmas)->check(CLI::IsMember(lemma_choices));
  audit_cmd->add_option("--steps", audit_args.steps)->check(CLI::Range(1u, 6u));
  audit_cmd->add_option("--slack", audit_args.slack)->check(CLI::PositiveNumber);
  audit_cmd->add_option("--N", audit_args.N, "t1-gap length");
  audit_cmd->add_option("--gamma", audit_args.gamma, "t1-gap gamma");
  audit_cmd->add_option("--delta1", audit_args.delta1, "t1-gap delta1");
  audit_cmd->add_option("--n-max", audit_args.n_max, "heath-brown range");

  CompareArgs cmp_args;
  auto* cmp_cmd = app.add_subcommand("compare", "exact count versus main term over an N range");
  cmp_cmd->add_option("--from", cmp_args.from)->required();
  cmp_cmd->add_option("--to", cmp_args.to)->required();
  cmp_cmd->add_option("--step", cmp_args.step);
  cmp_cmd->add_option("--k", cmp_args.k)->check(CLI::Range(1u, 3u));
  cmp_cmd->add_option("--cutoff", cmp_args.cutoff);

  std::vector<std::string> argv_store = {"pshua"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    Context ctx{g.config_path.empty() ? RunConfig{} : load_config(g.config_path), std::nullopt, out};
    if (!g.format.empty()) ctx.config.output_format = g.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (g.sieve_limit) ctx.config.sieve_limit = g.sieve_limit;
    if (g.threads) ctx.config.threads = g.threads;
    if (g.seed_set) ctx.config.seed = g.seed;
    if (!g.cache.empty()) ctx.cache_flag = std::filesystem::path(g.cache);

    if (*sieve_cmd) return run_sieve(ctx, sieve_args);
    if (*ps_list_cmd) return run_ps_list(ctx, ps_list_args);
    if (*ps_count_cmd) return run_ps_count(ctx, ps_count_args);
    if (*expsum_cmd) return run_expsum(ctx, expsum_args);
    if (*singular_cmd) return run_singular(ctx, singular_args);
    if (*count_cmd) return run_count(ctx, count_args);
    if (*integral_cmd) return run_integral(ctx, integral_args);
    if (*adm_cmd) return run_admissible(ctx, adm_args);
    if (*audit_cmd) return run_audit(ctx, audit_args);
    if (*cmp_cmd) return run_compare(ctx, cmp_args);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return exit_capacity;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace pshua
