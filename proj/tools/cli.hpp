#ifndef CIRCULANT_TOOLS_CLI_HPP
#define CIRCULANT_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <circulant/circulant.hpp>
#include <circulant/report.hpp>

namespace circulant::cli {

enum ExitCode : int { ok = 0, usage_error = 1, mismatch_found = 2, capacity_exceeded = 3 };

enum class Format { text, json, dot };

struct RunConfig
{
  std::string command;
  std::string instance;                // "n=..; S=..", analyze/decompose/witness/verify
  std::uint64_t n = 0;                 // poset, sample
  std::uint64_t p = 0;                 // generate
  std::vector<unsigned> layers;        // generate
  std::optional<std::uint64_t> prime;  // decompose filter
  std::size_t element_cap = default_element_cap;
  std::size_t vertex_cap = default_vertex_cap;
  Format format = Format::text;
  bool strip_loops = false;
  bool strict = false;
  std::uint64_t seed = 1;
  std::size_t count = 10;              // sample
  std::string corpus;                  // batch
};

namespace detail {

inline std::string group_list(std::vector<AbelianType> const &groups)
{
  std::string out = "[";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += groups[i].to_invariant_string();
  }
  return out + "]";
}

inline std::string join(std::vector<unsigned> const &v, char const *sep = ",")
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0)
      out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

inline ConnectionSet load_instance(RunConfig const &config, std::ostream &err)
{
  auto parsed = parse_connection_set(config.instance);
  for (auto const &w : parsed.warnings)
    err << "warning: " << w << '\n';
  return config.strip_loops ? parsed.set.without_identity() : parsed.set;
}

inline void print_verification(std::ostream &out, ValidationReport const &r, Format format)
{
  if (format == Format::json) {
    out << to_json(r).dump() << '\n';
    return;
  }
  out << r.s.to_string() << '\n'
      << "predicted=" << group_list(r.predicted) << " exact=" << (r.exact ? "true" : "false")
      << '\n';
  if (r.actual)
    out << "actual=" << group_list(*r.actual);
  else
    out << "actual=(not computed)";
  if (r.automorphism_order)
    out << " |Aut|=" << *r.automorphism_order;
  out << '\n';
  if (!r.capped_reason.empty())
    out << "capped: " << r.capped_reason << '\n';
  out << "verdict=" << to_string(r.verdict) << '\n';
}

inline int verdict_exit(std::vector<ValidationReport> const &reports, bool strict)
{
  int code = ok;
  for (auto const &r : reports) {
    if (r.verdict == Verdict::mismatch)
      return mismatch_found;
    if (r.verdict == Verdict::oracle_capped && strict)
      code = capacity_exceeded;
  }
  return code;
}

inline int analyze(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  auto s = load_instance(config, err);
  if (config.format == Format::json) {
    out << analysis_json(s).dump() << '\n';
    return ok;
  }
  auto d = decompose(s);
  auto r = realizable_groups(d);
  out << s.to_string() << '\n'
      << "arithmetic_condition=" << (arithmetic_condition(s.n()) ? "true" : "false") << '\n';
  for (auto const &pl : d.primes)
    out << "p=" << pl.p << " a=" << pl.a << " valid_levels={" << join(pl.valid_levels)
        << "} layers=" << join(pl.layer_sizes) << '\n';
  auto h = minimal_group(d);
  out << "minimal=" << h.to_invariant_string() << " (" << h.to_string() << ")\n"
      << "realizable=" << group_list(r.groups) << '\n'
      << "exact=" << (r.exact ? "true" : "false") << '\n';
  return ok;
}

inline int decompose_cmd(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  auto s = load_instance(config, err);
  auto d = decompose(s);
  if (config.prime && !d.for_prime(*config.prime)) {
    err << "error: " << *config.prime << " is not a prime divisor of " << s.n() << '\n';
    return usage_error;
  }
  Json per_prime = Json::array();
  for (auto const &pl : d.primes) {
    if (config.prime && pl.p != *config.prime)
      continue;
    if (config.format == Format::json)
      per_prime.push_back(to_json(pl));
    else
      out << "p=" << pl.p << " a=" << pl.a << " valid_levels={" << join(pl.valid_levels)
          << "} boundaries=" << join(pl.boundaries) << " layers=" << join(pl.layer_sizes)
          << " minimal_sylow=" << AbelianType({pl.minimal_sylow}).to_string() << '\n';
  }
  if (config.format == Format::json)
    out << Json{{"n", s.n()}, {"S", s.members()}, {"per_prime", per_prime}}.dump() << '\n';
  return ok;
}

inline int witness(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  auto s = load_instance(config, err);
  auto d = decompose(s);
  auto towers = product_type_witness(d);
  for (std::size_t i = 0; i < towers.size(); ++i) {
    auto const &pl = d.primes[i];
    if (config.format == Format::dot) {
      write_dot(out, towers[i], "W_" + std::to_string(pl.p));
    } else {
      out << "# p=" << pl.p << " layers=" << join(pl.tower_layers()) << '\n';
      write_edge_list(out, towers[i]);
    }
  }
  return ok;
}

inline int generate(RunConfig const &config, std::ostream &out, std::ostream &)
{
  if (config.p == 0 || config.layers.empty()) {
    throw std::invalid_argument("generate needs --p and --layers");
  }
  if (config.format == Format::dot) {
    write_dot(out, tower_digraph(config.p, config.layers), "Tower");
    return ok;
  }
  auto s = tower_connection_set(config.p, config.layers);
  if (config.format == Format::json)
    out << Json{{"p", config.p}, {"layers", config.layers}, {"n", s.n()}, {"S", s.members()}}.dump()
        << '\n';
  else
    out << s.to_string() << '\n';
  return ok;
}

inline int verify(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  auto s = load_instance(config, err);
  auto r = cross_validate(s, {config.element_cap, config.vertex_cap});
  print_verification(out, r, config.format);
  return verdict_exit({r}, config.strict);
}

inline int poset(RunConfig const &config, std::ostream &out, std::ostream &)
{
  if (config.n < 2)
    throw std::invalid_argument("poset needs n >= 2");
  auto groups = enumerate_abelian(config.n);
  auto edges = hasse_edges(config.n);
  if (config.format == Format::dot) {
    out << "digraph poset {\n";
    for (auto const &g : groups)
      out << "  \"" << g.to_string() << "\";\n";
    for (auto const &[lo, hi] : edges)
      out << "  \"" << lo.to_string() << "\" -> \"" << hi.to_string() << "\";\n";
    out << "}\n";
  } else if (config.format == Format::json) {
    Json e = Json::array();
    for (auto const &[lo, hi] : edges)
      e.push_back(Json::array({lo.to_string(), hi.to_string()}));
    out << Json{{"n", config.n}, {"groups", to_json(groups)}, {"covers", e}}.dump() << '\n';
  } else {
    out << groups.size() << " groups, " << edges.size() << " cover relations\n";
    for (auto const &[lo, hi] : edges)
      out << lo.to_string() << " < " << hi.to_string() << '\n';
  }
  return ok;
}

inline int sample(RunConfig const &config, std::ostream &out, std::ostream &)
{
  if (config.n < 1)
    throw std::invalid_argument("sample needs --n");
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.count; ++i) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t x = 0; x < config.n; ++x)
      if (rng() & 1u)
        members.push_back(x);
    out << ConnectionSet(config.n, std::move(members)).to_string() << '\n';
  }
  return ok;
}

/// One "n=..; S=.." instance per line; blank lines and '#' comments skipped.
/// Instances are validated in parallel; reports keep input order.
inline int batch(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  std::ifstream in(config.corpus);
  if (!in) {
    err << "error: cannot open corpus file '" << config.corpus << "'\n";
    return usage_error;
  }
  std::vector<ConnectionSet> instances;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    auto parsed = parse_connection_set(line, line_no);
    for (auto const &w : parsed.warnings)
      err << "warning: " << w << '\n';
    instances.push_back(config.strip_loops ? parsed.set.without_identity() : parsed.set);
  }

  std::vector<ValidationReport> reports(instances.size(), ValidationReport{ConnectionSet(1, {})});
  auto const workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < instances.size(); i += workers)
        reports[i] = cross_validate(instances[i], {config.element_cap, config.vertex_cap});
    }));
  for (auto &t : tasks)
    t.get();

  for (auto const &r : reports) {
    if (config.format == Format::json)
      out << to_json(r).dump() << '\n';
    else
      out << r.s.to_string() << "  predicted=" << group_list(r.predicted)
          << "  verdict=" << to_string(r.verdict) << '\n';
  }
  return verdict_exit(reports, config.strict);
}

} // namespace detail

/// Dispatches a parsed configuration. Parse and usage problems are reported on
/// `err` with exit code 1.
inline int run(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  try {
    if (config.command == "analyze")
      return detail::analyze(config, out, err);
    if (config.command == "decompose")
      return detail::decompose_cmd(config, out, err);
    if (config.command == "witness")
      return detail::witness(config, out, err);
    if (config.command == "generate")
      return detail::generate(config, out, err);
    if (config.command == "verify")
      return detail::verify(config, out, err);
    if (config.command == "poset")
      return detail::poset(config, out, err);
    if (config.command == "sample")
      return detail::sample(config, out, err);
    if (config.command == "batch")
      return detail::batch(config, out, err);
    err << "error: unknown command '" << config.command << "'\n";
    return usage_error;
  } catch (ParseError const &e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (CapacityError const &e) {
    err << "capacity error: " << e.what() << '\n';
    return capacity_exceeded;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (std::out_of_range const &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

} // namespace circulant::cli

#endif // CIRCULANT_TOOLS_CLI_HPP
