#pragma once

// Command-line front end: flag parsing (CLI11), dispatch, and report output.
//
// Exit codes: 0 every verdict passed, 1 some verification failed, 2 bad
// arguments, 3 internal consistency error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncsieve/io.hpp"
#include "ncsieve/sieving.hpp"

namespace ncsieve::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Enumeration-backed work above this n is refused (X_16 has 35 million elements).
inline constexpr int kMaxEnumerationN = 15;

enum class Command { Enumerate, Stats, Bijection, Poly, Verify };
enum class Target { Csp, Reflection, Dihedral, Fd, Statistics, Multinomial, Lemma42, All };
enum class Format { Json, Tsv, Table };

struct RunConfig {
  Command command = Command::Verify;
  int n_from = 1;
  int n_to = 1;
  Target target = Target::All;
  Format format = Format::Json;
  std::optional<std::string> out;
  std::string which = "qcatalan";  // poly
  long k = 0;                      // poly
  std::optional<std::string> configuration;  // bijection, JSON record
  std::optional<std::string> path;           // bijection, sigma bits
};

inline const std::map<std::string, Target>& target_names() {
  static const std::map<std::string, Target> names{
      {"csp", Target::Csp},     {"reflection", Target::Reflection}, {"dihedral", Target::Dihedral},
      {"fd", Target::Fd},       {"statistics", Target::Statistics}, {"multinomial", Target::Multinomial},
      {"lemma42", Target::Lemma42}, {"all", Target::All}};
  return names;
}

inline std::string target_name(Target t) {
  for (const auto& [k, v] : target_names()) {
    if (v == t) return k;
  }
  return "?";
}

inline const std::vector<std::string>& poly_names() {
  static const std::vector<std::string> names{"qint",     "qfactorial", "qbinomial", "qcatalan",
                                              "fd",       "shifted-fd", "cyclotomic", "fib",
                                              "fibonomial", "fibcatalan"};
  return names;
}

// Writes records in the chosen format. tsv rows are (record, JSON pointer,
// JSON value) for every scalar and empty container, so the json records can
// be rebuilt exactly from them.
class Emitter {
 public:
  Emitter(std::ostream& os, Format format) : os_(os), format_(format) {}

  void emit(const io::Json& record) {
    switch (format_) {
      case Format::Json:
        os_ << record.dump() << '\n';
        break;
      case Format::Tsv: {
        if (record_ == 0) os_ << "record\tpath\tvalue\n";
        leaves(record, io::Json::json_pointer());
        break;
      }
      case Format::Table:
        table(record);
        break;
    }
    ++record_;
  }

 private:
  // One row per scalar or empty container, keyed by JSON pointer.
  void leaves(const io::Json& v, const io::Json::json_pointer& at) {
    if (v.is_structured() && !v.empty()) {
      for (const auto& [key, child] : v.items()) leaves(child, at / key);
      return;
    }
    os_ << record_ << '\t' << at.to_string() << '\t' << v.dump() << '\n';
  }

  static std::string cell(const io::Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  void table(const io::Json& record) {
    if (!record.contains("entries")) {
      // bare records (configurations, bijection rows): one line each
      os_ << cell(record) << '\n';
      return;
    }
    for (const auto& [key, value] : record.items()) {
      if (key == "entries") continue;
      os_ << key << ": " << cell(value) << '\n';
    }
    const auto& entries = record["entries"];
    if (entries.empty()) return;
    std::vector<std::string> cols;
    for (const auto& [key, value] : entries.front().items()) cols.push_back(key);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& e : entries) {
      std::vector<std::string> row;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        row.push_back(e.contains(cols[i]) ? cell(e[cols[i]]) : "");
        width[i] = std::max(width[i], row.back().size());
      }
      rows.push_back(std::move(row));
    }
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os_ << "  " << std::left << std::setw(static_cast<int>(width[i])) << r[i];
      }
      os_ << '\n';
    };
    line(cols);
    for (const auto& r : rows) line(r);
    os_ << '\n';
  }

  std::ostream& os_;
  Format format_;
  std::size_t record_ = 0;
};

namespace detail {

inline io::Json header(const std::string& command, io::Json parameters, bool verdict) {
  return io::Json{{"command", command}, {"parameters", std::move(parameters)}, {"verdict", verdict}};
}

// report body fields appended after the header
inline io::Json with_body(io::Json head, const io::Json& body) {
  for (const auto& [k, v] : body.items()) head[k] = v;
  return head;
}

inline void require_enumerable(int n) {
  if (n > kMaxEnumerationN) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                                std::to_string(kMaxEnumerationN));
  }
}

inline io::Json bijection_row(const Configuration& x, const DyckPath& p) {
  const auto nps = phi1(x);
  const auto ops = phi(nps);
  const bool ok = maj(p) == cwt(x) && from_dyck(p) == x && to_dyck(x) == p;
  return io::Json{{"configuration", io::to_json(x)},
                  {"nps", io::to_json(nps)},
                  {"ops", io::to_json(ops)},
                  {"dyck", p.bits()},
                  {"cwt", cwt(x)},
                  {"maj", maj(p)},
                  {"match", ok}};
}

inline std::vector<Target> expand(Target t) {
  if (t != Target::All) return {t};
  return {Target::Statistics, Target::Csp,         Target::Reflection, Target::Fd,
          Target::Multinomial, Target::Dihedral,   Target::Lemma42};
}

inline int min_n(Target t) { return t == Target::Statistics || t == Target::Lemma42 ? 1 : 2; }

inline bool enumerates(Target t) {
  return t == Target::Statistics || t == Target::Csp || t == Target::Reflection || t == Target::Dihedral;
}

}  // namespace detail

inline io::Json verify_record(Target target, int n) {
  io::Json params{{"target", target_name(target)}, {"n", n}};
  switch (target) {
    case Target::Csp: {
      const auto r = verify_cyclic_csp(n);
      return detail::with_body(detail::header("verify", params, r.verdict), io::to_json(r));
    }
    case Target::Reflection: {
      const auto r = verify_reflection_csp(n);
      return detail::with_body(detail::header("verify", params, r.verdict), io::to_json(r));
    }
    case Target::Dihedral: {
      const auto r = verify_dihedral(n);
      return detail::with_body(detail::header("verify", params, r.verdict), io::to_json(r));
    }
    case Target::Fd: {
      const auto r = verify_fd_congruence(n);
      return detail::with_body(detail::header("verify", params, r.verdict), io::to_json(r));
    }
    case Target::Statistics: {
      const auto r = verify_statistics(n);
      return detail::with_body(detail::header("verify", params, r.verdict), io::to_json(r));
    }
    case Target::Multinomial: {
      const auto r = verify_multinomial_roots(n);
      return detail::with_body(detail::header("verify", params, r.verdict), io::to_json(r));
    }
    case Target::Lemma42: {
      io::Json entries = io::Json::array();
      bool all = true;
      for (long k = 0; k <= n; ++k) {
        const auto r = lemma42_check(n, k);
        all = all && r.holds;
        entries.push_back(io::to_json(r));
      }
      return detail::with_body(detail::header("verify", params, all), io::Json{{"entries", entries}});
    }
    case Target::All:
      break;
  }
  throw std::invalid_argument("verify_record: target 'all' must be expanded");
}

inline io::Json poly_record(const std::string& which, int n, long k) {
  io::Json params{{"which", which}, {"n", n}};
  const bool uses_k = which == "qbinomial" || which == "fibonomial";
  if (uses_k) params["k"] = k;
  io::Json entry;
  auto univariate = [&](const IntPolynomial& p) {
    entry = io::Json{{"coefficients", io::integers(p.coeffs())}, {"terms", io::polynomial_terms(p)}};
  };
  if (which == "qint") univariate(q_int(n));
  else if (which == "qfactorial") univariate(q_factorial(n));
  else if (which == "qbinomial") univariate(q_binomial(n, k));
  else if (which == "qcatalan") univariate(q_catalan(n));
  else if (which == "fd") univariate(fake_degree_poly(n));
  else if (which == "shifted-fd") univariate(shifted_fake_degree(n));
  else if (which == "cyclotomic") univariate(cyclotomic(n));
  else if (which == "fib") entry = io::Json{{"terms", io::polynomial_terms(fib_poly(n))}};
  else if (which == "fibonomial") entry = io::Json{{"terms", io::polynomial_terms(fibonomial(n, k))}};
  else if (which == "fibcatalan") entry = io::Json{{"terms", io::polynomial_terms(fibonomial_catalan(n))}};
  else throw std::invalid_argument("unknown polynomial '" + which + "'");
  return detail::with_body(detail::header("poly", params, true), io::Json{{"entries", io::Json::array({entry})}});
}

// Calls body() and maps its outcome to an exit code; exceptions are
// reported on `err`.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// Runs one parsed invocation, writing records to `out` and notices to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.n_from < 1 || cfg.n_from > cfg.n_to) {
      throw std::invalid_argument("need 1 <= n-from <= n-to");
    }
    Emitter emit(out, cfg.format);
    bool pass = true;

    switch (cfg.command) {
      case Command::Enumerate:
        for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
          detail::require_enumerable(n);
          for (const auto& x : enumerate_configurations(n)) emit.emit(io::to_json(x));
        }
        break;

      case Command::Stats:
        for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
          detail::require_enumerable(n);
          const auto cat = q_catalan(n).coeffs();
          const auto cwt_dist = ncsieve::detail::dense_histogram(cwt_histogram(n));
          const auto maj_dist = ncsieve::detail::dense_histogram(maj_histogram(n));
          const bool ok = cwt_dist == cat && maj_dist == cat;
          pass = pass && ok;
          io::Json entries = io::Json::array();
          entries.push_back(io::Json{{"statistic", "cwt"}, {"distribution", io::integers(cwt_dist)}});
          entries.push_back(io::Json{{"statistic", "maj"}, {"distribution", io::integers(maj_dist)}});
          entries.push_back(io::Json{{"statistic", "q_catalan"}, {"distribution", io::integers(cat)}});
          emit.emit(detail::with_body(detail::header("stats", {{"n", n}}, ok), {{"entries", entries}}));
        }
        break;

      case Command::Bijection:
        if (cfg.configuration) {
          const auto x = io::configuration_from_json(io::Json::parse(*cfg.configuration));
          const auto row = detail::bijection_row(x, to_dyck(x));
          pass = row["match"].get<bool>();
          emit.emit(row);
        } else if (cfg.path) {
          const auto p = DyckPath::from_bits(*cfg.path);
          const auto row = detail::bijection_row(from_dyck(p), p);
          pass = row["match"].get<bool>();
          emit.emit(row);
        } else {
          for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
            detail::require_enumerable(n);
            for (const auto& x : enumerate_configurations(n)) {
              const auto row = detail::bijection_row(x, to_dyck(x));
              pass = pass && row["match"].get<bool>();
              emit.emit(row);
            }
          }
        }
        break;

      case Command::Poly:
        for (int n = cfg.n_from; n <= cfg.n_to; ++n) emit.emit(poly_record(cfg.which, n, cfg.k));
        break;

      case Command::Verify: {
        const bool explicit_target = cfg.target != Target::All;
        for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
          for (Target t : detail::expand(cfg.target)) {
            std::string skip;
            if (n < detail::min_n(t)) skip = "needs n >= " + std::to_string(detail::min_n(t));
            else if (t == Target::Dihedral && n % 2 != 0) skip = "is defined for even n only";
            if (!skip.empty()) {
              if (explicit_target && t != Target::Dihedral) {
                throw std::invalid_argument("target " + target_name(t) + " " + skip);
              }
              err << "notice: skipping target " << target_name(t) << " at n=" << n << " (" << skip << ")\n";
              continue;
            }
            if (detail::enumerates(t)) detail::require_enumerable(n);
            const auto record = verify_record(t, n);
            pass = pass && record["verdict"].get<bool>();
            emit.emit(record);
          }
        }
        break;
      }
    }
    out.flush();
    return pass ? kExitPass : kExitFail;
  });
}

// Relative --out paths land under $NCSIEVE_OUT_DIR when it is set.
inline std::filesystem::path resolve_output(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("NCSIEVE_OUT_DIR"); dir && *dir) return std::filesystem::path(dir) / p;
  }
  return p;
}

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitPass;  // meaningful when config is empty
};

inline ParseResult parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncrossing (1,2)-configurations: enumeration, statistics and sieving checks", "ncsieve"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<int> n;
  std::optional<int> n_from;
  std::optional<int> n_to;
  std::string format = "json";
  std::string target = "all";
  std::string out_path;

  auto range_flags = [&](CLI::App* sub) {
    auto* single = sub->add_option("--n", n, "parameter n (ground set {1..n-1})");
    auto* lo = sub->add_option("--n-from", n_from, "first n of a range");
    auto* hi = sub->add_option("--n-to", n_to, "last n of a range");
    single->excludes(lo)->excludes(hi);
    lo->needs(hi);
    hi->needs(lo);
    sub->add_option("--format", format, "json, tsv or table")
        ->check(CLI::IsMember({"json", "tsv", "table"}));
    sub->add_option("--out", out_path, "write output to this file");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list X_n in canonical order");
  range_flags(enumerate);
  auto* stats = app.add_subcommand("stats", "cwt and maj distributions against Cat_n(q)");
  range_flags(stats);
  auto* bijection = app.add_subcommand("bijection", "configuration <-> Dyck path correspondence");
  range_flags(bijection);
  std::string config_json;
  std::string path_bits;
  bijection->add_option("--config", config_json, "single configuration as a JSON record");
  bijection->add_option("--path", path_bits, "single Dyck path as a 0/1 string");
  auto* poly = app.add_subcommand("poly", "print a polynomial");
  range_flags(poly);
  poly->add_option("--which", cfg.which, "polynomial family")->check(CLI::IsMember(poly_names()));
  poly->add_option("--k", cfg.k, "second index for qbinomial / fibonomial");
  auto* verify = app.add_subcommand("verify", "run the sieving and equidistribution checks");
  range_flags(verify);
  std::vector<std::string> target_list;
  for (const auto& [k, v] : target_names()) target_list.push_back(k);
  verify->add_option("--target", target, "what to verify")->check(CLI::IsMember(target_list));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitPass};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return {std::nullopt, kExitUsage};
  }

  if (enumerate->parsed()) cfg.command = Command::Enumerate;
  else if (stats->parsed()) cfg.command = Command::Stats;
  else if (bijection->parsed()) cfg.command = Command::Bijection;
  else if (poly->parsed()) cfg.command = Command::Poly;
  else cfg.command = Command::Verify;

  const bool single_object = !config_json.empty() || !path_bits.empty();
  if (n) {
    cfg.n_from = cfg.n_to = *n;
  } else if (n_from) {
    cfg.n_from = *n_from;
    cfg.n_to = *n_to;
  } else if (!single_object) {
    err << "error: one of --n or --n-from/--n-to is required\n" << app.help();
    return {std::nullopt, kExitUsage};
  }
  if (!config_json.empty()) cfg.configuration = config_json;
  if (!path_bits.empty()) cfg.path = path_bits;
  cfg.format = format == "tsv" ? Format::Tsv : format == "table" ? Format::Table : Format::Json;
  cfg.target = target_names().at(target);
  if (!out_path.empty()) cfg.out = out_path;
  return {cfg, kExitPass};
}

// Full entry point: parse, open the output, run.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  const RunConfig& cfg = *parsed.config;
  if (!cfg.out) return run(cfg, out, err);
  const auto path = resolve_output(*cfg.out);
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open " << path.string() << " for writing\n";
    return kExitUsage;
  }
  return run(cfg, file, err);
}

}  // namespace ncsieve::cli
