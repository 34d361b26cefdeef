#include "sspart/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sspart/bijection.hpp"
#include "sspart/correspondence.hpp"
#include "sspart/enumeration.hpp"
#include "sspart/json_io.hpp"
#include "sspart/render.hpp"

namespace sspart::cli {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::dimension_mismatch:
    case ErrorKind::closure_violation:
    case ErrorKind::invalid_fset:
    case ErrorKind::invalid_argument:
      return 1;
    case ErrorKind::cell_not_in_partition:
    case ErrorKind::invalid_move:
    case ErrorKind::empty_input:
    case ErrorKind::not_strongly_stable:
    case ErrorKind::not_totally_symmetric:
    case ErrorKind::not_symmetric:
    case ErrorKind::not_artinian:
    case ErrorKind::not_weakly_increasing:
    case ErrorKind::missing_pure_power:
    case ErrorKind::unsupported_dimension:
    case ErrorKind::non_integer_product:
    case ErrorKind::inexact_division:
      return 2;
    case ErrorKind::resource_limit:
      return 3;
  }
  return 2;
}

namespace {

using io::Json;

enum class Format { json, pretty };

struct Settings {
  std::string input = "-";
  Format format = Format::json;
  std::size_t d = 0;
  exponent_t n = 0;
  std::string predicate;
  std::string style = "ferrers";
  unsigned threads = 1;
  std::uint64_t budget = default_node_budget;
  bool list = false;
  bool via_psi = false;
  bool inverse = false;
  bool product = false;
};

class Session {
public:
  Session(const Settings& s, std::istream& in, std::ostream& out)
      : s_(s), in_(in), out_(out) {}

  Json read_document() const {
    std::string text;
    if (s_.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream file(s_.input);
      if (!file) throw Error(ErrorKind::parse, "cannot open " + s_.input);
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return io::parse(text);
  }

  EnumerationOptions enumeration() const {
    EnumerationOptions opts;
    opts.threads = s_.threads == 0 ? 1 : s_.threads;
    opts.node_budget = s_.budget;
    return opts;
  }

  void emit(const Json& j) const { out_ << j.dump() << '\n'; }

  void emit_partition(const Partition& p) const {
    if (s_.format == Format::json) return emit(io::to_json(p));
    if (p.dim() == 2) {
      out_ << render(p, RenderStyle::ferrers);
    } else if (p.dim() == 3) {
      out_ << render(p, RenderStyle::matrix);
    } else {
      for (const Cell& c : p.cells()) out_ << to_string(c) << '\n';
    }
  }

  void emit_ideal(const MonomialIdeal& ideal) const {
    if (s_.format == Format::json) return emit(io::to_json(ideal));
    out_ << io::pretty(ideal) << '\n';
  }

  void emit_fset(const FSet& set) const {
    if (s_.format == Format::json) return emit(io::to_json(set));
    out_ << pretty_set(set.elements()) << " side " << set.side() << '\n';
  }

  static std::string pretty_set(std::span<const Monomial> monomials) {
    std::string out = "{";
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      if (i) out += ", ";
      out += io::pretty(monomials[i]);
    }
    return out + "}";
  }

  static const char* yes_no(bool b) { return b ? "yes" : "no"; }

  void check_partition() const {
    Partition p = io::partition_from_json(read_document());
    const bool ss = is_strongly_stable_partition(p);
    const bool ts = is_totally_symmetric_partition(p);
    if (s_.format == Format::pretty) {
      out_ << "valid partition: " << p.size() << " cells, side "
           << bounding_side(p) << ", " << orbit_count(p)
           << " orbits, strongly stable: " << yes_no(ss)
           << ", totally symmetric: " << yes_no(ts) << '\n';
      return;
    }
    Json j;
    j["valid"] = true;
    j["dim"] = p.dim();
    j["cells"] = p.size();
    j["side"] = bounding_side(p);
    j["orbits"] = orbit_count(p);
    j["strongly_stable"] = ss;
    j["totally_symmetric"] = ts;
    emit(j);
  }

  void check_ideal() const {
    MonomialIdeal ideal = io::ideal_from_json(read_document());
    auto side = artinian_side(ideal);
    const bool ss = is_strongly_stable_ideal(ideal);
    const bool sym = is_symmetric_ideal(ideal);
    if (s_.format == Format::pretty) {
      out_ << io::pretty(ideal) << '\n'
           << "artinian: " << yes_no(side.has_value());
      if (side) out_ << " (side " << *side << ")";
      out_ << "\nstrongly stable: " << yes_no(ss)
           << "\nsymmetric: " << yes_no(sym) << '\n';
      return;
    }
    Json degrees = Json::array();
    for (const auto& k : pure_power_degrees(ideal)) {
      degrees.push_back(k ? Json(*k) : Json(nullptr));
    }
    Json j = io::to_json(ideal);
    j["artinian"] = side.has_value();
    j["side"] = side ? Json(*side) : Json(nullptr);
    j["pure_power_degrees"] = degrees;
    j["strongly_stable"] = ss;
    j["symmetric"] = sym;
    emit(j);
  }

  void ideal2partition() const {
    emit_partition(ideal_to_partition(io::ideal_from_json(read_document())));
  }

  void partition2ideal() const {
    emit_ideal(partition_to_ideal(io::partition_from_json(read_document())));
  }

  void bgens_cmd() const {
    MonomialIdeal ideal = io::ideal_from_json(read_document());
    auto gens = s_.via_psi ? bgens_via_psi(ideal) : bgens(ideal);
    std::sort(gens.begin(), gens.end(), std::greater<>{});
    if (s_.format == Format::pretty) {
      out_ << pretty_set(gens) << '\n';
      return;
    }
    Json j;
    j["bgens"] = io::to_json(std::span<const Monomial>(gens));
    emit(j);
  }

  void closure() const {
    std::size_t dim = 0;
    auto monomials = io::monomials_from_json(read_document(), dim);
    emit_ideal(borel_closure(monomials));
  }

  void ss2ts() const {
    emit_partition(ss_to_ts_partition(io::partition_from_json(read_document())));
  }

  void ts2ss() const {
    emit_partition(ts_to_ss_partition(io::partition_from_json(read_document())));
  }

  void lambda_cmd() const {
    if (s_.inverse) {
      emit_ideal(lambda_inv(io::fset_from_json(read_document())));
    } else {
      emit_fset(lambda_map(io::ideal_from_json(read_document())));
    }
  }

  void omega_cmd() const {
    if (s_.inverse) {
      emit_fset(omega_inv(io::ideal_from_json(read_document())));
    } else {
      emit_ideal(omega(io::fset_from_json(read_document())));
    }
  }

  Predicate predicate_or(Predicate fallback) const {
    if (s_.predicate.empty()) return fallback;
    if (s_.predicate == "ss") return Predicate::strongly_stable;
    if (s_.predicate == "ts") return Predicate::totally_symmetric;
    return Predicate::all;
  }

  void count() const {
    require_dim();
    const auto opts = enumeration();
    if (s_.list) {
      enumerate_partitions(
          s_.d, s_.n, predicate_or(Predicate::all),
          [&](const Partition& p) { out_ << io::to_json(p).dump() << '\n'; },
          opts);
      return;
    }
    std::vector<std::pair<const char*, std::vector<BigInt>>> columns;
    if (s_.predicate.empty() || s_.predicate == "ss") {
      columns.emplace_back(
          "B", cumulative_counts(s_.d, s_.n, Predicate::strongly_stable, opts));
    }
    if (s_.predicate.empty() || s_.predicate == "ts") {
      columns.emplace_back(
          "T", cumulative_counts(s_.d, s_.n, Predicate::totally_symmetric, opts));
    }
    if (s_.predicate == "all") {
      columns.emplace_back("P",
                           cumulative_counts(s_.d, s_.n, Predicate::all, opts));
    }
    if (s_.format == Format::pretty) {
      out_ << "n";
      for (const auto& [name, _] : columns) out_ << '\t' << name;
      out_ << '\n';
      for (exponent_t k = 0; k <= s_.n; ++k) {
        out_ << k;
        for (const auto& [_, values] : columns) out_ << '\t' << values[k];
        out_ << '\n';
      }
      return;
    }
    Json j;
    j["d"] = s_.d;
    j["n"] = s_.n;
    for (const auto& [name, values] : columns) {
      Json arr = Json::array();
      for (const BigInt& v : values) arr.push_back(io::to_json(v));
      j[name] = arr;
    }
    emit(j);
  }

  void gf() const {
    QPolynomial poly;
    std::string kind;
    if (s_.product) {
      if (s_.d != 0 && s_.d != 3) {
        throw Error(ErrorKind::unsupported_dimension,
                    "the product formula is for d = 3");
      }
      poly = qtspp(s_.n);
      kind = "qtspp";
    } else {
      require_dim();
      if (s_.predicate == "ss") {
        poly = cell_gf_ss(s_.d, s_.n, enumeration());
        kind = "cells";
      } else if (s_.predicate == "ts") {
        poly = orbit_gf_ts(s_.d, s_.n, enumeration());
        kind = "orbits";
      } else {
        throw Error(ErrorKind::invalid_argument,
                    "gf needs --predicate ss, --predicate ts, or --product");
      }
    }
    if (s_.format == Format::pretty) {
      out_ << to_string(poly) << '\n';
      return;
    }
    Json j;
    j["d"] = s_.product ? 3 : s_.d;
    j["n"] = s_.n;
    j["kind"] = kind;
    j["coefficients"] = io::to_json(poly);
    emit(j);
  }

  void hawkes() const {
    require_dim();
    auto check = hawkes_check(s_.d, s_.n, enumeration());
    if (s_.format == Format::pretty) {
      out_ << "B_" << s_.d << "(" << s_.n << ") = " << check.lhs << ", B_"
           << (s_.n - 1) << "(" << (s_.d + 1) << ") = " << check.rhs << ": "
           << (check.holds ? "equal" : "DIFFERENT") << '\n';
      return;
    }
    Json j;
    j["d"] = s_.d;
    j["n"] = s_.n;
    j["lhs"] = io::to_json(check.lhs);
    j["rhs"] = io::to_json(check.rhs);
    j["holds"] = check.holds;
    emit(j);
  }

  void render_cmd() const {
    Partition p = io::partition_from_json(read_document());
    out_ << render(p, s_.style == "matrix" ? RenderStyle::matrix
                                            : RenderStyle::ferrers);
  }

private:
  void require_dim() const {
    if (s_.d == 0) throw Error(ErrorKind::invalid_argument, "--d must be positive");
  }

  const Settings& s_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Strongly stable and totally symmetric partitions",
               "sspart"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::json},
                                              {"pretty", Format::pretty}};
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", s.input, "JSON document (default: stdin)");
    sub->add_option("--format", s.format, "json or pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    return sub;
  };
  auto with_box = [&](CLI::App* sub) {
    sub->add_option("--d", s.d, "dimension")->required();
    sub->add_option("--n", s.n, "box side")->required();
    sub->add_option("--threads", s.threads, "worker threads");
    sub->add_option("--budget", s.budget, "search node budget");
    sub->add_option("--format", s.format, "json or pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    return sub;
  };

  std::vector<std::pair<CLI::App*, void (Session::*)() const>> handlers;
  auto sub = [&](const char* name, const char* help,
                 void (Session::*handler)() const) {
    CLI::App* cmd = app.add_subcommand(name, help);
    handlers.emplace_back(cmd, handler);
    return cmd;
  };

  with_input(sub("check-partition", "validate a partition",
                 &Session::check_partition));
  with_input(sub("check-ideal", "classify a monomial ideal",
                 &Session::check_ideal));
  with_input(sub("ideal2partition", "monomials outside an Artinian ideal",
                 &Session::ideal2partition));
  with_input(sub("partition2ideal", "ideal of monomials outside a partition",
                 &Session::partition2ideal));
  with_input(sub("bgens", "minimal Borel generators", &Session::bgens_cmd))
      ->add_flag("--via-psi", s.via_psi, "compute as psi^-1(min(psi(G(I))))");
  with_input(sub("closure", "smallest strongly stable ideal containing gens",
                 &Session::closure));
  with_input(sub("ss2ts", "strongly stable -> totally symmetric partition",
                 &Session::ss2ts));
  with_input(sub("ts2ss", "totally symmetric -> strongly stable partition",
                 &Session::ts2ss));
  with_input(sub("lambda", "ideal -> F-set (--inverse: F-set -> ideal)",
                 &Session::lambda_cmd))
      ->add_flag("--inverse", s.inverse, "apply the inverse map");
  with_input(sub("omega", "F-set -> symmetric ideal (--inverse: back)",
                 &Session::omega_cmd))
      ->add_flag("--inverse", s.inverse, "apply the inverse map");

  const std::map<std::string, std::string> predicates{
      {"ss", "ss"}, {"ts", "ts"}, {"all", "all"}};
  CLI::App* count_cmd = with_box(
      sub("count", "B_d(k), T_d(k) for k = 0..n", &Session::count));
  count_cmd->add_option("--predicate", s.predicate, "ss, ts or all")
      ->transform(CLI::CheckedTransformer(predicates));
  count_cmd->add_flag("--list", s.list, "stream partitions, one per line");

  CLI::App* gf_cmd = sub("gf", "generating functions", &Session::gf);
  gf_cmd->add_option("--d", s.d, "dimension");
  gf_cmd->add_option("--n", s.n, "box side")->required();
  gf_cmd->add_option("--predicate", s.predicate, "ss (cells) or ts (orbits)")
      ->transform(CLI::CheckedTransformer(predicates));
  gf_cmd->add_flag("--product", s.product, "evaluate the q-product formula");
  gf_cmd->add_option("--threads", s.threads, "worker threads");
  gf_cmd->add_option("--budget", s.budget, "search node budget");
  gf_cmd->add_option("--format", s.format, "json or pretty")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  with_box(sub("hawkes", "check B_d(n) = B_{n-1}(d+1)", &Session::hawkes));

  CLI::App* render_cmd =
      sub("render", "ASCII picture of a partition", &Session::render_cmd);
  render_cmd->add_option("input", s.input, "JSON document (default: stdin)");
  render_cmd->add_option("--style", s.style, "ferrers (d=2) or matrix (d=3)")
      ->check(CLI::IsMember({"ferrers", "matrix"}));

  std::vector<std::string> argv_storage{"sspart"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Session session(s, in, out);
  try {
    for (const auto& [cmd, handler] : handlers) {
      if (cmd->parsed()) (session.*handler)();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace sspart::cli
