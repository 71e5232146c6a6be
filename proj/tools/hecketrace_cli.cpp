// Command-line front end. Exit codes: 0 pass, 1 verification failure, 2 usage or input error,
// 3 budget exceeded.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecketrace.hpp"

namespace ht = hecketrace;

namespace {

enum class Format { Text, Json, Csv };

struct Globals {
  bool json = false;
  bool csv = false;
  std::optional<std::size_t> max_order;
  std::uint64_t seed = 0;
  bool quiet = false;
  unsigned threads = 0;

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
  std::size_t order_budget() const { return max_order ? *max_order : ht::default_max_order(); }
};

enum class PolyView { Q, Tilde, Delta };

std::string delta_string(const std::vector<ht::Integer>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += (i > 0 ? "," : "") + coeffs[i].get_str();
  return out + "]";
}

std::string rational_string(const ht::Rational& x) { return x.get_str(); }

std::string entry_value(const ht::CountEntry& e) {
  return e.numeric ? rational_string(*e.numeric) : e.symbolic.to_string();
}

void emit_json(const ht::Json& j) { std::cout << j.dump() << "\n"; }

class Cli {
 public:
  explicit Cli(const Globals& g) : g_(g) {}

  std::unique_ptr<ht::HeckeContext> context(const std::string& type) const {
    return std::make_unique<ht::HeckeContext>(ht::parse_type(type, g_.order_budget()));
  }

  int group(const std::string& type) const {
    const auto ctx = context(type);
    const ht::CartanDatum& d = ctx->datum();
    switch (g_.format()) {
      case Format::Json: emit_json(ht::to_json(d)); break;
      case Format::Csv: {
        std::string degs;
        for (int x : d.degrees()) degs += (degs.empty() ? "" : " ") + std::to_string(x);
        std::cout << ht::csv_row({"type", "rank", "nu", "order", "degrees"})
                  << ht::csv_row({d.type_spec(), std::to_string(d.rank()), std::to_string(d.nu()),
                                  std::to_string(d.order()), degs});
        break;
      }
      case Format::Text: {
        std::cout << "type    " << d.type_spec() << "\nrank    " << d.rank() << "\nnu      " << d.nu()
                  << "\norder   " << d.order() << "\ndegrees";
        for (int x : d.degrees()) std::cout << " " << x;
        std::cout << "\nW(q)    " << d.poincare().to_string() << "\n";
        break;
      }
    }
    return 0;
  }

  int classes(const std::string& type) const {
    const auto ctx = context(type);
    const ht::CartanDatum& d = ctx->datum();
    if (g_.format() == Format::Json) {
      emit_json(ht::classes_json(d));
      return 0;
    }
    if (g_.format() == Format::Csv) std::cout << ht::csv_row({"index", "representative", "size", "min_length", "elliptic", "char_poly"});
    for (std::size_t k = 0; k < d.classes().size(); ++k) {
      const ht::ConjClass& c = d.classes()[k];
      const std::string rep = ht::word_to_string(d.reduced_word(c.minimal_elements.front()));
      if (g_.format() == Format::Csv) {
        std::cout << ht::csv_row({std::to_string(k), rep, std::to_string(c.members.size()), std::to_string(c.min_length),
                                  c.is_elliptic ? "true" : "false", c.char_poly.to_string()});
      } else {
        std::cout << k << "  rep=" << rep << "  size=" << c.members.size() << "  min_length=" << c.min_length
                  << (c.is_elliptic ? "  elliptic" : "") << "  det(q-y)=" << c.char_poly.to_string() << "\n";
      }
    }
    return 0;
  }

  int trace(const std::string& type, const std::string& word, PolyView view) const {
    const auto ctx = context(type);
    const ht::WeylElement w = ctx->element(ht::parse_word(word));
    const ht::TracePoly t = ctx->traces().get(w.id());
    switch (g_.format()) {
      case Format::Json: {
        ht::Json j = ht::to_json(t);
        j["type"] = ctx->datum().type_spec();
        emit_json(j);
        break;
      }
      case Format::Csv:
        std::cout << ht::csv_row({"type", "w", "tau", "tau_tilde", "delta_coeffs"})
                  << ht::csv_row({type, ht::word_to_string(w.reduced_word()), t.tau_q.to_string(),
                                  t.tau_tilde.to_string(), delta_string(t.delta_coeffs)});
        break;
      case Format::Text:
        std::cout << (view == PolyView::Q       ? t.tau_q.to_string()
                      : view == PolyView::Tilde ? t.tau_tilde.to_string()
                                                : delta_string(t.delta_coeffs))
                  << "\n";
        break;
    }
    return 0;
  }

  int rpoly(const std::string& type, const std::string& zword, const std::string& wword, PolyView view) const {
    const auto ctx = context(type);
    const ht::RPoly r = ht::r_poly(ctx->rpolys(), ctx->element(ht::parse_word(zword)), ctx->element(ht::parse_word(wword)));
    switch (g_.format()) {
      case Format::Json: {
        ht::Json j = ht::to_json(r);
        j["type"] = ctx->datum().type_spec();
        emit_json(j);
        break;
      }
      case Format::Csv:
        std::cout << ht::csv_row({"type", "z", "w", "r", "r_tilde", "delta_coeffs"})
                  << ht::csv_row({type, ht::word_to_string(r.z.reduced_word()), ht::word_to_string(r.w.reduced_word()),
                                  r.r_q.to_string(), r.r_tilde.to_string(), delta_string(r.delta_coeffs)});
        break;
      case Format::Text:
        std::cout << (view == PolyView::Q       ? r.r_q.to_string()
                      : view == PolyView::Tilde ? r.r_tilde.to_string()
                                                : delta_string(r.delta_coeffs))
                  << "\n";
        break;
    }
    return 0;
  }

  int hecke_output(const ht::HeckeElement& h) const {
    switch (g_.format()) {
      case Format::Json: emit_json(ht::to_json(h)); break;
      case Format::Csv: {
        std::cout << ht::csv_row({"basis", "word", "coeff"});
        for (const auto& [w, c] : h.terms())
          std::cout << ht::csv_row({h.basis() == ht::Basis::T ? "T" : "Tt",
                                    ht::word_to_string(h.datum().reduced_word(w)), ht::q_or_v_string(c)});
        break;
      }
      case Format::Text: std::cout << h.to_string() << "\n"; break;
    }
    return 0;
  }

  int eval(const std::string& type, const std::string& expr, bool tilde) const {
    const auto ctx = context(type);
    const ht::HeckeElement h = ht::parse_hecke_expr(ctx->datum(), expr);
    return hecke_output(tilde ? h.to_tilde() : h);
  }

  int invert(const std::string& type, const std::string& word, bool tilde) const {
    const auto ctx = context(type);
    const ht::HeckeElement h = ht::invert_word(ctx->datum(), ht::parse_word(word));
    return hecke_output(tilde ? h.to_tilde() : h);
  }

  int counts(const std::string& type, const std::string& word, std::optional<std::string> q, bool rss) const {
    const auto ctx = context(type);
    const ht::WeylElement w = ctx->element(ht::parse_word(word));
    std::optional<ht::Integer> qv;
    if (q) {
      try {
        qv = ht::Integer(*q);
      } catch (const std::invalid_argument&) {
        throw ht::InvalidArgument("--q expects an integer, got " + *q);
      }
    }
    const ht::CountReport rep = ht::count_report(*ctx, w.id(), qv, rss);
    if (!g_.quiet)
      for (const auto& msg : rep.warnings) std::cerr << "warning: " << msg << "\n";
    switch (g_.format()) {
      case Format::Json: emit_json(ht::to_json(rep)); break;
      case Format::Csv:
        std::cout << ht::csv_row({"type", "w", "q", "id", "value", "anchor", "conditional"});
        for (const auto& e : rep.entries)
          std::cout << ht::csv_row({rep.type_spec, ht::word_to_string(rep.w), q ? *q : "symbolic", e.id, entry_value(e),
                                    e.anchor, e.conditional ? "true" : "false"});
        break;
      case Format::Text:
        std::cout << rep.type_spec << "  w=" << ht::word_to_string(rep.w) << "  q=" << (q ? *q : "symbolic") << "\n";
        for (const auto& e : rep.entries)
          std::cout << "  " << e.id << " = " << entry_value(e) << "    [" << e.anchor << "]"
                    << (e.conditional ? " (elliptic-minimal)" : "") << "\n";
        for (const auto& o : rep.omitted) std::cout << "  omitted " << o.id << ": " << o.reason << "\n";
        break;
    }
    return 0;
  }

  int chars(const std::string& type, bool full) const {
    const auto ctx = context(type);
    const ht::CharacterTable& table = ctx->characters();
    const ht::CartanDatum& d = ctx->datum();
    if (g_.format() == Format::Json) {
      emit_json(ht::to_json(table, full));
      return 0;
    }
    std::vector<ht::ElementId> points;
    if (full) {
      for (std::size_t w = 0; w < d.order(); ++w) points.push_back(static_cast<ht::ElementId>(w));
    } else {
      for (const auto& c : d.classes()) points.push_back(c.minimal_elements.front());
    }
    if (g_.format() == Format::Csv) std::cout << ht::csv_row({"label", "dim", "w", "value"});
    for (std::size_t k = 0; k < table.irreps().size(); ++k) {
      const auto& e = table.irreps()[k];
      if (g_.format() == Format::Text) std::cout << e.label << " (dim " << e.dim << ")\n";
      for (ht::ElementId w : points) {
        const std::string word = ht::word_to_string(d.reduced_word(w));
        if (g_.format() == Format::Csv)
          std::cout << ht::csv_row({e.label, std::to_string(e.dim), word, table.value(k, w).to_string()});
        else
          std::cout << "  T[" << word << "]: " << table.value(k, w).to_string() << "\n";
      }
    }
    return 0;
  }

  int verify(const std::string& suite, const std::vector<std::string>& types, std::optional<std::size_t> max_pairs) const {
    ht::SuiteOptions opts;
    opts.types = types;
    opts.max_order = g_.order_budget();
    opts.max_pairs = max_pairs;
    opts.seed = g_.seed;
    opts.threads = g_.threads;
    const auto start = std::chrono::steady_clock::now();
    const ht::SuiteReport rep = ht::run_suite(suite, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    switch (g_.format()) {
      case Format::Json: emit_json(ht::to_json(rep)); break;
      case Format::Csv: std::cout << ht::to_csv(rep); break;
      case Format::Text:
        for (const auto& r : rep.records) {
          if (g_.quiet && r.status == ht::Status::Pass) continue;
          std::cout << ht::status_name(r.status) << "  " << r.check << "  " << r.type;
          if (r.w) std::cout << "  w=" << ht::word_to_string(*r.w);
          if (r.z) std::cout << "  z=" << ht::word_to_string(*r.z);
          if (r.status != ht::Status::Pass) std::cout << "  " << r.witness.dump();
          std::cout << "\n";
        }
        std::cout << "suite " << rep.suite << ": " << rep.records.size() << " checks, " << rep.count(ht::Status::Pass)
                  << " pass, " << rep.count(ht::Status::Fail) << " fail, " << rep.count(ht::Status::Skip) << " skip\n";
        break;
    }
    if (!g_.quiet) std::cerr << "wall time " << secs << " s\n";
    return rep.ok() ? 0 : 1;
  }

 private:
  const Globals& g_;
};

std::vector<std::string> split_types(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traces and R-polynomials of Iwahori-Hecke algebras of finite Weyl groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "hecketrace 0.1.0");

  Globals g;
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output")->excludes(json_flag);
  app.add_option("--max-order", g.max_order, "Largest Weyl group order to build (default 1000000 or HECKETRACE_MAX_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks inside suites");
  app.add_flag("--quiet", g.quiet, "Suppress warnings, timing and passing records");
  app.add_option("--threads", g.threads, "Worker threads for trace sweeps (0 = hardware)");

  std::string type;
  std::string word;
  std::string zword;
  std::string expr;
  bool tilde = false;
  bool delta = false;

  auto* group = app.add_subcommand("group", "Cartan datum summary");
  group->add_option("type", type, "Cartan type, e.g. A2 or A1xB2")->required();

  auto* classes = app.add_subcommand("classes", "Conjugacy classes with elliptic and minimal-length data");
  classes->add_option("type", type)->required();

  auto* trace = app.add_subcommand("trace", "tau(w, q), the trace of left multiplication by T_w");
  trace->add_option("type", type)->required();
  trace->add_option("word", word, "Word such as 121 or 1,2,1; \"\" or e for the identity")->required();
  auto* trace_tilde = trace->add_flag("--tilde", tilde, "Normalised form in v");
  trace->add_flag("--delta", delta, "Coefficients in powers of v - v^-1")->excludes(trace_tilde);

  auto* rpoly = app.add_subcommand("rpoly", "R_{z,w}(q)");
  rpoly->add_option("type", type)->required();
  rpoly->add_option("z", zword)->required();
  rpoly->add_option("w", word)->required();
  auto* rpoly_tilde = rpoly->add_flag("--tilde", tilde, "Normalised form in v");
  rpoly->add_flag("--delta", delta, "Coefficients in powers of v - v^-1")->excludes(rpoly_tilde);

  auto* eval = app.add_subcommand("eval", "Evaluate a Hecke algebra expression");
  eval->add_option("type", type)->required();
  eval->add_option("expr", expr, "e.g. \"T[1]*T[1] - (q-1)*T[1]\"")->required();
  eval->add_flag("--tilde", tilde, "Print in the normalised basis");

  auto* invert = app.add_subcommand("invert", "T_w^{-1} in the T basis from a reduced word");
  invert->add_option("type", type)->required();
  invert->add_option("word", word)->required();
  invert->add_flag("--tilde", tilde, "Print in the normalised basis");

  auto* counts = app.add_subcommand("counts", "Point-count formulas for w");
  std::optional<std::string> q;
  bool symbolic = false;
  bool no_rss = false;
  counts->add_option("type", type)->required();
  counts->add_option("word", word)->required();
  auto* q_opt = counts->add_option("--q", q, "Integer q >= 2");
  auto* sym_opt = counts->add_flag("--symbolic", symbolic, "Rational functions in q");
  q_opt->excludes(sym_opt);
  counts->add_flag("--no-rss", no_rss, "Skip the regular semisimple entries");

  auto* chars = app.add_subcommand("chars", "Hecke character table (rank <= 2)");
  bool full = false;
  chars->add_option("type", type)->required();
  chars->add_flag("--full", full, "Values on every element instead of class representatives");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string suite;
  std::string types;
  std::optional<std::size_t> max_pairs;
  verify->add_option("--suite", suite, "positivity, symmetry, inversion, elliptic-monic, divisibility, "
                                       "identity-2-6a, chars, counts-consistency, oracle-tau or all")
      ->required()
      ->check([](const std::string& s) {
        try {
          ht::canonical_suite(s);
          return std::string();
        } catch (const ht::Error& e) {
          return std::string(e.what());
        }
      });
  verify->add_option("--types", types, "Comma-separated types, e.g. A2,B2")->required();
  verify->add_option("--max-pairs", max_pairs, "Budget on (z, w) pairs per type")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Cli cli(g);
  const PolyView view = tilde ? PolyView::Tilde : delta ? PolyView::Delta : PolyView::Q;
  try {
    if (*group) return cli.group(type);
    if (*classes) return cli.classes(type);
    if (*trace) return cli.trace(type, word, view);
    if (*rpoly) return cli.rpoly(type, zword, word, view);
    if (*eval) return cli.eval(type, expr, tilde);
    if (*invert) return cli.invert(type, word, tilde);
    if (*counts) {
      if (!q && !symbolic) throw ht::InvalidArgument("counts needs --q N or --symbolic");
      return cli.counts(type, word, q, !no_rss);
    }
    if (*chars) return cli.chars(type, full);
    if (*verify) return cli.verify(suite, split_types(types), max_pairs);
  } catch (const ht::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const ht::TheoremViolation& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ht::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
