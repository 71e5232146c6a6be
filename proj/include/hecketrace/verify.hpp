#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hecketrace/serialize.hpp"

namespace hecketrace {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"positivity",     "symmetry",    "inversion", "elliptic-monic",
                                              "divisibility",   "identity-2-6a", "chars",   "counts-consistency",
                                              "oracle-tau",     "all"};
  return names;
}

/// Canonical suite name; "twisted-trace" is accepted for "identity-2-6a". Throws InvalidArgument otherwise.
inline std::string canonical_suite(const std::string& name) {
  if (name == "twisted-trace") return "identity-2-6a";
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw InvalidArgument("unknown suite: " + name);
  return name;
}

inline const std::vector<Integer>& count_sweep_qs() {
  static const std::vector<Integer> qs{2, 3, 4, 5, 7, 8, 9};
  return qs;
}

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

struct CheckRecord {
  std::string check;
  std::string type;
  std::optional<Word> w;
  std::optional<Word> z;
  Status status = Status::Pass;
  Json witness = Json::object();
};

struct SuiteOptions {
  std::vector<std::string> types;
  std::size_t max_order = default_max_order();
  /// Upper bound on (z, w) pairs with R_{z,w} != 0 swept per type; columns past it are skipped.
  std::optional<std::size_t> max_pairs;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::string> types;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
  }
  bool ok() const { return count(Status::Fail) == 0; }
};

namespace detail {

/// (length, word) with absent words first.
inline bool word_less(const std::optional<Word>& a, const std::optional<Word>& b) {
  if (!a || !b) return !a && b;
  if (a->size() != b->size()) return a->size() < b->size();
  return *a < *b;
}

inline void sort_records(std::vector<CheckRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.check != b.check) return a.check < b.check;
    if (a.type != b.type) return a.type < b.type;
    if (word_less(a.w, b.w) || word_less(b.w, a.w)) return word_less(a.w, b.w);
    return word_less(a.z, b.z);
  });
}

class SuiteRunner {
 public:
  SuiteRunner(HeckeContext& ctx, const SuiteOptions& opts, std::vector<CheckRecord>& out)
      : ctx_(ctx), d_(ctx.datum()), opts_(opts), out_(out) {}

  void run(const std::string& suite) {
    if (suite == "positivity") positivity();
    else if (suite == "symmetry") symmetry();
    else if (suite == "inversion") inversion();
    else if (suite == "elliptic-monic") elliptic_monic();
    else if (suite == "divisibility") divisibility();
    else if (suite == "identity-2-6a") twisted_trace();
    else if (suite == "chars") chars();
    else if (suite == "counts-consistency") counts_consistency();
    else if (suite == "oracle-tau") oracle_tau();
  }

 private:
  CheckRecord& add(std::string check, std::optional<ElementId> w, std::optional<ElementId> z, bool pass) {
    CheckRecord r;
    r.check = std::move(check);
    r.type = d_.type_spec();
    if (w) r.w = d_.reduced_word(*w);
    if (z) r.z = d_.reduced_word(*z);
    r.status = pass ? Status::Pass : Status::Fail;
    out_.push_back(std::move(r));
    return out_.back();
  }

  void skip(std::string check, std::optional<ElementId> w, std::string reason) {
    CheckRecord& r = add(std::move(check), w, std::nullopt, true);
    r.status = Status::Skip;
    r.witness = Json{{"reason", std::move(reason)}};
  }

  ElementId id(std::size_t k) const { return static_cast<ElementId>(k); }

  const std::vector<LaurentPoly>& raw_traces() {
    if (!raw_traces_) raw_traces_ = tau_tilde_all(d_, opts_.threads);
    return *raw_traces_;
  }

  /// Calls f(w, column) for every R~ column within the pair budget; skipped columns get a skip record.
  void for_each_rpoly_column(const std::string& check,
                             const std::function<void(ElementId, const RPolyTable::Column&)>& f) {
    std::size_t pairs = 0;
    bool exhausted = false;
    for (std::size_t w = 0; w < d_.order(); ++w) {
      if (exhausted) {
        skip(check, id(w), "max-pairs budget exhausted");
        continue;
      }
      const auto col = ctx_.rpolys().column(id(w));
      const auto support = static_cast<std::size_t>(
          std::count_if(col->begin(), col->end(), [](const LaurentPoly& p) { return !p.is_zero(); }));
      if (opts_.max_pairs && pairs + support > *opts_.max_pairs) {
        exhausted = true;
        skip(check, id(w), "max-pairs budget exhausted");
        continue;
      }
      pairs += support;
      f(id(w), *col);
    }
  }

  void positivity() {
    const auto& traces = raw_traces();
    for (std::size_t w = 0; w < d_.order(); ++w) {
      const auto delta = expand_in_delta(traces[w]);
      const bool pass = delta && all_non_negative(*delta);
      CheckRecord& r = add("positivity.tau", id(w), std::nullopt, pass);
      r.witness = delta ? Json{{"delta_coeffs", to_json(*delta)}} : Json{{"tau_tilde", to_json(traces[w])}};
    }
    for_each_rpoly_column("positivity.rpoly", [&](ElementId w, const RPolyTable::Column& col) {
      std::size_t pairs = 0;
      std::optional<ElementId> bad;
      for (std::size_t z = 0; z < col.size(); ++z) {
        if (col[z].is_zero()) continue;
        ++pairs;
        const auto delta = expand_in_delta(col[z]);
        if ((!delta || !all_non_negative(*delta)) && !bad) bad = id(z);
      }
      CheckRecord& r = add("positivity.rpoly", w, bad, !bad);
      r.witness = Json{{"pairs", pairs}};
      if (bad) r.witness["r_tilde"] = to_json(col[*bad]);
    });
  }

  void symmetry() {
    const auto& traces = raw_traces();
    for (std::size_t w = 0; w < d_.order(); ++w) {
      const LaurentPoly& tt = traces[w];
      bool pass = bar(tt) == tt;
      if (pass) {
        const int len = d_.length(id(w));
        const LaurentPoly tq = qpoly_from_laurent(tt, len).to_laurent();
        LaurentPoly rhs = tq.shifted(-2 * len);
        if (len % 2 != 0) rhs = -rhs;
        pass = bar(tq) == rhs;
      }
      CheckRecord& r = add("symmetry.tau", id(w), std::nullopt, pass);
      if (!pass) r.witness = Json{{"tau_tilde", to_json(tt)}};
    }
    for_each_rpoly_column("symmetry.rpoly", [&](ElementId w, const RPolyTable::Column& col) {
      std::optional<ElementId> bad;
      for (std::size_t z = 0; z < col.size() && !bad; ++z) {
        if (col[z].is_zero()) continue;
        const RPoly rp{WeylElement(d_, id(z)), WeylElement(d_, w),
                       qpoly_from_laurent(col[z], d_.length(w) - d_.length(id(z))), col[z], {}};
        if (!check_bar_symmetry(rp)) bad = id(z);
      }
      CheckRecord& r = add("symmetry.rpoly", w, bad, !bad);
      if (bad) r.witness = Json{{"r_tilde", to_json(col[*bad])}};
    });
  }

  void inversion() {
    for (std::size_t w = 0; w < d_.order(); ++w) {
      const WeylElement we(d_, id(w));
      const InversionReport rep = verify_inversion_identity(ctx_.rpolys(), we);
      const WeylElement winv = inverse(we);
      const bool word_independent =
          invert_word(d_, reduced_word_largest_first(winv)) == invert_word(d_, winv.reduced_word());
      CheckRecord& r = add("inversion", id(w), std::nullopt, rep.ok() && word_independent);
      r.witness = Json{{"word_independent", word_independent}, {"mismatches", rep.mismatches.size()}};
      if (!rep.ok()) {
        const auto& m = rep.mismatches.front();
        r.z = m.z.reduced_word();
        r.witness["lhs"] = to_json(m.lhs);
        r.witness["rhs"] = to_json(m.rhs);
      }
    }
  }

  void elliptic_monic() {
    const EllipticMonicReport rep = elliptic_monic_report(ctx_.traces());
    for (const auto& row : rep.rows) {
      CheckRecord& r = add("elliptic-monic", row.w.id(), std::nullopt, row.monic_of_length_degree);
      r.witness = Json{{"tau", to_json(row.tau_q)}, {"length", row.w.length()}};
    }
    for (const auto& c : rep.constancy) {
      const ElementId rep_w = d_.classes()[c.class_index].minimal_elements.front();
      CheckRecord& r = add("class-constancy", rep_w, std::nullopt, !c.is_elliptic || c.constant);
      r.witness = Json{{"elliptic", c.is_elliptic}, {"constant", c.constant}};
    }
  }

  void divisibility() {
    for (std::size_t w = 0; w < d_.order(); ++w) {
      if (!d_.is_elliptic_minimal(id(w))) continue;
      try {
        const EllipticQuotients eq = elliptic_quotients(ctx_, id(w));
        const PalindromyCheck pal = check_palindromy(eq);
        CheckRecord& r = add("divisibility", id(w), std::nullopt, pal.all());
        r.witness = Json{{"underline_tau", to_json(eq.underline_tau)},
                         {"underline_r1", to_json(eq.underline_r1)},
                         {"tau_palindromic", pal.tau_palindromic},
                         {"r1_palindromic", pal.r1_palindromic},
                         {"parity", pal.parity}};
      } catch (const TheoremViolation& e) {
        CheckRecord& r = add("divisibility", id(w), std::nullopt, false);
        r.witness = Json{{"error", e.what()}};
      }
    }
  }

  bool require_characters(const std::string& check) {
    if (ctx_.has_characters()) return true;
    skip(check, std::nullopt, "character tables are available in rank <= 2 only");
    return false;
  }

  void twisted_trace() {
    if (!require_characters("identity-2-6a")) return;
    const CharacterTable& table = ctx_.characters();
    for (std::size_t w = 0; w < d_.order(); ++w) {
      const TwistedTraceCheck c = verify_twisted_trace_identity(table, ctx_.rpolys(), id(w));
      CheckRecord& r = add("identity-2-6a", id(w), std::nullopt, c.holds());
      r.witness = Json{{"lhs", to_json(c.lhs)}};
      if (!c.holds()) r.witness["rhs"] = to_json(c.rhs);
    }
  }

  void chars() {
    if (!require_characters("chars.table")) return;
    const CharacterTable& table = ctx_.characters();
    const CharTableChecks c = table.checks();
    CheckRecord& t = add("chars.table", std::nullopt, std::nullopt, c.all());
    t.witness = Json{{"quadratic", c.quadratic},
                     {"braid", c.braid},
                     {"dim_squares", c.dim_squares},
                     {"orthonormal", c.orthonormal},
                     {"reflection_match", c.reflection_match},
                     {"integral_characters", c.integral_characters},
                     {"multiplicities", c.multiplicities}};
    for (std::size_t w = 0; w < d_.order(); ++w) {
      const AChainCheck a = verify_a_chain(table, ctx_.rpolys(), id(w));
      CheckRecord& r = add("chars.a-chain", id(w), std::nullopt, a.holds());
      r.witness = Json{{"expected", to_json(a.expected)}};
      if (!a.holds()) r.witness["sum_a"] = to_json(a.sum_a);
    }
    for (std::size_t w = 0; w < d_.order(); ++w) {
      Json failed = Json::array();
      for (std::size_t k = 0; k < table.irreps().size(); ++k)
        if (!verify_duality_char_identity(table, ctx_.rpolys(), k, id(w))) failed.push_back(table.irreps()[k].label);
      CheckRecord& r = add("chars.duality", id(w), std::nullopt, failed.empty());
      if (!failed.empty()) r.witness = Json{{"irreps", std::move(failed)}};
    }
    trace_commutes(table);
  }

  /// tr(h h', E) = tr(h' h, E) on seeded random Hecke elements.
  void trace_commutes(const CharacterTable& table) {
    std::mt19937_64 rng(opts_.seed ^ std::hash<std::string>{}(d_.type_spec()));
    std::uniform_int_distribution<std::size_t> pick(0, d_.order() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exp(-2, 2);
    auto random_element = [&] {
      HeckeElement h(d_, Basis::T);
      for (int k = 0; k < 3; ++k) h.add(id(pick(rng)), LaurentPoly::monomial(coeff(rng), exp(rng)));
      return h;
    };
    constexpr int kTrials = 4;
    bool pass = true;
    for (int trial = 0; trial < kTrials; ++trial) {
      const HeckeElement a = random_element();
      const HeckeElement b = random_element();
      for (const auto& e : table.irreps()) {
        const RepMatrix ab = rep_image(e, a * b);
        const RepMatrix ba = rep_image(e, b * a);
        if (ab.trace() != ba.trace()) pass = false;
      }
    }
    CheckRecord& r = add("chars.trace-commutes", std::nullopt, std::nullopt, pass);
    r.witness = Json{{"trials", kTrials}};
  }

  void counts_consistency() {
    std::vector<std::optional<Integer>> qs{std::nullopt};
    for (const auto& q : count_sweep_qs()) qs.emplace_back(q);
    for (std::size_t w = 0; w < d_.order(); ++w) {
      Json failed = Json::array();
      std::size_t checks = 0;
      for (const auto& q : qs) {
        const CountReport rep = count_report(ctx_, id(w), q);
        for (const auto& c : check_count_consistency(ctx_, rep)) {
          ++checks;
          if (!c.holds) failed.push_back(Json{{"q", q ? to_json(*q) : Json("symbolic")}, {"relation", c.name}});
        }
      }
      CheckRecord& r = add("counts-consistency", id(w), std::nullopt, failed.empty());
      r.witness = Json{{"relations", checks}};
      if (!failed.empty()) r.witness["failed"] = std::move(failed);
    }
  }

  void oracle_tau() {
    if (d_.order() > kOracleMaxOrder) {
      skip("oracle-tau", std::nullopt, "group order above the oracle budget " + std::to_string(kOracleMaxOrder));
      return;
    }
    for (std::size_t w = 0; w < d_.order(); ++w) {
      const WeylElement we(d_, id(w));
      const QPoly oracle = tau_direct_oracle(we);
      const QPoly& fast = ctx_.traces().get(id(w)).tau_q;
      CheckRecord& r = add("oracle-tau", id(w), std::nullopt, oracle == fast);
      r.witness = Json{{"tau", to_json(fast)}};
      if (oracle != fast) r.witness["oracle"] = to_json(oracle);
    }
  }

  HeckeContext& ctx_;
  const CartanDatum& d_;
  const SuiteOptions& opts_;
  std::vector<CheckRecord>& out_;
  std::optional<std::vector<LaurentPoly>> raw_traces_;
};

}  // namespace detail

/// Runs a suite over every listed type. Types over the order budget are skipped with a record;
/// malformed type strings throw ParseError. Records are sorted by (check, type, w, z).
inline SuiteReport run_suite(const std::string& suite_name, const SuiteOptions& opts) {
  const std::string suite = canonical_suite(suite_name);
  if (opts.types.empty()) throw InvalidArgument("no types given");
  if (opts.max_order == 0) throw InvalidArgument("max order must be positive");
  if (opts.max_pairs && *opts.max_pairs == 0) throw InvalidArgument("max pairs must be positive");
  for (const auto& t : opts.types) parse_type_components(t);

  SuiteReport report{suite, opts.types, opts.seed, {}};
  for (const auto& type : opts.types) {
    std::shared_ptr<const CartanDatum> datum;
    try {
      datum = parse_type(type, opts.max_order);
    } catch (const BudgetExceeded& e) {
      CheckRecord r{suite, type, std::nullopt, std::nullopt, Status::Skip, Json{{"reason", e.what()}}};
      report.records.push_back(std::move(r));
      continue;
    }
    HeckeContext ctx(datum);
    detail::SuiteRunner runner(ctx, opts, report.records);
    if (suite == "all") {
      for (const auto& s : suite_names())
        if (s != "all") runner.run(s);
    } else {
      runner.run(suite);
    }
  }
  detail::sort_records(report.records);
  return report;
}

inline Json record_json(const CheckRecord& r) {
  return Json{{"check", r.check},
              {"type", r.type},
              {"w", r.w ? word_json(*r.w) : Json(nullptr)},
              {"z", r.z ? word_json(*r.z) : Json(nullptr)},
              {"status", status_name(r.status)},
              {"witness", r.witness}};
}

inline Json to_json(const SuiteReport& rep) {
  Json records = Json::array();
  for (const auto& r : rep.records) records.push_back(record_json(r));
  return Json{{"suite", rep.suite},
              {"types", rep.types},
              {"seed", rep.seed},
              {"records", std::move(records)},
              {"summary",
               {{"total", rep.records.size()},
                {"pass", rep.count(Status::Pass)},
                {"fail", rep.count(Status::Fail)},
                {"skip", rep.count(Status::Skip)}}}};
}

inline std::string to_csv(const SuiteReport& rep) {
  std::string out = csv_row({"check", "type", "w", "z", "status", "witness"});
  for (const auto& r : rep.records)
    out += csv_row({r.check, r.type, r.w ? word_to_string(*r.w) : "", r.z ? word_to_string(*r.z) : "",
                    status_name(r.status), r.witness.dump()});
  return out;
}

}  // namespace hecketrace
