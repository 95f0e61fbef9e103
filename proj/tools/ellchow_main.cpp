// Command-line front end: derives the relation ideal of the Chow ring
// presentation for moduli of Weierstrass fibrations over P^1, runs the
// Hilbert-function / Gorenstein-duality analysis of the quotient, checks
// Weierstrass data conditions, and verifies the codimension-1 kappa-class
// identities. All arithmetic is exact; output is deterministic.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellchow/chern.hpp"
#include "ellchow/kappa.hpp"
#include "ellchow/parallel.hpp"
#include "ellchow/quotient.hpp"
#include "ellchow/relations.hpp"
#include "ellchow/weierstrass.hpp"

using json = nlohmann::ordered_json;
using namespace ellchow;

namespace {

constexpr int kSchemaVersion = 1;

const std::vector<int> kExpectedDims = {1, 1, 2, 2, 3, 3, 4, 4, 5, 4, 4, 3, 3, 2, 2, 1, 1};

struct Output {
  std::string format = "text";
  std::string path;

  bool is_json() const { return format == "json"; }

  void emit(const std::string& text, const json& j) const {
    std::string body = is_json() ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream os(path);
      if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
      os << body;
    }
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", out.path, "Write output to a file instead of stdout");
}

template <class C>
json poly_to_json(const BasePoly<C>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({m.first, m.second, c.str()});
  return terms;
}

// ---- derive ----------------------------------------------------------

int run_derive(bool symbolic, std::optional<long> n, const Output& out) {
  std::ostringstream text;
  json j{{"schema", kSchemaVersion}, {"command", "derive"}};
  if (symbolic) {
    SymbolicRelations s = derive_relations();
    j["mode"] = "symbolic";
    j["r1"] = poly_to_json(s.r1);
    j["r2"] = poly_to_json(s.r2);
    text << "mode: symbolic\n";
    text << "r1 = " << to_canonical_text(s.r1) << "\n";
    text << "r2 = " << to_canonical_text(s.r2) << "\n";
  } else {
    Relations r = derive_relations(*n);
    j["mode"] = "specialized";
    j["n"] = *n;
    if (r.below_moduli_range()) {
      j["warning"] = "n < 2: the computation runs but has no moduli interpretation";
      std::cerr << "warning: n < 2: the computation runs but has no moduli interpretation\n";
    }
    j["r1"] = poly_to_json(r.r1);
    j["r2"] = poly_to_json(r.r2);
    text << "n: " << *n << "\n";
    text << "r1 = " << to_canonical_text(r.r1) << "\n";
    text << "r2 = " << to_canonical_text(r.r2) << "\n";
  }
  out.emit(text.str(), j);
  return 0;
}

// ---- golden ----------------------------------------------------------

json golden_to_json(const GoldenReport& rep) {
  json mismatches = json::array();
  for (const auto& m : rep.mismatches)
    mismatches.push_back({{"generator", m.generator},
                          {"i", m.i},
                          {"j", m.j},
                          {"expected", m.expected.str()},
                          {"got", m.got.str()}});
  return {{"schema", kSchemaVersion},
          {"command", "golden"},
          {"ok", rep.ok()},
          {"mismatches", mismatches}};
}

int run_golden(const Output& out) {
  SymbolicRelations s = derive_relations();
  GoldenReport rep = golden_compare(s);
  std::ostringstream text;
  if (rep.ok()) {
    size_t ncoeffs = 0;
    for (const auto* p : {&s.r1, &s.r2})
      for (const auto& [m, c] : p->terms())
        for (int k = 0; k <= c.degree(); ++k)
          if (!c.coeff(k).is_zero()) ++ncoeffs;
    text << "golden comparison: PASS (" << ncoeffs << " coefficients)\n";
  } else {
    text << "golden comparison: FAIL\n";
    for (const auto& m : rep.mismatches)
      text << "  generator " << m.generator << " monomial c2^" << m.j << "*a1^" << m.i
           << ": expected " << m.expected.str() << ", got " << m.got.str() << "\n";
  }
  out.emit(text.str(), golden_to_json(rep));
  return rep.ok() ? 0 : 1;
}

// ---- hilbert / gorenstein / sweep -----------------------------------

json analysis_to_json(long n, const HilbertData& h, const PairingReport* pairing) {
  json j{{"schema", kSchemaVersion}, {"command", pairing ? "gorenstein" : "hilbert"}, {"n", n}};
  j["dims"] = h.dims;
  j["socle"] = socle_degree(h);
  j["subvariety_bound"] = complete_subvariety_bound(h);
  j["bounded_in_window"] = h.bounded_in_window();
  if (pairing) {
    j["socle_dim"] = pairing->socle_dim;
    j["gorenstein"] = pairing->verdict;
    json ranks = json::array();
    for (const auto& row : pairing->per_degree) ranks.push_back(row.pairing_rank);
    j["pairing_ranks"] = ranks;
  }
  return j;
}

void hilbert_text(std::ostream& os, long n, const HilbertData& h) {
  os << "n: " << n << "\n";
  os << "dims:";
  for (int d : h.dims) os << ' ' << d;
  os << "\nsocle: " << socle_degree(h) << "\n";
  os << "subvariety_bound: " << complete_subvariety_bound(h);
  if (!h.bounded_in_window()) os << " (unbounded in window)";
  os << "\n";
}

int run_hilbert(long n, int max_degree, const Output& out) {
  Relations r = derive_relations(n);
  HilbertData h = hilbert_function(r, max_degree);
  std::ostringstream text;
  hilbert_text(text, n, h);
  json j = analysis_to_json(n, h, nullptr);
  j["max_degree"] = max_degree;
  out.emit(text.str(), j);
  return 0;
}

int run_gorenstein(long n, const Output& out) {
  Relations r = derive_relations(n);
  HilbertData h = hilbert_function(r, 20);
  PairingReport rep = gorenstein_check(r);
  std::ostringstream text;
  hilbert_text(text, n, h);
  text << "socle_dim: " << rep.socle_dim << "\n";
  text << "degree  dim  dual_dim  pairing_rank\n";
  for (const auto& row : rep.per_degree)
    text << "  " << row.i << "\t" << row.dim << "\t" << row.dual_dim << "\t" << row.pairing_rank
         << "\n";
  text << "gorenstein: " << (rep.verdict ? "PASS" : "FAIL") << "\n";
  out.emit(text.str(), analysis_to_json(n, h, &rep));
  return rep.verdict ? 0 : 1;
}

int run_sweep(long n_min, long n_max, int max_degree, const Output& out) {
  const size_t count = static_cast<size_t>(n_max - n_min + 1);
  std::vector<json> runs(count);
  std::vector<char> ok(count, 0);
  std::vector<std::vector<int>> dims(count);
  parallel_for(count, [&](size_t idx) {
    long n = n_min + static_cast<long>(idx);
    Relations r = derive_relations(n);
    HilbertData h = hilbert_function(r, max_degree);
    PairingReport rep = gorenstein_check(r);
    json j = analysis_to_json(n, h, &rep);
    j.erase("command");
    ok[idx] = rep.verdict && socle_degree(h) == 16 && h.bounded_in_window();
    dims[idx] = h.dims;
    runs[idx] = std::move(j);
  });
  bool identical = true;
  for (size_t i = 1; i < count; ++i)
    if (dims[i] != dims[0]) identical = false;
  bool all_ok = identical;
  for (char b : ok) all_ok = all_ok && b;

  json j{{"schema", kSchemaVersion},
         {"command", "sweep"},
         {"n_min", n_min},
         {"n_max", n_max},
         {"max_degree", max_degree}};
  j["runs"] = runs;
  j["dims_identical_across_sweep"] = identical;
  j["all_ok"] = all_ok;

  std::ostringstream text;
  for (size_t idx = 0; idx < count; ++idx) {
    long n = n_min + static_cast<long>(idx);
    text << "n=" << n << ": socle " << runs[idx]["socle"].get<int>() << ", gorenstein "
         << (runs[idx]["gorenstein"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  text << "dims identical across sweep: " << (identical ? "yes" : "no") << "\n";
  text << "sweep: " << (all_ok ? "PASS" : "FAIL") << "\n";
  out.emit(text.str(), j);
  return all_ok ? 0 : 1;
}

// ---- check-weierstrass -----------------------------------------------

std::vector<Rational> parse_coeff_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw std::invalid_argument(where + ": expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (size_t k = 0; k < arr.size(); ++k) {
    const json& v = arr[k];
    try {
      if (v.is_string())
        out.push_back(Rational::parse(v.get<std::string>()));
      else if (v.is_number_integer())
        out.push_back(Rational(v.get<long long>()));
      else
        throw std::invalid_argument("expected \"p/q\" string or integer");
    } catch (const std::exception& e) {
      throw std::invalid_argument(where + "[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return out;
}

WeierstrassPair parse_pair(const json& rec, const std::string& where) {
  if (!rec.is_object()) throw std::invalid_argument(where + ": expected an object");
  if (!rec.contains("n") || !rec["n"].is_number_integer())
    throw std::invalid_argument(where + ".n: expected an integer");
  long n = rec["n"].get<long>();
  if (!rec.contains("A")) throw std::invalid_argument(where + ".A: missing");
  if (!rec.contains("B")) throw std::invalid_argument(where + ".B: missing");
  return WeierstrassPair::from_coeff_lists(n, parse_coeff_list(rec["A"], where + ".A"),
                                           parse_coeff_list(rec["B"], where + ".B"));
}

json witness_to_json(const Witness& w) {
  json j{{"condition", w.condition}};
  if (w.at_infinity)
    j["point"] = "infinity";
  else if (w.point)
    j["point"] = w.point->str();
  else if (w.common_factor)
    j["common_factor"] = w.common_factor->str("t");
  j["v_A"] = w.order_a == kInfiniteOrder ? "infinite" : std::to_string(w.order_a);
  j["v_B"] = w.order_b == kInfiniteOrder ? "infinite" : std::to_string(w.order_b);
  return j;
}

int run_check_weierstrass(const std::string& input_path, const Output& out) {
  std::ifstream is(input_path);
  if (!is) {
    std::cerr << "error: cannot open input file '" << input_path << "'\n";
    return 2;
  }
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::parse_error& e) {
    std::cerr << "error: " << input_path << ": " << e.what() << "\n";
    return 2;
  }
  std::vector<json> records;
  if (doc.is_array())
    records.assign(doc.begin(), doc.end());
  else
    records.push_back(doc);

  json results = json::array();
  std::ostringstream text;
  bool all_pass = true;
  for (size_t idx = 0; idx < records.size(); ++idx) {
    WeierstrassPair w;
    try {
      w = parse_pair(records[idx], "record[" + std::to_string(idx) + "]");
    } catch (const std::exception& e) {
      std::cerr << "error: " << input_path << ": " << e.what() << "\n";
      return 2;
    }
    ConditionReport rep = check_conditions(w);
    // Passing means the data defines a point of the moduli problem:
    // nonvanishing discriminant plus the minimality condition.
    bool pass = rep.discriminant_ok && rep.minimal;
    all_pass = all_pass && pass;

    json jr{{"record", idx},
            {"n", w.n},
            {"discriminant_ok", rep.discriminant_ok},
            {"minimal", rep.minimal},
            {"stable", rep.stable},
            {"semistable", rep.semistable},
            {"in_delta1", rep.in_delta1},
            {"pass", pass}};
    json ws = json::array();
    for (const auto& wit : rep.witnesses) ws.push_back(witness_to_json(wit));
    jr["witnesses"] = ws;
    results.push_back(std::move(jr));

    text << "record " << idx << " (n=" << w.n << "):\n";
    text << "  discriminant_ok: " << (rep.discriminant_ok ? "true" : "false") << "\n";
    text << "  minimal: " << (rep.minimal ? "true" : "false") << "\n";
    text << "  stable: " << (rep.stable ? "true" : "false") << "\n";
    text << "  semistable: " << (rep.semistable ? "true" : "false") << "\n";
    text << "  in_delta1: " << (rep.in_delta1 ? "true" : "false") << "\n";
    for (const auto& wit : rep.witnesses) {
      text << "  witness[" << wit.condition << "]: ";
      if (wit.at_infinity)
        text << "at infinity";
      else if (wit.point)
        text << "at t=" << wit.point->str();
      else if (wit.common_factor)
        text << "common factor " << wit.common_factor->str("t");
      auto ord = [](long v) {
        return v == kInfiniteOrder ? std::string("infinite") : std::to_string(v);
      };
      text << ", v(A)=" << ord(wit.order_a) << ", v(B)=" << ord(wit.order_b) << "\n";
    }
  }
  json j{{"schema", kSchemaVersion},
         {"command", "check-weierstrass"},
         {"records", results},
         {"all_pass", all_pass}};
  out.emit(text.str(), j);
  return all_pass ? 0 : 1;
}

// ---- kappa-verify ----------------------------------------------------

json kappa_to_json(const InvarianceReport& inv, const StuReport& stu) {
  json invariance = json::array();
  for (const auto& row : inv.rows)
    invariance.push_back(
        {{"combination", row.name}, {"residual", row.residual.str()}, {"ok", row.ok}});
  json identities = json::array();
  for (const auto& row : stu.rows)
    identities.push_back(
        {{"combination", row.name}, {"lhs", row.lhs.str()}, {"rhs", row.rhs.str()}, {"ok", row.ok}});
  return {{"schema", kSchemaVersion},
          {"command", "kappa-verify"},
          {"invariance", invariance},
          {"identities", identities},
          {"all_ok", inv.all_ok && stu.all_ok}};
}

int run_kappa_verify(const Output& out) {
  InvarianceReport inv = verify_invariance();
  StuReport stu = verify_stu_identities();
  std::ostringstream text;
  text << "shift invariance:\n";
  for (const auto& row : inv.rows)
    text << "  " << (row.ok ? "PASS" : "FAIL") << "  " << row.name
         << (row.ok ? "" : "  residual " + row.residual.str()) << "\n";
  text << "test-curve identities:\n";
  for (const auto& row : stu.rows)
    text << "  " << (row.ok ? "PASS" : "FAIL") << "  " << row.name << ": " << row.lhs.str()
         << " = " << row.rhs.str() << "\n";
  bool ok = inv.all_ok && stu.all_ok;
  text << "kappa-verify: " << (ok ? "PASS" : "FAIL") << "\n";
  out.emit(text.str(), kappa_to_json(inv, stu));
  return ok ? 0 : 1;
}

// ---- report ----------------------------------------------------------

int run_report(const Output& out) {
  struct Item {
    std::string name;
    bool ok;
  };
  std::vector<Item> items;

  SymbolicRelations s = derive_relations();
  items.push_back({"golden relation reproduction", golden_compare(s).ok()});

  std::vector<long> ns;
  for (long n = 2; n <= 8; ++n) ns.push_back(n);
  std::vector<char> h_ok(ns.size()), g_ok(ns.size());
  parallel_for(ns.size(), [&](size_t idx) {
    Relations r = specialize(s, ns[idx]);
    HilbertData h = hilbert_function(r, 20);
    std::vector<int> expect = kExpectedDims;
    expect.resize(21, 0);
    h_ok[idx] = (h.dims == expect);
    PairingReport rep = gorenstein_check(r);
    bool ranks_match = rep.socle_dim == 1;
    for (const auto& row : rep.per_degree)
      ranks_match = ranks_match && row.pairing_rank == kExpectedDims[static_cast<size_t>(row.i)];
    g_ok[idx] = rep.verdict && ranks_match;
  });
  bool hilbert_ok = true, gorenstein_ok = true;
  for (size_t i = 0; i < ns.size(); ++i) {
    hilbert_ok = hilbert_ok && h_ok[i];
    gorenstein_ok = gorenstein_ok && g_ok[i];
  }
  items.push_back({"hilbert function, n=2..8", hilbert_ok});
  items.push_back({"gorenstein duality, n=2..8", gorenstein_ok});

  InvarianceReport inv = verify_invariance();
  StuReport stu = verify_stu_identities();
  items.push_back({"kappa shift invariance", inv.all_ok});
  items.push_back({"kappa test-curve identities", stu.all_ok});

  bool all_ok = true;
  std::ostringstream text;
  json checks = json::array();
  for (const auto& item : items) {
    all_ok = all_ok && item.ok;
    text << (item.ok ? "PASS" : "FAIL") << "  " << item.name << "\n";
    checks.push_back({{"name", item.name}, {"ok", item.ok}});
  }
  text << "report: " << (all_ok ? "PASS" : "FAIL") << "\n";
  json j{{"schema", kSchemaVersion}, {"command", "report"}, {"checks", checks}, {"all_ok", all_ok}};
  out.emit(text.str(), j);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact intersection-theory engine for the Chow rings of moduli of "
      "elliptic surfaces over P^1.\n"
      "Set ELLCHOW_THREADS to override the worker count."};
  app.require_subcommand(1);

  auto* derive = app.add_subcommand("derive", "Derive the two ideal generators");
  bool symbolic = false;
  std::optional<long> derive_n;
  derive->add_flag("--symbolic", symbolic, "Keep the parameter N symbolic");
  derive->add_option("-n,--n", derive_n, "Specialize at an integer N");
  Output derive_out;
  add_output_flags(derive, derive_out);

  auto* golden =
      app.add_subcommand("golden", "Compare the symbolic derivation against the reference tables");
  Output golden_out;
  add_output_flags(golden, golden_out);

  auto* hilbert = app.add_subcommand("hilbert", "Graded dimensions of the quotient ring");
  long hilbert_n = 0;
  int hilbert_maxd = 20;
  hilbert->add_option("-n,--n", hilbert_n, "Fundamental invariant (>= 2)")->required();
  hilbert->add_option("--max-degree", hilbert_maxd, "Top degree of the window")
      ->capture_default_str();
  Output hilbert_out;
  add_output_flags(hilbert, hilbert_out);

  auto* gorenstein =
      app.add_subcommand("gorenstein", "Perfect-pairing check for the quotient ring");
  long gorenstein_n = 0;
  gorenstein->add_option("-n,--n", gorenstein_n, "Fundamental invariant (>= 2)")->required();
  Output gorenstein_out;
  add_output_flags(gorenstein, gorenstein_out);

  auto* sweep = app.add_subcommand("sweep", "Hilbert + gorenstein across a range of N");
  long n_min = 2, n_max = 8;
  int sweep_maxd = 20;
  sweep->add_option("--n-min", n_min, "Smallest N (>= 2)")->capture_default_str();
  sweep->add_option("--n-max", n_max, "Largest N")->capture_default_str();
  sweep->add_option("--max-degree", sweep_maxd, "Top degree of the window")->capture_default_str();
  Output sweep_out;
  add_output_flags(sweep, sweep_out);

  auto* checkw = app.add_subcommand("check-weierstrass", "Check conditions on Weierstrass data");
  std::string input_path;
  checkw->add_option("--input", input_path, "JSON file: object or array of {n, A, B}")->required();
  Output checkw_out;
  add_output_flags(checkw, checkw_out);

  auto* kappa = app.add_subcommand("kappa-verify", "Verify the kappa-class identities");
  Output kappa_out;
  add_output_flags(kappa, kappa_out);

  auto* report = app.add_subcommand("report", "Run the full verification suite");
  Output report_out;
  add_output_flags(report, report_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*derive) {
      if (symbolic == derive_n.has_value()) {
        std::cerr << "error: derive requires exactly one of --symbolic or --n\n";
        return 2;
      }
      return run_derive(symbolic, derive_n, derive_out);
    }
    if (*golden) return run_golden(golden_out);
    if (*hilbert) {
      if (hilbert_n < 2) {
        std::cerr << "error: hilbert requires n >= 2\n";
        return 2;
      }
      if (hilbert_maxd < 0) {
        std::cerr << "error: --max-degree must be >= 0\n";
        return 2;
      }
      return run_hilbert(hilbert_n, hilbert_maxd, hilbert_out);
    }
    if (*gorenstein) {
      if (gorenstein_n < 2) {
        std::cerr << "error: gorenstein requires n >= 2\n";
        return 2;
      }
      return run_gorenstein(gorenstein_n, gorenstein_out);
    }
    if (*sweep) {
      if (n_min < 2 || n_max < n_min) {
        std::cerr << "error: sweep requires 2 <= n-min <= n-max\n";
        return 2;
      }
      return run_sweep(n_min, n_max, sweep_maxd, sweep_out);
    }
    if (*checkw) return run_check_weierstrass(input_path, checkw_out);
    if (*kappa) return run_kappa_verify(kappa_out);
    if (*report) return run_report(report_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
