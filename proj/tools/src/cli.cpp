#include "heiscat_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "heiscat/bimodel.hpp"
#include "heiscat/diagcat.hpp"
#include "heiscat/heisenberg.hpp"
#include "heiscat/nilcoxeter.hpp"
#include "heiscat/suite.hpp"
#include "heiscat/symfunc.hpp"
#include "heiscat/weyl.hpp"

namespace heiscat::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  int max_degree = 6;
  int max_rank = 3;
  std::uint64_t seed = 1;
  std::string op;
  std::vector<std::string> args;
  int m = 1;
  int n = 1;
  int k = 1;
  std::optional<int> degree;
  std::optional<int> rank;
  std::string flavor = "G";
};

struct Output {
  const Options& opt;
  std::ostream& out;
  std::string command;

  void emit(const std::string& text, const json& value) const {
    if (opt.json) {
      json j;
      j["command"] = command;
      j["result"] = value;
      out << j.dump(2) << '\n';
    } else {
      out << text << '\n';
    }
  }
  void emit(const std::string& text) const { emit(text, text); }
};

void need_args(const Options& o, std::size_t count, const std::string& usage) {
  if (o.args.size() != count) throw UsageError("expected: " + usage);
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json partition_map_json(const std::map<Partition, Integer>& m) {
  json j = json::object();
  for (const auto& [p, c] : m) j[p.str()] = integer_json(c);
  return j;
}

json report_json(const VerificationReport& r) { return json::parse(r.to_json()); }

int finish_report(const Output& o, const VerificationReport& r) {
  if (o.opt.json) {
    json j;
    j["command"] = o.command;
    j["passed"] = r.passed();
    j["checks"] = report_json(r);
    o.out << j.dump(2) << '\n';
  } else {
    o.out << r.str() << (r.passed() ? "pass" : "FAIL") << '\n';
  }
  return r.passed() ? kOk : kVerificationFailed;
}

Basis parse_basis(const std::string& s) {
  if (s.size() == 1) return basis_from_letter(s[0]);
  for (Basis b : {Basis::monomial, Basis::elementary, Basis::complete, Basis::powersum, Basis::schur})
    if (basis_name(b) == s) return b;
  throw UsageError("unknown basis '" + s + "'");
}

std::string tensor_str(const SymTensor& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t.terms) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + " ";
    out += std::string(1, basis_letter(t.left)) + key.first.str() + " (x) " + basis_letter(t.right) + key.second.str();
    first = false;
  }
  return out;
}

int run_sym(const Options& o, const Output& out) {
  const std::string& op = o.op;
  if (op == "convert") {
    need_args(o, 2, "sym convert <literal> <basis>");
    const SymFunc r = convert(SymFunc::parse(o.args[0]), parse_basis(o.args[1]));
    out.emit(r.str(), json::parse(r.to_json()));
  } else if (op == "mul") {
    need_args(o, 2, "sym mul <literal> <literal>");
    const SymFunc r = multiply(SymFunc::parse(o.args[0]), SymFunc::parse(o.args[1]));
    out.emit(r.str(), json::parse(r.to_json()));
  } else if (op == "pair") {
    need_args(o, 2, "sym pair <literal> <literal>");
    out.emit(to_string(hall_pairing(SymFunc::parse(o.args[0]), SymFunc::parse(o.args[1]))));
  } else if (op == "schur") {
    need_args(o, 1, "sym schur <partition>");
    const SymFunc r = schur(Partition::parse(o.args[0]));
    out.emit(r.str(), json::parse(r.to_json()));
  } else if (op == "lr") {
    need_args(o, 2, "sym lr <partition> <partition>");
    const json j = partition_map_json(lr_coefficients(Partition::parse(o.args[0]), Partition::parse(o.args[1])));
    out.emit(j.dump(), j);
  } else if (op == "coproduct") {
    need_args(o, 1, "sym coproduct <literal>");
    out.emit(tensor_str(coproduct(SymFunc::parse(o.args[0]))));
  } else if (op == "antipode") {
    need_args(o, 1, "sym antipode <literal>");
    const SymFunc r = antipode(SymFunc::parse(o.args[0]));
    out.emit(r.str(), json::parse(r.to_json()));
  } else {
    throw UsageError("unknown sym operation '" + op + "'");
  }
  return kOk;
}

int run_weyl(const Options& o, const Output& out) {
  if (o.op == "normalize") {
    if (o.args.empty()) throw UsageError("expected: weyl normalize <element> [<element> ...]");
    WeylElement acc = WeylElement::one();
    for (const auto& a : o.args) acc = weyl_multiply(acc, WeylElement::parse(a));
    out.emit(acc.str());
  } else if (o.op == "apply") {
    need_args(o, 2, "weyl apply <element> <vector>");
    out.emit(weyl_apply(WeylElement::parse(o.args[0]), PolyVector::parse(o.args[1])).str());
  } else if (o.op == "pair") {
    need_args(o, 2, "weyl pair <Rprime vector> <R vector>");
    const Integer v = weyl_pairing(PolyVector::parse(o.args[0]), PolyVector::parse(o.args[1]));
    out.emit(to_string(v), integer_json(v));
  } else {
    throw UsageError("unknown weyl operation '" + o.op + "'");
  }
  return kOk;
}

int run_nilcox(const Options& o, const Output& out) {
  if (o.op == "mul") {
    need_args(o, 2, "nilcox mul <element> <element> [--rank n]");
    const int n = o.rank.value_or(-1);
    NilcoxElem a = NilcoxElem::parse(o.args[0], n);
    NilcoxElem b = NilcoxElem::parse(o.args[1], n);
    const int r = std::max(a.rank(), b.rank());
    out.emit(nc_product(a.embedded(r), b.embedded(r)).str());
    return kOk;
  }
  if (o.op == "verify-iso") {
    need_args(o, 0, "nilcox verify-iso [--n N]");
    VerificationReport r;
    for (int n = 1; n <= o.n; ++n) r.append(verify_bimodule_iso(n));
    return finish_report(out, r);
  }
  if (o.op == "k-maps") {
    need_args(o, 0, "nilcox k-maps [--n N] [--flavor G|K]");
    const Flavor f = o.flavor == "K" ? Flavor::projectives : o.flavor == "G" ? Flavor::simples
                                                                              : throw UsageError("flavor must be G or K");
    const KVector v = KVector::basis(f, o.n);
    const auto phi = [f](const KVector& x) { return f == Flavor::simples ? phi_G(x) : phi_K(x); };
    json j;
    j["class"] = v.str();
    j["ind"] = ind_K(v).str();
    j["res"] = res_K(v).str();
    j["phi"] = phi(v).str();
    j["phi_ind"] = phi(ind_K(v)).str();
    j["phi_res"] = phi(res_K(v)).str();
    std::string text;
    for (const auto& [key, val] : j.items()) text += key + ": " + val.get<std::string>() + "\n";
    text.pop_back();
    out.emit(text, j);
    return kOk;
  }
  throw UsageError("unknown nilcox operation '" + o.op + "'");
}

int run_heis(const Options& o, const Output& out) {
  if (o.op == "normalize") {
    need_args(o, 1, "heis normalize <word>");
    const HeisNormal r = heis_normalize(parse_heis_word(o.args[0]));
    out.emit(r.str(), json::parse(r.to_json()));
  } else if (o.op == "mul") {
    need_args(o, 2, "heis mul <word> <word>");
    const HeisNormal r =
        heis_product(heis_normalize(parse_heis_word(o.args[0])), heis_normalize(parse_heis_word(o.args[1])));
    out.emit(r.str(), json::parse(r.to_json()));
  } else if (o.op == "fock") {
    need_args(o, 2, "heis fock <word> <literal>");
    const SymFunc r = fock_apply(heis_normalize(parse_heis_word(o.args[0])), SymFunc::parse(o.args[1]));
    out.emit(r.str(), json::parse(r.to_json()));
  } else if (o.op == "verify") {
    need_args(o, 0, "heis verify [--m M] [--n N] [--degree D]");
    const int d = o.degree.value_or(o.max_degree);
    VerificationReport r = verify_heis_relation(o.m, o.n, d);
    r.append(verify_boson_relation(o.m, o.n, d));
    r.append(verify_weak_fock(o.m, o.n, d));
    return finish_report(out, r);
  } else {
    throw UsageError("unknown heis operation '" + o.op + "'");
  }
  return kOk;
}

int run_bimod(const Options& o, const Output& out) {
  if (o.op == "verify-relations") {
    need_args(o, 0, "bimod verify-relations [--max-rank N]");
    VerificationReport r;
    for (LocalRelation rel : all_local_relations())
      for (int n = 0; n <= o.max_rank; ++n) r.append(verify_local_relation(rel, n));
    return finish_report(out, r);
  }
  if (o.op == "mackey") {
    need_args(o, 0, "bimod mackey [--k K]");
    return finish_report(out, mackey_check(o.k));
  }
  if (o.op == "decompose") {
    need_args(o, 2, "bimod decompose <partition> <partition>");
    const json j = partition_map_json(
        induced_character_decomposition(Partition::parse(o.args[0]), Partition::parse(o.args[1]), o.max_degree + 1));
    out.emit(j.dump(), j);
    return kOk;
  }
  throw UsageError("unknown bimod operation '" + o.op + "'");
}

std::pair<IdempotentKind, int> parse_object(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("object must look like S:n or L:n, got '" + s + "'");
  const std::string kind = s.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad object size in '" + s + "'");
  }
  if (n < 1) throw UsageError("object size must be positive in '" + s + "'");
  if (kind == "S" || kind == "S_down") return {IdempotentKind::S_down, n};
  if (kind == "L" || kind == "Lambda_up") return {IdempotentKind::Lambda_up, n};
  throw UsageError("unknown object kind '" + kind + "'");
}

int run_diag(const Options& o, const Output& out) {
  if (o.op == "parse") {
    need_args(o, 1, "diag parse <diagram>");
    const Diagram d = Diagram::parse(o.args[0]);
    json j;
    j["diagram"] = d.str();
    j["domain"] = signature_str(d.domain());
    j["codomain"] = signature_str(d.codomain());
    out.emit(d.str() + "\n" + signature_str(d.domain()) + " -> " + signature_str(d.codomain()), j);
  } else if (o.op == "simplify") {
    need_args(o, 1, "diag simplify <diagram>");
    out.emit(simplify(Morphism::parse(o.args[0])).str());
  } else if (o.op == "eval") {
    need_args(o, 1, "diag eval <diagram>");
    const ClosedValue v = evaluate_closed(Morphism::parse(o.args[0]));
    if (const Rational* r = std::get_if<Rational>(&v)) {
      out.emit(to_string(*r));
    } else {
      const Irreducible& irr = std::get<Irreducible>(v);
      json j;
      j["irreducible"] = irr.residue.str();
      out.emit(irr.str(), j);
    }
  } else if (o.op == "k0") {
    std::vector<std::pair<IdempotentKind, int>> objects;
    for (const auto& a : o.args) objects.push_back(parse_object(a));
    const HeisNormal r = k0_class(objects);
    out.emit(r.str(), json::parse(r.to_json()));
  } else {
    throw UsageError("unknown diag operation '" + o.op + "'");
  }
  return kOk;
}

int run_verify_all(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.max_degree = o.max_degree;
  so.max_rank = o.max_rank;
  so.seed = o.seed;
  const std::vector<VerificationCase> cases = run_suite(so);
  const bool ok = std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.status != CaseStatus::fail; });
  if (o.json) {
    out << cases_to_json(cases, kVersion) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& c : cases) {
      out << (c.status == CaseStatus::pass ? "pass  " : c.status == CaseStatus::fail ? "FAIL  " : "skip  ") << c.module
          << "/" << c.id << "  " << c.detail << '\n';
      passed += c.status == CaseStatus::pass;
    }
    out << passed << "/" << cases.size() << " cases passed\n";
  }
  return ok ? kOk : kVerificationFailed;
}

bool is_usage_error(const Error& e) {
  static const std::vector<std::string> kinds = {
      "ParseError",         "PreconditionError", "IllFormedSlice",   "SignatureMismatch",    "RankMismatch",
      "FlavorMismatch",     "LatticeMismatch",   "BoundExceeded",    "InsufficientVariables", "NotBraidOnly",
      "UnrealizableAtRank", "NonIntegralResult"};
  return std::find(kinds.begin(), kinds.end(), e.kind()) != kinds.end();
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with the Heisenberg algebra and its categorifications", "heiscat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--max-degree", o.max_degree, "Degree limit for verifications")->check(CLI::NonNegativeNumber);
  app.add_option("--max-rank", o.max_rank, "Rank limit for verifications")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto with_op = [&](CLI::App* sub) {
    sub->add_option("operation", o.op, "Operation")->required();
    sub->add_option("args", o.args, "Operands");
    return sub;
  };
  CLI::App* sym = with_op(app.add_subcommand("sym", "Symmetric functions: convert mul pair schur lr coproduct antipode"));
  CLI::App* weyl = with_op(app.add_subcommand("weyl", "Weyl algebra: normalize apply pair"));
  CLI::App* nilcox = with_op(app.add_subcommand("nilcox", "NilCoxeter algebras: mul verify-iso k-maps"));
  nilcox->add_option("--rank", o.rank, "Rank of the algebra");
  nilcox->add_option("--n", o.n, "Level");
  nilcox->add_option("--flavor", o.flavor, "G (simples) or K (projectives)");
  CLI::App* heis = with_op(app.add_subcommand("heis", "Heisenberg algebra: normalize mul fock verify"));
  heis->add_option("--m", o.m, "Index m");
  heis->add_option("--n", o.n, "Index n");
  heis->add_option("--degree", o.degree, "Degree cutoff");
  CLI::App* bimod = with_op(app.add_subcommand("bimod", "Bimodule model: verify-relations mackey decompose"));
  bimod->add_option("--k", o.k, "Rank for the Mackey check");
  CLI::App* diag = with_op(app.add_subcommand("diag", "Diagrams: parse simplify eval k0"));
  CLI::App* verify_all = app.add_subcommand("verify-all", "Run the whole invariant suite");

  // CLI11 reads a bracketed value such as `[2,1]` as list syntax, so such
  // operands are shielded with a marker that is removed after parsing.
  constexpr char kShield = '\x1f';
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    reversed.push_back(!it->empty() && it->front() == '[' ? kShield + *it : *it);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  for (std::string& a : o.args)
    if (!a.empty() && a.front() == kShield) a.erase(0, 1);
  try {
    std::string command = o.op.empty() ? "" : " " + o.op;
    if (*sym) return run_sym(o, Output{o, out, "sym" + command});
    if (*weyl) return run_weyl(o, Output{o, out, "weyl" + command});
    if (*nilcox) return run_nilcox(o, Output{o, out, "nilcox" + command});
    if (*heis) return run_heis(o, Output{o, out, "heis" + command});
    if (*bimod) return run_bimod(o, Output{o, out, "bimod" + command});
    if (*diag) return run_diag(o, Output{o, out, "diag" + command});
    if (*verify_all) return run_verify_all(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationFailure& e) {
    err << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_usage_error(e) ? kUsage : kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "no subcommand\n";
  return kUsage;
}

}  // namespace heiscat::cli
