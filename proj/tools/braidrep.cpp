// braidrep: command-line front end for the verification suites.
// Exit status: 0 pass, 1 fail, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidrep/gassner.hpp"
#include "braidrep/group_words.hpp"
#include "braidrep/quandle.hpp"
#include "braidrep/switch.hpp"

using namespace braidrep;
using json = nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json_mode = false;
  json payload = json::object();
  std::string text;
  bool pass = true;
};

void render_check(const CheckReport& c, std::ostringstream& os, int depth = 0) {
  os << std::string(2 * depth, ' ') << c.check << ": " << (c.pass ? "PASS" : "FAIL");
  if (!c.pass && !c.counterexample.is_null() && c.parts.empty()) os << "  counterexample " << c.counterexample.dump();
  os << "\n";
  for (const auto& p : c.parts) render_check(p, os, depth + 1);
  if (depth == 0 && !c.details.is_null() && c.details.is_object())
    for (const auto& [k, v] : c.details.items()) os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

void render_audit(const AuditReport& a, std::ostringstream& os) {
  os << a.representation << " n=" << a.n << ": " << (a.pass() ? "PASS" : "FAIL") << " (" << a.checks.size()
     << " relators)\n";
  for (const auto& c : a.checks)
    if (!c.pass) os << "  " << to_string(c.tag) << ": " << c.lhs << " = " << c.rhs << " fails: " << c.mismatch << "\n";
}

std::vector<int> parse_subset(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("bad subset element '" + tok + "'");
    }
  }
  if (out.empty()) throw InputError("empty subset");
  return out;
}

StructureFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return read_structure_file(in);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---- ybe ---------------------------------------------------------------

struct YbeOptions {
  std::string builtin;
  std::string file;
  std::string symbolic;
  int size = 3;
  int modulus = 5;
  int t = 2;
  bool manturov = false;
  bool virtual_twist = false;
  std::string subset = "0";
  int perm_n = 0;
};

std::optional<FiniteQuandle> quandle_source(const YbeOptions& o) {
  if (!o.file.empty()) {
    auto f = load(o.file);
    if (f.kind != "quandle") return std::nullopt;
    try {
      return FiniteQuandle::from_table(f.tables[0]);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  if (o.builtin == "dihedral") return FiniteQuandle::dihedral(o.size);
  if (o.builtin == "trivial") return FiniteQuandle::trivial(o.size);
  return std::nullopt;
}

FiniteSwitch switch_source(const YbeOptions& o) {
  try {
    if (!o.file.empty()) {
      auto f = load(o.file);
      if (f.kind == "switch") return FiniteSwitch::from_tables(f.tables[0], f.tables[1]);
      if (f.kind == "quandle") return quandle_switch(FiniteQuandle::from_table(f.tables[0]));
      if (f.kind == "group") return artin_switch(FiniteGroup(f.tables[0]));
      return skew_brace_switch(FiniteSkewBrace(FiniteGroup(f.tables[0]), FiniteGroup(f.tables[1])));
    }
    if (o.builtin.empty()) throw InputError("ybe needs --builtin, --file or --symbolic");
    if (o.builtin == "trivial") return quandle_switch(FiniteQuandle::trivial(o.size));
    BuiltinParams p;
    p.size = o.size;
    p.modulus = o.modulus;
    p.t = o.t;
    return builtin_switch(o.builtin, p);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void run_ybe(const YbeOptions& o, Output& out) {
  std::ostringstream os;
  std::vector<CheckReport> reports;
  std::optional<AuditReport> audit;
  if (o.symbolic == "s2b" || o.symbolic == "s3b") {
    reports.push_back(symbolic_multiswitch_check(o.symbolic == "s2b" ? SymbolicCheck::S2B : SymbolicCheck::S3B_V3B));
  } else if (o.symbolic == "biquandle" || o.manturov) {
    std::optional<FiniteBiquandle> bq;
    std::optional<FiniteQuandle> q = quandle_source(o);
    try {
      if (q) {
        bq = FiniteBiquandle::from_quandle(*q);
      } else if (!o.file.empty()) {
        FiniteSwitch s = switch_source(o);
        // up(x, a) = S^l(a, x), down(a, b) = S^r(a, b)
        OperationTable up = OperationTable::from_function(s.size(), [&](int x, int a) { return s(a, x).first; });
        bq = FiniteBiquandle(up, s.right_table());
      } else {
        throw InputError("biquandle checks need a quandle (--builtin dihedral|trivial) or a table file");
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    std::vector<int> subset = parse_subset(o.subset);
    try {
      if (o.manturov) {
        if (!q) throw InputError("--manturov needs a quandle");
        auto pair = manturov_pair(*q, subset);
        reports.push_back(check_virtual_pair(pair.assembled()));
        if (o.perm_n) audit = PermutationRep(pair.s.assembled(), pair.v.assembled(), o.perm_n).audit();
      } else {
        reports.push_back(check_biquandle_pair(*bq, subset));
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  } else if (!o.symbolic.empty()) {
    throw InputError("--symbolic takes s2b, s3b or biquandle");
  } else {
    FiniteSwitch s = switch_source(o);
    if (o.virtual_twist) {
      reports.push_back(check_virtual_pair({s, twist(s.size())}));
    } else {
      reports.push_back(check_ybe(s));
    }
    if (o.perm_n) {
      try {
        audit = PermutationRep(s, o.virtual_twist ? std::optional(twist(s.size())) : std::nullopt, o.perm_n).audit();
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
    }
  }
  json reps = json::array();
  for (const auto& r : reports) {
    render_check(r, os);
    reps.push_back(r.to_json());
    out.pass = out.pass && r.pass;
  }
  out.payload = reports.size() == 1 ? reps[0] : json{{"reports", reps}};
  if (audit) {
    render_audit(*audit, os);
    out.payload = {{"check", out.payload}, {"permutation", audit->to_json()}};
    out.pass = out.pass && audit->pass();
  }
  out.text = os.str();
}

// ---- rep-verify --------------------------------------------------------

template <class Eval>
bool composition_contract(Eval&& eval, int n, bool virt, std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<int> len(0, 6);
  for (int k = 0; k < trials; ++k) {
    BraidWord u = random_braid_word(rng, n, len(rng), virt);
    BraidWord v = random_braid_word(rng, n, len(rng), virt);
    if (!eval(u * v, u, v)) return false;
  }
  return true;
}

void run_rep_verify(const std::string& rep, int n, std::uint64_t seed, int trials, Output& out) {
  if (n < 2 || n > 8) throw InputError("--n must be in 2..8");
  std::ostringstream os;
  std::mt19937_64 rng(seed);
  AuditReport audit;
  bool witnesses = true, contract = true;
  if (auto g = group_rep_from_string(rep)) {
    GroupRep r = builtin_group_rep(*g, n);
    audit = r.audit();
    witnesses = r.verify_inverse_witnesses();
    contract = composition_contract(
        [&](const BraidWord& uv, const BraidWord& u, const BraidWord& v) {
          return r.evaluate(uv) == gw_compose(r.evaluate(u), r.evaluate(v));
        },
        n, r.is_virtual(), rng, trials);
  } else if (auto q = quandle_rep_from_string(rep)) {
    QuandleRep r = *q == QuandleRepName::Phi2Q ? rep_phi2Q(n) : rep_fq_n_plus_1(n);
    audit = r.audit();
    witnesses = r.verify_inverse_witnesses();
    contract = composition_contract(
        [&](const BraidWord& uv, const BraidWord& u, const BraidWord& v) {
          return r.evaluate(uv) == q_compose(r.evaluate(u), r.evaluate(v));
        },
        n, true, rng, trials);
  } else if (auto s = sl_rep_from_string(rep)) {
    audit = sl_audit(*s, n);
    for (int i = 1; i < n; ++i) {
      std::vector<BraidLetter> gens{BraidLetter::sigma(i)};
      if (*s == SlRep::Phi3B) gens.push_back(BraidLetter::rho(i));
      for (const auto& l : gens) {
        BraidWord w(n, {l, l.inverse()});
        witnesses = witnesses && sl_evaluate_word(*s, w).image.is_identity() &&
                    sl_evaluate_word(*s, w.inverse()).image.is_identity();
      }
    }
    contract = composition_contract(
        [&](const BraidWord& uv, const BraidWord& u, const BraidWord& v) {
          return sl_evaluate_word(*s, uv).image ==
                 sl_compose(sl_evaluate_word(*s, u).image, sl_evaluate_word(*s, v).image);
        },
        n, *s == SlRep::Phi3B, rng, trials);
  } else {
    throw InputError("unknown representation '" + rep + "'");
  }
  render_audit(audit, os);
  os << "inverse witnesses: " << (witnesses ? "PASS" : "FAIL") << "\n";
  os << "composition contract (" << trials << " random pairs, seed " << seed << "): " << (contract ? "PASS" : "FAIL")
     << "\n";
  out.pass = audit.pass() && witnesses && contract;
  out.payload = {{"audit", audit.to_json()},
                 {"inverse_witnesses", witnesses},
                 {"composition_contract", {{"pass", contract}, {"trials", trials}, {"seed", seed}}},
                 {"pass", out.pass}};
  out.text = os.str();
}

// ---- matrix ------------------------------------------------------------

void run_matrix(const std::string& rep, int n, const std::string& word, const std::string& target, Output& out) {
  auto r = sl_rep_from_string(rep);
  if (!r) throw InputError("matrix needs --rep phi2b, phi3b or burau");
  RepMatrixReport report = [&] {
    try {
      return sl_evaluate_word(*r, BraidWord::parse(word, n));
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }();
  if (!target.empty()) {
    if (target != "t" && target != "q1") throw InputError("--specialize takes t or q1");
    report.image = sl_specialize(report.image, target == "t" ? Specialization::AllTtoT : Specialization::QtoOne);
    report.is_linear = report.image.is_linear();
    report.is_upper_triangular = report.image.is_upper_triangular();
  }
  out.payload = report.to_json();
  out.text = to_string(*r) + "(" + report.word + ")" + (report.is_linear ? " [linear]" : "") +
             (report.is_upper_triangular ? " [upper triangular]" : "") + "\n" + report.image.str();
}

// ---- quandle-act -------------------------------------------------------

void run_quandle_act(const std::string& rep, int n, const std::string& word, const std::string& term, Output& out) {
  auto name = quandle_rep_from_string(rep);
  if (!name) throw InputError("quandle-act needs --rep phi2q or fqn1");
  try {
    QuandleRep r = *name == QuandleRepName::Phi2Q ? rep_phi2Q(n) : rep_fq_n_plus_1(n);
    QuandleTerm t = QuandleTerm::parse(r.universe(), term);
    QuandleAutoMap a = r.evaluate(BraidWord::parse(word, n));
    QuandleTerm img = a.apply(t);
    out.payload = {{"rep", to_string(*name)}, {"word", word}, {"term", t.str()}, {"image", img.str()},
                   {"element", img.element().str()}};
    out.text = t.str() + "  ->  " + img.str() + "\n(group element " + img.element().str() + ")\n";
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

// ---- kernel / specialize -----------------------------------------------

void run_kernel(Output& out) {
  KernelWitness k = kernel_witness();
  out.pass = k.pass();
  out.payload = k.to_json();
  std::ostringstream os;
  os << "kernel witness: " << (k.pass() ? "PASS" : "FAIL") << "\n"
     << "word in {A = lambda_12, B = lambda_13}: " << k.word.str() << "\n"
     << "free reduced length: " << k.free_reduced_length << "\n"
     << "braid word length: " << k.expansion.length() << "\n"
     << "image:\n"
     << k.image.str();
  out.text = os.str();
}

void run_specialize(int n, Output& out) {
  if (n < 2 || n > 12) throw InputError("--n must be in 2..12");
  CheckReport r = CheckReport::all_of("specialize", {burau_recovery(n), q_to_one_recovery(n)});
  std::ostringstream os;
  render_check(r, os);
  out.pass = r.pass;
  out.payload = r.to_json();
  out.text = os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid group representations from switches: exact verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false;
  std::uint64_t seed = 20240521;
  app.add_flag("--json", json_out, "Emit a machine-readable JSON payload");
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  YbeOptions yo;
  auto* ybe = app.add_subcommand("ybe", "Check switches, virtual pairs and symbolic multi-switches");
  ybe->add_option("--builtin", yo.builtin, "twist, artin, burau, dihedral, trivial, skewbrace-trivial");
  ybe->add_option("--file", yo.file, "Structure file (quandle, group, switch or skewbrace)");
  ybe->add_option("--symbolic", yo.symbolic, "s2b, s3b or biquandle");
  ybe->add_option("--size", yo.size, "Carrier size for builtins")->capture_default_str();
  ybe->add_option("--modulus", yo.modulus, "Modulus for the Burau switch")->capture_default_str();
  ybe->add_option("--t", yo.t, "Unit t for the Burau switch")->capture_default_str();
  ybe->add_flag("--manturov", yo.manturov, "Check the Manturov pair of a quandle and trivial subquandle");
  ybe->add_flag("--virtual", yo.virtual_twist, "Check the pair (S, twist)");
  ybe->add_option("--subset", yo.subset, "Trivial subquandle as comma-separated elements")->capture_default_str();
  ybe->add_option("--perm-n", yo.perm_n, "Also audit the permutation action on X^n");

  std::string rep, word, term, target;
  int n = 3;
  int trials = 20;
  auto* rv = app.add_subcommand("rep-verify", "Relator audit of a representation");
  rv->add_option("--rep", rep, "artin|artinb|phim|phimtilde|phi2q|fqn1|phi2b|phi3b|burau")->required();
  rv->add_option("--n", n, "Number of strands")->required();
  rv->add_option("--trials", trials, "Random word pairs for the composition contract")->capture_default_str();

  auto* mx = app.add_subcommand("matrix", "Semilinear image of a braid word");
  mx->add_option("--rep", rep, "phi2b|phi3b|burau")->required();
  mx->add_option("--n", n, "Number of strands")->required();
  mx->add_option("--word", word, "Braid word, e.g. \"r1 s1^-1\"")->required();
  mx->add_option("--specialize", target, "t (all t_i = t) or q1 (all q_i = 1)");

  std::string qrep = "phi2q";
  auto* qa = app.add_subcommand("quandle-act", "Apply the image of a braid word to a quandle term");
  qa->add_option("--n", n, "Number of strands")->required();
  qa->add_option("--word", word, "Braid word")->required();
  qa->add_option("--term", term, "Quandle term, e.g. \"x1 * x2 *~ y1\"")->required();
  qa->add_option("--rep", qrep, "phi2q or fqn1")->capture_default_str();

  app.add_subcommand("kernel", "Kernel witness for the virtual pure braid representation");
  int spec_n = 4;
  auto* sp = app.add_subcommand("specialize", "Burau recovery (t_i = t) and q_i = 1 recovery");
  sp->add_option("--n", spec_n, "Number of strands")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  try {
    if (ybe->parsed()) run_ybe(yo, out);
    else if (rv->parsed()) run_rep_verify(rep, n, seed, trials, out);
    else if (mx->parsed()) run_matrix(rep, n, word, target, out);
    else if (qa->parsed()) run_quandle_act(qrep, n, word, term, out);
    else if (sp->parsed()) run_specialize(spec_n, out);
    else run_kernel(out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json_out) {
    json j = out.payload;
    j["status"] = out.pass ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << out.text;
    std::cout << (out.pass ? "status: pass" : "status: fail") << "\n";
  }
  return out.pass ? 0 : 1;
}
