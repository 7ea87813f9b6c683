#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bomega/bomega.hpp"
#include "bomega/serialize.hpp"

using namespace bomega;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kSemantic = 3 };

struct Config {
  std::string family;
  Nat bound = 6;
  std::string output = "text";

  bool json() const { return output == "json"; }
  bool dot() const { return output == "dot"; }
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string report_line(const std::string& name, const VerificationReport& r) {
  std::ostringstream out;
  out << name << ": " << (r.passed ? "pass" : "FAIL") << " (checked " << r.checked << ")";
  if (r.counterexample) {
    out << " counterexample:";
    for (const auto& w : *r.counterexample) out << " " << w;
  }
  if (!r.note.empty()) out << "; " << r.note;
  return out.str();
}

int emit_reports(const Config& cfg, const std::vector<NamedReport>& reports) {
  bool ok = true;
  json arr = json::array();
  for (const auto& [name, r] : reports) {
    ok = ok && r.passed;
    if (cfg.json()) {
      json j{{"check", name}};
      j.update(to_json_value(r));
      arr.push_back(j);
    } else {
      std::cout << report_line(name, r) << "\n";
    }
  }
  if (cfg.json()) print_json(arr);
  return ok ? kOk : kFailed;
}

template <class Elem>
void emit_list(const Config& cfg, const std::vector<Elem>& xs, const char* sep) {
  if (cfg.json()) return print_json(to_json_array(xs));
  for (std::size_t n = 0; n < xs.size(); ++n) std::cout << (n ? sep : "") << to_string(xs[n]);
  std::cout << "\n";
}

template <class Elem>
void emit_one(const Config& cfg, const Elem& x) {
  if (cfg.json())
    print_json(to_json_value(x));
  else
    std::cout << to_string(x) << "\n";
}

bool looks_brandt(const std::string& s) { return s.find(';') != std::string::npos || s.find('O') != std::string::npos; }

// Equations accept either notation; B_ω^F elements go through the embedding.
BrandtElem brandt_operand(const std::string& s, const AtomicFamily& f) {
  if (looks_brandt(s)) return parse_brandt(s);
  return embed(parse_belem(s), f);
}

std::string dot_node(const BElem& x) { return "\"" + to_string(x) + "\""; }

void emit_hasse(const AtomicFamily& f, Nat bound) {
  std::cout << "digraph idempotents {\n  rankdir=BT;\n";
  for (const auto& x : belem_universe(f, bound).elements) {
    if (!is_idempotent(x)) continue;
    std::cout << "  " << dot_node(x) << ";\n";
    if (x.is_zero()) continue;
    for (const auto& p : immediate_predecessors(x, f))
      if (p.is_zero() || p.i() <= bound) std::cout << "  " << dot_node(p) << " -> " << dot_node(x) << ";\n";
  }
  std::cout << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in B_ω^F and its Brandt realization"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--family", cfg.family, "support of the atomic family, e.g. 0,1,3 or 0,2,+5")->required();
  app.add_option("--bound", cfg.bound, "sweep bound")->envname("BRANDT_OMEGA_BOUND");
  app.add_option("--output", cfg.output, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

  int code = kOk;
  std::optional<AtomicFamily> family;
  auto fam = [&]() -> const AtomicFamily& {
    if (!family) family = parse_family(cfg.family);
    return *family;
  };

  // mul
  auto* mul = app.add_subcommand("mul", "product of two elements");
  std::string mul_a, mul_b;
  bool mul_brandt = false;
  mul->add_option("a", mul_a)->required();
  mul->add_option("b", mul_b)->required();
  mul->add_flag("--brandt", mul_brandt, "operands are Brandt elements");
  mul->callback([&] {
    if (mul_brandt) {
      const auto a = parse_brandt(mul_a);
      const auto b = parse_brandt(mul_b);
      require_restricted(a, fam());
      require_restricted(b, fam());
      emit_one(cfg, brandt_multiply(a, b));
    } else {
      emit_one(cfg, multiply(parse_belem(mul_a), parse_belem(mul_b), fam()));
    }
  });

  // solve
  auto* solve = app.add_subcommand("solve", "solutions of A·X = B or X·A = B");
  std::string sol_a, sol_b;
  bool left = false, right = false;
  solve->add_option("a", sol_a)->required();
  solve->add_option("b", sol_b)->required();
  auto* lf = solve->add_flag("--left", left, "solve A·X = B");
  auto* rf = solve->add_flag("--right", right, "solve X·A = B");
  lf->excludes(rf);
  solve->callback([&] {
    if (!left && !right) throw CLI::RequiredError("--left or --right");
    const auto a = brandt_operand(sol_a, fam());
    const auto b = brandt_operand(sol_b, fam());
    const auto s = left ? solve_left(a, b, fam()) : solve_right(a, b, fam());
    if (cfg.json()) return print_json(to_json_value(s));
    if (const auto* z = std::get_if<InfiniteZeroCase>(&s)) {
      std::cout << z->describe() << "\n";
      return;
    }
    for (const auto& x : std::get<FiniteSolutions>(s).solutions) std::cout << to_string(x) << "\n";
  });

  // chain
  auto* chain = app.add_subcommand("chain", "maximal descending chain from an element");
  std::string chain_x;
  chain->add_option("x", chain_x)->required();
  chain->callback([&] {
    const auto x = parse_belem(chain_x);
    require_valid(x, fam());
    emit_list(cfg, maximal_chain_down(x, fam()), " ");
  });

  // census
  auto* census = app.add_subcommand("census", "chain-length census of idempotents");
  bool census_max = false;
  census->add_flag("--maximal", census_max, "count only chains from maximal idempotents");
  census->callback([&] {
    const auto c = census_max ? maximal_chain_census(fam(), cfg.bound) : idempotent_chain_census(fam(), cfg.bound);
    if (cfg.json()) return print_json(to_json_value(c));
    for (const auto& [len, count] : c) std::cout << len << " " << count << "\n";
  });

  // iso
  auto* iso = app.add_subcommand("iso", "decide whether two families give isomorphic semigroups");
  std::string iso_other;
  iso->add_option("--other", iso_other)->required();
  iso->callback([&] {
    const auto n = are_translate_equivalent(fam(), parse_family(iso_other));
    if (cfg.json()) return print_json(n ? json{{"isomorphic", true}, {"n", *n}} : json{{"isomorphic", false}});
    std::cout << (n ? "n=" + std::to_string(*n) : std::string("not-isomorphic")) << "\n";
  });

  // fiber
  auto* fib = app.add_subcommand("fiber", "restricted elements with a given row and column");
  Nat fib_row = 0, fib_col = 0;
  fib->add_option("row", fib_row)->required();
  fib->add_option("col", fib_col)->required();
  fib->callback([&] { emit_list(cfg, fiber(fib_row, fib_col, fam()), "\n"); });

  // embed
  auto* emb = app.add_subcommand("embed", "map into the Brandt realization");
  std::string emb_x;
  bool emb_inverse = false;
  emb->add_option("x", emb_x)->required();
  emb->add_flag("--inverse", emb_inverse, "map a restricted Brandt element back");
  emb->callback([&] {
    if (emb_inverse)
      emit_one(cfg, embed_inverse(parse_brandt(emb_x), fam()));
    else
      emit_one(cfg, embed(parse_belem(emb_x), fam()));
  });

  // order
  auto* order = app.add_subcommand("order", "natural partial order; --output dot draws the idempotent Hasse diagram");
  std::vector<std::string> order_args;
  order->add_option("elements", order_args, "x y")->expected(0, 2);
  order->callback([&] {
    if (cfg.dot() && order_args.empty()) return emit_hasse(fam(), cfg.bound);
    if (order_args.size() != 2) throw ParseError("order expects two elements");
    const auto x = parse_belem(order_args[0]);
    const auto y = parse_belem(order_args[1]);
    require_valid(x, fam());
    require_valid(y, fam());
    const bool leq = nat_leq(x, y);
    if (cfg.json())
      print_json({{"leq", leq}});
    else
      std::cout << (leq ? "true" : "false") << "\n";
  });

  // topo
  auto* topo = app.add_subcommand("topo", "bounded checks of neighbourhood conditions");
  topo->fallthrough();
  topo->require_subcommand(1);

  auto* ac = topo->add_subcommand("ac-check", "shift continuity and inversion at O for the compact topology");
  std::string ac_nbhd, ac_elem;
  ac->add_option("--nbhd", ac_nbhd)->required();
  ac->add_option("--elem", ac_elem)->required();
  ac->callback([&] {
    const auto u = parse_nbhd(ac_nbhd);
    const auto* a = std::get_if<AcNbhd>(&u);
    if (!a) throw ParseError("ac-check expects an ac: neighbourhood");
    code = emit_reports(cfg, {{"shift-continuity", check_shift_continuity_ac(*a, parse_brandt(ac_elem), fam(), cfg.bound)},
                              {"inversion", check_inversion_ac(*a, fam(), cfg.bound)}});
  });

  auto* t1 = topo->add_subcommand("t1-check", "closure of U_n and annihilation at an element");
  Nat t1_n = 0;
  std::string t1_elem;
  t1->add_option("--n", t1_n)->required();
  t1->add_option("--elem", t1_elem, "also check continuity at this element");
  t1->callback([&] {
    const Tau1Nbhd u{t1_n};
    if (t1_elem.empty())
      code = emit_reports(cfg, {{"closure", check_tau1_closure(u, fam(), cfg.bound)}});
    else
      code = emit_reports(cfg, {{"continuity", check_continuity_tau1(u, parse_brandt(t1_elem), fam(), cfg.bound)}});
  });

  auto* pre = topo->add_subcommand("preimage", "no element of the neighbourhood maps into M under φ or ψ");
  std::string pre_nbhd, pre_m;
  pre->add_option("--nbhd", pre_nbhd)->required();
  pre->add_option("--m", pre_m, "comma-separated idempotents")->required();
  pre->callback([&] {
    code = emit_reports(cfg, {{"preimage-avoidance", check_preimage_avoidance(parse_nbhd(pre_nbhd),
                                                                              parse_brandt_list(pre_m), fam(), cfg.bound)}});
  });

  auto* wit = topo->add_subcommand("witness", "element of D annihilating a from one side");
  std::string wit_a, wit_d;
  wit->add_option("--a", wit_a)->required();
  wit->add_option("--d", wit_d)->required();
  wit->callback([&] {
    const auto a = parse_brandt(wit_a);
    const auto d = parse_brandt_list(wit_d);
    require_restricted(a, fam());
    for (const auto& e : d) require_restricted(e, fam());
    const auto w = find_zero_witness(a, d);
    if (cfg.json())
      print_json(w ? to_json_value(*w) : json(nullptr));
    else
      std::cout << (w ? to_string(*w) : std::string("none")) << "\n";
    code = w ? kOk : kFailed;
  });

  auto* mseq = topo->add_subcommand("mseq", "membership in U_n(Y) for an M-sequence");
  std::string mseq_text, mseq_elem;
  std::size_t mseq_n = 1;
  mseq->add_option("--seq", mseq_text, "JSON array of Brandt triples")->required();
  mseq->add_option("--n", mseq_n)->required();
  mseq->add_option("--elem", mseq_elem)->required();
  mseq->callback([&] {
    const bool in = mseq_nbhd_contains(parse_msequence(mseq_text, fam()), mseq_n, parse_extended(mseq_elem));
    if (cfg.json())
      print_json({{"member", in}});
    else
      std::cout << (in ? "true" : "false") << "\n";
  });

  auto* iso_rep = topo->add_subcommand("isolation", "fiber sizes for row, col <= bound");
  iso_rep->callback([&] {
    const auto rep = isolation_report(fam(), cfg.bound);
    if (cfg.json()) {
      json arr = json::array();
      for (const auto& [rc, n] : rep) arr.push_back({{"row", rc.first}, {"col", rc.second}, {"size", n}});
      return print_json(arr);
    }
    for (const auto& [rc, n] : rep) std::cout << rc.first << " " << rc.second << " " << n << "\n";
  });

  // verify
  auto* verify = app.add_subcommand("verify", "bounded verification suite");
  verify->callback([&] { code = emit_reports(cfg, run_verify_suite(fam(), cfg.bound)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return code;
}
