#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "flamingo/combinat.hpp"
#include "flamingo/diagrams.hpp"
#include "flamingo/error.hpp"
#include "flamingo/grassmann.hpp"
#include "flamingo/invariants.hpp"
#include "flamingo/relations.hpp"
#include "flamingo/specht.hpp"
#include "flamingo/tableaux.hpp"
#include "flamingo/verify.hpp"

namespace flamingo::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  int jobs = 0;
};

// Blocks separated by `|`, elements by whitespace; need not cover [n].
std::vector<Block> parse_blocks(const std::string& text) {
  std::vector<Block> blocks;
  if (text.find_first_not_of(" \t") == std::string::npos) return blocks;
  std::stringstream all(text);
  std::string piece;
  while (std::getline(all, piece, '|')) {
    std::istringstream in(piece);
    Block b;
    std::string token;
    while (in >> token) {
      try {
        std::size_t used = 0;
        b.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorKind::kParse, "not an integer: " + token);
      }
    }
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::string integer_text(const Integer& v) { return v.str(); }

int verdict(bool ok) { return ok ? kExitOk : kExitFailed; }

// ---------------------------------------------------------------------------

struct InvariantArgs {
  std::string partition;
  int r = 1;
  bool pretty = false;
};

int run_invariant(const InvariantArgs& a, const Globals& g, std::ostream& out) {
  const auto p = jellyfish_invariant(OrderedSetPartition::parse(a.partition), a.r);
  if (g.json && !a.pretty) out << to_json(p).dump() << '\n';
  else out << to_pretty(p) << '\n';
  return kExitOk;
}

int run_tableaux(const InvariantArgs& a, const Globals& g, std::ostream& out) {
  const auto pi = OrderedSetPartition::parse(a.partition);
  const auto list = enumerate_tableaux(pi, a.r);
  if (g.json) {
    json arr = json::array();
    for (const auto& t : list) {
      json rows = json::array();
      for (int j = 1; j <= pi.num_blocks(); ++j) rows.push_back(t.rows_of_column(j));
      arr.push_back({{"rows", rows}, {"inversions", t.inversions()}, {"sign", t.sign()}});
    }
    out << json{{"count", list.size()}, {"tableaux", arr}}.dump() << '\n';
    return kExitOk;
  }
  out << "count=" << list.size() << '\n';
  for (std::size_t i = 0; i < list.size(); ++i) {
    out << "# " << i + 1 << " inversions=" << list[i].inversions() << " sign=" << list[i].sign() << '\n'
        << list[i].render();
  }
  return kExitOk;
}

struct RecurrenceArgs {
  std::string a, b, c, prefix;
  int r = 1;
};

int run_recurrence(const RecurrenceArgs& a, const Globals& g, std::ostream& out) {
  const auto pieces = [](const std::string& text) {
    auto blocks = parse_blocks(text);
    if (blocks.size() != 1) throw Error(ErrorKind::kParse, "expected a single block: " + text);
    return blocks.front();
  };
  const auto prefix = parse_blocks(a.prefix);
  const Block sa = pieces(a.a), sb = pieces(a.b), sc = pieces(a.c);
  const auto terms = recurrence_terms(prefix, sa, sb, sc, a.r);
  const auto left = recurrence_left(prefix, sa, sb, sc);
  const bool ok = verify_recurrence(prefix, sa, sb, sc, a.r);
  if (g.json) {
    json arr = json::array();
    for (const auto& t : terms) arr.push_back({{"sign", t.sign}, {"partition", t.partition.to_string()}});
    out << json{{"left", left.to_string()}, {"terms", arr}, {"holds", ok}}.dump() << '\n';
  } else {
    out << '[' << left.to_string() << "]_" << a.r << " =";
    for (const auto& t : terms) out << ' ' << (t.sign > 0 ? '+' : '-') << '[' << t.partition.to_string() << ']';
    out << '\n' << (ok ? "holds" : "FAILS") << '\n';
  }
  return verdict(ok);
}

struct FamilyArgs {
  std::string family = "nc";
  std::string partition;
  int n = 0, d = 1, r = 1;
};

int run_independence(const FamilyArgs& a, const Globals& g, std::ostream& out) {
  std::vector<OrderedSetPartition> family;
  int r = a.r;
  if (a.family == "nc") family = enumerate_noncrossing(a.n, a.d, r);
  else if (a.family == "hook") {
    family = hook_family(a.n, a.d);
    r = 1;
  } else if (a.family == "orbit") family = rotation_orbit(OrderedSetPartition::parse(a.partition));
  else if (a.family == "conjecture") family = conjecture_family(a.n, a.d, r);
  else throw Error(ErrorKind::kInvalidParameters, "unknown family " + a.family);
  std::vector<MatrixPolynomial> invariants;
  for (const auto& p : family) invariants.push_back(jellyfish_invariant(p, r));
  const auto profile = exact_rank(invariants);
  const bool ok = profile.rank == static_cast<int>(family.size());
  if (g.json) {
    out << json{{"family", a.family}, {"size", family.size()}, {"rank", profile.rank},
                {"monomials", profile.num_monomials}, {"independent", ok}}
               .dump()
        << '\n';
  } else {
    out << "family=" << family.size() << " rank=" << profile.rank << ' '
        << (ok ? "independent" : "DEPENDENT") << '\n';
  }
  return verdict(ok);
}

int run_specht_check(const InvariantArgs& a, const Globals& g, std::ostream& out) {
  const auto pi = OrderedSetPartition::parse(a.partition);
  const SpechtShape shape = SpechtShape::flamingo(pi.size(), pi.num_blocks(), a.r);
  const bool ok = membership_test(jellyfish_invariant(pi, a.r), shape);
  if (g.json) {
    out << json{{"lambda", shape.lambda}, {"dimension", integer_text(dimension(shape))}, {"member", ok}}.dump()
        << '\n';
  } else {
    out << (ok ? "in module" : "NOT IN MODULE") << " dimension=" << dimension(shape) << '\n';
  }
  return verdict(ok);
}

int run_gc_compare(const InvariantArgs& a, const Globals& g, std::ostream& out) {
  const auto pi = OrderedSetPartition::parse(a.partition);
  const auto gc = gc_jellyfish(pi, a.r);
  const auto sign = compare_up_to_sign(phi_star(gc), jellyfish_invariant(pi, a.r));
  if (g.json) {
    json j{{"expression", gc.to_json()}, {"proportional", sign.has_value()}};
    if (sign) j["sign"] = *sign;
    j["predicted_sign"] = predicted_global_sign(pi, a.r);
    out << j.dump() << '\n';
  } else if (sign) {
    out << (*sign > 0 ? "+1" : "-1") << '\n';
  } else {
    out << "NOT PROPORTIONAL\n";
  }
  return verdict(sign.has_value());
}

struct DiagramArgs {
  std::string partition;
  int r = 1;
  std::string format = "dot";
  std::string out_file;
};

int run_diagram(const DiagramArgs& a, std::ostream& out) {
  const auto pi = OrderedSetPartition::parse(a.partition);
  const std::string text = export_diagram(build_tensor_diagram(pi, a.r), a.format);
  if (a.out_file.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return kExitOk;
  }
  std::ofstream file(a.out_file);
  if (!file) throw Error(ErrorKind::kInvalidParameters, "cannot write " + a.out_file);
  file << text;
  return kExitOk;
}

int run_hook_basis(const FamilyArgs& a, const Globals& g, std::ostream& out) {
  const auto rep = verify_hook_basis(a.n, a.d);
  if (g.json) {
    out << json{{"family", rep.family_size}, {"rank", rep.rank}, {"dimension", integer_text(rep.dimension)},
                {"members_in_module", rep.all_members_in_module}, {"basis", rep.holds()}}
               .dump()
        << '\n';
  } else {
    out << "family=" << rep.family_size << " rank=" << rep.rank << " dimension=" << rep.dimension
        << " members-in-module=" << (rep.all_members_in_module ? "yes" : "no") << '\n';
  }
  return verdict(rep.holds());
}

int run_conjecture(const FamilyArgs& a, const Globals& g, std::ostream& out) {
  const auto rep = verify_conjecture(a.n, a.d, a.r);
  if (g.json) {
    out << json{{"family", rep.family_size}, {"rank", rep.rank}, {"independent", rep.holds()}}.dump() << '\n';
  } else {
    out << "family=" << rep.family_size << " rank=" << rep.rank << '\n';
  }
  return verdict(rep.holds());
}

int run_orbit_rank(const InvariantArgs& a, const Globals& g, std::ostream& out) {
  const auto orbit = rotation_orbit(OrderedSetPartition::parse(a.partition));
  std::vector<MatrixPolynomial> invariants;
  for (const auto& p : orbit) invariants.push_back(jellyfish_invariant(p, a.r));
  const int rank = exact_rank(invariants).rank;
  if (g.json) {
    json members = json::array();
    for (const auto& p : orbit) members.push_back(p.to_string());
    out << json{{"orbit", orbit.size()}, {"rank", rank}, {"members", members}}.dump() << '\n';
  } else {
    out << "orbit=" << orbit.size() << " rank=" << rank << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  int n_max = 0;
  std::vector<int> only;
};

int run_verify_all(const VerifyArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.n_max = a.n_max;
  options.jobs = g.jobs;
  options.seed = g.seed;
  options.progress = [&err](const std::string& line) { err << line << std::endl; };
  std::vector<int> ids = a.only;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  bool all_ok = true;
  json arr = json::array();
  for (int id : ids) {
    const auto res = run_criterion(id, options);
    all_ok = all_ok && res.passed();
    if (g.json) {
      arr.push_back({{"id", res.id}, {"title", res.title}, {"passed", res.passed()},
                     {"checks_passed", res.checks_passed}, {"within_budget", res.within_budget},
                     {"seconds", res.seconds}, {"budget_seconds", res.budget_seconds}, {"detail", res.detail}});
    } else {
      out << res.summary() << std::endl;
    }
  }
  if (g.json) out << json{{"passed", all_ok}, {"criteria", arr}}.dump() << '\n';
  return verdict(all_ok);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jellyfish invariants: construction and verification", "flamingo"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--jobs", g.jobs, "worker threads (default: FLAMINGO_JOBS or the core count)")
      ->check(CLI::NonNegativeNumber);

  std::function<int()> action;

  InvariantArgs inv;
  auto add_partition = [](CLI::App* sub, InvariantArgs& target) {
    sub->add_option("--partition", target.partition, "blocks separated by |")->required();
    sub->add_option("--r", target.r, "number of full rows")->required();
  };
  auto* invariant = app.add_subcommand("invariant", "print the jellyfish invariant");
  add_partition(invariant, inv);
  invariant->add_flag("--pretty", inv.pretty, "human-readable polynomial");
  invariant->callback([&] { action = [&] { return run_invariant(inv, g, out); }; });

  auto* tableaux = app.add_subcommand("tableaux", "list the jellyfish tableaux");
  add_partition(tableaux, inv);
  tableaux->callback([&] { action = [&] { return run_tableaux(inv, g, out); }; });

  RecurrenceArgs rec;
  auto* recurrence = app.add_subcommand("recurrence", "check the block recurrence");
  recurrence->add_option("--A", rec.a)->required();
  recurrence->add_option("--B", rec.b)->required();
  recurrence->add_option("--C", rec.c)->required();
  recurrence->add_option("--r", rec.r)->required();
  recurrence->add_option("--prefix", rec.prefix, "leading blocks separated by |");
  recurrence->callback([&] { action = [&] { return run_recurrence(rec, g, out); }; });

  FamilyArgs fam;
  auto* independence = app.add_subcommand("independence", "exact rank of a family of invariants");
  independence->add_option("--family", fam.family)->check(CLI::IsMember({"nc", "hook", "orbit", "conjecture"}));
  independence->add_option("--n", fam.n);
  independence->add_option("--d", fam.d);
  independence->add_option("--r", fam.r);
  independence->add_option("--partition", fam.partition, "orbit seed");
  independence->callback([&] { action = [&] { return run_independence(fam, g, out); }; });

  auto* specht = app.add_subcommand("specht-check", "membership in the flamingo Specht module");
  add_partition(specht, inv);
  specht->callback([&] { action = [&] { return run_specht_check(inv, g, out); }; });

  auto* gc = app.add_subcommand("gc-compare", "compare the Grassmann-Cayley form with the invariant");
  add_partition(gc, inv);
  gc->callback([&] { action = [&] { return run_gc_compare(inv, g, out); }; });

  DiagramArgs dia;
  auto* diagram = app.add_subcommand("diagram", "export the tensor diagram");
  diagram->add_option("--partition", dia.partition)->required();
  diagram->add_option("--r", dia.r)->required();
  diagram->add_option("--format", dia.format)->check(CLI::IsMember({"dot", "json"}));
  diagram->add_option("--out", dia.out_file);
  diagram->callback([&] { action = [&] { return run_diagram(dia, out); }; });

  auto* hook = app.add_subcommand("hook-basis", "check the hook family basis");
  hook->add_option("--n", fam.n)->required();
  hook->add_option("--d", fam.d)->required();
  hook->callback([&] { action = [&] { return run_hook_basis(fam, g, out); }; });

  auto* conj = app.add_subcommand("conjecture", "rank of the near-noncrossing family");
  conj->add_option("--n", fam.n)->required();
  conj->add_option("--d", fam.d)->required();
  conj->add_option("--r", fam.r)->required();
  conj->callback([&] { action = [&] { return run_conjecture(fam, g, out); }; });

  auto* orbit = app.add_subcommand("orbit-rank", "size and rank of a rotation orbit");
  add_partition(orbit, inv);
  orbit->callback([&] { action = [&] { return run_orbit_rank(inv, g, out); }; });

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify-all", "run the acceptance checks");
  verify->add_option("--n-max", ver.n_max, "override the sweep bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--only", ver.only, "criterion ids")->check(CLI::Range(1, kCriterionCount));
  verify->callback([&] { action = [&] { return run_verify_all(ver, g, out, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace flamingo::cli
