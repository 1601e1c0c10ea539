#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zsum/enumeration.hpp"
#include "zsum/io.hpp"
#include "zsum/numerics.hpp"
#include "zsum/pushdown.hpp"
#include "zsum/solver.hpp"
#include "zsum/verify.hpp"

using namespace zsum;

namespace {

struct ReduceArgs {
  std::string kind = "mzv";
  int weight = 0;
  int max_depth = 0;
  std::string field = "rational";
  std::string basis = "auto";
  bool no_stuffle = false, no_shuffle = false, no_divergent_shuffle = false;
  bool no_doubling = false, no_gdr = false, no_duality = false;
  bool drop_products = false;
  bool skip_trivial_shuffles = false;
  bool form_style = false;
  int group_size = 0;
  int threads = 0;
  std::string out;
  std::string stats_path;
};

RunConfig make_config(const ReduceArgs& a) {
  RunConfig cfg;
  cfg.kind = a.kind == "mzv" ? Kind::mzv : Kind::euler;
  cfg.weight = a.weight;
  cfg.max_depth = a.max_depth;
  cfg.use_stuffle = !a.no_stuffle;
  cfg.use_shuffle = !a.no_shuffle;
  cfg.use_divergent_shuffle = !a.no_divergent_shuffle;
  cfg.use_doubling = !a.no_doubling;
  cfg.use_gdr = !a.no_gdr;
  cfg.use_duality = !a.no_duality;
  cfg.drop_products = a.drop_products;
  cfg.skip_trivial_shuffles = a.skip_trivial_shuffles;
  cfg.group_size = a.group_size;
  cfg.threads = a.threads;
  if (a.basis == "auto") {
    cfg.policy = BasisPolicy::automatic;
  } else if (a.basis == "lyndon-odd") {
    cfg.policy = BasisPolicy::lyndon_odd;
  } else if (a.basis == "hoffman") {
    cfg.policy = BasisPolicy::fixed_set;
    for (auto& w : hoffman_basis(a.weight)) cfg.fixed_basis.push_back(w);
  } else if (a.basis == "pushdown") {
    cfg.policy = BasisPolicy::fixed_set;
    for (auto& e : pushdown_basis(a.weight)) cfg.fixed_basis.push_back(e.word);
  } else if (a.basis.rfind("file:", 0) == 0) {
    cfg.policy = BasisPolicy::fixed_set;
    std::ifstream in(a.basis.substr(5));
    if (!in) throw std::runtime_error("cannot read basis file");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      cfg.fixed_basis.push_back(parse_z_word(line));
    }
  } else {
    throw std::runtime_error("unknown basis policy: " + a.basis);
  }
  return cfg;
}

void emit_stats(const ReduceArgs& a, const RunStats& s, size_t remaining) {
  std::string line = std::string("{\"event\":\"reduce\",\"kind\":\"") + a.kind +
                     "\",\"weight\":" + std::to_string(a.weight) +
                     ",\"equations\":" + std::to_string(s.equations_considered) +
                     ",\"trivial\":" + std::to_string(s.equations_trivial) +
                     ",\"substitutions\":" + std::to_string(s.substitutions) +
                     ",\"groups\":" + std::to_string(s.groups) +
                     ",\"max_master_terms\":" + std::to_string(s.max_master_terms) +
                     ",\"remaining\":" + std::to_string(remaining) +
                     ",\"seconds\":" + std::to_string(s.seconds) + "}";
  if (!a.stats_path.empty()) {
    std::ofstream os(a.stats_path, std::ios::app);
    os << line << "\n";
  } else {
    std::cerr << line << "\n";
  }
}

template <class F>
int do_reduce(const ReduceArgs& a) {
  RunConfig cfg = make_config(a);
  Session<F> session(cfg);
  const ReductionTable<F>& t = session.table(a.weight);
  if (!a.out.empty()) {
    write_table_file(a.out, t, a.form_style);
  } else {
    write_table(std::cout, t, a.form_style);
  }
  auto& at = AtomTable::instance();
  std::cout << "# " << t.remaining.size() << " same-weight basis elements:";
  for (AtomId id : t.remaining) std::cout << " " << at.name(id);
  std::cout << "\n";
  for (auto& [d, n] : t.remaining_by_depth)
    std::cout << "#   depth " << d << ": " << n << "\n";
  emit_stats(a, t.stats, t.remaining.size());
  return 0;
}

int cmd_count(const std::string& table, int maxw) {
  auto print_wd = [&](const CountTable& t) {
    std::cout << "w\td\tp\tcount\n";
    for (auto& [k, v] : t) {
      auto [w, d, p] = k;
      if (w > maxw) continue;
      std::cout << w << "\t" << d << "\t" << p << "\t" << v << "\n";
    }
  };
  if (table == "bk1") print_wd(filtration_bk1(maxw));
  else if (table == "bk2") print_wd(filtration_bk2(maxw));
  else if (table == "conj2") print_wd(filtration_bbv(maxw));
  else if (table == "E") print_wd(table_euler_E(maxw));
  else if (table == "padovan" || table == "perrin" || table == "lucas" ||
           table == "fibonacci" || table == "witt-mzv" || table == "witt-euler") {
    std::cout << "n\tvalue\n";
    for (int n = 1; n <= maxw; n++) {
      long v = table == "padovan"     ? padovan(n)
               : table == "perrin"    ? perrin(n)
               : table == "lucas"     ? lucas(n)
               : table == "fibonacci" ? fibonacci(n)
               : table == "witt-mzv"  ? witt_mzv(n)
                                      : witt_euler_12(n);
      std::cout << n << "\t" << v << "\n";
    }
  } else {
    std::cerr << "unknown table " << table << "\n";
    return 1;
  }
  return 0;
}

void print_report(const VerifyReport& rep, bool& all_ok) {
  for (auto& l : rep.lines) {
    std::cout << (l.pass ? "PASS" : "FAIL") << "  " << l.name;
    if (!l.detail.empty()) std::cout << "  [" << l.detail << "]";
    std::cout << "\n";
    all_ok &= l.pass;
  }
}

int cmd_verify(const std::string& suite, int max_weight, const std::string& table_path) {
  bool ok = true;
  if (suite == "duality") {
    print_report(verify_duality(max_weight ? max_weight : 10), ok);
  } else if (suite == "sum-theorem") {
    print_report(verify_sum_theorem(max_weight ? max_weight : 8), ok);
  } else if (suite == "derivation") {
    print_report(verify_derivation(max_weight ? max_weight : 7), ok);
  } else if (suite == "partial-derivation") {
    print_report(verify_partial_derivation(max_weight ? max_weight : 7), ok);
  } else if (suite == "hoffman") {
    RunConfig cfg;
    cfg.kind = Kind::mzv;
    Session<Rat> mzv(cfg);
    print_report(verify_hoffman(mzv), ok);
  } else if (suite == "named") {
    RunConfig cm;
    cm.kind = Kind::mzv;
    Session<Rat> mzv(cm);
    RunConfig ce;
    ce.kind = Kind::euler;
    Session<Rat> euler(ce);
    print_report(verify_named(mzv, euler, max_weight ? max_weight : 7), ok);
  } else if (suite == "double-shuffle") {
    print_report(verify_double_shuffle(max_weight ? max_weight : 8), ok);
  } else if (suite == "numeric") {
    ReductionTable<Rat> t = read_table_file<Rat>(table_path);
    auto rep = numeric_check(t, 1e-6);
    std::cout << "checked " << rep.checked << ", failed " << rep.failed << "\n";
    for (auto& l : rep.worst)
      std::cout << (l.pass ? "PASS" : "FAIL") << "  " << l.word.str() << "  delta "
                << double(l.delta) << "  bound " << double(l.bound) << "\n";
    ok = rep.failed == 0;
  } else {
    std::cerr << "unknown suite " << suite << "\n";
    return 1;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduction tables for multiple zeta values and Euler sums"};
  app.require_subcommand(1);

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "run a reduction and write the table");
  reduce->add_option("--kind", ra.kind)->check(CLI::IsMember({"mzv", "euler"}));
  reduce->add_option("--weight", ra.weight)->required();
  reduce->add_option("--max-depth", ra.max_depth);
  reduce->add_option("--field", ra.field);
  reduce->add_option("--basis", ra.basis);
  reduce->add_flag("--no-stuffle", ra.no_stuffle);
  reduce->add_flag("--no-shuffle", ra.no_shuffle);
  reduce->add_flag("--no-divergent-shuffle", ra.no_divergent_shuffle);
  reduce->add_flag("--no-doubling", ra.no_doubling);
  reduce->add_flag("--no-gdr", ra.no_gdr);
  reduce->add_flag("--no-duality", ra.no_duality);
  reduce->add_flag("--drop-products", ra.drop_products);
  reduce->add_flag("--skip-trivial-shuffles", ra.skip_trivial_shuffles);
  reduce->add_flag("--form-style", ra.form_style);
  reduce->add_option("--group-size", ra.group_size);
  reduce->add_option("--threads", ra.threads);
  reduce->add_option("--out", ra.out);
  reduce->add_option("--stats", ra.stats_path);

  std::string count_table = "bk1";
  int count_maxw = 30;
  auto* count = app.add_subcommand("count", "print counting tables");
  count->add_option("--table", count_table)->required();
  count->add_option("--max-weight", count_maxw)->check(CLI::Range(1, 30));

  std::string vsuite, vtable;
  int vweight = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", vsuite)->required();
  verify->add_option("--max-weight", vweight);
  verify->add_option("--table", vtable);

  std::string ltable, lword;
  auto* lookup = app.add_subcommand("lookup", "look up one word in a table file");
  lookup->add_option("--table", ltable)->required();
  lookup->add_option("--word", lword)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) {
      if (ra.drop_products && ra.field == "rational")
        throw std::runtime_error("--drop-products requires a modular field (mod:P)");
      if (ra.field == "rational") return do_reduce<Rat>(ra);
      if (ra.field.rfind("mod:", 0) == 0) {
        Fp::set_modulus(uint32_t(std::stoul(ra.field.substr(4))));
        return do_reduce<Fp>(ra);
      }
      if (ra.field == "mod") {
        return do_reduce<Fp>(ra);
      }
      throw std::runtime_error("unknown field " + ra.field);
    }
    if (*count) return cmd_count(count_table, count_maxw);
    if (*verify) return cmd_verify(vsuite, vweight, vtable);
    if (*lookup) {
      std::string rec = lookup_record(ltable, parse_z_word(lword));
      if (rec.empty()) {
        std::cerr << "word not found (for MZV tables try its dual)\n";
        return 1;
      }
      std::cout << rec << "\n";
      return 0;
    }
  } catch (const RunError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit exceeded\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
