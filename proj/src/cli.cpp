#include "powres/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "powres/ext_field.hpp"
#include "powres/oracle.hpp"
#include "powres/polynomial.hpp"
#include "powres/power_residues.hpp"
#include "powres/prime_field.hpp"

namespace powres::cli {

namespace {

using Record = std::vector<std::pair<std::string, std::string>>;

const char* bool_text(bool b) { return b ? "true" : "false"; }

// Machine mode: one record per line, tab-separated key=value pairs, stable
// key order. Human mode: one "key: value" line per pair.
void emit(std::ostream& out, bool machine, const Record& rec) {
  if (machine) {
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i != 0) out << '\t';
      out << rec[i].first << '=' << rec[i].second;
    }
    out << '\n';
  } else {
    for (const auto& [k, v] : rec) out << k << ": " << v << '\n';
  }
}

// Compact single-line form used for list items in human mode.
void emit_item(std::ostream& out, bool machine, const Record& rec) {
  for (std::size_t i = 0; i < rec.size(); ++i) {
    if (i != 0) out << (machine ? '\t' : ' ');
    out << rec[i].first << '=' << rec[i].second;
  }
  out << '\n';
}

FieldRef field_from(const std::string& descriptor) { return parse_field(descriptor); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic and r-th power residues in finite fields F(p^n)"};
  app.require_subcommand(1);
  bool machine = false;
  const char* machine_help = "machine-readable output: tab-separated key=value records";
  app.add_flag("--machine", machine, machine_help);

  auto* c_field = app.add_subcommand("field", "construct a field and print its parameters");
  std::uint64_t f_p = 0;
  unsigned f_n = 1;
  std::string f_modulus;
  bool f_generator = false;
  c_field->add_option("p", f_p, "characteristic (a prime below 2^31)")->required();
  c_field->add_option("n", f_n, "extension degree (default 1)");
  c_field->add_option("--modulus", f_modulus, "monic irreducible polynomial in t defining the extension");
  c_field->add_flag("--generator", f_generator, "also report the canonical generator of the unit group");
  c_field->add_flag("--machine", machine, machine_help);

  auto* c_ispow = app.add_subcommand("is-power", "decide whether an element is an r-th power");
  std::string ip_field, ip_element;
  std::uint64_t ip_r = 0;
  bool ip_oracle = false;
  c_ispow->add_option("--field", ip_field, "field descriptor, e.g. F(25) or F(5^2; 1+t+t^2)")->required();
  c_ispow->add_option("--element", ip_element, "element: polynomial in t, [c0,c1,...], or an integer")->required();
  c_ispow->add_option("--r", ip_r, "power exponent r >= 1")->required();
  c_ispow->add_flag("--oracle", ip_oracle, "cross-check the verdict against an exhaustive scan");
  c_ispow->add_flag("--machine", machine, machine_help);

  auto* c_count = app.add_subcommand("count", "count the nonzero r-th powers");
  std::string ct_field;
  std::uint64_t ct_r = 0;
  c_count->add_option("--field", ct_field, "field descriptor")->required();
  c_count->add_option("--r", ct_r, "power exponent r >= 1")->required();
  c_count->add_flag("--machine", machine, machine_help);

  auto* c_table = app.add_subcommand("table", "list the nonzero r-th powers in canonical order");
  std::string tb_field;
  std::uint64_t tb_r = 0;
  std::uint64_t tb_limit = 0;
  c_table->add_option("--field", tb_field, "field descriptor")->required();
  c_table->add_option("--r", tb_r, "power exponent r >= 1")->required();
  auto* tb_limit_opt = c_table->add_option("--limit", tb_limit, "print at most this many entries");
  c_table->add_flag("--machine", machine, machine_help);

  auto* c_root = app.add_subcommand("root", "extract the canonical r-th root");
  std::string rt_field, rt_element;
  std::uint64_t rt_r = 0;
  c_root->add_option("--field", rt_field, "field descriptor")->required();
  c_root->add_option("--element", rt_element, "element whose root is sought")->required();
  c_root->add_option("--r", rt_r, "power exponent r >= 1")->required();
  c_root->add_flag("--machine", machine, machine_help);

  auto* c_verify = app.add_subcommand(
      "verify-identity", "check the power-criterion division identity for x^q - x over F(p^n)");
  std::string vi_field, vi_element;
  std::uint64_t vi_r = 0;
  c_verify->add_option("--field", vi_field, "field descriptor")->required();
  c_verify->add_option("--element", vi_element, "nonzero element a in x^r - a")->required();
  c_verify->add_option("--r", vi_r, "divisor of q-1")->required();
  c_verify->add_flag("--machine", machine, machine_help);

  auto* c_tower = app.add_subcommand(
      "tower", "track a constant's r-th power status along F(p^1), F(p^2), ..., without building them");
  std::uint64_t tw_p = 0;
  std::int64_t tw_c = 0;
  std::uint64_t tw_r = 0;
  std::uint64_t tw_max_n = 0;
  c_tower->add_option("--p", tw_p, "characteristic (a prime below 2^31)")->required();
  c_tower->add_option("--c", tw_c, "constant, reduced mod p; must be a unit")->required();
  c_tower->add_option("--r", tw_r, "power exponent r >= 1")->required();
  c_tower->add_option("--max-n", tw_max_n, "largest extension degree to report")->required();
  c_tower->add_flag("--machine", machine, machine_help);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("powres");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (c_field->parsed()) {
      FieldRef F = f_modulus.empty()
                       ? make_field(f_p, f_n)
                       : make_field(f_p, f_n, parse_poly(f_modulus, PrimeModulus(f_p)));
      Record rec{{"field", F->descriptor()},
                 {"p", std::to_string(F->prime().value())},
                 {"n", std::to_string(F->degree())},
                 {"q", std::to_string(F->size())},
                 {"units", std::to_string(F->unit_count())},
                 {"modulus", format_poly(F->modulus())}};
      if (f_generator) rec.emplace_back("generator", format_element(find_generator(F)));
      emit(out, machine, rec);
    } else if (c_ispow->parsed()) {
      FieldRef F = field_from(ip_field);
      const FieldElement a = parse_element(F, ip_element);
      const ResidueReport rep = is_rth_power(a, ip_r);
      Record rec{{"field", F->descriptor()},
                 {"element", format_element(a)},
                 {"r", std::to_string(rep.r)},
                 {"d", std::to_string(rep.d)},
                 {"exponent", std::to_string(F->unit_count() / rep.d)},
                 {"euler_value", format_element(rep.euler_value)},
                 {"is_power", bool_text(rep.is_power)},
                 {"num_roots", std::to_string(rep.num_roots)},
                 {"canonical_root",
                  rep.canonical_root ? format_element(*rep.canonical_root) : "NONE"}};
      bool disagree = false;
      if (ip_oracle) {
        const bool oracle_verdict = !brute_roots(F, a, ip_r).empty();
        disagree = oracle_verdict != rep.is_power;
        rec.emplace_back("oracle_is_power", bool_text(oracle_verdict));
        rec.emplace_back("agreement", disagree ? "DISAGREE" : "AGREE");
      }
      emit(out, machine, rec);
      if (disagree) return 3;
    } else if (c_count->parsed()) {
      FieldRef F = field_from(ct_field);
      const PowerCount pc = count_rth_powers(F, ct_r);
      Record rec{{"field", F->descriptor()},
                 {"r", std::to_string(ct_r)},
                 {"d", std::to_string(std::gcd(ct_r, F->unit_count()))},
                 {"total", std::to_string(pc.total)}};
      if (pc.nontrivial_squares) {
        rec.emplace_back("nontrivial_squares", std::to_string(*pc.nontrivial_squares));
        rec.emplace_back("char_two", bool_text(pc.char_two_squares));
      }
      emit(out, machine, rec);
    } else if (c_table->parsed()) {
      FieldRef F = field_from(tb_field);
      const auto powers = list_rth_powers(F, tb_r);
      emit(out, machine,
           {{"field", F->descriptor()},
            {"r", std::to_string(tb_r)},
            {"count", std::to_string(powers.size())}});
      std::size_t show = powers.size();
      if (tb_limit_opt->count() > 0) show = std::min<std::size_t>(show, tb_limit);
      for (std::size_t i = 0; i < show; ++i)
        emit_item(out, machine,
                  {{"index", std::to_string(element_index(powers[i]))},
                   {"element", format_element(powers[i])}});
    } else if (c_root->parsed()) {
      FieldRef F = field_from(rt_field);
      const FieldElement a = parse_element(F, rt_element);
      const RootResult rr = rth_root(a, rt_r);
      emit(out, machine,
           {{"field", F->descriptor()},
            {"element", format_element(a)},
            {"r", std::to_string(rt_r)},
            {"num_roots", std::to_string(rr.count)},
            {"canonical_root", rr.canonical_root ? format_element(*rr.canonical_root) : "NONE"}});
    } else if (c_verify->parsed()) {
      FieldRef F = field_from(vi_field);
      const FieldElement a = parse_element(F, vi_element);
      const DivisionIdentityReport rep = euler_division_identity(a, vi_r);
      Record rec{{"field", F->descriptor()},
                 {"element", format_element(a)},
                 {"r", std::to_string(vi_r)},
                 {"remainder_coeff", format_element(rep.remainder_coeff)},
                 {"verified", rep.verified ? bool_text(*rep.verified) : "skipped"}};
      if (rep.h) rec.emplace_back("h", format_poly(*rep.h));
      emit(out, machine, rec);
    } else if (c_tower->parsed()) {
      const PrimeModulus pm(tw_p);
      const Residue c(tw_c, pm);
      for (std::uint64_t n = 1; n <= tw_max_n; ++n) {
        const bool verdict = constant_power_in_extension(c, n, tw_r);
        emit_item(out, machine,
                  {{"p", std::to_string(pm.value())},
                   {"c", std::to_string(c.value())},
                   {"r", std::to_string(tw_r)},
                   {"n", std::to_string(n)},
                   {"is_power", bool_text(verdict)}});
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace powres::cli
