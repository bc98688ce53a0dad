#include "pea/cli.hpp"

#include "pea/center.hpp"
#include "pea/classes.hpp"
#include "pea/decomposition.hpp"
#include "pea/enumerate.hpp"
#include "pea/errors.hpp"
#include "pea/fixtures.hpp"
#include "pea/io.hpp"
#include "pea/morphism.hpp"
#include "pea/td_sets.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

namespace pea {

namespace {

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string join_labels(const PeaTable& t, const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + t.display(xs[i]);
  return out.empty() ? "-" : out;
}

std::string join_labels(const PeaTable& t, const ElementSet& s) { return join_labels(t, s.members()); }

const char* axiom_token(Axiom a) {
  switch (a) {
    case Axiom::Identity: return "identity";
    case Axiom::Associativity: return "associativity";
    case Axiom::Complements: return "complements";
    case Axiom::Conjugates: return "conjugates";
    case Axiom::UnitAnnihilates: return "unit";
  }
  return "?";
}

Element element_arg(const PeaTable& t, const std::string& token) {
  const Element e = t.find(token);
  if (e == kUndefined) throw DomainError("unknown element '" + token + "'");
  return e;
}

std::string describe_table(const PeaTable& t) {
  return (t.name().empty() ? std::string("algebra") : t.name()) + " (" + std::to_string(t.size()) + " element" +
         (t.size() == 1 ? "" : "s") + ")";
}

std::string describe(const Pea& e) { return describe_table(e.table()); }

void print_profile_flags(std::ostream& out, const RieszProperties& r) {
  out << " rip=" << yes(r.rip) << " rdp0=" << yes(r.rdp0) << " rdp=" << yes(r.rdp) << " rdp1=" << yes(r.rdp1)
      << " rdp2=" << yes(r.rdp2);
}

// Options shared by the verbs, filled by CLI11.
struct Options {
  std::string file, file2;
  std::string element;
  std::string family;
  std::string set, op;
  std::string k, f, mode = "three";
  std::size_t max_size = 0;
  std::string save;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const PeaTable t = resolve_algebra(o.file);
  const AxiomReport r = verify_axioms(t);
  out << describe_table(t) << '\n';
  if (!r.ok()) {
    for (const auto& v : r.violations) {
      out << "violation of " << axiom_name(v.axiom) << " at " << join_labels(t, v.witnesses) << ": " << v.detail
          << '\n';
      out << "@ violation axiom=" << axiom_token(v.axiom) << " witnesses=" << join_labels(t, v.witnesses) << '\n';
    }
    out << "axioms: " << r.violations.size() << " violation" << (r.violations.size() == 1 ? "" : "s") << '\n';
    out << "@ verify ok=no\n";
    return kExitDomain;
  }
  const Pea e(t);
  out << "axioms: ok\n";
  out << "order (covering pairs):";
  bool any = false;
  for (Element a = 0; a < static_cast<Element>(e.size()); ++a)
    for (Element b = 0; b < static_cast<Element>(e.size()); ++b) {
      if (!e.order().less(a, b)) continue;
      bool cover = true;
      for (Element c = 0; c < static_cast<Element>(e.size()) && cover; ++c)
        cover = !(e.order().less(a, c) && e.order().less(c, b));
      if (cover) out << ' ' << e.display(a) << '<' << e.display(b), any = true;
    }
  out << (any ? "" : " none") << '\n';
  out << "complements (x: x~ x-):\n";
  for (Element x = 0; x < static_cast<Element>(e.size()); ++x)
    out << "  " << e.display(x) << ": " << e.display(e.right_complement(x)) << ' '
        << e.display(e.left_complement(x)) << '\n';
  out << "lattice-ordered: " << yes(e.order().is_lattice()) << '\n';
  out << "commutative: " << yes(is_commutative(e)) << '\n';
  out << "@ verify ok=yes size=" << e.size() << '\n';
  return kExitOk;
}

int cmd_center(const Options& o, std::ostream& out) {
  const Pea e(resolve_algebra(o.file));
  const CentralStructure g = center(e);
  out << describe(e) << '\n';
  out << "center: " << e.table().format(g.elements()) << '\n';
  out << "@ center " << join_labels(e.table(), g.members()) << '\n';
  out << "center atoms: " << join_labels(e.table(), g.atoms()) << '\n';
  out << "boolean laws: ok\n";
  const HullReport h = verify_hull(e, g);
  out << "hull laws: " << (h.ok ? "ok" : h.failure) << '\n';
  if (!h.ok) throw InvariantViolation("central cover violates the hull laws: " + h.failure);
  out << "central cover:\n";
  for (Element x = 0; x < static_cast<Element>(e.size()); ++x) {
    out << "  gamma " << e.display(x) << " = " << e.display(g.cover(x)) << '\n';
    out << "@ cover " << e.display(x) << ' ' << e.display(g.cover(x)) << '\n';
  }
  return kExitOk;
}

int cmd_cover(const Options& o, std::ostream& out) {
  const Pea e(resolve_algebra(o.file));
  const CentralStructure g = center(e);
  out << describe(e) << '\n';
  if (!o.family.empty()) {
    const std::vector<Element> family = parse_element_list(e.table(), o.family).members();
    const bool orth = gamma_orthogonal(g, family);
    out << "family: " << e.table().format(ElementSet(e.size(), family)) << '\n';
    for (Element x : family) out << "  gamma " << e.display(x) << " = " << e.display(g.cover(x)) << '\n';
    out << "gamma-orthogonal: " << yes(orth) << '\n';
    if (orth) out << "orthosum: " << e.display(orthosum(e, g, family)) << '\n';
    out << "@ family orthogonal=" << yes(orth);
    if (orth) out << " orthosum=" << e.display(orthosum(e, g, family));
    out << '\n';
    return kExitOk;
  }
  std::vector<Element> xs;
  if (o.element.empty()) {
    for (Element x = 0; x < static_cast<Element>(e.size()); ++x) xs.push_back(x);
  } else {
    xs.push_back(element_arg(e.table(), o.element));
  }
  for (Element x : xs) {
    out << "gamma " << e.display(x) << " = " << e.display(g.cover(x)) << '\n';
    out << "@ cover " << e.display(x) << ' ' << e.display(g.cover(x)) << '\n';
  }
  return kExitOk;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Pea e(resolve_algebra(o.file));
  const CentralStructure g = center(e);
  const ElementSet q = std::filesystem::is_regular_file(o.set) ? load_element_set(e.table(), o.set)
                                                               : parse_element_list(e.table(), o.set);
  ElementSet result;
  std::optional<TDSet> generated;
  if (o.op == "sup") result = closure_sup(e, g, q);
  else if (o.op == "gamma") result = closure_gamma(e, g, q);
  else if (o.op == "down") result = closure_down(e, q);
  else if (o.op == "commutant") result = commutant(e, q);
  else if (o.op == "bicommutant") result = bicommutant(e, q);
  else if (o.op == "td") generated = td_generated(e, g, q);
  else generated = std_generated(e, g, q);
  if (generated) result = generated->members;

  const bool td = is_td(e, g, result), std = is_std(e, g, result);
  out << describe(e) << '\n';
  out << "input: " << e.table().format(q) << '\n';
  out << o.op << ": " << e.table().format(result) << '\n';
  out << "TD: " << yes(td) << "\nSTD: " << yes(std) << '\n';
  out << "@ closure op=" << o.op << " members=" << join_labels(e.table(), result) << " td=" << yes(td)
      << " std=" << yes(std) << '\n';
  if (td) {
    const TDSet k = make_td_set(e, g, result);
    out << "type cover: " << e.display(k.type_cover) << '\n';
    out << "restricted type cover: " << e.display(k.restricted_type_cover) << '\n';
    out << "@ covers type=" << e.display(k.type_cover) << " restricted=" << e.display(k.restricted_type_cover)
        << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Pea whole(resolve_algebra(o.file));
  const CentralStructure gw = center(whole);
  out << describe(whole) << '\n';

  if (!o.element.empty()) {
    const Element x = element_arg(whole.table(), o.element);
    const ClassProfile pw = class_profile(whole, gw);
    const ElementProfile& ep = pw.elements[static_cast<std::size_t>(x)];
    out << "element " << whole.display(x) << ": atom=" << yes(ep.atom) << " polyatom=" << yes(ep.polyatom)
        << " boolean=" << yes(ep.boolean) << " subcentral=" << yes(ep.subcentral) << " monad=" << yes(ep.monad)
        << '\n';
    out << "@ element " << whole.display(x) << " atom=" << yes(ep.atom) << " polyatom=" << yes(ep.polyatom)
        << " boolean=" << yes(ep.boolean) << " subcentral=" << yes(ep.subcentral) << " monad=" << yes(ep.monad)
        << '\n';
    const Interval iv = interval_algebra(whole, x);
    const CentralStructure gi = center(iv.algebra);
    const ClassProfile p = class_profile(iv.algebra, gi);
    out << "interval [0," << whole.display(x) << "] (" << iv.algebra.size() << " elements):\n";
    out << "  commutative=" << yes(p.commutative) << " weakcomm=" << yes(p.weak_commutative)
        << " lattice=" << yes(p.lattice);
    print_profile_flags(out, p.riesz);
    out << "\n@ interval " << whole.display(x) << " commutative=" << yes(p.commutative)
        << " weakcomm=" << yes(p.weak_commutative) << " lattice=" << yes(p.lattice);
    print_profile_flags(out, p.riesz);
    out << '\n';
    return kExitOk;
  }

  const ClassProfile p = class_profile(whole, gw);
  out << "algebra: atomic=" << yes(p.atomic) << " atomless=" << yes(p.atom_free) << " commutative="
      << yes(p.commutative) << " weakcomm=" << yes(p.weak_commutative) << " lattice=" << yes(p.lattice);
  print_profile_flags(out, p.riesz);
  out << "\n@ algebra atomic=" << yes(p.atomic) << " atomless=" << yes(p.atom_free)
      << " commutative=" << yes(p.commutative) << " weakcomm=" << yes(p.weak_commutative)
      << " lattice=" << yes(p.lattice);
  print_profile_flags(out, p.riesz);
  out << '\n';

  out << "elements (atom polyatom boolean subcentral monad | interval: comm weakcomm lattice rip rdp0 rdp rdp1 rdp2):\n";
  const auto flag = [](bool b) { return b ? '+' : '.'; };
  for (Element x = 0; x < static_cast<Element>(whole.size()); ++x) {
    const ElementProfile& ep = p.elements[static_cast<std::size_t>(x)];
    out << "  " << whole.display(x) << ": " << flag(ep.atom) << flag(ep.polyatom) << flag(ep.boolean)
        << flag(ep.subcentral) << flag(ep.monad) << " | " << flag(ep.commutative) << flag(ep.weak_commutative)
        << flag(ep.lattice) << flag(ep.riesz.rip) << flag(ep.riesz.rdp0) << flag(ep.riesz.rdp)
        << flag(ep.riesz.rdp1) << flag(ep.riesz.rdp2) << '\n';
  }
  out << "classes:\n";
  for (const ClassInfo& c : class_registry()) {
    if (!c.alias_of.empty()) {
      out << "  " << c.name << " = " << c.alias_of << '\n';
      continue;
    }
    const TDSet k = td_from_class(whole, gw, c.name);
    out << "  " << c.name << ": " << whole.table().format(k.members) << " TD=" << yes(k.td) << " STD=" << yes(k.std)
        << " c_K=" << whole.display(k.type_cover) << '\n';
    out << "@ class " << c.name << " members=" << join_labels(whole.table(), k.members) << " td=" << yes(k.td)
        << " std=" << yes(k.std) << " cover=" << whole.display(k.type_cover) << '\n';
  }
  return kExitOk;
}

TDSet resolve_td(const Pea& e, const CentralStructure& g, const std::string& arg, std::string& name) {
  bool known = false;
  for (const ClassInfo& c : class_registry()) known = known || c.name == arg;
  if (known) {
    name = find_class(arg).name;
    return td_from_class(e, g, name);
  }
  if (std::filesystem::is_regular_file(arg)) {
    name = std::filesystem::path(arg).filename().string();
    return make_td_set(e, g, load_element_set(e.table(), arg));
  }
  throw DomainError("'" + arg + "' is neither a class name nor a readable set file");
}

void print_part(std::ostream& out, const Pea& e, const char* kind, std::size_t i, const DecompositionPart& p) {
  const std::string type = p.center == 0 ? "zero" : p.name;
  out << "  " << p.name << " = " << e.display(p.center) << ": " << (p.center == 0 ? "zero, " : "") << p.role
      << "; E[0," << e.display(p.center) << "] has " << p.algebra.algebra.size() << " element"
      << (p.algebra.algebra.size() == 1 ? "" : "s") << '\n';
  out << "@ " << kind << ' ' << i << " center=" << e.display(p.center) << " type=" << type << '\n';
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Pea e(resolve_algebra(o.file));
  const CentralStructure g = center(e);
  std::string k_name, f_name;
  const TDSet k = resolve_td(e, g, o.k, k_name);
  DecompositionReport r;
  if (o.mode == "three") {
    if (!o.f.empty()) throw DomainError("--f is only used by the six and roman modes");
    r = decompose_three(e, g, k, k_name);
  } else {
    if (o.f.empty()) throw DomainError("mode " + o.mode + " needs --f");
    const TDSet f = resolve_td(e, g, o.f, f_name);
    r = o.mode == "six" ? decompose_six(e, g, k, f, k_name, f_name) : decompose_I_II_III(e, g, k, f, k_name, f_name);
  }

  out << describe(e) << '\n';
  out << "K = " << k_name << " " << e.table().format(k.members) << ", c_K = " << e.display(k.type_cover)
      << ", c_(K^gamma K) = " << e.display(k.restricted_type_cover) << '\n';
  if (!f_name.empty()) out << "F = " << f_name << '\n';
  out << "mode: " << mode_name(r.mode) << '\n';
  out << "parts:\n";
  for (std::size_t i = 0; i < r.parts.size(); ++i) print_part(out, e, "part", i + 1, r.parts[i]);
  if (!r.refinements.empty()) {
    out << "refinements:\n";
    for (std::size_t i = 0; i < r.refinements.size(); ++i) print_part(out, e, "refinement", i + 1, r.refinements[i]);
  }
  std::string factors;
  for (std::size_t i = 0; i < r.witness.factors.size(); ++i)
    factors += (i ? " x " : "") + std::to_string(r.witness.factors[i].algebra.size());
  out << "witness: sum map from the product (" << factors << " = " << r.witness.product.algebra.size()
      << " elements) verified as an isomorphism\n";
  out << "uniqueness: " << r.partitions_checked << " central partitions checked, only this one fits\n";
  out << "@ witness size=" << r.witness.product.algebra.size() << " verified=yes\n";
  out << "@ partitions " << r.partitions_checked << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const EnumerationLimits limits = EnumerationLimits::from_environment();
  std::vector<PeaTable> all;
  int status = kExitOk;
  try {
    all = enumerate_peas(o.max_size, {}, limits);
  } catch (const PartialEnumeration& p) {
    all = p.partial();
    err << "enumeration stopped at size " << p.cutoff() << ": " << p.what() << '\n';
    status = kExitDomain;
  }
  std::size_t size = 0, count = 0;
  const auto flush = [&] {
    if (count > 0) out << "@ count size=" << size << " classes=" << count << '\n';
  };
  for (const auto& t : all) {
    if (t.size() != size) {
      flush();
      size = t.size();
      count = 0;
    }
    ++count;
    const std::string alias = builtin_alias(t);
    const Pea e(t);
    out << t.name() << ": " << t.size() << (t.size() == 1 ? " element" : " elements") << (alias.empty() ? "" : ", " + alias)
        << (is_commutative(e) ? "" : ", non-commutative") << '\n';
    out << "@ algebra " << t.name() << " size=" << t.size() << " alias=" << (alias.empty() ? "-" : alias)
        << " commutative=" << yes(is_commutative(e)) << '\n';
  }
  flush();
  out << "total: " << all.size() << '\n';
  out << "@ total " << all.size() << '\n';
  if (!o.save.empty()) {
    save_peas(o.save, all);
    out << "saved to " << o.save << '\n';
  }
  return status;
}

int cmd_isocheck(const Options& o, std::ostream& out) {
  const Pea a(resolve_algebra(o.file)), b(resolve_algebra(o.file2));
  const auto w = find_isomorphism(a, b);
  out << describe(a) << " vs " << describe(b) << '\n';
  if (!w) {
    out << "isomorphic: no\n@ isomorphic no\n";
    return kExitOk;
  }
  if (!verify_witness(a.table(), b.table(), *w)) throw InvariantViolation("isomorphism witness fails verification");
  out << "isomorphic: yes\n";
  std::string map;
  for (Element x = 0; x < static_cast<Element>(a.size()); ++x) {
    out << "  " << a.display(x) << " -> " << b.display(w->map[static_cast<std::size_t>(x)]) << '\n';
    map += (x ? "," : "") + a.display(x) + ":" + b.display(w->map[static_cast<std::size_t>(x)]);
  }
  out << "@ isomorphic yes map=" << map << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for finite pseudo-effect algebras", "pea"};
  app.require_subcommand(1);
  Options o;
  const std::string file_help = "algebra file or fixture name";

  auto* verify = app.add_subcommand("verify", "check the axioms and show order and complements");
  verify->add_option("file", o.file, file_help)->required();

  auto* center_cmd = app.add_subcommand("center", "center, Boolean laws and central cover table");
  center_cmd->add_option("file", o.file, file_help)->required();

  auto* cover = app.add_subcommand("cover", "central covers, or Gamma-orthogonality of a family");
  cover->add_option("file", o.file, file_help)->required();
  cover->add_option("--element", o.element, "only this element");
  cover->add_option("--family", o.family, "comma-separated family to test and sum");

  auto* closure = app.add_subcommand("closure", "closure operators and TD/STD verdicts");
  closure->add_option("file", o.file, file_help)->required();
  closure->add_option("--set", o.set, "comma-separated labels or indices, or a file listing them")->required();
  closure->add_option("--op", o.op, "closure to apply")
      ->required()
      ->check(CLI::IsMember({"sup", "gamma", "down", "commutant", "bicommutant", "td", "std"}));

  auto* classify = app.add_subcommand("classify", "element and algebra class profile");
  classify->add_option("file", o.file, file_help)->required();
  classify->add_option("--element", o.element, "restrict to the interval below this element");

  auto* decompose = app.add_subcommand("decompose", "type decomposition for TD sets K (and F)");
  decompose->add_option("file", o.file, file_help)->required();
  decompose->add_option("--k", o.k, "class name or file listing a TD set")->required();
  decompose->add_option("--f", o.f, "class name or file listing a TD set containing K");
  decompose->add_option("--mode", o.mode, "three, six or roman")
      ->check(CLI::IsMember({"three", "six", "roman"}));

  auto* enumerate = app.add_subcommand("enumerate", "all PEAs up to isomorphism");
  enumerate->add_option("--max-size", o.max_size, "largest element count")->required()->check(CLI::Range(1, 16));
  enumerate->add_option("--save", o.save, "write the algebras to this file");

  auto* isocheck = app.add_subcommand("isocheck", "decide isomorphism of two algebras");
  isocheck->add_option("first", o.file, file_help)->required();
  isocheck->add_option("second", o.file2, file_help)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (center_cmd->parsed()) return cmd_center(o, out);
    if (cover->parsed()) return cmd_cover(o, out);
    if (closure->parsed()) return cmd_closure(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    return cmd_isocheck(o, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace pea
