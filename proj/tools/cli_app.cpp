#include "cli_app.hpp"

#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/garside.h"

namespace garside_cli {

namespace {

using nlohmann::json;

// A failed C call; carries the status so it can be mapped to an exit code.
struct Failure : std::runtime_error {
  Failure(garside_status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
  garside_status status;
};

void check(garside_status s) {
  if (s != GARSIDE_OK) throw Failure(s, garside_last_error());
}

struct StructureDeleter {
  void operator()(garside_structure* s) const { garside_structure_free(s); }
};
struct ElementDeleter {
  void operator()(garside_element* x) const { garside_element_free(x); }
};
struct SetDeleter {
  void operator()(garside_summit_set* s) const { garside_summit_set_free(s); }
};

using StructurePtr = std::unique_ptr<garside_structure, StructureDeleter>;
using ElementPtr = std::unique_ptr<garside_element, ElementDeleter>;
using SetPtr = std::unique_ptr<garside_summit_set, SetDeleter>;

// Owning list of elements that can also be handed to the C API as an array.
struct ElementList {
  std::vector<ElementPtr> owned;
  std::vector<const garside_element*> raw;

  void push(ElementPtr x) {
    raw.push_back(x.get());
    owned.push_back(std::move(x));
  }
  std::size_t size() const { return raw.size(); }
  const garside_element* const* data() const { return raw.data(); }
};

struct Context {
  StructurePtr structure;
  garside_limits limits = garside_default_limits();
  bool dot = false;
};

ElementPtr parse(const Context& ctx, const std::string& text) {
  garside_element* x = nullptr;
  const garside_status s =
      garside_element_parse(ctx.structure.get(), text.c_str(), &x);
  if (s != GARSIDE_OK) {
    std::string what = garside_last_error();
    const std::int64_t offset = garside_last_error_offset();
    if (offset >= 0) what += " in \"" + text + "\"";
    throw Failure(s, what);
  }
  return ElementPtr(x);
}

// Generators are separated by ';' inside one argument.
ElementList parse_list(const Context& ctx, const std::string& text) {
  ElementList out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    out.push(parse(ctx, item));
  }
  return out;
}

std::vector<int> factor_atoms(const garside_element* x, std::size_t i) {
  std::size_t len = 0;
  garside_element_factor(x, i, nullptr, 0, &len);
  std::vector<int> atoms(len);
  check(garside_element_factor(x, i, atoms.data(), atoms.size(), &len));
  return atoms;
}

json to_json(const garside_element* x) {
  json factors = json::array();
  const std::size_t k = garside_element_factor_count(x);
  for (std::size_t i = 0; i < k; ++i) factors.push_back(factor_atoms(x, i));
  return {{"delta", garside_element_delta_power(x)}, {"factors", factors}};
}

std::string text_of(const garside_element* x) {
  std::size_t len = 0;
  garside_element_format(x, nullptr, 0, &len);
  std::string buf(len + 1, '\0');
  check(garside_element_format(x, buf.data(), buf.size(), &len));
  buf.resize(len);
  return buf.empty() ? "1" : buf;
}

std::string label_text(const std::vector<int>& atoms) {
  std::string out;
  for (int a : atoms) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(a);
  }
  return out.empty() ? "1" : out;
}

struct Edge {
  std::size_t from;
  std::size_t to;
  std::vector<int> label;
};

std::vector<Edge> edges_of(const garside_summit_set* set) {
  std::vector<Edge> out;
  const std::size_t m = garside_summit_set_edge_count(set);
  for (std::size_t i = 0; i < m; ++i) {
    Edge e{};
    std::size_t len = 0;
    garside_summit_set_edge(set, i, &e.from, &e.to, nullptr, 0, &len);
    e.label.resize(len);
    check(garside_summit_set_edge(set, i, &e.from, &e.to, e.label.data(),
                                  e.label.size(), &len));
    out.push_back(std::move(e));
  }
  return out;
}

ElementPtr member_of(const garside_summit_set* set, std::size_t i) {
  garside_element* x = nullptr;
  check(garside_summit_set_member(set, i, &x));
  return ElementPtr(x);
}

ElementPtr witness_of(const garside_summit_set* set, std::size_t i) {
  garside_element* x = nullptr;
  check(garside_summit_set_witness(set, i, &x));
  return ElementPtr(x);
}

void write_dot(std::ostream& out, const garside_summit_set* set,
               const std::string& name) {
  out << "digraph " << name << " {\n";
  const std::size_t n = garside_summit_set_size(set);
  for (std::size_t i = 0; i < n; ++i) {
    out << "  n" << i << " [label=\"" << text_of(member_of(set, i).get())
        << "\"];\n";
  }
  for (const Edge& e : edges_of(set)) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\""
        << label_text(e.label) << "\"];\n";
  }
  out << "}\n";
}

garside_summit_kind kind_from(const std::string& name) {
  if (name == "super") return GARSIDE_SUPER;
  if (name == "ultra") return GARSIDE_ULTRA;
  return GARSIDE_STABLE;
}

SetPtr summit(const Context& ctx, const garside_element* g,
              garside_summit_kind kind, bool minimal) {
  garside_summit_set* set = nullptr;
  check(garside_summit_set_new(g, kind, minimal ? 1 : 0, &ctx.limits, &set));
  return SetPtr(set);
}

// sss / uss / stable: the member list with witnesses.
void cmd_summit(const Context& ctx, std::ostream& out, const std::string& word,
                garside_summit_kind kind) {
  const ElementPtr g = parse(ctx, word);
  const SetPtr set = summit(ctx, g.get(), kind, true);
  if (ctx.dot) {
    write_dot(out, set.get(), "summit");
    return;
  }
  json members = json::array();
  const std::size_t n = garside_summit_set_size(set.get());
  for (std::size_t i = 0; i < n; ++i) {
    json m = to_json(member_of(set.get(), i).get());
    m["witness"] = to_json(witness_of(set.get(), i).get());
    members.push_back(std::move(m));
  }
  out << members.dump() << "\n";
}

void cmd_graph(const Context& ctx, std::ostream& out, const std::string& word,
               const std::string& kind_name) {
  const ElementPtr g = parse(ctx, word);
  const SetPtr set = summit(ctx, g.get(), kind_from(kind_name), true);
  if (ctx.dot) {
    write_dot(out, set.get(), "conjugacy");
    return;
  }
  std::int64_t inf_s = 0;
  std::int64_t sup_s = 0;
  garside_summit_set_invariants(set.get(), &inf_s, &sup_s);
  json vertices = json::array();
  const std::size_t n = garside_summit_set_size(set.get());
  for (std::size_t i = 0; i < n; ++i) {
    json v = to_json(member_of(set.get(), i).get());
    v["witness"] = to_json(witness_of(set.get(), i).get());
    vertices.push_back(std::move(v));
  }
  json edges = json::array();
  for (const Edge& e : edges_of(set.get())) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  }
  out << json{{"kind", kind_name},
              {"inf_s", inf_s},
              {"sup_s", sup_s},
              {"vertices", vertices},
              {"edges", edges}}
             .dump()
      << "\n";
}

json exponents_json(const std::vector<std::int64_t>& v) { return json(v); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Normal forms, summit sets, translation numbers and abelian "
               "subgroup algorithms in Garside groups",
               "garside"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string selector = "braid:4";
  std::uint64_t budget = 0;
  std::uint64_t max_set = 0;
  bool dot = false;
  bool as_json = false;
  app.add_option("--structure", selector,
                 "Garside structure: braid:<n> or zn:<n>")
      ->capture_default_str();
  app.add_option("--budget", budget, "Step budget for searches");
  app.add_option("--max-set-size", max_set, "Cap on summit set sizes");
  app.add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");
  app.add_flag("--json", as_json, "Emit JSON (the default)");

  std::string w1;
  std::string w2;
  std::string set_kind = "super";

  auto* nf = app.add_subcommand("nf", "Left normal form of a word");
  nf->add_option("word", w1)->required();
  auto* eq = app.add_subcommand("eq", "Whether two words are equal");
  eq->add_option("x", w1)->required();
  eq->add_option("y", w2)->required();
  auto* conj = app.add_subcommand("conj", "Conjugacy test with witness");
  conj->add_option("x", w1)->required();
  conj->add_option("y", w2)->required();
  auto* sss = app.add_subcommand("sss", "Super summit set");
  sss->add_option("word", w1)->required();
  auto* uss = app.add_subcommand("uss", "Ultra summit set");
  uss->add_option("word", w1)->required();
  auto* stable = app.add_subcommand("stable", "Stable super summit set");
  stable->add_option("word", w1)->required();
  auto* graph = app.add_subcommand("graph", "Minimal conjugacy graph");
  graph->add_option("--set", set_kind, "super, ultra or stable")
      ->check(CLI::IsMember({"super", "ultra", "stable"}))
      ->capture_default_str();
  graph->add_option("word", w1)->required();
  auto* translation = app.add_subcommand("translation", "Translation number");
  translation->add_option("word", w1)->required();
  auto* basis = app.add_subcommand(
      "abelian-basis", "Basis of the subgroup generated by 'g1; g2; ...'");
  basis->add_option("generators", w1)->required();
  auto* member = app.add_subcommand("abelian-member",
                                    "Membership of a word in a subgroup");
  member->add_option("word", w1)->required();
  member->add_option("generators", w2)->required();
  auto* conj_member = app.add_subcommand(
      "abelian-conj-member", "Whether a word is conjugate into a subgroup");
  conj_member->add_option("word", w1)->required();
  conj_member->add_option("generators", w2)->required();
  auto* equal = app.add_subcommand("abelian-equal",
                                   "Whether two generator lists agree");
  equal->add_option("generators1", w1)->required();
  equal->add_option("generators2", w2)->required();
  auto* conjugate = app.add_subcommand(
      "abelian-conjugate", "Whether two subgroups are conjugate");
  conjugate->add_option("generators1", w1)->required();
  conjugate->add_option("generators2", w2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx;
    garside_structure* s = nullptr;
    check(garside_structure_new(selector.c_str(), &s));
    ctx.structure.reset(s);
    if (budget > 0) ctx.limits.max_steps = budget;
    if (max_set > 0) ctx.limits.max_set_size = max_set;
    ctx.dot = dot && !as_json;

    if (nf->parsed()) {
      out << to_json(parse(ctx, w1).get()).dump() << "\n";
    } else if (eq->parsed()) {
      const ElementPtr x = parse(ctx, w1);
      const ElementPtr y = parse(ctx, w2);
      int same = 0;
      check(garside_equals(x.get(), y.get(), &same));
      out << json{{"equal", same != 0}}.dump() << "\n";
    } else if (conj->parsed()) {
      const ElementPtr x = parse(ctx, w1);
      const ElementPtr y = parse(ctx, w2);
      int found = 0;
      garside_element* w = nullptr;
      check(garside_is_conjugate(x.get(), y.get(), &ctx.limits, &found, &w));
      const ElementPtr witness(w);
      json r{{"conjugate", found != 0}};
      if (found) r["conjugator"] = to_json(witness.get());
      out << r.dump() << "\n";
    } else if (sss->parsed()) {
      cmd_summit(ctx, out, w1, GARSIDE_SUPER);
    } else if (uss->parsed()) {
      cmd_summit(ctx, out, w1, GARSIDE_ULTRA);
    } else if (stable->parsed()) {
      cmd_summit(ctx, out, w1, GARSIDE_STABLE);
    } else if (graph->parsed()) {
      cmd_graph(ctx, out, w1, set_kind);
    } else if (translation->parsed()) {
      const ElementPtr g = parse(ctx, w1);
      garside_rational t{};
      check(garside_translation_number(g.get(), &ctx.limits, &t));
      out << json{{"num", t.num}, {"den", t.den}}.dump() << "\n";
    } else if (basis->parsed()) {
      const ElementList gens = parse_list(ctx, w1);
      const std::size_t n = gens.size();
      std::vector<garside_element*> b(n, nullptr);
      std::vector<std::int64_t> expr(n * n);
      std::size_t count = 0;
      check(garside_abelian_basis(ctx.structure.get(), gens.data(), n,
                                  &ctx.limits, b.data(), &count, expr.data()));
      json elems = json::array();
      json rows = json::array();
      for (std::size_t i = 0; i < count; ++i) {
        const ElementPtr h(b[i]);
        elems.push_back(to_json(h.get()));
        rows.push_back(std::vector<std::int64_t>(
            expr.begin() + static_cast<std::ptrdiff_t>(i * n),
            expr.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
      }
      out << json{{"basis", elems}, {"expression", rows}}.dump() << "\n";
    } else if (member->parsed()) {
      const ElementPtr g = parse(ctx, w1);
      const ElementList gens = parse_list(ctx, w2);
      std::vector<std::int64_t> exps(gens.size());
      int found = 0;
      check(garside_abelian_member(g.get(), gens.data(), gens.size(),
                                   &ctx.limits, &found, exps.data()));
      json r{{"member", found != 0}};
      if (found) r["exponents"] = exponents_json(exps);
      out << r.dump() << "\n";
    } else if (conj_member->parsed()) {
      const ElementPtr g = parse(ctx, w1);
      const ElementList gens = parse_list(ctx, w2);
      std::vector<std::int64_t> exps(gens.size());
      int found = 0;
      garside_element* w = nullptr;
      check(garside_abelian_conj_member(g.get(), gens.data(), gens.size(),
                                        &ctx.limits, &found, exps.data(), &w));
      const ElementPtr witness(w);
      json r{{"member", found != 0}};
      if (found) {
        r["exponents"] = exponents_json(exps);
        r["conjugator"] = to_json(witness.get());
      }
      out << r.dump() << "\n";
    } else if (equal->parsed()) {
      const ElementList a = parse_list(ctx, w1);
      const ElementList b = parse_list(ctx, w2);
      int same = 0;
      check(garside_subgroups_equal(ctx.structure.get(), a.data(), a.size(),
                                    b.data(), b.size(), &ctx.limits, &same));
      out << json{{"equal", same != 0}}.dump() << "\n";
    } else if (conjugate->parsed()) {
      const ElementList a = parse_list(ctx, w1);
      const ElementList b = parse_list(ctx, w2);
      int found = 0;
      garside_element* w = nullptr;
      check(garside_subgroups_conjugate(ctx.structure.get(), a.data(), a.size(),
                                        b.data(), b.size(), &ctx.limits,
                                        &found, &w));
      const ElementPtr witness(w);
      json r{{"conjugate", found != 0}};
      if (found) r["conjugator"] = to_json(witness.get());
      out << r.dump() << "\n";
    }
    return 0;
  } catch (const Failure& f) {
    err << "error: " << f.what() << "\n";
    switch (f.status) {
      case GARSIDE_ERR_INPUT:
      case GARSIDE_ERR_MISMATCH:
        return 2;
      case GARSIDE_ERR_BUDGET:
        return 3;
      case GARSIDE_ERR_DOMAIN:
        return 4;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace garside_cli
