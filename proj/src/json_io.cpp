#include "locgal/json_io.hpp"

#include "locgal/error.hpp"

namespace locgal {

namespace {

const json& need(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

Bitset mask_from_indices(const json& arr, std::size_t n, const char* where) {
  Bitset m(n);
  if (!arr.is_array()) throw ValidationError(std::string(where) + ": expected an index array");
  for (const auto& v : arr) {
    std::size_t i = v.get<std::size_t>();
    if (i >= n) throw ValidationError(std::string(where) + ": index " + std::to_string(i) +
                                      " out of range");
    m.set(i);
  }
  return m;
}

}  // namespace

json preorder_to_json(const Preorder& p) {
  json j;
  j["elements"] = p.names();
  json pairs = json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) pairs.push_back(json::array({a, b}));
  j["leq"] = std::move(pairs);
  return j;
}

Preorder preorder_from_json(const json& j, std::size_t* closure_added) {
  std::vector<std::string> names = need(j, "elements", "preorder").get<std::vector<std::string>>();
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (const auto& p : need(j, "leq", "preorder")) {
    if (!p.is_array() || p.size() != 2) throw ValidationError("preorder: leq entries are pairs");
    pairs.emplace_back(p[0].get<uint32_t>(), p[1].get<uint32_t>());
  }
  return Preorder::closure_of(std::move(names), pairs, closure_added);
}

json site_to_json(const Site& s) {
  json j;
  j["base"] = preorder_to_json(s.base());
  json covers = json::array();
  for (const auto& c : s.covers()) {
    json jc;
    jc["target"] = c.target.to_indices();
    json fam = json::array();
    for (const auto& f : c.family) fam.push_back(f.to_indices());
    jc["family"] = std::move(fam);
    covers.push_back(std::move(jc));
  }
  j["covers"] = std::move(covers);
  return j;
}

Site site_from_json(const json& j, std::size_t* closure_added) {
  Preorder base = preorder_from_json(need(j, "base", "site"), closure_added);
  const std::size_t n = base.size();
  std::vector<CoverSpec> covers;
  for (const auto& jc : need(j, "covers", "site")) {
    CoverSpec c{mask_from_indices(need(jc, "target", "site.cover"), n, "site.cover.target"), {}};
    for (const auto& f : need(jc, "family", "site.cover"))
      c.family.push_back(mask_from_indices(f, n, "site.cover.family"));
    covers.push_back(std::move(c));
  }
  return Site(std::move(base), std::move(covers));
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["name"] = g.name();
  json table = json::array();
  for (uint16_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (uint16_t b = 0; b < g.order(); ++b) row.push_back(g.op(a, b));
    table.push_back(std::move(row));
  }
  j["cayley"] = std::move(table);
  json names = json::array();
  for (uint16_t a = 0; a < g.order(); ++a) names.push_back(g.element_name(a));
  j["element_names"] = std::move(names);
  return j;
}

FiniteGroup group_from_json(const json& j) {
  if (j.is_string()) return FiniteGroup::builtin(j.get<std::string>());
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "G";
  if (j.contains("cayley")) {
    std::vector<std::vector<uint16_t>> table;
    for (const auto& row : j["cayley"]) table.push_back(row.get<std::vector<uint16_t>>());
    std::vector<std::string> names;
    if (j.contains("element_names")) names = j["element_names"].get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(name), table, std::move(names));
  }
  if (j.contains("permutations")) {
    const auto& p = j["permutations"];
    std::vector<std::string> gen_strings;
    std::size_t degree = 0;
    if (p.is_array() && p.size() == 2 && p[0].is_array()) {
      gen_strings = p[0].get<std::vector<std::string>>();
      degree = p[1].get<std::size_t>();
    } else if (p.is_object()) {
      gen_strings = need(p, "generators", "group.permutations").get<std::vector<std::string>>();
      degree = need(p, "degree", "group.permutations").get<std::size_t>();
    } else {
      throw ValidationError("group.permutations: expected [generators, degree] or an object");
    }
    std::vector<Perm> gens;
    for (const auto& s : gen_strings) gens.push_back(parse_cycles(s, degree));
    return FiniteGroup::from_permutations(std::move(name), gens, degree);
  }
  throw ValidationError("group: need \"cayley\" or \"permutations\"");
}

GroupPtr group_ref_from_json(const json& j) {
  return std::make_shared<const FiniteGroup>(group_from_json(j));
}

json gset_to_json(const GSet& x) {
  json j;
  j["group"] = group_to_json(*x.group());
  json carrier = json::array();
  for (uint16_t p = 0; p < x.size(); ++p) carrier.push_back(x.point_name(p));
  j["carrier"] = std::move(carrier);
  json act = json::array();
  for (uint16_t g = 0; g < x.group()->order(); ++g) {
    json row = json::array();
    for (uint16_t p = 0; p < x.size(); ++p) row.push_back(x.act(g, p));
    act.push_back(std::move(row));
  }
  j["act"] = std::move(act);
  return j;
}

GSet gset_from_json(const json& j) {
  GroupPtr g = group_ref_from_json(need(j, "group", "gset"));
  std::vector<std::string> names;
  std::size_t size = 0;
  const auto& carrier = need(j, "carrier", "gset");
  if (carrier.is_number()) {
    size = carrier.get<std::size_t>();
  } else {
    names = carrier.get<std::vector<std::string>>();
    size = names.size();
  }
  const auto& act_rows = need(j, "act", "gset");
  if (act_rows.size() != g->order())
    throw ValidationError("gset.act: expected one row per group element");
  std::vector<uint16_t> act;
  for (const auto& row : act_rows) {
    auto r = row.get<std::vector<uint16_t>>();
    if (r.size() != size) throw ValidationError("gset.act: ragged row");
    act.insert(act.end(), r.begin(), r.end());
  }
  return GSet(std::move(g), size, std::move(act), std::move(names));
}

json chain_to_json(const GroupChain& c) {
  json j;
  json stages = json::array();
  for (std::size_t i = 0; i < c.length(); ++i) stages.push_back(group_to_json(*c.stage(i)));
  j["stages"] = std::move(stages);
  json ts = json::array();
  for (std::size_t i = 0; i + 1 < c.length(); ++i) ts.push_back(c.transition(i));
  j["transitions"] = std::move(ts);
  return j;
}

GroupChain chain_from_json(const json& j) {
  std::vector<GroupPtr> stages;
  for (const auto& s : need(j, "stages", "chain")) stages.push_back(group_ref_from_json(s));
  std::vector<std::vector<uint16_t>> ts;
  for (const auto& t : need(j, "transitions", "chain"))
    ts.push_back(t.get<std::vector<uint16_t>>());
  return GroupChain(std::move(stages), std::move(ts));
}

json functor_to_json(const FunctorData& f) {
  json j;
  json cat;
  cat["objects"] = f.cat->object_names;
  json arrows = json::array();
  for (const auto& a : f.cat->arrows)
    arrows.push_back(json{{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
  cat["arrows"] = std::move(arrows);
  cat["identity"] = f.cat->identity;
  cat["compose"] = f.cat->compose;
  j["category"] = std::move(cat);
  j["values"] = f.sizes;
  j["maps"] = f.maps;
  return j;
}

FunctorData functor_from_json(const json& j) {
  auto cat = std::make_shared<FiniteCategory>();
  const auto& jc = need(j, "category", "functor");
  cat->object_names = need(jc, "objects", "functor.category").get<std::vector<std::string>>();
  for (const auto& a : need(jc, "arrows", "functor.category"))
    cat->arrows.push_back({need(a, "src", "functor.arrow").get<uint32_t>(),
                           need(a, "dst", "functor.arrow").get<uint32_t>(),
                           need(a, "name", "functor.arrow").get<std::string>()});
  cat->identity = need(jc, "identity", "functor.category").get<std::vector<uint32_t>>();
  cat->compose = need(jc, "compose", "functor.category").get<std::vector<std::vector<int32_t>>>();
  cat->validate();

  FunctorData f;
  f.cat = cat;
  f.sizes = need(j, "values", "functor").get<std::vector<uint32_t>>();
  f.maps = need(j, "maps", "functor").get<std::vector<std::vector<uint16_t>>>();
  f.validate();
  return f;
}

json point_to_json(const Site& s, const LocalePoint& p) {
  json names = json::array();
  p.accepted.for_each([&](std::size_t i) { names.push_back(s.base().name(i)); });
  return names;
}

json frame_element_to_json(const FrameElement& e) {
  json out = json::array();
  e.members.for_each(
      [&](std::size_t i) { out.push_back(e.site->lattice().describe(static_cast<uint32_t>(i))); });
  return out;
}

json report_to_json(const Report& r) {
  json j;
  j["title"] = r.title;
  j["engine"] = r.engine;
  if (!r.inputs_digest.empty()) j["inputs_digest"] = r.inputs_digest;
  j["notes"] = r.notes;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name}, {"verdict", to_string(c.verdict)}};
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["overall"] = to_string(r.overall());
  j["counts"] = {{"pass", r.count(Verdict::Pass)},
                 {"fail", r.count(Verdict::Fail)},
                 {"undecided", r.count(Verdict::Undecided)}};
  return j;
}

std::string report_to_text(const Report& r) {
  std::string out = "== " + r.title + " ==\n";
  out += "engine: " + r.engine + "\n";
  if (!r.inputs_digest.empty()) out += "inputs: " + r.inputs_digest + "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  for (const auto& c : r.checks) {
    out += std::string("[") + to_string(c.verdict) + "] " + c.name;
    if (!c.witness.empty()) out += "  (" + c.witness + ")";
    out += "\n";
  }
  out += "overall: " + std::string(to_string(r.overall())) + " (" +
         std::to_string(r.count(Verdict::Pass)) + " pass, " +
         std::to_string(r.count(Verdict::Fail)) + " fail, " +
         std::to_string(r.count(Verdict::Undecided)) + " undecided)\n";
  return out;
}

uint64_t digest(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace locgal
