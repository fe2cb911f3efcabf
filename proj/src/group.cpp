#include "locgal/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "locgal/error.hpp"

namespace locgal {

Perm parse_cycles(const std::string& text, std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<uint16_t>(i);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip_ws();
  if (pos == text.size() || text == "()" || text == "e" || text == "id") return p;

  std::vector<bool> used(degree, false);
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ValidationError("permutation: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<std::size_t> cycle;
    while (pos < text.size() && text[pos] != ')') {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') break;
      std::size_t start = pos;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ValidationError("permutation: expected digit in \"" + text + "\"");
      std::size_t v = std::stoul(text.substr(start, pos - start));
      if (v < 1 || v > degree)
        throw ValidationError("permutation: point " + std::to_string(v) + " out of 1.." +
                              std::to_string(degree));
      if (used[v - 1])
        throw ValidationError("permutation: repeated point " + std::to_string(v) + " in \"" +
                              text + "\"");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (pos == text.size()) throw ValidationError("permutation: unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) p[cycle[i]] = static_cast<uint16_t>(cycle[i + 1]);
    if (cycle.size() > 1) p[cycle.back()] = static_cast<uint16_t>(cycle.front());
  }
  return p;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) {
      done[i] = true;
      continue;
    }
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      if (!first) out += " ";
      out += std::to_string(j + 1);
      done[j] = true;
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Perm compose_perms(const Perm& f, const Perm& g) {
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

FiniteGroup FiniteGroup::from_table(std::string name,
                                    const std::vector<std::vector<uint16_t>>& table,
                                    std::vector<std::string> element_names) {
  FiniteGroup g;
  g.name_ = std::move(name);
  g.n_ = table.size();
  if (g.n_ == 0) throw ValidationError("group: empty table");
  if (g.n_ > kMaxOrder)
    throw CapacityError("group: order " + std::to_string(g.n_) + " exceeds " +
                        std::to_string(kMaxOrder));
  g.table_.resize(g.n_ * g.n_);
  for (std::size_t a = 0; a < g.n_; ++a) {
    if (table[a].size() != g.n_) throw ValidationError("group: ragged table");
    for (std::size_t b = 0; b < g.n_; ++b) {
      if (table[a][b] >= g.n_) throw ValidationError("group: table entry out of range");
      g.table_[a * g.n_ + b] = table[a][b];
    }
  }

  // identity
  bool found_id = false;
  for (uint16_t e = 0; e < g.n_ && !found_id; ++e) {
    bool ok = true;
    for (uint16_t a = 0; a < g.n_ && ok; ++a)
      if (g.op(e, a) != a || g.op(a, e) != a) ok = false;
    if (ok) {
      g.id_ = e;
      found_id = true;
    }
  }
  if (!found_id) throw ValidationError("group: no identity element");

  // associativity
  for (uint16_t a = 0; a < g.n_; ++a)
    for (uint16_t b = 0; b < g.n_; ++b)
      for (uint16_t c = 0; c < g.n_; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw ValidationError("group: associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");

  // inverses
  g.inv_.assign(g.n_, 0);
  for (uint16_t a = 0; a < g.n_; ++a) {
    bool found = false;
    for (uint16_t b = 0; b < g.n_ && !found; ++b)
      if (g.op(a, b) == g.id_ && g.op(b, a) == g.id_) {
        g.inv_[a] = b;
        found = true;
      }
    if (!found) throw ValidationError("group: element " + std::to_string(a) + " has no inverse");
  }

  if (element_names.empty()) {
    for (std::size_t a = 0; a < g.n_; ++a) element_names.push_back("g" + std::to_string(a));
    element_names[g.id_] = "e";
  }
  if (element_names.size() != g.n_) throw ValidationError("group: element name count mismatch");
  g.elem_names_ = std::move(element_names);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<Perm>& generators,
                                           std::size_t degree) {
  for (const auto& p : generators)
    if (p.size() != degree) throw ValidationError("group: generator degree mismatch");

  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<uint16_t>(i);

  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier)
      for (const auto& gen : generators) {
        Perm b = compose_perms(a, gen);
        if (elems.insert(b).second) {
          if (elems.size() > kMaxOrder)
            throw CapacityError("group: permutation closure exceeds " + std::to_string(kMaxOrder));
          next.push_back(std::move(b));
        }
      }
    frontier = std::move(next);
  }

  std::vector<Perm> sorted(elems.begin(), elems.end());
  std::map<Perm, uint16_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<uint16_t>(i);

  std::vector<std::vector<uint16_t>> table(sorted.size(), std::vector<uint16_t>(sorted.size()));
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b)
      table[a][b] = index.at(compose_perms(sorted[a], sorted[b]));
  std::vector<std::string> names;
  for (const auto& p : sorted) names.push_back(cycle_string(p));
  return from_table(std::move(name), table, std::move(names));
}

namespace {

FiniteGroup cyclic(std::size_t n) {
  std::vector<std::vector<uint16_t>> t(n, std::vector<uint16_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<uint16_t>((a + b) % n);
  }
  return FiniteGroup::from_table("Z" + std::to_string(n), t, names);
}

}  // namespace

FiniteGroup FiniteGroup::builtin(const std::string& raw) {
  std::string name = raw;
  auto slash = name.find('/');
  if (slash != std::string::npos) name.erase(slash, 1);  // "Z/4" -> "Z4"

  auto num_after = [&](std::size_t at) -> long {
    if (at >= name.size()) return -1;
    try {
      return std::stol(name.substr(at));
    } catch (...) {
      return -1;
    }
  };

  if (name.size() >= 2 && name[0] == 'Z') {
    long n = num_after(1);
    if (n >= 1 && static_cast<std::size_t>(n) <= kMaxOrder) return cyclic(static_cast<std::size_t>(n));
  }
  if (name == "V4")
    return FiniteGroup::from_permutations("V4", {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)}, 4);
  if (name.size() >= 2 && name[0] == 'S') {
    long n = num_after(1);
    if (n >= 1 && n <= 4) {
      std::vector<Perm> gens;
      if (n >= 2) gens.push_back(parse_cycles("(1 2)", n));
      std::string big = "(";
      for (long i = 1; i <= n; ++i) big += (i > 1 ? " " : "") + std::to_string(i);
      big += ")";
      if (n >= 3) gens.push_back(parse_cycles(big, n));
      if (gens.empty()) gens.push_back(Perm(n == 0 ? 1 : n));
      return FiniteGroup::from_permutations("S" + std::to_string(n), gens, n);
    }
  }
  if (name.size() >= 2 && name[0] == 'A') {
    long n = num_after(1);
    if (n == 3) return FiniteGroup::from_permutations("A3", {parse_cycles("(1 2 3)", 3)}, 3);
    if (n == 4)
      return FiniteGroup::from_permutations(
          "A4", {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)}, 4);
  }
  if (name.size() >= 2 && name[0] == 'D') {
    long n = num_after(1);
    if (n >= 3 && n <= 6) {
      std::string rot = "(";
      for (long i = 1; i <= n; ++i) rot += (i > 1 ? " " : "") + std::to_string(i);
      rot += ")";
      std::string refl;
      for (long i = 1; i <= n / 2; ++i)
        refl += "(" + std::to_string(i) + " " + std::to_string(n + 1 - i) + ")";
      return FiniteGroup::from_permutations("D" + std::to_string(n),
                                            {parse_cycles(rot, n), parse_cycles(refl, n)}, n);
    }
  }
  if (name == "Q8") {
    // 1, -1, i, -i, j, -j, k, -k
    auto mul = [](int a, int b) -> int {
      auto sign = [](int x) { return x & 1 ? -1 : 1; };
      auto axis = [](int x) { return x >> 1; };  // 0:1 1:i 2:j 3:k
      int s = sign(a) * sign(b);
      int ax = axis(a), bx = axis(b);
      int cx;
      if (ax == 0)
        cx = bx;
      else if (bx == 0)
        cx = ax;
      else if (ax == bx) {
        cx = 0;
        s = -s;
      } else {
        cx = 6 - ax - bx;  // remaining axis
        // i*j=k, j*k=i, k*i=j are positive; reversed order flips the sign.
        bool forward = (ax == 1 && bx == 2) || (ax == 2 && bx == 3) || (ax == 3 && bx == 1);
        if (!forward) s = -s;
      }
      return (cx << 1) | (s < 0 ? 1 : 0);
    };
    std::vector<std::vector<uint16_t>> t(8, std::vector<uint16_t>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) t[a][b] = static_cast<uint16_t>(mul(a, b));
    return FiniteGroup::from_table("Q8", t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  }
  throw ValidationError("unknown builtin group \"" + raw + "\"");
}

uint64_t FiniteGroup::subgroup_closure(uint64_t seed) const {
  uint64_t h = seed | (uint64_t{1} << id_);
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint16_t a = 0; a < n_; ++a) {
      if (!((h >> a) & 1)) continue;
      uint64_t withInv = h | (uint64_t{1} << inv_[a]);
      if (withInv != h) {
        h = withInv;
        changed = true;
      }
      for (uint16_t b = 0; b < n_; ++b) {
        if (!((h >> b) & 1)) continue;
        uint64_t withProd = h | (uint64_t{1} << op(a, b));
        if (withProd != h) {
          h = withProd;
          changed = true;
        }
      }
    }
  }
  return h;
}

bool FiniteGroup::is_subgroup(uint64_t mask) const { return mask && subgroup_closure(mask) == mask; }

uint64_t FiniteGroup::conjugate_subgroup(uint64_t mask, uint16_t g) const {
  uint64_t out = 0;
  for (uint16_t a = 0; a < n_; ++a)
    if ((mask >> a) & 1) out |= uint64_t{1} << op(op(g, a), inv_[g]);
  return out;
}

bool FiniteGroup::is_normal(uint64_t mask) const {
  for (uint16_t g = 0; g < n_; ++g)
    if (conjugate_subgroup(mask, g) != mask) return false;
  return true;
}

std::vector<uint64_t> FiniteGroup::all_subgroups(std::size_t max_order) const {
  if (n_ > max_order)
    throw CapacityError("subgroups: group order " + std::to_string(n_) + " exceeds bound " +
                        std::to_string(max_order));
  std::set<uint64_t> found;
  std::vector<uint64_t> frontier;
  uint64_t triv = uint64_t{1} << id_;
  found.insert(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::vector<uint64_t> next;
    for (uint64_t h : frontier)
      for (uint16_t g = 0; g < n_; ++g) {
        if ((h >> g) & 1) continue;
        uint64_t k = subgroup_closure(h | (uint64_t{1} << g));
        if (found.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  return std::vector<uint64_t>(found.begin(), found.end());
}

std::vector<std::vector<uint64_t>> FiniteGroup::subgroup_classes(std::size_t max_order) const {
  auto subs = all_subgroups(max_order);
  std::set<uint64_t> remaining(subs.begin(), subs.end());
  std::vector<std::vector<uint64_t>> classes;
  while (!remaining.empty()) {
    uint64_t h = *remaining.begin();
    std::set<uint64_t> cls;
    for (uint16_t g = 0; g < n_; ++g) cls.insert(conjugate_subgroup(h, g));
    std::vector<uint64_t> v(cls.begin(), cls.end());
    for (uint64_t k : v) remaining.erase(k);
    classes.push_back(std::move(v));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

std::string FiniteGroup::subgroup_name(uint64_t mask) const {
  std::string out = "{";
  bool first = true;
  for (uint16_t a = 0; a < n_; ++a)
    if ((mask >> a) & 1) {
      if (!first) out += ",";
      out += elem_names_[a];
      first = false;
    }
  return out + "}";
}

FiniteGroup opposite(const FiniteGroup& g) {
  std::size_t n = g.order();
  std::vector<std::vector<uint16_t>> t(n, std::vector<uint16_t>(n));
  std::vector<std::string> names;
  for (uint16_t a = 0; a < n; ++a) {
    names.push_back(g.element_name(a));
    for (uint16_t b = 0; b < n; ++b) t[a][b] = g.op(b, a);
  }
  return FiniteGroup::from_table(g.name() + "^op", t, std::move(names));
}

Quotient quotient_group(const FiniteGroup& g, uint64_t normal_mask) {
  if (!g.is_subgroup(normal_mask)) throw ValidationError("quotient: mask is not a subgroup");
  if (!g.is_normal(normal_mask)) throw ValidationError("quotient: subgroup is not normal");

  std::size_t n = g.order();
  std::vector<uint16_t> coset_of(n, 0xffff);
  std::vector<uint16_t> reps;
  for (uint16_t a = 0; a < n; ++a) {
    if (coset_of[a] != 0xffff) continue;
    uint16_t c = static_cast<uint16_t>(reps.size());
    reps.push_back(a);
    for (uint16_t h = 0; h < n; ++h)
      if ((normal_mask >> h) & 1) coset_of[g.op(a, h)] = c;
  }
  std::size_t q = reps.size();
  std::vector<std::vector<uint16_t>> t(q, std::vector<uint16_t>(q));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < q; ++a) {
    names.push_back(g.element_name(reps[a]) + "N");
    for (std::size_t b = 0; b < q; ++b) t[a][b] = coset_of[g.op(reps[a], reps[b])];
  }
  Quotient out{FiniteGroup::from_table(g.name() + "/N", t, std::move(names)), std::move(coset_of)};
  return out;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                     const std::vector<uint16_t>& map) {
  if (map.size() != src.order()) return false;
  for (uint16_t a = 0; a < src.order(); ++a) {
    if (map[a] >= dst.order()) return false;
    for (uint16_t b = 0; b < src.order(); ++b)
      if (map[src.op(a, b)] != dst.op(map[a], map[b])) return false;
  }
  return true;
}

uint64_t kernel_of(const FiniteGroup& src, const std::vector<uint16_t>& map,
                   uint16_t dst_identity) {
  uint64_t k = 0;
  for (uint16_t a = 0; a < src.order(); ++a)
    if (map[a] == dst_identity) k |= uint64_t{1} << a;
  return k;
}

std::vector<Homomorphism> all_homomorphisms(const FiniteGroup& src, const FiniteGroup& dst) {
  std::size_t n = src.order(), m = dst.order();

  // Small generating set, greedily.
  std::vector<uint16_t> gens;
  uint64_t have = src.subgroup_closure(0);
  for (uint16_t a = 0; a < n && __builtin_popcountll(have) < static_cast<int>(n); ++a) {
    if ((have >> a) & 1) continue;
    gens.push_back(a);
    have = src.subgroup_closure(have | (uint64_t{1} << a));
  }

  // Every element as a word: element -> (previous element, generator index).
  std::vector<std::pair<uint16_t, uint16_t>> deriv(n, {0xffff, 0xffff});
  std::vector<uint16_t> order_found{src.identity()};
  std::vector<bool> seen(n, false);
  seen[src.identity()] = true;
  for (std::size_t i = 0; i < order_found.size(); ++i) {
    uint16_t a = order_found[i];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      uint16_t b = src.op(a, gens[gi]);
      if (!seen[b]) {
        seen[b] = true;
        deriv[b] = {a, static_cast<uint16_t>(gi)};
        order_found.push_back(b);
      }
    }
  }

  std::vector<Homomorphism> out;
  std::vector<uint16_t> images(gens.size(), 0);
  auto emit = [&] {
    std::vector<uint16_t> map(n, 0);
    map[src.identity()] = dst.identity();
    for (std::size_t i = 1; i < order_found.size(); ++i) {
      uint16_t b = order_found[i];
      auto [a, gi] = deriv[b];
      map[b] = dst.op(map[a], images[gi]);
    }
    if (!is_homomorphism(src, dst, map)) return;
    Homomorphism h{std::move(map), false};
    std::vector<bool> hit(m, false);
    for (auto v : h.map) hit[v] = true;
    h.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    out.push_back(std::move(h));
  };

  // Enumerate generator image tuples in lexicographic order.
  std::size_t k = gens.size();
  if (k == 0) {
    emit();
    return out;
  }
  std::vector<uint16_t> idx(k, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) images[i] = idx[i];
    emit();
    std::size_t i = k;
    while (i > 0) {
      if (++idx[i - 1] < m) break;
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace locgal
