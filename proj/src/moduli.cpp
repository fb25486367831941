#include "zariski/moduli.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace zariski {

namespace {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (p o q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[static_cast<std::size_t>(q[i])];
  return out;
}

// Local automorphisms of one connected diagram, as permutations of 0..n-1.
std::vector<Permutation> component_generators(Family family, int n) {
  std::vector<Permutation> gens;
  auto transposition = [n](int i, int j) {
    Permutation p = identity_permutation(n);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    return p;
  };
  switch (family) {
    case Family::A:
      if (n >= 2) {
        Permutation p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
        gens.push_back(p);
      }
      break;
    case Family::D:
      if (n == 4) {
        gens.push_back(transposition(0, 2));
        gens.push_back(transposition(2, 3));
      } else {
        gens.push_back(transposition(n - 2, n - 1));
      }
      break;
    case Family::E:
      if (n == 6) gens.push_back(compose(transposition(0, 5), transposition(2, 4)));
      break;
  }
  return gens;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

void require_rank_19(const DynkinType& type) {
  if (type.rank() == 19) return;
  std::ostringstream os;
  os << "type " << type.to_string() << " has rank " << type.rank()
     << "; only rank 19 is covered: for lower rank the lattice genus of N may split into several spinor "
        "genera and the component count is not determined by this method";
  throw OutOfScope(os.str());
}

using Key = std::vector<std::size_t>;          // sorted element indices of a subgroup
using ElementAction = std::vector<std::size_t>;  // image of each element index

std::vector<ElementAction> element_actions(const DiagramSymmetryGroup& sym, const FiniteQuadraticForm& q) {
  const auto n = static_cast<std::size_t>(q.order());
  std::vector<ElementAction> out;
  for (const auto& f : sym.induced) {
    ElementAction a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = q.index_of(apply(f, q, q.element_at(i)));
    out.push_back(std::move(a));
  }
  return out;
}

Key act(const ElementAction& a, const Key& h) {
  Key out;
  out.reserve(h.size());
  for (auto i : h) out.push_back(a[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Permutation> closure(const std::vector<Permutation>& gens, const Permutation& id) {
  std::set<Permutation> out{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    const Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(g, p);
      if (out.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

struct Orbit {
  std::map<Key, Permutation> transversal;  // member -> element mapping the start to it
  std::vector<Permutation> stabilizer_generators;  // of the start
};

// Orbit of a subgroup under the diagram group. Schreier generators of the
// stabilizer are kept only when they enlarge the group generated so far.
Orbit orbit_of(const DiagramSymmetryGroup& sym, const std::vector<ElementAction>& actions, const Key& start) {
  Orbit out;
  const Permutation id = identity_permutation(sym.generators.empty() ? 0 : static_cast<int>(sym.generators[0].size()));
  out.transversal.emplace(start, id);
  std::deque<Key> queue{start};
  std::set<Permutation> stabilizer{id};
  while (!queue.empty()) {
    const Key key = std::move(queue.front());
    queue.pop_front();
    const Permutation t = out.transversal.at(key);
    for (std::size_t g = 0; g < sym.generators.size(); ++g) {
      Key next = act(actions[g], key);
      Permutation st = compose(sym.generators[g], t);
      const auto it = out.transversal.find(next);
      if (it == out.transversal.end()) {
        out.transversal.emplace(next, std::move(st));
        queue.push_back(std::move(next));
      } else {
        Permutation s = compose(inverse(it->second), st);
        if (stabilizer.count(s)) continue;
        out.stabilizer_generators.push_back(std::move(s));
        stabilizer = closure(out.stabilizer_generators, id);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Permutation> diagram_generators(const DynkinType& type) {
  const auto parts = type.expanded();
  const int r = type.rank();
  std::vector<Permutation> gens;
  std::vector<int> offsets;
  int offset = 0;
  for (const auto& c : parts) {
    offsets.push_back(offset);
    for (const auto& local : component_generators(c.family, c.index)) {
      Permutation p = identity_permutation(r);
      for (int i = 0; i < c.index; ++i)
        p[static_cast<std::size_t>(offset + i)] = offset + local[static_cast<std::size_t>(i)];
      gens.push_back(std::move(p));
    }
    offset += c.index;
  }
  // swaps of consecutive equal components
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    if (parts[k].family != parts[k + 1].family || parts[k].index != parts[k + 1].index) continue;
    Permutation p = identity_permutation(r);
    for (int i = 0; i < parts[k].index; ++i) {
      std::swap(p[static_cast<std::size_t>(offsets[k] + i)], p[static_cast<std::size_t>(offsets[k + 1] + i)]);
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

IntMatrix permutation_matrix(const Permutation& p) {
  const Eigen::Index r = static_cast<Eigen::Index>(p.size());
  IntMatrix m = IntMatrix::Zero(r + 1, r + 1);
  for (Eigen::Index i = 0; i < r; ++i) m(p[static_cast<std::size_t>(i)], i) = 1;
  m(r, r) = 1;
  return m;
}

DiagramSymmetryGroup diagram_symmetries(const DynkinType& type, const DiscriminantGroup& m0_disc) {
  DiagramSymmetryGroup out;
  out.generators = diagram_generators(type);
  for (const auto& g : out.generators) out.induced.push_back(induced_map(permutation_matrix(g), m0_disc));
  std::set<Permutation> seen;
  const Permutation id = identity_permutation(type.rank());
  std::deque<Permutation> queue{id};
  seen.insert(id);
  while (!queue.empty()) {
    const Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : out.generators) {
      Permutation next = compose(g, p);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  out.order = seen.size();
  return out;
}

std::vector<std::size_t> MsEnumeration::class_representatives() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].representative) out.push_back(i);
  return out;
}

MsEnumeration enumerate_ms(const DynkinType& type) {
  require_rank_19(type);
  return enumerate_ms_any_rank(type);
}

MsEnumeration enumerate_ms_any_rank(const DynkinType& type) {
  PolarizedRootData base = polarized_m0(type);
  DiscriminantGroup disc(base.m0);
  DiagramSymmetryGroup sym = diagram_symmetries(type, disc);
  const FiniteQuadraticForm& q = disc.form();
  const auto actions = element_actions(sym, q);
  const auto n = static_cast<std::size_t>(q.order());

  std::vector<std::size_t> isotropic;
  std::vector<Element> iso_elements;
  for (std::size_t idx = 1; idx < n; ++idx) {
    Element x = q.element_at(idx);
    if (q.q_numerator(x) != 0) continue;
    isotropic.push_back(idx);
    iso_elements.push_back(std::move(x));
  }

  // Orbits of isotropic subgroups, grown one cyclic step at a time from the
  // start member of each admissible orbit. A subgroup containing a
  // non-admissible one is not admissible, so those orbits are not extended.
  struct Found {
    Key start;
    Orbit orbit;
    Admissibility checks;
  };
  std::vector<Found> found;
  std::map<Key, std::size_t> known;
  std::deque<std::size_t> queue;
  auto discover = [&](Key key) {
    if (known.count(key)) return;
    Orbit orbit = orbit_of(sym, actions, key);
    const std::size_t id = found.size();
    for (const auto& member : orbit.transversal) known.emplace(member.first, id);
    Admissibility checks = admissibility(Overlattice(base, disc, make_subgroup(q, key)));
    if (checks.admissible()) queue.push_back(id);
    found.push_back({std::move(key), std::move(orbit), std::move(checks)});
  };
  discover(Key{q.index_of(q.zero())});

  std::vector<char> member(n), covered(n);
  while (!queue.empty()) {
    const Key start = found[queue.front()].start;
    queue.pop_front();
    const auto gens = make_subgroup(q, start).generators(q);
    std::vector<Element> members;
    std::fill(member.begin(), member.end(), 0);
    std::fill(covered.begin(), covered.end(), 0);
    for (auto idx : start) {
      members.push_back(q.element_at(idx));
      member[idx] = 1;
    }
    for (std::size_t c = 0; c < isotropic.size(); ++c) {
      if (member[isotropic[c]] || covered[isotropic[c]]) continue;
      const Element& x = iso_elements[c];
      if (std::any_of(gens.begin(), gens.end(), [&](const Element& g) { return q.b_numerator(x, g) != 0; }))
        continue;
      // multiples kx with k prime to the order of x modulo the start give
      // the same extension
      std::int64_t rel = 1;
      for (Element kx = x; !member[q.index_of(kx)]; kx = q.add(kx, x)) ++rel;
      Key grown;
      grown.reserve(start.size() * static_cast<std::size_t>(rel));
      Element kx = q.zero();
      for (std::int64_t k = 0; k < rel; ++k) {
        const bool same = std::gcd(k, rel) == 1;
        for (const auto& m : members) {
          const std::size_t idx = q.index_of(q.add(m, kx));
          grown.push_back(idx);
          if (same) covered[idx] = 1;
        }
        kx = q.add(kx, x);
      }
      std::sort(grown.begin(), grown.end());
      discover(std::move(grown));
    }
  }

  struct Member {
    SubgroupData subgroup;
    std::size_t found;
    const Permutation* transversal;
  };
  std::vector<Member> admissible;
  for (std::size_t id = 0; id < found.size(); ++id) {
    if (!found[id].checks.admissible()) continue;
    for (const auto& [key, t] : found[id].orbit.transversal) admissible.push_back({make_subgroup(q, key), id, &t});
  }
  std::sort(admissible.begin(), admissible.end(),
            [](const Member& a, const Member& b) { return subgroup_less(a.subgroup, b.subgroup); });

  MsEnumeration out{base, disc, sym, found.size(), {}};
  std::map<std::size_t, std::size_t> class_id;
  for (auto& a : admissible) {
    const Found& f = found[a.found];
    const auto [it, fresh] = class_id.emplace(a.found, class_id.size());
    // Stab(t H) = t Stab(H) t^-1
    const Permutation& t = *a.transversal;
    const Permutation t_inv = inverse(t);
    std::vector<Permutation> stabilizer;
    for (const auto& s : f.orbit.stabilizer_generators) stabilizer.push_back(compose(t, compose(s, t_inv)));
    Overlattice m(base, disc, std::move(a.subgroup));
    DiscriminantGroup m_disc(m.lattice());
    const std::size_t size = f.orbit.transversal.size();
    out.entries.push_back(MsEntry{std::move(m), std::move(m_disc), it->second, fresh, size, sym.order / size,
                                  std::move(stabilizer), f.checks});
  }
  return out;
}

std::vector<BinaryEvenForm> enumerate_ns(const MsEntry& m) {
  const FiniteQuadraticForm target = negate(m.discriminant.form());
  std::vector<BinaryEvenForm> out;
  for (const auto& n : enumerate_even_classes(target.order())) {
    const FiniteQuadraticForm qn = discriminant_form(lattice_of(n));
    if (qn.invariant_factors() != target.invariant_factors()) continue;
    if (!fqm_isomorphisms(target, qn).empty()) out.push_back(n);
  }
  return out;
}

std::vector<FqmMap> enumerate_ls(const MsEntry& m, const BinaryEvenForm& n) {
  auto ls = fqm_isomorphisms(negate(m.discriminant.form()), discriminant_form(lattice_of(n)));
  std::sort(ls.begin(), ls.end());
  return ls;
}

std::vector<Rank2Isometry> rank2_orthogonal_group(const BinaryEvenForm& n) {
  const IntMatrix g = n.gram();
  const auto first = vectors_of_norm(g, Rational(n.a));
  const auto second = vectors_of_norm(g, Rational(n.c));
  std::vector<Rank2Isometry> out;
  for (const auto& u : first) {
    for (const auto& v : second) {
      if (u.dot(g.cast<Rational>() * v) != Rational(n.b)) continue;
      IntMatrix m(2, 2);
      m.col(0) = to_integer(u);
      m.col(1) = to_integer(v);
      const Integer det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      out.push_back({m, det > 0 ? 1 : -1});
    }
  }
  return out;
}

std::size_t OrbitReport::real_count() const {
  return static_cast<std::size_t>(std::count_if(orbits.begin(), orbits.end(), [](const GluingOrbit& o) { return o.real; }));
}

OrbitReport fiber_orbits(const MsEntry& m, const BinaryEvenForm& n) {
  OrbitReport report;
  report.n = n;
  const FiniteQuadraticForm& qm = m.discriminant.form();
  const Lattice n_lattice = lattice_of(n);
  const DiscriminantGroup n_disc(n_lattice);
  const FiniteQuadraticForm& qn = n_disc.form();

  const auto ls = enumerate_ls(m, n);
  report.ls_size = ls.size();
  std::map<FqmMap, std::size_t> index;
  for (std::size_t i = 0; i < ls.size(); ++i) index.emplace(ls[i], i);

  // g_M acts through its inverse on the source of a gluing; generators of
  // the stabilizer suffice for orbits of a finite group
  std::set<FqmMap> m_side;
  for (const auto& g : m.stabilizer_generators) {
    const FqmMap gm = induced_map(m.lattice.restrict_isometry(permutation_matrix(g)), m.discriminant);
    m_side.insert(inverse(gm, qm, qm));
  }
  report.stabilizer_order = m.stabilizer_order;

  struct NAction {
    FqmMap map;
    int det;
  };
  std::vector<NAction> n_side;
  const auto on = rank2_orthogonal_group(n);
  report.orthogonal_order = on.size();
  for (const auto& g : on) n_side.push_back({induced_map(g.matrix, n_disc), g.det});

  // state = 2 * gluing + (sign < 0)
  const std::size_t states = 2 * ls.size();
  std::vector<std::size_t> orbit_of(states, SIZE_MAX);
  for (std::size_t s = 0; s < states; ++s) {
    if (orbit_of[s] != SIZE_MAX) continue;
    const std::size_t id = report.orbits.size();
    std::vector<std::size_t> stack{s};
    orbit_of[s] = id;
    std::size_t size = 0;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      const FqmMap& gamma = ls[cur / 2];
      const bool negative = cur % 2 == 1;
      auto visit = [&](const FqmMap& next_gamma, bool next_negative) {
        const std::size_t t = 2 * index.at(next_gamma) + (next_negative ? 1 : 0);
        if (orbit_of[t] == SIZE_MAX) {
          orbit_of[t] = id;
          stack.push_back(t);
        }
      };
      for (const auto& inv : m_side) visit(compose(gamma, inv, qn), negative);
      for (const auto& a : n_side) visit(compose(a.map, gamma, qn), a.det < 0 ? !negative : negative);
    }
    report.orbits.push_back({size, false, s / 2, s % 2 == 0 ? 1 : -1});
  }
  for (std::size_t s = 0; s < states; s += 2)
    if (orbit_of[s] == orbit_of[s + 1]) report.orbits[orbit_of[s]].real = true;
  for (auto& o : report.orbits) {
    const std::size_t s = 2 * o.gluing + (o.sign < 0 ? 1 : 0);
    o.conjugate = orbit_of[s ^ 1];
  }
  return report;
}

std::size_t ComponentReport::component_count() const {
  std::size_t total = 0;
  for (const auto& c : classes)
    for (const auto& f : c.fibers) total += f.orbits.size();
  return total;
}

std::size_t ComponentReport::real_component_count() const {
  std::size_t total = 0;
  for (const auto& c : classes)
    for (const auto& f : c.fibers) total += f.real_count();
  return total;
}

std::size_t ComponentReport::sharp_class_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const MsClassReport& c) { return !c.ns.empty(); }));
}

ComponentReport component_report(const DynkinType& type) {
  ComponentReport report{enumerate_ms(type), {}, {}};
  for (auto e : report.ms.class_representatives()) {
    const MsEntry& m = report.ms.entries[e];
    MsClassReport cls{e, enumerate_ns(m), {}};
    for (const auto& n : cls.ns) cls.fibers.push_back(fiber_orbits(m, n));
    const std::size_t id = report.classes.size();
    for (std::size_t i = 0; i < cls.ns.size(); ++i)
      for (std::size_t j = i + 1; j < cls.ns.size(); ++j) report.candidate_pairs.push_back({id, cls.ns[i], cls.ns[j]});
    report.classes.push_back(std::move(cls));
  }
  return report;
}

}  // namespace zariski
