#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhg/errors.hpp"

namespace mhg {

// Supported element alphabet: the SMILES organic subset plus hydrogen.
enum class Element : std::uint8_t { H, B, C, N, O, P, S, F, Cl, Br, I };

inline constexpr int kElementCount = 11;

inline constexpr std::string_view element_symbol(Element e) {
  constexpr std::string_view names[] = {"H", "B", "C", "N", "O", "P",
                                        "S", "F", "Cl", "Br", "I"};
  return names[static_cast<int>(e)];
}

inline std::optional<Element> element_from_symbol(std::string_view s) {
  for (int i = 0; i < kElementCount; ++i) {
    if (element_symbol(static_cast<Element>(i)) == s)
      return static_cast<Element>(i);
  }
  return std::nullopt;
}

// Standard atomic weights, indexed by Element.
inline constexpr double element_weight(Element e) {
  constexpr double w[] = {1.008, 10.81,  12.011, 14.007, 15.999, 30.974,
                          32.06, 18.998, 35.45,  79.904, 126.904};
  return w[static_cast<int>(e)];
}

// Allowed valences, lowest first. Implicit hydrogens are resolved against the
// lowest valence that covers the bond order sum.
inline const std::vector<int>& element_valences(Element e) {
  static const std::vector<int> table[] = {
      {1},        // H
      {3},        // B
      {4},        // C
      {3},        // N
      {2},        // O
      {3, 5},     // P
      {2, 4, 6},  // S
      {1},        // F
      {1},        // Cl
      {1},        // Br
      {1},        // I
  };
  return table[static_cast<int>(e)];
}

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

inline constexpr std::string_view bond_order_name(BondOrder o) {
  switch (o) {
    case BondOrder::Single: return "single";
    case BondOrder::Double: return "double";
    case BondOrder::Triple: return "triple";
    case BondOrder::Aromatic: return "aromatic";
  }
  return "?";
}

inline std::optional<BondOrder> bond_order_from_name(std::string_view s) {
  for (BondOrder o : {BondOrder::Single, BondOrder::Double, BondOrder::Triple,
                      BondOrder::Aromatic}) {
    if (bond_order_name(o) == s) return o;
  }
  return std::nullopt;
}

struct Atom {
  Element element = Element::C;
  int formal_charge = 0;
  bool aromatic = false;
  int explicit_h_count = 0;
  bool in_ring = false;  // derived; refresh_rings() recomputes

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Bond {
  int a = -1;  // endpoints, unordered pair
  int b = -1;
  BondOrder order = BondOrder::Single;
};

struct Molecule {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::string name;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int bond_count() const { return static_cast<int>(bonds.size()); }

  // bond indices incident to each atom
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(atoms.size());
    for (int i = 0; i < bond_count(); ++i) {
      adj[bonds[i].a].push_back(i);
      adj[bonds[i].b].push_back(i);
    }
    return adj;
  }

  int other_end(int bond_idx, int atom_idx) const {
    const Bond& b = bonds[bond_idx];
    return b.a == atom_idx ? b.b : b.a;
  }
};

// Bond order contribution toward an atom's valence. Aromatic bonds are
// resolved per atom in aromatic_valence_sum below.
inline int bond_order_value(BondOrder o) {
  switch (o) {
    case BondOrder::Single: return 1;
    case BondOrder::Double: return 2;
    case BondOrder::Triple: return 3;
    case BondOrder::Aromatic: return 0;  // handled separately
  }
  return 0;
}

// Valence consumed at `atom_idx` by its bonds. For aromatic atoms, n aromatic
// bonds contribute n+1 for C/B/N/P (the pi electron comes from a double bond)
// and n for O/S (the pi electron comes from a lone pair), which matches the
// usual organic-subset reading: c1ccccc1 has one H per carbon, thiophene and
// furan heteroatoms have none, pyrrole nitrogen must be written [nH].
inline int valence_sum(const Molecule& m, int atom_idx,
                       const std::vector<std::vector<int>>& adj) {
  const Atom& a = m.atoms[atom_idx];
  int plain = 0;
  int aromatic_bonds = 0;
  for (int bi : adj[atom_idx]) {
    if (m.bonds[bi].order == BondOrder::Aromatic)
      ++aromatic_bonds;
    else
      plain += bond_order_value(m.bonds[bi].order);
  }
  int arom = aromatic_bonds;
  if (aromatic_bonds > 0 && a.element != Element::O && a.element != Element::S)
    arom += 1;
  return plain + arom;
}

// Lowest allowed valence covering `used`, or nullopt if even the highest
// valence is exceeded.
inline std::optional<int> lowest_valence_at_least(Element e, int used) {
  for (int v : element_valences(e)) {
    if (v >= used) return v;
  }
  return std::nullopt;
}

inline bool is_connected(const Molecule& m) {
  if (m.atoms.empty()) return false;
  std::vector<char> seen(m.atoms.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  auto adj = m.adjacency();
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int bi : adj[v]) {
      int u = m.other_end(bi, v);
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == m.atom_count();
}

// Marks ring bonds (non-bridges) via one DFS lowpoint pass; returns a flag per
// bond. Also the basis for Atom::in_ring.
inline std::vector<char> ring_bond_flags(const Molecule& m) {
  int n = m.atom_count();
  std::vector<char> is_ring(m.bonds.size(), 0);
  std::vector<int> depth(n, -1), low(n, 0);
  auto adj = m.adjacency();
  // iterative DFS: entries are (atom, incoming bond, next adjacency slot)
  struct Frame {
    int v, in_bond;
    std::size_t next = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1}};
    depth[root] = 0;
    low[root] = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        int bi = adj[f.v][f.next++];
        if (bi == f.in_bond) continue;
        int u = m.other_end(bi, f.v);
        if (depth[u] < 0) {
          depth[u] = depth[f.v] + 1;
          low[u] = depth[u];
          stack.push_back({u, bi});
        } else {
          low[f.v] = std::min(low[f.v], depth[u]);
          if (depth[u] < depth[f.v]) is_ring[bi] = 1;  // back edge
        }
      } else {
        int v = f.v, in_bond = f.in_bond;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] < depth[v]) is_ring[in_bond] = 1;  // tree edge in a cycle
        }
      }
    }
  }
  return is_ring;
}

inline void refresh_rings(Molecule& m) {
  auto flags = ring_bond_flags(m);
  for (Atom& a : m.atoms) a.in_ring = false;
  for (int i = 0; i < m.bond_count(); ++i) {
    if (flags[i]) {
      m.atoms[m.bonds[i].a].in_ring = true;
      m.atoms[m.bonds[i].b].in_ring = true;
    }
  }
}

// Structural validity: index sanity, no parallel bonds, connectivity, the
// aromatic-bond rule, and hydrogen counts consistent with an allowed valence.
// Returns an explanation for the first violation found.
inline std::optional<std::string> validity_violation(const Molecule& m) {
  int n = m.atom_count();
  if (n == 0) return "molecule has no atoms";
  std::vector<std::pair<int, int>> pairs;
  for (const Bond& b : m.bonds) {
    if (b.a < 0 || b.a >= n || b.b < 0 || b.b >= n)
      return "bond endpoint out of range";
    if (b.a == b.b) return "self bond";
    pairs.emplace_back(std::min(b.a, b.b), std::max(b.a, b.b));
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    return "parallel bond between one atom pair";
  if (!is_connected(m)) return "molecule is disconnected";
  auto adj = m.adjacency();
  for (const Bond& b : m.bonds) {
    if (b.order == BondOrder::Aromatic &&
        (!m.atoms[b.a].aromatic || !m.atoms[b.b].aromatic))
      return "aromatic bond between non-aromatic atoms";
  }
  for (int i = 0; i < n; ++i) {
    const Atom& a = m.atoms[i];
    if (a.explicit_h_count < 0) return "negative hydrogen count";
    int used = valence_sum(m, i, adj) + a.explicit_h_count;
    // charge widens the window by |charge|; keeps species like [NH4+] legal
    int slack = std::abs(a.formal_charge);
    auto v = lowest_valence_at_least(a.element, used - slack);
    if (!v) return std::string("valence exceeded on atom ") + std::to_string(i);
  }
  return std::nullopt;
}

inline bool is_valid(const Molecule& m) { return !validity_violation(m).has_value(); }

inline void require_valid(const Molecule& m) {
  if (auto why = validity_violation(m)) throw InvalidMolecule(*why);
}

// Computed stand-in targets for the downstream harness.
inline double molecular_weight(const Molecule& m) {
  double w = 0;
  for (const Atom& a : m.atoms)
    w += element_weight(a.element) + element_weight(Element::H) * a.explicit_h_count;
  return w;
}

// Cyclomatic ring count; the molecule is connected by invariant.
inline int ring_count(const Molecule& m) {
  return m.bond_count() - m.atom_count() + 1;
}

}  // namespace mhg
