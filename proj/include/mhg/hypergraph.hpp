#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhg/errors.hpp"
#include "mhg/molecule.hpp"

namespace mhg {

// Molecular hypergraph: atoms become symbol-labeled hyperedges, bonds become
// hypernodes. A hypernode always joins exactly two hyperedges; that degree-2
// invariant is what makes grammar derivations emit valid molecules.

enum class SymbolKind : std::uint8_t { Terminal, Nonterminal, Start };

struct Symbol {
  SymbolKind kind = SymbolKind::Terminal;
  Atom atom;                         // terminal payload
  std::vector<BondOrder> signature;  // nonterminal payload

  static Symbol terminal(Atom a) {
    a.in_ring = false;  // derived attribute, not part of the payload
    Symbol s;
    s.kind = SymbolKind::Terminal;
    s.atom = a;
    return s;
  }
  static Symbol nonterminal(std::vector<BondOrder> sig) {
    Symbol s;
    s.kind = SymbolKind::Nonterminal;
    s.signature = std::move(sig);
    return s;
  }
  static Symbol start() {
    Symbol s;
    s.kind = SymbolKind::Start;
    return s;
  }
};

struct Hypernode {
  BondOrder label = BondOrder::Single;
};

struct Hyperedge {
  Symbol symbol;
  std::vector<int> pins;  // incident hypernode indices; ordered for nonterminals
};

struct Hypergraph {
  std::vector<Hypernode> nodes;
  std::vector<Hyperedge> edges;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

inline Hypergraph to_hypergraph(const Molecule& m) {
  require_valid(m);
  Hypergraph h;
  h.nodes.reserve(m.bonds.size());
  for (const Bond& b : m.bonds) h.nodes.push_back({b.order});
  auto adj = m.adjacency();
  h.edges.reserve(m.atoms.size());
  for (int i = 0; i < m.atom_count(); ++i) {
    Hyperedge e;
    e.symbol = Symbol::terminal(m.atoms[i]);
    e.pins = adj[i];  // bond indices, ascending
    h.edges.push_back(std::move(e));
  }
  return h;
}

// Inverse of to_hypergraph: drop hypernodes, keep atoms. Requires a fully
// terminal hypergraph; every hypernode must join exactly two hyperedges.
inline Molecule to_molecule(const Hypergraph& h) {
  if (h.edges.empty()) throw EmptyInput("hypergraph has no hyperedges");
  Molecule m;
  m.atoms.reserve(h.edges.size());
  for (const Hyperedge& e : h.edges) {
    if (e.symbol.kind != SymbolKind::Terminal)
      throw NonterminalRemaining("hypergraph still contains a nonterminal symbol");
    m.atoms.push_back(e.symbol.atom);
  }
  std::vector<std::vector<int>> incident(h.nodes.size());
  for (int ei = 0; ei < h.edge_count(); ++ei) {
    for (int n : h.edges[ei].pins) incident[n].push_back(ei);
  }
  for (int ni = 0; ni < h.node_count(); ++ni) {
    if (incident[ni].size() != 2)
      throw InvalidMolecule("hypernode does not join exactly two hyperedges");
    m.bonds.push_back({incident[ni][0], incident[ni][1], h.nodes[ni].label});
  }
  refresh_rings(m);
  require_valid(m);
  return m;
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// Exact canonical labeling by iterative neighborhood refinement with
// branch-and-minimize over the first non-singleton color class. Hypernodes and
// hyperedges are refined together. Terminal pins are treated as unordered,
// nonterminal pins as ordered (their positions carry gluing semantics).
// External hypernodes (rule attachment points) are flagged as a distinguished
// color; their order falls out of the canonical labeling.
// ---------------------------------------------------------------------------

using CanonicalCode = std::string;

struct CanonicalResult {
  CanonicalCode code;
  std::vector<int> node_order;  // node_order[k] = original hypernode at canonical position k
  std::vector<int> edge_order;  // edge_order[k] = original hyperedge at canonical position k
};

namespace detail {

inline std::string symbol_key(const Symbol& s) {
  switch (s.kind) {
    case SymbolKind::Terminal: {
      std::string k = "t:";
      k += element_symbol(s.atom.element);
      k += ';';
      k += std::to_string(s.atom.formal_charge);
      k += s.atom.aromatic ? ";a;" : ";.;";
      k += std::to_string(s.atom.explicit_h_count);
      return k;
    }
    case SymbolKind::Nonterminal: {
      std::string k = "N:";
      for (BondOrder o : s.signature) {
        k += std::to_string(static_cast<int>(o));
        k += ',';
      }
      return k;
    }
    case SymbolKind::Start: return "S";
  }
  return "?";
}

struct CanonWork {
  const Hypergraph* h;
  std::vector<char> external;              // per node
  std::vector<std::vector<int>> incident;  // node -> edge ids
  int n, e;

  explicit CanonWork(const Hypergraph& hg, const std::vector<int>& externals)
      : h(&hg), n(hg.node_count()), e(hg.edge_count()) {
    external.assign(n, 0);
    for (int x : externals) external[x] = 1;
    incident.resize(n);
    for (int ei = 0; ei < e; ++ei)
      for (int ni : hg.edges[ei].pins) incident[ni].push_back(ei);
  }

  // element ids: [0,n) hypernodes, [n,n+e) hyperedges
  std::vector<int> initial_colors() const {
    std::vector<std::string> keys(n + e);
    for (int i = 0; i < n; ++i) {
      keys[i] = "n:";
      keys[i] += std::to_string(static_cast<int>(h->nodes[i].label));
      keys[i] += external[i] ? ":x" : ":i";
    }
    for (int ei = 0; ei < e; ++ei) keys[n + ei] = "e:" + symbol_key(h->edges[ei].symbol);
    return rank_keys(keys);
  }

  template <typename Key>
  static std::vector<int> rank_keys(const std::vector<Key>& keys) {
    std::vector<const Key*> sorted;
    sorted.reserve(keys.size());
    for (const Key& k : keys) sorted.push_back(&k);
    std::sort(sorted.begin(), sorted.end(),
              [](const Key* a, const Key* b) { return *a < *b; });
    std::vector<int> colors(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      int c = 0;
      // dense rank via binary search over distinct keys
      int lo = 0, hi = static_cast<int>(sorted.size()) - 1;
      while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (*sorted[mid] < keys[i])
          lo = mid + 1;
        else
          hi = mid;
      }
      c = lo;
      colors[i] = c;
    }
    // compact to dense 0..k-1 preserving order
    std::vector<int> present(keys.size() + 1, 0);
    for (int c : colors) present[c] = 1;
    std::vector<int> remap(keys.size() + 1, 0);
    int next = 0;
    for (std::size_t i = 0; i < present.size(); ++i) {
      remap[i] = next;
      if (present[i]) ++next;
    }
    for (int& c : colors) c = remap[c];
    return colors;
  }

  static int color_count(const std::vector<int>& colors) {
    int mx = -1;
    for (int c : colors) mx = std::max(mx, c);
    return mx + 1;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    int classes = color_count(colors);
    while (true) {
      using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
      std::vector<Sig> sigs(n + e);
      for (int i = 0; i < n; ++i) {
        std::vector<std::pair<int, int>> nb;
        for (int ei : incident[i]) {
          int pos = 0;
          if (h->edges[ei].symbol.kind == SymbolKind::Nonterminal) {
            const auto& pins = h->edges[ei].pins;
            pos = 1 + static_cast<int>(std::find(pins.begin(), pins.end(), i) -
                                       pins.begin());
          }
          nb.emplace_back(colors[n + ei], pos);
        }
        std::sort(nb.begin(), nb.end());
        sigs[i] = {colors[i], std::move(nb)};
      }
      for (int ei = 0; ei < e; ++ei) {
        std::vector<std::pair<int, int>> nb;
        const auto& pins = h->edges[ei].pins;
        bool ordered = h->edges[ei].symbol.kind == SymbolKind::Nonterminal;
        for (std::size_t p = 0; p < pins.size(); ++p)
          nb.emplace_back(colors[pins[p]], ordered ? static_cast<int>(p) : 0);
        if (!ordered) std::sort(nb.begin(), nb.end());
        sigs[n + ei] = {colors[n + ei], std::move(nb)};
      }
      std::vector<int> next = rank_keys(sigs);
      int next_classes = color_count(next);
      if (next_classes == classes) return next;
      classes = next_classes;
      colors = std::move(next);
    }
  }

  // serialization under a discrete coloring
  CanonicalResult serialize(const std::vector<int>& colors) const {
    CanonicalResult r;
    r.node_order.resize(n);
    r.edge_order.resize(e);
    std::vector<int> node_pos(n), edge_pos(e);
    {
      std::vector<std::pair<int, int>> ns, es;
      for (int i = 0; i < n; ++i) ns.emplace_back(colors[i], i);
      for (int ei = 0; ei < e; ++ei) es.emplace_back(colors[n + ei], ei);
      std::sort(ns.begin(), ns.end());
      std::sort(es.begin(), es.end());
      for (int k = 0; k < n; ++k) {
        r.node_order[k] = ns[k].second;
        node_pos[ns[k].second] = k;
      }
      for (int k = 0; k < e; ++k) {
        r.edge_order[k] = es[k].second;
        edge_pos[es[k].second] = k;
      }
    }
    std::string& code = r.code;
    code = "V";
    for (int k = 0; k < n; ++k) {
      const Hypernode& nd = h->nodes[r.node_order[k]];
      code += '|';
      code += std::to_string(static_cast<int>(nd.label));
      if (external[r.node_order[k]]) code += 'x';
    }
    code += "#E";
    for (int k = 0; k < e; ++k) {
      const Hyperedge& ed = h->edges[r.edge_order[k]];
      code += '|';
      code += symbol_key(ed.symbol);
      code += '(';
      std::vector<int> pins;
      pins.reserve(ed.pins.size());
      for (int p : ed.pins) pins.push_back(node_pos[p]);
      if (ed.symbol.kind != SymbolKind::Nonterminal)
        std::sort(pins.begin(), pins.end());
      for (int p : pins) {
        code += std::to_string(p);
        code += ',';
      }
      code += ')';
    }
    return r;
  }

  void search(std::vector<int> colors, std::optional<CanonicalResult>& best) const {
    colors = refine(colors);
    int classes = color_count(colors);
    if (classes == n + e) {
      CanonicalResult cand = serialize(colors);
      if (!best || cand.code < best->code) best = std::move(cand);
      return;
    }
    // first non-singleton class by color id
    int target = -1;
    std::vector<int> sizes(classes, 0);
    for (int c : colors) ++sizes[c];
    for (int c = 0; c < classes; ++c) {
      if (sizes[c] > 1) {
        target = c;
        break;
      }
    }
    for (int i = 0; i < n + e; ++i) {
      if (colors[i] != target) continue;
      std::vector<int> branch = colors;
      branch[i] = classes;  // individualize
      search(std::move(branch), best);
    }
  }
};

}  // namespace detail

// Canonical form of a hypergraph. `externals` flags distinguished hypernodes
// (rule attachment points); their canonical order is part of the code.
inline CanonicalResult canonicalize(const Hypergraph& h,
                                    const std::vector<int>& externals = {}) {
  detail::CanonWork work(h, externals);
  std::optional<CanonicalResult> best;
  work.search(work.initial_colors(), best);
  if (!best) {  // empty hypergraph
    CanonicalResult r;
    r.code = "V#E";
    return r;
  }
  return *best;
}

inline CanonicalCode canonical_form(const Hypergraph& h,
                                    const std::vector<int>& externals = {}) {
  return canonicalize(h, externals).code;
}

inline CanonicalCode canonical_code(const Molecule& m) {
  return canonical_form(to_hypergraph(m));
}

inline bool isomorphic(const Molecule& a, const Molecule& b) {
  return canonical_code(a) == canonical_code(b);
}

// Canonical atom ranks: rank[i] is the canonical position of atom i. Atoms map
// one-to-one onto terminal hyperedges, so the hyperedge order carries over.
inline std::vector<int> canonical_atom_ranks(const Molecule& m) {
  CanonicalResult r = canonicalize(to_hypergraph(m));
  std::vector<int> rank(m.atoms.size());
  for (std::size_t k = 0; k < r.edge_order.size(); ++k) rank[r.edge_order[k]] = static_cast<int>(k);
  return rank;
}

}  // namespace mhg
