#include "relbim/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace relbim {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Closure {
  std::vector<Word> reps;  // canonical representative per class, reps[0] = empty word
  std::vector<std::vector<int>> table;
  std::vector<int> generator_image;
};

// congruence closure over words of length <= bound, both rewrite directions at
// every position; empty when some class has no representative shorter than the
// bound (the length-`bound` layer is then still informative)
std::optional<Closure> closure_at(const MonoidPresentation& pres, int bound) {
  if (bound < 1) return std::nullopt;
  const AlphabetPtr& alphabet = pres.alphabet;

  std::vector<Word> all;
  std::vector<long long> offset(bound + 2, 0);
  for (int len = 0; len <= bound; ++len) {
    offset[len] = static_cast<long long>(all.size());
    auto ws = enumerate_words(alphabet, len);
    all.insert(all.end(), ws.begin(), ws.end());
  }
  offset[bound + 1] = static_cast<long long>(all.size());
  auto index_of = [&](const Word& w) {
    return static_cast<int>(offset[w.length()] + lex_rank(w));
  };

  Dsu dsu(static_cast<int>(all.size()));
  for (const Word& w : all)
    for (const auto& [l, r] : pres.relations) {
      if (!l.empty())
        for (const auto& [u, v] : occurrences(w, l)) {
          Word w2 = concat(u, concat(r, v));
          if (w2.length() <= bound) dsu.unite(index_of(w), index_of(w2));
        }
      else if (w.length() + r.length() <= bound) {
        // empty left side: 1 = r applies at every position; joining at the
        // front suffices for the closure
        dsu.unite(index_of(w), index_of(concat(r, w)));
      }
      if (!r.empty())
        for (const auto& [u, v] : occurrences(w, r)) {
          Word w2 = concat(u, concat(l, v));
          if (w2.length() <= bound) dsu.unite(index_of(w), index_of(w2));
        }
      else if (w.length() + l.length() <= bound) {
        dsu.unite(index_of(w), index_of(concat(l, w)));
      }
    }

  // canonical representative = least word index in the class
  std::vector<int> rep_of_root(all.size(), -1);
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    int root = dsu.find(i);
    if (rep_of_root[root] < 0) rep_of_root[root] = i;  // words are in canonical order
  }
  std::vector<int> roots;
  for (int i = 0; i < static_cast<int>(all.size()); ++i)
    if (dsu.find(i) == i) roots.push_back(i);
  std::sort(roots.begin(), roots.end(),
            [&](int a, int b) { return rep_of_root[a] < rep_of_root[b]; });

  Closure c;
  std::vector<int> elem_of_root(all.size(), -1);
  for (int e = 0; e < static_cast<int>(roots.size()); ++e) {
    const Word& rep = all[rep_of_root[roots[e]]];
    if (rep.length() >= bound) return std::nullopt;  // class not settled below the bound
    elem_of_root[roots[e]] = e;
    c.reps.push_back(rep);
  }
  auto class_of = [&](const Word& w) { return elem_of_root[dsu.find(index_of(w))]; };

  for (int x = 0; x < alphabet->size(); ++x)
    c.generator_image.push_back(class_of(Word(alphabet, {x})));

  const int n = static_cast<int>(c.reps.size());
  auto mul_letter = [&](int e, int x) {
    return class_of(concat(c.reps[e], Word(alphabet, {x})));
  };
  c.table.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int cur = a;
      for (int x : c.reps[b].letters()) cur = mul_letter(cur, x);
      c.table[a][b] = cur;
    }
  return c;
}

bool closure_equal(const Closure& a, const Closure& b) {
  return a.reps == b.reps && a.table == b.table && a.generator_image == b.generator_image;
}

bool table_is_monoid(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    if (t[0][a] != a || t[a][0] != a) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

bool relations_hold(const FiniteMonoid& m, const MonoidPresentation& pres) {
  for (const auto& [l, r] : pres.relations)
    if (m.eval(l) != m.eval(r)) return false;
  return true;
}

}  // namespace

int FiniteMonoid::eval(const Word& w) const {
  int cur = 0;
  for (int x : w.letters()) cur = mul(cur, generator_image.at(x));
  return cur;
}

std::optional<FiniteMonoid> enumerate_finite_monoid(const MonoidPresentation& pres,
                                                    int max_len) {
  if (max_len < 1) throw std::invalid_argument("enumerate_finite_monoid: bound must be >= 1");
  auto at_bound = closure_at(pres, max_len);
  auto below = closure_at(pres, max_len - 1);
  if (!at_bound || !below) return std::nullopt;
  if (!closure_equal(*at_bound, *below)) return std::nullopt;

  FiniteMonoid m;
  m.size = static_cast<int>(at_bound->reps.size());
  m.elements = std::move(at_bound->reps);
  m.table = std::move(at_bound->table);
  m.generator_image = std::move(at_bound->generator_image);
  if (!table_is_monoid(m.table)) return std::nullopt;
  if (!relations_hold(m, pres)) return std::nullopt;
  return m;
}

std::string export_table(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "size " << m.size << '\n';
  for (int a = 0; a < m.size; ++a) {
    for (int b = 0; b < m.size; ++b) {
      if (b) out << ' ';
      out << m.table[a][b];
    }
    out << '\n';
  }
  return out.str();
}

FiniteMonoid import_table(const std::string& text, const MonoidPresentation& pres) {
  std::istringstream in(text);
  std::string kw;
  int n = 0;
  if (!(in >> kw >> n) || kw != "size" || n <= 0)
    throw std::invalid_argument("table import: expected \"size n\" header");
  const int ngens = pres.alphabet->size();
  if (n <= ngens)
    throw std::invalid_argument(
        "table import: too few elements to host distinct generator images "
        "(elements 1..|X| are the generators)");
  FiniteMonoid m;
  m.size = n;
  m.table.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v;
      if (!(in >> v) || v < 0 || v >= n)
        throw std::invalid_argument("table import: bad entry");
      m.table[a][b] = v;
    }
  for (int x = 0; x < ngens; ++x) m.generator_image.push_back(x + 1);
  if (!table_is_monoid(m.table))
    throw std::invalid_argument("table import: not an associative monoid with identity 0");
  if (!relations_hold(m, pres))
    throw std::invalid_argument("table import: a defining relation fails");

  // shortest-word representatives via breadth-first products; also certifies
  // that the generators reach every element
  std::vector<std::optional<Word>> rep(n);
  rep[0] = Word(pres.alphabet);
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (int x = 0; x < ngens; ++x) {
      int t = m.mul(e, m.generator_image[x]);
      if (!rep[t]) {
        rep[t] = concat(*rep[e], Word(pres.alphabet, {x}));
        queue.push_back(t);
      }
    }
  }
  for (int e = 0; e < n; ++e) {
    if (!rep[e])
      throw std::invalid_argument("table import: element unreachable from the generators");
    m.elements.push_back(*rep[e]);
  }
  return m;
}

int CayleyComplex::vertex_index(int m, int mp) const {
  return side == CayleySide::left ? m : m * monoid_size + mp;
}

int CayleyComplex::edge_index(int m, int x, int mp) const {
  return side == CayleySide::left ? m * ngens + x : (m * ngens + x) * monoid_size + mp;
}

int CayleyComplex::cell_index(int m, int rel, int mp) const {
  return side == CayleySide::left ? m * nrels + rel : (m * nrels + rel) * monoid_size + mp;
}

CayleyComplex build_cayley(const FiniteMonoid& m, const MonoidPresentation& pres,
                           CayleySide side) {
  if (!relations_hold(m, pres))
    throw std::invalid_argument("build_cayley: monoid violates a defining relation");
  CayleyComplex c;
  c.side = side;
  c.monoid_size = m.size;
  c.ngens = pres.alphabet->size();
  c.nrels = static_cast<int>(pres.relations.size());
  const int n = m.size;

  if (side == CayleySide::left) {
    c.nv = n;
    c.ne = n * c.ngens;
    c.nf = n * c.nrels;
    c.edge_src.resize(c.ne);
    c.cell_anchor.resize(c.nf);
    c.d1 = ZMatrix(c.nv, c.ne);
    for (int e = 0; e < n; ++e)
      for (int x = 0; x < c.ngens; ++x) {
        int col = c.edge_index(e, x, 0);
        c.edge_src[col] = e;
        c.d1.add(m.mul(e, m.generator_image[x]), col, Int(1));
        c.d1.add(e, col, Int(-1));
      }
    c.d2 = ZMatrix(c.ne, c.nf);
    for (int e = 0; e < n; ++e)
      for (int k = 0; k < c.nrels; ++k) {
        int col = c.cell_index(e, k, 0);
        c.cell_anchor[col] = e;
        const auto& [l, r] = pres.relations[k];
        auto walk = [&](const Word& w, int s) {
          int cur = e;
          for (int x : w.letters()) {
            c.d2.add(c.edge_index(cur, x, 0), col, Int(s));
            cur = m.mul(cur, m.generator_image[x]);
          }
        };
        walk(r, 1);
        walk(l, -1);
      }
  } else {
    c.nv = n * n;
    c.ne = n * c.ngens * n;
    c.nf = n * c.nrels * n;
    c.edge_src.resize(c.ne);
    c.cell_anchor.resize(c.nf);
    c.d1 = ZMatrix(c.nv, c.ne);
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < c.ngens; ++x)
        for (int b = 0; b < n; ++b) {
          int col = c.edge_index(a, x, b);
          c.edge_src[col] = c.vertex_index(a, m.mul(m.generator_image[x], b));
          c.d1.add(c.vertex_index(m.mul(a, m.generator_image[x]), b), col, Int(1));
          c.d1.add(c.vertex_index(a, m.mul(m.generator_image[x], b)), col, Int(-1));
        }
    c.d2 = ZMatrix(c.ne, c.nf);
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < c.nrels; ++k)
        for (int b = 0; b < n; ++b) {
          int col = c.cell_index(a, k, b);
          c.cell_anchor[col] = c.vertex_index(a, m.mul(m.eval(pres.relations[k].first), b));
          const auto& [l, r] = pres.relations[k];
          // step t consumes letter w[t] at position (a * w[<t], w[t], w[>t] * b)
          auto walk = [&](const Word& w, int s) {
            std::vector<int> post(w.length() + 1);
            post[w.length()] = b;
            for (int t = w.length() - 1; t >= 0; --t)
              post[t] = m.mul(m.generator_image[w.letter(t)], post[t + 1]);
            int pre = a;
            for (int t = 0; t < w.length(); ++t) {
              c.d2.add(c.edge_index(pre, w.letter(t), post[t + 1]), col, Int(s));
              pre = m.mul(pre, m.generator_image[w.letter(t)]);
            }
          };
          walk(r, 1);
          walk(l, -1);
        }
  }

  if (matmul(c.d1, c.d2).nnz() != 0)
    throw std::logic_error("cayley: cellular boundaries do not compose to zero");

  Dsu dsu(c.nv);
  if (side == CayleySide::left) {
    for (int e = 0; e < n; ++e)
      for (int x = 0; x < c.ngens; ++x) dsu.unite(e, m.mul(e, m.generator_image[x]));
  } else {
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < c.ngens; ++x)
        for (int b = 0; b < n; ++b) {
          dsu.unite(c.vertex_index(m.mul(a, m.generator_image[x]), b),
                    c.vertex_index(a, m.mul(m.generator_image[x], b)));
        }
    c.vertex_product.resize(c.nv);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) c.vertex_product[c.vertex_index(a, b)] = m.mul(a, b);
  }
  c.vertex_component.assign(c.nv, -1);
  for (int v = 0; v < c.nv; ++v) {
    int root = dsu.find(v);
    if (c.vertex_component[root] < 0) c.vertex_component[root] = c.component_count++;
    c.vertex_component[v] = c.vertex_component[root];
  }
  return c;
}

CayleyCheckReport cayley_homology_check(const CayleyComplex& c) {
  CayleyCheckReport rep;
  rep.side = c.side;
  rep.h0_rank = c.component_count;
  rep.h1_total = homology_at(c.d1, c.d2);

  // per-component H1; edges/cells restricted through their anchor vertices
  ZMatrix d1t = c.d1.transpose();
  ZMatrix d2t = c.d2.transpose();
  for (int comp = 0; comp < c.component_count; ++comp) {
    std::vector<int> vmap(c.nv, -1), emap(c.ne, -1);
    int nv = 0, ne = 0;
    for (int v = 0; v < c.nv; ++v)
      if (c.vertex_component[v] == comp) vmap[v] = nv++;
    for (int e = 0; e < c.ne; ++e)
      if (c.vertex_component[c.edge_src[e]] == comp) emap[e] = ne++;
    std::vector<int> cells;
    for (int f = 0; f < c.nf; ++f)
      if (c.vertex_component[c.cell_anchor[f]] == comp) cells.push_back(f);
    ZMatrix rd1(nv, ne);
    for (int e = 0; e < c.ne; ++e) {
      if (emap[e] < 0) continue;
      for (const auto& [v, val] : d1t.row(e)) rd1.add(vmap[v], emap[e], val);
    }
    ZMatrix rd2(ne, static_cast<int>(cells.size()));
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
      for (const auto& [e, val] : d2t.row(cells[i])) rd2.add(emap[e], i, val);
    rep.h1_per_component.push_back(homology_at(rd1, rd2));
  }

  rep.pi2_rank = c.nf - rank(c.d2);
  rep.relation_term_rank = c.nf - rep.pi2_rank;

  rep.h1_vanishes = rep.h1_total.betti == 0 && rep.h1_total.torsion.empty();
  for (const auto& h : rep.h1_per_component)
    if (h.betti != 0 || !h.torsion.empty()) rep.h1_vanishes = false;

  if (c.side == CayleySide::left) {
    rep.h0_expected = rep.h0_rank == 1;
  } else {
    bool classify = rep.h0_rank == c.monoid_size;
    std::vector<int> comp_product(c.component_count, -1);
    for (int v = 0; v < c.nv && classify; ++v) {
      int& p = comp_product[c.vertex_component[v]];
      if (p < 0)
        p = c.vertex_product[v];
      else if (p != c.vertex_product[v])
        classify = false;
    }
    rep.h0_expected = classify;
  }

  rep.euler_ok = !rep.h1_vanishes || (c.nf - c.ne + c.nv == rep.pi2_rank + rep.h0_rank);
  return rep;
}

}  // namespace relbim
