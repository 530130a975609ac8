#include "relbim/squier.hpp"

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

}  // namespace

SquierSlice SquierSlice::build(MonoidPresentation pres, int max_len) {
  if (max_len < 0) throw std::invalid_argument("squier: negative length bound");
  SquierSlice s;
  s.pres_ = std::move(pres);
  s.max_len_ = max_len;

  std::map<int, std::vector<Word>> words;
  for (int len = 0; len <= max_len; ++len) {
    words[len] = enumerate_words(s.pres_.alphabet, len);
    for (const Word& w : words[len]) {
      s.vertex_of_.emplace(w, static_cast<int>(s.vertices_.size()));
      s.vertices_.push_back(w);
    }
  }

  const int nrel = static_cast<int>(s.pres_.relations.size());
  for (int k = 0; k < nrel; ++k) {
    const auto& [l, r] = s.pres_.relations[k];
    const int need = std::max(l.length(), r.length());
    for (int a = 0; a + need <= max_len; ++a)
      for (int b = 0; a + b + need <= max_len; ++b)
        for (const Word& u : words[a])
          for (const Word& v : words[b]) {
            SquierEdge e{u, k, v, 0, 0};
            e.src = s.vertex_of_.at(concat(u, concat(l, v)));
            e.dst = s.vertex_of_.at(concat(u, concat(r, v)));
            s.edge_of_.emplace(TensorCell{u, k, v}, static_cast<int>(s.edges_.size()));
            s.edges_.push_back(std::move(e));
          }
  }

  for (int k1 = 0; k1 < nrel; ++k1)
    for (int k2 = 0; k2 < nrel; ++k2) {
      const auto& [l1, r1] = s.pres_.relations[k1];
      const auto& [l2, r2] = s.pres_.relations[k2];
      const int need = std::max(l1.length(), r1.length()) + std::max(l2.length(), r2.length());
      for (int a = 0; a + need <= max_len; ++a)
        for (int b = 0; a + b + need <= max_len; ++b)
          for (int c = 0; a + b + c + need <= max_len; ++c)
            for (const Word& u : words[a])
              for (const Word& v : words[b])
                for (const Word& w : words[c]) {
                  // all four boundary edges must exist in the slice
                  if (!s.edge_of_.count({u, k1, concat(v, concat(l2, w))}) ||
                      !s.edge_of_.count({u, k1, concat(v, concat(r2, w))}) ||
                      !s.edge_of_.count({concat(u, concat(r1, v)), k2, w}) ||
                      !s.edge_of_.count({concat(u, concat(l1, v)), k2, w}))
                    throw std::logic_error("squier: cell boundary edge missing");
                  s.cells_.push_back({u, k1, v, k2, w});
                }
    }

  Dsu dsu(static_cast<int>(s.vertices_.size()));
  for (const auto& e : s.edges_) dsu.unite(e.src, e.dst);
  s.component_.assign(s.vertices_.size(), -1);
  for (int v = 0; v < static_cast<int>(s.vertices_.size()); ++v) {
    int root = dsu.find(v);
    if (s.component_[root] < 0) s.component_[root] = s.component_count_++;
    s.component_[v] = s.component_[root];
  }
  return s;
}

int SquierSlice::vertex_index(const Word& w) const {
  auto it = vertex_of_.find(w);
  if (it == vertex_of_.end()) throw std::invalid_argument("squier: unknown vertex " + w.str());
  return it->second;
}

std::pair<ZMatrix, ZMatrix> SquierSlice::boundary_matrices() const {
  ZMatrix d1(static_cast<int>(vertices_.size()), static_cast<int>(edges_.size()));
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    d1.add(edges_[e].dst, e, Int(1));
    d1.add(edges_[e].src, e, Int(-1));
  }
  ZMatrix d2(static_cast<int>(edges_.size()), static_cast<int>(cells_.size()));
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c) {
    const SquierCell& cell = cells_[c];
    const auto& [l1, r1] = pres_.relations[cell.rel1];
    const auto& [l2, r2] = pres_.relations[cell.rel2];
    d2.add(edge_of_.at({cell.u, cell.rel1, concat(cell.v, concat(l2, cell.w))}), c, Int(1));
    d2.add(edge_of_.at({cell.u, cell.rel1, concat(cell.v, concat(r2, cell.w))}), c, Int(-1));
    d2.add(edge_of_.at({concat(cell.u, concat(r1, cell.v)), cell.rel2, cell.w}), c, Int(1));
    d2.add(edge_of_.at({concat(cell.u, concat(l1, cell.v)), cell.rel2, cell.w}), c, Int(-1));
  }
  if (matmul(d1, d2).nnz() != 0)
    throw std::logic_error("squier: cellular boundaries do not compose to zero");
  return {d2, d1};
}

HomologyResult SquierSlice::restricted_h1(const std::vector<char>& keep_vertex) const {
  std::vector<int> vmap(vertices_.size(), -1);
  int nv = 0;
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
    if (keep_vertex[v]) vmap[v] = nv++;
  std::vector<int> keep_edges;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
    if (keep_vertex[edges_[e].src]) {
      if (!keep_vertex[edges_[e].dst])
        throw std::logic_error("squier: restriction cuts an edge");
      keep_edges.push_back(e);
    }
  auto corner_vertex = [&](const SquierCell& cell) {
    const auto& [l1, r1] = pres_.relations[cell.rel1];
    const auto& [l2, r2] = pres_.relations[cell.rel2];
    (void)r1;
    (void)r2;
    return vertex_of_.at(
        concat(cell.u, concat(l1, concat(cell.v, concat(l2, cell.w)))));
  };
  std::vector<int> keep_cells;
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c)
    if (keep_vertex[corner_vertex(cells_[c])]) keep_cells.push_back(c);

  auto [d2, d1] = boundary_matrices();
  std::vector<int> emap(edges_.size(), -1);
  for (int i = 0; i < static_cast<int>(keep_edges.size()); ++i) emap[keep_edges[i]] = i;

  ZMatrix rd1(nv, static_cast<int>(keep_edges.size()));
  for (int i = 0; i < static_cast<int>(keep_edges.size()); ++i) {
    const SquierEdge& e = edges_[keep_edges[i]];
    rd1.add(vmap[e.dst], i, Int(1));
    rd1.add(vmap[e.src], i, Int(-1));
  }
  ZMatrix d2t = d2.transpose();
  ZMatrix rd2(static_cast<int>(keep_edges.size()), static_cast<int>(keep_cells.size()));
  for (int i = 0; i < static_cast<int>(keep_cells.size()); ++i)
    for (const auto& [e, val] : d2t.row(keep_cells[i])) {
      if (emap[e] < 0) throw std::logic_error("squier: restriction cuts a cell");
      rd2.add(emap[e], i, val);
    }
  return homology_at(rd1, rd2);
}

HomologyResult SquierSlice::component_h1(const Word& basepoint) const {
  int comp = component_.at(vertex_index(basepoint));
  std::vector<char> keep(vertices_.size(), 0);
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
    if (component_[v] == comp) keep[v] = 1;
  return restricted_h1(keep);
}

std::string SquierSlice::dump() const {
  std::ostringstream out;
  out << "vertices " << vertices_.size() << " edges " << edges_.size() << " cells "
      << cells_.size() << '\n';
  for (const auto& e : edges_)
    out << vertices_[e.src].str() << " | (" << e.left.str() << ", r" << e.rel << ", "
        << e.right.str() << ") | " << vertices_[e.dst].str() << '\n';
  for (const auto& c : cells_)
    out << "cell (" << c.u.str() << ", r" << c.rel1 << ", " << c.v.str() << ", r" << c.rel2
        << ", " << c.w.str() << ")\n";
  return out.str();
}

HomologyResult slice_h1_total(const MonoidPresentation& pres, int n) {
  if (homogeneity(pres).kind != PresentationGrading::length_homogeneous)
    throw std::invalid_argument(
        "slice_h1_total: presentation is not length-homogeneous, the slice would be "
        "truncated");
  SquierSlice s = SquierSlice::build(pres, n);
  std::vector<char> keep(s.vertices().size(), 0);
  for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v)
    if (s.vertices()[v].length() == n) keep[v] = 1;
  return s.restricted_h1(keep);
}

EdgeEmbeddingReport edge_embedding_check(const MonoidPresentation& pres, int max_len) {
  EdgeEmbeddingReport rep;
  SquierSlice s = SquierSlice::build(pres, max_len);
  AlgebraPresentation alg = monoid_to_algebra(pres);
  rep.passed = true;
  for (const SquierCell& cell : s.cells()) {
    const auto& [l1, r1] = pres.relations[cell.rel1];
    const auto& [l2, r2] = pres.relations[cell.rel2];
    std::map<TensorCell, Rat> lhs;
    auto put = [&lhs](TensorCell c, const Rat& v) {
      auto [it, fresh] = lhs.try_emplace(std::move(c), v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) lhs.erase(it);
      }
    };
    put({cell.u, cell.rel1, concat(cell.v, concat(l2, cell.w))}, Rat(1));
    put({cell.u, cell.rel1, concat(cell.v, concat(r2, cell.w))}, Rat(-1));
    put({concat(cell.u, concat(r1, cell.v)), cell.rel2, cell.w}, Rat(1));
    put({concat(cell.u, concat(l1, cell.v)), cell.rel2, cell.w}, Rat(-1));

    std::map<TensorCell, Rat> rhs;
    for (const auto& [tc, c] : bracket_terms(alg.relations, cell.rel1, cell.v, cell.rel2)) {
      TensorCell shifted{concat(cell.u, tc.left), tc.mid, concat(tc.right, cell.w)};
      auto [it, fresh] = rhs.try_emplace(std::move(shifted), Rat(-c));
      if (!fresh) {
        it->second += -c;
        if (it->second == 0) rhs.erase(it);
      }
    }
    if (lhs != rhs) rep.passed = false;
    ++rep.cells_checked;
  }
  return rep;
}

}  // namespace relbim
