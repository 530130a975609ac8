#include "relbim/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relbim {

namespace {

bool is_zero_vec(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

// all vectors of `parts` non-negative integers summing to `total`, lex order
void for_each_composition(int total, int parts, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    for_each_composition(total - a, parts - 1, cur, fn);
    cur.pop_back();
  }
}

void compositions(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  if (total < 0) return;
  std::vector<int> cur;
  for_each_composition(total, parts, cur, fn);
}

}  // namespace

void TensorBasis::push(TensorCell c) {
  auto [it, fresh] = index_.try_emplace(c, dim());
  if (!fresh) throw std::logic_error("tensor basis: duplicate cell");
  cells_.push_back(std::move(c));
}

int TensorBasis::index_of(const TensorCell& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw std::logic_error("tensor basis: cell not found");
  return it->second;
}

std::optional<int> TensorBasis::find(const TensorCell& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::map<TensorCell, Rat> bracket_terms(const std::vector<NcPoly>& relations, int i,
                                        const Word& u, int j) {
  if (i < 0 || i >= static_cast<int>(relations.size()) || j < 0 ||
      j >= static_cast<int>(relations.size()))
    throw std::invalid_argument("bracket: relation index out of range");
  std::map<TensorCell, Rat> out;
  const AlphabetPtr& alphabet = u.alphabet();
  Word unit(alphabet);
  auto put = [&out](TensorCell cell, const Rat& c) {
    auto [it, fresh] = out.try_emplace(std::move(cell), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [w, c] : relations[j].terms()) put({unit, i, concat(u, w)}, c);
  for (const auto& [w, c] : relations[i].terms()) put({concat(w, u), j, unit}, -c);
  return out;
}

MuFreenessReport mu_kernel_freeness_check(const AlphabetPtr& alphabet, int d) {
  if (d < 0) throw std::invalid_argument("mu_kernel_freeness_check: negative degree");
  MuFreenessReport rep;
  rep.degree = d;

  std::map<int, std::vector<Word>> words;
  for (int a = 0; a <= d; ++a) words[a] = enumerate_words(alphabet, a);
  const int nwords = static_cast<int>(words[d].size());

  TensorBasis triples;
  for (int a = 0; a + 1 <= d; ++a)
    for (const Word& u : words[a])
      for (int x = 0; x < alphabet->size(); ++x)
        for (const Word& v : words[d - 1 - a]) triples.push({u, x, v});

  TensorBasis pairs;
  for (int a = 0; a <= d; ++a)
    for (const Word& u : words[a])
      for (const Word& v : words[d - a]) pairs.push({u, -1, v});

  rep.dim_triples = triples.dim();
  rep.dim_pairs = pairs.dim();
  rep.dim_words = nwords;

  QMatrix embed(pairs.dim(), triples.dim());
  for (int col = 0; col < triples.dim(); ++col) {
    const TensorCell& t = triples.cells()[col];
    Word xw(alphabet, {t.mid});
    embed.add(pairs.index_of({concat(t.left, xw), -1, t.right}), col, Rat(1));
    embed.add(pairs.index_of({t.left, -1, concat(xw, t.right)}), col, Rat(-1));
  }
  QMatrix mul(nwords, pairs.dim());
  for (int col = 0; col < pairs.dim(); ++col) {
    const TensorCell& t = pairs.cells()[col];
    mul.add(static_cast<int>(lex_rank(concat(t.left, t.right))), col, Rat(1));
  }

  rep.rank_embed = rank(embed);
  rep.rank_mul = rank(mul);
  rep.injective = rep.rank_embed == rep.dim_triples;
  rep.composite_zero = matmul(mul, embed).nnz() == 0;
  rep.image_is_kernel = rep.rank_embed == rep.dim_pairs - rep.rank_mul;
  return rep;
}

GradedVerifier::GradedVerifier(AlgebraPresentation pres) : pres_(std::move(pres)) {
  for (const auto& r : pres_.relations) {
    Homogeneity h = homogeneous_degree(r);
    if (h.kind != HomogeneityKind::homogeneous)
      throw std::invalid_argument("graded verification needs a homogeneous presentation");
    rel_deg_.push_back(h.degree);
  }
}

const std::vector<Word>& GradedVerifier::words(int d) {
  auto it = words_.find(d);
  if (it == words_.end()) it = words_.emplace(d, enumerate_words(pres_.alphabet, d)).first;
  return it->second;
}

long long GradedVerifier::word_dim(int d) const {
  long long n = 1;
  for (int k = 0; k < d; ++k) n *= pres_.alphabet->size();
  return n;
}

QVec GradedVerifier::poly_to_vec(const NcPoly& p, int d) const {
  QVec v(word_dim(d), Rat(0));
  for (const auto& [w, c] : p.terms()) {
    if (w.length() != d) throw std::logic_error("poly_to_vec: degree mismatch");
    v[lex_rank(w)] = c;
  }
  return v;
}

const Subspace& GradedVerifier::ideal_power_component(int m, int d) {
  if (m < 1 || m > 3) throw std::invalid_argument("ideal_power_component: m must be 1, 2 or 3");
  if (d < 0) throw std::invalid_argument("ideal_power_component: negative degree");
  auto key = std::make_pair(m, d);
  if (auto it = jpow_.find(key); it != jpow_.end()) return it->second;

  Subspace s(static_cast<int>(word_dim(d)));
  const int nrel = static_cast<int>(pres_.relations.size());
  auto mono = [&](const Word& w) { return NcPoly::monomial(w); };

  if (m == 1) {
    for (int i = 0; i < nrel; ++i) {
      compositions(d - rel_deg_[i], 2, [&](const std::vector<int>& sp) {
        for (const Word& u : words(sp[0]))
          for (const Word& v : words(sp[1]))
            s.add(poly_to_vec(mono(u) * pres_.relations[i] * mono(v), d));
      });
    }
  } else if (m == 2) {
    for (int i = 0; i < nrel; ++i)
      for (int j = 0; j < nrel; ++j) {
        compositions(d - rel_deg_[i] - rel_deg_[j], 3, [&](const std::vector<int>& sp) {
          for (const Word& u : words(sp[0]))
            for (const Word& v : words(sp[1]))
              for (const Word& w : words(sp[2]))
                s.add(poly_to_vec(
                    mono(u) * pres_.relations[i] * mono(v) * pres_.relations[j] * mono(w), d));
        });
      }
  } else {
    for (int i = 0; i < nrel; ++i)
      for (int j = 0; j < nrel; ++j)
        for (int k = 0; k < nrel; ++k) {
          compositions(d - rel_deg_[i] - rel_deg_[j] - rel_deg_[k], 4,
                       [&](const std::vector<int>& sp) {
                         for (const Word& u : words(sp[0]))
                           for (const Word& v : words(sp[1]))
                             for (const Word& w : words(sp[2]))
                               for (const Word& t : words(sp[3]))
                                 s.add(poly_to_vec(mono(u) * pres_.relations[i] * mono(v) *
                                                       pres_.relations[j] * mono(w) *
                                                       pres_.relations[k] * mono(t),
                                                   d));
                       });
        }
  }
  return jpow_.emplace(key, std::move(s)).first->second;
}

const AlgebraComponent& GradedVerifier::algebra_component(int d) {
  if (auto it = areps_.find(d); it != areps_.end()) return it->second;
  const Subspace& j = ideal_power_component(1, d);
  const auto& ws = words(d);
  AlgebraComponent ac;
  ac.col_to_rep.assign(ws.size(), -1);
  for (int c = 0; c < static_cast<int>(ws.size()); ++c) {
    if (j.is_pivot(c)) continue;
    ac.col_to_rep[c] = static_cast<int>(ac.representatives.size());
    ac.representatives.push_back(ws[c]);
  }
  ac.dim = static_cast<int>(ac.representatives.size());
  if (ac.dim != static_cast<int>(ws.size()) - j.dim())
    throw std::logic_error("algebra_component: dimension bookkeeping failed");
  return areps_.emplace(d, std::move(ac)).first->second;
}

const TensorBasis& GradedVerifier::fr_basis(int d) {
  if (auto it = frbasis_.find(d); it != frbasis_.end()) return it->second;
  TensorBasis basis;
  for (int i = 0; i < static_cast<int>(pres_.relations.size()); ++i) {
    if (rel_deg_[i] > d) continue;
    for (int a = 0; a + rel_deg_[i] <= d; ++a)
      for (const Word& u : words(a))
        for (const Word& v : words(d - rel_deg_[i] - a)) basis.push({u, i, v});
  }
  return frbasis_.emplace(d, std::move(basis)).first->second;
}

const QMatrix& GradedVerifier::alpha(int d) {
  if (auto it = alpha_.find(d); it != alpha_.end()) return it->second;
  const TensorBasis& basis = fr_basis(d);
  QMatrix m(static_cast<int>(word_dim(d)), basis.dim());
  for (int col = 0; col < basis.dim(); ++col) {
    const TensorCell& cell = basis.cells()[col];
    for (const auto& [w, c] : pres_.relations[cell.mid].terms())
      m.add(static_cast<int>(lex_rank(concat(cell.left, concat(w, cell.right)))), col, c);
  }
  return alpha_.emplace(d, std::move(m)).first->second;
}

const std::vector<QVec>& GradedVerifier::homotopy_kernel(int d) {
  if (auto it = hbasis_.find(d); it != hbasis_.end()) return it->second;
  return hbasis_.emplace(d, kernel_basis(alpha(d))).first->second;
}

const QVec& GradedVerifier::word_class(const Word& w) {
  const int d = w.length();
  auto& memo = word_class_[d];
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const Subspace& j = ideal_power_component(1, d);
  const AlgebraComponent& ac = algebra_component(d);
  QVec e(word_dim(d), Rat(0));
  e[lex_rank(w)] = 1;
  QVec red = j.reduce(e);
  QVec coords(ac.dim, Rat(0));
  for (int c = 0; c < static_cast<int>(red.size()); ++c) {
    if (red[c] == 0) continue;
    if (ac.col_to_rep[c] < 0) throw std::logic_error("word_class: residual hit a pivot column");
    coords[ac.col_to_rep[c]] = red[c];
  }
  return memo.emplace(w, std::move(coords)).first->second;
}

QVec GradedVerifier::bracket(int i, const Word& u, int j) {
  const int nrel = static_cast<int>(pres_.relations.size());
  if (i < 0 || i >= nrel || j < 0 || j >= nrel)
    throw std::invalid_argument("bracket: relation index out of range");
  const int d = rel_deg_[i] + u.length() + rel_deg_[j];
  const TensorBasis& basis = fr_basis(d);
  QVec v(basis.dim(), Rat(0));
  for (const auto& [cell, c] : bracket_terms(pres_.relations, i, u, j))
    v[basis.index_of(cell)] += c;
  return v;
}

const GradedVerifier::DData& GradedVerifier::d_data(int d) {
  if (auto it = dcomp_.find(d); it != dcomp_.end()) return it->second;
  const TensorBasis& basis = fr_basis(d);
  const QMatrix& al = alpha(d);
  DData dd{Subspace(basis.dim()), {}, true};
  const int nrel = static_cast<int>(pres_.relations.size());
  for (int i = 0; i < nrel; ++i)
    for (int j = 0; j < nrel; ++j) {
      const int base = rel_deg_[i] + rel_deg_[j];
      if (base > d) continue;
      for (int ulen = 0; ulen + base <= d; ++ulen)
        for (const Word& u : words(ulen)) {
          auto terms = bracket_terms(pres_.relations, i, u, j);
          const int rem = d - base - ulen;
          compositions(rem, 2, [&](const std::vector<int>& sp) {
            for (const Word& v : words(sp[0]))
              for (const Word& w : words(sp[1])) {
                QVec vec(basis.dim(), Rat(0));
                for (const auto& [cell, c] : terms)
                  vec[basis.index_of(
                      {concat(v, cell.left), cell.mid, concat(cell.right, w)})] += c;
                if (!is_zero_vec(al.apply(vec))) dd.in_kernel = false;
                dd.span.add(vec);
                dd.spanning.push_back(std::move(vec));
              }
          });
        }
    }
  if (!dd.in_kernel)
    throw std::logic_error("d_component: a bracket multiple escaped ker(alpha)");
  return dcomp_.emplace(d, std::move(dd)).first->second;
}

const Subspace& GradedVerifier::d_component(int d) { return d_data(d).span; }

const std::vector<QVec>& GradedVerifier::d_spanning(int d) { return d_data(d).spanning; }

const Subspace& GradedVerifier::jh_hj_component(int d) {
  if (auto it = jhhj_.find(d); it != jhhj_.end()) return it->second;
  const TensorBasis& basis = fr_basis(d);
  Subspace s(basis.dim());
  const int nrel = static_cast<int>(pres_.relations.size());
  auto mono = [&](const Word& w) { return NcPoly::monomial(w); };
  // (J H)_d : left-multiply H-basis vectors by spanning elements of J
  for (int a = 1; a <= d; ++a) {
    const int b = d - a;
    const std::vector<QVec>& h = homotopy_kernel(b);
    if (h.empty()) continue;
    const TensorBasis& fb = fr_basis(b);
    for (int i = 0; i < nrel; ++i) {
      if (rel_deg_[i] > a) continue;
      compositions(a - rel_deg_[i], 2, [&](const std::vector<int>& sp) {
        for (const Word& u : words(sp[0]))
          for (const Word& v : words(sp[1])) {
            NcPoly jp = mono(u) * pres_.relations[i] * mono(v);
            for (const QVec& hv : h) {
              QVec vec(basis.dim(), Rat(0));
              for (const auto& [m, c] : jp.terms())
                for (int idx = 0; idx < fb.dim(); ++idx) {
                  if (hv[idx] == 0) continue;
                  const TensorCell& cell = fb.cells()[idx];
                  vec[basis.index_of({concat(m, cell.left), cell.mid, cell.right})] +=
                      c * hv[idx];
                }
              s.add(vec);
            }
          }
      });
    }
  }
  // (H J)_d : right-multiply
  for (int a = 1; a <= d; ++a) {
    const int b = d - a;
    const std::vector<QVec>& h = homotopy_kernel(b);
    if (h.empty()) continue;
    const TensorBasis& fb = fr_basis(b);
    for (int i = 0; i < nrel; ++i) {
      if (rel_deg_[i] > a) continue;
      compositions(a - rel_deg_[i], 2, [&](const std::vector<int>& sp) {
        for (const Word& u : words(sp[0]))
          for (const Word& v : words(sp[1])) {
            NcPoly jp = mono(u) * pres_.relations[i] * mono(v);
            for (const QVec& hv : h) {
              QVec vec(basis.dim(), Rat(0));
              for (const auto& [m, c] : jp.terms())
                for (int idx = 0; idx < fb.dim(); ++idx) {
                  if (hv[idx] == 0) continue;
                  const TensorCell& cell = fb.cells()[idx];
                  vec[basis.index_of({cell.left, cell.mid, concat(cell.right, m)})] +=
                      c * hv[idx];
                }
              s.add(vec);
            }
          }
      });
    }
  }
  return jhhj_.emplace(d, std::move(s)).first->second;
}

bool GradedVerifier::jh_hj_contained_in_d(int d) {
  if (auto it = jhhj_in_d_.find(d); it != jhhj_in_d_.end()) return it->second;
  bool ok = d_component(d).contains(jh_hj_component(d));
  jhhj_in_d_[d] = ok;
  return ok;
}

Pi2Result GradedVerifier::pi2_component(int d) {
  if (auto it = pi2_.find(d); it != pi2_.end()) return it->second;
  const std::vector<QVec>& h = homotopy_kernel(d);
  QuotientResult qr = subspace_quotient(h, d_spanning(d), fr_basis(d).dim());
  Pi2Result res{qr.dim, std::move(qr.representatives)};
  return pi2_.emplace(d, std::move(res)).first->second;
}

const GradedVerifier::JJ2Data& GradedVerifier::jj2_basis(int d) {
  if (auto it = jj2_.find(d); it != jj2_.end()) return it->second;
  const Subspace& j1 = ideal_power_component(1, d);
  const Subspace& j2 = ideal_power_component(2, d);
  QuotientResult qr =
      subspace_quotient(j1.basis(), j2.basis(), static_cast<int>(word_dim(d)));
  JJ2Data data;
  data.reps = std::move(qr.representatives);
  data.residuals.reserve(data.reps.size());
  for (const auto& rep : data.reps) data.residuals.push_back(j2.reduce(rep));
  return jj2_.emplace(d, std::move(data)).first->second;
}

QVec GradedVerifier::jj2_coords(int d, const QVec& z) {
  const JJ2Data& data = jj2_basis(d);
  const Subspace& j2 = ideal_power_component(2, d);
  auto coeffs = express_in_span(data.residuals, j2.reduce(z));
  if (!coeffs) throw std::logic_error("jj2_coords: vector does not lie in J_d");
  return *coeffs;
}

TensorBasis GradedVerifier::akra_basis(int d) {
  TensorBasis basis;
  for (int i = 0; i < static_cast<int>(pres_.relations.size()); ++i) {
    if (rel_deg_[i] > d) continue;
    for (int a = 0; a + rel_deg_[i] <= d; ++a)
      for (const Word& p : algebra_component(a).representatives)
        for (const Word& q : algebra_component(d - rel_deg_[i] - a).representatives)
          basis.push({p, i, q});
  }
  return basis;
}

QVec GradedVerifier::kappa(int d, const QVec& v, const TensorBasis& akra) {
  QVec out(akra.dim(), Rat(0));
  const auto& cells = fr_basis(d).cells();
  for (int idx = 0; idx < static_cast<int>(cells.size()); ++idx) {
    if (v[idx] == 0) continue;
    const TensorCell& cell = cells[idx];
    const QVec lc = word_class(cell.left);
    const QVec rc = word_class(cell.right);
    const auto& lreps = algebra_component(cell.left.length()).representatives;
    const auto& rreps = algebra_component(cell.right.length()).representatives;
    for (int p = 0; p < static_cast<int>(lc.size()); ++p) {
      if (lc[p] == 0) continue;
      for (int q = 0; q < static_cast<int>(rc.size()); ++q) {
        if (rc[q] == 0) continue;
        out[akra.index_of({lreps[p], cell.mid, rreps[q]})] += v[idx] * lc[p] * rc[q];
      }
    }
  }
  return out;
}

BergmanDicksReport GradedVerifier::bergman_dicks_check(int d) {
  BergmanDicksReport rep;
  rep.degree = d;

  const JJ2Data& jj2 = jj2_basis(d);
  rep.dim_jj2 = static_cast<int>(jj2.reps.size());

  TensorBasis ax;  // (A (x) KX (x) A)_d
  for (int a = 0; a + 1 <= d; ++a)
    for (const Word& p : algebra_component(a).representatives)
      for (int x = 0; x < pres_.alphabet->size(); ++x)
        for (const Word& q : algebra_component(d - 1 - a).representatives)
          ax.push({p, x, q});
  TensorBasis aa;  // (A (x) A)_d
  for (int a = 0; a <= d; ++a)
    for (const Word& p : algebra_component(a).representatives)
      for (const Word& q : algebra_component(d - a).representatives) aa.push({p, -1, q});
  const AlgebraComponent& adeg = algebra_component(d);

  rep.dim_axa = ax.dim();
  rep.dim_aa = aa.dim();
  rep.dim_a = adeg.dim;

  // derivation of a degree-d word vector, landing in ax coordinates
  auto derive = [&](const QVec& z) {
    QVec out(ax.dim(), Rat(0));
    const auto& ws = words(d);
    for (int c = 0; c < static_cast<int>(ws.size()); ++c) {
      if (z[c] == 0) continue;
      const Word& w = ws[c];
      for (int pos = 0; pos < d; ++pos) {
        Word u = w.prefix(pos);
        Word v = w.suffix(pos + 1);
        const QVec lc = word_class(u);
        const QVec rc = word_class(v);
        const auto& lreps = algebra_component(pos).representatives;
        const auto& rreps = algebra_component(d - 1 - pos).representatives;
        for (int p = 0; p < static_cast<int>(lc.size()); ++p) {
          if (lc[p] == 0) continue;
          for (int q = 0; q < static_cast<int>(rc.size()); ++q) {
            if (rc[q] == 0) continue;
            out[ax.index_of({lreps[p], w.letter(pos), rreps[q]})] += z[c] * lc[p] * rc[q];
          }
        }
      }
    }
    return out;
  };

  // the derivation must vanish on (J^2)_d for d2 to be well defined
  rep.derivation_well_defined = true;
  for (const QVec& sq : ideal_power_component(2, d).basis())
    if (!is_zero_vec(derive(sq))) rep.derivation_well_defined = false;

  QMatrix d2(ax.dim(), rep.dim_jj2);
  for (int col = 0; col < rep.dim_jj2; ++col) {
    QVec img = derive(jj2.reps[col]);
    for (int r = 0; r < ax.dim(); ++r)
      if (img[r] != 0) d2.add(r, col, img[r]);
  }

  QMatrix d1(aa.dim(), ax.dim());
  for (int col = 0; col < ax.dim(); ++col) {
    const TensorCell& cell = ax.cells()[col];
    Word xw(pres_.alphabet, {cell.mid});
    const QVec lc = word_class(concat(cell.left, xw));
    const auto& lreps = algebra_component(cell.left.length() + 1).representatives;
    for (int p = 0; p < static_cast<int>(lc.size()); ++p)
      if (lc[p] != 0) d1.add(aa.index_of({lreps[p], -1, cell.right}), col, lc[p]);
    const QVec rc = word_class(concat(xw, cell.right));
    const auto& rreps = algebra_component(cell.right.length() + 1).representatives;
    for (int q = 0; q < static_cast<int>(rc.size()); ++q)
      if (rc[q] != 0) d1.add(aa.index_of({cell.left, -1, rreps[q]}), col, -rc[q]);
  }

  QMatrix mu(adeg.dim, aa.dim());
  for (int col = 0; col < aa.dim(); ++col) {
    const TensorCell& cell = aa.cells()[col];
    const QVec pc = word_class(concat(cell.left, cell.right));
    for (int k = 0; k < static_cast<int>(pc.size()); ++k)
      if (pc[k] != 0) mu.add(k, col, pc[k]);
  }

  rep.rank_d2 = rank(d2);
  rep.rank_d1 = rank(d1);
  rep.rank_mu = rank(mu);
  rep.composites_zero = matmul(d1, d2).nnz() == 0 && matmul(mu, d1).nnz() == 0;
  rep.d2_injective = rep.rank_d2 == rep.dim_jj2;
  rep.exact_at_axa = rep.dim_axa - rep.rank_d1 == rep.rank_d2;
  rep.exact_at_aa = rep.dim_aa - rep.rank_mu == rep.rank_d1;
  rep.mu_surjective = rep.rank_mu == rep.dim_a;
  return rep;
}

PgsReport GradedVerifier::pgs_check(int d) {
  PgsReport rep;
  rep.degree = d;

  TensorBasis akra = akra_basis(d);
  const JJ2Data& jj2 = jj2_basis(d);
  rep.dim_akra = akra.dim();
  rep.dim_jj2 = static_cast<int>(jj2.reps.size());

  auto mono = [&](const Word& w) { return NcPoly::monomial(w); };
  QMatrix beta(rep.dim_jj2, akra.dim());
  for (int col = 0; col < akra.dim(); ++col) {
    const TensorCell& cell = akra.cells()[col];
    QVec z = poly_to_vec(mono(cell.left) * pres_.relations[cell.mid] * mono(cell.right), d);
    QVec coords = jj2_coords(d, z);
    for (int k = 0; k < rep.dim_jj2; ++k)
      if (coords[k] != 0) beta.add(k, col, coords[k]);
  }

  rep.rank_beta = rank(beta);
  rep.dim_ker_beta = rep.dim_akra - rep.rank_beta;
  rep.pi2_dim = pi2_component(d).dim;
  rep.beta_surjective = rep.rank_beta == rep.dim_jj2;
  rep.kernel_matches_pi2 = rep.dim_ker_beta == rep.pi2_dim;

  // classes of D must vanish in (A (x) KR (x) A)_d
  rep.d_classes_vanish = true;
  for (const QVec& v : d_spanning(d))
    if (!is_zero_vec(kappa(d, v, akra))) rep.d_classes_vanish = false;

  // classes of H span exactly ker(beta)
  Subspace himg(akra.dim());
  bool inside_kernel = true;
  for (const QVec& h : homotopy_kernel(d)) {
    QVec img = kappa(d, h, akra);
    if (!is_zero_vec(beta.apply(img))) inside_kernel = false;
    himg.add(img);
  }
  rep.dim_h_classes = himg.dim();
  rep.h_classes_fill_kernel = inside_kernel && rep.dim_h_classes == rep.dim_ker_beta &&
                              rep.dim_h_classes == rep.pi2_dim;
  return rep;
}

ConnectingReport GradedVerifier::connecting_map_check(int d) {
  ConnectingReport rep;
  rep.degree = d;
  const TensorBasis& basis = fr_basis(d);
  const QMatrix& al = alpha(d);
  const Subspace& jhhj = jh_hj_component(d);
  const Subspace& dsp = d_component(d);

  Subspace span = jhhj;  // images accumulate on top of (JH+HJ)_d
  rep.images_in_h = true;
  const int nrel = static_cast<int>(pres_.relations.size());
  // spanning elements w r_i u r_j v of (J^2)_d and their images w [r_i,u,r_j] v
  for (int i = 0; i < nrel; ++i)
    for (int j = 0; j < nrel; ++j) {
      const int base = rel_deg_[i] + rel_deg_[j];
      if (base > d) continue;
      for (int ulen = 0; ulen + base <= d; ++ulen)
        for (const Word& u : words(ulen)) {
          auto terms = bracket_terms(pres_.relations, i, u, j);
          compositions(d - base - ulen, 2, [&](const std::vector<int>& sp) {
            for (const Word& w : words(sp[0]))
              for (const Word& v : words(sp[1])) {
                QVec vec(basis.dim(), Rat(0));
                for (const auto& [cell, c] : terms)
                  vec[basis.index_of(
                      {concat(w, cell.left), cell.mid, concat(cell.right, v)})] += c;
                if (!is_zero_vec(al.apply(vec))) rep.images_in_h = false;
                span.add(vec);
                ++rep.image_count;
              }
          });
        }
    }
  rep.dim_image_span = span.dim();
  rep.dim_d = dsp.dim();
  rep.span_matches_d = rep.dim_image_span == rep.dim_d && dsp.contains(span);

  // well-definedness modulo J^3: spanning elements of (J^3)_d must land in (JH+HJ)_d
  rep.jcube_into_jhhj = true;
  auto mono = [&](const Word& w) { return NcPoly::monomial(w); };
  for (int i = 0; i < nrel && rep.jcube_into_jhhj; ++i)
    for (int j = 0; j < nrel && rep.jcube_into_jhhj; ++j)
      for (int k = 0; k < nrel && rep.jcube_into_jhhj; ++k) {
        const int base = rel_deg_[i] + rel_deg_[j] + rel_deg_[k];
        if (base > d) continue;
        compositions(d - base, 4, [&](const std::vector<int>& sp) {
          // element  w r_i u r_j (v r_k t), mapped through the first pair
          for (const Word& w : words(sp[0]))
            for (const Word& u : words(sp[1])) {
              auto terms = bracket_terms(pres_.relations, i, u, j);
              for (const Word& v : words(sp[2]))
                for (const Word& t : words(sp[3])) {
                  NcPoly tail = mono(v) * pres_.relations[k] * mono(t);
                  QVec vec(basis.dim(), Rat(0));
                  for (const auto& [m, cm] : tail.terms())
                    for (const auto& [cell, c] : terms)
                      vec[basis.index_of({concat(w, cell.left), cell.mid,
                                          concat(cell.right, m)})] += c * cm;
                  if (!jhhj.contains(vec)) rep.jcube_into_jhhj = false;
                }
            }
        });
      }
  return rep;
}

DegreeReport GradedVerifier::verify_degree(int d) {
  DegreeReport rep;
  rep.degree = d;
  rep.dims.j = ideal_power_component(1, d).dim();
  rep.dims.jsq = ideal_power_component(2, d).dim();
  rep.dims.jcube = ideal_power_component(3, d).dim();
  rep.dims.a = algebra_component(d).dim;
  rep.dims.fr = fr_basis(d).dim();
  rep.dims.h = static_cast<int>(homotopy_kernel(d).size());
  rep.dims.d = d_component(d).dim();

  BergmanDicksReport bd = bergman_dicks_check(d);
  PgsReport pgs = pgs_check(d);
  ConnectingReport conn = connecting_map_check(d);
  rep.dims.pi2 = pgs.pi2_dim;
  rep.dims.ker_beta = pgs.dim_ker_beta;
  rep.bd_exact = bd.passed();
  rep.pgs_exact = pgs.passed();
  rep.connecting = conn.passed();

  const Subspace& j1 = ideal_power_component(1, d);
  const Subspace& j2 = ideal_power_component(2, d);
  const Subspace& j3 = ideal_power_component(3, d);
  rep.containment = j1.contains(j2) && j2.contains(j3) && jh_hj_contained_in_d(d);
  return rep;
}

}  // namespace relbim
