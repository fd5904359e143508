#include "qsym/cells.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qsym/laurent.hpp"

namespace qsym {

namespace {

// Basis (as vectors in M) of the E-singular part of the weight-la space.
std::vector<Vec> singular_space(const WeightModule& m, const Weight& la) {
  std::vector<int> idx;
  for (int k = 0; k < m.dim(); ++k)
    if (m.weight(k) == la) idx.push_back(k);
  if (idx.empty()) return {};
  const int nI = m.datum().rank();
  SpMat a(nI * m.dim(), (int)idx.size());
  for (int j = 0; j < (int)idx.size(); ++j)
    for (int i = 0; i < nI; ++i)
      for (const auto& [r, c] : m.e_pow(i, 1).col(idx[(size_t)j]))
        a.set(i * m.dim() + r, j, c);
  std::vector<Vec> out;
  for (const auto& ker : kernel(a)) {
    Vec v;
    for (const auto& [j, c] : ker) v[idx[(size_t)j]] = c;
    out.push_back(std::move(v));
  }
  return out;
}

// Span of the submodule generated by the given vectors (closure under the
// F_i; the generators are E-singular, so this is the full submodule).
std::vector<Vec> submodule_closure(const WeightModule& m,
                                   const std::vector<Vec>& gens) {
  Span s;
  std::vector<Vec> basis;
  std::deque<Vec> queue;
  for (const auto& g : gens)
    if (s.insert(g)) {
      basis.push_back(g);
      queue.push_back(g);
    }
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < m.datum().rank(); ++i) {
      Vec u = m.f_pow(i, 1).apply(v);
      if (!vec_is_zero(u) && s.insert(u)) {
        basis.push_back(u);
        queue.push_back(u);
      }
    }
  }
  return basis;
}

// Indices k with e_k inside the span; the span must equal the span of
// exactly those basis vectors.
std::vector<int> basis_subset(const Span& s, int dim) {
  std::vector<int> idx;
  const RatFunc one(LaurentInt(1));
  for (int k = 0; k < dim; ++k) {
    Vec e;
    e[k] = one;
    if (s.contains(e)) idx.push_back(k);
  }
  require((int)idx.size() == s.dim(), Err::BASIS_NOT_CELL_COMPATIBLE,
          "cell subspace is not spanned by a subset of the basis");
  return idx;
}

}  // namespace

CellDatum cell_filtration(const BasedModule& m) {
  const WeightModule& w = m.mod;
  const RootDatum& rd = w.datum();

  std::set<Weight> seen;
  std::vector<Weight> doms;
  for (int k = 0; k < w.dim(); ++k) {
    const Weight& la = w.weight(k);
    if (rd.dominant(la) && seen.insert(la).second) doms.push_back(la);
  }

  // Generated submodules per dominant weight carrying singular vectors.
  std::vector<Weight> las;
  std::vector<int> nla;
  std::vector<std::vector<Vec>> gen_basis;
  for (const auto& la : doms) {
    auto sing = singular_space(w, la);
    if (sing.empty()) continue;
    las.push_back(la);
    nla.push_back((int)sing.size());
    gen_basis.push_back(submodule_closure(w, sing));
  }

  std::vector<int> order((size_t)las.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rd.total_less(las[(size_t)a], las[(size_t)b]);
  });

  CellDatum cd;
  mpz_class total_dim = 0;
  for (int oi : order) {
    const Weight& la = las[(size_t)oi];
    Span ge_span, gt_span;
    for (size_t mj = 0; mj < las.size(); ++mj) {
      if (!rd.dominance_leq(la, las[mj])) continue;
      for (const auto& v : gen_basis[mj]) {
        ge_span.insert(v);
        if (las[mj] != la) gt_span.insert(v);
      }
    }
    std::vector<int> ge = basis_subset(ge_span, w.dim());
    std::vector<int> gt = basis_subset(gt_span, w.dim());
    std::vector<int> cell;
    std::set_difference(ge.begin(), ge.end(), gt.begin(), gt.end(),
                        std::back_inserter(cell));
    std::vector<int> hi;
    for (int b : cell) {
      if (w.weight(b) != la) continue;
      Vec e;
      e[b] = RatFunc(LaurentInt(1));
      bool ok = true;
      for (int i = 0; ok && i < rd.rank(); ++i) {
        Vec u = w.e_pow(i, 1).apply(e);
        if (!vec_is_zero(u) && !gt_span.contains(u)) ok = false;
      }
      if (ok) hi.push_back(b);
    }
    require((int)hi.size() == nla[(size_t)oi], Err::INTERNAL,
            "hi-subset size disagrees with the singular multiplicity");
    total_dim += nla[(size_t)oi] * rd.weyl_dim(la);

    cd.lambdas.push_back(la);
    cd.n_lambda.push_back(nla[(size_t)oi]);
    cd.ge.push_back(std::move(ge));
    cd.gt.push_back(std::move(gt));
    cd.cell.push_back(std::move(cell));
    cd.hi.push_back(std::move(hi));
  }
  require(total_dim == w.dim(), Err::INTERNAL,
          "cell multiplicities do not account for the dimension");
  return cd;
}

BasedModule based_submodule(const BasedModule& m, const std::vector<int>& idx,
                            std::string provenance) {
  const WeightModule& w = m.mod;
  std::vector<int> newpos((size_t)w.dim(), -1);
  for (size_t j = 0; j < idx.size(); ++j) newpos[(size_t)idx[j]] = (int)j;

  std::vector<Weight> wts;
  std::vector<std::string> labels;
  for (int k : idx) {
    wts.push_back(w.weight(k));
    labels.push_back(w.label(k));
  }
  auto restrict_mat = [&](const SpMat& a, const char* what) {
    SpMat r((int)idx.size(), (int)idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
      for (const auto& [row, c] : a.col(idx[j])) {
        require(newpos[(size_t)row] >= 0, Err::INTERNAL, what);
        r.set(newpos[(size_t)row], (int)j, c);
      }
    return r;
  };
  WeightModule sub(w.datum(), std::move(wts), std::move(labels));
  for (int i = 0; i < w.datum().rank(); ++i) {
    sub.set_e(i, restrict_mat(w.e_pow(i, 1), "basis subset not E-stable"));
    sub.set_f(i, restrict_mat(w.f_pow(i, 1), "basis subset not F-stable"));
  }
  sub.finalize();

  BasedModule out;
  out.psi_mat = restrict_mat(m.psi_mat, "basis subset not psi-stable");
  out.mod = std::move(sub);
  out.provenance = std::move(provenance);
  return out;
}

BasedModule based_quotient(const BasedModule& m, const std::vector<int>& drop,
                           std::string provenance) {
  const WeightModule& w = m.mod;
  std::vector<bool> dropped((size_t)w.dim(), false);
  for (int k : drop) dropped[(size_t)k] = true;

  std::vector<int> keep;
  std::vector<int> newpos((size_t)w.dim(), -1);
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  for (int k = 0; k < w.dim(); ++k) {
    if (dropped[(size_t)k]) continue;
    newpos[(size_t)k] = (int)keep.size();
    keep.push_back(k);
    wts.push_back(w.weight(k));
    labels.push_back(w.label(k));
  }
  // The span of the dropped subset must be operator-stable: a column at a
  // dropped index may not reach a kept row, or the projection is not a map
  // of modules.  Entries of kept columns at dropped rows are discarded.
  auto project_mat = [&](const SpMat& a, const char* what) {
    SpMat r((int)keep.size(), (int)keep.size());
    for (int k : drop)
      for (const auto& [row, c] : a.col(k)) {
        (void)c;
        require(dropped[(size_t)row], Err::INTERNAL, what);
      }
    for (size_t j = 0; j < keep.size(); ++j)
      for (const auto& [row, c] : a.col(keep[j]))
        if (!dropped[(size_t)row]) r.set(newpos[(size_t)row], (int)j, c);
    return r;
  };
  WeightModule quo(w.datum(), std::move(wts), std::move(labels));
  for (int i = 0; i < w.datum().rank(); ++i) {
    quo.set_e(i, project_mat(w.e_pow(i, 1), "dropped subset not E-stable"));
    quo.set_f(i, project_mat(w.f_pow(i, 1), "dropped subset not F-stable"));
  }
  quo.finalize();

  BasedModule out;
  out.psi_mat = project_mat(m.psi_mat, "dropped subset not psi-stable");
  out.mod = std::move(quo);
  out.provenance = std::move(provenance);
  return out;
}

BasedModule top_cell(const BasedModule& m) {
  CellDatum cd = cell_filtration(m);
  require(!cd.lambdas.empty(), Err::INTERNAL, "module has no cells");
  size_t top = cd.lambdas.size() - 1;
  require(cd.gt[top].empty(), Err::INTERNAL,
          "maximal cell has a nontrivial part above it");
  return based_submodule(m, cd.ge[top], "V" + w_str(cd.lambdas[top]));
}

KaDecomposition ka_decomposition(const BasedModule& m) {
  const WeightModule& w = m.mod;
  const RootDatum& rd = w.datum();

  KaDecomposition kd;
  kd.cells = cell_filtration(m);
  const int nblocks = (int)kd.cells.lambdas.size();
  for (int j = 0; j < nblocks; ++j)
    kd.irr.push_back(build_irreducible(rd, kd.cells.lambdas[(size_t)j]));

  const RatFunc one(LaurentInt(1));
  kd.t = SpMat(w.dim(), w.dim());
  kd.block_of.assign((size_t)w.dim(), -1);
  kd.copy_of.assign((size_t)w.dim(), -1);
  kd.vec_of.assign((size_t)w.dim(), -1);

  int col = 0;
  std::vector<int> hw_index((size_t)nblocks);
  for (int j = nblocks - 1; j >= 0; --j) {  // descending la: chain order
    const Weight& la = kd.cells.lambdas[(size_t)j];
    const BasedModule& v = kd.irr[(size_t)j];
    hw_index[(size_t)j] = highest_weight_index(v, la);

    // Weight-la lift coordinates live in B[>la].
    std::vector<int> corr_idx;
    for (int k : kd.cells.gt[(size_t)j])
      if (w.weight(k) == la) corr_idx.push_back(k);

    for (size_t bpos = 0; bpos < kd.cells.hi[(size_t)j].size(); ++bpos) {
      const int b = kd.cells.hi[(size_t)j][bpos];
      // Singular lift s_b = b + correction, correction in M[>la]_la:
      // solve E_i s_b = 0 for every i.
      const int nI = rd.rank();
      SpMat a(nI * w.dim(), (int)corr_idx.size());
      Vec rhs;
      for (int i = 0; i < nI; ++i) {
        for (size_t cj = 0; cj < corr_idx.size(); ++cj)
          for (const auto& [r, c] : w.e_pow(i, 1).col(corr_idx[cj]))
            a.set(i * w.dim() + r, (int)cj, c);
        for (const auto& [r, c] : w.e_pow(i, 1).col(b))
          rhs[i * w.dim() + r] = RatFunc() - c;
      }
      auto sol = solve(a, rhs);
      require(sol.has_value(), Err::INTERNAL,
              "no singular lift of a hi-basis element");
      Vec s;
      s[b] = one;
      for (const auto& [cj, c] : *sol) s[corr_idx[(size_t)cj]] = c;

      // Transport the canonical basis of V(la) along words in the F_i
      // applied simultaneously to the highest weight vector and to s_b.
      Span sx;
      SpMat x(v.dim(), v.dim()), y(w.dim(), v.dim());
      std::deque<std::pair<Vec, Vec>> queue;
      Vec x0;
      x0[hw_index[(size_t)j]] = one;
      queue.emplace_back(x0, s);
      int got = 0;
      while (!queue.empty() && got < v.dim()) {
        auto [xv, yv] = std::move(queue.front());
        queue.pop_front();
        if (vec_is_zero(xv) || !sx.insert(xv)) continue;
        x.col_mut(got) = xv;
        y.col_mut(got) = yv;
        ++got;
        for (int i = 0; i < rd.rank(); ++i)
          queue.emplace_back(v.mod.f_pow(i, 1).apply(xv),
                             w.f_pow(i, 1).apply(yv));
      }
      require(got == v.dim(), Err::INTERNAL,
              "singular lift does not generate a full copy");
      SpMat tb = y * inverse(x);

      for (int k = 0; k < v.dim(); ++k) {
        kd.t.col_mut(col) = tb.col(k);
        kd.block_of[(size_t)col] = j;
        kd.copy_of[(size_t)col] = (int)bpos;
        kd.vec_of[(size_t)col] = k;
        ++col;
      }
    }
  }
  require(col == w.dim(), Err::INTERNAL, "decomposition column count is off");
  kd.phi = inverse(kd.t);

  // Compatibility with the cells, copied basis elements, and lattices.
  for (int j = 0; j < nblocks; ++j) {
    const Weight& la = kd.cells.lambdas[(size_t)j];
    for (size_t bpos = 0; bpos < kd.cells.cell[(size_t)j].size(); ++bpos) {
      const int b = kd.cells.cell[(size_t)j][bpos];
      const Vec& im = kd.phi.col(b);
      int own_hits = 0;
      for (const auto& [r, c] : im) {
        const int rb = kd.block_of[(size_t)r];
        require(rd.dominance_leq(la, kd.cells.lambdas[(size_t)rb]),
                Err::INTERNAL, "decomposition escapes the cell filtration");
        require(c.lattice_member(LatticeId::A_INFINITY), Err::LATTICE_VIOLATION,
                "decomposition entry has a pole at q = infinity");
        if (rb == j) {
          ++own_hits;
          require(c == one, Err::INTERNAL,
                  "diagonal block of the decomposition is not a unit vector");
        } else {
          require(c.value_at_infinity() == 0, Err::LATTICE_VIOLATION,
                  "off-block entry does not vanish at q = infinity");
        }
      }
      require(own_hits == 1, Err::INTERNAL,
              "cell element does not map to a single basis vector");
    }
    // hi elements map to the highest weight vector of their own copy.
    for (size_t bpos = 0; bpos < kd.cells.hi[(size_t)j].size(); ++bpos) {
      const int b = kd.cells.hi[(size_t)j][bpos];
      const Vec& im = kd.phi.col(b);
      for (const auto& [r, c] : im) {
        (void)c;
        if (kd.block_of[(size_t)r] != j) continue;
        require(kd.copy_of[(size_t)r] == (int)bpos &&
                    kd.vec_of[(size_t)r] == hw_index[(size_t)j],
                Err::INTERNAL, "hi element maps to the wrong copy");
      }
    }
  }
  // Both directions preserve the A-lattice spanned by the bases.
  for (int jcol = 0; jcol < w.dim(); ++jcol)
    for (const auto& [r, c] : kd.t.col(jcol)) {
      (void)r;
      require(c.lattice_member(LatticeId::A_INFINITY), Err::LATTICE_VIOLATION,
              "embedding entry has a pole at q = infinity");
    }
  return kd;
}

}  // namespace qsym
