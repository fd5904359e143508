#include "qsym/coinv.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qsym {

namespace {

std::vector<StarLabel> star_list(const CellDatum& cells, const IRootDatum& id) {
  std::vector<StarLabel> stars;
  for (int j = (int)cells.lambdas.size() - 1; j >= 0; --j) {
    if (!id.is_spherical(cells.lambdas[(size_t)j])) continue;
    for (size_t c = 0; c < cells.hi[(size_t)j].size(); ++c)
      stars.push_back(
          {cells.hi[(size_t)j][c], cells.lambdas[(size_t)j], (int)c});
  }
  return stars;
}

struct FBuild {
  std::vector<StarLabel> stars;
  SpMat f{0, 0};
};

FBuild build_f_internal(const IBasisData& m, const IRootDatum& id) {
  const IParams& p = m.params;
  const int dim = m.host.dim();
  KaDecomposition kd = ka_decomposition(m.host);
  const CellDatum& cells = kd.cells;
  const int nb = (int)cells.lambdas.size();

  std::vector<bool> spherical((size_t)nb, false);
  std::vector<SpMat> func((size_t)nb, SpMat(0, 0));
  for (int j = 0; j < nb; ++j) {
    if (!id.is_spherical(cells.lambdas[(size_t)j])) continue;
    spherical[(size_t)j] = true;
    func[(size_t)j] =
        trivial_functional(kd.irr[(size_t)j], cells.lambdas[(size_t)j], id, p);
  }

  FBuild out;
  out.stars = star_list(cells, id);
  const int ns = (int)out.stars.size();
  std::vector<int> starblock((size_t)ns, -1);
  std::map<std::pair<int, int>, int> rowof;  // (block, copy) -> row
  for (int r = 0; r < ns; ++r) {
    auto it = std::find(cells.lambdas.begin(), cells.lambdas.end(),
                        out.stars[(size_t)r].lambda);
    starblock[(size_t)r] = (int)(it - cells.lambdas.begin());
    rowof[{starblock[(size_t)r], out.stars[(size_t)r].copy}] = r;
  }

  // Row r of the selection matrix applies the functional of its cell to
  // the coordinates of its own copy in the direct sum.
  SpMat sel(ns, dim);
  for (int t = 0; t < dim; ++t) {
    auto it = rowof.find({kd.block_of[(size_t)t], kd.copy_of[(size_t)t]});
    if (it == rowof.end()) continue;
    RatFunc c =
        func[(size_t)kd.block_of[(size_t)t]].at(0, kd.vec_of[(size_t)t]);
    if (!(c == RatFunc())) sel.set(it->second, t, c);
  }
  SpMat f0 = sel * kd.phi;

  const RatFunc one(1);
  if (ns > 0) {
    // Images of the starred i-canonical elements before correction: unit
    // on the own cell, zero within a cell and towards higher cells, and
    // vanishing at q = infinity where a cell meets a strictly lower one.
    // (Those entries need not be Laurent: the isotypic projections divide
    // by quantum integers.  Integrality is restored on the corrected map
    // and asserted below.)
    SpMat g0 = f0 * m.t;
    SpMat d(ns, ns);
    for (int s = 0; s < ns; ++s)
      d.col_mut(s) = g0.col(out.stars[(size_t)s].host_index);
    for (int s = 0; s < ns; ++s) {
      require(d.at(s, s) == one, Err::INTERNAL,
              "projection is not unit on its own cell");
      for (const auto& [r, c] : d.col(s)) {
        if (r == s) continue;
        require(r < s && starblock[(size_t)r] != starblock[(size_t)s] &&
                    id.base().dominance_leq(out.stars[(size_t)s].lambda,
                                            out.stars[(size_t)r].lambda),
                Err::INTERNAL,
                "projection entry outside the triangular cell pattern");
        require(c.lattice_member(LatticeId::A_INFINITY) &&
                    c.value_at_infinity() == 0,
                Err::CORRECTION_NOT_INTEGRAL,
                "triangular correction entry does not vanish at q = infinity");
      }
    }
    out.f = inverse(d) * f0;
  } else {
    out.f = f0;
  }

  // The corrected projection sends each starred element to its coordinate
  // vector by construction; that it kills every non-starred element is the
  // substance of the theorem and is verified, not assumed.
  SpMat g = out.f * m.t;
  std::vector<int> starrow((size_t)dim, -1);
  for (int r = 0; r < ns; ++r)
    starrow[(size_t)out.stars[(size_t)r].host_index] = r;
  for (int k = 0; k < dim; ++k) {
    Vec col = g.col(k);
    if (starrow[(size_t)k] >= 0)
      vec_add_scaled(col, Vec{{starrow[(size_t)k], one}}, RatFunc(-1));
    require(vec_is_zero(col),
            starrow[(size_t)k] >= 0 ? Err::INTERNAL : Err::BASIS_SPAN_MISMATCH,
            starrow[(size_t)k] >= 0
                ? "starred element does not map to its coordinate"
                : "a non-starred basis element survives the projection");
  }

  for (int k = 0; k < dim; ++k)
    for (const auto& [r, c] : out.f.col(k)) {
      (void)r;
      require(c.lattice_member(LatticeId::INT_LAURENT) &&
                  c.lattice_member(LatticeId::A_INFINITY),
              Err::LATTICE_VIOLATION, "projection entry leaves Z[q^{-1}]");
    }

  require(out.f * m.psi == out.f.bar_entrywise(), Err::INTERNAL,
          "projection fails bar-equivariance");

  const WeightModule& w = m.host.mod;
  for (int i = 0; i < id.base().rank(); ++i) {
    if (id.is_black(i)) {
      require((out.f * w.e_pow(i, 1)).is_zero() &&
                  (out.f * w.f_pow(i, 1)).is_zero(),
              Err::INTERNAL, "projection is not equivariant at a painted node");
      continue;
    }
    require((out.f * bi_action(i, w, id, p)).is_zero(), Err::INTERNAL,
            "projection is not equivariant for an embedded generator");
  }
  for (const auto& mu : id.y_fixed_basis())
    require(out.f * k_mu_matrix(w, mu) == out.f, Err::INTERNAL,
            "projection is not equivariant for the fixed torus");

  return out;
}

}  // namespace

Span augmentation_submodule(const IBasisData& m, const IRootDatum& id) {
  return augmentation_span(m.host, id, m.params);
}

std::vector<StarLabel> bstar(const IBasisData& m, const IRootDatum& id) {
  return star_list(cell_filtration(m.host), id);
}

SpMat build_f_map(const IBasisData& m, const IRootDatum& id) {
  return build_f_internal(m, id).f;
}

CoinvariantDatum coinvariants(const IBasisData& m, const IRootDatum& id) {
  CoinvariantDatum d;
  d.basis = m;
  FBuild fb = build_f_internal(m, id);
  d.bstar = std::move(fb.stars);
  d.f = std::move(fb.f);
  for (const auto& s : d.bstar)
    d.labels.push_back(m.host.mod.label(s.host_index));

  d.mplus = augmentation_span(m.host, id, m.params);
  require(d.mplus.dim() + (int)d.bstar.size() == m.host.dim(),
          Err::BASIS_SPAN_MISMATCH,
          "augmentation span has the wrong codimension");
  std::vector<bool> isstar((size_t)m.host.dim(), false);
  for (const auto& s : d.bstar) isstar[(size_t)s.host_index] = true;
  Span nonstar;
  for (int k = 0; k < m.host.dim(); ++k)
    if (!isstar[(size_t)k]) nonstar.insert(m.t.col(k));
  require(nonstar.same_space(d.mplus), Err::BASIS_SPAN_MISMATCH,
          "non-starred basis does not span the augmentation image");
  return d;
}

SpMat coinv_morphism(const SpMat& fmap, const CoinvariantDatum& src,
                     const CoinvariantDatum& dst, const IRootDatum& id) {
  require(check_based_imorphism(fmap, src.basis, dst.basis, id),
          Err::NOT_BASED, "map does not respect the i-canonical bases");
  SpMat g = dst.basis.tinv * (fmap * src.basis.t);
  std::vector<int> dstrow((size_t)dst.basis.host.dim(), -1);
  for (size_t r = 0; r < dst.bstar.size(); ++r)
    dstrow[(size_t)dst.bstar[r].host_index] = (int)r;

  SpMat out((int)dst.bstar.size(), (int)src.bstar.size());
  for (size_t s = 0; s < src.bstar.size(); ++s) {
    int units = 0;
    for (const auto& [r, c] : g.col(src.bstar[s].host_index)) {
      if (dstrow[(size_t)r] < 0) continue;
      out.set(dstrow[(size_t)r], (int)s, c);
      if (c.value_at_infinity() != 0)
        require(c.value_at_infinity() == 1 && ++units <= 1, Err::INTERNAL,
                "induced map is not based at q = infinity");
    }
  }
  return out;
}

}  // namespace qsym
